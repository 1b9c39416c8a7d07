"""Exact homology of complex braid groups from Garside monoids and Salvetti complexes."""

from .homology_engine import compute, cross_validate
from .linalg import GF, QQ, ZZ, HomologyGroup, Ring
from .presentations import bundled, corran_picantin, load

__version__ = "0.1.0"

__all__ = ["GF", "QQ", "ZZ", "HomologyGroup", "Ring", "bundled", "compute", "corran_picantin",
           "cross_validate", "load", "__version__"]
