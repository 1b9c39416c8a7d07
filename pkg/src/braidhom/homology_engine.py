"""Run a complex builder, compute homology over a ring, and audit the result."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .linalg import GF, QQ, ExactMatrix, HomologyGroup, Ring, homology_pair, rank


@dataclass
class ChainComplexData:
    """dims[i] = rank of C_i; matrices[i-1] is d_i : C_i -> C_{i-1} (integer entries)."""

    dims: list[int]
    matrices: list[ExactMatrix]
    labels: list[list[str]] = field(default_factory=list)
    complete: bool = True
    meta: dict = field(default_factory=dict)

    @property
    def top(self):
        return len(self.dims) - 1

    def d(self, i: int) -> ExactMatrix:
        if i <= 0:
            return ExactMatrix(0, self.dims[0])
        if i > self.top:
            return ExactMatrix(self.dims[self.top], 0)
        return self.matrices[i - 1]

    def reported_degrees(self):
        """Degrees whose homology is determined by the stored maps."""
        return range(self.top + 1) if self.complete else range(self.top)


def homology(cc: ChainComplexData, ring: Ring, check: bool = False, degrees=None):
    """Per-degree homology: HomologyGroup over Z, int dimension over a field."""
    from .linalg import snf

    degrees = list(degrees if degrees is not None else cc.reported_degrees())
    if check:
        for i in degrees:
            homology_pair(cc.d(i), cc.d(i + 1), ring, check=True)
    if ring.is_field:
        ranks = {i: rank(cc.d(i), ring) for i in set(degrees) | {i + 1 for i in degrees}}
        return [cc.dims[i] - ranks[i] - ranks[i + 1] for i in degrees]
    factors = {i: snf(cc.d(i)).invariant_factors for i in set(degrees) | {i + 1 for i in degrees}}
    return [HomologyGroup(cc.dims[i] - len(factors[i]) - len(factors[i + 1]),
                          tuple(d for d in factors[i + 1] if d > 1)) for i in degrees]


@dataclass
class HomologyResult:
    group: str
    builder: str
    coeffs: str
    degrees: list
    audits: dict
    provenance: dict = field(default_factory=dict)

    @property
    def flagged(self):
        return [k for k, v in self.audits.items() if v is False]

    def groups(self):
        return list(self.degrees)

    def as_dict(self):
        degs = []
        for i, h in enumerate(self.degrees):
            if isinstance(h, HomologyGroup):
                degs.append({"i": i, "betti": h.betti, "torsion": list(h.torsion)})
            else:
                degs.append({"i": i, "dim": h})
        return {"group": self.group, "builder": self.builder, "coeffs": self.coeffs,
                "degrees": degs, "audits": self.audits, "provenance": self.provenance}

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


def _audits(cc: ChainComplexData, ring: Ring, result, uct_primes=(2, 3, 5), full=True):
    audits = {"ddzero": True}
    for i in range(2, cc.top + 1):
        prod = cc.d(i - 1) @ cc.d(i)
        if not prod.is_zero(ring.p if ring.kind == "F" else None):
            audits["ddzero"] = False
    if cc.complete:
        chi_c = sum((-1) ** i * d for i, d in enumerate(cc.dims))
        chi_h = sum((-1) ** i * (h.betti if isinstance(h, HomologyGroup) else h)
                    for i, h in enumerate(result))
        audits["euler"] = chi_c == chi_h
    else:
        audits["euler"] = None
    if not full:
        audits["uct"] = None
        return audits
    if ring.kind == "Z":
        ok = True
        for p in uct_primes:
            dims = homology(cc, GF(p), degrees=range(len(result)))
            for i, h in enumerate(result):
                prev = result[i - 1].tor_mod(p) if i > 0 else 0
                if dims[i] != h.betti + h.tor_mod(p) + prev:
                    ok = False
        audits["uct"] = ok
    elif ring.kind == "F":
        qd = homology(cc, QQ, degrees=range(len(result)))
        audits["uct"] = all(a >= b for a, b in zip(result, qd))
    else:
        audits["uct"] = None
    return audits


def _ring(label) -> Ring:
    return label if isinstance(label, Ring) else Ring.parse(label)


def _presentation(params):
    from .presentations import bundled, corran_picantin

    if "presentation" in params:
        p = params["presentation"]
        return bundled(p) if isinstance(p, str) else p
    preset = params.get("preset", "cp")
    if preset == "cp":
        return corran_picantin(params["e"], params["r"])
    return bundled(preset)


def _system(name, p, params):
    from .dl_complex import CoefficientSystem

    n = len(p.generators)
    if name in (None, "trivial"):
        return CoefficientSystem.trivial(n)
    if name == "sign":
        return CoefficientSystem.sign(n)
    if name == "cyclic":
        return CoefficientSystem.cyclic(n, params["e_coeff"], params.get("special", 0))
    raise ValueError(f"unknown coefficient system {name!r}")


def build(source: str, params: dict, system: str = "trivial") -> ChainComplexData:
    if source == "salvetti":
        from .salvetti_b import build_complex

        kw = {"size_cap": params["size_cap"]} if params.get("size_cap") else {}
        return build_complex(params["r"], params["e"], max_degree=params.get("max_degree"), **kw)
    p = _presentation(params)
    coeffs = _system(system, p, params)
    if source == "dl":
        from .dl_complex import build_matrices, reorder_presentation

        if params.get("order"):
            p = reorder_presentation(p, params["order"])
            coeffs = _system(system, p, params)
        return build_matrices(p, None, coeffs, params.get("max_degree"), params.get("lcm_bound"))
    if source == "cmw":
        from .cmw_complex import build_matrices

        return build_matrices(p, coeffs, params.get("max_degree"), params.get("lcm_bound"))
    raise ValueError(f"unknown builder {source!r}")


def _group_label(source, params):
    if source == "salvetti":
        return f"B({2 * params['e']},{params['e']},{params['r']})"
    if "presentation" in params:
        p = params["presentation"]
        return p if isinstance(p, str) else (p.name or "monoid")
    if params.get("preset", "cp") == "cp":
        return f"B({params['e']},{params['e']},{params['r']})"
    return params["preset"]


def compute(source: str, params: dict, ring="Z", system: str = "trivial", audit: bool = True,
            max_degree: int | None = None) -> HomologyResult:
    """Homology of the complex built by ``source`` ('dl', 'cmw' or 'salvetti').

    When ``max_degree`` is given the complex is built one degree higher so that
    H_0 .. H_max_degree are exact.
    """
    ring = _ring(ring)
    params = dict(params)
    if max_degree is not None:
        params["max_degree"] = max_degree + 1
    cc = build(source, params, system)
    degrees = list(cc.reported_degrees())
    if max_degree is not None:
        degrees = [i for i in degrees if i <= max_degree]
    result = homology(cc, ring, degrees=degrees)
    audits = _audits(cc, ring, result, full=audit) if audit else {"ddzero": True, "euler": None, "uct": None}
    prov = {k: v for k, v in params.items() if k != "presentation" or isinstance(v, str)}
    prov.update({k: v for k, v in cc.meta.items() if k != "builder"})
    prov["cell_counts"] = list(cc.dims)
    return HomologyResult(_group_label(source, params), source, f"{system}/{ring}", result, audits, prov)


def cross_validate(case: dict, rings=("Z", "F2")) -> dict:
    """Compare homology from every builder that applies to ``case``.

    case = {"kind": "cp", "e":..., "r":...}   -> dl vs cmw
           {"kind": "monoid", "presentation": key} -> dl vs cmw
           {"kind": "artin_b", "r":...}      -> dl (Artin B_r) vs salvetti (e = 1)
    """
    kind = case.get("kind")
    runs = []
    if kind == "cp":
        params = {"preset": "cp", "e": case["e"], "r": case["r"]}
        runs = [("dl", params), ("cmw", params)]
    elif kind == "monoid":
        params = {"presentation": case["presentation"]}
        runs = [("dl", params), ("cmw", params)]
    elif kind == "artin_b":
        runs = [("dl", {"presentation": f"artin_b{case['r']}"}), ("salvetti", {"r": case["r"], "e": 1})]
    if len(runs) < 2:
        return {}
    report = {}
    for ring in rings:
        res = [compute(src, prm, ring, audit=False).degrees for src, prm in runs]
        n = max(len(x) for x in res)
        pad = [x + [HomologyGroup(0) if _ring(ring).kind == "Z" else 0] * (n - len(x)) for x in res]
        report[str(ring)] = [{"i": i, "equal": all(p[i] == pad[0][i] for p in pad),
                              "values": [str(p[i]) for p in pad]} for i in range(n)]
    return report
