"""Salvetti complex of the Artin group of type B_r with coefficients in k[t]/(1-(-t)^e).

Cells are bit strings of length r whose first position is the marked (type B)
node; the dimension of a cell is its number of 1s.  Boundaries use q-analogs
evaluated at q = -1:

    type A block:  d 1^l = sum_{h=0}^{l-1} (-1)^h [l+1, h+1]_{-1} 1^h 0 1^{l-h-1}
    marked block:  d 1'1^{l-1} = sum_{h=0}^{l-1} (-1)^h [l, h]'_{-1} (position h set to 0)
    concatenation: d(A0B) = (dA)0B + (-1)^{|A|} A0(dB)

Through Shapiro's lemma this computes the homology of B(2e,e,r).
"""

from __future__ import annotations

from functools import lru_cache

from .linalg import ExactMatrix, NotAComplexError
from .qanalog import TPoly, binom_minus1, primed_binom_minus1

Bits = tuple[int, ...]


def _blocks(s: Bits):
    """(start, length) of each maximal run of 1s."""
    out = []
    i = 0
    while i < len(s):
        if s[i]:
            j = i
            while j < len(s) and s[j]:
                j += 1
            out.append((i, j - i))
            i = j
        else:
            i += 1
    return out


def _zero_at(s: Bits, k: int) -> Bits:
    return s[:k] + (0,) + s[k + 1:]


@lru_cache(maxsize=None)
def boundary_A(s: Bits) -> dict:
    """Boundary of an unmarked string; integer coefficients."""
    s = tuple(s)
    out = {}
    ones_before = 0
    for start, l in _blocks(s):
        for h in range(l):
            c = binom_minus1(l + 1, h + 1)
            if c:
                sign = (-1) ** (ones_before + h)
                key = _zero_at(s, start + h)
                out[key] = out.get(key, 0) + sign * c
        ones_before += l
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def boundary_B(s: Bits) -> dict:
    """Boundary of a marked string (position 0 is the marked node); TPoly coefficients."""
    s = tuple(s)
    out = {}

    def put(key, poly):
        if not poly.is_zero():
            cur = out.get(key)
            new = poly if cur is None else cur + poly
            if new.is_zero():
                out.pop(key, None)
            else:
                out[key] = new

    ones_before = 0
    for start, l in _blocks(s):
        if start == 0:
            for h in range(l):
                c = primed_binom_minus1(l, h)
                put(_zero_at(s, h), c * (-1) ** h)
        else:
            for h in range(l):
                c = binom_minus1(l + 1, h + 1)
                if c:
                    put(_zero_at(s, start + h), TPoly.constant((-1) ** (ones_before + h) * c))
        ones_before += l
    return out


def cells(r: int, degree: int):
    """Strings of length r with ``degree`` ones, ordered by their integer value."""
    out = []
    for v in range(2 ** r):
        s = tuple((v >> (r - 1 - k)) & 1 for k in range(r))
        if sum(s) == degree:
            out.append(s)
    return sorted(out)


def format_cell(s: Bits) -> str:
    return ("1'" if s[0] else "0'") + "".join(map(str, s[1:]))


def poly_block(poly: TPoly, e: int):
    """e x e integer matrix of multiplication by poly in k[t]/(t^e - (-1)^e)."""
    m = [[0] * e for _ in range(e)]
    wrap = (-1) ** e
    for k, c in poly.coefficients.items():
        q, rem = divmod(k, e)
        c = c * wrap**q
        for j in range(e):
            tgt = j + rem
            sign = 1
            if tgt >= e:
                tgt -= e
                sign = wrap
            m[tgt][j] += sign * c
    return m


class SizeCapExceeded(RuntimeError):
    pass


def build_complex(r: int, e: int, size_cap: int = 2 ** 20, max_degree: int | None = None):
    """ChainComplexData over Z for H_*(B(2e,e,r)); reduce mod p or work over Q downstream."""
    from .homology_engine import ChainComplexData

    if r < 1 or e < 1:
        raise ValueError("need r >= 1 and e >= 1")
    if e * 2 ** r > size_cap:
        raise SizeCapExceeded(f"total dimension {e * 2 ** r} exceeds {size_cap}")
    N = r if max_degree is None else min(r, max_degree)
    cell_lists = [cells(r, d) for d in range(N + 1)]
    mats = []
    block_cache = {}
    for d in range(1, N + 1):
        src, tgt = cell_lists[d], cell_lists[d - 1]
        tidx = {c: i for i, c in enumerate(tgt)}
        ent = {}
        for j, s in enumerate(src):
            for face, poly in boundary_B(s).items():
                key = poly
                blk = block_cache.get(key)
                if blk is None:
                    blk = block_cache[key] = poly_block(poly, e)
                i = tidx[face]
                for a in range(e):
                    row = blk[a]
                    for b in range(e):
                        if row[b]:
                            ent[i * e + a, j * e + b] = row[b]
        mats.append(ExactMatrix(len(tgt) * e, len(src) * e, ent))
    for a, b in zip(mats, mats[1:]):
        if not (a @ b).is_zero():
            raise NotAComplexError("Salvetti boundary matrices do not compose to zero")
    labels = [[format_cell(c) for c in cl] for cl in cell_lists]
    return ChainComplexData(dims=[len(c) * e for c in cell_lists], matrices=mats, labels=labels,
                            complete=(N == r), meta={"builder": "salvetti", "r": r, "e": e,
                                                     "coefficients": f"k[t]/(1-(-t)^{e})"})


def check_dd_zero_symbolic(r: int, e: int) -> bool:
    """d o d = 0 with coefficients reduced in Z[t]/(1-(-t)^e)."""
    for v in range(2 ** r):
        s = tuple((v >> (r - 1 - k)) & 1 for k in range(r))
        acc = {}
        for face, p in boundary_B(s).items():
            for face2, p2 in boundary_B(face).items():
                acc[face2] = acc.get(face2, TPoly()) + p * p2
        for p in acc.values():
            if any(any(row) for row in poly_block(p, e)):
                return False
    return True
