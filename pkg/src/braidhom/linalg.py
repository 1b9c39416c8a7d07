"""Exact linear algebra for boundary matrices.

Matrices are sparse maps (row, col) -> int.  Ranks over prime fields use sparse
elimination mod p; ranks over Q use fraction-free elimination with content
removal; the integer Smith normal form eliminates unit pivots sparsely and hands
the (usually tiny) remainder to a dense gcd-based reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np


class NotAComplexError(ValueError):
    """Raised when consecutive boundary maps do not compose to zero."""


@dataclass(frozen=True)
class Ring:
    kind: str  # "Z", "Q" or "F"
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "F"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if (self.kind == "F") != (self.p is not None):
            raise ValueError("prime fields need p, other rings must not have it")

    @property
    def is_field(self):
        return self.kind != "Z"

    def __str__(self):
        return f"F{self.p}" if self.kind == "F" else self.kind

    @classmethod
    def parse(cls, label: str) -> "Ring":
        label = label.strip()
        if label in ("Z", "ZZ", "integers"):
            return ZZ
        if label in ("Q", "QQ", "rationals"):
            return QQ
        if label.startswith("F") and label[1:].isdigit():
            return GF(int(label[1:]))
        raise ValueError(f"cannot parse ring {label!r}")


ZZ = Ring("Z")
QQ = Ring("Q")


def GF(p: int) -> Ring:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    return Ring("F", p)


class ExactMatrix:
    """Sparse matrix with integer (or Fraction) entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        e = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError(f"entry ({i},{j}) outside {rows}x{cols}")
                if v:
                    e[i, j] = v
        self.entries = e

    @classmethod
    def from_dense(cls, a):
        a = [list(r) for r in a]
        rows = len(a)
        cols = len(a[0]) if rows else 0
        return cls(rows, cols, {(i, j): int(v) if not isinstance(v, Fraction) else v
                                for i, r in enumerate(a) for j, v in enumerate(r) if v})

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def to_dense(self):
        a = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            a[i][j] = v
        return a

    def row_dicts(self):
        rows = {}
        for (i, j), v in self.entries.items():
            rows.setdefault(i, {})[j] = v
        return rows

    def transpose(self):
        return ExactMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        orows = other.row_dicts()
        out = {}
        for (i, k), v in self.entries.items():
            r = orows.get(k)
            if r:
                for j, w in r.items():
                    out[i, j] = out.get((i, j), 0) + v * w
        return ExactMatrix(self.rows, other.cols, out)

    def is_zero(self, p: int | None = None):
        if p is None:
            return not self.entries
        return all(v % p == 0 for v in self.entries.values())

    def reduce_mod(self, p: int) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, {k: v % p for k, v in self.entries.items()})

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.shape == other.shape and self.entries == other.entries

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"

    def dump(self) -> str:
        """Coordinate text: a header line 'rows cols', then 'i j value' lines."""
        lines = [f"{self.rows} {self.cols}"]
        lines += [f"{i} {j} {v}" for (i, j), v in sorted(self.entries.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str) -> "ExactMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        rows, cols = map(int, lines[0].split())
        ent = {}
        for ln in lines[1:]:
            i, j, v = ln.split()
            ent[int(i), int(j)] = int(v)
        return cls(rows, cols, ent)


@dataclass(frozen=True)
class SNFResult:
    invariant_factors: tuple[int, ...]

    @property
    def rank(self):
        return len(self.invariant_factors)


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: tuple[int, ...] = field(default_factory=tuple)

    def __str__(self):
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts += [f"Z{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"

    def dim_mod(self, p: int) -> int:
        """Dimension of this group tensored with F_p."""
        return self.betti + sum(1 for d in self.torsion if d % p == 0)

    def tor_mod(self, p: int) -> int:
        return sum(1 for d in self.torsion if d % p == 0)

    @classmethod
    def from_factors(cls, betti: int, factors) -> "HomologyGroup":
        chain = invariant_factors_from_diagonal(factors)
        return cls(betti, tuple(d for d in chain if d > 1))


# ---------------------------------------------------------------- field ranks

def _rank_mod_p_sparse(rows: dict, p: int) -> int:
    rows = {i: {j: v % p for j, v in r.items() if v % p} for i, r in rows.items()}
    rows = {i: r for i, r in rows.items() if r}
    cols: dict[int, set] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    rank = 0
    while rows:
        # cheapest pivot: shortest row, then its sparsest column
        i = min(rows, key=lambda k: len(rows[k]))
        r = rows.pop(i)
        j = min(r, key=lambda c: len(cols[c]))
        for c in r:
            cols[c].discard(i)
        inv = pow(r[j], -1, p)
        for k in list(cols[j]):
            rk = rows[k]
            f = rk[j] * inv % p
            for c, v in r.items():
                nv = (rk.get(c, 0) - f * v) % p
                if nv:
                    if c not in rk:
                        cols.setdefault(c, set()).add(k)
                    rk[c] = nv
                elif c in rk:
                    del rk[c]
                    cols[c].discard(k)
            if not rk:
                del rows[k]
        rank += 1
    return rank


def _rank_mod_p_dense(m: ExactMatrix, p: int) -> int:
    a = np.zeros((m.rows, m.cols), dtype=np.int64)
    for (i, j), v in m.entries.items():
        a[i, j] = v % p
    rank = 0
    nrows, ncols = a.shape
    for c in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), -1, p)
        a[rank] = (a[rank] * inv) % p
        col = a[:, c].copy()
        col[rank] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            a[nzr] = (a[nzr] - np.outer(col[nzr], a[rank])) % p
        rank += 1
    return rank


def _rank_rational(rows: dict) -> int:
    rows = {i: _integral_row(r) for i, r in rows.items()}
    rows = {i: r for i, r in rows.items() if r}
    cols: dict[int, set] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    rank = 0
    while rows:
        i = min(rows, key=lambda k: (len(rows[k]), min(abs(v) for v in rows[k].values())))
        r = rows.pop(i)
        j = min(r, key=lambda c: (len(cols[c]), abs(r[c])))
        for c in r:
            cols[c].discard(i)
        a = r[j]
        for k in list(cols[j]):
            rk = rows[k]
            b = rk[j]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {}
            for c in set(rk) | set(r):
                nv = fa * rk.get(c, 0) - fb * r.get(c, 0)
                if nv:
                    new[c] = nv
            for c in rk:
                if c not in new:
                    cols[c].discard(k)
            for c in new:
                if c not in rk:
                    cols.setdefault(c, set()).add(k)
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                rows[k] = {c: v // g for c, v in new.items()} if g > 1 else new
            else:
                del rows[k]
        rank += 1
    return rank


def _integral_row(r: dict) -> dict:
    if any(isinstance(v, Fraction) for v in r.values()):
        den = 1
        for v in r.values():
            if isinstance(v, Fraction):
                den = den * v.denominator // gcd(den, v.denominator)
        return {j: int(v * den) for j, v in r.items() if v}
    return {j: v for j, v in r.items() if v}


def rank(m: ExactMatrix, ring: Ring) -> int:
    """Exact rank over a field (Q or F_p); over Z this is the rank over Q."""
    if not m.entries:
        return 0
    if ring.kind == "F":
        density = len(m.entries) / (m.rows * m.cols)
        if density > 0.05 and m.rows * m.cols <= 4_000_000:
            return _rank_mod_p_dense(m, ring.p)
        return _rank_mod_p_sparse(m.row_dicts(), ring.p)
    return _rank_rational(m.row_dicts())


# ------------------------------------------------------------ Smith normal form

def invariant_factors_from_diagonal(diag) -> list[int]:
    """Turn any nonzero diagonal into the divisibility chain d1 | d2 | ..."""
    d = sorted(abs(x) for x in diag if x)
    n = len(d)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(i + 1, n):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return d


def _dense_snf_diagonal(a: list[list[int]]) -> list[int]:
    """Diagonal of a Smith form of a small dense integer matrix (not yet a chain)."""
    a = [row[:] for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        # smallest nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            piv = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // piv
                    if q:
                        ri, rt = a[i], a[t]
                        for c in range(t, n):
                            ri[c] -= q * rt[c]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // piv
                    if q:
                        for row in a[t:]:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        done = False
            if done:
                break
            # move the smallest remaining entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, i, j = min(cand)
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def snf(m: ExactMatrix) -> SNFResult:
    """Invariant factors of an integer matrix."""
    rows = {i: dict(r) for i, r in m.row_dicts().items()}
    cols: dict[int, set] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    units = 0
    # sparse phase: eliminate with +-1 pivots, chosen to limit fill-in
    unit_rows = {i for i, r in rows.items() if any(abs(v) == 1 for v in r.values())}
    while unit_rows:
        best = None
        for i in unit_rows:
            r = rows[i]
            for j, v in r.items():
                if abs(v) == 1:
                    cost = (len(r) - 1) * (len(cols[j]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
                        if cost == 0:
                            break
            if best and best[0] == 0:
                break
        if best is None:
            break
        _, i, j = best
        r = rows.pop(i)
        unit_rows.discard(i)
        for c in r:
            cols[c].discard(i)
        s = r[j]
        for k in list(cols[j]):
            rk = rows[k]
            f = rk[j] * s  # s = +-1, so f = rk[j] / s
            for c, v in r.items():
                nv = rk.get(c, 0) - f * v
                if nv:
                    if c not in rk:
                        cols.setdefault(c, set()).add(k)
                    rk[c] = nv
                elif c in rk:
                    del rk[c]
                    cols[c].discard(k)
            if not rk:
                del rows[k]
                unit_rows.discard(k)
            elif any(abs(v) == 1 for v in rk.values()):
                unit_rows.add(k)
            else:
                unit_rows.discard(k)
        del cols[j]
        units += 1
    # dense phase on what is left
    live_rows = sorted(rows)
    live_cols = sorted({c for r in rows.values() for c in r})
    diag = []
    if live_rows:
        cidx = {c: n for n, c in enumerate(live_cols)}
        dense = [[0] * len(live_cols) for _ in live_rows]
        for n, i in enumerate(live_rows):
            for c, v in rows[i].items():
                dense[n][cidx[c]] = v
        diag = _dense_snf_diagonal(dense)
    return SNFResult(tuple([1] * units + invariant_factors_from_diagonal(diag)))


# ------------------------------------------------------------------- homology

def check_composable(d_i: ExactMatrix, d_next: ExactMatrix, ring: Ring | None = None) -> None:
    if d_i.cols != d_next.rows:
        raise ValueError(f"non-composable shapes {d_i.shape} and {d_next.shape}")
    prod = d_i @ d_next
    p = ring.p if ring is not None and ring.kind == "F" else None
    if not prod.is_zero(p):
        raise NotAComplexError("boundary maps do not compose to zero")


def homology_pair(d_i: ExactMatrix, d_next: ExactMatrix, ring: Ring, check: bool = True):
    """Homology at the middle of  C_{i+1} --d_next--> C_i --d_i--> C_{i-1}.

    Returns a HomologyGroup over Z and an integer dimension over a field.
    """
    if check:
        check_composable(d_i, d_next, ring)
    elif d_i.cols != d_next.rows:
        raise ValueError(f"non-composable shapes {d_i.shape} and {d_next.shape}")
    n = d_i.cols
    if ring.is_field:
        return n - rank(d_i, ring) - rank(d_next, ring)
    factors = snf(d_next).invariant_factors
    betti = n - rank(d_i, QQ) - len(factors)
    return HomologyGroup(betti, tuple(d for d in factors if d > 1))


def kernel_basis(m: ExactMatrix) -> list[dict]:
    """Integer basis of the kernel of m (as sparse column vectors).

    Column-style Hermite reduction: we track unimodular column operations on an
    identity matrix while clearing rows of m.
    """
    n = m.cols
    a = m.to_dense()
    u = [[int(i == j) for j in range(n)] for i in range(n)]  # columns of u
    pivot_col = 0
    for row in a:
        if pivot_col >= n:
            break
        while True:
            nz = [j for j in range(pivot_col, n) if row[j]]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(row[j]))
            if j0 != pivot_col:
                for r in a:
                    r[pivot_col], r[j0] = r[j0], r[pivot_col]
                u[pivot_col], u[j0] = u[j0], u[pivot_col]
            piv = row[pivot_col]
            more = False
            for j in range(pivot_col + 1, n):
                if row[j]:
                    q = row[j] // piv
                    for r in a:
                        r[j] -= q * r[pivot_col]
                    uj, up = u[j], u[pivot_col]
                    for k in range(n):
                        uj[k] -= q * up[k]
                    if row[j]:
                        more = True
            if not more:
                pivot_col += 1
                break
    return [{k: v for k, v in enumerate(u[j]) if v} for j in range(pivot_col, n)]
