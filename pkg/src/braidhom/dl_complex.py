"""Dehornoy-Lafont free resolution of a Garside monoid.

An n-cell is an increasing tuple of atoms [x_1 < ... < x_n] with
x_i = md(lcm(x_i, ..., x_n)).  The differential is defined together with a
contracting homotopy by mutual recursion:

    d[a, A]  = (a/A)[A] - r(a/A [A])
    r_n      = s_{n-1} o d_n        (r_0(m[]) = [])
    s_n(x[A]) = 0                    if x[A] is irreducible
              = y[a, A] + s_n(y r_n(a/A [A]))   otherwise

where a = md(x lcm(A)), a/A is the left complement with (a/A) lcm(A) = lcm(a, A),
and x = y (a/A).  Chains are dicts {(MonoidElement, cell): int}.
"""

from __future__ import annotations

import numpy as np

from .garside import IDENTITY, Monoid, MonoidElement
from .linalg import ExactMatrix, NotAComplexError
from .presentations import MonoidPresentation


class RecursionDepthExceeded(RuntimeError):
    pass


def _add(acc, chain, factor=1):
    for k, v in chain.items():
        nv = acc.get(k, 0) + factor * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


def reorder_presentation(p: MonoidPresentation, order) -> MonoidPresentation:
    """Same monoid with generators listed in ``order`` (names)."""
    order = list(order)
    if sorted(order) != sorted(p.generators):
        raise ValueError("order must be a permutation of the generators")
    pos = {p.generators[i]: i for i in range(len(p.generators))}
    new = {pos[name]: k for k, name in enumerate(order)}
    rels = tuple((tuple(new[x] for x in u), tuple(new[x] for x in v)) for u, v in p.relations)
    return MonoidPresentation(tuple(order), rels, p.name)


class CoefficientSystem:
    """Each atom acts by an invertible k x k integer matrix; words act by products.

    With ``v . m = v rho(m)`` on row vectors, rho(word) is the product of atom
    matrices in word order, and a boundary coefficient m contributes the block
    rho(m)^T in column convention.
    """

    def __init__(self, images, label="", modulus=None):
        self.images = [np.array(a, dtype=object) for a in images]
        self.k = self.images[0].shape[0] if self.images else 1
        self.label = label
        self.modulus = modulus
        self._cache = {(): np.identity(self.k, dtype=object)}

    def rho(self, word):
        word = tuple(word)
        hit = self._cache.get(word)
        if hit is None:
            hit = self.rho(word[:-1]).dot(self.images[word[-1]])
            if self.modulus:
                hit = hit % self.modulus
            self._cache[word] = hit
        return hit

    def validate(self, p: MonoidPresentation):
        if len(self.images) != len(p.generators):
            raise ValueError("one matrix per generator is required")
        for a in self.images:
            d = _int_det(a.tolist())
            if self.modulus:
                if d % self.modulus == 0:
                    raise ValueError("matrix not invertible")
            elif abs(d) != 1:
                raise ValueError("matrix not invertible over Z")
        for u, v in p.relations:
            a, b = self.rho(u), self.rho(v)
            diff = a - b
            if self.modulus:
                diff = diff % self.modulus
            if any(x != 0 for x in diff.flat):
                raise ValueError(f"relation {p.format_word(u)} = {p.format_word(v)} not respected")
        return self

    @classmethod
    def trivial(cls, n):
        return cls([[[1]]] * n, "trivial")

    @classmethod
    def sign(cls, n, odd=None):
        """Atoms act by -1 (or only those flagged in ``odd``)."""
        odd = [True] * n if odd is None else odd
        return cls([[[-1 if o else 1]] for o in odd], "sign")

    @classmethod
    def cyclic(cls, n, e, special, others=1):
        """k[t]/(1-(-t)^e) in the basis 1, t, ..., t^(e-1).

        The atom ``special`` acts by -t; the remaining atoms act by ``others``
        (1 for the Artin group of type B with the special node first).
        """
        tmat = cyclic_t_matrix(e)
        ident = [[int(i == j) for j in range(e)] for i in range(e)]
        neg_t = [[-x for x in row] for row in tmat]
        imgs = [neg_t if i == special else [[others * x for x in row] for row in ident] for i in range(n)]
        return cls(imgs, f"k[t]/(1-(-t)^{e})")


def cyclic_t_matrix(e):
    """Multiplication by t on k[t]/(t^e - (-1)^e); column j is the image of t^j."""
    m = [[0] * e for _ in range(e)]
    for j in range(e - 1):
        m[j + 1][j] = 1
    m[0][e - 1] = (-1) ** e
    return m


def _int_det(a):
    """Bareiss determinant of a small integer matrix."""
    a = [list(map(int, r)) for r in a]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


class DLComplex:
    """Dehornoy-Lafont complex of a Garside monoid under a fixed atom order."""

    def __init__(self, p: MonoidPresentation, order=None, max_depth: int = 10_000,
                 lcm_bound: int | None = None):
        if order is not None:
            p = reorder_presentation(p, order)
        self.pres = p
        self.monoid = Monoid(p, lcm_bound=lcm_bound)
        self.max_depth = max_depth
        self._cells = {0: [()], 1: [(a,) for a in range(self.monoid.n)]}
        self._lcm = {(): IDENTITY}
        self._comp = {}
        self._d = {}
        self._r = {}
        self._s = {}
        self._depth = 0

    # ------------------------------------------------------------------ cells
    def lcm_cell(self, A) -> MonoidElement:
        hit = self._lcm.get(A)
        if hit is None:
            rest = self.lcm_cell(A[1:])
            a = MonoidElement((A[0],))
            hit = a if not rest.word else self.monoid.lcm2(rest, a)[0]
            self._lcm[A] = hit
        return hit

    def cells(self, n: int):
        if n < 0:
            return []
        if n not in self._cells:
            out = []
            for A in self.cells(n - 1):
                for a in range(A[0]):
                    cand = (a,) + A
                    if self.monoid.md(self.lcm_cell(cand)) == a:
                        out.append(cand)
            self._cells[n] = sorted(out)
        return self._cells[n]

    def cell_names(self, A):
        return "[" + ",".join(self.pres.generators[a] for a in A) + "]"

    def top_degree(self):
        n = 0
        while self.cells(n + 1):
            n += 1
        return n

    # ------------------------------------------------------------- recursion
    def complement(self, a: int, A) -> MonoidElement:
        """The g with g lcm(A) = lcm(a, lcm(A))."""
        key = (a, A)
        hit = self._comp.get(key)
        if hit is None:
            L = self.lcm_cell(A)
            at = MonoidElement((a,))
            if not L.word:
                hit = at
            else:
                _, hit, _ = self.monoid.lcm2(L, at)
            self._comp[key] = hit
        return hit

    def boundary(self, A) -> dict:
        """d[A] as a chain {(m, B): coeff} over the (len(A)-1)-cells."""
        A = tuple(A)
        hit = self._d.get(A)
        if hit is not None:
            return hit
        if not A:
            return {}
        c = self.complement(A[0], A[1:])
        res = {(c, A[1:]): 1}
        _add(res, self.r(c, A[1:]), -1)
        self._d[A] = res
        return res

    def r(self, x: MonoidElement, A) -> dict:
        """r_n(x[A]) for an n-cell A."""
        key = (x, A)
        hit = self._r.get(key)
        if hit is not None:
            return hit
        if not A:
            res = {(IDENTITY, ()): 1}
        else:
            res = {}
            for (m, B), c in self.boundary(A).items():
                _add(res, self.s(self.monoid.mul(x, m), B), c)
        self._r[key] = res
        return res

    def s(self, x: MonoidElement, A) -> dict:
        """s_n(x[A]), landing in (n+1)-cells."""
        key = (x, A)
        hit = self._s.get(key)
        if hit is not None:
            return hit
        self._depth += 1
        if self._depth > self.max_depth:
            self._depth = 0
            raise RecursionDepthExceeded("DL recursion did not terminate")
        try:
            if not A and not x.word:
                res = {}
            else:
                xl = self.monoid.mul(x, self.lcm_cell(A))
                a = self.monoid.md(xl)
                if A and a == A[0]:
                    res = {}
                else:
                    c = self.complement(a, A)
                    y = self.monoid.right_divides(c, x)
                    if y is None:
                        raise RecursionDepthExceeded("complement does not divide; not a Garside monoid?")
                    res = {(y, (a,) + A): 1}
                    for (m, B), k in self.r(c, A).items():
                        _add(res, self.s(self.monoid.mul(y, m), B), k)
        finally:
            self._depth -= 1
        self._s[key] = res
        return res

    # ---------------------------------------------------------------- checks
    def apply_boundary(self, chain: dict) -> dict:
        out = {}
        for (m, B), c in chain.items():
            for (m2, C), k in self.boundary(B).items():
                key = (self.monoid.mul(m, m2), C)
                out[key] = out.get(key, 0) + c * k
        return {k: v for k, v in out.items() if v}

    def check_dd_zero(self, max_degree=None) -> bool:
        top = self.top_degree() if max_degree is None else max_degree
        for n in range(2, top + 1):
            for A in self.cells(n):
                if self.apply_boundary(self.boundary(A)):
                    return False
        return True

    def format_chain(self, chain: dict) -> str:
        terms = []
        for (m, B), c in sorted(chain.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
            terms.append(f"{coef}{self.monoid.fmt(m)}{self.cell_names(B)}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    # -------------------------------------------------------------- matrices
    def matrix(self, n: int, coeffs: CoefficientSystem | None = None) -> ExactMatrix:
        """Matrix of d_n : C_n -> C_{n-1} after tensoring with the coefficients."""
        coeffs = coeffs or CoefficientSystem.trivial(self.monoid.n)
        k = coeffs.k
        src = self.cells(n)
        tgt = self.cells(n - 1)
        tidx = {B: i for i, B in enumerate(tgt)}
        ent = {}
        for j, A in enumerate(src):
            for (m, B), c in self.boundary(A).items():
                block = coeffs.rho(m.word)
                i = tidx[B]
                for a in range(k):
                    for b in range(k):
                        v = block[b, a]  # transpose
                        if v:
                            key = (i * k + a, j * k + b)
                            ent[key] = ent.get(key, 0) + c * int(v)
        return ExactMatrix(len(tgt) * k, len(src) * k, ent)


def build_matrices(p: MonoidPresentation, order=None, coeffs: CoefficientSystem | None = None,
                   max_degree: int | None = None, lcm_bound: int | None = None):
    """All boundary matrices d_1 .. d_N of the DL complex (N = top degree or max_degree)."""
    from .homology_engine import ChainComplexData

    cx = DLComplex(p, order, lcm_bound=lcm_bound)
    if coeffs is not None:
        coeffs.validate(cx.pres)
    coeffs = coeffs or CoefficientSystem.trivial(cx.monoid.n)
    top = cx.top_degree()
    N = top if max_degree is None else min(max_degree, top)
    mats = [cx.matrix(n, coeffs) for n in range(1, N + 1)]
    dims = [len(cx.cells(n)) * coeffs.k for n in range(N + 1)]
    for a, b in zip(mats, mats[1:]):
        if not (a @ b).is_zero(coeffs.modulus):
            raise NotAComplexError("DL boundary matrices do not compose to zero")
    labels = [[cx.cell_names(A) for A in cx.cells(n)] for n in range(N + 1)]
    return ChainComplexData(dims=dims, matrices=mats, labels=labels,
                            complete=(N == top), meta={"builder": "dl", "order": list(cx.pres.generators),
                                                       "coefficients": coeffs.label})


def cells(p: MonoidPresentation, order=None, n: int = 1):
    cx = DLComplex(p, order)
    return [tuple(cx.pres.generators[a] for a in A) for A in cx.cells(n)]


def boundary(p: MonoidPresentation, cell, order=None):
    """d of a cell given by generator names; returns (complex, chain)."""
    cx = DLComplex(p, order)
    A = tuple(cx.pres.index(a) for a in cell)
    return cx, cx.boundary(A)
