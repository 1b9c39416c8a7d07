"""Bar-type resolution on the simple elements of a Garside monoid.

Cells are tuples [m_1|...|m_n] of simples (divisors of the Garside element,
identity excluded, the Garside element itself allowed) whose product is again
simple.  The boundary is the usual bar differential

    d[m_1|...|m_n] = m_1[m_2|...|m_n] + sum_i (-1)^i [..|m_i m_{i+1}|..] + (-1)^n [m_1|...|m_{n-1}]

with merged entries that leave the simple set dropped.
"""

from __future__ import annotations

from .dl_complex import CoefficientSystem
from .garside import Monoid, MonoidElement
from .linalg import ExactMatrix, NotAComplexError
from .presentations import MonoidPresentation


class CMWComplex:
    def __init__(self, p: MonoidPresentation, cell_cap: int = 2_000_000, lcm_bound: int | None = None):
        self.pres = p
        self.monoid = Monoid(p, lcm_bound=lcm_bound)
        self.cell_cap = cell_cap
        delta = self.monoid.delta()
        simples = sorted(self.monoid.divisors(delta, "right") - {MonoidElement(())},
                         key=lambda m: (m.length, m.word))
        self.simples = simples
        self.index = {m: i for i, m in enumerate(simples)}
        # allowed next entries after a prefix whose product is simple i
        self._next = {}
        self._product = {}
        for i, m in enumerate(simples):
            rest = self.monoid.left_divides(m, delta)
            nxt = []
            if rest.word:
                for d in self.monoid.divisors(rest, "left"):
                    if d.word:
                        nxt.append(self.index[d])
            self._next[i] = sorted(nxt)
        self._cells = {0: [()], 1: [(i,) for i in range(len(simples))]}
        self._prod_of = {(): None}

    def product(self, i, j):
        key = (i, j)
        hit = self._product.get(key)
        if hit is None:
            m = self.monoid.mul(self.simples[i], self.simples[j])
            hit = self.index.get(m, -1)
            self._product[key] = hit
        return hit

    def cell_product(self, cell):
        acc = cell[0]
        for j in cell[1:]:
            acc = self.product(acc, j)
        return acc

    def cells(self, n):
        if n not in self._cells:
            out = []
            for c in self.cells(n - 1):
                P = self.cell_product(c)
                for j in self._next[P]:
                    out.append(c + (j,))
                    if len(out) > self.cell_cap:
                        raise RuntimeError(f"more than {self.cell_cap} cells in degree {n}")
            self._cells[n] = out
        return self._cells[n]

    def top_degree(self):
        return self.monoid.delta().length

    def bar_boundary(self, cell):
        """List of (coefficient simple index or None for 1, sign, face cell)."""
        n = len(cell)
        terms = [(cell[0], 1, cell[1:])]
        for i in range(1, n):
            prod = self.product(cell[i - 1], cell[i])
            if prod >= 0:
                terms.append((None, (-1) ** i, cell[:i - 1] + (prod,) + cell[i + 1:]))
        terms.append((None, (-1) ** n, cell[:-1]))
        return terms

    def matrix(self, n, coeffs: CoefficientSystem | None = None) -> ExactMatrix:
        coeffs = coeffs or CoefficientSystem.trivial(self.monoid.n)
        k = coeffs.k
        src = self.cells(n)
        tgt = self.cells(n - 1)
        tidx = {c: i for i, c in enumerate(tgt)}
        ent = {}
        for j, c in enumerate(src):
            for coef, sign, face in self.bar_boundary(c):
                i = tidx[face]
                if coef is None:
                    for a in range(k):
                        key = (i * k + a, j * k + a)
                        ent[key] = ent.get(key, 0) + sign
                else:
                    block = coeffs.rho(self.simples[coef].word)
                    for a in range(k):
                        for b in range(k):
                            v = block[b, a]
                            if v:
                                key = (i * k + a, j * k + b)
                                ent[key] = ent.get(key, 0) + sign * int(v)
        return ExactMatrix(len(tgt) * k, len(src) * k, ent)


def simples(p: MonoidPresentation):
    return set(CMWComplex(p).simples)


def build_matrices(p: MonoidPresentation, coeffs: CoefficientSystem | None = None,
                   max_degree: int | None = None, lcm_bound: int | None = None):
    from .homology_engine import ChainComplexData

    cx = CMWComplex(p, lcm_bound=lcm_bound)
    if coeffs is not None:
        coeffs.validate(p)
    coeffs = coeffs or CoefficientSystem.trivial(cx.monoid.n)
    top = cx.top_degree()
    N = top if max_degree is None else min(max_degree, top)
    mats = [cx.matrix(n, coeffs) for n in range(1, N + 1)]
    for a, b in zip(mats, mats[1:]):
        if not (a @ b).is_zero(coeffs.modulus):
            raise NotAComplexError("bar boundary matrices do not compose to zero")
    dims = [len(cx.cells(n)) * coeffs.k for n in range(N + 1)]
    labels = [["[" + "|".join(cx.monoid.fmt(cx.simples[i]) for i in c) + "]" for c in cx.cells(n)]
              for n in range(N + 1)]
    return ChainComplexData(dims=dims, matrices=mats, labels=labels, complete=(N == top),
                            meta={"builder": "cmw", "simples": len(cx.simples),
                                  "coefficients": coeffs.label})
