"""Count homomorphisms from a finitely presented group onto a finite permutation group.

Images are assigned generator by generator in presentation order.  A relator
is evaluated as soon as every generator it mentions has an image, and the
evaluation is vectorized over all candidate images of the generator being
placed, using precomputed multiplication and inverse tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .presentations import GroupPresentation


def _compose(p, q):
    """Apply p, then q (permutations as tuples acting on 0..n-1)."""
    return tuple(q[i] for i in p)


@dataclass
class PermGroup:
    degree: int
    generators: list
    name: str = ""
    elements: list = field(init=False, repr=False)

    def __post_init__(self):
        ident = tuple(range(self.degree))
        gens = [tuple(g) for g in self.generators]
        seen = {ident: 0}
        elems = [ident]
        i = 0
        while i < len(elems):
            x = elems[i]
            for g in gens:
                y = _compose(x, g)
                if y not in seen:
                    seen[y] = len(elems)
                    elems.append(y)
            i += 1
        self.elements = elems
        self._index = seen
        self._tables = None

    @property
    def order(self):
        return len(self.elements)

    @classmethod
    def symmetric(cls, n):
        if n == 1:
            return cls(1, [], "S1")
        gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
        return cls(n, gens, f"S{n}")

    @classmethod
    def alternating(cls, n):
        if n < 3:
            return cls(max(n, 1), [], f"A{n}")
        gens = [tuple((i + 1) % 3 if i < 3 else i for i in range(n))]
        for k in range(3, n):
            g = list(range(n))
            g[0], g[1], g[k] = 1, k, 0
            gens.append(tuple(g))
        return cls(n, gens, f"A{n}")

    @classmethod
    def trivial(cls):
        return cls(1, [], "1")

    @classmethod
    def parse(cls, text):
        """'A5', 'S6', 'Sn:4', 'An:5', or one permutation per line (images of 0..n-1)."""
        t = text.strip()
        if t[:1] in "AS" and t[1:].lstrip(":n").isdigit():
            n = int(t[1:].lstrip(":n"))
            return cls.alternating(n) if t[0] == "A" else cls.symmetric(n)
        perms = [tuple(int(x) for x in ln.split()) for ln in t.splitlines() if ln.strip() and not ln.startswith("#")]
        return cls(len(perms[0]), perms, "custom")

    def tables(self):
        """(multiplication table, inverse table, identity index) as numpy arrays."""
        if self._tables is None:
            N = self.order
            E = np.array(self.elements, dtype=np.int64)
            powers = self.degree ** np.arange(self.degree)[::-1]
            codes = E @ powers
            order = np.argsort(codes)
            sorted_codes = codes[order]
            mul = np.empty((N, N), dtype=np.int32)
            for i in range(N):
                c = E[:, E[i]] @ powers  # row j: apply element i, then element j
                mul[i] = order[np.searchsorted(sorted_codes, c)]
            inv = np.argmax(mul == 0, axis=1).astype(np.int32)
            self._tables = (mul, inv, 0)
        return self._tables

    def closure_size(self, idx):
        mul, _, ident = self.tables()
        seen = {ident}
        frontier = [ident]
        gens = sorted(set(int(i) for i in idx) - {ident})
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(mul[x, g])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return len(seen)


@dataclass
class SearchResult:
    satisfying: int
    surjective: int
    target: str = ""

    def as_dict(self):
        return {"satisfying": self.satisfying, "surjective": self.surjective, "target": self.target}


def _relator_schedule(gp: GroupPresentation):
    """For each generator position, the relators whose last-assigned generator it is."""
    sched = [[] for _ in gp.generators]
    for r in gp.relators:
        if r:
            sched[max(x for x, _ in r)].append(r)
    return sched


def search(gp: GroupPresentation, target: PermGroup, count_only: bool = False, order=None):
    """Count generator tuples satisfying every relator, and those generating the target.

    ``order`` permutes the assignment order of generators (the counts do not depend on it).
    """
    if order is not None:
        perm = list(order)
        relabel = {old: new for new, old in enumerate(perm)}
        gp = GroupPresentation(tuple(gp.generators[i] for i in perm),
                               tuple(tuple((relabel[x], s) for x, s in r) for r in gp.relators), gp.name)
    mul, inv, ident = target.tables()
    N = target.order
    n = len(gp.generators)
    sched = _relator_schedule(gp)
    allc = np.arange(N, dtype=np.int32)
    satisfying = 0
    surjective = 0
    if n == 0:
        return SearchResult(1, int(N == 1), target.name)

    def evaluate(rel, assigned, k):
        acc = np.full(N, ident, dtype=np.int32)
        for x, s in rel:
            val = allc if x == k else np.full(N, assigned[x], dtype=np.int32)
            if s == -1:
                val = inv[val]
            acc = mul[acc, val]
        return acc == ident

    def rec(k, assigned):
        nonlocal satisfying, surjective
        mask = np.ones(N, dtype=bool)
        for rel in sched[k]:
            mask &= evaluate(rel, assigned, k)
        cands = np.nonzero(mask)[0]
        if k == n - 1:
            satisfying += len(cands)
            if not count_only:
                for c in cands:
                    if target.closure_size(assigned + [int(c)]) == N:
                        surjective += 1
            return
        for c in cands:
            rec(k + 1, assigned + [int(c)])

    rec(0, [])
    return SearchResult(satisfying, surjective if not count_only else -1, target.name)


def search_bruteforce(gp: GroupPresentation, target: PermGroup):
    """Plain enumeration of every tuple; only for tiny targets (test oracle)."""
    mul, inv, ident = target.tables()
    N = target.order
    sat = surj = 0
    for tup in itertools.product(range(N), repeat=len(gp.generators)):
        ok = True
        for r in gp.relators:
            acc = ident
            for x, s in r:
                v = tup[x] if s == 1 else int(inv[tup[x]])
                acc = int(mul[acc, v])
            if acc != ident:
                ok = False
                break
        if ok:
            sat += 1
            if target.closure_size(tup) == N:
                surj += 1
    return SearchResult(sat, surj, target.name)
