"""Index-two subgroups: Reidemeister-Schreier rewriting, abelianization, H_1 with sign coefficients.

For a character eps : G -> Z/2 and g the first eps-odd generator, the
transversal is {1, g}.  Schreier generators are the nontrivial words
T(c) a T(c a)^-1, named by the word they stand for (e.g. ``s.s`` for g^2,
``s.t`` for g t, ``t.s^-1`` for t g^-1, ``s.a.s^-1`` for an eps-even a seen
from the nontrivial coset).

H_1(G, Z_eps) is the abelianized kernel modulo [g^2] = 0 and
[g^-1 h g] = -[h] for every Schreier generator h.  A Fox-calculus
computation on the presentation complex gives the same group independently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import ExactMatrix, HomologyGroup, snf
from .presentations import GroupPresentation


class OddRelatorError(ValueError):
    pass


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self):
        return str(HomologyGroup(self.free_rank, self.torsion))

    @classmethod
    def parse(cls, text: str) -> "AbelianInvariants":
        """'Z3 x Z', 'Z^2', '0' and similar."""
        text = text.replace(" ", "")
        if text in ("0", ""):
            return cls(0, ())
        free, tors = 0, []
        for part in text.replace("⊕", "x").replace("×", "x").split("x"):
            if part == "Z":
                free += 1
            elif part.startswith("Z^"):
                free += int(part[2:])
            elif part.startswith("Z"):
                tors.append(int(part[1:]))
            else:
                raise ValueError(f"cannot parse {part!r}")
        from .linalg import invariant_factors_from_diagonal
        return cls(free, tuple(d for d in invariant_factors_from_diagonal(tors) if d > 1))


def _normalize_eps(gp: GroupPresentation, eps):
    if eps is None:
        return [1] * len(gp.generators)
    if isinstance(eps, dict):
        return [int(eps.get(g, eps.get(i, 0))) % 2 for i, g in enumerate(gp.generators)]
    if all(isinstance(x, str) for x in eps):
        odd = set(eps)
        return [int(g in odd) for g in gp.generators]
    return [int(x) % 2 for x in eps]


def free_reduce(word):
    out = []
    for x, s in word:
        if out and out[-1] == (x, -s):
            out.pop()
        else:
            out.append((x, s))
    return tuple(out)


class EvenSubgroup:
    """Reidemeister-Schreier data for the kernel of eps."""

    def __init__(self, gp: GroupPresentation, eps=None):
        self.gp = gp
        self.eps = _normalize_eps(gp, eps)
        odd = [i for i, v in enumerate(self.eps) if v]
        if not odd:
            raise ValueError("eps vanishes on every generator")
        self.g = odd[0]
        for r in gp.relators:
            if sum(self.eps[x] for x, _ in r) % 2:
                raise OddRelatorError(f"relator {gp.format_word(r)} is eps-odd")
        self.names = []
        self.words = []
        self._index = {}
        g = self.g
        for a in range(len(gp.generators)):
            for c in (0, 1):
                w = self._schreier_word(c, a)
                if w:
                    self._index[c, a] = len(self.names)
                    self.names.append(".".join(gp.generators[x] + ("" if s == 1 else "^-1") for x, s in w))
                    self.words.append(w)
        self.u = self._index[1, g]

    def _schreier_word(self, c, a):
        """T(c) a T(c + eps(a))^-1 as a reduced word in the original generators."""
        g = self.g
        w = ((g, 1),) if c else ()
        w += ((a, 1),)
        if (c + self.eps[a]) % 2:
            w += ((g, -1),)
        return free_reduce(w)

    def rewrite(self, word, coset=0):
        """Rewrite a word (which must end in the trivial coset) in Schreier generators."""
        out = []
        c = coset
        for x, s in word:
            if s == 1:
                k = self._index.get((c, x))
                if k is not None:
                    out.append((k, 1))
                c = (c + self.eps[x]) % 2
            else:
                c2 = (c + self.eps[x]) % 2
                k = self._index.get((c2, x))
                if k is not None:
                    out.append((k, -1))
                c = c2
        return free_reduce(out), c

    def presentation(self) -> GroupPresentation:
        rels = []
        for r in self.gp.relators:
            for c in (0, 1):
                w, end = self.rewrite(r, c)
                assert end == c
                rels.append(w)
        return GroupPresentation(tuple(self.names), tuple(rels), (self.gp.name or "group") + "_even")

    def sign_relations(self, method="reduced"):
        """Extra abelian relations turning the kernel's abelianization into H_1(G, Z_eps)."""
        n = len(self.names)
        rows = [{self.u: 1}]
        if method == "reduced":
            g = self.g
            for a in range(len(self.gp.generators)):
                if a == g:
                    continue
                k0, k1 = self._index[0, a], self._index[1, a]
                rows.append({k0: 1, k1: 1} if k0 != k1 else {k0: 2})
            return rows
        # full closure: [g^-1 h g] + [h] = 0 for every Schreier generator h
        for k, w in enumerate(self.words):
            conj = ((self.g, -1),) + w + ((self.g, 1),)
            rw, end = self.rewrite(conj, 0)
            row = {k: 1}
            for x, s in rw:
                row[x] = row.get(x, 0) + s
            rows.append({i: v for i, v in row.items() if v})
        assert all(max(r, default=-1) < n for r in rows)
        return rows


def even_presentation(gp: GroupPresentation, eps=None) -> GroupPresentation:
    return EvenSubgroup(gp, eps).presentation()


def _invariants(n_gens, rows) -> AbelianInvariants:
    m = ExactMatrix(len(rows), n_gens, {(i, j): v for i, r in enumerate(rows) for j, v in r.items() if v})
    f = snf(m).invariant_factors
    return AbelianInvariants(n_gens - len(f), tuple(d for d in f if d > 1))


def abelian_invariants(gp: GroupPresentation) -> AbelianInvariants:
    rows = []
    for r in gp.relators:
        row = {}
        for x, s in r:
            row[x] = row.get(x, 0) + s
        rows.append(row)
    return _invariants(len(gp.generators), rows)


def h1_sign(gp: GroupPresentation, eps=None, method="reduced") -> AbelianInvariants:
    """H_1(G, Z_eps) from the abelianized index-two subgroup."""
    sub = EvenSubgroup(gp, eps)
    pres = sub.presentation()
    rows = []
    for r in pres.relators:
        row = {}
        for x, s in r:
            row[x] = row.get(x, 0) + s
        rows.append(row)
    rows += sub.sign_relations(method)
    return _invariants(len(pres.generators), rows)


def h1_sign_fox(gp: GroupPresentation, eps=None) -> AbelianInvariants:
    """H_1(G, Z_eps) from Fox derivatives on the presentation complex."""
    ev = _normalize_eps(gp, eps)
    n = len(gp.generators)
    d1 = ExactMatrix(1, n, {(0, j): -2 for j in range(n) if ev[j]})
    ent = {}
    for i, r in enumerate(gp.relators):
        sign = 1  # eps of the prefix read so far
        for x, s in r:
            if s == 1:
                ent[x, i] = ent.get((x, i), 0) + sign
                sign *= -1 if ev[x] else 1
            else:
                sign *= -1 if ev[x] else 1
                ent[x, i] = ent.get((x, i), 0) - sign
    d2 = ExactMatrix(n, len(gp.relators), ent)
    if not (d1 @ d2).is_zero():
        raise ValueError("Fox matrices do not compose to zero; eps is not a character")
    f = snf(d2).invariant_factors
    rank1 = 1 if any(ev) else 0
    return AbelianInvariants(n - rank1 - len(f), tuple(d for d in f if d > 1))


def h1_sign_dl(e: int, r: int) -> AbelianInvariants:
    """H_1 of B(e,e,r) with sign coefficients from the Dehornoy-Lafont complex."""
    from .homology_engine import compute

    res = compute("dl", {"preset": "cp", "e": e, "r": r}, "Z", system="sign", audit=False, max_degree=1)
    h = res.degrees[1]
    return AbelianInvariants(h.betti, h.torsion)
