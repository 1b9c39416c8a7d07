"""Word-level arithmetic in homogeneous monoids.

An element is stored as the lexicographically least word of its equivalence
class (letters compared by generator index).  Two engines compute the same
thing:

* ``bfs``: enumerate the whole class by applying relations in both
  directions.  Simple and auditable, but classes grow fast.
* ``reversing``: subword reversing on a complemented presentation (one
  relation per pair of first letters and per pair of last letters).  Used
  whenever the presentation is complemented and satisfies the cube
  condition on atoms, which makes reversing complete.

Divisibility conventions: ``x`` right-divides ``v`` if ``v = g x``; the lcm is
the least common *left* multiple; ``md(m)`` is the least atom right-dividing m.
"""

from __future__ import annotations

import sys
import threading
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .presentations import MonoidPresentation

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class ClassSizeExceeded(RuntimeError):
    pass


class LcmSearchExceeded(RuntimeError):
    pass


class NonUniqueLcm(RuntimeError):
    pass


class DivisorCountExceeded(RuntimeError):
    pass


class ParabolicConditionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class MonoidElement:
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def canonical_word(self):
        return self.word

    def is_identity(self):
        return not self.word


IDENTITY = MonoidElement(())


@dataclass(frozen=True)
class LcmResult:
    lcm: MonoidElement
    complements: dict  # input element -> g with lcm = g * input


def _complement_table(relations, n, mirror):
    """Map (x, y) -> (a, b) meaning x^-1 y = a b^-1 (after mirroring if asked)."""
    table = {}
    ok = True
    for u, v in relations:
        if mirror:
            u, v = u[::-1], v[::-1]
        if not u or not v or u[0] == v[0]:
            ok = False
            continue
        for (x, a), (y, b) in (((u[0], u[1:]), (v[0], v[1:])), ((v[0], v[1:]), (u[0], u[1:]))):
            if (x, y) in table and table[x, y] != (a, b):
                ok = False
            table[x, y] = (a, b)
    if len(table) != n * (n - 1):
        ok = False
    return table, ok


class _Reverser:
    """Right subword reversing for one complement table."""

    def __init__(self, table, max_length):
        self.table = table
        self.max_length = max_length
        self.cache = {}

    def __call__(self, u, v):
        """Return (v', u') with u v' = v u', i.e. u^-1 v reverses to v' u'^-1."""
        if not u:
            return v, ()
        if not v:
            return (), u
        key = (u, v)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        if len(v) == 1:
            x, y = u[0], v[0]
            if x == y:
                res = ((), u[1:])
            else:
                try:
                    a, b = self.table[x, y]
                except KeyError:
                    raise LcmSearchExceeded(f"no relation for letters {x}, {y}") from None
                a2, n2 = self(u[1:], a)
                res = (a2, b + n2)
        else:
            out = ()
            neg = u
            for y in v:
                y2, neg = self((neg), (y,))
                out += y2
                if len(out) > self.max_length or len(neg) > self.max_length:
                    raise LcmSearchExceeded("reversing did not terminate within the length bound")
            res = (out, neg)
        self.cache[key] = res
        return res


class Monoid:
    """Arithmetic in the monoid presented by ``pres``."""

    def __init__(self, pres: MonoidPresentation, method: str = "auto",
                 class_cap: int = 200_000, lcm_bound: int | None = None,
                 divisor_cap: int = 1_000_000):
        if not pres.is_homogeneous():
            raise ValueError("presentation is not homogeneous")
        self.pres = pres
        self.n = len(pres.generators)
        self.class_cap = class_cap
        self.divisor_cap = divisor_cap
        self._lcm_bound = lcm_bound
        self._lock = threading.RLock()
        rt, rok = _complement_table(pres.relations, self.n, mirror=False)
        lt, lok = _complement_table(pres.relations, self.n, mirror=True)
        bound = 4 * (lcm_bound or 256)
        self._right = _Reverser(rt, bound)
        self._left = _Reverser(lt, bound)
        self.complemented = rok and lok
        if method == "auto":
            method = "reversing" if self.complemented and self.cube_condition() else "bfs"
        if method == "reversing" and not self.complemented:
            raise ValueError("reversing needs a complemented presentation")
        if method not in ("bfs", "reversing"):
            raise ValueError(f"unknown method {method!r}")
        self.method = method
        self._canon = {}
        self._md = {}
        self._class = {}
        self._delta = None
        # adjacency for class enumeration: left side -> right sides and back
        self._rewrites = {}
        for u, v in pres.relations:
            self._rewrites.setdefault(u, set()).add(v)
            self._rewrites.setdefault(v, set()).add(u)

    # ---------------------------------------------------------- basic helpers
    @property
    def atoms(self):
        return [MonoidElement((i,)) for i in range(self.n)]

    def atom(self, name_or_index) -> MonoidElement:
        i = name_or_index if isinstance(name_or_index, int) else self.pres.index(name_or_index)
        return MonoidElement((i,))

    def element(self, word) -> MonoidElement:
        if isinstance(word, MonoidElement):
            return word
        if isinstance(word, str):
            word = self.pres.word(word)
        return self.canonical(tuple(word))

    def fmt(self, m) -> str:
        w = m.word if isinstance(m, MonoidElement) else m
        return self.pres.format_word(w)

    @property
    def lcm_bound(self):
        if self._lcm_bound is not None:
            return self._lcm_bound
        return 64

    # ------------------------------------------------------- class enumeration
    def word_class(self, w: tuple[int, ...]) -> frozenset:
        """All words equivalent to w (breadth-first closure under the relations)."""
        w = tuple(w)
        hit = self._class.get(w)
        if hit is not None:
            return hit
        seen = {w}
        queue = deque([w])
        lengths = sorted({len(k) for k in self._rewrites})
        while queue:
            cur = queue.popleft()
            for L in lengths:
                for i in range(len(cur) - L + 1):
                    piece = cur[i:i + L]
                    for rep in self._rewrites.get(piece, ()):
                        nw = cur[:i] + rep + cur[i + L:]
                        if nw not in seen:
                            seen.add(nw)
                            if len(seen) > self.class_cap:
                                raise ClassSizeExceeded(
                                    f"class of {self.fmt(w)} exceeds {self.class_cap} words")
                            queue.append(nw)
        res = frozenset(seen)
        if len(res) < 5000:
            for x in res:
                self._class[x] = res
        return res

    # --------------------------------------------------------------- canonical
    def canonical(self, w) -> MonoidElement:
        w = tuple(w)
        hit = self._canon.get(w)
        if hit is not None:
            return hit
        with self._lock:
            if self.method == "bfs":
                res = MonoidElement(min(self.word_class(w)))
            else:
                res = MonoidElement(self._lexmin(w))
            self._canon[w] = res
            self._canon[res.word] = res
        return res

    def _lexmin(self, w):
        out = []
        cur = w
        while cur:
            head = cur[0]
            for a in range(head):
                q = self._left_quotient_word((a,), cur)
                if q is not None:
                    out.append(a)
                    cur = q
                    break
            else:
                out.append(head)
                cur = cur[1:]
            known = self._canon.get(cur)
            if known is not None:
                out.extend(known.word)
                break
        return tuple(out)

    def equal(self, u, v) -> bool:
        return self.element(u) == self.element(v)

    def mul(self, *elems) -> MonoidElement:
        w = ()
        for e in elems:
            w += e.word if isinstance(e, MonoidElement) else tuple(e)
        return self.canonical(w)

    # -------------------------------------------------------------- division
    def _left_quotient_word(self, x, v):
        """Word h with v = x h, or None."""
        if self.method == "reversing":
            h, rest = self._right(tuple(x), tuple(v))
            return h if not rest else None
        xs = self.word_class(tuple(x))
        k = len(x)
        for w in self.word_class(tuple(v)):
            if w[:k] in xs:
                return w[k:]
        return None

    def _right_quotient_word(self, x, v):
        """Word g with v = g x, or None."""
        if self.method == "reversing":
            g, rest = self._left(tuple(x)[::-1], tuple(v)[::-1])
            return g[::-1] if not rest else None
        xs = self.word_class(tuple(x))
        k = len(x)
        for w in self.word_class(tuple(v)):
            if len(w) >= k and w[len(w) - k:] in xs:
                return w[:len(w) - k]
        return None

    def right_divides(self, x: MonoidElement, v: MonoidElement):
        """g with v = g x if x right-divides v, else None."""
        g = self._right_quotient_word(x.word, v.word)
        return None if g is None else self.canonical(g)

    def left_divides(self, x: MonoidElement, v: MonoidElement):
        """h with v = x h if x left-divides v, else None."""
        h = self._left_quotient_word(x.word, v.word)
        return None if h is None else self.canonical(h)

    def md(self, m: MonoidElement) -> int:
        """Index of the least atom right-dividing m."""
        if not m.word:
            raise ValueError("md of the identity")
        hit = self._md.get(m)
        if hit is not None:
            return hit
        last = m.word[-1]
        res = last
        for a in range(last):
            if self._right_quotient_word((a,), m.word) is not None:
                res = a
                break
        self._md[m] = res
        return res

    # -------------------------------------------------------------------- lcm
    def lcm2(self, x: MonoidElement, y: MonoidElement):
        """(lcm, g, h) with lcm = g x = h y."""
        if self.method == "reversing":
            yc, xc = self._left(x.word[::-1], y.word[::-1])
            g = self.canonical(yc[::-1])
            h = self.canonical(xc[::-1])
            return self.mul(g, x), g, h
        res = self._lcm_bfs([x, y])
        return res.lcm, res.complements[x], res.complements[y]

    def lcm(self, elements) -> LcmResult:
        elements = [self.element(e) for e in elements]
        if not elements:
            raise ValueError("lcm of an empty set")
        if self.method == "bfs":
            return self._lcm_bfs(elements)
        acc = elements[0]
        for e in elements[1:]:
            acc, _, _ = self.lcm2(acc, e)
        comps = {}
        for e in elements:
            g = self.right_divides(e, acc)
            if g is None:
                raise NonUniqueLcm("lcm is not a common multiple; presentation is not Garside")
            comps[e] = g
        return LcmResult(acc, comps)

    def _lcm_bfs(self, elements, bound=None) -> LcmResult:
        bound = bound or self.lcm_bound
        start = max(e.length for e in elements)
        layers = {e: {e} for e in elements}
        lengths = {e: e.length for e in elements}
        for L in range(start, bound + 1):
            for e in elements:
                while lengths[e] < L:
                    layers[e] = {self.canonical((a,) + m.word) for m in layers[e] for a in range(self.n)}
                    lengths[e] += 1
            common = set.intersection(*(layers[e] for e in elements))
            if common:
                if len(common) > 1:
                    raise NonUniqueLcm(
                        "several minimal common left multiples: "
                        + ", ".join(self.fmt(c) for c in sorted(common)))
                (v,) = common
                comps = {e: self.right_divides(e, v) for e in elements}
                return LcmResult(v, comps)
        raise LcmSearchExceeded(f"no common left multiple of length <= {bound}")

    def lcm_of_atoms(self, atoms) -> MonoidElement:
        acc = IDENTITY
        for a in atoms:
            acc = self.lcm2(acc, MonoidElement((a,)))[0] if acc.word else MonoidElement((a,))
        return acc

    # ----------------------------------------------------------- Garside data
    def delta(self) -> MonoidElement:
        if self._delta is None:
            d = self.lcm(self.atoms).lcm
            for a in self.atoms:
                if self.right_divides(a, d) is None or self.left_divides(a, d) is None:
                    raise LcmSearchExceeded("lcm of atoms is not a Garside element")
            self._delta = d
        return self._delta

    def divisors(self, d: MonoidElement, side: str = "right") -> set:
        """Right divisors x (d = g x), left divisors, or both."""
        if side == "both":
            return self.divisors(d, "right") & self.divisors(d, "left")
        seen = {d}
        stack = [d]
        while stack:
            cur = stack.pop()
            for a in range(self.n):
                if side == "right":
                    q = self._left_quotient_word((a,), cur.word)
                else:
                    q = self._right_quotient_word((a,), cur.word)
                if q is not None:
                    el = self.canonical(q)
                    if el not in seen:
                        seen.add(el)
                        if len(seen) > self.divisor_cap:
                            raise DivisorCountExceeded(f"more than {self.divisor_cap} divisors")
                        stack.append(el)
        return seen

    # ------------------------------------------------------------- validation
    def cube_condition(self) -> bool:
        """Cube condition on atoms for the right and left complement tables."""
        for rev in (self._right, self._left):
            for x, y, z in combinations(range(self.n), 3):
                for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
                    try:
                        # (a\b)\(a\c) must equal (b\a)\(b\c)
                        ab = rev((a,), (b,))[0]
                        ac = rev((a,), (c,))[0]
                        ba = rev((b,), (a,))[0]
                        bc = rev((b,), (c,))[0]
                        lhs = rev(ab, ac)[0]
                        rhs = rev(ba, bc)[0]
                        if rev(lhs, rhs) != ((), ()):
                            return False
                    except LcmSearchExceeded:
                        return False
        return True

    def submonoid_presentation(self, atom_names) -> MonoidPresentation:
        idx = [self.pres.index(a) for a in atom_names]
        keep = set(idx)
        pos = {a: k for k, a in enumerate(idx)}
        rels = tuple((tuple(pos[x] for x in u), tuple(pos[x] for x in v))
                     for u, v in self.pres.relations if set(u) | set(v) <= keep)
        return MonoidPresentation(tuple(atom_names), rels, f"{self.pres.name}|{','.join(atom_names)}")


# ------------------------------------------------------- module-level helpers

_MONOIDS: dict = {}
_MONOIDS_LOCK = threading.Lock()


def monoid(p: MonoidPresentation, method: str = "auto") -> Monoid:
    key = (p, method)
    with _MONOIDS_LOCK:
        m = _MONOIDS.get(key)
        if m is None:
            m = _MONOIDS[key] = Monoid(p, method=method)
    return m


def canonical(p, w, method="auto") -> MonoidElement:
    return monoid(p, method).element(w)


def right_divides(p, x, v, method="auto"):
    m = monoid(p, method)
    return m.right_divides(m.element(x), m.element(v))


def lcm(p, elements, method="auto") -> LcmResult:
    return monoid(p, method).lcm(elements)


def md(p, m, method="auto"):
    mon = monoid(p, method)
    return p.symbols[mon.md(mon.element(m))]


def garside_delta(p, method="auto") -> MonoidElement:
    return monoid(p, method).delta()


def divisors(p, d, side="right", method="auto"):
    mon = monoid(p, method)
    return mon.divisors(mon.element(d), side)


def check_parabolic_condition(atom_names):
    ts = [a for a in atom_names if a.startswith("t")]
    return ts == [] or len(ts) == 1 or None


def parabolic_lcm_check(p_big: MonoidPresentation, p_sub: MonoidPresentation | None, atoms_sub) -> bool:
    """Do lcms of sub-atoms computed in the submonoid agree with those in the big monoid?

    ``atoms_sub`` are generator names of ``p_big``; ``p_sub`` has generators in
    the same positions (or None for the presentation induced by p_big).  For
    Corran-Picantin monoids the subset must contain no t_i, all of them, or
    exactly one.
    """
    big = monoid(p_big)
    atoms_sub = list(atoms_sub)
    all_t = [g for g in p_big.generators if g.startswith("t")]
    sub_t = [a for a in atoms_sub if a.startswith("t")]
    if p_big.name.startswith("cp_") and sub_t and len(sub_t) != 1 and set(sub_t) != set(all_t):
        raise ParabolicConditionError(
            f"{atoms_sub} contains {len(sub_t)} of the {len(all_t)} atoms t_i")
    if p_sub is None:
        p_sub = big.submonoid_presentation(atoms_sub)
    if len(p_sub.generators) != len(atoms_sub):
        raise ValueError("sub-presentation and atom list differ in size")
    small = Monoid(p_sub)
    to_big = [big.pres.index(a) for a in atoms_sub]

    def image(el):
        return big.canonical(tuple(to_big[x] for x in el.word))

    subsets = [list(c) for c in combinations(range(len(atoms_sub)), 2)] + [list(range(len(atoms_sub)))]
    for sub in subsets:
        try:
            ls = small.lcm([MonoidElement((i,)) for i in sub]).lcm
        except (LcmSearchExceeded, NonUniqueLcm):
            return False
        lb = big.lcm([MonoidElement((to_big[i],)) for i in sub]).lcm
        if image(ls) != lb:
            return False
    return True
