"""Closed-form Poincare polynomials and two-variable series, truncated to finite tables.

Bivariate series use u for the homological degree and v for the rank r.
Every closed form is transcribed exactly as printed.  Where a printed
formula needs an interpretive choice to line up with direct computation,
the choice is a keyword argument whose default is the literal reading, and
tables produced that way carry ``as_printed=True``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .qanalog import p_valuation


def h_p(n: int, p: int) -> int:
    """Largest h with p^h dividing n."""
    return p_valuation(n, p)


class BiSeries:
    """Truncated power series in u, v with rational coefficients."""

    def __init__(self, max_u: int, max_v: int, terms=None):
        self.max_u, self.max_v = max_u, max_v
        self.terms = {}
        for (a, b), c in (terms or {}).items():
            if a <= max_u and b <= max_v and c:
                self.terms[a, b] = Fraction(c)

    def _new(self, terms):
        return BiSeries(self.max_u, self.max_v, terms)

    @classmethod
    def monomial(cls, max_u, max_v, a, b, c=1):
        return cls(max_u, max_v, {(a, b): c})

    def __add__(self, other):
        if not isinstance(other, BiSeries):
            other = self.monomial(self.max_u, self.max_v, 0, 0, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __mul__(self, other):
        if not isinstance(other, BiSeries):
            return self._new({k: c * other for k, c in self.terms.items()})
        out = {}
        for (a, b), c in self.terms.items():
            for (x, y), d in other.terms.items():
                if a + x <= self.max_u and b + y <= self.max_v:
                    out[a + x, b + y] = out.get((a + x, b + y), 0) + c * d
        return self._new(out)

    __rmul__ = __mul__

    def geometric(self, a, b):
        """self / (1 - u^a v^b); requires a + b > 0."""
        out = self
        acc = self
        k = 1
        while k * a <= self.max_u and k * b <= self.max_v:
            acc = acc * self.monomial(self.max_u, self.max_v, a, b)
            out = out + acc
            k += 1
        return out

    def coeff(self, a, b):
        return self.terms.get((a, b), Fraction(0))


def _one(U, V):
    return BiSeries.monomial(U, V, 0, 0)


def _mono(U, V, a, b, c=1):
    return BiSeries.monomial(U, V, a, b, c)


@dataclass
class DimTable:
    """(r, i) -> dimension of H_i in rank r."""

    entries: dict
    field: str
    e: int
    source: str = ""
    as_printed: bool = False
    notes: list = field(default_factory=list)

    def column(self, r):
        return [self.entries[r, i] for i in sorted(i for rr, i in self.entries if rr == r)]

    def ranks(self):
        return sorted({r for r, _ in self.entries})

    def to_csv(self):
        lines = ["r,i,dim"]
        for (r, i) in sorted(self.entries):
            lines.append(f"{r},{i},{self.entries[r, i]}")
        return "\n".join(lines) + "\n"


def _table_from_series(s: BiSeries, field_label, e, v_offset, max_r, max_i, source, as_printed, notes=()):
    entries = {}
    for r in range(max_r + 1):
        for i in range(max_i + 1):
            c = s.coeff(i, r + v_offset)
            entries[r, i] = int(c) if c.denominator == 1 else c
    return DimTable(entries, field_label, e, source, as_printed, list(notes))


# -- rational -----------------------------------------------------------------

def lehrer_rational(kind: str, e: int, r: int) -> list[int]:
    """Rational Betti numbers of B(e,e,r) ('beer') or B(2e,e,r) ('b2eer')."""
    if r < 2:
        raise ValueError("need r >= 2")
    odd = e % 2 == 1 or r % 2 == 1
    coeffs = [0] * (r + 1)
    if kind == "beer":
        coeffs[0] += 1
        coeffs[1] += 1
        if not odd:
            coeffs[r - 1] += 1
            coeffs[r] += 1
    elif kind == "b2eer":
        for k in range(r):
            coeffs[k] += 1
            coeffs[k + 1] += 1
        if not odd:
            coeffs[r - 1] += 1
            coeffs[r] += 1
    else:
        raise ValueError(f"unknown family {kind!r}")
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


# -- F_2 ----------------------------------------------------------------------

def _a_infinity_f2(e, U, V, upto=None):
    """e + sum_{i=0}^{upto} 2^min(h2(e),i) u^(2^i-1) v^(2^i) prod_{j>=i} 1/(1-u^(2^j-1) v^(2^j))."""
    h = h_p(e, 2)
    total = BiSeries(U, V)
    i = 0
    while 2 ** i <= V and (upto is None or i <= upto):
        term = _mono(U, V, 2 ** i - 1, 2 ** i, 2 ** min(h, i))
        j = i
        while 2 ** j <= V:
            term = term.geometric(2 ** j - 1, 2 ** j)
            j += 1
        total = total + term
        i += 1
    return total


def f2_ideal_series(a, e, U, V):
    return _a_infinity_f2(e, U, V, upto=a)


def f2_series_bivariate(e, U, V):
    one_plus_u = _one(U, V) + _mono(U, V, 1, 0)
    s = _mono(U, V, 0, 1) * (_a_infinity_f2(e, U, V) + e) * one_plus_u
    n = 1
    while 2 * n + 1 <= V:
        s = s + _mono(U, V, 2 * n, 2 * n + 1) * f2_ideal_series(h_p(n, 2), e, U, V) * one_plus_u
        n += 1
    return s


def f2_series(e: int, max_r: int, max_i: int, v_offset: int = 0) -> DimTable:
    """dim H_i(B(2e,e,r); F_2) read from the printed two-variable series.

    The coefficient of u^i v^(r + v_offset) is reported for (r, i).  With the
    literal reading (v_offset=0) the table is flagged as printed; v_offset=1
    lines the series up with direct computation.
    """
    s = f2_series_bivariate(e, max_i, max_r + v_offset)
    return _table_from_series(s, "F2", e, v_offset, max_r, max_i, "f2-closed-form", v_offset == 0)


# -- F_p, p odd -----------------------------------------------------------------

def _prod0(p, U, V):
    s = _mono(U, V, 0, 1).geometric(0, 1)
    i = 1
    while 2 * p ** i <= V:
        s = s.geometric(2 * p ** i - 2, 2 * p ** i)
        i += 1
    return _exterior(s, p, 0, U, V)


def _exterior(s, p, start, U, V):
    j = start
    while 2 * p ** j <= V:
        s = s * (_one(U, V) + _mono(U, V, 2 * p ** j - 1, 2 * p ** j))
        j += 1
    return s


def _poly_tail(s, p, start, U, V):
    i = start
    while 2 * p ** i <= V:
        s = s.geometric(2 * p ** i - 2, 2 * p ** i)
        i += 1
    return s


def _sigma1(p, e, k1, k2, U, V):
    h = h_p(e, p)
    total = BiSeries(U, V)
    r = k1
    while 2 * p ** r <= V and (k2 is None or r <= k2):
        term = _mono(U, V, 2 * p ** r - 1, 2 * p ** r, 2 * p ** min(h, r))
        term = _exterior(_poly_tail(term, p, r + 1, U, V), p, r, U, V)
        total = total + term
        r += 1
    return total


def _sigma2(p, e, k1, k2, U, V):
    h = h_p(e, p)
    total = BiSeries(U, V)
    r = k1
    while 2 * p ** r <= V and (k2 is None or r <= k2):
        # at r = 0 the printed coefficient involves (p-1) p^-1, kept as a fraction
        c = 2 * min(Fraction(p) ** h, (p - 1) * Fraction(p) ** (r - 1))
        term = _mono(U, V, 2 * p ** r - 2, 2 * p ** r, c)
        term = _exterior(_poly_tail(term, p, r, U, V), p, r, U, V)
        total = total + term
        r += 1
    return total


def fp_a_infinity(p, e, U, V):
    if e % 2:
        s = _poly_tail(_one(U, V).geometric(0, 1), p, 1, U, V)
        return _exterior(s, p, 0, U, V)
    return _prod0(p, U, V) + _sigma1(p, e, 0, None, U, V) + _sigma2(p, e, 0, None, U, V) + e


def fp_ideal_i(p, a, e, U, V):
    ee = 1 if e % 2 else e
    return _prod0(p, U, V) + _sigma1(p, ee, 0, a, U, V) + _sigma2(p, ee, 1, a, U, V)


def fp_ideal_k(p, a, e, U, V):
    ee = 1 if e % 2 else e
    s = _prod0(p, U, V) + _sigma2(p, ee, 1, a, U, V)
    if a >= 1:
        s = s + _sigma1(p, ee, 0, a - 1, U, V)
    return s


def fp_series_bivariate(p, e, U, V, outer="v"):
    """Two-variable closed form; ``outer`` picks the variable of the leading (1 + .) factor."""
    inner = _mono(U, V, 0, 1) * fp_a_infinity(p, e, U, V)
    n = 1
    while True:
        h = h_p(n, p)
        d = 2 * (p * n - p ** h)
        if d + 1 > V:
            break
        inner = inner + _mono(U, V, d, d + 1) * fp_ideal_k(p, h, e, U, V)
        n += 1
    n = 1
    while 2 * n + 1 <= V:
        h = h_p(n, p)
        if h == h_p(n + p ** h, p):
            inner = inner + _mono(U, V, 2 * n, 2 * n + 1) * fp_ideal_i(p, 2 * h + 1, e, U, V)
        n += 1
    lead = _one(U, V) + (_mono(U, V, 0, 1) if outer == "v" else _mono(U, V, 1, 0))
    return lead * inner


def fp_series(p: int, e: int, max_r: int, max_i: int, v_offset: int = 0, outer: str = "v") -> DimTable:
    """dim H_i(B(2e,e,r); F_p) from the two-variable closed form, p odd.

    Defaults follow the formula as printed (leading factor 1+v, no shift in v).
    Coefficients that are not integers are left as fractions.
    """
    if p % 2 == 0:
        raise ValueError("p must be an odd prime")
    s = fp_series_bivariate(p, e, max_i, max_r + v_offset, outer)
    notes = []
    if any(c.denominator != 1 for c in s.terms.values()):
        notes.append("non-integral coefficients")
    return _table_from_series(s, f"F{p}", e, v_offset, max_r, max_i, "fp-closed-form",
                              v_offset == 0 and outer == "v", notes)


# -- stable -------------------------------------------------------------------

def stable_series(p: int, max_i: int) -> list[int]:
    """Coefficients of the stable Poincare series P_sA(u) / (1 - u)."""
    U, V = max_i, 0
    s = _one(U, V).geometric(1, 0)
    if p == 2:
        j = 1
        while 2 ** j - 1 <= U:
            s = s.geometric(2 ** j - 1, 0)
            j += 1
    else:
        i = 1
        while 2 * p ** i - 2 <= U:
            s = s.geometric(2 * p ** i - 2, 0)
            i += 1
        j = 0
        while 2 * p ** j - 1 <= U:
            s = s * (_one(U, V) + _mono(U, V, 2 * p ** j - 1, 0))
            j += 1
    return [int(s.coeff(i, 0)) for i in range(max_i + 1)]


def stability_range(p: int, i: int) -> int:
    """Smallest r for which H_i(B(2e,e,r); F_p) is stable."""
    if p == 2:
        return 2 * i + 1
    bound = Fraction((i - 1) * p, p - 1) + 2
    return int(bound) + 1


# -- audit --------------------------------------------------------------------

@dataclass
class AuditEntry:
    r: int
    i: int
    expected: object
    computed: object

    @property
    def match(self):
        return self.expected == self.computed


def audit(table: DimTable, computed: DimTable):
    """Compare every (r, i) present in both tables; returns entries in sorted order."""
    keys = sorted(set(table.entries) & set(computed.entries))
    return [AuditEntry(r, i, table.entries[r, i], computed.entries[r, i]) for r, i in keys]


def mismatches(report):
    return [(a.r, a.i) for a in report if not a.match]
