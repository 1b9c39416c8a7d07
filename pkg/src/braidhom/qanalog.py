"""Gaussian binomials, their values at q = -1, and p-adic valuations of those values.

Polynomials are exact: coefficients are Python integers and every q-analog is
built by the q-Pascal recursion, so no division ever happens.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


class IntPolynomial:
    """Univariate polynomial with integer coefficients, stored sparsely."""

    __slots__ = ("_c",)

    def __init__(self, coefficients=None):
        c = {}
        if coefficients:
            items = coefficients.items() if isinstance(coefficients, dict) else enumerate(coefficients)
            for k, v in items:
                if v:
                    if k < 0:
                        raise ValueError("negative exponent")
                    c[k] = c.get(k, 0) + v
                    if not c[k]:
                        del c[k]
        self._c = c

    @classmethod
    def constant(cls, a):
        return cls({0: a})

    @classmethod
    def monomial(cls, k, a=1):
        return cls({k: a})

    @property
    def coefficients(self):
        return dict(self._c)

    def degree(self):
        return max(self._c) if self._c else -1

    def coeff_list(self):
        return [self._c.get(k, 0) for k in range(self.degree() + 1)]

    def is_zero(self):
        return not self._c

    def __call__(self, x):
        return sum(v * x**k for k, v in self._c.items())

    def __add__(self, other):
        other = _as_poly(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return IntPolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        c = {}
        for a, u in self._c.items():
            for b, v in other._c.items():
                c[a + b] = c.get(a + b, 0) + u * v
        return IntPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = IntPolynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return isinstance(other, IntPolynomial) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for k in sorted(self._c):
            v = self._c[k]
            if k == 0:
                terms.append(str(v))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if v == 1 else f"-{mono}" if v == -1 else f"{v}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _as_poly(x):
    return x if isinstance(x, IntPolynomial) else IntPolynomial.constant(x)


# A polynomial in t; same representation, separate name for readability.
TPoly = IntPolynomial


@lru_cache(maxsize=None)
def gauss_binom(m: int, i: int) -> IntPolynomial:
    """Gaussian binomial [m choose i]_q via [m,i] = [m-1,i-1] + q^i [m-1,i]."""
    if not 0 <= i <= m:
        raise ValueError(f"need 0 <= i <= m, got m={m}, i={i}")
    if i == 0 or i == m:
        return IntPolynomial.constant(1)
    return gauss_binom(m - 1, i - 1) + IntPolynomial.monomial(i) * gauss_binom(m - 1, i)


def q_integer(m: int) -> IntPolynomial:
    """[m]_q = 1 + q + ... + q^(m-1)."""
    return IntPolynomial([1] * m)


@lru_cache(maxsize=None)
def binom_minus1(m: int, i: int) -> int:
    """The Gaussian binomial evaluated at q = -1."""
    return gauss_binom(m, i)(-1)


def binom_minus1_closed(m: int, i: int) -> int:
    """Closed form: 0 if m even and i odd, else C(m//2, i//2)."""
    if not 0 <= i <= m:
        raise ValueError(f"need 0 <= i <= m, got m={m}, i={i}")
    if m % 2 == 0 and i % 2 == 1:
        return 0
    return comb(m // 2, i // 2)


def primed_binom_minus1(m: int, i: int) -> TPoly:
    """[m,i]'_{q,t} at q = -1, i.e. [m,i]_{-1} * prod_{j=i}^{m-1} (1 + t(-1)^j)."""
    b = binom_minus1(m, i)
    if b == 0:
        return TPoly()
    n_even = sum(1 for j in range(i, m) if j % 2 == 0)
    n_odd = (m - i) - n_even
    return TPoly.constant(b) * TPoly([1, 1]) ** n_even * TPoly([1, -1]) ** n_odd


def p_valuation(n: int, p: int) -> int:
    """Exponent of p in the nonzero integer n."""
    if n == 0:
        raise ValueError("valuation of zero")
    n = abs(n)
    h = 0
    while n % p == 0:
        n //= p
        h += 1
    return h


def mixed_radix_digits(n: int, p: int) -> list[int]:
    """Digits of n in the radix 1, 2, 2p, 2p^2, ... (first digit 0/1, then base p).

    For p = 2 this is ordinary binary.
    """
    digits = [n % 2]
    n //= 2
    while n:
        digits.append(n % p)
        n //= p
    return digits


def lemma_valuation(m: int, i: int, p: int) -> int | None:
    """Valuation of [m,i]_{-1} at p from the digit rule alone.

    Writes i and m - i in the radix 1, 2, 2p, 2p^2, ... and adds them digit by
    digit.  A carry out of the lowest (binary) digit means the value is 0, in
    which case None is returned.  Otherwise the number of carries is the
    exponent of p.
    """
    if not 0 <= i <= m:
        raise ValueError(f"need 0 <= i <= m, got m={m}, i={i}")
    a = mixed_radix_digits(i, p)
    b = mixed_radix_digits(m - i, p)
    n = max(len(a), len(b))
    a += [0] * (n - len(a))
    b += [0] * (n - len(b))
    if a[0] + b[0] >= 2:
        return None
    carries = 0
    carry = 0
    for k in range(1, n):
        s = a[k] + b[k] + carry
        carry = 1 if s >= p else 0
        carries += carry
    return carries


def lemma_nonzero_mod_p(m: int, i: int, p: int) -> bool:
    """Digit criterion for [m,i]_{-1} being nonzero modulo p (no carries at all)."""
    return lemma_valuation(m, i, p) == 0


def valuation_table(max_m: int, p: int):
    """Rows (m, i, value, digit-rule valuation, factorization valuation)."""
    rows = []
    for m in range(max_m + 1):
        for i in range(m + 1):
            v = binom_minus1(m, i)
            rows.append((m, i, v, lemma_valuation(m, i, p), None if v == 0 else p_valuation(v, p)))
    return rows
