import sympy
from hypothesis import given, strategies as st

from braidhom.qanalog import (binom_minus1, binom_minus1_closed, gauss_binom, lemma_valuation,
                              mixed_radix_digits, p_valuation, q_integer)

q = sympy.symbols("q")


def sympy_gauss(m, i):
    num = sympy.prod([1 - q ** (m - k) for k in range(i)])
    den = sympy.prod([1 - q ** (k + 1) for k in range(i)])
    return sympy.Poly(sympy.cancel(num / den), q)


def test_gauss_binom_matches_product_formula():
    for m in range(9):
        for i in range(m + 1):
            ours = gauss_binom(m, i).coeff_list()
            ref = [int(c) for c in reversed(sympy_gauss(m, i).all_coeffs())]
            assert ours == ref


def test_q_integer_at_one():
    assert q_integer(7)(1) == 7


@given(st.integers(0, 40).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, m))))
def test_closed_form_at_minus_one(mi):
    m, i = mi
    assert binom_minus1(m, i) == binom_minus1_closed(m, i)


def test_binary_digits_for_p2():
    for n in range(200):
        assert mixed_radix_digits(n, 2) == [int(b) for b in reversed(bin(n)[2:])]


@given(st.integers(1, 10**6), st.sampled_from([2, 3, 5, 7]))
def test_valuation_definition(n, p):
    h = p_valuation(n, p)
    assert n % p**h == 0 and n % p ** (h + 1) != 0


def test_digit_rule_small_cases():
    # [4,1]_{-1} vanishes, [4,2]_{-1} = 2, [12,6]_{-1} = C(6,3) = 20
    assert lemma_valuation(4, 1, 2) is None
    assert lemma_valuation(4, 2, 2) == 1
    assert binom_minus1(12, 6) == 20
    assert lemma_valuation(12, 6, 2) == p_valuation(20, 2)
    assert lemma_valuation(12, 6, 5) == 1
