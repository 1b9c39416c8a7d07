from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from braidhom.homology_engine import compute
from braidhom.series import (BiSeries, audit, f2_series, fp_series, h_p, lehrer_rational, mismatches,
                             stability_range, stable_series)


def test_h_p_exhaustive():
    for p in (2, 3, 5):
        for n in range(1, 10**4 + 1):
            h = h_p(n, p)
            assert n % p**h == 0 and (n // p**h) % p != 0


@settings(max_examples=50)
@given(st.dictionaries(st.tuples(st.integers(0, 6), st.integers(0, 6)), st.integers(-3, 3)),
       st.dictionaries(st.tuples(st.integers(0, 6), st.integers(0, 6)), st.integers(-3, 3)))
def test_truncated_product_is_truncation_of_full_product(a, b):
    small = BiSeries(4, 4, a) * BiSeries(4, 4, b)
    big = BiSeries(12, 12, a) * BiSeries(12, 12, b)
    for (x, y), c in big.terms.items():
        if x <= 4 and y <= 4:
            assert small.coeff(x, y) == c


def test_geometric_series():
    s = BiSeries.monomial(6, 6, 0, 0).geometric(1, 1)
    assert all(s.coeff(k, k) == 1 for k in range(7))
    assert s.coeff(1, 0) == Fraction(0)


def test_lehrer_examples():
    assert lehrer_rational("beer", 3, 4) == [1, 1]
    assert lehrer_rational("beer", 2, 4) == [1, 1, 0, 1, 1]
    assert lehrer_rational("b2eer", 1, 3) == [1, 2, 2, 1]
    assert lehrer_rational("b2eer", 2, 4) == [1, 2, 2, 3, 2]
    with pytest.raises(ValueError):
        lehrer_rational("other", 2, 3)


def _multiset_count(parts, n):
    ways = [1] + [0] * n
    for d in parts:
        for k in range(d, n + 1):
            ways[k] += ways[k - d]
    return ways


def test_stable_f2_series_counts_partitions():
    # polynomial algebra on generators of degrees 1, 1, 3, 7, 15, ...
    n = 20
    parts = [1, 1] + [2**j - 1 for j in range(2, 6) if 2**j - 1 <= n]
    assert stable_series(2, n) == _multiset_count(parts, n)


def test_stable_series_agrees_with_large_rank():
    f2 = compute("salvetti", {"r": 9, "e": 1}, "F2").degrees
    assert f2[:5] == stable_series(2, 4)
    f3 = compute("salvetti", {"r": 9, "e": 2}, "F3").degrees
    assert f3[:6] == stable_series(3, 5)


def test_stability_range():
    assert [stability_range(2, i) for i in range(4)] == [1, 3, 5, 7]
    assert [stability_range(3, i) for i in range(5)] == [1, 3, 4, 6, 7]


def test_f2_closed_form_with_shift_matches_computation():
    for e in (1, 2, 4):
        table = f2_series(e, 6, 6, v_offset=1)
        assert not table.as_printed
        for r in range(2, 7):
            assert table.column(r)[: r + 1] == compute("salvetti", {"r": r, "e": e}, "F2").degrees


def test_f2_literal_reading_is_flagged():
    assert f2_series(2, 4, 4).as_printed


def test_fp_series_notes_fractions():
    table = fp_series(3, 2, 5, 5)
    assert table.as_printed
    assert "non-integral coefficients" in table.notes


def test_audit_reports_mismatches():
    t = f2_series(1, 4, 4, v_offset=1)
    other = f2_series(1, 4, 4, v_offset=1)
    other.entries[3, 2] += 1
    rep = audit(other, t)
    assert mismatches(rep) == [(3, 2)]
    assert "r,i,dim" in t.to_csv()
