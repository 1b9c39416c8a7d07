import sympy
from hypothesis import given, settings, strategies as st

from braidhom.linalg import GF, QQ, ExactMatrix, HomologyGroup, homology_pair, rank, snf
from braidhom.linalg import NotAComplexError

matrices = st.integers(1, 6).flatmap(lambda r: st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


def sympy_invariant_factors(rows):
    from sympy.matrices.normalforms import smith_normal_form
    s = smith_normal_form(sympy.Matrix(rows), domain=sympy.ZZ)
    return sorted(abs(int(s[i, i])) for i in range(min(s.shape)) if s[i, i] != 0)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_matches_sympy(rows):
    ours = sorted(snf(ExactMatrix.from_dense(rows)).invariant_factors)
    assert ours == sympy_invariant_factors(rows)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_ranks_over_fields(rows):
    m = ExactMatrix.from_dense(rows)
    assert rank(m, QQ) == sympy.Matrix(rows).rank()
    for p in (2, 3):
        assert rank(m, GF(p)) == _rank_mod(rows, p) <= rank(m, QQ)


def _rank_mod(rows, p):
    a = [[x % p for x in r] for r in rows]
    rk = 0
    for c in range(len(a[0])):
        piv = next((i for i in range(rk, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        inv = pow(a[rk][c], -1, p)
        a[rk] = [x * inv % p for x in a[rk]]
        for i in range(len(a)):
            if i != rk and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rk])]
        rk += 1
    return rk


def test_homology_of_circle_and_rp2():
    d1 = ExactMatrix.from_dense([[0]])
    assert homology_pair(d1, ExactMatrix(1, 0), QQ) == 1
    # RP^2 cellular: d2 = 2
    z = ExactMatrix.from_dense([[2]])
    from braidhom.linalg import ZZ
    assert homology_pair(ExactMatrix.from_dense([[0]]), z, ZZ) == HomologyGroup(0, (2,))
    assert homology_pair(ExactMatrix.from_dense([[0]]), z, GF(2)) == 1


def test_non_complex_rejected():
    import pytest
    with pytest.raises(NotAComplexError):
        homology_pair(ExactMatrix.from_dense([[1]]), ExactMatrix.from_dense([[1]]), QQ)


def test_dense_roundtrip_and_dump():
    m = ExactMatrix.from_dense([[1, 0, -3], [0, 0, 7]])
    assert m.to_dense() == [[1, 0, -3], [0, 0, 7]]
    assert ExactMatrix.load(m.dump()).to_dense() == m.to_dense()
    assert m.transpose().to_dense() == [[1, 0], [0, 0], [-3, 7]]
