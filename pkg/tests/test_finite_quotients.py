import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from braidhom.finite_quotients import PermGroup, search, search_bruteforce
from braidhom.presentations import GroupPresentation, artin_type, bundled


def test_orders():
    assert PermGroup.symmetric(4).order == 24
    assert PermGroup.alternating(5).order == 60
    assert PermGroup.trivial().order == 1
    assert PermGroup.parse("Sn:3").order == 6
    assert PermGroup.parse("1 0 2\n0 2 1\n").order == 6


@pytest.mark.parametrize("name", ["S3", "A4", "S4"])
def test_multiplication_table_is_a_group(name):
    g = PermGroup.parse(name)
    mul, inv, e = g.tables()
    n = g.order
    assert (mul[e] == np.arange(n)).all() and (mul[:, e] == np.arange(n)).all()
    assert (mul[np.arange(n), inv] == e).all()
    idx = np.arange(n)
    assert (mul[mul[idx[:, None, None], idx[None, :, None]], idx[None, None, :]] ==
            mul[idx[:, None, None], mul[idx[None, :, None], idx[None, None, :]]]).all()


def test_braid_group_onto_s3():
    gp = artin_type("a", 2).as_group()
    res = search(gp, PermGroup.symmetric(3))
    assert res == search_bruteforce(gp, PermGroup.symmetric(3))
    # ordered pairs of distinct transpositions
    assert res.surjective == 6


def test_trivial_target():
    gp = bundled("g24")
    res = search(gp, PermGroup.trivial())
    assert (res.satisfying, res.surjective) == (1, 1)


words = st.lists(st.tuples(st.integers(0, 2), st.sampled_from([1, -1])), min_size=1, max_size=6)


@settings(max_examples=40, deadline=None)
@given(st.lists(words, max_size=3), st.permutations([0, 1, 2]))
def test_search_matches_bruteforce_and_ignores_order(rels, perm):
    gp = GroupPresentation(("a", "b", "c"), tuple(map(tuple, rels)), "random")
    target = PermGroup.symmetric(3)
    ref = search_bruteforce(gp, target)
    assert search(gp, target) == ref
    assert search(gp, target, order=perm) == ref
    assert search(gp, target, count_only=True).satisfying == ref.satisfying


def test_g24_onto_a5():
    res = search(bundled("g24"), PermGroup.alternating(5))
    assert res.surjective == 0 and res.satisfying == 60
