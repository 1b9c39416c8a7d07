from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from braidhom.cmw_complex import CMWComplex, simples
from braidhom.dl_complex import CoefficientSystem, DLComplex
from braidhom.homology_engine import build, compute, cross_validate
from braidhom.linalg import HomologyGroup
from braidhom.presentations import artin_type, corran_picantin
from braidhom.salvetti_b import build_complex, check_dd_zero_symbolic


def test_dl_boundary_of_square_in_a2():
    d = DLComplex(artin_type("a", 2))
    assert d.format_chain(d.boundary((0,))) == "-1[] + a1[]"
    assert d.format_chain(d.boundary((0, 1))) == \
        "-1[a1] - a1 a2[a1] + a2[a1] + 1[a2] - a1[a2] + a2 a1[a2]"


@pytest.mark.parametrize("p", [artin_type("a", 3), artin_type("b", 3), corran_picantin(3, 3),
                               corran_picantin(2, 4), artin_type("I2", 5)], ids=lambda p: p.name)
def test_dl_dd_zero(p):
    assert DLComplex(p).check_dd_zero()


def test_dl_cell_counts():
    # cells of A_n are subsets of the atoms
    d = DLComplex(artin_type("a", 3))
    assert [len(d.cells(n)) for n in range(4)] == [1, 3, 3, 1]
    assert d.top_degree() == 3


def test_cmw_simples():
    assert len(simples(artin_type("a", 2))) == 5
    assert len(simples(corran_picantin(3, 2))) == 4
    assert len(CMWComplex(artin_type("a", 2)).cells(1)) == 5


@pytest.mark.parametrize("source", ["dl", "cmw"])
def test_sign_coefficients_compose(source):
    res = compute(source, {"preset": "cp", "e": 3, "r": 2}, "Z", system="sign")
    assert res.audits["ddzero"]


@pytest.mark.parametrize("r,e", [(2, 1), (3, 2), (4, 3), (5, 2), (6, 4)])
def test_salvetti_dd_zero(r, e):
    assert check_dd_zero_symbolic(r, e)
    cc = build_complex(r, e)
    for a, b in zip(cc.matrices, cc.matrices[1:]):
        assert (a @ b).is_zero()
    assert cc.dims == [e * comb(r, d) for d in range(r + 1)]
    assert sum(cc.dims) == e * 2**r


def test_salvetti_rational_b42():
    res = compute("salvetti", {"r": 3, "e": 2}, "Q")
    assert res.degrees == [1, 2, 2, 1]


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 5), st.integers(1, 4), st.sampled_from(["Z", "F2", "F3", "Q"]))
def test_euler_characteristic(r, e, ring):
    res = compute("salvetti", {"r": r, "e": e}, ring)
    assert res.audits["euler"] and res.audits["ddzero"]
    if ring == "Z":
        assert res.audits["uct"]


def test_shapiro_dl_equals_salvetti():
    # cyclic coefficients on Artin B_r realise the induced module of the Salvetti complex
    for r in (2, 3):
        for e in (2, 3):
            params = {"presentation": f"artin_b{r}", "e_coeff": e, "special": 0}
            dl = compute("dl", params, "F2", system="cyclic").degrees
            sal = compute("salvetti", {"r": r, "e": e}, "F2").degrees
            assert dl == sal


def test_cross_validate_single_builder_is_empty():
    assert cross_validate({"kind": "unknown"}) == {}


def test_cross_validate_cp():
    rep = cross_validate({"kind": "cp", "e": 3, "r": 2})
    assert all(row["equal"] for rows in rep.values() for row in rows)


def test_cyclic_system_validates():
    p = artin_type("b", 3)
    CoefficientSystem.cyclic(3, 4, 0).validate(p)
    with pytest.raises(ValueError):
        CoefficientSystem([[[2]], [[1]], [[1]]]).validate(p)


def test_max_degree_truncation():
    full = compute("dl", {"preset": "cp", "e": 4, "r": 3}, "Z")
    part = compute("dl", {"preset": "cp", "e": 4, "r": 3}, "Z", max_degree=1)
    assert part.degrees == full.degrees[:2]
    assert full.degrees[2] == HomologyGroup(0, (4,))


def test_build_rejects_unknown_source():
    with pytest.raises(ValueError):
        build("nope", {"e": 2, "r": 2})
