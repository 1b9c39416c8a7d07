import pytest

from braidhom.presentations import (NonHomogeneousError, PresentationSyntaxError, artin_type, bundled,
                                    corran_picantin, load, parse_presentation, semidirect_presentation,
                                    serialize)

BUNDLED = ["g24", "b334"] + [f"even_g{n}" for n in (12, 13, 22, 23, 24, 27, 28, 29, 30, 31, 33, 34, 35, 36, 37)]


@pytest.mark.parametrize("key", BUNDLED)
def test_bundled_round_trip(key):
    p = bundled(key)
    assert parse_presentation(serialize(p)) == p


def test_corran_picantin_shape():
    p = corran_picantin(3, 4)
    assert p.generators == ("s4", "s3", "t0", "t1", "t2")
    assert p.is_homogeneous()
    # 3 cyclic t-relations, 3 braid s3/t, 3 commuting s4/t, one braid s3/s4
    assert len(p.relations) == 10
    assert len(corran_picantin(5, 2).relations) == 10


def test_artin_types():
    assert len(artin_type("a", 3).generators) == 3
    assert len(artin_type("b", 4).relations) == 6
    assert bundled("artin_i2_5").relations[0][0] == (0, 1, 0, 1, 0)


def test_semidirect_needs_rank_three():
    assert len(semidirect_presentation(2, 3).generators) >= 3
    with pytest.raises(ValueError):
        semidirect_presentation(2, 2)


@pytest.mark.parametrize("text,err", [
    ("gens: a\n", PresentationSyntaxError),
    ("kind: monoid\nrel: a = a\n", PresentationSyntaxError),
    ("kind: monoid\ngens: a b\nrel: a b = a\n", NonHomogeneousError),
    ("kind: monoid\ngens: a\nrel: a^-1 = a\n", PresentationSyntaxError),
    ("kind: group\ngens: a\nrel: a = c\n", PresentationSyntaxError),
    ("kind: group\ngens: a a\n", PresentationSyntaxError),
])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_presentation(text)


def test_load_from_path(tmp_path):
    f = tmp_path / "x.pres"
    f.write_text("kind: group\ngens: x y\nrelator: x y x^-1 y^-1\n")
    assert load(str(f)).generators == ("x", "y")
    with pytest.raises(KeyError):
        bundled("nothing_here")
