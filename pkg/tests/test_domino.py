from fractions import Fraction

import pytest

from thrall.domino import (
    Domino,
    DominoTableau,
    cl_coefficient,
    column_reading_word,
    enumerate_semistandard,
    enumerate_ydt,
    h_count,
    is_yamanouchi_domino,
    render_ascii,
    spin,
    to_json,
    v_count,
    validate,
)
from thrall.shapes import doubled_square, enumerate_partitions


def dt(outer, inner, *doms):
    return DominoTableau(outer, inner, tuple(Domino(tuple(c), l) for c, l in doms))


THETA4 = dt(
    (6, 6, 4, 4),
    (),
    (((1, 1), (2, 1)), 1),
    (((1, 2), (2, 2)), 1),
    (((1, 3), (2, 3)), 1),
    (((1, 4), (2, 4)), 1),
    (((1, 5), (1, 6)), 1),
    (((2, 5), (2, 6)), 2),
    (((3, 1), (4, 1)), 2),
    (((3, 2), (3, 3)), 2),
    (((4, 2), (4, 3)), 3),
    (((3, 4), (4, 4)), 3),
)


def test_domino_validation():
    with pytest.raises(ValueError):
        Domino(((1, 1), (2, 2)), 1)
    with pytest.raises(ValueError):
        Domino(((1, 1), (1, 2)), 0)
    d = Domino(((2, 1), (1, 1)), 3)
    assert d.cells == ((1, 1), (2, 1)) and d.is_vertical


def test_validate():
    assert validate(THETA4)
    stacked = dt((2, 2), (), (((1, 1), (1, 2)), 1), (((2, 1), (2, 2)), 1))
    assert not validate(stacked)
    assert validate(dt((), ()))
    # incomplete tiling fails
    assert not validate(dt((2, 2), (), (((1, 1), (2, 1)), 1)))


def test_column_reading_word():
    side = dt((2, 2), (), (((1, 1), (2, 1)), 1), (((1, 2), (2, 2)), 1))
    assert column_reading_word(side) == (1, 1)
    single = dt((2,), (), (((1, 1), (1, 2)), 1))
    assert column_reading_word(single) == (1,)
    assert is_yamanouchi_domino(THETA4)
    assert column_reading_word(THETA4) == (2, 1, 3, 2, 1, 1, 3, 1, 2, 1)


def test_spin_counts():
    assert spin(THETA4) == 3
    assert v_count(THETA4) == 6 and h_count(THETA4) == 4
    flat = dt((2,), (), (((1, 1), (1, 2)), 1))
    assert spin(flat) == 0
    vert = dt((2, 2), (), (((1, 1), (2, 1)), 1), (((1, 2), (2, 2)), 1))
    assert spin(vert) == 1
    odd = dt((2, 1, 1), (), (((1, 1), (1, 2)), 1), (((2, 1), (3, 1)), 2))
    assert spin(odd) == Fraction(1, 2)


def test_enumerate_ydt_small():
    out = enumerate_ydt((2, 2), (2,))
    assert len(out) == 1 and v_count(out[0]) == 2
    out = enumerate_ydt((2, 2), (1, 1))
    assert len(out) == 1 and h_count(out[0]) == 2
    with pytest.raises(ValueError):
        enumerate_ydt((2, 1), (1,))


def test_enumerate_ydt_contains_figure_frame():
    found = enumerate_ydt((6, 6, 4, 4), (5, 3, 2))
    assert THETA4 in found


def test_enumeration_matches_filtered_bruteforce():
    for lam in enumerate_partitions(3):
        for mu in enumerate_partitions(6):
            fast = enumerate_ydt(doubled_square(lam), mu)
            slow = [
                d
                for d in enumerate_semistandard(doubled_square(lam), (), mu)
                if is_yamanouchi_domino(d)
            ]
            assert fast == slow


def test_cl_coefficient_small():
    assert cl_coefficient((1,), (2,)) == 1
    assert cl_coefficient((1,), (1, 1)) == 0
    assert cl_coefficient((1, 1), (2, 2)) == 1
    assert cl_coefficient((3, 2), (5, 3, 2)) >= 1
    with pytest.raises(ValueError):
        cl_coefficient((2,), (2,))


def test_json_and_ascii():
    j = to_json(THETA4)
    assert j["outer"] == [6, 6, 4, 4] and len(j["dominoes"]) == 10
    art = render_ascii(THETA4)
    assert "+--+" in art and art.count("3") == 2
    assert render_ascii(dt((), ())) == "(empty)"
