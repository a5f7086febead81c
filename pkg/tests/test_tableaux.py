import pytest
from hypothesis import given
from hypothesis import strategies as st

from thrall.shapes import SkewShape, enumerate_partitions
from thrall.tableaux import (
    Tableau,
    block_maj,
    canonical_one,
    canonical_row_filling,
    descent_set,
    enumerate_lr,
    enumerate_ssyt,
    enumerate_syt,
    format_tableau,
    from_rows,
    is_column_strict,
    is_lr_tableau,
    is_standard,
    is_yamanouchi,
    maj,
    parse_tableau,
    reading_word,
    restrict,
    standardize,
    tableau_leq,
    tableau_sort_key,
    weight,
)
from thrall import symfunc

from conftest import sub_partitions


def test_column_strict():
    assert is_column_strict(from_rows([[1, 1], [2]]))
    assert not is_column_strict(from_rows([[2, 1]]))
    # the straight part of the switching figure
    assert is_column_strict(from_rows([[1, 2, 3], [4, 5]]))
    # repeated entry in a column fails even across a gap
    assert not is_column_strict(Tableau({(1, 1): 2, (3, 1): 2}))
    # NW/SE comparability is global, not only adjacent
    assert not is_column_strict(Tableau({(1, 1): 5, (2, 2): 3}))


def test_weight():
    assert weight(canonical_one((3, 2))) == (3, 2)
    assert weight(from_rows([[1, 2], [3], [4]])) == (1, 1, 1, 1)
    assert weight(parse_tableau("1 1 3/2 3")) == (2, 1, 2)


def test_standardize():
    assert standardize(from_rows([[1, 1], [2]])) == from_rows([[1, 2], [3]])
    for t in enumerate_syt(SkewShape((3, 2))):
        assert standardize(t) == t
    skew = parse_tableau(". . . 7 9/. . 10/6 8")
    assert standardize(skew) == parse_tableau(". . . 2 4/. . 5/1 3")
    with pytest.raises(ValueError):
        standardize(from_rows([[2, 1]]))


@given(st.sampled_from(enumerate_partitions(4) + enumerate_partitions(5)), st.data())
def test_standardize_idempotent_on_ssyt(mu, data):
    weights = [w for w in sub_partitions(mu) if sum(w) == sum(mu)]
    ssyt = [t for w in weights for t in enumerate_ssyt(SkewShape(mu), w)]
    t = data.draw(st.sampled_from(ssyt))
    st_t = standardize(t)
    assert is_standard(st_t)
    assert st_t.cells() == t.cells()
    assert standardize(st_t) == st_t


def test_restrict():
    t1 = parse_tableau("1 3 4 6/2 5")
    assert restrict(t1, 1, 3) == from_rows([[1, 3], [2]])
    assert restrict(t1, 1, 6) == t1
    t = parse_tableau("1 2 4 7 9/3 5 10/6 8")
    assert restrict(t, 6, 10).cells() == {(1, 4), (1, 5), (2, 3), (3, 1), (3, 2)}
    with pytest.raises(ValueError):
        restrict(t1, 1, 7)


def test_descents_and_maj():
    assert descent_set(from_rows([[1, 3, 4, 5], [2, 6]])) == {1, 5}
    assert descent_set(from_rows([[1, 2, 3, 4]])) == set()
    assert descent_set(from_rows([[1], [2], [3], [4]])) == {1, 2, 3}
    assert maj(from_rows([[1, 3], [2]])) == 1
    assert maj(from_rows([[1, 2, 3]])) == 0
    assert maj(from_rows([[1, 2], [3, 4]])) == 2


def test_block_maj():
    lam = (4, 2)
    t = from_rows([[1, 3, 4, 5], [2, 6]])
    assert (block_maj(t, lam, 1), block_maj(t, lam, 2)) == (1, 1)
    t2 = from_rows([[1, 2, 5], [3, 6], [4]])
    assert (block_maj(t2, lam, 1), block_maj(t2, lam, 2)) == (5, 1)
    # a single block reduces to maj
    for mu in enumerate_partitions(6):
        for t in enumerate_syt(SkewShape(mu)):
            assert block_maj(t, (6,), 1) == maj(t)


def test_block_maj_sums_to_maj_with_full_blocks():
    # with lam = (n) there is one block; with general lam the block
    # contributions never exceed maj
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            for t in enumerate_syt(SkewShape(mu)):
                for lam in enumerate_partitions(n):
                    parts = sum(
                        block_maj(t, lam, i) for i in range(1, len(lam) + 1)
                    )
                    assert parts <= maj(t)


def test_reading_word():
    assert reading_word(from_rows([[1, 2], [3]])) == (3, 1, 2)
    assert reading_word(from_rows([[1, 3], [2]])) == (2, 1, 3)
    omega_l = parse_tableau(". . . 1 1 1/. . . 2 2/1 1 3/2 3")
    assert reading_word(omega_l) == (2, 3, 1, 1, 3, 2, 2, 1, 1, 1)


def test_yamanouchi():
    assert is_yamanouchi((2, 1, 1))
    assert not is_yamanouchi((1, 2))
    assert is_yamanouchi(())
    assert is_yamanouchi(reading_word(parse_tableau(". . . 1 1/. . 2/1 2")))


def test_is_lr_tableau():
    d = parse_tableau(". . . 1 1/. . 2/1 2")
    assert is_lr_tableau(d, (3, 2))
    assert is_lr_tableau(canonical_one((4, 2, 1)), (4, 2, 1))
    assert not is_lr_tableau(Tableau({(1, 1): 1, (1, 2): 2}), (1, 1))


def test_enumerate_syt_counts():
    assert len(enumerate_syt(SkewShape((2, 2)))) == 2
    assert len(enumerate_syt(SkewShape((7,)))) == 1
    total = sum(len(enumerate_syt(SkewShape(mu))) ** 2 for mu in enumerate_partitions(4))
    assert total == 24
    # hook length formula cross-check at n = 6
    from math import factorial

    for mu in enumerate_partitions(6):
        hooks = 1
        conj = [sum(1 for x in mu if x > j) for j in range(mu[0])]
        for i, row in enumerate(mu):
            for j in range(row):
                hooks *= (row - j) + (conj[j] - i) - 1
        assert len(enumerate_syt(SkewShape(mu))) == factorial(6) // hooks


def test_enumerate_syt_members_standard():
    for t in enumerate_syt(SkewShape((4, 3, 1), (2, 1))):
        assert is_standard(t)


def test_enumerate_lr():
    d = parse_tableau(". . . 1 1/. . 2/1 2")
    found = enumerate_lr(SkewShape((5, 3, 2), (3, 2)), (3, 2))
    assert d in found
    for mu in enumerate_partitions(5):
        assert enumerate_lr(SkewShape(mu), mu) == [canonical_one(mu)]
    assert len(enumerate_lr(SkewShape((2, 2), (1,)), (2, 1))) == 1


def test_lr_counts_match_schur_products():
    # |LR(mu/lam, nu)| equals the coefficient of s_mu in s_lam * s_nu
    for total in range(1, 9):
        for a in range(total + 1):
            for lam in enumerate_partitions(a):
                for nu in enumerate_partitions(total - a):
                    prod = symfunc.p_to_schur(
                        symfunc.schur_to_p(lam) * symfunc.schur_to_p(nu)
                    )
                    for mu in enumerate_partitions(total):
                        if not all(
                            lam[i] <= mu[i] for i in range(len(lam)) if i < len(mu)
                        ) or len(lam) > len(mu):
                            continue
                        count = len(enumerate_lr(SkewShape(mu, lam), nu))
                        assert count == symfunc.schur_coefficient(prod, mu), (
                            lam,
                            nu,
                            mu,
                        )


def test_total_order():
    p = from_rows([[1, 3], [2]])
    q = from_rows([[1, 2], [3]])
    assert reading_word(p) == (2, 1, 3) and reading_word(q) == (3, 1, 2)
    assert tableau_leq(p, q) and not tableau_leq(q, p)
    assert tableau_leq(p, p)
    assert tableau_leq(from_rows([[1, 2]]), from_rows([[1, 2, 3]]))
    # antisymmetric + transitive + total on all straight SYT of size <= 5
    pool = [
        t
        for n in range(6)
        for mu in enumerate_partitions(n)
        for t in enumerate_syt(SkewShape(mu))
    ]
    keys = [tableau_sort_key(t) for t in pool]
    assert len(set(keys)) == len(keys)  # the key is injective on the pool


def test_canonical_tableaux():
    assert canonical_one((3, 2)) == parse_tableau("1 1 1/2 2")
    assert canonical_row_filling((3, 2)) == parse_tableau("1 2 3/4 5")
    assert canonical_one(()) == Tableau({})


def test_text_format_round_trip():
    t = parse_tableau(". . 2 4/. . 5/1 3")
    assert parse_tableau(format_tableau(t)) == t
    assert format_tableau(Tableau({})) == ""
