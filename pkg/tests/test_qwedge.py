import random

import pytest
from hypothesis import given, settings, strategies as st

from crystalkit.fockcrystal import _matrix_act, all_matrices
from crystalkit.ratfun import ONE, Q, QINV, LaurentPoly, RatFun
from crystalkit.qwedge import (GeneratorAction, WedgeElement, act, act_tau, act_word, bar,
                               base_change_csv, bi_weights, canonical_basis, diagonal_sums, divided_power, e,
                               f, is_standard, k, pairing, rep_crystal_op, side_int,
                               standard_word, straighten, straighten_terms, string_decomposition,
                               wedge, weight_space, word_matrix)


def w(*letters, m=2, n=2):
    return WedgeElement({tuple(letters): ONE}, m, n)


def test_standard_order():
    assert is_standard(((2, 1), (1, 1), (2, 2)))
    assert not is_standard(((1, 1), (2, 1)))
    assert not is_standard(((1, 2), (1, 1)))
    assert standard_word(((1, 1), (1, 0))) == ((2, 1), (1, 1), (1, 2))
    assert word_matrix(((2, 1), (1, 2)), 2, 2) == ((0, 1), (1, 0))


def test_straighten_examples():
    assert straighten([(1, 1), (1, 1)], m=2, n=2).is_zero()
    # the swap rule in a column: (1,1)(2,1) = -q^-1 (2,1)(1,1)
    assert straighten([(1, 1), (2, 1)], m=2, n=2) == w((2, 1), (1, 1)).scale(-QINV)
    assert straighten([(2, 1), (1, 1)], m=2, n=2) == w((2, 1), (1, 1))
    x = straighten([(1, 2), (2, 1)], m=2, n=2)
    assert x == w((2, 1), (1, 2)) + w((1, 1), (2, 2)).scale(Q - QINV)
    # rows: (1,2)(1,1) = q (1,1)(1,2)
    assert straighten([(1, 2), (1, 1)], m=2, n=2) == w((1, 1), (1, 2)).scale(Q)


def test_straighten_strategy_check():
    with pytest.raises(ValueError):
        straighten_terms([(1, 1)], strategy="middle")


def test_wedge_examples():
    one = WedgeElement.unit(2, 2)
    x = w((1, 1), (2, 2))
    assert wedge(x, one) == x
    assert wedge(w((1, 1)), w((1, 1))).is_zero()
    assert wedge(w((1, 1)), w((2, 2))) == x


def test_action_examples():
    x = w((1, 1), m=2, n=1)
    assert act(f(1), x) == w((2, 1), m=2, n=1)
    assert act(e(1), x).is_zero()
    y = w((1, 1), (2, 2))
    assert act(k(1), y) == y.scale(Q)
    with pytest.raises(ValueError):
        act(f(2), x)


def test_pairing_examples():
    x, y = w((1, 1)), w((2, 2))
    assert pairing(x, x) == ONE
    assert pairing(x, y) == 0


def test_bar_examples():
    assert bar(w((1, 1))) == w((1, 1))
    assert bar(w((1, 1), (2, 2))) == w((1, 1), (2, 2))
    anti = w((2, 1), (1, 2))
    assert bar(anti) == anti + w((1, 1), (2, 2)).scale(Q - QINV)


def test_canonical_basis_example():
    cb = canonical_basis(2, 2, (1, 1), (1, 1))
    anti = ((0, 1), (1, 0))
    assert cb.elements[anti] == w((2, 1), (1, 2)) + w((1, 1), (2, 2)).scale(Q)
    diag = ((1, 0), (0, 1))
    assert cb.elements[diag] == w((1, 1), (2, 2))
    assert base_change_csv(cb) == "monomial,01/10,10/01\n01/10,1,0\n10/01,1*q^1,1\n"


def test_canonical_basis_2x2():
    for rows, cols in bi_weights(2, 2):
        cb = canonical_basis(2, 2, rows, cols)
        for M, G in cb.elements.items():
            assert bar(G) == G
            assert G.coeff(standard_word(M)) == ONE


def test_diagonal_sums():
    assert diagonal_sums(((1, 0), (0, 1))) == (0, 2, 0)
    assert diagonal_sums(((0, 1), (1, 0))) == (1, 0, 1)
    assert len(weight_space((1, 1), (1, 1))) == 2


def test_side_int_p():
    # [2]_p = p + p^-1 = -(q + q^-1)
    assert side_int("p", 2) == -(Q + QINV)
    assert side_int("p", 3) == side_int("q", 3)


def test_string_decomposition_reassembles():
    # G(anti) lies on a single 1-string, the plain monomial does not
    g = w((2, 1), (1, 2)) + w((1, 1), (2, 2)).scale(Q)
    assert set(string_decomposition(1, g)) == {1}
    x = w((2, 1), (1, 2))
    parts = string_decomposition(1, x)
    assert set(parts) == {0, 1}
    total = WedgeElement._raw({}, 2, 2)
    for kk, v in parts.items():
        assert act(e(1), v).is_zero()
        total = total + divided_power("f", 1, kk, v)
    assert total == x
    with pytest.raises(ValueError):
        string_decomposition(1, w((1, 1)) + w((2, 2)))


def test_rep_crystal_lower_examples():
    x = w((1, 1), m=2, n=1)
    assert rep_crystal_op("f", 1, x) == w((2, 1), m=2, n=1)
    assert rep_crystal_op("e", 1, x).is_zero()


def test_rep_crystal_reduces_2x2():
    for M in all_matrices(2, 2):
        x = WedgeElement.monomial(M)
        for side, variant in (("q", "lower"), ("p", "upper")):
            for op in "ef":
                y = rep_crystal_op(op, 1, x, side, variant)
                assert y.is_integral()
                target = _matrix_act(op, (side, 1), M)
                expect = {} if target is None else {standard_word(target): 1}
                assert y.at_zero() == expect


def test_json_round_trip():
    x = w((2, 1), (1, 2)) + w((1, 1), (2, 2)).scale(Q - QINV)
    assert WedgeElement.from_json(x.to_json(), 2, 2) == x


letters33 = st.tuples(st.integers(1, 3), st.integers(1, 3))


@settings(max_examples=200, deadline=None)
@given(st.lists(letters33, min_size=2, max_size=5))
def test_straighten_confluent(word):
    assert straighten_terms(word, "left") == straighten_terms(word, "right")


@settings(max_examples=100, deadline=None)
@given(st.lists(letters33, min_size=1, max_size=4))
def test_bar_involution(word):
    x = straighten(word, m=3, n=3)
    assert bar(bar(x)) == x


def random_element(rng, mats, m, n):
    x = WedgeElement._raw({}, m, n)
    for _ in range(3):
        c = LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3)})
        x = x + WedgeElement.monomial(rng.choice(mats)).scale(c)
    return x


def test_actions_commute_2x3():
    rng = random.Random(7)
    mats = list(all_matrices(2, 3))
    qs = [GeneratorAction("q", kd, 1) for kd in "ef"]
    ps = [GeneratorAction("p", kd, i) for kd in "ef" for i in (1, 2)]
    for _ in range(60):
        x = random_element(rng, mats, 2, 3)
        g, h = rng.choice(qs), rng.choice(ps)
        assert act(g, act(h, x)) == act(h, act(g, x))


def test_ef_relation_p_side():
    for M in all_matrices(2, 2):
        x = WedgeElement.monomial(M)
        lhs = act(e(1, "p"), act(f(1, "p"), x)) - act(f(1, "p"), act(e(1, "p"), x))
        cols = x.weight()[1]
        assert lhs == x.scale(side_int("p", cols[0] - cols[1]))


def test_adjunction_q_side():
    mats = list(all_matrices(2, 2))
    for M in mats:
        x = WedgeElement.monomial(M)
        for g in (e(1), f(1), k(2)):
            for N in mats:
                y = WedgeElement.monomial(N)
                assert pairing(act(g, x), y) == pairing(x, act_tau(g, y))


def test_act_word_order():
    x = w((1, 1), m=3, n=1)
    assert act_word([f(2), f(1)], x) == w((3, 1), m=3, n=1)
    assert act_word([f(1), f(2)], x).is_zero()
