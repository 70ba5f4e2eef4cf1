import pytest
from hypothesis import given, settings, strategies as st

from crystalkit.charalg import (MINUS, PLUS, BudgetExceeded, TruncatedSeries, cauchy_mismatch,
                                cauchy_sides, e, format_element, generating_series,
                                grothendieck_product, h, loewy_length, m_coeff, multiply,
                                n_coeff, normal_order, reverse_transition, schur,
                                socle_layer_general, socle_layers, to_h_family, transition_product,
                                unit, verify_cauchy, verify_transition_inverse)
from crystalkit.partitions import PartitionPair, partitions_up_to
from crystalkit.tableaux import tensor_decompose

P = PartitionPair.of


def el(*words):
    out = {}
    for c, w in words:
        out[tuple(w)] = out.get(tuple(w), 0) + c
    return out


def test_normal_order_examples():
    assert normal_order([h(PLUS, 1), h(MINUS, 1)]) == el((1, [h(MINUS, 1), h(PLUS, 1)]), (1, []))
    assert normal_order([h(MINUS, 2), h(PLUS, 3)]) == el((1, [h(MINUS, 2), h(PLUS, 3)]))
    assert normal_order([h(PLUS, 2), h(MINUS, 2)]) == el(
        (1, [h(MINUS, 2), h(PLUS, 2)]), (1, [h(MINUS, 1), h(PLUS, 1)]), (1, []))
    assert format_element(normal_order([h(PLUS, 1), h(MINUS, 1)])) == "1 + 1*h-1*h+1"


def test_normal_order_same_family_only():
    with pytest.raises(ValueError):
        normal_order([h(PLUS, 1), e(MINUS, 1)])


def test_plus_first_orientation():
    x = normal_order([h(MINUS, 1), h(PLUS, 1)], minus_first=False)
    assert x == el((1, [h(PLUS, 1), h(MINUS, 1)]), (-1, []))


def test_schur_examples():
    assert schur(PLUS, (1,)) == el((1, [h(PLUS, 1)]))
    assert schur(PLUS, (1, 1)) == el((1, [h(PLUS, 1), h(PLUS, 1)]), (-1, [h(PLUS, 2)]))
    assert schur(MINUS, (2,)) == el((1, [h(MINUS, 2)]))
    assert schur(PLUS, ()) == unit()


def test_schur_e_family_agrees():
    for lam in partitions_up_to(4):
        assert to_h_family(schur(PLUS, lam, family="e")) == schur(PLUS, lam)


def test_e_relation_in_ring():
    # e+_1 e-_1 rewrites like h, and agrees with the h-family image
    lhs = to_h_family(normal_order([e(PLUS, 1), e(MINUS, 1)]))
    rhs = normal_order([h(PLUS, 1), h(MINUS, 1)])
    assert lhs == rhs
    lhs = to_h_family(normal_order([e(PLUS, 2), e(MINUS, 1)]))
    rhs = normal_order([h(PLUS, 1), h(PLUS, 1), h(MINUS, 1)])
    rhs2 = normal_order([h(PLUS, 2), h(MINUS, 1)])
    assert lhs == {k: rhs.get(k, 0) - rhs2.get(k, 0) for k in set(rhs) | set(rhs2)
                   if rhs.get(k, 0) - rhs2.get(k, 0)}


def test_transition_coefficients():
    assert m_coeff((1,), (1,), (), ()) == 1
    assert n_coeff((1,), (1,), (), ()) == -1
    for mu in partitions_up_to(3):
        for nu in partitions_up_to(3):
            assert m_coeff(mu, nu, mu, nu) == 1


@pytest.mark.parametrize("D", [0, 1, 2, 3])
def test_transition_inverse(D):
    assert verify_transition_inverse(D)


def test_transition_products():
    for mu in partitions_up_to(2):
        for nu in partitions_up_to(2):
            assert multiply(schur(PLUS, mu), schur(MINUS, nu)) == transition_product(mu, nu)
            assert multiply(schur(MINUS, nu), schur(PLUS, mu)) == reverse_transition(mu, nu)


def test_socle_example():
    layers = socle_layers(P((1,), ()), P((), (1,)))
    assert [dict(t.entries) for t in layers] == [{P((1,), (1,)): 1}, {P((), ()): 1}]
    assert loewy_length(P((1,), ()), P((), (1,))) == 2
    assert layers[1].to_json() == {"layer": 1, "entries": [{"pair": {"plus": [], "minus": []}, "mult": 1}]}


def test_socle_unit():
    gd = P((2, 1), (1,))
    layers = socle_layers(P((), ()), gd)
    assert dict(layers[0].entries) == {gd: 1}
    assert all(not t.entries for t in layers[1:])


def test_socle_layer_range():
    with pytest.raises(ValueError):
        socle_layer_general(P((1,), ()), P((), (1,)), 2)


def test_socle_beta_gamma_empty_reduces_to_m():
    # (alpha, 0) x (0, delta): layer d has multiplicities m^{alpha, delta}_{phi, psi}
    for alpha in partitions_up_to(3):
        for delta in partitions_up_to(3):
            for t in socle_layers(P(alpha, ()), P((), delta)):
                for pr, c in t.entries.items():
                    assert c == m_coeff(alpha, delta, pr.plus, pr.minus)
                size = min(alpha.size, delta.size) - t.layer
                assert sum(t.entries.values()) == sum(
                    m_coeff(alpha, delta, z, w) for z in partitions_up_to(alpha.size)
                    for w in partitions_up_to(delta.size)
                    if z.size == alpha.size - t.layer and w.size == delta.size - t.layer)


@pytest.mark.parametrize("ab,gd", [(P((1,), ()), P((), (1,))), (P((2,), ()), P((), (1, 1))),
                                   (P((1,), (1,)), P((1,), ())), (P((1,), (1,)), P((), (1,))),
                                   (P((2,), (1,)), P((), (1,)))])
def test_socle_against_crystal(ab, gd):
    # all layers together give the composition factors, which the crystal of
    # the truncated tensor product counts; layer 0 is its top-degree part
    N = sum(x.size for x in (*ab, *gd)) + 2
    crystal = dict(tensor_decompose(ab, gd, N, method="highest"))
    layers = socle_layers(ab, gd)
    total = {}
    for t in layers:
        for pr, c in t.entries.items():
            total[pr] = total.get(pr, 0) + c
    assert total == crystal
    M, Nn = ab.plus.size + gd.plus.size, ab.minus.size + gd.minus.size
    top = {pr: c for pr, c in crystal.items() if pr.plus.size == M and pr.minus.size == Nn}
    assert dict(layers[0].entries) == top
    assert grothendieck_product(ab, gd) == total


def test_cauchy_small():
    for kind in ("E-E", "E-H"):
        assert verify_cauchy(kind, 0, 0)
        assert verify_cauchy(kind, 1, 2)
        assert verify_cauchy(kind, 2, 3)
        assert cauchy_mismatch(kind, 1, 2) is None


def test_cauchy_is_not_vacuous():
    # without the kernel the two orders differ already in degree 2
    lhs, rhs = cauchy_sides("E-E", 1, 2)
    ey = generating_series(PLUS, "e", [1], 2, 2)
    mx = generating_series(MINUS, "e", [0], 2, 2)
    assert lhs == ey * mx
    diff = lhs.first_difference(mx * ey)
    assert diff is not None and diff[0] == (1, 1)


def test_cauchy_errors():
    with pytest.raises(ValueError):
        verify_cauchy("H-H", 1, 1)
    with pytest.raises(ValueError):
        TruncatedSeries(2, 2) * TruncatedSeries(2, 3)


def test_cauchy_budget(monkeypatch):
    monkeypatch.setenv("CRYSTALKIT_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        verify_cauchy("E-E", 3, 6)


word_st = st.lists(st.tuples(st.sampled_from([PLUS, MINUS]), st.integers(0, 3)), max_size=5)


@settings(max_examples=200, deadline=None)
@given(word_st)
def test_normal_order_confluent(word):
    w = [h(s, r) for s, r in word]
    assert normal_order(w, "left") == normal_order(w, "right")
    assert normal_order(w, "left", minus_first=False) == normal_order(w, "right", minus_first=False)
