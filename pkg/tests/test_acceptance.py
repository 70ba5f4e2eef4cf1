"""Acceptance criteria, one test each, with their time limits.

Each test prints a PASS/FAIL line; the lines are also collected into an
"acceptance criteria" section of the pytest terminal summary.
"""
import random

from crystalkit.charalg import (MINUS, PLUS, h, loewy_length, m_coeff, normal_order,
                                socle_layers, verify_cauchy, verify_transition_inverse)
from crystalkit.fockcrystal import (_matrix_act, all_matrices, h_set_multiplicity,
                                    howe_decompose)
from crystalkit.partitions import (PartitionPair, conjugate, lr_coefficient, pair_order_ge,
                                   partitions_of, partitions_up_to)
from crystalkit.qwedge import (GeneratorAction, WedgeElement, act, act_word, bar, bi_weights,
                               canonical_basis, rep_crystal_op, side_int, standard_word,
                               straighten_terms)
from crystalkit.ratfun import ONE, LaurentPoly, p_power, q_power
from crystalkit.tableaux import highest_count_table, lr_table_via_crystal

P = PartitionPair.of


def test_criterion_01_socle_example(criterion):
    with criterion(1, "socle layers of V_(1),0 x V_0,(1) and Loewy length 2", 1) as c:
        layers = socle_layers(P((1,), ()), P((), (1,)))
        got = [dict(t.entries) for t in layers]
        c.ok = got == [{P((1,), (1,)): 1}, {P((), ()): 1}]
        c.ok &= loewy_length(P((1,), ()), P((), (1,))) == 2 == min(1, 1) + 1
        c.detail = "layers " + " | ".join(
            ", ".join(f"{pr}:{v}" for pr, v in layer.items()) for layer in got)


def test_criterion_02_three_way_multiplicity(criterion):
    with criterion(2, "m_coeff = crystal multiplicity = |h_set| for |mu|,|nu| <= 3", 120) as c:
        checked = 0
        bad = []
        for mu in partitions_up_to(3):
            for nu in partitions_up_to(3):
                N = mu.size + nu.size + 2
                table = highest_count_table(mu, nu, N)
                top = P(mu, nu)
                for pr in table:
                    if not pair_order_ge(top, pr):
                        bad.append((top, pr, "crystal label outside the order ideal"))
                for zeta in partitions_up_to(mu.size):
                    for eta in partitions_up_to(nu.size):
                        bottom = PartitionPair(zeta, eta)
                        if not pair_order_ge(top, bottom):
                            continue
                        a = m_coeff(mu, nu, zeta, eta)
                        b = table.get(bottom, 0)
                        hs = h_set_multiplicity(top, bottom)
                        checked += 1
                        if not a == b == hs:
                            bad.append((top, bottom, a, b, hs))
        c.ok = not bad and checked > 0
        c.detail = f"{checked} pairs checked, mismatches {bad[:3]}"


def test_criterion_03_howe(criterion):
    with criterion(3, "Howe decomposition multiplicity-free with conjugate labels, m,n <= 4", 60) as c:
        bad = []
        for m in range(1, 5):
            for n in range(1, 5):
                comps = howe_decompose(m, n)
                if any(x.multiplicity != 1 for x in comps):
                    bad.append((m, n, "multiplicity"))
                if any(x.dual_label != conjugate(x.label) for x in comps):
                    bad.append((m, n, "labels"))
                if sum(x.size * x.multiplicity for x in comps) != 2 ** (m * n):
                    bad.append((m, n, "size"))
                # labels are exactly the partitions inside the m x n box
                box = {lam for lam in partitions_up_to(m * n) if len(lam) <= m and
                       (not lam or lam[0] <= n)}
                if {x.label for x in comps} != box:
                    bad.append((m, n, "label set"))
        c.ok = not bad
        c.detail = f"failures {bad[:3]}"


def test_criterion_04_crystal_base(criterion):
    with criterion(4, "representation crystal operators are integral and reduce at q=0, m,n <= 3", 300) as c:
        bad = []
        count = 0
        for m in range(1, 4):
            for n in range(1, 4):
                for M in all_matrices(m, n):
                    x = WedgeElement.monomial(M)
                    x = WedgeElement._raw(dict(x.items()), m, n)
                    for side, variant, rank in (("q", "lower", m), ("p", "upper", n)):
                        for i in range(1, rank):
                            for op in "ef":
                                y = rep_crystal_op(op, i, x, side, variant)
                                count += 1
                                if not y.is_integral():
                                    bad.append((M, side, op, i, "not integral"))
                                    continue
                                target = _matrix_act(op, (side, i), M)
                                expect = {} if target is None else {standard_word(target): 1}
                                if y.at_zero() != expect:
                                    bad.append((M, side, op, i, "q=0"))
        c.ok = not bad and count > 0
        c.detail = f"{count} operator applications, failures {bad[:3]}"


def test_criterion_05_canonical_basis(criterion):
    with criterion(5, "canonical basis exists, bar-invariant, unitriangular in qZ[q], m,n <= 3", 300) as c:
        bad = []
        total = 0
        for m in range(1, 4):
            for n in range(1, 4):
                for rows, cols in bi_weights(m, n):
                    cb = canonical_basis(m, n, rows, cols)
                    total += len(cb.matrices)
                    for M, G in cb.elements.items():
                        if bar(G) != G:
                            bad.append((M, "bar"))
                    A = cb.base_change()
                    for r in range(len(A)):
                        for col in range(len(A)):
                            v = A[r][col]
                            if r == col and v != ONE:
                                bad.append((rows, cols, r, "diagonal"))
                            elif r < col and not v.is_zero():
                                bad.append((rows, cols, r, col, "not triangular"))
                            elif r > col and any(ex <= 0 for ex, _ in v.items()):
                                bad.append((rows, cols, r, col, "not in qZ[q]"))
        c.ok = not bad and total == sum(2 ** (m * n) for m in range(1, 4) for n in range(1, 4))
        c.detail = f"{total} basis elements, failures {bad[:3]}"


def test_criterion_06_confluence(criterion):
    with criterion(6, "1000 random words per rewriting system give equal normal forms", 60) as c:
        rng = random.Random(20240601)
        bad = 0
        for _ in range(1000):
            word = [(rng.randint(1, 3), rng.randint(1, 3)) for _ in range(rng.randint(2, 7))]
            if straighten_terms(word, "left") != straighten_terms(word, "right"):
                bad += 1
        for _ in range(1000):
            word = [h(rng.choice([PLUS, MINUS]), rng.randint(0, 4)) for _ in range(rng.randint(2, 6))]
            mf = rng.random() < 0.5
            if normal_order(word, "left", mf) != normal_order(word, "right", mf):
                bad += 1
        c.ok = bad == 0
        c.detail = f"{bad} disagreements"


def test_criterion_07_transition_inverse(criterion):
    with criterion(7, "m and n transition blocks inverse up to degree 4", 60) as c:
        c.ok = all(verify_transition_inverse(D) for D in range(5))


def test_criterion_08_cauchy(criterion):
    with criterion(8, "Cauchy identities E-E and E-H, 3 variables, degree 6", 120) as c:
        ee = verify_cauchy("E-E", 3, 6)
        eh = verify_cauchy("E-H", 3, 6)
        c.ok = ee and eh
        c.detail = f"E-E {ee}, E-H {eh}"


def _relations_hold(rng, x, m, n):
    """[e_i, f_j] = delta_ij [h_i], Serre and k e k^-1 relations on one side."""
    side, rank = rng.choice([("q", m), ("p", n)])
    par = q_power if side == "q" else p_power
    i, j = rng.randint(1, rank - 1), rng.randint(1, rank - 1)
    E = GeneratorAction(side, "e", i)
    F = GeneratorAction(side, "f", j)
    lhs = act_word([E, F], x) - act_word([F, E], x)
    if i == j:
        rhs = WedgeElement._raw({}, m, n)
        for wd, cf in x.items():
            mono = WedgeElement._raw({wd: cf}, m, n)
            rows, cols = mono.weight()
            wt = rows if side == "q" else cols
            rhs = rhs + mono.scale(side_int(side, wt[i - 1] - wt[i]))
    else:
        rhs = WedgeElement._raw({}, m, n)
    if lhs != rhs:
        return False
    a, b = GeneratorAction(side, "f", 1), GeneratorAction(side, "f", 2)
    if rng.random() < 0.5:
        a, b = b, a
    serre = act_word([a, a, b], x) - act_word([a, b, a], x).scale(side_int(side, 2)) + act_word([b, a, a], x)
    if not serre.is_zero():
        return False
    kk = rng.randint(1, rank)
    K = GeneratorAction(side, "k", kk)
    Kinv = GeneratorAction(side, "k", kk, -1)
    shift = (1 if kk == i else 0) - (1 if kk == i + 1 else 0)
    return act_word([K, E, Kinv], x) == act(E, x).scale(par(shift))


def test_criterion_09_commuting_actions(criterion):
    with criterion(9, "q-side and p-side actions on the 3x3 algebra commute and satisfy relations", 120) as c:
        rng = random.Random(11)
        m = n = 3
        mats = list(all_matrices(m, n))
        gens = {s: [GeneratorAction(s, kd, i) for kd in "ef" for i in (1, 2)] +
                [GeneratorAction(s, "k", i, rng.choice([-1, 1])) for i in (1, 2, 3)]
                for s in "qp"}
        bad = []
        for case in range(200):
            x = WedgeElement._raw({}, m, n)
            for _ in range(3):
                coef = LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3)})
                x = x + WedgeElement.monomial(rng.choice(mats)).scale(coef)
            g, k = rng.choice(gens["q"]), rng.choice(gens["p"])
            if act(g, act(k, x)) != act(k, act(g, x)):
                bad.append((case, "commute"))
            if not _relations_hold(rng, x, m, n):
                bad.append((case, "relation"))
        c.ok = not bad
        c.detail = f"failures {bad[:3]}"


def test_criterion_10_lr_oracle(criterion):
    with criterion(10, "LR by tableaux equals LR by crystal highest weights, |lam| <= 8", 120) as c:
        bad = []
        count = 0
        for n in range(9):
            for k in range(n + 1):
                for mu in partitions_of(k):
                    for nu in partitions_of(n - k):
                        table = lr_table_via_crystal(mu, nu, max(n, 1))
                        for lam in partitions_of(n):
                            count += 1
                            if lr_coefficient(lam, mu, nu) != table.get(lam, 0):
                                bad.append((lam, mu, nu))
        c.ok = not bad
        c.detail = f"{count} coefficients, failures {bad[:3]}"
