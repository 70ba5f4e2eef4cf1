"""Noncommutative character ring on generators h+_r, h-_s (or e+_r, e-_s).

Generators of one sign commute with each other.  Across signs the only
rule is

    x+_r x-_s = x-_s x+_r + x-_{s-1} x+_{r-1} + ... + x-_{s-m} x+_{r-m},

m = min(r, s), with x_0 = 1, for x = h and separately for x = e.  A word is
normal when all minus factors come first; each sign block is then sorted
by decreasing degree.  Elements are dicts from normal words to integers.

The e generators of a sign are the polynomials in the h generators of
that sign fixed by sum_i (-1)^i e_i h_{k-i} = 0.  Identities that mix the
families are checked after rewriting every e in terms of h.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import comb
from typing import Iterable, NamedTuple, Sequence

from .crystal import BudgetExceeded, MultiplicityTable, element_budget
from .partitions import (EMPTY, Partition, PartitionPair, conjugate, lr_coefficient,
                         lr_product, lr_skew, pair_sort_key, partitions_of,
                         partitions_up_to)

PLUS, MINUS = "+", "-"


class Factor(NamedTuple):
    sign: str
    family: str
    degree: int

    def __str__(self):
        return f"{self.family}{self.sign}{self.degree}"


def h(sign: str, r: int) -> Factor:
    return Factor(sign, "h", r)


def e(sign: str, r: int) -> Factor:
    return Factor(sign, "e", r)


def _check_word(word: Sequence[Factor]) -> tuple:
    word = tuple(Factor(*x) for x in word)
    for x in word:
        if x.sign not in (PLUS, MINUS) or x.family not in ("h", "e"):
            raise ValueError(f"bad factor {x!r}")
        if x.degree < 0:
            raise ValueError(f"negative degree in {x}")
    if len({x.family for x in word}) > 1:
        raise ValueError("words mixing the e and h families are not supported")
    return word


def _block_key(x: Factor):
    return -x.degree


def _sorted_normal(word: tuple, minus_first: bool = True) -> tuple:
    minus = sorted((x for x in word if x.sign == MINUS), key=_block_key)
    plus = sorted((x for x in word if x.sign == PLUS), key=_block_key)
    return tuple(minus + plus) if minus_first else tuple(plus + minus)


def _add(acc: dict, word: tuple, c: int):
    v = acc.get(word, 0) + c
    if v:
        acc[word] = v
    else:
        acc.pop(word, None)


@lru_cache(maxsize=200_000)
def _normal(word: tuple, strategy: str, minus_first: bool) -> tuple:
    if any(x.degree == 0 for x in word):
        return _normal(tuple(x for x in word if x.degree), strategy, minus_first)
    first, second = (PLUS, MINUS) if minus_first else (MINUS, PLUS)
    spots = [k for k in range(len(word) - 1)
             if word[k].sign == first and word[k + 1].sign == second]
    if not spots:
        return ((_sorted_normal(word, minus_first), 1),)
    k = spots[0] if strategy == "left" else spots[-1]
    x, y = word[k], word[k + 1]
    fam = x.family
    mm = min(x.degree, y.degree)
    acc: dict = {}
    # x y -> y x + sum_{j>=1} y_{-j} x_{-j}; read backwards for the plus-first orientation
    for j in range(mm + 1):
        if j == 0:
            pair, c = (y, x), 1
        else:
            lo_y = Factor(y.sign, fam, y.degree - j)
            lo_x = Factor(x.sign, fam, x.degree - j)
            if minus_first:
                pair, c = (lo_y, lo_x), 1
            else:
                # x- y+ = y+ x- - sum_j x-_{.-j} y+_{.-j}: stays minus-first, recurse
                pair, c = (lo_x, lo_y), -1
        for w, v in _normal(word[:k] + pair + word[k + 2:], strategy, minus_first):
            _add(acc, w, c * v)
    return tuple(acc.items())


def normal_order(word: Sequence[Factor], strategy: str = "left",
                 minus_first: bool = True) -> dict[tuple, int]:
    """Rewrite a word to the basis with minus factors left (or plus factors
    left when ``minus_first`` is False)."""
    if strategy not in ("left", "right"):
        raise ValueError(f"unknown strategy {strategy!r}")
    return dict(_normal(_check_word(word), strategy, minus_first))


def multiply(x: dict, y: dict, minus_first: bool = True) -> dict:
    acc: dict = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            for w, v in _normal(_check_word(w1 + w2), "left", minus_first):
                _add(acc, w, c1 * c2 * v)
    return acc


def add(x: dict, y: dict, scale: int = 1) -> dict:
    acc = dict(x)
    for w, c in y.items():
        _add(acc, w, scale * c)
    return acc


def unit() -> dict:
    return {(): 1}


def format_element(x: dict) -> str:
    if not x:
        return "0"
    parts = []
    for w, c in sorted(x.items(), key=lambda kv: (len(kv[0]), [str(f) for f in kv[0]])):
        parts.append(f"{c}" + "".join(f"*{f}" for f in w))
    return " + ".join(parts)


# -- Schur elements --------------------------------------------------------------

def _det_expand(entries: list[list[Factor | None]]) -> dict:
    """Determinant of a matrix of commuting generators (None = 0, degree 0 = 1)."""
    size = len(entries)
    acc: dict = {}
    for perm in permutations(range(size)):
        factors = [entries[i][perm[i]] for i in range(size)]
        if any(f is None for f in factors):
            continue
        inv = sum(1 for a in range(size) for b in range(a + 1, size) if perm[a] > perm[b])
        word = tuple(sorted((f for f in factors if f.degree), key=_block_key))
        _add(acc, word, -1 if inv % 2 else 1)
    return acc


def schur(sign: str, lam: Sequence[int], family: str = "h") -> dict:
    """s^sign_lam: det(h_{lam_i - i + j}), or det(e_{lam'_i - i + j})."""
    lam = Partition(lam)
    if family == "e":
        lam = conjugate(lam)
    elif family != "h":
        raise ValueError(f"unknown family {family!r}")
    size = len(lam)

    def entry(i, j):
        d = lam[i] - i + j
        return None if d < 0 else Factor(sign, family, d)

    if size == 0:
        return unit()
    return _det_expand([[entry(i, j) for j in range(size)] for i in range(size)])


@lru_cache(maxsize=None)
def _e_in_h(k: int) -> tuple:
    """e_k as {sorted h degree tuple: coeff} from sum_i (-1)^i e_{k-i} h_i = 0."""
    if k == 0:
        return (((), 1),)
    acc: dict = {}
    for i in range(1, k + 1):
        for degs, c in _e_in_h(k - i):
            key = tuple(sorted(degs + (i,), reverse=True))
            acc[key] = acc.get(key, 0) + (c if i % 2 else -c)
    return tuple((d, c) for d, c in acc.items() if c)


def to_h_family(x: dict) -> dict:
    """Replace every e generator by its h polynomial (signs kept) and normal-order."""
    out: dict = {}
    for word, c in x.items():
        pieces = []
        for f in word:
            if f.family == "h":
                pieces.append([((f,), 1)])
            else:
                pieces.append([(tuple(Factor(f.sign, "h", d) for d in degs), v)
                               for degs, v in _e_in_h(f.degree)])
        for choice in product(*pieces):
            w = tuple(g for part, _ in choice for g in part)
            coeff = c
            for _, v in choice:
                coeff *= v
            for nw, v in _normal(w, "left", True):
                _add(out, nw, coeff * v)
    return out


# -- transition coefficients ----------------------------------------------------------

def m_coeff(mu, nu, zeta, eta) -> int:
    """sum_sigma c^mu_{sigma zeta} c^nu_{sigma eta}."""
    mu, nu, zeta, eta = map(Partition, (mu, nu, zeta, eta))
    d = mu.size - zeta.size
    if d < 0 or nu.size - eta.size != d:
        return 0
    return sum(lr_coefficient(mu, s, zeta) * lr_coefficient(nu, s, eta)
               for s in partitions_of(d))


def n_coeff(sigma, tau, mu, nu) -> int:
    """sum_lam (-1)^|lam| c^sigma_{lam mu} c^tau_{lam' nu}."""
    sigma, tau, mu, nu = map(Partition, (sigma, tau, mu, nu))
    d = sigma.size - mu.size
    if d < 0 or tau.size - nu.size != d:
        return 0
    return (-1) ** d * sum(lr_coefficient(sigma, lam, mu) * lr_coefficient(tau, conjugate(lam), nu)
                           for lam in partitions_of(d))


def pairs_up_to(D: int) -> list[PartitionPair]:
    ps = partitions_up_to(D)
    return sorted((PartitionPair(a, b) for a in ps for b in ps), key=pair_sort_key)


def verify_transition_inverse(D: int) -> bool:
    """The m and n matrices on pairs with |mu|, |nu| <= D are mutually inverse."""
    pairs = pairs_up_to(D)
    M = {(a, b): m_coeff(a.plus, a.minus, b.plus, b.minus) for a in pairs for b in pairs}
    Nm = {(a, b): n_coeff(a.plus, a.minus, b.plus, b.minus) for a in pairs for b in pairs}
    for a in pairs:
        for c in pairs:
            s = sum(M[a, b] * Nm[b, c] for b in pairs if M[a, b])
            if s != (1 if a == c else 0):
                return False
    return True


def transition_product(mu, nu) -> dict:
    """s+_mu s-_nu expanded through the m coefficients as sum m s-_eta s+_zeta."""
    mu, nu = Partition(mu), Partition(nu)
    out: dict = {}
    for d in range(min(mu.size, nu.size) + 1):
        for zeta in partitions_of(mu.size - d):
            for eta in partitions_of(nu.size - d):
                c = m_coeff(mu, nu, zeta, eta)
                if c:
                    out = add(out, multiply(schur(MINUS, eta), schur(PLUS, zeta)), c)
    return out


def reverse_transition(sigma, tau) -> dict:
    """sum n s+_mu s-_nu, normal-ordered minus first."""
    sigma, tau = Partition(sigma), Partition(tau)
    out: dict = {}
    for d in range(min(sigma.size, tau.size) + 1):
        for mu in partitions_of(sigma.size - d):
            for nu in partitions_of(tau.size - d):
                c = n_coeff(sigma, tau, mu, nu)
                if c:
                    out = add(out, multiply(schur(PLUS, mu), schur(MINUS, nu)), c)
    return out


# -- socle layers --------------------------------------------------------------------

class SocleTable(NamedTuple):
    top: PartitionPair
    bottom: PartitionPair
    layer: int
    entries: MultiplicityTable

    def to_json(self) -> dict:
        return {"layer": self.layer, "entries": self.entries.to_json()}


def _n_expand(alpha: Partition, beta: Partition) -> dict:
    """[V_{alpha,beta}] in the basis [V_{mu,0} x V_{0,nu}]: {(mu, nu): n}."""
    out: dict = {}
    for k in range(min(alpha.size, beta.size) + 1):
        for sg in partitions_of(k):
            if not alpha.contains(sg) or not beta.contains(conjugate(sg)):
                continue
            for mu, a in lr_skew(alpha, sg).items():
                for nu, b in lr_skew(beta, conjugate(sg)).items():
                    key = (mu, nu)
                    out[key] = out.get(key, 0) + (-1) ** k * a * b
    return {k: v for k, v in out.items() if v}


def socle_coefficients(ab: PartitionPair, gd: PartitionPair) -> dict:
    """All c^{(phi,psi)}_{(alpha,beta)(gamma,delta)} from the eight-fold LR sum."""
    alpha, beta = map(Partition, ab)
    gamma, delta = map(Partition, gd)
    left = _n_expand(alpha, beta)
    right = _n_expand(gamma, delta)
    inner: dict = {}
    for (mu, nu), a in left.items():
        for (zeta, eta), b in right.items():
            for xi, c1 in lr_product(mu, zeta).items():
                for pi, c2 in lr_product(nu, eta).items():
                    key = (xi, pi)
                    inner[key] = inner.get(key, 0) + a * b * c1 * c2
    out: dict = {}
    for (xi, pi), c in inner.items():
        if not c:
            continue
        for k in range(min(xi.size, pi.size) + 1):
            for rho in partitions_of(k):
                if not xi.contains(rho) or not pi.contains(rho):
                    continue
                for phi, a in lr_skew(xi, rho).items():
                    for psi, b in lr_skew(pi, rho).items():
                        key = PartitionPair(phi, psi)
                        out[key] = out.get(key, 0) + c * a * b
    return {k: v for k, v in out.items() if v}


def socle_layer_general(ab: PartitionPair, gd: PartitionPair, d: int) -> SocleTable:
    ab = PartitionPair.of(*ab)
    gd = PartitionPair.of(*gd)
    M = ab.plus.size + gd.plus.size
    N = ab.minus.size + gd.minus.size
    if not 0 <= d <= min(M, N):
        raise ValueError(f"layer {d} out of range 0..{min(M, N)}")
    table = MultiplicityTable()
    for pr, c in socle_coefficients(ab, gd).items():
        if pr.plus.size == M - d and pr.minus.size == N - d:
            if c < 0:
                raise ArithmeticError(f"negative multiplicity {c} at {pr}")
            table[pr] = c
    return SocleTable(ab, gd, d, table)


def socle_layers(ab: PartitionPair, gd: PartitionPair) -> list[SocleTable]:
    ab = PartitionPair.of(*ab)
    gd = PartitionPair.of(*gd)
    top = min(ab.plus.size + gd.plus.size, ab.minus.size + gd.minus.size)
    return [socle_layer_general(ab, gd, d) for d in range(top + 1)]


def loewy_length(ab: PartitionPair, gd: PartitionPair) -> int:
    return sum(1 for t in socle_layers(ab, gd) if t.entries)


def grothendieck_product(ab: PartitionPair, gd: PartitionPair) -> dict:
    """[V_ab][V_gd] in the basis [V_{phi,psi}], going through the m and n matrices."""
    ab = PartitionPair.of(*ab)
    gd = PartitionPair.of(*gd)
    left: dict = {}
    for mu in partitions_up_to(ab.plus.size):
        for nu in partitions_up_to(ab.minus.size):
            c = n_coeff(ab.plus, ab.minus, mu, nu)
            if c:
                left[(mu, nu)] = c
    right: dict = {}
    for mu in partitions_up_to(gd.plus.size):
        for nu in partitions_up_to(gd.minus.size):
            c = n_coeff(gd.plus, gd.minus, mu, nu)
            if c:
                right[(mu, nu)] = c
    ind: dict = {}
    for (mu, nu), a in left.items():
        for (zeta, eta), b in right.items():
            for xi, c1 in lr_product(mu, zeta).items():
                for pi, c2 in lr_product(nu, eta).items():
                    ind[(xi, pi)] = ind.get((xi, pi), 0) + a * b * c1 * c2
    out: dict = {}
    for (xi, pi), c in ind.items():
        if not c:
            continue
        for phi in partitions_up_to(xi.size):
            for psi in partitions_up_to(pi.size):
                v = m_coeff(xi, pi, phi, psi)
                if v:
                    key = PartitionPair(phi, psi)
                    out[key] = out.get(key, 0) + c * v
    return {k: v for k, v in out.items() if v}


# -- truncated generating functions --------------------------------------------------

class TruncatedSeries:
    """Polynomial in commuting variables, cut off above total degree ``cutoff``,
    with coefficients in the character ring (dicts of normal words)."""

    __slots__ = ("nvars", "cutoff", "terms")

    def __init__(self, nvars: int, cutoff: int, terms: dict | None = None):
        self.nvars = nvars
        self.cutoff = cutoff
        self.terms = {k: v for k, v in (terms or {}).items() if v and sum(k) <= cutoff}

    def _check(self, other: "TruncatedSeries"):
        if (self.nvars, self.cutoff) != (other.nvars, other.cutoff):
            raise ValueError("series with different variables or cutoff")

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        acc: dict = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > self.cutoff:
                    continue
                key = tuple(a + b for a, b in zip(e1, e2))
                acc[key] = add(acc.get(key, {}), multiply(c1, c2))
        return TruncatedSeries(self.nvars, self.cutoff, acc)

    def __eq__(self, other):
        self._check(other)
        return self.terms == other.terms

    def first_difference(self, other: "TruncatedSeries"):
        self._check(other)
        for key in sorted(set(self.terms) | set(other.terms), key=lambda k: (sum(k), k)):
            a, b = self.terms.get(key, {}), other.terms.get(key, {})
            if a != b:
                return key, a, b
        return None


def _series_budget(k: int, D: int):
    size = comb(2 * k + D, D)
    if size > element_budget():
        raise BudgetExceeded(f"{size} monomials exceed the budget")


def generating_series(sign: str, family: str, var_slots: Sequence[int], nvars: int,
                      D: int) -> TruncatedSeries:
    """prod_j (sum_r x_r t_j^r) over the given variable slots, rewritten in h."""
    out = TruncatedSeries(nvars, D, {(0,) * nvars: unit()})
    for slot in var_slots:
        terms = {}
        for r in range(D + 1):
            ex = [0] * nvars
            ex[slot] = r
            gen = unit() if r == 0 else to_h_family({(Factor(sign, family, r),): 1})
            terms[tuple(ex)] = gen
        out = out * TruncatedSeries(nvars, D, terms)
    return out


def _kernel_series(k: int, D: int, kind: str) -> TruncatedSeries:
    """prod_{i,j} (1 - x_i y_j)^-1 (E-E) or prod (1 + x_i y_j) (E-H).

    Variables are x_1..x_k then y_1..y_k.
    """
    nvars = 2 * k
    out = TruncatedSeries(nvars, D, {(0,) * nvars: unit()})
    for i in range(k):
        for j in range(k):
            terms = {}
            top = D // 2 if kind == "E-E" else min(1, D // 2)
            for r in range(top + 1):
                ex = [0] * nvars
                ex[i] = r
                ex[k + j] = r
                terms[tuple(ex)] = {(): 1}
            out = out * TruncatedSeries(nvars, D, terms)
    return out


def cauchy_sides(kind: str, k: int, D: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    if kind not in ("E-E", "E-H"):
        raise ValueError(f"unknown identity {kind!r}")
    if k < 0 or D < 0:
        raise ValueError("k and D must be nonnegative")
    _series_budget(k, D)
    nvars = 2 * k
    xs = list(range(k))
    ys = list(range(k, 2 * k))
    ey = generating_series(PLUS, "e", ys, nvars, D)
    minus_family = "e" if kind == "E-E" else "h"
    mx = generating_series(MINUS, minus_family, xs, nvars, D)
    lhs = ey * mx
    rhs = mx * ey * _kernel_series(k, D, kind)
    return lhs, rhs


def verify_cauchy(kind: str, k: int, D: int) -> bool:
    lhs, rhs = cauchy_sides(kind, k, D)
    return lhs == rhs


def cauchy_mismatch(kind: str, k: int, D: int):
    """None, or (exponent vector, lhs coefficient, rhs coefficient) of the first difference."""
    lhs, rhs = cauchy_sides(kind, k, D)
    return lhs.first_difference(rhs)
