"""The q-deformed exterior algebra on m x n letters.

A letter is a pair (a, b) with row a in 1..m and column b in 1..n.  A word
is standard when its letters strictly increase in the order

    (a, b) < (c, d)  iff  b < d, or b == d and a > c,

that is columns left to right, and inside a column from the bottom row up.
Standard words are in bijection with 0-1 matrices and form a basis.

The row letters carry an action of U_q(gl_m) through the coproduct
Delta(e) = 1(x)e + e(x)t^-1, Delta(f) = f(x)1 + t(x)f.  The column letters
carry an action of U_p(gl_n), p = -q^-1, through Delta(f) = 1(x)f + f(x)t,
Delta(e) = e(x)1 + t^-1(x)e.  Both act letter by letter on any word, after
which the result is straightened.
"""
from __future__ import annotations

import threading
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .ratfun import (ONE, ZERO, LaurentPoly, RatFun, as_ratfun, format_laurent, format_ratfun,
                     p_power, parse_ratfun, q_power, qbinom, qint)

Letter = tuple  # (row, column)
Word = tuple  # tuple of letters

Q_SIDE = "q"
P_SIDE = "p"

_Q_MINUS_QINV = LaurentPoly({1: 1, -1: -1})


def letter_key(x: Letter) -> tuple[int, int]:
    return (x[1], -x[0])


def is_standard(word: Sequence[Letter]) -> bool:
    return all(letter_key(x) < letter_key(y) for x, y in zip(word, word[1:]))


def standard_word(M: Sequence[Sequence[int]]) -> Word:
    """Standard word of a 0-1 matrix given as a tuple of rows."""
    cells = [(i + 1, j + 1) for i, row in enumerate(M) for j, v in enumerate(row) if v]
    return tuple(sorted(cells, key=letter_key))


def word_matrix(word: Iterable[Letter], m: int, n: int) -> tuple:
    rows = [[0] * n for _ in range(m)]
    for a, b in word:
        rows[a - 1][b - 1] = 1
    return tuple(tuple(r) for r in rows)


# -- straightening -----------------------------------------------------------------

def _swap(x: Letter, y: Letter):
    """Rewrite the out-of-order pair x y as [(coeff, pair)]."""
    (a, b), (c, d) = x, y
    if x == y:
        return []
    if b == d:  # a < c here
        return [(LaurentPoly({-1: -1}), (y, x))]
    if a == c:  # b > d
        return [(LaurentPoly({1: 1}), (y, x))]
    if a > c:
        return [(ONE, (y, x))]
    return [(ONE, (y, x)), (_Q_MINUS_QINV, ((a, d), (c, b)))]


def _descents(word: Word) -> list[int]:
    return [k for k in range(len(word) - 1) if letter_key(word[k]) >= letter_key(word[k + 1])]


_memo_lock = threading.Lock()


@lru_cache(maxsize=200_000)
def _normal_form(word: Word, strategy: str) -> tuple:
    """Normal form of a word as a tuple of (standard word, LaurentPoly)."""
    desc = _descents(word)
    if not desc:
        return ((word, ONE),)
    k = desc[0] if strategy == "left" else desc[-1]
    acc: dict = {}
    for c, pair in _swap(word[k], word[k + 1]):
        for w, v in _normal_form(word[:k] + pair + word[k + 2:], strategy):
            acc[w] = acc.get(w, ZERO) + c * v
    return tuple((w, v) for w, v in acc.items() if not v.is_zero())


def straighten_terms(word: Sequence[Letter], strategy: str = "left") -> dict:
    """Expansion of a word in standard words, coefficients in Z[q, q^-1]."""
    if strategy not in ("left", "right"):
        raise ValueError(f"unknown strategy {strategy!r}")
    word = tuple(tuple(x) for x in word)
    return dict(_normal_form(word, strategy))


# -- elements ----------------------------------------------------------------------

class WedgeElement:
    """Immutable linear combination of standard monomials with Q(q) coefficients."""

    __slots__ = ("_terms", "m", "n")

    def __init__(self, terms=None, m: int = 0, n: int = 0):
        t = {}
        for w, c in (terms or {}).items():
            w = tuple(tuple(x) for x in w)
            if not is_standard(w):
                raise ValueError(f"not a standard word: {w}")
            c = as_ratfun(c)
            if not c.is_zero():
                t[w] = c
        self._terms = t
        rows = max((a for w in t for a, _ in w), default=0)
        cols = max((b for w in t for _, b in w), default=0)
        self.m, self.n = max(m, rows), max(n, cols)

    @classmethod
    def _raw(cls, terms: dict, m: int, n: int) -> "WedgeElement":
        obj = cls.__new__(cls)
        obj._terms, obj.m, obj.n = terms, m, n
        return obj

    @classmethod
    def monomial(cls, M: Sequence[Sequence[int]]) -> "WedgeElement":
        M = tuple(tuple(r) for r in M)
        return cls._raw({standard_word(M): RatFun(1)}, len(M), len(M[0]) if M else 0)

    @classmethod
    def unit(cls, m: int = 0, n: int = 0) -> "WedgeElement":
        return cls._raw({(): RatFun(1)}, m, n)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _word_sort_key(kv[0]))

    def words(self):
        return [w for w, _ in self.items()]

    def coeff(self, word) -> RatFun:
        return self._terms.get(tuple(tuple(x) for x in word), RatFun(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, WedgeElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "WedgeElement") -> "WedgeElement":
        t = dict(self._terms)
        for w, c in other._terms.items():
            v = t.get(w)
            v = c if v is None else v + c
            if v.is_zero():
                t.pop(w, None)
            else:
                t[w] = v
        return WedgeElement._raw(t, max(self.m, other.m), max(self.n, other.n))

    def __neg__(self):
        return WedgeElement._raw({w: -c for w, c in self._terms.items()}, self.m, self.n)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "WedgeElement":
        c = as_ratfun(c)
        if c.is_zero():
            return WedgeElement._raw({}, self.m, self.n)
        return WedgeElement._raw({w: v * c for w, v in self._terms.items()}, self.m, self.n)

    def weights(self) -> set:
        return {word_weight(w, self.m, self.n) for w in self._terms}

    def weight(self):
        """The common (row, column) weight; ValueError if not a weight vector."""
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError("not a weight vector")
        return next(iter(ws))

    def is_integral(self) -> bool:
        """Whether all coefficients lie in A_0, the ring regular at q = 0."""
        return all(c.valuation() >= 0 for c in self._terms.values())

    def at_zero(self) -> dict:
        """Coefficients at q = 0 of an A_0-combination (words with value 0 dropped)."""
        out = {}
        for w, c in self._terms.items():
            v = c.valuation()
            if v < 0:
                raise ValueError("coefficient has a pole at q = 0")
            if v == 0:
                out[w] = c.num.coeff(0) / c.den.coeff(0)
        return out

    def to_json(self) -> list:
        return [{"monomial": [list(r) for r in word_matrix(w, self.m, self.n)],
                 "coeff": format_ratfun(c)} for w, c in self.items()]

    @classmethod
    def from_json(cls, data: list, m: int, n: int) -> "WedgeElement":
        return cls({standard_word(d["monomial"]): parse_ratfun(d["coeff"]) for d in data}, m, n)

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({format_ratfun(c)})*w{list(w)}" for w, c in self.items())


def _word_sort_key(w: Word):
    return (len(w), [letter_key(x) for x in w])


def word_weight(w: Word, m: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rows = [0] * m
    cols = [0] * n
    for a, b in w:
        rows[a - 1] += 1
        cols[b - 1] += 1
    return tuple(rows), tuple(cols)


def _from_terms(terms: dict, m: int, n: int) -> WedgeElement:
    return WedgeElement._raw({w: c for w, c in terms.items() if not c.is_zero()}, m, n)


def _accumulate(acc: dict, word_terms: dict, c: RatFun):
    for w, v in word_terms.items():
        old = acc.get(w)
        add = c * v
        acc[w] = add if old is None else old + add


def straighten(word: Sequence[Letter], strategy: str = "left", m: int = 0, n: int = 0) -> WedgeElement:
    """The unique expansion of an arbitrary word in standard monomials."""
    t = straighten_terms(word, strategy)
    return WedgeElement._raw({w: RatFun(c) for w, c in t.items()}, m, n)


def wedge(x: WedgeElement, y: WedgeElement) -> WedgeElement:
    acc: dict = {}
    for w1, c1 in x._terms.items():
        for w2, c2 in y._terms.items():
            _accumulate(acc, straighten_terms(w1 + w2), c1 * c2)
    return _from_terms(acc, max(x.m, y.m), max(x.n, y.n))


def pairing(x: WedgeElement, y: WedgeElement) -> RatFun:
    """The form with the standard monomials orthonormal."""
    out = RatFun(0)
    for w, c in x._terms.items():
        d = y._terms.get(w)
        if d is not None:
            out = out + c * d
    return out


# -- bar involution -------------------------------------------------------------------

def _longest_length(values: Iterable[int]) -> int:
    counts: dict = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    return sum(k * (k - 1) // 2 for k in counts.values())


@lru_cache(maxsize=100_000)
def _bar_word(word: Word) -> tuple:
    lc = _longest_length(a for a, _ in word)
    ld = _longest_length(b for _, b in word)
    pref = q_power(-lc) * p_power(-ld)
    return tuple((w, pref * v) for w, v in straighten_terms(tuple(reversed(word))).items())


def bar(x: WedgeElement) -> WedgeElement:
    acc: dict = {}
    for w, c in x._terms.items():
        _accumulate(acc, {v: p for v, p in _bar_word(w)}, c.bar())
    return _from_terms(acc, x.m, x.n)


# -- generator actions ----------------------------------------------------------------

class GeneratorAction(NamedTuple):
    """e_i, f_i or a Cartan element of one side.

    kind "k" with index i is q^{E_ii} on the q side and p^{E_ii} on the
    p side, raised to ``power``; kind "t" is t_i = k_i k_{i+1}^-1.
    """
    side: str
    kind: str
    index: int
    power: int = 1


def _side_param(side: str):
    return q_power if side == Q_SIDE else p_power


def _t_exp(i: int, v: int) -> int:
    return (1 if v == i else 0) - (1 if v == i + 1 else 0)


@lru_cache(maxsize=200_000)
def _act_word(g: GeneratorAction, word: Word) -> tuple:
    side, kind, i, power = g
    pos = 0 if side == Q_SIDE else 1
    par = _side_param(side)
    vals = [x[pos] for x in word]
    out = []
    if kind == "k":
        out.append((par(power * sum(1 for v in vals if v == i)), word))
    if kind == "t":
        out.append((par(power * sum(_t_exp(i, v) for v in vals)), word))
    for j, v in enumerate(vals):
        if kind in ("k", "t"):
            break
        if kind == "f" and v == i:
            new = i + 1
        elif kind == "e" and v == i + 1:
            new = i
        else:
            continue
        if side == Q_SIDE:
            # f: t on earlier letters; e: t^-1 on later letters
            rng = vals[:j] if kind == "f" else vals[j + 1:]
            s = 1 if kind == "f" else -1
        else:
            # f: t on later letters; e: t^-1 on earlier letters
            rng = vals[j + 1:] if kind == "f" else vals[:j]
            s = 1 if kind == "f" else -1
        c = par(s * sum(_t_exp(i, u) for u in rng))
        letter = list(word[j])
        letter[pos] = new
        out.append((c, word[:j] + (tuple(letter),) + word[j + 1:]))
    acc: dict = {}
    for c, w in out:
        for sw, v in straighten_terms(w).items():
            acc[sw] = acc.get(sw, ZERO) + c * v
    return tuple((w, v) for w, v in acc.items() if not v.is_zero())


def _check_generator(g: GeneratorAction, m: int, n: int):
    if g.side not in (Q_SIDE, P_SIDE):
        raise ValueError(f"unknown side {g.side!r}")
    if g.kind not in ("e", "f", "k", "t"):
        raise ValueError(f"unknown generator kind {g.kind!r}")
    rank = m if g.side == Q_SIDE else n
    top = rank if g.kind == "k" else rank - 1
    if not 1 <= g.index <= top:
        raise ValueError(f"index {g.index} out of range for {g.side}-side of rank {rank}")


def act(g: GeneratorAction, x: WedgeElement, m: int | None = None, n: int | None = None) -> WedgeElement:
    m = x.m if m is None else m
    n = x.n if n is None else n
    _check_generator(g, m, n)
    acc: dict = {}
    for w, c in x._terms.items():
        _accumulate(acc, dict(_act_word(g, w)), c)
    return _from_terms(acc, m, n)


def e(i: int, side: str = Q_SIDE) -> GeneratorAction:
    return GeneratorAction(side, "e", i)


def f(i: int, side: str = Q_SIDE) -> GeneratorAction:
    return GeneratorAction(side, "f", i)


def k(i: int, side: str = Q_SIDE, power: int = 1) -> GeneratorAction:
    return GeneratorAction(side, "k", i, power)


def t(i: int, side: str = Q_SIDE, power: int = 1) -> GeneratorAction:
    return GeneratorAction(side, "t", i, power)


def act_word(gens: Sequence[GeneratorAction], x: WedgeElement) -> WedgeElement:
    """Apply g_1 g_2 ... g_r to x (rightmost first)."""
    for g in reversed(list(gens)):
        x = act(g, x)
    return x


def tau(g: GeneratorAction) -> list:
    """tau_-(g) as (scalar, generator word) for a q-side generator."""
    if g.side != Q_SIDE:
        raise ValueError("tau is defined for the q side")
    if g.kind == "e":
        return [(q_power(-1), [t(g.index, power=-1), f(g.index)])]
    if g.kind == "f":
        return [(q_power(-1), [t(g.index), e(g.index)])]
    return [(ONE, [g])]


def act_tau(g: GeneratorAction, x: WedgeElement) -> WedgeElement:
    out = WedgeElement._raw({}, x.m, x.n)
    for c, gens in tau(g):
        out = out + act_word(gens, x).scale(c)
    return out


# -- divided powers and crystal operators -----------------------------------------------

def side_int(side: str, a: int) -> LaurentPoly:
    """[a] in the side's parameter (q or p = -q^-1)."""
    if side == Q_SIDE:
        return qint(a)
    if a < 0:
        return -side_int(side, -a)
    out = ZERO
    for ex in range(-a + 1, a, 2):
        out = out + p_power(ex)
    return out


def side_factorial(side: str, a: int) -> LaurentPoly:
    out = ONE
    for j in range(1, a + 1):
        out = out * side_int(side, j)
    return out


def side_binom(side: str, top: int, kk: int) -> LaurentPoly:
    if side == Q_SIDE:
        return qbinom(top, kk)
    num = ONE
    for j in range(kk):
        num = num * side_int(side, top - j)
    if num.is_zero():
        return ZERO
    return RatFun(num, side_factorial(side, kk)).to_poly()


def divided_power(kind: str, i: int, r: int, x: WedgeElement, side: str = Q_SIDE) -> WedgeElement:
    for _ in range(r):
        x = act(GeneratorAction(side, kind, i), x)
    return x.scale(RatFun(1, side_factorial(side, r))) if r > 1 else x


def h_value(side: str, i: int, x: WedgeElement) -> int:
    rows, cols = x.weight()
    wt = rows if side == Q_SIDE else cols
    return wt[i - 1] - wt[i]


def string_decomposition(i: int, x: WedgeElement, side: str = Q_SIDE) -> dict[int, WedgeElement]:
    """{k: v_k} with x = sum_k f_i^(k) v_k and e_i v_k = 0."""
    if x.is_zero():
        return {}
    x.weight()
    out = {}
    while not x.is_zero():
        N = 0
        y = act(GeneratorAction(side, "e", i), x)
        while not y.is_zero():
            N += 1
            y = act(GeneratorAction(side, "e", i), y)
        top = divided_power("e", i, N, x, side)
        l_top = h_value(side, i, top) if not top.is_zero() else 0
        b = side_binom(side, l_top, N)
        assert not b.is_zero(), "zero q-binomial in an integrable module"
        v = top.scale(RatFun(1, b))
        out[N] = v
        x = x - divided_power("f", i, N, v, side)
    return out


def rep_crystal_op(op: str, i: int, x: WedgeElement, side: str = Q_SIDE,
                   variant: str = "lower") -> WedgeElement:
    """Kashiwara operator e~_i or f~_i on a weight vector.

    ``variant`` "lower" reassembles with coefficient 1; "upper" uses the
    coefficients q^{-l+2k-1} (for e~) and q^{l-2k-1} (for f~), l = <h_i, wt v_k>.
    On the p side "upper" is taken through the twist q -> p^-1, so those
    exponents are negated and read in powers of p.
    """
    if op not in ("e", "f"):
        raise ValueError(f"unknown operator {op!r}")
    if variant not in ("lower", "upper"):
        raise ValueError(f"unknown variant {variant!r}")
    rank = x.m if side == Q_SIDE else x.n
    if not 1 <= i < rank:
        raise ValueError(f"color {i} out of range")
    out = WedgeElement._raw({}, x.m, x.n)
    for kk, v in string_decomposition(i, x, side).items():
        r = kk - 1 if op == "e" else kk + 1
        if r < 0:
            continue
        y = divided_power("f", i, r, v, side)
        if variant == "upper":
            lk = h_value(side, i, v)
            ex = (-lk + 2 * kk - 1) if op == "e" else (lk - 2 * kk - 1)
            y = y.scale(q_power(ex) if side == Q_SIDE else p_power(-ex))
        out = out + y
    return out


# -- canonical basis -------------------------------------------------------------------

def diagonal_sums(M: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """c(M)(i) = sum_k M_{i+k,k} for i from -(n-1) up to m-1."""
    m = len(M)
    n = len(M[0]) if M else 0
    return tuple(sum(M[i + kk - 1][kk - 1] for kk in range(1, n + 1) if 1 <= i + kk <= m)
                 for i in range(-(n - 1), m))


def weight_space(rows: Sequence[int], cols: Sequence[int]) -> list[tuple]:
    """0-1 matrices with the given row and column sums."""
    m, n = len(rows), len(cols)
    out = []

    def rec(r, left, acc):
        if r == m:
            if all(v == 0 for v in left):
                out.append(tuple(acc))
            return
        for S in combinations(range(n), rows[r]):
            if all(left[j] > 0 for j in S):
                nl = list(left)
                for j in S:
                    nl[j] -= 1
                rec(r + 1, nl, acc + [tuple(1 if j in S else 0 for j in range(n))])

    rec(0, list(cols), [])
    return out


def _positive_part(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly({ex: v for ex, v in p.items() if ex > 0})


class CanonicalBasis(NamedTuple):
    matrices: list  # in decreasing c order
    elements: dict  # matrix -> WedgeElement G(M)

    def base_change(self) -> list[list[LaurentPoly]]:
        """Entry [r][c]: coefficient of w_{matrices[r]} in G(matrices[c])."""
        words = [standard_word(M) for M in self.matrices]
        out = []
        for w in words:
            out.append([self.elements[M].coeff(w).to_poly() for M in self.matrices])
        return out


def canonical_basis(m: int, n: int, rows: Sequence[int], cols: Sequence[int]) -> CanonicalBasis:
    """G(M) for every M in a bi-weight space.

    Raises AssertionError if the bar matrix is not unitriangular for the
    lexicographic order on c(M).
    """
    if len(rows) != m or len(cols) != n:
        raise ValueError("weight lengths must be m and n")
    mats = sorted(weight_space(rows, cols), key=diagonal_sums, reverse=True)
    idx = {standard_word(M): r for r, M in enumerate(mats)}
    size = len(mats)
    # a[l][c]: coefficient of w_l in bar(w_c)
    a = [[ZERO] * size for _ in range(size)]
    for c, M in enumerate(mats):
        bx = bar(WedgeElement.monomial(M))
        for w, v in bx.items():
            l = idx[w]
            a[l][c] = v.to_poly()
        assert a[c][c] == ONE, "bar matrix has a non-unit diagonal"
        for l in range(c):
            if not a[l][c].is_zero() and diagonal_sums(mats[l]) >= diagonal_sums(M):
                raise AssertionError("bar matrix is not triangular in the c-order")
    elements = {}
    for c, M in enumerate(mats):
        g = [ZERO] * size
        g[c] = ONE
        for l in range(c + 1, size):
            r = ZERO
            for j in range(c, l):
                if not g[j].is_zero() and not a[l][j].is_zero():
                    r = r + g[j].bar() * a[l][j]
            assert r.coeff(0) == 0 and r + r.bar() == ZERO, "recursion is not antisymmetric"
            g[l] = _positive_part(r)
        elements[M] = WedgeElement._raw(
            {standard_word(mats[l]): RatFun(g[l]) for l in range(size) if not g[l].is_zero()}, m, n)
    return CanonicalBasis(mats, elements)


def bi_weights(m: int, n: int) -> list[tuple[tuple, tuple]]:
    """All (row sums, column sums) pairs with a nonempty weight space."""
    from .fockcrystal import all_matrices, matrix_weight
    return sorted({matrix_weight(M) for M in all_matrices(m, n)})


def matrix_label(M: Sequence[Sequence[int]]) -> str:
    return "/".join("".join(map(str, r)) for r in M)


def base_change_csv(cb: CanonicalBasis) -> str:
    """Rows w_N, columns G(M), entries in the sparse Laurent text form."""
    labels = [matrix_label(M) for M in cb.matrices]
    lines = [",".join(["monomial"] + labels)]
    for lab, row in zip(labels, cb.base_change()):
        lines.append(",".join([lab] + [format_laurent(v) for v in row]))
    return "\n".join(lines) + "\n"


def clear_caches():
    with _memo_lock:
        _normal_form.cache_clear()
        _bar_word.cache_clear()
        _act_word.cache_clear()
