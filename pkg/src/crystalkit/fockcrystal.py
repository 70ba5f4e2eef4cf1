"""Matrix crystals: the 0-1 matrices indexing standard monomials of the
q-wedge algebra, and the nonnegative integer matrices forming the crystal
of the parabolic q-boson vacuum module.

0-1 matrices carry two commuting families of colors.  Colors ``("q", i)``
(gl_m) act on columns, which are tensored left to right; inside a column
f_i moves a 1 from row i to row i+1.  Colors ``("p", j)`` (gl_n) act on
rows, tensored from the bottom row to the top row; inside a row f_j moves
a 1 from column j to column j+1.

Integer matrices M are indexed by (i, j) with i < 0 and j >= 0.  Row i
stands for the gl_{<=0} letter i+1 and column j for the gl_{>0} letter
j+1, so an entry at (i, j) has weight eps_{j+1} - eps_{i+1}.  Colors c > 0
act on rows (each a symmetric power crystal, rows tensored from the top
row -1 downward), colors c < 0 act on columns
(dual symmetric powers, columns tensored left to right) and f_0 adds 1 at
the corner (-1, 0).
"""
from __future__ import annotations

import json
from itertools import product
from typing import Iterable, NamedTuple, Sequence

from .crystal import (Component, CrystalHandle, components, signature)
from .partitions import (GlWeight, Partition, PartitionPair, conjugate,
                         lambda_weight, pairing_h_lambda)

Q_SIDE = "q"
P_SIDE = "p"


# -- 0-1 matrices -----------------------------------------------------------------

class Matrix01(NamedTuple):
    """0-1 matrix with rows a..b and columns 1..n.

    Rows below the window (indices < a) are implicitly all ones and rows
    above it (indices > b) all zeros.
    """
    a: int
    rows: tuple  # tuple of row tuples, first one is row a

    @property
    def b(self) -> int:
        return self.a + len(self.rows) - 1

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i: int, j: int) -> int:
        if i < self.a:
            return 1
        if i > self.b:
            return 0
        return self.rows[i - self.a][j - 1]

    def charge(self) -> int:
        """#{ones in rows >= 1} - #{zeros in rows <= 0} (padding excluded)."""
        ones = sum(sum(r) for k, r in enumerate(self.rows) if self.a + k >= 1)
        zeros = sum(len(r) - sum(r) for k, r in enumerate(self.rows) if self.a + k <= 0)
        return ones - zeros

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows], "first_row": self.a,
                "last_row": self.b, "below": 1, "above": 0}


def _col_eps_phi(i: int, top: int, bottom: int) -> tuple[int, int]:
    # one column, rows i and i+1
    return (1 if (top == 0 and bottom == 1) else 0, 1 if (top == 1 and bottom == 0) else 0)


def q_side_word(M: tuple, i: int) -> list[tuple[int, int]]:
    """(eps, phi) of each column (left to right) for color i."""
    r1, r2 = M[i - 1], M[i]
    return [_col_eps_phi(i, x, y) for x, y in zip(r1, r2)]


def p_side_word(M: tuple, j: int) -> list[tuple[int, int]]:
    """(eps, phi) of each row from bottom to top for color j."""
    out = []
    for row in reversed(M):
        x, y = row[j - 1], row[j]
        out.append((1 if (x == 0 and y == 1) else 0, 1 if (x == 1 and y == 0) else 0))
    return out


def _matrix_act(op: str, color, M: tuple):
    side, i = color
    if side == Q_SIDE:
        _, _, ep, fp = signature(q_side_word(M, i))
        c = ep if op == "e" else fp
        if c is None:
            return None
        rows = [list(r) for r in M]
        src, dst = (i - 1, i) if op == "f" else (i, i - 1)
        rows[src][c], rows[dst][c] = 0, 1
        return tuple(tuple(r) for r in rows)
    _, _, ep, fp = signature(p_side_word(M, i))
    pos = ep if op == "e" else fp
    if pos is None:
        return None
    r = len(M) - 1 - pos
    row = list(M[r])
    src, dst = (i - 1, i) if op == "f" else (i, i - 1)
    row[src], row[dst] = 0, 1
    return M[:r] + (tuple(row),) + M[r + 1:]


def _matrix_eps_phi(color, M: tuple) -> tuple[int, int]:
    side, i = color
    word = q_side_word(M, i) if side == Q_SIDE else p_side_word(M, i)
    ep, ph, _, _ = signature(word)
    return ep, ph


def matrix_weight(M: tuple) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(row sums, column sums): the gl_m and gl_n weights."""
    return (tuple(sum(r) for r in M), tuple(sum(c) for c in zip(*M)) if M else ())


def all_matrices(m: int, n: int):
    for bits in product((0, 1), repeat=m * n):
        yield tuple(tuple(bits[r * n:(r + 1) * n]) for r in range(m))


def matrix_colors(m: int, n: int) -> list:
    return [(Q_SIDE, i) for i in range(1, m)] + [(P_SIDE, j) for j in range(1, n)]


def _fmt_matrix(M: tuple) -> str:
    return "[" + "|".join("".join(map(str, r)) for r in M) + "]"


def _matrix_alpha(color):
    side, i = color
    return side, i


def matrix_crystal(m: int, n: int, sides: Sequence[str] = (Q_SIDE, P_SIDE)) -> CrystalHandle:
    """Crystal on all m x n 0-1 matrices (payloads are tuples of rows)."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    colors = [c for c in matrix_colors(m, n) if c[0] in sides]
    return CrystalHandle(
        colors,
        lambda c, M: _matrix_act("e", c, M),
        lambda c, M: _matrix_act("f", c, M),
        matrix_weight,
        epsilon=lambda c, M: _matrix_eps_phi(c, M)[0],
        phi=lambda c, M: _matrix_eps_phi(c, M)[1],
        seeds=[],
        fmt=_fmt_matrix, name=f"B_{m}x{n}",
        elements=lambda: all_matrices(m, n))


def padded_eps_phi(color, M: Matrix01) -> tuple[int, int]:
    """eps/phi of a windowed matrix for any color, using its padding.

    q-side colors i with a-1 <= i <= b see the implicit row of ones below
    the window or of zeros above it; colors further out give (0, 0).
    """
    side, i = color
    if side == P_SIDE:
        return _matrix_eps_phi(color, M.rows)
    top = [M.entry(i, j) for j in range(1, M.n + 1)]
    bottom = [M.entry(i + 1, j) for j in range(1, M.n + 1)]
    ep, ph, _, _ = signature([_col_eps_phi(i, x, y) for x, y in zip(top, bottom)])
    return ep, ph


def highest_matrix(lam: Sequence[int], a: int, b: int) -> Matrix01:
    """M(lam) on rows a..b: entry (i, j) is 1 iff i <= lam_j."""
    lam = [int(x) for x in lam]
    if any(x < y for x, y in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not weakly decreasing")
    if b < a - 1:
        raise ValueError("empty window")
    for x in lam:
        if not a - 1 <= x <= b:
            raise ValueError(f"lambda entry {x} does not fit rows {a}..{b}")
    rows = tuple(tuple(1 if i <= x else 0 for x in lam) for i in range(a, b + 1))
    return Matrix01(a, rows)


class HoweComponent(NamedTuple):
    label: Partition  # gl_m highest weight (row sums)
    dual_label: Partition  # gl_n highest weight (column sums)
    multiplicity: int
    size: int


def howe_decompose(m: int, n: int, budget: int | None = None) -> list[HoweComponent]:
    """Decompose the m x n matrix crystal under gl_m x gl_n.

    Raises ValueError if a highest weight pair is not of the form
    (lam, lam').  Multiplicities are reported, not asserted.
    """
    h = matrix_crystal(m, n)
    comps = components(list(h.elements()), h, budget)
    grouped: dict[Partition, list[Component]] = {}
    for comp in comps:
        if comp.highest is None:
            raise ValueError("component without a unique highest element")
        rows, cols = matrix_weight(comp.highest)
        lam = Partition(rows)
        if Partition(cols) != conjugate(lam):
            raise ValueError(f"labels {rows} and {cols} are not conjugate")
        grouped.setdefault(lam, []).append(comp)
    out = []
    for lam, cs in grouped.items():
        out.append(HoweComponent(lam, conjugate(lam), len(cs), len(cs[0].elements)))
    out.sort(key=lambda c: (c.label.size, [-x for x in c.label]))
    return out


# -- nonnegative integer matrices of the vacuum module --------------------------

class MatrixNat(tuple):
    """Sparse matrix as a sorted tuple of ((i, j), value), i < 0 <= j."""

    def __new__(cls, entries=()):
        if isinstance(entries, dict):
            entries = entries.items()
        items = []
        for (i, j), v in entries:
            if v < 0:
                raise ValueError("negative entry")
            if i >= 0 or j < 0:
                raise ValueError(f"index ({i},{j}) outside Z_<0 x Z_>=0")
            if v:
                items.append(((int(i), int(j)), int(v)))
        items.sort()
        return super().__new__(cls, items)

    def as_dict(self) -> dict:
        return dict(self)

    def get(self, i: int, j: int) -> int:
        for k, v in self:
            if k == (i, j):
                return v
        return 0

    def to_json(self) -> list:
        return [[i, j, v] for (i, j), v in self]

    def __repr__(self):
        return "MatrixNat(" + ", ".join(f"({i},{j}):{v}" for (i, j), v in self) + ")"


VACUUM = MatrixNat()
CORNER = (-1, 0)


def boson_weight(M: MatrixNat) -> GlWeight:
    c: dict[int, int] = {}
    for (i, j), v in M:
        c[j + 1] = c.get(j + 1, 0) + v
        c[i + 1] = c.get(i + 1, 0) - v
    return GlWeight(c)


def _row_word(d: dict, c: int, rows: list[int]) -> list[tuple[int, int]]:
    # color c > 0: row r has phi = M[r, c-1], eps = M[r, c]
    return [(d.get((r, c), 0), d.get((r, c - 1), 0)) for r in rows]


def _col_word(d: dict, c: int, cols: list[int]) -> list[tuple[int, int]]:
    # color c < 0: column j has phi = M[c, j], eps = M[c-1, j]
    return [(d.get((c - 1, j), 0), d.get((c, j), 0)) for j in cols]


def _support(d: dict):
    # rows from the top (row -1, next to the corner) downward
    rows = sorted({i for i, _ in d}, reverse=True)
    cols = sorted({j for _, j in d})
    return rows, cols


def boson_eps_phi(c: int, M: MatrixNat) -> tuple[int, int]:
    d = dict(M)
    if c == 0:
        e = d.get(CORNER, 0)
        return e, e + boson_weight(M).h_pairing(0)
    rows, cols = _support(d)
    word = _row_word(d, c, rows) if c > 0 else _col_word(d, c, cols)
    ep, ph, _, _ = signature(word)
    return ep, ph


def boson_apply(op: str, c: int, M: MatrixNat):
    d = dict(M)
    if c == 0:
        v = d.get(CORNER, 0)
        if op == "f":
            d[CORNER] = v + 1
        elif v:
            d[CORNER] = v - 1
        else:
            return None
        return MatrixNat(d)
    rows, cols = _support(d)
    if c > 0:
        _, _, ep, fp = signature(_row_word(d, c, rows))
        pos = ep if op == "e" else fp
        if pos is None:
            return None
        r = rows[pos]
        src, dst = ((r, c - 1), (r, c)) if op == "f" else ((r, c), (r, c - 1))
    else:
        _, _, ep, fp = signature(_col_word(d, c, cols))
        pos = ep if op == "e" else fp
        if pos is None:
            return None
        j = cols[pos]
        src, dst = ((c, j), (c - 1, j)) if op == "f" else ((c - 1, j), (c, j))
    d[src] -= 1
    d[dst] = d.get(dst, 0) + 1
    return MatrixNat(d)


def boson_colors(M: MatrixNat, extra: int = 1) -> range:
    """Colors that can act nontrivially on M (plus a margin)."""
    d = dict(M)
    lo = min((i for i, _ in d), default=-1)
    hi = max((j for _, j in d), default=0)
    return range(lo - extra, hi + extra + 1)


def boson_crystal(colors: Iterable[int]) -> CrystalHandle:
    colors = list(colors)
    return CrystalHandle(
        colors,
        lambda c, M: boson_apply("e", c, M),
        lambda c, M: boson_apply("f", c, M),
        boson_weight,
        epsilon=lambda c, M: boson_eps_phi(c, M)[0],
        phi=lambda c, M: boson_eps_phi(c, M)[1],
        seeds=[VACUUM], key=lambda M: tuple(M), fmt=repr, name="B0(M)")


def _margin_matrices(row_sums: dict[int, int], col_sums: dict[int, int]):
    rows = sorted(row_sums)
    cols = sorted(col_sums)
    remaining = dict(col_sums)

    def rec(ri, entries):
        if ri == len(rows):
            if all(v == 0 for v in remaining.values()):
                yield MatrixNat(entries)
            return
        r = rows[ri]
        yield from fill(ri, r, 0, row_sums[r], entries)

    def fill(ri, r, ci, left, entries):
        if ci == len(cols) - 1:
            j = cols[ci]
            if left <= remaining[j]:
                remaining[j] -= left
                yield from rec(ri + 1, entries + [((r, j), left)])
                remaining[j] += left
            return
        j = cols[ci]
        for v in range(min(left, remaining[j]) + 1):
            remaining[j] -= v
            yield from fill(ri, r, ci + 1, left - v, entries + [((r, j), v)])
            remaining[j] += v

    if not rows and not cols:
        yield VACUUM
        return
    if not rows or not cols:
        return
    yield from rec(0, [])


def boson_weight_space(gamma: GlWeight, support: int | None = None) -> list[MatrixNat]:
    """All M of weight gamma.

    The weight fixes the row sums (-c_k at letter k <= 0) and column sums
    (c_l at letter l > 0), so the weight space is the finite set of
    contingency tables with those margins.  ``support`` is accepted for
    interface compatibility and must cover the weight's support.
    """
    if not gamma.is_boson_weight():
        raise ValueError(f"{gamma} is not a weight of the vacuum module")
    row_sums = {k - 1: -v for k, v in gamma.coords.items() if k <= 0}
    col_sums = {k - 1: v for k, v in gamma.coords.items() if k > 0}
    if support is not None:
        if any(-i > support for i in row_sums) or any(j + 1 > support for j in col_sums):
            raise ValueError("support bound truncates the weight space")
    return sorted(_margin_matrices(row_sums, col_sums))


class HSet(NamedTuple):
    base: PartitionPair
    level: int
    weight: GlWeight
    members: list

    @property
    def size(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {"size": self.size, "members": [M.to_json() for M in self.members]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def h_set(mn: PartitionPair, gamma: GlWeight, n: int) -> HSet:
    """Elements b of weight gamma with eps_i(b) <= <h_i, Lambda^n_{mu,nu}> for
    all colors i, i.e. M^n(mu,nu) x b is a highest element."""
    mu, nu = mn
    if n < len(mu) + len(nu):
        raise ValueError(f"n={n} is below l(mu)+l(nu)={len(mu) + len(nu)}")
    members = []
    for M in boson_weight_space(gamma):
        ok = True
        for c in boson_colors(M):
            if boson_eps_phi(c, M)[0] > pairing_h_lambda(c, mn, n):
                ok = False
                break
        if ok:
            members.append(M)
    return HSet(mn, n, gamma, members)


def socle_weight(top: PartitionPair, bottom: PartitionPair, n: int) -> GlWeight:
    """Lambda^n_top - Lambda^n_bottom."""
    return lambda_weight(top, n) - lambda_weight(bottom, n)


def h_set_multiplicity(top: PartitionPair, bottom: PartitionPair, n: int | None = None) -> int:
    """|H^n_gamma(bottom)| with gamma = Lambda_top - Lambda_bottom."""
    if n is None:
        n = len(top[0]) + len(top[1]) + 2
    n = max(n, len(bottom[0]) + len(bottom[1]))
    gamma = socle_weight(top, bottom, n)
    if not gamma.is_boson_weight():
        return 0
    return h_set(bottom, gamma, n).size
