"""gl_N crystals of semistandard tableaux, dual tableaux and bitableaux.

Payloads:

* a tableau is a tuple of row tuples with entries in 1..N;
* a dual tableau of rotated shape nu^pi is stored after a half turn, i.e.
  as an ordinary semistandard tableau R of shape nu whose entry k stands for
  the dual letter k^v (weight -eps_k).  Row i from the bottom and column j
  from the right of the rotated tableau is R[i][j] (1-based);
* a bitableau is the pair (S, R).

Tableaux act through their column words: columns right to left, each
column read top to bottom.  For a rotated dual tableau this is the columns
of R left to right, each read bottom to top.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .crystal import (CrystalHandle, MultiplicityTable, count_highest_in_tensor,
                      isomorphic_from, signature, tensor)
from .partitions import (GlWeight, Partition, PartitionPair, alpha, conjugate,
                         pair_from_vector, partitions_of)


# -- single letters -----------------------------------------------------------

def letter_eps_phi(i: int, k: int, dual: bool) -> tuple[int, int]:
    if dual:
        return (1 if k == i else 0, 1 if k == i + 1 else 0)
    return (1 if k == i + 1 else 0, 1 if k == i else 0)


def letter_apply(op: str, i: int, k: int, dual: bool):
    if dual:
        if op == "f":
            return i if k == i + 1 else None
        return i + 1 if k == i else None
    if op == "f":
        return i + 1 if k == i else None
    return i if k == i + 1 else None


def word_apply(op: str, i: int, letters, duals):
    """Act on a word of (possibly dual) letters; returns a new list or None."""
    pairs = [letter_eps_phi(i, k, d) for k, d in zip(letters, duals)]
    _, _, ep, fp = signature(pairs)
    pos = ep if op == "e" else fp
    if pos is None:
        return None
    out = list(letters)
    out[pos] = letter_apply(op, i, letters[pos], duals[pos])
    return out


def word_eps_phi(i: int, letters, duals) -> tuple[int, int]:
    pairs = [letter_eps_phi(i, k, d) for k, d in zip(letters, duals)]
    ep, ph, _, _ = signature(pairs)
    return ep, ph


# -- shapes and reading orders -----------------------------------------------

@lru_cache(maxsize=None)
def column_positions(shape: tuple) -> tuple:
    """Cells of a straight shape in column-word order (right to left, top down)."""
    conj = conjugate(shape)
    return tuple((r, c) for c in reversed(range(len(conj))) for r in range(conj[c]))


@lru_cache(maxsize=None)
def dual_column_positions(shape: tuple) -> tuple:
    """Cells of R (the half-turned dual tableau) in column-word order of nu^pi."""
    conj = conjugate(shape)
    return tuple((r, c) for c in range(len(conj)) for r in reversed(range(conj[c])))


def _read(t, positions):
    return [t[r][c] for r, c in positions]


def _write(shape, positions, letters):
    rows = [[0] * p for p in shape]
    for (r, c), v in zip(positions, letters):
        rows[r][c] = v
    return tuple(tuple(row) for row in rows)


def shape_of(t) -> Partition:
    return Partition(len(row) for row in t)


# -- enumeration ----------------------------------------------------------------

def semistandard_tableaux(shape, N: int) -> Iterator[tuple]:
    """All SST of the given shape with entries in 1..N (row by row)."""
    shape = tuple(Partition(shape))
    rows: list[list[int]] = []

    def fill_row(r, c, row):
        if c == shape[r]:
            rows.append(row)
            yield from rec(r + 1)
            rows.pop()
            return
        lo = row[-1] if row else 1
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, N + 1):
            yield from fill_row(r, c + 1, row + [v])

    def rec(r):
        if r == len(shape):
            yield tuple(tuple(x) for x in rows)
            return
        yield from fill_row(r, 0, [])

    yield from rec(0)


def highest_tableau(shape) -> tuple:
    """H_mu: row i filled with i."""
    return tuple(tuple([i + 1] * p) for i, p in enumerate(Partition(shape)))


def bitableau_condition(S, R, N: int) -> bool:
    """#{i: S[i][0] <= k} + #{i: T_(i,1) >= k^v} <= k for all k."""
    a = [row[0] for row in S]
    b = [row[0] for row in R]
    for k in range(1, N + 1):
        if sum(1 for x in a if x <= k) + sum(1 for x in b if x <= k) > k:
            return False
    return True


# -- weights ---------------------------------------------------------------------

def tableau_weight(t) -> GlWeight:
    c: dict[int, int] = {}
    for row in t:
        for v in row:
            c[v] = c.get(v, 0) + 1
    return GlWeight(c)


def dual_weight(t) -> GlWeight:
    return -tableau_weight(t)


def weight_vector(w: GlWeight, N: int) -> tuple[int, ...]:
    return tuple(w[k] for k in range(1, N + 1))


def pair_label(w: GlWeight, N: int) -> PartitionPair:
    """Dominant gl_N weight -> (mu, nu) with eps_mu - reversed eps_nu."""
    return pair_from_vector(weight_vector(w, N))


# -- handles ---------------------------------------------------------------------

def _fmt_tableau(t) -> str:
    return "[" + "|".join(",".join(map(str, row)) for row in t) + "]"


def _fmt_dual(t) -> str:
    return "[" + "|".join(",".join(f"{v}v" for v in row) for row in t) + "]"


def sst_crystal(mu, N: int) -> CrystalHandle:
    """Crystal of SST(mu) over the alphabet 1..N (colors 1..N-1)."""
    if N < 1:
        raise ValueError("N must be positive")
    shape = tuple(Partition(mu))
    pos = column_positions(shape)
    duals = [False] * len(pos)

    def act(op, i, t):
        w = word_apply(op, i, _read(t, pos), duals)
        return None if w is None else _write(shape, pos, w)

    def eps(i, t):
        return word_eps_phi(i, _read(t, pos), duals)[0]

    def ph(i, t):
        return word_eps_phi(i, _read(t, pos), duals)[1]

    return CrystalHandle(
        range(1, N), lambda i, t: act("e", i, t), lambda i, t: act("f", i, t),
        tableau_weight, epsilon=eps, phi=ph,
        seeds=[highest_tableau(shape)] if len(shape) <= N else [],
        fmt=_fmt_tableau, alpha=alpha, name=f"SST{shape}_N{N}",
        elements=lambda: semistandard_tableaux(shape, N))


def dual_sst_crystal(nu, N: int) -> CrystalHandle:
    """Crystal of SST_v(nu^pi) with letters N^v < ... < 1^v."""
    if N < 1:
        raise ValueError("N must be positive")
    shape = tuple(Partition(nu))
    pos = dual_column_positions(shape)
    duals = [True] * len(pos)

    def act(op, i, t):
        w = word_apply(op, i, _read(t, pos), duals)
        return None if w is None else _write(shape, pos, w)

    def eps(i, t):
        return word_eps_phi(i, _read(t, pos), duals)[0]

    def ph(i, t):
        return word_eps_phi(i, _read(t, pos), duals)[1]

    return CrystalHandle(
        range(1, N), lambda i, t: act("e", i, t), lambda i, t: act("f", i, t),
        dual_weight, epsilon=eps, phi=ph,
        seeds=[highest_tableau(shape)] if len(shape) <= N else [],
        fmt=_fmt_dual, alpha=alpha, name=f"SSTdual{shape}_N{N}",
        elements=lambda: semistandard_tableaux(shape, N))


def bitableaux_elements(mu, nu, N: int) -> list:
    mu, nu = Partition(mu), Partition(nu)
    Ts = list(semistandard_tableaux(nu, N))
    return [(S, R) for S in semistandard_tableaux(mu, N) for R in Ts
            if bitableau_condition(S, R, N)]


def bitableaux_crystal(mu, nu, N: int) -> CrystalHandle:
    """The extremal weight crystal B_{mu,nu} truncated to letters 1..N.

    Elements are pairs (S, R) read as the word colword(S) + colword(T).
    """
    mu, nu = Partition(mu), Partition(nu)
    if N < len(mu) + len(nu):
        raise ValueError(f"N={N} is below l(mu)+l(nu)={len(mu) + len(nu)}")
    smu, snu = tuple(mu), tuple(nu)
    ps, pt = column_positions(smu), dual_column_positions(snu)
    duals = [False] * len(ps) + [True] * len(pt)
    cut = len(ps)

    def word(b):
        return _read(b[0], ps) + _read(b[1], pt)

    def act(op, i, b):
        w = word_apply(op, i, word(b), duals)
        if w is None:
            return None
        return (_write(smu, ps, w[:cut]), _write(snu, pt, w[cut:]))

    def weight(b):
        return tableau_weight(b[0]) + dual_weight(b[1])

    def fmt(b):
        return _fmt_tableau(b[0]) + "/" + _fmt_dual(b[1])

    seed = (highest_tableau(smu), _lowest_dual_seed(snu, N))
    return CrystalHandle(
        range(1, N), lambda i, b: act("e", i, b), lambda i, b: act("f", i, b),
        weight, epsilon=lambda i, b: word_eps_phi(i, word(b), duals)[0],
        phi=lambda i, b: word_eps_phi(i, word(b), duals)[1],
        seeds=[seed], fmt=fmt, alpha=alpha, name=f"B{smu}{snu}_N{N}",
        elements=lambda: bitableaux_elements(mu, nu, N))


def _lowest_dual_seed(nu: tuple, N: int) -> tuple:
    # column c of R holds N-h+1..N (h its height): weight -(nu reversed at
    # the end of 1..N), the highest weight of the dual module
    conj = conjugate(nu)
    return tuple(tuple(N - conj[c] + r + 1 for c in range(p)) for r, p in enumerate(nu))


def verify_bitableaux_iso(mu, nu, N: int) -> bool:
    """B_{mu,nu} ~ B_{0,nu} x B_{mu,0} at rank N.

    Matches the component of H_nu^v x H_mu in the tensor product with the
    bitableaux crystal through their highest elements and compares the
    colored graphs.
    """
    mu, nu = Partition(mu), Partition(nu)
    B = bitableaux_crystal(mu, nu, N)
    T = tensor(dual_sst_crystal(nu, N), sst_crystal(mu, N))
    start = (highest_tableau(nu), highest_tableau(mu))
    comp = _component(T, start)
    elems = bitableaux_elements(mu, nu, N)
    if len(comp) != len(elems):
        return False
    top_b = [b for b in elems if B.is_highest(b)]
    top_t = [b for b in comp if T.is_highest(b)]
    if len(top_b) != 1 or len(top_t) != 1:
        return False
    if B.weight(top_b[0]) != T.weight(top_t[0]):
        return False
    return isomorphic_from(B, top_b[0], T, top_t[0])


def _component(h: CrystalHandle, start) -> list:
    from .crystal import closure
    return closure(h, [start])


def highest_count_table(mu, nu, N: int) -> MultiplicityTable:
    """Decompose B_{mu,0} x B_{0,nu} at rank N by counting highest elements."""
    A = sst_crystal(mu, N)
    D = dual_sst_crystal(nu, N)
    return count_highest_in_tensor(
        A, list(A.elements()), D, list(D.elements()),
        label=lambda b: pair_label(tableau_weight(b[0]) + dual_weight(b[1]), N))


def tensor_decompose(mu_nu: PartitionPair, sigma_tau: PartitionPair, N: int,
                     method: str = "components") -> MultiplicityTable:
    """Decompose B_{mu,nu} x B_{sigma,tau} truncated at rank N."""
    A = bitableaux_crystal(mu_nu[0], mu_nu[1], N)
    B = bitableaux_crystal(sigma_tau[0], sigma_tau[1], N)

    def label(b):
        return pair_label(A.weight(b[0]) + B.weight(b[1]), N)

    if method == "highest":
        return count_highest_in_tensor(A, A.elements(), B, B.elements(), label)
    from .crystal import decompose_multiplicities
    T = tensor(A, B)
    return decompose_multiplicities(T, T.elements(), label=label)


def stabilization_rank(mu_nu: PartitionPair, sigma_tau: PartitionPair,
                       max_N: int | None = None) -> int:
    """Smallest N from which the truncated tensor tables agree up to max_N."""
    (mu, nu), (sg, tu) = mu_nu, sigma_tau
    lo = max(len(mu) + len(nu), len(sg) + len(tu), 1)
    if max_N is None:
        max_N = mu.size + nu.size + sg.size + tu.size + 2
    max_N = max(max_N, lo)
    final = tensor_decompose(mu_nu, sigma_tau, max_N, method="highest")
    first = max_N
    for N in range(max_N - 1, lo - 1, -1):
        if tensor_decompose(mu_nu, sigma_tau, N, method="highest") != final:
            break
        first = N
    return first


def lr_via_crystal(lam, mu, nu) -> int:
    """c^lam_{mu nu} as the number of highest elements of weight eps_lam in
    SST(mu) x SST(nu) over the alphabet 1..|mu|+|nu|."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size:
        return 0
    N = max(mu.size + nu.size, 1)
    return lr_table_via_crystal(mu, nu, N).get(lam, 0)


@lru_cache(maxsize=None)
def _lr_table(mu: tuple, nu: tuple, N: int):
    A = sst_crystal(mu, N)
    B = sst_crystal(nu, N)
    table = count_highest_in_tensor(
        A, list(A.elements()), B, list(B.elements()),
        label=lambda b: Partition(weight_vector(tableau_weight(b[0]) + tableau_weight(b[1]), N)))
    return dict(table)


def lr_table_via_crystal(mu, nu, N: int) -> dict:
    return dict(_lr_table(tuple(Partition(mu)), tuple(Partition(nu)), N))


# -- serialization ----------------------------------------------------------------

def tableau_to_json(t) -> list:
    return [list(row) for row in t]


def dual_to_json(t) -> list:
    """Rows of the rotated dual tableau, top to bottom, letters k^v as -k."""
    rows = [list(reversed(row)) for row in reversed(t)]
    return [[-v for v in row] for row in rows]


def bitableau_to_json(b) -> dict:
    return {"S": tableau_to_json(b[0]), "T": dual_to_json(b[1])}
