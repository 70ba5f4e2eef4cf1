"""Partitions, partition pairs, Littlewood-Richardson coefficients and
the gl weight bookkeeping used by the extremal weight crystals."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"not a partition: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """lambda_i with 1-based i; zero past the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def cells(self):
        return [(r, c) for r, row in enumerate(self) for c in range(row)]

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")" if self else "()"


EMPTY = Partition()


def conjugate(lam: Iterable[int]) -> Partition:
    lam = list(lam)
    if not lam:
        return EMPTY
    return Partition([sum(1 for p in lam if p > j) for j in range(lam[0])])


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def partitions_up_to(n: int) -> list[Partition]:
    return [p for k in range(n + 1) for p in partitions_of(k)]


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """Partitions with at most ``rows`` parts, each at most ``cols``."""
    out = []

    def rec(prefix, cap):
        out.append(Partition(prefix))
        if len(prefix) == rows:
            return
        for p in range(1, cap + 1):
            rec(prefix + [p], p)

    rec([], cols)
    return sorted(out, key=lambda p: (p.size, [-x for x in p]))


class PartitionPair(NamedTuple):
    plus: Partition
    minus: Partition

    @classmethod
    def of(cls, plus=(), minus=()) -> "PartitionPair":
        return cls(Partition(plus), Partition(minus))

    def __str__(self):
        return f"({self.plus},{self.minus})"


def pair_order_ge(a: PartitionPair, b: PartitionPair) -> bool:
    """(mu,nu) >= (zeta,eta): equal charge and componentwise containment."""
    mu, nu = a
    zeta, eta = b
    if mu.size - nu.size != zeta.size - eta.size:
        return False
    return Partition(mu).contains(Partition(zeta)) and Partition(nu).contains(Partition(eta))


def pairs_below(a: PartitionPair) -> list[PartitionPair]:
    """All (zeta,eta) with a >= (zeta,eta)."""
    mu, nu = a
    out = []
    for z in _subpartitions(mu):
        for e in _subpartitions(nu):
            pr = PartitionPair(z, e)
            if pair_order_ge(a, pr):
                out.append(pr)
    return sorted(out, key=pair_sort_key)


def _subpartitions(lam: Partition) -> list[Partition]:
    out = []

    def rec(i, prefix):
        if i == len(lam):
            out.append(Partition(prefix))
            return
        cap = lam[i] if not prefix else min(lam[i], prefix[-1])
        for p in range(cap + 1):
            rec(i + 1, prefix + [p])

    rec(0, [])
    return sorted(set(out), key=lambda p: (p.size, [-x for x in p]))


def pair_sort_key(pr: PartitionPair):
    mu, nu = pr
    return (mu.size + nu.size, mu.size, [-x for x in mu], [-x for x in nu])


def integer_vector(mn: PartitionPair, n: int) -> tuple[int, ...]:
    """The weakly decreasing integer n-vector (mu, 0, ..., 0, -reverse(nu))."""
    mu, nu = mn
    if n < len(mu) + len(nu):
        raise ValueError(f"n={n} is smaller than l(mu)+l(nu)={len(mu) + len(nu)}")
    return tuple(mu) + (0,) * (n - len(mu) - len(nu)) + tuple(-x for x in reversed(nu))


def pair_from_vector(lam: Iterable[int]) -> PartitionPair:
    lam = list(lam)
    for a, b in zip(lam, lam[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {lam}")
    return PartitionPair(Partition(x for x in lam if x > 0),
                         Partition(-x for x in reversed(lam) if x < 0))


def pairing_h_lambda(i: int, mn: PartitionPair, n: int) -> int:
    """<h_i, Lambda^n_{mu,nu}> = #{j : lambda_j = i}."""
    return sum(1 for x in integer_vector(mn, n) if x == i)


class GlWeight:
    """Integral weight sum_i c_i eps_i + l * Lambda_0 of gl over Z."""

    __slots__ = ("coords", "lambda0")

    def __init__(self, coords=None, lambda0: int = 0):
        self.coords = {int(i): int(c) for i, c in (coords or {}).items() if c}
        self.lambda0 = int(lambda0)

    def __getitem__(self, i: int) -> int:
        return self.coords.get(i, 0)

    def _key(self):
        return (tuple(sorted(self.coords.items())), self.lambda0)

    def __eq__(self, other):
        return isinstance(other, GlWeight) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __add__(self, other: "GlWeight") -> "GlWeight":
        c = dict(self.coords)
        for i, v in other.coords.items():
            c[i] = c.get(i, 0) + v
        return GlWeight(c, self.lambda0 + other.lambda0)

    def __neg__(self):
        return GlWeight({i: -v for i, v in self.coords.items()}, -self.lambda0)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        return GlWeight({i: k * v for i, v in self.coords.items()}, k * self.lambda0)

    __rmul__ = __mul__

    def h_pairing(self, i: int) -> int:
        """<h_i, wt> with h_i = E_ii - E_{i+1,i+1} + delta_{i0} K."""
        return self[i] - self[i + 1] + (self.lambda0 if i == 0 else 0)

    def is_boson_weight(self) -> bool:
        """Whether the weight lies in the weight set of the vacuum module."""
        return (self.lambda0 == 0 and sum(self.coords.values()) == 0
                and all((c >= 0) if i > 0 else (c <= 0) for i, c in self.coords.items()))

    def __repr__(self):
        terms = [f"{c}e{i}" for i, c in sorted(self.coords.items())]
        if self.lambda0:
            terms.append(f"{self.lambda0}L0")
        return "GlWeight(" + (" + ".join(terms) or "0") + ")"


def eps(i: int) -> GlWeight:
    return GlWeight({i: 1})


def alpha(i: int) -> GlWeight:
    return GlWeight({i: 1, i + 1: -1})


def fundamental(i: int) -> GlWeight:
    """Lambda_i: Lambda_0 + eps_1 + ... + eps_i, or Lambda_0 - eps_{i+1} - ... - eps_0."""
    if i >= 0:
        return GlWeight({k: 1 for k in range(1, i + 1)}, 1)
    return GlWeight({k: -1 for k in range(i + 1, 1)}, 1)


def lambda_weight(mn: PartitionPair, n: int) -> GlWeight:
    """Lambda^n_{mu,nu} = sum_j Lambda_{lambda_j}."""
    out = GlWeight()
    for x in integer_vector(mn, n):
        out = out + fundamental(x)
    return out


def extremal_weight(mn: PartitionPair, N: int | None = None) -> GlWeight:
    """eps_{mu,nu} = sum mu_i eps_i - sum nu_j eps_{N+1-j} for gl_N (or gl_{>0}
    with the minus part placed at -infinity, in which case only mu is kept
    and N must be given to place nu)."""
    mu, nu = mn
    c = {i + 1: p for i, p in enumerate(mu)}
    if nu:
        if N is None:
            raise ValueError("rank needed to place the negative part")
        for j, p in enumerate(nu):
            c[N - j] = c.get(N - j, 0) - p
    return GlWeight(c)


# -- Littlewood-Richardson ----------------------------------------------------

@lru_cache(maxsize=None)
def _lr(lam: tuple, mu: tuple, nu: tuple) -> int:
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if len(mu) > len(lam) or any(a < b for a, b in zip(lam, mu)):
        return 0
    if len(nu) > len(lam):
        return 0
    if not nu:
        return 1
    # cells of lam/mu in reverse reading order: rows top to bottom, right to left
    cells = []
    for r, row in enumerate(lam):
        start = mu[r] if r < len(mu) else 0
        for c in range(row - 1, start - 1, -1):
            cells.append((r, c))
    k = len(nu)
    filling = {}
    counts = [0] * (k + 1)

    def rec(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        right = filling.get((r, c + 1))
        above = filling.get((r - 1, c)) if r > 0 else None
        lo = (above + 1) if above is not None else 1
        hi = right if right is not None else k
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += rec(idx + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    return rec(0)


def lr_coefficient(lam, mu, nu) -> int:
    """c^lam_{mu nu} by counting LR skew tableaux of shape lam/mu, content nu."""
    return _lr(tuple(Partition(lam)), tuple(Partition(mu)), tuple(Partition(nu)))


def lr_product(mu, nu) -> dict[Partition, int]:
    """s_mu s_nu = sum c^lam_{mu nu} s_lam."""
    mu, nu = Partition(mu), Partition(nu)
    out = {}
    for lam in partitions_of(mu.size + nu.size):
        if not lam.contains(mu) or not lam.contains(nu):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[lam] = c
    return out


def lr_skew(lam, mu) -> dict[Partition, int]:
    """s_{lam/mu} = sum_nu c^lam_{mu nu} s_nu."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return {}
    out = {}
    for nu in partitions_of(lam.size - mu.size):
        if not lam.contains(nu):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


# -- serialization -------------------------------------------------------------

def partition_to_json(lam: Partition) -> list[int]:
    return list(lam)


def pair_to_json(pr: PartitionPair) -> dict:
    return {"plus": list(pr.plus), "minus": list(pr.minus)}


def pair_from_json(obj: dict) -> PartitionPair:
    return PartitionPair.of(obj.get("plus", ()), obj.get("minus", ()))


def parse_partition(text: str) -> Partition:
    """Comma separated parts; the empty string is the empty partition."""
    text = text.strip()
    if not text or text in ("()", "0"):
        return EMPTY
    return Partition(int(x) for x in text.strip("()").split(",") if x.strip())
