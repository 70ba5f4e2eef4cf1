"""Generic crystal engine.

A crystal is described by a :class:`CrystalHandle`: a set of colors and
callbacks computing the Kashiwara operators on single hashable payloads.
Tensor products use the signature rule in the convention

    f_i(b1 x b2) = f_i b1 x b2  if phi_i(b1) > eps_i(b2), else b1 x f_i b2
    e_i(b1 x b2) = e_i b1 x b2  if phi_i(b1) >= eps_i(b2), else b1 x e_i b2

which, for a word of many factors, amounts to cancelling adjacent
``+ -`` pairs and acting on the leftmost free ``+`` (f) or the rightmost
free ``-`` (e).
"""
from __future__ import annotations

import json
import os
from collections import deque
from typing import Callable, Hashable, Iterable, NamedTuple, Sequence

from .partitions import GlWeight, PartitionPair, pair_sort_key, pair_to_json

DEFAULT_BUDGET = 5_000_000


class BudgetExceeded(RuntimeError):
    """Raised when a closure grows past the element budget."""


def element_budget() -> int:
    env = os.environ.get("CRYSTALKIT_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


# -- signature rule -----------------------------------------------------------

def signature(pairs: Sequence[tuple[int, int]]):
    """Reduce a word of (eps, phi) pairs.

    Returns ``(eps, phi, e_pos, f_pos)``: the string lengths of the tensor
    product and the factor positions hit by e and f (None when the
    operator gives 0).
    """
    stack = []  # [position, free plus count]
    free_minus = 0
    e_pos = None
    for pos, (ep, ph) in enumerate(pairs):
        while ep and stack:
            take = min(ep, stack[-1][1])
            ep -= take
            stack[-1][1] -= take
            if not stack[-1][1]:
                stack.pop()
        if ep:
            free_minus += ep
            e_pos = pos
        if ph:
            stack.append([pos, ph])
    free_plus = sum(c for _, c in stack)
    f_pos = stack[0][0] if stack else None
    return free_minus, free_plus, e_pos, f_pos


def tensor_rule(op: str, eps_phi_1: tuple[int, int], eps_phi_2: tuple[int, int]) -> int:
    """Which factor (0 or 1) of b1 x b2 the operator acts on."""
    phi1 = eps_phi_1[1]
    eps2 = eps_phi_2[0]
    if op == "f":
        return 0 if phi1 > eps2 else 1
    return 0 if phi1 >= eps2 else 1


# -- handles ------------------------------------------------------------------

class CrystalHandle:
    """Callbacks defining a crystal on hashable payloads.

    ``e(i, b)`` / ``f(i, b)`` return the new payload or None.  ``epsilon`` and
    ``phi`` may be given for speed; otherwise they are string lengths.
    ``weight(b)`` returns a hashable weight.  ``key`` gives the canonical
    sort key of payloads and ``fmt`` their string form.
    """

    def __init__(self, colors: Iterable[Hashable], e: Callable, f: Callable,
                 weight: Callable, *, epsilon: Callable | None = None,
                 phi: Callable | None = None, seeds: Iterable = (),
                 key: Callable | None = None, fmt: Callable | None = None,
                 alpha: Callable | None = None, name: str = "crystal",
                 elements: Callable | None = None):
        self.colors = list(colors)
        self.e = e
        self.f = f
        self.weight = weight
        self._epsilon = epsilon
        self._phi = phi
        self.seeds = list(seeds)
        self.key = key or (lambda b: b)
        self.fmt = fmt or str
        self.alpha = alpha
        self.name = name
        self._elements = elements

    def epsilon(self, i, b) -> int:
        if self._epsilon is not None:
            return self._epsilon(i, b)
        k = 0
        while (b := self.e(i, b)) is not None:
            k += 1
        return k

    def phi(self, i, b) -> int:
        if self._phi is not None:
            return self._phi(i, b)
        k = 0
        while (b := self.f(i, b)) is not None:
            k += 1
        return k

    def is_highest(self, b) -> bool:
        return all(self.epsilon(i, b) == 0 for i in self.colors)

    def elements(self) -> list:
        """All elements, by direct enumeration if available, else closure."""
        if self._elements is not None:
            return sorted(self._elements(), key=self.key)
        return closure(self, self.seeds)

    def apply(self, op: str, i, b):
        return self.e(i, b) if op == "e" else self.f(i, b)


def epsilon(i, b, handle: CrystalHandle) -> int:
    return handle.epsilon(i, b)


def phi(i, b, handle: CrystalHandle) -> int:
    return handle.phi(i, b)


def tensor(*handles: CrystalHandle, colors=None, name: str | None = None) -> CrystalHandle:
    """Tensor product crystal on tuples (b1, ..., bk) of factor payloads."""
    if colors is None:
        colors = handles[0].colors
        for h in handles[1:]:
            colors = [c for c in colors if c in h.colors]
    colors = list(colors)

    def word(i, b):
        return [(h.epsilon(i, x), h.phi(i, x)) for h, x in zip(handles, b)]

    def act(op, i, b):
        _, _, ep, fp = signature(word(i, b))
        pos = ep if op == "e" else fp
        if pos is None:
            return None
        new = handles[pos].apply(op, i, b[pos])
        if new is None:
            return None
        return b[:pos] + (new,) + b[pos + 1:]

    def weight(b):
        out = handles[0].weight(b[0])
        for h, x in zip(handles[1:], b[1:]):
            out = out + h.weight(x)
        return out

    def key(b):
        return tuple(h.key(x) for h, x in zip(handles, b))

    def fmt(b):
        return " (x) ".join(h.fmt(x) for h, x in zip(handles, b))

    def elements():
        out = [()]
        for h in handles:
            out = [b + (x,) for b in out for x in h.elements()]
        return out

    return CrystalHandle(
        colors, lambda i, b: act("e", i, b), lambda i, b: act("f", i, b), weight,
        epsilon=lambda i, b: signature(word(i, b))[0],
        phi=lambda i, b: signature(word(i, b))[1],
        seeds=[tuple(x) for x in _product_seeds(handles)],
        key=key, fmt=fmt, alpha=handles[0].alpha,
        name=name or " (x) ".join(h.name for h in handles),
        elements=elements)


def _product_seeds(handles):
    out = [()]
    for h in handles:
        out = [b + (s,) for b in out for s in h.seeds[:1]]
    return out


def tensor_apply(i, op: str, b: tuple, handles: Sequence[CrystalHandle]):
    """Apply e or f of color i to the tensor word b by the signature rule."""
    pairs = [(h.epsilon(i, x), h.phi(i, x)) for h, x in zip(handles, b)]
    _, _, ep, fp = signature(pairs)
    pos = ep if op == "e" else fp
    if pos is None:
        return None
    new = handles[pos].apply(op, i, b[pos])
    if new is None:
        return None
    return tuple(b[:pos]) + (new,) + tuple(b[pos + 1:])


# -- closures and components --------------------------------------------------

def closure(handle: CrystalHandle, seeds: Iterable, budget: int | None = None) -> list:
    """All elements reachable from seeds under every e_i and f_i."""
    if budget is None:
        budget = element_budget()
    seen = set()
    queue = deque()
    for s in seeds:
        if s not in seen:
            seen.add(s)
            queue.append(s)
    if len(seen) > budget:
        raise BudgetExceeded(f"{len(seen)} seeds exceed budget {budget}")
    while queue:
        b = queue.popleft()
        for i in handle.colors:
            for nb in (handle.e(i, b), handle.f(i, b)):
                if nb is not None and nb not in seen:
                    seen.add(nb)
                    if len(seen) > budget:
                        raise BudgetExceeded(
                            f"closure of {handle.name} exceeds budget {budget}")
                    queue.append(nb)
    return sorted(seen, key=handle.key)


class Component(NamedTuple):
    highest: object
    elements: list


def weight_key(w):
    if isinstance(w, GlWeight):
        return w._key()
    return w


def components(seeds: Iterable, handle: CrystalHandle, budget: int | None = None) -> list[Component]:
    """Connected components of the closure of seeds.

    Each component is labelled by its highest element (all eps_i = 0) when
    it has exactly one, else by None.  Components are ordered by the weight
    and key of their label (falling back to their smallest element).
    """
    elems = closure(handle, seeds, budget)
    seen = set()
    comps = []
    for start in elems:
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            b = queue.popleft()
            for i in handle.colors:
                for nb in (handle.e(i, b), handle.f(i, b)):
                    if nb is not None and nb not in seen:
                        seen.add(nb)
                        comp.append(nb)
                        queue.append(nb)
        comp.sort(key=handle.key)
        tops = [b for b in comp if handle.is_highest(b)]
        comps.append(Component(tops[0] if len(tops) == 1 else None, comp))

    def order(c):
        rep = c.highest if c.highest is not None else c.elements[0]
        return (c.highest is None, weight_key(handle.weight(rep)), handle.key(rep))

    comps.sort(key=order)
    return comps


def highest_elements(elements: Iterable, handle: CrystalHandle) -> list:
    return sorted((b for b in elements if handle.is_highest(b)), key=handle.key)


# -- multiplicity tables ------------------------------------------------------

class MultiplicityTable(dict):
    """Map from component labels (usually PartitionPair) to multiplicities."""

    def sorted_items(self):
        def k(item):
            lab = item[0]
            if isinstance(lab, PartitionPair):
                return (0, pair_sort_key(lab))
            return (1, weight_key(lab))
        return sorted(self.items(), key=k)

    def to_json(self) -> list:
        out = []
        for lab, m in self.sorted_items():
            pair = pair_to_json(lab) if isinstance(lab, PartitionPair) else _label_json(lab)
            out.append({"pair": pair, "mult": m})
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _label_json(lab):
    if isinstance(lab, GlWeight):
        return {"coords": {str(i): c for i, c in sorted(lab.coords.items())},
                "lambda0": lab.lambda0}
    if isinstance(lab, tuple):
        return [_label_json(x) for x in lab]
    return lab


def decompose_multiplicities(handle: CrystalHandle, seeds: Iterable,
                             label: Callable | None = None,
                             budget: int | None = None) -> MultiplicityTable:
    """Count components grouped by the label of their highest element."""
    label = label or handle.weight
    table = MultiplicityTable()
    for comp in components(seeds, handle, budget):
        if comp.highest is None:
            raise ValueError("component without a unique highest element")
        lab = label(comp.highest)
        table[lab] = table.get(lab, 0) + 1
    return table


def count_highest_in_tensor(h1: CrystalHandle, elems1: Sequence, h2: CrystalHandle,
                            elems2: Sequence, label: Callable) -> MultiplicityTable:
    """Multiplicities in B1 x B2 by counting highest elements of the tensor.

    Uses eps_i(b1 x b2) = max(eps_i(b1), eps_i(b2) - phi_i(b1) + eps_i(b1)),
    so b1 x b2 is highest iff eps_i(b1) = 0 and eps_i(b2) <= phi_i(b1) for
    every color.  When both crystals are closed and every component has a
    unique highest element this equals :func:`decompose_multiplicities`.
    """
    colors = [c for c in h1.colors if c in h2.colors]
    table = MultiplicityTable()
    left = []
    for b1 in elems1:
        if all(h1.epsilon(i, b1) == 0 for i in colors):
            left.append((b1, [h1.phi(i, b1) for i in colors]))
    right = [(b2, [h2.epsilon(i, b2) for i in colors]) for b2 in elems2]
    for b1, ph in left:
        for b2, ep in right:
            if all(e <= p for e, p in zip(ep, ph)):
                lab = label((b1, b2))
                table[lab] = table.get(lab, 0) + 1
    return table


# -- export -------------------------------------------------------------------

def to_dot(elements: Sequence, handle: CrystalHandle, max_nodes: int = 10_000,
           name: str = "crystal") -> str:
    """DOT graph with one edge b -> f_i b labelled i per color."""
    elements = sorted(elements, key=handle.key)
    truncated = len(elements) > max_nodes
    shown = elements[:max_nodes]
    index = {b: k for k, b in enumerate(shown)}
    lines = [f"digraph {_dot_id(name)} {{"]
    if truncated:
        lines.append(f"  // truncated: showing {max_nodes} of {len(elements)} nodes")
    for b, k in index.items():
        lines.append(f'  n{k} [label="{_escape(handle.fmt(b))}"];')
    for b, k in index.items():
        for i in handle.colors:
            nb = handle.f(i, b)
            if nb is not None and nb in index:
                lines.append(f'  n{k} -> n{index[nb]} [label="{_escape(str(_color_label(i)))}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _color_label(i):
    if isinstance(i, tuple):
        return "".join(str(x) for x in i)
    return i


def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def _dot_id(name: str) -> str:
    return "".join(ch if ch.isalnum() else "_" for ch in name) or "crystal"


# -- isomorphism --------------------------------------------------------------

def isomorphic_from(h1: CrystalHandle, b1, h2: CrystalHandle, b2,
                    colors=None, budget: int | None = None) -> bool:
    """Check that the components of b1 and b2 are isomorphic via b1 -> b2."""
    if budget is None:
        budget = element_budget()
    colors = list(colors if colors is not None else h1.colors)
    mapping = {b1: b2}
    image = {b2}
    queue = deque([b1])
    while queue:
        x = queue.popleft()
        y = mapping[x]
        for i in colors:
            for op in ("e", "f"):
                nx = h1.apply(op, i, x)
                ny = h2.apply(op, i, y)
                if (nx is None) != (ny is None):
                    return False
                if nx is None:
                    continue
                if nx in mapping:
                    if mapping[nx] != ny:
                        return False
                    continue
                if ny in image:
                    return False
                mapping[nx] = ny
                image.add(ny)
                if len(mapping) > budget:
                    raise BudgetExceeded("isomorphism check exceeds budget")
                queue.append(nx)
    return True
