"""Maps between groups: homomorphism checks, automorphism counting and
isomorphism search by backtracking over images of a generating set."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import BudgetExceeded
from .kernel import Group, cyclic_group
from .structure import center, class_sizes, derived_subgroup, direct_product

DEFAULT_ISO_BUDGET = 10**7
DEFAULT_AUT_BUDGET = 10**8


@dataclass(frozen=True, eq=False)
class GroupMap:
    source: Group
    target: Group
    images: np.ndarray

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def compose(self, other: GroupMap) -> GroupMap:
        """``self ∘ other`` (apply ``other`` first)."""
        return GroupMap(other.source, self.target, self.images[other.images])

    def kernel_members(self) -> np.ndarray:
        return self.images == 0

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and \
            np.unique(self.images).size == self.source.order


def is_homomorphism(m: GroupMap) -> bool:
    img = np.asarray(m.images)
    if img.shape != (m.source.order,) or img.min() < 0 or img.max() >= m.target.order:
        return False
    if img[0] != 0:
        return False
    return bool((img[m.source.table] == m.target.table[img[:, None], img[None, :]]).all())


def identity_map(g: Group) -> GroupMap:
    return GroupMap(g, g, np.arange(g.order))


def power_of_map(m: GroupMap, k: int) -> GroupMap:
    out = identity_map(m.source)
    for _ in range(k):
        out = m.compose(out)
    return out


def fingerprint(g: Group) -> tuple:
    pairs = Counter(zip(g.element_orders.tolist(), class_sizes(g).tolist()))
    return (g.order, tuple(sorted(pairs.items())), center(g).order, derived_subgroup(g).order)


class _Search:
    """Enumerate injective homomorphisms ``src -> dst`` fixed by their values on
    ``src.generators``; candidates must match element order and class size."""

    def __init__(self, src: Group, dst: Group, budget: int):
        self.src, self.dst = src, dst
        self.st = src.table.tolist()
        self.dt = dst.table.tolist()
        self.gens = list(src.generators)
        self.budget = budget
        self.nodes = 0
        s_key = list(zip(src.element_orders.tolist(), class_sizes(src).tolist()))
        d_key = list(zip(dst.element_orders.tolist(), class_sizes(dst).tolist()))
        by_key: dict = {}
        for y, k in enumerate(d_key):
            by_key.setdefault(k, []).append(y)
        self.candidates = [by_key.get(s_key[x], []) for x in self.gens]

    def _extend(self, images: list[int]) -> list[int] | None:
        """Map on ⟨gens[:len(images)]⟩ or None if inconsistent / not injective."""
        st, dt = self.st, self.dt
        gens = self.gens[:len(images)]
        img = {0: 0}
        used = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            fx = img[x]
            for g, h in zip(gens, images):
                y = st[x][g]
                fy = dt[fx][h]
                prev = img.get(y)
                if prev is None:
                    if fy in used:
                        return None
                    img[y] = fy
                    used.add(fy)
                    queue.append(y)
                elif prev != fy:
                    return None
        return img

    def solutions(self) -> Iterator[dict]:
        k = len(self.gens)
        chosen: list[int] = []

        def rec(level: int):
            if level == k:
                yield self._extend(chosen)
                return
            for h in self.candidates[level]:
                self.nodes += 1
                if self.nodes > self.budget:
                    raise BudgetExceeded(f"search exceeded {self.budget} nodes")
                chosen.append(h)
                if level + 1 == k:
                    img = self._extend(chosen)
                    if img is not None:
                        yield img
                elif self._extend(chosen) is not None:
                    yield from rec(level + 1)
                chosen.pop()

        if k == 0:
            yield {0: 0}
            return
        yield from rec(0)


def automorphism_group_order(g: Group, budget: int = DEFAULT_AUT_BUDGET) -> int:
    """Exact ``|Aut(g)|`` by counting admissible images of a generating set."""
    search = _Search(g, g, budget)
    return sum(1 for img in search.solutions() if len(img) == g.order)


def find_isomorphism(a: Group, b: Group, budget: int = DEFAULT_ISO_BUDGET) -> GroupMap | None:
    if fingerprint(a) != fingerprint(b):
        return None
    search = _Search(a, b, budget)
    for img in search.solutions():
        if len(img) == a.order:
            images = np.empty(a.order, dtype=np.int64)
            for x, y in img.items():
                images[x] = y
            return GroupMap(a, b, images)
    return None


def are_isomorphic(a: Group, b: Group, budget: int = DEFAULT_ISO_BUDGET) -> bool:
    return find_isomorphism(a, b, budget) is not None


def homocyclic_carrier(n: int) -> Group:
    """``C_{2^n} × C_{2^n}``; element ``(a, b)`` (exponents) sits at index ``a*2^n + b``."""
    c = cyclic_group(2 ** n)
    g = direct_product(c, c)
    g.name = f"C{2 ** n}xC{2 ** n}"
    return g


def make_gamma(n: int, carrier: Group | None = None) -> GroupMap:
    """The order-3 automorphism ``(a, b) -> (b, (ab)^-1)`` of ``C_{2^n}²``."""
    if n < 1:
        raise ValueError("n must be positive")
    m = 2 ** n
    carrier = carrier if carrier is not None else homocyclic_carrier(n)
    if carrier.order != m * m:
        raise ValueError("carrier does not match n")
    a, b = np.divmod(np.arange(m * m), m)
    images = b * m + (-(a + b)) % m
    return GroupMap(carrier, carrier, images)
