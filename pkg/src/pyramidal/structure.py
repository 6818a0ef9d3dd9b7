"""Subgroup-level machinery on top of :class:`~pyramidal.kernel.Group`.

Subgroups are boolean membership vectors over the parent's element indices.
Everything here is exhaustive index arithmetic, which is cheap at the orders
this package deals with (a few thousand elements at most).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import (ActionNotAutomorphism, ActionNotHomomorphism, CapExceeded,
                     Not2Group, NotAbelian, NotNormal, NotSolvable)
from .kernel import DEFAULT_CAP, Group


def _memo(g: Group, key, compute):
    cache = g.__dict__.setdefault("_memo", {})
    if key not in cache:
        cache[key] = compute()
    return cache[key]


@dataclass(frozen=True, eq=False)
class SubgroupSet:
    parent: Group
    members: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.members.setflags(write=False)

    @property
    def order(self) -> int:
        return int(self.members.sum())

    def __len__(self) -> int:
        return self.order

    def __contains__(self, x) -> bool:
        return bool(self.members[x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubgroupSet):
            return NotImplemented
        return other.parent is self.parent and np.array_equal(self.members, other.members)

    def __hash__(self) -> int:
        return hash(self.members.tobytes())

    def __le__(self, other: SubgroupSet) -> bool:
        return bool((other.members | ~self.members).all())

    def __repr__(self) -> str:
        return f"<SubgroupSet of order {self.order} in {self.parent!r}>"

    @property
    def elements(self) -> np.ndarray:
        return np.flatnonzero(self.members)

    @property
    def key(self) -> bytes:
        return np.packbits(self.members).tobytes()

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return bool(self.members.all())


def _subgroup(g: Group, members: np.ndarray) -> SubgroupSet:
    return SubgroupSet(g, np.asarray(members, dtype=bool))


def trivial_subgroup(g: Group) -> SubgroupSet:
    m = np.zeros(g.order, dtype=bool)
    m[0] = True
    return _subgroup(g, m)


def whole_group(g: Group) -> SubgroupSet:
    return _subgroup(g, np.ones(g.order, dtype=bool))


def subgroup_from_elements(g: Group, elements: Iterable[int]) -> SubgroupSet:
    """Wrap an element set that is already known to be a subgroup."""
    m = np.zeros(g.order, dtype=bool)
    m[list(elements)] = True
    m[0] = True
    return _subgroup(g, m)


def subgroup_generated(g: Group, seeds: Iterable[int]) -> SubgroupSet:
    """Smallest subgroup containing ``seeds`` (right-multiplication closure)."""
    seeds = np.unique(np.fromiter((int(s) for s in seeds), dtype=np.int64))
    seeds = seeds[seeds != 0]
    members = np.zeros(g.order, dtype=bool)
    members[0] = True
    frontier = np.array([0])
    while frontier.size and seeds.size:
        prods = g.table[np.ix_(frontier, seeds)].ravel()
        new = np.unique(prods[~members[prods]])
        members[new] = True
        frontier = new
    return _subgroup(g, members)


def join(a: SubgroupSet, b: SubgroupSet) -> SubgroupSet:
    if b <= a:
        return a
    if a <= b:
        return b
    return subgroup_generated(a.parent, np.flatnonzero(a.members | b.members))


def intersection(a: SubgroupSet, b: SubgroupSet) -> SubgroupSet:
    return _subgroup(a.parent, a.members & b.members)


def product_order(a: SubgroupSet, b: SubgroupSet) -> int:
    """``|AB| = |A||B| / |A ∩ B|`` (the set product, a subgroup or not)."""
    return a.order * b.order // intersection(a, b).order


def _conjugates(g: Group, elements: np.ndarray, by: np.ndarray) -> np.ndarray:
    """``out[i, j] = by[i] * elements[j] * by[i]^-1``."""
    left = g.table[np.ix_(by, elements)]
    return g.table[left, g.inverse[by][:, None]]


def is_normal(g: Group, h: SubgroupSet) -> bool:
    gens = np.asarray(g.generators, dtype=np.int64)
    if gens.size == 0:
        return True
    return bool(h.members[_conjugates(g, h.elements, gens)].all())


def normalizer(g: Group, h: SubgroupSet) -> SubgroupSet:
    conj = _conjugates(g, h.elements, np.arange(g.order))
    return _subgroup(g, h.members[conj].all(axis=1))


def centralizer(g: Group, h: SubgroupSet) -> SubgroupSet:
    m = h.elements
    commutes = g.table[:, m] == g.table[m, :].T
    return _subgroup(g, commutes.all(axis=1))


def center(g: Group) -> SubgroupSet:
    return _memo(g, "center", lambda: centralizer(g, whole_group(g)))


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def conjugacy_classes(g: Group) -> list[ConjugacyClass]:
    """Classes ordered by their least element, which is also the representative."""

    def compute():
        seen = np.zeros(g.order, dtype=bool)
        every = np.arange(g.order)
        out = []
        for x in range(g.order):
            if seen[x]:
                continue
            cls = np.unique(g.table[g.table[:, x], g.inverse[every]])
            seen[cls] = True
            out.append(ConjugacyClass(x, tuple(int(c) for c in cls)))
        return out

    return _memo(g, "classes", compute)


def class_index(g: Group) -> np.ndarray:
    """Position of each element's class in :func:`conjugacy_classes`."""

    def compute():
        idx = np.empty(g.order, dtype=np.int64)
        for i, c in enumerate(conjugacy_classes(g)):
            idx[list(c.members)] = i
        return idx

    return _memo(g, "class_index", compute)


def class_sizes(g: Group) -> np.ndarray:
    """Size of the conjugacy class of every element."""
    sizes = np.array([c.size for c in conjugacy_classes(g)])
    return sizes[class_index(g)]


def normal_closure(g: Group, seeds: Iterable[int]) -> SubgroupSet:
    classes = conjugacy_classes(g)
    idx = class_index(g)
    elems: set[int] = set()
    for s in seeds:
        elems.update(classes[idx[int(s)]].members)
    return subgroup_generated(g, elems)


def _largest_normal(g: Group, element_ok: Callable[[int], bool],
                    order_ok: Callable[[int], bool]) -> SubgroupSet:
    """Join of the normal closures ``ncl(x)`` that satisfy ``order_ok``.

    For a set of primes, normal subgroups whose orders only involve those
    primes are closed under joins (``|AB|`` divides ``|A||B|``), so the join
    of all accepted closures is the unique largest such normal subgroup: it
    contains ``ncl(x)`` for each of its own elements ``x``.
    """
    acc = trivial_subgroup(g)
    orders = g.element_orders
    for c in conjugacy_classes(g):
        x = c.representative
        if acc.members[x] or not element_ok(int(orders[x])):
            continue
        ncl = normal_closure(g, [x])
        if order_ok(ncl.order):
            acc = join(acc, ncl)
    return acc


def _is_p_power(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def largest_normal_p_subgroup(g: Group, p: int) -> SubgroupSet:
    """``O_p(G)``."""
    ok = lambda k: _is_p_power(k, p)
    return _memo(g, ("O_p", p), lambda: _largest_normal(g, ok, ok))


def largest_normal_p_prime_subgroup(g: Group, p: int) -> SubgroupSet:
    """``O_{p'}(G)``."""
    ok = lambda k: k % p != 0
    return _memo(g, ("O_p'", p), lambda: _largest_normal(g, ok, ok))


def odd_core(g: Group) -> SubgroupSet:
    """``O(G)``, the largest normal subgroup of odd order."""
    return largest_normal_p_prime_subgroup(g, 2)


def subgroup_as_group(h: SubgroupSet) -> tuple[Group, np.ndarray]:
    """Materialise ``h`` as a standalone group; ``emb[i]`` is the parent index
    of the new group's element ``i``."""
    g = h.parent
    emb = h.elements
    pos = np.full(g.order, -1, dtype=np.int64)
    pos[emb] = np.arange(emb.size)
    table = pos[g.table[np.ix_(emb, emb)]]
    labels = g.permutation_labels()[emb] if g.labels is not None else None
    return Group(table, labels=labels, validate=False), emb


def quotient(g: Group, n: SubgroupSet):
    """``G/N`` on cosets ordered by least element, with the projection map."""
    from .maps import GroupMap

    if not is_normal(g, n):
        raise NotNormal("quotient by a non-normal subgroup")
    cosets = g.table[:, n.elements]
    label = cosets.min(axis=1)
    reps = np.unique(label)
    q_index = np.searchsorted(reps, label)
    table = q_index[g.table[np.ix_(reps, reps)]]
    name = f"{g.name}/N" if g.name else ""
    q = Group(table, name=name, validate=False)
    return q, GroupMap(g, q, q_index.astype(np.int64))


def direct_product(a: Group, b: Group, cap: int = DEFAULT_CAP) -> Group:
    """Pairs ``(x, y)`` at index ``x*|b| + y``; labels act on disjoint points."""
    na, nb = a.order, b.order
    if na * nb > cap:
        raise CapExceeded(f"direct product of order {na * nb} exceeds cap {cap}")
    table = (a.table.astype(np.int64)[:, None, :, None] * nb
             + b.table[None, :, None, :]).reshape(na * nb, na * nb)
    la, lb = a.permutation_labels(), b.permutation_labels()
    labels = np.concatenate([np.repeat(la, nb, axis=0),
                             np.tile(lb + la.shape[1], (na, 1))], axis=1)
    name = f"{a.name}x{b.name}" if a.name and b.name else ""
    return Group(table, labels=labels, name=name, validate=False)


def _check_action(n: Group, a: Group, action: np.ndarray) -> None:
    from .maps import GroupMap, is_homomorphism

    if action.shape != (a.order, n.order):
        raise ActionNotAutomorphism("action must give one image array per acting element")
    for y in range(a.order):
        row = action[y]
        if np.unique(row).size != n.order or not is_homomorphism(GroupMap(n, n, row)):
            raise ActionNotAutomorphism(f"image of acting element {y} is not an automorphism")
    # alpha_{y1 y2} == alpha_{y1} o alpha_{y2} for every pair
    composed = action[np.arange(a.order)[:, None, None], action[None, :, :]]
    if not np.array_equal(action[a.table], composed):
        raise ActionNotHomomorphism("action is not a homomorphism into Aut(N)")


def semidirect_product(n: Group, a: Group, action, cap: int = DEFAULT_CAP) -> Group:
    """``N ⋊ A`` with ``(x1,y1)(x2,y2) = (x1·α_{y1}(x2), y1·y2)``.

    ``action[y]`` is the image array of the automorphism ``α_y``.  Pairs sit
    at index ``x*|A| + y`` so the trivial action reproduces
    :func:`direct_product` exactly.
    """
    action = np.asarray(action, dtype=np.int64)
    nn, na = n.order, a.order
    if nn * na > cap:
        raise CapExceeded(f"semidirect product of order {nn * na} exceeds cap {cap}")
    _check_action(n, a, action)
    x1 = np.arange(nn)[:, None, None, None]
    y1 = np.arange(na)[None, :, None, None]
    x2 = np.arange(nn)[None, None, :, None]
    y2 = np.arange(na)[None, None, None, :]
    first = n.table[x1, action[y1, x2]].astype(np.int64)
    table = (first * na + a.table[y1, y2]).reshape(nn * na, nn * na)
    # faithful action on N's points (z -> x·α_y(z)) glued to A's own labels
    la = a.permutation_labels()
    pts = n.table[np.arange(nn)[:, None, None], action[None, :, :]]
    labels = np.concatenate([pts.reshape(nn * na, nn),
                             np.tile(la + nn, (nn, 1))], axis=1)
    return Group(table, labels=labels, validate=False)


def element_orders_in(h: SubgroupSet) -> np.ndarray:
    return h.parent.element_orders[h.elements]


def sylow_subgroup(g: Group, p: int) -> SubgroupSet:
    """A Sylow ``p``-subgroup, grown inside successive normalizers."""

    def compute():
        target = 1
        k = g.order
        while k % p == 0:
            k //= p
            target *= p
        orders = g.element_orders
        p_elems = [x for x in range(g.order) if _is_p_power(int(orders[x]), p)]
        start = max(p_elems, key=lambda x: (orders[x], -x))
        P = subgroup_generated(g, [start])
        while P.order < target:
            N = normalizer(g, P)
            for y in p_elems:
                if N.members[y] and not P.members[y]:
                    P = subgroup_generated(g, list(P.elements) + [y])
                    break
            else:
                raise AssertionError("normalizer growth failed; table is not a group")
        return P

    return _memo(g, ("sylow", p), compute)


def commutator_subgroup_of(h: SubgroupSet) -> SubgroupSet:
    g = h.parent
    m = h.elements
    t = g.table
    ab = t[np.ix_(m, m)]
    comm = t[t[ab, g.inverse[m][:, None]], g.inverse[m][None, :]]
    return subgroup_generated(g, np.unique(comm))


def derived_subgroup(g: Group) -> SubgroupSet:
    return _memo(g, "derived", lambda: commutator_subgroup_of(whole_group(g)))


def derived_series(g: Group) -> list[SubgroupSet]:
    series = [whole_group(g)]
    while True:
        nxt = commutator_subgroup_of(series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(g: Group) -> bool:
    return derived_series(g)[-1].is_trivial()


def p_length(g: Group, p: int) -> int:
    """Number of ``p``-factors in the upper ``p``-series of a solvable group."""
    if not is_solvable(g):
        raise NotSolvable("p-length is only computed for solvable groups")
    length = 0
    cur = g
    while True:
        cur, _ = quotient(cur, largest_normal_p_prime_subgroup(cur, p))
        if cur.order == 1:
            return length
        P = largest_normal_p_subgroup(cur, p)
        # solvable: a nontrivial group with O_{p'} = 1 has O_p != 1
        assert not P.is_trivial()
        cur, _ = quotient(cur, P)
        length += 1


def abelian_type_from_orders(orders: Sequence[int], p: int) -> list[int]:
    """Invariant factors of an abelian ``p``-group from its element orders.

    ``|{x : x^(p^k) = 1}| = p^(sum_i min(k, e_i))`` so the increments of the
    log of these counts give the number of factors of exponent ``>= k``.
    """
    orders = np.asarray(orders)
    size = orders.size
    if not _is_p_power(size, p):
        raise ValueError("element count is not a power of p")
    logs = [0]
    k = 0
    while p ** logs[-1] < size:
        k += 1
        cnt = int((p ** k % orders == 0).sum())
        logs.append(round(np.log(cnt) / np.log(p)))
    at_least = [logs[i] - logs[i - 1] for i in range(1, len(logs))]
    factors = []
    for i, c in enumerate(at_least):
        nxt = at_least[i + 1] if i + 1 < len(at_least) else 0
        factors += [p ** (i + 1)] * (c - nxt)
    return sorted(factors, reverse=True)


def is_abelian_subgroup(h: SubgroupSet) -> bool:
    m = h.elements
    block = h.parent.table[np.ix_(m, m)]
    return bool((block == block.T).all())


def abelian_two_group_type(h: SubgroupSet | Group) -> list[int]:
    if isinstance(h, Group):
        h = whole_group(h)
    if not _is_p_power(h.order, 2):
        raise Not2Group(f"subgroup of order {h.order} is not a 2-group")
    if not is_abelian_subgroup(h):
        raise NotAbelian("subgroup is not abelian")
    return abelian_type_from_orders(element_orders_in(h), 2)


def normal_subgroups(g: Group, within: SubgroupSet | None = None) -> list[SubgroupSet]:
    """Every normal subgroup of ``g`` (inside ``within`` if given).

    Each normal subgroup is the join of the normal closures of its elements,
    so closing the set of ``ncl(x)`` under joins is exhaustive.
    """
    if within is None:
        within = whole_group(g)
    atoms = {}
    for c in conjugacy_classes(g):
        if within.members[c.representative]:
            ncl = normal_closure(g, [c.representative])
            atoms.setdefault(ncl.key, ncl)
    found = dict(atoms)
    frontier = list(atoms.values())
    while frontier:
        nxt = []
        for h in frontier:
            for a in atoms.values():
                if a <= h:
                    continue
                j = join(h, a)
                if j.key not in found:
                    found[j.key] = j
                    nxt.append(j)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (s.order, s.elements.tolist()))


def all_subgroups(g: Group, max_order: int = 200) -> list[SubgroupSet]:
    """Exhaustive subgroup list: joins of cyclic subgroups, closed under join."""
    if g.order > max_order:
        raise CapExceeded(f"subgroup enumeration is limited to order {max_order}")
    cyclic = {}
    for x in range(g.order):
        c = subgroup_generated(g, [x])
        cyclic.setdefault(c.key, (x, c))
    found = {k: c for k, (_, c) in cyclic.items()}
    frontier = list(found.values())
    reps = [x for x, _ in cyclic.values()]
    while frontier:
        nxt = []
        for h in frontier:
            base = list(h.elements)
            for x in reps:
                if h.members[x]:
                    continue
                j = subgroup_generated(g, base + [x])
                if j.key not in found:
                    found[j.key] = j
                    nxt.append(j)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (s.order, s.elements.tolist()))


def normal_subgroups_bruteforce(g: Group, max_order: int = 200) -> list[SubgroupSet]:
    return [h for h in all_subgroups(g, max_order) if is_normal(g, h)]


def v2(k: int) -> int:
    n = 0
    while k % 2 == 0:
        k //= 2
        n += 1
    return n
