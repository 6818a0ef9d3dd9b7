"""Concrete finite groups stored as full multiplication tables.

Elements are integers ``0 .. order-1`` with ``0`` the identity.  A group is
usually produced by :func:`closure_from_generators` from permutations; the
product convention for permutations is composition, ``(p*q)[x] == p[q[x]]``,
so the left factor is applied last.
"""

from __future__ import annotations

import json
from collections import Counter
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceeded, DegreeMismatch, ParseError, ValidationFailed

DEFAULT_CAP = 20000
PERMGROUP_FORMAT = "permgroup/v1"


def _as_perm(images: Sequence[int], degree: int | None = None) -> np.ndarray:
    arr = np.asarray(images, dtype=np.int64)
    if arr.ndim != 1:
        raise ParseError("permutation must be a flat array of images")
    if degree is not None and arr.size != degree:
        raise DegreeMismatch(f"permutation of length {arr.size} in a degree-{degree} set")
    if arr.size and not np.array_equal(np.sort(arr), np.arange(arr.size)):
        raise ParseError(f"image array {list(arr)} is not a bijection")
    return arr


class Group:
    """A finite group given by its Cayley table.

    ``table[a, b]`` is the index of ``a*b``.  ``labels`` optionally holds the
    permutation behind each element (one row per element).
    """

    def __init__(self, table: np.ndarray, labels: np.ndarray | None = None,
                 name: str = "", *, validate: bool = True):
        table = np.ascontiguousarray(table, dtype=np.int32)
        n = table.shape[0]
        if table.shape != (n, n) or n == 0:
            raise ValidationFailed("table must be a non-empty square array")
        if validate:
            ident = np.arange(n)
            if not (np.array_equal(table[0], ident) and np.array_equal(table[:, 0], ident)):
                raise ValidationFailed("element 0 is not the identity")
            srt = np.sort(table, axis=1)
            if not (srt == ident).all() or not (np.sort(table, axis=0) == ident[:, None]).all():
                raise ValidationFailed("table is not a Latin square")
        inv = np.argmin(table, axis=1).astype(np.int32)
        if validate and not (table[inv, np.arange(n)] == 0).all():
            raise ValidationFailed("left and right inverses differ")
        table.setflags(write=False)
        inv.setflags(write=False)
        self.table = table
        self.inverse = inv
        self.labels = labels
        self.name = name

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<Group{tag} of order {self.order}>"

    def __len__(self) -> int:
        return self.order

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, a: int, k: int) -> int:
        k %= self.element_orders[a]
        result, base = 0, int(a)
        while k:
            if k & 1:
                result = int(self.table[result, base])
            base = int(self.table[base, base])
            k >>= 1
        return result

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        orders[0] = 1
        idx = np.arange(n)
        cur = idx.copy()
        k = 1
        while (orders == 0).any():
            k += 1
            cur = self.table[cur, idx]
            orders[(cur == 0) & (orders == 0)] = k
            if k > n:
                raise ValidationFailed("table does not describe a finite group")
        orders.setflags(write=False)
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def regular_labels(self) -> np.ndarray:
        """Left-regular permutation of each element; consistent with the
        composition convention since ``L_a L_b = L_{ab}``."""
        return np.asarray(self.table, dtype=np.int64)

    def permutation_labels(self) -> np.ndarray:
        return self.labels if self.labels is not None else self.regular_labels

    @cached_property
    def generators(self) -> list[int]:
        """A small generating set, chosen greedily by descending element order."""
        from .structure import subgroup_generated

        order = sorted(range(self.order), key=lambda x: (-self.element_orders[x], x))
        gens: list[int] = []
        members = np.zeros(self.order, dtype=bool)
        members[0] = True
        for x in order:
            if members.all():
                break
            if not members[x]:
                gens.append(x)
                members = subgroup_generated(self, gens).members
        return gens


def element_order(g: Group, x: int) -> int:
    return int(g.element_orders[x])


def order_statistics(g: Group) -> dict[int, int]:
    counts = Counter(int(k) for k in g.element_orders)
    return dict(sorted(counts.items()))


def closure_from_generators(gens: Iterable[Sequence[int]], degree: int | None = None,
                            cap: int = DEFAULT_CAP, name: str = "") -> Group:
    """Enumerate the group generated by permutations ``gens``.

    Discovery is breadth-first: elements are popped in index order and
    multiplied on the right by each generator in the given order.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    gens = list(gens)
    if degree is None:
        if not gens:
            raise DegreeMismatch("degree is required when there are no generators")
        degree = len(gens[0])
    perms = [_as_perm(p, degree) for p in gens]

    ident = np.arange(degree, dtype=np.int64)
    labels = [ident]
    index = {ident.tobytes(): 0}
    parent = [0]
    via = [-1]
    right = [[] for _ in perms]
    i = 0
    while i < len(labels):
        x = labels[i]
        for s, p in enumerate(perms):
            y = x[p]
            key = y.tobytes()
            j = index.get(key)
            if j is None:
                j = len(labels)
                if j >= cap:
                    raise CapExceeded(f"closure exceeds cap of {cap} elements")
                index[key] = j
                labels.append(y)
                parent.append(i)
                via.append(s)
            right[s].append(j)
        i += 1

    n = len(labels)
    rmul = [np.asarray(r, dtype=np.int32) for r in right]
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n)
    for j in range(1, n):
        table[:, j] = rmul[via[j]][table[:, parent[j]]]
    return Group(table, labels=np.stack(labels), name=name, validate=False)


def cyclic_group(k: int) -> Group:
    if k < 1:
        raise ValueError("cyclic order must be positive")
    return closure_from_generators([np.roll(np.arange(k), -1)] if k > 1 else [],
                                   degree=k, name=f"C{k}")


def check_associative(g: Group, samples: int | None = None, seed: int = 0) -> bool:
    """Exhaustive triple check, or ``samples`` random left factors."""
    t = g.table
    if samples is None or samples >= g.order:
        lefts = range(g.order)
    else:
        lefts = np.random.default_rng(seed).choice(g.order, size=samples, replace=False)
    for a in lefts:
        if not np.array_equal(t[t[a]], t[a][t]):
            return False
    return True


def parse_permgroup(doc: dict, cap: int = DEFAULT_CAP) -> Group:
    if not isinstance(doc, dict):
        raise ParseError("permgroup document must be a JSON object")
    fmt = doc.get("format", PERMGROUP_FORMAT)
    if fmt != PERMGROUP_FORMAT:
        raise ParseError(f"unsupported format {fmt!r}")
    try:
        degree = int(doc["degree"])
        gens = doc["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed permgroup document: {exc}") from exc
    if degree < 1:
        raise ParseError("degree must be positive")
    if not isinstance(gens, list):
        raise ParseError("generators must be a list")
    return closure_from_generators(gens, degree=degree, cap=cap, name=doc.get("name", ""))


def load_permgroup(path: str | Path, cap: int = DEFAULT_CAP) -> Group:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    return parse_permgroup(doc, cap=cap)


def permgroup_document(degree: int, generators: Sequence[Sequence[int]], name: str = "") -> dict:
    doc = {"format": PERMGROUP_FORMAT, "degree": int(degree),
           "generators": [[int(v) for v in p] for p in generators]}
    if name:
        doc["name"] = name
    return doc


def group_document(g: Group) -> dict:
    """Serialise ``g`` through its own labels and greedy generating set."""
    labels = g.permutation_labels()
    return permgroup_document(labels.shape[1], [labels[x] for x in g.generators], g.name)


def save_permgroup(g_or_doc: Group | dict, path: str | Path) -> None:
    doc = group_document(g_or_doc) if isinstance(g_or_doc, Group) else g_or_doc
    Path(path).write_text(json.dumps(doc) + "\n")
