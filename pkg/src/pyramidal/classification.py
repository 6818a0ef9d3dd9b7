"""Involution census, the definitional 3-pyramidality check and the
structural classifier.

:func:`is_3_pyramidal_definition` only counts involutions and looks at
conjugacy classes.  :func:`classify` never looks at that answer while
deciding which structural case applies; it evaluates the three structural
descriptions directly and then cross-checks against the definition, so a
disagreement surfaces as an ``inconsistent`` verdict instead of being masked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .kernel import Group
from .maps import DEFAULT_ISO_BUDGET, are_isomorphic
from .structure import (SubgroupSet, all_subgroups, centralizer, class_index,
                        intersection, is_abelian_subgroup, is_normal, normal_subgroups,
                        odd_core, product_order, quotient, subgroup_as_group,
                        subgroup_generated, sylow_subgroup, v2, abelian_two_group_type,
                        largest_normal_p_subgroup)

REPORT_FORMAT = "pyrreport/v1"
SUBGROUP_ENUMERATION_BOUND = 200
SAMPLING_SEED = 20240601


def involutions(g: Group) -> list[int]:
    return np.flatnonzero(g.element_orders == 2).tolist()


def involutions_conjugate(g: Group) -> bool:
    inv = involutions(g)
    idx = class_index(g)
    return len({int(idx[x]) for x in inv}) <= 1


def is_3_pyramidal_definition(g: Group) -> bool:
    """Exactly three involutions, all in one conjugacy class."""
    inv = involutions(g)
    return len(inv) == 3 and involutions_conjugate(g)


def involution_subgroup(g: Group) -> SubgroupSet:
    """``K``, the subgroup generated by all involutions."""
    return subgroup_generated(g, involutions(g))


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class NotPyramidal:
    reason: str
    inconsistent: bool = False
    tag = "NotPyramidal"

    def params(self) -> dict:
        return {"reason": self.reason, "inconsistent": self.inconsistent}


@dataclass(frozen=True)
class Case1:
    """``G ≅ S3 × H`` with ``H = C_G(K)`` of odd order."""
    odd_complement: SubgroupSet = field(repr=False)
    tag = "Case1"

    def params(self) -> dict:
        return {"h_order": self.odd_complement.order}


@dataclass(frozen=True)
class Case2:
    """``G/O(G) ≅ Suz64 ⋊ A`` with ``|A|`` 3 or 15."""
    a_order: int
    tag = "Case2"

    def params(self) -> dict:
        return {"a_order": self.a_order}


@dataclass(frozen=True)
class Case3:
    """``G/O(G) ≅ (C_{2^n}²) ⋊ <γ>``."""
    n: int
    tag = "Case3"

    def params(self) -> dict:
        return {"n": self.n}


Classification = NotPyramidal | Case1 | Case2 | Case3


@dataclass(frozen=True)
class PyramidalReport:
    group_order: int
    involutions: tuple[int, ...]
    involutions_conjugate: bool
    K: SubgroupSet = field(repr=False)
    C: SubgroupSet = field(repr=False)
    odd_core: SubgroupSet = field(repr=False)
    n: int
    oracle: bool
    verdict: Classification

    @property
    def involution_count(self) -> int:
        return len(self.involutions)

    @property
    def positive(self) -> bool:
        return not isinstance(self.verdict, NotPyramidal)

    def to_json(self) -> dict:
        return {
            "format": REPORT_FORMAT,
            "order": self.group_order,
            "verdict": self.verdict.tag,
            "params": self.verdict.params(),
            "involutions": list(self.involutions),
            "involutions_conjugate": self.involutions_conjugate,
            "oracle": self.oracle,
            "K_order": self.K.order,
            "C_order": self.C.order,
            "odd_core_order": self.odd_core.order,
            "n": self.n,
        }


# ---------------------------------------------------------------------------
# structural recognition


def _case1(g: Group, K: SubgroupSet, C: SubgroupSet):
    """``G ≅ S3 × H`` (H odd) iff K is nonabelian of order 6, C = C_G(K) is
    odd, and G is the internal direct product of C and K."""
    if K.order != 6 or is_abelian_subgroup(K):
        return None, "K is not S3"
    if C.order % 2 == 0:
        return None, "C_G(K) has even order"
    if not intersection(C, K).is_trivial() or product_order(C, K) != g.order:
        return None, "G is not the internal direct product C x K"
    return Case1(C), None


def _cyclic_complement(q: Group, N: SubgroupSet) -> SubgroupSet | None:
    """A cyclic subgroup ``A`` with ``A ∩ N = 1`` and ``NA = Q``, by search."""
    a = q.order // N.order
    for x in np.flatnonzero(q.element_orders == a).tolist():
        A = subgroup_generated(q, [x])
        if intersection(A, N).is_trivial():
            return A
    return None


def _quotient_case(q: Group, iso_budget: int, data_dir=None):
    """Recognise ``G/O(G)`` as one of the two semidirect shapes."""
    from .families import load_reference

    if not odd_core(q).is_trivial():
        return None, "O(G/O(G)) is not trivial"
    N = sylow_subgroup(q, 2)
    if N.order < 4:
        return None, "Sylow 2-subgroup of G/O(G) has order < 4"
    if not is_normal(q, N):
        return None, "Sylow 2-subgroup of G/O(G) is not normal"
    if is_abelian_subgroup(N):
        kind = abelian_two_group_type(N)
        if len(kind) != 2 or kind[0] != kind[1]:
            return None, f"Sylow 2-subgroup has type {kind}, not homocyclic of rank 2"
        if q.order != 3 * N.order:
            return None, "|G/O(G)| is not 3|N|"
        if q.is_abelian:
            return None, "the order-3 complement acts trivially"
        if _cyclic_complement(q, N) is None:
            return None, "no complement of order 3"
        return Case3(kind[0].bit_length() - 1), None
    if N.order != 64:
        return None, f"nonabelian Sylow 2-subgroup of order {N.order}"
    a = q.order // 64
    if a not in (3, 15):
        return None, f"complement order {a} is not 3 or 15"
    if _cyclic_complement(q, N) is None:
        return None, f"no cyclic complement of order {a}"
    # A must embed in Aut(N): C_Q(N) = Z(N)
    if centralizer(q, N).order != 4:
        return None, "the complement does not act faithfully"
    Ngrp, _ = subgroup_as_group(N)
    if not are_isomorphic(Ngrp, load_reference("suzuki64", data_dir), iso_budget):
        return None, "Sylow 2-subgroup is not the Suzuki group of order 64"
    return Case2(a), None


def structural_case(g: Group, iso_budget: int = DEFAULT_ISO_BUDGET, data_dir=None,
                    K=None, C=None, O=None):
    """The matching case of the classification, or ``(None, reason)``."""
    K = involution_subgroup(g) if K is None else K
    C = centralizer(g, K) if C is None else C
    n = v2(g.order)
    if n == 0:
        return None, "odd order"
    if n == 1:
        return _case1(g, K, C)
    O = odd_core(g) if O is None else O
    if not O <= C:
        return None, "O(G) does not centralize K"
    q, _ = quotient(g, O)
    return _quotient_case(q, iso_budget, data_dir)


def _census_reason(count: int, conjugate: bool) -> str:
    if count != 3:
        return f"{count} involutions"
    if not conjugate:
        return "involutions not conjugate"
    return "3 conjugate involutions"


def classify(g: Group, iso_budget: int = DEFAULT_ISO_BUDGET, data_dir=None) -> PyramidalReport:
    inv = involutions(g)
    conj = involutions_conjugate(g) if inv else False
    oracle = len(inv) == 3 and conj
    K = subgroup_generated(g, inv)
    C = centralizer(g, K)
    O = odd_core(g)
    case, why = structural_case(g, iso_budget, data_dir, K, C, O)
    if case is not None and oracle:
        verdict = case
    elif case is None and not oracle:
        verdict = NotPyramidal(f"{_census_reason(len(inv), conj)}; {why}")
    elif case is None:
        verdict = NotPyramidal(f"inconsistency: definition holds but {why}", True)
    else:
        verdict = NotPyramidal(f"inconsistency: {case.tag} structure but "
                               f"{_census_reason(len(inv), conj)}", True)
    return PyramidalReport(g.order, tuple(inv), conj, K, C, O, v2(g.order), oracle, verdict)


# ---------------------------------------------------------------------------
# executable versions of the structural lemma


@dataclass
class LemmaChecks:
    applicable: bool
    checks: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return all(v for v in self.checks.values() if v is not None)


def _sample_subgroups(g: Group, count: int, seed: int) -> list[SubgroupSet]:
    rng = random.Random(seed)
    out = [sylow_subgroup(g, p) for p in _primes(g.order)]
    for _ in range(count):
        k = rng.randint(1, 3)
        out.append(subgroup_generated(g, [rng.randrange(g.order) for _ in range(k)]))
    return out


def _primes(k: int) -> list[int]:
    ps, p = [], 2
    while k > 1:
        if k % p == 0:
            ps.append(p)
            while k % p == 0:
                k //= p
        p += 1
    return ps


def lemma21_predicates(g: Group, bound: int = SUBGROUP_ENUMERATION_BOUND,
                       samples: int = 30, seed: int = SAMPLING_SEED) -> LemmaChecks:
    """Check items (i)-(v) by direct search on a 3-pyramidal ``g``.

    Item (i) ranges over every subgroup when ``|g| <= bound`` and over the
    Sylow subgroups plus ``samples`` randomly generated subgroups otherwise.
    """
    if not is_3_pyramidal_definition(g):
        return LemmaChecks(False)
    res = LemmaChecks(True)
    inv = involutions(g)
    K = subgroup_generated(g, inv)
    C = centralizer(g, K)
    n = v2(g.order)

    if g.order <= bound:
        subs = all_subgroups(g, bound)
        res.notes["i"] = f"all {len(subs)} subgroups"
    else:
        subs = _sample_subgroups(g, samples, seed)
        res.notes["i"] = f"Sylow + {samples} sampled subgroups, seed {seed}"
    ok = True
    for h in subs:
        if h.order % 2 == 0 and product_order(h, C) == g.order:
            hg, _ = subgroup_as_group(h)
            ok &= is_3_pyramidal_definition(hg)
    res.checks["i"] = ok

    t = g.table
    commute = all(t[a, b] == t[b, a] for a in inv for b in inv)
    if commute:
        odd_normals = normal_subgroups(g, within=odd_core(g))
        res.checks["ii"] = all(is_3_pyramidal_definition(quotient(g, h)[0])
                               for h in odd_normals)
        res.notes["ii"] = f"{len(odd_normals)} normal odd-order subgroups"
    else:
        res.checks["ii"] = None
        res.notes["ii"] = "involutions do not commute"

    if n == 1:
        res.checks["iii"] = (K.order == 6 and not is_abelian_subgroup(K)
                             and intersection(C, K).is_trivial()
                             and product_order(C, K) == g.order
                             and is_normal(g, C) and is_normal(g, K))
        res.checks["iv"] = None
    else:
        res.checks["iii"] = None
        res.checks["iv"] = (n % 2 == 0 and K.order == 4 and is_abelian_subgroup(K)
                            and g.order // C.order == 3)

    normal_two = normal_subgroups(g, within=largest_normal_p_subgroup(g, 2))
    res.checks["v"] = all(v2(h.order) % 2 == 0 for h in normal_two)
    res.notes["v"] = "orders " + ",".join(str(h.order) for h in normal_two)
    return res
