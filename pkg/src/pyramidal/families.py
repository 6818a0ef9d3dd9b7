"""Group constructors, bundled reference groups and the differential corpus.

Group specifications are small JSON-able dicts (``{"kind": "cyclic", "k": 5}``)
or the string shorthand used on the command line (``"cyclic:5"``).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import (CapExceeded, EvenOrderH, EvenOrderY, InvalidAOrder,
                     NoIndex3NormalSubgroup, ParseError, ReferenceDataMissing,
                     ValidationFailed)
from .kernel import (DEFAULT_CAP, Group, closure_from_generators, cyclic_group,
                     parse_permgroup)
from .maps import homocyclic_carrier, make_gamma, power_of_map
from .structure import (SubgroupSet, center, derived_subgroup, direct_product, is_normal,
                        odd_core, quotient, semidirect_product, subgroup_generated,
                        sylow_subgroup, trivial_subgroup)

REFERENCE_NAMES = ("suzuki64", "suzuki64_semidirect_c3", "suzuki64_semidirect_c15",
                   "nonnormal_sylow_example")
CORPUS_FORMAT = "corpus/v1"
CORPUS_VERSION = 1


# ---------------------------------------------------------------------------
# elementary groups


def symmetric_group(n: int, cap: int = DEFAULT_CAP) -> Group:
    if n <= 1:
        return closure_from_generators([], degree=1, name="S1")
    gens = [np.roll(np.arange(n), -1), np.r_[1, 0, np.arange(2, n)]]
    return closure_from_generators(gens, cap=cap, name=f"S{n}")


def alternating_group(n: int, cap: int = DEFAULT_CAP) -> Group:
    if n <= 2:
        return closure_from_generators([], degree=max(n, 1), name=f"A{n}")
    gens = []
    for i in range(n - 2):
        p = np.arange(n)
        p[[i, i + 1, i + 2]] = [i + 1, i + 2, i]
        gens.append(p)
    return closure_from_generators(gens, cap=cap, name=f"A{n}")


def dihedral_group(k: int) -> Group:
    """Symmetries of a ``k``-gon, order ``2k``."""
    if k < 3:
        raise ValueError("dihedral group needs k >= 3")
    return closure_from_generators([np.roll(np.arange(k), -1), (-np.arange(k)) % k],
                                   name=f"D{k}")


def dicyclic_group(order: int) -> Group:
    """``<a, b | a^(2m), b^2 = a^m, b a b^-1 = a^-1>`` of order ``4m``;
    order 8 is the quaternion group."""
    if order % 4 or order < 8:
        raise ValueError("dicyclic order must be a multiple of 4, at least 8")
    m2 = order // 2
    m = m2 // 2
    table = np.empty((order, order), dtype=np.int64)
    for e, k, f, l in itertools.product(range(2), range(m2), range(2), range(m2)):
        if e == 0:
            prod = (f, (k + l) % m2)
        elif f == 0:
            prod = (1, (k - l) % m2)
        else:
            prod = (0, (k - l + m) % m2)
        table[e * m2 + k, f * m2 + l] = prod[0] * m2 + prod[1]
    return Group(table, name=f"Dic{order}")


def abelian_group(orders) -> Group:
    g = cyclic_group(1)
    for k in orders:
        g = direct_product(g, cyclic_group(int(k)))
    g.name = "x".join(f"C{k}" for k in orders)
    return g


def metacyclic_group(p: int, q: int, r: int) -> Group:
    """``C_p ⋊ C_q`` acting by ``x -> r x`` on ``Z/p`` (needs ``r^q ≡ 1``)."""
    if pow(r, q, p) != 1:
        raise ValidationFailed(f"{r} does not have order dividing {q} mod {p}")
    pts = np.arange(p)
    return closure_from_generators([(pts + 1) % p, (r * pts) % p], name=f"C{p}:C{q}")


def sl23() -> Group:
    """SL(2, 3) acting on the eight nonzero vectors of F_3^2."""
    vecs = [v for v in itertools.product(range(3), repeat=2) if v != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}

    def perm(mat):
        (a, b), (c, d) = mat
        return [pos[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in vecs]

    return closure_from_generators([perm(((1, 1), (0, 1))), perm(((0, 2), (1, 0)))],
                                   name="SL(2,3)")


# ---------------------------------------------------------------------------
# GF(16) and the Suzuki 2-group of order 64


def _gf16_tables():
    """Multiplication table of GF(16) = F_2[t]/(t^4 + t + 1); ``2`` is primitive."""
    def mul(a, b):
        r = 0
        for _ in range(4):
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & 16:
                a ^= 0b10011
        return r
    return np.array([[mul(a, b) for b in range(16)] for a in range(16)])


def _suzuki64_elements():
    mul = _gf16_tables()

    def pw(a, k):
        r = 1
        for _ in range(k):
            r = mul[r, a]
        return r

    elems = [(a, b) for a in range(16) for b in range(16)
             if b ^ pw(b, 4) == pw(a, 5)]
    return mul, pw, elems


def suzuki64_with_torus(a_order: int = 1) -> Group:
    """Sylow 2-subgroup of SU(3, 4): pairs ``(α, β)`` of GF(16) with
    ``β + β^4 = α^5`` and ``(α,β)(γ,δ) = (α+γ, β+δ+α^4 γ)``, extended by the
    torus ``(α, β) -> (λα, λ^5 β)`` restricted to its subgroup of order
    ``a_order`` (1, 3, 5 or 15)."""
    mul, pw, elems = _suzuki64_elements()
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, (a, b) in enumerate(elems):
        a4 = pw(a, 4)
        for j, (c, d) in enumerate(elems):
            table[i, j] = index[(a ^ c, b ^ d ^ mul[a4, c])]
    # the pair (0, 0) is the identity; move it to index 0
    zero = index[(0, 0)]
    order = [zero] + [i for i in range(n) if i != zero]
    pos = np.argsort(order)
    table = pos[table[np.ix_(order, order)]]
    elems = [elems[i] for i in order]
    index = {e: i for i, e in enumerate(elems)}
    N = Group(table, name="Suz64")
    if a_order == 1:
        return N
    if 15 % a_order:
        raise InvalidAOrder(f"torus has no subgroup of order {a_order}")
    lam = pw(2, 15 // a_order)
    A = cyclic_group(a_order)
    action = np.empty((a_order, n), dtype=np.int64)
    for y in range(a_order):
        ly = pw(lam, y)
        l5 = pw(ly, 5)
        action[y] = [index[(mul[ly, a], mul[l5, b])] for a, b in elems]
    return semidirect_product(N, A, action)


def nonnormal_sylow_group() -> Group:
    """``F_3^3 ⋊ ((C4×C4) ⋊ C3)`` of order 1296: the outer group acts through
    its quotient A4 by signed permutation matrices, so the involutions
    centralize the odd part while elements of order 4 do not."""
    H = make_homocyclic_case3(2)
    O = abelian_group([3, 3, 3])
    vecs = list(itertools.product(range(3), repeat=3))

    def apply(mat):
        return [vecs.index(tuple(int(v) for v in (np.array(mat) @ np.array(x)) % 3))
                for x in vecs]

    def diag(bits):
        # bits (a mod 2, b mod 2) of C4×C4; image in the sign-diagonal V4
        signs = {(0, 0): (1, 1, 1), (1, 0): (1, -1, -1),
                 (0, 1): (-1, 1, -1), (1, 1): (-1, -1, 1)}[bits]
        return np.diag(signs)

    cycles = [np.eye(3, dtype=int)[[1, 2, 0]], np.eye(3, dtype=int)[[2, 0, 1]]]
    # H element (x, y) sits at x*3 + y with x = a*4 + b
    for P in cycles:
        action = np.empty((H.order, O.order), dtype=np.int64)
        for x in range(16):
            a, b = divmod(x, 4)
            for y in range(3):
                mat = diag((a % 2, b % 2)) @ np.linalg.matrix_power(P, y)
                action[x * 3 + y] = apply(mat)
        try:
            return semidirect_product(O, H, action)
        except ValidationFailed:
            continue
    raise AssertionError("no compatible coordinate cycle")


# ---------------------------------------------------------------------------
# reference data


def _reference_path(name: str, data_dir: str | Path | None) -> Path:
    if data_dir is not None:
        return Path(data_dir) / f"{name}.json"
    return Path(str(resources.files("pyramidal") / "data" / f"{name}.json"))


def _validation_checks(name: str, g: Group):
    from .classification import involutions, is_3_pyramidal_definition

    if name == "suzuki64":
        Z = center(g)
        D = derived_subgroup(g)
        Q, _ = quotient(g, Z)
        yield "order 64", g.order == 64
        yield "nonabelian", not g.is_abelian
        yield "exactly 3 involutions", len(involutions(g)) == 3
        yield "center equals derived subgroup", Z == D
        yield "center of order 4", Z.order == 4
        yield "N/Z elementary abelian of order 16", (
            Q.order == 16 and Q.is_abelian and bool((Q.element_orders <= 2).all()))
        squares = subgroup_generated(g, g.table[np.arange(g.order), np.arange(g.order)])
        frattini = subgroup_generated(g, np.flatnonzero(D.members | squares.members))
        yield "Frattini subgroup equals center", frattini == Z
    elif name in ("suzuki64_semidirect_c3", "suzuki64_semidirect_c15"):
        a = 3 if name.endswith("c3") else 15
        P = sylow_subgroup(g, 2)
        yield f"order {64 * a}", g.order == 64 * a
        yield "oracle-positive", is_3_pyramidal_definition(g)
        yield "normal Sylow 2-subgroup of order 64", P.order == 64 and is_normal(g, P)
    elif name == "nonnormal_sylow_example":
        yield "order 1296", g.order == 1296
        yield "oracle-positive", is_3_pyramidal_definition(g)
        yield "Sylow 2-subgroup not normal", not is_normal(g, sylow_subgroup(g, 2))
    else:
        raise ReferenceDataMissing(f"unknown reference group {name!r}")


def validate_reference(name: str, g: Group) -> None:
    for check, ok in _validation_checks(name, g):
        if not ok:
            raise ValidationFailed(f"reference {name}: check failed: {check}", check=check)


_REFERENCE_CACHE: dict = {}


def load_reference(name: str, data_dir: str | Path | None = None,
                   cap: int = DEFAULT_CAP) -> Group:
    """Build a bundled reference group and run its load-time checks."""
    if name not in REFERENCE_NAMES:
        raise ReferenceDataMissing(f"unknown reference group {name!r}")
    path = _reference_path(name, data_dir)
    key = (str(path), cap)
    if key in _REFERENCE_CACHE:
        return _REFERENCE_CACHE[key]
    if not path.is_file():
        raise ReferenceDataMissing(f"reference data file {path} not found")
    try:
        doc = json.loads(path.read_text())
        g = parse_permgroup(doc, cap=cap)
    except (ValueError, ValidationFailed) as exc:
        raise ValidationFailed(f"reference {name}: unreadable data ({exc})",
                               check="parse") from exc
    g.name = name
    validate_reference(name, g)
    _REFERENCE_CACHE[key] = g
    return g


def build_reference(name: str) -> Group:
    """Construct a reference group from first principles (used to regenerate
    the bundled data files)."""
    builders = {
        "suzuki64": lambda: suzuki64_with_torus(1),
        "suzuki64_semidirect_c3": lambda: suzuki64_with_torus(3),
        "suzuki64_semidirect_c15": lambda: suzuki64_with_torus(15),
        "nonnormal_sylow_example": nonnormal_sylow_group,
    }
    return builders[name]()


# ---------------------------------------------------------------------------
# classification families


def make_s3_times_h(h: Group | dict | str, cap: int = DEFAULT_CAP) -> Group:
    if not isinstance(h, Group):
        h = resolve(h, cap=cap)
    if h.order % 2 == 0:
        raise EvenOrderH(f"H has even order {h.order}")
    g = direct_product(symmetric_group(3), h, cap=cap)
    g.name = f"S3x{h.name}" if h.name else ""
    return g


def find_index3_normal_subgroup(y: Group) -> SubgroupSet:
    """First normal subgroup of index 3 generated by at most three elements."""
    if y.order % 3:
        raise NoIndex3NormalSubgroup(f"order {y.order} is not divisible by 3")
    target = y.order // 3
    if target == 1:
        return trivial_subgroup(y)
    seen = set()
    cands = [x for x in range(1, y.order) if target % int(y.element_orders[x]) == 0]
    for size in (1, 2, 3):
        for combo in itertools.combinations(cands, size):
            h = subgroup_generated(y, combo)
            if h.key in seen:
                continue
            seen.add(h.key)
            if h.order == target and is_normal(y, h):
                return h
    raise NoIndex3NormalSubgroup("no normal subgroup of index 3 generated by <= 3 elements")


@dataclass(frozen=True)
class Construction:
    group: Group
    x_image: SubgroupSet


def build_homocyclic_case3(n: int, y: Group | dict | str | None = None,
                           x_seeds=None, cap: int = DEFAULT_CAP) -> Construction:
    """``(C_{2^n}²) ⋊ Y`` where ``Y`` acts through ``Y/X ≅ C3`` by the
    automorphism ``(a, b) -> (b, (ab)^-1)``."""
    if n < 1:
        raise ValidationFailed("n must be positive")
    if y is None:
        y = cyclic_group(3)
    elif not isinstance(y, Group):
        y = resolve(y, cap=cap)
    if y.order % 2 == 0:
        raise EvenOrderY(f"Y has even order {y.order}")
    if 4 ** n * y.order > cap:
        raise CapExceeded(f"construction of order {4 ** n * y.order} exceeds cap {cap}")
    if x_seeds is not None:
        X = subgroup_generated(y, x_seeds)
        if X.order * 3 != y.order or not is_normal(y, X):
            raise NoIndex3NormalSubgroup("supplied X is not a normal subgroup of index 3")
    else:
        X = find_index3_normal_subgroup(y)
    Q, proj = quotient(y, X)
    t = 1
    exponent = {0: 0, t: 1, Q.mul(t, t): 2}
    N = homocyclic_carrier(n)
    gamma = make_gamma(n, N)
    powers = [power_of_map(gamma, k).images for k in range(3)]
    action = np.stack([powers[exponent[int(proj.images[v])]] for v in range(y.order)])
    g = semidirect_product(N, y, action, cap=cap)
    g.name = f"C{2 ** n}^2:{y.name}" if y.name else f"C{2 ** n}^2:Y"
    # (0, x) sits at index x
    members = np.zeros(g.order, dtype=bool)
    members[X.elements] = True
    return Construction(g, SubgroupSet(g, members))


def make_homocyclic_case3(n: int, y=None, x_seeds=None, cap: int = DEFAULT_CAP) -> Group:
    return build_homocyclic_case3(n, y, x_seeds, cap).group


def make_suzuki64_case2(a_order: int, data_dir=None, cap: int = DEFAULT_CAP) -> Group:
    if a_order not in (3, 15):
        raise InvalidAOrder(f"A must have order 3 or 15, not {a_order}")
    return load_reference(f"suzuki64_semidirect_c{a_order}", data_dir, cap)


# ---------------------------------------------------------------------------
# specifications


_SHORTHAND_INT = {"cyclic": "k", "symmetric": "n", "alternating": "n",
                  "dihedral": "k", "dicyclic": "order", "quaternion": "order",
                  "homocyclic": "n"}


def parse_shorthand(text: str) -> dict:
    """``cyclic:7``, ``abelian:3,3``, ``metacyclic:7,3,2``, ``reference:suzuki64``,
    ``sl23``, and ``a*b`` for direct products."""
    text = text.strip()
    if "*" in text:
        return {"kind": "direct", "factors": [parse_shorthand(t) for t in text.split("*")]}
    kind, _, arg = text.partition(":")
    kind = kind.lower()
    try:
        if kind in _SHORTHAND_INT:
            return {"kind": kind, _SHORTHAND_INT[kind]: int(arg)}
        if kind == "abelian":
            return {"kind": "abelian", "orders": [int(v) for v in arg.split(",")]}
        if kind == "metacyclic":
            p, q, r = (int(v) for v in arg.split(","))
            return {"kind": "metacyclic", "p": p, "q": q, "r": r}
        if kind == "reference":
            return {"kind": "reference", "name": arg}
        if kind == "sl23":
            return {"kind": "sl23"}
    except ValueError as exc:
        raise ParseError(f"bad group shorthand {text!r}") from exc
    raise ParseError(f"unknown group shorthand {text!r}")


def resolve(spec, cap: int = DEFAULT_CAP, data_dir=None) -> Group:
    """Turn a group specification into a concrete :class:`Group`."""
    g = _resolve(spec, cap, data_dir)
    if g.order > cap:
        raise CapExceeded(f"group of order {g.order} exceeds cap {cap}")
    return g


def _resolve(spec, cap, data_dir) -> Group:
    if isinstance(spec, str):
        spec = parse_shorthand(spec)
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ParseError(f"malformed group spec {spec!r}")
    kind = spec["kind"]
    try:
        if kind == "perm":
            return parse_permgroup(spec, cap=cap)
        if kind == "cyclic":
            return cyclic_group(int(spec["k"]))
        if kind == "symmetric":
            return symmetric_group(int(spec["n"]), cap)
        if kind == "alternating":
            return alternating_group(int(spec["n"]), cap)
        if kind == "dihedral":
            return dihedral_group(int(spec["k"]))
        if kind in ("dicyclic", "quaternion"):
            return dicyclic_group(int(spec["order"]))
        if kind == "abelian":
            return abelian_group(spec["orders"])
        if kind == "metacyclic":
            return metacyclic_group(int(spec["p"]), int(spec["q"]), int(spec["r"]))
        if kind == "sl23":
            return sl23()
        if kind == "homocyclic":
            return homocyclic_carrier(int(spec["n"]))
        if kind == "reference":
            return load_reference(spec["name"], data_dir, cap)
        if kind == "direct":
            factors = [resolve(s, cap, data_dir) for s in spec["factors"]]
            g = factors[0]
            for f in factors[1:]:
                g = direct_product(g, f, cap=cap)
            if len(factors) > 1 and all(f.name for f in factors):
                g.name = "x".join(f.name for f in factors)
            return g
        if kind == "semidirect":
            return _resolve_semidirect(spec, cap, data_dir)
        if kind == "family":
            return _resolve_family(spec["name"], spec.get("params", {}), cap, data_dir)
    except KeyError as exc:
        raise ParseError(f"group spec {spec!r} is missing field {exc}") from exc
    raise ParseError(f"unknown group spec kind {kind!r}")


def _resolve_semidirect(spec, cap, data_dir) -> Group:
    action = spec.get("action", "trivial")
    if action == "gamma":
        normal = spec["normal"]
        if isinstance(normal, str):
            normal = parse_shorthand(normal)
        if normal.get("kind") != "homocyclic":
            raise ParseError("the gamma action needs a homocyclic normal factor")
        return make_homocyclic_case3(int(normal["n"]), resolve(spec["acting"], cap, data_dir),
                                     cap=cap)
    if action == "trivial":
        n = resolve(spec["normal"], cap, data_dir)
        a = resolve(spec["acting"], cap, data_dir)
        return semidirect_product(n, a, np.tile(np.arange(n.order), (a.order, 1)), cap=cap)
    raise ParseError(f"unknown action id {action!r}")


def _resolve_family(name, params, cap, data_dir) -> Group:
    if name == "s3xh":
        return make_s3_times_h(resolve(params.get("h", "cyclic:1"), cap, data_dir), cap)
    if name == "homocyclic":
        y = params.get("y")
        return make_homocyclic_case3(int(params.get("n", 1)),
                                     None if y is None else resolve(y, cap, data_dir),
                                     params.get("x"), cap)
    if name == "suzuki64":
        return make_suzuki64_case2(int(params.get("a", 3)), data_dir, cap)
    raise ParseError(f"unknown family {name!r}")


# ---------------------------------------------------------------------------
# corpus


def _fam(name, **params):
    return {"kind": "family", "name": name, "params": params}


def _d(*factors):
    return {"kind": "direct", "factors": [parse_shorthand(f) if isinstance(f, str) else f
                                          for f in factors]}


POS, NEG = "positive", "negative"


def _small_entries():
    hc = lambda n, y=None: _fam("homocyclic", n=n, **({} if y is None else {"y": y}))
    return [
        # negative controls
        ("C1", "cyclic:1", NEG), ("C2", "cyclic:2", NEG), ("C3", "cyclic:3", NEG),
        ("C4", "cyclic:4", NEG), ("C6", "cyclic:6", NEG), ("C15", "cyclic:15", NEG),
        ("C2xC2", "abelian:2,2", NEG), ("C2^3", "abelian:2,2,2", NEG),
        ("C4xC2", "abelian:4,2", NEG), ("C4xC4", "homocyclic:2", NEG),
        ("C2xC2xC3", "abelian:2,2,3", NEG), ("C4xC4xC3", _d("homocyclic:2", "cyclic:3"), NEG),
        ("D4", "dihedral:4", NEG), ("D5", "dihedral:5", NEG), ("D6", "dihedral:6", NEG),
        ("D8", "dihedral:8", NEG), ("Q8", "quaternion:8", NEG), ("Q16", "quaternion:16", NEG),
        ("Dic12", "dicyclic:12", NEG), ("S3xC2", "symmetric:3*cyclic:2", NEG),
        ("S4", "symmetric:4", NEG), ("A4xC2", "alternating:4*cyclic:2", NEG),
        ("SL(2,3)", "sl23", NEG), ("S3xS3", "symmetric:3*symmetric:3", NEG),
        ("S3xC4", "symmetric:3*cyclic:4", NEG), ("C7:C3", "metacyclic:7,3,2", NEG),
        ("A4xS3", "alternating:4*symmetric:3", NEG), ("S4xC3", "symmetric:4*cyclic:3", NEG),
        ("Q8xC3", "quaternion:8*cyclic:3", NEG), ("Suz64", "reference:suzuki64", NEG),
        ("C4^2:C3xC2", _d(hc(2), "cyclic:2"), NEG),
        ("(C2^2xC3)x(C4^2 trivial C3)",
         {"kind": "semidirect", "normal": "homocyclic:2", "acting": "cyclic:3",
          "action": "trivial"}, NEG),
        ("A5", "alternating:5", NEG),
        # case 1
        ("S3", "symmetric:3", POS), ("S3xC3", _fam("s3xh", h="cyclic:3"), POS),
        ("S3xC5", _fam("s3xh", h="cyclic:5"), POS), ("S3xC7", _fam("s3xh", h="cyclic:7"), POS),
        ("S3xC9", _fam("s3xh", h="cyclic:9"), POS),
        ("S3xC3xC3", _fam("s3xh", h="abelian:3,3"), POS),
        ("S3xC15", _fam("s3xh", h="cyclic:15"), POS),
        ("S3xC7:C3", _fam("s3xh", h="metacyclic:7,3,2"), POS),
        ("S3xC3xC9", _fam("s3xh", h="abelian:3,9"), POS),
        ("S3xC25", _fam("s3xh", h="cyclic:25"), POS),
        # case 3
        ("A4", "alternating:4", POS), ("C2^2:C3", hc(1), POS),
        ("A4xC3", "alternating:4*cyclic:3", POS), ("A4xC5", "alternating:4*cyclic:5", POS),
        ("A4xC7", "alternating:4*cyclic:7", POS), ("A4xC9", "alternating:4*cyclic:9", POS),
        ("A4xC3xC3", "alternating:4*abelian:3,3", POS),
        ("A4xC11", "alternating:4*cyclic:11", POS), ("A4xC13", "alternating:4*cyclic:13", POS),
        ("C2^2:C9", hc(1, "cyclic:9"), POS), ("C2^2:(C3xC3)", hc(1, "abelian:3,3"), POS),
        ("C2^2:C15", hc(1, "cyclic:15"), POS), ("C2^2:C21", hc(1, "cyclic:21"), POS),
        ("C2^2:(C7:C3)", hc(1, "metacyclic:7,3,2"), POS),
        ("C2^2:C27", hc(1, "cyclic:27"), POS), ("C2^2:(C9xC3)", hc(1, "abelian:9,3"), POS),
        ("C2^2:C33", hc(1, "cyclic:33"), POS), ("C2^2:C39", hc(1, "cyclic:39"), POS),
        ("C4^2:C3", hc(2), POS), ("C4^2:C3xC3", _d(hc(2), "cyclic:3"), POS),
        ("C4^2:C9", hc(2, "cyclic:9"), POS), ("C4^2:(C3xC3)", hc(2, "abelian:3,3"), POS),
    ]


def _full_extra_entries():
    hc = lambda n, y=None: _fam("homocyclic", n=n, **({} if y is None else {"y": y}))
    return [
        ("S3xC3^3", _fam("s3xh", h="abelian:3,3,3"), POS),
        ("S3xC81", _fam("s3xh", h="cyclic:81"), POS),
        ("S3xC105", _fam("s3xh", h="cyclic:105"), POS),
        ("S3x(C7:C3)xC5", _fam("s3xh", h="metacyclic:7,3,2*cyclic:5"), POS),
        ("A4xC25", "alternating:4*cyclic:25", POS),
        ("A4x(C7:C3)", "alternating:4*metacyclic:7,3,2", POS),
        ("A4xC3^3", "alternating:4*abelian:3,3,3", POS),
        ("C8^2:C3", hc(3), POS), ("C16^2:C3", hc(4), POS),
        ("C4^2:C15", hc(2, "cyclic:15"), POS), ("C4^2:C21", hc(2, "cyclic:21"), POS),
        ("C4^2:(C7:C3)", hc(2, "metacyclic:7,3,2"), POS),
        ("C4^2:C27", hc(2, "cyclic:27"), POS),
        ("C8^2:C9", hc(3, "cyclic:9"), POS), ("C8^2:C3xC5", _d(hc(3), "cyclic:5"), POS),
        ("A4xC4^2:C3", _d("alternating:4", hc(2)), NEG),
        ("Suz64:C3", _fam("suzuki64", a=3), POS), ("Suz64:C15", _fam("suzuki64", a=15), POS),
        ("Suz64:C3xC5", _d(_fam("suzuki64", a=3), "cyclic:5"), POS),
        ("nonnormal_sylow_example", "reference:nonnormal_sylow_example", POS),
        ("Suz64xC3", "reference:suzuki64*cyclic:3", NEG),
        ("Suz64:C3xC2", _d(_fam("suzuki64", a=3), "cyclic:2"), NEG),
        ("A4xA4", "alternating:4*alternating:4", NEG),
        ("SL(2,3)xC5", "sl23*cyclic:5", NEG),
        ("S5", "symmetric:5", NEG), ("A5xC3", "alternating:5*cyclic:3", NEG),
        ("S4xS3", "symmetric:4*symmetric:3", NEG),
        ("C8^2xC3", _d("homocyclic:3", "cyclic:3"), NEG),
        ("C4^2:C3xS3", _d(hc(2), "symmetric:3"), NEG),
        ("D12xC9", "dihedral:12*cyclic:9", NEG),
        ("Q16xC27", "quaternion:16*cyclic:27", NEG),
        # odd order
        ("C5", "cyclic:5", NEG), ("C9", "cyclic:9", NEG), ("C3xC3", "abelian:3,3", NEG),
        ("C21", "cyclic:21", NEG), ("C13:C3", "metacyclic:13,3,3", NEG),
    ]


def corpus(profile: str = "small") -> list[dict]:
    """Deterministic corpus entries ``{"name", "spec", "expected"}``."""
    if profile not in ("small", "full"):
        raise ValueError(f"unknown corpus profile {profile!r}")
    entries = _small_entries()
    if profile == "full":
        entries += _full_extra_entries()
    return [{"name": n, "spec": s, "expected": e} for n, s, e in entries]


def corpus_document(profile: str = "small") -> dict:
    return {"format": CORPUS_FORMAT, "version": CORPUS_VERSION, "profile": profile,
            "entries": corpus(profile)}


def parse_corpus_document(doc: dict) -> list[dict]:
    if not isinstance(doc, dict) or doc.get("format") != CORPUS_FORMAT:
        raise ParseError("not a corpus/v1 document")
    entries = doc.get("entries")
    if not isinstance(entries, list):
        raise ParseError("corpus entries must be a list")
    out = []
    for i, e in enumerate(entries):
        if not isinstance(e, dict) or "spec" not in e:
            raise ParseError(f"corpus entry {i} has no spec")
        expected = e.get("expected", "unknown")
        if expected not in (POS, NEG, "unknown"):
            raise ParseError(f"corpus entry {i}: bad expected tag {expected!r}")
        out.append({"name": e.get("name", f"entry{i}"), "spec": e["spec"],
                    "expected": expected})
    return out
