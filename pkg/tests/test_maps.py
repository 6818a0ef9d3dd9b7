import numpy as np
import pytest

from pyramidal.errors import BudgetExceeded
from pyramidal.families import (abelian_group, alternating_group, dicyclic_group,
                                dihedral_group, load_reference, make_homocyclic_case3,
                                symmetric_group)
from pyramidal.kernel import cyclic_group
from pyramidal.maps import (GroupMap, are_isomorphic, automorphism_group_order,
                            find_isomorphism, fingerprint, homocyclic_carrier, identity_map,
                            is_homomorphism, make_gamma, power_of_map)
from pyramidal.structure import center, direct_product

S3 = symmetric_group(3)


def test_identity_and_trivial_maps_are_homomorphisms():
    assert is_homomorphism(identity_map(S3))
    assert is_homomorphism(GroupMap(S3, cyclic_group(4), np.zeros(6, dtype=int)))


def test_swapping_two_transpositions_is_not_a_homomorphism():
    t1, t2, _ = (x for x in range(6) if S3.element_orders[x] == 2)
    images = np.arange(6)
    images[[t1, t2]] = [t2, t1]
    m = GroupMap(S3, S3, images)
    assert not is_homomorphism(m)
    # the violating pair: f(t1 t2) = t1 t2, but f(t1) f(t2) = t2 t1
    assert m(S3.mul(t1, t2)) != S3.mul(m(t1), m(t2))


@pytest.mark.parametrize("g, expected", [
    (abelian_group([2, 2]), 6),
    (homocyclic_carrier(2), 96),
])
def test_automorphism_counts(g, expected):
    assert automorphism_group_order(g) == expected


@pytest.mark.parametrize("m", [1, 2, 3])
def test_homocyclic_automorphism_formula(m):
    # |Aut(C_{2^m} x C_{2^m})| = 3 * 2^(4m-3)
    assert automorphism_group_order(homocyclic_carrier(m)) == 3 * 2 ** (4 * m - 3)


@pytest.mark.parametrize("g, expected", [
    (S3, 6), (dihedral_group(4), 8), (dicyclic_group(8), 24), (alternating_group(4), 24),
    (symmetric_group(4), 24), (abelian_group([2, 2, 2]), 168), (cyclic_group(12), 4),
])
def test_automorphism_counts_known_groups(g, expected):
    aut = automorphism_group_order(g)
    assert aut == expected
    assert aut % (g.order // center(g).order) == 0


@pytest.mark.slow
def test_suzuki64_automorphism_count():
    assert automorphism_group_order(load_reference("suzuki64")) == 3 * 5 * 2 ** 10


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        automorphism_group_order(homocyclic_carrier(2), budget=10)


def test_isomorphism_examples():
    assert not are_isomorphic(S3, cyclic_group(6))
    assert not are_isomorphic(dihedral_group(4), dicyclic_group(8))
    a4 = alternating_group(4)
    built = make_homocyclic_case3(1)
    iso = find_isomorphism(a4, built)
    assert iso is not None
    assert is_homomorphism(iso) and iso.is_bijective()


def test_isomorphism_reflexive_and_symmetric():
    groups = [S3, cyclic_group(6), alternating_group(4), make_homocyclic_case3(1),
              dihedral_group(6), direct_product(S3, cyclic_group(2)), dicyclic_group(12),
              direct_product(cyclic_group(3), cyclic_group(4))]
    for a in groups:
        assert are_isomorphic(a, a)
        for b in groups:
            ab = are_isomorphic(a, b)
            assert ab == are_isomorphic(b, a)
            if fingerprint(a) != fingerprint(b):
                assert not ab
    # D6 and S3 x C2 are the same group
    assert are_isomorphic(dihedral_group(6), direct_product(S3, cyclic_group(2)))
    assert are_isomorphic(cyclic_group(12), direct_product(cyclic_group(3), cyclic_group(4)))


def test_suzuki_group_recognised_from_a_different_presentation():
    suz = load_reference("suzuki64")
    from pyramidal.families import suzuki64_with_torus
    assert are_isomorphic(suzuki64_with_torus(1), suz)
    assert not are_isomorphic(suz, direct_product(homocyclic_carrier(2), abelian_group([2, 2])))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_gamma_cycles_the_involutions(n):
    gamma = make_gamma(n)
    g = gamma.source
    assert is_homomorphism(gamma) and gamma.is_bijective()
    assert np.array_equal(power_of_map(gamma, 3).images, np.arange(g.order))
    assert not np.array_equal(gamma.images, np.arange(g.order))
    inv = sorted(np.flatnonzero(g.element_orders == 2).tolist())
    assert len(inv) == 3
    x = inv[0]
    orbit = [x, gamma(x), gamma(gamma(x))]
    assert sorted(orbit) == inv
    assert all(gamma(i) != i for i in inv)


def test_gamma_formula_on_c4():
    gamma = make_gamma(2)
    # (a, b) -> (b, -(a+b)) on exponents, index a*4 + b
    assert gamma(1 * 4 + 0) == 0 * 4 + 3
    assert gamma(0 * 4 + 1) == 1 * 4 + 3
