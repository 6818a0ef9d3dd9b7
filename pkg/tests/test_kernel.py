import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from naive import naive_closure, order_of
from pyramidal.errors import CapExceeded, DegreeMismatch, ParseError
from pyramidal.kernel import (check_associative, closure_from_generators, cyclic_group,
                              element_order, load_permgroup, order_statistics,
                              parse_permgroup, save_permgroup)
from pyramidal.families import dicyclic_group, dihedral_group, symmetric_group
from pyramidal.maps import homocyclic_carrier


def perms(degree):
    return st.permutations(list(range(degree))).map(tuple)


gen_lists = st.integers(1, 6).flatmap(lambda d: st.lists(perms(d), max_size=3).map(
    lambda gs: (d, gs)))


def test_s3_from_transpositions():
    assert closure_from_generators([[1, 0, 2], [0, 2, 1]]).order == 6


def test_trivial_group_on_one_point():
    g = closure_from_generators([], degree=1)
    assert g.order == 1
    assert g.table.tolist() == [[0]]


def test_d4_order_matches_naive_closure():
    g = closure_from_generators([[1, 2, 3, 0], [2, 1, 0, 3]])
    assert g.order == 8 == len(naive_closure([(1, 2, 3, 0), (2, 1, 0, 3)], 4))


def test_element_orders():
    s3 = symmetric_group(3)
    d4 = dihedral_group(4)
    assert element_order(s3, 0) == 1
    transpositions = [x for x in range(6) if s3.labels[x].tolist() in ([1, 0, 2], [0, 2, 1], [2, 1, 0])]
    assert [element_order(s3, x) for x in transpositions] == [2, 2, 2]
    four_cycle = next(x for x in range(8) if d4.labels[x].tolist() == [1, 2, 3, 0])
    assert element_order(d4, four_cycle) == 4


@pytest.mark.parametrize("group, stats", [
    (symmetric_group(3), {1: 1, 2: 3, 3: 2}),
    (homocyclic_carrier(2), {1: 1, 2: 3, 4: 12}),
    (dicyclic_group(8), {1: 1, 2: 1, 4: 6}),
])
def test_order_statistics(group, stats):
    assert order_statistics(group) == stats


def test_closure_is_deterministic():
    gens = [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]]
    a, b = closure_from_generators(gens), closure_from_generators(gens)
    assert np.array_equal(a.table, b.table)
    assert np.array_equal(a.labels, b.labels)


def test_closure_discovery_is_breadth_first():
    c = cyclic_group(5)
    # element k is the k-th power of the generator
    assert [c.labels[k][0] for k in range(5)] == [0, 1, 2, 3, 4]


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        closure_from_generators([[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]], cap=100)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        closure_from_generators([[1, 0], [0, 2, 1]])


def test_permgroup_roundtrip(tmp_path):
    g = symmetric_group(4)
    path = tmp_path / "s4.json"
    save_permgroup(g, path)
    doc = json.loads(path.read_text())
    assert doc["format"] == "permgroup/v1"
    assert load_permgroup(path).order == 24


def test_permgroup_writer_keeps_generator_order(tmp_path):
    from pyramidal.kernel import permgroup_document
    doc = permgroup_document(3, [[0, 2, 1], [1, 0, 2]])
    assert doc["generators"] == [[0, 2, 1], [1, 0, 2]]


@pytest.mark.parametrize("doc", [
    {"degree": 3, "generators": [[0, 0, 1]]},
    {"degree": 3, "generators": [[0, 1, 3]]},
    {"degree": 3},
    {"format": "other/v9", "degree": 1, "generators": []},
    [1, 2],
])
def test_permgroup_rejects_bad_documents(doc):
    with pytest.raises((ParseError, DegreeMismatch)):
        parse_permgroup(doc)


@settings(max_examples=60, deadline=None)
@given(gen_lists)
def test_closure_properties(data):
    degree, gens = data
    g = closure_from_generators(gens, degree=degree)
    n = g.order
    ident = np.arange(n)
    assert (np.sort(g.table, axis=1) == ident).all()
    assert (np.sort(g.table, axis=0) == ident[:, None]).all()
    assert (g.table[ident, g.inverse] == 0).all()
    assert (g.table[g.inverse, ident] == 0).all()
    assert np.array_equal(g.element_orders, g.element_orders[g.inverse])
    assert (n % g.element_orders == 0).all()
    assert sum(order_statistics(g).values()) == n
    assert order_statistics(g)[1] == 1
    assert n == len(naive_closure(gens, degree))
    for x in range(0, n, max(1, n // 7)):
        assert element_order(g, x) == order_of(tuple(g.labels[x]))


@settings(max_examples=25, deadline=None)
@given(gen_lists)
def test_tables_are_associative(data):
    degree, gens = data
    g = closure_from_generators(gens, degree=degree)
    assert check_associative(g, samples=None if g.order <= 512 else 64)


def test_labels_multiply_like_table():
    g = symmetric_group(4)
    for a in range(0, 24, 5):
        for b in range(24):
            assert np.array_equal(g.labels[a][g.labels[b]], g.labels[g.mul(a, b)])


def test_power():
    c = cyclic_group(12)
    assert c.power(1, 5) == 5
    assert c.power(5, -1) == c.inv(5)
