"""Slow, table-free reference computations on permutation tuples.

Used as independent oracles: nothing here touches Cayley tables.
"""

from itertools import product


def compose(p, q):
    return tuple(p[i] for i in q)


def inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def naive_closure(gens, degree):
    ident = tuple(range(degree))
    elems = {ident}
    changed = True
    while changed:
        changed = False
        for a, b in product(list(elems), list(gens) + list(elems)):
            c = compose(a, b)
            if c not in elems:
                elems.add(c)
                changed = True
    return elems


def order_of(p):
    ident = tuple(range(len(p)))
    k, cur = 1, p
    while cur != ident:
        cur = compose(cur, p)
        k += 1
    return k


def class_sizes(elems):
    seen, sizes = set(), []
    for x in sorted(elems):
        if x in seen:
            continue
        cls = {compose(compose(g, x), inverse(g)) for g in elems}
        seen |= cls
        sizes.append(len(cls))
    return sorted(sizes)
