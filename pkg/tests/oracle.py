"""Independent brute-force oracles used to freeze expected test values.

Everything here works on plain image tuples and Python sets, touching none
of the engine's kernel/table machinery, so agreement between engine and
oracle is meaningful evidence.
"""

import math
from itertools import combinations


def compose(a, b):
    """Apply a first, then b."""
    return tuple(b[a[p]] for p in range(len(a)))


def inverse(a):
    out = [0] * len(a)
    for p, q in enumerate(a):
        out[q] = p
    return tuple(out)


def identity(degree):
    return tuple(range(degree))


def comm(a, b):
    return compose(compose(compose(inverse(a), inverse(b)), a), b)


def comm_chain(x, ys):
    for y in ys:
        x = comm(x, y)
    return x


def order(a):
    n = 1
    cur = a
    ident = identity(len(a))
    while cur != ident:
        cur = compose(cur, a)
        n += 1
    return n


def closure(degree, gens):
    """Breadth-first closure of generators under composition."""
    ident = identity(degree)
    found = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return found


def subgroup_generated(seed, degree):
    return closure(degree, list(seed))


def conjugacy_classes(elements):
    """Partition into conjugation orbits, as a set of frozensets."""
    elements = set(elements)
    out = set()
    seen = set()
    for x in elements:
        if x in seen:
            continue
        orbit = frozenset(compose(compose(inverse(g), x), g) for g in elements)
        out.add(orbit)
        seen |= orbit
    return out


def centralizer(elements, subset):
    return {g for g in elements if all(compose(g, s) == compose(s, g) for s in subset)}


def normal_closure(elements, seed, degree):
    conj = {compose(compose(inverse(g), s), g) for s in seed for g in elements}
    return closure(degree, list(conj))


def commutator_subgroup(elements, left, right, degree):
    values = {comm(a, b) for a in left for b in right}
    return closure(degree, list(values))


def lower_central_series(elements, degree):
    terms = [set(elements)]
    while True:
        nxt = commutator_subgroup(elements, terms[-1], elements, degree)
        if nxt == terms[-1]:
            break
        terms.append(nxt)
        if len(nxt) == 1:
            break
    return terms


def derived_series(elements, degree):
    terms = [set(elements)]
    while True:
        cur = terms[-1]
        nxt = commutator_subgroup(elements, cur, cur, degree)
        if nxt == cur:
            break
        terms.append(nxt)
        if len(nxt) == 1:
            break
    return terms


def power_closure(subset, degree):
    out = {identity(degree)}
    for s in subset:
        cur = s
        while cur not in out:
            out.add(cur)
            cur = compose(cur, s)
    return out


def star_set(elements, degree, variant, level):
    """Direct recursive definition of the coprime commutator sets."""
    if variant == "gamma":
        bottom = 1
    elif variant == "delta":
        bottom = 0
    else:
        raise ValueError(variant)
    if level == bottom:
        return set(elements)
    prev = star_set(elements, degree, variant, level - 1)
    base = power_closure(prev, degree)
    right = set(elements) if variant == "gamma" else base
    return {
        comm(a, b)
        for a in base
        for b in right
        if math.gcd(order(a), order(b)) == 1
    }


def all_p_subgroups_of_order(elements, degree, target):
    """All subgroups of the given order arising as closures of <=2 elements.

    Exhaustive for the desk-scale uses in the tests (e.g. Sylow subgroups of
    Sym(4), where every order-8 subgroup is 2-generated).
    """
    found = set()
    pool = sorted(elements)
    for a in pool:
        c = closure(degree, [a])
        if len(c) == target:
            found.add(frozenset(c))
    for a, b in combinations(pool, 2):
        c = closure(degree, [a, b])
        if len(c) == target:
            found.add(frozenset(c))
    return found
