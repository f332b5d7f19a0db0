"""Structural series and predicates: derived/lower-central series, cores,
Fitting subgroup and height, normal subgroup enumeration."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .group import FiniteGroup, SubgroupHandle

DEFAULT_CLASS_CAP = 24


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    part = 1
    while n % p == 0:
        part *= p
        n //= p
    return part


@dataclass
class SeriesRecord:
    """A subgroup series with its stabilization flag."""

    kind: str  # derived | lower_central | fitting_ascending
    terms: list[SubgroupHandle]
    stabilized: bool

    def orders(self) -> list[int]:
        return [t.order for t in self.terms]


def _commutator_term(g: FiniteGroup, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    values = g.commutator_value_indices(left, right, coprime_only=False)
    return g.index_closure(values)


def lower_central_series(g: FiniteGroup) -> SeriesRecord:
    """G = g1 >= g2 >= ... with g(i+1) = <[x, y] : x in gi, y in G>."""
    key = "lower_central_series"
    if key in g._cache:
        return g._cache[key]
    everything = np.arange(g.order, dtype=np.int64)
    terms = [g.full_subgroup()]
    while True:
        nxt = _commutator_term(g, terms[-1].indices, everything)
        if len(nxt) == terms[-1].order:
            break
        terms.append(SubgroupHandle(g, nxt))
        if terms[-1].is_trivial():
            break
    record = SeriesRecord("lower_central", terms, stabilized=True)
    g._cache[key] = record
    return record


def gamma_infinity(g: FiniteGroup) -> SubgroupHandle:
    """Nilpotent residual: the stable term of the lower central series."""
    return lower_central_series(g).terms[-1]


def derived_series(g: FiniteGroup) -> SeriesRecord:
    key = "derived_series"
    if key in g._cache:
        return g._cache[key]
    terms = [g.full_subgroup()]
    while True:
        cur = terms[-1].indices
        nxt = _commutator_term(g, cur, cur)
        if len(nxt) == terms[-1].order:
            break
        terms.append(SubgroupHandle(g, nxt))
        if terms[-1].is_trivial():
            break
    record = SeriesRecord("derived", terms, stabilized=True)
    g._cache[key] = record
    return record


def is_soluble(g: FiniteGroup) -> bool:
    return derived_series(g).terms[-1].is_trivial()


def is_nilpotent(g: FiniteGroup) -> bool:
    return gamma_infinity(g).is_trivial()


def is_abelian(g: FiniteGroup) -> bool:
    return bool(np.array_equal(g.table, g.table.T))


def is_p_group(g: FiniteGroup, p: int) -> bool:
    return g.order == p_part(g.order, p)


def is_metanilpotent(g: FiniteGroup) -> bool:
    """True when the nilpotent residual is itself nilpotent."""
    return is_nilpotent(gamma_infinity(g).as_group())


def p_core(g: FiniteGroup, p: int) -> SubgroupHandle:
    """Largest normal p-subgroup: intersection of the Sylow p conjugates."""
    from .sylow import sylow_subgroup

    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    key = ("p_core", p)
    if key in g._cache:
        return g._cache[key]
    sylow = sylow_subgroup(g, p)
    core = sylow.member_mask.copy()
    table = g.table
    inv = g.inverse_indices
    n = g.order
    for x in range(n):
        conjugated = table[table[inv[x], sylow.indices], x]
        mask = np.zeros(n, dtype=bool)
        mask[conjugated] = True
        core &= mask
        if core.sum() == 1:
            break
    handle = SubgroupHandle(g, np.flatnonzero(core).astype(np.int64))
    g._cache[key] = handle
    return handle


def p_prime_core(g: FiniteGroup, p: int) -> SubgroupHandle:
    """Largest normal subgroup of order coprime to p.

    Joins the normal closures of all conjugacy classes whose closure is a
    p'-group; every such closure sits inside the p'-core and every element
    of the p'-core lies in one of them.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    key = ("p_prime_core", p)
    if key in g._cache:
        return g._cache[key]
    seed: list[int] = []
    for cls in g.class_arrays():
        closure = g.normal_closure_of_indices([int(cls[0])])
        if closure.order % p != 0:
            seed.extend(int(i) for i in closure.indices)
    handle = g.subgroup_from_indices(seed)
    if handle.order % p == 0:
        raise RuntimeError("p'-core construction produced a subgroup of bad order")
    g._cache[key] = handle
    return handle


def fitting_subgroup(g: FiniteGroup) -> SubgroupHandle:
    """Join of the p-cores over the primes dividing the group order."""
    handle = g.trivial_subgroup()
    for p in prime_divisors(g.order) or []:
        handle = handle.join(p_core(g, p))
    return handle


def fitting_series(g: FiniteGroup) -> SeriesRecord:
    """Ascending chain 1 <= F1 <= F2 <= ... with F(i+1)/Fi = F(G/Fi)."""
    key = "fitting_series"
    if key in g._cache:
        return g._cache[key]
    terms = [g.trivial_subgroup()]
    while True:
        current = terms[-1]
        if current.is_full():
            record = SeriesRecord("fitting_ascending", terms, stabilized=True)
            break
        quotient = g.quotient(current)
        upstairs = fitting_subgroup(quotient.image)
        pulled = np.flatnonzero(
            upstairs.member_mask[quotient.projection_indices]
        ).astype(np.int64)
        nxt = SubgroupHandle(g, pulled)
        if nxt.order == current.order:
            record = SeriesRecord("fitting_ascending", terms, stabilized=True)
            break
        terms.append(nxt)
    g._cache[key] = record
    return record


def fitting_height(g: FiniteGroup) -> int | None:
    """Length of the ascending Fitting chain; None when it stalls below G."""
    record = fitting_series(g)
    if not record.terms[-1].is_full():
        return None
    return len(record.terms) - 1


@dataclass
class NormalLattice:
    """All normal subgroups (or a pairwise-join sample when over the class cap)."""

    subgroups: list[SubgroupHandle]
    exhaustive: bool = True

    def __iter__(self):
        return iter(self.subgroups)

    def __len__(self) -> int:
        return len(self.subgroups)

    def __getitem__(self, i):
        return self.subgroups[i]


def normal_subgroups(g: FiniteGroup, class_cap: int = DEFAULT_CLASS_CAP) -> NormalLattice:
    """Normal subgroups via join-closure of single-class normal closures.

    Beyond ``class_cap`` conjugacy classes only pairwise joins of the class
    closures are taken and the result is flagged non-exhaustive.
    """
    key = ("normal_subgroups", class_cap)
    if key in g._cache:
        return g._cache[key]
    classes = g.class_arrays()
    base: dict[bytes, SubgroupHandle] = {}
    for cls in classes:
        h = g.subgroup_from_indices(int(i) for i in cls)
        base.setdefault(h.indices.tobytes(), h)
    found = dict(base)
    exhaustive = len(classes) <= class_cap
    if exhaustive:
        frontier = list(found.values())
        while frontier:
            fresh: list[SubgroupHandle] = []
            for h in frontier:
                for b in base.values():
                    j = h.join(b)
                    key_j = j.indices.tobytes()
                    if key_j not in found:
                        found[key_j] = j
                        fresh.append(j)
            frontier = fresh
    else:
        items = list(base.values())
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                h = items[i].join(items[j])
                found.setdefault(h.indices.tobytes(), h)
    ordered = sorted(
        found.values(), key=lambda h: (h.order, tuple(int(i) for i in h.indices))
    )
    lattice = NormalLattice(ordered, exhaustive)
    g._cache[key] = lattice
    return lattice
