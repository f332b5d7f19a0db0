"""Sylow p-subgroups, Hall p'-subgroups of soluble groups, and commutator
subgroups [K, H] and [K, _i H] between subgroups of a common parent."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import HallSearchError
from .group import FiniteGroup, SubgroupHandle
from .structure import _is_prime, is_soluble, p_part, prime_divisors

DEFAULT_HALL_BUDGET = 10000


@dataclass(frozen=True)
class PrimeSet:
    """A sorted set of primes, optionally read as its complement (pi').

    ``matches(n)`` tests whether every prime factor of n is allowed; the
    empty non-complemented set matches only n = 1 (the trivial Hall case).
    """

    primes: tuple[int, ...]
    complement: bool = False

    def __post_init__(self):
        ordered = tuple(sorted(set(int(p) for p in self.primes)))
        for p in ordered:
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", ordered)

    def matches(self, n: int) -> bool:
        support = prime_divisors(n)
        if self.complement:
            return all(p not in self.primes for p in support)
        return all(p in self.primes for p in support)

    def order_mask(self, orders: np.ndarray, nontrivial: bool = True) -> np.ndarray:
        """Mask of elements whose order this set allows."""
        allowed = [int(o) for o in np.unique(orders) if self.matches(int(o))]
        mask = np.isin(orders, allowed)
        if nontrivial:
            mask &= orders > 1
        return mask


def normalizer(g: FiniteGroup, handle: SubgroupHandle) -> SubgroupHandle:
    """Elements x with handle^x = handle."""
    mask = np.ones(g.order, dtype=bool)
    member = handle.member_mask
    for s in handle.indices:
        mask &= member[g.conjugates_of(int(s))]
    return SubgroupHandle(g, np.flatnonzero(mask).astype(np.int64))


def _p_element_mask(g: FiniteGroup, p: int) -> np.ndarray:
    """Elements of order a positive power of p."""
    return PrimeSet((p,)).order_mask(g.element_orders)


def sylow_subgroup(g: FiniteGroup, p: int) -> SubgroupHandle:
    """A Sylow p-subgroup, grown deterministically.

    Starting from the canonically minimal p-element, repeatedly pass to the
    normalizer and adjoin its minimal p-element outside the current
    subgroup; every adjunction multiplies the order by at least p.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    key = ("sylow", p)
    if key in g._cache:
        return g._cache[key]
    target = p_part(g.order, p)
    if target == 1:
        handle = g.trivial_subgroup()
        g._cache[key] = handle
        return handle
    p_elements = _p_element_mask(g, p)
    start = int(np.flatnonzero(p_elements)[0])
    current = g.subgroup_from_indices([start])
    while current.order < target:
        norm = normalizer(g, current)
        candidates = p_elements[norm.indices] & ~current.member_mask[norm.indices]
        fresh = norm.indices[candidates]
        if len(fresh) == 0:
            raise RuntimeError("Sylow growth stalled; this indicates an engine bug")
        current = g.subgroup_from_indices(
            list(current.indices) + [int(fresh[0])]
        )
    g._cache[key] = current
    return current


def hall_prime_complement(
    g: FiniteGroup,
    p: int,
    seed: int = 0,
    budget: int = DEFAULT_HALL_BUDGET,
) -> SubgroupHandle:
    """A Hall p'-subgroup of a soluble group, by seeded randomized growth.

    Samples p'-elements, adjoins each to a candidate generating set and
    discards adjunctions whose closure picks up a factor of p. The result
    is verified against the exact p'-part before returning. After the
    sample budget a deterministic search over closures of up to three
    p'-elements runs; failing that too raises HallSearchError.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not is_soluble(g):
        raise ValueError("Hall subgroup search requires a soluble group")
    target = g.order // p_part(g.order, p)
    if target == 1:
        return g.trivial_subgroup()
    complement = PrimeSet((p,), complement=True)
    universe = np.flatnonzero(complement.order_mask(g.element_orders)).astype(np.int64)
    rng = random.Random(seed)
    gens: list[int] = []
    current = np.array([0], dtype=np.int64)
    member = np.zeros(g.order, dtype=bool)
    member[0] = True
    attempts = 0
    while attempts < budget:
        attempts += 1
        x = int(universe[rng.randrange(len(universe))])
        if member[x]:
            continue
        trial = g.index_closure(gens + [x])
        if len(trial) % p == 0:
            continue
        gens.append(x)
        current = trial
        member = np.zeros(g.order, dtype=bool)
        member[current] = True
        if len(current) == target:
            return _verified_hall(g, p, current, target)
    # deterministic fallback: closures of up to three p'-elements
    pool = [int(x) for x in universe]
    for k in (1, 2, 3):
        for combo in itertools.combinations(pool, k):
            closure = g.index_closure(combo)
            if len(closure) == target and len(closure) % p != 0:
                return _verified_hall(g, p, closure, target)
    raise HallSearchError(attempts)


def _verified_hall(
    g: FiniteGroup, p: int, indices: np.ndarray, target: int
) -> SubgroupHandle:
    if len(indices) != target or len(indices) % p == 0:
        raise HallSearchError(0, "Hall candidate failed the order check")
    return SubgroupHandle(g, indices)


def commutator_subgroup(
    g: FiniteGroup, left: SubgroupHandle, right: SubgroupHandle
) -> SubgroupHandle:
    """[K, H]: subgroup generated by {[k, h] : k in K, h in H}."""
    if left.parent is not g or right.parent is not g:
        raise ValueError("handles must belong to the given parent group")
    values = g.commutator_value_indices(left.indices, right.indices)
    return SubgroupHandle(g, g.index_closure(values))


def iterated_commutator_subgroup(
    g: FiniteGroup, left: SubgroupHandle, right: SubgroupHandle, i: int
) -> SubgroupHandle:
    """[K, _i H] = [[K, _(i-1) H], H], with [K, _1 H] = [K, H]."""
    if i < 1:
        raise ValueError("iteration count must be at least 1")
    out = left
    for _ in range(i):
        out = commutator_subgroup(g, out, right)
    return out


def commutator_with_elements(
    g: FiniteGroup, base: SubgroupHandle, ys: Sequence[int] | Iterable[int]
) -> SubgroupHandle:
    """[K, y1, ..., yk]: iterated subgroup commutator against single elements."""
    out = base
    for y in ys:
        values = g.commutator_value_indices(out.indices, np.array([int(y)]))
        out = SubgroupHandle(g, g.index_closure(values))
    return out
