"""Coprime commutator sets and the subgroups they generate.

Two recursive families of element sets are computed per group:

* gamma variant, level 1 = every element; level k >= 2 collects [a, b]
  where a ranges over powers of level-(k-1) values, b over the whole
  group, and the element orders of a and b are coprime.
* delta variant, level 0 = every element; level k >= 1 collects [a, b]
  with both a and b powers of level-(k-1) values and coprime orders.

Levels are computed bottom-up with memoization per (group, variant, level);
the pair sweep skips non-coprime order buckets wholesale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LiftWitnessError
from .group import FiniteGroup, SubgroupHandle
from .perm import Permutation

GAMMA = "gamma"
DELTA = "delta"
VARIANTS = (GAMMA, DELTA)


def min_level(variant: str) -> int:
    if variant == GAMMA:
        return 1
    if variant == DELTA:
        return 0
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class StarCommutatorSet:
    """Level-k coprime commutators of a group, with the base set that fed them."""

    group: FiniteGroup
    variant: str
    level: int
    commutator_indices: np.ndarray  # sorted element indices
    base_indices: np.ndarray | None  # power-closure feeding the sweep; None at bottom

    @property
    def size(self) -> int:
        return len(self.commutator_indices)

    def elements(self) -> tuple[Permutation, ...]:
        return tuple(self.group.elements[int(i)] for i in self.commutator_indices)

    def member_mask(self) -> np.ndarray:
        mask = np.zeros(self.group.order, dtype=bool)
        mask[self.commutator_indices] = True
        return mask

    def contains_index(self, i: int) -> bool:
        pos = np.searchsorted(self.commutator_indices, i)
        return pos < self.size and self.commutator_indices[pos] == i


def power_closure_indices(g: FiniteGroup, indices: np.ndarray) -> np.ndarray:
    """All powers s^j (j >= 0) of the given elements; always holds the identity."""
    return g.power_closure_indices(indices)


def power_closure(g: FiniteGroup, subset) -> tuple[Permutation, ...]:
    """Element-level wrapper over the index computation."""
    idx = power_closure_indices(g, g.indices_of(subset))
    return tuple(g.elements[int(i)] for i in idx)


def star_set(g: FiniteGroup, variant: str, level: int) -> StarCommutatorSet:
    """The level-k coprime commutator set, memoized per group."""
    bottom = min_level(variant)
    if level < bottom:
        raise ValueError(f"{variant} level must be >= {bottom}, got {level}")
    key = ("star_set", variant, level)
    if key in g._cache:
        return g._cache[key]
    if level == bottom:
        result = StarCommutatorSet(
            g, variant, level, np.arange(g.order, dtype=np.int64), None
        )
    else:
        previous = star_set(g, variant, level - 1)
        base = power_closure_indices(g, previous.commutator_indices)
        everything = np.arange(g.order, dtype=np.int64)
        right = everything if variant == GAMMA else base
        values = g.commutator_value_indices(base, right, coprime_only=True)
        result = StarCommutatorSet(g, variant, level, values, base)
    g._cache[key] = result
    return result


def gamma_star_set(g: FiniteGroup, k: int) -> StarCommutatorSet:
    return star_set(g, GAMMA, k)


def delta_star_set(g: FiniteGroup, k: int) -> StarCommutatorSet:
    return star_set(g, DELTA, k)


def star_subgroup(g: FiniteGroup, variant: str, level: int) -> SubgroupHandle:
    """Subgroup generated by the level-k coprime commutator set."""
    key = ("star_subgroup", variant, level)
    if key in g._cache:
        return g._cache[key]
    handle = g.subgroup_from_indices(star_set(g, variant, level).commutator_indices)
    g._cache[key] = handle
    return handle


def lift_commutator_from_quotient(
    g: FiniteGroup,
    kernel: SubgroupHandle,
    image_value: Permutation,
    variant: str,
    level: int,
) -> Permutation:
    """A level-k star commutator of g projecting onto the given quotient value.

    The value must itself be a level-k star commutator of the quotient; a
    witness always exists for the sets this engine computes, so a missing
    one raises LiftWitnessError (an engine defect, not a data outcome).
    """
    quotient = g.quotient(kernel)
    image_index = quotient.image.index_of(image_value)
    if not star_set(quotient.image, variant, level).contains_index(image_index):
        raise ValueError("value is not a star commutator of the quotient at this level")
    coset = quotient.preimage_indices_of(image_index)
    candidates = star_set(g, variant, level)
    for i in coset:
        if candidates.contains_index(int(i)):
            return g.elements[int(i)]
    raise LiftWitnessError(
        f"no level-{level} {variant} witness above {image_value.cycle_string()}"
    )
