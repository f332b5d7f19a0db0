"""Finite permutation groups with full element enumeration.

Groups are modelled the brute-force way: every element is materialized and
sorted lexicographically by image tuple, which makes every downstream
computation deterministic. Index-level machinery (multiplication table,
inverse and order arrays) is built lazily through the kernel backend.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

import numpy as np

from .backend import kernels
from .errors import CapExceededError
from .perm import Permutation

DEFAULT_ELEMENT_CAP = 2000


def resolve_element_cap(cap: int | None = None) -> int:
    """Element cap: explicit argument, else STARCOMM_MAX_ORDER, else default."""
    if cap is not None:
        return cap
    env = os.environ.get("STARCOMM_MAX_ORDER")
    if env:
        return int(env)
    return DEFAULT_ELEMENT_CAP


class FiniteGroup:
    """A fully enumerated permutation group on {0,...,degree-1}."""

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        elements: Sequence[Permutation],
        group_id: str | None = None,
        _images: np.ndarray | None = None,
        _table: np.ndarray | None = None,
        _inverse: np.ndarray | None = None,
        _orders: np.ndarray | None = None,
    ):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self.group_id = group_id
        self._images = _images
        self._table = _table
        self._inverse = _inverse
        self._orders = _orders
        self._index: dict[Permutation, int] | None = None
        self._class_labels: np.ndarray | None = None
        self._classes: list[np.ndarray] | None = None
        self._cache: dict = {}

    # -- construction ----------------------------------------------------

    @classmethod
    def from_sorted_elements(
        cls,
        degree: int,
        elements: Sequence[Permutation],
        generators: Sequence[Permutation] | None = None,
        group_id: str | None = None,
        **precomputed,
    ) -> "FiniteGroup":
        """Wrap an already-closed, canonically sorted element list."""
        if generators is None:
            generators = tuple(g for g in elements if not g.is_identity()) or (
                Permutation.identity(degree),
            )
        return cls(degree, generators, elements, group_id=group_id, **precomputed)

    # -- cached index machinery -------------------------------------------

    @property
    def images(self) -> np.ndarray:
        if self._images is None:
            self._images = np.array(
                [e.images for e in self.elements], dtype=np.int32
            )
        return self._images

    @property
    def table(self) -> np.ndarray:
        if self._table is None:
            gen_rows = np.array(
                [g.images for g in self.generators], dtype=np.int32
            ).reshape(len(self.generators), self.degree)
            self._table = kernels.mult_table(self.images, gen_rows)
        return self._table

    @property
    def inverse_indices(self) -> np.ndarray:
        if self._inverse is None:
            inv_rows = np.argsort(self.images, axis=1).astype(np.int32)
            self._inverse = kernels.find_rows(self.images, inv_rows)
        return self._inverse

    @property
    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            self._orders = kernels.element_orders(self.images)
        return self._orders

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def index_of(self, g: Permutation) -> int:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements)}
        try:
            return self._index[g]
        except KeyError:
            raise ValueError(f"element {g} not in group {self.describe()}") from None

    def __contains__(self, g: Permutation) -> bool:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements)}
        return g in self._index

    def indices_of(self, gs: Iterable[Permutation]) -> np.ndarray:
        return np.array(sorted({self.index_of(g) for g in gs}), dtype=np.int64)

    def describe(self) -> str:
        return self.group_id or f"<group degree={self.degree} order={self.order}>"

    def __repr__(self) -> str:
        return f"FiniteGroup({self.describe()}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    # -- index-level operations -------------------------------------------

    def idx_mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def idx_inv(self, i: int) -> int:
        return int(self.inverse_indices[i])

    def idx_pow(self, i: int, e: int) -> int:
        if e < 0:
            return self.idx_pow(self.idx_inv(i), -e)
        result, base = 0, i
        table = self.table
        while e:
            if e & 1:
                result = int(table[result, base])
            base = int(table[base, base])
            e >>= 1
        return result

    def conjugates_of(self, i: int) -> np.ndarray:
        """All g^-1 * x * g over g, as an array indexed by g."""
        table = self.table
        return table[table[self.inverse_indices, i], np.arange(self.order)]

    def class_labels(self) -> np.ndarray:
        if self._class_labels is None:
            self._class_labels = kernels.conjugacy_min_reps(
                self.table, self.inverse_indices
            )
        return self._class_labels

    def class_arrays(self) -> list[np.ndarray]:
        """Conjugacy classes as index arrays, ordered by minimal representative."""
        if self._classes is None:
            labels = self.class_labels()
            reps = np.unique(labels)
            self._classes = [np.flatnonzero(labels == r) for r in reps]
        return self._classes

    def index_closure(self, seed: Iterable[int]) -> np.ndarray:
        return kernels.index_closure(self.table, np.fromiter(seed, dtype=np.int64))

    def commutator_value_indices(
        self,
        left: np.ndarray,
        right: np.ndarray,
        coprime_only: bool = False,
    ) -> np.ndarray:
        """Sorted indices of {[a, b] : a in left, b in right} (optionally coprime)."""
        mask = kernels.commutator_mask(
            self.table,
            self.inverse_indices,
            self.element_orders,
            np.asarray(left, dtype=np.int64),
            np.asarray(right, dtype=np.int64),
            coprime_only,
        )
        return np.flatnonzero(mask).astype(np.int64)

    def power_closure_indices(self, indices: Iterable[int]) -> np.ndarray:
        """Sorted indices of all powers s^j (j >= 0) of the given elements."""
        member = np.zeros(self.order, dtype=bool)
        member[0] = True
        table = self.table
        for s in indices:
            s = int(s)
            cur = s
            while cur != 0:
                member[cur] = True
                cur = int(table[cur, s])
        return np.flatnonzero(member).astype(np.int64)

    # -- subgroup operations ------------------------------------------------

    def subgroup_from_indices(self, indices: Iterable[int]) -> "SubgroupHandle":
        """Subgroup generated by the given element indices."""
        return SubgroupHandle(self, self.index_closure(indices))

    def subgroup_generated(self, seed: Iterable[Permutation]) -> "SubgroupHandle":
        return self.subgroup_from_indices(self.index_of(g) for g in seed)

    def trivial_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, np.array([0], dtype=np.int64))

    def full_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, np.arange(self.order, dtype=np.int64))

    def conjugacy_classes(self) -> list[tuple[Permutation, ...]]:
        return [
            tuple(self.elements[int(i)] for i in cls) for cls in self.class_arrays()
        ]

    def centralizer(self, subset: Iterable[Permutation]) -> "SubgroupHandle":
        """Elements commuting with every member of the subset."""
        indices = [self.index_of(g) for g in subset]
        table = self.table
        mask = np.ones(self.order, dtype=bool)
        for s in indices:
            mask &= table[:, s] == table[s, :]
        return SubgroupHandle(self, np.flatnonzero(mask).astype(np.int64))

    def normal_closure(self, subset: Iterable[Permutation]) -> "SubgroupHandle":
        return self.normal_closure_of_indices(self.index_of(g) for g in subset)

    def normal_closure_of_indices(self, indices: Iterable[int]) -> "SubgroupHandle":
        labels = self.class_labels()
        reps = {int(labels[int(i)]) for i in indices}
        seed: list[int] = []
        for cls in self.class_arrays():
            if int(labels[int(cls[0])]) in reps:
                seed.extend(int(i) for i in cls)
        return self.subgroup_from_indices(seed)

    def quotient(self, kernel: "SubgroupHandle") -> "QuotientMap":
        key = ("quotient", kernel.indices.tobytes())
        if key not in self._cache:
            self._cache[key] = QuotientMap(self, kernel)
        return self._cache[key]


class SubgroupHandle:
    """A subgroup of a parent group, identified by its element subset."""

    def __init__(self, parent: FiniteGroup, indices: np.ndarray):
        self.parent = parent
        self.indices = np.asarray(indices, dtype=np.int64)
        self.order = len(self.indices)
        self._member_mask: np.ndarray | None = None
        self._group: FiniteGroup | None = None
        self._normal: bool | None = None

    @property
    def members(self) -> tuple[Permutation, ...]:
        return tuple(self.parent.elements[int(i)] for i in self.indices)

    @property
    def member_mask(self) -> np.ndarray:
        if self._member_mask is None:
            mask = np.zeros(self.parent.order, dtype=bool)
            mask[self.indices] = True
            self._member_mask = mask
        return self._member_mask

    def contains_index(self, i: int) -> bool:
        return bool(self.member_mask[i])

    def __contains__(self, g: Permutation) -> bool:
        return g in self.parent and self.contains_index(self.parent.index_of(g))

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_full(self) -> bool:
        return self.order == self.parent.order

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SubgroupHandle)
            and self.parent is other.parent
            and self.order == other.order
            and bool(np.array_equal(self.indices, other.indices))
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"SubgroupHandle(order={self.order} of {self.parent.describe()})"

    def is_normal(self) -> bool:
        """True when the member set is a union of conjugacy classes."""
        if self._normal is None:
            labels = self.parent.class_labels()
            reps = np.unique(labels[self.indices])
            total = sum(
                len(cls)
                for cls in self.parent.class_arrays()
                if labels[int(cls[0])] in reps
            )
            self._normal = total == self.order
        return self._normal

    def generating_indices(self) -> list[int]:
        """A small deterministic generating set (greedy over canonical order)."""
        gens: list[int] = []
        closure = {0}
        for i in self.indices:
            i = int(i)
            if i in closure:
                continue
            gens.append(i)
            closure = set(int(j) for j in self.parent.index_closure(gens))
            if len(closure) == self.order:
                break
        return gens

    def intersection(self, other: "SubgroupHandle") -> "SubgroupHandle":
        if other.parent is not self.parent:
            raise ValueError("handles belong to different parent groups")
        common = np.intersect1d(self.indices, other.indices)
        return SubgroupHandle(self.parent, common)

    def join(self, other: "SubgroupHandle") -> "SubgroupHandle":
        if other.parent is not self.parent:
            raise ValueError("handles belong to different parent groups")
        seed = np.union1d(self.indices, other.indices)
        return self.parent.subgroup_from_indices(seed)

    def as_group(self) -> FiniteGroup:
        """Materialize as a standalone FiniteGroup (same degree, same elements)."""
        if self._group is None:
            parent = self.parent
            members = self.indices
            position = {int(i): k for k, i in enumerate(members)}
            sub_table = np.searchsorted(
                members, parent.table[np.ix_(members, members)]
            ).astype(np.int32)
            sub_inv = np.searchsorted(
                members, parent.inverse_indices[members]
            ).astype(np.int64)
            gens = [parent.elements[int(i)] for i in self.generating_indices()]
            if not gens:
                gens = [parent.identity]
            self._group = FiniteGroup(
                parent.degree,
                gens,
                [parent.elements[int(i)] for i in members],
                group_id=None,
                _images=np.ascontiguousarray(parent.images[members]),
                _table=sub_table,
                _inverse=sub_inv,
                _orders=parent.element_orders[members].astype(np.int64),
            )
            self._group._cache["parent_positions"] = position
        return self._group


class QuotientMap:
    """Quotient by a normal subgroup, realized as the action on left cosets."""

    def __init__(self, source: FiniteGroup, kernel: SubgroupHandle):
        if kernel.parent is not source:
            raise ValueError("kernel handle does not belong to the source group")
        if not kernel.is_normal():
            raise ValueError("kernel is not a normal subgroup")
        self.source = source
        self.kernel = kernel
        table = source.table
        n = source.order
        # minimal element of each left coset gN
        coset_products = table[:, kernel.indices]
        coset_min = coset_products.min(axis=1)
        reps = np.unique(coset_min)
        m = len(reps)
        # permutation action on cosets: point i moves to the coset of rep_i * x
        moved = coset_min[table[reps, :]]  # shape (m, n): row i, column x
        image_rows = np.searchsorted(reps, moved).T.astype(np.int32)
        unique_rows, proj = np.unique(image_rows, axis=0, return_inverse=True)
        proj = proj.reshape(-1)
        elements = [Permutation(row) for row in unique_rows]
        gen_perms = [
            elements[int(proj[source.index_of(g)])] for g in source.generators
        ] or [Permutation.identity(m)]
        self.image = FiniteGroup.from_sorted_elements(
            m,
            elements,
            generators=gen_perms,
            group_id=None,
            _images=np.ascontiguousarray(unique_rows.astype(np.int32)),
        )
        self.projection_indices = proj.astype(np.int64)
        # canonical-minimal preimage per image element
        section = np.full(len(elements), -1, dtype=np.int64)
        for x in range(n - 1, -1, -1):
            section[proj[x]] = x
        self.section_indices = section

    def project(self, g: Permutation) -> Permutation:
        return self.image.elements[int(self.projection_indices[self.source.index_of(g)])]

    def section(self, h: Permutation) -> Permutation:
        return self.source.elements[int(self.section_indices[self.image.index_of(h)])]

    def project_index_set(self, indices: Iterable[int]) -> np.ndarray:
        arr = np.fromiter((int(i) for i in indices), dtype=np.int64)
        if len(arr) == 0:
            return arr
        return np.unique(self.projection_indices[arr])

    def project_subgroup(self, handle: SubgroupHandle) -> SubgroupHandle:
        if handle.parent is not self.source:
            raise ValueError("handle does not belong to the source group")
        return SubgroupHandle(self.image, self.project_index_set(handle.indices))

    def preimage_indices_of(self, image_index: int) -> np.ndarray:
        return np.flatnonzero(self.projection_indices == image_index).astype(np.int64)


def generate(
    degree: int,
    generators: Sequence[Permutation],
    cap: int | None = None,
    group_id: str | None = None,
) -> FiniteGroup:
    """Enumerate the group generated by the given permutations.

    Raises CapExceededError when the closure would exceed the element cap
    (default 2000; STARCOMM_MAX_ORDER or the cap argument override it).
    """
    cap = resolve_element_cap(cap)
    for g in generators:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} != group degree {degree}")
    gen_rows = np.array(
        [g.images for g in generators], dtype=np.int32
    ).reshape(len(generators), degree)
    rows, truncated = kernels.closure_images(gen_rows, cap)
    if truncated:
        raise CapExceededError(cap, len(rows))
    elements = [Permutation(row) for row in rows]
    return FiniteGroup(
        degree,
        generators or (Permutation.identity(degree),),
        elements,
        group_id=group_id,
        _images=np.ascontiguousarray(rows),
    )


def direct_product(
    g: FiniteGroup,
    h: FiniteGroup,
    cap: int | None = None,
    group_id: str | None = None,
) -> FiniteGroup:
    """Product group acting on the disjoint union of the two point sets."""
    cap = resolve_element_cap(cap)
    predicted = g.order * h.order
    if predicted > cap:
        raise CapExceededError(cap, predicted)
    degree = g.degree + h.degree
    gens = []
    for a in g.generators:
        gens.append(Permutation(tuple(a.images) + tuple(range(g.degree, degree))))
    for b in h.generators:
        gens.append(Permutation(tuple(range(g.degree)) + tuple(q + g.degree for q in b.images)))
    out = generate(degree, gens, cap=cap, group_id=group_id)
    if out.order != predicted:
        raise RuntimeError("direct product enumeration produced the wrong order")
    return out
