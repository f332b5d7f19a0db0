"""Permutations on {0,...,degree-1} with a fixed composition convention.

``a * b`` applies ``a`` first, then ``b``: ``(a * b)(p) == b(a(p))``.
Commutators are ``[a, b] = a^-1 b^-1 a b`` and iterated commutators are
left-normed: ``[x, h1, h2] = [[x, h1], h2]``.
"""

from __future__ import annotations

import math
import operator
from typing import Iterable, Iterator, Sequence


class Permutation:
    """An immutable bijection on {0,...,degree-1}, stored as an image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        try:
            images = tuple(operator.index(v) for v in images)
        except TypeError:
            raise ValueError(f"image entries must be integers: {images!r}") from None
        n = len(images)
        if n < 1:
            raise ValueError("permutation degree must be at least 1")
        seen = [False] * n
        for v in images:
            if not 0 <= v < n or seen[v]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {images!r}")
            seen[v] = True
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build a permutation from disjoint cycles; unmentioned points are fixed."""
        images = list(range(degree))
        touched = set()
        for cycle in cycles:
            for p in cycle:
                if not 0 <= p < degree:
                    raise ValueError(f"point {p} out of range for degree {degree}")
                if p in touched:
                    raise ValueError(f"point {p} repeated across cycles")
                touched.add(p)
            for i, p in enumerate(cycle):
                images[p] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        a, b = self.images, other.images
        return Permutation(b[a[p]] for p in range(len(a)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for p, q in enumerate(self.images):
            inv[q] = p
        return Permutation(inv)

    def __pow__(self, exponent: int) -> "Permutation":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Permutation.identity(self.degree)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_identity(self) -> bool:
        return all(q == p for p, q in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its minimal point, in point order."""
        out = []
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            q = self.images[start]
            while q != start:
                cycle.append(q)
                seen[q] = True
                q = self.images[q]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def cycle_string(self) -> str:
        """Cycle notation for display, e.g. ``(0 1 2)(3 4)``; identity is ``()``."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        return self.cycle_string()


def multiply(a: Permutation, b: Permutation) -> Permutation:
    """Compose ``a`` then ``b``."""
    return a * b


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """``[a, b] = a^-1 b^-1 a b``."""
    return a.inverse() * b.inverse() * a * b


def commutator_chain(x: Permutation, ys: Iterable[Permutation]) -> Permutation:
    """Left-normed iterated commutator ``[x, y1, ..., yk]``."""
    out = x
    for y in ys:
        out = commutator(out, y)
    return out


def element_order(g: Permutation) -> int:
    """Least n >= 1 with ``g**n`` the identity."""
    return g.order()
