"""Built-in group families, group-file serialization, and corpus assembly.

Group files are JSON: ``{"group_id": str, "degree": int, "generators":
[[int, ...], ...], "metadata": {"expected_order": int?}}`` with 0-indexed
image arrays. Cycle notation is for display only and never parsed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import GroupFileError
from .group import FiniteGroup, direct_product, generate, resolve_element_cap
from .perm import Permutation

DEFAULT_CORPUS_MAX_ORDER = 200


def _cyclic(n: int, cap=None) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic parameter must be >= 1")
    if n == 1:
        return generate(1, [], cap=cap)
    return generate(n, [Permutation([(i + 1) % n for i in range(n)])], cap=cap)


def _dihedral(n: int, cap=None) -> FiniteGroup:
    if n < 3:
        raise ValueError("dihedral parameter must be >= 3")
    rotation = Permutation([(i + 1) % n for i in range(n)])
    reflection = Permutation([(n - i) % n for i in range(n)])
    return generate(n, [rotation, reflection], cap=cap)


def _symmetric(n: int, cap=None) -> FiniteGroup:
    if n < 1:
        raise ValueError("symmetric parameter must be >= 1")
    if n == 1:
        return generate(1, [], cap=cap)
    cycle = Permutation([(i + 1) % n for i in range(n)])
    if n == 2:
        return generate(2, [cycle], cap=cap)
    swap = Permutation.from_cycles(n, [[0, 1]])
    return generate(n, [swap, cycle], cap=cap)


def _alternating(n: int, cap=None) -> FiniteGroup:
    if n < 1:
        raise ValueError("alternating parameter must be >= 1")
    if n <= 2:
        return generate(max(n, 1), [], cap=cap)
    three = Permutation.from_cycles(n, [[0, 1, 2]])
    if n == 3:
        return generate(3, [three], cap=cap)
    if n % 2 == 1:
        long = Permutation([(i + 1) % n for i in range(n)])
    else:
        long = Permutation.from_cycles(n, [list(range(1, n))])
    return generate(n, [three, long], cap=cap)


def _quaternion8(cap=None) -> FiniteGroup:
    # regular realization on 8 points; verified order 8 with one involution
    a = Permutation([1, 2, 3, 0, 5, 6, 7, 4])
    b = Permutation([4, 7, 6, 5, 2, 1, 0, 3])
    return generate(8, [a, b], cap=cap)


def _sl23(cap=None) -> FiniteGroup:
    # action on the 8 nonzero vectors of GF(3)^2, listed lexicographically
    vectors = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    position = {v: i for i, v in enumerate(vectors)}

    def matrix_perm(m):
        images = []
        for x, y in vectors:
            images.append(
                position[((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3)]
            )
        return Permutation(images)

    gens = [matrix_perm([[1, 1], [0, 1]]), matrix_perm([[0, 2], [1, 0]])]
    return generate(8, gens, cap=cap)


def _frobenius21(cap=None) -> FiniteGroup:
    shift = Permutation([(i + 1) % 7 for i in range(7)])
    doubler = Permutation([(2 * i) % 7 for i in range(7)])
    return generate(7, [shift, doubler], cap=cap)


_PARAMETRIC = {
    "cyclic": _cyclic,
    "dihedral": _dihedral,
    "symmetric": _symmetric,
    "alternating": _alternating,
}
_FIXED = {
    "quaternion8": _quaternion8,
    "sl23": _sl23,
    "frobenius21": _frobenius21,
}


def builtin(spec: str, cap: int | None = None) -> FiniteGroup:
    """Construct a built-in group from its spec string.

    Atoms are ``name`` or ``name:param`` (cyclic, dihedral, symmetric,
    alternating, quaternion8, sl23, frobenius21); ``a*b`` is the direct
    product of two atoms.
    """
    spec = spec.strip()
    if "*" in spec:
        left, _, right = spec.partition("*")
        out = direct_product(
            builtin(left, cap=cap), builtin(right, cap=cap), cap=cap, group_id=spec
        )
        return out
    name, _, raw_param = spec.partition(":")
    name = name.strip()
    if name in _FIXED:
        if raw_param:
            raise ValueError(f"builtin {name!r} takes no parameter")
        g = _FIXED[name](cap=cap)
    elif name in _PARAMETRIC:
        if not raw_param:
            raise ValueError(f"builtin {name!r} needs a parameter, e.g. {name}:4")
        g = _PARAMETRIC[name](int(raw_param), cap=cap)
    else:
        raise ValueError(f"unknown builtin {name!r}")
    g.group_id = spec
    return g


@dataclass(frozen=True)
class CorpusEntry:
    spec: str
    order: int
    extended: bool = False  # included only when the cap is raised past default


BUILTIN_CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry("alternating:4", 12),
    CorpusEntry("alternating:4*cyclic:2", 24),
    CorpusEntry("alternating:5", 60),
    CorpusEntry("alternating:6", 360, extended=True),
    CorpusEntry("cyclic:1", 1),
    CorpusEntry("cyclic:2", 2),
    CorpusEntry("cyclic:2*cyclic:3", 6),
    CorpusEntry("cyclic:3", 3),
    CorpusEntry("cyclic:6", 6),
    CorpusEntry("cyclic:8", 8),
    CorpusEntry("cyclic:12", 12),
    CorpusEntry("dihedral:3", 6),
    CorpusEntry("dihedral:4", 8),
    CorpusEntry("dihedral:5", 10),
    CorpusEntry("dihedral:6", 12),
    CorpusEntry("dihedral:7", 14),
    CorpusEntry("dihedral:9", 18),
    CorpusEntry("frobenius21", 21),
    CorpusEntry("frobenius21*cyclic:2", 42),
    CorpusEntry("quaternion8", 8),
    CorpusEntry("sl23", 24),
    CorpusEntry("symmetric:3", 6),
    CorpusEntry("symmetric:3*cyclic:2", 12),
    CorpusEntry("symmetric:3*symmetric:3", 36),
    CorpusEntry("symmetric:4", 24),
    CorpusEntry("symmetric:4*cyclic:3", 72),
    CorpusEntry("symmetric:5", 120, extended=True),
)


@dataclass
class CorpusConfig:
    """One verification run: corpus selection plus sweep parameters."""

    builtins: tuple[str, ...] | None = None  # None = the full builtin list
    directory: str | None = None  # when set, load .json files instead
    max_order: int = DEFAULT_CORPUS_MAX_ORDER
    seed: int = 0
    k_max: int = 3
    suite: tuple[str, ...] | None = None  # None = every check

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError("max_order must be >= 1")
        if self.k_max < 1:
            raise ValueError("k_max must be >= 1")

    def element_cap(self) -> int:
        from .group import resolve_element_cap

        return max(resolve_element_cap(None), self.max_order)

    def groups(self) -> list[FiniteGroup]:
        cap = self.element_cap()
        if self.directory is not None:
            groups = load_corpus_dir(self.directory, cap=cap)
            return [g for g in groups if g.order <= self.max_order]
        if self.builtins is not None:
            groups = [builtin(spec, cap=cap) for spec in self.builtins]
            groups.sort(key=lambda g: g.group_id)
            return [g for g in groups if g.order <= self.max_order]
        return builtin_corpus(max_order=self.max_order, cap=cap)


def builtin_corpus(
    max_order: int = DEFAULT_CORPUS_MAX_ORDER, cap: int | None = None
) -> list[FiniteGroup]:
    """The built-in corpus, ordered by group_id.

    Entries above ``max_order`` are dropped; the extended entries join only
    when the cap is raised beyond the default.
    """
    groups = []
    for entry in BUILTIN_CORPUS:
        if entry.order > max_order:
            continue
        if entry.extended and max_order <= DEFAULT_CORPUS_MAX_ORDER:
            continue
        groups.append(builtin(entry.spec, cap=cap))
    groups.sort(key=lambda g: g.group_id)
    return groups


def save_group(g: FiniteGroup, path) -> None:
    payload = {
        "group_id": g.group_id or "unnamed",
        "degree": g.degree,
        "generators": [list(p.images) for p in g.generators],
        "metadata": {"expected_order": g.order},
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")


def load_group(path, cap: int | None = None) -> FiniteGroup:
    """Parse and enumerate a group file, validating the declared order."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise GroupFileError(f"{path}: {exc}") from exc
    if not isinstance(payload, dict):
        raise GroupFileError(f"{path}: top-level value must be an object")
    try:
        degree = int(payload["degree"])
        raw_generators = payload["generators"]
        group_id = str(payload.get("group_id") or Path(path).stem)
    except (KeyError, TypeError, ValueError) as exc:
        raise GroupFileError(f"{path}: missing or malformed field: {exc}") from exc
    generators = []
    for row in raw_generators:
        try:
            generators.append(Permutation(row))
        except (ValueError, TypeError) as exc:
            raise GroupFileError(f"{path}: bad generator {row!r}: {exc}") from exc
        if generators[-1].degree != degree:
            raise GroupFileError(f"{path}: generator degree != {degree}")
    g = generate(degree, generators, cap=cap, group_id=group_id)
    metadata = payload.get("metadata") or {}
    expected = metadata.get("expected_order")
    if expected is not None and g.order != int(expected):
        raise GroupFileError(
            f"{path}: expected_order {expected} but enumeration found {g.order}"
        )
    return g


def load_corpus_dir(directory, cap: int | None = None) -> list[FiniteGroup]:
    """All .json group files under a directory, ordered by group_id."""
    paths = sorted(Path(directory).glob("*.json"))
    if not paths:
        raise GroupFileError(f"no .json group files found in {directory}")
    groups = [load_group(p, cap=cap) for p in paths]
    groups.sort(key=lambda g: g.group_id)
    return groups
