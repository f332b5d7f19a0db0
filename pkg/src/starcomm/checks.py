"""Verification operations over group instances.

Each check validates one verified structural statement on one concrete
instance and returns a CheckReport. Hypothesis violations yield status
``skipped`` with a reason, never a silent pass; failures carry a concrete
witness. The suite runner generates instances deterministically from the
normal-subgroup lattice, conjugacy classes, and computed star sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .errors import GroupError
from .group import FiniteGroup, SubgroupHandle
from .perm import Permutation
from .star import DELTA, GAMMA, lift_commutator_from_quotient, star_set, star_subgroup
from .structure import (
    fitting_height,
    gamma_infinity,
    is_abelian,
    is_metanilpotent,
    is_nilpotent,
    is_soluble,
    normal_subgroups,
    p_part,
    prime_divisors,
)
from .sylow import (
    commutator_subgroup,
    commutator_with_elements,
    hall_prime_complement,
    iterated_commutator_subgroup,
    sylow_subgroup,
)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class CheckReport:
    """Outcome of one check on one instance."""

    check_id: str
    group_id: str
    group_order: int
    params: dict
    status: str
    witness: str = ""
    metrics: dict = field(default_factory=dict)

    def params_string(self) -> str:
        return format_params(self.params)

    def sort_key(self) -> tuple:
        return (self.group_id, self.check_id, self.params_string())


def format_params(params: dict) -> str:
    return ";".join(f"{k}={params[k]}" for k in sorted(params))


def _report(check_id, g, params, status, witness="", metrics=None) -> CheckReport:
    return CheckReport(
        check_id=check_id,
        group_id=g.group_id or f"order{g.order}deg{g.degree}",
        group_order=g.order,
        params=dict(params),
        status=status,
        witness=witness,
        metrics=dict(metrics or {}),
    )


def _same_members(a: SubgroupHandle, b: SubgroupHandle) -> bool:
    return a.order == b.order and bool(np.array_equal(a.indices, b.indices))


def _index_commutator(g: FiniteGroup, x: int, y: int) -> int:
    table, inv = g.table, g.inverse_indices
    return int(table[int(table[int(table[inv[x], inv[y]]), x]), y])


def _index_chain(g: FiniteGroup, x: int, ys: Sequence[int]) -> int:
    for y in ys:
        x = _index_commutator(g, x, y)
    return x


# -- individual checks ----------------------------------------------------


def check_coprime_action(
    g: FiniteGroup, n: SubgroupHandle, h: SubgroupHandle
) -> CheckReport:
    """Coprime action stabilizes after one step: [N, H, H] = [N, H]."""
    params = {"n_order": n.order, "h_order": h.order}
    if not n.is_normal():
        return _report("check_coprime_action", g, params, SKIPPED, "N not normal")
    import math

    if math.gcd(n.order, h.order) != 1:
        return _report(
            "check_coprime_action", g, params, SKIPPED, "orders not coprime"
        )
    once = commutator_subgroup(g, n, h)
    twice = commutator_subgroup(g, once, h)
    if _same_members(once, twice):
        return _report(
            "check_coprime_action",
            g,
            params,
            PASS,
            metrics={"subgroup_order": once.order},
        )
    return _report(
        "check_coprime_action",
        g,
        params,
        FAIL,
        witness=f"|[N,H]|={once.order} |[N,H,H]|={twice.order}",
    )


def check_normal_subset_generation(
    g: FiniteGroup,
    n: SubgroupHandle,
    a: SubgroupHandle,
    b_indices: Sequence[int],
    k: int,
) -> CheckReport:
    """[N, A] is generated by the subgroups [N, b1, ..., bk] over tuples in B.

    B must be a conjugation-closed generating subset of A.
    """
    import math

    check_id = "check_normal_subset_generation"
    params = {"n_order": n.order, "a_order": a.order, "b_size": len(b_indices), "k": k}
    if math.gcd(a.order, n.order) != 1:
        return _report(check_id, g, params, SKIPPED, "orders not coprime")
    b_set = {int(i) for i in b_indices}
    if not b_set <= {int(i) for i in a.indices}:
        return _report(check_id, g, params, SKIPPED, "B not inside A")
    # B must be a union of conjugacy classes of A and generate A
    a_member = a.member_mask
    for x in b_set:
        conj = g.table[g.table[g.inverse_indices[a.indices], x], a.indices]
        if not all(int(c) in b_set for c in conj):
            return _report(check_id, g, params, SKIPPED, "B not a normal subset of A")
    if len(g.index_closure(b_set)) != a.order:
        return _report(check_id, g, params, SKIPPED, "B does not generate A")
    norm_mask = n.member_mask
    for y in a.indices:
        y = int(y)
        conj = g.table[g.table[g.inverse_indices[y], n.indices], y]
        if not norm_mask[conj].all():
            return _report(check_id, g, params, SKIPPED, "A does not normalize N")
    lhs = commutator_subgroup(g, n, a)
    rhs_seed: set[int] = set()
    for combo in itertools.product(sorted(b_set), repeat=k):
        term = commutator_with_elements(g, n, combo)
        rhs_seed.update(int(i) for i in term.indices)
    rhs = g.subgroup_from_indices(rhs_seed)
    if _same_members(lhs, rhs):
        return _report(check_id, g, params, PASS, metrics={"subgroup_order": lhs.order})
    return _report(
        check_id,
        g,
        params,
        FAIL,
        witness=f"|[N,A]|={lhs.order} |<[N,b..]>|={rhs.order}",
    )


def check_delta_recursion(g: FiniteGroup, k: int) -> CheckReport:
    """delta-star level shifting through the level-1 subgroup."""
    params = {"k": k}
    inner = star_subgroup(g, DELTA, 1).as_group()
    lhs = star_subgroup(inner, DELTA, k)
    rhs = star_subgroup(g, DELTA, k + 1)
    lhs_members = {p.images for p in lhs.members}
    rhs_members = {p.images for p in rhs.members}
    if lhs_members == rhs_members:
        return _report(
            "check_delta_recursion",
            g,
            params,
            PASS,
            metrics={"subgroup_order": rhs.order},
        )
    return _report(
        "check_delta_recursion",
        g,
        params,
        FAIL,
        witness=f"inner order {lhs.order} vs outer order {rhs.order}",
    )


def check_metanilpotent_PH(g: FiniteGroup, p: int, seed: int = 0) -> CheckReport:
    """In a soluble metanilpotent group, each Sylow subgroup P of the
    nilpotent residual satisfies P = [P, H] for a Hall p'-subgroup H."""
    check_id = "check_metanilpotent_PH"
    params = {"p": p, "seed": seed}
    if not is_soluble(g):
        return _report(check_id, g, params, SKIPPED, "group not soluble")
    if not is_metanilpotent(g):
        return _report(check_id, g, params, SKIPPED, "group not metanilpotent")
    residual = gamma_infinity(g)
    if residual.order % p != 0:
        return _report(
            check_id, g, params, SKIPPED, "p does not divide the nilpotent residual"
        )
    residual_group = residual.as_group()
    p_sub = sylow_subgroup(residual_group, p)
    p_handle = SubgroupHandle(g, residual.indices[p_sub.indices])
    try:
        h = hall_prime_complement(g, p, seed)
    except GroupError as exc:
        return _report(check_id, g, params, FAIL, witness=f"error: {exc}")
    bracket = commutator_subgroup(g, p_handle, h)
    if _same_members(p_handle, bracket):
        return _report(
            check_id, g, params, PASS, metrics={"subgroup_order": p_handle.order}
        )
    return _report(
        check_id,
        g,
        params,
        FAIL,
        witness=f"|P|={p_handle.order} |[P,H]|={bracket.order}",
    )


def check_abelian_bound(
    g: FiniteGroup, p_handle: SubgroupHandle, a_handle: SubgroupHandle, i: int
) -> CheckReport:
    """For an abelian p-group P under a p'-group A, |[P, _i A]| <= 2^m where
    m counts the distinct iterated commutator values. Equality is recorded,
    never asserted."""
    import math

    check_id = "check_abelian_bound"
    params = {"p_order": p_handle.order, "a_order": a_handle.order, "i": i}
    primes = prime_divisors(p_handle.order)
    if len(primes) != 1:
        return _report(check_id, g, params, SKIPPED, "P is not a p-group")
    p = primes[0]
    if not is_abelian(p_handle.as_group()):
        return _report(check_id, g, params, SKIPPED, "P is not abelian")
    if a_handle.order % p == 0:
        return _report(check_id, g, params, SKIPPED, "A is not a p'-group")
    p_mask = p_handle.member_mask
    for y in a_handle.indices:
        conj = g.table[g.table[g.inverse_indices[int(y)], p_handle.indices], int(y)]
        if not p_mask[conj].all():
            return _report(check_id, g, params, SKIPPED, "A does not normalize P")
    values: set[int] = set()
    tuples = itertools.product([int(y) for y in a_handle.indices], repeat=i)
    for combo in tuples:
        for x in p_handle.indices:
            values.add(_index_chain(g, int(x), combo))
    m = len(values)
    subgroup = iterated_commutator_subgroup(g, p_handle, a_handle, i)
    bound = 2**m
    metrics = {
        "m": m,
        "subgroup_order": subgroup.order,
        "bound": bound,
        "equality": subgroup.order == bound,
    }
    if subgroup.order <= bound:
        return _report(check_id, g, params, PASS, metrics=metrics)
    witness = f"|[P,_iA]|={subgroup.order} exceeds 2^{m}"
    return _report(check_id, g, params, FAIL, witness=witness, metrics=metrics)


def check_focal_delta(g: FiniteGroup, p: int, k: int) -> CheckReport:
    """Focal-style generation: with |G| = p^a * n (p coprime to n) and P a
    Sylow p-subgroup, P meet the level-k delta subgroup is generated by the
    n-th powers of level-k delta commutators lying in P."""
    check_id = "check_focal_delta"
    params = {"p": p, "k": k}
    if not is_soluble(g):
        return _report(check_id, g, params, SKIPPED, "group not soluble")
    n_part = g.order // p_part(g.order, p)
    p_sub = sylow_subgroup(g, p)
    commutators = star_set(g, DELTA, k)
    subgroup = star_subgroup(g, DELTA, k)
    lhs = p_sub.intersection(subgroup)
    p_mask = p_sub.member_mask
    powered = {
        powered_idx
        for c in commutators.commutator_indices
        if p_mask[(powered_idx := g.idx_pow(int(c), n_part))]
    }
    rhs = g.subgroup_from_indices(powered)
    metrics = {"m": commutators.size, "subgroup_order": lhs.order}
    if _same_members(lhs, rhs):
        return _report(check_id, g, params, PASS, metrics=metrics)
    return _report(
        check_id,
        g,
        params,
        FAIL,
        witness=f"|P∩V|={lhs.order} |<powers>|={rhs.order}",
        metrics=metrics,
    )


def check_focal_patch(
    g: FiniteGroup,
    p: int,
    n: SubgroupHandle,
    l: SubgroupHandle,
    x_indices: Sequence[int],
) -> CheckReport:
    """Patching generation through a quotient: if Pbar meet Lbar is generated
    by Pbar meet Xbar in G/N, then P meet L = <P meet X, P meet N>."""
    check_id = "check_focal_patch"
    params = {"p": p, "n_order": n.order, "l_order": l.order, "x_size": len(x_indices)}
    if not (n.is_normal() and l.is_normal()):
        return _report(check_id, g, params, SKIPPED, "N or L not normal")
    if not set(int(i) for i in n.indices) <= set(int(i) for i in l.indices):
        return _report(check_id, g, params, SKIPPED, "N not contained in L")
    x_arr = np.array(sorted(int(i) for i in x_indices), dtype=np.int64)
    orders = g.element_orders
    for i in x_arr:
        o = int(orders[i])
        if o != p_part(o, p):
            return _report(check_id, g, params, SKIPPED, "X contains a non-p-element")
    labels = g.class_labels()
    if len(x_arr) and not set(np.unique(labels[x_arr])) <= {
        int(labels[i]) for i in x_arr
    }:
        return _report(check_id, g, params, SKIPPED, "X not conjugation closed")
    p_sub = sylow_subgroup(g, p)
    quotient = g.quotient(n)
    p_bar = quotient.project_subgroup(p_sub)
    l_bar = quotient.project_subgroup(l)
    x_bar = quotient.project_index_set(x_arr)
    hyp_lhs = p_bar.intersection(l_bar)
    hyp_rhs = quotient.image.subgroup_from_indices(
        np.intersect1d(p_bar.indices, x_bar)
    )
    if not _same_members(hyp_lhs, hyp_rhs):
        return _report(
            check_id, g, params, SKIPPED, "quotient generation hypothesis not satisfied"
        )
    lhs = p_sub.intersection(l)
    seed = np.union1d(
        np.intersect1d(p_sub.indices, x_arr), np.intersect1d(p_sub.indices, n.indices)
    )
    rhs = g.subgroup_from_indices(seed)
    metrics = {"subgroup_order": lhs.order}
    if _same_members(lhs, rhs):
        return _report(check_id, g, params, PASS, metrics=metrics)
    return _report(
        check_id,
        g,
        params,
        FAIL,
        witness=f"|P∩L|={lhs.order} |<P∩X,P∩N>|={rhs.order}",
        metrics=metrics,
    )


def check_delta_chain_commutator(
    g: FiniteGroup,
    n: SubgroupHandle,
    ys: Sequence[Permutation],
    k: int,
) -> CheckReport:
    """Chains [x, y1, ..., yk] with level-k delta commutators yi of coprime
    order normalizing N land in the level-(k+1) delta set, for every x in N."""
    import math

    check_id = "check_delta_chain_commutator"
    params = {"k": k, "n_order": n.order, "ys": " ".join(y.cycle_string() for y in ys)}
    if len(ys) != k:
        raise ValueError(f"expected {k} chain elements, got {len(ys)}")
    level_set = star_set(g, DELTA, k)
    y_idx = [g.index_of(y) for y in ys]
    orders = g.element_orders
    n_mask = n.member_mask
    for y, i in zip(ys, y_idx):
        if not level_set.contains_index(i):
            return _report(
                check_id, g, params, SKIPPED, "y is not a delta commutator at level k"
            )
        if math.gcd(int(orders[i]), n.order) != 1:
            return _report(check_id, g, params, SKIPPED, "y order not coprime to N")
        conj = g.table[g.table[g.inverse_indices[i], n.indices], i]
        if not n_mask[conj].all():
            return _report(check_id, g, params, SKIPPED, "y does not normalize N")
    target = star_set(g, DELTA, k + 1)
    for x in n.indices:
        value = _index_chain(g, int(x), y_idx)
        if not target.contains_index(value):
            witness = (
                f"[{g.elements[int(x)].cycle_string()},...] = "
                f"{g.elements[value].cycle_string()} not a level-{k + 1} value"
            )
            return _report(check_id, g, params, FAIL, witness=witness)
    return _report(check_id, g, params, PASS, metrics={"m": target.size})


def check_theorem_criteria(g: FiniteGroup, k_max: int) -> CheckReport:
    """Structural identities and triviality criteria across levels:
    gamma levels >= 2 equal the nilpotent residual and vanish exactly for
    nilpotent groups; delta level k equals the residual of level k-1 and,
    for soluble groups, vanishes exactly when the Fitting height is <= k."""
    check_id = "check_theorem_criteria"
    params = {"k_max": k_max}
    height = fitting_height(g)
    soluble = is_soluble(g)
    nilpotent = is_nilpotent(g)
    residual = gamma_infinity(g)
    metrics = {"height": height if height is not None else "undefined"}
    for k in range(1, k_max + 1):
        gamma_k = star_subgroup(g, GAMMA, k)
        if k >= 2:
            if not _same_members(gamma_k, residual):
                return _report(
                    check_id, g, params, FAIL, witness=f"gamma level {k} != residual"
                )
            if (gamma_k.order == 1) != nilpotent:
                return _report(
                    check_id, g, params, FAIL, witness=f"gamma criterion at k={k}"
                )
        delta_k = star_subgroup(g, DELTA, k)
        inner = star_subgroup(g, DELTA, k - 1).as_group()
        expected = {p.images for p in gamma_infinity(inner).members}
        if {p.images for p in delta_k.members} != expected:
            return _report(
                check_id, g, params, FAIL, witness=f"delta level {k} != residual shift"
            )
        if soluble:
            if (delta_k.order == 1) != (height <= k):
                return _report(
                    check_id, g, params, FAIL, witness=f"delta criterion at k={k}"
                )
        elif delta_k.order == 1:
            return _report(
                check_id,
                g,
                params,
                FAIL,
                witness=f"delta level {k} vanished on an insoluble group",
            )
    return _report(check_id, g, params, PASS, metrics=metrics)


def check_quotient_lifting(g: FiniteGroup, k_max: int) -> CheckReport:
    """Every star commutator of a quotient lifts to one of the source group
    in the same coset, for every normal subgroup, variant, and level."""
    check_id = "check_quotient_lifting"
    params = {"k_max": k_max}
    lifted = 0
    for n in normal_subgroups(g):
        quotient = g.quotient(n)
        for variant, start in ((GAMMA, 1), (DELTA, 0)):
            for k in range(start, k_max + 1):
                downstairs = star_set(quotient.image, variant, k)
                for idx in downstairs.commutator_indices:
                    value = quotient.image.elements[int(idx)]
                    try:
                        y = lift_commutator_from_quotient(g, n, value, variant, k)
                    except GroupError as exc:
                        witness = (
                            f"no lift over N of order {n.order}, {variant} k={k}: {exc}"
                        )
                        return _report(check_id, g, params, FAIL, witness=witness)
                    if quotient.project(y) != value:
                        return _report(
                            check_id, g, params, FAIL, witness="lift left its coset"
                        )
                    lifted += 1
    return _report(check_id, g, params, PASS, metrics={"lifts": lifted})


def check_coprime_ore(g: FiniteGroup) -> CheckReport:
    """On a nonabelian simple group, every element is a commutator of
    coprime-order elements (gamma level 2 covers the whole group)."""
    check_id = "check_coprime_ore"
    params = {}
    if g.order == 1 or is_abelian(g) or len(normal_subgroups(g)) != 2:
        return _report(check_id, g, params, SKIPPED, "group not nonabelian simple")
    covered = star_set(g, GAMMA, 2)
    metrics = {"m": covered.size}
    if covered.size == g.order:
        return _report(check_id, g, params, PASS, metrics=metrics)
    return _report(
        check_id,
        g,
        params,
        FAIL,
        witness=f"only {covered.size} of {g.order} elements covered",
        metrics=metrics,
    )


@dataclass
class ConcisenessRow:
    variant: str
    level: int
    m: int
    subgroup_order: int


def measure_conciseness(g: FiniteGroup, variant: str, k_max: int) -> list[ConcisenessRow]:
    """Per level: the number of star commutators and the order of the
    subgroup they generate. Only the trivial m = 1 case is asserted."""
    start = 1 if variant == GAMMA else 0
    rows = []
    for k in range(start, k_max + 1):
        values = star_set(g, variant, k)
        subgroup = star_subgroup(g, variant, k)
        if (values.size == 1) != (subgroup.order == 1):
            raise RuntimeError(
                f"conciseness sanity violated on {g.describe()} {variant} k={k}"
            )
        rows.append(ConcisenessRow(variant, k, values.size, subgroup.order))
    return rows


# -- suite instance generation --------------------------------------------


def _candidate_action_subgroups(g: FiniteGroup) -> list[tuple[str, SubgroupHandle]]:
    """Deterministic labelled pool of small acting subgroups: cyclic
    subgroups from class representatives plus the Sylow subgroups."""
    out: list[tuple[str, SubgroupHandle]] = []
    seen: set[bytes] = set()
    for cls in g.class_arrays():
        rep = int(cls[0])
        if rep == 0:
            continue
        handle = g.subgroup_from_indices([rep])
        key = handle.indices.tobytes()
        if key not in seen:
            seen.add(key)
            out.append((f"cyc{g.elements[rep].cycle_string()}", handle))
    for p in prime_divisors(g.order):
        handle = sylow_subgroup(g, p)
        key = handle.indices.tobytes()
        if key not in seen:
            seen.add(key)
            out.append((f"syl{p}", handle))
    return out


def _suite_coprime_action(g: FiniteGroup, cfg: "SuiteConfig") -> Iterator[CheckReport]:
    import math

    for ni, n in enumerate(normal_subgroups(g)):
        if n.is_trivial():
            continue
        for label, h in _candidate_action_subgroups(g):
            if math.gcd(n.order, h.order) != 1:
                continue
            report = check_coprime_action(g, n, h)
            report.params = {"n": ni, "h": label}
            yield report


def _suite_normal_subset(g: FiniteGroup, cfg: "SuiteConfig") -> Iterator[CheckReport]:
    import math

    for ni, n in enumerate(normal_subgroups(g)):
        if n.is_trivial():
            continue
        for label, a in _candidate_action_subgroups(g):
            if a.order == 1 or math.gcd(a.order, n.order) != 1:
                continue
            b_variants: list[tuple[str, list[int]]] = [
                ("all", [int(i) for i in a.indices if int(i) != 0])
            ]
            a_group = a.as_group()
            for cls in a_group.class_arrays():
                members = [int(a.indices[int(i)]) for i in cls]
                if members == [0]:
                    continue
                if len(g.index_closure(members)) == a.order:
                    b_variants.append(("cls", members))
                    break
            for b_label, b in b_variants:
                for k in range(1, min(cfg.k_max, 2) + 1):
                    report = check_normal_subset_generation(g, n, a, b, k)
                    report.params = {"n": ni, "a": label, "b": b_label, "k": k}
                    yield report


def _suite_delta_recursion(g: FiniteGroup, cfg: "SuiteConfig") -> Iterator[CheckReport]:
    for k in range(0, min(cfg.k_max, 3) + 1):
        yield check_delta_recursion(g, k)


def _suite_metanilpotent(g: FiniteGroup, cfg: "SuiteConfig") -> Iterator[CheckReport]:
    if not (is_soluble(g) and is_metanilpotent(g)):
        yield check_metanilpotent_PH(g, 2, cfg.seed)
        return
    residual = gamma_infinity(g)
    primes = prime_divisors(residual.order)
    if not primes:
        yield check_metanilpotent_PH(g, 2, cfg.seed)
        return
    for p in primes:
        yield check_metanilpotent_PH(g, p, cfg.seed)


def _suite_abelian_bound(g: FiniteGroup, cfg: "SuiteConfig") -> Iterator[CheckReport]:
    for ni, n in enumerate(normal_subgroups(g)):
        if n.is_trivial() or n.is_full():
            continue
        primes = prime_divisors(n.order)
        if len(primes) != 1 or not is_abelian(n.as_group()):
            continue
        p = primes[0]
        for label, a in _candidate_action_subgroups(g):
            if a.order == 1 or a.order % p == 0:
                continue
            for i in (1, 2):
                report = check_abelian_bound(g, n, a, i)
                report.params = {"n": ni, "a": label, "i": i}
                yield report


def _suite_focal_delta(g: FiniteGroup, cfg: "SuiteConfig") -> Iterator[CheckReport]:
    for p in prime_divisors(g.order):
        for k in range(1, min(cfg.k_max, 2) + 1):
            yield check_focal_delta(g, p, k)


def _suite_focal_patch(g: FiniteGroup, cfg: "SuiteConfig") -> Iterator[CheckReport]:
    lattice = normal_subgroups(g)
    orders = g.element_orders
    for p in prime_divisors(g.order):
        for k in range(1, min(cfg.k_max, 2) + 1):
            values = star_set(g, DELTA, k)
            x = [
                int(i)
                for i in values.commutator_indices
                if int(orders[int(i)]) == p_part(int(orders[int(i)]), p)
            ]
            for ni, n in enumerate(lattice):
                n_members = set(int(i) for i in n.indices)
                for li, l in enumerate(lattice):
                    if not n_members <= set(int(i) for i in l.indices):
                        continue
                    report = check_focal_patch(g, p, n, l, x)
                    report.params = {"p": p, "k": k, "n": ni, "l": li}
                    yield report


def _suite_delta_chain(g: FiniteGroup, cfg: "SuiteConfig") -> Iterator[CheckReport]:
    import math

    orders = g.element_orders
    for k in range(1, min(cfg.k_max, 2) + 1):
        values = star_set(g, DELTA, k)
        for ni, n in enumerate(normal_subgroups(g)):
            n_mask = n.member_mask
            eligible = []
            for i in values.commutator_indices:
                i = int(i)
                if math.gcd(int(orders[i]), n.order) != 1:
                    continue
                conj = g.table[g.table[g.inverse_indices[i], n.indices], i]
                if n_mask[conj].all():
                    eligible.append(i)
            if not eligible:
                report = _report(
                    "check_delta_chain_commutator",
                    g,
                    {},
                    SKIPPED,
                    "no eligible chain elements",
                )
            else:
                report = _aggregate_delta_chain(g, n, eligible, k)
            report.params = {"k": k, "n": ni}
            yield report


def _aggregate_delta_chain(
    g: FiniteGroup, n: SubgroupHandle, eligible: list[int], k: int
) -> CheckReport:
    """One aggregated report over all k-tuples of eligible chain elements."""
    target = star_set(g, DELTA, k + 1)
    checked = 0
    for combo in itertools.product(eligible, repeat=k):
        for x in n.indices:
            value = _index_chain(g, int(x), combo)
            if not target.contains_index(value):
                witness = (
                    f"x={g.elements[int(x)].cycle_string()} ys="
                    + " ".join(g.elements[y].cycle_string() for y in combo)
                )
                return _report(
                    "check_delta_chain_commutator", g, {}, FAIL, witness=witness
                )
            checked += 1
    return _report(
        "check_delta_chain_commutator",
        g,
        {},
        PASS,
        metrics={"chains": checked, "m": target.size},
    )


def _suite_theorem_criteria(g: FiniteGroup, cfg: "SuiteConfig") -> Iterator[CheckReport]:
    yield check_theorem_criteria(g, cfg.k_max)


def _suite_quotient_lifting(g: FiniteGroup, cfg: "SuiteConfig") -> Iterator[CheckReport]:
    yield check_quotient_lifting(g, min(cfg.k_max, 3))


def _suite_coprime_ore(g: FiniteGroup, cfg: "SuiteConfig") -> Iterator[CheckReport]:
    yield check_coprime_ore(g)


SUITE_GENERATORS: dict[str, Callable] = {
    "check_coprime_action": _suite_coprime_action,
    "check_normal_subset_generation": _suite_normal_subset,
    "check_delta_recursion": _suite_delta_recursion,
    "check_metanilpotent_PH": _suite_metanilpotent,
    "check_abelian_bound": _suite_abelian_bound,
    "check_focal_delta": _suite_focal_delta,
    "check_focal_patch": _suite_focal_patch,
    "check_delta_chain_commutator": _suite_delta_chain,
    "check_theorem_criteria": _suite_theorem_criteria,
    "check_quotient_lifting": _suite_quotient_lifting,
    "check_coprime_ore": _suite_coprime_ore,
}

ALL_CHECKS = tuple(SUITE_GENERATORS)


@dataclass
class SuiteConfig:
    seed: int = 0
    k_max: int = 3


def run_suite(
    groups: Iterable[FiniteGroup],
    check_ids: Sequence[str] | None = None,
    config: SuiteConfig | None = None,
) -> list[CheckReport]:
    """Run the named checks over every group; reports sorted canonically."""
    config = config or SuiteConfig()
    check_ids = list(check_ids) if check_ids else list(ALL_CHECKS)
    unknown = [c for c in check_ids if c not in SUITE_GENERATORS]
    if unknown:
        raise ValueError(f"unknown check ids: {', '.join(unknown)}")
    reports: list[CheckReport] = []
    for g in groups:
        for check_id in check_ids:
            reports.extend(SUITE_GENERATORS[check_id](g, config))
    reports.sort(key=lambda r: r.sort_key())
    return reports


def summarize(reports: Iterable[CheckReport]) -> dict[str, dict[str, int]]:
    """Per-check tallies, making hypothesis hit-rates visible."""
    out: dict[str, dict[str, int]] = {}
    for r in reports:
        bucket = out.setdefault(r.check_id, {PASS: 0, FAIL: 0, SKIPPED: 0})
        bucket[r.status] += 1
    return out
