"""Acceptance suite: one test per criterion, each printing a pass line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; every expected value here was frozen from the independent
brute-force oracles in tests/oracle.py.
"""

import math
import time

import pytest

import oracle
from starcomm.checks import (
    FAIL,
    SuiteConfig,
    check_abelian_bound,
    check_delta_recursion,
    check_theorem_criteria,
    run_suite,
    summarize,
)
from starcomm.cli import run_cli
from starcomm.corpus import builtin_corpus, load_group, save_group
from starcomm.group import generate
from starcomm.perm import Permutation
from starcomm.star import gamma_star_set, star_subgroup
from starcomm.structure import fitting_height
from starcomm.sylow import sylow_subgroup


def cyc(degree, *cycle_lists):
    return Permutation.from_cycles(degree, cycle_lists)


@pytest.fixture(scope="module")
def corpus():
    return builtin_corpus()


LEMMA_CHECKS = (
    "check_coprime_action",
    "check_normal_subset_generation",
    "check_metanilpotent_PH",
    "check_focal_delta",
    "check_focal_patch",
    "check_delta_chain_commutator",
    "check_quotient_lifting",
)


def test_criterion_1_structural_tower(sym4, sym3):
    started = time.monotonic()
    delta_orders = [star_subgroup(sym4, "delta", k).order for k in range(5)]
    assert delta_orders == [24, 12, 4, 1, 1]
    assert fitting_height(sym4) == 3
    gamma_orders = [star_subgroup(sym3, "gamma", k).order for k in range(2, 6)]
    assert gamma_orders == [3, 3, 3, 3]
    elapsed = time.monotonic() - started
    assert elapsed < 5.0
    print(f"\nACCEPTANCE 1 structural tower: PASS ({elapsed:.2f}s)")


def test_criterion_2_criteria_iff_suite(corpus):
    started = time.monotonic()
    assert len(corpus) >= 20
    assert all(g.order <= 200 for g in corpus)
    failures = []
    for g in corpus:
        report = check_theorem_criteria(g, 5)
        if report.status == FAIL:
            failures.append((g.group_id, report.witness))
    assert failures == []
    elapsed = time.monotonic() - started
    assert elapsed < 300.0
    print(f"ACCEPTANCE 2 criteria iff-suite ({len(corpus)} groups, k<=5): PASS ({elapsed:.2f}s)")


def test_criterion_3_identity_suite(corpus):
    failures = []
    for g in corpus:
        # gamma/delta residual identities are part of the criteria check
        report = check_theorem_criteria(g, 5)
        if report.status == FAIL:
            failures.append((g.group_id, report.witness))
        for k in range(0, 4):
            report = check_delta_recursion(g, k)
            if report.status == FAIL:
                failures.append((g.group_id, k, report.witness))
    assert failures == []
    print("ACCEPTANCE 3 identity suite (k<=3 recursion, corpus-wide): PASS")


def test_criterion_4_lemma_suite(corpus):
    started = time.monotonic()
    reports = run_suite(corpus, LEMMA_CHECKS, SuiteConfig(seed=0, k_max=2))
    failures = [r for r in reports if r.status == FAIL]
    assert failures == [], [
        (r.group_id, r.check_id, r.params, r.witness) for r in failures[:5]
    ]
    tally = summarize(reports)
    for check_id in LEMMA_CHECKS:
        non_skipped = tally[check_id]["pass"] + tally[check_id]["fail"]
        assert non_skipped > 0, f"{check_id} never ran a non-skipped instance"
    elapsed = time.monotonic() - started
    assert elapsed < 600.0
    print(
        f"ACCEPTANCE 4 lemma suite ({len(reports)} instances, all hit): PASS ({elapsed:.2f}s)"
    )


def test_criterion_5_bound_property(sym3, alt4):
    frobenius20 = generate(
        5, [cyc(5, [0, 1, 2, 3, 4]), Permutation([0, 2, 4, 1, 3])], group_id="f20"
    )
    assert frobenius20.order == 20
    frobenius21 = generate(
        7, [cyc(7, [0, 1, 2, 3, 4, 5, 6]), Permutation([0, 2, 4, 6, 1, 3, 5])],
        group_id="f21",
    )
    instances = [
        ("V4:C3", alt4, alt4.normal_closure([cyc(4, [0, 1], [2, 3])]),
         sylow_subgroup(alt4, 3)),
        ("C3:C2", sym3, sym3.subgroup_generated([cyc(3, [0, 1, 2])]),
         sylow_subgroup(sym3, 2)),
        ("C5:C4", frobenius20, frobenius20.subgroup_generated([cyc(5, [0, 1, 2, 3, 4])]),
         sylow_subgroup(frobenius20, 2)),
        ("C7:C3", frobenius21, frobenius21.subgroup_generated([cyc(7, [0, 1, 2, 3, 4, 5, 6])]),
         sylow_subgroup(frobenius21, 3)),
    ]
    for name, g, p_handle, a_handle in instances:
        for i in (1, 2):
            report = check_abelian_bound(g, p_handle, a_handle, i)
            assert report.status == "pass", (name, i, report.witness)
            assert report.metrics["subgroup_order"] <= report.metrics["bound"]
    v4_report = check_abelian_bound(
        alt4, alt4.normal_closure([cyc(4, [0, 1], [2, 3])]), sylow_subgroup(alt4, 3), 1
    )
    assert v4_report.metrics["m"] == 4
    assert v4_report.metrics["subgroup_order"] == 4
    assert v4_report.metrics["bound"] == 16
    assert v4_report.metrics["subgroup_order"] < v4_report.metrics["bound"]
    print("ACCEPTANCE 5 abelian bound (4 semidirect interiors, i<=2): PASS")


def test_criterion_6_coprime_ore_alt5(alt5):
    started = time.monotonic()
    covered = gamma_star_set(alt5, 2)
    assert covered.size == 60
    # independent oracle: exhaustive coprime pair sweep on plain tuples
    tuples = [p.images for p in alt5.elements]
    expected = {
        oracle.comm(a, b)
        for a in tuples
        for b in tuples
        if math.gcd(oracle.order(a), oracle.order(b)) == 1
    }
    assert len(expected) == 60
    assert {p.images for p in covered.elements()} == expected
    elapsed = time.monotonic() - started
    assert elapsed < 10.0
    print(f"ACCEPTANCE 6 coprime-Ore cover of Alt(5): PASS ({elapsed:.2f}s)")


def test_criterion_7_conciseness_table(tmp_path):
    for variant in ("gamma", "delta"):
        args = [
            "table",
            "--variant",
            variant,
            "--k-max",
            "4",
            "--builtin-corpus",
        ]
        one = tmp_path / f"{variant}1.csv"
        two = tmp_path / f"{variant}2.csv"
        assert run_cli(args + ["--out", str(one)]) == 0
        assert run_cli(args + ["--out", str(two)]) == 0
        assert one.read_bytes() == two.read_bytes()
        rows = one.read_text().splitlines()[1:]
        per_group: dict[str, list[tuple[int, int, int]]] = {}
        for line in rows:
            group_id, order, var, k, m, sub = line.split(",")
            assert (m == "1") == (sub == "1")
            per_group.setdefault(group_id, []).append((int(k), int(m), int(sub)))
        if variant == "gamma":
            for group_id, entries in per_group.items():
                tail = [sub for k, m, sub in entries if k >= 2]
                assert len(set(tail)) == 1, f"{group_id} gamma orders vary: {tail}"
    print("ACCEPTANCE 7 conciseness table (m=1 iff order 1; gamma constant): PASS")


def test_criterion_8_determinism_round_trip(tmp_path, corpus):
    for g in corpus:
        path = tmp_path / f"{g.group_id.replace('*', 'x').replace(':', '_')}.json"
        save_group(g, path)
        loaded = load_group(path)
        assert loaded.elements == g.elements, g.group_id
    args = [
        "verify",
        "--suite",
        "all",
        "--builtin-corpus",
        "--seed",
        "0",
        "--k-max",
        "3",
    ]
    first = tmp_path / "verify1.csv"
    second = tmp_path / "verify2.csv"
    assert run_cli(args + ["--out", str(first)]) == 0
    assert run_cli(args + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    print("ACCEPTANCE 8 determinism and round-trip: PASS")
