import pytest

from starcomm.checks import (
    PASS,
    SKIPPED,
    SuiteConfig,
    check_abelian_bound,
    check_coprime_action,
    check_coprime_ore,
    check_delta_chain_commutator,
    check_delta_recursion,
    check_focal_delta,
    check_focal_patch,
    check_metanilpotent_PH,
    check_normal_subset_generation,
    check_quotient_lifting,
    check_theorem_criteria,
    format_params,
    measure_conciseness,
    run_suite,
    summarize,
)
from starcomm.group import generate
from starcomm.perm import Permutation
from starcomm.star import delta_star_set
from starcomm.structure import normal_subgroups
from starcomm.sylow import sylow_subgroup


def cyc(degree, *cycle_lists):
    return Permutation.from_cycles(degree, cycle_lists)


@pytest.fixture(scope="module")
def c6():
    return generate(6, [cyc(6, [0, 1, 2, 3, 4, 5])], group_id="c6")


def v4_of(alt4):
    return alt4.normal_closure([cyc(4, [0, 1], [2, 3])])


def c3_of(alt4):
    return alt4.subgroup_generated([cyc(4, [0, 1, 2])])


def test_coprime_action_trivial_h(alt4):
    report = check_coprime_action(alt4, v4_of(alt4), alt4.trivial_subgroup())
    assert report.status == PASS
    assert report.metrics["subgroup_order"] == 1


def test_coprime_action_v4_c3(alt4):
    report = check_coprime_action(alt4, v4_of(alt4), c3_of(alt4))
    assert report.status == PASS
    assert report.metrics["subgroup_order"] == 4  # [V4, C3] = V4


def test_coprime_action_sym3(sym3):
    a3 = sym3.subgroup_generated([cyc(3, [0, 1, 2])])
    h = sym3.subgroup_generated([cyc(3, [0, 1])])
    report = check_coprime_action(sym3, a3, h)
    assert report.status == PASS


def test_coprime_action_skips_non_coprime(sym4):
    v4 = sym4.normal_closure([cyc(4, [0, 1], [2, 3])])
    p2 = sylow_subgroup(sym4, 2)
    report = check_coprime_action(sym4, v4, p2)
    assert report.status == SKIPPED
    assert "coprime" in report.witness


def test_normal_subset_generation_trivial(alt4):
    trivial = alt4.trivial_subgroup()
    report = check_normal_subset_generation(alt4, v4_of(alt4), trivial, [0], 1)
    assert report.status == PASS


def test_normal_subset_generation_v4_c3(alt4):
    a = c3_of(alt4)
    b = [int(i) for i in a.indices if int(i) != 0]
    assert len(b) == 2
    for k in (1, 2):
        report = check_normal_subset_generation(alt4, v4_of(alt4), a, b, k)
        assert report.status == PASS
        assert report.metrics["subgroup_order"] == 4


def test_normal_subset_generation_skips_non_generating(sym4):
    # B = a singleton inside the Sylow 2-subgroup does not generate it
    p2 = sylow_subgroup(sym4, 2)
    n = sym4.subgroup_generated([cyc(4, [0, 1, 2])])  # order 3, coprime
    b = [int(p2.indices[1])]
    report = check_normal_subset_generation(sym4, n, p2, b, 1)
    assert report.status == SKIPPED


def test_delta_recursion_examples(sym4, c6):
    assert check_delta_recursion(sym4, 0).status == PASS
    r = check_delta_recursion(sym4, 1)
    assert r.status == PASS
    assert r.metrics["subgroup_order"] == 4  # delta_2 of Sym(4) is V4
    for k in (0, 1, 2):
        assert check_delta_recursion(c6, k).status == PASS


def test_metanilpotent_ph_examples(sym3, sym4, alt4, c6):
    assert check_metanilpotent_PH(c6, 2).status == SKIPPED  # trivial residual
    r = check_metanilpotent_PH(alt4, 2)
    assert r.status == PASS
    assert r.metrics["subgroup_order"] == 4
    assert check_metanilpotent_PH(sym3, 3).status == PASS
    assert check_metanilpotent_PH(sym4, 2).status == SKIPPED  # not metanilpotent


def test_abelian_bound_trivial_action(alt4):
    report = check_abelian_bound(alt4, v4_of(alt4), alt4.trivial_subgroup(), 1)
    assert report.status == PASS
    assert report.metrics["m"] == 1
    assert report.metrics["subgroup_order"] == 1


def test_abelian_bound_v4_c3(alt4):
    report = check_abelian_bound(alt4, v4_of(alt4), c3_of(alt4), 1)
    assert report.status == PASS
    assert report.metrics["m"] == 4
    assert report.metrics["subgroup_order"] == 4
    assert report.metrics["bound"] == 16
    assert report.metrics["equality"] is False


def test_abelian_bound_c3_inverted(sym3):
    a3 = sym3.subgroup_generated([cyc(3, [0, 1, 2])])
    flip = sym3.subgroup_generated([cyc(3, [0, 1])])
    report = check_abelian_bound(sym3, a3, flip, 1)
    assert report.status == PASS
    assert report.metrics["m"] == 3
    assert report.metrics["subgroup_order"] == 3
    assert report.metrics["bound"] == 8


def test_abelian_bound_skips_nonabelian(sym4):
    p2 = sylow_subgroup(sym4, 2)  # dihedral, not abelian
    c3 = sym4.subgroup_generated([cyc(4, [0, 1, 2])])
    report = check_abelian_bound(sym4, p2, c3, 1)
    assert report.status == SKIPPED


def test_focal_delta_examples(sym4, c6):
    r = check_focal_delta(sym4, 2, 1)
    assert r.status == PASS
    assert r.metrics["subgroup_order"] == 4  # P meet Alt(4) = V4
    assert check_focal_delta(sym4, 3, 1).status == PASS
    d4 = generate(4, [cyc(4, [0, 1, 2, 3]), cyc(4, [1, 3])])
    assert check_focal_delta(d4, 2, 1).status == PASS  # p-group, n = 1
    assert check_focal_delta(c6, 2, 2).status == PASS  # trivial delta set


def test_focal_delta_skips_insoluble(alt5):
    assert check_focal_delta(alt5, 2, 1).status == SKIPPED


def test_focal_patch_examples(sym4):
    lattice = normal_subgroups(sym4)
    v4, a4 = lattice[1], lattice[2]
    orders = sym4.element_orders
    values = delta_star_set(sym4, 1)
    x = [
        int(i)
        for i in values.commutator_indices
        if int(orders[int(i)]) in (1, 2, 4)
    ]
    report = check_focal_patch(sym4, 2, v4, a4, x)
    assert report.status == PASS
    # N trivial: hypothesis and conclusion coincide
    report = check_focal_patch(sym4, 2, lattice[0], a4, x)
    assert report.status == PASS
    # N = L
    report = check_focal_patch(sym4, 2, v4, v4, x)
    assert report.status in (PASS, SKIPPED)


def test_focal_patch_skips_bad_x(sym4):
    lattice = normal_subgroups(sym4)
    odd = [sym4.index_of(cyc(4, [0, 1, 2]))]  # 3-element, not a 2-element
    report = check_focal_patch(sym4, 2, lattice[1], lattice[2], odd)
    assert report.status == SKIPPED


def test_delta_chain_examples(sym4, alt4):
    # in Sym(4) the level-1 delta set contains 3-cycles, which are coprime
    # to V4 and drive all chains into the level-2 set
    v4 = normal_subgroups(sym4)[1]
    values = delta_star_set(sym4, 1)
    orders = sym4.element_orders
    y = next(
        sym4.elements[int(i)]
        for i in values.commutator_indices
        if int(orders[int(i)]) == 3
    )
    report = check_delta_chain_commutator(sym4, v4, [y], 1)
    assert report.status == PASS
    # identity chain
    report = check_delta_chain_commutator(sym4, v4, [sym4.identity], 1)
    assert report.status == PASS
    # trivial N is vacuous
    report = check_delta_chain_commutator(sym4, sym4.trivial_subgroup(), [y], 1)
    assert report.status == PASS


def test_delta_chain_alt4_has_no_odd_values(alt4):
    # every level-1 delta commutator of Alt(4) lies in V4, so the identity is
    # the only chain element coprime to |V4|
    values = delta_star_set(alt4, 1)
    orders = alt4.element_orders
    assert {int(orders[int(i)]) for i in values.commutator_indices} == {1, 2}
    report = check_delta_chain_commutator(alt4, v4_of(alt4), [alt4.identity], 1)
    assert report.status == PASS


def test_delta_chain_skips_non_coprime(alt4):
    v4 = v4_of(alt4)
    involution = cyc(4, [0, 1], [2, 3])
    report = check_delta_chain_commutator(alt4, v4, [involution], 1)
    assert report.status == SKIPPED


def test_delta_chain_requires_k_elements(alt4):
    with pytest.raises(ValueError):
        check_delta_chain_commutator(alt4, v4_of(alt4), [alt4.identity], 2)


def test_theorem_criteria_examples(sym4, alt5, c6):
    assert check_theorem_criteria(c6, 4).status == PASS
    r = check_theorem_criteria(sym4, 4)
    assert r.status == PASS
    assert r.metrics["height"] == 3
    r = check_theorem_criteria(alt5, 3)
    assert r.status == PASS
    assert r.metrics["height"] == "undefined"


def test_quotient_lifting_examples(sym4, c6):
    assert check_quotient_lifting(sym4, 3).status == PASS
    assert check_quotient_lifting(c6, 3).status == PASS


def test_coprime_ore(alt5, sym4):
    r = check_coprime_ore(alt5)
    assert r.status == PASS
    assert r.metrics["m"] == 60
    assert check_coprime_ore(sym4).status == SKIPPED


def test_measure_conciseness_gamma(sym3, c6):
    rows = measure_conciseness(sym3, "gamma", 4)
    assert [(r.level, r.m, r.subgroup_order) for r in rows] == [
        (1, 6, 6),
        (2, 3, 3),
        (3, 3, 3),
        (4, 3, 3),
    ]
    rows = measure_conciseness(c6, "gamma", 3)
    assert [(r.m, r.subgroup_order) for r in rows[1:]] == [(1, 1), (1, 1)]


def test_measure_conciseness_delta(sym4):
    rows = measure_conciseness(sym4, "delta", 4)
    assert [r.subgroup_order for r in rows] == [24, 12, 4, 1, 1]
    for r in rows:
        assert (r.m == 1) == (r.subgroup_order == 1)


def test_format_params_sorted():
    assert format_params({"p": 2, "k": 1}) == "k=1;p=2"


def test_run_suite_rejects_unknown_check(sym3):
    with pytest.raises(ValueError):
        run_suite([sym3], ["check_nonexistent"])


def test_run_suite_reports_sorted(sym3, sym4):
    reports = run_suite([sym4, sym3], ["check_delta_recursion"], SuiteConfig())
    keys = [r.sort_key() for r in reports]
    assert keys == sorted(keys)


def test_summarize_counts(sym3):
    reports = run_suite([sym3], ["check_coprime_ore"])
    tally = summarize(reports)
    assert tally["check_coprime_ore"][SKIPPED] == 1
