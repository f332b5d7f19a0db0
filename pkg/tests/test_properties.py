"""Randomized and corpus-wide properties cross-checking the engine against
the plain-tuple oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from starcomm.corpus import builtin_corpus
from starcomm.group import generate
from starcomm.perm import Permutation
from starcomm.star import star_set, star_subgroup
from starcomm.structure import (
    derived_series,
    gamma_infinity,
    lower_central_series,
    normal_subgroups,
)

gen_sets = st.lists(st.permutations(range(4)), min_size=0, max_size=2)


@pytest.fixture(scope="module")
def corpus():
    return builtin_corpus()


@given(gen_sets)
def test_generate_matches_oracle_closure(gens):
    g = generate(4, [Permutation(p) for p in gens])
    expected = oracle.closure(4, [tuple(p) for p in gens])
    assert {e.images for e in g.elements} == expected


@given(gen_sets)
@settings(max_examples=40, deadline=None)
def test_star_sets_match_oracle_on_random_groups(gens):
    g = generate(4, [Permutation(p) for p in gens])
    elems = [e.images for e in g.elements]
    for variant, k in (("gamma", 2), ("delta", 1), ("delta", 2)):
        got = {e.images for e in star_set(g, variant, k).elements()}
        assert got == oracle.star_set(elems, 4, variant, k)


@given(gen_sets)
@settings(max_examples=30, deadline=None)
def test_series_match_oracle_on_random_groups(gens):
    g = generate(4, [Permutation(p) for p in gens])
    elems = [e.images for e in g.elements]
    assert lower_central_series(g).orders() == [
        len(t) for t in oracle.lower_central_series(elems, 4)
    ]
    assert derived_series(g).orders() == [
        len(t) for t in oracle.derived_series(elems, 4)
    ]


def test_star_sets_are_normal_subsets_corpus_wide(corpus):
    for g in corpus:
        labels = g.class_labels()
        for variant, levels in (("gamma", (2, 3)), ("delta", (1, 2))):
            for k in levels:
                values = star_set(g, variant, k)
                mask = values.member_mask()
                assert mask[0], (g.group_id, variant, k)
                # a normal subset is a union of conjugacy classes
                reps = {int(labels[int(i)]) for i in values.commutator_indices}
                total = sum(
                    len(cls) for cls in g.class_arrays() if int(labels[int(cls[0])]) in reps
                )
                assert total == values.size, (g.group_id, variant, k)


def test_base_sets_monotone_corpus_wide(corpus):
    for g in corpus:
        for variant, k in (("gamma", 2), ("delta", 1)):
            s = star_set(g, variant, k)
            prev = set(int(i) for i in star_set(g, variant, k - 1).commutator_indices)
            base = set(int(i) for i in s.base_indices)
            assert prev <= base
            assert 0 in base


def test_delta_values_inside_derived_terms_corpus_wide(corpus):
    for g in corpus:
        terms = derived_series(g).terms
        for k in (1, 2):
            term = terms[min(k, len(terms) - 1)]
            values = star_set(g, "delta", k).member_mask()
            assert not (values & ~term.member_mask).any(), (g.group_id, k)


def test_gamma_infinity_projects_corpus_wide(corpus):
    for g in corpus:
        if g.order > 100:
            continue  # keep the quotient sweep quick
        residual = gamma_infinity(g)
        for n in normal_subgroups(g):
            q = g.quotient(n)
            downstairs = {int(i) for i in gamma_infinity(q.image).indices}
            projected = {int(i) for i in q.project_index_set(residual.indices)}
            assert projected == downstairs, (g.group_id, n.order)


def test_star_subgroup_contains_its_values(corpus):
    for g in corpus:
        for variant, k in (("gamma", 2), ("delta", 1)):
            values = star_set(g, variant, k)
            handle = star_subgroup(g, variant, k)
            member = set(int(i) for i in handle.indices)
            assert set(int(i) for i in values.commutator_indices) <= member


@given(st.permutations(range(5)), st.permutations(range(5)))
@settings(max_examples=25, deadline=None)
def test_level2_values_inside_nilpotent_residual(a_images, b_images):
    g = generate(5, [Permutation(a_images), Permutation(b_images)], cap=200)
    residual = set(int(i) for i in gamma_infinity(g).indices)
    values = set(int(i) for i in star_set(g, "gamma", 2).commutator_indices)
    assert values <= residual
