from __future__ import annotations

import pytest
from scripts.braids.presentations import artin_presentation, mu_assignment, mu_homomorphism, zariski_presentation
from scripts.braids.rewriting import (
    TransversalStrategy, expand_word, kernel_abelianization, regular_coset_table, rewrite_subgroup_presentation,
    schreier_transversal, simplify_presentation,
)
from scripts.groups.permutations import evaluate_perm
from scripts.groups.smith import AbelianInvariants, abelian_invariants
from scripts.groups.words import free_reduce


def _table(p, n):
    return regular_coset_table(p, mu_homomorphism(p, n))


def test_pure_braid_group_on_three_strands():
    p = artin_presentation(3)
    table = _table(p, 3)
    assert table.degree == 6
    subgroup = rewrite_subgroup_presentation(table)
    assert subgroup.presentation.rank == 6 * 2 - 5
    assert abelian_invariants(subgroup.presentation) == AbelianInvariants((), 3)


def test_pure_braid_group_on_four_strands():
    p = artin_presentation(4)
    assert kernel_abelianization(p, mu_homomorphism(p, 4)) == AbelianInvariants((), 6)


# right multiplication by (1 2) and (2 3) on one-line permutations: swap those values
RIGHT_S1 = {
    (1, 2, 3): (2, 1, 3), (2, 1, 3): (1, 2, 3), (1, 3, 2): (2, 3, 1),
    (2, 3, 1): (1, 3, 2), (3, 1, 2): (3, 2, 1), (3, 2, 1): (3, 1, 2),
}
RIGHT_S2 = {
    (1, 2, 3): (1, 3, 2), (2, 1, 3): (3, 1, 2), (1, 3, 2): (1, 2, 3),
    (2, 3, 1): (3, 2, 1), (3, 1, 2): (2, 1, 3), (3, 2, 1): (2, 3, 1),
}


@pytest.mark.parametrize("strategy", list(TransversalStrategy))
def test_three_strand_table_matches_right_multiplication_in_s3(strategy):
    p = zariski_presentation(3)
    table = _table(p, 3)
    steps = {p.index("s1"): RIGHT_S1, p.index("s2"): RIGHT_S2}
    labels = []
    for word in schreier_transversal(table, strategy):
        label = (1, 2, 3)
        for generator, _ in word:
            label = steps[generator][label]
        labels.append(label)
    assert sorted(labels) == sorted(RIGHT_S1)
    for coset, label in enumerate(labels):
        for generator in range(p.rank):
            expected = steps[generator][label] if generator in steps else label
            assert labels[table.act(coset, (generator, 1))] == expected
            assert labels[table.act(coset, (generator, -1))] == expected
    subgroup = rewrite_subgroup_presentation(table, strategy)
    assert subgroup.presentation.rank == 6 * (p.rank - 1) + 1
    assert (subgroup.base, subgroup.strategy) == (p, strategy)


def test_relators_close_at_every_coset():
    p = zariski_presentation(3)
    table = _table(p, 3)
    for coset in range(table.degree):
        for word in p.relators:
            assert table.trace(coset, word) == coset


@pytest.mark.parametrize("strategy", list(TransversalStrategy))
def test_transversal_is_a_schreier_transversal(strategy):
    p = zariski_presentation(3)
    table = _table(p, 3)
    representatives = schreier_transversal(table, strategy)
    assert representatives[0].is_identity()
    loops = {p.index("a1"), p.index("a2")}
    for coset, word in enumerate(representatives):
        assert table.trace(0, word) == coset
        assert not any(generator in loops for generator, _ in word)
        if len(word):
            prefix = free_reduce(word.letters[:-1])
            assert prefix in representatives
    if strategy == TransversalStrategy.BFS:
        assert max(len(word) for word in representatives) == 3


def test_rewritten_relators_expand_to_conjugates():
    p = zariski_presentation(3)
    table = _table(p, 3)
    homomorphism = mu_homomorphism(p, 3)
    subgroup = rewrite_subgroup_presentation(table)
    assert subgroup.presentation.rank == 19
    assert subgroup.rewritten_count == 6 * len(p.relators)
    assert subgroup.empty_count == 0
    for word in subgroup.schreier_words:
        assert evaluate_perm(homomorphism, word).is_Identity
    expected = [
        free_reduce(rep.letters + word.letters + rep.inverse().letters)
        for rep in subgroup.representatives
        for word in p.relators
    ]
    assert [expand_word(subgroup, word) for word in subgroup.presentation.relators] == expected


def test_strategies_agree_on_abelianization():
    p = zariski_presentation(3)
    homomorphism = mu_homomorphism(p, 3)
    bfs = kernel_abelianization(p, homomorphism, TransversalStrategy.BFS)
    dfs = kernel_abelianization(p, homomorphism, TransversalStrategy.DFS)
    assert bfs == dfs
    assert bfs.free_rank >= 2


def test_simplification_keeps_abelianization():
    p = zariski_presentation(3)
    subgroup = rewrite_subgroup_presentation(_table(p, 3))
    simplified = simplify_presentation(subgroup)
    assert (simplified.base, simplified.strategy) == (p, TransversalStrategy.BFS)
    assert all(len(word) != 1 for word in simplified.presentation.relators)
    assert len(simplified.schreier_words) == simplified.presentation.rank
    assert abelian_invariants(simplified.presentation) == abelian_invariants(subgroup.presentation)


def test_coset_table_preconditions():
    p = zariski_presentation(3)
    with pytest.raises(ValueError):
        regular_coset_table(p, mu_assignment(p, 3))
    with pytest.raises(ValueError):
        regular_coset_table(p, mu_homomorphism(p, 3), bound=5)


@pytest.mark.slow
def test_pure_torus_braid_group_on_five_strands():
    p = zariski_presentation(5)
    homomorphism = mu_homomorphism(p, 5)
    table = regular_coset_table(p, homomorphism)
    subgroup = rewrite_subgroup_presentation(table)
    assert table.degree == 120
    assert subgroup.presentation.rank == 120 * 6 - 119
    assert len(subgroup.presentation.relators) == 120 * 16
    bfs = abelian_invariants(subgroup.presentation)
    assert bfs.free_rank >= 2
    assert kernel_abelianization(p, homomorphism, TransversalStrategy.DFS) == bfs


@pytest.mark.slow
def test_pure_torus_braid_group_on_four_strands():
    p = zariski_presentation(4)
    homomorphism = mu_homomorphism(p, 4)
    table = regular_coset_table(p, homomorphism)
    assert table.degree == 24
    subgroup = rewrite_subgroup_presentation(table)
    assert subgroup.presentation.rank == 24 * (p.rank - 1) + 1
    bfs = abelian_invariants(subgroup.presentation)
    assert bfs.free_rank >= 2
    assert kernel_abelianization(p, homomorphism, TransversalStrategy.DFS) == bfs
