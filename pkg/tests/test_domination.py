from __future__ import annotations

import random
from fractions import Fraction

import pytest

from pdom.domination import (
    SetFamily,
    SolveResult,
    all_minimum_sets,
    coverage_target,
    domination_number,
    influencing_intersection,
    influencing_set,
    is_p_dominating,
    partial_domination_number,
)
from pdom.graphs import (
    Graph,
    cartesian_product,
    complete,
    mask_of,
    members,
    path,
    pendant_wheel_graph,
    subdivided_star,
    twin_broom_tree,
    twin_hub_graph,
)

from brute import (
    brute_gamma,
    brute_influencing,
    brute_intersection,
    brute_minimum_sets,
    brute_target,
    random_graph,
)

HALF = Fraction(1, 2)


@pytest.mark.parametrize("n,p,expected", [
    (17, Fraction(1, 2), 9),
    (9, Fraction(8, 9), 8),
    (10, Fraction(0), 0),
    (6, Fraction(1), 6),
    (0, Fraction(1, 2), 0),
    (9, Fraction(7, 9), 7),
])
def test_coverage_target(n, p, expected):
    assert coverage_target(n, p) == expected


def test_coverage_target_matches_brute():
    for n in range(0, 12):
        for den in range(1, 12):
            for num in range(0, den + 1):
                p = Fraction(num, den)
                assert coverage_target(n, p) == brute_target(n, p)


def test_coverage_target_rejects_bad_input():
    with pytest.raises(ValueError):
        coverage_target(5, Fraction(3, 2))
    with pytest.raises(ValueError):
        coverage_target(5, Fraction(-1, 2))
    with pytest.raises(ValueError):
        coverage_target(-1, HALF)


def test_is_p_dominating():
    g = subdivided_star(8)
    center = mask_of([0])
    assert is_p_dominating(g, center, HALF)
    assert not is_p_dominating(g, center, Fraction(1))
    assert not is_p_dominating(path(4), 0, Fraction(1, 4))
    assert is_p_dominating(path(4), 0, 0)
    with pytest.raises(ValueError):
        is_p_dominating(path(2), mask_of([5]), HALF)


def test_solver_on_paths():
    assert partial_domination_number(path(6), HALF) == SolveResult(1, mask_of([1]))
    assert partial_domination_number(path(6), Fraction(1)) == SolveResult(2, mask_of([1, 4]))
    assert domination_number(path(6)).size == 2


def test_solver_trivial_boundaries():
    assert partial_domination_number(Graph(()), Fraction(1)) == SolveResult(0, 0)
    assert partial_domination_number(path(3), 0) == SolveResult(0, 0)
    assert partial_domination_number(path(1), 0) == SolveResult(0, 0)
    assert domination_number(complete(7)).size == 1


def test_solver_on_subdivided_star():
    g = subdivided_star(8)
    assert partial_domination_number(g, HALF) == SolveResult(1, mask_of([0]))
    result = domination_number(g)
    assert result.size == 8
    assert result.witness == mask_of(range(1, 9))  # the inner ring


def test_gamma_set_can_avoid_half_witnesses():
    g = subdivided_star(8)
    half_sets = all_minimum_sets(g, HALF).sets
    full_sets = all_minimum_sets(g, Fraction(1)).sets
    assert any(h & f == 0 for h in half_sets for f in full_sets)


def test_solver_on_products():
    assert partial_domination_number(cartesian_product(complete(3), complete(3)), HALF).size == 1


def test_witness_is_lexicographically_least():
    rng = random.Random(23)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 7))
        n = g.order
        for k in range(1, n + 1):
            p = Fraction(k, n)
            result = partial_domination_number(g, p)
            expected = min(brute_minimum_sets(g, p))
            assert members(result.witness) == expected
            assert is_p_dominating(g, result.witness, p)


def test_family_on_twin_hub_fixture():
    family = all_minimum_sets(twin_hub_graph(), Fraction(8, 9))
    assert family.size == 2
    assert family.sets == (mask_of([5, 6]),)


PENDANT_WHEEL_PAIRS = [
    (1, 2), (1, 3), (1, 4), (1, 7), (2, 3),
    (2, 4), (2, 8), (3, 4), (3, 5), (4, 6),
]


def test_family_on_pendant_wheel_fixture():
    g = pendant_wheel_graph()
    p = Fraction(7, 9)
    family = all_minimum_sets(g, p)
    assert family.size == 2
    assert [members(s) for s in family.sets] == PENDANT_WHEEL_PAIRS
    assert [tuple(s) for s in brute_minimum_sets(g, p)] == PENDANT_WHEEL_PAIRS
    # every pair of hub neighbors qualifies, and the hub itself never appears
    ring = [1, 2, 3, 4]
    for i, u in enumerate(ring):
        for v in ring[i + 1:]:
            assert mask_of([u, v]) in family.sets
    assert influencing_set(g, p) & 1 == 0


def test_family_on_twin_broom_fixture():
    family = all_minimum_sets(twin_broom_tree(), Fraction(9, 11))
    assert family.sets == (mask_of([2, 3]),)
    assert influencing_set(twin_broom_tree(), Fraction(9, 11)) == mask_of([2, 3])


def test_family_is_sorted_and_duplicate_free():
    rng = random.Random(31)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 7))
        n = g.order
        for k in range(0, n + 1):
            family = all_minimum_sets(g, Fraction(k, max(n, 1)))
            keys = [members(s) for s in family.sets]
            assert keys == sorted(keys)
            assert len(set(keys)) == len(keys)
            assert all(s.bit_count() == family.size for s in family.sets)


def test_family_for_target_zero_is_empty_set_only():
    assert all_minimum_sets(path(4), 0) == SetFamily(0, (0,))
    assert influencing_set(path(4), 0) == 0


def test_two_vertex_path_has_two_singletons():
    family = all_minimum_sets(path(2), Fraction(1))
    assert family.sets == (mask_of([0]), mask_of([1]))


def test_solver_matches_brute_exhaustively_to_order_5(connected_upto_5):
    for g in connected_upto_5:
        n = g.order
        for k in range(1, n + 1):
            p = Fraction(k, n)
            assert partial_domination_number(g, p).size == brute_gamma(g, p)
            got = [members(s) for s in all_minimum_sets(g, p).sets]
            assert got == brute_minimum_sets(g, p)


def test_solver_matches_brute_on_random_graphs():
    rng = random.Random(47)
    proportions = [Fraction(1, 5), Fraction(1, 3), HALF, Fraction(4, 5), Fraction(1)]
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8), rng.choice([0.2, 0.5, 0.8]))
        for p in proportions:
            assert partial_domination_number(g, p).size == brute_gamma(g, p)


def test_monotone_in_p():
    rng = random.Random(53)
    graphs = [random_graph(rng, rng.randint(2, 8)) for _ in range(20)]
    for g in graphs:
        n = g.order
        sizes = [partial_domination_number(g, Fraction(k, n)).size for k in range(0, n + 1)]
        assert sizes == sorted(sizes)


def test_influencing_set_matches_brute():
    rng = random.Random(61)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 7))
        n = g.order
        for k in range(1, n + 1):
            p = Fraction(k, n)
            assert set(members(influencing_set(g, p))) == brute_influencing(g, p)


def test_influencing_sweep_dips_to_one_vertex_on_twin_hub():
    g = twin_hub_graph()
    sizes = [influencing_set(g, Fraction(k, 9)).bit_count() for k in range(1, 10)]
    assert sizes[0] == 9  # every vertex starts out influential
    assert min(sizes) == 1  # at p = 5/9 only the apex covers enough
    assert influencing_set(g, Fraction(5, 9)) == mask_of([0])
    assert sizes[-1] == 9  # at p = 1 everything returns


def test_influencing_intersection():
    assert influencing_intersection(twin_hub_graph()) == 0
    assert influencing_intersection(path(6)) == mask_of([1, 4])
    rng = random.Random(67)
    for _ in range(10):
        g = random_graph(rng, rng.randint(1, 6))
        assert set(members(influencing_intersection(g))) == brute_intersection(g)
    with pytest.raises(ValueError):
        influencing_intersection(Graph(()))
