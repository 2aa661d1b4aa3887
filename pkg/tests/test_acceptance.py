"""Acceptance suite: every desk-scale verification target, one test per
criterion, each printing a PASS line with the measured quantities.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import random
import time

import pytest

from covnum import (
    CoverInstance,
    SweepConfig,
    check_claim_rsame,
    check_claim_t1diff,
    cover_biclique_k3,
    cover_to_vertex_cover,
    cyclic_biclique,
    decompose,
    graph_components,
    graph_cover_instance,
    is_intersecting,
    is_vertex_cover,
    make_shape,
    max_matching,
    min_cover_exact,
    min_vertex_cover,
    random_spanning_coloring,
    sweep,
    to_colored_graph,
    to_partite_hypergraph,
    truncated_projective_plane,
    validate_cover,
)

from oracles import (
    brute_force_min_cover,
    brute_force_nu,
    brute_force_tau,
    flood_fill_components,
    random_coloring,
    random_colored_graph,
    random_intersecting_hypergraph,
    random_partitioned_hypergraph,
    random_small_shape,
)

SEED = 20260809


def exact_size(coloring, table=None):
    table = decompose(coloring) if table is None else table
    return min_cover_exact(CoverInstance.from_component_table(table)).size


@pytest.fixture(scope="session")
def sweep_r3_k4():
    return sweep(
        SweepConfig(
            shape=make_shape(3, 4, [2, 2, 2]),
            mode="exhaustive",
            symmetry="color-canonical",
        )
    )


@pytest.fixture(scope="session")
def sweep_r3_k6_random():
    config = SweepConfig(
        shape=make_shape(3, 6, [3, 3, 3]),
        mode="random",
        samples=10_000,
        seed=SEED,
        budget=4,
    )
    start = time.perf_counter()
    result = sweep(config)
    return result, time.perf_counter() - start


@pytest.fixture(scope="session")
def sweeps_bicliques_k2():
    results = {}
    for a in range(1, 5):
        for b in range(a, 5):
            shape = make_shape(2, 2, [a, b])
            results[(a, b)] = sweep(
                SweepConfig(shape=shape, symmetry="color-canonical", budget=2)
            )
    return results


@pytest.fixture(scope="session")
def sweep_r3_k3():
    return sweep(
        SweepConfig(
            shape=make_shape(3, 3, [2, 2, 2]),
            mode="exhaustive",
            symmetry="color-canonical",
        )
    )


def test_a01_exhaustive_r3_k4_within_budget_2(sweep_r3_k4):
    res = sweep_r3_k4
    assert res.budget == 2
    assert res.spanning > 0
    assert len(res.violations) == 0
    assert res.max_min_cover <= 2
    print(
        f"\nPASS a01: exhaustive r=3 k=4 [2,2,2] ({res.enumerated} canonical, "
        f"{res.spanning} spanning): max min-cover {res.max_min_cover} <= 2, 0 violations"
    )


def test_a02_random_r3_k6_within_budget_4(sweep_r3_k6_random):
    res, elapsed = sweep_r3_k6_random
    assert res.spanning == 10_000
    assert len(res.violations) == 0
    assert res.max_min_cover <= 4
    assert elapsed < 300.0
    print(
        f"\nPASS a02: 10^4 random spanning 6-colorings of [3,3,3]: "
        f"max min-cover {res.max_min_cover} <= 4, 0 violations, {elapsed:.0f}s"
    )


def test_a03_exhaustive_bicliques_k2(sweeps_bicliques_k2):
    total_spanning = 0
    for (a, b), res in sweeps_bicliques_k2.items():
        assert len(res.violations) == 0, (a, b)
        if res.max_min_cover is not None:
            assert res.max_min_cover <= 2
        total_spanning += res.spanning
    assert total_spanning > 0
    assert exact_size(cyclic_biclique(2)) == 2
    print(
        f"\nPASS a03: exhaustive 2-colorings of bicliques up to 4+4 "
        f"({total_spanning} spanning): all covers <= 2; matching coloring needs exactly 2"
    )


def test_a04_random_bicliques_k3_with_constructive_cover():
    shapes = [make_shape(2, 3, [a, b]) for a in (3, 4, 5) for b in (3, 4, 5) if a <= b]
    worst = 0
    start = time.perf_counter()
    for i in range(10_000):
        shape = shapes[i % len(shapes)]
        coloring = random_spanning_coloring(shape, seed=SEED + i).coloring
        table = decompose(coloring)
        inst = CoverInstance.from_component_table(table)
        exact = min_cover_exact(inst).size
        assert exact <= 3
        members = cover_biclique_k3(coloring, table)
        ok, _ = validate_cover(inst, members)
        assert ok
        assert exact <= len(members) <= 3
        worst = max(worst, exact)
    assert exact_size(cyclic_biclique(3)) == 3
    elapsed = time.perf_counter() - start
    print(
        f"\nPASS a04: 10^4 random spanning 3-colorings of bicliques up to 5+5: "
        f"max min-cover {worst} <= 3, constructive covers all valid and <= 3 "
        f"({elapsed:.0f}s); matching coloring needs exactly 3"
    )


def test_a05_exhaustive_r3_k3_cover_is_1(sweep_r3_k3):
    res = sweep_r3_k3
    assert res.spanning > 0
    assert res.max_min_cover == 1
    assert len(res.violations) == 0
    print(
        f"\nPASS a05: exhaustive 3-colorings of [2,2,2] ({res.spanning} spanning): "
        f"min cover is always 1"
    )


def test_a06_oracle_equivalences():
    rng = random.Random(SEED)
    for _ in range(100):
        coloring = random_coloring(random_small_shape(rng, max_vertices=12), rng)
        table = decompose(coloring)
        rows, counts = flood_fill_components(coloring)
        assert tuple(counts) == table.counts
        assert [list(r) for r in table.rows] == rows

    cover_checked = 0
    while cover_checked < 60:
        coloring = random_coloring(random_small_shape(rng, max_vertices=9), rng)
        inst = CoverInstance.from_component_table(decompose(coloring))
        if len(inst.masks) > 12:
            continue
        cover_checked += 1
        oracle_size, _ = brute_force_min_cover(inst.labels, inst.masks, inst.num_vertices)
        assert min_cover_exact(inst).size == oracle_size

    for i in range(50):
        r = 2 + i % 2
        h = random_partitioned_hypergraph(rng, r, rng.randint(2, 3), rng.randint(0, 8))
        assert max_matching(h)[0] == brute_force_nu(h)[0]
        assert min_vertex_cover(h)[0] == brute_force_tau(h)[0]
    print(
        "\nPASS a06: decompose == flood fill (100), exact cover == subset oracle "
        f"({cover_checked}), tau/nu == subset oracles (50)"
    )


def test_a07_equivalence_constructions():
    rng = random.Random(SEED + 1)
    for i in range(50):
        r = 2 + i % 2
        size = rng.randint(2, 3)
        n_edges = rng.randint(1, size if r == 2 else min(9, size * size))
        h = random_intersecting_hypergraph(rng, r, size, n_edges)
        g = to_colored_graph(h)
        comps = graph_components(g)
        res = min_cover_exact(graph_cover_instance(comps))
        tau, _ = min_vertex_cover(h)
        assert tau <= res.size
        vertices = cover_to_vertex_cover(h, comps, res.members)
        assert is_vertex_cover(h, vertices)

    for _ in range(50):
        g = random_colored_graph(rng, rng.randint(2, 7), 3)
        hg = to_partite_hypergraph(g)
        assert is_intersecting(hg)[0]
        cover_size = min_cover_exact(graph_cover_instance(graph_components(g))).size
        tau, _ = min_vertex_cover(hg, max_vertices=30)
        assert cover_size <= tau
    print(
        "\nPASS a07: tau(h) <= component cover of the edge graph (50); "
        "component cover of g <= tau of the component hypergraph (50); "
        "component hypergraphs always intersecting"
    )


def test_a08_truncated_planes_are_extremal():
    for q, r in ((2, 3), (3, 4)):
        h = truncated_projective_plane(q)
        assert h.r == r
        nu, _ = max_matching(h)
        tau, _ = min_vertex_cover(h)
        assert nu == 1
        assert tau == q == (r - 1) * nu
    print("\nPASS a08: truncated planes q=2,3: nu=1 and tau=q=(r-1)*nu")


def test_a09_claim_suite(sweep_r3_k4, sweep_r3_k6_random, sweeps_bicliques_k2, sweep_r3_k3):
    rng = random.Random(SEED + 2)
    for _ in range(1000):
        coloring = random_coloring(random_small_shape(rng, max_vertices=10), rng)
        assert check_claim_rsame(coloring).holds

    for _ in range(40):
        coloring = random_coloring(random_small_shape(rng, max_vertices=9), rng)
        size = exact_size(coloring)
        for budget in range(1, 5):
            assert check_claim_t1diff(coloring, budget).holds == (size > budget)

    all_sweeps = [sweep_r3_k4, sweep_r3_k6_random[0], sweep_r3_k3]
    all_sweeps += list(sweeps_bicliques_k2.values())
    for res in all_sweeps:
        assert res.forensic_alerts == 0
    print(
        "\nPASS a09: unconditional claim holds on 10^3 random colorings; "
        "cover-equivalence claim matches the exact solver; no forensic alerts "
        f"across {len(all_sweeps)} sweeps"
    )


def test_a10_partite_cover_bounds():
    rng = random.Random(SEED + 3)
    for r, factor in ((2, 1), (3, 2)):
        for _ in range(100):
            h = random_partitioned_hypergraph(rng, r, rng.randint(2, 3), rng.randint(1, 10))
            tau, _ = min_vertex_cover(h)
            nu, _ = max_matching(h)
            assert tau <= factor * nu
    print("\nPASS a10: tau <= 1*nu on 100 bipartite and tau <= 2*nu on 100 3-partite instances")
