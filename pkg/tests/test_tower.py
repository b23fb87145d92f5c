import pytest

from polyvis import (
    Graph,
    NotTowerError,
    bordering_graph,
    canonicalize,
    check_strong_ordering,
    compute_leveling,
    enumerate_borderings,
    gen_tower,
    solve_tower,
    tower_hamiltonian,
    tower_top_candidates,
    visibility_graph,
    boundary_cycle,
)


def test_top_candidates_t5(t5_graph):
    assert tower_top_candidates(t5_graph) == frozenset({0})


def test_top_candidates_k3(k3):
    assert tower_top_candidates(k3) == frozenset({0, 1, 2})


def test_top_candidates_path_rejected():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(NotTowerError):
        tower_top_candidates(path)


def test_leveling_t5(t5_graph):
    lv = compute_leveling(t5_graph, 0)
    assert [set(l) for l in lv.levels] == [{0}, {1, 4}, {2, 3}]
    assert lv.level_of == {0: 1, 1: 2, 4: 2, 2: 3, 3: 3}


def test_leveling_k3(k3):
    lv = compute_leveling(k3, 0)
    assert [set(l) for l in lv.levels] == [{0}, {1, 2}]


def test_leveling_star_rejected():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(NotTowerError):
        compute_leveling(star, 0)


def test_leveling_clique_property(t5_graph):
    lv = compute_leveling(t5_graph, 0)
    for a, b in zip(lv.levels, lv.levels[1:]):
        merged = sorted(a | b)
        for i, u in enumerate(merged):
            for v in merged[i + 1 :]:
                assert t5_graph.has_edge(u, v)


def test_bordering_graph_t5(t5_graph):
    lv = compute_leveling(t5_graph, 0)
    bg = bordering_graph(t5_graph, lv)
    assert bg.constraint_edges == frozenset({(1, 4), (2, 3)})
    assert [set(c) for c in bg.components] == [{1, 4}, {2, 3}]


def test_bordering_graph_k3(k3):
    lv = compute_leveling(k3, 0)
    bg = bordering_graph(k3, lv)
    assert bg.constraint_edges == frozenset({(1, 2)})
    assert len(bg.components) == 1


def _odd_cycle_tower_like() -> Graph:
    # Valid leveling [{0},{1,2},{3,4},{5,6},{7,8},{9,10}], plus distant
    # constraint chords 2-5, 6-9, 1-9 closing an odd (5-)cycle with the level
    # pairing edges 1-2, 5-6, 9-10.
    edges = [(0, 1), (0, 2), (1, 2)]
    pairs = [(1, 2), (3, 4), (5, 6), (7, 8), (9, 10)]
    for (a, b), (c, d) in zip(pairs, pairs[1:]):
        edges += [(a, c), (a, d), (b, c), (b, d), (c, d)]
    edges += [(2, 5), (6, 9), (1, 9)]
    return Graph.from_edges(11, edges)


def test_bordering_graph_odd_cycle_rejected():
    g = _odd_cycle_tower_like()
    lv = compute_leveling(g, 0)  # the leveling itself is fine
    assert [set(l) for l in lv.levels][:3] == [{0}, {1, 2}, {3, 4}]
    with pytest.raises(NotTowerError):
        bordering_graph(g, lv)


def test_enumerate_borderings_counts(t5_graph):
    lv = compute_leveling(t5_graph, 0)
    bg = bordering_graph(t5_graph, lv)
    bs = enumerate_borderings(bg)
    assert len(bs) == 2 ** (len(bg.components) - 1) == 2
    assert (set(bs[0].left), set(bs[0].right)) == ({1, 2}, {3, 4})
    assert (set(bs[1].left), set(bs[1].right)) == ({1, 3}, {2, 4})


def test_enumerate_borderings_three_components():
    # Three independent level pairs below the top: 2^(3-1) = 4 borderings.
    edges = [(0, 1), (0, 2), (1, 2)]
    pairs = [(1, 2), (3, 4), (5, 6)]
    for (a, b), (c, d) in zip(pairs, pairs[1:]):
        edges += [(a, c), (a, d), (b, c), (b, d), (c, d)]
    g = Graph.from_edges(7, edges)
    lv = compute_leveling(g, 0)
    bg = bordering_graph(g, lv)
    assert len(bg.components) == 3
    assert len(enumerate_borderings(bg)) == 4


def test_enumerate_borderings_single_component(k3):
    lv = compute_leveling(k3, 0)
    bg = bordering_graph(k3, lv)
    assert len(enumerate_borderings(bg)) == 1


def test_tower_hamiltonian_t5(t5_graph):
    lv = compute_leveling(t5_graph, 0)
    bg = bordering_graph(t5_graph, lv)
    cycles = [tower_hamiltonian(t5_graph, lv, b) for b in enumerate_borderings(bg)]
    assert [c.order for c in cycles] == [(0, 1, 2, 3, 4), (0, 1, 3, 2, 4)]


def test_tower_hamiltonian_k3(k3):
    lv = compute_leveling(k3, 0)
    bg = bordering_graph(k3, lv)
    (b,) = enumerate_borderings(bg)
    assert tower_hamiltonian(k3, lv, b).order == (0, 1, 2)


def test_strong_ordering_t5(t5_graph):
    assert check_strong_ordering(t5_graph, canonicalize((0, 1, 2, 3, 4)))


def test_strong_ordering_k3(k3):
    assert check_strong_ordering(k3, canonicalize((0, 1, 2)))


def test_strong_ordering_crossing_counterexample():
    # Crossing pair 1-4 and 2-5 with 1-5 present but 2-4 missing.
    g = Graph.from_edges(
        6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4), (2, 5), (1, 5)]
    )
    assert not check_strong_ordering(g, canonicalize((0, 1, 2, 3, 4, 5)))


def test_strong_ordering_four_vertex_tower():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)])
    assert check_strong_ordering(g, canonicalize((0, 1, 2, 3)))


def test_solve_tower_t5(t5_graph):
    assert [c.order for c in solve_tower(t5_graph)] == [
        (0, 1, 2, 3, 4),
        (0, 1, 3, 2, 4),
    ]


def test_solve_tower_non_tower():
    g = Graph.from_edges(6, [(u, v + 3) for u in range(3) for v in range(3)])
    assert solve_tower(g) == []


@pytest.mark.parametrize("n", [4, 5, 7, 10, 16, 23, 30])
@pytest.mark.parametrize("seed", [0, 1])
def test_generated_tower_round_trip(n, seed):
    poly = gen_tower(n, seed)
    g = visibility_graph(poly)
    cycles = solve_tower(g)
    assert boundary_cycle(poly).order in [c.order for c in cycles]
    # every returned candidate satisfies the recognition criterion
    for c in cycles:
        assert check_strong_ordering(g, c)


@pytest.mark.parametrize("seed", range(6))
def test_generated_tower_bordering_count_law(seed):
    poly = gen_tower(12, seed)
    g = visibility_graph(poly)
    (top,) = [v for v in sorted(tower_top_candidates(g)) if g.degree(v) == 2][:1]
    lv = compute_leveling(g, top)
    bg = bordering_graph(g, lv)
    assert len(enumerate_borderings(bg)) == 2 ** (len(bg.components) - 1)
