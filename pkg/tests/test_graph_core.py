import random
from itertools import combinations

import pytest

from conftest import random_connected_graph, random_graph
from toughgraph.errors import PreconditionError
from toughgraph.graph import (
    Graph,
    complete_graph,
    count_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    mask_of,
    path_graph,
    petersen_graph,
    star_graph,
)
from toughgraph.invariants import (
    find_claw,
    independence_number,
    is_alpha_critical,
    is_claw_free,
    is_hamiltonian,
    vertex_connectivity,
)


# -- brute-force oracles -----------------------------------------------------


def brute_alpha(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        for combo in combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in combinations(combo, 2)):
                return size
    return best


def brute_kappa(g: Graph) -> int:
    if g.is_complete():
        return g.n - 1
    if not g.is_connected():
        return 0
    full = g.vertex_mask()
    for size in range(1, g.n - 1):
        for combo in combinations(range(g.n), size):
            if count_components(g.rows, full & ~mask_of(combo)) > 1:
                return size
    return g.n - 1


def brute_claw_free(g: Graph) -> bool:
    for c in range(g.n):
        for trio in combinations(range(g.n), 3):
            if c in trio:
                continue
            if all(g.has_edge(c, x) for x in trio) and all(
                not g.has_edge(u, v) for u, v in combinations(trio, 2)
            ):
                return False
    return True


# -- structure -----------------------------------------------------------------


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 5)])
    with pytest.raises(Exception):
        Graph(65)


def test_components_cycle():
    assert cycle_graph(5).components() == [(0, 1, 2, 3, 4)]


def test_components_empty_graph():
    assert empty_graph(3).components() == [(0,), (1,), (2,)]


def test_components_disjoint_union():
    g = disjoint_union(complete_graph(3), complete_graph(2))
    assert g.components() == [(0, 1, 2), (3, 4)]


def test_component_sizes_partition():
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(rng, rng.randint(0, 12), 0.3)
        comps = g.components()
        assert sum(len(c) for c in comps) == g.n
        seen = set()
        for c in comps:
            assert not seen & set(c)
            seen |= set(c)


def test_delete_vertex_c4_gives_p3():
    c4 = cycle_graph(4)
    h, mapping = c4.delete_vertices([2])
    assert h.n == 3 and h.edge_count == 2
    assert sorted(h.degree(v) for v in range(3)) == [1, 1, 2]
    assert mapping == {0: 0, 1: 1, 3: 2}


def test_delete_vertex_k4_gives_k3():
    h, _ = complete_graph(4).delete_vertices([0])
    assert h == complete_graph(3)


def test_delete_edge_c4_gives_p4():
    h = cycle_graph(4).delete_edge(0, 1)
    assert sorted(h.degree(v) for v in range(4)) == [1, 1, 2, 2]
    assert h.is_connected()


def test_delete_edge_requires_edge():
    with pytest.raises(PreconditionError):
        cycle_graph(4).delete_edge(0, 2)


def test_delete_vertices_map_preserves_adjacency():
    rng = random.Random(61)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 10), 0.5)
        drop = [v for v in range(g.n) if rng.random() < 0.3]
        h, old_to_new = g.delete_vertices(drop)
        assert h.n == g.n - len(drop)
        assert sorted(old_to_new.values()) == list(range(h.n))
        for u in old_to_new:
            for v in old_to_new:
                if u < v:
                    assert g.has_edge(u, v) == h.has_edge(
                        old_to_new[u], old_to_new[v]
                    )


def test_edges_lexicographic():
    g = Graph(4, [(2, 3), (0, 3), (0, 1)])
    assert g.edges() == [(0, 1), (0, 3), (2, 3)]


# -- claws ----------------------------------------------------------------------


def test_claw_of_star():
    assert find_claw(star_graph(3)) == (0, (1, 2, 3))


def test_c6_claw_free():
    assert find_claw(cycle_graph(6)) is None
    assert is_claw_free(cycle_graph(6))


def test_petersen_has_claw():
    claw = find_claw(petersen_graph())
    assert claw is not None
    c, leaves = claw
    g = petersen_graph()
    assert all(g.has_edge(c, x) for x in leaves)
    assert all(not g.has_edge(u, v) for u, v in combinations(leaves, 2))


def test_claw_matches_bruteforce():
    rng = random.Random(11)
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 9), rng.choice([0.2, 0.4, 0.6]))
        assert (find_claw(g) is None) == brute_claw_free(g)


# -- independence ------------------------------------------------------------------


def test_alpha_complete():
    for n in (1, 2, 5, 9):
        alpha, witness = independence_number(complete_graph(n))
        assert alpha == 1 and len(witness) == 1


def test_alpha_c5():
    alpha, witness = independence_number(cycle_graph(5))
    assert alpha == 2
    u, v = witness
    assert not cycle_graph(5).has_edge(u, v)


def test_alpha_petersen():
    assert independence_number(petersen_graph())[0] == 4


def test_alpha_matches_bruteforce():
    rng = random.Random(23)
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 11), rng.choice([0.2, 0.5, 0.8]))
        alpha, witness = independence_number(g)
        assert alpha == brute_alpha(g)
        assert len(witness) == alpha
        assert all(not g.has_edge(u, v) for u, v in combinations(witness, 2))


# -- alpha-criticality ----------------------------------------------------------------


def test_c5_alpha_critical():
    ok, failing = is_alpha_critical(cycle_graph(5))
    assert ok and failing == []


def test_c4_not_alpha_critical_every_edge():
    ok, failing = is_alpha_critical(cycle_graph(4))
    assert not ok
    assert failing == cycle_graph(4).edges()


def test_edgeless_vacuously_critical():
    ok, failing = is_alpha_critical(empty_graph(3))
    assert ok and failing == []


# -- connectivity ---------------------------------------------------------------------


def test_kappa_cycles():
    for n in range(3, 9):
        assert vertex_connectivity(cycle_graph(n)) == 2


def test_kappa_complete():
    assert vertex_connectivity(complete_graph(5)) == 4
    assert vertex_connectivity(complete_graph(2)) == 1


def test_kappa_petersen():
    assert vertex_connectivity(petersen_graph()) == 3


def test_kappa_disconnected_and_tiny():
    assert vertex_connectivity(disjoint_union(complete_graph(2), complete_graph(1))) == 0
    assert vertex_connectivity(empty_graph(1)) == 0


def test_kappa_matches_bruteforce():
    rng = random.Random(37)
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 9), rng.choice([0.3, 0.5, 0.8]))
        assert vertex_connectivity(g) == brute_kappa(g)


def test_kappa_at_most_min_degree():
    rng = random.Random(41)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(2, 10), 0.5)
        if not g.is_complete():
            assert vertex_connectivity(g) <= g.min_degree()


# -- Hamiltonicity ------------------------------------------------------------------------


def test_ham_cycles_and_k4():
    for n in (3, 5, 8):
        ok, cycle = is_hamiltonian(cycle_graph(n))
        assert ok and len(cycle) == n
    assert is_hamiltonian(complete_graph(4))[0]


def test_petersen_not_hamiltonian():
    ok, cycle = is_hamiltonian(petersen_graph())
    assert not ok and cycle is None


def test_ham_domain_error():
    with pytest.raises(PreconditionError):
        is_hamiltonian(complete_graph(2))


def test_ham_witness_is_valid_cycle():
    rng = random.Random(53)
    for _ in range(80):
        g = random_graph(rng, rng.randint(3, 9), rng.choice([0.4, 0.6, 0.9]))
        ok, cycle = is_hamiltonian(g)
        if ok:
            assert sorted(cycle) == list(range(g.n))
            for i in range(g.n):
                assert g.has_edge(cycle[i], cycle[(i + 1) % g.n])


def test_ham_path_graph_false():
    assert not is_hamiltonian(path_graph(5))[0]
