import json
import random

import pytest

from conftest import random_connected_graph, random_graph, spoked_pentagram
from toughgraph.errors import PreconditionError
from toughgraph.graph import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    star_graph,
)
from toughgraph.invariants import vertex_connectivity
from toughgraph.rational import ONE, Rational
from toughgraph.toughness import (
    ViolatorPool,
    _kernel_search,
    _stern_brocot_tau,
    all_tough_sets,
    compare_toughness,
    find_violating_cutset,
    is_t_tough,
    smallest_violating_cutset,
    toughness_clawfree,
    toughness_exact,
    toughness_naive,
    twin_partition,
)


def test_complete_graphs_infinite():
    for n in (1, 2, 6):
        cert = toughness_exact(complete_graph(n))
        assert cert.value.is_infinite
        assert cert.tough_sets == ()
        assert cert.tau_text() == "inf"


def test_c5_certificate():
    cert = toughness_exact(cycle_graph(5))
    assert cert.value == ONE
    # every minimizing cutset is a pair of non-adjacent vertices
    assert cert.tough_sets == ((0, 2), (0, 3), (1, 3), (1, 4), (2, 4))


def test_star_certificate():
    cert = toughness_exact(star_graph(3))
    assert cert.value == Rational(1, 3)
    assert cert.tough_sets == ((0,),)


def test_pentagram_fixture_tau_one():
    assert toughness_exact(spoked_pentagram()).value == ONE


def test_petersen_tau():
    assert toughness_exact(petersen_graph()).value == Rational(4, 3)


def test_disconnected():
    g = disjoint_union(complete_graph(3), complete_graph(2))
    cert = toughness_exact(g)
    assert cert.disconnected
    assert cert.value == Rational(0)
    assert cert.tau_text() == "0 (disconnected)"
    assert not is_t_tough(g, Rational(1, 10))


def test_is_t_tough_examples():
    assert is_t_tough(cycle_graph(4), ONE)
    assert not is_t_tough(cycle_graph(4), Rational(9, 8))
    assert is_t_tough(complete_graph(5), Rational(1000))


def test_is_t_tough_requires_positive_t():
    with pytest.raises(PreconditionError):
        is_t_tough(cycle_graph(4), Rational(0))


def test_certificate_sets_achieve_value():
    rng = random.Random(71)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(3, 9), 0.5)
        cert = toughness_exact(g)
        if cert.value.is_infinite:
            continue
        for s in cert.tough_sets:
            h, _ = g.delete_vertices(s)
            omega = len(h.components())
            assert omega >= 2
            assert len(s) * cert.value.den == omega * cert.value.num


def test_naive_equals_exact_small():
    rng = random.Random(97)
    for _ in range(250):
        g = random_graph(rng, rng.randint(1, 8), rng.choice([0.2, 0.4, 0.6, 0.9]))
        a = toughness_naive(g)
        b = toughness_exact(g)
        assert a.value == b.value
        assert a.disconnected == b.disconnected


def test_dominated_filter_keeps_all_tough_sets():
    # the production scan skips dominated cutsets; the naive oracle does not,
    # and the surviving minimizers must coincide
    rng = random.Random(101)
    for _ in range(150):
        g = random_connected_graph(rng, rng.randint(3, 8), 0.5)
        if g.is_complete():
            continue
        assert toughness_naive(g).tough_sets == toughness_exact(g).tough_sets


def test_kernel_path_matches_naive():
    # force the quotient branch-and-bound on graphs small enough to scan
    rng = random.Random(103)
    for _ in range(200):
        g = random_connected_graph(rng, rng.randint(4, 10), rng.choice([0.3, 0.5, 0.7]))
        if g.is_complete():
            continue
        value, tough_set = _stern_brocot_tau(g)
        cert = toughness_naive(g)
        assert value == cert.value
        assert tuple(tough_set) in cert.tough_sets


def test_twin_partition_classes():
    masks, indep = twin_partition(star_graph(3))
    # leaves form one false-twin class, the center is alone
    assert sorted(m.bit_count() for m in masks) == [1, 3]
    k4 = complete_graph(4)
    masks, indep = twin_partition(k4)
    assert masks == [15] and indep == [False]


def test_twin_partition_is_valid_partition():
    from toughgraph.graph import bits

    rng = random.Random(137)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 12), rng.choice([0.2, 0.5, 0.8]))
        masks, indep = twin_partition(g)
        assert sum(m.bit_count() for m in masks) == g.n
        union = 0
        for m, ind in zip(masks, indep):
            assert union & m == 0
            union |= m
            members = bits(m)
            for i, u in enumerate(members):
                for v in members[i + 1 :]:
                    if ind:
                        # false twins: nonadjacent, equal open neighborhoods
                        assert not g.has_edge(u, v)
                        assert g.rows[u] == g.rows[v]
                    else:
                        # true twins: adjacent, equal closed neighborhoods
                        assert g.has_edge(u, v)
                        assert g.rows[u] | (1 << u) == g.rows[v] | (1 << v)
            if ind:
                assert m.bit_count() >= 2
        assert union == g.vertex_mask()


def test_all_tough_sets_c4():
    assert all_tough_sets(cycle_graph(4)) == [(0, 2), (1, 3)]


def test_all_tough_sets_star():
    assert all_tough_sets(star_graph(3)) == [(0,)]


def test_all_tough_sets_path3():
    assert all_tough_sets(path_graph(3)) == [(1,)]


def test_all_tough_sets_quotient_route_matches_naive():
    # above the small-scan limit the enumeration runs over twin classes;
    # tough sets never split a twin class, so it stays complete
    rng = random.Random(31415)

    def blow(g, copies):
        rows = list(g.rows)
        for _ in range(copies):
            v = rng.randrange(len(rows))
            true_twin = rng.random() < 0.5
            nr = rows[v] | ((1 << v) if true_twin else 0)
            idx = len(rows)
            for u in range(len(rows)):
                if nr & (1 << u):
                    rows[u] |= 1 << idx
            rows.append(nr)
        from toughgraph.graph import Graph

        return Graph.from_rows(rows)

    checked = 0
    while checked < 12:
        base = random_graph(rng, rng.randint(5, 8), rng.choice([0.35, 0.5]))
        g = blow(base, rng.randint(4, 8))
        if not (12 <= g.n <= 15) or g.is_complete() or not g.is_connected():
            continue
        assert all_tough_sets(g) == list(toughness_naive(g, limit=16).tough_sets)
        checked += 1


def test_all_tough_sets_domain_errors():
    with pytest.raises(PreconditionError):
        all_tough_sets(complete_graph(4))
    with pytest.raises(PreconditionError):
        all_tough_sets(disjoint_union(complete_graph(2), complete_graph(2)))


def test_clawfree_shortcut():
    assert toughness_clawfree(cycle_graph(6)) == ONE
    assert toughness_clawfree(cycle_graph(5)) == ONE
    with pytest.raises(PreconditionError) as exc:
        toughness_clawfree(star_graph(3))
    assert exc.value.witness is not None
    with pytest.raises(PreconditionError):
        toughness_clawfree(complete_graph(4))


def test_clawfree_shortcut_agrees_with_exact():
    rng = random.Random(107)
    checked = 0
    while checked < 40:
        g = random_connected_graph(rng, rng.randint(4, 9), 0.6)
        from toughgraph.invariants import find_claw

        if g.is_complete() or find_claw(g) is not None:
            continue
        assert toughness_clawfree(g) == toughness_exact(g).value
        checked += 1


def test_kappa_at_least_2tau():
    rng = random.Random(109)
    for _ in range(80):
        g = random_connected_graph(rng, rng.randint(3, 9), 0.5)
        if g.is_complete():
            continue
        tau = toughness_exact(g).value
        assert vertex_connectivity(g) * tau.den >= 2 * tau.num


def test_hamiltonian_implies_1tough():
    from toughgraph.invariants import is_hamiltonian

    rng = random.Random(113)
    for _ in range(80):
        g = random_graph(rng, rng.randint(3, 9), 0.6)
        if g.is_connected() and is_hamiltonian(g)[0]:
            assert is_t_tough(g, ONE)


def test_find_violating_cutset():
    c4 = cycle_graph(4)
    assert find_violating_cutset(c4, ONE) is None
    w = find_violating_cutset(c4, Rational(9, 8))
    assert w is not None
    h, _ = c4.delete_vertices(w)
    omega = len(h.components())
    assert 9 * omega > 8 * len(w)


def test_smallest_violating_cutset_small():
    got = smallest_violating_cutset(star_graph(3), ONE)
    assert got == ((0,), True)
    assert smallest_violating_cutset(cycle_graph(5), ONE) is None


def test_smallest_violating_cutset_kernel_matches_scan():
    rng = random.Random(127)
    for _ in range(80):
        g = random_connected_graph(rng, rng.randint(4, 10), 0.4)
        if g.is_complete():
            continue
        cert = toughness_naive(g)
        t = Rational(cert.value.num * 2 + 1, cert.value.den * 2)
        small = smallest_violating_cutset(g, t)
        assert small is not None
        witness, exact = small
        a, b = t.num, t.den
        # verify minimality by brute force
        from itertools import combinations

        from toughgraph.graph import count_components, mask_of

        best = None
        full = g.vertex_mask()
        for size in range(1, g.n):
            for combo in combinations(range(g.n), size):
                omega = count_components(g.rows, full & ~mask_of(combo))
                if omega >= 2 and a * omega > b * size:
                    best = size
                    break
            if best is not None:
                break
        assert len(witness) == best
        # kernel route must agree
        bf, mask, size = _kernel_search(g, a, b, mode=2)
        assert size == best


def test_violator_pool_round_trip():
    pool = ViolatorPool(cap=4)
    g = cycle_graph(4)
    pool.add(0b0101)
    assert pool.find(g, 9, 8) == 0b0101  # {0,2} violates 9/8-toughness
    assert pool.find(g, 1, 1) is None  # but not 1-toughness


def test_compare_toughness_signs():
    g = petersen_graph()  # tau = 4/3
    sign, witness = compare_toughness(g, Rational(4, 3))
    assert sign == 0
    assert witness is not None and len(witness) * 3 % 4 == 0
    assert compare_toughness(g, Rational(3, 2))[0] == -1
    assert compare_toughness(g, ONE)[0] == 1
    assert compare_toughness(complete_graph(3), Rational(7))[0] == 1


def test_certificate_json_schema():
    doc = toughness_exact(star_graph(3)).to_json_dict()
    json.dumps(doc)
    assert doc == {"tau": "1/3", "tough_sets": [[0]]}
    doc = toughness_exact(complete_graph(4)).to_json_dict()
    assert doc == {"tau": "inf", "tough_sets": []}
