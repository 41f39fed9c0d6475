import pytest

from toughgraph.embedding import (
    alpha_criticalize,
    blow_up,
    construct_host_ge1,
    construct_host_lt1,
    embed_minimally_t_tough,
    prune_to_minimal,
)
from toughgraph.errors import PreconditionError, ResourceBudgetError
from toughgraph.graph import complete_graph, cycle_graph, empty_graph
from toughgraph.invariants import is_alpha_critical
from toughgraph.minimality import is_minimally_t_tough
from toughgraph.rational import ONE, Rational
from toughgraph.toughness import toughness_naive


def test_alpha_criticalize_fixed_points():
    for g in [cycle_graph(5), complete_graph(2), complete_graph(1), empty_graph(3)]:
        h, mapping = alpha_criticalize(g)
        assert h == g
        assert mapping == tuple(range(g.n))


def test_alpha_criticalize_c4():
    c4 = cycle_graph(4)
    h, mapping = alpha_criticalize(c4)
    assert h.n > 4
    assert is_alpha_critical(h)[0]
    # induced on the original indices
    for u in range(4):
        for v in range(u + 1, 4):
            assert h.has_edge(u, v) == c4.has_edge(u, v)


def test_alpha_criticalize_budget():
    with pytest.raises(ResourceBudgetError):
        alpha_criticalize(cycle_graph(4), max_added=1)


def test_blow_up_k2_gives_k3():
    assert blow_up(complete_graph(2), 0, 2) == complete_graph(3)


def test_blow_up_identity():
    assert blow_up(cycle_graph(5), 2, 1) == cycle_graph(5)


def test_blow_up_c5_keeps_alpha_critical():
    h = blow_up(cycle_graph(5), 0, 2)
    assert h.n == 6
    assert is_alpha_critical(h)[0]
    # copy is fully joined to the original neighborhood and to vertex 0
    assert h.has_edge(0, 5)
    assert set(h.neighbors(5)) - {0} == set(cycle_graph(5).neighbors(0))


def test_host_ge1_k2_t1_sizes():
    host, mapping, params = construct_host_ge1(complete_graph(2), ONE)
    assert params.w_size == 1
    assert params.N == 3
    assert host.n == 2 + 2 * 3 + 1 == 9
    assert mapping == (0, 1)
    assert toughness_naive(host).value == ONE


def test_host_ge1_c5_t1_w_size():
    host, _, params = construct_host_ge1(cycle_graph(5), ONE)
    assert params.w_size == 2  # alpha(C5)


def test_host_ge1_k2_t2_w_size():
    host, _, params = construct_host_ge1(complete_graph(2), Rational(2))
    assert params.w_size == 3  # (t-1)n + alpha = 2 + 1


def test_host_ge1_preconditions():
    with pytest.raises(PreconditionError):
        construct_host_ge1(cycle_graph(5), Rational(3, 2))  # 2 does not divide 5
    with pytest.raises(PreconditionError):
        construct_host_ge1(complete_graph(1), Rational(2))  # single vertex
    with pytest.raises(PreconditionError):
        construct_host_ge1(cycle_graph(4), ONE)  # not alpha-critical
    with pytest.raises(PreconditionError):
        construct_host_ge1(complete_graph(2), Rational(1, 2))  # wrong range


def test_host_lt1_k2_half_sizes():
    host, mapping, params = construct_host_lt1(complete_graph(2), Rational(1, 2))
    assert params.w_size == 1 and params.wprime_size == 1
    assert params.v_size == 2 and params.u_cliques == 4
    assert mapping == (0, 1)


def test_host_lt1_k1_half_sizes():
    host, mapping, params = construct_host_lt1(complete_graph(1), Rational(1, 2))
    assert params.w_size == 1 and params.wprime_size == 1
    assert host.n == 7
    assert toughness_naive(host).value == Rational(1, 2)


def test_host_lt1_rejects_wrong_range():
    with pytest.raises(PreconditionError):
        construct_host_lt1(complete_graph(2), ONE)


def test_host_lt1_budget_error_reports_size():
    with pytest.raises(ResourceBudgetError) as exc:
        construct_host_lt1(cycle_graph(5), Rational(2, 3))
    assert exc.value.required is not None and exc.value.required > 64


def test_host_lt1_c5_two_thirds_region_sizes():
    # the full host busts the vertex budget, but the scaffold arithmetic is
    # visible on the N=1 instantiation
    from toughgraph.embedding import _build_lt1

    probe, params = _build_lt1(cycle_graph(5), 2, 3, 1)
    assert params.w_size == 4  # a * alpha = 2 * 2
    assert params.wprime_size == 4  # (b-1) * alpha
    assert params.v_size == 10  # n cliques of size a = 2
    assert params.u_cliques == 15  # n * b


def test_prune_removes_chord():
    g = cycle_graph(5).add_edge(0, 2)
    pruned, log = prune_to_minimal(g, ONE)
    assert pruned == cycle_graph(5)
    assert log == [(0, 2)]


def test_prune_fixed_point():
    pruned, log = prune_to_minimal(cycle_graph(5), ONE)
    assert pruned == cycle_graph(5)
    assert log == []


def test_prune_validates_tau():
    with pytest.raises(PreconditionError):
        prune_to_minimal(cycle_graph(5), Rational(2))


def test_prune_validates_protected_criticality():
    g = cycle_graph(5).add_edge(0, 2)
    with pytest.raises(PreconditionError):
        prune_to_minimal(g, ONE, protected=frozenset({(0, 2)}))


def test_embed_k2_t1_end_to_end():
    res = embed_minimally_t_tough(complete_graph(2), ONE)
    host = res.host
    assert toughness_naive(host).value == ONE
    rep = is_minimally_t_tough(host, ONE)
    assert rep.is_minimal
    u, v = res.vertex_map
    assert host.has_edge(u, v)
    assert res.params.host_size() == res.stages["host_unpruned"].n


def test_embed_k1_half_end_to_end():
    res = embed_minimally_t_tough(complete_graph(1), Rational(1, 2))
    assert toughness_naive(res.host).value == Rational(1, 2)
    assert is_minimally_t_tough(res.host, Rational(1, 2)).is_minimal


def test_embed_k2_half_keeps_image_induced():
    res = embed_minimally_t_tough(complete_graph(2), Rational(1, 2))
    assert toughness_naive(res.host).value == Rational(1, 2)
    u, v = res.vertex_map
    assert res.host.has_edge(u, v)


def test_embed_empty_graph_stays_nonadjacent():
    res = embed_minimally_t_tough(empty_graph(2), ONE)
    u, v = res.vertex_map
    assert not res.host.has_edge(u, v)
    assert is_minimally_t_tough(res.host, ONE).is_minimal


def test_embed_three_isolated_vertices():
    # no protected edges at all; the image must stay pairwise nonadjacent
    res = embed_minimally_t_tough(empty_graph(3), ONE)
    m = res.vertex_map
    for i in range(3):
        for j in range(i + 1, 3):
            assert not res.host.has_edge(m[i], m[j])
    assert is_minimally_t_tough(res.host, ONE).is_minimal


def test_embed_budget_error():
    with pytest.raises(ResourceBudgetError) as exc:
        embed_minimally_t_tough(cycle_graph(5), Rational(2, 3))
    assert exc.value.required is not None and exc.value.required > 64


def test_embed_rejects_bad_t():
    with pytest.raises(PreconditionError):
        embed_minimally_t_tough(complete_graph(2), Rational(0))


def test_scaffold_cut_sizes_recorded():
    res = embed_minimally_t_tough(complete_graph(2), ONE)
    cut = res.scaffold_cuts["equality_cut"]
    # |X| = t*n on the alpha-critical stage graph, n components left
    work = res.stages.get("blown", res.stages["alpha_critical"])
    assert len(cut) == work.n  # t = 1
    host0 = res.stages["host_unpruned"]
    h, _ = host0.delete_vertices(cut)
    assert len(h.components()) == work.n


def test_result_json_schema():
    res = embed_minimally_t_tough(complete_graph(2), ONE)
    doc = res.to_json_dict()
    assert set(doc) == {
        "t",
        "host_graph6",
        "map",
        "pruned",
        "params",
        "stages",
        "scaffold_cuts",
    }
    from toughgraph.graph6 import parse_graph6

    assert parse_graph6(doc["host_graph6"]) == res.host
