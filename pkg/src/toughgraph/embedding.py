"""Embedding any graph as an induced subgraph of a minimally t-tough graph.

Pipeline: make the input alpha-critical by an exhaustive supergraph search
(the input stays untouched on its own indices, so it remains induced), fix
divisibility by blowing one vertex up into a clique when t >= 1 requires
it, build the scaffold host for the given rational t, then greedily delete
edges that do not lower the toughness until every remaining edge is
critical. The image edges of the original graph are protected throughout;
their criticality is a property of the construction and is asserted, not
assumed.

Two scaffolds exist: one for t >= 1 (a clique tower per vertex plus one
shared independent blob) and one for t < 1 (per-vertex clique groups with
a two-layer independent blob), matching the two regimes of the cutset
ratio arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional

from .errors import FalsificationError, PreconditionError, ResourceBudgetError
from .graph import MAX_VERTICES, Graph, bits, count_components, mask_of
from .graph6 import emit_edge_list, emit_graph6
from .invariants import alpha_critical_fast, independence_in_mask, is_alpha_critical
from .rational import ONE, Rational, ZERO
from .toughness import ViolatorPool, compare_toughness, decide_t_tough


@dataclass(frozen=True)
class EmbeddingParams:
    """Sizes of the host scaffold regions."""

    t: Rational
    a: int
    b: int
    N: int
    v_size: int
    u_cliques: int
    w_size: int
    wprime_size: int

    def host_size(self) -> int:
        return self.v_size + self.u_cliques * self.N + self.w_size + self.wprime_size

    def to_json_dict(self) -> dict:
        return {
            "t": str(self.t),
            "N": self.N,
            "v_size": self.v_size,
            "u_cliques": self.u_cliques,
            "w_size": self.w_size,
            "wprime_size": self.wprime_size,
        }


@dataclass(frozen=True)
class EmbeddingResult:
    host: Graph
    vertex_map: tuple[int, ...]
    params: EmbeddingParams
    pruned_edges: tuple[tuple[int, int], ...]
    stages: dict
    scaffold_cuts: dict

    def to_json_dict(self) -> dict:
        def graph_text(g: Graph) -> str:
            return emit_graph6(g) if g.n <= 62 else emit_edge_list(g)

        return {
            "t": str(self.params.t),
            "host_graph6": graph_text(self.host),
            "map": list(self.vertex_map),
            "pruned": [list(e) for e in self.pruned_edges],
            "params": self.params.to_json_dict(),
            "stages": {name: graph_text(g) for name, g in self.stages.items()},
            "scaffold_cuts": {
                "equality_cut": list(self.scaffold_cuts["equality_cut"]),
                "edge_cuts": [
                    {"edge": list(e), "cut": list(c)}
                    for e, c in sorted(self.scaffold_cuts["edge_cuts"].items())
                ],
            },
        }


# -- alpha-criticalization ---------------------------------------------------


def _symmetry_tables(k: int):
    """For each nonidentity permutation of the k new vertices: the cross
    reindexing and the internal-pair bit remapping."""
    from itertools import permutations

    pair_pos = {}
    idx = 0
    for i in range(k):
        for j in range(i + 1, k):
            pair_pos[(i, j)] = idx
            idx += 1
    tables = []
    for perm in permutations(range(k)):
        if perm == tuple(range(k)):
            continue
        remap = [0] * idx
        for (i, j), pos in pair_pos.items():
            pi, pj = perm[i], perm[j]
            if pi > pj:
                pi, pj = pj, pi
            remap[pos] = pair_pos[(pi, pj)]
        tables.append((perm, remap))
    return tables


def _new_part_canonical(k, cross, internal, tables) -> bool:
    """Keep one representative per symmetry of the k added vertices."""
    for perm, remap in tables:
        pint = 0
        m = internal
        while m:
            b = m & -m
            pint |= 1 << remap[b.bit_length() - 1]
            m ^= b
        pcross = tuple(cross[perm[i]] for i in range(k))
        if (pint, pcross) < (internal, cross):
            return False
    return True


def alpha_criticalize(
    g: Graph, max_added: int = 4
) -> tuple[Graph, tuple[int, ...]]:
    """Smallest-by-search alpha-critical supergraph containing g induced.

    Stage k adds k fresh vertices and tries every way of wiring them to the
    old part and to each other (up to symmetry of the new part); the input
    keeps its indices, so the identity map embeds it induced. New vertices
    are never left isolated: an isolated vertex shifts alpha by one without
    affecting criticality, so such candidates are covered at stage k-1.
    Raises a resource error when max_added stages are exhausted.
    """
    if g.n < 1:
        raise PreconditionError("need at least one vertex")
    ok, _ = is_alpha_critical(g)
    identity = tuple(range(g.n))
    if ok:
        return g, identity
    n = g.n
    base_edges = g.edges()
    for k in range(1, max_added + 1):
        if n + k > MAX_VERTICES:
            break
        npairs = k * (k - 1) // 2
        tables = _symmetry_tables(k)
        internal_rows = [0] * k
        for internal in range(1 << npairs):
            idx = 0
            for i in range(k):
                internal_rows[i] = 0
            for i in range(k):
                for j in range(i + 1, k):
                    if internal & (1 << idx):
                        internal_rows[i] |= 1 << j
                        internal_rows[j] |= 1 << i
                    idx += 1
            for cross in product(range(1 << n), repeat=k):
                if any(
                    cross[i] == 0 and internal_rows[i] == 0 for i in range(k)
                ):
                    continue
                if not _new_part_canonical(k, cross, internal, tables):
                    continue
                rows = list(g.rows)
                for i in range(k):
                    row = cross[i]
                    for u in bits(cross[i]):
                        rows[u] |= 1 << (n + i)
                    for j in bits(internal_rows[i]):
                        row |= 1 << (n + j)
                    rows.append(row)
                if alpha_critical_fast(rows, n + k):
                    cand = Graph(n + k, list(g.edges()) + [
                        (u, n + i) for i in range(k) for u in bits(cross[i])
                    ] + [
                        (n + i, n + j)
                        for i in range(k)
                        for j in bits(internal_rows[i])
                        if j > i
                    ])
                    return cand, identity
    raise ResourceBudgetError(
        f"no alpha-critical supergraph found within {max_added} added vertices",
        budget=max_added,
    )


def blow_up(g: Graph, v: int, c: int) -> Graph:
    """Replace vertex v by a c-clique fully joined to N(v).

    v keeps its index; the c-1 copies are appended at the end, so any
    induced subgraph on the original indices survives unchanged.
    """
    if not 0 <= v < g.n:
        raise PreconditionError(f"vertex {v} out of range")
    if c < 1:
        raise PreconditionError(f"clique size must be positive, got {c}")
    if c == 1:
        return g
    n = g.n
    edges = g.edges()
    group = [v] + list(range(n, n + c - 1))
    nbrs = g.neighbors(v)
    for i, x in enumerate(group):
        for y in group[i + 1 :]:
            edges.append((x, y))
        if x != v:
            for u in nbrs:
                edges.append((u, x))
    return Graph(n + c - 1, edges)


# -- host scaffolds ------------------------------------------------------------


def _require_alpha_critical(g: Graph):
    ok, failing = is_alpha_critical(g)
    if not ok:
        raise PreconditionError(
            f"input must be alpha-critical; offending edges: {failing}"
        )


def _build_ge1(g: Graph, a: int, b: int, big_n: int) -> tuple[Graph, EmbeddingParams]:
    n = g.n
    alpha, _ = independence_in_mask(g.rows, g.vertex_mask())
    w_size = (a - b) * (n // b) + alpha
    u_base = n
    w_base = n + n * big_n
    total = w_base + w_size
    if total > MAX_VERTICES:
        raise ResourceBudgetError(
            f"host needs {total} vertices, budget is {MAX_VERTICES}",
            required=total,
            budget=MAX_VERTICES,
        )
    edges = g.edges()
    for i in range(n):
        block = range(u_base + i * big_n, u_base + (i + 1) * big_n)
        for x, y in combinations(block, 2):
            edges.append((x, y))
        for x in block:
            edges.append((i, x))
            for w in range(w_base, w_base + w_size):
                edges.append((x, w))
    host = Graph(total, edges)
    params = EmbeddingParams(
        t=Rational(a, b),
        a=a,
        b=b,
        N=big_n,
        v_size=n,
        u_cliques=n,
        w_size=w_size,
        wprime_size=0,
    )
    return host, params


def construct_host_ge1(
    g: Graph, t: Rational
) -> tuple[Graph, tuple[int, ...], EmbeddingParams]:
    """Scaffold for t >= 1: g on V, one N-clique per vertex joined to its
    vertex and to the independent set W of size (t-1)n + alpha(g).

    Requires the denominator of t to divide n (blow a vertex up first
    otherwise); N is the least integer exceeding t * alpha(host), computed
    on the N=1 instantiation since alpha does not depend on N.
    """
    if t < ONE or t.is_infinite:
        raise PreconditionError(f"this scaffold needs t >= 1, got {t}")
    _require_alpha_critical(g)
    a, b = t.num, t.den
    if g.n < 2:
        # with a single vertex the equality cutset W fails to disconnect,
        # so the scaffold overshoots t; a blow-up to K2 fixes it
        raise PreconditionError(
            "the t >= 1 scaffold needs at least 2 vertices; blow up first"
        )
    if g.n % b != 0:
        raise PreconditionError(
            f"denominator {b} must divide n={g.n}; blow up a vertex first"
        )
    probe, _ = _build_ge1(g, a, b, 1)
    alpha_h, _ = independence_in_mask(probe.rows, probe.vertex_mask())
    big_n = (a * alpha_h) // b + 1
    host, params = _build_ge1(g, a, b, big_n)
    return host, tuple(range(g.n)), params


def _build_lt1(g: Graph, a: int, b: int, big_n: int) -> tuple[Graph, EmbeddingParams]:
    n = g.n
    alpha, _ = independence_in_mask(g.rows, g.vertex_mask())
    v_size = n * a
    u_cliques = n * b
    w_size = a * alpha
    wp_size = (b - 1) * alpha
    u_base = v_size
    w_base = u_base + u_cliques * big_n
    wp_base = w_base + w_size
    total = wp_base + wp_size
    if total > MAX_VERTICES:
        raise ResourceBudgetError(
            f"host needs {total} vertices, budget is {MAX_VERTICES}",
            required=total,
            budget=MAX_VERTICES,
        )
    edges = [(u * a, v * a) for u, v in g.edges()]
    for i in range(n):
        vblock = range(i * a, (i + 1) * a)
        for x, y in combinations(vblock, 2):
            edges.append((x, y))
        for j in range(b):
            base = u_base + (i * b + j) * big_n
            ublock = range(base, base + big_n)
            for x, y in combinations(ublock, 2):
                edges.append((x, y))
            for x in ublock:
                for y in vblock:
                    edges.append((y, x))
                for w in range(w_base, w_base + w_size):
                    edges.append((x, w))
    for w in range(w_base, w_base + w_size):
        for wp in range(wp_base, wp_base + wp_size):
            edges.append((w, wp))
    host = Graph(total, edges)
    params = EmbeddingParams(
        t=Rational(a, b),
        a=a,
        b=b,
        N=big_n,
        v_size=v_size,
        u_cliques=u_cliques,
        w_size=w_size,
        wprime_size=wp_size,
    )
    return host, params


def construct_host_lt1(
    g: Graph, t: Rational
) -> tuple[Graph, tuple[int, ...], EmbeddingParams]:
    """Scaffold for t = a/b < 1: each vertex becomes an a-clique V_i with g
    placed on the first member, b N-cliques hang off every V_i and join the
    independent W of size a*alpha(g), and W' of size (b-1)*alpha(g) joins W
    completely."""
    if not ZERO < t < ONE:
        raise PreconditionError(f"this scaffold needs 0 < t < 1, got {t}")
    _require_alpha_critical(g)
    a, b = t.num, t.den
    probe, _ = _build_lt1(g, a, b, 1)
    alpha_h, _ = independence_in_mask(probe.rows, probe.vertex_mask())
    big_n = (a * alpha_h) // b + 1
    host, params = _build_lt1(g, a, b, big_n)
    return host, tuple(i * a for i in range(g.n)), params


# -- construction certificates --------------------------------------------------


def _explicit_tough_cut_ge1(g: Graph, params: EmbeddingParams) -> tuple[int, ...]:
    """The cutset (V minus a maximum independent set) union W, which has
    size t*n and leaves exactly n components."""
    n = params.v_size
    _, ind_mask = independence_in_mask(g.rows, g.vertex_mask())
    w_base = n + params.u_cliques * params.N
    cut = [v for v in range(n) if not ind_mask & (1 << v)]
    cut += list(range(w_base, w_base + params.w_size))
    return tuple(cut)


def _edge_violation_cut_ge1(
    g: Graph, edge: tuple[int, int], params: EmbeddingParams
) -> tuple[int, ...]:
    """For an image edge e: delete W and all of V except an independent set
    of size alpha(g)+1 living in g-e; only tn-1 vertices go but n components
    remain, beating the t-tough budget."""
    ge = g.delete_edge(*edge)
    alpha, _ = independence_in_mask(g.rows, g.vertex_mask())
    a2, ind_mask = independence_in_mask(ge.rows, ge.vertex_mask())
    if a2 != alpha + 1:
        raise FalsificationError(
            "alpha-critical input did not gain independence on edge deletion",
            params={"edge": edge},
        )
    keep = bits(ind_mask)[: alpha + 1]
    keep_mask = mask_of(keep)
    n = params.v_size
    w_base = n + params.u_cliques * params.N
    cut = [v for v in range(n) if not keep_mask & (1 << v)]
    cut += list(range(w_base, w_base + params.w_size))
    return tuple(cut)


def _explicit_tough_cut_lt1(g: Graph, params: EmbeddingParams) -> tuple[int, ...]:
    """Union of the V_i blocks off a maximum independent set, plus W: a*n
    vertices whose removal leaves b*n components."""
    _, ind_mask = independence_in_mask(g.rows, g.vertex_mask())
    a = params.a
    w_base = params.v_size + params.u_cliques * params.N
    cut = []
    for i in range(g.n):
        if not ind_mask & (1 << i):
            cut.extend(range(i * a, (i + 1) * a))
    cut += list(range(w_base, w_base + params.w_size))
    return tuple(cut)


def _edge_violation_cut_lt1(
    g: Graph, edge: tuple[int, int], params: EmbeddingParams
) -> tuple[int, ...]:
    ge = g.delete_edge(*edge)
    alpha, _ = independence_in_mask(g.rows, g.vertex_mask())
    a2, ind_mask = independence_in_mask(ge.rows, ge.vertex_mask())
    if a2 != alpha + 1:
        raise FalsificationError(
            "alpha-critical input did not gain independence on edge deletion",
            params={"edge": edge},
        )
    keep = bits(ind_mask)[: alpha + 1]
    keep_mask = mask_of(keep)
    a = params.a
    w_base = params.v_size + params.u_cliques * params.N
    cut = []
    for i in range(g.n):
        if not keep_mask & (1 << i):
            cut.extend(range(i * a, (i + 1) * a))
    cut += list(range(w_base, w_base + params.w_size))
    return tuple(cut)


def verify_scaffold(
    g: Graph, host: Graph, params: EmbeddingParams, pool: Optional[ViolatorPool] = None
) -> dict:
    """Check the three construction properties on a freshly built host.

    (i) deleting any edge of the embedded alpha-critical graph breaks
    t-toughness, via an explicit cutset; (ii) the host is t-tough; (iii) an
    explicit cutset achieves the ratio t exactly. Returns the exhibited
    cutsets; raises FalsificationError if the arithmetic does not land.
    """
    t = params.t
    a, b = params.a, params.b
    ge1 = t >= ONE
    full = host.vertex_mask()

    def reproducer():
        return emit_graph6(host) if host.n <= 62 else None

    cut = (
        _explicit_tough_cut_ge1(g, params) if ge1 else _explicit_tough_cut_lt1(g, params)
    )
    omega = count_components(host.rows, full & ~mask_of(cut))
    expect_size = a * (g.n // b) if ge1 else a * g.n
    expect_omega = g.n if ge1 else b * g.n
    if len(cut) != expect_size or omega != expect_omega:
        raise FalsificationError(
            "explicit equality cutset has the wrong size or component count",
            graph6=reproducer(),
            params={"cut": cut, "size": len(cut), "omega": omega, "t": str(t)},
        )
    edge_cuts = {}
    if ge1:
        exp_ecut = a * (g.n // b) - 1
        exp_eomega = g.n
    else:
        exp_ecut = (g.n - 1) * a
        exp_eomega = (g.n - 1) * b + 1
    for u, v in g.edges():
        ecut = (
            _edge_violation_cut_ge1(g, (u, v), params)
            if ge1
            else _edge_violation_cut_lt1(g, (u, v), params)
        )
        image_edge = (
            (u, v) if ge1 else (u * params.a, v * params.a)
        )
        he = host.delete_edge(*image_edge)
        eomega = count_components(he.rows, full & ~mask_of(ecut))
        if (
            len(ecut) != exp_ecut
            or eomega != exp_eomega
            or not a * eomega > b * len(ecut)
        ):
            raise FalsificationError(
                "edge-deletion cutset has the wrong size or component count",
                graph6=reproducer(),
                params={"edge": image_edge, "cut": ecut, "omega": eomega},
            )
        edge_cuts[image_edge] = ecut
        if pool is not None:
            pool.add(mask_of(ecut))
    sign, _ = compare_toughness(host, t)
    if sign != 0:
        raise FalsificationError(
            "scaffold toughness is not exactly t",
            graph6=reproducer(),
            params={"t": str(t), "sign": sign},
        )
    return {"equality_cut": cut, "edge_cuts": edge_cuts}


# -- pruning ---------------------------------------------------------------------


def prune_to_minimal(
    host: Graph,
    t: Rational,
    protected: frozenset[tuple[int, int]] = frozenset(),
    pool: Optional[ViolatorPool] = None,
) -> tuple[Graph, list[tuple[int, int]]]:
    """Delete removable edges until every remaining edge is critical.

    The scan is lexicographic and restarts from the first edge after each
    removal, so the output is a deterministic function of the input. An
    edge is removed exactly when the graph stays t-tough without it; since
    deletion cannot raise toughness, the toughness stays pinned at t
    through every step. Protected edges are never touched; each must
    already be critical, otherwise the scaffold is broken.
    """
    if pool is None:
        pool = ViolatorPool()
    sign, _ = compare_toughness(host, t)
    if sign != 0:
        raise PreconditionError(
            f"pruning requires tau(host) = {t} exactly"
            + (f" [graph6 {emit_graph6(host)!r}]" if host.n <= 62 else "")
        )
    for u, v in sorted(protected):
        tough, _ = decide_t_tough(host.delete_edge(u, v), t, pool)
        if tough:
            raise PreconditionError(
                f"protected edge ({u},{v}) is not critical; construction bug"
                + (f" [graph6 {emit_graph6(host)!r}]" if host.n <= 62 else "")
            )
    pruned: list[tuple[int, int]] = []
    g = host
    restart = True
    while restart:
        restart = False
        for u, v in g.edges():
            if (u, v) in protected:
                continue
            candidate = g.delete_edge(u, v)
            tough, _ = decide_t_tough(candidate, t, pool)
            if tough:
                g = candidate
                pruned.append((u, v))
                restart = True
                break
    return g, pruned


# -- full pipeline ----------------------------------------------------------------


def embed_minimally_t_tough(
    g: Graph,
    t: Rational,
    *,
    max_added: int = 4,
    verify: bool = True,
) -> EmbeddingResult:
    """Embed g as an induced subgraph of a minimally t-tough host.

    Raises ResourceBudgetError when the host would exceed 64 vertices,
    reporting the required size.
    """
    if not t > ZERO or t.is_infinite:
        raise PreconditionError(f"t must be a positive finite rational, got {t}")
    if g.n < 1:
        raise PreconditionError("need at least one vertex to embed")
    crit, _ = alpha_criticalize(g, max_added=max_added)
    stages = {"alpha_critical": crit}
    a, b = t.num, t.den
    work = crit
    if t >= ONE:
        if work.n == 1 and b == 1:
            work = blow_up(work, 0, 2)
        if work.n % b != 0:
            work = blow_up(work, 0, b - work.n % b + 1)
        if work is not crit:
            stages["blown"] = work
    if t >= ONE:
        host, hmap, params = construct_host_ge1(work, t)
    else:
        host, hmap, params = construct_host_lt1(work, t)
    stages["host_unpruned"] = host
    pool = ViolatorPool()
    cuts = verify_scaffold(work, host, params, pool)
    vertex_map = tuple(hmap[v] for v in range(g.n))
    protected = frozenset(
        (min(vertex_map[u], vertex_map[v]), max(vertex_map[u], vertex_map[v]))
        for u, v in g.edges()
    )
    final, pruned = prune_to_minimal(host, t, protected, pool)
    if verify:
        _verify_result(g, final, vertex_map, t, pool)
    return EmbeddingResult(
        host=final,
        vertex_map=vertex_map,
        params=params,
        pruned_edges=tuple(pruned),
        stages=stages,
        scaffold_cuts=cuts,
    )


def _verify_result(g, final, vertex_map, t, pool):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) != final.has_edge(vertex_map[u], vertex_map[v]):
                raise FalsificationError(
                    "image is not induced in the pruned host",
                    graph6=emit_graph6(final) if final.n <= 62 else None,
                    params={"pair": (u, v)},
                )
    sign, _ = compare_toughness(final, t)
    if sign != 0:
        raise FalsificationError(
            "pruned host lost exact toughness",
            graph6=emit_graph6(final) if final.n <= 62 else None,
            params={"t": str(t)},
        )
    for u, v in final.edges():
        tough, _ = decide_t_tough(final.delete_edge(u, v), t, pool)
        if tough:
            raise FalsificationError(
                "pruned host still has a removable edge",
                graph6=emit_graph6(final) if final.n <= 62 else None,
                params={"edge": (u, v)},
            )
