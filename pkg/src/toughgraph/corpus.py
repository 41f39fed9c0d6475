"""Exhaustive small-graph census and the theorem-verification sweep.

The census lists one representative per isomorphism class, identified by
the lexicographically minimal adjacency bit-string over all vertex
permutations (the graph6 bit order), built level by level: every n-vertex
graph arises from an (n-1)-vertex class representative plus one new vertex,
so canonicalizing those candidates and deduplicating covers everything.

Checks are named predicates over a per-graph profile; a sweep tallies
applicable/passed/failed per (n, check) and collects reproducers for every
failure. Failures are data here, not exceptions: the point of the harness
is to surface them loudly but completely.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from . import _kernels
from .errors import FalsificationError, UnsupportedSizeError
from .graph import Graph, bits, component_masks, mask_of
from .graph6 import emit_graph6, read_graph6_stream
from .invariants import (
    find_claw,
    is_cycle_graph,
    is_hamiltonian,
    vertex_connectivity,
)
from .minimality import witness_1tough
from .rational import ONE, Rational
from .toughness import all_tough_sets, toughness_exact

CENSUS_MAX_N = 7


# -- enumeration -------------------------------------------------------------


def graph_to_bits(g: Graph) -> int:
    """Pack the upper triangle, column-major, most significant bit first."""
    nbits = g.n * (g.n - 1) // 2
    val = 0
    pos = nbits
    for j in range(1, g.n):
        for i in range(j):
            pos -= 1
            if g.has_edge(i, j):
                val |= 1 << pos
    return val


def bits_to_graph(val: int, n: int) -> Graph:
    nbits = n * (n - 1) // 2
    edges = []
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if val & (1 << pos):
                edges.append((i, j))
    return Graph(n, edges)


@lru_cache(maxsize=8)
def _perm_array(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int8)


def canonical_bits(val: int, n: int) -> int:
    if n <= 1:
        return 0
    return int(_kernels.canonical_form(np.uint64(val), n, _perm_array(n)))


@lru_cache(maxsize=8)
def census(n: int) -> tuple[Graph, ...]:
    """All isomorphism classes on n vertices, ascending by canonical form."""
    if not 1 <= n <= CENSUS_MAX_N:
        raise UnsupportedSizeError(
            f"internal enumeration supports 1..{CENSUS_MAX_N} vertices; "
            "ingest larger graphs from graph6 files"
        )
    if n == 1:
        return (Graph(1),)
    reps = set()
    for smaller in census(n - 1):
        base_edges = smaller.edges()
        for nb in range(1 << (n - 1)):
            edges = base_edges + [(u, n - 1) for u in bits(nb)]
            g = Graph(n, edges)
            reps.add(canonical_bits(graph_to_bits(g), n))
    return tuple(bits_to_graph(v, n) for v in sorted(reps))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class, canonical form ascending."""
    yield from census(n)


# -- per-graph profile ---------------------------------------------------------


class GraphProfile:
    """Lazily computed invariants shared by all checks on one graph."""

    def __init__(self, g: Graph):
        self.g = g
        self._cache: dict = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def graph6(self) -> str:
        return self._get("g6", lambda: emit_graph6(self.g))

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def min_degree(self) -> int:
        return self.g.min_degree()

    @property
    def connected(self) -> bool:
        return self._get("conn", self.g.is_connected)

    @property
    def complete(self) -> bool:
        return self._get("complete", self.g.is_complete)

    @property
    def tau(self) -> Rational:
        return toughness_exact(self.g).value

    @property
    def claw_free(self) -> bool:
        return self._get("clawfree", lambda: find_claw(self.g) is None)

    @property
    def kappa(self) -> int:
        return self._get("kappa", lambda: vertex_connectivity(self.g))

    @property
    def minimally_1tough(self) -> bool:
        def compute():
            if self.tau != ONE:
                return False
            return all(
                toughness_exact(self.g.delete_edge(u, v)).value < ONE
                for u, v in self.g.edges()
            )

        return self._get("min1tough", compute)

    @property
    def hamiltonian(self) -> bool:
        def compute():
            if self.n < 3:
                return False
            return is_hamiltonian(self.g)[0]

        return self._get("ham", compute)

    @property
    def minimally_kappa_connected(self) -> bool:
        def compute():
            k = self.kappa
            if k < 1:
                return False
            return all(
                vertex_connectivity(self.g.delete_edge(u, v)) < k
                for u, v in self.g.edges()
            )

        return self._get("minkconn", compute)


# -- checks ----------------------------------------------------------------------


def _check_theorem2(p: GraphProfile):
    """Minimally 1-tough graphs have a vertex of degree at most n/3 + 1."""
    if not p.minimally_1tough:
        return None
    return 3 * p.min_degree <= p.n + 3


def _check_kriesell(p: GraphProfile):
    """Conjecture: minimally 1-tough graphs have a vertex of degree 2."""
    if not p.minimally_1tough:
        return None
    return p.min_degree == 2


def _check_theorem3(p: GraphProfile):
    """Minimally 1-tough claw-free graphs on >= 4 vertices are cycles."""
    if not (p.minimally_1tough and p.claw_free and p.n >= 4):
        return None
    return is_cycle_graph(p.g)


def _check_claim_witness(p: GraphProfile):
    """Every edge of a minimally 1-tough graph has a witness set with the
    |S| -> |S|+1 component structure."""
    if not p.minimally_1tough:
        return None
    try:
        for e in p.g.edges():
            witness_1tough(p.g, e)
    except FalsificationError:
        return False
    return True


def _check_ham_min1tough(p: GraphProfile):
    """Minimally 1-tough Hamiltonian graphs are cycles."""
    if not (p.minimally_1tough and p.hamiltonian):
        return None
    return is_cycle_graph(p.g)


def _check_ham_implies_1tough(p: GraphProfile):
    """Hamiltonian graphs are 1-tough."""
    if p.n < 3 or not p.hamiltonian:
        return None
    return p.tau >= ONE


def _check_2t_connected(p: GraphProfile):
    """t-tough noncomplete graphs are 2t-connected: kappa >= 2 tau."""
    if p.complete or not p.connected:
        return None
    tau = p.tau
    return p.kappa * tau.den >= 2 * tau.num


def _check_mader(p: GraphProfile):
    """Minimally k-connected graphs have a vertex of degree exactly k."""
    if not p.minimally_kappa_connected:
        return None
    return p.min_degree == p.kappa


def _check_triangle_deg3(p: GraphProfile):
    """In minimally 1-tough graphs, triangle vertices have degree >= 3."""
    if not p.minimally_1tough:
        return None
    g = p.g
    for v in range(g.n):
        if g.degree(v) == 2:
            x, y = g.neighbors(v)
            if g.has_edge(x, y):
                return False
    return True


def _check_toughset_structure(p: GraphProfile):
    """In claw-free graphs every tough-set vertex touches exactly two
    components, and every component has exactly 2*tau neighbors in S."""
    if not (p.claw_free and p.connected and not p.complete):
        return None
    g = p.g
    tau = p.tau
    full = g.vertex_mask()
    for s in all_tough_sets(g):
        s_mask = mask_of(s)
        comps = component_masks(g.rows, full & ~s_mask)
        for v in s:
            touched = sum(1 for c in comps if g.rows[v] & c)
            if touched != 2:
                return False
        for c in comps:
            nb = 0
            for v in bits(c):
                nb |= g.rows[v]
            if (nb & s_mask).bit_count() * tau.den != 2 * tau.num:
                return False
    return True


def _check_hn_sufficiency(p: GraphProfile):
    """2-connected with min degree >= (n + kappa)/3 implies Hamiltonian."""
    if p.kappa < 2 or 3 * p.min_degree < p.n + p.kappa:
        return None
    return p.hamiltonian


def _check_clawfree_kappa(p: GraphProfile):
    """2 tau = kappa for noncomplete claw-free graphs."""
    if p.complete or not p.claw_free:
        return None
    tau = p.tau
    return 2 * tau.num == p.kappa * tau.den


CHECKS = {
    "theorem2": _check_theorem2,
    "kriesell": _check_kriesell,
    "theorem3": _check_theorem3,
    "claim-witness": _check_claim_witness,
    "ham-min1tough": _check_ham_min1tough,
    "ham-implies-1tough": _check_ham_implies_1tough,
    "2t-connected": _check_2t_connected,
    "mader": _check_mader,
    "triangle-deg3": _check_triangle_deg3,
    "toughset-structure": _check_toughset_structure,
    "hn-sufficiency": _check_hn_sufficiency,
    "clawfree-kappa": _check_clawfree_kappa,
}

# the Kriesell check reports conjecture status; a failure there would be a
# research result, not an implementation bug, so it never falsifies a sweep
CONJECTURE_CHECKS = frozenset({"kriesell"})


@dataclass
class CorpusReport:
    checks: tuple[str, ...]
    rows: dict = field(default_factory=dict)  # (n, check) -> [applicable, passed, failed]
    falsifications: list = field(default_factory=list)  # (graph6, check)
    counts: dict = field(default_factory=dict)  # n -> {scanned, connected, ...}
    min1tough_degree_hist: dict = field(default_factory=dict)  # n -> {delta: count}

    def merge(self, other: "CorpusReport"):
        for key, tally in other.rows.items():
            mine = self.rows.setdefault(key, [0, 0, 0])
            for i in range(3):
                mine[i] += tally[i]
        self.falsifications.extend(other.falsifications)
        for n, cts in other.counts.items():
            mine = self.counts.setdefault(n, dict.fromkeys(cts, 0))
            for k, v in cts.items():
                mine[k] = mine.get(k, 0) + v
        for n, hist in other.min1tough_degree_hist.items():
            mine = self.min1tough_degree_hist.setdefault(n, {})
            for d, c in hist.items():
                mine[d] = mine.get(d, 0) + c

    def finalize(self):
        self.falsifications.sort()
        return self

    @property
    def kriesell_counterexamples(self) -> list[str]:
        return [g6 for g6, check in self.falsifications if check == "kriesell"]

    def kriesell_status(self) -> str:
        if "kriesell" not in self.checks:
            return "kriesell check not selected"
        applicable = sum(
            tally[0] for (n, check), tally in self.rows.items() if check == "kriesell"
        )
        failed = sum(
            tally[2] for (n, check), tally in self.rows.items() if check == "kriesell"
        )
        if failed:
            return f"COUNTEREXAMPLE CANDIDATE: {failed} minimally 1-tough graphs without a degree-2 vertex"
        return (
            "no counterexample, all minimally 1-tough graphs have delta = 2 "
            f"({applicable} graphs checked)"
        )

    def to_csv(self) -> str:
        lines = ["n,check,applicable,passed,failed"]
        for n, check in sorted(self.rows):
            a, pss, f = self.rows[(n, check)]
            lines.append(f"{n},{check},{a},{pss},{f}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "checks": list(self.checks),
            "rows": [
                {
                    "n": n,
                    "check": check,
                    "applicable": self.rows[(n, check)][0],
                    "passed": self.rows[(n, check)][1],
                    "failed": self.rows[(n, check)][2],
                }
                for n, check in sorted(self.rows)
            ],
            "falsifications": [
                {"graph6": g6, "check": check}
                for g6, check in self.falsifications
                if check not in CONJECTURE_CHECKS
            ],
            "kriesell_status": self.kriesell_status(),
            "counts": {
                str(n): self.counts[n] for n in sorted(self.counts)
            },
            "min1tough_degree_hist": {
                str(n): {
                    str(d): c
                    for d, c in sorted(self.min1tough_degree_hist[n].items())
                }
                for n in sorted(self.min1tough_degree_hist)
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    @property
    def hard_falsifications(self) -> list:
        return [
            (g6, check)
            for g6, check in self.falsifications
            if check not in CONJECTURE_CHECKS
        ]


def _run_chunk(graph6_lines: Sequence[str], checks: Sequence[str]) -> CorpusReport:
    from .graph6 import parse_graph6

    report = CorpusReport(checks=tuple(checks))
    for line in graph6_lines:
        g = parse_graph6(line)
        p = GraphProfile(g)
        n = g.n
        cts = report.counts.setdefault(
            n, {"scanned": 0, "connected": 0, "minimally_1tough": 0, "claw_free": 0}
        )
        cts["scanned"] += 1
        if p.connected:
            cts["connected"] += 1
        if p.claw_free:
            cts["claw_free"] += 1
        if p.minimally_1tough:
            cts["minimally_1tough"] += 1
            hist = report.min1tough_degree_hist.setdefault(n, {})
            hist[p.min_degree] = hist.get(p.min_degree, 0) + 1
        for name in checks:
            outcome = CHECKS[name](p)
            tally = report.rows.setdefault((n, name), [0, 0, 0])
            if outcome is None:
                continue
            tally[0] += 1
            if outcome:
                tally[1] += 1
            else:
                tally[2] += 1
                report.falsifications.append((p.graph6, name))
    return report


def run_checks(
    graphs: Iterable[Graph],
    checks: Optional[Sequence[str]] = None,
    workers: int = 1,
) -> CorpusReport:
    """Evaluate the selected checks over a graph stream.

    The report is a deterministic function of the stream contents and the
    check selection, independent of the worker count: tallies are summed
    and the falsification list is sorted at the end.
    """
    if checks is None:
        checks = tuple(CHECKS)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}; available: {sorted(CHECKS)}")
    lines = [emit_graph6(g) for g in graphs]
    if workers <= 1 or len(lines) < 2 * workers:
        report = _run_chunk(lines, checks)
        return report.finalize()
    import multiprocessing as mp

    chunk_size = (len(lines) + workers - 1) // workers
    chunks = [lines[i : i + chunk_size] for i in range(0, len(lines), chunk_size)]
    ctx = mp.get_context("fork")
    with ctx.Pool(processes=workers) as pool:
        partials = pool.starmap(_run_chunk, [(c, tuple(checks)) for c in chunks])
    report = CorpusReport(checks=tuple(checks))
    for part in partials:
        report.merge(part)
    return report.finalize()


def corpus_graphs(
    max_n: Optional[int] = None,
    graph6_path: Optional[Union[str, "Path"]] = None,
    skip_errors: bool = False,
) -> Iterator[Graph]:
    """The census up to max_n followed by any graphs from a graph6 file."""
    if max_n is not None:
        for n in range(1, max_n + 1):
            yield from census(n)
    if graph6_path is not None:
        yield from read_graph6_stream(graph6_path, skip_errors=skip_errors)
