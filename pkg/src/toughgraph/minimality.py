"""Certification of minimally t-tough and minimally k-connected graphs.

A graph is minimally t-tough when tau(G) = t and deleting any single edge
drops the toughness below t. For t = 1 every critical edge e admits a
witness set S with omega(G-S) = |S| and omega((G-e)-S) = |S|+1; in fact
any cutset violating 1-toughness in G-e has this structure, because edge
deletion changes the component count by at most one, so the minimum-size
witness is exactly the minimum-size violating cutset of G-e.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import FalsificationError, PreconditionError
from .graph import Graph, count_components, mask_of
from .graph6 import emit_graph6
from .invariants import vertex_connectivity, vertex_connectivity_per_edge
from .rational import ONE, Rational, ZERO
from .toughness import (
    SMALL_SCAN_LIMIT,
    ViolatorPool,
    decide_t_tough,
    smallest_violating_cutset,
    toughness_exact,
)


@dataclass(frozen=True)
class EdgeVerdict:
    """Per-edge record: toughness after deleting the edge, and a witness
    cutset certifying the drop when the edge is critical.

    tau_after is exact when tau_after_exact is set; otherwise it is the
    achieved ratio |S|/omega((G-e)-S) of the witness, a certified upper
    bound that already proves tau(G-e) < t.
    """

    edge: tuple[int, int]
    tau_after: Rational
    tau_after_exact: bool
    witness: Optional[tuple[int, ...]]
    witness_smallest: bool
    k: Optional[int]

    def to_json_dict(self) -> dict:
        return {
            "e": list(self.edge),
            "tau_minus_e": str(self.tau_after),
            "tau_minus_e_exact": self.tau_after_exact,
            "S": list(self.witness) if self.witness is not None else None,
            "k": self.k,
        }


@dataclass(frozen=True)
class MinimalityReport:
    t: Rational
    tau: Rational
    is_minimal: bool
    per_edge: tuple[EdgeVerdict, ...]

    def to_json_dict(self) -> dict:
        return {
            "t": str(self.t),
            "tau": "inf" if self.tau.is_infinite else str(self.tau),
            "minimal": self.is_minimal,
            "edges": [e.to_json_dict() for e in self.per_edge],
        }


def _witness_1tough_full(g: Graph, edge: tuple[int, int]) -> tuple[tuple[int, ...], bool]:
    u, v = edge
    ge = g.delete_edge(u, v)
    found = smallest_violating_cutset(ge, ONE)
    if found is None:
        raise FalsificationError(
            "no witness cutset for a supposedly critical edge",
            graph6=emit_graph6(g) if g.n <= 62 else None,
            params={"edge": edge, "t": "1"},
        )
    witness, lex_first = found
    s_mask = mask_of(witness)
    full = g.vertex_mask()
    w_omega = count_components(g.rows, full & ~s_mask)
    we_omega = count_components(ge.rows, full & ~s_mask)
    if not (w_omega == len(witness) and we_omega == len(witness) + 1):
        raise FalsificationError(
            "witness cutset lacks the |S| -> |S|+1 component structure",
            graph6=emit_graph6(g) if g.n <= 62 else None,
            params={"edge": edge, "S": witness},
        )
    return witness, lex_first


def witness_1tough(g: Graph, edge: tuple[int, int]) -> tuple[int, ...]:
    """Minimum-size S(e) with omega(G-S)=|S| and omega((G-e)-S)=|S|+1,
    lexicographically first among minimum-size witnesses where the
    refinement budget allows (always, on small graphs).

    Requires g minimally 1-tough; if no witness exists that premise is
    broken, which is a falsification event, not a soft failure.
    """
    return _witness_1tough_full(g, edge)[0]


def k_of_edge(g: Graph, edge: tuple[int, int]) -> int:
    """k(e): the size of the minimum witness set for edge e."""
    return len(witness_1tough(g, edge))


def is_minimally_t_tough(
    g: Graph,
    t: Rational,
    *,
    exact_edge_tau: Optional[bool] = None,
    pool: Optional[ViolatorPool] = None,
) -> MinimalityReport:
    """Full minimality report for toughness level t.

    Short-circuits with an empty edge list when tau(G) != t. Per-edge
    toughness values are exact on small graphs; on large graphs the report
    stores the witness's achieved ratio unless exact_edge_tau forces the
    full computation.
    """
    if not t > ZERO:
        raise PreconditionError(f"t must be positive, got {t}")
    if exact_edge_tau is None:
        exact_edge_tau = g.n <= SMALL_SCAN_LIMIT
    tau = toughness_exact(g).value
    if tau != t:
        return MinimalityReport(t=t, tau=tau, is_minimal=False, per_edge=())
    if pool is None:
        pool = ViolatorPool()
    verdicts = []
    minimal = True
    for u, v in g.edges():
        ge = g.delete_edge(u, v)
        tough, _ = decide_t_tough(ge, t, pool)
        if tough:
            # tau(G-e) <= tau(G) = t and G-e is still t-tough, so equality
            minimal = False
            verdicts.append(
                EdgeVerdict(
                    edge=(u, v),
                    tau_after=t,
                    tau_after_exact=True,
                    witness=None,
                    witness_smallest=False,
                    k=None,
                )
            )
            continue
        if t == ONE:
            witness, smallest = _witness_1tough_full(g, (u, v))
            k = len(witness)
        else:
            witness, smallest = smallest_violating_cutset(ge, t)
            k = None
        if exact_edge_tau:
            tau_after = toughness_exact(ge).value
            exact = True
        else:
            omega = count_components(ge.rows, ge.vertex_mask() & ~mask_of(witness))
            tau_after = Rational(len(witness), omega)
            exact = False
        verdicts.append(
            EdgeVerdict(
                edge=(u, v),
                tau_after=tau_after,
                tau_after_exact=exact,
                witness=witness,
                witness_smallest=smallest,
                k=k,
            )
        )
    return MinimalityReport(t=t, tau=tau, is_minimal=minimal, per_edge=tuple(verdicts))


def is_minimally_k_connected(
    g: Graph, k: int
) -> tuple[bool, list[tuple[tuple[int, int], int]]]:
    """Whether kappa(G) = k and every single-edge deletion drops kappa below k.

    Returns the verdict together with kappa(G-e) for every edge.
    """
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    per_edge = vertex_connectivity_per_edge(g)
    if vertex_connectivity(g) != k:
        return False, per_edge
    return all(ka < k for _, ka in per_edge), per_edge
