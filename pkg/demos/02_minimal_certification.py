#!/usr/bin/env python3
"""Certifying minimal toughness, with per-edge witnesses.

A graph is minimally 1-tough when tau = 1 and deleting any single edge
drops the toughness. Each critical edge e carries a witness set S(e) whose
removal leaves exactly |S| components in G but |S|+1 in G-e; the smallest
such set defines k(e).

The showcase graph: an outer 5-cycle, an inner pentagram, and three spokes.
It is minimally 1-tough yet NOT minimally 2-connected (deleting one spoke
keeps it 2-connected), which is exactly why toughness needs its own theory
rather than inheriting connectivity results wholesale.
"""

from toughgraph import (
    Graph,
    is_minimally_k_connected,
    is_minimally_t_tough,
    k_of_edge,
    vertex_connectivity,
    witness_1tough,
    Rational,
)

g = Graph(
    10,
    [
        (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),      # outer cycle
        (5, 7), (6, 8), (7, 9), (5, 8), (6, 9),      # inner pentagram
        (0, 5), (1, 6), (4, 9),                      # three spokes
    ],
)
spoke = (0, 5)

report = is_minimally_t_tough(g, Rational(1))
print(f"tau = {report.tau}, minimally 1-tough: {report.is_minimal}")
print()
print("per-edge witnesses (S(e) and k(e)):")
for entry in report.per_edge:
    print(
        f"  edge {entry.edge}: tau(G-e) = {entry.tau_after}, "
        f"S = {entry.witness}, k = {entry.k}"
    )

print()
print(f"single edge via witness_1tough{spoke}: S = {witness_1tough(g, spoke)}, "
      f"k = {k_of_edge(g, spoke)}")

print()
print("contrast with connectivity:")
print(f"  kappa(G) = {vertex_connectivity(g)}")
ok, per_edge = is_minimally_k_connected(g, 2)
print(f"  minimally 2-connected: {ok}")
print(f"  kappa(G - {spoke}) = {dict(per_edge)[spoke]}  (still 2: the spoke is"
      " toughness-critical but not connectivity-critical)")
