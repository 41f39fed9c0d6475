#!/usr/bin/env python3
"""Toughness basics: exact certificates on a gallery of named graphs.

tau(G) = min |S| / omega(G-S) over all cutsets S. Complete graphs have no
cutset and get tau = infinity; disconnected graphs get 0. Everything below
is exact rational arithmetic; no floats are involved at any point.
"""

import json

from toughgraph import (
    complete_graph,
    cycle_graph,
    emit_graph6,
    is_t_tough,
    petersen_graph,
    star_graph,
    toughness_clawfree,
    toughness_exact,
    Rational,
)

gallery = {
    "C4": cycle_graph(4),
    "C5": cycle_graph(5),
    "K6": complete_graph(6),
    "K_{1,3} (claw)": star_graph(3),
    "Petersen": petersen_graph(),
}

print("=== certificates ===")
for name, g in gallery.items():
    cert = toughness_exact(g)
    sets = ", ".join(str(s) for s in cert.tough_sets[:3])
    more = " ..." if len(cert.tough_sets) > 3 else ""
    print(f"{name:16s} g6={emit_graph6(g):14s} tau = {cert.tau_text():6s} tough sets: {sets}{more}")

print()
print("=== threshold queries ===")
c4 = cycle_graph(4)
for t in [Rational(1), Rational(9, 8)]:
    print(f"C4 is {t}-tough? {is_t_tough(c4, t)}")
print(f"K5 is 1000-tough? {is_t_tough(complete_graph(5), Rational(1000))}")

print()
print("=== claw-free shortcut: 2 tau = kappa ===")
for name, g in [("C5", cycle_graph(5)), ("C6", cycle_graph(6))]:
    fast = toughness_clawfree(g)
    full = toughness_exact(g).value
    print(f"{name}: kappa/2 = {fast}, exact search agrees: {fast == full}")

print()
print("=== JSON serialization ===")
print(json.dumps(toughness_exact(star_graph(3)).to_json_dict(), indent=2))
