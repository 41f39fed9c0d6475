"""Exact toughness: tau(G) = min |S| / omega(G-S) over cutsets S.

Certificates carry exact rationals and at least one minimizing tough set.
Small graphs get a direct subset scan restricted to undominated cutsets
(every vertex of a ratio-minimal cutset touches at least two components,
otherwise dropping it gives a strictly better ratio). Larger graphs go
through the twin-quotient branch-and-bound kernel; exact values are then
pinned by Stern-Brocot descent on the sign of the cutset surplus
a*omega - b*|S|, which never leaves integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

import numpy as np

from . import _kernels
from .errors import PreconditionError, ResourceBudgetError
from .graph import Graph, bits, component_masks, count_components, iter_bits
from .invariants import find_claw, independence_in_mask, vertex_connectivity
from .rational import INFINITY, Rational, ZERO

# graphs up to this many vertices use the direct subset scan
SMALL_SCAN_LIMIT = 11
# lexicographic refinement of a smallest violating cutset is only attempted
# while the candidate count stays below this
LEX_REFINE_LIMIT = 3_000_000


@dataclass(frozen=True)
class ToughnessCertificate:
    """Exact toughness value plus minimizing tough sets.

    value is INFINITY exactly for complete graphs (no cutset exists) and
    0 with the disconnected flag for disconnected graphs, where the empty
    set is the witness.
    """

    value: Rational
    tough_sets: tuple[tuple[int, ...], ...]
    disconnected: bool = False

    def tau_text(self) -> str:
        if self.value.is_infinite:
            return "inf"
        if self.disconnected:
            return "0 (disconnected)"
        return str(self.value)

    def to_json_dict(self) -> dict:
        return {
            "tau": self.tau_text(),
            "tough_sets": [list(s) for s in self.tough_sets],
        }


# -- twin-class quotient ----------------------------------------------------


def twin_partition(g: Graph) -> tuple[list[int], list[bool]]:
    """Partition vertices into classes of mutual true twins (identical
    closed neighborhoods; a clique) or mutual false twins (identical open
    neighborhoods; an independent set).

    Optimal cutsets never split such a class: re-adding a removed twin
    cannot merge components, so it shrinks the cutset without lowering the
    component count.
    """
    rows = g.rows
    n = g.n
    assigned = 0
    masks: list[int] = []
    indep: list[bool] = []
    for v in range(n):
        vbit = 1 << v
        if assigned & vbit:
            continue
        closed = rows[v] | vbit
        cls = vbit
        for u in range(v + 1, n):
            ubit = 1 << u
            if not assigned & ubit and (rows[u] | ubit) == closed:
                cls |= ubit
        if cls == vbit:
            for u in range(v + 1, n):
                ubit = 1 << u
                if not assigned & ubit and rows[u] == rows[v]:
                    cls |= ubit
            is_indep = cls != vbit
        else:
            is_indep = False
        assigned |= cls
        masks.append(cls)
        indep.append(is_indep)
    return masks, indep


def _quotient_arrays(g: Graph):
    """Kernel-ready quotient: adjacency, weights, independence flags, a
    greedy clique cover for bounding, and the vertex mask of each class."""
    masks, indep = twin_partition(g)
    q = len(masks)
    reps = [(m & -m).bit_length() - 1 for m in masks]
    # order classes by descending weighted neighborhood so likely
    # separators are decided first
    weight = [m.bit_count() for m in masks]
    nb_weight = []
    for i in range(q):
        w = 0
        for j in range(q):
            if i != j and g.rows[reps[i]] & masks[j]:
                w += weight[j]
        nb_weight.append(w)
    order = sorted(range(q), key=lambda i: (-nb_weight[i], -weight[i], reps[i]))
    masks = [masks[i] for i in order]
    indep = [indep[i] for i in order]
    reps = [reps[i] for i in order]
    weight = [weight[i] for i in order]

    qadj = np.zeros(q, dtype=np.uint64)
    for i in range(q):
        row = 0
        for j in range(q):
            if i != j and g.rows[reps[i]] & masks[j]:
                row |= 1 << j
        qadj[i] = row
    qw = np.array(weight, dtype=np.int64)
    qind = np.array([1 if x else 0 for x in indep], dtype=np.uint8)

    # greedy clique cover over the quotient: independent classes stand
    # alone (cap = weight), clique classes merge into joined cliques (cap 1)
    unit_masks: list[int] = []
    unit_caps: list[int] = []
    used = 0
    for i in range(q):
        ibit = 1 << i
        if used & ibit:
            continue
        if indep[i]:
            unit_masks.append(ibit)
            unit_caps.append(weight[i])
            used |= ibit
            continue
        unit = ibit
        cand = int(qadj[i])
        for j in range(i + 1, q):
            jbit = 1 << j
            if used & jbit or indep[j] or not cand & jbit:
                continue
            unit |= jbit
            cand &= int(qadj[j])
        used |= unit
        unit_masks.append(unit)
        unit_caps.append(1)
    units = np.array(unit_masks, dtype=np.uint64)
    caps = np.array(unit_caps, dtype=np.int64)
    return qadj, qw, qind, units, caps, masks


def _expand_class_mask(class_masks: list[int], qmask: int) -> int:
    out = 0
    for i in iter_bits(qmask):
        out |= class_masks[i]
    return out


def _kernel_search(g: Graph, a: int, b: int, mode: int, size_cap: int = 1 << 60):
    qadj, qw, qind, units, caps, masks = _quotient_arrays(g)
    best_f, best_qmask, best_size = _kernels.scatter_search(
        qadj, qw, qind, units, caps, a, b, mode, size_cap
    )
    return int(best_f), _expand_class_mask(masks, int(best_qmask)), int(best_size)


# -- cheap witnesses and the witness pool ------------------------------------


def _surplus(g: Graph, s_mask: int, a: int, b: int) -> Optional[int]:
    """a*omega(G-S) - b*|S| when S is a proper cutset, else None."""
    full = g.vertex_mask()
    s_mask &= full
    alive = full & ~s_mask
    if s_mask == 0 or alive == 0:
        return None
    omega = count_components(g.rows, alive)
    if omega < 2:
        return None
    return a * omega - b * s_mask.bit_count()


def _heuristic_violator(g: Graph, a: int, b: int) -> Optional[int]:
    """Try vertex and edge neighborhoods as cutsets; first violator wins."""
    rows = g.rows
    for v in range(g.n):
        f = _surplus(g, rows[v], a, b)
        if f is not None and f > 0:
            return rows[v]
    for u, v in g.edges():
        s = (rows[u] | rows[v]) & ~(1 << u) & ~(1 << v)
        f = _surplus(g, s, a, b)
        if f is not None and f > 0:
            return s
    return None


class ViolatorPool:
    """Most-recently-used cache of violating cutsets.

    Edge criticality checks during pruning hit the same separators over and
    over; re-evaluating a handful of cached masks is far cheaper than any
    fresh search.
    """

    def __init__(self, cap: int = 48):
        self.cap = cap
        self._masks: list[int] = []

    def add(self, mask: int):
        if mask in self._masks:
            self._masks.remove(mask)
        self._masks.insert(0, mask)
        del self._masks[self.cap :]

    def find(self, g: Graph, a: int, b: int) -> Optional[int]:
        if not self._masks:
            return None
        cand = np.array(self._masks, dtype=np.uint64)
        rows = np.array(g.rows, dtype=np.uint64)
        idx = int(
            _kernels.first_violating(rows, np.uint64(g.vertex_mask()), cand, a, b)
        )
        if idx < 0:
            return None
        mask = self._masks[idx]
        self.add(mask)
        return mask


# -- decisions ---------------------------------------------------------------


def decide_t_tough(
    g: Graph, t: Rational, pool: Optional[ViolatorPool] = None
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """(is t-tough, violating cutset if not).

    Disconnected graphs are never t-tough for t > 0; complete graphs
    always are.
    """
    if not t > ZERO:
        raise PreconditionError(f"t must be positive, got {t}")
    if g.is_complete():
        return True, None
    if not g.is_connected():
        # the empty set already leaves >= 2 components
        return False, ()
    if t.is_infinite:
        # only complete graphs are infinitely tough; the neighborhood of a
        # minimum-degree vertex is a genuine cutset witness
        v = min(range(g.n), key=g.degree)
        return False, bits(g.rows[v])
    a, b = t.num, t.den
    if pool is not None:
        hit = pool.find(g, a, b)
        if hit is not None:
            return False, bits(hit)
    s = _heuristic_violator(g, a, b)
    if s is not None:
        if pool is not None:
            pool.add(s)
        return False, bits(s)
    if g.n <= SMALL_SCAN_LIMIT:
        full = g.vertex_mask()
        for s_mask in range(1, full):
            f = _surplus(g, s_mask, a, b)
            if f is not None and f > 0:
                if pool is not None:
                    pool.add(s_mask)
                return False, bits(s_mask)
        return True, None
    best_f, mask, _ = _kernel_search(g, a, b, mode=0)
    if best_f > 0:
        if pool is not None:
            pool.add(mask)
        return False, bits(mask)
    return True, None


def is_t_tough(g: Graph, t: Rational) -> bool:
    """Whether omega(G-S) <= |S|/t for every cutset S."""
    return decide_t_tough(g, t)[0]


def compare_toughness(g: Graph, t: Rational) -> tuple[int, Optional[tuple[int, ...]]]:
    """Sign of tau(G) - t with a witness.

    Returns (-1, violating cutset), (0, tough set achieving ratio t), or
    (+1, None). Complete graphs compare +1 against any finite t.
    """
    if not t > ZERO or t.is_infinite:
        raise PreconditionError("t must be a positive finite rational")
    if g.is_complete():
        return 1, None
    if not g.is_connected():
        return -1, ()
    a, b = t.num, t.den
    if g.n <= SMALL_SCAN_LIMIT:
        cert = toughness_exact(g)
        if cert.value < t:
            # any tough set violates t-toughness
            return -1, cert.tough_sets[0]
        if cert.value == t:
            return 0, cert.tough_sets[0]
        return 1, None
    s = _heuristic_violator(g, a, b)
    if s is not None:
        return -1, bits(s)
    best_f, mask, _ = _kernel_search(g, a, b, mode=1)
    if best_f > 0:
        return -1, bits(mask)
    if best_f == 0:
        return 0, bits(mask)
    return 1, None


# -- exact value --------------------------------------------------------------


@lru_cache(maxsize=16384)
def _scan_cutsets(g: Graph) -> Optional[tuple[int, int, tuple[int, ...]]]:
    """(size, omega, argmin masks) of the minimum-ratio cutsets, or None
    when no cutset exists. Skips dominated cutsets (a vertex touching
    fewer than two components), which no minimum-ratio cutset contains."""
    rows = g.rows
    full = g.vertex_mask()
    best: Optional[tuple[int, int]] = None
    argmins: list[int] = []
    for s_mask in range(1, full):
        alive = full & ~s_mask
        comps = component_masks(rows, alive)
        if len(comps) < 2:
            continue
        dominated = False
        for v in iter_bits(s_mask):
            touched = 0
            row = rows[v]
            for c in comps:
                if row & c:
                    touched += 1
                    if touched == 2:
                        break
            if touched < 2:
                dominated = True
                break
        if dominated:
            continue
        size = s_mask.bit_count()
        omega = len(comps)
        if best is None or size * best[1] < best[0] * omega:
            best = (size, omega)
            argmins = [s_mask]
        elif size * best[1] == best[0] * omega:
            argmins.append(s_mask)
    if best is None:
        return None
    return best[0], best[1], tuple(argmins)


def _stern_brocot_tau(g: Graph) -> tuple[Rational, tuple[int, ...]]:
    """Exact tau of a connected non-complete graph by descending the
    Stern-Brocot tree on surplus signs."""
    lo = (0, 1)
    hi = (1, 0)
    for _ in range(8 * g.n + 16):
        a, b = lo[0] + hi[0], lo[1] + hi[1]
        s = _heuristic_violator(g, a, b)
        if s is not None:
            hi = (a, b)
            continue
        best_f, mask, _ = _kernel_search(g, a, b, mode=1)
        if best_f > 0:
            hi = (a, b)
        elif best_f == 0:
            return Rational(a, b), bits(mask)
        else:
            lo = (a, b)
    raise RuntimeError("Stern-Brocot descent did not converge; this is a bug")


def toughness_naive(g: Graph, limit: int = 20) -> ToughnessCertificate:
    """Reference oracle: unpruned scan over all 2^n vertex subsets.

    Kept deliberately independent of the production search so the two can
    be cross-checked; refuses graphs above `limit` vertices.
    """
    if g.n > limit:
        raise ResourceBudgetError(
            f"naive scan over 2^{g.n} subsets refused", required=g.n, budget=limit
        )
    if g.is_complete():
        return ToughnessCertificate(INFINITY, ())
    rows = g.rows
    full = g.vertex_mask()
    if count_components(rows, full) > 1:
        return ToughnessCertificate(ZERO, ((),), disconnected=True)
    best: Optional[tuple[int, int]] = None
    argmins: list[int] = []
    for s_mask in range(1, full):
        alive = full & ~s_mask
        omega = count_components(rows, alive)
        if omega < 2:
            continue
        size = s_mask.bit_count()
        if best is None or size * best[1] < best[0] * omega:
            best = (size, omega)
            argmins = [s_mask]
        elif size * best[1] == best[0] * omega:
            argmins.append(s_mask)
    assert best is not None
    sets = tuple(sorted(bits(m) for m in argmins))
    return ToughnessCertificate(Rational(best[0], best[1]), sets)


@lru_cache(maxsize=16384)
def toughness_exact(g: Graph) -> ToughnessCertificate:
    """Exact toughness certificate.

    Complete graphs (including K1 and K2, which have no cutset) get
    infinity; disconnected graphs get 0 with the empty-set witness and the
    disconnected flag.
    """
    if g.is_complete():
        return ToughnessCertificate(INFINITY, ())
    if not g.is_connected():
        return ToughnessCertificate(ZERO, ((),), disconnected=True)
    if g.n <= SMALL_SCAN_LIMIT:
        size, omega, argmins = _scan_cutsets(g)
        sets = tuple(sorted(bits(m) for m in argmins))
        return ToughnessCertificate(Rational(size, omega), sets)
    value, tough_set = _stern_brocot_tau(g)
    return ToughnessCertificate(value, (tough_set,))


def all_tough_sets(g: Graph, work_limit: int = 2_000_000) -> list[tuple[int, ...]]:
    """Every cutset achieving the toughness minimum, lexicographically sorted."""
    if g.is_complete():
        raise PreconditionError("complete graphs have no cutsets, hence no tough sets")
    if not g.is_connected():
        raise PreconditionError("tough sets are defined for connected graphs only")
    if g.n <= SMALL_SCAN_LIMIT:
        _, _, argmins = _scan_cutsets(g)
        return sorted(bits(m) for m in argmins)
    # tough sets never split twin classes, so enumerate class unions with
    # |S| = tau * omega <= tau * alpha(G)
    cert = toughness_exact(g)
    p, q = cert.value.num, cert.value.den
    alpha, _ = independence_in_mask(g.rows, g.vertex_mask())
    cap = (p * alpha) // q
    _, _, _, _, _, masks = _quotient_arrays(g)
    weights = [m.bit_count() for m in masks]
    found: list[tuple[int, ...]] = []
    nodes = 0

    def rec(idx: int, s_mask: int, s_w: int):
        nonlocal nodes
        nodes += 1
        if nodes > work_limit:
            raise ResourceBudgetError(
                "tough-set enumeration exceeded its work budget",
                budget=work_limit,
            )
        if idx == len(masks):
            if s_mask:
                f = _surplus(g, s_mask, p, q)
                if f == 0:
                    found.append(bits(s_mask))
            return
        if s_w + weights[idx] <= cap:
            rec(idx + 1, s_mask | masks[idx], s_w + weights[idx])
        rec(idx + 1, s_mask, s_w)

    rec(0, 0, 0)
    return sorted(found)


def toughness_clawfree(g: Graph) -> Rational:
    """tau = kappa/2 for noncomplete claw-free graphs."""
    if g.is_complete():
        raise PreconditionError(
            "the claw-free shortcut needs a noncomplete graph", witness="complete"
        )
    claw = find_claw(g)
    if claw is not None:
        raise PreconditionError(
            f"graph contains a claw centered at {claw[0]} with leaves {claw[1]}",
            witness=claw,
        )
    return Rational(vertex_connectivity(g), 2)


# -- violating-cutset extraction ----------------------------------------------


def find_violating_cutset(g: Graph, t: Rational) -> Optional[tuple[int, ...]]:
    """Any cutset S with omega(G-S) > |S|/t, or None if the graph is t-tough."""
    ok, witness = decide_t_tough(g, t)
    return None if ok else witness


def smallest_violating_cutset(
    g: Graph, t: Rational
) -> Optional[tuple[tuple[int, ...], bool]]:
    """A minimum-size violating cutset and whether it is exactly the
    lexicographically first one of that size.

    Small graphs enumerate subsets by size then lexicographic order, so the
    answer is canonical. Large graphs get the minimum size from the
    branch-and-bound kernel; the lexicographic refinement is skipped when
    the candidate count is out of budget, in which case the flag is False.
    """
    if not t > ZERO:
        raise PreconditionError(f"t must be positive, got {t}")
    if g.is_complete():
        return None
    if not g.is_connected():
        return ((), True)
    a, b = t.num, t.den
    if g.n <= SMALL_SCAN_LIMIT:
        for size in range(1, g.n):
            for combo in combinations(range(g.n), size):
                s_mask = 0
                for v in combo:
                    s_mask |= 1 << v
                f = _surplus(g, s_mask, a, b)
                if f is not None and f > 0:
                    return combo, True
        return None
    # prime the incumbent with any witness so the minimum-size search
    # starts with a tight cap
    tough, any_witness = decide_t_tough(g, t)
    if tough:
        return None
    cap = len(any_witness) if any_witness else g.n
    best_f, mask, best_size = _kernel_search(g, a, b, mode=2, size_cap=cap)
    if best_size < 0:
        # nothing beat the primed incumbent, so it already has minimum size
        best_size = cap
        mask = 0
        for v in any_witness:
            mask |= 1 << v
    # lexicographic refinement at the now-known minimum size
    from math import comb

    if comb(g.n, best_size) <= LEX_REFINE_LIMIT:
        rows = np.array(g.rows, dtype=np.uint64)
        hit = int(
            _kernels.first_violating_ksubset(rows, g.n, best_size, a, b)
        )
        if hit:
            return bits(hit), True
    return bits(mask), False
