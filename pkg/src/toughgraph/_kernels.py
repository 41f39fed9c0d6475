"""JIT-compiled search kernels.

Two hot problems live here:

* scatter_search: branch and bound over cutsets S maximizing the surplus
  a*omega(G-S) - b*|S| (positive iff the graph is not a/b-tough). It runs
  on a twin-class quotient: vertices with identical closed or open
  neighborhoods are grouped, because dropping part of such a class from a
  cutset always improves the cutset ratio, so optimal cutsets take each
  class entirely or not at all. Class weights make component counts exact:
  a kept false-twin class with no kept neighbor contributes one component
  per member.

* canonical_form: the lexicographically minimal adjacency bit-string of a
  small graph over all vertex permutations, used to deduplicate the
  exhaustive census up to isomorphism.

Everything is uint64 bitmask arithmetic, so graphs are capped at 64
vertices package-wide.
"""

import numpy as np
from numba import njit

U0 = np.uint64(0)
U1 = np.uint64(1)

# bit-index lookup: 2 is a primitive root mod 67, so (1 << k) % 67 is a
# perfect hash of k for k in 0..63
_BIT_INDEX = np.full(67, -1, dtype=np.int64)
for _k in range(64):
    _BIT_INDEX[(1 << _k) % 67] = _k


@njit("int64(uint64)", cache=True, inline="always")
def _bit_index(b):
    return _BIT_INDEX[b % np.uint64(67)]


@njit("uint64(uint64[:], uint64, uint64)", cache=True)
def _flood(adj, alive, seed):
    comp = U0
    frontier = seed
    while frontier != U0:
        comp |= frontier
        nxt = U0
        f = frontier
        while f != U0:
            b = f & (U0 - f)
            f ^= b
            nxt |= adj[_bit_index(b)]
        frontier = nxt & alive & ~comp
    return comp


@njit("int64(uint64[:], uint64)", cache=True)
def count_components(adj, alive):
    cnt = 0
    rem = alive
    while rem != U0:
        comp = _flood(adj, alive, rem & (U0 - rem))
        cnt += 1
        rem &= ~comp
    return cnt


@njit("int64(uint64[:], int64[:], uint8[:], uint64)", cache=True)
def _weighted_components(qadj, qw, qind, kept):
    """Component count of the quotient subgraph on `kept`, where an
    isolated independent class of weight w stands for w real components."""
    total = 0
    rem = kept
    while rem != U0:
        seed = rem & (U0 - rem)
        comp = _flood(qadj, kept, seed)
        if comp == seed:
            v = _bit_index(seed)
            if qind[v] == 1:
                total += qw[v]
            else:
                total += 1
        else:
            total += 1
        rem &= ~comp
    return total


@njit(
    "Tuple((int64, uint64, int64))"
    "(uint64[:], int64[:], uint8[:], uint64[:], int64[:], int64, int64, int64, int64)",
    cache=True,
)
def scatter_search(qadj, qw, qind, unit_masks, unit_caps, a, b, mode, size_cap):
    """Branch and bound over quotient-class cutsets S.

    Objective f(S) = a * omega(G - S) - b * |S| over all S whose removal
    leaves at least 2 components.

    mode 0: decide whether max f > 0; returns early on the first positive
            leaf, prunes subtrees with bound <= 0. Only the sign of the
            result is meaningful when <= 0.
    mode 1: exact sign of max f: prunes only bound < 0 so zero-surplus
            cutsets stay reachable; still returns early on a positive leaf.
            best_f == 0 on return certifies max f == 0 (a tough set at
            ratio a/b); best_f < 0 certifies max f < 0.
    mode 2: minimum-weight S with f(S) > 0; size_cap primes the incumbent.

    Component counts are maintained incrementally: comp_id labels each kept
    class, contrib[] holds the weighted count of each live component (an
    isolated independent class stands for one component per member), and
    the whole state is snapshotted per depth so backtracking is a copy.

    Returns (best_f, best_mask, best_size); best_size is -1 in mode 2 when
    no violating cutset exists (or none under size_cap).
    """
    q = len(qw)
    nunits = len(unit_caps)
    fullq = (U1 << np.uint64(q)) - U1
    dec = np.full(q, -1, dtype=np.int8)
    comp_id = np.full(q, -1, dtype=np.int8)
    contrib = np.zeros(q, dtype=np.int64)
    # per-depth snapshots for O(q) backtracking
    comp_id_stack = np.empty((q + 1, q), dtype=np.int8)
    contrib_stack = np.empty((q + 1, q), dtype=np.int64)
    m_stack = np.empty(q + 1, dtype=np.int64)
    interior_stack = np.empty(q + 1, dtype=np.uint64)
    sw_stack = np.empty(q + 1, dtype=np.int64)
    smask_stack = np.empty(q + 1, dtype=np.uint64)
    kept_stack = np.empty(q + 1, dtype=np.uint64)

    def save(dd, m_opt, interior, s_w, s_mask, kept_mask):
        for i in range(q):
            comp_id_stack[dd, i] = comp_id[i]
            contrib_stack[dd, i] = contrib[i]
        m_stack[dd] = m_opt
        interior_stack[dd] = interior
        sw_stack[dd] = s_w
        smask_stack[dd] = s_mask
        kept_stack[dd] = kept_mask

    def restore(dd):
        for i in range(q):
            comp_id[i] = comp_id_stack[dd, i]
            contrib[i] = contrib_stack[dd, i]

    s_mask = U0
    kept_mask = U0
    s_w = 0
    m_opt = 0
    interior = fullq
    best_f = np.int64(-(1 << 62))
    best_mask = U0
    best_size = size_cap if mode == 2 else np.int64(1 << 62)
    found = False
    d = 0
    save(0, m_opt, interior, s_w, s_mask, kept_mask)
    while d >= 0:
        if dec[d] >= 0:
            # roll the state back to how it was on entering this depth
            restore(d)
            m_opt = m_stack[d]
            interior = interior_stack[d]
            s_w = sw_stack[d]
            s_mask = smask_stack[d]
            kept_mask = kept_stack[d]
        dec[d] += 1
        if dec[d] > 1:
            dec[d] = -1
            d -= 1
            continue
        dbit = U1 << np.uint64(d)
        if dec[d] == 0:
            s_mask |= dbit
            s_w += qw[d]
            interior &= ~dbit
            if mode == 2 and s_w >= best_size:
                continue
        else:
            # keep class d: merge it with every adjacent kept component
            kept_mask |= dbit
            interior &= ~dbit
            interior &= ~qadj[d]
            merged = 0
            nb = qadj[d] & kept_mask & ~dbit
            while nb != U0:
                cb = nb & (U0 - nb)
                nb ^= cb
                cid = comp_id[_bit_index(cb)]
                if cid != d and contrib[cid] >= 0:
                    merged += contrib[cid]
                    contrib[cid] = -1
                    for i in range(q):
                        if comp_id[i] == cid:
                            comp_id[i] = d
            comp_id[d] = d
            if merged > 0 or (qadj[d] & kept_mask & ~dbit) != U0:
                contrib[d] = 1
                m_opt += 1 - merged
            else:
                contrib[d] = qw[d] if qind[d] == 1 else 1
                m_opt += contrib[d]
        if d + 1 == q:
            # every class decided: evaluate the cutset
            if kept_mask != U0 and s_mask != U0 and m_opt >= 2:
                f = a * m_opt - b * s_w
                if mode == 2:
                    if f > 0 and s_w < best_size:
                        best_size = s_w
                        best_mask = s_mask
                        best_f = f
                        found = True
                elif f > best_f:
                    best_f = f
                    best_mask = s_mask
                    best_size = s_w
                    if best_f > 0:
                        return best_f, best_mask, best_size
            continue
        # optimistic bound: kept components can only merge, and new
        # components can only form from interior free classes (no kept
        # neighbor), at most one per clique-cover unit touching them
        # (a full independent class: one per member)
        funits = 0
        for j in range(nunits):
            if unit_masks[j] & interior != U0:
                funits += unit_caps[j]
        ub = a * (m_opt + funits) - b * s_w
        if mode == 1:
            if ub < 0:
                continue
        else:
            if ub <= 0:
                continue
        if mode != 2 and ub <= best_f:
            continue
        d += 1
        dec[d] = -1
        save(d, m_opt, interior, s_w, s_mask, kept_mask)
    if mode == 2 and not found:
        return best_f, best_mask, np.int64(-1)
    return best_f, best_mask, best_size


@njit("int64(uint64[:], uint64, uint64[:], int64, int64)", cache=True)
def first_violating(rows, full, cand_masks, a, b):
    """Index of the first candidate cutset S with a*omega(G-S) - b*|S| > 0
    and omega >= 2, or -1. Used to recheck cached witnesses cheaply."""
    for i in range(len(cand_masks)):
        s = cand_masks[i] & full
        if s == U0:
            continue
        alive = full & ~s
        if alive == U0:
            continue
        size = 0
        m = s
        while m != U0:
            m &= m - U1
            size += 1
        omega = count_components(rows, alive)
        if omega >= 2 and a * omega - b * size > 0:
            return i
    return -1


@njit("uint64(uint64[:], int64, int64, int64, int64)", cache=True)
def first_violating_ksubset(rows, n, k, a, b):
    """First size-k vertex subset, in lexicographic order, whose removal
    violates a/b-toughness; 0 when none does."""
    if k < 1 or k >= n:
        return U0
    full = (U1 << np.uint64(n)) - U1
    idx = np.empty(k, dtype=np.int64)
    for i in range(k):
        idx[i] = i
    while True:
        s = U0
        for i in range(k):
            s |= U1 << np.uint64(idx[i])
        alive = full & ~s
        omega = count_components(rows, alive)
        if omega >= 2 and a * omega - b * k > 0:
            return s
        # advance to the next combination
        pos = k - 1
        while pos >= 0 and idx[pos] == n - k + pos:
            pos -= 1
        if pos < 0:
            return U0
        idx[pos] += 1
        for i in range(pos + 1, k):
            idx[i] = idx[i - 1] + 1


@njit("uint64(uint64, int64, int8[:, :])", cache=True)
def canonical_form(bitstring, n, perms):
    """Lexicographically minimal adjacency bit-string over all vertex
    permutations.

    Pair (i, j), i < j, occupies position j(j-1)/2 + i counted from the
    most significant end, so smaller integers are lexicographically
    smaller strings and ascending integer order is ascending string order.
    """
    nbits = n * (n - 1) // 2
    best = bitstring
    for p in range(perms.shape[0]):
        val = U0
        pos = nbits
        abandon = False
        for j in range(1, n):
            for i in range(j):
                pos -= 1
                u = perms[p, i]
                v = perms[p, j]
                if u > v:
                    u, v = v, u
                src = nbits - 1 - (v * (v - 1) // 2 + u)
                if (bitstring >> np.uint64(src)) & U1 != U0:
                    val |= U1 << np.uint64(pos)
                # val has only bits >= pos set, so this compares prefixes;
                # a greater prefix can never become the minimum
                if (val >> np.uint64(pos)) > (best >> np.uint64(pos)):
                    abandon = True
                    break
            if abandon:
                break
        if not abandon and val < best:
            best = val
    return best
