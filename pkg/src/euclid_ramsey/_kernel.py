"""Compiled backtracking core for avoidance search.

State is kept in flat arrays so the search can run under numba.  A *copy*
is one placement of the target configuration, stored as a row of cell
indices; ``cnt[m, c]`` counts cells of copy ``m`` assigned color ``c`` and
``nfree[m]`` counts its unassigned cells.
"""
import numpy as np
from numba import njit

SAT = 1
UNSAT = 0
BUDGET = -1


@njit(cache=True)
def _propagate(qh, qt, queue, dom, val, cnt, nfree, used, copies, cstart, clist,
               tv, td, tk, tl, props, forbid):
    P = copies.shape[1]
    ok = True
    while qh < qt:
        v = queue[qh]
        qh += 1
        d = dom[v]
        c = 0
        while not (d >> c) & 1:
            c += 1
        val[v] = c
        used[c] += 1
        tv[tl] = v
        td[tl] = c
        tk[tl] = 1
        tl += 1
        props += 1
        for q in range(cstart[v], cstart[v + 1]):
            m = clist[q]
            nfree[m] -= 1
            cnt[m, c] += 1
        bit = 1 << c
        for q in range(cstart[v], cstart[v + 1]):
            m = clist[q]
            if cnt[m, c] == P:
                ok = False
                break
            if forbid and cnt[m, c] == P - 1 and nfree[m] == 1:
                u = -1
                for j in range(P):
                    if val[copies[m, j]] == -1:
                        u = copies[m, j]
                        break
                if dom[u] & bit:
                    tv[tl] = u
                    td[tl] = dom[u]
                    tk[tl] = 0
                    tl += 1
                    dom[u] &= ~bit
                    if dom[u] == 0:
                        ok = False
                        break
                    if dom[u] & (dom[u] - 1) == 0:
                        queue[qt] = u
                        qt += 1
        if not ok:
            break
    return ok, tl, props


@njit(cache=True)
def _undo(mark, tl, tv, td, tk, dom, val, cnt, nfree, used, cstart, clist):
    while tl > mark:
        tl -= 1
        u = tv[tl]
        if tk[tl] == 1:
            c = td[tl]
            for q in range(cstart[u], cstart[u + 1]):
                m = clist[q]
                nfree[m] += 1
                cnt[m, c] -= 1
            val[u] = -1
            used[c] -= 1
        else:
            dom[u] = td[tl]
    return tl


@njit(cache=True)
def _pattern_le(val, row):
    """Compare the color pattern of ``row`` with that of its reversal.

    Patterns rename colors by first occurrence, so the test is invariant
    under color permutations.  Returns False only when the row is complete
    and its pattern is lexicographically larger.
    """
    w = row.shape[0]
    for i in range(w):
        if val[row[i]] == -1:
            return True
    fwd = np.full(64, -1, np.int64)
    bwd = np.full(64, -1, np.int64)
    nf = 0
    nb = 0
    for i in range(w):
        a = val[row[i]]
        b = val[row[w - 1 - i]]
        if fwd[a] == -1:
            fwd[a] = nf
            nf += 1
        if bwd[b] == -1:
            bwd[b] = nb
            nb += 1
        if fwd[a] < bwd[b]:
            return True
        if fwd[a] > bwd[b]:
            return False
    return True


@njit(cache=True)
def search(ncell, k, copies, cstart, clist, order, dynamic, noise, fix_first, canon,
           reflect_row, init, budget, split_depth, frontier, forbid):
    """Depth-first search for a coloring with no monochromatic copy.

    Returns ``(status, val, nodes, props, nfrontier)``.  With
    ``split_depth > 0`` nothing is solved: every consistent state reached
    with ``split_depth`` decisions (or fully assigned earlier) is copied
    into ``frontier`` in search order and the status is UNSAT.  With
    ``forbid`` off, copies are only checked once complete (no look-ahead).
    """
    M, P = copies.shape
    full = (1 << k) - 1
    dom = np.full(ncell, full, np.int64)
    val = np.full(ncell, -1, np.int64)
    cnt = np.zeros((M, k), np.int64)
    nfree = np.full(M, P, np.int64)
    used = np.zeros(k, np.int64)
    cap = ncell * (k + 2) + 8
    tv = np.empty(cap, np.int64)
    td = np.empty(cap, np.int64)
    tk = np.empty(cap, np.int64)
    tl = 0
    queue = np.empty(ncell + 1, np.int64)
    dv = np.empty(ncell + 1, np.int64)
    dcand = np.empty(ncell + 1, np.int64)
    dmark = np.empty(ncell + 1, np.int64)
    depth = 0
    nodes = 0
    props = 0
    nfront = 0
    reflect = reflect_row.shape[0] > 0

    qt = 0
    for v in range(ncell):
        c = init[v]
        if c >= 0:
            if not (dom[v] >> c) & 1:
                return UNSAT, val, nodes, props, nfront
            tv[tl] = v
            td[tl] = dom[v]
            tk[tl] = 0
            tl += 1
            dom[v] = 1 << c
            queue[qt] = v
            qt += 1
    ok, tl, props = _propagate(0, qt, queue, dom, val, cnt, nfree, used, copies, cstart, clist,
                               tv, td, tk, tl, props, forbid)
    if ok and reflect:
        ok = _pattern_le(val, reflect_row)
    if not ok:
        return UNSAT, val, nodes, props, nfront

    choose = True
    while True:
        if choose:
            best = -1
            if dynamic:
                bkey = -1
                for v in range(ncell):
                    if val[v] != -1:
                        continue
                    s = 0
                    for q in range(cstart[v], cstart[v + 1]):
                        m = clist[q]
                        f = nfree[m]
                        if f >= 2 and f < P:
                            for c in range(k):
                                if cnt[m, c] == P - f:
                                    s += 1 << (2 * (P - f))
                                    break
                    key = s * 1024 + noise[v]
                    if key > bkey:
                        bkey = key
                        best = v
            else:
                for i in range(ncell):
                    if val[order[i]] == -1:
                        best = order[i]
                        break
            if best == -1 or (split_depth > 0 and depth == split_depth):
                if split_depth == 0:
                    return SAT, val, nodes, props, nfront
                for i in range(ncell):
                    frontier[nfront, i] = val[i]
                nfront += 1
                ok = False
            else:
                v = best
                allowed = full
                if canon:
                    allowed = 0
                    fresh = -1
                    for c in range(k):
                        if used[c] > 0:
                            allowed |= 1 << c
                        elif fresh == -1:
                            fresh = c
                    if fresh >= 0:
                        allowed |= 1 << fresh
                elif fix_first:
                    anyused = False
                    for c in range(k):
                        if used[c] > 0:
                            anyused = True
                    if not anyused:
                        allowed = 1
                dv[depth] = v
                dcand[depth] = dom[v] & allowed
                dmark[depth] = tl
                depth += 1
                ok = dcand[depth - 1] != 0
        if ok or not choose:
            v = dv[depth - 1]
            cand = dcand[depth - 1]
            c = 0
            while not (cand >> c) & 1:
                c += 1
            dcand[depth - 1] = cand & ~(1 << c)
            nodes += 1
            if nodes > budget:
                return BUDGET, val, nodes, props, nfront
            tv[tl] = v
            td[tl] = dom[v]
            tk[tl] = 0
            tl += 1
            dom[v] = 1 << c
            queue[0] = v
            ok, tl, props = _propagate(0, 1, queue, dom, val, cnt, nfree, used, copies, cstart,
                                       clist, tv, td, tk, tl, props, forbid)
            if ok and reflect:
                ok = _pattern_le(val, reflect_row)
        if ok:
            choose = True
            continue
        # backtrack to the deepest decision with an untried color
        while depth > 0:
            tl = _undo(dmark[depth - 1], tl, tv, td, tk, dom, val, cnt, nfree, used, cstart, clist)
            if dcand[depth - 1] != 0:
                break
            depth -= 1
        if depth == 0:
            return UNSAT, val, nodes, props, nfront
        choose = False
