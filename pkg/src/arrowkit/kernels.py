"""Hot search kernels with a numba fast path and a numpy fallback.

Set ARROWKIT_NO_NUMBA=1 to skip jit compilation; the same DFS code then runs
interpreted and the exhaustive oracle switches to a vectorised numpy sweep.
Both backends are exact and return identical results.

Kernel conventions:

* edges are 0..m-1, colours 1..q, domains are bitmasks with bit c-1 for colour c;
* forbidden copies arrive as a CSR array of edge ids plus a colour per copy;
* a full colouring is encoded as an int with edge 0 the most significant
  base-q digit, so ascending code order is lexicographic order on colour
  tuples and digit+1 is the colour.
"""

from __future__ import annotations

import os

import numpy as np

_env = os.environ.get("ARROWKIT_NO_NUMBA", "")
_want_numba = _env in ("", "0")

HAS_NUMBA = False
if _want_numba:
    try:
        from numba import njit

        HAS_NUMBA = True
    except ImportError:
        pass

STATUS_EXHAUSTED = 0
STATUS_WITNESS = 1
STATUS_BUDGET = 2


def backend_name():
    return "numba" if HAS_NUMBA else "numpy"


def _dfs_impl(m, q, copy_ptr, copy_edges, copy_colour,
              inc_ptr, inc_copies, init_domain, pin_e, pin_c,
              same_ptr, same_to, diff_ptr, diff_to,
              smaller_ptr, smaller_to, budget):
    nc = copy_colour.shape[0]
    assignment = np.zeros(m, np.int64)
    domain = init_domain.copy()
    cnt = np.zeros(nc, np.int64)
    used = np.zeros(q + 1, np.int64)

    cap_dom = m * q + 16
    trail_dom_e = np.empty(cap_dom, np.int64)
    trail_dom_m = np.empty(cap_dom, np.int64)
    n_dom = 0
    cap_cnt = copy_edges.shape[0] + 16
    trail_cnt = np.empty(cap_cnt, np.int64)
    n_cnt = 0
    trail_asg = np.empty(m + 16, np.int64)
    n_asg = 0

    qcap = 4 * m + same_to.shape[0] + diff_to.shape[0] + 256
    que_e = np.empty(qcap, np.int64)
    que_c = np.empty(qcap, np.int64)
    qhead = 0
    qtail = 0
    for i in range(pin_e.shape[0]):
        que_e[qtail] = pin_e[i]
        que_c[qtail] = pin_c[i]
        qtail += 1

    st_edge = np.empty(m + 2, np.int64)
    st_mask = np.empty(m + 2, np.int64)
    st_dom = np.empty(m + 2, np.int64)
    st_cnt = np.empty(m + 2, np.int64)
    st_asg = np.empty(m + 2, np.int64)
    level = 0

    nodes = 0
    props = 0

    while True:
        # --- propagate queued assignments to a fixpoint or a conflict
        conflict = False
        while qhead < qtail:
            e = que_e[qhead]
            c = que_c[qhead]
            qhead += 1
            if assignment[e] != 0:
                if assignment[e] != c:
                    conflict = True
                    break
                continue
            if (domain[e] >> (c - 1)) & 1 == 0:
                conflict = True
                break
            assignment[e] = c
            trail_asg[n_asg] = e
            n_asg += 1
            used[c] += 1
            props += 1
            if domain[e] != (1 << (c - 1)):
                trail_dom_e[n_dom] = e
                trail_dom_m[n_dom] = domain[e]
                n_dom += 1
                domain[e] = 1 << (c - 1)
            for ii in range(same_ptr[e], same_ptr[e + 1]):
                f = same_to[ii]
                if assignment[f] == 0:
                    que_e[qtail] = f
                    que_c[qtail] = c
                    qtail += 1
                elif assignment[f] != c:
                    conflict = True
                    break
            if conflict:
                break
            for ii in range(diff_ptr[e], diff_ptr[e + 1]):
                f = diff_to[ii]
                if assignment[f] == c:
                    conflict = True
                    break
                if assignment[f] == 0 and ((domain[f] >> (c - 1)) & 1) == 1:
                    trail_dom_e[n_dom] = f
                    trail_dom_m[n_dom] = domain[f]
                    n_dom += 1
                    domain[f] &= ~(1 << (c - 1))
                    props += 1
                    if domain[f] == 0:
                        conflict = True
                        break
                    dm = domain[f]
                    if dm & (dm - 1) == 0:
                        cc = 1
                        while (1 << (cc - 1)) != dm:
                            cc += 1
                        que_e[qtail] = f
                        que_c[qtail] = cc
                        qtail += 1
            if conflict:
                break
            for ii in range(inc_ptr[e], inc_ptr[e + 1]):
                ci = inc_copies[ii]
                if copy_colour[ci] != c:
                    continue
                cnt[ci] += 1
                trail_cnt[n_cnt] = ci
                n_cnt += 1
                size = copy_ptr[ci + 1] - copy_ptr[ci]
                if cnt[ci] == size:
                    conflict = True
                    break
                if cnt[ci] == size - 1:
                    last = -1
                    for jj in range(copy_ptr[ci], copy_ptr[ci + 1]):
                        f = copy_edges[jj]
                        if assignment[f] != c:
                            last = f
                            break
                    if last >= 0 and assignment[last] == 0 and ((domain[last] >> (c - 1)) & 1) == 1:
                        trail_dom_e[n_dom] = last
                        trail_dom_m[n_dom] = domain[last]
                        n_dom += 1
                        domain[last] &= ~(1 << (c - 1))
                        props += 1
                        if domain[last] == 0:
                            conflict = True
                            break
                        dm = domain[last]
                        if dm & (dm - 1) == 0:
                            cc = 1
                            while (1 << (cc - 1)) != dm:
                                cc += 1
                            que_e[qtail] = last
                            que_c[qtail] = cc
                            qtail += 1
            if conflict:
                break

        if not conflict:
            e = -1
            for i in range(m):
                if assignment[i] == 0:
                    e = i
                    break
            if e < 0:
                return STATUS_WITNESS, assignment, nodes, props
            nodes += 1
            if nodes > budget:
                return STATUS_BUDGET, assignment, nodes, props
            level += 1
            st_edge[level] = e
            st_mask[level] = domain[e]
            st_dom[level] = n_dom
            st_cnt[level] = n_cnt
            st_asg[level] = n_asg

        # --- pick the next branch, unwinding exhausted frames
        while True:
            if conflict:
                if level == 0:
                    return STATUS_EXHAUSTED, assignment, nodes, props
                while n_dom > st_dom[level]:
                    n_dom -= 1
                    domain[trail_dom_e[n_dom]] = trail_dom_m[n_dom]
                while n_cnt > st_cnt[level]:
                    n_cnt -= 1
                    cnt[trail_cnt[n_cnt]] -= 1
                while n_asg > st_asg[level]:
                    n_asg -= 1
                    ea = trail_asg[n_asg]
                    used[assignment[ea]] -= 1
                    assignment[ea] = 0
                conflict = False
            mask = st_mask[level]
            chosen = 0
            while mask != 0:
                low = mask & -mask
                c = 1
                while (1 << (c - 1)) != low:
                    c += 1
                mask ^= low
                ok = True
                if used[c] == 0:
                    # a fresh colour waits until all smaller interchangeable
                    # colours have appeared somewhere
                    for ii in range(smaller_ptr[c], smaller_ptr[c + 1]):
                        if used[smaller_to[ii]] == 0:
                            ok = False
                            break
                if ok:
                    chosen = c
                    break
            st_mask[level] = mask
            if chosen == 0:
                level -= 1
                conflict = True
                if level < 0:
                    return STATUS_EXHAUSTED, assignment, nodes, props
                continue
            qhead = 0
            qtail = 1
            que_e[0] = st_edge[level]
            que_c[0] = chosen
            break


def _enum_impl(m, q, copy_ptr, copy_edges, copy_colour,
               pin_e, pin_c, same_a, same_b, diff_a, diff_b):
    total = 1
    for _ in range(m):
        total *= q
    powv = np.empty(m, np.int64) if m > 0 else np.empty(0, np.int64)
    p = 1
    for i in range(m - 1, -1, -1):
        powv[i] = p
        p *= q
    digits = np.zeros(m, np.int64)
    count = 0
    least = -1
    nc = copy_colour.shape[0]
    for code in range(total):
        rem = code
        for i in range(m):
            d = rem // powv[i]
            digits[i] = d
            rem -= d * powv[i]
        ok = True
        for i in range(pin_e.shape[0]):
            if digits[pin_e[i]] + 1 != pin_c[i]:
                ok = False
                break
        if ok:
            for i in range(same_a.shape[0]):
                if digits[same_a[i]] != digits[same_b[i]]:
                    ok = False
                    break
        if ok:
            for i in range(diff_a.shape[0]):
                if digits[diff_a[i]] == digits[diff_b[i]]:
                    ok = False
                    break
        if ok:
            for ci in range(nc):
                col = copy_colour[ci] - 1
                mono = True
                for jj in range(copy_ptr[ci], copy_ptr[ci + 1]):
                    if digits[copy_edges[jj]] != col:
                        mono = False
                        break
                if mono:
                    ok = False
                    break
        if ok:
            count += 1
            if least < 0:
                least = code
    return count, least


def _enum_numpy(m, q, copy_ptr, copy_edges, copy_colour,
                pin_e, pin_c, same_a, same_b, diff_a, diff_b):
    total = q ** m
    powv = q ** (m - 1 - np.arange(m, dtype=np.int64)) if m > 0 else np.empty(0, np.int64)
    count = 0
    least = -1
    chunk = 1 << 15
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        codes = np.arange(start, stop, dtype=np.int64)
        if m > 0:
            digs = (codes[:, None] // powv[None, :]) % q
        else:
            digs = np.zeros((len(codes), 0), np.int64)
        valid = np.ones(len(codes), bool)
        for i in range(len(pin_e)):
            valid &= digs[:, pin_e[i]] + 1 == pin_c[i]
        for i in range(len(same_a)):
            valid &= digs[:, same_a[i]] == digs[:, same_b[i]]
        for i in range(len(diff_a)):
            valid &= digs[:, diff_a[i]] != digs[:, diff_b[i]]
        for ci in range(len(copy_colour)):
            eids = copy_edges[copy_ptr[ci]:copy_ptr[ci + 1]]
            mono = np.all(digs[:, eids] == copy_colour[ci] - 1, axis=1)
            valid &= ~mono
        c = int(valid.sum())
        if c and least < 0:
            least = int(codes[np.argmax(valid)])
        count += c
    return count, least


if HAS_NUMBA:
    dfs_solve = njit(cache=True)(_dfs_impl)
    enum_count = njit(cache=True)(_enum_impl)
else:
    dfs_solve = _dfs_impl
    enum_count = _enum_numpy


def decode_code(code, m, q):
    """Turn an oracle code back into a colour tuple (colours 1..q)."""
    out = [0] * m
    for i in range(m - 1, -1, -1):
        out[i] = code % q + 1
        code //= q
    return tuple(out)
