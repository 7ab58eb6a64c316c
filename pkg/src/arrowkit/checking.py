"""Stand-alone validation of candidate colourings.

This module re-derives everything from first principles so that a witness
coming out of the search engine is never trusted on the engine's own say-so.
The embedding search here is a direct recursive matcher, independent of the
copy machinery used to feed the solver.
"""

from __future__ import annotations


def _find_mono_copy(n, adj_bits, edge_lookup, target, colour, colouring):
    """Search for a copy of ``target`` whose edges all carry ``colour``.

    adj_bits/edge_lookup describe the host; returns a vertex image or None.
    """
    order = []
    placed = set()
    comps = sorted(target.components(), key=lambda c: (-len(c), c))
    for comp in comps:
        start = max(comp, key=lambda v: (target.degree(v), -v))
        order.append(start)
        placed.add(start)
        while True:
            rest = [v for v in comp if v not in placed]
            if not rest:
                break
            v = max(rest, key=lambda v: (len(target.adj[v] & placed), target.degree(v), -v))
            order.append(v)
            placed.add(v)

    image = [-1] * target.n

    def ok_edge(u, v):
        eid = edge_lookup.get((u, v) if u < v else (v, u))
        return eid is not None and colouring[eid] == colour

    def extend(i, used):
        if i == len(order):
            return True
        tv = order[i]
        for hv in range(n):
            if used & (1 << hv):
                continue
            good = True
            for tw in target.adj[tv]:
                hw = image[tw]
                if hw >= 0 and not ok_edge(hv, hw):
                    good = False
                    break
            if good:
                image[tv] = hv
                if extend(i + 1, used | (1 << hv)):
                    return True
                image[tv] = -1
        return False

    if extend(0, 0):
        return tuple(image)
    return None


def check_colouring(host, q, colouring, forbidden, pins=(), links=()):
    """Validate a total colouring against arrowing constraints.

    ``forbidden`` maps colour -> list of target graphs that must not appear
    monochromatically in that colour.  Returns a list of violation strings;
    empty means the colouring satisfies everything.
    """
    violations = []
    m = host.m
    if len(colouring) != m:
        return [f"colouring has {len(colouring)} entries for {m} edges"]
    for eid, c in enumerate(colouring):
        if not isinstance(c, int) or not 1 <= c <= q:
            violations.append(f"edge {eid} has colour {c!r} outside 1..{q}")
    if violations:
        return violations
    for eid, c in pins:
        if colouring[eid] != c:
            violations.append(f"pin violated: edge {eid} is {colouring[eid]}, pinned {c}")
    for e1, e2, kind in links:
        if kind == "same" and colouring[e1] != colouring[e2]:
            violations.append(f"same-link violated on edges {e1},{e2}")
        if kind == "diff" and colouring[e1] == colouring[e2]:
            violations.append(f"diff-link violated on edges {e1},{e2}")

    edge_lookup = {host.pair(i): i for i in range(m)}
    for colour, targets in forbidden.items():
        for t in targets:
            found = _find_mono_copy(host.n, host.bits, edge_lookup, t, colour, colouring)
            if found is not None:
                violations.append(
                    f"monochromatic copy in colour {colour} on vertices {found}")
    return violations
