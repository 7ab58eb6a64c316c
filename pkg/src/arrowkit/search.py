"""Exact decision engine for edge-colouring arrowing questions.

The solver walks total q-colourings of a host graph in lexicographic edge
order, propagating the one forcing rule of this problem family: once all but
one edge of a forbidden copy carry colour i, the remaining edge cannot take
colour i.  Interchangeable colours (same forbidden structure, no pins) are
broken by first appearance, which keeps the search exact while cutting the
q! relabelling factor.

Every witness that leaves this module has been re-validated by the
independent checker in ``checking``; an "arrow" verdict means the pruned
space was exhausted, and the pruning rules are recorded on the certificate.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .checking import check_colouring
from .graphs import Graph, GraphError, complete, enumerate_copies
from . import kernels


DEFAULT_BUDGET = 10_000_000


class SearchError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes, props):
        super().__init__(f"node budget exhausted after {nodes} decisions")
        self.nodes = nodes
        self.props = props


@dataclass(frozen=True)
class EdgeColouring:
    """Total assignment of colours 1..q to host edge ids 0..m-1."""

    q: int
    colours: tuple

    def colour_class(self, c):
        return [i for i, x in enumerate(self.colours) if x == c]

    def to_payload(self):
        return {"q": self.q, "colours": list(self.colours)}


@dataclass
class ConstraintSet:
    """Arrowing constraints: per-colour forbidden targets, pins, links.

    ``forbidden`` maps colour -> list of target graphs whose monochromatic
    copies are banned in that colour.  ``pins`` are (edge_id, colour) pairs.
    ``links`` are (edge_id, edge_id, "same"|"diff") triples.
    """

    q: int
    forbidden: dict
    pins: list = field(default_factory=list)
    links: list = field(default_factory=list)

    def validate(self, host):
        if self.q < 1:
            raise SearchError("q must be >= 1")
        for c, targets in self.forbidden.items():
            if not 1 <= c <= self.q:
                raise SearchError(f"forbidden colour {c} outside 1..{self.q}")
            for t in targets:
                if t.m == 0:
                    raise SearchError("forbidden target needs at least one edge")
        for eid, c in self.pins:
            if not 0 <= eid < host.m:
                raise SearchError(f"pin on unknown edge {eid}")
            if not 1 <= c <= self.q:
                raise SearchError(f"pin colour {c} outside 1..{self.q}")
        for e1, e2, kind in self.links:
            if kind not in ("same", "diff"):
                raise SearchError(f"unknown link kind {kind!r}")
            if e1 == e2:
                raise SearchError("link joins an edge to itself")
            for e in (e1, e2):
                if not 0 <= e < host.m:
                    raise SearchError(f"link on unknown edge {e}")


@dataclass
class ArrowCertificate:
    verdict: str  # "arrow" | "not-arrow"
    witness: EdgeColouring | None
    nodes: int
    propagations: int
    symmetry_classes: tuple
    wall_ms: float  # informational only, never serialised

    @property
    def arrows(self):
        return self.verdict == "arrow"

    def to_payload(self):
        out = {
            "verdict": self.verdict,
            "stats": {"nodes": self.nodes, "propagations": self.propagations},
            "symmetry_classes": [list(c) for c in self.symmetry_classes],
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_payload()
        return out


def _csr(adjacency, m):
    ptr = np.zeros(m + 1, np.int64)
    for e in range(m):
        ptr[e + 1] = ptr[e] + len(adjacency[e])
    flat = np.zeros(int(ptr[m]), np.int64)
    pos = 0
    for e in range(m):
        for x in adjacency[e]:
            flat[pos] = x
            pos += 1
    return ptr, flat


def _build_arrays(host, cons):
    m = host.m
    q = cons.q
    init_domain = np.full(m, (1 << q) - 1, np.int64)

    copy_sets = []  # (colour, sorted edge ids)
    per_colour_key = {c: [] for c in range(1, q + 1)}
    for colour in range(1, q + 1):
        for t in cons.forbidden.get(colour, []):
            cl = enumerate_copies(host, t)
            for cp in cl.copies:
                eids = tuple(sorted(cp.edge_ids))
                per_colour_key[colour].append(eids)
                if len(eids) == 1:
                    init_domain[eids[0]] &= ~(1 << (colour - 1))
                else:
                    copy_sets.append((colour, eids))

    nc = len(copy_sets)
    copy_colour = np.zeros(nc, np.int64)
    copy_ptr = np.zeros(nc + 1, np.int64)
    for i, (col, eids) in enumerate(copy_sets):
        copy_colour[i] = col
        copy_ptr[i + 1] = copy_ptr[i] + len(eids)
    copy_edges = np.zeros(int(copy_ptr[nc]), np.int64)
    pos = 0
    inc = [[] for _ in range(m)]
    for i, (col, eids) in enumerate(copy_sets):
        for e in eids:
            copy_edges[pos] = e
            pos += 1
            inc[e].append(i)
    inc_ptr, inc_copies = _csr(inc, m)

    pin_e = np.array([e for e, _ in cons.pins], np.int64)
    pin_c = np.array([c for _, c in cons.pins], np.int64)

    same = [[] for _ in range(m)]
    diff = [[] for _ in range(m)]
    for e1, e2, kind in cons.links:
        tgt = same if kind == "same" else diff
        tgt[e1].append(e2)
        tgt[e2].append(e1)
    same_ptr, same_to = _csr(same, m)
    diff_ptr, diff_to = _csr(diff, m)

    # colours are interchangeable iff they forbid the same copy sets and no
    # pin singles them out
    pinned = {c for _, c in cons.pins}
    groups = {}
    for colour in range(1, q + 1):
        if colour in pinned:
            key = ("pin", colour)
        else:
            key = tuple(sorted(per_colour_key[colour]))
        groups.setdefault(key, []).append(colour)
    classes = tuple(tuple(v) for _, v in sorted(groups.items(), key=lambda kv: kv[1]))
    smaller = [[] for _ in range(q + 1)]
    for cls in classes:
        for i, c in enumerate(cls):
            smaller[c] = list(cls[:i])
    sm_ptr = np.zeros(q + 2, np.int64)
    for c in range(q + 1):
        sm_ptr[c + 1] = sm_ptr[c] + len(smaller[c])
    sm_to = np.zeros(int(sm_ptr[q + 1]), np.int64)
    pos = 0
    for c in range(q + 1):
        for x in smaller[c]:
            sm_to[pos] = x
            pos += 1

    return (m, q, copy_ptr, copy_edges, copy_colour, inc_ptr, inc_copies,
            init_domain, pin_e, pin_c, same_ptr, same_to, diff_ptr, diff_to,
            sm_ptr, sm_to), classes


def solve(host, constraints, budget=DEFAULT_BUDGET):
    """Decide whether the constraints admit a total colouring of ``host``.

    Returns an ArrowCertificate: "arrow" when no valid colouring exists,
    "not-arrow" with the lexicographically least witness otherwise.  Raises
    BudgetExceeded when the decision-node budget runs out.
    """
    constraints.validate(host)
    args, classes = _build_arrays(host, constraints)
    t0 = time.perf_counter()
    status, assignment, nodes, props = kernels.dfs_solve(*args, budget)
    wall = (time.perf_counter() - t0) * 1000.0
    if status == kernels.STATUS_BUDGET:
        raise BudgetExceeded(nodes, props)
    if status == kernels.STATUS_WITNESS:
        witness = EdgeColouring(constraints.q, tuple(int(x) for x in assignment))
        bad = check_colouring(host, constraints.q, witness.colours,
                              constraints.forbidden, constraints.pins,
                              constraints.links)
        if bad:
            raise AssertionError(f"engine produced an invalid witness: {bad}")
        return ArrowCertificate("not-arrow", witness, nodes, props, classes, wall)
    return ArrowCertificate("arrow", None, nodes, props, classes, wall)


def arrow(host, target, q, budget=DEFAULT_BUDGET):
    """Does every q-colouring of ``host`` contain a monochromatic ``target``?"""
    cons = ConstraintSet(q, {c: [target] for c in range(1, q + 1)})
    return solve(host, cons, budget)


@dataclass
class MinimalReport:
    minimal: bool
    host_certificate: ArrowCertificate
    deletions: list  # (edge pair, certificate) per single-edge deletion


def is_minimal(host, target, q, budget=DEFAULT_BUDGET):
    """Host arrows, but no single-edge deletion does.  Isolated vertices
    are irrelevant: everything is decided edge-wise."""
    base = arrow(host, target, q, budget)
    if not base.arrows:
        return MinimalReport(False, base, [])
    deletions = []
    minimal = True
    for eid in range(host.m):
        cert = arrow(host.delete_edge(eid), target, q, budget)
        deletions.append((host.pair(eid), cert))
        if cert.arrows:
            minimal = False
    return MinimalReport(minimal, base, deletions)


@dataclass
class ShrinkTrace:
    result: Graph
    deleted: list  # edge pairs removed, in order tested
    kept: list  # edge pairs whose deletion would break arrowing


def shrink_to_minimal(host, target, q, budget=DEFAULT_BUDGET):
    """Greedily delete edges while the graph keeps arrowing.

    Edges are tested once, in stable id order of the original host; an edge
    that cannot be deleted now can never be deleted later (arrowing is
    monotone under edge removal), so one pass lands on a minimal graph.
    """
    base = arrow(host, target, q, budget)
    if not base.arrows:
        raise SearchError("host does not arrow the target; nothing to shrink")
    current = host
    deleted = []
    kept = []
    for pair in host.edges:
        eid = current.edge_id(*pair)
        cand = current.delete_edge(eid)
        if arrow(cand, target, q, budget).arrows:
            current = cand
            deleted.append(pair)
        else:
            kept.append(pair)
    return ShrinkTrace(current, deleted, kept)


@dataclass
class RamseyReport:
    value: int | None
    searched_max: int
    upper: ArrowCertificate | None  # exhaustion at K_value
    lower_witness: EdgeColouring | None  # witness at K_{value-1}
    nodes_total: int


def ramsey_number(ks, n_max=32, budget=DEFAULT_BUDGET):
    """Least n with K_n -> (K_{k_1}, ..., K_{k_q}), scanning n upward.

    Returns a RamseyReport; value is None when no n <= n_max arrows.
    """
    ks = tuple(ks)
    if any(k < 2 for k in ks):
        raise SearchError("clique sizes must be >= 2")
    q = len(ks)
    start = max(ks)
    prev_witness = None
    total = 0
    for n in range(start, n_max + 1):
        cons = ConstraintSet(q, {i + 1: [complete(k)] for i, k in enumerate(ks)})
        cert = solve(complete(n), cons, budget)
        total += cert.nodes
        if cert.arrows:
            return RamseyReport(n, n_max, cert, prev_witness, total)
        prev_witness = cert.witness
    return RamseyReport(None, n_max, None, prev_witness, total)


@dataclass
class SplitLiftReport:
    part1_certificate: ArrowCertificate
    part2_certificate: ArrowCertificate
    host_arrows: bool | None
    disjunction_holds: bool
    consistent: bool


def split_lift_check(host, target, colouring, q_split, budget=DEFAULT_BUDGET,
                     host_arrows=None):
    """Split a (q+n)-colouring into its first q and last n classes and test
    arrowing of each side; when the host itself arrows in q+n colours, at
    least one side must arrow."""
    q_total = colouring.q
    if not 1 <= q_split < q_total:
        raise SearchError("split must leave colours on both sides")
    e1 = [i for i, c in enumerate(colouring.colours) if c <= q_split]
    e2 = [i for i, c in enumerate(colouring.colours) if c > q_split]
    g1 = host.edge_subgraph(e1)
    g2 = host.edge_subgraph(e2)
    c1 = arrow(g1, target, q_split, budget)
    c2 = arrow(g2, target, q_total - q_split, budget)
    if host_arrows is None:
        try:
            host_arrows = arrow(host, target, q_total, budget).arrows
        except BudgetExceeded:
            host_arrows = None
    disjunction = c1.arrows or c2.arrows
    consistent = (not host_arrows) or disjunction
    return SplitLiftReport(c1, c2, host_arrows, disjunction, consistent)
