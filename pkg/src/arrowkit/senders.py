"""Signal-edge gadgets: graphs that tie the colours of two far-apart edges.

A gadget here is a graph S with two vertex-disjoint signal edges e, f and a
polarity.  The contract has three parts:

* S itself admits a colouring with no monochromatic target copy;
* every such colouring gives c(e) = c(f) (positive) or c(e) != c(f)
  (negative);
* e and f are at least d apart, so a gadget wired between two edges of a
  larger construction cannot leak extra structure between their endpoints.

``verify_gadget`` replays the first two parts with the exact engine; the
distance part is a cheap structural check.  Mock gadgets (plain paths) carry
the right shape but none of the forcing, and are only ever given
structural verdicts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from importlib import resources

from .compose import Builder, ComposeError, norm_pair
from .graphs import (Graph, are_isomorphic, complete, edge_distance,
                     from_graph6, iter_connected_graphs, to_graph6)
from .search import ArrowCertificate, BudgetExceeded, ConstraintSet, \
    DEFAULT_BUDGET, solve


class SenderError(ValueError):
    pass


@dataclass(frozen=True)
class SenderSpec:
    """A signal gadget plus its claimed contract."""

    graph: Graph
    q: int
    target: Graph
    d: int
    e: int  # edge id of the first signal edge
    f: int
    polarity: str  # "positive" | "negative"
    provenance: str  # "searched" | "loaded" | "chained" | "mock"
    verified: bool = False

    def __post_init__(self):
        if self.polarity not in ("positive", "negative"):
            raise SenderError(f"bad polarity {self.polarity!r}")
        if self.q < 2:
            raise SenderError("need at least two colours")
        eu, ev = self.graph.pair(self.e)
        fu, fv = self.graph.pair(self.f)
        if {eu, ev} & {fu, fv}:
            raise SenderError("signal edges must be vertex-disjoint")

    @property
    def e_pair(self):
        return self.graph.pair(self.e)

    @property
    def f_pair(self):
        return self.graph.pair(self.f)

    @property
    def is_mock(self):
        return self.provenance == "mock"

    def signal_distance(self):
        return edge_distance(self.graph, self.e, self.f)


@dataclass(frozen=True)
class SenderVerdict:
    status: str  # "verified" | "refuted" | "budget-exceeded" | "structural-only"
    failed: str | None = None  # which clause broke, e.g. "free-colouring"
    witness: object = None
    certificates: tuple = ()

    @property
    def ok(self):
        return self.status in ("verified", "structural-only") and not self.failed


def check_sender_shape(spec):
    """Distance and disjointness conditions; no solver involved."""
    problems = []
    dist = spec.signal_distance()
    if dist < spec.d:
        problems.append(
            f"signal edges at distance {dist}, contract requires {spec.d}")
    return problems


def verify_sender(spec, budget=DEFAULT_BUDGET):
    """Replay the gadget contract on the exact engine.

    Mock gadgets get a structural-only verdict: they are stand-ins for
    plumbing tests and by design do not force anything.
    """
    shape = check_sender_shape(spec)
    if shape:
        return SenderVerdict("refuted", failed="; ".join(shape))
    if spec.is_mock:
        return SenderVerdict("structural-only")

    forbidden = {c: [spec.target] for c in range(1, spec.q + 1)}
    certs = []
    try:
        free = solve(spec.graph, ConstraintSet(spec.q, forbidden), budget)
        certs.append(free)
        if free.arrows:
            return SenderVerdict("refuted", failed="free-colouring",
                                 certificates=tuple(certs))
        relation = "same" if spec.polarity == "negative" else "diff"
        broken = solve(spec.graph,
                       ConstraintSet(spec.q, forbidden,
                                     links=[(spec.e, spec.f, relation)]),
                       budget)
        certs.append(broken)
        if not broken.arrows:
            return SenderVerdict("refuted", failed="signal-relation",
                                 witness=broken.witness,
                                 certificates=tuple(certs))
    except BudgetExceeded:
        return SenderVerdict("budget-exceeded", certificates=tuple(certs))
    return SenderVerdict("verified", certificates=tuple(certs))


def wire_sender(builder, spec, p1, p2, label=None):
    """Attach a gadget inside an ongoing build, its signal edges landing on
    the existing edge pairs p1 and p2 (lowest-index endpoints together)."""
    if set(p1) & set(p2):
        raise SenderError(f"edges {p1} and {p2} share a vertex")
    se, sf = spec.e_pair, spec.f_pair
    ident = {se[0]: min(p1), se[1]: max(p1), sf[0]: min(p2), sf[1]: max(p2)}
    builder.attach(spec.graph, ident, "sender",
                   label or f"{spec.polarity}[{p1}-{p2}]",
                   shared_pairs=(p1, p2), signal_pairs=(p1, p2))
    return builder.regions[-1]


def join_by_sender(g, e1, e2, spec):
    """Wire a gadget between two existing edges of g.

    Returns (graph, region).  The two edges must be vertex-disjoint in g;
    the gadget interior arrives as fresh vertices, so only the
    identification itself needs collision checks.
    """
    b = Builder(g.n, g.edges)
    region = wire_sender(b, spec, g.pair(e1), g.pair(e2))
    return b.graph(), region


# ---------------------------------------------------------------------------
# providers


def mock_sender(q, target, d, polarity):
    """Path with the right signal shape and zero forcing power.

    A path with d+2 edges puts its end edges at distance exactly d.
    """
    if d < 1:
        raise SenderError("mock gadgets need d >= 1")
    L = d + 2
    g = Graph(L + 1, [(i, i + 1) for i in range(L)])
    return SenderSpec(g, q, target, d,
                      g.edge_id(0, 1), g.edge_id(L - 1, L),
                      polarity, "mock", verified=False)


class MockSenderProvider:
    """Structural stand-in provider; works for any (q, target, d)."""

    concrete = False

    def get(self, q, target, d, polarity):
        return mock_sender(q, target, d, polarity)


def _load_corpus():
    specs = []
    root = resources.files("arrowkit").joinpath("data/senders")
    for entry in sorted(root.iterdir(), key=lambda p: p.name):
        if not entry.name.endswith(".json"):
            continue
        raw = json.loads(entry.read_text())
        g = from_graph6(raw["graph6"])
        specs.append(SenderSpec(
            g, raw["q"], from_graph6(raw["target"]), raw["d"],
            g.edge_id(*raw["e"]), g.edge_id(*raw["f"]),
            raw["polarity"], "loaded", verified=True))
    return specs


_CORPUS = None


def sender_corpus():
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = _load_corpus()
    return _CORPUS


def chain_senders(first, link):
    """Compose two gadgets by identifying the link's e-signal with the
    first gadget's f-signal.

    The composed graph relates the first gadget's e to the link's f; a
    positive link preserves the relation, so polarity carries over from
    ``first``.  Distances are remeasured on the result rather than summed.
    """
    if link.polarity != "positive":
        raise SenderError("only positive links preserve the relation")
    if first.q != link.q or not are_isomorphic(first.target, link.target):
        raise SenderError("gadgets disagree on colours or target")
    g = first.graph
    b = Builder(g.n, g.edges)
    fp = first.f_pair
    le, lf = link.e_pair, link.f_pair
    ident = {le[0]: fp[0], le[1]: fp[1]}
    vmap = b.attach(link.graph, ident, "sender", "link",
                    shared_pairs=(fp,), signal_pairs=(fp,))
    new = b.graph()
    new_f = norm_pair(vmap[lf[0]], vmap[lf[1]])
    spec = SenderSpec(new, first.q, first.target, 1,
                      new.edge_id(*first.e_pair), new.edge_id(*new_f),
                      first.polarity, "chained",
                      verified=first.verified and link.verified)
    return replace(spec, d=spec.signal_distance())


class CorpusSenderProvider:
    """Serves stored gadgets, chaining on positive links until the distance
    contract is met.  Raises if the (q, target) combination is not covered."""

    concrete = True

    def __init__(self, specs=None):
        self.specs = list(specs) if specs is not None else sender_corpus()

    def _base(self, q, target, polarity):
        for s in self.specs:
            if s.q == q and s.polarity == polarity \
                    and are_isomorphic(s.target, target):
                return s
        raise SenderError(
            f"no stored {polarity} gadget for q={q}, "
            f"target {to_graph6(target)}")

    def get(self, q, target, d, polarity):
        cur = self._base(q, target, polarity)
        link = None
        while cur.signal_distance() < d:
            if link is None:
                link = self._base(q, target, "positive")
            cur = chain_senders(cur, link)
        return replace(cur, d=d)


class SearchSenderProvider:
    """Finds gadgets fresh by exhaustive search; small inputs only."""

    concrete = True

    def __init__(self, max_vertices=7, budget=DEFAULT_BUDGET):
        self.max_vertices = max_vertices
        self.budget = budget
        self._cache = {}

    def get(self, q, target, d, polarity):
        key = (q, to_graph6(target), d, polarity)
        if key not in self._cache:
            found = search_sender(q, target, d, polarity,
                                  max_vertices=self.max_vertices,
                                  budget=self.budget)
            if found is None:
                raise SenderError(f"no {polarity} gadget found for {key}")
            self._cache[key] = found
        return self._cache[key]


def search_sender(q, target, d, polarity, candidates=None, max_vertices=7,
                  budget=DEFAULT_BUDGET, max_candidates=None):
    """Scan candidate graphs for a verified gadget; None if the stream runs
    dry.  Candidates default to all connected graphs up to ``max_vertices``,
    one per isomorphism class, in a fixed order, so results are reproducible.

    Budget overruns on a candidate skip it rather than abort the scan: an
    undecidable candidate cannot be returned as verified anyway.
    """
    if candidates is None:
        candidates = iter_connected_graphs(max_vertices)
    forbidden = {c: [target] for c in range(1, q + 1)}
    relation = "same" if polarity == "negative" else "diff"
    seen = 0
    for g in candidates:
        seen += 1
        if max_candidates is not None and seen > max_candidates:
            return None
        if g.m < 2:
            continue
        try:
            free = solve(g, ConstraintSet(q, forbidden), budget)
        except BudgetExceeded:
            continue
        if free.arrows:
            continue
        for e in range(g.m):
            pe = g.pair(e)
            for f in range(e + 1, g.m):
                pf = g.pair(f)
                if set(pe) & set(pf):
                    continue
                if edge_distance(g, e, f) < d:
                    continue
                try:
                    broken = solve(g, ConstraintSet(
                        q, forbidden, links=[(e, f, relation)]), budget)
                except BudgetExceeded:
                    continue
                if broken.arrows:
                    return SenderSpec(g, q, target, d, e, f, polarity,
                                      "searched", verified=True)
    return None
