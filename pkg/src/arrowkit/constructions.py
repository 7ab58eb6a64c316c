"""Composite graphs whose arrowing behaviour is engineered edge by edge.

Two constructions are assembled from the sender and indicator gadgets and
one loop iterates them.  The broadcast distinguisher fans positive senders
out from a single far edge to every edge of a designated copy, so in any
target-free colouring the whole copy inherits the far edge's colour.  The
critical embedding wraps a designated copy of a non-arrowing graph F in a
harness of matching edges, senders and indicators that makes the whole
host arrow while keeping every single F-edge critical: deleting any one of
them frees the colouring again, and the freeing colouring is emitted
explicitly for each edge.  The growth loop alternates building such
embeddings with shrinking them to minimal arrowing subgraphs, producing
minimal graphs of strictly increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .checking import check_colouring
from .compose import Builder, ComposeError, Region, check_interiors_disjoint, \
    norm_pair, translate_region
from .graphs import EmbeddedCopy, Graph, edge_distance
from .indicators import SchemeUnavailable, build_indicator, \
    check_copy_locality, check_indicator_structure, check_target_shape, \
    fill_sender_interiors, indicator_scheme
from .search import BudgetExceeded, ConstraintSet, DEFAULT_BUDGET, \
    EdgeColouring, arrow, shrink_to_minimal, solve
from .senders import wire_sender


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class ConstructionVerdict:
    status: str  # "verified" | "refuted" | "budget-exceeded" | "structural-only"
    failed: str | None = None
    witness: object = None

    @property
    def ok(self):
        return self.status in ("verified", "structural-only")


# ---------------------------------------------------------------------------
# broadcast distinguisher


@dataclass(frozen=True)
class DistinguisherSpec:
    graph: Graph
    q: int
    target: Graph
    d: int
    embedded: EmbeddedCopy  # the designated target copy
    e: int  # far edge id
    regions: tuple
    mock_built: bool

    @property
    def e_pair(self):
        return self.graph.pair(self.e)


def build_broadcast_distinguisher(target, q, provider, d=None):
    """One far edge e tied to every edge of a designated target copy.

    Each copy edge is joined to e by the same positive sender, e sitting on
    the same signal slot throughout, so any target-free colouring must give
    the whole copy e's colour.  ``d`` defaults to one past the target
    order, which keeps stray target copies from bridging gadgets.
    """
    if q < 2:
        raise ConstructionError("need at least two colours")
    if target.m < 1:
        raise ConstructionError("the designated copy needs at least one edge")
    if d is None:
        d = target.n + 1

    b = Builder(target.n, target.edges)
    b.add_region(Region("base", "body", frozenset(range(target.n)),
                        frozenset(target.edges), frozenset()))
    eu, ev = b.add_vertices(2)
    e_pair = b.add_edge(eu, ev)
    pos = provider.get(q, target, d, "positive")
    for fpair in target.edges:
        wire_sender(b, pos, e_pair, fpair, f"pos[e-{fpair}]")

    g = b.graph()
    spec = DistinguisherSpec(
        g, q, target, d,
        EmbeddedCopy(tuple(range(target.n)),
                     tuple(g.edge_id(*p) for p in target.edges)),
        g.edge_id(*e_pair), tuple(b.regions), pos.is_mock)
    problems = check_distinguisher_structure(spec)
    if problems:
        raise ConstructionError(problems[0])
    return spec


def check_distinguisher_structure(spec):
    """Structural soundness of a broadcast distinguisher.

    Senders may pairwise share only the far edge plus at most one copy
    vertex, the far edge must sit d away from the copy, every sender must
    present the far edge on the same signal slot, and every target copy
    must lie inside one sender or the designated copy.
    """
    problems = []
    g = spec.graph
    e_ends = set(spec.e_pair)
    body = set(spec.embedded.vertex_image)
    senders = [r for r in spec.regions if r.kind == "sender"]
    for i, a in enumerate(senders):
        if a.signal_pairs and a.signal_pairs[0] != spec.e_pair:
            problems.append(f"sender {a.label!r} holds the far edge on the "
                            "wrong slot")
        for b2 in senders[i + 1:]:
            extra = (a.vertices & b2.vertices) - e_ends
            if not extra <= body or len(extra) > 1:
                problems.append(
                    f"senders {a.label!r} and {b2.label!r} share more than "
                    f"the far edge: {sorted(extra)}")
    near = min(edge_distance(g, spec.e, fid)
               for fid in spec.embedded.edge_ids)
    if near < spec.d:
        problems.append(f"far edge sits {near} < {spec.d} from the copy")
    pairs = frozenset(norm_pair(*g.pair(fid))
                      for fid in spec.embedded.edge_ids)
    copy = Region("copy", "body-copy", frozenset(body), pairs, frozenset())
    problems.extend(check_copy_locality(g, spec.target,
                                        list(spec.regions) + [copy]))
    return problems


def verify_distinguisher(spec, budget=DEFAULT_BUDGET):
    """Replay the arrowing claim: no target-free colouring may exist."""
    problems = check_distinguisher_structure(spec)
    if problems:
        return ConstructionVerdict("refuted", failed="structure: " + problems[0])
    if spec.mock_built:
        return ConstructionVerdict("structural-only")
    forb = {c: [spec.target] for c in range(1, spec.q + 1)}
    try:
        cert = solve(spec.graph, ConstraintSet(spec.q, forb), budget)
    except BudgetExceeded:
        return ConstructionVerdict("budget-exceeded")
    if cert.arrows:
        return ConstructionVerdict("verified")
    return ConstructionVerdict("refuted", failed="free-colouring",
                               witness=cert.witness)


# ---------------------------------------------------------------------------
# critical embedding


@dataclass(frozen=True)
class CriticalEmbedding:
    graph: Graph
    q: int
    target: Graph
    source: Graph  # F, embedded as an induced copy
    colouring: EdgeColouring  # target-free colouring of F defining classes
    d: int
    embedded: EmbeddedCopy
    r_pairs: tuple
    e_pairs: tuple
    f_pairs: tuple
    regions: tuple
    children: tuple  # (class colour, IndicatorSpec, vertex map tuple)
    criticality: dict = field(default_factory=dict)
    criticality_notes: dict = field(default_factory=dict)
    mock_built: bool = False

    @property
    def skeleton_pairs(self):
        return tuple(self.source.edges)


def build_critical_embedding(target, source, q, colouring, provider, d=None,
                             budget=DEFAULT_BUDGET):
    """Host that arrows the target while every source edge stays critical.

    The source's target-free colouring splits its edges into classes
    F_1..F_q.  Three fresh matching edges r_k, e_k, f_k per colour anchor
    the harness: the r's hold pairwise distinct colours (negative senders)
    and each floods its class (positive senders), each nonempty class
    forces its e_k through an indicator, each e_k repels its f_k, and the
    f's form a positive chain.  Any target-free colouring then needs every
    f_k to dodge all q colours at once, which is impossible; deleting one
    source edge breaks exactly one link of that chain, and the freeing
    colouring for each edge is emitted in ``criticality``.
    """
    check_target_shape(target)
    if q < 2:
        raise ConstructionError("need at least two colours")
    if colouring.q != q or len(colouring.colours) != source.m:
        raise ConstructionError("class colouring does not fit the source")
    forb = {c: [target] for c in range(1, q + 1)}
    bad = check_colouring(source, q, colouring.colours, forb)
    if bad:
        raise ConstructionError("class colouring is not target-free: "
                                + bad[0])
    if d is None:
        d = target.n + 1

    classes = {k: [] for k in range(1, q + 1)}
    for idx, c in enumerate(colouring.colours):
        classes[c].append(idx)

    b = Builder(source.n, source.edges)
    r_pairs, e_pairs, f_pairs = [], [], []
    for store in (r_pairs, e_pairs, f_pairs):
        for _ in range(q):
            x, y = b.add_vertices(2)
            store.append(b.add_edge(x, y))
    b.add_region(Region("base", "skeleton", frozenset(range(b.n)),
                        frozenset(b.edges), frozenset()))

    neg = provider.get(q, target, d, "negative")
    pos = provider.get(q, target, d, "positive")
    mock = neg.is_mock or pos.is_mock

    for k in range(q):
        for l in range(k + 1, q):
            wire_sender(b, neg, r_pairs[k], r_pairs[l],
                        f"neg[r{k + 1}-r{l + 1}]")
    for k in range(q):
        for idx in classes[k + 1]:
            gpair = source.edges[idx]
            wire_sender(b, pos, r_pairs[k], gpair, f"pos[r{k + 1}-{gpair}]")

    children = []
    for k in range(q):
        idxs = classes[k + 1]
        if not idxs:
            continue  # degenerate class: no flooding and nothing to force
        support = sorted({v for idx in idxs for v in source.edges[idx]})
        remap = {v: i for i, v in enumerate(support)}
        sub = Graph(len(support),
                    [norm_pair(remap[u], remap[v])
                     for idx in idxs for (u, v) in [source.edges[idx]]])
        ind = build_indicator(target, sub, q, d, provider)
        problems = check_indicator_structure(ind)
        if problems:
            raise ConstructionError(
                f"class {k + 1} indicator is unsound: {problems[0]}")
        ident = {ind.embedded.vertex_image[i]: support[i]
                 for i in range(len(support))}
        fp = ind.e_pair
        ident[fp[0]], ident[fp[1]] = e_pairs[k]
        shared = [norm_pair(ident[u], ident[v]) for u, v in sub.edges]
        shared.append(e_pairs[k])
        vmap = b.attach(ind.graph, ident, "indicator", f"I{k + 1}",
                        shared_pairs=shared)
        b.regions.pop()
        for r in ind.regions:
            if r.kind != "base":
                b.add_region(translate_region(r, vmap))
        children.append((k + 1, ind,
                         tuple(vmap[i] for i in range(ind.graph.n))))

    for k in range(q):
        wire_sender(b, neg, e_pairs[k], f_pairs[k],
                    f"neg[e{k + 1}-f{k + 1}]")
    for k in range(q - 1):
        wire_sender(b, pos, f_pairs[k], f_pairs[k + 1],
                    f"pos[f{k + 1}-f{k + 2}]")

    g = b.graph()
    spec = CriticalEmbedding(
        g, q, target, source, colouring, d,
        EmbeddedCopy(tuple(range(source.n)),
                     tuple(g.edge_id(*p) for p in source.edges)),
        tuple(r_pairs), tuple(e_pairs), tuple(f_pairs),
        tuple(b.regions), tuple(children), mock_built=mock)
    problems = check_embedding_structure(spec)
    if problems:
        raise ConstructionError(problems[0])
    crit, notes = _emit_criticality(spec, budget)
    return replace(spec, criticality=crit, criticality_notes=notes)


def check_embedding_structure(spec):
    """Structural soundness of a critical embedding.

    The designated copy must be induced, gadget overlaps must sit on their
    declared anchors, every sender's signals must stay d apart in the host,
    and every target copy must lie inside one gadget, one designated copy,
    or the skeleton.
    """
    problems = []
    g = spec.graph
    src = spec.source
    image = spec.embedded.vertex_image
    for u in range(src.n):
        for v in range(u + 1, src.n):
            if g.has_edge(image[u], image[v]) != src.has_edge(u, v):
                problems.append(f"skeleton copy is not induced at "
                                f"({image[u]}, {image[v]})")
    try:
        check_interiors_disjoint(spec.regions)
    except ComposeError as exc:
        problems.append(str(exc))
    for r in spec.regions:
        if r.kind != "sender" or len(r.signal_pairs) != 2:
            continue
        ids = [g.edge_id(*p) for p in r.signal_pairs]
        sep = edge_distance(g, ids[0], ids[1])
        if sep < spec.d:
            problems.append(
                f"sender {r.label!r} signals sit {sep} < {spec.d} apart")
    fpairs = set(spec.skeleton_pairs)
    verts = {v for p in fpairs for v in p}
    skeleton = Region("copy", "skeleton-copy", frozenset(verts),
                      frozenset(fpairs), frozenset())
    problems.extend(check_copy_locality(
        g, spec.target, list(spec.regions) + [skeleton]))
    return problems


def _emit_criticality(spec, budget):
    """Freeing colouring of graph−f for each skeleton edge f.

    The deleted edge's class keeps its colour on the survivors and on its
    r-edge, every other class keeps its own colour along with its r and e
    edges, the deleted class's e-edge swerves to a spare colour, all
    f-edges take the deleted class's colour, indicator cores follow their
    clause schemes, and sender interiors are solved with signals pinned.
    Entries are None (with a note) when no scheme exists, which is exactly
    the two-colour multi-edge-class corner.
    """
    q = spec.q
    crit, notes = {}, {}
    colours = spec.colouring.colours
    forb = {c: [spec.target] for c in range(1, q + 1)}
    for pos_idx, p in enumerate(spec.skeleton_pairs):
        c = colours[pos_idx]
        j = 1 if c != 1 else 2
        core = {}
        for k in range(1, q + 1):
            core[spec.r_pairs[k - 1]] = k
            core[spec.f_pairs[k - 1]] = c
            core[spec.e_pairs[k - 1]] = k if k != c else j
        for idx2, p2 in enumerate(spec.skeleton_pairs):
            if idx2 != pos_idx:
                core[p2] = colours[idx2]
        try:
            for k, ind, vmap in spec.children:
                if k != c:
                    scheme = indicator_scheme(ind, ("mono", k))
                else:
                    slots = [norm_pair(vmap[u], vmap[v])
                             for u, v in ind.source.edges]
                    scheme = indicator_scheme(
                        ind, ("deleted", slots.index(p), c, j))
                for (u, v), col in scheme.items():
                    hp = norm_pair(vmap[u], vmap[v])
                    if core.get(hp, col) != col:
                        raise ConstructionError(
                            f"indicator scheme clashes at {hp}")
                    core[hp] = col
            full = fill_sender_interiors(spec.graph, spec.regions, core, q,
                                         spec.target, budget,
                                         frozenset({p}))
        except SchemeUnavailable as exc:
            crit[pos_idx] = None
            notes[pos_idx] = str(exc)
            continue
        missing = [p2 for p2 in spec.graph.edges
                   if p2 != p and p2 not in full]
        if missing:
            raise ConstructionError(
                f"criticality colouring left {len(missing)} edges open")
        if not spec.mock_built:
            host = spec.graph.delete_edge(spec.graph.edge_id(*p))
            bad = check_colouring(host, q,
                                  tuple(full[p2] for p2 in host.edges), forb)
            if bad:
                raise ConstructionError(
                    f"criticality colouring rejected: {bad[0]}")
        crit[pos_idx] = full
    return crit, notes


# ---------------------------------------------------------------------------
# growth loop


@dataclass(frozen=True)
class GrowthResult:
    minimals: tuple  # minimal arrowing graphs, strictly increasing order
    orders: tuple
    stopped: str | None  # None | "budget" | "not-arrowing"


def _replicate(g, colouring, count):
    n, m = g.n, g.m
    edges = [(u + i * n, v + i * n)
             for i in range(count) for u, v in g.edges]
    return Graph(n * count, edges), EdgeColouring(
        colouring.q, colouring.colours * count)


def _without_isolated(g):
    keep = [v for v in range(g.n) if g.degree(v) > 0]
    return g.induced(keep)[0]


def grow_minimal_sequence(target, q, f0, iterations, provider,
                          budget=DEFAULT_BUDGET, d=None):
    """Minimal arrowing graphs of strictly increasing order.

    Each round embeds the current non-arrowing graph in a critical
    embedding, shrinks that host to a minimal arrowing subgraph, then
    blows the starting graph up to one disjoint copy per vertex of the
    result and repeats.  Running out of budget, or an embedding that fails
    to arrow (the mock-sender case), terminates with the partial list.
    """
    if iterations < 0:
        raise ConstructionError("iterations must be >= 0")
    try:
        base = arrow(f0, target, q, budget)
    except BudgetExceeded:
        return GrowthResult((), (), "budget")
    if base.arrows:
        raise ConstructionError(
            "the starting graph already arrows the target")
    cur, cur_col = f0, base.witness
    minimals, orders = [], []
    stopped = None
    for _ in range(iterations):
        emb = build_critical_embedding(target, cur, q, cur_col, provider,
                                       d, budget)
        try:
            cert = arrow(emb.graph, target, q, budget)
        except BudgetExceeded:
            stopped = "budget"
            break
        if not cert.arrows:
            stopped = "not-arrowing"
            break
        try:
            trace = shrink_to_minimal(emb.graph, target, q, budget)
        except BudgetExceeded:
            stopped = "budget"
            break
        mg = _without_isolated(trace.result)
        if orders and mg.n <= orders[-1]:
            raise ConstructionError("minimal graph order failed to grow")
        minimals.append(mg)
        orders.append(mg.n)
        cur, cur_col = _replicate(f0, base.witness, mg.n)
    return GrowthResult(tuple(minimals), tuple(orders), stopped)
