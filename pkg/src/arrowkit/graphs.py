"""Simple graphs with dense vertex indices and stable edge identifiers.

Everything downstream (search, gadget composition, file formats) leans on two
conventions fixed here:

* vertices are 0..n-1, edges are sorted pairs (u, v) with u < v;
* edge ids are positions in lexicographic order of those pairs, so the same
  graph always yields the same ids, independent of construction order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations


class GraphError(ValueError):
    pass


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj", "bits", "_index")

    def __init__(self, n, edges=()):
        if n < 0:
            raise GraphError("vertex count must be >= 0")
        pairs = []
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if v >= n or u < 0:
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            pairs.append((u, v))
        pairs.sort()
        for i in range(1, len(pairs)):
            if pairs[i] == pairs[i - 1]:
                raise GraphError(f"parallel edge {pairs[i]}")
        self.n = n
        self.edges = tuple(pairs)
        adj = [set() for _ in range(n)]
        bits = [0] * n
        for u, v in pairs:
            adj[u].add(v)
            adj[v].add(u)
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.adj = tuple(frozenset(s) for s in adj)
        self.bits = tuple(bits)
        self._index = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self):
        return len(self.edges)

    def edge_id(self, u, v=None):
        if v is None:
            u, v = u
        if u > v:
            u, v = v, u
        try:
            return self._index[(u, v)]
        except KeyError:
            raise GraphError(f"no edge ({u},{v})") from None

    def has_edge(self, u, v):
        if u > v:
            u, v = v, u
        return (u, v) in self._index

    def pair(self, eid):
        return self.edges[eid]

    def degree(self, v):
        return len(self.adj[v])

    def delete_edge(self, eid):
        """Remove one edge, keeping all vertices."""
        if not 0 <= eid < self.m:
            raise GraphError(f"edge id {eid} out of range")
        return Graph(self.n, self.edges[:eid] + self.edges[eid + 1:])

    def edge_subgraph(self, edge_ids):
        """Subgraph with the given edge ids, on the full vertex set."""
        return Graph(self.n, [self.edges[i] for i in edge_ids])

    def induced(self, verts):
        """Induced subgraph on ``verts``; returns (graph, old->new map)."""
        vs = sorted(set(verts))
        if vs and (vs[0] < 0 or vs[-1] >= self.n):
            raise GraphError("induced vertex out of range")
        remap = {v: i for i, v in enumerate(vs)}
        es = [(remap[u], remap[v]) for u, v in self.edges if u in remap and v in remap]
        return Graph(len(vs), es), remap

    def complement(self):
        es = [(u, v) for u, v in combinations(range(self.n), 2) if not self.has_edge(u, v)]
        return Graph(self.n, es)

    def components(self):
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            head = 0
            while head < len(comp):
                for w in self.adj[comp[head]]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                head += 1
            out.append(sorted(comp))
        return out

    def is_connected(self):
        if self.n <= 1:
            return True
        return len(self.components()) == 1

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def distance(g, a, b):
    """Least number of edges between the vertex sets ``a`` and ``b``.

    Intersecting sets are at distance 0; unreachable pairs give math.inf.
    """
    a = set(a)
    b = set(b)
    if not a or not b:
        raise GraphError("distance needs non-empty vertex sets")
    for s in (a, b):
        for v in s:
            if not 0 <= v < g.n:
                raise GraphError(f"vertex {v} out of range")
    if a & b:
        return 0
    dist = {v: 0 for v in a}
    frontier = list(a)
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if w not in dist:
                    if w in b:
                        return d
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return math.inf


def edge_distance(g, e1, e2):
    """Distance between the endpoint sets of two edges (given by id)."""
    return distance(g, set(g.pair(e1)), set(g.pair(e2)))


def is_three_connected(g):
    """True iff removing any set of at most 2 vertices leaves the graph connected.

    Requires n >= 4 so the condition is not vacuous.
    """
    if g.n < 4:
        return False
    if not g.is_connected():
        return False

    def connected_without(dropped):
        alive = [v for v in range(g.n) if v not in dropped]
        if not alive:
            return True
        seen = {alive[0]}
        stack = [alive[0]]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w not in dropped and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(alive)

    for v in range(g.n):
        if not connected_without({v}):
            return False
    for u, v in combinations(range(g.n), 2):
        if not connected_without({u, v}):
            return False
    return True


def disjoint_union(g1, g2):
    """Disjoint union; returns (graph, map1, map2) with old->new vertex maps."""
    off = g1.n
    es = list(g1.edges) + [(u + off, v + off) for u, v in g2.edges]
    g = Graph(g1.n + g2.n, es)
    return g, list(range(g1.n)), list(range(off, off + g2.n))


def identify_edges(g, e1, e2, flip=False):
    """Merge edge e2 onto edge e1 endpoint-by-endpoint.

    Default orientation maps lower endpoint to lower endpoint; ``flip``
    swaps the pairing.  Parallel edges arising from the merge collapse.
    Returns (graph, old->new vertex map).
    """
    if e1 == e2:
        raise GraphError("cannot identify an edge with itself")
    a, b = g.pair(e1)
    c, d = g.pair(e2)
    if {a, b} & {c, d}:
        raise GraphError("edges share a vertex")
    if flip:
        c, d = d, c
    merge = {c: a, d: b}
    vmap = [0] * g.n
    nxt = 0
    for v in range(g.n):
        if v in merge:
            continue
        vmap[v] = nxt
        nxt += 1
    for old, tgt in merge.items():
        vmap[old] = vmap[tgt]
    es = {tuple(sorted((vmap[u], vmap[v]))) for u, v in g.edges}
    return Graph(nxt, sorted(es)), vmap


# ---------------------------------------------------------------------------
# subgraph copies


@dataclass(frozen=True)
class EmbeddedCopy:
    """One subgraph copy: injective vertex image plus the host edge ids it uses."""

    vertex_image: tuple
    edge_ids: frozenset

    def edge_pairs(self, host):
        return frozenset(host.pair(i) for i in self.edge_ids)


@dataclass(frozen=True)
class CopyList:
    """All copies of ``target`` inside ``host``, deduplicated by edge set."""

    host: Graph
    target: Graph
    copies: tuple
    per_edge: tuple  # per host edge id: tuple of copy indices

    def __len__(self):
        return len(self.copies)


def _target_order(t):
    """Vertex ordering for the embedding search: big components first,
    inside a component always extend along an edge to the placed part."""
    comps = sorted(t.components(), key=lambda c: (-len(c), c))
    order = []
    placed = set()
    for comp in comps:
        start = max(comp, key=lambda v: (t.degree(v), -v))
        order.append(start)
        placed.add(start)
        while True:
            cand = [v for v in comp if v not in placed]
            if not cand:
                break
            v = max(cand, key=lambda v: (len(t.adj[v] & placed), t.degree(v), -v))
            order.append(v)
            placed.add(v)
    return order


def enumerate_copies(host, target):
    """Enumerate every copy of ``target`` in ``host`` (not necessarily induced).

    Copies that use the same host edge set are reported once.  Enumeration
    order is deterministic, so downstream search results are reproducible.
    """
    if target.m == 0:
        raise GraphError("target needs at least one edge")
    order = _target_order(target)
    t_adj = target.adj
    h_bits = host.bits
    full = (1 << host.n) - 1

    # degree filter is valid for subgraph (not induced) embeddings
    t_deg = [target.degree(v) for v in range(target.n)]

    image = [-1] * target.n
    copies = []
    seen = set()

    def record():
        eids = frozenset(host.edge_id(image[u], image[v]) for u, v in target.edges)
        if eids not in seen:
            seen.add(eids)
            copies.append(EmbeddedCopy(tuple(image), eids))

    def extend(i, used):
        if i == len(order):
            record()
            return
        tv = order[i]
        mask = full & ~used
        for tw in t_adj[tv]:
            hw = image[tw]
            if hw >= 0:
                mask &= h_bits[hw]
        while mask:
            low = mask & -mask
            hv = low.bit_length() - 1
            mask ^= low
            if host.degree(hv) >= t_deg[tv]:
                image[tv] = hv
                extend(i + 1, used | low)
                image[tv] = -1

    extend(0, 0)

    per_edge = [[] for _ in range(host.m)]
    for ci, c in enumerate(copies):
        for eid in c.edge_ids:
            per_edge[eid].append(ci)
    return CopyList(host, target, tuple(copies), tuple(tuple(x) for x in per_edge))


def contains_copy(host, target):
    if target.m == 0:
        return host.n >= target.n
    order = _target_order(target)
    image = [-1] * target.n
    full = (1 << host.n) - 1

    def extend(i, used):
        if i == len(order):
            return True
        tv = order[i]
        mask = full & ~used
        for tw in target.adj[tv]:
            hw = image[tw]
            if hw >= 0:
                mask &= host.bits[hw]
        while mask:
            low = mask & -mask
            hv = low.bit_length() - 1
            mask ^= low
            image[tv] = hv
            if extend(i + 1, used | low):
                return True
            image[tv] = -1
        return False

    return extend(0, 0)


def are_isomorphic(g1, g2):
    """Exact isomorphism test, intended for small gadget-sized graphs.

    An embedding of g2 into g1 with matching vertex and edge counts is
    necessarily a bijection on both, so the copy matcher settles it once the
    cheap invariants agree.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degree(v) for v in range(g1.n)) != \
            sorted(g2.degree(v) for v in range(g2.n)):
        return False
    return contains_copy(g1, g2)


def _refine_colours(g):
    col = [g.degree(v) for v in range(g.n)]
    while True:
        sig = [(col[v], tuple(sorted(col[w] for w in g.adj[v])))
               for v in range(g.n)]
        order = {s: i for i, s in enumerate(sorted(set(sig)))}
        nxt = [order[s] for s in sig]
        if nxt == col:
            return col
        col = nxt


def canonical_form(g):
    """Canonical edge tuple: minimum relabelling among colour-preserving maps.

    The colour refinement usually splits vertices into tiny cells, so the
    brute-force minimum stays cheap at gadget scale; vertex-transitive graphs
    degrade to all n! maps and are only viable for n around 8 or less.
    """
    col = _refine_colours(g)
    cells = {}
    for v in range(g.n):
        cells.setdefault(col[v], []).append(v)
    ordered = [cells[c] for c in sorted(cells)]

    best = None
    perm = [-1] * g.n
    nxt = 0

    def place(ci, remaining):
        nonlocal best, nxt
        if ci == len(ordered):
            cand = tuple(sorted(tuple(sorted((perm[u], perm[v])))
                                for u, v in g.edges))
            if best is None or cand < best:
                best = cand
            return
        if not remaining:
            place(ci + 1, list(ordered[ci + 1]) if ci + 1 < len(ordered) else [])
            return
        for i, v in enumerate(remaining):
            perm[v] = nxt
            nxt += 1
            place(ci, remaining[:i] + remaining[i + 1:])
            nxt -= 1
            perm[v] = -1

    place(0, list(ordered[0]) if ordered else [])
    return (g.n, best if best is not None else ())


def iter_connected_graphs(max_n):
    """Yield one representative per isomorphism class of connected graphs,
    in increasing vertex count.

    Every connected graph has a vertex whose removal keeps it connected, so
    growing by one vertex joined to a nonempty subset reaches every class.
    """
    level = {canonical_form(Graph(1)): Graph(1)}
    yield Graph(1)
    for n in range(2, max_n + 1):
        nxt = {}
        for key in sorted(level):
            parent = level[key]
            base = list(parent.edges)
            for mask in range(1, 1 << parent.n):
                extra = [(v, parent.n) for v in range(parent.n)
                         if mask >> v & 1]
                child = Graph(n, base + extra)
                ck = canonical_form(child)
                if ck not in nxt:
                    nxt[ck] = child
        level = nxt
        for key in sorted(level):
            yield level[key]


# ---------------------------------------------------------------------------
# named families


def complete(n):
    return Graph(n, combinations(range(n), 2))


def cycle(n):
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    """Path on n vertices (n-1 edges)."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_minus_edge(n):
    if n < 2:
        raise GraphError("needs n >= 2")
    g = complete(n)
    return g.delete_edge(g.edge_id(n - 2, n - 1))


def pendant_clique(k):
    """K_k with one extra vertex attached to a single clique vertex."""
    if k < 2:
        raise GraphError("needs k >= 2")
    es = list(combinations(range(k), 2)) + [(0, k)]
    return Graph(k + 1, es)


def clique_plus_matching(k, s, t):
    """Disjoint union of one K_k and s copies of K_t."""
    es = list(combinations(range(k), 2))
    off = k
    for _ in range(s):
        es += list(combinations(range(off, off + t), 2))
        off += t
    return Graph(off, es)


def matching(s):
    return Graph(2 * s, [(2 * i, 2 * i + 1) for i in range(s)])


def named_graph(name):
    """Resolve a compact family name such as K6, C5, P4, K6-e, K5.K2, K3+2K2."""
    s = name.strip()
    try:
        if "+" in s:
            head, *rest = s.split("+")
            if not (head.startswith("K") and head[1:].isdigit()):
                raise GraphError(f"bad clique term {head!r}")
            k = int(head[1:])
            total_s = 0
            t_val = None
            for term in rest:
                if not term:
                    raise GraphError("empty union term")
                mult = 1
                body = term
                i = 0
                while i < len(body) and body[i].isdigit():
                    i += 1
                if i:
                    mult = int(body[:i])
                    body = body[i:]
                if not (body.startswith("K") and body[1:].isdigit()):
                    raise GraphError(f"bad union term {term!r}")
                tv = int(body[1:])
                if t_val is None:
                    t_val = tv
                elif t_val != tv:
                    # mixed unions: build directly
                    t_val = -1
                total_s += mult
            if t_val == -1:
                g = complete(int(head[1:]))
                for term in rest:
                    mult = 1
                    body = term
                    i = 0
                    while i < len(body) and body[i].isdigit():
                        i += 1
                    if i:
                        mult = int(body[:i])
                        body = body[i:]
                    for _ in range(mult):
                        g, _, _ = disjoint_union(g, complete(int(body[1:])))
                return g
            return clique_plus_matching(k, total_s, t_val)
        if s.endswith("-e"):
            base = s[:-2]
            if base.startswith("K") and base[1:].isdigit():
                return complete_minus_edge(int(base[1:]))
            raise GraphError(f"bad name {name!r}")
        if "." in s:
            a, b = s.split(".", 1)
            if a.startswith("K") and a[1:].isdigit() and b == "K2":
                return pendant_clique(int(a[1:]))
            raise GraphError(f"bad name {name!r}")
        kind, num = s[0], s[1:]
        if not num.isdigit():
            raise GraphError(f"bad name {name!r}")
        n = int(num)
        if kind == "K":
            return complete(n)
        if kind == "C":
            return cycle(n)
        if kind == "P":
            return path(n)
        if kind == "M":
            return matching(n)
        if kind == "E":
            return Graph(n)
        raise GraphError(f"unknown family {kind!r}")
    except GraphError:
        raise
    except Exception as exc:
        raise GraphError(f"cannot parse graph name {name!r}") from exc


# ---------------------------------------------------------------------------
# graph6


class Graph6Error(GraphError):
    def __init__(self, msg, position=None):
        super().__init__(msg if position is None else f"{msg} (at byte {position})")
        self.position = position


_G6_HEADER = ">>graph6<<"


def to_graph6(g):
    n = g.n
    if n > 2 ** 36 - 1:
        raise Graph6Error("graph too large for graph6")
    out = []
    if n <= 62:
        out.append(chr(n + 63))
    elif n <= 258047:
        out.append("~")
        out.extend(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        out.append("~~")
        out.extend(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = 0
    nbits = 0
    body = []
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                body.append(chr(bits + 63))
                bits = 0
                nbits = 0
    if nbits:
        bits <<= 6 - nbits
        body.append(chr(bits + 63))
    return "".join(out) + "".join(body)


def from_graph6(text):
    """Parse one graph6 line.  Errors carry the byte position of the defect."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    base = 0
    if s.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        o = ord(ch)
        if o < 63 or o > 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", base + i)
    pos = 0
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            if len(s) < 8:
                raise Graph6Error("truncated vertex count", base + len(s))
            digits = [ord(c) - 63 for c in s[2:8]]
            n = 0
            for d in digits:
                n = (n << 6) | d
            pos = 8
        else:
            if len(s) < 4:
                raise Graph6Error("truncated vertex count", base + len(s))
            digits = [ord(c) - 63 for c in s[1:4]]
            n = 0
            for d in digits:
                n = (n << 6) | d
            pos = 4
    else:
        n = ord(s[0]) - 63
        pos = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    got = len(s) - pos
    if got < need:
        raise Graph6Error(f"body too short: need {need} characters, found {got}", base + len(s))
    if got > need:
        raise Graph6Error(f"trailing data after graph body", base + pos + need)
    edges = []
    bit = 0
    vals = [ord(c) - 63 for c in s[pos:]]
    for j in range(1, n):
        for i in range(j):
            word = vals[bit // 6]
            if (word >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    # padding bits must be zero for a bit-exact round trip
    while bit < 6 * need:
        word = vals[bit // 6]
        if (word >> (5 - bit % 6)) & 1:
            raise Graph6Error("nonzero padding bit", base + pos + bit // 6)
        bit += 1
    return Graph(n, edges)


def read_graph6_lines(text):
    """Parse a multi-line graph6 payload, skipping blank lines."""
    out = []
    for line in text.splitlines():
        if line.strip():
            out.append(from_graph6(line))
    return out
