"""Gadget composition with provenance tracking.

Builders keep vertices append-only, so a region recorded at attach time stays
valid as later gadgets arrive.  Edges are tracked as vertex pairs rather than
ids; ids are only assigned once, when the final graph is frozen.

Identifying a gadget edge with an existing edge is the one sanctioned overlap
(that is how signal edges are wired in); any other coincidence would silently
merge two structurally distinct edges, so it raises instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph


class ComposeError(ValueError):
    pass


def norm_pair(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Region:
    """A tracked piece of a composed graph: one gadget, copy, or base part."""

    kind: str  # "sender" | "indicator" | "copy" | "base"
    label: str
    vertices: frozenset
    edge_pairs: frozenset
    anchors: frozenset  # vertices identified with pre-existing material
    signal_pairs: tuple = ()  # for senders: (e pair, f pair)

    @property
    def interior(self):
        return self.vertices - self.anchors


class Builder:
    def __init__(self, n=0, edges=()):
        self.n = n
        self.edges = set(norm_pair(*e) for e in edges)
        self.regions = []

    def add_vertices(self, k):
        ids = list(range(self.n, self.n + k))
        self.n += k
        return ids

    def add_edge(self, u, v):
        p = norm_pair(u, v)
        if p in self.edges:
            raise ComposeError(f"edge {p} already present")
        if u == v:
            raise ComposeError(f"loop at {u}")
        self.edges.add(p)
        return p

    def attach(self, sub, ident, kind, label, shared_pairs=(), signal_pairs=()):
        """Add a vertex-disjoint copy of ``sub``, identifying some of its
        vertices with existing ones via ``ident`` (sub vertex -> base vertex).

        ``shared_pairs`` lists base edge pairs the copy is allowed to land on
        (the designated identification edges); every other collision is a
        forbidden parallel-edge collapse.  Returns the vertex map.
        """
        vmap = {}
        for v in range(sub.n):
            if v in ident:
                tgt = ident[v]
                if not 0 <= tgt < self.n:
                    raise ComposeError(f"identification target {tgt} does not exist")
                vmap[v] = tgt
            else:
                vmap[v] = self.n
                self.n += 1
        shared = {norm_pair(*p) for p in shared_pairs}
        pairs = set()
        for u, v in sub.edges:
            p = norm_pair(vmap[u], vmap[v])
            if p[0] == p[1]:
                raise ComposeError(f"identification collapses edge {(u, v)} to a loop")
            if p in self.edges and p not in shared:
                raise ComposeError(
                    f"gadget edge {(u, v)} collides with existing edge {p}")
            pairs.add(p)
        self.edges |= pairs
        region = Region(kind, label,
                        frozenset(vmap.values()),
                        frozenset(pairs),
                        frozenset(ident.values()),
                        tuple(signal_pairs))
        self.regions.append(region)
        return vmap

    def add_region(self, region):
        self.regions.append(region)

    def graph(self):
        return Graph(self.n, sorted(self.edges))


def translate_region(region, vmap):
    f = lambda p: norm_pair(vmap[p[0]], vmap[p[1]])
    return Region(region.kind, region.label,
                  frozenset(vmap[v] for v in region.vertices),
                  frozenset(f(p) for p in region.edge_pairs),
                  frozenset(vmap[v] for v in region.anchors),
                  tuple(f(p) for p in region.signal_pairs))


def check_interiors_disjoint(regions):
    """Gadget regions may only meet where the later one declared anchors.

    Builder-attached regions satisfy this by construction (interiors are
    fresh vertices); the check guards the translated records produced when
    nested builds are flattened into a parent.
    """
    problems = []
    gadgets = [r for r in regions if r.kind in ("sender", "copy")]
    for i in range(len(gadgets)):
        for j in range(i + 1, len(gadgets)):
            a, b = gadgets[i], gadgets[j]
            bad = (a.vertices & b.vertices) - b.anchors
            if bad:
                problems.append(
                    f"regions {a.label!r} and {b.label!r} overlap at "
                    f"{sorted(bad)} outside declared anchors")
    return problems
