"""Critical graphs and the colour patterns built from them.

A graph on n vertices is (n,r,k)-critical when it contains no K_{k+1} and
every vertex subset of size at least n/r induces a K_k.  Criticality is
decided through the contrapositive: find the maximum K_k-free induced
subset exactly (branch and bound with a clique-cover bound) and compare
its size against the ceiling of n/r.  A colour pattern is a family of
pairwise edge-disjoint graphs sharing one vertex set; random balanced
partitions of a complete graph's edges give a simple generator.  The
module also houses the two classical triangle-free colourings used as
inner witnesses elsewhere: the double-pentagon 2-colouring of K5 and the
cubic-residue 3-colouring of K16 over the 16-element field.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from math import ceil

from .graphs import Graph, complete, enumerate_copies
from .search import EdgeColouring


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class ColourPattern:
    """Pairwise edge-disjoint graphs on the shared vertex set 0..n-1."""

    n: int
    members: tuple
    r: int
    k: int
    certified: bool = False

    def __post_init__(self):
        seen = set()
        for g in self.members:
            if g.n != self.n:
                raise PatternError(
                    f"member on {g.n} vertices in a pattern on {self.n}")
            for p in g.edges:
                if p in seen:
                    raise PatternError(f"members share the edge {p}")
                seen.add(p)

    @property
    def q(self):
        return len(self.members)


def _has_clique(adj, mask, size):
    # is there a clique of ``size`` vertices inside ``mask``?
    if size <= 0:
        return True
    if size == 1:
        return mask != 0
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        if _has_clique(adj, m & adj[v], size - 1):
            return True
    return False


def max_kclique_free_subset(g, k):
    """Largest vertex set inducing a K_k-free subgraph, exactly.

    Branch and bound over vertices in ascending order.  The bound peels
    greedy maximal cliques off the candidate set; a K_k-free set can keep
    at most k-1 vertices of any clique, so the peeled sizes cap what the
    candidates can still contribute.
    """
    if k < 2:
        raise PatternError("clique size must be at least 2")
    n = g.n
    adj = [g.bits[v] for v in range(n)]
    best_mask = 0
    best_count = 0

    def bound(cand):
        total = 0
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            qmask = 1 << v
            avail = m & adj[v]
            while avail:
                u = (avail & -avail).bit_length() - 1
                qmask |= 1 << u
                avail &= adj[u]
            total += min(bin(qmask).count("1"), k - 1)
            m &= ~qmask
        return total

    def dfs(smask, count, cand):
        nonlocal best_mask, best_count
        if count > best_count:
            best_mask, best_count = smask, count
        if count + bound(cand) <= best_count:
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if not _has_clique(adj, smask & adj[v], k - 1):
                dfs(smask | (1 << v), count + 1, cand)

    dfs(0, 0, (1 << n) - 1)
    return tuple(v for v in range(n) if best_mask >> v & 1)


@dataclass(frozen=True)
class CriticalityReport:
    critical: bool
    reason: str | None = None  # "clique" | "free-set" when not critical
    witness: tuple = ()


def is_critical(g, n, r, k):
    """Is ``g`` (n,r,k)-critical?

    True iff K_{k+1} is absent and the maximum K_k-free induced subset
    stays below the ceiling of n/r.  The size threshold reads the
    real-valued bound as its integer ceiling; a failure witness is either
    the K_{k+1} copy or a K_k-free set trimmed to the smallest violating
    size.
    """
    if g.n != n:
        raise PatternError(f"graph has {g.n} vertices, expected {n}")
    if r < 1:
        raise PatternError("r must be at least 1")
    cliques = enumerate_copies(complete(k + 1), g)
    if cliques:
        verts = min(tuple(sorted(c.vertex_image)) for c in cliques)
        return CriticalityReport(False, "clique", verts)
    free = max_kclique_free_subset(g, k)
    threshold = ceil(n / r)
    if len(free) >= threshold:
        return CriticalityReport(False, "free-set", free[:threshold])
    return CriticalityReport(True)


def random_critical_pattern(r, k, n, trials, seed):
    """First balanced random edge-partition whose classes all certify.

    Draws uniformly random balanced r-partitions of the complete graph's
    edges (round-robin deal of a shuffled edge list), tests every class
    with is_critical, and returns the first full success; None when the
    trials run out.  Deterministic under ``seed``: trial t uses its own
    generator derived from (seed, t), and the least successful trial index
    wins.
    """
    if r < 3 or k < 2:
        warnings.warn("criticality patterns are intended for r >= 3, "
                      "k >= 2; smaller values are desk experiments",
                      stacklevel=2)
    if r < 1 or n < 1:
        raise PatternError("need r >= 1 and n >= 1")
    all_edges = complete(n).edges
    for t in range(trials):
        rng = random.Random(seed * 1_000_003 + t)
        shuffled = list(all_edges)
        rng.shuffle(shuffled)
        classes = [[] for _ in range(r)]
        for i, p in enumerate(shuffled):
            classes[i % r].append(p)
        members = tuple(Graph(n, sorted(cls)) for cls in classes)
        if all(is_critical(m, n, r, k).critical for m in members):
            return ColourPattern(n, members, r, k, certified=True)
    return None


def _pentagon_colour(u, v):
    return 1 if (v - u) % 5 in (1, 4) else 2


def _gf16_log_table():
    # GF(2)[x] / (x^4 + x + 1); x itself generates the 15-element group
    logs = {}
    acc = 1
    for t in range(15):
        logs[acc] = t
        acc <<= 1
        if acc & 0b10000:
            acc ^= 0b10011
    return logs


def classical_colouring(name, n):
    """Named triangle-free colourings of K_n, verified before return.

    ``pentagon2`` (n <= 5): cycle distances 1 and 4 get colour 1, the
    rest colour 2 — the double-pentagon split of K5.  ``gf16-3``
    (n <= 16): vertices are field elements, an edge's colour is the
    cubic-residue class of the endpoints' difference.  Both outputs are
    checked to contain no monochromatic triangle in any colour.
    """
    if name == "pentagon2":
        if not 1 <= n <= 5:
            raise PatternError("pentagon2 needs 1 <= n <= 5")
        q = 2
        colour = _pentagon_colour
    elif name == "gf16-3":
        if not 1 <= n <= 16:
            raise PatternError("gf16-3 needs 1 <= n <= 16")
        q = 3
        logs = _gf16_log_table()
        colour = lambda u, v: logs[u ^ v] % 3 + 1
    else:
        raise PatternError(f"unknown colouring {name!r}")
    host = complete(n)
    colours = tuple(colour(u, v) for u, v in host.edges)
    out = EdgeColouring(q, colours)
    for c in range(1, q + 1):
        clsg = Graph(n, [host.edges[i] for i in out.colour_class(c)])
        if enumerate_copies(complete(3), clsg):
            raise PatternError(
                f"{name} produced a monochromatic triangle in colour {c}")
    return out
