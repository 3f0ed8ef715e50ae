"""Cayley graphs of the symmetric group generated by position transpositions.

Vertices are the n! permutations of 1..n, identified with their
lexicographic rank (see ``permutation``).  Two vertices are adjacent when
one is obtained from the other by swapping the symbols in the two
positions of a generator edge, so the graph is m-regular, bipartite by
parity, and vertex transitive.

Adjacency is implicit-first: ``neighbors`` recomputes from the generator
set, and ``materialize`` builds the full table only on request, guarded
by a vertex-count budget (factorial growth makes anything above 9! a
refusal by default).

The copy decomposition splits the vertex set into n classes by the symbol
sitting in a chosen leaf position; each class induces a copy of the
order-(n-1) graph and the generators incident to the leaf provide the
matching of "outsider" edges between copies.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import factorial

from .gengraph import GenGraph, find_triangle
from .permutation import apply_transposition, parity, rank, unrank

__all__ = [
    "CapacityError",
    "CayleyGraph",
    "CopyDecomposition",
    "FourCycle",
    "MAX_MATERIALIZE_VERTICES",
    "decompose",
    "cross_edges",
    "outsider_neighbors",
    "common_neighbors",
    "find_type_a_cycle",
    "find_type_b_cycle",
    "k24_free_check",
    "girth",
    "bipartite_parity_check",
    "degree_regularity_check",
    "decomposition_summary",
    "dot_export",
]

MAX_MATERIALIZE_VERTICES = factorial(9)


class CapacityError(RuntimeError):
    """Raised when a computation would exceed the configured size budget."""


class CayleyGraph:
    """Cay(Sym(n), T) for a transposition generating graph T."""

    def __init__(self, gen: GenGraph):
        self.gen = gen
        self.n = gen.n
        self.generators = tuple(gen.edges)
        self.vertex_count = factorial(gen.n)
        self._adj = None

    @property
    def degree(self) -> int:
        return len(self.generators)

    @property
    def identity_rank(self) -> int:
        return 0

    def permutation_of(self, v: int) -> tuple[int, ...]:
        return unrank(v, self.n)

    def neighbors(self, v: int):
        """All (neighbor rank, generator) pairs of vertex v, recomputed."""
        if not (0 <= v < self.vertex_count):
            raise IndexError(f"vertex {v} out of range for {self.vertex_count} vertices")
        p = unrank(v, self.n)
        return [(rank(apply_transposition(p, a, b)), (a, b)) for a, b in self.generators]

    def neighbor_ranks(self, v: int) -> list[int]:
        return [u for u, _ in self.neighbors(v)]

    def is_materialized(self) -> bool:
        return self._adj is not None

    def materialize(self, max_vertices: int = MAX_MATERIALIZE_VERTICES):
        """Build the full adjacency table (one tuple of ranks per vertex).

        ``adjacency()[v][g]`` is the neighbor of v through ``generators[g]``.
        Refuses when the vertex count exceeds the budget.
        """
        if self._adj is not None:
            return self
        if self.vertex_count > max_vertices:
            raise CapacityError(
                f"{self.vertex_count} vertices exceed the materialization budget "
                f"of {max_vertices}"
            )
        perms = list(itertools.permutations(range(1, self.n + 1)))
        index = {p: i for i, p in enumerate(perms)}
        gens0 = [(a - 1, b - 1) for a, b in self.generators]
        adj = []
        for p in perms:
            row = []
            for a, b in gens0:
                q = list(p)
                q[a], q[b] = q[b], q[a]
                row.append(index[tuple(q)])
            adj.append(tuple(row))
        self._adj = adj
        return self

    def adjacency(self, max_vertices: int = MAX_MATERIALIZE_VERTICES):
        self.materialize(max_vertices)
        return self._adj


@dataclass(frozen=True)
class CopyDecomposition:
    """Partition of the vertex ranks by the symbol in the leaf position."""

    graph: CayleyGraph
    leaf: int
    copies: dict[int, tuple[int, ...]]

    def copy_of(self, v: int) -> int:
        return self.graph.permutation_of(v)[self.leaf - 1]


@dataclass(frozen=True)
class FourCycle:
    """A 4-cycle with its generator labels; kind A alternates two disjoint
    transpositions, kind B walks (sp),(pt),(sp),(st) around a triangle."""

    kind: str
    vertices: tuple[int, int, int, int]
    labels: tuple[tuple[int, int], ...]


def decompose(graph: CayleyGraph, leaf: int | None = None) -> CopyDecomposition:
    """Split the graph into n copies by the symbol in position ``leaf``.

    The default leaf is the highest-labeled minimum-degree vertex of the
    generating graph (for a canonical k-tree that is vertex n, the last
    one attached).
    """
    gen = graph.gen
    if leaf is None:
        degs = {v: gen.degree(v) for v in range(1, gen.n + 1)}
        dmin = min(degs.values())
        leaf = max(v for v, d in degs.items() if d == dmin)
    if not (1 <= leaf <= gen.n):
        raise ValueError(f"leaf {leaf} outside 1..{gen.n}")
    buckets: dict[int, list[int]] = {s: [] for s in range(1, gen.n + 1)}
    for v in range(graph.vertex_count):
        buckets[unrank(v, gen.n)[leaf - 1]].append(v)
    copies = {s: tuple(members) for s, members in buckets.items()}
    size = factorial(gen.n - 1)
    if any(len(members) != size for members in copies.values()):
        raise ValueError("copy classes are not balanced; decomposition is broken")
    return CopyDecomposition(graph, leaf, copies)


def outsider_neighbors(dec: CopyDecomposition, v: int) -> list[int]:
    """Neighbors of v lying outside v's own copy, sorted by rank."""
    graph = dec.graph
    home = dec.copy_of(v)
    out = [u for u, _ in graph.neighbors(v) if dec.copy_of(u) != home]
    return sorted(out)


def cross_edges(dec: CopyDecomposition, i: int, j: int) -> int:
    """Count edges between copies i and j, verifying they form a matching."""
    if i == j:
        raise ValueError("cross_edges needs two distinct copies")
    graph = dec.graph
    endpoints_i = set()
    endpoints_j = set()
    count = 0
    for v in dec.copies[i]:
        for u in outsider_neighbors(dec, v):
            if dec.copy_of(u) == j:
                count += 1
                if v in endpoints_i or u in endpoints_j:
                    raise ValueError(
                        f"cross edges between copies {i} and {j} are not independent"
                    )
                endpoints_i.add(v)
                endpoints_j.add(u)
    return count


def common_neighbors(graph: CayleyGraph, u: int, v: int) -> list[int]:
    """Sorted common neighbors of two distinct vertices."""
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices")
    nu = set(graph.neighbor_ranks(u))
    return sorted(nu.intersection(graph.neighbor_ranks(v)))


def find_type_a_cycle(graph: CayleyGraph, base: int, gen1, gen2) -> FourCycle:
    """The 4-cycle from two disjoint generators: base, base*g1, base*g1*g2, ..."""
    g1 = tuple(sorted(gen1))
    g2 = tuple(sorted(gen2))
    gens = set(graph.generators)
    if g1 not in gens or g2 not in gens:
        raise ValueError(f"generators {g1} and {g2} must both belong to the graph")
    if set(g1) & set(g2):
        raise ValueError(f"generators {g1} and {g2} are not disjoint")
    p = graph.permutation_of(base)
    p2 = apply_transposition(p, *g1)
    p3 = apply_transposition(p2, *g2)
    p4 = apply_transposition(p3, *g1)
    if apply_transposition(p4, *g2) != p:
        raise AssertionError("disjoint transpositions failed to close a 4-cycle")
    verts = (base, rank(p2), rank(p3), rank(p4))
    if len(set(verts)) != 4:
        raise ValueError("degenerate cycle: vertices are not distinct")
    return FourCycle("A", verts, (g1, g2, g1, g2))


def canonical_triangle_order(triangle) -> tuple[int, int, int]:
    """Order a triangle set as (s, p, t) = (min, max, mid)."""
    a, b, c = sorted(triangle)
    return (a, c, b)


def find_type_b_cycle(graph: CayleyGraph, base: int, triangle) -> FourCycle:
    """The 4-cycle walking (sp),(pt),(sp),(st) around a generating triangle.

    ``triangle`` may be an ordered (s, p, t) or a 3-element set; sets are
    ordered canonically as (min, max, mid).
    """
    tri = tuple(triangle)
    if len(tri) != 3 or len(set(tri)) != 3:
        raise ValueError(f"triangle must have three distinct vertices, got {triangle!r}")
    if isinstance(triangle, (set, frozenset)):
        s, p, t = canonical_triangle_order(tri)
    else:
        s, p, t = tri
    gens = set(graph.generators)
    for a, b in ((s, p), (p, t), (s, t)):
        if tuple(sorted((a, b))) not in gens:
            raise ValueError(f"({s},{p},{t}) is not a triangle of the generating graph")
    q1 = graph.permutation_of(base)
    q2 = apply_transposition(q1, s, p)
    q3 = apply_transposition(q2, p, t)
    q4 = apply_transposition(q3, s, p)
    if apply_transposition(q4, s, t) != q1:
        raise AssertionError("triangle walk failed to close a 4-cycle")
    verts = (base, rank(q2), rank(q3), rank(q4))
    if len(set(verts)) != 4:
        raise ValueError("degenerate cycle: vertices are not distinct")
    labels = (
        tuple(sorted((s, p))),
        tuple(sorted((p, t))),
        tuple(sorted((s, p))),
        tuple(sorted((s, t))),
    )
    return FourCycle("B", verts, labels)


def type_b_diagonal_vertices(graph: CayleyGraph, cycle: FourCycle) -> tuple[int, int]:
    """The two shared off-cycle neighbors of the diagonal pairs of a type B
    cycle: x adjacent to vertices 1 and 3, y adjacent to vertices 2 and 4."""
    if cycle.kind != "B":
        raise ValueError("diagonal vertices are specific to type B cycles")
    sp, pt, _, st = cycle.labels
    u1 = graph.permutation_of(cycle.vertices[0])
    u2 = graph.permutation_of(cycle.vertices[1])
    x = rank(apply_transposition(u1, *pt))
    y = rank(apply_transposition(u2, *st))
    return x, y


@dataclass(frozen=True)
class K24CheckResult:
    free: bool
    max_common: int
    pairs_checked: int
    witness: tuple | None


def sample_vertex_pairs(count: int, samples: int, seed: int):
    """Seeded distinct unordered vertex pairs, sorted for determinism."""
    rng = random.Random(seed)
    seen = set()
    while len(seen) < samples:
        u = rng.randrange(count)
        v = rng.randrange(count)
        if u == v:
            continue
        seen.add((min(u, v), max(u, v)))
    return sorted(seen)


def k24_free_from_adjacency(adj, pairs=None) -> K24CheckResult:
    """Check no two vertices share four common neighbors, over the given
    vertex pairs (all pairs when omitted)."""
    sets = [set(nbrs) for nbrs in adj]
    if pairs is None:
        pairs = itertools.combinations(range(len(adj)), 2)
    best = -1
    witness = None
    checked = 0
    for u, v in pairs:
        checked += 1
        commons = sets[u] & sets[v]
        if len(commons) > best:
            best = len(commons)
            witness = (u, v, tuple(sorted(commons)))
    free = best <= 3
    return K24CheckResult(free, best, checked, None if free else witness)


def k24_free_check(
    graph: CayleyGraph,
    samples: int | None = None,
    seed: int = 0,
    max_vertices: int = MAX_MATERIALIZE_VERTICES,
) -> K24CheckResult:
    """Common-neighbor bound on a Cayley graph: exhaustive pairs by default,
    or a seeded random sample of ``samples`` pairs."""
    adj = graph.adjacency(max_vertices)
    if samples is None:
        return k24_free_from_adjacency(adj)
    return k24_free_from_adjacency(adj, sample_vertex_pairs(len(adj), samples, seed))


def _shortest_cycle_through(adj, start: int, cap: int | None) -> int | None:
    # BFS from start; a non-tree edge at depths (d, d) closes an odd cycle
    # 2d+1, at depths (d, d+1) an even cycle 2d+2.
    dist = {start: 0}
    parent = {start: -1}
    frontier = [start]
    best = None
    depth = 0
    while frontier:
        if cap is not None and 2 * depth + 1 >= cap and (best is None or best > cap):
            break
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = depth + 1
                    parent[y] = x
                    nxt.append(y)
                elif y != parent[x] and dist[y] >= depth:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
        if best is not None and best <= 2 * depth + 2:
            break
        frontier = nxt
        depth += 1
    return best


def girth(graph: CayleyGraph, scan_all: bool = False,
          max_vertices: int = MAX_MATERIALIZE_VERTICES) -> int | None:
    """Length of the shortest cycle, or None for forests.

    By default one truncated breadth-first search from the identity is
    enough because the graph is vertex transitive; ``scan_all`` runs the
    search from every vertex instead (used to cross-check the shortcut),
    early-exiting at 4, the bipartite floor.
    """
    adj = graph.adjacency(max_vertices)
    if not scan_all:
        return _shortest_cycle_through(adj, 0, None)
    best = None
    for v in range(len(adj)):
        got = _shortest_cycle_through(adj, v, best)
        if got is not None and (best is None or got < best):
            best = got
            if best == 4:
                break
    return best


def bipartite_parity_check(graph: CayleyGraph,
                           max_vertices: int = MAX_MATERIALIZE_VERTICES) -> bool:
    """Every edge must join permutations of opposite parity."""
    adj = graph.adjacency(max_vertices)
    par = [parity(p) for p in itertools.permutations(range(1, graph.n + 1))]
    return all(par[v] != par[u] for v in range(len(adj)) for u in adj[v])


def degree_regularity_check(graph: CayleyGraph,
                            max_vertices: int = MAX_MATERIALIZE_VERTICES) -> bool:
    """Every vertex has exactly m distinct neighbors, symmetrically."""
    adj = graph.adjacency(max_vertices)
    m = graph.degree
    for v in range(len(adj)):
        row = set(adj[v])
        if len(adj[v]) != m or len(row) != m or v in row:
            return False
        if any(v not in adj[u] for u in row):
            return False
    return True


def decomposition_summary(dec: CopyDecomposition) -> dict:
    """JSON-ready summary: leaf, copy sizes, and the cross-edge matrix."""
    labels = sorted(dec.copies)
    matrix = []
    for i in labels:
        row = []
        for j in labels:
            row.append(0 if i == j else cross_edges(dec, i, j))
        matrix.append(row)
    return {
        "leaf": dec.leaf,
        "copy_sizes": {str(s): len(dec.copies[s]) for s in labels},
        "cross_edge_matrix": matrix,
    }


def dot_export(graph: CayleyGraph, max_n: int = 4) -> str:
    """DOT text of the whole graph with generator labels on the edges."""
    if graph.n > max_n:
        raise CapacityError(
            f"DOT export limited to n <= {max_n}; {graph.n} is too large"
        )
    from .permutation import format_permutation

    lines = ["graph cayley {"]
    for v in range(graph.vertex_count):
        lines.append(f'  v{v} [label="{format_permutation(graph.permutation_of(v))}"];')
    for v in range(graph.vertex_count):
        for u, (a, b) in graph.neighbors(v):
            if v < u:
                lines.append(f'  v{v} -- v{u} [label="({a} {b})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def has_triangle(graph: CayleyGraph) -> bool:
    return find_triangle(graph.gen) is not None
