"""Transposition generating graphs on labeled vertices 1..n.

A ``GenGraph`` is a simple undirected graph whose vertices are the
positions 1..n and whose edges are the position transpositions used to
generate a Cayley graph.  Named families use fixed canonical labelings so
fixtures are reproducible: paths run 1-2-...-n, stars are centered at 1,
cycles close n back to 1, and unicyclic instances put the cycle on the
smallest labels with a pendant path hanging off vertex 1.

k-trees are built by attaching each new vertex to a k-clique.  The
canonical policy is the "staircase": vertex v joins the k most recently
added vertices, which makes the highest label a degree-k leaf.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

__all__ = [
    "GenGraph",
    "KTreeBuildTrace",
    "build_named",
    "build_k_tree",
    "replay_trace",
    "is_k_tree",
    "find_triangle",
    "edge_count_formula_check",
    "is_connected_gengraph",
    "relabel",
    "parse_edgelist",
    "format_edgelist",
    "NAMED_FAMILIES",
]

NAMED_FAMILIES = (
    "path",
    "star",
    "cycle",
    "complete",
    "unicyclic-with-triangle",
    "unicyclic-triangle-free",
)


def _canonical_edges(edges) -> tuple[tuple[int, int], ...]:
    out = set()
    for e in edges:
        i, j = e
        if i == j:
            raise ValueError(f"loop edge {e!r} not allowed")
        out.add((min(i, j), max(i, j)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class GenGraph:
    """Simple graph on vertices 1..n; edges are unordered position pairs."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need at least 2 vertices, got {self.n}")
        canon = _canonical_edges(self.edges)
        if len(canon) != len(self.edges) or canon != tuple(self.edges):
            object.__setattr__(self, "edges", canon)
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge ({i},{j}) outside 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in set(self.edges)


@dataclass(frozen=True)
class KTreeBuildTrace:
    """Attachment history of a k-tree build: (new_vertex, clique) steps."""

    k: int
    attach_steps: tuple[tuple[int, tuple[int, ...]], ...]


def build_named(family: str, n: int) -> GenGraph:
    """Construct the canonical labeled instance of a named family."""
    if family == "path":
        if n < 2:
            raise ValueError("path needs n >= 2")
        return GenGraph(n, tuple((i, i + 1) for i in range(1, n)))
    if family == "star":
        if n < 3:
            raise ValueError("star needs n >= 3")
        return GenGraph(n, tuple((1, i) for i in range(2, n + 1)))
    if family == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
        return GenGraph(n, tuple(edges))
    if family == "complete":
        if n < 2:
            raise ValueError("complete needs n >= 2")
        return GenGraph(n, tuple(itertools.combinations(range(1, n + 1), 2)))
    if family == "unicyclic-with-triangle":
        if n < 3:
            raise ValueError("unicyclic-with-triangle needs n >= 3")
        edges = [(1, 2), (2, 3), (1, 3)]
        prev = 1
        for v in range(4, n + 1):
            edges.append((prev, v))
            prev = v
        return GenGraph(n, tuple(edges))
    if family == "unicyclic-triangle-free":
        if n < 4:
            raise ValueError("unicyclic-triangle-free needs n >= 4 (girth 4 cycle)")
        edges = [(1, 2), (2, 3), (3, 4), (1, 4)]
        prev = 1
        for v in range(5, n + 1):
            edges.append((prev, v))
            prev = v
        return GenGraph(n, tuple(edges))
    raise ValueError(f"unknown family {family!r}; choose one of {NAMED_FAMILIES}")


def build_k_tree(n: int, k: int, policy: str = "canonical", seed: int | None = None):
    """Build a k-tree on vertices 1..n; returns (graph, build trace).

    ``canonical`` attaches vertex v to the clique {v-k, ..., v-1}; the
    ``seeded`` policy picks a uniformly random k-clique of the graph so
    far, using the given seed.  Either way the last vertex n is a leaf of
    degree exactly k.
    """
    if not (1 <= k <= n - 1):
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    if policy not in ("canonical", "seeded"):
        raise ValueError(f"unknown policy {policy!r}")
    rng = random.Random(seed)
    edges = set(itertools.combinations(range(1, k + 2), 2))
    steps = []
    for v in range(k + 2, n + 1):
        if policy == "canonical":
            clique = tuple(range(v - k, v))
        else:
            cliques = _k_cliques(v - 1, edges, k)
            clique = rng.choice(cliques)
        steps.append((v, clique))
        for u in clique:
            edges.add((u, v))
    g = GenGraph(n, tuple(edges))
    return g, KTreeBuildTrace(k, tuple(steps))


def _k_cliques(n: int, edges: set, k: int) -> list[tuple[int, ...]]:
    edge_set = {(min(a, b), max(a, b)) for a, b in edges}
    out = []
    for combo in itertools.combinations(range(1, n + 1), k):
        if all((a, b) in edge_set for a, b in itertools.combinations(combo, 2)):
            out.append(combo)
    return out


def replay_trace(trace: KTreeBuildTrace) -> GenGraph:
    """Rebuild the graph from a trace, validating every attachment step."""
    k = trace.k
    edges = set(itertools.combinations(range(1, k + 2), 2))
    top = k + 1
    for v, clique in trace.attach_steps:
        if v != top + 1:
            raise ValueError(f"trace attaches {v} but expected {top + 1}")
        if len(clique) != k or any(not (1 <= u <= top) for u in clique):
            raise ValueError(f"bad clique {clique!r} for vertex {v}")
        for a, b in itertools.combinations(sorted(clique), 2):
            if (a, b) not in edges:
                raise ValueError(f"clique {clique!r} not mutually adjacent at step {v}")
        for u in clique:
            edges.add((min(u, v), max(u, v)))
        top = v
    return GenGraph(top, tuple(edges))


def is_k_tree(g: GenGraph, k: int):
    """Recognize k-trees by simplicial elimination.

    Repeatedly deletes the smallest-labeled vertex of degree k whose
    neighborhood is a k-clique; succeeds when K_{k+1} remains.  Returns
    (True, elimination_order) or (False, reason).
    """
    if k < 1:
        return False, f"k must be >= 1, got {k}"
    if g.n < k + 1:
        return False, f"too few vertices for a {k}-tree"
    adj = {v: set(nbrs) for v, nbrs in g.adjacency().items()}
    alive = set(adj)
    order = []
    while len(alive) > k + 1:
        victim = None
        for v in sorted(alive):
            nbrs = adj[v]
            if len(nbrs) != k:
                continue
            if all(b in adj[a] for a, b in itertools.combinations(sorted(nbrs), 2)):
                victim = v
                break
        if victim is None:
            return False, f"no removable degree-{k} simplicial vertex among {sorted(alive)}"
        order.append(victim)
        for u in adj[victim]:
            adj[u].discard(victim)
        alive.discard(victim)
        del adj[victim]
    expected = k * (k + 1) // 2
    got = sum(len(adj[v]) for v in alive) // 2
    if got != expected:
        return False, f"residual graph on {sorted(alive)} is not complete"
    return True, order


def find_triangle(g: GenGraph):
    """Lexicographically least triangle (a, b, c), or None."""
    adj = g.adjacency()
    for a, b, c in itertools.combinations(range(1, g.n + 1), 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            return (a, b, c)
    return None


def edge_count_formula_check(g: GenGraph, k: int) -> bool:
    """For a verified k-tree, compare m against k*n - k(k+1)/2."""
    ok, _ = is_k_tree(g, k)
    if not ok:
        raise ValueError(f"input is not a {k}-tree; edge-count check undefined")
    return g.m == k * g.n - k * (k + 1) // 2


def is_connected_gengraph(g: GenGraph) -> bool:
    adj = g.adjacency()
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def relabel(g: GenGraph, mapping: dict[int, int]) -> GenGraph:
    """Apply a vertex relabeling (a bijection on 1..n)."""
    if sorted(mapping) != list(range(1, g.n + 1)) or sorted(mapping.values()) != list(range(1, g.n + 1)):
        raise ValueError("mapping must be a bijection on 1..n")
    return GenGraph(g.n, tuple((mapping[i], mapping[j]) for i, j in g.edges))


def parse_edgelist(text: str) -> GenGraph:
    """Parse the edge-list format: "n m" header then one "i j" line per edge.

    Blank lines and lines starting with ``#`` are ignored.
    """
    rows = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            rows.append(body)
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header promises {m} edges but {len(rows) - 1} lines follow")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {row!r}")
        i, j = int(parts[0]), int(parts[1])
        if not (1 <= i < j <= n):
            raise ValueError(f"edge line {row!r} must satisfy 1 <= i < j <= n")
        edges.append((i, j))
    g = GenGraph(n, tuple(edges))
    if g.m != m:
        raise ValueError("duplicate edges in input")
    return g


def format_edgelist(g: GenGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{i} {j}" for i, j in g.edges)
    return "\n".join(lines) + "\n"
