"""Vertex cuts with surviving-degree constraints, and the exact search engine.

A level-k cut of a graph is a vertex set F whose removal leaves the graph
disconnected with every surviving vertex keeping at least k surviving
neighbors; kappa_k is the minimum size of such a cut.  Everything here
works on plain adjacency lists (``adj[v]`` is a sequence of neighbor
indices), so the same engine runs on Cayley graphs and on small generic
fixtures.

Search strategy.  Candidate "small sides" are connected induced
subgraphs H, each enumerated exactly once by canonical extension (branch
on including or permanently excluding each frontier vertex).  For a valid
H (min degree of G[H] >= k) the cheapest completion keeps, out of the
vertices not in H and not adjacent to H, exactly their k-core; everything
else joins the cut:

    F(H) = V - H - kcore_k(V - H - N(H))

Both surviving sides then have min degree >= k and no edges between them,
so every F(H) is a genuine cut, and the smallest component of any optimal
cut appears as some H, which makes the minimum over candidates exact.
When the co-side k-core equals the whole co-side this reduces to the
familiar F = N(H).

Certification.  The smallest component of any cut of an N-vertex graph
has at most floor((N-1)/2) vertices, so a search with s_max at least that
bound proves optimality ("exhaustive").  A smaller s_max yields a floor
("bounded:s"): no cut smaller than the reported size has a smallest
component of at most s vertices.  A search cut off by its time budget is
flagged "partial" and proves nothing beyond the certificate it returns.

Pruning never loses ties: subtrees are cut only when a lower bound on any
completion strictly exceeds the incumbent, so every candidate matching
the final best size is visited and ties resolve to the lexicographically
least side regardless of worker count.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

__all__ = [
    "CutCertificate",
    "SearchReport",
    "components",
    "is_rk_cut",
    "neighborhood",
    "side_cut_certificate",
    "neighborhood_cut_of_cycle",
    "verify_certificate",
    "vertex_connectivity",
    "k_core",
    "connected_induced_subgraphs",
    "min_rk_cut_search",
    "kappa1_search",
    "brute_force_min_rk_cut",
    "classify_small_cut_shape",
    "find_short_cycle",
]


# ---------------------------------------------------------------------------
# basic cut predicates


def components(adj, removed=()) -> list[list[int]]:
    """Connected components of the graph minus ``removed``.

    Each component is sorted; components are ordered by decreasing size,
    then by least vertex.
    """
    gone = set(removed)
    seen = set(gone)
    comps = []
    for start in range(len(adj)):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps


def is_rk_cut(adj, cut, k: int):
    """Decide whether ``cut`` is a level-k vertex cut.

    Returns (True, None, None) or (False, reason, witness) where reason is
    "still-connected" or "low-degree-vertex" (witness is the offending
    vertex), reporting the first violation.
    """
    gone = set(cut)
    comps = components(adj, gone)
    if len(comps) <= 1:
        return False, "still-connected", None
    for v in range(len(adj)):
        if v in gone:
            continue
        deg = sum(1 for u in adj[v] if u not in gone)
        if deg < k:
            return False, "low-degree-vertex", v
    return True, None, None


def neighborhood(adj, side) -> set:
    """N(side): vertices outside ``side`` adjacent to it."""
    side_set = set(side)
    out = set()
    for v in side_set:
        out.update(adj[v])
    return out - side_set


def surviving_min_degree(adj, alive_set, comp) -> int:
    return min(sum(1 for u in adj[v] if u in alive_set) for v in comp)


# ---------------------------------------------------------------------------
# certificates


@dataclass
class CutCertificate:
    """A witnessed cut: small side H, cut F, and component evidence.

    F always contains N(H) (no edge joins H to the rest), and removing F
    leaves every component with min degree >= k_level.
    """

    k_level: int
    side_h: tuple[int, ...]
    cut_f: tuple[int, ...]
    component_summary: tuple[tuple[int, int], ...]
    certified: str = "construction"

    @property
    def size(self) -> int:
        return len(self.cut_f)

    def as_dict(self) -> dict:
        return {
            "k": self.k_level,
            "H": list(self.side_h),
            "F": list(self.cut_f),
            "components": [
                {"size": s, "min_degree": d} for s, d in self.component_summary
            ],
            "certified": self.certified,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CutCertificate":
        return cls(
            k_level=int(data["k"]),
            side_h=tuple(int(v) for v in data["H"]),
            cut_f=tuple(int(v) for v in data["F"]),
            component_summary=tuple(
                (int(c["size"]), int(c["min_degree"])) for c in data["components"]
            ),
            certified=str(data.get("certified", "construction")),
        )


def _component_summary(adj, cut) -> tuple[tuple[int, int], ...]:
    gone = set(cut)
    alive = set(range(len(adj))) - gone
    return tuple(
        (len(comp), surviving_min_degree(adj, alive, comp))
        for comp in components(adj, gone)
    )


def side_cut_certificate(adj, side, k_level: int,
                         certified: str = "construction") -> CutCertificate:
    """Certificate for the cut F = N(side); validity is not enforced here,
    run the result through ``verify_certificate`` or ``is_rk_cut``."""
    side_t = tuple(sorted(set(side)))
    cut = tuple(sorted(neighborhood(adj, side_t)))
    return CutCertificate(
        k_level=k_level,
        side_h=side_t,
        cut_f=cut,
        component_summary=_component_summary(adj, cut),
        certified=certified,
    )


def neighborhood_cut_of_cycle(adj, cycle, k_level: int = 2) -> CutCertificate:
    """The cut F = N(V(C)) around a 4-cycle (shared neighbors deduplicate
    by construction of N as a set)."""
    verts = tuple(getattr(cycle, "vertices", cycle))
    if len(set(verts)) != len(verts) or len(verts) < 3:
        raise ValueError(f"degenerate cycle {verts!r}")
    for a, b in zip(verts, verts[1:] + verts[:1]):
        if b not in adj[a]:
            raise ValueError(f"cycle edge ({a},{b}) is missing from the graph")
    return side_cut_certificate(adj, verts, k_level)


def verify_certificate(adj, cert: CutCertificate):
    """Recheck every invariant of a certificate against the graph.

    Returns (True, "") or (False, reason).  Tampering with H, F or the
    summary is detected by recomputation.
    """
    n = len(adj)
    side = set(cert.side_h)
    cut = set(cert.cut_f)
    if not side:
        return False, "empty side"
    if side & cut:
        return False, "side and cut overlap"
    if any(not (0 <= v < n) for v in side | cut):
        return False, "vertex index out of range"
    rest = set(range(n)) - side - cut
    for v in side:
        for u in adj[v]:
            if u in rest:
                return False, f"edge ({v},{u}) escapes the side past the cut"
    if len(components(adj, set(range(n)) - side)) != 1:
        return False, "side is not connected"
    ok, reason, witness = is_rk_cut(adj, cert.cut_f, cert.k_level)
    if not ok:
        detail = f" at vertex {witness}" if witness is not None else ""
        return False, f"not a level-{cert.k_level} cut: {reason}{detail}"
    if _component_summary(adj, cert.cut_f) != cert.component_summary:
        return False, "component summary does not match the graph"
    return True, ""


# ---------------------------------------------------------------------------
# classic vertex connectivity (max-flow)


class _Dinic:
    def __init__(self, n: int):
        self.adj = [[] for _ in range(n)]

    def add_edge(self, u: int, v: int, cap: int) -> None:
        self.adj[u].append([v, cap, len(self.adj[v])])
        self.adj[v].append([u, 0, len(self.adj[u]) - 1])

    def max_flow(self, s: int, t: int, limit: int) -> int:
        flow = 0
        n = len(self.adj)
        while flow < limit:
            level = [-1] * n
            level[s] = 0
            queue = [s]
            for v in queue:
                for e in self.adj[v]:
                    if e[1] > 0 and level[e[0]] < 0:
                        level[e[0]] = level[v] + 1
                        queue.append(e[0])
            if level[t] < 0:
                break
            it = [0] * n

            def dfs(v, pushed):
                if v == t:
                    return pushed
                while it[v] < len(self.adj[v]):
                    e = self.adj[v][it[v]]
                    if e[1] > 0 and level[e[0]] == level[v] + 1:
                        got = dfs(e[0], min(pushed, e[1]))
                        if got:
                            e[1] -= got
                            self.adj[e[0]][e[2]][1] += got
                            return got
                    it[v] += 1
                return 0

            while flow < limit:
                pushed = dfs(s, limit - flow)
                if not pushed:
                    break
                flow += pushed
        return flow


def _local_vertex_connectivity(adj, s: int, t: int, limit: int) -> int:
    # split every vertex into in (2v) and out (2v+1); interior capacity 1
    n = len(adj)
    big = n * n
    net = _Dinic(2 * n)
    for v in range(n):
        net.add_edge(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for u in adj[v]:
            net.add_edge(2 * v + 1, 2 * u, big)
    return net.max_flow(2 * s + 1, 2 * t, limit)


def vertex_connectivity(adj) -> int:
    """Classic kappa by max-flow between one fixed vertex and all its
    non-neighbors, plus the sweep over non-adjacent neighbor pairs."""
    n = len(adj)
    if n < 2:
        raise ValueError("connectivity needs at least two vertices")
    if len(components(adj)) != 1:
        return 0
    degrees = [len(a) for a in adj]
    if min(degrees) == n - 1:
        return n - 1
    v0 = min(range(n), key=lambda v: (degrees[v], v))
    best = degrees[v0]
    nbrs = set(adj[v0])
    for t in range(n):
        if t != v0 and t not in nbrs:
            best = min(best, _local_vertex_connectivity(adj, v0, t, best))
    for x, y in itertools.combinations(sorted(nbrs), 2):
        if y not in set(adj[x]):
            best = min(best, _local_vertex_connectivity(adj, x, y, best))
    return best


# ---------------------------------------------------------------------------
# k-cores and short cycles


def _kcore_mask(masks, w_mask: int, k: int) -> int:
    changed = True
    while changed:
        changed = False
        m = w_mask
        while m:
            bit = m & -m
            m ^= bit
            if (masks[bit.bit_length() - 1] & w_mask).bit_count() < k:
                w_mask ^= bit
                changed = True
    return w_mask


def k_core(adj, vertices, k: int) -> list[int]:
    """The maximum subset of ``vertices`` inducing min degree >= k."""
    masks = [0] * len(adj)
    for v in vertices:
        masks[v] = sum(1 << u for u in adj[v])
    w = sum(1 << v for v in set(vertices))
    core = _kcore_mask(masks, w, k)
    return _mask_to_list(core)


def _mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        bit = mask & -mask
        out.append(bit.bit_length() - 1)
        mask ^= bit
    return out


def find_short_cycle(adj, start: int = 0) -> list[int] | None:
    """Vertices of a shortest cycle through ``start`` (exact on bipartite
    and vertex-transitive graphs), or None if none reachable."""
    dist = {start: 0}
    parent = {start: -1}
    frontier = [start]
    best = None
    best_edge = None
    depth = 0
    while frontier and best is None:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = depth + 1
                    parent[y] = x
                    nxt.append(y)
                elif y != parent[x]:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
                        best_edge = (x, y)
        frontier = nxt
        depth += 1
    if best is None:
        return None
    x, y = best_edge
    px = []
    while x != -1:
        px.append(x)
        x = parent[x]
    py = []
    while y != -1:
        py.append(y)
        y = parent[y]
    shared = set(px) & set(py)
    lca = next(v for v in px if v in shared)
    cycle = px[: px.index(lca) + 1] + list(reversed(py[: py.index(lca)]))
    return cycle


# ---------------------------------------------------------------------------
# enumeration and search


def connected_induced_subgraphs(adj, max_size: int):
    """Yield every connected induced subgraph with at most ``max_size``
    vertices exactly once, as a sorted tuple.

    Canonical extension: subgraphs are rooted at their least vertex and
    grown only through larger vertices, branching on taking or permanently
    skipping each frontier vertex.
    """
    n = len(adj)
    masks = [sum(1 << u for u in row) for row in adj]
    out: list[tuple[int, ...]] = []

    def rec(h_mask, cover, excl, size, acc):
        yield acc
        if size == max_size:
            return
        ext = cover & ~h_mask & gt & ~excl
        local_excl = excl
        while ext:
            bit = ext & -ext
            ext ^= bit
            v = bit.bit_length() - 1
            yield from rec(h_mask | bit, cover | masks[v], local_excl,
                           size + 1, acc + (v,))
            local_excl |= bit

    for r in range(n):
        gt = ~((1 << (r + 1)) - 1)
        for acc in rec(1 << r, masks[r], 0, 1, (r,)):
            yield tuple(sorted(acc))


@dataclass
class SearchReport:
    """Outcome of a minimum level-k cut search."""

    k_level: int
    best_size: int | None
    certificate: CutCertificate | None
    certification: str
    nodes_explored: int
    elapsed: float
    s_max: int

    def as_dict(self, include_elapsed: bool = True) -> dict:
        data = {
            "k": self.k_level,
            "best_size": self.best_size,
            "certification": self.certification,
            "nodes_explored": self.nodes_explored,
            "s_max": self.s_max,
            "certificate": self.certificate.as_dict() if self.certificate else None,
        }
        if include_elapsed:
            data["elapsed_seconds"] = round(self.elapsed, 3)
        return data


def _evaluate_side(masks, n, all_mask, k, h_mask):
    """Completion value of a candidate side, or None if invalid.

    Returns (cut size, co-side mask) for F = V - H - kcore(non-neighbors).
    """
    h_size = h_mask.bit_count()
    if h_size < k + 1:
        return None
    cover = 0
    m = h_mask
    while m:
        bit = m & -m
        m ^= bit
        v = bit.bit_length() - 1
        if (masks[v] & h_mask).bit_count() < k:
            return None
        cover |= masks[v]
    w_mask = all_mask & ~(cover | h_mask)
    co = _kcore_mask(masks, w_mask, k)
    if not co:
        return None
    co_size = co.bit_count()
    if h_size > co_size:
        return None
    return n - h_size - co_size, co


def _search_roots(masks, n, k, s_max, roots, init_best, init_h, time_left):
    """Enumerate candidate sides rooted at each vertex in ``roots``.

    Returns (best_size, best_side_tuple, nodes, timed_out).  init_best is
    a sentinel-free incumbent (n + 1 when none).
    """
    all_mask = (1 << n) - 1
    best = init_best
    best_h = init_h
    nodes = 0
    timed_out = False
    deadline = None if time_left is None else time.monotonic() + time_left

    def rec(h_mask, cover, excl, h_size, acc):
        nonlocal best, best_h, nodes, timed_out
        if timed_out:
            return
        nodes += 1
        if deadline is not None and nodes & 0x3FFF == 0:
            if time.monotonic() > deadline:
                timed_out = True
                return
        nh_mask = cover & ~h_mask
        nh_size = nh_mask.bit_count()
        w_size = n - h_size - nh_size
        if h_size > k and nh_size <= best and h_size <= w_size:
            got = _evaluate_side(masks, n, all_mask, k, h_mask)
            if got is not None:
                f_size = got[0]
                if f_size < best or (f_size == best and
                                     (best_h is None or tuple(sorted(acc)) < best_h)):
                    best = f_size
                    best_h = tuple(sorted(acc))
        if h_size >= s_max or h_size > w_size:
            return
        bound = nh_size - (s_max - h_size)
        capped = w_size if w_size < s_max else s_max
        other = n - capped - w_size
        if other > bound:
            bound = other
        if bound > best:
            return
        ext = nh_mask & gt & ~excl
        local_excl = excl
        while ext:
            bit = ext & -ext
            ext ^= bit
            v = bit.bit_length() - 1
            rec(h_mask | bit, cover | masks[v], local_excl, h_size + 1, acc + (v,))
            if timed_out:
                return
            local_excl |= bit

    for r in roots:
        gt = ~((1 << (r + 1)) - 1)
        rec(1 << r, masks[r], 0, 1, (r,))
        if timed_out:
            break
    return best, best_h, nodes, timed_out


def _search_worker(args):
    return _search_roots(*args)


def min_rk_cut_search(adj, k: int, s_max: int | None = None, workers: int = 1,
                      budget_seconds: float | None = None,
                      seed_sides=None) -> SearchReport:
    """Minimum level-k cut by canonical small-side enumeration.

    ``s_max`` bounds the small side (default floor((N-1)/2), which is
    enough for a proof of optimality); ``seed_sides`` are candidate sides
    evaluated up front to prime the incumbent.  The reported certificate
    is identical for any worker count; a budget overrun downgrades the
    certification to "partial".
    """
    n = len(adj)
    if k < 1:
        raise ValueError(f"cut level must be >= 1, got {k}")
    if n < 4:
        raise ValueError("graph too small for a meaningful cut search")
    if len(components(adj)) != 1:
        raise ValueError("cut search expects a connected graph")
    exhaustive_bound = (n - 1) // 2
    if s_max is None:
        s_max = exhaustive_bound
    if s_max < 1:
        raise ValueError(f"s_max must be >= 1, got {s_max}")
    start = time.monotonic()
    masks = [sum(1 << u for u in row) for row in adj]
    all_mask = (1 << n) - 1

    best = n + 1
    best_h = None
    sides = [tuple(sorted(set(s))) for s in (seed_sides or [])]
    if k == 1 and adj[0]:
        sides.append(tuple(sorted((0, min(adj[0])))))
    if k == 2:
        cyc = find_short_cycle(adj, 0)
        if cyc:
            sides.append(tuple(sorted(cyc)))
    for side in sides:
        h_mask = sum(1 << v for v in side)
        got = _evaluate_side(masks, n, all_mask, k, h_mask)
        if got is not None:
            f_size = got[0]
            if f_size < best or (f_size == best and (best_h is None or side < best_h)):
                best = f_size
                best_h = side

    roots = list(range(n))
    time_left = budget_seconds
    if workers > 1:
        chunks = [roots[i::workers] for i in range(workers)]
        args = [(masks, n, k, s_max, chunk, best, best_h, time_left)
                for chunk in chunks if chunk]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_search_worker, args))
        nodes = sum(p[2] for p in parts)
        timed_out = any(p[3] for p in parts)
        for p_best, p_h, _, _ in parts:
            if p_best < best or (p_best == best and p_h is not None and
                                 (best_h is None or p_h < best_h)):
                best = p_best
                best_h = p_h
    else:
        best, best_h, nodes, timed_out = _search_roots(
            masks, n, k, s_max, roots, best, best_h, time_left)

    elapsed = time.monotonic() - start
    if timed_out:
        certification = "partial"
    elif s_max >= exhaustive_bound:
        certification = "exhaustive"
    else:
        certification = f"bounded:{s_max}"

    if best_h is None:
        return SearchReport(k, None, None, certification, nodes, elapsed, s_max)

    h_mask = sum(1 << v for v in best_h)
    f_size, co = _evaluate_side(masks, n, all_mask, k, h_mask)
    cut = tuple(_mask_to_list(all_mask & ~(h_mask | co)))
    cert = CutCertificate(
        k_level=k,
        side_h=best_h,
        cut_f=cut,
        component_summary=_component_summary(adj, cut),
        certified=certification,
    )
    ok, reason, witness = is_rk_cut(adj, cut, k)
    if not ok:
        raise AssertionError(
            f"search produced an invalid cut ({reason}, witness {witness})")
    if f_size != best or len(cut) != best:
        raise AssertionError("search bookkeeping mismatch on the best cut size")
    return SearchReport(k, best, cert, certification, nodes, elapsed, s_max)


def kappa1_search(adj, s_max: int | None = None, workers: int = 1,
                  budget_seconds: float | None = None) -> SearchReport:
    """Minimum level-1 cut; the smallest useful side is a single edge and
    the edge-neighborhood construction primes the incumbent."""
    return min_rk_cut_search(adj, 1, s_max=s_max, workers=workers,
                             budget_seconds=budget_seconds)


def brute_force_min_rk_cut(adj, k: int, max_vertices: int = 20):
    """Independent oracle: try every vertex subset as a cut, smallest and
    lexicographically least first.  Returns (size, cut) or (None, None)."""
    n = len(adj)
    if n > max_vertices:
        raise ValueError(f"brute force limited to {max_vertices} vertices")
    for size in range(n + 1):
        for cut in itertools.combinations(range(n), size):
            ok, _, _ = is_rk_cut(adj, cut, k)
            if ok:
                return size, cut
    return None, None


# ---------------------------------------------------------------------------
# bounded-fault classification


def classify_small_cut_shape(adj, cut, m: int, gen_has_triangle: bool):
    """Shape of the survivor graph for a fault set within the classical
    bound (2m-2 without generating triangles, 2m-3 with one), m >= 7.

    Returns (label, detail); labels outside the classification come back
    as "outside-hypothesis" (precondition broken) or "violation" (shape
    not in the catalog, which would refute the classification).
    """
    bound = 2 * m - 3 if gen_has_triangle else 2 * m - 2
    if m < 7:
        return "outside-hypothesis", f"m={m} below the m>=7 hypothesis"
    if len(cut) > bound:
        return "outside-hypothesis", f"|F|={len(cut)} exceeds the bound {bound}"
    comps = components(adj, set(cut))
    sizes = sorted(len(c) for c in comps)
    if len(comps) == 1:
        return "connected", "survivor graph is connected"
    if len(comps) == 2 and sizes[0] == 1:
        return "singleton", "two components, one a singleton"
    if (len(comps) == 2 and sizes[0] == 2 and not gen_has_triangle
            and len(cut) == 2 * m - 2):
        return "K2-component", "two components, one an edge, |F|=2m-2"
    if (len(comps) == 3 and sizes[0] == 1 and sizes[1] == 1
            and not gen_has_triangle and len(cut) == 2 * m - 2):
        return "two-singletons-no-triangle", "three components, two singletons"
    if (len(comps) == 3 and sizes[0] == 1 and sizes[1] == 1
            and gen_has_triangle and len(cut) == 2 * m - 3):
        return "two-singletons-triangle", "three components, two singletons"
    shape = [len(c) for c in comps]
    return "violation", f"component sizes {shape} with |F|={len(cut)} match no clause"
