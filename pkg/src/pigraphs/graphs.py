"""Simple undirected graphs with bit-set adjacency rows.

Adjacency rows are Python ints used as bit-sets; row v has bit u set iff
u and v are adjacent.  All graphs are simple: symmetric and irreflexive.
"""

from dataclasses import dataclass

from .errors import NotABijection, SizeLimitExceeded
from .green import Partition, partition_from_groups

ISO_MAX_ORDER = 40


def bits(mask: int):
    """Yield the set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple
    labels: tuple | None = None

    def __post_init__(self):
        full = (1 << self.order) - 1
        for v, row in enumerate(self.adj):
            assert row & ~full == 0, "adjacency bit out of range"
            assert not row >> v & 1, "graph must be irreflexive"
            for u in bits(row):
                assert self.adj[u] >> v & 1, "adjacency must be symmetric"

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list:
        return [(u, v) for u in range(self.order)
                for v in bits(self.adj[u]) if u < v]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def from_edges(order: int, edges, labels=None) -> Graph:
    adj = [0] * order
    for u, v in edges:
        if u == v:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, tuple(adj),
                 tuple(labels) if labels is not None else None)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi graph from a seeded random.Random instance."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return from_edges(n, edges)


@dataclass(frozen=True)
class GraphStats:
    degrees: tuple
    edge_count: int
    is_connected: bool
    is_complete: bool
    is_null: bool


def components(g: Graph) -> Partition:
    """Connected components as a vertex partition."""
    seen = 0
    groups = []
    for v in range(g.order):
        if seen >> v & 1:
            continue
        comp = 0
        frontier = 1 << v
        while frontier:
            comp |= frontier
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
        seen |= comp
        groups.append(list(bits(comp)))
    return partition_from_groups(g.order, groups)


def all_components_complete(g: Graph) -> bool:
    for cls in components(g).classes:
        for i, u in enumerate(cls):
            for v in cls[i + 1:]:
                if not g.has_edge(u, v):
                    return False
    return True


def graph_stats(g: Graph) -> GraphStats:
    degrees = tuple(g.degree(v) for v in range(g.order))
    edge_count = sum(degrees) // 2
    return GraphStats(
        degrees=degrees,
        edge_count=edge_count,
        is_connected=components(g).size <= 1,
        is_complete=all(d == g.order - 1 for d in degrees),
        is_null=edge_count == 0,
    )


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order,
                 tuple((full ^ g.adj[v]) & ~(1 << v) for v in range(g.order)),
                 g.labels)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph on the given vertices, kept in ascending vertex order."""
    verts = sorted(vertices)
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for i, v in enumerate(verts):
        for u in bits(g.adj[v]):
            if u in pos:
                adj[i] |= 1 << pos[u]
    labels = tuple(g.label(v) for v in verts) if g.labels else None
    return Graph(len(verts), tuple(adj), labels)


def intersection_graph(n: int) -> Graph:
    """Intersection graph of the nonempty subsets of an n-set.

    Vertex k stands for bitmask k+1; labels spell the subsets out.
    """
    from .families import subset_label
    if not 1 <= n <= 6:
        raise SizeLimitExceeded("intersection_graph supports 1 <= n <= 6")
    masks = list(range(1, 1 << n))
    adj = [0] * len(masks)
    for i, a in enumerate(masks):
        for j in range(i + 1, len(masks)):
            if a & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(len(masks), tuple(adj),
                 tuple(subset_label(m) for m in masks))


def degree_of_subset_vertex(n: int, k: int) -> int:
    """Closed-form degree 2^n - 2^(n-k) - 1 of a rank-k subset vertex."""
    assert 1 <= k <= n
    return (1 << n) - (1 << (n - k)) - 1


def verify_isomorphism(g: Graph, h: Graph, mapping) -> bool:
    """Check that mapping preserves both adjacency and non-adjacency."""
    if (g.order != h.order or len(mapping) != g.order
            or sorted(mapping) != list(range(h.order))):
        raise NotABijection("mapping is not a bijection between vertex sets")
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if g.has_edge(u, v) != h.has_edge(mapping[u], mapping[v]):
                return False
    return True


def _joint_refinement(g: Graph, h: Graph):
    """Iterated degree refinement over both graphs with shared color ids."""
    cg = [g.degree(v) for v in range(g.order)]
    ch = [h.degree(v) for v in range(h.order)]
    for _ in range(g.order):
        sg = [(cg[v], tuple(sorted(cg[u] for u in bits(g.adj[v]))))
              for v in range(g.order)]
        sh = [(ch[v], tuple(sorted(ch[u] for u in bits(h.adj[v]))))
              for v in range(h.order)]
        ids = {sig: i for i, sig in enumerate(sorted(set(sg) | set(sh)))}
        ng = [ids[s] for s in sg]
        nh = [ids[s] for s in sh]
        if ng == cg and nh == ch:
            break
        cg, ch = ng, nh
    return cg, ch


def are_isomorphic(g: Graph, h: Graph, max_order: int = ISO_MAX_ORDER):
    """A vertex bijection preserving (non-)adjacency, or None.

    Backtracking over color classes produced by iterated degree
    refinement; intended for small orders.
    """
    if g.order != h.order:
        return None
    if g.order > max_order:
        raise SizeLimitExceeded(
            f"isomorphism search guarded at order {max_order}")
    if g.order == 0:
        return []
    if sorted(g.degree(v) for v in range(g.order)) != \
            sorted(h.degree(v) for v in range(h.order)):
        return None
    cg, ch = _joint_refinement(g, h)
    if sorted(cg) != sorted(ch):
        return None
    candidates = {v: [u for u in range(h.order) if ch[u] == cg[v]]
                  for v in range(g.order)}
    order = sorted(range(g.order), key=lambda v: (len(candidates[v]), -g.degree(v)))
    mapping = [-1] * g.order
    used = [False] * h.order

    def extend(i):
        if i == g.order:
            return True
        v = order[i]
        for u in candidates[v]:
            if used[u]:
                continue
            ok = True
            for w in order[:i]:
                if g.has_edge(v, w) != h.has_edge(u, mapping[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = u
                used[u] = True
                if extend(i + 1):
                    return True
                used[u] = False
                mapping[v] = -1
        return False

    if extend(0):
        return mapping
    return None


def to_json_dict(g: Graph) -> dict:
    return {
        "order": g.order,
        "labels": list(g.labels) if g.labels is not None else None,
        "edges": [[u, v] for u, v in g.edges()],
    }


def from_json_dict(doc: dict) -> Graph:
    return from_edges(doc["order"], doc["edges"], doc.get("labels"))


def to_dot(g: Graph) -> str:
    lines = ["graph {"]
    isolated = [v for v in range(g.order) if g.adj[v] == 0]
    for v in isolated:
        lines.append(f'  "{g.label(v)}";')
    for u, v in g.edges():
        lines.append(f'  "{g.label(u)}" -- "{g.label(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())
