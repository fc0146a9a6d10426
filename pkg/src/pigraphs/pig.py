"""Principal ideal graphs and their L/R-class quotients.

Vertices of the full graph are the nonzero elements in element order;
two are adjacent when their principal (left or right) ideals share a
nonzero element.  The quotient graph has one vertex per nonzero L-class
(or R-class), ordered by minimal representative, and its construction
re-checks on every pair that adjacency does not depend on the chosen
representatives.
"""

from .errors import (
    EmptyVertexSet,
    InconsistentQuotient,
    IsomorphismCheckFailed,
    NotInverseSemigroup,
    SizeLimitExceeded,
)
from .families import ISN_MAX, all_partial_bijections
from .graphs import Graph, verify_isomorphism
from .green import l_classes, left_ideals, r_classes, right_ideals
from .semigroups import Semigroup, check_involution, inverses
from .skeletal import VertexMap


def pig_vertices(s: Semigroup) -> list:
    """Element indices serving as graph vertices: everything but the zero."""
    verts = [x for x in range(s.order) if x != s.zero]
    if not verts:
        raise EmptyVertexSet("semigroup has no nonzero elements")
    return verts


def _pig(s: Semigroup, ideals) -> Graph:
    verts = pig_vertices(s)
    nonzero = (1 << s.order) - 1
    if s.zero is not None:
        nonzero ^= 1 << s.zero
    adj = [0] * len(verts)
    for i, a in enumerate(verts):
        ia = ideals[a]
        for j in range(i + 1, len(verts)):
            if ia & ideals[verts[j]] & nonzero:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    labels = tuple(s.label(v) for v in verts) if s.labels else None
    return Graph(len(verts), tuple(adj), labels)


def left_pig(s: Semigroup) -> Graph:
    return _pig(s, left_ideals(s))


def right_pig(s: Semigroup) -> Graph:
    return _pig(s, right_ideals(s))


def left_pig_inverse_fast(s: Semigroup) -> Graph:
    """Adjacency via the inverse-semigroup criterion x * inv(y) != zero."""
    inv = inverses(s)
    if inv is None:
        raise NotInverseSemigroup("fast path needs an inverse semigroup")
    verts = pig_vertices(s)
    adj = [0] * len(verts)
    for i, x in enumerate(verts):
        for j in range(i + 1, len(verts)):
            if s.table[x][inv[verts[j]]] != s.zero:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    labels = tuple(s.label(v) for v in verts) if s.labels else None
    return Graph(len(verts), tuple(adj), labels)


def isn_left_pig(n: int) -> Graph:
    """Table-free graph on nonzero partial bijections: images must meet."""
    if not 1 <= n <= ISN_MAX:
        raise SizeLimitExceeded(f"isn_left_pig supports 1 <= n <= {ISN_MAX}")
    elems = [p for p in all_partial_bijections(n) if p.rank() > 0]
    masks = [p.image_mask() for p in elems]
    adj = [0] * len(elems)
    for i, mi in enumerate(masks):
        for j in range(i + 1, len(masks)):
            if mi & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(len(elems), tuple(adj), tuple(p.label() for p in elems))


def _s_pig(s: Semigroup, full: Graph, partition):
    verts = pig_vertices(s)
    pos = {v: i for i, v in enumerate(verts)}
    blocks = [cls for cls in partition.classes if s.zero not in cls]
    blocks.sort(key=min)
    block_of = {}
    for cid, cls in enumerate(blocks):
        for x in cls:
            block_of[x] = cid
    adj = [0] * len(blocks)
    for i, bi in enumerate(blocks):
        # every same-class pair must already be adjacent in the full graph
        for a_idx, a in enumerate(bi):
            for b in bi[a_idx + 1:]:
                if not full.has_edge(pos[a], pos[b]):
                    raise InconsistentQuotient(
                        f"related elements {a}, {b} are not adjacent")
        for j in range(i + 1, len(blocks)):
            pairs = [full.has_edge(pos[a], pos[b])
                     for a in bi for b in blocks[j]]
            if any(pairs) != all(pairs):
                raise InconsistentQuotient(
                    f"classes {i} and {j} disagree across representatives")
            if pairs[0]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    labels = tuple(f"[{s.label(min(b))}]" for b in blocks) if s.labels else None
    quotient = Graph(len(blocks), tuple(adj), labels)
    phi = VertexMap(len(verts), len(blocks),
                    tuple(block_of[v] for v in verts))
    return quotient, phi


def s_left_pig(s: Semigroup):
    """L-class quotient of left_pig plus the quotient vertex map."""
    return _s_pig(s, left_pig(s), l_classes(s))


def s_right_pig(s: Semigroup):
    """R-class quotient of right_pig plus the quotient vertex map."""
    return _s_pig(s, right_pig(s), r_classes(s))


def s_pig_class_elements(s: Semigroup, side: str = "left") -> list:
    """Element indices per quotient vertex, matching s_left/right_pig order."""
    partition = l_classes(s) if side == "left" else r_classes(s)
    blocks = [cls for cls in partition.classes if s.zero not in cls]
    blocks.sort(key=min)
    return [list(b) for b in blocks]


def involution_pig_isomorphism(s: Semigroup, sigma=None) -> list:
    """The verified isomorphism x -> inv(x) between left and right graphs.

    Returned in vertex-position space: entry i is the right_pig vertex
    matching left_pig vertex i.
    """
    if sigma is None:
        sigma = inverses(s)
        if sigma is None:
            raise NotInverseSemigroup(
                "no involution supplied and the semigroup is not inverse")
    if not check_involution(s, sigma):
        raise NotInverseSemigroup("supplied map is not an involution")
    verts = pig_vertices(s)
    pos = {v: i for i, v in enumerate(verts)}
    mapping = [pos[sigma[v]] for v in verts]
    if not verify_isomorphism(left_pig(s), right_pig(s), mapping):
        raise IsomorphismCheckFailed(
            "involution did not carry the left graph onto the right graph")
    return mapping
