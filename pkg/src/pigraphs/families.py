"""Constructors for the example semigroup families.

All constructors emit validated :class:`Semigroup` values with structured
element data attached, so graph builders can use family-specific fast
paths without scanning the Cayley table.  Tables built here are
associative by construction and skip the cubic check (``checked=False``).
"""

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, factorial

from .errors import NotAGroup, SizeLimitExceeded
from .semigroups import Semigroup, _detect_identity, _detect_zero

ISN_MAX = 5
SEMILATTICE_MAX = 5


@dataclass(frozen=True, order=True)
class PartialBijection:
    """A partial injective map on {0..n-1}.

    ``mapping[i]`` is the image of ``i`` or ``None`` when ``i`` is outside
    the domain.  Ordering is lexicographic on the mapping with undefined
    sorting first, which puts the empty map at index 0 of the enumeration.
    """

    n: int
    mapping: tuple

    def __post_init__(self):
        defined = [v for v in self.mapping if v is not None]
        assert len(set(defined)) == len(defined), "mapping is not injective"

    @property
    def sort_key(self):
        return tuple(-1 if v is None else v for v in self.mapping)

    def domain_mask(self) -> int:
        return sum(1 << i for i, v in enumerate(self.mapping) if v is not None)

    def image_mask(self) -> int:
        return sum(1 << v for v in self.mapping if v is not None)

    def rank(self) -> int:
        return sum(1 for v in self.mapping if v is not None)

    def compose(self, other: "PartialBijection") -> "PartialBijection":
        """Left-to-right composition: apply self first, then other."""
        out = tuple(
            other.mapping[v] if v is not None else None for v in self.mapping
        )
        return PartialBijection(self.n, out)

    def inverse(self) -> "PartialBijection":
        out = [None] * self.n
        for i, v in enumerate(self.mapping):
            if v is not None:
                out[v] = i
        return PartialBijection(self.n, tuple(out))

    def label(self) -> str:
        pairs = [f"{i}>{v}" for i, v in enumerate(self.mapping) if v is not None]
        return "(" + ",".join(pairs) + ")" if pairs else "empty"


def all_partial_bijections(n: int) -> list:
    """All partial bijections on {0..n-1}, in canonical sorted order."""
    out = []
    ground = range(n)
    for k in range(n + 1):
        for dom in combinations(ground, k):
            for img in permutations(ground, k):
                mapping = [None] * n
                for i, v in zip(dom, img):
                    mapping[i] = v
                out.append(PartialBijection(n, tuple(mapping)))
    out.sort(key=lambda p: p.sort_key)
    return out


def partial_bijection_count(n: int) -> int:
    """Closed-form count sum C(n,k)^2 * k!, used as the enumeration oracle."""
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


def symmetric_inverse(n: int) -> Semigroup:
    """The symmetric inverse semigroup of all partial bijections on n points."""
    if not 1 <= n <= ISN_MAX:
        raise SizeLimitExceeded(f"symmetric_inverse supports 1 <= n <= {ISN_MAX}")
    elems = all_partial_bijections(n)
    index = {p: i for i, p in enumerate(elems)}
    table = tuple(
        tuple(index[x.compose(y)] for y in elems) for x in elems
    )
    return Semigroup(
        order=len(elems),
        table=table,
        labels=tuple(p.label() for p in elems),
        zero=_detect_zero(table),
        identity=_detect_identity(table),
        family="isn",
        checked=False,
        elements=tuple(elems),
    )


def _check_group(g: Semigroup):
    if g.identity is None:
        raise NotAGroup("group parameter has no identity")
    e = g.identity
    for x in range(g.order):
        if not any(
            g.table[x][y] == e and g.table[y][x] == e for y in range(g.order)
        ):
            raise NotAGroup(f"element {x} has no group inverse")


def brandt(g: Semigroup, r: int) -> Semigroup:
    """Brandt semigroup over group ``g`` with ``r`` indices.

    Elements are triples (i, a, j) ordered lexicographically, plus a zero
    as the last element.  (i,a,j)(k,b,l) is (i, a*b, l) when j = k and
    zero otherwise.
    """
    if r < 1:
        raise NotAGroup("index count must be positive")
    _check_group(g)
    triples = [(i, a, j) for i in range(r) for a in range(g.order)
               for j in range(r)]
    index = {t: k for k, t in enumerate(triples)}
    order = len(triples) + 1
    zero = order - 1
    table = []
    for (i, a, j) in triples:
        row = []
        for (k, b, l) in triples:
            row.append(index[(i, g.table[a][b], l)] if j == k else zero)
        row.append(zero)
        table.append(tuple(row))
    table.append((zero,) * order)
    table = tuple(table)
    labels = tuple(
        f"({i},{g.label(a)},{j})" for (i, a, j) in triples
    ) + ("0",)
    return Semigroup(
        order=order,
        table=table,
        labels=labels,
        zero=zero,
        identity=_detect_identity(table),
        family="brandt",
        checked=False,
        elements=tuple(triples) + (None,),
    )


def subset_meet_semilattice(n: int) -> Semigroup:
    """All subsets of an n-set under intersection; element i is bitmask i."""
    if not 1 <= n <= SEMILATTICE_MAX:
        raise SizeLimitExceeded(
            f"subset_meet_semilattice supports 1 <= n <= {SEMILATTICE_MAX}")
    size = 1 << n
    table = tuple(tuple(x & y for y in range(size)) for x in range(size))
    labels = tuple(subset_label(m) for m in range(size))
    return Semigroup(
        order=size,
        table=table,
        labels=labels,
        zero=0,
        identity=size - 1,
        family="semilattice",
        checked=False,
        elements=tuple(range(size)),
    )


def subset_label(mask: int) -> str:
    members = [str(i) for i in range(mask.bit_length()) if mask >> i & 1]
    return "{" + ",".join(members) + "}"


def cyclic_group(m: int) -> Semigroup:
    """Addition modulo m."""
    if m < 1:
        raise SizeLimitExceeded("group order must be positive")
    table = tuple(tuple((x + y) % m for y in range(m)) for x in range(m))
    return Semigroup(
        order=m,
        table=table,
        labels=tuple(str(x) for x in range(m)),
        zero=0 if m == 1 else None,
        identity=0,
        family="cyclic",
        checked=False,
    )


def left_zero(n: int) -> Semigroup:
    """The left zero semigroup: x*y = x."""
    if n < 1:
        raise SizeLimitExceeded("order must be positive")
    table = tuple(tuple(x for _ in range(n)) for x in range(n))
    return Semigroup(
        order=n,
        table=table,
        labels=tuple(f"a{x}" for x in range(n)),
        zero=0 if n == 1 else None,
        identity=0 if n == 1 else None,
        family="leftzero",
        checked=False,
    )
