"""Finite semigroups represented by Cayley tables.

The table convention is row-times-column: ``table[x][y]`` is the product
``x*y``.  All structural queries (zero, identity, idempotents, inverses)
work off the table alone, so any associative table is accepted regardless
of how it was produced.
"""

from dataclasses import dataclass, field

from .errors import AssociativityViolation, IndexOutOfRange, NotAPermutation


@dataclass(frozen=True)
class Semigroup:
    """An immutable finite semigroup given by its Cayley table.

    ``zero`` and ``identity`` are detected at construction and cached.
    ``checked`` records whether associativity was verified exhaustively
    (family constructors that are associative by construction skip it).
    ``elements`` optionally carries structured element values (partial
    bijections, Brandt triples, subset masks) for fast paths; it does not
    take part in equality and is not serialized.
    """

    order: int
    table: tuple
    labels: tuple | None = None
    zero: int | None = None
    identity: int | None = None
    family: str | None = None
    checked: bool = field(default=True, compare=False)
    elements: tuple | None = field(default=None, compare=False)

    def product(self, x: int, y: int) -> int:
        return self.table[x][y]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)


def _check_entries(table):
    n = len(table)
    for row in table:
        if len(row) != n:
            raise IndexOutOfRange("table is not square")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise IndexOutOfRange(f"table entry {v!r} not in [0, {n})")


def _check_associativity(table):
    n = len(table)
    rng = range(n)
    for x in rng:
        tx = table[x]
        for y in rng:
            txy = table[tx[y]]
            ty = table[y]
            for z in rng:
                if txy[z] != tx[ty[z]]:
                    raise AssociativityViolation(x, y, z)


def _detect_zero(table):
    n = len(table)
    for z in range(n):
        if all(table[z][x] == z and table[x][z] == z for x in range(n)):
            return z
    return None


def _detect_identity(table):
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def from_cayley_table(table, labels=None, *, unchecked=False,
                      family=None, elements=None) -> Semigroup:
    """Build a validated :class:`Semigroup` from a square table.

    Raises :class:`AssociativityViolation` with a witness triple unless
    ``unchecked`` is set (reserved for constructors whose tables are
    associative by construction).
    """
    table = tuple(tuple(row) for row in table)
    _check_entries(table)
    if not unchecked:
        _check_associativity(table)
    return Semigroup(
        order=len(table),
        table=table,
        labels=tuple(labels) if labels is not None else None,
        zero=_detect_zero(table),
        identity=_detect_identity(table),
        family=family,
        checked=not unchecked,
        elements=tuple(elements) if elements is not None else None,
    )


def find_zero(s: Semigroup):
    """The unique two-sided absorbing element, or ``None``."""
    return s.zero


def idempotents(s: Semigroup) -> list:
    """Indices of all elements with e*e = e, ascending."""
    return [e for e in range(s.order) if s.table[e][e] == e]


def inverses(s: Semigroup):
    """The inverse map of an inverse semigroup, or ``None``.

    Returns a list ``inv`` with ``x*inv[x]*x = x`` and
    ``inv[x]*x*inv[x] = inv[x]`` when every element has exactly one such
    partner; otherwise ``None`` (the semigroup is not inverse).
    """
    t = s.table
    inv = []
    for x in range(s.order):
        found = None
        for y in range(s.order):
            if t[t[x][y]][x] == x and t[t[y][x]][y] == y:
                if found is not None:
                    return None
                found = y
        if found is None:
            return None
        inv.append(found)
    return inv


def check_involution(s: Semigroup, sigma) -> bool:
    """True iff sigma is an involutive anti-automorphism of the table."""
    if sorted(sigma) != list(range(s.order)):
        raise NotAPermutation("sigma must permute the element indices")
    t = s.table
    for a in range(s.order):
        if sigma[sigma[a]] != a:
            return False
        for b in range(s.order):
            if sigma[t[a][b]] != t[sigma[b]][sigma[a]]:
                return False
    return True


def adjoin_zero(s: Semigroup) -> Semigroup:
    """Adjoin a fresh two-sided zero as the new last element."""
    n = s.order
    table = tuple(tuple(row) + (n,) for row in s.table) + ((n,) * (n + 1),)
    labels = None
    if s.labels is not None:
        labels = tuple(s.labels) + ("0*",)
    # adjoining an absorbing element preserves associativity, so the
    # checked status of the input carries over
    return Semigroup(
        order=n + 1,
        table=table,
        labels=labels,
        zero=n,
        identity=_detect_identity(table),
        family=s.family,
        checked=s.checked,
    )


def to_json_dict(s: Semigroup) -> dict:
    """Serialize to the fixed semigroup JSON document shape."""
    doc = {
        "order": s.order,
        "table": [list(row) for row in s.table],
        "labels": list(s.labels) if s.labels is not None else None,
        "zero": s.zero,
        "identity": s.identity,
    }
    if s.family is not None:
        doc["family"] = s.family
    return doc


def from_json_dict(doc: dict, *, validate=None) -> Semigroup:
    """Rebuild a semigroup from its JSON document.

    ``validate`` forces or skips the cubic associativity check; the
    default re-checks tables up to order 128 and trusts larger ones.
    """
    table = doc["table"]
    if validate is None:
        validate = len(table) <= 128
    return from_cayley_table(
        table,
        doc.get("labels"),
        unchecked=not validate,
        family=doc.get("family"),
    )
