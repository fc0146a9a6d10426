"""Principal one-sided ideals and the L/R class partitions.

Ideals are bit-sets over element indices (Python ints), so equality and
intersection tests are single integer operations.
"""

from dataclasses import dataclass

from .semigroups import Semigroup


@dataclass(frozen=True)
class Partition:
    """A partition of {0..n-1} into classes ordered by minimal member."""

    class_of: tuple
    classes: tuple

    @property
    def size(self) -> int:
        return len(self.classes)


def partition_from_groups(n: int, groups) -> Partition:
    classes = tuple(tuple(sorted(g)) for g in
                    sorted(groups, key=lambda g: min(g)))
    class_of = [0] * n
    for cid, cls in enumerate(classes):
        for x in cls:
            class_of[x] = cid
    return Partition(class_of=tuple(class_of), classes=classes)


def principal_left_ideal(s: Semigroup, a: int) -> int:
    """Bit-set of {x*a : x in S} together with a itself."""
    bits = 1 << a
    for x in range(s.order):
        bits |= 1 << s.table[x][a]
    return bits


def principal_right_ideal(s: Semigroup, a: int) -> int:
    """Bit-set of {a*x : x in S} together with a itself."""
    bits = 1 << a
    row = s.table[a]
    for x in range(s.order):
        bits |= 1 << row[x]
    return bits


def left_ideals(s: Semigroup) -> list:
    return [principal_left_ideal(s, a) for a in range(s.order)]


def right_ideals(s: Semigroup) -> list:
    return [principal_right_ideal(s, a) for a in range(s.order)]


def _classes_by_ideal(s: Semigroup, ideals) -> Partition:
    groups = {}
    for a, ideal in enumerate(ideals):
        groups.setdefault(ideal, []).append(a)
    return partition_from_groups(s.order, groups.values())


def l_classes(s: Semigroup) -> Partition:
    """Partition by equality of principal left ideals."""
    return _classes_by_ideal(s, left_ideals(s))


def r_classes(s: Semigroup) -> Partition:
    """Partition by equality of principal right ideals."""
    return _classes_by_ideal(s, right_ideals(s))
