import pytest
from hypothesis import given, strategies as st

from pigraphs import families
from pigraphs.errors import NotAGroup, SizeLimitExceeded
from pigraphs.families import PartialBijection, all_partial_bijections
from pigraphs.semigroups import check_involution, idempotents, inverses


def partial_bijections(n):
    """Hypothesis strategy for one partial bijection on n points."""
    def build(images):
        used = set()
        mapping = []
        for v in images:
            if v is None or v in used:
                mapping.append(None)
            else:
                mapping.append(v)
                used.add(v)
        return PartialBijection(n, tuple(mapping))
    return st.lists(
        st.one_of(st.none(), st.integers(0, n - 1)),
        min_size=n, max_size=n).map(build)


@pytest.mark.parametrize("n,count", [(1, 2), (2, 7), (3, 34), (4, 209),
                                     (5, 1546)])
def test_enumeration_count(n, count):
    assert len(all_partial_bijections(n)) == count
    assert families.partial_bijection_count(n) == count


def test_enumeration_has_no_duplicates():
    elems = all_partial_bijections(3)
    assert len(set(elems)) == len(elems)
    assert elems == sorted(elems, key=lambda p: p.sort_key)


@given(x=partial_bijections(3), y=partial_bijections(3),
       z=partial_bijections(3))
def test_composition_is_associative(x, y, z):
    assert x.compose(y).compose(z) == x.compose(y.compose(z))


@given(x=partial_bijections(4))
def test_relational_inverse_laws(x):
    inv = x.inverse()
    assert x.compose(inv).compose(x) == x
    assert inv.compose(x).compose(inv) == inv


def test_composition_convention_left_to_right():
    s = families.symmetric_inverse(2)
    inv = inverses(s)
    for x, pb in enumerate(s.elements):
        # inv(x)*x is the partial identity on image(x)
        left = s.elements[s.table[inv[x]][x]]
        assert left.domain_mask() == left.image_mask() == pb.image_mask()
        right = s.elements[s.table[x][inv[x]]]
        assert right.domain_mask() == right.image_mask() == pb.domain_mask()


def test_isn_structure(isn):
    s = isn[3]
    assert s.order == 34
    assert len(idempotents(s)) == 8
    inv = inverses(s)
    assert inv is not None
    assert check_involution(s, inv)


def test_isn_size_guard():
    with pytest.raises(SizeLimitExceeded):
        families.symmetric_inverse(6)
    with pytest.raises(SizeLimitExceeded):
        families.symmetric_inverse(0)


def test_brandt_c1_2():
    s = families.brandt(families.cyclic_group(1), 2)
    assert s.order == 5 and s.zero == 4
    for a, ta in enumerate(s.elements[:-1]):
        for b, tb in enumerate(s.elements[:-1]):
            if ta[2] == tb[0]:
                assert s.elements[s.table[a][b]] == (ta[0], 0, tb[2])
            else:
                assert s.table[a][b] == s.zero


def test_brandt_c2_2_idempotents():
    s = families.brandt(families.cyclic_group(2), 2)
    assert s.order == 9
    idem = idempotents(s)
    expected = {s.zero} | {
        i for i, t in enumerate(s.elements[:-1]) if t == (t[0], 0, t[0])
    }
    assert set(idem) == expected and len(idem) == 3


def test_brandt_distinct_idempotent_products_are_zero():
    s = families.brandt(families.cyclic_group(3), 2)
    idem = [e for e in idempotents(s) if e != s.zero]
    assert all(s.table[e][f] == s.zero for e in idem for f in idem if e != f)


def test_brandt_c1_1_is_the_two_chain():
    s = families.brandt(families.cyclic_group(1), 1)
    chain = [[0, 0], [0, 1]]
    # brandt puts the zero last, the chain puts it first
    sigma = [1, 0]
    assert all(sigma[s.table[a][b]] == chain[sigma[a]][sigma[b]]
               for a in range(2) for b in range(2))


def test_brandt_rejects_non_groups():
    with pytest.raises(NotAGroup):
        families.brandt(families.subset_meet_semilattice(2), 2)
    with pytest.raises(NotAGroup):
        families.brandt(families.left_zero(2), 2)


def test_semilattice():
    s = families.subset_meet_semilattice(3)
    assert s.order == 8 and s.zero == 0 and s.identity == 7
    assert idempotents(s) == list(range(8))
    assert all(s.table[x][y] == s.table[y][x]
               for x in range(8) for y in range(8))


def test_cyclic_group():
    s = families.cyclic_group(3)
    assert s.identity == 0 and s.zero is None
    assert inverses(s) == [0, 2, 1]
    assert families.cyclic_group(1).order == 1


def test_left_zero():
    s = families.left_zero(2)
    assert [list(r) for r in s.table] == [[0, 0], [1, 1]]
    assert s.identity is None and s.zero is None
    assert families.left_zero(1).order == 1
