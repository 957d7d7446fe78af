"""Deterministic corpora: built-in tables, enumeration, deduplication."""

import pytest

from icat.corpus import (
    BUILTIN_GROUPS,
    GROUP_COUNTS,
    abelian_groups,
    alternating_group_4,
    dihedral_group,
    direct_product,
    enumerate_structures,
    groups,
    klein_four,
    named_structures,
    pointed_sets,
    quaternion_group,
    search_group_tables,
    symmetric_group_3,
    unital_magmas,
)
from icat.errors import BoundTooLarge
from icat.structures import (
    ABELIAN_GROUP,
    GROUP,
    POINTED_SET,
    UNITAL_MAGMA,
    cyclic_group,
    find_isomorphism,
)


def test_group_counts_by_order():
    for order in range(1, 13):
        got = sum(1 for g in groups(12) if g.order == order)
        assert got == GROUP_COUNTS[order - 1]


def test_groups_of_order_up_to_six():
    names = {g.name for g in groups(6)}
    assert names == {"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3"}


def test_groups_bound():
    with pytest.raises(BoundTooLarge):
        groups(13)


def test_abelian_groups_up_to_eight():
    ab = abelian_groups(8)
    assert len(ab) == 11
    assert sorted(g.order for g in ab) == [1, 2, 3, 4, 4, 5, 6, 7, 8, 8, 8]
    assert all(g.kind == ABELIAN_GROUP for g in ab)
    for g in ab:
        g.validate()


def test_builtin_tables_validate():
    for g in BUILTIN_GROUPS:
        g.validate()


def test_builtin_tables_pairwise_nonisomorphic():
    gs = groups(12)
    for i, g in enumerate(gs):
        for h in gs[i + 1:]:
            if g.order == h.order:
                assert find_isomorphism(g, h) is None, (g.name, h.name)


def test_table_search_vets_builtins():
    # the exhaustive searcher reproduces the frozen tables (kept small;
    # order 8 takes minutes and is reachable through the same function)
    for n in (1, 2, 3, 4, 5, 6):
        found = search_group_tables(n)
        builtin = [g for g in BUILTIN_GROUPS if g.order == n]
        assert len(found) == len(builtin)
        for f in found:
            assert any(find_isomorphism(f, b) is not None for b in builtin)


def test_search_bound():
    with pytest.raises(BoundTooLarge):
        search_group_tables(9)


def test_named_groups_are_what_they_claim():
    s3 = symmetric_group_3()
    assert s3.order == 6 and s3.kind == GROUP
    assert find_isomorphism(s3, dihedral_group(3)) is not None
    q8 = quaternion_group()
    assert q8.order == 8
    # Q8 has a unique element of order 2
    assert sum(1 for x in range(8) if x and q8.op(x, x) == 0) == 1
    a4 = alternating_group_4()
    assert a4.order == 12
    assert find_isomorphism(a4, dihedral_group(6)) is None
    k4 = klein_four()
    assert all(k4.op(x, x) == 0 for x in range(4))
    d4 = dihedral_group(4)
    assert d4.order == 8 and find_isomorphism(d4, q8) is None


def test_direct_product():
    g = direct_product(cyclic_group(2), cyclic_group(3))
    assert g.order == 6
    assert find_isomorphism(g, cyclic_group(6)) is not None


def test_pointed_sets_sizes():
    assert [p.order for p in pointed_sets(3)] == [1, 2, 3]
    assert all(p.kind == POINTED_SET for p in pointed_sets(3))


def test_unital_magma_counts():
    ms = unital_magmas(4)
    per = {n: sum(1 for m in ms if m.order == n) for n in (1, 2, 3, 4)}
    assert per == {1: 1, 2: 1, 3: 3, 4: 44}
    for m in ms:
        m.validate()
        assert m.kind == UNITAL_MAGMA


def test_unital_magmas_dedup_is_canonical():
    reps = unital_magmas(3)
    raw = unital_magmas(3, dedup=False)
    assert len(raw) > len(reps)
    for m in raw:
        assert any(find_isomorphism(m, r) is not None for r in reps)
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            if a.order == b.order:
                assert find_isomorphism(a, b) is None


def test_enumerate_structures_dispatch():
    assert [g.order for g in enumerate_structures(POINTED_SET, 2)] == [1, 2]
    assert len(enumerate_structures(ABELIAN_GROUP, 4)) == 5
    assert len(enumerate_structures(GROUP, 6)) == 8
    assert len(enumerate_structures(UNITAL_MAGMA, 3)) == 5
    with pytest.raises(BoundTooLarge):
        enumerate_structures("ring", 3)


def test_enumeration_is_deterministic():
    a = [(g.name, g.key()) for g in groups(12)]
    b = [(g.name, g.key()) for g in groups(12)]
    assert a == b
    assert [m.key() for m in unital_magmas(4)] == \
        [m.key() for m in unital_magmas(4)]


def test_named_structures_registry():
    reg = named_structures()
    for name in ("Z1", "Z6", "Z4xZ2", "S3", "D4", "Q8", "A4", "P3"):
        assert name in reg
    assert reg["S3"].order == 6
    assert reg["P3"].kind == POINTED_SET and reg["P3"].order == 3
