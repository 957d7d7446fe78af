"""Split epimorphisms with chosen sections and the two kernel axioms."""

import pytest

from icat.corpus import (
    abelian_groups,
    groups,
    klein_four,
    pointed_sets,
    symmetric_group_3,
)
from icat.errors import InvalidDiagram, NotSplit
from icat.points import (
    SplitEpi,
    all_split_epis,
    canonical_rows,
    check_A1,
    check_split_five_lemma,
    comparison_iso,
    coproduct_point,
    dedup_points,
    functor_S,
    functor_T,
    maps_with_zero_composite,
    point_isomorphism,
    point_morphism_of_maps,
    product_point,
    search_A2_counterexample,
    sections_of,
    split_epis,
    verify_kernel,
    verify_split_five_lemma,
)
from icat.structures import (
    ABELIAN_GROUP,
    POINTED_SET,
    Morphism,
    compose,
    cyclic_group,
    identity,
    morphism_space,
    pointed_set,
    product,
)


def test_split_epi_rejects_bad_section():
    C4, C2 = cyclic_group(4), cyclic_group(2)
    alpha = Morphism(C4, C2, (0, 1, 0, 1))
    with pytest.raises(NotSplit):
        SplitEpi(C4, C2, alpha, Morphism(C2, C4, (0, 2)))


def test_split_epi_rejects_wrong_endpoints():
    C2 = cyclic_group(2)
    alpha = Morphism(C2, C2, (0, 1))
    with pytest.raises(InvalidDiagram):
        SplitEpi(cyclic_group(4), C2, alpha, identity(C2))


def test_split_epi_caches_kernel():
    K4, C2 = klein_four(), cyclic_group(2)
    alpha = Morphism(K4, C2, (0, 0, 1, 1))
    beta = Morphism(C2, K4, (0, 2))
    p = SplitEpi(K4, C2, alpha, beta)
    assert p.K.order == 2
    assert set(p.k.map) == {0, 1}
    assert functor_S(p) == (p.K, p.B)


def test_functor_T_is_a_point_with_inj1():
    X, B = pointed_set(3), pointed_set(2)
    p = functor_T(X, B)
    assert p.A.order == X.order + B.order - 1
    assert compose(p.alpha, p.beta).is_identity()
    assert compose(p.alpha, p.inj1).map == (0,) * X.order


def test_maps_with_zero_composite_are_the_fiber_valued_maps():
    X, B = pointed_set(3), pointed_set(2)
    p = functor_T(X, B)
    T = pointed_set(2)
    fiber = [a for a in range(p.A.order) if p.alpha.map[a] == 0]
    fs = maps_with_zero_composite(T, p.alpha)
    assert len(fs) == len(fiber)
    assert all(f.map[0] == 0 and f.map[1] in fiber for f in fs)


def test_verify_kernel_accepts_the_kernel_inclusion():
    for X in pointed_sets(3):
        for B in pointed_sets(3):
            v = check_A1(X, B, pointed_sets(3))
            assert v.ok, (X.order, B.order, v.first_failure)


def test_check_A1_exhaustive_on_abelian_groups():
    ab = abelian_groups(4)
    for X in ab:
        for B in ab:
            assert check_A1(X, B, ab).ok


def test_verify_kernel_rejects_a_short_candidate():
    X, B = pointed_set(3), pointed_set(2)
    p = functor_T(X, B)
    short = Morphism(pointed_set(2), p.A, (0, 1))
    v = verify_kernel(short, p.alpha, pointed_sets(3))
    assert not v.ok
    assert dict(x[:2] for x in v.results)["image-is-fiber"] is False


def test_verify_kernel_rejects_a_non_injective_candidate():
    X, B = pointed_set(2), pointed_set(2)
    p = functor_T(X, B)
    squish = Morphism(pointed_set(3), p.A, (0, 1, 1), check=False)
    v = verify_kernel(squish, p.alpha, pointed_sets(2))
    assert not v.ok
    assert dict(x[:2] for x in v.results)["monomorphism"] is False


def test_sections_of_counts_pointed_fibers():
    X, B = pointed_set(2), pointed_set(3)
    p = product_point(X, B)
    # one free fiber choice for each nonzero base element
    assert len(sections_of(p.alpha)) == X.order ** (B.order - 1)


def test_sections_of_empty_for_unsplit_group_quotient():
    C4, C2 = cyclic_group(4), cyclic_group(2)
    alpha = Morphism(C4, C2, (0, 1, 0, 1))
    assert sections_of(alpha) == []


def test_split_epis_klein_four_over_c2():
    ps = split_epis(klein_four(), cyclic_group(2))
    # three onto homomorphisms, two sections each
    assert len(ps) == 6
    assert all(p.K.order == 2 for p in ps)


def test_all_split_epis_counts():
    assert len(all_split_epis(abelian_groups(4))) == 22
    assert len(all_split_epis(pointed_sets(3))) == 10


def test_point_morphism_restricts_to_kernels():
    X, B = pointed_set(2), pointed_set(2)
    p = functor_T(X, B)
    q = product_point(X, B)
    tops = [t for t in morphism_space(p.A, q.A)
            if point_morphism_of_maps(p, q, t) is not None]
    assert tops
    for t in tops:
        pm = point_morphism_of_maps(p, q, t)
        assert compose(q.k, pm.restricted).map == \
            compose(pm.top, p.k).map


def test_point_morphism_of_maps_rejects_non_commuting_top():
    C2 = cyclic_group(2)
    p = product_point(C2, C2)
    swap = Morphism(p.A, p.A, (0, 1, 3, 2), check=False)
    assert point_morphism_of_maps(p, p, swap) is None


def test_point_isomorphism_and_dedup():
    pts = all_split_epis(pointed_sets(3))
    reps = dedup_points(pts)
    assert len(reps) < len(pts)
    for p in pts:
        assert any(point_isomorphism(q, p) for q in reps)
    for i, q in enumerate(reps):
        assert all(not point_isomorphism(q, r) for r in reps[i + 1:])


def test_split_five_lemma_holds_for_groups():
    pts = dedup_points(all_split_epis(groups(6)))
    v = verify_split_five_lemma(pts)
    assert v.ok
    assert v.witness is None
    assert v.diagrams_checked > 0


def test_split_five_lemma_dedup_agrees_with_full_list():
    pts = all_split_epis(groups(6))
    assert verify_split_five_lemma(pts).ok
    assert verify_split_five_lemma(dedup_points(pts)).ok


def test_iso_square_tops_match_generic_scan():
    pts = dedup_points(all_split_epis(groups(6)))
    from icat.points import _iso_square_tops
    for p in pts:
        for q in pts:
            if p.K.order != q.K.order or p.B.order != q.B.order:
                continue
            fast = {t.map for t in _iso_square_tops(p, q)}
            slow = set()
            for t in morphism_space(p.A, q.A):
                pm = point_morphism_of_maps(p, q, t)
                if pm and pm.restricted.is_bijective() \
                        and pm.bottom.is_bijective():
                    slow.add(t.map)
            assert fast == slow, (p, q)


def test_split_five_lemma_fails_for_pointed_sets():
    pts = canonical_rows(POINTED_SET, 4)
    v = verify_split_five_lemma(pts, expect_pass=False)
    assert v.ok
    assert v.witness is not None
    assert check_split_five_lemma(v.witness) is False


def test_search_A2_counterexample_pointed():
    pm = search_A2_counterexample(POINTED_SET, 4)
    assert pm is not None
    assert pm.source.A.order == 3 and pm.target.A.order == 4
    assert pm.restricted.is_bijective() and pm.bottom.is_bijective()
    assert not pm.top.is_bijective()
    assert check_split_five_lemma(pm) is False


def test_search_A2_counterexample_none_for_abelian():
    assert search_A2_counterexample(ABELIAN_GROUP, 4) is None


def test_comparison_iso_abelian_always():
    for p in all_split_epis(abelian_groups(6)):
        cmp_map, ok = comparison_iso(p)
        assert ok
        assert cmp_map.is_bijective()


def test_comparison_iso_fails_for_pointed_product():
    p = product_point(pointed_set(2), pointed_set(3))
    cmp_map, ok = comparison_iso(p)
    assert not ok
    assert cmp_map.source.order != p.A.order or not cmp_map.is_bijective()


def test_coproduct_point_comparison_is_iso():
    p = coproduct_point(pointed_set(3), pointed_set(2))
    _, ok = comparison_iso(p)
    assert ok


def test_product_point_projects_and_sections():
    X, B = cyclic_group(2), cyclic_group(3)
    p = product_point(X, B)
    XB = product(X, B)
    assert p.A.table == XB.structure.table
    assert compose(p.alpha, p.beta).is_identity()
    assert p.K.order == X.order


def test_canonical_rows_pointed_include_both_shapes():
    rows = canonical_rows(POINTED_SET, 4)
    orders = sorted(p.A.order for p in rows)
    # wedge points (n+m-1) and product points (n*m) up to size 4
    assert orders[0] == 1 and orders[-1] == 4
    assert any(p.A.order == p.K.order * p.B.order and p.B.order > 1
               and p.K.order > 1 for p in rows)


def test_canonical_rows_abelian_are_biproducts():
    for p in canonical_rows(ABELIAN_GROUP, 4):
        assert p.A.order == p.K.order * p.B.order
        _, ok = comparison_iso(p)
        assert ok
