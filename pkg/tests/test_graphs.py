"""Reflexive graphs, precategories and the internal-category test."""

import itertools

import pytest

from icat.additive import TwoChain, precat_from_2chain
from icat.corpus import symmetric_group_3
from icat.errors import BadInput, FactorizationFailure, InvalidDiagram
from icat.graphs import (
    ALL_CLASS,
    COPRODUCT_CLASS,
    PRODUCT_CLASS,
    SEMIDIRECT_CLASS,
    GraphMorphism,
    Precategory,
    PrecatMorphism,
    PrecatPresentation,
    ReflexiveGraph,
    compose_arrows,
    composable_pairs,
    graph_from_morphism,
    include_V,
    is_internal_category,
    morphism_from_graph,
    point_in_class,
    precat_from_presentation,
    reflect_U,
    relabel_precategory,
    restrict_to_class,
    validate_precategory,
)
from icat.points import functor_T, product_point
from icat.structures import (
    Morphism,
    compose,
    cyclic_group,
    identity,
    pointed_set,
    zero_morphism,
)


def test_graph_from_morphism_endpoints():
    h = Morphism(pointed_set(3), pointed_set(2), (0, 1, 1))
    g = graph_from_morphism(h)
    assert g.C1.order == 4 and g.C0.order == 2
    assert g.validate().ok
    assert compose(g.d, g.e).is_identity()
    assert compose(g.c, g.e).is_identity()


def test_reflexive_graph_rejects_bad_section():
    h = Morphism(pointed_set(2), pointed_set(2), (0, 1))
    g = graph_from_morphism(h)
    bad_e = Morphism(g.C0, g.C1, (0, 1), check=False)
    with pytest.raises(InvalidDiagram):
        ReflexiveGraph(g.C0, g.C1, g.d, g.c, bad_e)


def test_reflexive_graph_rejects_kind_mismatch():
    C2 = cyclic_group(2)
    P2 = pointed_set(2)
    d = Morphism(C2, P2, (0, 1), check=False)
    e = Morphism(P2, C2, (0, 1), check=False)
    g = ReflexiveGraph(P2, C2, d, d, e, check=False)
    v = g.validate()
    assert not v.ok
    assert dict(x[:2] for x in v.results)["kinds"] is False


def test_graph_point_is_split_epi():
    h = Morphism(pointed_set(3), pointed_set(2), (0, 0, 1))
    p = graph_from_morphism(h).point()
    assert compose(p.alpha, p.beta).is_identity()
    assert p.K.order == h.source.order


def test_morphism_from_graph_round_trip():
    h = Morphism(pointed_set(3), pointed_set(2), (0, 1, 1))
    g = graph_from_morphism(h)
    h2, cmp_map = morphism_from_graph(g)
    assert h2.map == h.map
    assert cmp_map.is_bijective()


def test_morphism_from_graph_needs_coproduct_shape():
    p = product_point(pointed_set(2), pointed_set(2))
    g = ReflexiveGraph(p.B, p.A, p.alpha, p.alpha, p.beta)
    with pytest.raises(FactorizationFailure):
        morphism_from_graph(g)


def test_presentation_validates_sections_and_coequalizing():
    X, B = pointed_set(3), pointed_set(2)
    Y = pointed_set(4)
    a = Morphism(Y, X, (0, 1, 2, 2))
    u = Morphism(Y, X, (0, 1, 2, 1))
    b = Morphism(X, Y, (0, 1, 2))
    h = Morphism(X, B, (0, 1, 1))
    pres = PrecatPresentation(Y, X, B, a, u, b, h)
    assert pres.validate().ok
    bad_h = Morphism(X, B, (0, 1, 0))
    with pytest.raises(InvalidDiagram):
        PrecatPresentation(Y, X, B, a, u, b, bad_h)


def test_precat_from_presentation_satisfies_all_laws():
    X, B = pointed_set(3), pointed_set(2)
    Y = pointed_set(4)
    pres = PrecatPresentation(
        Y, X, B,
        Morphism(Y, X, (0, 1, 2, 2)),
        Morphism(Y, X, (0, 1, 2, 1)),
        Morphism(X, Y, (0, 1, 2)),
        Morphism(X, B, (0, 1, 1)))
    P = pres.build()
    assert validate_precategory(P).ok
    assert P.C0.order == 2 and P.C1.order == 4
    assert P.C2.order == Y.order + P.C1.order - 1


def test_validate_precategory_catches_tampered_m():
    P = include_V(identity(pointed_set(2)))
    bad_m = Morphism(P.C2, P.C1, (0, 0, 0, 0), check=False)
    Q = Precategory(P.graph, P.C2, P.p1, P.p2, P.e1, P.e2, bad_m,
                    check=False)
    assert not validate_precategory(Q).ok


def test_composable_pairs_matches_brute_force():
    P = include_V(Morphism(pointed_set(3), pointed_set(2), (0, 1, 1)))
    pairs = composable_pairs(P)
    brute = [(g, f)
             for g in range(P.C1.order) for f in range(P.C1.order)
             if P.d.map[g] == P.c.map[f]]
    assert sorted(pairs) == sorted(brute)


def test_include_V_of_identity_is_internal_category():
    P = include_V(identity(pointed_set(2)))
    assert (P.C0.order, P.C1.order, P.C2.order) == (2, 3, 4)
    assert validate_precategory(P).ok
    v = is_internal_category(P)
    assert v.is_pullback and v.is_associative and v.ok


def test_include_V_of_zero_map_is_not_a_pullback():
    P = include_V(zero_morphism(pointed_set(3), pointed_set(2)))
    assert validate_precategory(P).ok
    assert P.C2.order == 6 and len(composable_pairs(P)) == 10
    v = is_internal_category(P)
    assert not v.is_pullback and not v.ok


def test_chain_precat_pullback_iff_trivial_top():
    C2g, Z1 = cyclic_group(2), cyclic_group(1)
    nontriv = precat_from_2chain(
        TwoChain(C2g, C2g, Z1, identity(C2g), zero_morphism(C2g, Z1)))
    assert not is_internal_category(nontriv).is_pullback
    triv = precat_from_2chain(
        TwoChain(Z1, C2g, C2g, zero_morphism(Z1, C2g), identity(C2g)))
    v = is_internal_category(triv)
    assert v.is_pullback and v.is_associative


def test_compose_arrows_associativity_and_errors():
    P = include_V(identity(pointed_set(2)))
    pairs = composable_pairs(P)
    for g, f in pairs:
        for h in range(P.C1.order):
            if P.d.map[h] != P.c.map[g]:
                continue
            lhs = compose_arrows(P, h, compose_arrows(P, g, f))
            rhs = compose_arrows(P, compose_arrows(P, h, g), f)
            assert lhs == rhs
    bad = next((g, f)
               for g in range(P.C1.order) for f in range(P.C1.order)
               if P.d.map[g] != P.c.map[f])
    with pytest.raises(BadInput):
        compose_arrows(P, *bad)


def test_graph_morphism_identity_and_rejection():
    h = Morphism(pointed_set(3), pointed_set(2), (0, 1, 1))
    g = graph_from_morphism(h)
    gm = GraphMorphism(g, g, identity(g.C1), identity(g.C0))
    assert gm.validate().ok and gm.is_isomorphism()
    squash = Morphism(g.C1, g.C1, (0, 0, 0, 0), check=False)
    with pytest.raises(InvalidDiagram):
        GraphMorphism(g, g, squash, identity(g.C0))


def test_relabel_precategory_gives_isomorphism():
    P = include_V(identity(pointed_set(2)))
    perm0, perm1, perm2 = (0, 1), (0, 2, 1), (0, 3, 1, 2)
    Q = relabel_precategory(P, perm0, perm1, perm2)
    assert validate_precategory(Q).ok
    pm = PrecatMorphism(P, Q,
                        Morphism(P.C2, Q.C2, perm2),
                        Morphism(P.C1, Q.C1, perm1),
                        Morphism(P.C0, Q.C0, perm0))
    assert pm.validate().ok and pm.is_isomorphism()
    assert is_internal_category(Q).ok == is_internal_category(P).ok


def test_precat_morphism_rejects_broken_square():
    P = include_V(identity(pointed_set(2)))
    bad_f1 = Morphism(P.C1, P.C1, (0, 0, 0), check=False)
    with pytest.raises(InvalidDiagram):
        PrecatMorphism(P, P, identity(P.C2), bad_f1, identity(P.C0))


def test_reflect_U_coequalizes_the_pair():
    X, B, Y = pointed_set(3), pointed_set(2), pointed_set(4)
    pres = PrecatPresentation(
        Y, X, B,
        Morphism(Y, X, (0, 1, 2, 2)),
        Morphism(Y, X, (0, 1, 2, 1)),
        Morphism(X, Y, (0, 1, 2)),
        Morphism(X, B, (0, 1, 1)))
    sigma, h_prime = reflect_U(pres)
    assert sigma.target.order == 2
    assert compose(h_prime, sigma).map == pres.h.map
    assert compose(sigma, pres.u).map == compose(sigma, pres.a).map


def test_reflect_U_needs_h_constant_on_classes():
    X, B, Y = pointed_set(3), pointed_set(2), pointed_set(4)
    pres = PrecatPresentation(
        Y, X, B,
        Morphism(Y, X, (0, 1, 2, 2)),
        Morphism(Y, X, (0, 1, 2, 1)),
        Morphism(X, Y, (0, 1, 2)),
        Morphism(X, B, (0, 1, 1)))
    pres.h = Morphism(X, B, (0, 1, 0))  # no longer coequalizes
    with pytest.raises(FactorizationFailure):
        reflect_U(pres)


def test_point_in_class_memberships():
    wedge = functor_T(pointed_set(2), pointed_set(2))
    prod = product_point(pointed_set(2), pointed_set(2))
    assert point_in_class(wedge, COPRODUCT_CLASS)[0]
    assert not point_in_class(wedge, PRODUCT_CLASS)[0]
    assert point_in_class(prod, PRODUCT_CLASS)[0]
    assert point_in_class(prod, ALL_CLASS) == (True, None)
    assert point_in_class(prod, [wedge]) == (False, None)
    ok, wit = point_in_class(prod, [prod])
    assert ok and wit[0] is prod
    with pytest.raises(BadInput):
        point_in_class(prod, "no-such-class")


def test_point_in_class_semidirect():
    from icat.group_actions import all_actions, semidirect_product
    from icat.structures import find_isomorphism
    C3, C2g = cyclic_group(3), cyclic_group(2)
    points = [semidirect_product(act) for act in all_actions(C3, C2g)]
    assert any(find_isomorphism(p.A, symmetric_group_3()) for p in points)
    for p in points:
        ok, wit = point_in_class(p, SEMIDIRECT_CLASS)
        assert ok and wit is not None


def test_restrict_to_class_on_chain_precat():
    C2g, Z1 = cyclic_group(2), cyclic_group(1)
    P = precat_from_2chain(
        TwoChain(C2g, C2g, C2g, zero_morphism(C2g, C2g), identity(C2g)))
    ok, wit = restrict_to_class(P, COPRODUCT_CLASS)
    assert ok and wit[0] == "both"
    ok2, _ = restrict_to_class(P.graph, COPRODUCT_CLASS)
    assert ok2
