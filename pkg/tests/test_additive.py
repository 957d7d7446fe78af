"""Abelian graphs and precategories against morphisms and 2-chains."""

import pytest

from icat.additive import (
    ChainMorphism,
    TwoChain,
    all_2chains,
    chain_from_precat,
    chain_morphism_from_precat,
    morphism_from_rg,
    precat_from_2chain,
    precat_morphism_from_chain,
    precat_roundtrip_certificate,
    rg_from_morphism,
    rg_roundtrip_certificate,
    validate_precategory,
)
from icat.corpus import abelian_groups, klein_four, symmetric_group_3
from icat.errors import (
    ChainConditionViolated,
    InvalidDiagram,
    KindMismatch,
)
from icat.graphs import is_internal_category, relabel_precategory
from icat.structures import (
    Morphism,
    compose,
    cyclic_group,
    homomorphisms,
    identity,
    zero_morphism,
)


def _homs(A, B):
    return homomorphisms(A, B)


def test_rg_from_morphism_rejects_non_abelian():
    S3 = symmetric_group_3()
    with pytest.raises(KindMismatch):
        rg_from_morphism(zero_morphism(S3, cyclic_group(2)))


def test_two_chain_requires_zero_composite():
    C2 = cyclic_group(2)
    with pytest.raises(ChainConditionViolated):
        TwoChain(C2, C2, C2, identity(C2), identity(C2))


def test_two_chain_requires_matching_endpoints():
    C2, C3 = cyclic_group(2), cyclic_group(3)
    with pytest.raises(InvalidDiagram):
        TwoChain(C2, C3, C2, identity(C2), zero_morphism(C3, C2))


def test_rg_round_trips_exhaustively():
    ab = abelian_groups(4)
    count = 0
    for X in ab:
        for B in ab:
            for h in _homs(X, B):
                g = rg_from_morphism(h)
                h2, cert = morphism_from_rg(g)
                assert h2.map == h.map
                assert cert.is_bijective()
                count += 1
    assert count > 50


def test_rg_roundtrip_certificate_is_graph_iso():
    h = Morphism(cyclic_group(4), cyclic_group(2), (0, 1, 0, 1))
    g = rg_from_morphism(h)
    h2, rebuilt, gm = rg_roundtrip_certificate(g)
    assert h2.map == h.map
    assert gm.is_isomorphism() and gm.validate().ok


def test_precat_from_2chain_validates_small():
    ab = abelian_groups(3)
    for ch in all_2chains(ab, _homs):
        P = precat_from_2chain(ch)
        assert validate_precategory(P).ok


def test_precat_from_2chain_rejects_nonzero_composite():
    C2 = cyclic_group(2)
    ch = TwoChain(C2, C2, C2, identity(C2), identity(C2), check=False)
    with pytest.raises(ChainConditionViolated):
        precat_from_2chain(ch)


def test_chain_round_trips_exhaustively():
    ab = abelian_groups(4)
    for ch in all_2chains(ab, _homs):
        P = precat_from_2chain(ch)
        ch2, certs = chain_from_precat(P, check=False)
        assert ch2 == ch
        for level in ("arrow", "pair", "vertex"):
            assert certs[level].is_bijective()


def test_precat_roundtrip_certificate_is_precat_iso():
    K4, C2 = klein_four(), cyclic_group(2)
    ch = TwoChain(C2, K4, C2, Morphism(C2, K4, (0, 1)),
                  Morphism(K4, C2, (0, 0, 1, 1)))
    P = precat_from_2chain(ch)
    chain, rebuilt, pm = precat_roundtrip_certificate(P)
    assert chain == ch
    assert pm.is_isomorphism() and pm.validate().ok


def test_roundtrip_survives_relabelling():
    C2 = cyclic_group(2)
    ch = TwoChain(C2, C2, C2, identity(C2), zero_morphism(C2, C2))
    P = precat_from_2chain(ch)
    n1, n2 = P.C1.order, P.C2.order
    perm1 = tuple([0] + list(range(n1 - 1, 0, -1)))
    perm2 = tuple([0] + list(range(n2 - 1, 0, -1)))
    Q = relabel_precategory(P, (0, 1), perm1, perm2)
    chain, rebuilt, pm = precat_roundtrip_certificate(Q)
    assert pm.is_isomorphism()
    assert chain.Z.order == 2 and chain.X.order == 2


def test_chain_from_precat_rejects_non_abelian():
    from icat.graphs import include_V
    from icat.structures import pointed_set
    P = include_V(identity(pointed_set(2)))
    with pytest.raises(KindMismatch):
        chain_from_precat(P)


def test_chain_morphism_functor_round_trip():
    C3 = cyclic_group(3)
    ch = TwoChain(C3, C3, C3, identity(C3), zero_morphism(C3, C3))
    double = Morphism(C3, C3, (0, 2, 1))
    cm = ChainMorphism(ch, ch, double, double, double)
    pm = precat_morphism_from_chain(cm)
    assert pm.validate().ok
    back = chain_morphism_from_precat(pm)
    assert back.fZ.map == cm.fZ.map
    assert back.fX.map == cm.fX.map
    assert back.fB.map == cm.fB.map


def test_chain_morphism_rejects_broken_square():
    C2 = cyclic_group(2)
    src = TwoChain(C2, C2, C2, identity(C2), zero_morphism(C2, C2))
    with pytest.raises(InvalidDiagram):
        ChainMorphism(src, src, identity(C2), zero_morphism(C2, C2),
                      identity(C2))


def test_chain_morphism_composition():
    C2 = cyclic_group(2)
    ch = TwoChain(C2, C2, C2, identity(C2), zero_morphism(C2, C2))
    one = ChainMorphism(ch, ch, identity(C2), identity(C2), identity(C2))
    two = one.compose_with(one)
    assert two.fX.map == (0, 1)


def test_all_2chains_count_frozen():
    ab = abelian_groups(4)
    chains = all_2chains(ab, _homs)
    assert len(chains) == 575
    assert len(set(ch.key() for ch in chains)) == 575


def test_internal_category_iff_trivial_vertex_group():
    ab = abelian_groups(3)
    for ch in all_2chains(ab, _homs):
        P = precat_from_2chain(ch)
        assert is_internal_category(P).is_pullback == (ch.Z.order == 1)
