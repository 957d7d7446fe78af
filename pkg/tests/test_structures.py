"""Tables, morphisms, (co)products, kernels, quotients, enumeration."""

from itertools import product as iproduct

import pytest

from icat.corpus import klein_four, symmetric_group_3
from icat.errors import (
    InvalidMorphism,
    InvalidStructure,
    KindMismatch,
    NotSplit,
    UnsupportedCoproduct,
)
from icat.structures import (
    ABELIAN_GROUP,
    GROUP,
    POINTED_SET,
    UNITAL_MAGMA,
    FiniteStructure,
    Morphism,
    automorphisms,
    closure,
    coequalizer,
    compose,
    congruence_closure,
    coproduct,
    cyclic_group,
    find_isomorphism,
    generators,
    homomorphisms,
    identity,
    is_zero,
    isomorphisms,
    jointly_epic,
    kernel_of_split_epi,
    kinds_compatible,
    morphism_space,
    morphisms_with_pins,
    permute_structure,
    pointed_maps,
    pointed_set,
    product,
    quotient_by_partition,
    quotients,
    substructure,
    trivial,
    verify_coequalizer,
    zero_morphism,
)


def test_kinds_compatible():
    assert kinds_compatible(GROUP, ABELIAN_GROUP)
    assert kinds_compatible(ABELIAN_GROUP, GROUP)
    assert kinds_compatible(POINTED_SET, POINTED_SET)
    assert not kinds_compatible(POINTED_SET, GROUP)
    assert not kinds_compatible(UNITAL_MAGMA, GROUP)


def test_structure_validation():
    cyclic_group(5).validate()
    pointed_set(3).validate()
    with pytest.raises(InvalidStructure):
        FiniteStructure(POINTED_SET, 2, [[0, 1], [1, 0]])
    with pytest.raises(InvalidStructure):
        FiniteStructure(GROUP, 2, [[0, 1], [1, 1]])
    with pytest.raises(InvalidStructure):
        FiniteStructure(GROUP, 3, [[0, 1, 2], [1, 2, 0], [2, 1, 0]])
    s3 = symmetric_group_3()
    with pytest.raises(InvalidStructure):
        FiniteStructure(ABELIAN_GROUP, 6, s3.table)
    # right cancellation: column 1 repeats
    with pytest.raises(InvalidStructure):
        FiniteStructure(UNITAL_MAGMA, 2, [[0, 1], [1, 1]])


def test_identity_is_two_sided_and_zero_absorbs():
    for X in (cyclic_group(4), symmetric_group_3()):
        for x in range(X.order):
            assert X.op(0, x) == x and X.op(x, 0) == x
    z = zero_morphism(cyclic_group(3), cyclic_group(4))
    assert is_zero(z) and z.verdict().ok


def test_retagged_revalidates():
    c4 = cyclic_group(4)
    m = c4.retagged(UNITAL_MAGMA)
    assert m.kind == UNITAL_MAGMA and m.table == c4.table
    with pytest.raises(InvalidStructure):
        symmetric_group_3().retagged(ABELIAN_GROUP)


def test_morphism_verdict():
    c2, c4 = cyclic_group(2), cyclic_group(4)
    assert Morphism(c2, c4, (0, 2)).verdict().ok
    assert not Morphism(c2, c4, (0, 1), check=False).verdict().ok
    with pytest.raises(InvalidMorphism):
        Morphism(c2, c4, (0, 1))
    with pytest.raises(InvalidMorphism):
        Morphism(c2, c4, (0,), check=False).verdict()


def test_compose_and_identity():
    c6 = cyclic_group(6)
    f = Morphism(cyclic_group(3), c6, (0, 2, 4))
    assert compose(identity(c6), f).map == f.map
    assert compose(f, identity(f.source)).map == f.map
    g = Morphism(c6, cyclic_group(2), (0, 1, 0, 1, 0, 1))
    assert compose(g, f).map == (0, 0, 0)


def test_product_projections_and_pairing():
    c2, c3 = cyclic_group(2), cyclic_group(3)
    pr = product(c2, c3)
    assert pr.structure.order == 6
    assert pr.proj1.verdict().ok and pr.proj2.verdict().ok
    f = Morphism(c6 := cyclic_group(6), c2, (0, 1, 0, 1, 0, 1))
    g = Morphism(c6, c3, (0, 1, 2, 0, 1, 2))
    h = pr.pair(f, g)
    assert h.verdict().ok
    assert compose(pr.proj1, h).map == f.map
    assert compose(pr.proj2, h).map == g.map
    # uniqueness by scan
    others = [m for m in morphism_space(c6, pr.structure)
              if compose(pr.proj1, m).map == f.map
              and compose(pr.proj2, m).map == g.map]
    assert len(others) == 1


def test_wedge_coproduct_pointed_sets():
    X, B = pointed_set(3), pointed_set(4)
    co = coproduct(X, B)
    assert co.structure.order == 6
    T = pointed_set(5)
    f = Morphism(X, T, (0, 2, 2))
    g = Morphism(B, T, (0, 1, 3, 4))
    h = co.copair(f, g)
    assert compose(h, co.inj1).map == f.map
    assert compose(h, co.inj2).map == g.map
    others = [m for m in morphism_space(co.structure, T)
              if compose(m, co.inj1).map == f.map
              and compose(m, co.inj2).map == g.map]
    assert len(others) == 1


def test_biproduct_coproduct_abelian():
    c2, c4 = cyclic_group(2), cyclic_group(4)
    co = coproduct(c2, c4)
    assert co.structure.order == 8
    T = cyclic_group(4)
    f = Morphism(c2, T, (0, 2))
    g = identity(c4)
    h = co.copair(f, g)
    assert h.verdict().ok
    assert compose(h, co.inj1).map == f.map
    assert compose(h, co.inj2).map == g.map
    others = [m for m in homomorphisms(co.structure, T)
              if compose(m, co.inj1).map == f.map
              and compose(m, co.inj2).map == g.map]
    assert len(others) == 1


def test_coproduct_unsupported_kinds():
    with pytest.raises(UnsupportedCoproduct):
        coproduct(symmetric_group_3().retagged(GROUP),
                  cyclic_group(2).retagged(GROUP))
    m = cyclic_group(3).retagged(UNITAL_MAGMA)
    with pytest.raises(UnsupportedCoproduct):
        coproduct(m, m)


def test_closure_substructure_generators():
    s3 = symmetric_group_3()
    assert closure(s3, {4}) == {0, 4, 5}
    N, embed = substructure(s3, {0, 4, 5})
    assert N.order == 3 and embed.verdict().ok
    assert find_isomorphism(N, cyclic_group(3).retagged(GROUP)) is not None
    with pytest.raises(InvalidStructure):
        substructure(s3, {0, 1, 4})
    assert generators(cyclic_group(6)) == [1]
    assert len(generators(klein_four())) == 2


def test_kernel_of_split_epi():
    c2, c3 = cyclic_group(2), cyclic_group(3)
    pr = product(c3, c2)
    beta = Morphism(c2, pr.structure, (0, 1))
    K, k = kernel_of_split_epi(pr.proj2, beta)
    assert K.order == 3 and k.verdict().ok
    assert all(pr.proj2.map[v] == 0 for v in k.map)
    with pytest.raises(NotSplit):
        kernel_of_split_epi(pr.proj2, Morphism(c2, pr.structure, (0, 0),
                                               check=False))


def test_quotient_by_partition():
    c4 = cyclic_group(4)
    Q, sigma = quotient_by_partition(c4, [[0, 2], [1, 3]])
    assert Q.order == 2 and sigma.verdict().ok
    with pytest.raises(InvalidStructure):
        quotient_by_partition(c4, [[0, 1], [2, 3]])
    with pytest.raises(InvalidStructure):
        quotient_by_partition(c4, [[1, 3], [2]])


def test_quotients_of_s3():
    qs = quotients(symmetric_group_3())
    assert sorted(q.order for q in qs) == [1, 2, 6]


def test_congruence_closure_is_normal_closure():
    s3 = symmetric_group_3()
    classes = congruence_closure(s3, [(0, 1)])
    # the normal closure of a transposition is all of S3
    assert len(classes) == 1
    classes = congruence_closure(s3, [(0, 4)])
    assert sorted(len(c) for c in classes) == [3, 3]


def test_coequalizer_universal_property():
    c4 = cyclic_group(4)
    c2 = cyclic_group(2)
    d = Morphism(c2, c4, (0, 2))
    c = zero_morphism(c2, c4)
    Q, sigma = coequalizer(d, c)
    assert Q.order == 2
    targets = [cyclic_group(n) for n in (1, 2, 3, 4)]
    assert verify_coequalizer(d, c, Q, sigma, targets)
    # pointed-set coequalizer is plain identification
    X, B = pointed_set(2), pointed_set(3)
    d2 = Morphism(X, B, (0, 1))
    c2m = Morphism(X, B, (0, 2))
    Q2, sigma2 = coequalizer(d2, c2m)
    assert Q2.order == 2
    assert verify_coequalizer(d2, c2m, Q2, sigma2,
                              [pointed_set(n) for n in (1, 2, 3)])


def test_pointed_maps_count():
    assert len(pointed_maps(pointed_set(3), pointed_set(4))) == 16
    assert len(pointed_maps(pointed_set(1), pointed_set(4))) == 1


def test_homomorphisms_against_raw_scan():
    small = [cyclic_group(1), cyclic_group(2), cyclic_group(3),
             cyclic_group(4), klein_four(), symmetric_group_3()]
    for A in small:
        for B in small:
            fast = {f.map for f in homomorphisms(A, B)}
            slow = set()
            for vals in iproduct(range(B.order), repeat=A.order - 1):
                f = (0,) + vals
                if all(f[A.op(x, y)] == B.op(f[x], f[y])
                       for x in range(A.order) for y in range(A.order)):
                    slow.add(f)
            assert fast == slow


def test_morphisms_with_pins():
    c4 = cyclic_group(4)
    pinned = morphisms_with_pins(c4, c4, {1: 3})
    assert [f.map for f in pinned] == [(0, 3, 2, 1)]
    assert morphisms_with_pins(c4, c4, {1: 1, 2: 3}) == []


def test_isomorphisms_and_automorphisms():
    c4, k4 = cyclic_group(4), klein_four()
    assert find_isomorphism(c4, k4.retagged(ABELIAN_GROUP)) is None
    assert len(automorphisms(c4)) == 2
    assert len(automorphisms(klein_four())) == 6
    assert len(automorphisms(symmetric_group_3())) == 6
    c6 = cyclic_group(6)
    isos = list(isomorphisms(c6, c6))
    assert len(isos) == 2 and all(i.verdict().ok for i in isos)


def test_permute_structure_is_isomorphic():
    s3 = symmetric_group_3()
    Y = permute_structure(s3, [0, 3, 1, 4, 2, 5])
    assert Y.key() != s3.key()
    assert find_isomorphism(s3, Y) is not None


def test_jointly_epic_generation_matches_probes():
    c2, c4 = cyclic_group(2), cyclic_group(4)
    f = Morphism(c2, c4, (0, 2))
    g = Morphism(c2, c4, (0, 2))
    probes = [cyclic_group(n) for n in (1, 2, 3, 4)]
    assert not jointly_epic(f, g)
    assert not jointly_epic(f, g, probes=probes)
    h = Morphism(c4, c4, (0, 1, 2, 3))
    assert jointly_epic(f, h)
    assert jointly_epic(f, h, probes=probes)
    # pointed sets: images must cover
    X = pointed_set(3)
    a = Morphism(pointed_set(2), X, (0, 1))
    b = Morphism(pointed_set(2), X, (0, 2))
    assert jointly_epic(a, b)
    assert jointly_epic(a, b, probes=[pointed_set(n) for n in (2, 3)])
    assert not jointly_epic(a, a)


def test_trivial_structures():
    for kind in (POINTED_SET, ABELIAN_GROUP, GROUP, UNITAL_MAGMA):
        t = trivial(kind)
        assert t.order == 1 and t.kind == kind
