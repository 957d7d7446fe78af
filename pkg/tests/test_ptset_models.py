"""Star and product models over pointed sets."""

import pytest

from icat.errors import (
    BadInput,
    BoundTooLarge,
    KernelNotTrivial,
    LawViolation,
)
from icat.graphs import is_internal_category, validate_precategory
from icat.ptset_models import (
    ConcreteCategory,
    FiberedAction,
    StarPresentation,
    mu_associative,
    product_graph,
    product_model_category,
    product_precategory,
    search_associativity_gap,
    star_category,
    star_precategory,
    validate_fibered_action,
    xor_action,
)
from icat.structures import Morphism, cyclic_group, pointed_set


def _pmap(n, m, vals):
    return Morphism(pointed_set(n), pointed_set(m), vals)


def test_star_presentation_needs_pointed_sets():
    C2 = cyclic_group(2)
    with pytest.raises(BadInput):
        StarPresentation(Morphism(C2, C2, (0, 1)))


def test_star_presentation_kernel():
    s = StarPresentation(_pmap(4, 2, (0, 1, 0, 1)))
    assert s.kernel_elements() == [2]
    assert not s.trivial_kernel
    assert StarPresentation(_pmap(3, 2, (0, 1, 1))).trivial_kernel


def test_star_category_counts_and_laws():
    s = StarPresentation(_pmap(3, 2, (0, 1, 1)))
    cat = star_category(s)
    assert cat.n_objects == 2 and cat.n_arrows == 4
    assert cat.validate().ok
    assert cat.dom[2:] == (0, 0)
    assert cat.cod[2:] == (1, 1)


def test_star_category_rejects_kernel():
    s = StarPresentation(_pmap(3, 2, (0, 0, 1)))
    with pytest.raises(KernelNotTrivial):
        star_category(s)


def test_star_precategory_pullback_iff_trivial_kernel():
    from itertools import product as iproduct
    for nX in range(1, 4):
        for nB in range(1, 4):
            for tail in iproduct(range(nB), repeat=nX - 1):
                s = StarPresentation(_pmap(nX, nB, (0,) + tail))
                P = star_precategory(s)
                assert validate_precategory(P).ok
                v = is_internal_category(P)
                assert v.is_pullback == s.trivial_kernel
                if v.is_pullback:
                    assert v.is_associative


def test_concrete_category_validate_catches_tampering():
    cat = star_category(StarPresentation(_pmap(3, 2, (0, 1, 1))))
    broken = ConcreteCategory(cat.n_objects, cat.dom, cat.cod, cat.ident,
                              {k: v for k, v in cat.comp.items()
                               if k != (1, 2)})
    v = broken.validate()
    assert not v.ok
    assert dict(x[:2] for x in v.results)["composition-domain"] is False
    twisted = dict(cat.comp)
    twisted[(1, 2)] = 3
    v2 = ConcreteCategory(cat.n_objects, cat.dom, cat.cod, cat.ident,
                          twisted).validate()
    assert not v2.ok


def test_concrete_category_to_json_shape():
    cat = star_category(StarPresentation(_pmap(2, 2, (0, 1))))
    blob = cat.to_json()
    assert blob["objects"] == 2 and blob["arrows"] == 3
    assert all(len(row) == 3 for row in blob["comp"])


def test_fibered_action_shape_errors():
    X, B = pointed_set(2), pointed_set(2)
    with pytest.raises(BadInput):
        FiberedAction(X, B, [[0, 1]])  # too few xi rows
    with pytest.raises(BadInput):
        FiberedAction(X, B, [[0, 2], [1, 0]])  # value out of range
    one = Morphism(X, X, (0, 1))
    with pytest.raises(BadInput):
        FiberedAction(X, B, [[0, 1], [1, 0]], Y=X)  # Y without mu
    with pytest.raises(BadInput):
        FiberedAction(X, B, [[0, 1], [1, 0]], Y=X, mu=[[[0, 1], [0, 1]]])


def test_xor_action_passes_every_law():
    f = xor_action()
    assert f.has_mu
    assert validate_fibered_action(f).ok
    assert mu_associative(f) == (True, None)


def test_xi_unit_violation_detected():
    X, B = pointed_set(2), pointed_set(2)
    f = FiberedAction(X, B, [[0, 0], [1, 0]])
    v = validate_fibered_action(f)
    assert not v.ok
    assert v.first_failure[0] == "xi-unit"


def test_product_graph_and_precategory_of_xor():
    f = xor_action()
    g = product_graph(f)
    assert g.validate().ok
    assert g.C1.order == 4
    P = product_precategory(f)
    assert validate_precategory(P).ok
    v = is_internal_category(P)
    assert v.is_pullback and v.is_associative


def test_product_model_category_of_xor():
    cat = product_model_category(xor_action())
    assert cat.n_objects == 2 and cat.n_arrows == 4
    assert cat.validate().ok


def test_product_model_category_needs_identity_frame():
    X, B = pointed_set(2), pointed_set(2)
    plain = FiberedAction(X, B, [[0, 1], [1, 0]])
    with pytest.raises(BadInput):
        product_model_category(plain)
    f = xor_action()
    crush = Morphism(f.X, f.X, (0, 0))
    tilted = FiberedAction(f.X, f.B, f.xi, f.Y, crush, f.beta, f.mu)
    with pytest.raises(BadInput):
        product_model_category(tilted)


def test_every_single_entry_mutation_is_detected():
    f = xor_action()

    def detected(mut):
        try:
            if not validate_fibered_action(mut).ok:
                return True
            if not mu_associative(mut)[0]:
                return True
            return not product_model_category(mut).validate().ok
        except (LawViolation, BadInput):
            return True

    total = caught = 0
    nX, nB = f.X.order, f.B.order
    for x in range(nX):
        for b in range(nB):
            for val in range(nB):
                if val == f.xi[x][b]:
                    continue
                xi = [list(r) for r in f.xi]
                xi[x][b] = val
                total += 1
                caught += detected(FiberedAction(f.X, f.B, xi, f.Y,
                                                 f.alpha, f.beta, f.mu))
    for y in range(nX):
        for b in range(nB):
            for x in range(nX):
                for val in range(nX):
                    if val == f.mu[y][b][x]:
                        continue
                    mu = [[list(c) for c in r] for r in f.mu]
                    mu[y][b][x] = val
                    total += 1
                    caught += detected(FiberedAction(f.X, f.B, f.xi, f.Y,
                                                     f.alpha, f.beta, mu))
    assert total == 12
    assert caught == 12


def test_search_associativity_gap_none_at_two():
    assert search_associativity_gap(2, 2) is None


def test_search_associativity_gap_found_at_three():
    got = search_associativity_gap(3, 2)
    assert got is not None
    f, wit = got
    assert validate_fibered_action(f).ok
    ok, wit2 = mu_associative(f)
    assert not ok and wit2 == wit
    assert not product_model_category(f).validate().ok


def test_search_associativity_gap_cap():
    with pytest.raises(BoundTooLarge):
        search_associativity_gap(4, 3)
