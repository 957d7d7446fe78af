"""Classification over finite abelian groups: reflexive graphs are
morphisms, precategories are 2-chains, and every equivalence is returned
together with a checked isomorphism certificate."""

from .errors import ChainConditionViolated, ComparisonNotIso, KindMismatch
from .graphs import (
    GraphMorphism,
    PrecatMorphism,
    PrecatPresentation,
    graph_from_morphism,
    precat_from_presentation,
    validate_precategory,
)
from .errors import InvalidDiagram
from .structures import (
    GROUP_KINDS,
    Morphism,
    compose,
    coproduct,
    identity,
    is_zero,
    kernel_of_split_epi,
    zero_morphism,
)


def _require_abelian(*structs):
    for X in structs:
        if X.kind not in GROUP_KINDS:
            raise KindMismatch("abelian-group kind needed, got %s" % X.kind)
        t = X.table
        for x in range(X.order):
            for y in range(x):
                if t[x][y] != t[y][x]:
                    raise KindMismatch("operation is not commutative")


class TwoChain:
    """Z --t--> X --h--> B over abelian groups with h.t = 0."""

    def __init__(self, Z, X, B, t, h, check=True):
        self.Z, self.X, self.B = Z, X, B
        self.t, self.h = t, h
        if check:
            _require_abelian(Z, X, B)
            if t.source != Z or t.target != X or \
                    h.source != X or h.target != B:
                raise InvalidDiagram("chain endpoints do not line up")
            if not is_zero(compose(h, t)):
                raise ChainConditionViolated("h . t is not zero")

    def key(self):
        return (self.Z.key(), self.X.key(), self.B.key(),
                self.t.map, self.h.map)

    def __eq__(self, other):
        return isinstance(other, TwoChain) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "TwoChain(%d -> %d -> %d)" % (
            self.Z.order, self.X.order, self.B.order)


def rg_from_morphism(h):
    """The graph (X + B, [0 1], [h 1], inj2) classified by h."""
    _require_abelian(h.source, h.target)
    return graph_from_morphism(h)


def _through(k, f, context):
    """The factorization g with k.g = f through an injection k."""
    inv = {a: x for x, a in enumerate(k.map)}
    vals = []
    for v in f.map:
        if v not in inv:
            raise ComparisonNotIso("%s does not factor through the kernel: "
                                   "value %d" % (context, v))
        vals.append(inv[v])
    return Morphism(f.source, k.source, tuple(vals))


def _certified_coproduct(K, B, k, beta, context):
    """The comparison [k beta]: K + B -> A, insisting it is an iso."""
    cmp_map = coproduct(K, B).copair(k, beta)
    if not cmp_map.is_bijective() or not cmp_map.verdict().ok:
        raise ComparisonNotIso("comparison [k beta] fails at %s: map %r"
                               % (context, cmp_map.map))
    return cmp_map


def morphism_from_rg(g):
    """Recover h = c.k on K = ker d plus the certificate [k e]."""
    _require_abelian(g.C0, g.C1)
    K, k = kernel_of_split_epi(g.d, g.e)
    cert = _certified_coproduct(K, g.C0, k, g.e, "arrow level")
    return compose(g.c, k), cert


def presentation_from_2chain(ch):
    """(Y, X, B, a, u, b, h) with Y = Z + X, a = [0 1], u = [t 1]."""
    co = coproduct(ch.Z, ch.X)
    Y = co.structure
    a = co.copair(zero_morphism(ch.Z, ch.X), identity(ch.X))
    u = co.copair(ch.t, identity(ch.X))
    return PrecatPresentation(Y, ch.X, ch.B, a, u, co.inj2, ch.h)


def precat_from_2chain(ch):
    """The precategory on (Z + X) + (X + B) over X + B over B."""
    if not is_zero(compose(ch.h, ch.t)):
        raise ChainConditionViolated("h . t is not zero")
    return precat_from_presentation(presentation_from_2chain(ch))


def chain_from_precat(P, check=True):
    """Extract (Z -> X -> B) plus the three comparison certificates.

    Kernels are taken at the arrow level (ker d), the pair level (ker p2)
    and the vertex level (ker a); each level's coproduct comparison is
    verified to be an isomorphism before use.
    """
    _require_abelian(P.C0, P.C1, P.C2)
    if check:
        v = validate_precategory(P)
        if not v.ok:
            raise InvalidDiagram("not a precategory: %r" % (v,))
    X, k1 = kernel_of_split_epi(P.d, P.e)
    cert1 = _certified_coproduct(X, P.C0, k1, P.e, "arrow level")
    h = compose(P.c, k1)
    Y, k2 = kernel_of_split_epi(P.p2, P.e2)
    cert2 = _certified_coproduct(Y, P.C1, k2, P.e2, "pair level")
    a = _through(k1, compose(P.p1, k2), "p1")
    u = _through(k1, compose(P.m, k2), "m")
    b = _through(k2, compose(P.e1, k1), "e1")
    Z, kz = kernel_of_split_epi(a, b)
    t = compose(u, kz)
    cert3 = _certified_coproduct(Z, X, kz, b, "vertex level")
    chain = TwoChain(Z, X, P.C0, t, h)
    certs = {
        "arrow": cert1, "pair": cert2, "vertex": cert3,
        "arrow_kernel": k1, "pair_kernel": k2, "vertex_kernel": kz,
        "presentation": PrecatPresentation(Y, X, P.C0, a, u, b, h),
    }
    return chain, certs


# ---------------------------------------------------------------------------
# round-trip certificates


def rg_roundtrip_certificate(g):
    """(h, rebuilt graph, iso rebuilt -> g) for an abelian graph."""
    h, cert = morphism_from_rg(g)
    rebuilt = rg_from_morphism(h)
    gm = GraphMorphism(rebuilt, g, cert, identity(g.C0))
    if not gm.is_isomorphism():
        raise ComparisonNotIso("graph round-trip certificate not an iso")
    return h, rebuilt, gm


def precat_roundtrip_certificate(P, check=True):
    """(chain, rebuilt precategory, iso rebuilt -> P)."""
    chain, certs = chain_from_precat(P, check=check)
    Q = precat_from_2chain(chain)
    f1 = certs["arrow"]
    f2 = coproduct(certs["vertex"].source, f1.source).copair(
        compose(certs["pair_kernel"], certs["vertex"]),
        compose(P.e2, f1))
    pm = PrecatMorphism(Q, P, f2, f1, identity(P.C0))
    if not pm.is_isomorphism():
        raise ComparisonNotIso("precategory round-trip certificate "
                               "not an iso")
    return chain, Q, pm


# ---------------------------------------------------------------------------
# functoriality


class ChainMorphism:
    """Levelwise maps (fZ, fX, fB) commuting with t and h."""

    def __init__(self, source, target, fZ, fX, fB, check=True):
        self.source, self.target = source, target
        self.fZ, self.fX, self.fB = fZ, fX, fB
        if check:
            if compose(target.t, fZ).map != compose(fX, source.t).map:
                raise InvalidDiagram("t square does not commute")
            if compose(target.h, fX).map != compose(fB, source.h).map:
                raise InvalidDiagram("h square does not commute")

    def compose_with(self, other):
        """self after other."""
        return ChainMorphism(other.source, self.target,
                             compose(self.fZ, other.fZ),
                             compose(self.fX, other.fX),
                             compose(self.fB, other.fB), check=False)


def precat_morphism_from_chain(cm):
    """The levelwise coproduct map between the built precategories."""
    Ps = precat_from_2chain(cm.source)
    Pt = precat_from_2chain(cm.target)
    co_ys = coproduct(cm.source.Z, cm.source.X)
    co_yt = coproduct(cm.target.Z, cm.target.X)
    fY = co_ys.copair(compose(co_yt.inj1, cm.fZ), compose(co_yt.inj2, cm.fX))
    co_1s = coproduct(cm.source.X, cm.source.B)
    co_1t = coproduct(cm.target.X, cm.target.B)
    f1 = co_1s.copair(compose(co_1t.inj1, cm.fX), compose(co_1t.inj2, cm.fB))
    co_2s = coproduct(co_ys.structure, co_1s.structure)
    co_2t = coproduct(co_yt.structure, co_1t.structure)
    f2 = co_2s.copair(compose(co_2t.inj1, fY), compose(co_2t.inj2, f1))
    return PrecatMorphism(Ps, Pt, f2, f1, cm.fB)


def chain_morphism_from_precat(pm):
    """Restrict a precategory morphism to kernels on every level."""
    chs, cs = chain_from_precat(pm.source)
    cht, ct = chain_from_precat(pm.target)
    fX = _through(ct["arrow_kernel"],
                  compose(pm.f1, cs["arrow_kernel"]), "arrow restriction")
    fY = _through(ct["pair_kernel"],
                  compose(pm.f2, cs["pair_kernel"]), "pair restriction")
    fZ = _through(ct["vertex_kernel"],
                  compose(fY, cs["vertex_kernel"]), "vertex restriction")
    return ChainMorphism(chs, cht, fZ, fX, pm.f0)


# ---------------------------------------------------------------------------
# enumeration


def all_2chains(groups, homs):
    """Every 2-chain with levels drawn from the given structures.

    homs(A, B) must list the homomorphisms between two structures.
    """
    out = []
    for B in groups:
        for X in groups:
            for h in homs(X, B):
                for Z in groups:
                    for t in homs(Z, X):
                        if is_zero(compose(h, t)):
                            out.append(TwoChain(Z, X, B, t, h, check=False))
    return out
