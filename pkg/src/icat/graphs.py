"""Internal reflexive graphs and precategories: split-square validation,
the internal-category (pullback plus associativity) test, the inclusion of
graphs into precategories and its reflection via coequalizers."""

from .errors import FactorizationFailure, InvalidDiagram, BadInput
from .points import (
    SplitEpi,
    comparison_iso,
    functor_T,
    point_isomorphism,
    product_point,
)
from .structures import (
    Morphism,
    Verdict,
    compose,
    coequalizer,
    coproduct,
    identity,
    kernel_of_split_epi,
    kinds_compatible,
    permute_structure,
    zero_morphism,
)


def _eq(v, law, f, g):
    """Record pointwise equality of two parallel morphisms."""
    wit = next((x for x in range(len(f.map)) if f.map[x] != g.map[x]), None)
    v.record(law, wit is None,
             None if wit is None else (wit, f.map[wit], g.map[wit]))


class ReflexiveGraph:
    """d, c: C1 -> C0 with a common section e."""

    def __init__(self, C0, C1, d, c, e, check=True):
        self.C0, self.C1 = C0, C1
        self.d, self.c, self.e = d, c, e
        if check:
            v = self.validate()
            if not v.ok:
                raise InvalidDiagram("not a reflexive graph: %r" % (v,))

    def validate(self):
        v = Verdict()
        v.record("kinds", kinds_compatible(self.C0.kind, self.C1.kind))
        good_maps = all(
            f.source == s and f.target == t and f.verdict().ok
            for f, s, t in ((self.d, self.C1, self.C0),
                            (self.c, self.C1, self.C0),
                            (self.e, self.C0, self.C1)))
        v.record("morphisms", good_maps)
        if not v.ok:
            return v
        _eq(v, "d-section", compose(self.d, self.e), identity(self.C0))
        _eq(v, "c-section", compose(self.c, self.e), identity(self.C0))
        return v

    def point(self):
        """The split epi (d, e) underlying the graph."""
        return SplitEpi(self.C1, self.C0, self.d, self.e)


class Precategory:
    """A reflexive graph with a split square of composable pairs and m."""

    def __init__(self, graph, C2, p1, p2, e1, e2, m, check=True):
        self.graph = graph
        self.C2 = C2
        self.p1, self.p2 = p1, p2
        self.e1, self.e2 = e1, e2
        self.m = m
        if check:
            v = validate_precategory(self)
            if not v.ok:
                raise InvalidDiagram("not a precategory: %r" % (v,))

    @property
    def C0(self):
        return self.graph.C0

    @property
    def C1(self):
        return self.graph.C1

    @property
    def d(self):
        return self.graph.d

    @property
    def c(self):
        return self.graph.c

    @property
    def e(self):
        return self.graph.e

    def pair_point(self):
        """The split epi (p2, e2) over the arrow level."""
        return SplitEpi(self.C2, self.C1, self.p2, self.e2)


def validate_precategory(P):
    """Elementwise check of every split-square and identity law."""
    v = Verdict()
    g = P.graph.validate()
    v.record("reflexive-graph", g.ok, g.first_failure)
    good_maps = all(
        f.source == s and f.target == t and f.verdict().ok
        for f, s, t in ((P.p1, P.C2, P.C1), (P.p2, P.C2, P.C1),
                        (P.e1, P.C1, P.C2), (P.e2, P.C1, P.C2),
                        (P.m, P.C2, P.C1)))
    v.record("square-morphisms", good_maps)
    if not v.ok:
        return v
    one1, one2 = identity(P.C1), identity(P.C2)
    _eq(v, "p1-section", compose(P.p1, P.e1), one1)
    _eq(v, "p2-section", compose(P.p2, P.e2), one1)
    _eq(v, "square-commutes", compose(P.d, P.p1), compose(P.c, P.p2))
    _eq(v, "p2-of-e1", compose(P.p2, P.e1), compose(P.e, P.d))
    _eq(v, "p1-of-e2", compose(P.p1, P.e2), compose(P.e, P.c))
    _eq(v, "degenerate-square", compose(P.e1, P.e), compose(P.e2, P.e))
    _eq(v, "dom-of-m", compose(P.d, P.m), compose(P.d, P.p2))
    _eq(v, "cod-of-m", compose(P.c, P.m), compose(P.c, P.p1))
    _eq(v, "right-identity", compose(P.m, P.e1), one1)
    _eq(v, "left-identity", compose(P.m, P.e2), one1)
    return v


def composable_pairs(P):
    """All (second, first) arrow pairs with d(second) = c(first)."""
    d, c = P.d.map, P.c.map
    n = P.C1.order
    return [(u, w) for u in range(n) for w in range(n) if d[u] == c[w]]


class InternalCategoryVerdict:
    """Pullback and associativity outcome of the internal-category test."""

    def __init__(self, is_pullback, is_associative, witness=None):
        self.is_pullback = is_pullback
        self.is_associative = is_associative
        self.witness = witness

    @property
    def ok(self):
        return self.is_pullback and self.is_associative

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"is_pullback": self.is_pullback,
                "is_associative": self.is_associative,
                "witness": self.witness}

    def __repr__(self):
        return ("InternalCategoryVerdict(pullback=%s, associative=%s)"
                % (self.is_pullback, self.is_associative))


def is_internal_category(P):
    """Bijectivity of w -> (p1 w, p2 w) onto composable pairs, then
    elementwise associativity of the induced composition."""
    pairs = composable_pairs(P)
    image = [(P.p1.map[w], P.p2.map[w]) for w in range(P.C2.order)]
    if len(set(image)) != P.C2.order or set(image) != set(pairs):
        missing = sorted(set(pairs) - set(image))
        extra = sorted(p for p in set(image) if image.count(p) > 1)
        return InternalCategoryVerdict(False, False,
                                       ("pullback", missing, extra))
    inv = {pw: w for w, pw in enumerate(image)}
    comp = {pw: P.m.map[w] for pw, w in inv.items()}
    d, c = P.d.map, P.c.map
    n = P.C1.order
    for g, f in pairs:
        gf = comp[(g, f)]
        for h in range(n):
            if d[h] != c[g]:
                continue
            if comp[(h, gf)] != comp[(comp[(h, g)], f)]:
                return InternalCategoryVerdict(
                    True, False, ("associativity", h, g, f))
    return InternalCategoryVerdict(True, True)


def compose_arrows(P, g, f):
    """m at the unique composable pair above (g, f); needs the pullback."""
    if P.d.map[g] != P.c.map[f]:
        raise BadInput("arrows are not composable")
    for w in range(P.C2.order):
        if P.p1.map[w] == g and P.p2.map[w] == f:
            return P.m.map[w]
    raise FactorizationFailure("no composable pair above (%d, %d)" % (g, f))


class GraphMorphism:
    """Level-respecting maps (f1, f0) commuting with d, c, e."""

    def __init__(self, source, target, f1, f0, check=True):
        self.source, self.target = source, target
        self.f1, self.f0 = f1, f0
        if check:
            v = self.validate()
            if not v.ok:
                raise InvalidDiagram("not a graph morphism: %r" % (v,))

    def validate(self):
        v = Verdict()
        _eq(v, "d-square", compose(self.target.d, self.f1),
            compose(self.f0, self.source.d))
        _eq(v, "c-square", compose(self.target.c, self.f1),
            compose(self.f0, self.source.c))
        _eq(v, "e-square", compose(self.f1, self.source.e),
            compose(self.target.e, self.f0))
        return v

    def is_isomorphism(self):
        return self.f0.is_bijective() and self.f1.is_bijective()


class PrecatMorphism:
    """Level-respecting maps (f2, f1, f0) commuting with all structure."""

    def __init__(self, source, target, f2, f1, f0, check=True):
        self.source, self.target = source, target
        self.f2, self.f1, self.f0 = f2, f1, f0
        if check:
            v = self.validate()
            if not v.ok:
                raise InvalidDiagram("not a precategory morphism: %r" % (v,))

    def validate(self):
        v = GraphMorphism(self.source.graph, self.target.graph,
                          self.f1, self.f0, check=False).validate()
        P, Q = self.source, self.target
        _eq(v, "p1-square", compose(Q.p1, self.f2), compose(self.f1, P.p1))
        _eq(v, "p2-square", compose(Q.p2, self.f2), compose(self.f1, P.p2))
        _eq(v, "e1-square", compose(self.f2, P.e1), compose(Q.e1, self.f1))
        _eq(v, "e2-square", compose(self.f2, P.e2), compose(Q.e2, self.f1))
        _eq(v, "m-square", compose(Q.m, self.f2), compose(self.f1, P.m))
        return v

    def is_isomorphism(self):
        return (self.f0.is_bijective() and self.f1.is_bijective()
                and self.f2.is_bijective())


# ---------------------------------------------------------------------------
# presentations: h alone for graphs, (Y, X, B, a, u, b, h) for precategories


def graph_from_morphism(h):
    """The reflexive graph on X + B with d = [0 1], c = [h 1], e = inj2."""
    X, B = h.source, h.target
    co = coproduct(X, B)
    d = co.copair(zero_morphism(X, B), identity(B))
    c = co.copair(h, identity(B))
    return ReflexiveGraph(B, co.structure, d, c, co.inj2)


def morphism_from_graph(g):
    """Recover h: ker d -> C0 when C1 splits as ker d + C0.

    Returns (h, comparison) where the comparison [k e] is the certifying
    isomorphism; raises FactorizationFailure when it is not one.
    """
    p = g.point()
    cmp_map, ok = comparison_iso(p)
    if not ok:
        raise FactorizationFailure("C1 is not the coproduct of ker d and C0")
    h = compose(g.c, p.k)
    return h, cmp_map


class PrecatPresentation:
    """Split data (Y, X, B, a, u, b, h): a, u: Y -> X with common section
    b and h: X -> B coequalizing a and u."""

    def __init__(self, Y, X, B, a, u, b, h, check=True):
        self.Y, self.X, self.B = Y, X, B
        self.a, self.u, self.b, self.h = a, u, b, h
        if check:
            v = self.validate()
            if not v.ok:
                raise InvalidDiagram("bad presentation: %r" % (v,))

    def validate(self):
        v = Verdict()
        ends = (self.a.source == self.Y and self.a.target == self.X
                and self.u.source == self.Y and self.u.target == self.X
                and self.b.source == self.X and self.b.target == self.Y
                and self.h.source == self.X and self.h.target == self.B)
        v.record("endpoints", ends)
        if not ends:
            return v
        _eq(v, "ab-section", compose(self.a, self.b), identity(self.X))
        _eq(v, "ub-section", compose(self.u, self.b), identity(self.X))
        _eq(v, "h-coequalizes", compose(self.h, self.a),
            compose(self.h, self.u))
        return v

    def build(self):
        return precat_from_presentation(self)


def precat_from_presentation(pres):
    """The precategory on Y + (X + B) over X + B over B."""
    Y, X, B = pres.Y, pres.X, pres.B
    co1 = coproduct(X, B)
    C1 = co1.structure
    d = co1.copair(zero_morphism(X, B), identity(B))
    c = co1.copair(pres.h, identity(B))
    e = co1.inj2
    graph = ReflexiveGraph(B, C1, d, c, e, check=False)
    co2 = coproduct(Y, C1)
    C2 = co2.structure
    p2 = co2.copair(zero_morphism(Y, C1), identity(C1))
    e2 = co2.inj2
    p1 = co2.copair(compose(co1.inj1, pres.a), compose(e, c))
    e1 = co1.copair(compose(co2.inj1, pres.b), compose(e2, e))
    m = co2.copair(compose(co1.inj1, pres.u), identity(C1))
    return Precategory(graph, C2, p1, p2, e1, e2, m, check=False)


def include_V(h):
    """A graph presented by h as a precategory: Y = X and a = u = b = 1."""
    X = h.source
    one = identity(X)
    pres = PrecatPresentation(X, X, h.target, one, one, one, h, check=False)
    return precat_from_presentation(pres)


def reflect_U(pres):
    """Coequalize (u, a) and push h down: the graph reflection.

    Returns (sigma, h_prime) with h_prime . sigma = h, sigma the
    coequalizer of the reflexive pair (u, a, b).
    """
    Xq, sigma = coequalizer(pres.u, pres.a)
    vals = [None] * Xq.order
    for x in range(pres.X.order):
        q = sigma.map[x]
        hx = pres.h.map[x]
        if vals[q] is None:
            vals[q] = hx
        elif vals[q] != hx:
            raise FactorizationFailure("h does not coequalize u and a")
    h_prime = Morphism(Xq, pres.B, vals)
    return sigma, h_prime


# ---------------------------------------------------------------------------
# split-epi classes and relabeling


COPRODUCT_CLASS = "coproduct-projections"
PRODUCT_CLASS = "product-projections"
SEMIDIRECT_CLASS = "semidirect-projections"
ALL_CLASS = "all"


def point_in_class(p, cls):
    """Membership of a split epi in a canonical class, with witness.

    cls is one of the class names above or an explicit list of split epis
    (the image of a registered construction); returns (bool, witness).
    """
    if isinstance(cls, (list, tuple)):
        for q in cls:
            iso = point_isomorphism(q, p)
            if iso:
                return True, (q, iso[0].map, iso[1].map)
        return False, None
    if cls == ALL_CLASS:
        return True, None
    if cls == COPRODUCT_CLASS:
        cmp_map, ok = comparison_iso(p)
        return ok, (cmp_map.map if ok else None)
    if cls == PRODUCT_CLASS:
        if p.A.order != p.K.order * p.B.order:
            return False, None
        q = product_point(p.K, p.B)
        iso = point_isomorphism(q, p)
        return (True, (iso[0].map, iso[1].map)) if iso else (False, None)
    if cls == SEMIDIRECT_CLASS:
        from .group_actions import all_actions, semidirect_product
        if p.A.order != p.K.order * p.B.order:
            return False, None
        for act in all_actions(p.K, p.B):
            q = semidirect_product(act)
            iso = point_isomorphism(q, p)
            if iso:
                return True, (act.act, iso[0].map, iso[1].map)
        return False, None
    raise BadInput("unknown split-epi class %r" % (cls,))


def restrict_to_class(obj, cls):
    """Does the graph (and pair level, for precategories) lie in cls?"""
    if isinstance(obj, Precategory):
        ok1, w1 = point_in_class(obj.graph.point(), cls)
        if not ok1:
            return False, ("graph-level", w1)
        ok2, w2 = point_in_class(obj.pair_point(), cls)
        return ok2, ("pair-level", w2) if not ok2 else ("both", (w1, w2))
    ok, w = point_in_class(obj.point(), cls)
    return ok, w


def relabel_precategory(P, perm0, perm1, perm2):
    """Conjugate every structure and map along 0-fixing permutations."""
    C0 = permute_structure(P.C0, perm0)
    C1 = permute_structure(P.C1, perm1)
    C2 = permute_structure(P.C2, perm2)

    def push(f, src_perm, tgt_perm, S, T):
        inv = [0] * len(src_perm)
        for x, px in enumerate(src_perm):
            inv[px] = x
        return Morphism(S, T, tuple(tgt_perm[f.map[inv[x]]]
                                    for x in range(len(src_perm))))

    graph = ReflexiveGraph(C0, C1,
                           push(P.d, perm1, perm0, C1, C0),
                           push(P.c, perm1, perm0, C1, C0),
                           push(P.e, perm0, perm1, C0, C1))
    return Precategory(graph, C2,
                       push(P.p1, perm2, perm1, C2, C1),
                       push(P.p2, perm2, perm1, C2, C1),
                       push(P.e1, perm1, perm2, C1, C2),
                       push(P.e2, perm1, perm2, C1, C2),
                       push(P.m, perm2, perm1, C2, C1))
