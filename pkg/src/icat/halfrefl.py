"""Half-reflections between finite categories, with adjoints and brackets.

A registration packages a small category of structured objects (pairs,
split epis, group actions) with the ambient category of structures via
functors I and G and a transformation pi obeying IG = 1, I(pi) = 1,
naturality, and pi_GIA . pi_A = pi_A.  When G has a left adjoint F the
registration also carries (F, eta, epsilon), and the canonical split epi
(FA, epsilon.F(pi_A), I(eta_A)) becomes available, along with the derived
categories A1 and A2 and the seven-equation calculus on two-level
diagrams.  A kernel-side functor J supports the bracket [f g] on jointly
epic legs; the right-cancellative unital magmas are its home ground.
"""

import itertools

from .errors import (BadInput, BoundTooLarge, InvalidDiagram,
                     RightCancellationViolated, TriangleLawViolated,
                     UnsupportedCoproduct)
from .structures import (ABELIAN_GROUP, GROUP, KINDS, POINTED_SET,
                         UNITAL_MAGMA, FiniteStructure, Morphism, Verdict,
                         compose, coproduct, identity, jointly_epic,
                         morphism_space, product, zero_morphism)
from .corpus import enumerate_structures, groups
from .points import SplitEpi, PointMorphism, all_split_epis, \
    point_morphism_of_maps
from .graphs import ReflexiveGraph
from .group_actions import GroupAction, all_actions, conjugation_G, \
    semidirect_product


class _Outcome:
    """A labelled sentinel returned where a morphism may be missing."""

    def __init__(self, label):
        self.label = label

    def __repr__(self):
        return self.label


ABSENT = _Outcome("Absent")
NOT_ADMISSIBLE = _Outcome("NotAdmissible")
NOT_UNIQUE = _Outcome("NotUnique")


# ---------------------------------------------------------------------------
# finite categories and functor descriptors


class FiniteCategory:
    """Objects plus enumerable hom-sets with explicit composition."""

    def __init__(self, name, objects, hom, identity_fn, compose_fn, mor_eq,
                 ob_key):
        self.name = name
        self.objects = list(objects)
        self._hom = hom
        self.identity = identity_fn
        self.compose = compose_fn
        self.mor_eq = mor_eq
        self.ob_key = ob_key
        self._cache = {}

    def hom(self, A, B):
        key = (self.ob_key(A), self.ob_key(B))
        if key not in self._cache:
            self._cache[key] = list(self._hom(A, B))
        return self._cache[key]

    def all_morphisms(self):
        for A in self.objects:
            for B in self.objects:
                for f in self.hom(A, B):
                    yield A, B, f

    def __repr__(self):
        return "FiniteCategory(%s, %d objects)" % (self.name,
                                                   len(self.objects))


class Functor:
    """An object map and a morphism map between finite categories."""

    def __init__(self, name, ob, mor):
        self.name = name
        self.ob = ob
        self.mor = mor

    def __repr__(self):
        return "Functor(%s)" % self.name


class HalfReflection:
    """(I, G, pi) with IG = 1, I(pi) = 1, pi natural and idempotent."""

    def __init__(self, A, B, I, G, pi):
        self.A, self.B = A, B
        self.I, self.G = I, G
        self.pi = pi


class AdjointData:
    """A left adjoint F of G with unit eta and counit epsilon."""

    def __init__(self, F, eta, epsilon):
        self.F = F
        self.eta = eta
        self.epsilon = epsilon


class CooperativePair:
    """(f, g) out of JA and IA with the bracket [f g] when it exists."""

    def __init__(self, f, g, bracket=None):
        self.f, self.g = f, g
        self.bracket = bracket


class Registration:
    """A named half-reflection instance over explicit corpora."""

    def __init__(self, name, kind, hr, adj=None, J=None):
        self.name, self.kind = name, kind
        self.hr, self.adj, self.J = hr, adj, J
        self.A, self.B = hr.A, hr.B
        self.I, self.G, self.pi = hr.I, hr.G, hr.pi
        self.notes = {}

    def T(self, A0):
        return canonical_to_points(self.hr, self.adj, A0)

    def __repr__(self):
        return "Registration(%s)" % self.name


def ambient_category(kind, max_size=None, corpus=None):
    """The structures of one kind with every morphism between them."""
    if corpus is None:
        corpus = enumerate_structures(kind, max_size)
    return FiniteCategory(
        "%s(<=%s)" % (kind, max_size), corpus, morphism_space, identity,
        compose,
        lambda f, g: (f.source == g.source and f.target == g.target
                      and f.map == g.map),
        lambda X: X.key())


def _require_registered_kind(kind):
    if kind not in KINDS:
        raise BadInput("kind %r has no zero morphisms; registrations need "
                       "a basepointed kind" % (kind,))


_SQUARE_CACHE = {}


def _square(B0):
    """product(B0, B0), cached; registrations build it constantly."""
    key = B0.key()
    if key not in _SQUARE_CACHE:
        _SQUARE_CACHE[key] = product(B0, B0)
    return _SQUARE_CACHE[key]


_DIAGONAL_CACHE = {}


def _diagonal_point(B0):
    """The split epi (B x B, proj2) with the diagonal section."""
    key = B0.key()
    if key not in _DIAGONAL_CACHE:
        pr = _square(B0)
        delta = pr.pair(identity(B0), identity(B0))
        _DIAGONAL_CACHE[key] = SplitEpi(pr.structure, B0, pr.proj2, delta)
    return _DIAGONAL_CACHE[key]


# ---------------------------------------------------------------------------
# registration: pairs (X, B)


class PairMorphism:
    """A componentwise morphism (f, g): (X, B) -> (X', B')."""

    def __init__(self, source, target, f, g):
        self.source, self.target = source, target
        self.f, self.g = f, g

    def key(self):
        return (self.source[0].key(), self.source[1].key(),
                self.target[0].key(), self.target[1].key(),
                self.f.map, self.g.map)

    def __repr__(self):
        return "PairMorphism(%r, %r)" % (self.f.map, self.g.map)


def _pair_category(corpus):
    objects = [(X, B) for X in corpus for B in corpus]

    def hom(P, Q):
        return [PairMorphism(P, Q, f, g)
                for f in morphism_space(P[0], Q[0])
                for g in morphism_space(P[1], Q[1])]

    return FiniteCategory(
        "pairs", objects, hom,
        lambda P: PairMorphism(P, P, identity(P[0]), identity(P[1])),
        lambda m2, m1: PairMorphism(m1.source, m2.target,
                                    compose(m2.f, m1.f),
                                    compose(m2.g, m1.g)),
        lambda m, n: m.key() == n.key(),
        lambda P: (P[0].key(), P[1].key()))


def pairs_registration(kind, max_size=3, corpus=None):
    """Pairs (X, B) over B with I = base, G(B) = (B, B), pi = (0, 1)."""
    _require_registered_kind(kind)
    if corpus is None:
        corpus = enumerate_structures(kind, max_size)
    Acat = _pair_category(corpus)
    Bcat = ambient_category(kind, max_size, corpus)

    I = Functor("base", lambda P: P[1], lambda m: m.g)
    G = Functor("doubling", lambda B0: (B0, B0),
                lambda g: PairMorphism((g.source, g.source),
                                       (g.target, g.target), g, g))

    def pi(P):
        X, B0 = P
        return PairMorphism(P, (B0, B0), zero_morphism(X, B0), identity(B0))

    hr = HalfReflection(Acat, Bcat, I, G, pi)
    adj = None
    if kind in (POINTED_SET, ABELIAN_GROUP):
        def F_ob(P):
            return coproduct(P[0], P[1]).structure

        def F_mor(m):
            src = coproduct(m.source[0], m.source[1])
            tgt = coproduct(m.target[0], m.target[1])
            return src.copair(compose(tgt.inj1, m.f), compose(tgt.inj2, m.g))

        def eta(P):
            co = coproduct(P[0], P[1])
            return PairMorphism(P, (co.structure, co.structure),
                                co.inj1, co.inj2)

        def epsilon(B0):
            co = coproduct(B0, B0)
            return co.copair(identity(B0), identity(B0))

        adj = AdjointData(Functor("wedge", F_ob, F_mor), eta, epsilon)
    return Registration("pairs-%s" % kind, kind, hr, adj)


# ---------------------------------------------------------------------------
# registration: split epis


def _point_category(name, points):
    def hom(p, q):
        out = []
        for top in morphism_space(p.A, q.A):
            pm = point_morphism_of_maps(p, q, top)
            if pm is not None:
                out.append(pm)
        return out

    return FiniteCategory(
        name, points, hom,
        lambda p: PointMorphism(p, p, identity(p.A), identity(p.B),
                                check=False),
        lambda m2, m1: PointMorphism(m1.source, m2.target,
                                     compose(m2.top, m1.top),
                                     compose(m2.bottom, m1.bottom),
                                     check=False),
        lambda m, n: m.key() == n.key(),
        lambda p: p.key())


def _point_functors(Acat, Bcat):
    I = Functor("base", lambda p: p.B, lambda m: m.bottom)

    def G_ob(B0):
        return _diagonal_point(B0)

    def G_mor(g):
        src = _square(g.source)
        tgt = _square(g.target)
        top = tgt.pair(compose(g, src.proj1), compose(g, src.proj2))
        return PointMorphism(G_ob(g.source), G_ob(g.target), top, g,
                             check=False)

    G = Functor("diagonal-point", G_ob, G_mor)

    def pi(p):
        pr = _square(p.B)
        top = pr.pair(p.alpha, p.alpha)
        return PointMorphism(p, G_ob(p.B), top, identity(p.B), check=False)

    def F_ob(p):
        return p.A

    F = Functor("total", F_ob, lambda m: m.top)

    def eta(p):
        pr = _square(p.A)
        top = pr.pair(identity(p.A), compose(p.beta, p.alpha))
        return PointMorphism(p, G_ob(p.A), top, p.beta, check=False)

    def epsilon(B0):
        return _square(B0).proj1

    return I, G, pi, AdjointData(F, eta, epsilon)


def _kernel_J():
    return Functor("kernel", lambda p: p.K, lambda m: m.restricted)


def points_registration(kind, max_size=3, corpus=None):
    """Split epis over B with I = base, G(B) the diagonal point."""
    _require_registered_kind(kind)
    if corpus is None:
        corpus = enumerate_structures(kind, max_size)
    Acat = _point_category("points-%s" % kind, all_split_epis(corpus))
    Bcat = ambient_category(kind, max_size, corpus)
    I, G, pi, adj = _point_functors(Acat, Bcat)
    return Registration("points-%s" % kind, kind,
                        HalfReflection(Acat, Bcat, I, G, pi), adj)


def with_kernel_J(reg):
    """Attach the kernel functor J and record its condition verdict."""
    reg.J = _kernel_J()
    reg.notes["j-verdict"] = verify_J_conditions(reg)
    return reg


# ---------------------------------------------------------------------------
# registration: group actions


class ActionMorphism:
    """An equivariant pair (fX, fB) between group actions."""

    def __init__(self, source, target, fX, fB, check=True):
        self.source, self.target = source, target
        self.fX, self.fB = fX, fB
        if check and _equivariance_failure(source, target, fX, fB):
            raise InvalidDiagram("equivariance square does not commute")

    def key(self):
        return (self.source.key(), self.target.key(), self.fX.map,
                self.fB.map)

    def __repr__(self):
        return "ActionMorphism(%r, %r)" % (self.fX.map, self.fB.map)


def _equivariance_failure(a, c, fX, fB):
    for b in range(a.B.order):
        for x in range(a.X.order):
            if fX.map[a.act[b][x]] != c.act[fB.map[b]][fX.map[x]]:
                return (b, x)
    return None


def _action_category(actions):
    def hom(a, c):
        out = []
        for fX in morphism_space(a.X, c.X):
            for fB in morphism_space(a.B, c.B):
                if _equivariance_failure(a, c, fX, fB) is None:
                    out.append(ActionMorphism(a, c, fX, fB, check=False))
        return out

    return FiniteCategory(
        "actions", actions, hom,
        lambda a: ActionMorphism(a, a, identity(a.X), identity(a.B),
                                 check=False),
        lambda m2, m1: ActionMorphism(m1.source, m2.target,
                                      compose(m2.fX, m1.fX),
                                      compose(m2.fB, m1.fB), check=False),
        lambda m, n: m.key() == n.key(),
        lambda a: a.key())


def actions_registration(max_order=6, corpus=None):
    """Group actions with I = acting group, G = conjugation, pi = (0, 1)."""
    if corpus is None:
        gs = groups(max_order)
        corpus = [a for X in gs for B in gs
                  if X.order * B.order <= max_order
                  for a in all_actions(X, B)]
    group_corpus = groups(max_order)
    Acat = _action_category(corpus)
    Bcat = ambient_category(GROUP, max_order, group_corpus)

    I = Functor("base", lambda a: a.B, lambda m: m.fB)
    G = Functor("conjugation", conjugation_G,
                lambda g: ActionMorphism(conjugation_G(g.source),
                                         conjugation_G(g.target), g, g,
                                         check=False))

    def pi(a):
        return ActionMorphism(a, conjugation_G(a.B),
                              zero_morphism(a.X, a.B), identity(a.B),
                              check=False)

    def F_ob(a):
        return semidirect_product(a).A

    def F_mor(m):
        src, tgt = F_ob(m.source), F_ob(m.target)
        nB, mB = m.source.B.order, m.target.B.order
        vals = tuple(m.fX.map[i // nB] * mB + m.fB.map[i % nB]
                     for i in range(src.order))
        return Morphism(src, tgt, vals, check=False)

    F = Functor("semidirect", F_ob, F_mor)

    def eta(a):
        p = semidirect_product(a)
        return ActionMorphism(a, conjugation_G(p.A), p.inj1, p.beta,
                              check=False)

    def epsilon(B0):
        FG = F_ob(conjugation_G(B0))
        n = B0.order
        vals = tuple(B0.op(i // n, i % n) for i in range(FG.order))
        return Morphism(FG, B0, vals, check=False)

    hr = HalfReflection(Acat, Bcat, I, G, pi)
    return Registration("actions", GROUP, hr, AdjointData(F, eta, epsilon))


# ---------------------------------------------------------------------------
# registration: jointly epic split epis of right-cancellative magmas


def _require_right_cancellative(B0):
    if B0.table is None:
        raise RightCancellationViolated("a multiplication table is required")
    t, n = B0.table, B0.order
    for x in range(n):
        if t[0][x] != x or t[x][0] != x:
            raise RightCancellationViolated("0 is not a two-sided identity")
    for y in range(n):
        if len({t[x][y] for x in range(n)}) != n:
            raise RightCancellationViolated(
                "column %d is not a permutation" % y)


def magma_subcategory_A(corpus):
    """Split epis of right-cancellative unital magmas with jointly epic
    kernel and section, carrying I, F, J and the diagonal-point G."""
    for B0 in corpus:
        _require_right_cancellative(B0)
    points = [p for p in all_split_epis(corpus)
              if jointly_epic(p.k, p.beta)]
    Acat = _point_category("magma-A", points)
    Bcat = ambient_category(UNITAL_MAGMA, None, corpus)
    I, G, pi, adj = _point_functors(Acat, Bcat)
    reg = Registration("magma-A", UNITAL_MAGMA,
                       HalfReflection(Acat, Bcat, I, G, pi), adj)
    reg.J = _kernel_J()
    reg.notes["excluded"] = len(list(all_split_epis(corpus))) - len(points)
    reg.notes["j-verdict"] = verify_J_conditions(reg)
    return reg


# ---------------------------------------------------------------------------
# the half-reflection and adjunction law scans


def check_halfreflection(hr, objects=None):
    """IG = 1, I(pi) = 1, pi natural, pi_GIA . pi_A = pi_A; Verdict."""
    v = Verdict()
    Acat, Bcat = hr.A, hr.B
    obs = Acat.objects if objects is None else objects

    ok, wit = True, None
    for B0 in Bcat.objects:
        if Bcat.ob_key(hr.I.ob(hr.G.ob(B0))) != Bcat.ob_key(B0):
            ok, wit = False, B0
            break
    v.record("IG-objects", ok, wit)

    ok, wit = True, None
    for B0, B1, g in Bcat.all_morphisms():
        if not Bcat.mor_eq(hr.I.mor(hr.G.mor(g)), g):
            ok, wit = False, (B0, B1, g)
            break
    v.record("IG-morphisms", ok, wit)

    ok, wit = True, None
    for A0 in obs:
        IA = hr.I.ob(A0)
        if not Bcat.mor_eq(hr.I.mor(hr.pi(A0)), Bcat.identity(IA)):
            ok, wit = False, A0
            break
    v.record("pi-base-identity", ok, wit)

    ok, wit = True, None
    for A0, A1, f in Acat.all_morphisms():
        lhs = Acat.compose(hr.pi(A1), f)
        rhs = Acat.compose(hr.G.mor(hr.I.mor(f)), hr.pi(A0))
        if not Acat.mor_eq(lhs, rhs):
            ok, wit = False, (A0, A1, f)
            break
    v.record("pi-naturality", ok, wit)

    ok, wit = True, None
    for A0 in obs:
        GIA = hr.G.ob(hr.I.ob(A0))
        lhs = Acat.compose(hr.pi(GIA), hr.pi(A0))
        if not Acat.mor_eq(lhs, hr.pi(A0)):
            ok, wit = False, A0
            break
    v.record("pi-idempotent", ok, wit)
    return v


def check_adjunction(hr, adj):
    """Triangle identities and unit/counit naturality; Verdict."""
    v = Verdict()
    Acat, Bcat = hr.A, hr.B
    F, G = adj.F, hr.G

    ok, wit = True, None
    for A0 in Acat.objects:
        FA = F.ob(A0)
        comp = compose(adj.epsilon(FA), F.mor(adj.eta(A0)))
        if not comp.is_identity():
            ok, wit = False, A0
            break
    v.record("triangle-total", ok, wit)

    ok, wit = True, None
    for B0 in Bcat.objects:
        GB = G.ob(B0)
        comp = Acat.compose(G.mor(adj.epsilon(B0)), adj.eta(GB))
        if not Acat.mor_eq(comp, Acat.identity(GB)):
            ok, wit = False, B0
            break
    v.record("triangle-base", ok, wit)

    ok, wit = True, None
    for A0, A1, f in Acat.all_morphisms():
        lhs = Acat.compose(adj.eta(A1), f)
        rhs = Acat.compose(G.mor(F.mor(f)), adj.eta(A0))
        if not Acat.mor_eq(lhs, rhs):
            ok, wit = False, (A0, A1, f)
            break
    v.record("eta-naturality", ok, wit)

    ok, wit = True, None
    for B0, B1, g in Bcat.all_morphisms():
        lhs = compose(g, adj.epsilon(B0))
        rhs = compose(adj.epsilon(B1), F.mor(G.mor(g)))
        if lhs.map != rhs.map:
            ok, wit = False, (B0, B1, g)
            break
    v.record("epsilon-naturality", ok, wit)
    return v


def canonical_to_points(hr, adj, A0):
    """The split epi (FA, epsilon_IA . F(pi_A), I(eta_A))."""
    if adj is None:
        raise BadInput("a left adjoint is required to land in split epis")
    IA = hr.I.ob(A0)
    FA = adj.F.ob(A0)
    proj = compose(adj.epsilon(IA), adj.F.mor(hr.pi(A0)))
    sect = hr.I.mor(adj.eta(A0))
    if not compose(proj, sect).is_identity():
        raise TriangleLawViolated(
            "projection and section do not compose to the identity")
    return SplitEpi(FA, IA, proj, sect)


# ---------------------------------------------------------------------------
# the two-slot endofunctor (B x B, proj2, diagonal, proj1)


class Theorem1Data:
    """B x B with pi = proj2, delta = the diagonal, epsilon = proj1."""

    def __init__(self, kind):
        self.kind = kind

    def g1(self, B0):
        return _square(B0).structure

    def g1_mor(self, g):
        src = _square(g.source)
        tgt = _square(g.target)
        return tgt.pair(compose(g, src.proj1), compose(g, src.proj2))

    def pi(self, B0):
        return _square(B0).proj2

    def delta(self, B0):
        pr = _square(B0)
        return pr.pair(identity(B0), identity(B0))

    def epsilon(self, B0):
        return _square(B0).proj1

    def unique_lift(self, p, f):
        """The pairing of f with f.beta.alpha."""
        pr = _square(f.target)
        return pr.pair(f, compose(f, compose(p.beta, p.alpha)))

    def lift_candidates(self, p, f):
        """Every f' with epsilon.f' = f and delta.pi.f' = f'.beta.alpha,
        scanning the component pairs of all morphisms into B x B."""
        B0 = f.target
        pr = _square(B0)
        ba = compose(p.beta, p.alpha)
        out = []
        for u in morphism_space(p.A, B0):
            if u.map != f.map:
                continue
            for vm in morphism_space(p.A, B0):
                cand = pr.pair(u, vm)
                lhs = compose(compose(self.delta(B0), pr.proj2), cand)
                rhs = compose(cand, ba)
                if lhs.map == rhs.map:
                    out.append(cand)
        return out

    def lift_census(self, p, B0):
        """(number of f, True when every f has exactly one lift, witness).

        The candidate scan is organised per component: the first slot must
        equal f and the second must solve v = f.beta.alpha = v.beta.alpha,
        so counting map-tuple matches over Hom(A, B) is exhaustive.
        """
        space = [m.map for m in morphism_space(p.A, B0)]
        seen = {}
        for mp in space:
            seen[mp] = seen.get(mp, 0) + 1
        ba = compose(p.beta, p.alpha).map
        for f in space:
            want = tuple(f[ba[x]] for x in range(p.A.order))
            count = seen.get(want, 0)
            if tuple(want[ba[x]] for x in range(p.A.order)) != want:
                count = 0
            if count != 1:
                return len(space), False, (f, count)
        return len(space), True, None


def theorem1_data(kind):
    """The two-slot data for a kind, or ABSENT without product tables."""
    if kind not in KINDS:
        return ABSENT
    return Theorem1Data(kind)


def verify_theorem1(kind, max_size, targets=None):
    """Exactly one lift per (split epi, f) over the corpus; Verdict."""
    data = theorem1_data(kind)
    if data is ABSENT:
        raise BadInput("kind %r has no product tables" % (kind,))
    corpus = enumerate_structures(kind, max_size)
    if targets is None:
        targets = corpus
    v = Verdict()
    ok, wit, checked = True, None, 0
    for p in all_split_epis(corpus):
        for B0 in targets:
            n, unique, bad = data.lift_census(p, B0)
            checked += n
            if not unique:
                ok, wit = False, (p, B0, bad)
                break
        if not ok:
            break
    v.record("lift-unique", ok, wit)

    ok, wit = True, None
    for B0 in targets:
        pr = _square(B0)
        pt = SplitEpi(pr.structure, B0, pr.proj2, data.delta(B0))
        left = tuple(b * B0.order for b in range(B0.order))
        if pt.K != B0 or pt.k.map != left:
            ok, wit = False, B0
            break
    v.record("pi-kernel-is-left-slice", ok, wit)
    v.checked = checked
    return v


# ---------------------------------------------------------------------------
# the derived categories A1 and A2


def build_A1_A2(reg):
    """((A, u) with I(u) = 1; systems with ab = 1; the starred subclass)."""
    Acat, Bcat = reg.A, reg.B
    a1 = []
    for A0 in Acat.objects:
        GIA = reg.G.ob(reg.I.ob(A0))
        one = Bcat.identity(reg.I.ob(A0))
        for u in Acat.hom(A0, GIA):
            if Bcat.mor_eq(reg.I.mor(u), one):
                a1.append((A0, u))
    a2 = []
    for E, vm in a1:
        for A0, u in a1:
            for a in Acat.hom(E, A0):
                lhs = Acat.compose(u, a)
                rhs = Acat.compose(reg.G.mor(reg.I.mor(a)), vm)
                if not Acat.mor_eq(lhs, rhs):
                    continue
                for b in Acat.hom(A0, E):
                    if Acat.mor_eq(Acat.compose(a, b), Acat.identity(A0)):
                        a2.append((E, vm, a, b, A0, u))
    a2star = [item for item in a2 if _a2star_conditions(reg, item).ok]
    return a1, a2, a2star


def _a2star_conditions(reg, item):
    E, vm, a, b, A0, u = item
    Acat, Bcat, adj = reg.A, reg.B, reg.adj
    v = Verdict()
    IE, FA = reg.I.ob(E), adj.F.ob(A0)
    v.record("base-is-total", Bcat.ob_key(IE) == Bcat.ob_key(FA))
    if not v.ok:
        return v
    IA = reg.I.ob(A0)
    v.record("a-matches-u",
             reg.I.mor(a).map == compose(adj.epsilon(IA),
                                         adj.F.mor(u)).map)
    v.record("v-section", Acat.mor_eq(Acat.compose(vm, b), adj.eta(A0)))
    proj = compose(adj.epsilon(IA), adj.F.mor(reg.pi(A0)))
    gproj = reg.G.mor(proj)
    lhs = Acat.compose(gproj, reg.pi(E))
    rhs = Acat.compose(gproj, vm)
    v.record("projected-v", Acat.mor_eq(lhs, rhs))
    return v


# ---------------------------------------------------------------------------
# the seven-equation calculus on two-level diagrams


class RestrictedPrecat:
    """The diagram (FE, IE = FA, IA) with chosen c and m."""

    def __init__(self, reg, E, A0, a, b, c, m):
        self.reg = reg
        self.E, self.A0 = E, A0
        self.a, self.b = a, b
        self.c, self.m = c, m
        adj = reg.adj
        self.IA = reg.I.ob(A0)
        self.IE = reg.I.ob(E)
        self.FA = adj.F.ob(A0)
        self.FE = adj.F.ob(E)
        self.pi_A = compose(adj.epsilon(self.IA), adj.F.mor(reg.pi(A0)))
        self.pi_E = compose(adj.epsilon(self.IE), adj.F.mor(reg.pi(E)))
        self.Ieta_A = reg.I.mor(adj.eta(A0))
        self.Ieta_E = reg.I.mor(adj.eta(E))
        self.Fa = adj.F.mor(a)
        self.Fb = adj.F.mor(b)
        self.Ia = reg.I.mor(a)
        self.Ib = reg.I.mor(b)


def restricted_precat_from_A2star(reg, item):
    """Derive (c, m) from (u, v) through the adjunction."""
    E, vm, a, b, A0, u = item
    adj = reg.adj
    c = compose(adj.epsilon(reg.I.ob(A0)), adj.F.mor(u))
    m = compose(adj.epsilon(reg.I.ob(E)), adj.F.mor(vm))
    return RestrictedPrecat(reg, E, A0, a, b, c, m)


def check_c1_c7(rp):
    """The seven displayed equations plus the dropped-law verdicts."""
    v = Verdict()
    c1 = compose(rp.c, rp.Ieta_A).is_identity()
    v.record("c1-retraction", c1)
    c2 = rp.Ia.map == rp.c.map
    v.record("c2-base-of-a", c2)
    c3 = rp.Ib.map == rp.Ieta_A.map
    v.record("c3-base-of-b", c3)
    c4 = compose(rp.m, rp.Ieta_E).is_identity()
    v.record("c4-right-unit", c4)
    c5 = compose(rp.m, rp.Fb).is_identity()
    v.record("c5-left-unit", c5)
    c6 = compose(rp.c, rp.m).map == compose(rp.c, rp.Fa).map
    v.record("c6-cod-of-m", c6)
    c7 = compose(rp.pi_A, rp.m).map == compose(rp.pi_A, rp.pi_E).map
    v.record("c7-dom-of-m", c7)
    v.record("multiplicative-graph", c1 and c2 and c3 and c4 and c5)
    v.record("c1-from-c2-c3", c1 or not (c2 and c3))
    return v


def translation_table(rp):
    """Each displayed equation evaluated on both sides of the adjunction.

    Returns (label, composite-side verdict, transposed-side verdict) rows;
    u and v are recovered from c and m through the unit.
    """
    reg, adj = rp.reg, rp.reg.adj
    Acat, Bcat = reg.A, reg.B
    u = Acat.compose(reg.G.mor(rp.c), adj.eta(rp.A0))
    vm = Acat.compose(reg.G.mor(rp.m), adj.eta(rp.E))
    one_IA = Bcat.identity(rp.IA)
    one_IE = Bcat.identity(rp.IE)
    rows = [
        ("c1", compose(rp.c, rp.Ieta_A).map == one_IA.map,
         Bcat.mor_eq(reg.I.mor(u), one_IA)),
        ("c4", compose(rp.m, rp.Ieta_E).map == one_IE.map,
         Bcat.mor_eq(reg.I.mor(vm), one_IE)),
        ("c6", compose(rp.c, rp.m).map == compose(rp.c, rp.Fa).map,
         Acat.mor_eq(Acat.compose(u, rp.a),
                     Acat.compose(reg.G.mor(rp.Ia), vm))),
        ("c2", rp.Ia.map == rp.c.map,
         rp.Ia.map == compose(adj.epsilon(rp.IA), adj.F.mor(u)).map),
        ("c3c5", rp.Ib.map == rp.Ieta_A.map
         and compose(rp.m, rp.Fb).is_identity(),
         Acat.mor_eq(Acat.compose(vm, rp.b), adj.eta(rp.A0))),
        ("c7", compose(rp.pi_A, rp.m).map ==
         compose(rp.pi_A, rp.pi_E).map,
         Acat.mor_eq(Acat.compose(reg.G.mor(rp.pi_A), reg.pi(rp.E)),
                     Acat.compose(reg.G.mor(rp.pi_A), vm))),
    ]
    return rows


def translation_consistent(rows):
    return all(left == right for _, left, right in rows)


def enumerate_c1_c7(reg):
    """All (E, A, a, b, c, m) diagrams passing the seven equations."""
    Acat, Bcat, adj = reg.A, reg.B, reg.adj
    out = []
    for E in Acat.objects:
        IE = reg.I.ob(E)
        for A0 in Acat.objects:
            if Bcat.ob_key(IE) != Bcat.ob_key(adj.F.ob(A0)):
                continue
            for a in Acat.hom(E, A0):
                for b in Acat.hom(A0, E):
                    if not Acat.mor_eq(Acat.compose(a, b),
                                       Acat.identity(A0)):
                        continue
                    for c in morphism_space(adj.F.ob(A0), reg.I.ob(A0)):
                        for m in morphism_space(adj.F.ob(E), IE):
                            rp = RestrictedPrecat(reg, E, A0, a, b, c, m)
                            if check_c1_c7(rp).ok:
                                out.append(rp)
    return out


def rg_objects(reg):
    """All reflexive graphs on the registered class of split epis."""
    out = []
    for A0 in reg.A.objects:
        pt = reg.T(A0)
        for c in morphism_space(pt.A, pt.B):
            if compose(c, pt.beta).is_identity():
                out.append((A0, ReflexiveGraph(pt.B, pt.A, pt.alpha, c,
                                               pt.beta)))
    return out


def u_of_c(reg, A0, c):
    """Transpose a retraction c: FA -> IA to u: A -> GIA."""
    return reg.A.compose(reg.G.mor(c), reg.adj.eta(A0))


def c_of_u(reg, A0, u):
    """Transpose u: A -> GIA back to c: FA -> IA."""
    return compose(reg.adj.epsilon(reg.I.ob(A0)), reg.adj.F.mor(u))


# ---------------------------------------------------------------------------
# brackets over jointly epic legs


def cooperative_bracket(reg, A0, f, g):
    """The unique alpha: FA -> T with alpha.J(eta) = f, alpha.I(eta) = g.

    Returns NOT_ADMISSIBLE when no candidate exists and NOT_UNIQUE when
    joint epicness fails for the registration.
    """
    if reg.J is None or reg.adj is None:
        raise BadInput("a kernel-side functor J is required for brackets")
    if f.target != g.target:
        raise BadInput("bracket legs need a common target")
    eta = reg.adj.eta(A0)
    j_eta, i_eta = reg.J.mor(eta), reg.I.mor(eta)
    found = None
    for cand in morphism_space(reg.adj.F.ob(A0), f.target):
        if compose(cand, j_eta).map != f.map:
            continue
        if compose(cand, i_eta).map != g.map:
            continue
        if found is not None:
            return NOT_UNIQUE
        found = cand
    return found if found is not None else NOT_ADMISSIBLE


def verify_J_conditions(reg):
    """JG = 1, jointly epic legs, and the factorization law; Verdict."""
    v = Verdict()
    Acat, Bcat = reg.A, reg.B

    ok, wit = True, None
    for B0 in Bcat.objects:
        if reg.J.ob(reg.G.ob(B0)) != B0:
            ok, wit = False, B0
            break
    v.record("JG-objects", ok, wit)

    ok, wit = True, None
    for B0, B1, g in Bcat.all_morphisms():
        if reg.J.mor(reg.G.mor(g)).map != g.map:
            ok, wit = False, (B0, B1, g)
            break
    v.record("JG-morphisms", ok, wit)

    ok, wit = True, None
    for A0 in Acat.objects:
        eta = reg.adj.eta(A0)
        if not jointly_epic(reg.J.mor(eta), reg.I.mor(eta)):
            ok, wit = False, A0
            break
    v.record("jointly-epic-legs", ok, wit)

    ok, wit, scanned = True, None, 0
    for E in Acat.objects:
        IE = reg.I.ob(E)
        for A0 in Acat.objects:
            if Bcat.ob_key(IE) != Bcat.ob_key(reg.adj.F.ob(A0)):
                continue
            pi_A = compose(reg.adj.epsilon(reg.I.ob(A0)),
                           reg.adj.F.mor(reg.pi(A0)))
            pi_E = compose(reg.adj.epsilon(IE), reg.adj.F.mor(reg.pi(E)))
            for u in morphism_space(reg.J.ob(E), reg.adj.F.ob(A0)):
                br = cooperative_bracket(reg, E, u, identity(IE))
                if br is NOT_ADMISSIBLE:
                    continue
                if br is NOT_UNIQUE:
                    ok, wit = False, (E, A0, u, "not unique")
                    break
                if compose(pi_A, br).map != compose(pi_A, pi_E).map:
                    continue
                scanned += 1
                j_eta = reg.J.mor(reg.adj.eta(A0))
                inv = {a: x for x, a in enumerate(j_eta.map)}
                vals = []
                for x in range(reg.J.ob(E).order):
                    if u.map[x] not in inv:
                        vals = None
                        break
                    vals.append(inv[u.map[x]])
                if vals is None:
                    ok, wit = False, (E, A0, u, "no factorization")
                    break
                lift = Morphism(reg.J.ob(E), reg.J.ob(A0), vals,
                                check=False)
                if not lift.verdict().ok:
                    ok, wit = False, (E, A0, u, "lift not a morphism")
                    break
            if not ok:
                break
        if not ok:
            break
    v.record("factorization", ok, wit)
    v.scanned = scanned
    return v


# ---------------------------------------------------------------------------
# essentially-unique pi: enumeration with multiplicity


def enumerate_pi(reg, cap=200000):
    """All natural pi with I(pi) = 1 over the registered corpus.

    Depth-first over per-object candidates, pruning with every naturality
    square between already-assigned objects.  Returns the list of
    families, each a dict keyed by object key.
    """
    Acat, Bcat = reg.A, reg.B
    obs = Acat.objects
    cands = []
    for A0 in obs:
        GIA = reg.G.ob(reg.I.ob(A0))
        one = Bcat.identity(reg.I.ob(A0))
        cands.append([u for u in Acat.hom(A0, GIA)
                      if Bcat.mor_eq(reg.I.mor(u), one)])
    homs = {}
    for i, X in enumerate(obs):
        for j, Y in enumerate(obs):
            homs[(i, j)] = Acat.hom(X, Y)
    families, steps = [], [0]

    def natural_so_far(assign, i):
        for j in range(i + 1):
            for f in homs[(j, i)]:
                lhs = Acat.compose(assign[i], f)
                rhs = Acat.compose(reg.G.mor(reg.I.mor(f)), assign[j])
                if not Acat.mor_eq(lhs, rhs):
                    return False
            if j < i:
                for f in homs[(i, j)]:
                    lhs = Acat.compose(assign[j], f)
                    rhs = Acat.compose(reg.G.mor(reg.I.mor(f)), assign[i])
                    if not Acat.mor_eq(lhs, rhs):
                        return False
        return True

    def walk(i, assign):
        if i == len(obs):
            families.append({Acat.ob_key(obs[j]): assign[j]
                             for j in range(len(obs))})
            return
        for u in cands[i]:
            steps[0] += 1
            if steps[0] > cap:
                raise BoundTooLarge("pi enumeration exceeded %d steps" % cap)
            assign.append(u)
            if natural_so_far(assign, i):
                walk(i + 1, assign)
            assign.pop()

    walk(0, [])
    return families


# ---------------------------------------------------------------------------
# searching for a joint-epicness failure without right cancellation


def _unital_tables(n):
    cells = [(x, y) for x in range(1, n) for y in range(1, n)]
    for fill in itertools.product(range(n), repeat=len(cells)):
        table = [[0] * n for _ in range(n)]
        for x in range(n):
            table[0][x] = x
            table[x][0] = x
        for (x, y), val in zip(cells, fill):
            table[x][y] = val
        yield table


def _raw_product(B0):
    n = B0.order
    table = [[0] * (n * n) for _ in range(n * n)]
    for x1 in range(n):
        for b1 in range(n):
            for x2 in range(n):
                for b2 in range(n):
                    table[x1 * n + b1][x2 * n + b2] = \
                        B0.op(x1, x2) * n + B0.op(b1, b2)
    return FiniteStructure(UNITAL_MAGMA, n * n, table, check=False)


def search_joint_epic_failure(max_size=3):
    """A unital magma whose two-slot legs (x, 0) and (x, x) fail to be
    jointly epic, witnessed by two morphisms agreeing on both legs.

    Right cancellation makes the legs jointly epic, so every witness
    violates it.  Returns (B, T, phi, psi) or None.
    """
    for n in range(2, max_size + 1):
        tables = list(_unital_tables(n))
        magmas = [FiniteStructure(UNITAL_MAGMA, n, t, check=False)
                  for t in tables]
        for B0 in magmas:
            P = _raw_product(B0)
            left = tuple(b * n for b in range(n))
            diag = tuple(b * n + b for b in range(n))
            for T in magmas:
                seen = {}
                for phi in morphism_space(P, T):
                    key = (tuple(phi.map[i] for i in left),
                           tuple(phi.map[i] for i in diag))
                    if key in seen and seen[key].map != phi.map:
                        return B0, T, seen[key], phi
                    seen[key] = phi
    return None


def magma_legs_jointly_epic(B0):
    """Do the legs (x, 0) and (x, x) generate B x B?

    Worklist closure on index pairs, no product table materialized.
    """
    n = B0.order
    target = n * n
    seen = set()
    for b in range(n):
        seen.add((b, 0))
        seen.add((b, b))
    frontier = list(seen)
    while frontier and len(seen) < target:
        a = frontier.pop()
        for c in list(seen):
            for (x1, b1), (x2, b2) in ((a, c), (c, a)):
                p = (B0.op(x1, x2), B0.op(b1, b2))
                if p not in seen:
                    seen.add(p)
                    frontier.append(p)
    return len(seen) == target


def search_excluded_split_epi(max_size=4):
    """A split epi of right-cancellative unital magmas whose kernel and
    section fail to generate the total object.

    Scans every quotient-with-section of every magma up to the bound;
    right division places each element in one step from the kernel and
    the section image, so the expected result is (None, scanned).
    """
    from .corpus import unital_magmas
    from .structures import (_set_partitions, closure, homomorphisms,
                             quotient_by_partition)
    from .errors import InvalidStructure
    scanned = 0
    for A0 in unital_magmas(max_size):
        for part in _set_partitions(A0.order):
            try:
                Q, sigma = quotient_by_partition(A0, part)
            except InvalidStructure:
                continue
            fibers = [[a for a in range(A0.order) if sigma.map[a] == q]
                      for q in range(Q.order)]
            for choice in itertools.product(*fibers[1:]):
                bmap = (0,) + choice
                if any(bmap[Q.op(q, r)] != A0.op(bmap[q], bmap[r])
                       for q in range(Q.order) for r in range(Q.order)):
                    continue
                beta = Morphism(Q, A0, bmap, check=False)
                p = SplitEpi(A0, Q, sigma, beta, check=False)
                scanned += 1
                if closure(A0, set(p.k.map) | set(bmap)) != set(
                        range(A0.order)):
                    return p, scanned
    return None, scanned
