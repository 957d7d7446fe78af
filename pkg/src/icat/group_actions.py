"""Group actions by automorphisms, semidirect products and the
action/split-epi equivalence, precrossed and crossed modules, and chains
of actions with their five compatibility conditions."""

from .errors import (
    ChainConditionViolated,
    ConjugationEscapesKernel,
    InvalidAction,
    InvalidDiagram,
)
from .points import SplitEpi
from .structures import (
    GROUP,
    GROUP_KINDS,
    FiniteStructure,
    Morphism,
    Verdict,
    automorphisms,
    compose,
    homomorphisms,
    is_zero,
    morphism_space,
    jointly_epic,
)
from .points import verify_kernel


class GroupAction:
    """act[b][x]: a left action of B on X by automorphisms."""

    def __init__(self, X, B, act, check=True):
        self.X, self.B = X, B
        self.act = [list(row) for row in act]
        if check:
            v = self.validate()
            if not v.ok:
                raise InvalidAction("bad action: %r" % (v,))

    def validate(self):
        v = Verdict()
        nX, nB = self.X.order, self.B.order
        shape = (self.X.kind in GROUP_KINDS and self.B.kind in GROUP_KINDS
                 and len(self.act) == nB
                 and all(len(row) == nX for row in self.act)
                 and all(0 <= e < nX for row in self.act for e in row))
        v.record("shape", shape)
        if not shape:
            return v
        wit = next(((x,) for x in range(nX) if self.act[0][x] != x), None)
        v.record("unit", wit is None, wit)
        wit = next(
            ((b, b2, x) for b in range(nB) for b2 in range(nB)
             for x in range(nX)
             if self.act[b][self.act[b2][x]] !=
             self.act[self.B.op(b, b2)][x]),
            None)
        v.record("mixing", wit is None, wit)
        aut_wit = None
        for b in range(nB):
            row = self.act[b]
            if len(set(row)) != nX:
                aut_wit = (b, "not bijective")
                break
            bad = next(((x, y) for x in range(nX) for y in range(nX)
                        if row[self.X.op(x, y)] !=
                        self.X.op(row[x], row[y])), None)
            if bad:
                aut_wit = (b,) + bad
                break
        v.record("automorphism", aut_wit is None, aut_wit)
        return v

    def is_trivial(self):
        return all(row[x] == x for row in self.act for x in range(self.X.order))

    def key(self):
        return (self.X.key(), self.B.key(),
                tuple(tuple(row) for row in self.act))

    def __eq__(self, other):
        return isinstance(other, GroupAction) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def trivial_action(X, B):
    return GroupAction(X, B, [list(range(X.order))] * B.order, check=False)


def conjugation_G(B):
    """B acting on itself by act(b, x) = b x b^-1."""
    act = [[B.op(B.op(b, x), B.inverse(b)) for x in range(B.order)]
           for b in range(B.order)]
    return GroupAction(B, B, act, check=False)


def aut_group(X):
    """Aut(X) as a structure; returns (structure, list of automorphisms).

    Index 0 is the identity; the operation is composition (i * j acts by
    auts[i] after auts[j])."""
    auts = automorphisms(X)
    ident = next(i for i, a in enumerate(auts) if a.is_identity())
    auts = [auts[ident]] + auts[:ident] + auts[ident + 1:]
    index = {a.map: i for i, a in enumerate(auts)}
    n = len(auts)
    table = [[index[compose(auts[i], auts[j]).map] for j in range(n)]
             for i in range(n)]
    return FiniteStructure(GROUP, n, table, name="Aut",
                           check=False), auts


def all_actions(X, B):
    """Every action of B on X, via homomorphisms B -> Aut(X)."""
    A, auts = aut_group(X)
    out = []
    for f in homomorphisms(B, A):
        act = [auts[f.map[b]].map for b in range(B.order)]
        out.append(GroupAction(X, B, act, check=False))
    return out


# ---------------------------------------------------------------------------
# semidirect products and the T/S equivalence


def semidirect_product(a):
    """The split epi X x| B -> B with (x,b)(x',b') = (x act(b,x'), bb').

    Elements are numbered x*|B| + b; the section is b -> (0,b) and the
    kernel embeds as x -> (x,0)."""
    X, B, act = a.X, a.B, a.act
    nX, nB = X.order, B.order
    n = nX * nB
    table = [[0] * n for _ in range(n)]
    for x in range(nX):
        for b in range(nB):
            i = x * nB + b
            for x2 in range(nX):
                for b2 in range(nB):
                    table[i][x2 * nB + b2] = \
                        X.op(x, act[b][x2]) * nB + B.op(b, b2)
    A = FiniteStructure(GROUP, n, table, check=False)
    alpha = Morphism(A, B, tuple(i % nB for i in range(n)), check=False)
    beta = Morphism(B, A, tuple(range(nB)), check=False)
    p = SplitEpi(A, B, alpha, beta)
    p.inj1 = Morphism(X, A, tuple(x * nB for x in range(nX)), check=False)
    p.inj2 = beta
    p.action = a
    return p


def functor_T_act(a):
    return semidirect_product(a)


def functor_S_act(p):
    """The conjugation action of B on ker alpha pulled back through k."""
    K, k, A, B = p.K, p.k, p.A, p.B
    inv = {v: i for i, v in enumerate(k.map)}
    act = []
    for b in range(B.order):
        sb = p.beta.map[b]
        sb_inv = A.inverse(sb)
        row = []
        for x in range(K.order):
            v = A.op(A.op(sb, k.map[x]), sb_inv)
            if v not in inv:
                raise ConjugationEscapesKernel(
                    "conjugate of kernel element %d by %d" % (x, b))
            row.append(inv[v])
        act.append(row)
    return GroupAction(K, B, act)


def comparison_ts(p):
    """phi: X x| B -> A, (x,b) -> k(x) beta(b); returns (phi, is_iso)."""
    q = semidirect_product(functor_S_act(p))
    nB = p.B.order
    phi = Morphism(q.A, p.A,
                   tuple(p.A.op(p.k.map[i // nB], p.beta.map[i % nB])
                         for i in range(q.A.order)))
    ok = phi.is_bijective() and phi.verdict().ok and \
        compose(p.alpha, phi).map == q.alpha.map and \
        compose(phi, q.beta).map == p.beta.map
    return phi, ok


def check_semidirect_axioms(p, sources=None):
    """The three conditions singling out semidirect-product points:
    (k, beta) jointly epic; a unique retraction killing the kernel;
    k a kernel of that retraction."""
    v = Verdict()
    v.record("jointly-epic", jointly_epic(p.k, p.beta))
    rets = [f for f in morphism_space(p.A, p.B)
            if compose(f, p.beta).is_identity()
            and is_zero(compose(f, p.k))]
    v.record("zero-retraction-exists", len(rets) >= 1)
    v.record("zero-retraction-unique", len(rets) == 1,
             [f.map for f in rets[:2]] if len(rets) != 1 else None)
    if len(rets) >= 1:
        kv = verify_kernel(p.k, rets[0],
                           sources if sources is not None
                           else [p.K, p.B, p.A])
        v.record("kernel", kv.ok, kv.first_failure)
    return v


# ---------------------------------------------------------------------------
# morphisms out of a semidirect product


def equivariance_condition(a, f, g):
    """f(act(b,x)) = g(b) f(x) g(b)^-1 for all b, x."""
    C = f.target
    for b in range(a.B.order):
        gb = g.map[b]
        gbi = C.inverse(gb)
        for x in range(a.X.order):
            if f.map[a.act[b][x]] != C.op(C.op(gb, f.map[x]), gbi):
                return False, (b, x)
    return True, None


def induced_morphism(a, f, g):
    """The map (x,b) -> f(x) g(b) on X x| B, or None if not a morphism."""
    p = semidirect_product(a)
    C = f.target
    nB = a.B.order
    vals = tuple(C.op(f.map[i // nB], g.map[i % nB])
                 for i in range(p.A.order))
    m = Morphism(p.A, C, vals, check=False)
    return m if m.verdict().ok else None


# ---------------------------------------------------------------------------
# precrossed and crossed modules


class PreCrossedModule:
    """(h, action) with h equivariant for the action and conjugation."""

    def __init__(self, action, h, check=True):
        self.action, self.h = action, h
        if check:
            v = self.validate()
            if not v.ok:
                raise InvalidDiagram("bad precrossed module: %r" % (v,))

    @property
    def X(self):
        return self.action.X

    @property
    def B(self):
        return self.action.B

    def validate(self):
        v = Verdict()
        av = self.action.validate()
        v.record("action", av.ok, av.first_failure)
        v.record("h-morphism",
                 self.h.source == self.action.X
                 and self.h.target == self.action.B
                 and self.h.verdict().ok)
        if not v.ok:
            return v
        B, hmap, act = self.B, self.h.map, self.action.act
        wit = next(((b, x) for b in range(B.order)
                    for x in range(self.X.order)
                    if hmap[act[b][x]] !=
                    B.op(B.op(b, hmap[x]), B.inverse(b))), None)
        v.record("h-equivariance", wit is None, wit)
        return v


def peiffer_failure(pxm):
    """First (x, x2) with act(h(x), x2) != x x2 x^-1, else None."""
    X, act, hmap = pxm.X, pxm.action.act, pxm.h.map
    for x in range(X.order):
        xi = X.inverse(x)
        for x2 in range(X.order):
            if act[hmap[x]][x2] != X.op(X.op(x, x2), xi):
                return (x, x2)
    return None


def check_peiffer(pxm):
    return peiffer_failure(pxm) is None


def peiffer_action(h):
    """The action act(h(x), -) = conjugation by x, when well defined.

    Exists iff h(x) = h(x2) implies x and x2 conjugate every element the
    same way; raises InvalidAction otherwise."""
    X, B = h.source, h.target
    rows = {}
    for x in range(X.order):
        xi = X.inverse(x)
        row = tuple(X.op(X.op(x, y), xi) for y in range(X.order))
        b = h.map[x]
        if b in rows and rows[b] != row:
            raise InvalidAction("h does not induce a conjugation action")
        rows[b] = row
    if set(rows) != set(range(B.order)):
        raise InvalidAction("h is not surjective; action undetermined")
    return GroupAction(X, B, [list(rows[b]) for b in range(B.order)])


def rg_from_pxm(pxm):
    """The graph on X x| B with d the projection and c(x, b) = h(x) b."""
    from .graphs import ReflexiveGraph
    p = semidirect_product(pxm.action)
    nB = pxm.B.order
    c = Morphism(p.A, pxm.B,
                 tuple(pxm.B.op(pxm.h.map[i // nB], i % nB)
                       for i in range(p.A.order)))
    return ReflexiveGraph(pxm.B, p.A, p.alpha, c, p.beta)


def pxm_from_rg(g):
    """Extract (kernel action, h = c k) plus the comparison certificate."""
    p = g.point()
    act = functor_S_act(p)
    h = compose(g.c, p.k)
    phi, ok = comparison_ts(p)
    if not ok:
        raise ConjugationEscapesKernel("comparison (x,b) -> k(x)beta(b) "
                                       "is not an isomorphism")
    return PreCrossedModule(act, h), phi


# ---------------------------------------------------------------------------
# chains of actions


class ChainCompData:
    """Z --t--> X --h--> B with ht = 0 and actions xiX (B on X),
    xiZ (X on Z), xiF (X x| B on Z x| X)."""

    def __init__(self, Z, X, B, t, h, xiX, xiZ, xiF, check=True):
        self.Z, self.X, self.B = Z, X, B
        self.t, self.h = t, h
        self.xiX, self.xiZ, self.xiF = xiX, xiZ, xiF
        if check and not is_zero(compose(h, t)):
            raise ChainConditionViolated("h . t is not zero")


def validate_chaincomp(d):
    """The five compatibility conditions, elementwise with witnesses.

    F(X,B) and F(Z,X) are the semidirect products of xiX and xiZ; the
    connecting maps are w(z,x) = (t(z) x, 0), the projection p(z,x) = x,
    q(x,b) = h(x) b, and the sections s(x) = (0,x), r(b) = (0,b)."""
    v = Verdict()
    for name, a in (("xiX", d.xiX), ("xiZ", d.xiZ), ("xiF", d.xiF)):
        av = a.validate()
        v.record(name + "-action", av.ok, av.first_failure)
    v.record("chain", is_zero(compose(d.h, d.t)))
    if not v.ok:
        return v
    FX = semidirect_product(d.xiX)
    FZ = semidirect_product(d.xiZ)
    shapes = (d.xiX.X == d.X and d.xiX.B == d.B
              and d.xiZ.X == d.Z and d.xiZ.B == d.X
              and d.xiF.X == FZ.A and d.xiF.B == FX.A)
    v.record("levels", shapes)
    if not shapes:
        return v
    B, X = d.B, d.X
    nB, nX = B.order, X.order
    tmap, hmap = d.t.map, d.h.map
    wit = next(((b, x) for b in range(nB) for x in range(nX)
                if hmap[d.xiX.act[b][x]] !=
                B.op(B.op(b, hmap[x]), B.inverse(b))), None)
    v.record("h-equivariance", wit is None, wit)
    wit = next(((x, z) for x in range(nX) for z in range(d.Z.order)
                if tmap[d.xiZ.act[x][z]] !=
                X.op(X.op(x, tmap[z]), X.inverse(x))), None)
    v.record("t-equivariance", wit is None, wit)

    def w(i):
        z, x = i // nX, i % nX
        return X.op(tmap[z], x) * nB

    A = FX.A
    wit = None
    for g in range(A.order):
        gi = A.inverse(g)
        for y in range(FZ.A.order):
            if w(d.xiF.act[g][y]) != A.op(A.op(g, w(y)), gi):
                wit = (g, y)
                break
        if wit:
            break
    v.record("w-equivariance", wit is None, wit)

    def proj(y):
        return y % nX

    def q(g):
        return B.op(hmap[g // nB], g % nB)

    wit = next(((g, y) for g in range(A.order) for y in range(FZ.A.order)
                if proj(d.xiF.act[g][y]) !=
                d.xiX.act[q(g)][proj(y)]), None)
    v.record("projection-square", wit is None, wit)
    wit = next(((b, x) for b in range(nB) for x in range(nX)
                if d.xiF.act[b][x] != d.xiX.act[b][x]), None)
    v.record("section-square", wit is None, wit)
    return v


def normal_subgroups(G):
    """Element tuples of the normal subgroups of G, smallest first."""
    found = {(0,), tuple(range(G.order))}
    for seed in range(1, G.order):
        from .structures import closure
        sub = closure(G, {seed})
        if all(G.op(G.op(g, s), G.inverse(g)) in sub
               for g in range(G.order) for s in sub):
            found.add(tuple(sorted(sub)))
    grew = True
    while grew:
        grew = False
        for a in list(found):
            for b in list(found):
                from .structures import closure
                sub = closure(G, set(a) | set(b))
                if all(G.op(G.op(g, s), G.inverse(g)) in sub
                       for g in range(G.order) for s in sub):
                    key = tuple(sorted(sub))
                    if key not in found:
                        found.add(key)
                        grew = True
    return sorted(found, key=lambda t: (len(t), t))


def conjugation_chaincomp(G, elems):
    """The chain 1 -> X -> G for a normal subgroup X of G, with all
    actions by conjugation; the canonical member of the five-condition
    class with trivial kernel level."""
    from .structures import substructure, trivial, zero_morphism
    X, k = substructure(G, elems)
    idx = {v: i for i, v in enumerate(k.map)}
    Z = trivial(GROUP)
    t = zero_morphism(Z, X)
    xiX = GroupAction(X, G, [[idx[G.op(G.op(g, k.map[x]), G.inverse(g))]
                              for x in range(X.order)]
                             for g in range(G.order)])
    xiZ = GroupAction(Z, X, [[0] for _ in range(X.order)])
    FZ = semidirect_product(xiZ)
    FX = semidirect_product(xiX)
    nG = G.order
    act = []
    for i in range(FX.A.order):
        x0, g = k.map[i // nG], i % nG
        row = []
        for y in range(FZ.A.order):
            conj = G.op(G.op(g, k.map[y]), G.inverse(g))
            row.append(idx[G.op(G.op(x0, conj), G.inverse(x0))])
        act.append(row)
    xiF = GroupAction(FZ.A, FX.A, act)
    return ChainCompData(Z, X, G, t, k, xiX, xiZ, xiF)
