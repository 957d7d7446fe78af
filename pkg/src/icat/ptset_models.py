"""The two concrete pointed-set models: the star model over coproduct
projections and the fibered-action model over product projections, each
with the finite category it describes."""

from itertools import product as iproduct

from .errors import (
    BadInput,
    BoundTooLarge,
    KernelNotTrivial,
    LawViolation,
)
from .graphs import Precategory, ReflexiveGraph, include_V
from .structures import (
    POINTED_SET,
    Morphism,
    Verdict,
    pointed_set,
    product,
)


class StarPresentation:
    """A pointed map h: X -> B, the datum of the star model."""

    def __init__(self, h):
        if h.source.kind != POINTED_SET or h.target.kind != POINTED_SET:
            raise BadInput("star model lives in pointed sets")
        self.h = h
        self.X, self.B = h.source, h.target

    def kernel_elements(self):
        return [x for x in range(1, self.X.order) if self.h.map[x] == 0]

    @property
    def trivial_kernel(self):
        return not self.kernel_elements()


def star_precategory(s):
    """h viewed as a precategory on the wedge X + B (Y = X, a = u = b = 1)."""
    return include_V(s.h)


class ConcreteCategory:
    """Finite arrows-and-objects data with a partial composition table.

    comp maps (later, earlier) arrow pairs to arrows and must be defined
    exactly when dom(later) = cod(earlier).
    """

    def __init__(self, n_objects, dom, cod, ident, comp):
        self.n_objects = n_objects
        self.dom, self.cod = tuple(dom), tuple(cod)
        self.ident = tuple(ident)
        self.comp = dict(comp)

    @property
    def n_arrows(self):
        return len(self.dom)

    def validate(self):
        v = Verdict()
        n, ar = self.n_objects, self.n_arrows
        v.record("identity-endpoints",
                 all(self.dom[self.ident[b]] == b == self.cod[self.ident[b]]
                     for b in range(n)))
        defined_ok, wit = True, None
        for g in range(ar):
            for f in range(ar):
                should = self.dom[g] == self.cod[f]
                if ((g, f) in self.comp) != should:
                    defined_ok, wit = False, (g, f)
                    break
            if not defined_ok:
                break
        v.record("composition-domain", defined_ok, wit)
        if not defined_ok:
            return v
        v.record("composition-endpoints",
                 all(self.dom[h] == self.dom[f] and self.cod[h] == self.cod[g]
                     for (g, f), h in self.comp.items()))
        v.record("left-unit",
                 all(self.comp[(self.ident[self.cod[f]], f)] == f
                     for f in range(ar)))
        v.record("right-unit",
                 all(self.comp[(f, self.ident[self.dom[f]])] == f
                     for f in range(ar)))
        assoc_wit = None
        for (g, f) in self.comp:
            gf = self.comp[(g, f)]
            for h in range(ar):
                if self.dom[h] != self.cod[g]:
                    continue
                if self.comp[(h, gf)] != self.comp[(self.comp[(h, g)], f)]:
                    assoc_wit = (h, g, f)
                    break
            if assoc_wit:
                break
        v.record("associativity", assoc_wit is None, assoc_wit)
        return v

    def to_json(self):
        return {
            "objects": self.n_objects,
            "arrows": len(self.dom),
            "dom": list(self.dom),
            "cod": list(self.cod),
            "ident": list(self.ident),
            "comp": [[g, f, h] for (g, f), h in sorted(self.comp.items())],
        }


def star_category(s):
    """Objects B; non-identity arrows the x != 0, from 0 to h(x).

    Arrows 0..|B|-1 are the identities; arrow |B|-1+x is the element x.
    Only compositions forced by identities exist, which requires the
    kernel of h to be trivial.
    """
    bad = s.kernel_elements()
    if bad:
        raise KernelNotTrivial("h kills %d" % bad[0])
    nB, nX = s.B.order, s.X.order
    dom = list(range(nB)) + [0] * (nX - 1)
    cod = list(range(nB)) + [s.h.map[x] for x in range(1, nX)]
    ident = list(range(nB))
    comp = {}
    for f in range(len(dom)):
        comp[(ident[cod[f]], f)] = f
        comp[(f, ident[dom[f]])] = f
    return ConcreteCategory(nB, dom, cod, ident, comp)


# ---------------------------------------------------------------------------
# fibered actions over product projections


class FiberedAction:
    """xi[x][b] = x.b, optionally with (Y, alpha, beta) and
    mu[y][b][x] = y +_b x."""

    def __init__(self, X, B, xi, Y=None, alpha=None, beta=None, mu=None):
        self.X, self.B, self.xi = X, B, xi
        self.Y, self.alpha, self.beta, self.mu = Y, alpha, beta, mu
        nX, nB = X.order, B.order
        if len(xi) != nX or any(len(row) != nB for row in xi) or \
                any(not 0 <= v < nB for row in xi for v in row):
            raise BadInput("xi must be an X-by-B table of B values")
        if (Y is None) != (mu is None):
            raise BadInput("Y, alpha, beta, mu come together")
        if mu is not None:
            nY = Y.order
            if alpha is None or beta is None:
                raise BadInput("Y, alpha, beta, mu come together")
            if len(mu) != nY or any(len(plane) != nB for plane in mu) or \
                    any(len(row) != nX for plane in mu for row in plane) or \
                    any(not 0 <= v < nX
                        for plane in mu for row in plane for v in row):
                raise BadInput("mu must be a Y-by-B-by-X table of X values")

    @property
    def has_mu(self):
        return self.mu is not None


def validate_fibered_action(f):
    """Elementwise check of the displayed laws, each with a witness."""
    v = Verdict()
    nX, nB = f.X.order, f.B.order
    wit = next(((b,) for b in range(nB) if f.xi[0][b] != b), None)
    v.record("xi-unit", wit is None, wit)
    if not f.has_mu:
        return v
    nY = f.Y.order
    wit = next(((x,) for x in range(nX)
                if f.alpha.map[f.beta.map[x]] != x), None)
    v.record("section", wit is None, wit)
    wit = next(((b, x) for b in range(nB) for x in range(nX)
                if f.mu[0][b][x] != x), None)
    v.record("mu-left-unit", wit is None, wit)
    wit = next(((b, x) for b in range(nB) for x in range(nX)
                if f.mu[f.beta.map[x]][b][0] != x), None)
    v.record("mu-right-unit", wit is None, wit)
    wit = next(((y, x, b) for y in range(nY) for x in range(nX)
                for b in range(nB)
                if f.xi[f.mu[y][b][x]][b] !=
                f.xi[f.alpha.map[y]][f.xi[x][b]]), None)
    v.record("compatibility", wit is None, wit)
    return v


def product_graph(f):
    """The reflexive graph (X x B, pi2, xi, <0,1>)."""
    pr = product(f.X, f.B)
    nB = f.B.order
    c = Morphism(pr.structure, f.B,
                 tuple(f.xi[i // nB][i % nB] for i in range(pr.structure.order)))
    e = Morphism(f.B, pr.structure, tuple(range(nB)))
    return ReflexiveGraph(f.B, pr.structure, pr.proj2, c, e)


def product_precategory(f):
    """The precategory (Y x (X x B), pi2, alpha x xi, mu) of a full action."""
    if not f.has_mu:
        raise BadInput("a precategory needs the (Y, alpha, beta, mu) data")
    v = validate_fibered_action(f)
    if not v.ok:
        raise LawViolation("action laws fail: %r" % (v,))
    graph = product_graph(f)
    C1 = graph.C1
    nB, nX, nY = f.B.order, f.X.order, f.Y.order
    pr2 = product(f.Y, C1)
    C2 = pr2.structure
    n1 = C1.order

    def arrow(x, b):
        return x * nB + b

    p1 = Morphism(C2, C1, tuple(
        arrow(f.alpha.map[w // n1], f.xi[(w % n1) // nB][(w % n1) % nB])
        for w in range(C2.order)))
    e1 = Morphism(C1, C2, tuple(
        f.beta.map[w // nB] * n1 + arrow(0, w % nB) for w in range(n1)))
    m = Morphism(C2, C1, tuple(
        arrow(f.mu[w // n1][(w % n1) % nB][(w % n1) // nB], (w % n1) % nB)
        for w in range(C2.order)))
    e2 = Morphism(C1, C2, tuple(range(n1)))
    return Precategory(graph, C2, p1, pr2.proj2, e1, e2, m)


def mu_associative(f):
    """The displayed extra condition (x2 +_{x.b} x1) +_b x = x2 +_b (x1 +_b x);
    returns (bool, witness)."""
    nX, nB = f.X.order, f.B.order
    for x2 in range(nX):
        for x1 in range(nX):
            for x in range(nX):
                for b in range(nB):
                    left = f.mu[f.mu[x2][f.xi[x][b]][x1]][b][x]
                    right = f.mu[x2][b][f.mu[x1][b][x]]
                    if left != right:
                        return False, (x2, x1, x, b)
    return True, None


def product_model_category(f):
    """Objects B, arrows X x B with (x, b): b -> x.b and composition
    (x1, x.b) . (x, b) = (x1 +_b x, b); X = Y with alpha = beta = 1."""
    if not f.has_mu:
        raise BadInput("the category model needs mu")
    if f.Y != f.X or not f.alpha.is_identity() or not f.beta.is_identity():
        raise BadInput("the category model needs X = Y, alpha = beta = 1")
    v = validate_fibered_action(f)
    if not v.ok:
        raise LawViolation("action laws fail: %r" % (v,))
    nX, nB = f.X.order, f.B.order

    def arrow(x, b):
        return x * nB + b

    dom = tuple(b for x in range(nX) for b in range(nB))
    cod = tuple(f.xi[x][b] for x in range(nX) for b in range(nB))
    ident = tuple(arrow(0, b) for b in range(nB))
    comp = {}
    for x1 in range(nX):
        for x in range(nX):
            for b in range(nB):
                later = arrow(x1, f.xi[x][b])
                earlier = arrow(x, b)
                comp[(later, earlier)] = arrow(f.mu[x1][b][x], b)
    return ConcreteCategory(nB, dom, cod, ident, comp)


def xor_action():
    """X = B = the two-element pointed set, x.b = x xor b,
    y +_b x = y xor x."""
    X = pointed_set(2)
    B = pointed_set(2)
    one = Morphism(X, X, (0, 1))
    xi = [[0, 1], [1, 0]]
    mu = [[[0, 1], [0, 1]], [[1, 0], [1, 0]]]
    return FiberedAction(X, B, xi, X, one, one, mu)


def search_associativity_gap(nX, nB, cap=1_000_000):
    """First action (X = Y, alpha = beta = 1) passing every displayed law
    whose composition is not associative, or None."""
    X, B = pointed_set(nX), pointed_set(nB)
    one = Morphism(X, X, tuple(range(nX)))
    xi_cells = [(x, b) for x in range(1, nX) for b in range(nB)]
    mu_cells = [(y, b, x)
                for y in range(1, nX) for b in range(nB)
                for x in range(1, nX)]
    total = nB ** len(xi_cells) * nX ** len(mu_cells)
    if total > cap:
        raise BoundTooLarge("search space %d exceeds cap %d" % (total, cap))
    for xi_vals in iproduct(range(nB), repeat=len(xi_cells)):
        xi = [[b for b in range(nB)]] + \
             [[0] * nB for _ in range(nX - 1)]
        for (x, b), vv in zip(xi_cells, xi_vals):
            xi[x][b] = vv
        for mu_vals in iproduct(range(nX), repeat=len(mu_cells)):
            mu = [[[x for x in range(nX)] for _ in range(nB)]
                  for _ in range(nX)]
            for y in range(1, nX):
                for b in range(nB):
                    mu[y][b][0] = y
            for (y, b, x), vv in zip(mu_cells, mu_vals):
                mu[y][b][x] = vv
            f = FiberedAction(X, B, xi, X, one, one, mu)
            if not validate_fibered_action(f).ok:
                continue
            ok, wit = mu_associative(f)
            if not ok:
                return f, wit
    return None
