"""Finite pointed carriers, structure-preserving maps and the categorical
primitives (products, coproducts, kernels, coequalizers) of each kind.

Conventions used everywhere:
  * elements are 0..n-1 and 0 is the distinguished element (basepoint or
    neutral element),
  * operation tables are row major: table[x][y] is x*y,
  * every renumbering maps the distinguished element to 0 and orders the
    remaining elements by smallest original representative.
"""

from itertools import product as iproduct

from .errors import (
    BadInput,
    BoundTooLarge,
    InvalidMorphism,
    InvalidStructure,
    KindMismatch,
    NotSplit,
    UnsupportedCoproduct,
)

POINTED_SET = "pointed-set"
ABELIAN_GROUP = "abelian-group"
GROUP = "group"
UNITAL_MAGMA = "unital-magma"

KINDS = (POINTED_SET, ABELIAN_GROUP, GROUP, UNITAL_MAGMA)
TABLE_KINDS = (ABELIAN_GROUP, GROUP, UNITAL_MAGMA)
GROUP_KINDS = (ABELIAN_GROUP, GROUP)

MAP_ENUM_CAP = 2_000_000


def kinds_compatible(a, b):
    """Same kind, or the group/abelian-group mix (both live in groups)."""
    return a == b or {a, b} <= set(GROUP_KINDS)


class Verdict:
    """Ordered law-by-law result of a validation run."""

    def __init__(self):
        self.results = []  # list of (law, ok, witness)

    def record(self, law, ok, witness=None):
        self.results.append((law, bool(ok), witness))
        return ok

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.results)

    def __bool__(self):
        return self.ok

    @property
    def failures(self):
        return [(law, wit) for law, ok, wit in self.results if not ok]

    @property
    def first_failure(self):
        fails = self.failures
        return fails[0] if fails else None

    def to_json(self):
        return {
            "ok": self.ok,
            "laws": [
                {"law": law, "ok": ok, "witness": wit}
                for law, ok, wit in self.results
            ],
        }

    def __repr__(self):
        if self.ok:
            return "Verdict(ok)"
        law, wit = self.first_failure
        return "Verdict(failed %s at %r)" % (law, wit)


class FiniteStructure:
    """A finite carrier of one of the four kinds.

    Pointed sets carry no table; the other kinds carry a full operation
    table with 0 as two-sided identity.
    """

    __slots__ = ("kind", "order", "table", "name")

    def __init__(self, kind, order, table=None, name=None, check=True):
        if kind not in KINDS:
            raise InvalidStructure("unknown kind %r" % (kind,))
        self.kind = kind
        self.order = order
        self.table = None if table is None else tuple(tuple(row) for row in table)
        self.name = name
        if check:
            self.validate()

    def validate(self):
        n = self.order
        if n < 1:
            raise InvalidStructure("order must be >= 1")
        if self.kind == POINTED_SET:
            if self.table is not None:
                raise InvalidStructure("pointed sets carry no table")
            return
        t = self.table
        if t is None or len(t) != n or any(len(row) != n for row in t):
            raise InvalidStructure("table must be %dx%d" % (n, n))
        for row in t:
            for v in row:
                if not 0 <= v < n:
                    raise InvalidStructure("table entry out of range")
        for x in range(n):
            if t[0][x] != x or t[x][0] != x:
                raise InvalidStructure("0 is not a two-sided identity")
        if self.kind in GROUP_KINDS:
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        if t[t[a][b]][c] != t[a][t[b][c]]:
                            raise InvalidStructure(
                                "not associative at %r" % ((a, b, c),))
            for a in range(n):
                if 0 not in t[a]:
                    raise InvalidStructure("%d has no inverse" % a)
            if self.kind == ABELIAN_GROUP:
                for a in range(n):
                    for b in range(a):
                        if t[a][b] != t[b][a]:
                            raise InvalidStructure(
                                "not commutative at %r" % ((a, b),))
        else:  # unital magma: right cancellation
            for col in range(n):
                seen = {t[row][col] for row in range(n)}
                if len(seen) != n:
                    raise InvalidStructure(
                        "right cancellation fails in column %d" % col)

    def op(self, x, y):
        return self.table[x][y]

    def inverse(self, x):
        """Inverse in group kinds."""
        return self.table[x].index(0)

    def elements(self):
        return range(self.order)

    def retagged(self, kind, name=None):
        """Same carrier re-validated under another kind."""
        table = self.table if kind != POINTED_SET else None
        return FiniteStructure(kind, self.order, table, name or self.name)

    def key(self):
        return (self.kind, self.order, self.table)

    def __eq__(self, other):
        return isinstance(other, FiniteStructure) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        label = self.name or "%s(%d)" % (self.kind, self.order)
        return "<%s>" % label


def pointed_set(n, name=None):
    return FiniteStructure(POINTED_SET, n, None, name or "P%d" % n)


def cyclic_group(n, name=None):
    table = [[(x + y) % n for y in range(n)] for x in range(n)]
    return FiniteStructure(ABELIAN_GROUP, n, table, name or "Z%d" % n)


def trivial(kind):
    table = None if kind == POINTED_SET else [[0]]
    return FiniteStructure(kind, 1, table, "1")


class Morphism:
    """A basepoint/identity preserving map, a homomorphism on table kinds."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source, target, map, check=True):
        self.source = source
        self.target = target
        self.map = tuple(map)
        if len(self.map) != source.order:
            raise InvalidMorphism("map length != source order")
        for v in self.map:
            if not 0 <= v < target.order:
                raise InvalidMorphism("map value out of range")
        if check:
            v = self.verdict()
            if not v:
                raise InvalidMorphism("not a morphism: %r" % (v.first_failure,))

    def verdict(self):
        v = Verdict()
        v.record("kinds-compatible",
                 kinds_compatible(self.source.kind, self.target.kind),
                 (self.source.kind, self.target.kind))
        v.record("preserves-zero", self.map[0] == 0, self.map[0])
        if self.source.table is not None and self.target.table is not None:
            ok, wit = True, None
            for x in range(self.source.order):
                for y in range(self.source.order):
                    if self.map[self.source.op(x, y)] != \
                            self.target.op(self.map[x], self.map[y]):
                        ok, wit = False, (x, y)
                        break
                if not ok:
                    break
            v.record("homomorphism", ok, wit)
        return v

    def __call__(self, x):
        return self.map[x]

    def is_bijective(self):
        return len(set(self.map)) == self.source.order == self.target.order

    def inverse(self):
        if not self.is_bijective():
            raise InvalidMorphism("not bijective")
        inv = [0] * self.target.order
        for x, y in enumerate(self.map):
            inv[y] = x
        return Morphism(self.target, self.source, inv)

    def is_identity(self):
        return self.source == self.target and \
            all(self.map[i] == i for i in range(self.source.order))

    def key(self):
        return (self.source.key(), self.target.key(), self.map)

    def __eq__(self, other):
        return isinstance(other, Morphism) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Morphism(%r -> %r, %r)" % (self.source, self.target, list(self.map))


def identity(X):
    return Morphism(X, X, range(X.order), check=False)


def compose(g, f):
    """g after f."""
    if f.target != g.source:
        raise KindMismatch("composition mismatch")
    return Morphism(f.source, g.target, tuple(g.map[v] for v in f.map),
                    check=False)


def zero_morphism(X, B):
    if not kinds_compatible(X.kind, B.kind):
        raise KindMismatch("zero morphism needs compatible kinds")
    return Morphism(X, B, (0,) * X.order, check=False)


def is_zero(f):
    return all(v == 0 for v in f.map)


class ReflexivePair:
    """d, c : C1 -> C0 with a common section e."""

    def __init__(self, d, c, e):
        if d.source != c.source or d.target != c.target:
            raise KindMismatch("d and c must be parallel")
        if e.source != d.target or e.target != d.source:
            raise KindMismatch("e must go back from C0 to C1")
        if not compose(d, e).is_identity() or not compose(c, e).is_identity():
            raise NotSplit("e is not a common section of d and c")
        self.d, self.c, self.e = d, c, e
        self.C1, self.C0 = d.source, d.target


# ---------------------------------------------------------------------------
# products and coproducts


class ProductData:
    """Carrier X x B with projections and the pairing constructor."""

    def __init__(self, structure, proj1, proj2):
        self.structure = structure
        self.proj1 = proj1
        self.proj2 = proj2

    def pair(self, f, g):
        """The unique <f,g> with proj1<f,g>=f and proj2<f,g>=g."""
        if f.source != g.source:
            raise KindMismatch("pairing needs a common source")
        nB = self.proj2.target.order
        return Morphism(f.source, self.structure,
                        tuple(f.map[x] * nB + g.map[x]
                              for x in range(f.source.order)))


def product(X, B):
    """Componentwise product; element (x, b) is numbered x*|B| + b."""
    if X.kind != B.kind:
        raise KindMismatch("product needs equal kinds")
    n, m = X.order, B.order
    if X.kind == POINTED_SET:
        P = FiniteStructure(POINTED_SET, n * m, None)
    else:
        table = [[0] * (n * m) for _ in range(n * m)]
        for x1 in range(n):
            for b1 in range(m):
                for x2 in range(n):
                    for b2 in range(m):
                        table[x1 * m + b1][x2 * m + b2] = \
                            X.op(x1, x2) * m + B.op(b1, b2)
        P = FiniteStructure(X.kind, n * m, table, check=False)
    p1 = Morphism(P, X, tuple(i // m for i in range(n * m)), check=False)
    p2 = Morphism(P, B, tuple(i % m for i in range(n * m)), check=False)
    return ProductData(P, p1, p2)


class CoproductData:
    """Carrier X + B with injections and the copairing constructor."""

    def __init__(self, structure, inj1, inj2, copair_fn):
        self.structure = structure
        self.inj1 = inj1
        self.inj2 = inj2
        self._copair = copair_fn

    def copair(self, f, g):
        """The unique [f g] with [f g]inj1=f and [f g]inj2=g."""
        if f.target != g.target:
            raise KindMismatch("copairing needs a common target")
        return self._copair(f, g)


def coproduct(X, B):
    """Wedge for pointed sets, biproduct for abelian groups."""
    if X.kind != B.kind:
        raise KindMismatch("coproduct needs equal kinds")
    n, m = X.order, B.order
    if X.kind == POINTED_SET:
        W = FiniteStructure(POINTED_SET, n + m - 1, None)
        i1 = Morphism(X, W, tuple(range(n)), check=False)
        i2 = Morphism(B, W, (0,) + tuple(range(n, n + m - 1)), check=False)

        def copair(f, g):
            vals = list(f.map) + list(g.map[1:])
            return Morphism(W, f.target, vals, check=False)

        return CoproductData(W, i1, i2, copair)
    if X.kind == ABELIAN_GROUP:
        prod = product(X, B)
        P = prod.structure
        i1 = Morphism(X, P, tuple(x * m for x in range(n)), check=False)
        i2 = Morphism(B, P, tuple(range(m)), check=False)

        def copair(f, g):
            T = f.target
            vals = [T.op(f.map[i // m], g.map[i % m]) for i in range(n * m)]
            return Morphism(P, T, vals, check=False)

        return CoproductData(P, i1, i2, copair)
    raise UnsupportedCoproduct(
        "no finite coproduct construction for kind %r" % X.kind)


# ---------------------------------------------------------------------------
# substructures, kernels, quotients


def closure(X, seeds):
    """Smallest subset containing seeds and 0, closed under the table."""
    if X.table is None:
        return set(seeds) | {0}
    seen = set(seeds) | {0}
    frontier = list(seen)
    while frontier:
        a = frontier.pop()
        for b in list(seen):
            for v in (X.op(a, b), X.op(b, a)):
                if v not in seen:
                    seen.add(v)
                    frontier.append(v)
    return seen


def substructure(X, subset):
    """Renumbered substructure on subset (must contain 0 and be closed)."""
    elems = sorted(subset)
    if not elems or elems[0] != 0:
        raise InvalidStructure("substructure must contain 0")
    index = {e: i for i, e in enumerate(elems)}
    if X.table is None:
        S = FiniteStructure(POINTED_SET, len(elems), None)
    else:
        for a in elems:
            for b in elems:
                if X.op(a, b) not in index:
                    raise InvalidStructure("subset not closed")
        table = [[index[X.op(a, b)] for b in elems] for a in elems]
        S = FiniteStructure(X.kind, len(elems), table, check=False)
    embed = Morphism(S, X, elems, check=False)
    return S, embed


def kernel_of_split_epi(alpha, beta):
    """Kernel object plus embedding of a split epi alpha with section beta."""
    if not compose(alpha, beta).is_identity():
        raise NotSplit("alpha . beta is not the identity")
    fiber = [a for a in range(alpha.source.order) if alpha.map[a] == 0]
    return substructure(alpha.source, fiber)


def generators(X):
    """Greedy small generating set (elements only; 0 is always implied)."""
    gens = []
    closed = closure(X, [])
    while len(closed) < X.order:
        x = min(set(range(X.order)) - closed)
        gens.append(x)
        closed = closure(X, gens)
    return gens


def quotient_by_partition(X, classes):
    """Quotient structure and projection from a list of element classes.

    Classes are renumbered by smallest representative; for table kinds the
    partition must be a congruence.
    """
    classes = sorted((sorted(c) for c in classes), key=lambda c: c[0])
    if classes[0][0] != 0:
        raise InvalidStructure("class of 0 must come first")
    cls_of = {}
    for i, c in enumerate(classes):
        for e in c:
            cls_of[e] = i
    if X.table is None:
        Q = FiniteStructure(POINTED_SET, len(classes), None)
    else:
        table = [[0] * len(classes) for _ in classes]
        for i, ci in enumerate(classes):
            for j, cj in enumerate(classes):
                vals = {cls_of[X.op(a, b)] for a in ci for b in cj}
                if len(vals) != 1:
                    raise InvalidStructure("partition is not a congruence")
                table[i][j] = vals.pop()
        Q = FiniteStructure(X.kind, len(classes), table)
    sigma = Morphism(X, Q, tuple(cls_of[e] for e in range(X.order)),
                     check=False)
    return Q, sigma


def _union_find_classes(n, pairs):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups = {}
    for e in range(n):
        groups.setdefault(find(e), []).append(e)
    return list(groups.values())


def congruence_closure(X, pairs):
    """Smallest congruence on a table kind containing the given pairs."""
    n = X.order
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    work = list(pairs)
    while work:
        a, b = work.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[max(ra, rb)] = min(ra, rb)
        for c in range(n):
            work.append((X.op(a, c), X.op(b, c)))
            work.append((X.op(c, a), X.op(c, b)))
    groups = {}
    for e in range(n):
        groups.setdefault(find(e), []).append(e)
    classes = list(groups.values())
    # safety: verify congruence property
    cls_of = {}
    for i, c in enumerate(classes):
        for e in c:
            cls_of[e] = i
    for c in classes:
        a = c[0]
        for b in c[1:]:
            for x in range(n):
                assert cls_of[X.op(a, x)] == cls_of[X.op(b, x)]
                assert cls_of[X.op(x, a)] == cls_of[X.op(x, b)]
    return classes


def coequalizer(d, c):
    """Coequalizer carrier and projection of any parallel pair."""
    if d.source != c.source or d.target != c.target:
        raise KindMismatch("parallel pair required")
    C0 = d.target
    pairs = [(d.map[y], c.map[y]) for y in range(d.source.order)]
    if C0.table is None:
        classes = _union_find_classes(C0.order, pairs)
    else:
        classes = congruence_closure(C0, pairs)
    return quotient_by_partition(C0, classes)


def coequalizer_of_reflexive_pair(pair):
    return coequalizer(pair.d, pair.c)


def verify_coequalizer(d, c, Q, sigma, targets):
    """Exhaustive universal-property check of a coequalizer candidate."""
    if not compose(sigma, d).map == compose(sigma, c).map:
        return False
    for T in targets:
        for q in morphism_space(d.target, T):
            if compose(q, d).map != compose(q, c).map:
                continue
            # unique q' with q'.sigma = q
            candidates = [qp for qp in morphism_space(Q, T)
                          if compose(qp, sigma).map == q.map]
            if len(candidates) != 1:
                return False
    return True


# ---------------------------------------------------------------------------
# morphism enumeration


_HOM_CACHE = {}


def pointed_maps(A, B):
    """All basepoint-preserving maps A -> B (no table laws)."""
    n, m = A.order, B.order
    if m ** max(n - 1, 0) > MAP_ENUM_CAP:
        raise BoundTooLarge("too many pointed maps to enumerate")
    out = []
    for tail in iproduct(range(m), repeat=n - 1):
        out.append(Morphism(A, B, (0,) + tail, check=False))
    return out


def _derivation_order(A, gens):
    """Derive every element of A from 0 and gens via table products."""
    known = [0] + list(gens)
    seen = set(known)
    deriv = []  # (element, a, b) with element = a*b, a and b already known
    while len(seen) < A.order:
        progressed = False
        for a in list(known):
            for b in list(known):
                v = A.op(a, b)
                if v not in seen:
                    seen.add(v)
                    known.append(v)
                    deriv.append((v, a, b))
                    progressed = True
        assert progressed, "generators do not generate"
    return deriv


def homomorphisms(A, B):
    """All morphisms A -> B of table kinds, via generator assignments."""
    key = (A.key(), B.key())
    if key in _HOM_CACHE:
        return _HOM_CACHE[key]
    gens = generators(A)
    deriv = _derivation_order(A, gens)
    n, m = A.order, B.order
    out = []
    for assignment in iproduct(range(m), repeat=len(gens)):
        f = [None] * n
        f[0] = 0
        for g, v in zip(gens, assignment):
            f[g] = v
        for e, a, b in deriv:
            f[e] = B.op(f[a], f[b])
        ok = True
        for x in range(n):
            fx = f[x]
            for y in range(n):
                if f[A.op(x, y)] != B.op(fx, f[y]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(Morphism(A, B, f, check=False))
    out = tuple(out)
    _HOM_CACHE[key] = out
    return out


def morphism_space(A, B):
    """Every morphism A -> B of the ambient kind."""
    if not kinds_compatible(A.kind, B.kind):
        raise KindMismatch("no morphisms between %s and %s" % (A.kind, B.kind))
    if A.table is None:
        return pointed_maps(A, B)
    return homomorphisms(A, B)


def morphisms_with_pins(A, B, pins):
    """All morphisms A -> B taking the pinned values, by backtracking."""
    n, m = A.order, B.order
    f = [None] * n
    f[0] = 0
    for x, v in pins.items():
        if f[x] is not None and f[x] != v:
            return []
        f[x] = v
    if f[0] != 0:
        return []
    free = [x for x in range(n) if f[x] is None]
    has_table = A.table is not None and B.table is not None
    out = []

    def consistent(x):
        if not has_table:
            return True
        for y in range(n):
            if f[y] is None:
                continue
            v = f[A.op(x, y)]
            if v is not None and v != B.op(f[x], f[y]):
                return False
            v = f[A.op(y, x)]
            if v is not None and v != B.op(f[y], f[x]):
                return False
        return True

    def rec(i):
        if i == len(free):
            out.append(Morphism(A, B, list(f), check=False))
            return
        x = free[i]
        for v in range(m):
            f[x] = v
            if consistent(x):
                rec(i + 1)
            f[x] = None

    # pinned values may already clash
    for x in range(n):
        if f[x] is not None and not consistent(x):
            return []
    rec(0)
    return out


# ---------------------------------------------------------------------------
# isomorphism search


def _element_profile(X):
    """Relabeling-invariant per-element fingerprints used for pruning."""
    n = X.order
    if X.table is None:
        return [0] * n
    if X.kind in GROUP_KINDS:
        prof = []
        for x in range(n):
            k, acc = 1, x
            while acc != 0:
                acc = X.op(acc, x)
                k += 1
            prof.append(k)
        return prof
    prof = []
    for x in range(n):
        col = tuple(X.op(r, x) for r in range(n))
        # cycle type of the right translation by x
        seen, cyc = set(), []
        for s in range(n):
            if s in seen:
                continue
            ln, cur = 0, s
            while cur not in seen:
                seen.add(cur)
                cur = col[cur]
                ln += 1
            cyc.append(ln)
        prof.append((tuple(sorted(cyc)), X.op(x, x) == x))
    return prof


def isomorphisms(X, Y):
    """Generator of all isomorphisms X -> Y, deterministic order."""
    if not kinds_compatible(X.kind, Y.kind) or X.order != Y.order:
        return
    n = X.order
    if X.table is None:
        from itertools import permutations
        for perm in permutations(range(1, n)):
            yield Morphism(X, Y, (0,) + perm, check=False)
        return
    px, py = _element_profile(X), _element_profile(Y)
    if sorted(map(repr, px)) != sorted(map(repr, py)):
        return
    f = [None] * n
    f[0] = 0
    used = [False] * n
    used[0] = True

    def consistent(x):
        for y in range(n):
            if f[y] is None:
                continue
            v = f[X.op(x, y)]
            if v is not None and v != Y.op(f[x], f[y]):
                return False
            v = f[X.op(y, x)]
            if v is not None and v != Y.op(f[y], f[x]):
                return False
        return True

    def rec(x):
        if x == n:
            yield Morphism(X, Y, list(f), check=False)
            return
        for v in range(n):
            if used[v] or px[x] != py[v]:
                continue
            f[x] = v
            used[v] = True
            if consistent(x):
                yield from rec(x + 1)
            f[x] = None
            used[v] = False

    yield from rec(1)


def find_isomorphism(X, Y):
    """First isomorphism in search order, or None (definitive)."""
    for iso in isomorphisms(X, Y):
        return iso
    return None


def automorphisms(X):
    return list(isomorphisms(X, X))


def permute_structure(X, perm):
    """Relabel X along a permutation fixing 0; returns the new structure."""
    if perm[0] != 0 or sorted(perm) != list(range(X.order)):
        raise BadInput("relabeling must be a permutation fixing 0")
    if X.table is None:
        return FiniteStructure(X.kind, X.order, name=X.name)
    table = [[0] * X.order for _ in range(X.order)]
    for x in range(X.order):
        for y in range(X.order):
            table[perm[x]][perm[y]] = perm[X.table[x][y]]
    return FiniteStructure(X.kind, X.order, table, name=X.name)


# ---------------------------------------------------------------------------
# jointly epic pairs


def jointly_epic(f, g, probes=None):
    """Decide whether f, g with common target are jointly epic.

    Default decision procedure: images generate (table kinds) or cover
    (pointed sets).  With an explicit probe family the definition is tested
    literally against every parallel pair into each probe.
    """
    if f.target != g.target:
        raise KindMismatch("jointly epic needs a common target")
    if probes is not None:
        return jointly_epic_probe(f, g, probes)
    A = f.target
    image = set(f.map) | set(g.map)
    if A.table is None:
        return len(image) == A.order
    return len(closure(A, image)) == A.order


def jointly_epic_probe(f, g, probes):
    """Literal probe-family test: uf=vf and ug=vg force u=v."""
    A = f.target
    for C in probes:
        space = morphism_space(A, C)
        by_restriction = {}
        for u in space:
            key = (compose(u, f).map, compose(u, g).map)
            if key in by_restriction and by_restriction[key] != u.map:
                return False
            by_restriction[key] = u.map
    return True


def quotients(X):
    """All quotient structures of X (congruences; partitions for sets)."""
    n = X.order
    if X.table is None:
        out = []
        for part in _set_partitions(n):
            out.append(quotient_by_partition(X, part)[0])
        return out
    out, seen = [], set()
    for part in _set_partitions(n):
        try:
            Q, _ = quotient_by_partition(X, part)
        except InvalidStructure:
            continue
        if Q.key() not in seen:
            seen.add(Q.key())
            out.append(Q)
    return out


def _set_partitions(n):
    """All partitions of 0..n-1 (restricted growth strings)."""
    if n > 8:
        raise BoundTooLarge("too many partitions")
    parts = []

    def rec(i, rgs, k):
        if i == n:
            groups = {}
            for e, c in enumerate(rgs):
                groups.setdefault(c, []).append(e)
            parts.append(list(groups.values()))
            return
        for c in range(k + 1):
            rgs.append(c)
            rec(i + 1, rgs, k + (1 if c == k else 0))
            rgs.pop()

    rec(0, [], 0)
    return parts
