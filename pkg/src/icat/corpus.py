"""Deterministic enumeration of small structures of each kind.

Groups of order <= 12 ship as built-in tables constructed from standard
presentations; the exhaustive table searcher is kept alongside and the test
suite replays it against the built-ins on small orders.
"""

from itertools import permutations, product as iproduct

from .errors import BoundTooLarge
from .structures import (
    ABELIAN_GROUP,
    GROUP,
    POINTED_SET,
    UNITAL_MAGMA,
    FiniteStructure,
    cyclic_group,
    find_isomorphism,
    pointed_set,
    product,
)


def _from_elements(elems, mul, name, kind=GROUP):
    """Cayley table from explicit elements and a multiplication function."""
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return FiniteStructure(kind, len(elems), table, name)


def direct_product(X, B, name=None):
    P = product(X, B).structure
    return FiniteStructure(P.kind, P.order, P.table,
                           name or "%sx%s" % (X.name, B.name))


def dihedral_group(n, name=None):
    """Symmetries of the regular n-gon, order 2n; elements (i, j)=r^i s^j."""
    elems = [(i, j) for i in range(n) for j in range(2)]

    def mul(a, b):
        i, j = a
        k, l = b
        return ((i + k) % n if j == 0 else (i - k) % n, (j + l) % 2)

    return _from_elements(elems, mul, name or "D%d" % n)


def quaternion_group():
    """Unit quaternions: (s, u) stands for (-1)^s * u with u in 1,i,j,k."""
    units = ["1", "i", "j", "k"]
    base = {
        ("1", "1"): (0, "1"), ("1", "i"): (0, "i"), ("1", "j"): (0, "j"),
        ("1", "k"): (0, "k"),
        ("i", "1"): (0, "i"), ("i", "i"): (1, "1"), ("i", "j"): (0, "k"),
        ("i", "k"): (1, "j"),
        ("j", "1"): (0, "j"), ("j", "i"): (1, "k"), ("j", "j"): (1, "1"),
        ("j", "k"): (0, "i"),
        ("k", "1"): (0, "k"), ("k", "i"): (0, "j"), ("k", "j"): (1, "i"),
        ("k", "k"): (1, "1"),
    }
    elems = [(s, u) for u in units for s in range(2)]
    elems.sort(key=lambda e: (e[0], units.index(e[1])))

    def mul(a, b):
        s, u = a
        t, v = b
        w, x = base[(u, v)]
        return ((s + t + w) % 2, x)

    return _from_elements(elems, mul, "Q8")


def symmetric_group_3():
    """S3 with elements ordered e, (12), (13), (23), (123), (132)."""
    elems = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]

    def mul(a, b):
        return tuple(a[b[i]] for i in range(3))

    return _from_elements(elems, mul, "S3")


def alternating_group_4():
    elems = [p for p in permutations(range(4)) if _parity(p) == 0]
    elems.sort()
    elems.remove((0, 1, 2, 3))
    elems.insert(0, (0, 1, 2, 3))

    def mul(a, b):
        return tuple(a[b[i]] for i in range(4))

    return _from_elements(elems, mul, "A4")


def _parity(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p))
              if p[i] > p[j])
    return inv % 2


def dicyclic_group_3():
    """Order 12: a^6=1, b^2=a^3, b a b^-1 = a^-1; elements (i, j)=a^i b^j."""
    elems = [(i, j) for i in range(6) for j in range(2)]

    def mul(x, y):
        i, j = x
        k, l = y
        if j == 0:
            return ((i + k) % 6, l)
        if l == 0:
            return ((i - k) % 6, 1)
        return ((i - k + 3) % 6, 0)

    return _from_elements(elems, mul, "Dic3")


def klein_four():
    return direct_product(cyclic_group(2), cyclic_group(2), "Z2xZ2")


def _builtin_groups():
    Z = cyclic_group
    groups = [
        Z(1, "Z1"), Z(2), Z(3),
        Z(4), klein_four(),
        Z(5),
        Z(6), symmetric_group_3(),
        Z(7),
        Z(8), direct_product(Z(4), Z(2), "Z4xZ2"),
        direct_product(Z(2), klein_four(), "Z2xZ2xZ2"),
        dihedral_group(4), quaternion_group(),
        Z(9), direct_product(Z(3), Z(3), "Z3xZ3"),
        Z(10), dihedral_group(5),
        Z(11),
        Z(12), direct_product(Z(6), Z(2), "Z6xZ2"),
        dihedral_group(6), alternating_group_4(), dicyclic_group_3(),
    ]
    out = []
    for g in groups:
        kind = GROUP if any(g.table[a][b] != g.table[b][a]
                            for a in range(g.order)
                            for b in range(g.order)) else ABELIAN_GROUP
        if g.kind != kind:
            g = g.retagged(kind)
        out.append(g)
    return out


BUILTIN_GROUPS = _builtin_groups()

# classification constants: number of groups of order 1..12 up to iso
GROUP_COUNTS = (1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5)


def abelian_groups(max_order):
    """Products of cyclic groups by invariant factors m1 | m2 | ... ."""
    out = []
    for n in range(1, max_order + 1):
        for factors in _invariant_factorizations(n):
            g = cyclic_group(factors[0], "Z%d" % factors[0])
            for m in factors[1:]:
                g = direct_product(g, cyclic_group(m))
            out.append(g)
    return out


def _invariant_factorizations(n):
    """Sequences m1 | m2 | ... | mk with product n (mi > 1 unless n = 1)."""
    if n == 1:
        return [(1,)]
    results = []

    def rec(remaining, prev, acc):
        if remaining == 1:
            results.append(tuple(acc))
            return
        m = prev
        while m <= remaining:
            if remaining % m == 0 and m % prev == 0 and m > 1:
                rec(remaining // m, m, acc + [m])
            m += 1

    for first in range(2, n + 1):
        if n % first == 0:
            rec(n // first, first, [first])
    # keep only chains with full divisibility (rec enforces), dedupe
    uniq = sorted(set(results))
    return uniq


def groups(max_order):
    if max_order > 12:
        raise BoundTooLarge("built-in group tables stop at order 12")
    return [g for g in BUILTIN_GROUPS if g.order <= max_order]


def pointed_sets(max_size):
    return [pointed_set(n) for n in range(1, max_size + 1)]


def search_group_tables(n):
    """Exhaustively search all group tables of order n, up to isomorphism.

    Backtracks over rows as partial Latin squares with associativity
    pruning.  Exponential; used in tests to vet the built-in tables.
    """
    if n > 8:
        raise BoundTooLarge("table search supported through order 8")
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        table[0][i] = i
        table[i][0] = i
    cells = [(r, c) for r in range(1, n) for c in range(1, n)]
    found = []

    def assoc_ok(r, c):
        # check all triples whose products are fully determined
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                if ab is None:
                    continue
                for d in range(n):
                    bd = table[b][d]
                    if bd is None:
                        continue
                    left = table[ab][d]
                    right = table[a][bd]
                    if left is not None and right is not None and left != right:
                        return False
        return True

    def rec(k):
        if k == len(cells):
            t = [list(row) for row in table]
            g = FiniteStructure(GROUP, n, t, check=False)
            try:
                g.validate()
            except Exception:
                return
            for other in found:
                if find_isomorphism(g, other):
                    return
            found.append(g)
            return
        r, c = cells[k]
        for v in range(n):
            if any(table[r][j] == v for j in range(n) if table[r][j] is not None):
                continue
            if any(table[i][c] == v for i in range(n) if table[i][c] is not None):
                continue
            table[r][c] = v
            if assoc_ok(r, c):
                rec(k + 1)
            table[r][c] = None

    rec(0)
    return found


def unital_magma_tables(n):
    """Yield all right-cancellative unital magma tables of order n (raw).

    Row 0 and column 0 are pinned by unitality; every column must be a
    permutation.
    """
    if n == 1:
        yield FiniteStructure(UNITAL_MAGMA, 1, [[0]])
        return
    if n > 5:
        raise BoundTooLarge("magma enumeration supported through size 5")
    # column j is the map x -> x*j; it must be a permutation with 0*j = j
    cols = {}
    for j in range(1, n):
        cols[j] = [t for t in permutations(range(n)) if t[0] == j]
    for choice in iproduct(*(cols[j] for j in range(1, n))):
        table = [[0] * n for _ in range(n)]
        for x in range(n):
            table[0][x] = x
            table[x][0] = x
        for j, col in enumerate(choice, start=1):
            for r in range(1, n):
                table[r][j] = col[r]
        yield FiniteStructure(UNITAL_MAGMA, n, table, check=False)


def unital_magmas(max_size, dedup=True):
    """Right-cancellative unital magmas up to isomorphism (canonical reps)."""
    out = []
    for n in range(1, max_size + 1):
        reps = []
        for m in unital_magma_tables(n):
            if not dedup:
                out.append(m)
                continue
            if _is_canonical_magma(m):
                reps.append(m)
        if dedup:
            out.extend(reps)
    return out


def _is_canonical_magma(m):
    """Keep the lexicographically least table of each isomorphism class."""
    n = m.order
    flat = tuple(v for row in m.table for v in row)
    for perm in permutations(range(1, n)):
        p = (0,) + perm
        inv = [0] * n
        for i, v in enumerate(p):
            inv[v] = i
        relabeled = tuple(p[m.table[inv[r]][inv[c]]]
                          for r in range(n) for c in range(n))
        if relabeled < flat:
            return False
    return True


def enumerate_structures(kind, max_size):
    """The deterministic corpus for a kind, deduped up to isomorphism."""
    if kind == POINTED_SET:
        return pointed_sets(max_size)
    if kind == ABELIAN_GROUP:
        return abelian_groups(max_size)
    if kind == GROUP:
        return groups(max_size)
    if kind == UNITAL_MAGMA:
        return unital_magmas(max_size)
    raise BoundTooLarge("unknown kind %r" % kind)


_NAMED = None


def named_structures():
    """Name -> structure registry used by the JSON loaders."""
    global _NAMED
    if _NAMED is None:
        reg = {}
        for g in BUILTIN_GROUPS:
            reg[g.name] = g
        for g in abelian_groups(12):
            reg.setdefault(g.name, g)
        for n in range(1, 9):
            reg["P%d" % n] = pointed_set(n)
        _NAMED = reg
    return _NAMED
