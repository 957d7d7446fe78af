"""JSON readers and writers for structures, morphisms, bundles, witnesses.

Structure files are {"kind", "order", "table", "name"?} with the table
row-major and absent for pointed sets; morphism files are {"source",
"target", "map"} where either end may be a registered structure name.
Emission is deterministic: sorted keys, fixed separators, trailing
newline, so equal inputs produce byte-identical files.
"""

import json

from .corpus import named_structures
from .errors import BadInput
from .structures import FiniteStructure, Morphism, Verdict
from .points import SplitEpi, point_morphism_of_maps
from .graphs import ReflexiveGraph, Precategory
from .group_actions import (ChainCompData, GroupAction, PreCrossedModule,
                            check_peiffer)
from .additive import TwoChain
from .ptset_models import ConcreteCategory, FiberedAction


def dumps(obj):
    """Canonical text form: sorted keys, two-space indent, newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def save_json(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
    return path


def load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        raise BadInput("cannot read %s: %s" % (path, exc))


def structure_to_json(X):
    out = {"kind": X.kind, "order": X.order}
    if X.table is not None:
        out["table"] = [list(row) for row in X.table]
    if X.name:
        out["name"] = X.name
    return out


def structure_from_json(d, check=False):
    if isinstance(d, str):
        reg = named_structures()
        if d not in reg:
            raise BadInput("unknown structure name %r" % d)
        return reg[d]
    if not isinstance(d, dict):
        raise BadInput("structure must be an object or a name")
    try:
        kind, order = d["kind"], d["order"]
    except KeyError as exc:
        raise BadInput("structure file needs %s" % exc)
    table = d.get("table")
    return FiniteStructure(kind, order, table, name=d.get("name"),
                           check=check)


def morphism_to_json(f):
    return {"source": structure_to_json(f.source),
            "target": structure_to_json(f.target),
            "map": list(f.map)}


def morphism_from_json(d, check=False):
    try:
        src = structure_from_json(d["source"])
        tgt = structure_from_json(d["target"])
        m = d["map"]
    except (KeyError, TypeError) as exc:
        raise BadInput("morphism file needs source/target/map: %s" % exc)
    if len(m) != src.order or any(not 0 <= v < tgt.order for v in m):
        raise BadInput("map must list a target element per source element")
    return Morphism(src, tgt, m, check=check)


def point_to_json(p):
    return {"A": structure_to_json(p.A), "B": structure_to_json(p.B),
            "alpha": list(p.alpha.map), "beta": list(p.beta.map)}


def point_from_json(d, check=False):
    try:
        A0 = structure_from_json(d["A"])
        B0 = structure_from_json(d["B"])
        alpha = Morphism(A0, B0, d["alpha"], check=check)
        beta = Morphism(B0, A0, d["beta"], check=check)
    except (KeyError, TypeError) as exc:
        raise BadInput("point file needs A/B/alpha/beta: %s" % exc)
    return SplitEpi(A0, B0, alpha, beta, check=check)


def rg_to_json(g):
    return {"C0": structure_to_json(g.C0), "C1": structure_to_json(g.C1),
            "d": list(g.d.map), "c": list(g.c.map), "e": list(g.e.map)}


def rg_from_json(d, check=False):
    try:
        C0 = structure_from_json(d["C0"])
        C1 = structure_from_json(d["C1"])
        dm = Morphism(C1, C0, d["d"], check=check)
        cm = Morphism(C1, C0, d["c"], check=check)
        em = Morphism(C0, C1, d["e"], check=check)
    except (KeyError, TypeError) as exc:
        raise BadInput("graph bundle needs C0/C1/d/c/e: %s" % exc)
    return ReflexiveGraph(C0, C1, dm, cm, em, check=check)


def precat_to_json(P):
    g = P.graph
    out = rg_to_json(g)
    out["C2"] = structure_to_json(P.C2)
    out["p1"] = list(P.p1.map)
    out["p2"] = list(P.p2.map)
    out["e1"] = list(P.e1.map)
    out["e2"] = list(P.e2.map)
    out["m"] = list(P.m.map)
    return out


def precat_from_json(d, check=False):
    g = rg_from_json(d, check=check)
    try:
        C2 = structure_from_json(d["C2"])
        p1 = Morphism(C2, g.C1, d["p1"], check=check)
        p2 = Morphism(C2, g.C1, d["p2"], check=check)
        e1 = Morphism(g.C1, C2, d["e1"], check=check)
        e2 = Morphism(g.C1, C2, d["e2"], check=check)
        m = Morphism(C2, g.C1, d["m"], check=check)
    except (KeyError, TypeError) as exc:
        raise BadInput("precategory bundle needs C2/p1/p2/e1/e2/m: %s" % exc)
    return Precategory(g, C2, p1, p2, e1, e2, m, check=check)


def action_to_json(a):
    return {"X": structure_to_json(a.X), "B": structure_to_json(a.B),
            "act": [list(row) for row in a.act]}


def action_from_json(d, check=False):
    try:
        X = structure_from_json(d["X"])
        B0 = structure_from_json(d["B"])
        act = d["act"]
    except (KeyError, TypeError) as exc:
        raise BadInput("action file needs X/B/act: %s" % exc)
    return GroupAction(X, B0, act, check=check)


def pxm_to_json(px):
    out = action_to_json(px.action)
    out["h"] = list(px.h.map)
    return out


def pxm_from_json(d, check=False):
    a = action_from_json(d, check=check)
    try:
        h = Morphism(a.X, a.B, d["h"], check=check)
    except (KeyError, TypeError) as exc:
        raise BadInput("precrossed-module file needs h: %s" % exc)
    return PreCrossedModule(a, h, check=check)


def chain_to_json(ch):
    return {"Z": structure_to_json(ch.Z), "X": structure_to_json(ch.X),
            "B": structure_to_json(ch.B),
            "t": list(ch.t.map), "h": list(ch.h.map)}


def chain_from_json(d, check=False):
    try:
        Z = structure_from_json(d["Z"])
        X = structure_from_json(d["X"])
        B0 = structure_from_json(d["B"])
        t = Morphism(Z, X, d["t"], check=check)
        h = Morphism(X, B0, d["h"], check=check)
    except (KeyError, TypeError) as exc:
        raise BadInput("chain file needs Z/X/B/t/h: %s" % exc)
    return TwoChain(Z, X, B0, t, h, check=check)


def chaincomp_to_json(dd):
    out = chain_to_json(dd)
    out["xiX"] = [list(row) for row in dd.xiX.act]
    out["xiZ"] = [list(row) for row in dd.xiZ.act]
    out["xiF"] = [list(row) for row in dd.xiF.act]
    return out


def chaincomp_from_json(d, check=False):
    ch = chain_from_json(d, check=check)
    try:
        xiX = GroupAction(ch.X, ch.B, d["xiX"], check=check)
        xiZ = GroupAction(ch.Z, ch.X, d["xiZ"], check=check)
        from .group_actions import semidirect_product
        FZX = semidirect_product(xiZ).A
        FXB = semidirect_product(xiX).A
        xiF = GroupAction(FZX, FXB, d["xiF"], check=check)
    except (KeyError, TypeError) as exc:
        raise BadInput("chain-comparison file needs xiX/xiZ/xiF: %s" % exc)
    return ChainCompData(ch.Z, ch.X, ch.B, ch.t, ch.h, xiX, xiZ, xiF,
                         check=check)


def fibered_to_json(f):
    out = {"X": structure_to_json(f.X), "B": structure_to_json(f.B),
           "xi": [list(row) for row in f.xi]}
    if f.Y is not None:
        out["Y"] = structure_to_json(f.Y)
        out["alpha"] = list(f.alpha.map)
        out["beta"] = list(f.beta.map)
        out["mu"] = [[list(col) for col in row] for row in f.mu]
    return out


def fibered_from_json(d):
    try:
        X = structure_from_json(d["X"])
        B0 = structure_from_json(d["B"])
        xi = d["xi"]
    except (KeyError, TypeError) as exc:
        raise BadInput("fibered-action file needs X/B/xi: %s" % exc)
    if "Y" in d:
        try:
            Y = structure_from_json(d["Y"])
            alpha = Morphism(Y, X, d["alpha"], check=False)
            beta = Morphism(X, Y, d["beta"], check=False)
            mu = d["mu"]
        except (KeyError, TypeError) as exc:
            raise BadInput("full fibered action needs Y/alpha/beta/mu: %s"
                           % exc)
        return FiberedAction(X, B0, xi, Y, alpha, beta, mu)
    return FiberedAction(X, B0, xi)


def category_from_json(d):
    try:
        comp = {(g, f): h for g, f, h in d["comp"]}
        return ConcreteCategory(d["objects"], d["dom"], d["cod"],
                                d["ident"], comp)
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInput("category file needs objects/dom/cod/ident/comp: %s"
                       % exc)


# ---------------------------------------------------------------------------
# witness bundles: replayable records of search results


def a2_witness_to_json(p, q, top, note=""):
    """Six structures, five morphisms, one verdict line."""
    return {
        "witness": "a2-counterexample",
        "structures": {
            "A": structure_to_json(p.A), "B": structure_to_json(p.B),
            "K": structure_to_json(p.K),
            "A2": structure_to_json(q.A), "B2": structure_to_json(q.B),
            "K2": structure_to_json(q.K)},
        "morphisms": {
            "alpha": list(p.alpha.map), "beta": list(p.beta.map),
            "alpha2": list(q.alpha.map), "beta2": list(q.beta.map),
            "top": list(top.map)},
        "verdict": note or "kernel and base maps invertible, middle not",
    }


def replay_a2_witness(d):
    """Reconstruct the two points and re-judge the middle morphism."""
    try:
        s, ms = d["structures"], d["morphisms"]
        p = SplitEpi(structure_from_json(s["A"]),
                     structure_from_json(s["B"]),
                     Morphism(structure_from_json(s["A"]),
                              structure_from_json(s["B"]), ms["alpha"]),
                     Morphism(structure_from_json(s["B"]),
                              structure_from_json(s["A"]), ms["beta"]))
        q = SplitEpi(structure_from_json(s["A2"]),
                     structure_from_json(s["B2"]),
                     Morphism(structure_from_json(s["A2"]),
                              structure_from_json(s["B2"]), ms["alpha2"]),
                     Morphism(structure_from_json(s["B2"]),
                              structure_from_json(s["A2"]), ms["beta2"]))
        top = Morphism(p.A, q.A, ms["top"])
    except (KeyError, TypeError) as exc:
        raise BadInput("bad counterexample witness: %s" % exc)
    v = Verdict()
    v.record("kernels-match", p.K == structure_from_json(s["K"]) and
             q.K == structure_from_json(s["K2"]))
    pm = point_morphism_of_maps(p, q, top)
    v.record("square-morphism", pm is not None)
    if pm is not None:
        v.record("kernel-map-invertible", pm.restricted.is_bijective())
        v.record("base-map-invertible", pm.bottom.is_bijective())
        v.record("middle-not-invertible", not pm.top.is_bijective())
    return v


def joint_epic_witness_to_json(B0, T, phi, psi):
    return {
        "witness": "joint-epic-failure",
        "B": structure_to_json(B0), "T": structure_to_json(T),
        "phi": list(phi.map), "psi": list(psi.map),
        "verdict": "two morphisms out of B x B agree on the legs "
                   "(x, 0) and (x, x) yet differ",
    }


def replay_joint_epic_witness(d):
    from .halfrefl import _raw_product
    try:
        B0 = structure_from_json(d["B"])
        T = structure_from_json(d["T"])
        phi_map, psi_map = d["phi"], d["psi"]
    except (KeyError, TypeError) as exc:
        raise BadInput("bad joint-epic witness: %s" % exc)
    P = _raw_product(B0)
    phi = Morphism(P, T, phi_map, check=False)
    psi = Morphism(P, T, psi_map, check=False)
    n = B0.order
    v = Verdict()
    v.record("phi-homomorphism", phi.verdict().ok)
    v.record("psi-homomorphism", psi.verdict().ok)
    v.record("legs-agree", all(
        phi.map[b * n] == psi.map[b * n] and
        phi.map[b * n + b] == psi.map[b * n + b] for b in range(n)))
    v.record("maps-differ", phi.map != psi.map)
    return v


def peiffer_witness_to_json(px, pair):
    out = pxm_to_json(px)
    out["witness"] = "peiffer-failure"
    out["pair"] = list(pair)
    out["verdict"] = "the peiffer identity fails at this element pair"
    return out


def replay_peiffer_witness(d):
    px = pxm_from_json(d, check=True)
    try:
        x, y = d["pair"]
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInput("bad peiffer witness: %s" % exc)
    v = Verdict()
    v.record("identity-fails-somewhere", not check_peiffer(px))
    h, X = px.h, px.X
    lhs = px.action.act[h.map[x]][y]
    rhs = X.op(X.op(x, y), X.inverse(x))
    v.record("fails-at-recorded-pair", lhs != rhs, witness=(x, y, lhs, rhs))
    return v


WITNESS_REPLAYERS = {
    "a2-counterexample": replay_a2_witness,
    "joint-epic-failure": replay_joint_epic_witness,
    "peiffer-failure": replay_peiffer_witness,
}


def replay_witness(d):
    kind = d.get("witness")
    if kind not in WITNESS_REPLAYERS:
        raise BadInput("unknown witness kind %r" % kind)
    return WITNESS_REPLAYERS[kind](d)


def corpus_to_json(kind, max_size):
    from .corpus import enumerate_structures
    items = enumerate_structures(kind, max_size)
    return {"kind": kind, "max_size": max_size,
            "provenance": "enumerate_structures(%r, %d)" % (kind, max_size),
            "items": [structure_to_json(x) for x in items]}
