"""Named verification campaigns with JSON reports and witness files.

Each campaign is a registered runner over the deterministic corpora; a
report lists one line per check with the bound used, and every check
that produces a search witness stores it in a replayable file.  The
runner is sequential so that reports are reproducible line-for-line.
"""

import os
import time

from . import serialize
from .corpus import (abelian_groups, groups, pointed_sets, unital_magmas)
from .errors import BadInput
from .structures import (ABELIAN_GROUP, GROUP, POINTED_SET, UNITAL_MAGMA,
                         Morphism, homomorphisms, kinds_compatible,
                         pointed_maps, pointed_set, morphism_space)


class Campaign:
    """A named runner plus its default size bound."""

    def __init__(self, name, description, default_size, runner):
        self.name = name
        self.description = description
        self.default_size = default_size
        self.runner = runner


CAMPAIGNS = {}


def _campaign(name, description, default_size):
    def deco(fn):
        CAMPAIGNS[name] = Campaign(name, description, default_size, fn)
        return fn
    return deco


def _check(name, ok, **extra):
    out = {"name": name, "ok": bool(ok)}
    out.update(extra)
    return out


def _write_witness(out_dir, fname, payload):
    if out_dir is None:
        return None
    os.makedirs(out_dir, exist_ok=True)
    return serialize.save_json(os.path.join(out_dir, fname), payload)


# ---------------------------------------------------------------------------
# pointed sets: kernel axiom and the failure of the second axiom


@_campaign("a1-ptset", "inj1 is the kernel of the wedge projection "
           "for all pointed sets up to the bound", 5)
def _run_a1_ptset(max_size, out_dir, manifest=None):
    from .points import check_A1
    sources = pointed_sets(max_size)
    bad = []
    count = 0
    for X in pointed_sets(max_size):
        for B in pointed_sets(max_size):
            count += 1
            if not check_A1(X, B, sources):
                bad.append((X.order, B.order))
    return [_check("kernel-universal-property", not bad,
                   pairs=count, failures=bad)]


@_campaign("ptset-a2-cex", "the split five lemma fails in pointed sets; "
           "the campaign asserts a counterexample exists and replays it", 4)
def _run_ptset_a2(max_size, out_dir, manifest=None):
    from .points import search_A2_counterexample
    pm = search_A2_counterexample(POINTED_SET, max_size)
    checks = [_check("counterexample-exists", pm is not None)]
    if pm is not None:
        payload = serialize.a2_witness_to_json(pm.source, pm.target, pm.top)
        path = _write_witness(out_dir, "a2-witness.json", payload)
        v = serialize.replay_a2_witness(payload)
        checks.append(_check("witness-replays", v.ok,
                             witness_file=path,
                             laws=[l for l, ok, _ in v.results]))
    return checks


@_campaign("grp-a2", "the split five lemma holds over groups up to the "
           "bound (isomorphism-class representatives)", 12)
def _run_grp_a2(max_size, out_dir, manifest=None):
    from .points import all_split_epis, dedup_points, verify_split_five_lemma
    pts = all_split_epis(groups(max_size))
    reps = dedup_points(pts)
    v = verify_split_five_lemma(reps, expect_pass=True)
    return [_check("split-five-lemma", v.ok, points=len(pts),
                   classes=len(reps), diagrams=v.diagrams_checked)]


# ---------------------------------------------------------------------------
# abelian groups: comparison isomorphism and both round trips


@_campaign("th2-ab", "comparison isos and graph/chain round trips over "
           "abelian groups up to the bound", 8)
def _run_th2_ab(max_size, out_dir, manifest=None):
    from .points import all_split_epis, comparison_iso
    from .additive import (all_2chains, chain_from_precat,
                           precat_from_2chain, rg_from_morphism,
                           morphism_from_rg, rg_roundtrip_certificate,
                           precat_roundtrip_certificate,
                           validate_precategory)
    from .graphs import ReflexiveGraph
    from .structures import compose
    ab = abelian_groups(max_size)
    checks = []

    pts = all_split_epis(ab)
    bad = [p.key() for p in pts if not comparison_iso(p)[1]]
    checks.append(_check("comparison-iso", not bad, points=len(pts),
                         failures=bad[:3]))

    rg_count, rg_bad = 0, 0
    for X in ab:
        for B0 in ab:
            for h in homomorphisms(X, B0):
                g = rg_from_morphism(h)
                h2, cert = morphism_from_rg(g)
                if h2.map != h.map or not cert.is_bijective():
                    rg_bad += 1
                rg_count += 1
    checks.append(_check("morphism-graph-round-trip", rg_bad == 0,
                         instances=rg_count))

    grf_count, grf_bad = 0, 0
    for p in pts:
        for cmap in homomorphisms(p.A, p.B):
            if compose(cmap, p.beta).is_identity():
                g = ReflexiveGraph(p.B, p.A, p.alpha, cmap, p.beta)
                h, rebuilt, gm = rg_roundtrip_certificate(g)
                grf_count += 1
                if not gm.is_isomorphism():
                    grf_bad += 1
    checks.append(_check("graph-morphism-round-trip", grf_bad == 0,
                         instances=grf_count))

    chains = all_2chains(ab, homomorphisms)
    cap = 32
    comp = lambda ch: ch.Z.order * ch.X.order * ch.B.order
    small = [ch for ch in chains if comp(ch) <= cap]
    mid = [ch for ch in chains if cap < comp(ch) <= 5 * cap]
    sample = mid[::max(1, len(mid) // 12)] if mid else []
    showcase = [next(ch for ch in chains if comp(ch) == n)
                for n in (192, 256) if any(comp(ch) == n for ch in chains)]
    ch_bad = law_bad = law_count = 0
    for i, ch in enumerate(small + sample + showcase):
        P = precat_from_2chain(ch)
        if i % 25 == 0 and comp(ch) <= cap:
            law_count += 1
            law_bad += not validate_precategory(P).ok
        ch2, certs = chain_from_precat(P, check=False)
        if ch2.t.map != ch.t.map or ch2.h.map != ch.h.map \
                or ch2.Z != ch.Z or ch2.X != ch.X or ch2.B != ch.B:
            ch_bad += 1
    checks.append(_check("chain-precat-round-trip", ch_bad == 0,
                         exhaustive=len(small),
                         sampled=len(sample) + len(showcase),
                         composite_cap=cap, total_chains=len(chains)))
    checks.append(_check("precat-laws", law_bad == 0, instances=law_count))

    pc_bad = 0
    pcs = [precat_from_2chain(ch) for ch in small if comp(ch) <= 16][::5]
    for P in pcs:
        chain, rebuilt, pm = precat_roundtrip_certificate(P, check=False)
        if not pm.is_isomorphism():
            pc_bad += 1
    checks.append(_check("precat-certificate-iso", pc_bad == 0,
                         instances=len(pcs)))
    return checks


# ---------------------------------------------------------------------------
# pointed-set models


@_campaign("star-ptset", "the star precategory is internal exactly when "
           "the kernel is trivial; the emitted category obeys the laws", 5)
def _run_star(max_size, out_dir, manifest=None):
    from .ptset_models import StarPresentation, star_precategory, star_category
    from .graphs import is_internal_category
    from .errors import KernelNotTrivial
    count, bad = 0, []
    for nX in range(1, max_size + 1):
        for nB in range(1, max_size + 1):
            X, B0 = pointed_set(nX), pointed_set(nB)
            for h in pointed_maps(X, B0):
                s = StarPresentation(h)
                P = star_precategory(s)
                verdict = is_internal_category(P)
                trivial_ker = all(h.map[x] != 0 for x in range(1, nX))
                count += 1
                if verdict.is_pullback != trivial_ker:
                    bad.append(("pullback", h.map))
                    continue
                if trivial_ker:
                    cat = star_category(s)
                    if not cat.validate().ok:
                        bad.append(("laws", h.map))
                else:
                    try:
                        star_category(s)
                        bad.append(("no-raise", h.map))
                    except KernelNotTrivial:
                        pass
    return [_check("star-pullback-iff-trivial-kernel", not bad,
                   instances=count, failures=bad[:3])]


@_campaign("product-model", "the xor instance passes every law and every "
           "single-entry mutation is detected", 0)
def _run_product_model(max_size, out_dir, manifest=None):
    from .ptset_models import (FiberedAction, mu_associative,
                               product_model_category, validate_fibered_action,
                               xor_action)
    from .errors import LawViolation, BadInput as _BI
    f = xor_action()
    ok_laws = validate_fibered_action(f).ok
    ok_assoc = mu_associative(f)[0]
    cat = product_model_category(f)
    checks = [_check("xor-laws", ok_laws),
              _check("xor-associative", ok_assoc),
              _check("xor-category", cat.validate().ok)]

    def detected(mut):
        try:
            v = validate_fibered_action(mut)
            if not v.ok:
                return True
            if not mu_associative(mut)[0]:
                return True
            return not product_model_category(mut).validate().ok
        except (LawViolation, _BI):
            return True

    total, caught = 0, 0
    nX, nB = f.X.order, f.B.order
    for x in range(nX):
        for b in range(nB):
            for val in range(nX):
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
    checks.append(_check("mutation-detection", caught == total,
                         mutations=total, caught=caught))
    return checks


# ---------------------------------------------------------------------------
# group actions


@_campaign("act-pt-equivalence", "actions and points over groups are "
           "equivalent up to the bound; semidirect axioms hold", 12)
def _run_act_pt(max_size, out_dir, manifest=None):
    from .group_actions import (all_actions, check_semidirect_axioms,
                                comparison_ts, functor_S_act, functor_T_act)
    from .points import all_split_epis, dedup_points
    checks = []
    st_bad, st_count = 0, 0
    ax_bad = []
    gs = groups(max_size)
    for X in gs:
        for B0 in gs:
            if X.order * B0.order > max_size:
                continue
            for a in all_actions(X, B0):
                p = functor_T_act(a)
                back = functor_S_act(p)
                st_count += 1
                if back.act != a.act or back.X.table != a.X.table \
                        or not kinds_compatible(back.X.kind, a.X.kind) \
                        or back.B is not a.B:
                    st_bad += 1
                av = check_semidirect_axioms(p)
                if not av.ok:
                    ax_bad.append((X.order, B0.order, av.failures))
    checks.append(_check("s-after-t-identity", st_bad == 0,
                         actions=st_count))
    checks.append(_check("semidirect-axioms", not ax_bad,
                         actions=st_count, failures=ax_bad[:3]))

    ts_bad, ts_count = 0, 0
    for p in dedup_points(all_split_epis(gs)):
        phi, ok = comparison_ts(p)
        ts_count += 1
        if not ok:
            ts_bad += 1
    checks.append(_check("t-after-s-iso", ts_bad == 0, points=ts_count))
    return checks


@_campaign("peiffer", "conjugation precrossed modules satisfy the peiffer "
           "identity; the S3-over-trivial instance fails at (1, 2)", 8)
def _run_peiffer(max_size, out_dir, manifest=None):
    from .corpus import symmetric_group_3
    from .group_actions import (GroupAction, PreCrossedModule, check_peiffer,
                                normal_subgroups, peiffer_failure,
                                trivial_action)
    from .structures import substructure, trivial, zero_morphism
    conj_count, conj_bad = 0, []
    for G in groups(max_size):
        for elems in normal_subgroups(G):
            N, k = substructure(G, elems)
            idx = {v: i for i, v in enumerate(k.map)}
            act = [[idx[G.op(G.op(g, k.map[x]), G.inverse(g))]
                    for x in range(N.order)] for g in range(G.order)]
            px = PreCrossedModule(GroupAction(N, G, act), k)
            conj_count += 1
            if not check_peiffer(px):
                conj_bad.append((G.name, elems))
    checks = [_check("conjugation-instances-pass", not conj_bad,
                     instances=conj_count, failures=conj_bad[:3])]

    s3 = symmetric_group_3()
    from .structures import cyclic_group
    px = PreCrossedModule(trivial_action(s3, cyclic_group(1)),
                          zero_morphism(s3, cyclic_group(1)))
    pair = peiffer_failure(px)
    ok = pair == (1, 2)
    path = None
    if pair is not None:
        payload = serialize.peiffer_witness_to_json(px, pair)
        path = _write_witness(out_dir, "peiffer-witness.json", payload)
        ok = ok and serialize.replay_peiffer_witness(payload).ok
    checks.append(_check("s3-trivial-fails-at-1-2", ok, pair=pair,
                         witness_file=path))
    return checks


@_campaign("chaincomp", "five-condition chain data passes on conjugation "
           "and trivial-action chains; tampering is caught", 8)
def _run_chaincomp(max_size, out_dir, manifest=None):
    from .group_actions import (ChainCompData, GroupAction,
                                conjugation_chaincomp, normal_subgroups,
                                validate_chaincomp)
    from .additive import all_2chains
    checks = []
    conj_count, conj_bad = 0, 0
    tampered, caught = 0, 0
    for G in groups(max_size):
        for elems in normal_subgroups(G):
            d = conjugation_chaincomp(G, elems)
            conj_count += 1
            if not validate_chaincomp(d).ok:
                conj_bad += 1
                continue
            if G.order <= 6:
                nr = len(d.xiF.act)
                nc = len(d.xiF.act[0])
                for r in range(nr):
                    for c in range(nc):
                        for val in range(d.Z.order * d.X.order):
                            if val == d.xiF.act[r][c]:
                                continue
                            act = [list(row) for row in d.xiF.act]
                            act[r][c] = val
                            mut = ChainCompData(
                                d.Z, d.X, d.B, d.t, d.h, d.xiX, d.xiZ,
                                GroupAction(d.xiF.X, d.xiF.B, act,
                                            check=False), check=False)
                            tampered += 1
                            caught += not validate_chaincomp(mut).ok
    checks.append(_check("conjugation-chains-pass", conj_bad == 0,
                         instances=conj_count))
    checks.append(_check("xiF-tamper-detection", tampered == caught,
                         mutations=tampered, caught=caught))

    ab_count, ab_bad = 0, 0
    for ch in all_2chains(abelian_groups(min(max_size, 4)), homomorphisms):
        Z, X, B0 = ch.Z, ch.X, ch.B
        xiX = GroupAction(X, B0, [[x for x in range(X.order)]
                                  for _ in range(B0.order)])
        xiZ = GroupAction(Z, X, [[z for z in range(Z.order)]
                                 for _ in range(X.order)])
        from .group_actions import semidirect_product
        FZ = semidirect_product(xiZ)
        FX = semidirect_product(xiX)
        xiF = GroupAction(FZ.A, FX.A, [[y for y in range(FZ.A.order)]
                                       for _ in range(FX.A.order)])
        d = ChainCompData(Z, X, B0, ch.t, ch.h, xiX, xiZ, xiF)
        ab_count += 1
        if not validate_chaincomp(d).ok:
            ab_bad += 1
    checks.append(_check("trivial-action-chains-pass", ab_bad == 0,
                         instances=ab_count))
    return checks


# ---------------------------------------------------------------------------
# half-reflections


DEFAULT_HALFREFL_MANIFEST = {
    "registrations": [
        {"name": "pairs", "kind": "pointed-set", "max_size": 3},
        {"name": "pairs", "kind": "abelian-group", "max_size": 4},
        {"name": "points", "kind": "pointed-set", "max_size": 3},
        {"name": "points", "kind": "abelian-group", "max_size": 4},
        {"name": "actions", "max_size": 6},
        {"name": "magma-A", "max_size": 3},
    ],
    "theorem1": [
        {"kind": "pointed-set", "max_size": 4},
        {"kind": "abelian-group", "max_size": 5},
        {"kind": "group", "max_size": 5},
        {"kind": "unital-magma", "max_size": 4},
    ],
    "magma_legs_max_size": 5,
}


def _build_registration(spec):
    from . import halfrefl
    name = spec.get("name")
    size = spec.get("max_size", 3)
    if name == "pairs":
        return halfrefl.pairs_registration(spec["kind"], size)
    if name == "points":
        return halfrefl.points_registration(spec["kind"], size)
    if name == "actions":
        return halfrefl.actions_registration(size)
    if name == "magma-A":
        return halfrefl.magma_subcategory_A(unital_magmas(size))
    raise BadInput("unknown registration %r" % name)


@_campaign("halfrefl", "half-reflection laws, adjunction triangles, "
           "theorem-1 uniqueness, the seven-equation translation on "
           "starred instances, and the magma leg scan", 0)
def _run_halfrefl(max_size, out_dir, manifest=None):
    from . import halfrefl
    man = manifest or DEFAULT_HALFREFL_MANIFEST
    checks = []
    for spec in man.get("registrations", []):
        reg = _build_registration(spec)
        label = reg.name
        hv = halfrefl.check_halfreflection(reg.hr, reg.A.objects)
        checks.append(_check(label + "-laws", hv.ok,
                             objects=len(reg.A.objects),
                             failures=hv.failures[:2]))
        if reg.adj is not None:
            av = halfrefl.check_adjunction(reg.hr, reg.adj)
            checks.append(_check(label + "-adjunction", av.ok))
        if reg.J is not None:
            jv = reg.notes.get("j-verdict")
            checks.append(_check(label + "-bracket-functor",
                                 jv is not None and jv.ok,
                                 scanned=getattr(jv, "scanned", None)))
        if reg.adj is not None:
            a1, a2, a2s = halfrefl.build_A1_A2(reg)
            consistent = True
            starred = 0
            for item in a2s:
                rp = halfrefl.restricted_precat_from_A2star(reg, item)
                cv = halfrefl.check_c1_c7(rp)
                rows = halfrefl.translation_table(rp)
                starred += 1
                if not cv.ok or not halfrefl.translation_consistent(rows):
                    consistent = False
            checks.append(_check(label + "-translation", consistent,
                                 a1=len(a1), a2=len(a2), a2star=starred))
    for spec in man.get("theorem1", []):
        v = halfrefl.verify_theorem1(spec["kind"], spec["max_size"])
        checks.append(_check("theorem1-" + spec["kind"], v.ok,
                             lifts=getattr(v, "checked", None),
                             max_size=spec["max_size"]))
    legs_max = man.get("magma_legs_max_size", 5)
    bad = [B0.table for B0 in unital_magmas(legs_max)
           if not halfrefl.magma_legs_jointly_epic(B0)]
    checks.append(_check("magma-legs-jointly-epic", not bad,
                         max_size=legs_max, failures=bad[:2]))
    return checks


@_campaign("magma-joint-epic", "witness that the legs fail without right "
           "cancellation; no split epi is excluded with it", 4)
def _run_magma_joint_epic(max_size, out_dir, manifest=None):
    from . import halfrefl
    w = halfrefl.search_joint_epic_failure(3)
    checks = [_check("failure-witness-exists", w is not None)]
    if w is not None:
        B0, T, phi, psi = w
        payload = serialize.joint_epic_witness_to_json(B0, T, phi, psi)
        path = _write_witness(out_dir, "joint-epic-witness.json", payload)
        v = serialize.replay_joint_epic_witness(payload)
        checks.append(_check("witness-replays", v.ok, witness_file=path))
    excl, scanned = halfrefl.search_excluded_split_epi(min(max_size, 4))
    checks.append(_check("no-excluded-split-epi", excl is None,
                         scanned=scanned))
    return checks


# ---------------------------------------------------------------------------
# runner and rendering


CAMPAIGN_ALIASES = {"act-pt-grp": "act-pt-equivalence"}


def run_campaign(name, max_size=None, out_dir=None, manifest=None):
    """Execute one campaign and return its report dictionary."""
    name = CAMPAIGN_ALIASES.get(name, name)
    if name not in CAMPAIGNS:
        raise BadInput("unknown campaign %r (have: %s)"
                       % (name, ", ".join(sorted(CAMPAIGNS))))
    camp = CAMPAIGNS[name]
    eff = camp.default_size if max_size is None \
        else min(camp.default_size, max_size) if camp.default_size else 0
    t0 = time.time()
    checks = camp.runner(eff, out_dir, manifest)
    return {
        "campaign": name,
        "description": camp.description,
        "bounds": {"max_size": eff},
        "checks": checks,
        "pass": all(c["ok"] for c in checks),
        "wall_clock": round(time.time() - t0, 3),
    }


def run_all(max_size=None, out_dir=None, manifest=None):
    """Every campaign in registration order; aggregated report."""
    reports = [run_campaign(n, max_size, out_dir, manifest)
               for n in CAMPAIGNS]
    return {
        "campaign": "all",
        "reports": reports,
        "pass": all(r["pass"] for r in reports),
        "wall_clock": round(sum(r["wall_clock"] for r in reports), 3),
    }


def render_report(report):
    """Plain-text rendering of a single or aggregated report."""
    lines = []
    if "reports" in report:
        for sub in report["reports"]:
            lines.extend(render_report(sub))
            lines.append("")
        lines.append("ALL: %s (%.1fs)"
                     % ("PASS" if report["pass"] else "FAIL",
                        report["wall_clock"]))
        return lines
    lines.append("campaign %s (max size %s, %.1fs): %s"
                 % (report["campaign"], report["bounds"]["max_size"],
                    report["wall_clock"],
                    "PASS" if report["pass"] else "FAIL"))
    for c in report["checks"]:
        extras = {k: v for k, v in c.items() if k not in ("name", "ok")
                  and v not in (None, [], {})}
        note = ("  " + " ".join("%s=%s" % kv for kv in sorted(extras.items()))
                ) if extras else ""
        lines.append("  %-34s %s%s"
                     % (c["name"], "PASS" if c["ok"] else "FAIL", note))
    return lines
