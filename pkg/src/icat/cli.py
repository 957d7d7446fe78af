"""Command-line interface: check bundles, build constructions, classify
across the equivalences, search for witnesses, run campaigns, render
reports.  Exit codes: 0 pass, 1 failed check, 2 bad input, 3 unsupported
construction."""

import argparse
import os
import random
import sys

from . import campaigns, serialize
from .errors import (
    BadInput,
    BoundTooLarge,
    ChainConditionViolated,
    ComparisonNotIso,
    ConjugationEscapesKernel,
    IcatError,
    InvalidAction,
    InvalidDiagram,
    InvalidMorphism,
    InvalidStructure,
    KernelNotTrivial,
    KindMismatch,
    LawViolation,
    NotSplit,
    RightCancellationViolated,
    UnsupportedCoproduct,
)
from .structures import (
    Morphism,
    Verdict,
    closure,
    compose,
    kinds_compatible,
    permute_structure,
)

EXIT_OK, EXIT_FAIL, EXIT_BAD_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3

UNSUPPORTED_ERRORS = (
    UnsupportedCoproduct,
    KernelNotTrivial,
    KindMismatch,
    ChainConditionViolated,
    RightCancellationViolated,
    ConjugationEscapesKernel,
    BoundTooLarge,
    LawViolation,
)


def _pf(ok):
    return "PASS" if ok else "FAIL"


def _emit(args, payload, default_name=None):
    """Write payload JSON to --out (or a default file name) if present."""
    path = args.out
    if path is None and default_name is not None:
        path = default_name
    if path is None:
        return None
    serialize.save_json(path, payload)
    print("wrote %s" % path)
    return path


def _perm(rng, n):
    rest = list(range(1, n))
    rng.shuffle(rest)
    return [0] + rest


def _permuted_morphism(f, ps, pt):
    src = permute_structure(f.source, ps)
    tgt = permute_structure(f.target, pt)
    fmap = [0] * len(f.map)
    for x, v in enumerate(f.map):
        fmap[ps[x]] = pt[v]
    return Morphism(src, tgt, fmap, check=False)


# ---------------------------------------------------------------------------
# check


def _point_verdict(p):
    v = Verdict()
    v.record("kinds", kinds_compatible(p.A.kind, p.B.kind))
    v.record("alpha-morphism", p.alpha.verdict().ok)
    v.record("beta-morphism", p.beta.verdict().ok)
    if not v.ok:
        return v
    v.record("section", compose(p.alpha, p.beta).is_identity())
    return v


def _check_structure(d, rng):
    X = serialize.structure_from_json(d, check=False)
    try:
        X.validate()
        ok, why = True, None
    except InvalidStructure as exc:
        ok, why = False, exc
    print("structure kind=%s order=%d: %s" % (X.kind, X.order, _pf(ok)))
    if not ok:
        print("  %s" % why)
    elif rng is not None and X.order > 1:
        try:
            permute_structure(X, _perm(rng, X.order))
            ok2 = True
        except InvalidStructure:
            ok2 = False
        print("  relabelled copy: %s" % _pf(ok2))
        return ok2
    return ok


def _check_morphism(d, rng):
    f = serialize.morphism_from_json(d, check=False)
    v = f.verdict()
    print("morphism %d -> %d: %s"
          % (f.source.order, f.target.order, _pf(v.ok)))
    if v.ok and rng is not None:
        g = _permuted_morphism(f, _perm(rng, f.source.order),
                               _perm(rng, f.target.order))
        ok2 = g.verdict().ok
        print("  relabelled copy: %s" % _pf(ok2))
        return ok2
    return v.ok


def _check_point(d, rng):
    p = serialize.point_from_json(d, check=False)
    v = _point_verdict(p)
    print("split epi %d -> %d: %s" % (p.A.order, p.B.order, _pf(v.ok)))
    if v.ok:
        print("  kernel order %d" % p.K.order)
    else:
        print("  first failure: %r" % (v.first_failure,))
    if v.ok and rng is not None:
        from .points import SplitEpi
        pa, pb = _perm(rng, p.A.order), _perm(rng, p.B.order)
        alpha = _permuted_morphism(p.alpha, pa, pb)
        beta = _permuted_morphism(p.beta, pb, pa)
        q = SplitEpi(alpha.source, beta.source, alpha, beta, check=False)
        ok2 = _point_verdict(q).ok
        print("  relabelled copy: %s" % _pf(ok2))
        return ok2
    return v.ok


def _check_rg(d, rng):
    g = serialize.rg_from_json(d, check=False)
    v = g.validate()
    print("reflexive graph C1=%d over C0=%d: %s"
          % (g.C1.order, g.C0.order, _pf(v.ok)))
    if not v.ok:
        print("  first failure: %r" % (v.first_failure,))
    elif rng is not None:
        from .graphs import ReflexiveGraph
        p0, p1 = _perm(rng, g.C0.order), _perm(rng, g.C1.order)
        g2 = ReflexiveGraph(permute_structure(g.C0, p0),
                            permute_structure(g.C1, p1),
                            _permuted_morphism(g.d, p1, p0),
                            _permuted_morphism(g.c, p1, p0),
                            _permuted_morphism(g.e, p0, p1), check=False)
        ok2 = g2.validate().ok
        print("  relabelled copy: %s" % _pf(ok2))
        return ok2
    return v.ok


def _check_precat(d, rng):
    from .graphs import is_internal_category, validate_precategory
    P = serialize.precat_from_json(d, check=False)
    v = validate_precategory(P)
    print("precategory C2=%d C1=%d C0=%d: %s"
          % (P.C2.order, P.C1.order, P.C0.order, _pf(v.ok)))
    if v.ok:
        iv = is_internal_category(P)
        print("  internal category: pullback=%s associative=%s"
              % (iv.is_pullback, iv.is_associative))
    else:
        print("  first failure: %r" % (v.first_failure,))
    return v.ok


def _check_action(d, rng):
    a = serialize.action_from_json(d, check=False)
    v = a.validate()
    print("action of order-%d group on order-%d group: %s"
          % (a.B.order, a.X.order, _pf(v.ok)))
    if not v.ok:
        print("  first failure: %r" % (v.first_failure,))
    elif rng is not None:
        from .group_actions import GroupAction
        px, pb = _perm(rng, a.X.order), _perm(rng, a.B.order)
        act = [[0] * a.X.order for _ in range(a.B.order)]
        for b in range(a.B.order):
            for x in range(a.X.order):
                act[pb[b]][px[x]] = px[a.act[b][x]]
        a2 = GroupAction(permute_structure(a.X, px),
                         permute_structure(a.B, pb), act, check=False)
        ok2 = a2.validate().ok
        print("  relabelled copy: %s" % _pf(ok2))
        return ok2
    return v.ok


def _check_peiffer(d, rng):
    from .group_actions import peiffer_failure
    px = serialize.pxm_from_json(d, check=False)
    v = px.validate()
    print("precrossed module %d -> %d: %s"
          % (px.X.order, px.B.order, _pf(v.ok)))
    if not v.ok:
        print("  first failure: %r" % (v.first_failure,))
        return False
    pair = peiffer_failure(px)
    print("  peiffer identity: %s%s"
          % (_pf(pair is None),
             "" if pair is None else "  fails at %r" % (pair,)))
    return pair is None


def _check_chaincomp(d, rng):
    from .group_actions import validate_chaincomp
    dd = serialize.chaincomp_from_json(d, check=False)
    v = validate_chaincomp(dd)
    print("chain complex with actions Z=%d X=%d B=%d: %s"
          % (dd.Z.order, dd.X.order, dd.B.order, _pf(v.ok)))
    for law, ok, wit in v.results:
        print("  %-24s %s%s" % (law, _pf(ok),
                                "" if wit is None else "  %r" % (wit,)))
    return v.ok


def _check_category(d, rng):
    cat = serialize.category_from_json(d)
    v = cat.validate()
    print("category with %d objects, %d arrows: %s"
          % (cat.n_objects, cat.n_arrows, _pf(v.ok)))
    if not v.ok:
        print("  first failure: %r" % (v.first_failure,))
    return v.ok


def _check_witness(d, rng):
    v = serialize.replay_witness(d)
    print("witness %s replay: %s" % (d.get("witness"), _pf(v.ok)))
    for law, ok, wit in v.results:
        print("  %-24s %s%s" % (law, _pf(ok),
                                "" if wit is None else "  %r" % (wit,)))
    return v.ok


CHECKERS = {
    "structure": _check_structure,
    "morphism": _check_morphism,
    "point": _check_point,
    "rg": _check_rg,
    "precat": _check_precat,
    "action": _check_action,
    "peiffer": _check_peiffer,
    "chaincomp": _check_chaincomp,
    "category": _check_category,
    "witness": _check_witness,
}

RELABELLING = {"structure", "morphism", "point", "rg", "action"}


def _cmd_check(args):
    d = serialize.load_json(args.file)
    rng = random.Random(args.seed) if args.seed is not None else None
    if rng is not None and args.kind not in RELABELLING:
        print("(seed ignored for %s bundles)" % args.kind)
        rng = None
    ok = CHECKERS[args.kind](d, rng)
    return EXIT_OK if ok else EXIT_FAIL


def _valid_morphism(d):
    f = serialize.morphism_from_json(d, check=False)
    if not f.verdict().ok:
        raise BadInput("morphism bundle violates its laws")
    return f


def _valid_point(d):
    p = serialize.point_from_json(d, check=False)
    if not _point_verdict(p).ok:
        raise BadInput("split-epi bundle violates its laws")
    return p


def _valid_action(d):
    a = serialize.action_from_json(d, check=False)
    if not a.validate().ok:
        raise BadInput("action bundle violates its laws")
    return a


def _valid_chain(d):
    ch = serialize.chain_from_json(d, check=False)
    if not ch.t.verdict().ok or not ch.h.verdict().ok:
        raise BadInput("chain bundle maps are not morphisms")
    return ch


# ---------------------------------------------------------------------------
# build


def _cmd_build(args):
    d = serialize.load_json(args.file)
    what = args.what
    if what == "star":
        from .ptset_models import (StarPresentation, star_category,
                                   star_precategory)
        s = StarPresentation(_valid_morphism(d))
        cat = star_category(s)
        payload = {"category": cat.to_json(),
                   "precat": serialize.precat_to_json(star_precategory(s))}
        print("star category: %d objects, %d arrows"
              % (cat.n_objects, cat.n_arrows))
        _emit(args, payload)
        return EXIT_OK
    if what == "product-model":
        from .ptset_models import (mu_associative, product_model_category,
                                   product_precategory,
                                   validate_fibered_action)
        f = serialize.fibered_from_json(d)
        v = validate_fibered_action(f)
        if not v.ok:
            raise BadInput("fibered action laws fail: %r"
                           % (v.first_failure,))
        if not f.has_mu:
            raise LawViolation("mu table needed to build the category")
        ok, wit = mu_associative(f)
        if not ok:
            raise LawViolation("mu not associative at %r" % (wit,))
        cat = product_model_category(f)
        payload = {"category": cat.to_json(),
                   "precat": serialize.precat_to_json(
                       product_precategory(f))}
        print("product-model category: %d objects, %d arrows"
              % (cat.n_objects, cat.n_arrows))
        _emit(args, payload)
        return EXIT_OK
    if what == "rg-from-h":
        from .additive import rg_from_morphism
        g = rg_from_morphism(_valid_morphism(d))
        print("reflexive graph on %d arrows over %d objects"
              % (g.C1.order, g.C0.order))
        _emit(args, serialize.rg_to_json(g))
        return EXIT_OK
    if what == "precat-from-chain":
        from .additive import precat_from_2chain
        P = precat_from_2chain(_valid_chain(d))
        print("precategory C2=%d C1=%d C0=%d"
              % (P.C2.order, P.C1.order, P.C0.order))
        _emit(args, serialize.precat_to_json(P))
        return EXIT_OK
    if what == "semidirect":
        from .group_actions import functor_T_act
        a = _valid_action(d)
        p = functor_T_act(a)
        print("semidirect split epi %d -> %d with kernel %d"
              % (p.A.order, p.B.order, p.K.order))
        _emit(args, serialize.point_to_json(p), default_name="splitepi.json")
        return EXIT_OK
    raise BadInput("unknown construction %r" % what)


# ---------------------------------------------------------------------------
# classify


def _classify_additive(d, args):
    from .additive import (chain_from_precat, morphism_from_rg,
                           precat_from_2chain, rg_from_morphism)
    if "C2" in d:
        from .graphs import validate_precategory
        P = serialize.precat_from_json(d, check=False)
        if not validate_precategory(P).ok:
            raise BadInput("precategory bundle violates its laws")
        ch, certs = chain_from_precat(P, check=False)
        payload = {"chain": serialize.chain_to_json(ch),
                   "certificates": {
                       lvl: serialize.morphism_to_json(certs[lvl])
                       for lvl in ("arrow", "pair", "vertex")}}
        print("precategory == 2-chain  Z=%d X=%d B=%d"
              % (ch.Z.order, ch.X.order, ch.B.order))
        _emit(args, payload)
        return EXIT_OK
    if "C1" in d:
        g = serialize.rg_from_json(d, check=False)
        if not g.validate().ok:
            raise BadInput("reflexive-graph bundle violates its laws")
        h, cert = morphism_from_rg(g)
        payload = {"morphism": serialize.morphism_to_json(h),
                   "certificate": serialize.morphism_to_json(cert)}
        print("reflexive graph == morphism  %d -> %d"
              % (h.source.order, h.target.order))
        _emit(args, payload)
        return EXIT_OK
    if "t" in d and "h" in d:
        P = precat_from_2chain(_valid_chain(d))
        print("2-chain == precategory  C2=%d C1=%d C0=%d"
              % (P.C2.order, P.C1.order, P.C0.order))
        _emit(args, serialize.precat_to_json(P))
        return EXIT_OK
    if "map" in d:
        g = rg_from_morphism(_valid_morphism(d))
        print("morphism == reflexive graph on %d arrows" % g.C1.order)
        _emit(args, serialize.rg_to_json(g))
        return EXIT_OK
    raise BadInput("bundle is none of precat / rg / chain / morphism")


def _classify_group(d, args):
    from .group_actions import comparison_ts, functor_S_act
    p = _valid_point(d)
    a = functor_S_act(p)
    phi, ok = comparison_ts(p)
    payload = {"action": serialize.action_to_json(a),
               "comparison": serialize.morphism_to_json(phi),
               "comparison_iso": ok}
    print("split epi == action of order-%d group on order-%d kernel"
          % (a.B.order, a.X.order))
    print("  comparison iso: %s" % _pf(ok))
    _emit(args, payload)
    return EXIT_OK if ok else EXIT_FAIL


def _classify_magma(d, args):
    p = _valid_point(d)
    generated = closure(p.A, set(p.k.map) | set(p.beta.map))
    epic = len(generated) == p.A.order
    payload = {"kernel_order": p.K.order,
               "jointly_epic_legs": epic,
               "generated": len(generated), "of": p.A.order}
    print("split epi %d -> %d: legs generate %d of %d  ->  %s"
          % (p.A.order, p.B.order, len(generated), p.A.order,
             "admitted" if epic else "excluded"))
    _emit(args, payload)
    return EXIT_OK


def _cmd_classify(args):
    d = serialize.load_json(args.file)
    if args.family == "additive":
        return _classify_additive(d, args)
    if args.family == "group":
        return _classify_group(d, args)
    if args.family == "magma":
        return _classify_magma(d, args)
    raise BadInput("unknown family %r" % args.family)


# ---------------------------------------------------------------------------
# search


def _cmd_search(args):
    target = args.target
    if target == "a2-counterexample":
        from .points import search_A2_counterexample
        from .structures import POINTED_SET
        bound = args.max_size or 4
        pm = search_A2_counterexample(POINTED_SET, bound)
        if pm is None:
            print("no counterexample up to size %d" % bound)
            return EXIT_FAIL
        payload = serialize.a2_witness_to_json(pm.source, pm.target, pm.top)
        print("split-five-lemma counterexample: middle %d -> %d"
              % (pm.source.A.order, pm.target.A.order))
        _emit(args, payload, default_name="a2-witness.json")
        return EXIT_OK
    if target == "peiffer-failure":
        from .corpus import groups
        from .group_actions import (GroupAction, PreCrossedModule,
                                    all_actions, peiffer_failure)
        from .structures import homomorphisms
        bound = args.max_size or 6
        for X in groups(bound):
            for B in groups(bound):
                for a in all_actions(X, B):
                    for h in homomorphisms(X, B):
                        px = PreCrossedModule(a, h, check=False)
                        if not px.validate().ok:
                            continue
                        pair = peiffer_failure(px)
                        if pair is None:
                            continue
                        print("peiffer fails for X=%d B=%d at %r"
                              % (X.order, B.order, pair))
                        payload = serialize.peiffer_witness_to_json(px, pair)
                        _emit(args, payload,
                              default_name="peiffer-witness.json")
                        return EXIT_OK
        print("no peiffer failure up to size %d" % bound)
        return EXIT_FAIL
    if target == "joint-epic-failure":
        from .halfrefl import search_joint_epic_failure
        bound = args.max_size or 3
        w = search_joint_epic_failure(bound)
        if w is None:
            print("no joint-epicness failure up to size %d" % bound)
            return EXIT_FAIL
        B0, T, phi, psi = w
        payload = serialize.joint_epic_witness_to_json(B0, T, phi, psi)
        print("legs fail to be jointly epic over a size-%d magma"
              % B0.order)
        _emit(args, payload, default_name="joint-epic-witness.json")
        return EXIT_OK
    raise BadInput("unknown search target %r" % target)


# ---------------------------------------------------------------------------
# verify and report


def _cmd_verify(args):
    name = args.campaign_pos or args.campaign
    if name is None:
        raise BadInput("name a campaign (or 'all')")
    manifest = None
    if args.manifest is not None:
        manifest = serialize.load_json(args.manifest)
    out_dir = args.out
    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
    if name == "all":
        report = campaigns.run_all(args.max_size, out_dir, manifest)
    else:
        report = campaigns.run_campaign(name, args.max_size, out_dir,
                                        manifest)
    print("\n".join(campaigns.render_report(report)))
    if out_dir is not None:
        path = os.path.join(out_dir, "report.json")
        serialize.save_json(path, report)
        print("wrote %s" % path)
    return EXIT_OK if report["pass"] else EXIT_FAIL


def _cmd_report(args):
    report = serialize.load_json(args.file)
    if "checks" not in report and "reports" not in report:
        raise BadInput("not a report file")
    print("\n".join(campaigns.render_report(report)))
    return EXIT_OK if report.get("pass") else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-size", "--max-order", dest="max_size",
                        type=int, default=None,
                        help="size bound for enumeration")
    common.add_argument("--seed", type=int, default=None,
                        help="randomized renumbering re-check")
    common.add_argument("--out", default=None,
                        help="output file (directory for verify)")

    ap = argparse.ArgumentParser(
        prog="icat",
        description="finite internal-category engine: check, build, "
                    "classify, search, verify, report")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common],
                       help="validate one JSON bundle")
    p.add_argument("kind", choices=sorted(CHECKERS))
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("build", parents=[common],
                       help="run a construction on a JSON bundle")
    p.add_argument("what", choices=["star", "product-model", "rg-from-h",
                                    "precat-from-chain", "semidirect"])
    p.add_argument("file")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("classify", parents=[common],
                       help="move a bundle across an equivalence")
    p.add_argument("family", choices=["additive", "group", "magma"])
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("search", parents=[common],
                       help="search for a counterexample witness")
    p.add_argument("target", choices=["a2-counterexample",
                                      "peiffer-failure",
                                      "joint-epic-failure"])
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", parents=[common],
                       help="run a verification campaign")
    p.add_argument("campaign_pos", nargs="?", default=None,
                   metavar="campaign",
                   help="campaign name or 'all'")
    p.add_argument("--campaign", default=None)
    p.add_argument("--manifest", default=None,
                   help="JSON manifest (halfrefl campaign)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("report", parents=[common],
                       help="render a saved report")
    p.add_argument("file")
    p.set_defaults(func=_cmd_report)
    return ap


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except BadInput as exc:
        print("bad input: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT
    except UNSUPPORTED_ERRORS as exc:
        print("unsupported construction: %s" % exc, file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (InvalidStructure, InvalidMorphism, InvalidDiagram, NotSplit,
            InvalidAction, LawViolation, ComparisonNotIso) as exc:
        print("input violates laws: %s" % exc, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
