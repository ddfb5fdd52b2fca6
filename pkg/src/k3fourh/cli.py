"""Command-line front end: verification suites and per-module commands.

Every suite returns a list of check records ``{id, anchor, status, details}``;
``anchor`` names the mathematical statement the check reproduces (or
``"plumbing"``).  The ``accept.*`` checks are one-to-one with the acceptance
criteria and aggregate the finer checks of their suite.

Exit codes: 0 when every non-skipped check passes, 1 when a check fails, 2 on
invalid input.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from . import __version__

SUITES = ("lattice", "fibration", "genericity", "gkz", "periods", "ks")

DEFAULT_TOLERANCES = {
    "bilinear": 1e-6,
    "fd1": 1e-5,
    "fd2": 1e-3,
    "homogeneity": 1e-4,
    "equivariance": 1e-6,
    "rank": 1e-8,
    "j": 1e-8,
    "j_square": 1e-10,
    "legendre": 1e-8,
    "dual_route": 1e-8,
}


class InputError(ValueError):
    """Invalid command-line input or configuration file (exit code 2)."""


@dataclass
class RunConfig:
    seed: int = 0
    cache_dir: Optional[str] = None
    tolerances: Dict[str, float] = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))


# ---------------------------------------------------------------------------
# report helpers
# ---------------------------------------------------------------------------

def check(cid: str, anchor: str, ok: Optional[bool], details=None) -> Dict:
    status = "skipped" if ok is None else ("pass" if ok else "fail")
    return {"id": cid, "anchor": anchor, "status": status, "details": _jsonable(details or {})}


def _jsonable(obj):
    """Convert to deterministic JSON-compatible data."""
    from fractions import Fraction
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return v if math.isfinite(v) else str(v)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, Fraction):
        return str(obj)
    if obj is None or isinstance(obj, str):
        return obj
    return str(obj)


def accept(cid: str, anchor: str, checks: Sequence[Dict]) -> Dict:
    ok = all(c["status"] == "pass" for c in checks)
    return check(cid, anchor, ok, {"checks": [c["id"] for c in checks]})


def make_report(checks: List[Dict], seed: int, suites: Sequence[str]) -> Dict:
    counts = {s: sum(c["status"] == s for c in checks) for s in ("pass", "fail", "skipped")}
    return {
        "toolkit": "k3fourh",
        "version": __version__,
        "seed": seed,
        "suites": list(suites),
        "summary": counts,
        "checks": checks,
    }


def exit_code(report: Dict) -> int:
    return 1 if report["summary"]["fail"] else 0


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def suite_lattice(cfg: RunConfig) -> List[Dict]:
    from . import lattice as la
    P, T = la.lattice_P(), la.lattice_T()
    dP, dT = la.discriminant(P), la.discriminant(T)
    sP, sT = la.signature(P), la.signature(T)
    gP, gT = la.discriminant_group(P), la.discriminant_group(T)
    basis = la.picard_basis_check()
    c1 = [
        check("lattice.discr_P", "discriminant of the Picard lattice is -2^8", dP == -256, {"value": dP}),
        check("lattice.discr_T", "discriminant of the transcendental lattice is 2^8", dT == 256, {"value": dT}),
        check("lattice.signature", "signatures of P and T add up to (3, 19)",
              (sP[0] + sT[0], sP[1] + sT[1]) == (3, 19), {"P": sP, "T": sT}),
        check("lattice.discriminant_groups", "A_P and A_T are both (Z/2)^8",
              gP.invariant_factors == (2,) * 8 and gT.invariant_factors == (2,) * 8,
              {"A_P": gP.invariant_factors, "A_T": gT.invariant_factors}),
        check("lattice.picard_basis", "explicit divisor basis has Gram D4^3 + <-2> + <2>", basis["ok"],
              {k: basis[k] for k in ("matches_D4^3+<-2>+<2>", "rank_gram18", "relation_p2_rank")}),
    ]
    cache = Path(cfg.cache_dir) / "glue.txt" if cfg.cache_dir else None
    h = la.load_or_find_glue(cache)
    vg = la.verify_glue(h)
    ov = la.overlattice_report(h)
    c2 = [
        check("lattice.glue", "maximal isotropic glue subgroup of A_P + A_T",
              vg["ok"] and vg["order"] == 256, vg),
        check("lattice.overlattice", "glued overlattice is even unimodular of signature (3, 19)", ov["ok"], ov),
    ]
    words = la.random_isometry_words(200, cfg.seed)
    disc = la.discriminant_group(T)
    agree = [la.is_in_G2(g) == la.acts_trivially_on_qT(g, disc=disc) for _, g in words]
    members = sum(la.is_in_G2(g) for _, g in words)
    refl = [la.reflection(v) for v in la.minus2_vectors()]
    c3 = [
        check("lattice.g2_equivalence", "G(2) equals the kernel of O(T) -> O(q_T)", all(agree),
              {"words": len(words), "members": members,
               "disagreements": [w for (w, _), a in zip(words, agree) if not a][:5]}),
        check("lattice.reflections_in_g2", "(-2)-reflections lie in G(2)",
              all(la.is_in_G2(r) for r in refl), {"reflections": len(refl)}),
    ]
    return (c1 + [accept("accept.lattice_constants", "lattice constants", c1)]
            + c2 + [accept("accept.glue", "gluing P and T", c2)]
            + c3 + [accept("accept.g2", "G(2) equivalence", c3)])


def suite_fibration(cfg: RunConfig) -> List[Dict]:
    from . import fibration as fb
    r = fb.fibration_report()
    defects_ok = all(v == [0, 0] or v == (0, 0) for d in (r["defects_gamma"], r["defects_c"])
                     for v in d.values())
    cs = [
        check("fibration.singular_values", "twelve singular fibres of the elliptic fibration",
              r["s_values"] == ["-12", "-8", "-1*sqrt19", "-4", "-2", "-1",
                                "1", "2", "4", "1*sqrt19", "8", "12"],
              {"s_values": r["s_values"], "labels": r["labels"]}),
        check("fibration.picard_lefschetz", "local monodromies are Picard-Lefschetz transvections",
              r["picard_lefschetz_ok"], {"t_matrices": r["t_matrices"], "vanishing_cycles": r["vanishing_cycles"]}),
        check("fibration.total_monodromy", "product of the local monodromies is the identity",
              bool(r["total_monodromy"]["identity_order"]), r["total_monodromy"]),
        check("fibration.closure", "Gamma and C chains are closed", defects_ok,
              {"gamma": r["defects_gamma"], "c": r["defects_c"]}),
        check("fibration.gram_gamma", "intersection matrix of the Gamma cycles", r["gram_gamma_matches"],
              {"gram_gamma": r["gram_gamma"]}),
        check("fibration.pairing_unimodular", "Gamma-C pairing is unimodular", abs(r["pairing_det"]) == 1,
              {"det": r["pairing_det"], "pairing": r["pairing_gamma_c"]}),
        check("fibration.pairing_entries", "tabulated Gamma-C pairing entries",
              r["matched_entries"] == r["validated_entries"] - len(r["pairing_mismatches"])
              and len(r["pairing_mismatches"]) <= 1 and r["validated_entries"] == 127,
              {"validated": r["validated_entries"], "matched": r["matched_entries"],
               "mismatches": r["pairing_mismatches"], "conventions": r["conventions"]}),
    ]
    return cs + [accept("accept.fibration", "elliptic fibration topology", cs)]


def suite_genericity(cfg: RunConfig) -> List[Dict]:
    from . import genericity as ge
    rep = ge.genericity_report()
    inv = rep["invariants"]
    mi = ge.verify_minor_identities(trials=100, seed=cfg.seed)
    cs = [
        check("genericity.reference_flags", "reference configuration is generic", rep["generic"], rep["flags"]),
        check("genericity.reference_invariants", "D(12)^2 - D(11)D(22) = 64 and D(123) = 900",
              str(inv["D(12)^2-D(11)D(22)"]) == "64" and str(inv["D(123)"]) == "900",
              {"D(12)^2-D(11)D(22)": inv["D(12)^2-D(11)D(22)"], "D(123)": inv["D(123)"]}),
        check("genericity.minor_identities", "4x4 minors of the characteristic matrix", mi["ok"], mi),
    ]
    return cs + [accept("accept.genericity", "genericity conditions", cs)]


def suite_gkz(cfg: RunConfig) -> List[Dict]:
    from . import gkz
    r = gkz.gkz_report(cfg.cache_dir)
    cs = [
        check("gkz.groebner", "toric Groebner basis for revlex", r["all_binomials_in_kernel"],
              {"size": r["groebner_size"], "degrees": r["groebner_degrees"]}),
        check("gkz.squarefree", "initial ideal generated by squarefree monomials", r["initial_squarefree"]),
        check("gkz.multiplicity", "multiplicity of the toric ideal is 20",
              r["multiplicity"] == 20 and r["normalized_volume"] == 20,
              {"stanley_reisner": r["multiplicity"], "normalized_volume": r["normalized_volume"]}),
        check("gkz.e2_membership", "second-order symbols lie in the toric ideal", r["e2_membership"]["ok"],
              r["e2_membership"]),
        check("gkz.euler_span", "scaling and GL2 x GL2 operators span the Euler operators",
              r["euler_span"]["ok"], r["euler_span"]),
    ]
    return cs + [accept("accept.gkz", "GKZ system", cs)]


def suite_periods(cfg: RunConfig) -> List[Dict]:
    from . import fibration as fb
    from . import periods as P
    tol = cfg.tolerances
    pv = P.period_vector()
    bil = check("periods.bilinear", "Riemann bilinear relations at the reference",
                pv.bilinear_residual() < tol["bilinear"] and pv.positivity() > 0,
                {"residual": pv.bilinear_residual(), "positivity": pv.positivity(),
                 "component_sign": pv.component_sign(),
                 "periods": pv.v, "eta": pv.eta})
    rng = np.random.default_rng(cfg.seed)
    near = []
    while len(near) < 5:
        try:
            q = P.period_vector(P.random_nearby(P.REFERENCE, 0.02, rng))
        except P.PeriodError:
            continue
        near.append({"residual": q.bilinear_residual(), "positivity": q.positivity(),
                     "component_sign": q.component_sign()})
    nearby = check("periods.bilinear_nearby", "bilinear relations at nearby generic points",
                   all(d["residual"] < tol["bilinear"] and d["positivity"] > 0 for d in near), {"points": near})
    res = P.pde_residuals("all", seed=cfg.seed)
    fd = [
        check("periods.fd_euler", "Euler operators annihilate the periods",
              max(res["euler"].values()) < tol["fd1"], res["euler"]),
        check("periods.fd_e1", "first-order GL2 x GL2 operators annihilate the periods",
              max(res["e1"].values()) < tol["fd1"], res["e1"]),
        check("periods.fd_e2", "second-order operators annihilate the periods",
              max(res["e2"].values()) < tol["fd2"], res["e2"]),
    ]
    ex = P.homogeneity_exponents()
    hom = check("periods.homogeneity", "u(lambda o x) = prod lambda_p^(-1/2) u(x)",
                float(np.max(np.abs(ex + 0.5))) < tol["homogeneity"],
                {"max_deviation": float(np.max(np.abs(ex + 0.5)))})
    eq = P.equivariance_errors(count=20, seed=cfg.seed)
    equi = check("periods.equivariance", "u(g x) = det(g)^-1 u(x)", eq["max"] < tol["equivariance"], eq)
    sv = P.independence_singular_values(seed=cfg.seed)
    rank = int(np.sum(sv > tol["rank"] * sv[0]))
    indep = check("periods.rank", "the eight periods are linearly independent", rank == 8,
                  {"singular_values": sv, "rank": rank})
    got, want = P.legendre_ratio(0.6)
    leg = check("periods.legendre_oracle", "fibre periods against the AGM elliptic integral",
                abs(got - want) < tol["legendre"] * abs(want), {"computed": got, "oracle": want})
    theta = P.thimble_integrals()
    dual = []
    for i in range(1, 9):
        for ch in (fb.build_gamma(i), fb.build_c(i)):
            a = P.period_over_chain(ch, method="thimble", theta=theta)
            b = P.period_over_chain(ch, method="direct")
            dual.append(abs(a - b))
    route = check("periods.dual_route", "thimble and direct integration agree",
                  max(dual) < tol["dual_route"], {"max_difference": max(dual)})
    cs = [bil, nearby] + fd + [hom, equi, indep, leg, route]
    return cs + [accept("accept.periods", "period integrals", cs)]


def suite_ks(cfg: RunConfig, etas=None) -> List[Dict]:
    from . import kuga_satake as ks
    tol = cfg.tolerances
    alg = ks.algebra_report(seed=cfg.seed)
    cen = ks.center_and_split()
    integ = ks.lattice_integrality()
    rr = ks.riemann_report(etas, seed=cfg.seed, tol=tol["j"])
    pts = rr["points"]
    cs = [
        check("ks.algebra", "even Clifford algebra of dimension 128", alg["ok"], alg),
        check("ks.center", "centre of dimension 2 with omega^2 = 16 and two 64-dimensional factors",
              cen["ok"] and cen["omega_squared"] == "16", cen),
        check("ks.m_eta0", "m(eta_0) = e1 e2 with square -1",
              rr["m_eta0_error"] < 1e-12 and rr["m_eta0_squared_plus_one"] < 1e-12,
              {k: rr[k] for k in ("m_eta0_error", "m_eta0_squared_plus_one")}),
        check("ks.j_square", "J^2 = -1", max(p["j_squared_defect"] for p in pts) < tol["j_square"],
              {"defects": [p["j_squared_defect"] for p in pts]}),
        check("ks.riemann_skew_invariant", "E is alternating and J-invariant",
              rr["skew_defect"] == 0 and integ["skew"] and max(p["j_invariance_defect"] for p in pts) < tol["j"],
              {"skew_defect": rr["skew_defect"], "invariance": [p["j_invariance_defect"] for p in pts]}),
        check("ks.riemann_definite", "E(x, Jx) has one sign on each component",
              all(p["definite_sign"] != 0 for p in pts) and rr["ok"],
              {"signs": [[p["component"], p["definite_sign"]] for p in pts],
               "sign_plus": rr["sign_plus"], "sign_minus": rr["sign_minus"]}),
        check("ks.integrality", "E is integral on the lattice C+(T)", integ["integral"], integ),
        check("ks.sigma", "sigma exchanges the two components",
              rr["sigma_component"] == -1, {"sigma_eta0": rr["sigma_eta0"]}),
    ]
    return cs + [accept("accept.ks", "Kuga-Satake construction", cs)]


SUITE_FUNCS: Dict[str, Callable[[RunConfig], List[Dict]]] = {
    "lattice": suite_lattice,
    "fibration": suite_fibration,
    "genericity": suite_genericity,
    "gkz": suite_gkz,
    "periods": suite_periods,
    "ks": suite_ks,
}


def _run_suite(args):
    name, cfg = args
    return SUITE_FUNCS[name](cfg)


def run_suites(names: Sequence[str], cfg: RunConfig, parallel: int = 1) -> Dict:
    if parallel > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as ex:
            results = list(ex.map(_run_suite, [(n, cfg) for n in names]))
    else:
        results = [_run_suite((n, cfg)) for n in names]
    checks = [c for r in results for c in r]
    return make_report(checks, cfg.seed, names)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    except ValueError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from e


def _load_config(path: Optional[str]):
    from . import genericity as ge
    if path is None:
        return ge.REFERENCE_CONFIG
    try:
        return ge.config_from_json(Path(path).read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    except ge.GenericityError as e:
        raise InputError(str(e)) from e


def _load_eta(path: str):
    data = _read_json(path)
    if not (isinstance(data, list) and len(data) == 8
            and all(isinstance(p, list) and len(p) == 2 for p in data)):
        raise InputError("eta must be a JSON array of 8 [re, im] pairs")
    try:
        return [complex(float(a), float(b)) for a, b in data]
    except (TypeError, ValueError) as e:
        raise InputError(f"invalid eta entry: {e}") from e


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for all randomized checks")
    common.add_argument("--cache", metavar="DIR", default=None,
                        help="cache directory (default: $TOOLKIT_CACHE or ~/.cache/k3fourh)")
    common.add_argument("--no-cache", action="store_true", help="recompute cached results")
    common.add_argument("--output", metavar="FILE", help="write the JSON report to FILE")
    common.add_argument("--json", action="store_true", help="print the JSON report to stdout")
    for name, val in DEFAULT_TOLERANCES.items():
        common.add_argument(f"--tol-{name.replace('_', '-')}", type=float, default=val, dest=f"tol_{name}",
                            help=f"tolerance (default {val:g})")

    p = argparse.ArgumentParser(prog="k3fourh", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"k3fourh {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--parallel", type=int, default=1, metavar="N", help="run suites in N processes")

    g = sub.add_parser("genericity", help="genericity of a four-curve configuration")
    gs = g.add_subparsers(dest="action", required=True)
    gc = gs.add_parser("check", parents=[common])
    gc.add_argument("--config", metavar="FILE", help="configuration JSON (default: the reference)")

    k = sub.add_parser("gkz", help="toric ideal computations")
    ks_ = k.add_subparsers(dest="action", required=True)
    for a in ("groebner", "multiplicity", "check-e2-membership"):
        ks_.add_parser(a, parents=[common])

    pe = sub.add_parser("periods", help="period integrals")
    ps = pe.add_subparsers(dest="action", required=True)
    pvec = ps.add_parser("vector", parents=[common])
    pvec.add_argument("--config", metavar="FILE")
    pbil = ps.add_parser("check-bilinear", parents=[common])
    pbil.add_argument("--config", metavar="FILE")
    ppde = ps.add_parser("check-pde", parents=[common])
    ppde.add_argument("--ops", choices=("euler", "e1", "e2", "all"), default="all")

    kk = sub.add_parser("ks", help="Kuga-Satake algebra")
    kks = kk.add_subparsers(dest="action", required=True)
    kks.add_parser("check-algebra", parents=[common])
    kr = kks.add_parser("check-riemann", parents=[common])
    kr.add_argument("--eta", metavar="FILE", help="JSON array of 8 [re, im] pairs (eps coordinates)")
    kks.add_parser("center", parents=[common])
    return p


def config_from_args(args) -> RunConfig:
    if args.no_cache:
        cache = None
    else:
        cache = args.cache or os.environ.get("TOOLKIT_CACHE") or str(Path.home() / ".cache" / "k3fourh")
    tols = {name: getattr(args, f"tol_{name}") for name in DEFAULT_TOLERANCES}
    for name, val in tols.items():
        if not (val > 0 and math.isfinite(val)):
            raise InputError(f"--tol-{name} must be positive")
    return RunConfig(seed=args.seed, cache_dir=cache, tolerances=tols)


def dispatch(args) -> Dict:
    cfg = config_from_args(args)
    cmd, action = args.command, getattr(args, "action", None)
    if cmd == "verify":
        names = list(SUITES) if args.suite == "all" else [args.suite]
        if args.parallel < 1:
            raise InputError("--parallel must be at least 1")
        return run_suites(names, cfg, args.parallel)
    if cmd == "genericity":
        from . import genericity as ge
        x = _load_config(args.config)
        rep = ge.genericity_report(x)
        checks = [check(f"genericity.{fam}_{k}", f"genericity condition {fam}", ok)
                  for fam, d in rep["flags"].items() for k, ok in d.items()]
        checks.append(check("genericity.invariants", "genericity invariants", True, rep["invariants"]))
        return make_report(checks, cfg.seed, ["genericity"])
    if cmd == "gkz":
        from . import gkz
        if action == "groebner":
            G = gkz.toric_groebner(gkz.revlex(), cfg.cache_dir)
            a = gkz.gkz_matrix().a_matrix
            c = check("gkz.groebner", "toric Groebner basis for revlex",
                      all(gkz.binomial_in_kernel(g, a) for g in G) and gkz.is_groebner(G, gkz.revlex()),
                      {"size": len(G), "basis": [gkz.poly_to_text(g) for g in G]})
            return make_report([c], cfg.seed, ["gkz"])
        if action == "multiplicity":
            r = gkz.gkz_report(cfg.cache_dir)
            c = check("gkz.multiplicity", "multiplicity of the toric ideal is 20",
                      r["multiplicity"] == 20 and r["normalized_volume"] == 20 and r["initial_squarefree"],
                      {k: r[k] for k in ("multiplicity", "normalized_volume", "initial_squarefree")})
            return make_report([c], cfg.seed, ["gkz"])
        r = gkz.check_e2_membership(cache_dir=cfg.cache_dir)
        return make_report([check("gkz.e2_membership", "second-order symbols lie in the toric ideal",
                                  r["ok"], r)], cfg.seed, ["gkz"])
    if cmd == "periods":
        from . import genericity as ge
        from . import periods as P
        if action == "check-pde":
            res = P.pde_residuals(args.ops, seed=cfg.seed)
            checks = [check(f"periods.fd_{fam}", f"{fam} operators annihilate the periods",
                            max(d.values()) < (cfg.tolerances["fd2"] if fam == "e2" else cfg.tolerances["fd1"]), d)
                      for fam, d in res.items()]
            return make_report(checks, cfg.seed, ["periods"])
        x = _load_config(args.config)
        if not ge.is_generic(x):
            raise InputError("configuration is not generic")
        try:
            pv = P.period_vector(P.config_array(x))
        except P.PeriodError as e:
            raise InputError(str(e)) from e
        details = {"periods": pv.v, "eta": pv.eta, "bilinear_residual": pv.bilinear_residual(),
                   "positivity": pv.positivity(), "component_sign": pv.component_sign()}
        if action == "vector":
            return make_report([check("periods.vector", "period vector and eta = A^-1 v", True, details)], cfg.seed, ["periods"])
        ok = pv.bilinear_residual() < cfg.tolerances["bilinear"] and pv.positivity() > 0
        return make_report([check("periods.bilinear", "Riemann bilinear relations", ok, details)],
                           cfg.seed, ["periods"])
    if cmd == "ks":
        from . import kuga_satake as ks
        if action == "check-algebra":
            r = ks.algebra_report(seed=cfg.seed)
            return make_report([check("ks.algebra", "even Clifford algebra of dimension 128", r["ok"], r)],
                               cfg.seed, ["ks"])
        if action == "center":
            r = ks.center_and_split()
            return make_report([check("ks.center", "centre and central idempotents", r["ok"], r)],
                               cfg.seed, ["ks"])
        etas = None
        if args.eta:
            eta = _load_eta(args.eta)
            try:
                ks.split_eta(eta, cfg.tolerances["j"])
            except ks.KugaSatakeError as e:
                raise InputError(str(e)) from e
            etas = [eta]
        checks = [c for c in suite_ks(cfg, etas) if c["id"].startswith(("ks.j_", "ks.riemann", "ks.m_", "ks.sigma"))]
        return make_report(checks, cfg.seed, ["ks"])
    raise InputError(f"unknown command {cmd}")


def render_text(report: Dict) -> str:
    lines = []
    for c in report["checks"]:
        lines.append(f"[{c['status'].upper():7s}] {c['id']}: {c['anchor']}")
    s = report["summary"]
    lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) and 2
    try:
        report = dispatch(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    text = json.dumps(report, sort_keys=True, indent=2)
    if args.output:
        Path(args.output).write_text(text + "\n")
    print(text if args.json else render_text(report))
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
