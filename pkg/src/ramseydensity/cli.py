"""Command-line surface: reproducible CSV/JSON artifacts for every subsystem.

Every artifact embeds the command, the full configuration, the seed and the
library version; identical configuration and seed produce byte-identical
files.  Numeric output is printed with 9 significant digits.  The RDL_SEED
environment variable overrides the --seed flag.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import __version__
from .colorings import (TwoColoring, a_good_shading, adversary,
                        clique_coloring, verify_adversary, verify_shading)
from .embedder import HPrefixSpec, build_W, embed, verify_embedding
from .families import (FiniteGraph, complete_bipartite, default_treecut_delta,
                       mu_bruteforce, parse_family, treecut)
from .flows import CapacitatedBipartite, findflow, mfmc
from .lipschitz import PLFunction, f_closed

NINE = "{:.9g}"


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, Fraction):
        x = float(x)
    return NINE.format(x)


def _seed_of(args):
    env = os.environ.get("RDL_SEED")
    return int(env) if env is not None else args.seed


def _meta(args, command):
    config = {k: v for k, v in sorted(vars(args).items())
              if k not in ("func", "out") and v is not None}
    config["seed"] = _seed_of(args)
    return {"command": command, "config": {k: str(v) for k, v in config.items()},
            "seed": _seed_of(args), "version": __version__}


def _write_csv(path, meta, header, rows):
    lines = [f"# command: {meta['command']}",
             f"# config: {json.dumps(meta['config'], sort_keys=True)}",
             f"# seed: {meta['seed']}",
             f"# version: {meta['version']}",
             ",".join(header)]
    lines += [",".join(row) for row in rows]
    text = "\n".join(lines) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_json(path, meta, payload):
    doc = {"meta": meta, **payload}
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_pl(spec_text):
    """zero | linear:slope | sigma:lambda:periods | file:<path with 'x y' rows>"""
    kind, _, rest = spec_text.partition(":")
    if kind == "zero":
        return PLFunction.zero()
    if kind == "linear":
        return PLFunction.linear(float(rest))
    if kind == "sigma":
        from .lipschitz import GammaParam, sigma_g
        lam_s, _, periods_s = rest.partition(":")
        return sigma_g(GammaParam.from_lambda(float(lam_s)), int(periods_s or 8))
    if kind == "file":
        pts = []
        with open(rest, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    x, y = map(float, line.split())
                    pts.append((x, y))
        return PLFunction.from_points(pts)
    raise ValueError(f"unknown function spec {spec_text!r}")


def cmd_f_eval(args):
    b = f_closed(math.inf if args.lam == "inf" else float(args.lam))
    meta = _meta(args, "f-eval")
    rows = [[_fmt(float(args.lam) if args.lam != "inf" else math.inf),
             _fmt(b.lower), _fmt(b.upper), _fmt(b.exact)]]
    _write_csv(args.out, meta, ["lambda", "lower", "upper", "exact"], rows)
    return 0


def cmd_fig1(args):
    meta = _meta(args, "fig1")
    rows = []
    steps = int(round(3.0 / args.step))
    for k in range(steps + 1):
        x = k * args.step
        b = f_closed(x)
        rows.append([_fmt(x), _fmt(b.lower), _fmt(b.upper), _fmt(b.exact)])
    _write_csv(args.out, meta, ["x", "lower", "upper", "exact"], rows)
    return 0


def cmd_mu(args):
    fam = parse_family(args.family)
    value = mu_bruteforce(fam, args.n, args.prefix_size)
    meta = _meta(args, "mu")
    _write_json(args.out, meta, {"family": args.family, "n": args.n,
                                 "prefix_size": args.prefix_size, "mu": value})
    print(value)
    return 0


def cmd_adversary(args):
    g = _parse_pl(args.g)
    inst = adversary(args.s, args.r, g, args.n)
    problems = verify_adversary(inst)
    meta = _meta(args, "adversary")
    _write_json(args.out, meta, {
        "s": args.s, "r": args.r, "n": args.n,
        "colors": "".join(inst.vertex_colors),
        "alpha": list(inst.alpha), "beta": list(inst.beta),
        "phi": list(inst.phi),
        "invariants_ok": not problems,
        "violations": problems,
    })
    return 0 if not problems else 2


def cmd_mfmc(args):
    with open(args.graph, encoding="utf-8") as fh:
        lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    nx, ny, m = map(int, lines[0].split())
    edges = frozenset((int(a), nx + int(b))
                      for a, b in (ln.split() for ln in lines[1:m + 1]))
    G = CapacitatedBipartite(tuple(range(nx)), tuple(range(nx, nx + ny)),
                             edges, args.r, args.s)
    cert = mfmc(G)
    meta = _meta(args, "mfmc")
    _write_json(args.out, meta, cert.to_json_dict())
    return 0


def cmd_findflow(args):
    with open(args.coloring, encoding="utf-8") as fh:
        chi = TwoColoring.from_text(fh.read())
    res = findflow(chi, args.r, args.s, args.epsilon)
    meta = _meta(args, "findflow")
    _write_json(args.out, meta, {
        "t": res.t, "color": res.color, "value": _fmt(res.value),
        "h": [[u, v, f] for (u, v), f in res.h]})
    return 0


def cmd_shade(args):
    if args.coloring.startswith("modular:"):
        chi = clique_coloring(int(args.coloring.split(":")[1]), args.n)
    else:
        with open(args.coloring, encoding="utf-8") as fh:
            chi = TwoColoring.from_text(fh.read())
    sh = a_good_shading(chi, args.a, args.theta, args.min_count)
    report = verify_shading(chi, sh, args.sample_size, args.subset_cap, _seed_of(args))
    meta = _meta(args, "shade")
    _write_json(args.out, meta, {
        "a": args.a,
        "assignment": ["".join(map(str, s)) for s in sh.assignment],
        "residual_size": len(sh.residual()),
        "verify_min_count": report.min_count_found,
        "verify_samples": report.samples,
        "verify_passed": report.passed,
    })
    return 0 if report.passed else 2


def cmd_embed(args):
    from .colorings import Shading
    n = args.host_size
    left = set(range(n // 2))
    red = set()
    for u in range(n):
        for v in range(u + 1, n):
            in_l = (u in left) + (v in left)
            if in_l != 2:
                red.add((u, v))
    chi = TwoColoring(n, "explicit", red_edges=frozenset(red))
    assignment = tuple(("B", 1) if v in left else ("R", 1) for v in range(n))
    sh = Shading(a=2, assignment=assignment, min_count=2)
    spec = HPrefixSpec.omega_factor(complete_bipartite(args.r, args.s),
                                    args.copies, tuple(range(args.r)))
    W = build_W(chi, sh, args.r, args.s, max_pieces=max(1, args.copies // 2))
    state = embed(chi, sh, W, spec, budget=args.budget)
    report = verify_embedding(state, chi, spec, W)
    meta = _meta(args, "embed")
    payload = state.to_json_dict()
    payload["verify_passed"] = report.passed
    payload["failures"] = list(report.failures)
    if report.density is not None:
        payload["density"] = _fmt(report.density.max_ratio)
    _write_json(args.out, meta, payload)
    return 0 if report.passed else 2


def cmd_treecut(args):
    with open(args.forest, encoding="utf-8") as fh:
        forest = FiniteGraph.from_text(fh.read())
    I = tuple(int(x) for x in args.independent.split(","))
    lam = Fraction(len(forest.neighborhood(I)), len(I))
    lam_prime = Fraction(args.lam_prime)
    delta = Fraction(args.delta) if args.delta else default_treecut_delta(lam, lam_prime)
    result = treecut(forest, I, lam, lam_prime, delta)
    nbhd = forest.neighborhood(result)
    ok = len(result) <= 2 / delta and len(nbhd) <= lam_prime * len(result)
    meta = _meta(args, "treecut")
    _write_json(args.out, meta, {
        "I_prime": list(result),
        "neighborhood_size": len(nbhd),
        "size_bound": _fmt(2 / delta),
        "delta": str(delta),
        "postconditions_ok": ok,
    })
    return 0 if ok else 2


def build_parser():
    ap = argparse.ArgumentParser(prog="rdl", description=__doc__)
    sub = ap.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None, help="artifact path (default stdout)")

    p = sub.add_parser("f-eval", help="closed-form bounds for f at one point")
    p.add_argument("--lambda", dest="lam", required=True)
    common(p)
    p.set_defaults(func=cmd_f_eval)

    p = sub.add_parser("fig1", help="CSV of f bounds over [0, 3]")
    p.add_argument("--step", type=float, default=0.01)
    common(p)
    p.set_defaults(func=cmd_fig1)

    p = sub.add_parser("mu", help="exact expansion profile value")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prefix-size", dest="prefix_size", type=int, default=64)
    common(p)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("adversary", help="left-to-right adversarial coloring")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", default="zero")
    common(p)
    p.set_defaults(func=cmd_adversary)

    p = sub.add_parser("mfmc", help="max flow / weighted cover certificate")
    p.add_argument("--graph", required=True, help="file: 'nx ny m' then edge rows 'i j'")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_mfmc)

    p = sub.add_parser("findflow", help="prefix sweep flow extraction")
    p.add_argument("--coloring", required=True, help="coloring file (leftmost rule)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=0.05)
    common(p)
    p.set_defaults(func=cmd_findflow)

    p = sub.add_parser("shade", help="shade assignment plus sampling verification")
    p.add_argument("--coloring", required=True, help="'modular:a' or a coloring file")
    p.add_argument("--n", type=int, default=200)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--theta", type=float, default=0.1)
    p.add_argument("--min-count", dest="min_count", type=int, default=5)
    p.add_argument("--sample-size", dest="sample_size", type=int, default=20)
    p.add_argument("--subset-cap", dest="subset_cap", type=int, default=3)
    common(p)
    p.set_defaults(func=cmd_shade)

    p = sub.add_parser("embed", help="run the embedding on a planted two-class host")
    p.add_argument("--host-size", dest="host_size", type=int, default=40)
    p.add_argument("--copies", type=int, default=4)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--budget", type=int, default=500)
    common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("treecut", help="bounded-size low-expansion subset in a forest")
    p.add_argument("--forest", required=True, help="edge-list file")
    p.add_argument("--independent", required=True, help="comma-separated vertex ids")
    p.add_argument("--lambda-prime", dest="lam_prime", required=True)
    p.add_argument("--delta", default=None)
    common(p)
    p.set_defaults(func=cmd_treecut)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if not getattr(args, "func", None):
        ap.print_usage()
        return 1
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
