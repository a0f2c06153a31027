"""Command-line front end.

Exit codes: 0 success, 1 domain error (message names the error class),
2 usage error (argparse).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import forcing, logistic, markov, successors
from .perm import Cycle, is_cycle, modality, parse_cycle, successor_candidate
from .polynomial import charpoly

DEFAULT_FORMAT = "text"


def _swaps(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad swap list {text!r}") from None


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}") from None


def _add_format(p: argparse.ArgumentParser, choices: Sequence[str], default: str = DEFAULT_FORMAT):
    p.add_argument("--format", choices=list(choices), default=default)


def _add_logistic_flags(p: argparse.ArgumentParser) -> None:
    d = logistic.LogisticParams()
    p.add_argument("--burn-in", type=int, default=d.burn_in)
    p.add_argument("--max-period", type=int, default=d.max_period)
    p.add_argument("--tol", type=float, default=d.tol)
    p.add_argument("--x0", type=float, default=d.x0)


def _add_loop_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-loop-length", type=int, default=forcing.DEFAULT_MAX_LOOP_LENGTH)
    p.add_argument("--max-loops", type=int, default=forcing.DEFAULT_MAX_LOOPS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intervalcycles",
        description="Combinatorial dynamics of cyclic permutations and interval maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("digraph", help="signed Markov digraph G(theta)")
    p.add_argument("cycle")
    _add_format(p, ["text", "json", "dot"])

    p = sub.add_parser("charpoly", help="characteristic polynomial of M(theta)")
    p.add_argument("cycle")
    _add_format(p, ["text", "json"])

    p = sub.add_parser("successors", help="doubling successors theta* o rho_S")
    p.add_argument("cycle")
    p.add_argument("--cyclic-only", action="store_true")
    p.add_argument("--unimodal-only", action="store_true")
    p.add_argument("--max-n", type=int, default=successors.DEFAULT_SUCCESSOR_CAP)
    _add_format(p, ["text", "json"])

    p = sub.add_parser("double", help="one doubling theta* o rho_S for a given swap set")
    p.add_argument("cycle")
    p.add_argument("--swaps", type=_swaps, required=True, help="comma-separated indices, e.g. 2 or 1,2,3")
    _add_format(p, ["text", "json", "dot"])

    p = sub.add_parser("cascade", help="unimodal period-doubling cascade")
    p.add_argument("seed")
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="exit 1 if any level breaks the product formula")
    p.add_argument("--max-period", type=int, default=successors.DEFAULT_PERIOD_CAP)
    _add_format(p, ["text", "json"])

    p = sub.add_parser("forces", help="decide whether BETA forces ALPHA")
    p.add_argument("beta")
    p.add_argument("alpha")
    _add_loop_caps(p)
    _add_format(p, ["text", "json"])

    p = sub.add_parser("forced-types", help="orbit types of L_beta up to a period")
    p.add_argument("beta")
    p.add_argument("--max-period", type=int, required=True)
    _add_loop_caps(p)
    _add_format(p, ["text", "json"])

    p = sub.add_parser("logistic", help="attractor of f_a(x) = a x (1 - x)")
    p.add_argument("--a", type=float, required=True)
    _add_logistic_flags(p)
    _add_format(p, ["text", "json"])

    p = sub.add_parser("logistic-scan", help="attractor periods over a parameter range")
    p.add_argument("--from", dest="a_from", type=float, required=True)
    p.add_argument("--to", dest="a_to", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    _add_logistic_flags(p)
    _add_format(p, ["csv", "json"], default="csv")

    p = sub.add_parser("certify-cascade", help="compare numeric orbit types with the symbolic cascade")
    p.add_argument("--seed", required=True)
    p.add_argument("--a-list", type=_floats, required=True, help="comma-separated parameter values")
    _add_logistic_flags(p)
    _add_format(p, ["text", "json"])
    return parser


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def _cmd_digraph(args, out):
    g = markov.build_digraph(parse_cycle(args.cycle))
    if args.format == "dot":
        out.write(markov.to_dot(g))
    elif args.format == "json":
        _dump(markov.to_json(g), out)
    else:
        for i, (s, row) in enumerate(zip(g.signs, g.adjacency), start=1):
            out.write(f"v{i}{s} " + " ".join(map(str, row)) + "\n")


def _cmd_charpoly(args, out):
    p = charpoly(markov.build_digraph(parse_cycle(args.cycle)).adjacency)
    if args.format == "json":
        _dump(p.to_json(), out)
    else:
        out.write(p.to_text() + "\n")


def _cmd_successors(args, out):
    theta = parse_cycle(args.cycle)
    if args.unimodal_only:
        if len(theta) == 1:
            found = [((1,), successors.unimodal_double(theta))]
        else:
            found = successors.unimodal_successors(theta)
        if args.format == "json":
            _dump([{"swaps": list(s), "images": list(c.images), "notation": c.notation()} for s, c in found], out)
        else:
            for s, c in found:
                out.write(f"{c.notation()} swaps={','.join(map(str, s))}\n")
        return
    ss = successors.enumerate_successors(theta, cap=args.max_n)
    if args.format == "json":
        _dump(ss.to_json(cyclic_only=args.cyclic_only), out)
        return
    for s, c in ss.cyclic:
        mod = str(modality(c)) if len(c) >= 3 else "n/a"
        out.write(f"cyclic {c.notation()} swaps={','.join(map(str, s))} modality={mod}\n")
    if not args.cyclic_only:
        for s, p in ss.non_cyclic:
            out.write(f"non-cyclic {p.image_list()} swaps={','.join(map(str, s))}\n")


def _cmd_double(args, out):
    theta = parse_cycle(args.cycle)
    eta = successor_candidate(theta, args.swaps)
    cyclic = is_cycle(eta)
    if args.format == "dot":
        g = markov.double_graph(markov.build_digraph(theta), args.swaps)
        out.write(markov.to_dot(g))
    elif args.format == "json":
        obj = {"base": list(theta.images), "swaps": sorted(set(args.swaps)),
               "images": list(eta.images), "cyclic": cyclic}
        if cyclic:
            obj["notation"] = Cycle(eta.images).notation()
            obj["digraph"] = markov.to_json(markov.build_digraph(eta))
        _dump(obj, out)
    else:
        out.write((Cycle(eta.images).notation() if cyclic else eta.image_list()) + "\n")
        out.write(f"cyclic: {'true' if cyclic else 'false'}\n")


def _cmd_cascade(args, out):
    seed = parse_cycle(args.seed)
    c = successors.cascade(seed, args.levels, max_period=args.max_period, verify=args.verify)
    if args.format == "json":
        _dump(c.to_json(), out)
    else:
        rows = c.to_json()["levels"]
        for r in rows:
            flag = "ok" if r["verified"] else "FAIL"
            poly = r["polynomial_text"].replace("λ", "l")
            out.write(f"{r['level']} {r['notation']} {poly} {flag}\n")
    # without --verify failures are only reported
    return 0


def _cmd_forces(args, out):
    beta, alpha = parse_cycle(args.beta), parse_cycle(args.alpha)
    res = forcing.forcing_query(beta, alpha, args.max_loop_length, args.max_loops)
    if args.format == "json":
        _dump(res, out)
        return
    out.write(("true" if res["forces"] else "false") + "\n")
    w = res["witness"]
    if w is not None:
        loop = "integer orbit" if w["loop"] is None else "loop [" + ",".join(map(str, w["loop"])) + "]"
        out.write(f"witness: {loop}; points {{{', '.join(w['points'])}}}; type {w['notation']}\n")


def _cmd_forced_types(args, out):
    beta = parse_cycle(args.beta)
    types = forcing.forced_types(beta, args.max_period, args.max_loop_length, args.max_loops)
    if args.format == "json":
        _dump({"beta": list(beta.images), "max_period": args.max_period,
               "types": [list(t.images) for t in types]}, out)
    else:
        for t in types:
            out.write(t.notation() + "\n")


def _params(args, a: float) -> logistic.LogisticParams:
    return logistic.LogisticParams(a=a, burn_in=args.burn_in, max_period=args.max_period,
                                   tol=args.tol, x0=args.x0)


def _cmd_logistic(args, out):
    rep = logistic.iterate(_params(args, args.a))
    if args.format == "json":
        _dump(rep.to_json(), out)
    else:
        out.write(f"period {rep.period}\n")
        out.write(f"type {rep.orbit_type.notation()}\n")
        out.write("points " + " ".join(f"{x:.12g}" for x in rep.points) + "\n")


def _cmd_logistic_scan(args, out):
    res = logistic.scan_bifurcations(args.a_from, args.a_to, args.step, _params(args, args.a_from))
    if args.format == "json":
        _dump(res.to_json(), out)
    else:
        out.write(res.to_csv())


def _cmd_certify(args, out):
    seed = parse_cycle(args.seed)
    cert = logistic.certify_cascade(args.a_list, seed, _params(args, args.a_list[0] if args.a_list else 3.0))
    if args.format == "json":
        _dump(cert.to_json(), out)
    else:
        for r in cert.rows:
            det = r.detected.notation() if r.detected else "-"
            exp = r.expected.notation() if r.expected else "-"
            out.write(f"a={r.a} period={r.period} detected={det} expected={exp} "
                      f"{'match' if r.match else 'MISMATCH'}\n")
    return 0 if cert.all_match else 1


COMMANDS = {
    "digraph": _cmd_digraph,
    "charpoly": _cmd_charpoly,
    "successors": _cmd_successors,
    "double": _cmd_double,
    "cascade": _cmd_cascade,
    "forces": _cmd_forces,
    "forced-types": _cmd_forced_types,
    "logistic": _cmd_logistic,
    "logistic-scan": _cmd_logistic_scan,
    "certify-cascade": _cmd_certify,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out) or 0
    except ValueError as exc:  # every domain error is a ValueError subclass
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
