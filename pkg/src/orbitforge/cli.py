"""orbitforge command line: orbit, twist, render, trigfield, fricke."""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import chains, fricke, io, orbits, render, trigfields
from .chains import ActionAngle, AngleVector, ChainError, RationalAngle, parse_angle
from .hyperbolic import GeometryError
from .representation import DIRECT, TABLE, apply_word, coords_from_rep, from_coords, twist_geometric
from .surface import WordError, parse_word

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CHECK = 3


class InputError(Exception):
    pass


def fmt_angle(x, max_den: int = 24) -> str:
    if x is None:
        return "-"
    r = trigfields.recognize_rational_angle(float(x), max_den, 1e-9)
    return str(r) if r is not None else f"{float(x):.9f}"


def fmt_coords(c: ActionAngle) -> str:
    vals = [fmt_angle(b) for b in c.beta] + [fmt_angle(g) for g in c.gamma if g is not None]
    return "(" + ", ".join(vals) + ")"


def _split(text: str) -> list:
    return [s for s in (t.strip() for t in text.split(",")) if s]


def parse_alpha(text: str, n: int | None = None) -> AngleVector:
    items = []
    for s in _split(text):
        a = parse_angle(s)
        if not isinstance(a, RationalAngle):
            raise InputError(f"peripheral angle {s!r} must be exact, like 12pi/7")
        items.append(a)
    try:
        alpha = AngleVector(items)
        chains.validate_alpha(alpha)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if n is not None and alpha.n != n:
        raise InputError(f"--n {n} but {alpha.n} angles given")
    return alpha


def parse_seed(alpha: AngleVector, beta: str | None, gamma: str | None) -> ActionAngle:
    if beta is None:
        return chains.central_coords(alpha)
    b = [chains.as_radians(parse_angle(s)) for s in _split(beta)]
    if gamma is None:
        g = [0.0] * len(b)
    else:
        g = [None if s in ("-", "none") else chains.as_radians(parse_angle(s)) for s in _split(gamma)]
    if len(b) != alpha.n - 3 or len(g) != alpha.n - 3:
        raise InputError(f"need {alpha.n - 3} beta and gamma values")
    slacks = chains.moment_polytope_check(alpha, b)
    if min(slacks) < -1e-9:
        raise InputError(f"beta outside the moment polytope (slacks {', '.join(f'{s:.3g}' for s in slacks)})")
    return ActionAngle(b, g, chains.degeneracy_mask(alpha, b))


def cmd_orbit(args) -> int:
    table = None
    if args.verify:
        table = io.load_table(args.verify)
    if args.alpha:
        alpha = parse_alpha(args.alpha, args.n)
        seed = parse_seed(alpha, args.beta, args.gamma)
    elif table is not None:
        alpha, seed = table.alpha, table.seed
    else:
        raise InputError("--alpha is required unless --verify names a table")
    t0 = time.perf_counter()
    result = orbits.enumerate(alpha, seed, tol=args.tol, max_points=args.max_points,
                              max_layers=args.max_layers, threads=args.threads)
    dt = time.perf_counter() - t0
    print(f"{result.status.value}, {len(result)} points")
    print("layers: " + " ".join(map(str, result.layers)))
    print(f"time: {dt:.3f} s")
    if args.out:
        io.write_orbit(result, args.out)
    if args.csv:
        io.write_orbit_csv(result, args.csv)
    if args.figure:
        render.orbit_figure(result, args.figure)
    code = EXIT_OK
    if table is not None:
        report = orbits.verify_against_table(result, table)
        print(report.summary())
        for k, word, got, dev in report.replay_failures:
            print(f"  row {k}: {word!r} gives {fmt_coords(got)}, off by {dev:.3g}")
        if not report.ok:
            code = EXIT_CHECK
    if args.require_finite and result.status is orbits.Status.EXHAUSTED:
        code = EXIT_CHECK
    return code


def cmd_twist(args) -> int:
    alpha = parse_alpha(args.alpha)
    seed = parse_seed(alpha, args.beta, args.gamma)
    word = parse_word(args.word, alpha.n)
    conv = TABLE if args.convention == "table" else DIRECT
    alg = coords_from_rep(apply_word(from_coords(alpha, seed), word, conv))
    print(f"seed:        {fmt_coords(seed)}")
    print(f"algebraic:   {fmt_coords(alg)}")
    if conv == DIRECT:
        geo = seed
        for letter in word:
            geo = twist_geometric(alpha, geo, letter)
        print(f"geometric:   {fmt_coords(geo)}")
        print(f"deviation:   {alg.max_deviation(geo):.3g}")
    return EXIT_OK


def cmd_render(args) -> int:
    alpha = parse_alpha(args.alpha)
    seed = parse_seed(alpha, args.beta, args.gamma)
    render.render_coords(alpha, seed, args.out, args.model)
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_trigfield(args) -> int:
    if args.N is None:
        raise InputError("--N is required")
    try:
        spec = trigfields.FieldSpec(args.N)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.check:
        text = args.check.strip()
        if "pi" in text:
            a = parse_angle(text)
            if not isinstance(a, RationalAngle):
                raise InputError(f"cannot read angle {text!r}")
            x = trigfields.CosValue.from_angle(a)
            what = f"2cos(({a})/2)"
        else:
            try:
                f = Fraction(text)
            except ValueError:
                raise InputError(f"cannot read {text!r}; use p/q or an angle like 2pi/7") from None
            x = trigfields.CosValue.from_fraction(f)
            what = str(x)
        verdict = trigfields.member(x, spec)
        print(f"{what} {'in' if verdict else 'not in'} Q(cos(pi/{args.N}))")
        return EXIT_OK
    angles = trigfields.list_angles(spec)
    print(f"Q(cos(pi/{args.N})), degree {trigfields.field_degree(spec)}, {len(angles)} angles")
    print(", ".join(map(str, angles)))
    return EXIT_OK


def cmd_fricke(args) -> int:
    if args.theta_file:
        data = json.loads(Path(args.theta_file).read_text(encoding="utf-8"))
        hits = fricke.scan_thetas(data)
        for h in hits:
            print(f"{h.name}: theta=({', '.join(str(x) for x in h.theta)}) alpha=({h.alpha})")
        print(f"{len(hits)} SL2R quadruples")
        return EXIT_OK
    if not args.traces:
        raise InputError("give --traces or --theta-file")
    try:
        t = [float(s) for s in _split(args.traces)]
    except ValueError:
        raise InputError(f"cannot read traces {args.traces!r}") from None
    if len(t) != 4:
        raise InputError("exactly four traces are needed")
    if any(abs(x) > 2 for x in t):
        raise InputError("every trace must lie in [-2, 2]")
    F = fricke.fricke_coeffs(t)
    print("A B C D = " + " ".join(f"{v:g}" for v in F))
    if any(abs(x) == 2 for x in t):
        print("Benedetto-Goldman: undefined, a trace is +-2")
        return EXIT_OK
    verdict = fricke.benedetto_goldman(t)
    print(f"Benedetto-Goldman: {verdict.value}")
    if verdict is fricke.RealForm.SL2R:
        alpha = fricke.angle_vector_from_traces(t, exact_den=120)
        if isinstance(alpha, AngleVector):
            print(f"alpha = ({alpha})")
        else:
            print("alpha = (" + ", ".join(fmt_angle(a) for a in alpha) + ")")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbitforge", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def seed_args(sp):
        sp.add_argument("--alpha", help="comma-separated exact angles, e.g. 12pi/7,12pi/7,10pi/7,12pi/7")
        sp.add_argument("--beta", help="comma-separated beta values (default: polytope centre)")
        sp.add_argument("--gamma", help="comma-separated gamma values; '-' where undefined")

    o = sub.add_parser("orbit", help="enumerate an orbit")
    o.add_argument("--n", type=int)
    seed_args(o)
    o.add_argument("--tol", type=float, default=orbits.DEFAULT_TOL)
    o.add_argument("--max-points", type=int, default=orbits.DEFAULT_MAX_POINTS)
    o.add_argument("--max-layers", type=int, default=orbits.DEFAULT_MAX_LAYERS)
    o.add_argument("--threads", type=int, default=1)
    o.add_argument("--require-finite", action="store_true")
    o.add_argument("--verify", metavar="TABLE", help="golden table name or JSON path")
    o.add_argument("--out", metavar="JSON")
    o.add_argument("--csv", metavar="CSV")
    o.add_argument("--figure", metavar="PNG")
    o.set_defaults(func=cmd_orbit)

    t = sub.add_parser("twist", help="apply a twist word to a point")
    seed_args(t)
    t.add_argument("--word", default="", help="e.g. 't(2,3) t(1,2)^-1'; leftmost letter acts first")
    t.add_argument("--convention", choices=("direct", "table"), default="direct",
                   help="'table' applies each letter inversely, as in the shipped tables")
    t.set_defaults(func=cmd_twist)

    r = sub.add_parser("render", help="draw the triangle chain as SVG")
    seed_args(r)
    r.add_argument("--model", choices=render.MODELS, default="halfplane")
    r.add_argument("--out", default="chain.svg")
    r.set_defaults(func=cmd_render)

    f = sub.add_parser("trigfield", help="rational angles with half-angle cosine in Q(cos(pi/N))")
    f.add_argument("--N", type=int)
    f.add_argument("--check", metavar="P/Q", help="test 2cos(2pi p/q), or 2cos(r/2) for an angle like 2pi/7")
    f.set_defaults(func=cmd_trigfield)

    k = sub.add_parser("fricke", help="Fricke coefficients and the SL2R test")
    k.add_argument("--traces", metavar="A,B,C,D")
    k.add_argument("--theta-file", metavar="JSON")
    k.set_defaults(func=cmd_fricke)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "alpha", None) is None and args.command in ("twist", "render"):
        parser.error("--alpha is required")
    if args.command == "orbit" and (args.tol <= 0 or args.max_points <= 0):
        parser.error("--tol and --max-points must be positive")
    try:
        return args.func(args)
    except (InputError, WordError, ChainError, GeometryError, trigfields.FieldError,
            fricke.FrickeError, ValueError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
