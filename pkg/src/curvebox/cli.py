"""Command line front end: JSON instances in, line reports or CSV out.

Every subcommand is a thin wrapper over the library; the numbers printed
here are the numbers the corresponding calls return.  Exit codes: 0 on
success, 2 on an invalid instance or argument, 3 when a budget trips.
"""
import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .arith import BoxRegion, ModPoly, integer_nth_root
from .curvecount import (
    BudgetExceeded,
    DEFAULT_BUDGET,
    count_points_curve,
    count_points_hyperelliptic,
    vinogradov_count,
)
from .gon import EnumerationBudgetExceeded, IntegerLattice, WeightedBody, successive_minima
from .reduction import (
    build_body,
    build_congruence_lattice,
    build_hyperelliptic_body,
    build_hyperelliptic_lattice,
    decimal_string,
    lift_curve,
    lift_hyperelliptic,
    theorem3_bound,
    theorem4_bound,
)
from .rng import SplitMix64, random_modpoly
from .verify import run_suite

CSV_HEADER = "q,d,H,N,bound,case,ratio,lambdas"


@dataclass(frozen=True)
class Instance:
    f: ModPoly
    box: BoxRegion
    curve: str
    c0: int


def load_instance(path: str) -> Instance:
    """Parse an instance file; error messages name the offending field."""
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read instance file: {exc}")
    except json.JSONDecodeError as exc:
        raise ValueError(f"instance file is not valid JSON: {exc}")
    if not isinstance(raw, dict):
        raise ValueError("instance file must hold a JSON object")
    for key in ("q", "coeffs", "box"):
        if key not in raw:
            raise ValueError(f"instance is missing the field {key!r}")
    box_raw = raw["box"]
    if not isinstance(box_raw, dict):
        raise ValueError("the box field must be an object with K, L, H")
    for key in ("K", "L", "H"):
        if key not in box_raw:
            raise ValueError(f"the box field is missing {key!r}")
    curve = raw.get("curve", "poly")
    if curve not in ("poly", "hyperelliptic"):
        raise ValueError('the curve field must be "poly" or "hyperelliptic"')
    try:
        f = ModPoly(int(raw["q"]), tuple(int(c) for c in raw["coeffs"]))
        box = BoxRegion(int(box_raw["K"]), int(box_raw["L"]), int(box_raw["H"]))
        c0 = int(raw.get("c0", 0))
    except (TypeError, ValueError) as exc:
        raise ValueError(str(exc))
    return Instance(f=f, box=box, curve=curve, c0=c0)


def _emit(args, payload: dict, text_lines):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_count(args) -> int:
    inst = load_instance(args.instance)
    f, box = inst.f, inst.box
    if inst.curve == "poly":
        n, sx = count_points_curve(f, box)
        bound = theorem3_bound(f.degree, box.H, f.q)
    else:
        n, sx = count_points_hyperelliptic(f, inst.c0, box)
        bound = theorem4_bound(box.H, f.q)
    _emit(
        args,
        {"N": n, "X": len(sx.offsets), "bound": decimal_string(bound)},
        [f"N={n}", f"X={len(sx.offsets)}", f"bound={decimal_string(bound)}"],
    )
    return 0


def _frac_str(x: Fraction) -> str:
    return str(Fraction(x))


def cmd_minima(args) -> int:
    if args.unit is not None:
        n = args.unit
        if not 1 <= n <= 8:
            raise ValueError("unit dimension must be between 1 and 8")
        lat = IntegerLattice(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
        body = WeightedBody.box((Fraction(1),) * n)
    else:
        if args.instance is None:
            raise ValueError("minima needs an instance file or --unit N")
        inst = load_instance(args.instance)
        if inst.curve == "poly":
            lat = build_congruence_lattice(inst.f)
            body = build_body(inst.f.degree, inst.box.H)
        else:
            lat = build_hyperelliptic_lattice(inst.f, inst.c0)
            body = build_hyperelliptic_body(inst.box.H)
    prof = successive_minima(lat, body, max_nodes=args.budget)
    lams = [_frac_str(l) for l in prof.lambdas]
    _emit(args, {"lambdas": lams}, [" ".join(lams)])
    return 0


def cmd_lift(args) -> int:
    inst = load_instance(args.instance)
    H = inst.box.H
    if inst.curve == "poly":
        lift = lift_curve(inst.f, H)
        payload = {
            "n": lift.n,
            "z": lift.z,
            "w0": lift.w0,
            "w": list(lift.w),
            "t_range": list(lift.t_range),
        }
        lines = [
            f"n={lift.n}",
            f"z={lift.z}",
            f"w0={lift.w0}",
            "w=" + ",".join(str(x) for x in lift.w),
            f"t_range={lift.t_range[0]},{lift.t_range[1]}",
        ]
    else:
        lift = lift_hyperelliptic(inst.f, inst.c0, H)
        payload = {
            "n": lift.n,
            "z1": lift.z1,
            "w0": lift.w0,
            "w": list(lift.w),
            "t_range": list(lift.t_range),
        }
        lines = [
            f"n={lift.n}",
            f"z1={lift.z1}",
            f"w0={lift.w0}",
            "w=" + ",".join(str(x) for x in lift.w),
            f"t_range={lift.t_range[0]},{lift.t_range[1]}",
        ]
    _emit(args, payload, lines)
    return 0


def cmd_vinogradov(args) -> int:
    xs = tuple(int(t) for t in args.set.split(",") if t != "")
    budget = args.budget if args.budget is not None else DEFAULT_BUDGET
    j = vinogradov_count(xs, args.k, args.s, budget)
    _emit(args, {"J": j}, [str(j)])
    return 0


def _parse_exponent(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def _sweep_h(q: int, args) -> int:
    if args.h is not None:
        return args.h
    e = _parse_exponent(args.h_exp)
    if e <= 0:
        raise ValueError("the H exponent must be positive")
    return integer_nth_root(q**e.numerator, e.denominator)


def cmd_sweep(args) -> int:
    qs = [int(t) for t in args.q.split(",") if t != ""]
    if args.h is None and args.h_exp is None:
        raise ValueError("sweep needs --h or --h-exp")
    out = open(args.out, "w") if args.out else sys.stdout
    rng = SplitMix64(args.seed if args.seed is not None else 20260822)
    code = 0
    try:
        print(CSV_HEADER, file=out)
        for q in qs:
            H = _sweep_h(q, args)
            if H < 1:
                raise ValueError(f"H rule gives H={H} at q={q}; H must be >= 1")
            for _ in range(args.per_cell):
                if args.curve == "poly":
                    d = args.d
                    f = random_modpoly(rng, q, d)
                    n, _ = count_points_curve(f, BoxRegion(0, 0, H))
                    bound = theorem3_bound(d, H, q)
                    lat = build_congruence_lattice(f)
                    body = build_body(d, H)
                    root = d
                else:
                    d = 3
                    f = random_modpoly(rng, q, 3)
                    c0 = rng.below(q)
                    n, _ = count_points_hyperelliptic(f, c0, BoxRegion(0, 0, H))
                    bound = theorem4_bound(H, q)
                    lat = build_hyperelliptic_lattice(f, c0)
                    body = build_hyperelliptic_body(H)
                    root = 3
                lams = successive_minima(lat, body, max_nodes=args.budget).lambdas
                case = "Lift" if lams[-1] >= 1 else "Spread"
                denom = Fraction(integer_nth_root(H * 10 ** (6 * root), root), 10**6)
                ratio = Fraction(n) / denom
                lam_text = ";".join(f"{l.numerator}/{l.denominator}" for l in lams)
                row = ",".join(
                    [
                        str(q),
                        str(d),
                        str(H),
                        str(n),
                        decimal_string(bound),
                        case,
                        decimal_string(ratio),
                        lam_text,
                    ]
                )
                print(row, file=out)
    except (BudgetExceeded, EnumerationBudgetExceeded) as exc:
        print(f"# budget exceeded: {exc}", file=out)
        code = 3
    finally:
        if out is not sys.stdout:
            out.close()
    return code


def cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=None if args.seed is None else args.seed)
    bad = 0
    for res in results:
        print(f"{res.name}: {res.checks} checks, {res.failures} failures")
        for note in res.notes:
            print(f"  {note}")
        bad += res.failures
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON object")
    common.add_argument("--seed", type=int, default=None, help="64-bit stream seed")
    common.add_argument("--budget", type=int, default=None, help="work cap before exit 3")

    parser = argparse.ArgumentParser(prog="curvebox")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count box points of an instance")
    p.add_argument("instance")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("minima", parents=[common], help="successive minima profile")
    p.add_argument("instance", nargs="?")
    p.add_argument("--unit", type=int, default=None, help="identity lattice of this dimension")
    p.set_defaults(fn=cmd_minima)

    p = sub.add_parser("lift", parents=[common], help="short dual vector lifted to a curve family")
    p.add_argument("instance")
    p.set_defaults(fn=cmd_lift)

    p = sub.add_parser("vinogradov", parents=[common], help="J_{k,s} of a finite set")
    p.add_argument("--set", required=True, help="comma separated distinct integers")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(fn=cmd_vinogradov)

    p = sub.add_parser("sweep", parents=[common], help="CSV over a modulus grid")
    p.add_argument("--q", required=True, help="comma separated moduli, in output order")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--h", type=int, default=None, help="fixed box side")
    p.add_argument("--h-exp", default=None, help="H = floor(q^e) for e like 2/5")
    p.add_argument("--per-cell", type=int, default=1)
    p.add_argument("--curve", choices=("poly", "hyperelliptic"), default="poly")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("verify", parents=[common], help="run a named invariant suite")
    p.add_argument("suite", choices=("gon", "n2din", "lift", "vino", "all"))
    p.set_defaults(fn=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (BudgetExceeded, EnumerationBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
