"""Command-line interface: parameter scans, verification, single-point evaluation.

Subcommands
-----------
wigner-scan   rotation-angle grid over beta for one or more E/m values (CSV)
chsh-scan     CHSH value of a boosted Bell pair over a beta grid (CSV)
verify        randomized invariant suite; exit 1 on any failure
optimize      derivative-free CHSH maximization at fixed beta
eval          single-point quantities for one (beta, E/m, state)

Conventions: CSV output is comma-separated with a mandatory header, '.'
decimal separator, 17 significant digits and LF line endings, so identical
configurations produce byte-identical files.  Scans evaluated through the
matrix path clamp beta = 1 rows to 1 - 1e-12 (the clamped value is what
lands in the CSV); the exact beta = 1 limit is available from ``eval``
through the closed forms.  The seed is resolved as: command-line flag,
then the RELBELL_SEED environment variable, then 0.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from relbell.bell import bell_state, boost_two_particle, dump_state
from relbell.kinematics import BoostSpec, FourMomentum, X_HAT
from relbell.observables import (
    REST_OPTIMAL_SETTINGS,
    chsh,
    chsh_case1_closed,
    chsh_universal,
)
from relbell.optimizer import maximize_chsh
from relbell.verify import run_checks
from relbell.wigner import wigner_angle

BETA_CLAMP = 1.0 - 1e-12

#: Bell states whose boosted form depends on the Wigner angle (and thus E/m).
ANGLE_DEPENDENT_STATES = ("00", "11")

ENV_SEED = "RELBELL_SEED"


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _resolve_seed(parser: argparse.ArgumentParser, flag_value, required: bool = False):
    if flag_value is not None:
        return flag_value
    env = os.environ.get(ENV_SEED)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            parser.error(f"{ENV_SEED} must be an integer, got {env!r}")
    if required:
        parser.error(f"a seed is required here (pass --seed or set {ENV_SEED})")
    return 0


def _beta_grid(parser, beta_min: float, beta_max: float, steps: int) -> np.ndarray:
    if not 0.0 <= beta_min < beta_max <= 1.0:
        parser.error(f"need 0 <= beta-min < beta-max <= 1, got [{beta_min}, {beta_max}]")
    if steps < 2:
        parser.error(f"steps must be >= 2, got {steps}")
    return np.linspace(beta_min, beta_max, steps)


def _write_csv(parser, path: str, header: str, rows) -> None:
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(header + "\n")
            for row in rows:
                fh.write(",".join(row) + "\n")
    except OSError as exc:
        parser.error(f"cannot write {path!r}: {exc}")


def _boosted_pair(state: str, beta: float, e_over_m: float):
    p = FourMomentum.along_z(e_over_m)
    s = bell_state(int(state[0]), int(state[1]), p)
    if beta == 0.0:
        return s
    return boost_two_particle(s, BoostSpec(X_HAT, beta))


def cmd_wigner_scan(parser, args) -> int:
    grid = _beta_grid(parser, args.beta_min, args.beta_max, args.steps)
    ratios = args.e_over_m
    rows = []
    for r in ratios:
        for beta in grid:
            b = min(float(beta), BETA_CLAMP)
            rows.append((_fmt(b), _fmt(r), _fmt(wigner_angle(b, r))))
    _write_csv(parser, args.out, "beta,e_over_m,omega_rad", rows)
    return 0


def cmd_chsh_scan(parser, args) -> int:
    grid = _beta_grid(parser, args.beta_min, args.beta_max, args.steps)
    state = args.state
    angle_dependent = state in ANGLE_DEPENDENT_STATES
    if angle_dependent and args.e_over_m is None:
        parser.error(f"--e-over-m is required for state {state} (the curve depends on it)")
    e_over_m = args.e_over_m if args.e_over_m is not None else 10.0
    if args.vectors == "optimal":
        seed = _resolve_seed(parser, args.seed, required=True)
        streams = np.random.SeedSequence(seed).spawn(len(grid))
    rows = []
    for k, beta in enumerate(grid):
        b = min(float(beta), BETA_CLAMP)
        s = _boosted_pair(state, b, e_over_m)
        if args.vectors == "optimal":
            row_seed = int(streams[k].generate_state(1)[0])
            value = maximize_chsh(s, b, X_HAT, restarts=args.restarts,
                                  tol=args.tol, seed=row_seed).value
        else:
            value = chsh(s, _scan_settings(args.vectors), b, X_HAT)
        omega = _fmt(wigner_angle(b, e_over_m)) if angle_dependent else ""
        rows.append((_fmt(b), _fmt(value), omega))
    _write_csv(parser, args.out, "beta,chsh,omega_rad", rows)
    return 0


def _scan_settings(vectors: str):
    from relbell.observables import CASE1_SETTINGS, CASE2_SETTINGS

    return CASE1_SETTINGS if vectors == "case1" else CASE2_SETTINGS


def cmd_verify(parser, args) -> int:
    seed = _resolve_seed(parser, args.seed)
    if args.samples < 1:
        parser.error(f"samples must be >= 1, got {args.samples}")
    results = run_checks(seed, args.samples)
    failures = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"check {res.name}: max_residual={res.residual:.3e} "
              f"tol={res.tolerance:.1e} samples={res.samples} {status}")
        if not res.passed:
            failures += 1
            print(f"  worst inputs: {res.worst}")
    print(f"verify: {len(results) - failures}/{len(results)} checks passed "
          f"(seed={seed}, samples={args.samples})")
    if args.dump:
        for state in ("00", "01", "10", "11"):
            print(f"# state {state} boosted beta=0.6 e_over_m=10")
            print(dump_state(_boosted_pair(state, 0.6, 10.0)), end="")
    return 0 if failures == 0 else 1


def cmd_optimize(parser, args) -> int:
    if not 0.0 <= args.beta < 1.0:
        parser.error(f"beta must lie in [0, 1), got {args.beta}")
    if args.restarts < 1:
        parser.error("restarts must be >= 1")
    if args.tol <= 0:
        parser.error("tol must be positive")
    seed = _resolve_seed(parser, args.seed)
    s = _boosted_pair(args.state, args.beta, args.e_over_m)
    result = maximize_chsh(s, args.beta, X_HAT, restarts=args.restarts,
                           tol=args.tol, seed=seed)
    baseline = chsh(s, REST_OPTIMAL_SETTINGS[args.state], args.beta, X_HAT)
    print(f"state {args.state}")
    print(f"beta {_fmt(args.beta)}")
    print(f"e_over_m {_fmt(args.e_over_m)}")
    print(f"value {_fmt(result.value)}")
    print(f"baseline_fixed_settings {_fmt(baseline)}")
    print(f"iterations {result.iterations}")
    print(f"restarts_used {result.restarts_used}")
    print(f"converged {'true' if result.converged else 'false'}")
    for name, v in (("a", result.settings.a), ("a_prime", result.settings.a_prime),
                    ("b", result.settings.b), ("b_prime", result.settings.b_prime)):
        print(f"{name} {_fmt(v[0])} {_fmt(v[1])} {_fmt(v[2])}")
    if not result.converged:
        print("warning: polytope did not collapse below tol; value is the best point found")
    return 0


def cmd_eval(parser, args) -> int:
    if not 0.0 <= args.beta <= 1.0:
        parser.error(f"beta must lie in [0, 1], got {args.beta}")
    beta_m = min(args.beta, BETA_CLAMP)  # matrix-path beta
    print(f"beta {_fmt(args.beta)}")
    print(f"e_over_m {_fmt(args.e_over_m)}")
    print(f"omega_rad {_fmt(wigner_angle(beta_m, args.e_over_m))}")
    print(f"chsh_universal {_fmt(chsh_universal(args.beta))}")
    if args.state is not None:
        s = _boosted_pair(args.state, beta_m, args.e_over_m)
        print(f"kin_factor {_fmt(s.kin_factor)}")
        if args.vectors == "optimal":
            seed = _resolve_seed(parser, args.seed, required=True)
            res = maximize_chsh(s, beta_m, X_HAT, restarts=args.restarts,
                                tol=args.tol, seed=seed)
            print(f"chsh_optimal {_fmt(res.value)}")
        else:
            value = chsh(s, _scan_settings(args.vectors), beta_m, X_HAT)
            print(f"chsh_{args.vectors} {_fmt(value)}")
            if args.state in ANGLE_DEPENDENT_STATES and args.vectors == "case1":
                om = wigner_angle(beta_m, args.e_over_m)
                print(f"chsh_closed {_fmt(chsh_case1_closed(args.beta if args.beta < 1 else beta_m, om))}")
            elif args.vectors == "case2" and args.state in ("01", "10"):
                print(f"chsh_closed {_fmt(chsh_universal(args.beta))}")
        if args.dump:
            print(dump_state(s), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relbell",
        description="Wigner rotations, boosted Bell pairs and relativistic CHSH observables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wigner-scan", help="rotation angle over a beta grid (CSV)")
    p.add_argument("--beta-min", type=float, default=0.0)
    p.add_argument("--beta-max", type=float, default=0.99)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--e-over-m", type=_ratio_list, default=(10.0, 100.0, 1000.0),
                   help="comma-separated E/m values (default 10,100,1000)")
    p.add_argument("--out", required=True, help="output CSV path")

    p = sub.add_parser("chsh-scan", help="CHSH of a boosted Bell pair over a beta grid (CSV)")
    p.add_argument("--beta-min", type=float, default=0.0)
    p.add_argument("--beta-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--state", choices=("00", "01", "10", "11"), default="10")
    p.add_argument("--vectors", choices=("case1", "case2", "optimal"), default="case2")
    p.add_argument("--e-over-m", type=_ratio, default=None,
                   help="E/m of the pair (required for states 00 and 11)")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("verify", help="run the randomized invariant suite")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--dump", action="store_true",
                   help="also print reference boosted-state dumps")

    p = sub.add_parser("optimize", help="maximize CHSH over measurement directions")
    p.add_argument("--state", choices=("00", "01", "10", "11"), default="10")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--e-over-m", type=_ratio, default=10.0)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("eval", help="single-point quantities")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--e-over-m", type=_ratio, default=10.0)
    p.add_argument("--state", choices=("00", "01", "10", "11"), default=None)
    p.add_argument("--vectors", choices=("case1", "case2", "optimal"), default="case2")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--dump", action="store_true", help="print the state dump")

    return parser


def _ratio(text: str) -> float:
    value = float(text)
    if value < 1.0:
        raise argparse.ArgumentTypeError(f"E/m must be >= 1, got {value}")
    return value


def _ratio_list(text: str) -> tuple:
    return tuple(_ratio(part) for part in text.split(","))


_COMMANDS = {
    "wigner-scan": cmd_wigner_scan,
    "chsh-scan": cmd_chsh_scan,
    "verify": cmd_verify,
    "optimize": cmd_optimize,
    "eval": cmd_eval,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](parser, args)


if __name__ == "__main__":
    sys.exit(main())
