"""Command-line interface.

Exit codes: 0 success, 1 bound violations found by ``verify``, 2 usage or
parse error, 3 spectrum meets the imaginary axis, 4 numerical failure.
"""

import argparse
import json
import sys

import numpy as np

from .bounds import green_bound, params_for
from .dichotomy import split_spectrum
from .ensembles import T_GRID, random_dichotomic_matrix, spawn_rngs
from .errors import DichotomyViolation, GreenBoundError, InvalidInput
from .green import (
    BoundedSolver,
    constant_forcing,
    green_limits,
    green_newton,
    green_projector,
    pulse_forcing,
    residual,
    sine_forcing,
)
from .linalg import eigenvalues, load_matrix, matrix_to_json, op_norm

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE, EXIT_DICHOTOMY, EXIT_NUMERIC = 0, 1, 2, 3, 4


def fmt(x):
    return f"{x:.17g}"


def fmt_c(z):
    z = complex(z)
    return f"{fmt(z.real)}{'+' if z.imag >= 0 else '-'}{fmt(abs(z.imag))}j"


def _matrix(args):
    if not args.matrix:
        raise InvalidInput("--matrix is required")
    return load_matrix(args.matrix)


def _t_grid(args):
    if args.t is not None:
        return np.array(args.t, dtype=float)
    if args.t_min is None or args.t_max is None:
        raise InvalidInput("give --t or both --t-min and --t-max")
    return np.linspace(args.t_min, args.t_max, args.steps)


def _vector(text, n):
    try:
        v = np.array([complex(s.strip()) for s in text.split(",")], dtype=np.complex128)
    except ValueError as exc:
        raise InvalidInput(f"bad --vector {text!r}") from exc
    if v.size == 1 and n > 1:
        v = np.full(n, v[0])
    if v.size != n:
        raise InvalidInput(f"--vector has {v.size} components, matrix dimension is {n}")
    return v


def cmd_spectrum(args, out):
    A = _matrix(args)
    lam = eigenvalues(A)
    norm = op_norm(A)
    try:
        d = split_spectrum(A)
    except DichotomyViolation:
        if args.format == "json":
            json.dump({"eigenvalues": [[z.real, z.imag] for z in lam], "norm": norm,
                       "dichotomy": False}, out)
            out.write("\n")
        else:
            out.write("eigenvalues: " + " ".join(fmt_c(z) for z in lam) + "\n")
        raise
    if args.format == "json":
        json.dump({
            "eigenvalues": [[z.real, z.imag] for z in lam],
            "k": d.k, "m": d.m,
            "gamma_plus": None if d.k == 0 else d.gamma_plus,
            "gamma_minus": None if d.m == 0 else d.gamma_minus,
            "norm": norm, "dichotomy": True,
        }, out)
        out.write("\n")
    else:
        out.write("eigenvalues: " + " ".join(fmt_c(z) for z in lam) + "\n")
        gp = "none" if d.k == 0 else fmt(d.gamma_plus)
        gm = "none" if d.m == 0 else fmt(d.gamma_minus)
        out.write(f"k={d.k} m={d.m} gamma+={gp} gamma-={gm}\n")
        out.write(f"norm={fmt(norm)}\n")
    return EXIT_OK


def _write_matrix_csv(out, label, G):
    for i, row in enumerate(G):
        for j, z in enumerate(row):
            out.write(f"{label},{i},{j},{fmt(z.real)},{fmt(z.imag)}\n")


def cmd_green(args, out):
    A = _matrix(args)
    d = split_spectrum(A)
    if args.t is None or len(args.t) != 1:
        raise InvalidInput("green needs exactly one --t")
    t = args.t[0]
    if t == 0:
        Gp, Gm = green_limits(A, d)
        jump = float(np.linalg.norm(Gp - Gm - np.eye(A.shape[0]), 2))
        if args.format == "json":
            json.dump({"t": 0.0, "G_plus": matrix_to_json(Gp), "G_minus": matrix_to_json(Gm),
                       "jump_minus_identity": jump}, out)
            out.write("\n")
        else:
            out.write("t,i,j,re,im\n")
            _write_matrix_csv(out, "0+", Gp)
            _write_matrix_csv(out, "0-", Gm)
            out.write(f"# jump_minus_identity={fmt(jump)}\n")
        return EXIT_OK
    G = green_newton(A, d, t)
    ref = green_projector(A, d, t)
    disc = float(np.linalg.norm(G - ref, 2))
    if args.format == "json":
        json.dump({"t": t, "G": matrix_to_json(G), "discrepancy": disc}, out)
        out.write("\n")
    else:
        out.write("t,i,j,re,im\n")
        _write_matrix_csv(out, fmt(t), G)
        out.write(f"# discrepancy={fmt(disc)}\n")
    return EXIT_OK


def bound_rows(A, d, ts):
    rows = []
    for t in ts:
        if t == 0:
            continue
        g = float(np.linalg.norm(green_newton(A, d, t), 2))
        b = green_bound(params_for(A, d, t))
        ratio = g / b if b > 0 else 0.0
        rows.append((float(t), g, b, ratio))
    return rows


def cmd_bound(args, out):
    A = _matrix(args)
    d = split_spectrum(A)
    rows = bound_rows(A, d, _t_grid(args))
    if args.format == "json":
        json.dump([dict(zip(("t", "green_norm", "bound", "ratio"), r)) for r in rows], out)
        out.write("\n")
    else:
        out.write("t,green_norm,bound,ratio\n")
        for r in rows:
            out.write(",".join(fmt(x) for x in r) + "\n")
    return EXIT_OK


def verify_trial(rng, n, ts=None, slack=1e-10):
    """Dominance and dual-path checks for one random matrix.

    Returns ``(violations, worst_ratio, max_discrepancy)``.
    """
    ts = np.concatenate([T_GRID, -T_GRID]) if ts is None else ts
    A = random_dichotomic_matrix(rng, n)
    d = split_spectrum(A)
    violations, worst, disc = 0, 0.0, 0.0
    for t in ts:
        G = green_newton(A, d, t)
        g = float(np.linalg.norm(G, 2))
        b = green_bound(params_for(A, d, t))
        if g > b * (1 + slack):
            violations += 1
        if b > 0:
            worst = max(worst, g / b)
        ref = green_projector(A, d, t)
        disc = max(disc, float(np.linalg.norm(G - ref, 2)) / (1 + float(np.linalg.norm(ref, 2))))
    return violations, worst, disc


def cmd_verify(args, out):
    if args.trials < 1:
        raise InvalidInput("--trials must be >= 1")
    if args.dim < 1:
        raise InvalidInput("--dim must be >= 1")
    violations, worst, disc = 0, 0.0, 0.0
    for rng in spawn_rngs(args.seed, args.trials):
        v, w, dd = verify_trial(rng, args.dim)
        violations += v
        worst = max(worst, w)
        disc = max(disc, dd)
    summary = {
        "trials": args.trials, "dim": args.dim, "seed": args.seed,
        "violations": violations, "worst_ratio": worst, "max_dual_path_discrepancy": disc,
    }
    if args.format == "json":
        json.dump(summary, out)
        out.write("\n")
    else:
        for key, val in summary.items():
            out.write(f"{key}: {fmt(val) if isinstance(val, float) else val}\n")
    return EXIT_OK if violations == 0 else EXIT_VIOLATIONS


def make_forcing(name, v, omega):
    if name == "constant":
        return constant_forcing(v)
    if name == "sine":
        return sine_forcing(v, omega)
    if name == "pulse":
        return pulse_forcing(v)
    raise InvalidInput(f"unknown forcing {name!r}")


def cmd_solve(args, out):
    A = _matrix(args)
    d = split_spectrum(A)
    n = A.shape[0]
    f = make_forcing(args.forcing, _vector(args.vector, n), args.omega)
    ts = _t_grid(args)
    solver = BoundedSolver(A, d, f, args.eps)
    xs = solver.solve(ts)
    h = 1e-3
    res = [residual(A, solver, f, t, h) for t in ts]
    if args.format == "json":
        json.dump([{"t": float(t), "x": [[z.real, z.imag] for z in x], "residual": r}
                   for t, x, r in zip(ts, xs, res)], out)
        out.write("\n")
    else:
        cols = ["t"] + [f"{p}_x{i + 1}" for i in range(n) for p in ("re", "im")] + ["residual"]
        out.write(",".join(cols) + "\n")
        for t, x, r in zip(ts, xs, res):
            vals = [fmt(t)] + [fmt(c) for z in x for c in (z.real, z.imag)] + [fmt(r)]
            out.write(",".join(vals) + "\n")
    return EXIT_OK


COMMANDS = {
    "spectrum": cmd_spectrum,
    "green": cmd_green,
    "bound": cmd_bound,
    "verify": cmd_verify,
    "solve": cmd_solve,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="greenbound",
        description="Green's function of x' = Ax + f and closed-form bounds on its norm.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--matrix", metavar="PATH", help="matrix JSON file")
    parser.add_argument("--t", type=float, action="append", help="time value (repeatable)")
    parser.add_argument("--t-min", type=float)
    parser.add_argument("--t-max", type=float)
    parser.add_argument("--steps", type=int, default=11)
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--dim", type=int, default=4)
    parser.add_argument("--forcing", choices=("constant", "sine", "pulse"), default="constant")
    parser.add_argument("--omega", type=float, default=1.0)
    parser.add_argument("--vector", default="1", help="comma-separated forcing direction")
    parser.add_argument("--eps", type=float, default=1e-6)
    parser.add_argument("--out", metavar="PATH")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.seed < 0 or args.seed >= 2**64:
        print("error: --seed must be a 64-bit unsigned integer", file=sys.stderr)
        return EXIT_USAGE
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except (InvalidInput, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DichotomyViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DICHOTOMY
    except GreenBoundError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    finally:
        if args.out:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
