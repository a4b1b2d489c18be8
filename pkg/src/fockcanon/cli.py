"""Command-line entry point: ``fockcanon <subcommand> [options]``.

Complex numbers are passed as ``re,im``.  JSON artifacts use fixed key order
and 17 significant digits so that reruns are byte-identical.  Errors go to
stderr as ``{"error": <ClassName>, "message": ...}`` with exit status 2;
``verify`` and ``verify-theorem-e`` exit with 1 when a check fails.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import hermite as hm
from . import lct, spectral, verification
from .errors import FockCanonError, NotInFock, UsageError
from .fock import QuadratureRule, default_nodes
from .group import GroupElement, RealSymplecticMatrix, cocycle
from .kernel import kernel_compose, kernel_eval, kernel_in_fock, kernel_norm
from .operators import OperatorClass, classify, hs_norm_sq, matrix, operator_rule


@dataclass(frozen=True)
class RunConfig:
    nodes: int
    N: int = 64
    tol: float = 1e-6
    output: str | None = None
    format: str = "json"
    seed: int = verification.DEFAULT_SEED
    radius: float | None = None

    def __post_init__(self):
        if self.nodes < 16:
            raise UsageError(f"--nodes must be >= 16, got {self.nodes}")
        if self.N < 8:
            raise UsageError(f"--N must be >= 8, got {self.N}")
        if not self.tol > 0:
            raise UsageError("--tol must be positive")
        if self.format not in ("json", "csv"):
            raise UsageError(f"unknown format {self.format!r}")

    def rule(self) -> QuadratureRule:
        return QuadratureRule.gauss_hermite(self.nodes, radius=self.radius)


# ---- deterministic output -------------------------------------------------

def _num(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    if x == int(x) and abs(x) < 1e16:
        return repr(float(x))
    return format(x, ".17g")


def dumps(obj) -> str:
    """JSON with 17 significant digits; complex numbers become ``[re, im]``."""
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return dumps([complex(obj).real, complex(obj).imag])
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _emit(text: str, cfg: RunConfig):
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---- argument helpers -----------------------------------------------------

def parse_complex(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise UsageError(f"expected 're,im', got {text!r}")


def parse_floats(text: str, count: int) -> list[float]:
    try:
        vals = [float(p) for p in text.split(",")]
    except ValueError:
        vals = []
    if len(vals) != count:
        raise UsageError(f"expected {count} comma-separated numbers, got {text!r}")
    return vals


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _element(args, s="s", t="t") -> GroupElement:
    return GroupElement(parse_complex(getattr(args, s)), parse_complex(getattr(args, t)))


# ---- subcommands ----------------------------------------------------------

def cmd_classify(args, cfg):
    g = _element(args)
    kind = classify(g)
    hs = hs_norm_sq(g) if kind is OperatorClass.HILBERT_SCHMIDT else None
    _emit(dumps({"class": kind.value, "hs_norm_sq": hs}) + "\n", cfg)
    return 0


def cmd_kernel(args, cfg):
    g = _element(args)
    z, w = parse_complex(args.z), parse_complex(args.w)
    out = {"s": g.s, "t": g.t, "z": z, "w": w, "kernel": kernel_eval(g, z, w),
           "kernel_norm": kernel_norm(g, w) if kernel_in_fock(g) else None}
    _emit(dumps(out) + "\n", cfg)
    return 0


def cmd_matrix(args, cfg):
    g = _element(args)
    rule = cfg.rule() if args.method == "quadrature" else None
    M = matrix(g, cfg.N, args.method, rule)
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in M:
            writer.writerow([f"{_num(v.real)},{_num(v.imag)}" for v in row])
        _emit(buf.getvalue(), cfg)
    else:
        _emit(dumps({"s": g.s, "t": g.t, "N": cfg.N, "method": args.method,
                     "matrix": [[v for v in row] for row in M]}) + "\n", cfg)
    return 0


def cmd_eigen(args, cfg):
    g = _element(args)
    # command-line decimals rarely hit |s|^2 - |t|^2 = 1 exactly; within --tol,
    # rescale s onto SL and say so
    projected = False
    if not g.in_sl() and abs(g.det() - 1) <= cfg.tol and g.s != 0:
        g = GroupElement(g.s * math.sqrt(1 + abs(g.t) ** 2) / abs(g.s), g.t)
        projected = True
        print(dumps({"note": "s rescaled onto SL", "s": g.s}), file=sys.stderr)
    data = spectral.spectral_data(g)
    rule = operator_rule(g, cfg.nodes)
    rows = [{"n": n, "lambda": spectral.eigenvalue(g, n, data),
             "residual": spectral.eigen_residual(g, n, rule=rule, data=data),
             "projected": projected}
            for n in range(args.nmax + 1)]
    _emit(dumps(rows) + "\n", cfg)
    return 0


def cmd_compose(args, cfg):
    g1, g2 = _element(args, "s1", "t1"), _element(args, "s2", "t2")
    out = {"product": g1 @ g2}
    if g1.in_sl() and g2.in_sl():
        out["cocycle"] = cocycle(g1, g2)
    else:
        out["cocycle"] = None
    try:
        comp = kernel_compose(g1, g2)
        out["kernel_sign"] = comp.sign
        out["z_coeff"], out["u_coeff"] = comp.z_coeff, comp.u_coeff
    except NotInFock:
        out["kernel_sign"] = None
    out["product"] = out["product"].to_dict()
    _emit(dumps(out) + "\n", cfg)
    return 0


def _transform(args) -> tuple[RealSymplecticMatrix | None, float | None]:
    if args.matrix:
        return RealSymplecticMatrix(*parse_floats(args.matrix, 4)), None
    if args.frft is not None:
        return None, args.frft
    if args.fresnel is not None:
        return RealSymplecticMatrix.fresnel(args.fresnel), None
    if args.chirp is not None:
        return RealSymplecticMatrix.chirp(args.chirp), None
    return RealSymplecticMatrix.dilation(args.dilate), None


def _input_function(args):
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                data = json.load(fh)
            grid = np.asarray(data["grid"], dtype=float)
            vals = np.array([complex(*v) if isinstance(v, list) else complex(v)
                             for v in data["values"]])
            weights = np.gradient(grid)
        except (OSError, KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"cannot read samples from {args.input}: {exc}") from None
        return lct.SampledRealFunction(grid, vals, lct.WeightKind.UNIFORM, weights)
    preset = args.preset
    if preset == "gaussian":
        return lambda x: np.exp(-np.asarray(x) ** 2)
    if preset.startswith("hermite:"):
        try:
            n = int(preset.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad preset {preset!r}") from None
        return lct.hermite_gaussian(n)
    raise UsageError(f"unknown preset {preset!r}")


def cmd_lct(args, cfg):
    A, alpha = _transform(args)
    f = _input_function(args)
    xs = np.linspace(args.xmin, args.xmax, args.points)
    vals = lct.frft(alpha, f, xs) if A is None else lct.lct_apply(A, f, xs)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "re", "im"])
    for x, v in zip(xs, np.atleast_1d(vals)):
        writer.writerow([_num(x), _num(v.real), _num(v.imag)])
    _emit(buf.getvalue(), cfg)
    return 0


def cmd_hermite(args, cfg):
    delta = parse_complex(args.delta)
    P = hm.generalized_hermite(args.n, delta)
    R = hm.generalized_hermite_recursive(args.n, delta)
    agree = bool(np.allclose(P.coef, R.coef, rtol=1e-12, atol=0))
    _emit(dumps({"n": args.n, "delta": delta, "coefficients": list(P.coef),
                 "recursion_agrees": agree}) + "\n", cfg)
    return 0


def _report(results, cfg) -> int:
    for r in results:
        print(r.line(), file=sys.stderr)
    report = {"seed": cfg.seed, "all_passed": all(r.passed for r in results),
              "checks": [{k: v for k, v in r.to_dict().items() if k != "seconds"} for r in results]}
    _emit(dumps(report) + "\n", cfg)
    return 0 if report["all_passed"] else 1


def cmd_verify_theorem_e(args, cfg):
    ids = ("integral_equation", "gaussian_moments")
    return _report([verification.run_check(i, cfg.seed) for i in ids], cfg)


def cmd_verify(args, cfg):
    ids = args.only or verification.CHECK_IDS
    unknown = [i for i in ids if i not in verification.CHECK_IDS]
    if unknown:
        raise UsageError(f"unknown check ids {unknown}; choose from {list(verification.CHECK_IDS)}")
    return _report([verification.run_check(i, cfg.seed) for i in ids], cfg)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--nodes", type=int, default=None,
                        help="Gauss-Hermite nodes per axis (default $FOCKCANON_NODES or 64)")
    common.add_argument("--radius", type=float, default=None, help="drop planar nodes beyond this radius")
    common.add_argument("--N", type=int, default=64, help="matrix truncation")
    common.add_argument("--tol", type=float, default=1e-6)
    common.add_argument("--output", "-o", default=None, help="write the artifact here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=verification.DEFAULT_SEED)

    parser = _Parser(prog="fockcanon", description="Two-parameter Gaussian-kernel operators on F^2 and their linear canonical transform counterparts.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    def st(p, s="--s", t="--t"):
        p.add_argument(s, required=True, help="re,im")
        p.add_argument(t, required=True, help="re,im")

    st(add("classify", cmd_classify, "unbounded / unitary / Hilbert-Schmidt"))
    p = add("kernel", cmd_kernel, "evaluate K^(s,t)(z, w) and ||K_w||")
    st(p)
    p.add_argument("--z", required=True)
    p.add_argument("--w", required=True)
    p = add("matrix", cmd_matrix, "N x N matrix in the monomial basis")
    st(p)
    p.add_argument("--method", choices=("closed_form", "quadrature"), default="closed_form")
    p = add("eigen", cmd_eigen, "eigenvalues and eigen-residuals")
    st(p)
    p.add_argument("--nmax", type=int, default=4)
    p = add("compose", cmd_compose, "group product and cocycle")
    st(p, "--s1", "--t1")
    st(p, "--s2", "--t2")
    p = add("lct", cmd_lct, "apply a linear canonical transform to samples")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--matrix", help="a,b,c,d")
    which.add_argument("--frft", type=float, help="angle alpha")
    which.add_argument("--fresnel", type=float, help="b")
    which.add_argument("--chirp", type=float, help="tau")
    which.add_argument("--dilate", type=float, help="r")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", help="JSON file {grid: [...], values: [[re, im], ...]}")
    src.add_argument("--preset", default="gaussian", help="gaussian or hermite:n")
    p.add_argument("--xmin", type=float, default=-3.0)
    p.add_argument("--xmax", type=float, default=3.0)
    p.add_argument("--points", type=int, default=61)
    p = add("hermite", cmd_hermite, "coefficients of the delta-Hermite polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", default="1,0")
    add("verify-theorem-e", cmd_verify_theorem_e, "integral-equation and Gaussian-moment battery")
    p = add("verify", cmd_verify, "run the acceptance checks")
    p.add_argument("--only", nargs="+", default=None, help="subset of check ids")
    return parser


def run_command(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = RunConfig(nodes=default_nodes() if args.nodes is None else args.nodes,
                        N=args.N, tol=args.tol, output=args.output, format=args.format,
                        seed=args.seed, radius=args.radius)
        return args.func(args, cfg)
    except (FockCanonError, ValueError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    sys.exit(run_command(argv))
