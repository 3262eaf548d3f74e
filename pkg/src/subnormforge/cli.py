"""Command-line front end.

    subnorm-forge <command> --fn <path> --tnorm <desc>
                  [--grid-n N] [--x p/q --y p/q]
                  [--format text|csv|structured] [--out path]

Commands: eval, classify, decompose, oracle, grid, construct-subnorm.
Exit status for classify: 0 when no verdict is No and none Unknown,
2 when any property is No, else 3 when any is Unknown.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .classify import classify, render_structured, render_text
from .fnformat import load_fn, render_fn
from .generated import f_eval, lambda_decompose, make_op, additive_generated
from .oracle import consistency_harness
from .pwfn import decompose
from .tnorms import Approx, GeneratorSpec, parse_tnorm


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="subnorm-forge",
        description="Build F(x,y)=finv(T(f(x),f(y))) from a piecewise "
                    "monotone f and a t-norm, and verify its algebra.")
    p.add_argument("command",
                   choices=["eval", "classify", "decompose", "oracle",
                            "grid", "construct-subnorm"])
    p.add_argument("--fn", help="function description file")
    p.add_argument("--tnorm", help="t-norm descriptor, e.g. product, min, "
                                   "hamacher2, halfprod, gen:neglog, "
                                   "lambda:one-minus-log:1/2")
    p.add_argument("--grid-n", type=int, default=12)
    p.add_argument("--x", help="first argument as p/q")
    p.add_argument("--y", help="second argument as p/q")
    p.add_argument("--gen", help="generator name for construct-subnorm")
    p.add_argument("--lam", help="lambda as p/q for construct-subnorm")
    p.add_argument("--format", choices=["text", "csv", "structured"],
                   default="text")
    p.add_argument("--out", help="output file (default: stdout)")
    return p


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require(args, *names):
    for name in names:
        if getattr(args, name.replace("-", "_")) is None:
            raise SystemExit(f"error: --{name} is required for this command")


def _fmt_value(v) -> str:
    if isinstance(v, Approx):
        return f"{float(v.value):.12f} (+-{float(v.radius):.2e})"
    return f"{v} = {float(v):.12f}"


def cmd_eval(args) -> int:
    _require(args, "fn", "tnorm", "x", "y")
    op = make_op(load_fn(args.fn), parse_tnorm(args.tnorm))
    v = f_eval(op, Fraction(args.x), Fraction(args.y))
    _emit(_fmt_value(v) + "\n", args.out)
    return 0


def cmd_decompose(args) -> int:
    _require(args, "fn")
    d = decompose(load_fn(args.fn))
    lines = [
        f"M={d.m}",
        "S=" + " ".join(f"[{b},{dd}]:c={c}" for b, dd, c in d.s),
        f"C={d.c_set}",
        f"Q={d.q}",
        f"f0plus={d.f0plus}",
        f"f1minus={d.f1minus}",
        f"tau={d.tau}",
        f"upsilon={d.upsilon}",
        "K1=" + ("{" + ",".join(str(k) for k in d.k1) + "}" if d.k1 else "∅"),
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_classify(args) -> int:
    _require(args, "fn", "tnorm")
    report = classify(load_fn(args.fn), parse_tnorm(args.tnorm))
    text = (render_structured(report) if args.format == "structured"
            else render_text(report))
    _emit(text, args.out)
    statuses = [v.status for v in report.properties.values()]
    if "no" in statuses:
        return 2
    if "unknown" in statuses:
        return 3
    return 0


def cmd_oracle(args) -> int:
    _require(args, "fn", "tnorm")
    rep = consistency_harness(load_fn(args.fn), parse_tnorm(args.tnorm),
                              n=args.grid_n)
    _emit(rep.render(), args.out)
    return 0 if rep.ok else 1


def cmd_grid(args) -> int:
    _require(args, "fn", "tnorm")
    t = parse_tnorm(args.tnorm)
    op = make_op(load_fn(args.fn), t)
    n = args.grid_n
    lines = ["x,y,F,F_exact" if t.exact else "x,y,F"]
    for i in range(n + 1):
        for j in range(n + 1):
            x, y = Fraction(i, n), Fraction(j, n)
            v = f_eval(op, x, y)
            if t.exact:
                lines.append(f"{float(x):.12f},{float(y):.12f},"
                             f"{float(v):.12f},{v}")
            else:
                vv = v.value if isinstance(v, Approx) else v
                lines.append(f"{float(x):.12f},{float(y):.12f},"
                             f"{float(vv):.12f}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_construct_subnorm(args) -> int:
    _require(args, "gen", "lam")
    gen = GeneratorSpec(args.gen)
    lam = Fraction(args.lam)
    f, t = lambda_decompose(gen, lam)
    direct = additive_generated(gen)
    op = make_op(f, t)
    dev = 0.0
    for i in range(51):
        for j in range(51):
            x, y = Fraction(i, 50), Fraction(j, 50)
            a = direct(x, y)
            b = f_eval(op, x, y)
            av = a.value if isinstance(a, Approx) else a
            bv = b.value if isinstance(b, Approx) else b
            dev = max(dev, abs(float(av) - float(bv)))
    lines = [render_fn(f).rstrip("\n"), f"tnorm={t}",
             f"max_roundtrip_deviation={dev:.3e}"]
    if gen.g1_zero:
        lines.append("warning: generator has g(1)=0, so the generated "
                     "operation has neutral element 1 and is not proper")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


_COMMANDS = {
    "eval": cmd_eval,
    "classify": cmd_classify,
    "decompose": cmd_decompose,
    "oracle": cmd_oracle,
    "grid": cmd_grid,
    "construct-subnorm": cmd_construct_subnorm,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
