"""Command-line front end: ``multicomm verify`` and ``multicomm compute``.

Exit codes: 0 when every report passes, 1 when any fails, 2 on configuration errors.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .bethe import (
    psi_closed_first,
    psi_closed_second,
    psi_specialization,
    qdet_eigenvalue,
)
from .grid import domain_wall, grid_h, grid_k, psi_layered
from .report import PASS, render_json, render_text
from .rmatrix import Flavor, RMatrix
from .scalars import fmt_q
from .special import ik_determinant, ik_left, ik_right, weight_function
from .states import format_colors
from .suites import SUITES, ConfigError, SuiteConfig, parse_caps, run_suite

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

COMPUTE_OBJECTS = ("weightW", "ikDet", "ikLeft", "ikRight", "domainWall", "gridH", "gridK", "psi", "qdet-eigenvalue")


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ConfigError(f"bad integer list {text!r}") from exc


def _q_list(text):
    if text is None or not text.strip():
        return []
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad rational list {text!r}") from exc


def _partition(text):
    """'2|3|1,4' -> ((2,), (3,), (1, 4)); empty parts allowed."""
    return tuple(tuple(_int_list(part)) for part in text.split("|"))


# ---------------------------------------------------------------------------
# verify


def _verify(args):
    try:
        cfg = SuiteConfig(
            seed=args.seed,
            samples=args.samples,
            flavor=Flavor.parse(args.flavor).value if args.flavor else None,
            N=args.N,
            sizes=tuple(_int_list(args.sizes)) if args.sizes else None,
            n=args.n,
            caps=parse_caps(args.caps),
            jobs=args.jobs,
        )
        if cfg.N is not None and cfg.N < 2:
            raise ConfigError("N must be at least 2")
        if cfg.sizes is not None and (len(cfg.sizes) < 2 or min(cfg.sizes) < 0):
            raise ConfigError("sizes need at least two non-negative entries")
        if cfg.sizes is not None and cfg.N is not None and len(cfg.sizes) != cfg.N:
            raise ConfigError("--sizes length must equal --N")
        reports = run_suite(args.suite, cfg)
    except (ConfigError, ValueError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    text = render_json(reports) if args.format == "json" else render_text(reports)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(render_json(reports))
    return EXIT_OK if all(r.status == PASS for r in reports) else EXIT_FAIL


# ---------------------------------------------------------------------------
# compute


def _params(items):
    out = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep or not key:
            raise ConfigError(f"parameters are key=value, got {item!r}")
        out[key.strip()] = val.strip()
    return out


def _need(p, key):
    if key not in p:
        raise ConfigError(f"missing parameter {key}")
    return p[key]


def _rmatrix(flavor, p):
    fl = Flavor.parse(flavor)
    name = fl.coupling_name
    vals = _q_list(_need(p, name))
    if len(vals) != 1:
        raise ConfigError(f"{name} must be a single rational")
    return RMatrix(fl, vals[0])


def _layers(p, count):
    return [_q_list(p.get(f"u{k}", "")) for k in range(1, count + 1)]


def compute_value(obj, flavor, p):
    """Exact value (a Fraction or a SparseState) and an echo of the parsed inputs."""
    rm = _rmatrix(flavor, p)
    echo = {rm.flavor.coupling_name: fmt_q(rm.coupling)}
    if obj in ("ikDet", "ikLeft", "ikRight", "domainWall"):
        u, v = _q_list(_need(p, "u")), _q_list(_need(p, "v"))
        echo.update(u=u, v=v)
        fn = {"ikDet": ik_determinant, "ikLeft": ik_left, "ikRight": ik_right, "domainWall": domain_wall}[obj]
        return fn(rm, u, v), echo
    if obj == "weightW":
        colors = tuple(_int_list(p.get("I", "")))
        N = int(p.get("N", max(colors, default=1)))
        layers, v = _layers(p, N - 1), _q_list(p.get("v", ""))
        echo.update(N=N, I=format_colors(colors), layers=layers, v=v)
        if p.get("lattice") == "1":
            return psi_layered(rm, layers, v, colors), echo
        return weight_function(rm, layers, v, colors), echo
    if obj in ("gridH", "gridK"):
        N = int(_need(p, "N"))
        us = _layers(p, N - 1)
        vs = [_q_list(p.get(f"v{k}", "")) for k in range(1, N + (obj == "gridK"))]
        echo.update(N=N, u=us, v=vs)
        return (grid_h if obj == "gridH" else grid_k)(rm, N, us, vs), echo
    if obj == "psi":
        w, I = _q_list(_need(p, "w")), _partition(_need(p, "I"))
        form = p.get("form", "specialization")
        echo.update(w=w, I=I, form=form)
        if form == "specialization":
            return psi_specialization(rm, w, I, p.get("variant", "B")), echo
        if form == "closed-first":
            return psi_closed_first(rm, w, I), echo
        if form == "closed-second":
            return psi_closed_second(rm, w, I), echo
        raise ConfigError(f"unknown psi form {form!r}")
    if obj == "qdet-eigenvalue":
        w, J = _q_list(_need(p, "w")), _partition(_need(p, "J"))
        j, u = int(_need(p, "j")), _q_list(_need(p, "u"))[0]
        echo.update(w=w, J=J, j=j, u=u)
        return qdet_eigenvalue(rm, w, J, j, u), echo
    raise ConfigError(f"unknown object {obj!r}")


def _fmt_echo(v):
    if isinstance(v, list):
        return "[" + ", ".join(_fmt_echo(x) for x in v) + "]"
    if isinstance(v, Fraction):
        return fmt_q(v)
    return str(v)


def _compute(args):
    try:
        value, echo = compute_value(args.object, args.flavor, _params(args.params))
    except (ConfigError, ValueError, KeyError, IndexError, ZeroDivisionError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    print(f"{args.object} [{Flavor.parse(args.flavor).value}] " + " ".join(f"{k}={_fmt_echo(v)}" for k, v in echo.items()))
    if hasattr(value, "items"):
        for key, c in sorted(value.items()):
            print(f"e_{','.join(map(str, key))}: {fmt_q(c)}")
        if not value.items():
            print("0")
    else:
        print(fmt_q(value))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(prog="multicomm", description="Exact checks of multiple commutation relations.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="all", choices=SUITES + ("all",))
    v.add_argument("--flavor", choices=[f.value for f in Flavor])
    v.add_argument("--N", type=int)
    v.add_argument("--sizes", help="comma list of family sizes, e.g. 2,1,1")
    v.add_argument("--n", type=int, help="number of quantum sites")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=5)
    v.add_argument("--caps", help="e.g. max_n=3,max_part=2")
    v.add_argument("--out", help="also write the JSON report to this path")
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=_verify)

    c = sub.add_parser("compute", help="evaluate one object exactly")
    c.add_argument("object", choices=COMPUTE_OBJECTS)
    c.add_argument("params", nargs="*", help="key=value pairs, lists comma separated, set partitions as 1,2|3|")
    c.add_argument("--flavor", default="trigA", choices=[f.value for f in Flavor])
    c.set_defaults(func=_compute)
    return ap


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    extra = []
    if argv[:1] == ["compute"]:
        # key=value pairs may sit anywhere among the flags
        extra = [a for a in argv[1:] if "=" in a and not a.startswith("-")]
        argv = [a for a in argv if a not in extra]
    args = build_parser().parse_args(argv)
    if args.command == "compute":
        args.params = list(args.params) + extra
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
