"""Command-line front end.

Subcommands: eval-w, eval-k, hyp2f1, identity-check, bound-check, pzero,
theta, certify-cm, sweep. JSON is the canonical output (schema "1");
CSV is available for sweeps. Identical argv + seed give byte-identical
JSON except for the timing_ms field.

Exit codes: 0 success / bound holds / CertifiedPositive; 1 verified
violation; 2 Inconclusive or Unverifiable; 3 usage or domain error.
"""
from __future__ import annotations

import argparse
import dataclasses
import io
import json
import math
import sys
import time
from dataclasses import dataclass

import numpy as np
from typing import Any, Dict, List, Optional

from . import __version__
from .core import SectorPoint, TolerancePolicy
from .errors import (
    BranchError,
    DomainError,
    NonConvergence,
    UnverifiableError,
    UsageError,
    WhittakerMonoError,
)
from .hyp2f1 import (
    DEFAULT_SEARCH_FLOOR,
    Hyp2F1Params,
    find_largest_negative_zero,
    hyp2f1_general_arg,
)
from .monotone import (
    DEFAULT_N_MAX,
    DEFAULT_T_GRID,
    certify_cm,
    kmod_cm_check,
    sector_certificate,
    theta_from_p,
)
from .bounds import BoundQuery, bessel_bound, bound_sweep, whittaker_bound
from .verify import identity_sweep_general, identity_sweep_modulus
from .whittaker import BesselParams, WhittakerParams, bessel_k, whittaker_w

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3

COMMANDS = ("eval-w", "eval-k", "hyp2f1", "identity-check", "bound-check",
            "pzero", "theta", "certify-cm", "sweep")


@dataclass(frozen=True)
class RunConfig:
    command: str
    parameters: Dict[str, Any]
    output_format: str = "json"
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    seed: int = 0

    def tolerance(self) -> TolerancePolicy:
        return TolerancePolicy(rel_tol=self.rel_tol, abs_tol=self.abs_tol)


def parse_complex(text: str, flag: str) -> complex:
    """Accept 're+imi', '(re,im)', or a plain real."""
    s = text.strip().replace(" ", "")
    try:
        if s.startswith("(") and s.endswith(")"):
            re_s, im_s = s[1:-1].split(",")
            return complex(float(re_s), float(im_s))
        return complex(s.replace("i", "j"))
    except ValueError:
        raise UsageError(f"{flag}: cannot parse complex number {text!r}")


def _point_from_args(ns, flag: str = "--x") -> SectorPoint:
    name = flag.lstrip("-")
    raw = getattr(ns, name, None)
    mod = getattr(ns, "mod", None)
    arg = getattr(ns, "arg", None)
    if raw is not None:
        if mod is not None or arg is not None:
            raise UsageError(f"{flag}: give either {flag} or --mod/--arg, not both")
        return SectorPoint(parse_complex(raw, flag))
    if mod is None or arg is None:
        raise UsageError(f"{flag}: missing (or provide both --mod and --arg)")
    return SectorPoint.from_polar(mod, arg)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="whittaker-mono",
        description="Modulus of Whittaker functions: evaluation, bounds, "
                    "and complete-monotonicity certificates.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command")

    def common(p, fmt=("json", "human")):
        p.add_argument("--format", choices=fmt, default="json")
        p.add_argument("--rel-tol", type=float, default=1e-10)
        p.add_argument("--abs-tol", type=float, default=1e-14)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("eval-w", help="evaluate W_{k,m}(z)")
    p.add_argument("--k", required=True)
    p.add_argument("--m", type=float, required=True)
    p.add_argument("--z", required=True)
    common(p)

    p = sub.add_parser("eval-k", help="evaluate K_nu(z)")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--z", required=True)
    common(p)

    p = sub.add_parser("hyp2f1", help="evaluate 2F1(a,b;c;z)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--z", required=True)
    common(p)

    p = sub.add_parser(
        "identity-check",
        help="seeded dual-route check of the product integral",
        epilog="CSV columns: " + ",".join(CSV_IDENTITY_COLUMNS))
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--general", action="store_true",
                   help="check the general two-index form instead of the modulus form")
    p.add_argument("--threshold", type=float, default=1e-7)
    common(p, fmt=("json", "human", "csv"))

    p = sub.add_parser("bound-check", help="check the quotient bound once")
    p.add_argument("--k")
    p.add_argument("--m", type=float)
    p.add_argument("--nu", type=float)
    p.add_argument("--x")
    p.add_argument("--mod", type=float)
    p.add_argument("--arg", type=float)
    p.add_argument("--tau", type=float, required=True)
    common(p)

    p = sub.add_parser("pzero", help="largest negative zero of the "
                                     "associated hypergeometric function")
    p.add_argument("--nu", type=float)
    p.add_argument("--k")
    p.add_argument("--m", type=float)
    p.add_argument("--search-floor", type=float, default=DEFAULT_SEARCH_FLOOR)
    common(p)

    p = sub.add_parser("theta", help="sector angle from p or from parameters")
    p.add_argument("--p", type=float)
    p.add_argument("--nu", type=float)
    p.add_argument("--k")
    p.add_argument("--m", type=float)
    p.add_argument("--search-floor", type=float, default=DEFAULT_SEARCH_FLOOR)
    common(p)

    p = sub.add_parser("certify-cm", help="complete-monotonicity certificate")
    p.add_argument("--nu", type=float)
    p.add_argument("--k")
    p.add_argument("--m", type=float)
    p.add_argument("--x")
    p.add_argument("--mod", type=float)
    p.add_argument("--arg", type=float)
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p.add_argument("--t-grid", default=",".join(str(t) for t in DEFAULT_T_GRID))
    p.add_argument("--kmod", action="store_true",
                   help="certify t -> |K_nu(tx)|^2 instead")
    common(p)

    p = sub.add_parser("sweep", help="seeded bound-verification sweep",
                       epilog="CSV columns: " + ",".join(CSV_SWEEP_COLUMNS))
    p.add_argument("--kind", choices=("bound", "bessel-bound"), default="bound")
    p.add_argument("--count", type=int, default=100)
    common(p, fmt=("json", "human", "csv"))

    return parser


def parse_args(argv: List[str]) -> RunConfig:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code == 0:  # --help/--version
            raise
        raise UsageError("invalid arguments") from None
    if ns.command is None:
        raise UsageError("no command given; see --help")
    params = {key: val for key, val in vars(ns).items()
              if key not in ("command", "format", "rel_tol", "abs_tol", "seed")}
    return RunConfig(command=ns.command, parameters=params,
                     output_format=ns.format, rel_tol=ns.rel_tol,
                     abs_tol=ns.abs_tol, seed=ns.seed)


def _jsonable(value):
    if isinstance(value, complex):
        return {"re": float(value.real), "im": float(value.imag)}
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    if isinstance(value, SectorPoint):
        return _jsonable(value.value)
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {k: _jsonable(v) for k, v in dataclasses.asdict(value).items()}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.floating):
        return _jsonable(float(value))
    if isinstance(value, np.integer):
        return int(value)
    return value


def _ns(config: RunConfig):
    return argparse.Namespace(**config.parameters)


def _whittaker_or_bessel(config: RunConfig):
    p = config.parameters
    if p.get("nu") is not None:
        if p.get("k") is not None or p.get("m") is not None:
            raise UsageError("--nu: give either --nu or --k/--m, not both")
        return BesselParams(p["nu"])
    if p.get("k") is None or p.get("m") is None:
        raise UsageError("--k: need --k and --m (or --nu)")
    return WhittakerParams(parse_complex(p["k"], "--k"), p["m"])


def run(config: RunConfig):
    """Dispatch a validated config; returns (envelope dict, exit code)."""
    tol = config.tolerance()
    t_start = time.perf_counter()
    outputs: Dict[str, Any] = {}
    code = EXIT_OK
    cmd = config.command
    ns = _ns(config)

    if cmd == "eval-w":
        params = WhittakerParams(parse_complex(ns.k, "--k"), ns.m)
        z = SectorPoint(parse_complex(ns.z, "--z"))
        val = whittaker_w(params, z, tol)
        outputs = {"value": val, "modulus": abs(val), "modulus_sq": abs(val) ** 2}
    elif cmd == "eval-k":
        z = SectorPoint(parse_complex(ns.z, "--z"))
        val = bessel_k(BesselParams(ns.nu), z, tol)
        outputs = {"value": val, "modulus": abs(val), "modulus_sq": abs(val) ** 2}
    elif cmd == "hyp2f1":
        params = Hyp2F1Params(parse_complex(ns.a, "--a"),
                              parse_complex(ns.b, "--b"),
                              parse_complex(ns.c, "--c"))
        val = hyp2f1_general_arg(params, parse_complex(ns.z, "--z"), tol)
        outputs = {"value": val}
    elif cmd == "identity-check":
        sweep = (identity_sweep_general if ns.general
                 else identity_sweep_modulus)(ns.count, config.seed, tol)
        resids = [s.residual for s in sweep if s.error is None]
        failed = [s.index for s in sweep if s.error is not None]
        max_resid = max(resids) if resids else math.nan
        ok = not failed and resids and max_resid < ns.threshold
        outputs = {
            "samples": [dataclasses.asdict(s) for s in sweep],
            "max_residual": max_resid,
            "failed_samples": failed,
            "threshold": ns.threshold,
            "ok": bool(ok),
        }
        code = EXIT_OK if ok else EXIT_VIOLATION
    elif cmd == "bound-check":
        params = _whittaker_or_bessel(config)
        x = _point_from_args(ns)
        try:
            if isinstance(params, BesselParams):
                rep = bessel_bound(params.nu, x, ns.tau, tol)
            else:
                rep = whittaker_bound(BoundQuery(params, x, ns.tau), tol)
            outputs = dataclasses.asdict(rep)
            code = EXIT_OK if rep.holds else EXIT_VIOLATION
        except UnverifiableError as exc:
            outputs = {"unverifiable": str(exc)}
            code = EXIT_INCONCLUSIVE
    elif cmd == "pzero":
        params = _whittaker_or_bessel(config)
        if isinstance(params, BesselParams):
            hyp = Hyp2F1Params.from_bessel(abs(params.nu))
        else:
            hyp = Hyp2F1Params.from_whittaker(params.k, params.m)
        res = find_largest_negative_zero(hyp, ns.search_floor, tol)
        outputs = dataclasses.asdict(res)
    elif cmd == "theta":
        if ns.p is not None:
            outputs = {"theta": theta_from_p(ns.p), "p": ns.p}
        else:
            params = _whittaker_or_bessel(config)
            if isinstance(params, BesselParams):
                params = WhittakerParams(0j, abs(params.nu))
            cert = sector_certificate(params, ns.search_floor, tol)
            outputs = {"theta": cert.theta,
                       "theta_is_exact_pi": cert.theta_is_exact_pi,
                       "p": dataclasses.asdict(cert.p)}
    elif cmd == "certify-cm":
        params = _whittaker_or_bessel(config)
        x = _point_from_args(ns)
        t_grid = tuple(float(s) for s in ns.t_grid.split(","))
        if ns.kmod:
            if not isinstance(params, BesselParams):
                raise UsageError("--kmod: requires --nu")
            cert = kmod_cm_check(params.nu, x, ns.n_max, t_grid, tol)
        else:
            cert = certify_cm(params, x, ns.n_max, t_grid, tol)
        outputs = {
            "verdict": cert.verdict,
            "violation": cert.violation,
            "sign_audit_min": cert.sign_audit_min,
            "n_max": cert.n_max,
            "t_grid": list(cert.t_grid),
            "moments": [{"n": n, "t": t, "value": v}
                        for (n, t), v in sorted(cert.moments.items())],
        }
        code = {"CertifiedPositive": EXIT_OK,
                "ViolationFound": EXIT_VIOLATION,
                "Inconclusive": EXIT_INCONCLUSIVE}[cert.verdict]
    elif cmd == "sweep":
        kind = "whittaker" if ns.kind == "bound" else "bessel"
        samples = bound_sweep(ns.count, config.seed, tol, kind=kind)
        violations = [s.index for s in samples
                      if s.report is not None and not s.report.holds]
        unverifiable = [s.index for s in samples if s.report is None]
        outputs = {
            "samples": [dataclasses.asdict(s) for s in samples],
            "violations": violations,
            "unverifiable": unverifiable,
            "min_slack": min((s.report.slack for s in samples
                              if s.report is not None), default=math.nan),
        }
        if violations:
            code = EXIT_VIOLATION
        elif unverifiable:
            code = EXIT_INCONCLUSIVE
    else:
        raise UsageError(f"unknown command {cmd!r}")

    timing_ms = 1000.0 * (time.perf_counter() - t_start)
    inputs = {k: v for k, v in config.parameters.items() if v is not None}
    envelope = {
        "schema": "1",
        "version": __version__,
        "command": cmd,
        "inputs": _jsonable(inputs),
        "seed": config.seed,
        "rel_tol": config.rel_tol,
        "abs_tol": config.abs_tol,
        "outputs": _jsonable(outputs),
        "timing_ms": timing_ms,
    }
    return envelope, code


# fixed, documented CSV column orders
CSV_SWEEP_COLUMNS = ["index", "kind", "k_re", "k_im", "m", "nu", "x_re",
                     "x_im", "tau", "quotient_sq", "bound", "slack", "holds",
                     "error"]
CSV_IDENTITY_COLUMNS = ["index", "k_re", "k_im", "l_re", "l_im", "m_re",
                        "m_im", "x_re", "x_im", "y_re", "y_im", "t",
                        "residual", "error"]


def _csv_text(envelope) -> str:
    import csv

    cmd = envelope["command"]
    buf = io.StringIO()
    if cmd == "sweep":
        writer = csv.DictWriter(buf, fieldnames=CSV_SWEEP_COLUMNS,
                                lineterminator="\n")
        writer.writeheader()
        for s in envelope["outputs"]["samples"]:
            rep = s["report"] or {}
            writer.writerow({
                "index": s["index"], "kind": s["kind"],
                "k_re": (s["k"] or {}).get("re", ""),
                "k_im": (s["k"] or {}).get("im", ""),
                "m": s["m"] if s["m"] is not None else "",
                "nu": s["nu"] if s["nu"] is not None else "",
                "x_re": s["x"]["re"], "x_im": s["x"]["im"], "tau": s["tau"],
                "quotient_sq": rep.get("quotient_sq", ""),
                "bound": rep.get("bound", ""),
                "slack": rep.get("slack", ""),
                "holds": rep.get("holds", ""),
                "error": s["error"] or "",
            })
    elif cmd == "identity-check":
        def part(v, which):
            # encoded complex ({"re","im"}), plain real, or absent
            if v is None:
                return ""
            if isinstance(v, dict):
                return v[which]
            return v if which == "re" else 0.0

        writer = csv.DictWriter(buf, fieldnames=CSV_IDENTITY_COLUMNS,
                                lineterminator="\n")
        writer.writeheader()
        for s in envelope["outputs"]["samples"]:
            writer.writerow({
                "index": s["index"],
                "k_re": part(s["k"], "re"), "k_im": part(s["k"], "im"),
                "l_re": part(s["l"], "re"), "l_im": part(s["l"], "im"),
                "m_re": part(s["m"], "re"), "m_im": part(s["m"], "im"),
                "x_re": part(s["x"], "re"), "x_im": part(s["x"], "im"),
                "y_re": part(s["y"], "re"), "y_im": part(s["y"], "im"),
                "t": s["t"], "residual": s["residual"],
                "error": s["error"] or "",
            })
    else:
        raise UsageError("--format csv is only available for sweep commands")
    return buf.getvalue()


def render(envelope, output_format: str) -> str:
    if output_format == "json":
        return json.dumps(envelope, sort_keys=True, indent=2)
    if output_format == "csv":
        return _csv_text(envelope)
    # human
    lines = [f"{envelope['command']} (v{envelope['version']})"]
    for key, val in sorted(envelope["outputs"].items()):
        if key == "samples":
            lines.append(f"  samples: {len(val)}")
        else:
            lines.append(f"  {key}: {val}")
    lines.append(f"  timing_ms: {envelope['timing_ms']:.1f}")
    return "\n".join(lines)


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_args(argv)
        envelope, code = run(config)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonConvergence, BranchError, UnverifiableError) as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except WhittakerMonoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render(envelope, config.output_format))
    return code


if __name__ == "__main__":
    sys.exit(main())
