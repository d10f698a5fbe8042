"""Command-line front end: ``slcob <command> ...`` (also ``python -m slcob``).

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 internal or calibration defect.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import adams, chern, flops, genus, lazard, suites
from .errors import (CalibrationError, ContextError, DegreeError, DomainError, FlopDefect,
                     InternalConsistencyError, StructuralDefect)
from .exactalg import Partition

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEFECT = 0, 1, 2, 3
CACHE_ENV = "SLCOB_CACHE_DIR"


class UsageError(Exception):
    pass


@dataclass
class Config:
    N: int = 12
    primes: list[int] = field(default_factory=lambda: [3, 5, 7])
    p: int = 1
    seed: int = 20240601
    cache_dir: str | None = None
    format: str = "json"

    def validate(self) -> "Config":
        if self.N < 4:
            raise UsageError("truncation N must be >= 4")
        for l in self.primes:
            if l < 3 or l % 2 == 0 or any(l % q == 0 for q in range(3, int(l ** 0.5) + 1, 2)):
                raise UsageError(f"primes must be odd primes, got {l}")
            if l == self.p:
                raise UsageError(f"prime {l} equals the exponential characteristic")
        if self.p != 1 and (self.p < 2 or any(self.p % q == 0 for q in range(2, int(self.p ** 0.5) + 1))):
            raise UsageError(f"p must be 1 or a prime, got {self.p}")
        if self.format not in ("json", "text"):
            raise UsageError(f"unknown format {self.format!r}")
        return self


def load_config(path: str | None, overrides: dict[str, Any]) -> Config:
    """Config file (JSON) < environment < command-line flags."""
    cfg = Config()
    if path:
        try:
            data = json.loads(Path(path).read_text())
        except OSError as e:
            raise UsageError(f"cannot read config {path}: {e}") from None
        except json.JSONDecodeError as e:
            raise UsageError(f"malformed config JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
        unknown = set(data) - set(asdict(cfg))
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        cfg = replace(cfg, **data)
    if cfg.cache_dir is None and os.environ.get(CACHE_ENV):
        cfg = replace(cfg, cache_dir=os.environ[CACHE_ENV])
    cfg = replace(cfg, **{k: v for k, v in overrides.items() if v is not None})
    return cfg.validate()


# -- input helpers -----------------------------------------------------------------------

def read_json_arg(text: str | None, file: str | None) -> Any:
    if file:
        try:
            text = sys.stdin.read() if file == "-" else Path(file).read_text()
        except OSError as e:
            raise UsageError(f"cannot read {file}: {e}") from None
    if text is None:
        raise UsageError("missing JSON input (positional argument or --file)")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"malformed JSON at line {e.lineno} column {e.colno} (char {e.pos}): {e.msg}") from None


def _variety(desc) -> chern.VarietyData:
    if not isinstance(desc, dict) or "kind" not in desc:
        raise UsageError("variety descriptor must be an object with a 'kind' field")
    try:
        return chern.from_descriptor(desc)
    except (KeyError, TypeError) as e:
        raise UsageError(f"bad variety descriptor: {e}") from None


def _frac(v) -> str:
    return str(Fraction(v))


def _ell_report(e: genus.EllElement, p: int) -> dict:
    out: dict[str, Any] = {"value": str(e), "degree": e.degree}
    # "stated": Z[1/2p][3a2, a3, a4]; "anchor": Z[1/2p][3a2, a3, 6a2^2 - a4]
    for ring, key in (("stated", "image"), ("anchor", "anchor")):
        member = genus.image_membership(e, p, ring)
        out[f"in_{key}_ring"] = member
        if member:
            out[f"{key}_form"] = genus.image_form(e, ring).to_str()
    return out


# -- commands ------------------------------------------------------------------------

def cmd_variety(args, cfg: Config) -> tuple[dict, int]:
    x = _variety(read_json_arg(args.descriptor, args.file))
    out: dict[str, Any] = {"descriptor": x.descriptor, "dimension": x.dimension,
                           "integral_of_1": _frac(x.integrate(1))}
    nums = chern.chern_monomial_numbers(x)
    out["tangent_chern_numbers"] = {p.monomial_name(): _frac(v) for p, v in nums.items()}
    out["b_class"] = {p.key(): _frac(v) for p, v in chern.conner_floyd_numbers(x).items()}
    s = chern.s_n(x)
    out["s_n"] = _frac(s)
    out["abs_s_n"] = _frac(abs(s))
    out["calabi_yau"] = chern.is_calabi_yau(x)
    out["euler_characteristic"] = _frac(chern.euler_characteristic(x))
    return out, EXIT_OK


def _genus_series(cfg: Config, at_least: int = 4) -> genus.GenusSeries:
    return genus.curve_log(N=max(cfg.N, at_least), cache_dir=cfg.cache_dir)


def cmd_genus(args, cfg: Config) -> tuple[dict, int]:
    data = read_json_arg(args.input, args.file)
    if isinstance(data, dict) and "rootsA" in data:
        d = flops.FlopDatum.from_json(data)
        g = _genus_series(cfg, d.dimension)
        e = flops.flop_ideal_probe(d, g, raise_on_defect=True)
        kind = "flop_difference"
    elif isinstance(data, dict) and ("entries" in data or "components" in data):
        c = lazard.CobClass.from_json(data)
        deg = max(c.degrees(), default=0)
        g = _genus_series(cfg, deg)
        e = lazard.genus_of_class(c, g)
        kind = "class"
    else:
        x = _variety(data)
        g = _genus_series(cfg, x.dimension)
        e = genus.genus_of_variety(x, g)
        kind = "variety"
    out = {"input_kind": kind, **_ell_report(e, cfg.p), "convention": g.metadata()}
    return out, EXIT_OK


def cmd_sn(args, cfg: Config) -> tuple[dict, int]:
    x = _variety(read_json_arg(args.descriptor, args.file))
    n = x.dimension
    s = chern.s_n(x)
    out = {"dimension": n, "s_n_tangent": _frac(s), "s_n_via_log": _frac(chern.s_n_via_log(x)),
           "s_n_b_class": _frac(lazard.s_n_of_class(lazard.b_class(x), n)) if n else "0",
           "abs_s_n": _frac(abs(s))}
    if n >= 1 and s.denominator == 1:
        out["star_condition"] = lazard.star_condition(n, s, cfg.p)
        out["required_form"] = lazard.required_form(n, cfg.p)
    return out, EXIT_OK


def cmd_generators(args, cfg: Config) -> tuple[dict, int]:
    lo = args.n if args.n is not None else args.start
    hi = args.n if args.n is not None else args.stop
    family = read_json_arg(args.family, None) if args.family else None
    reports = []
    for n in range(lo, hi + 1):
        try:
            reports.append(lazard.generator_search(n, cfg.p, family).to_json())
        except DomainError as e:
            raise UsageError(str(e)) from None
    ok = all(r["passes"] for r in reports)
    return {"p": cfg.p, "reports": reports}, EXIT_OK if ok else EXIT_FAIL


def cmd_flop(args, cfg: Config) -> tuple[dict, int]:
    data = read_json_arg(args.datum, args.file)
    try:
        d = flops.FlopDatum.from_json(data)
    except (KeyError, TypeError) as e:
        raise UsageError(f"bad flop datum: {e}") from None
    formula = flops.s_n_flop_formula(d)
    geometric = flops.s_n_flop_geometric(d)
    g = _genus_series(cfg, d.dimension)
    diff = flops.flop_ideal_probe(d, g, raise_on_defect=False)
    out = {"datum": d.to_json(), "n": d.dimension, "formula": _frac(formula),
           "geometric": _frac(geometric), "genus_difference": str(diff),
           "convention": g.metadata()}
    if not diff.is_zero():
        return out, EXIT_DEFECT
    return out, EXIT_OK if formula == geometric else EXIT_FAIL


def cmd_adams(args, cfg: Config) -> tuple[Any, int]:
    sub = args.adams_cmd
    if sub == "table":
        t = adams.e2_generators(args.theory, args.prime, args.max_weight)
        rows = t.to_rows()
        if args.table_format == "tsv":
            lines = ["name\ts\tp\tq"] + [f"{r['name']}\t{r['s']}\t{r['p']}\t{r['q']}" for r in rows]
            return "\n".join(lines), EXIT_OK
        return {"theory": t.theory, "l": t.l, "max_weight": t.max_weight, "generators": rows}, EXIT_OK
    if sub == "poincare":
        t = adams.e2_generators(args.theory, args.prime, args.max_weight)
        us = [args.u] if args.u is not None else list(range(args.max_weight + 1))
        return {"theory": t.theory, "l": t.l,
                "counts": {str(u): adams.poincare_count(t, u) for u in us}}, EXIT_OK
    if sub == "koszul":
        return cmd_koszul(args, cfg)
    raise UsageError("adams needs a subcommand: table, poincare, koszul")


def cmd_koszul(args, cfg: Config) -> tuple[dict, int]:
    k = adams.KoszulComplex(args.prime, args.m, args.max_s, args.max_u, args.rho)
    dims = adams.koszul_ext_dims(k)
    entries = [{"s": b.s, "p": b.p, "q": b.q, "t": b.p - b.s, "dim": v} for b, v in sorted(dims.items())]
    return {"l": k.l, "m": k.m, "max_s": k.max_s, "max_u": k.max_u, "rho_max": k.rho_max,
            "ext": entries}, EXIT_OK


def cmd_verify(args, cfg: Config) -> tuple[dict, int]:
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    if any(n not in suites.SUITES for n in names):
        raise UsageError(f"unknown suite {args.suite!r}; choose from {sorted(suites.SUITES)} or all")
    results = [suites.SUITES[n](cfg) for n in names]
    out = {"suites": [r.to_json() for r in results], "passed": all(r.passed for r in results)}
    if args.artifacts:
        path = Path(args.artifacts)
        path.mkdir(parents=True, exist_ok=True)
        for r in results:
            if not r.passed:
                (path / f"{r.name}-failures.json").write_text(
                    json.dumps(r.failures, sort_keys=True, indent=1))
    return out, EXIT_OK if out["passed"] else EXIT_FAIL


# -- parser and driver ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="slcob", description="Chern numbers, elliptic genus, "
                                 "flops and Adams E2 bookkeeping for SL-cobordism.")
    ap.add_argument("--config", help="JSON config file")
    ap.add_argument("--N", type=int, help="series truncation order (default 12)")
    ap.add_argument("--p", type=int, help="exponential characteristic (1 or a prime)")
    ap.add_argument("--seed", type=int, help="seed for randomized suites")
    ap.add_argument("--primes", type=lambda s: [int(x) for x in s.split(",")],
                    help="comma-separated odd primes l")
    ap.add_argument("--cache-dir", dest="cache_dir", help=f"genus cache directory (env {CACHE_ENV})")
    ap.add_argument("--format", choices=["json", "text"], help="output format")
    ap.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    sp = ap.add_subparsers(dest="command", required=True)

    def with_json_input(p, name):
        p.add_argument(name, nargs="?", help="inline JSON")
        p.add_argument("--file", help="read JSON from a file ('-' for stdin)")

    with_json_input(sp.add_parser("variety", help="Chern numbers, s_n and CY flag"), "descriptor")
    with_json_input(sp.add_parser("genus", help="elliptic genus of a variety, class or flop"), "input")
    with_json_input(sp.add_parser("sn", help="s_n and the generator criterion"), "descriptor")
    g = sp.add_parser("generators", help="search generator witnesses")
    g.add_argument("--n", type=int)
    g.add_argument("--from", dest="start", type=int, default=2)
    g.add_argument("--to", dest="stop", type=int, default=10)
    g.add_argument("--family", help="JSON search-family overrides")
    with_json_input(sp.add_parser("flop", help="s_n formula vs geometry and genus difference"), "datum")

    def koszul_args(p):
        p.add_argument("--prime", type=int, default=3)
        p.add_argument("--m", type=int, default=3)
        p.add_argument("--max-s", dest="max_s", type=int, default=4)
        p.add_argument("--max-u", dest="max_u", type=int, default=30)
        p.add_argument("--rho", type=int, default=0, help="include rho powers up to this exponent")

    a = sp.add_parser("adams", help="E2 generator tables and counts")
    asp = a.add_subparsers(dest="adams_cmd", required=True)
    for name in ("table", "poincare"):
        p = asp.add_parser(name)
        p.add_argument("--theory", choices=["mgl", "msl", "MGL", "MSL"], default="msl")
        p.add_argument("--prime", type=int, default=3)
        p.add_argument("--max-weight", dest="max_weight", type=int, default=30)
        if name == "table":
            p.add_argument("--format", dest="table_format", choices=["json", "tsv"], default="json")
        else:
            p.add_argument("--u", type=int)
    koszul_args(asp.add_parser("koszul"))
    koszul_args(sp.add_parser("koszul", help="Koszul Ext dimensions"))
    v = sp.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help="genus-anchors | flops | star | adams | koszul | pushforward | all")
    v.add_argument("--artifacts", help="directory for failure artifacts")
    return ap


COMMANDS = {"variety": cmd_variety, "genus": cmd_genus, "sn": cmd_sn,
            "generators": cmd_generators, "flop": cmd_flop, "adams": cmd_adams,
            "koszul": cmd_koszul, "verify": cmd_verify}


def _render_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_render_text(v, indent) if isinstance(v, (dict, list)) else f"{pad}- {v}"
                         for v in obj)
    return f"{pad}{obj}"


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    overrides = {"N": args.N, "p": args.p, "seed": args.seed, "primes": args.primes,
                 "cache_dir": args.cache_dir, "format": args.format}
    started = time.perf_counter()
    try:
        cfg = load_config(args.config, overrides)
        outputs, code = COMMANDS[args.command](args, cfg)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, DegreeError, ContextError, ValueError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FlopDefect as e:
        print(json.dumps({"defect": "flop", "difference": str(e.difference)}), file=stdout)
        return EXIT_DEFECT
    except (CalibrationError, InternalConsistencyError, StructuralDefect) as e:
        print(f"defect: {e}", file=sys.stderr)
        return EXIT_DEFECT
    if isinstance(outputs, str):
        print(outputs, file=stdout)
        return code
    inputs = {k: v for k, v in vars(args).items() if k not in ("timing", "config")}
    digest = hashlib.sha256(json.dumps({"inputs": inputs, "config": asdict(cfg)}, sort_keys=True,
                                       default=str).encode()).hexdigest()
    report: dict[str, Any] = {"command": args.command, "inputs_digest": digest, "outputs": outputs}
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - started, 3)
    if cfg.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False), file=stdout)
    else:
        print(_render_text(report), file=stdout)
    return code


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
