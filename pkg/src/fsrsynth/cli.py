"""Command-line front end: synthesis reports, enumerations, profiles, traces and oracle checks.

Exit codes: 0 success, 1 oracle mismatch, 2 bad configuration, 3 truncated
enumeration under ``--strict`` or an oracle search that is too large.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import __version__, oracle, parametrize, synthesis
from .errors import ModeMismatchError, OracleCostError, TruncationError
from .poly import Poly
from .ring import Modulus

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG, EXIT_INFEASIBLE = 0, 1, 2, 3


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    sequence: list[int]
    reduced: bool
    modulus: Modulus
    mode: synthesis.Mode
    normalized: bool
    monic: bool
    cap: int
    fmt: str
    strict: bool
    trace: bool = False
    enumerate: bool = False
    profile: bool = False


def parse_sequence(text: str) -> list[int]:
    """Integers separated by commas and/or whitespace; ``#`` starts a comment."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for tok in re.split(r"[,\s]+", line.strip()):
            if not tok:
                continue
            try:
                out.append(int(tok))
            except ValueError:
                raise ConfigError(f"not an integer: {tok!r}") from None
    return out


def build_config(args: argparse.Namespace) -> RunConfig:
    try:
        modulus = Modulus(args.p, args.r)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if args.seq is not None and args.seq_file is not None:
        raise ConfigError("give either --seq or --seq-file, not both")
    if args.seq is not None:
        raw = parse_sequence(args.seq)
    elif args.seq_file is not None:
        try:
            with open(args.seq_file, encoding="utf-8") as fh:
                raw = parse_sequence(fh.read())
        except OSError as exc:
            raise ConfigError(f"cannot read {args.seq_file}: {exc.strerror}") from None
    else:
        raise ConfigError("a sequence is required (--seq or --seq-file)")
    seq = [s % modulus.q for s in raw]

    if args.mode == "auto":
        mode = synthesis.Mode.auto(modulus)
    else:
        mode = synthesis.Mode(args.mode)
        if mode.is_field_engine and not modulus.is_field:
            raise ConfigError(f"--mode {args.mode} needs r = 1")
    if args.cap < 1:
        raise ConfigError("--cap must be positive")
    return RunConfig(
        sequence=seq,
        reduced=seq != raw,
        modulus=modulus,
        mode=mode,
        normalized=args.normalized,
        monic=args.monic,
        cap=args.cap,
        fmt=args.format,
        strict=args.strict,
        trace=getattr(args, "trace", False),
        enumerate=getattr(args, "enumerate", False),
        profile=getattr(args, "profile", False),
    )


def poly_doc(f: Poly) -> dict:
    return {"coeffs": list(f.coeffs), "text": str(f)}


def _descriptor_doc(d: parametrize.ParamDescriptor) -> dict:
    return {
        "pivot": {"row": d.pivot_row, "poly": poly_doc(d.pivot_poly)},
        "scalars": list(d.scalar_domain),
        "terms": [
            {"row": t.row, "poly": poly_doc(t.poly), "degree_bound": t.degree_bound, "coefficients": t.domain.value}
            for t in d.free_terms
        ],
        "count": parametrize.count_parametrization(d),
    }


def _trace_doc(traces: Sequence[synthesis.StepTrace]) -> list[dict]:
    return [
        {
            "k": t.k,
            "delta": list(t.delta),
            "partitions": [list(pt) for pt in t.partitions],
            "pivots": list(t.pivots),
            "E": [[str(e) for e in row] for row in t.update],
        }
        for t in traces
    ]


class _Enumeration:
    """Collects enumerated families and remembers whether any was cut short."""

    def __init__(self, cap: int):
        self.cap = cap
        self.truncated = False

    def run(self, fn, *args) -> tuple[Poly, ...]:
        try:
            return fn(*args, cap=self.cap)
        except TruncationError as exc:
            self.truncated = True
            return exc.partial


def _header(cfg: RunConfig) -> dict:
    return {
        "modulus": {"p": cfg.modulus.p, "r": cfg.modulus.r},
        "mode": cfg.mode.value,
        "sequence": list(cfg.sequence),
        "reduced": cfg.reduced,
    }


def synth_document(cfg: RunConfig, with_enumeration: bool) -> tuple[dict, bool]:
    """The report document and whether any enumeration was truncated."""
    state, traces = synthesis.synthesize(cfg.sequence, cfg.modulus, cfg.mode, keep_trace=cfg.trace)
    doc = _header(cfg)
    doc["complexity"] = state.complexity
    feedback = state.rows[state.pivot_index].g2
    if cfg.normalized:
        feedback = parametrize.normalize_constant(feedback)
    doc["feedback_poly"] = poly_doc(feedback)
    truncated = False
    if cfg.mode is synthesis.Mode.BM_COMPAT_FIELD:
        doc["parametrization"] = None
        doc["reciprocal"] = None
    else:
        rep = parametrize.analyze(state)
        doc["parametrization"] = _descriptor_doc(rep.param_forward)
        min_char = parametrize.make_monic(rep.min_char_poly) if cfg.monic else rep.min_char_poly
        enum = _Enumeration(cfg.cap)
        family = enum.run(parametrize.enumerate_min_char_reciprocal, rep, True)
        doc["reciprocal"] = {
            "complexity": rep.reciprocal_complexity,
            "min_char_poly": poly_doc(min_char),
            "pivot_row": rep.reciprocal_pivot,
            "bidirectional_pivot": rep.bidirectional_pivot,
            "parametrization": _descriptor_doc(rep.param_reciprocal),
            "bidirectional": [poly_doc(f) for f in parametrize.bidirectional_filter(family, constant_one=True)],
        }
        if with_enumeration:
            fwd = enum.run(parametrize.enumerate_shortest_feedback, rep, cfg.normalized)
            rec = family if cfg.monic else enum.run(parametrize.enumerate_min_char_reciprocal, rep, False)
            doc["enumeration"] = {
                "forward": [poly_doc(f) for f in fwd],
                "reciprocal": [poly_doc(f) for f in rec],
            }
        truncated = enum.truncated
        doc["truncated"] = truncated
    if cfg.profile:
        doc["profile"] = parametrize.complexity_profile(cfg.sequence, cfg.modulus, cfg.mode)
    if cfg.trace:
        doc["trace"] = _trace_doc(traces)
    return doc, truncated


def _diff(name: str, engine: Sequence[Poly], brute: Sequence[Poly]) -> list[str]:
    a, b = set(engine), set(brute)
    if a == b:
        return []
    out = [f"{name}: engine {len(a)} vs oracle {len(b)}"]
    out += [f"  only engine: {f}" for f in sorted(a - b, key=Poly.sort_key)]
    out += [f"  only oracle: {f}" for f in sorted(b - a, key=Poly.sort_key)]
    return out


def oracle_document(cfg: RunConfig) -> tuple[dict, list[str]]:
    """Engine vs brute force: complexity, normalized forward set, monic reciprocal set."""
    if cfg.mode is synthesis.Mode.BM_COMPAT_FIELD:
        raise ConfigError("oracle-check compares full solution sets and needs a Groebner mode")
    S, m = cfg.sequence, cfg.modulus
    state, _ = synthesis.synthesize(S, m, cfg.mode, keep_trace=False)
    rep = parametrize.analyze(state)
    fwd = parametrize.enumerate_shortest_feedback(rep, normalized=True, cap=cfg.cap)
    rec = parametrize.enumerate_min_char_reciprocal(rep, monic=True, cap=cfg.cap)
    brute_fwd = oracle.oracle_shortest_feedback(S, m, normalized=True)
    brute_rec = oracle.oracle_min_char(S[::-1], m, monic=True)

    problems = []
    if rep.complexity_L != brute_fwd.complexity:
        problems.append(f"complexity: engine {rep.complexity_L} vs oracle {brute_fwd.complexity}")
    if rep.reciprocal_complexity != brute_rec.complexity:
        problems.append(
            f"reciprocal complexity: engine {rep.reciprocal_complexity} vs oracle {brute_rec.complexity}"
        )
    problems += _diff("forward set", fwd, brute_fwd.solutions)
    problems += _diff("reciprocal set", rec, brute_rec.solutions)
    doc = _header(cfg)
    doc["oracle_check"] = {
        "agree": not problems,
        "complexity": {"engine": rep.complexity_L, "oracle": brute_fwd.complexity},
        "reciprocal_complexity": {"engine": rep.reciprocal_complexity, "oracle": brute_rec.complexity},
        "forward_count": {"engine": len(fwd), "oracle": len(brute_fwd.solutions)},
        "reciprocal_count": {"engine": len(rec), "oracle": len(brute_rec.solutions)},
        "differences": problems,
    }
    return doc, problems


def _text(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict) and set(value) == {"coeffs", "text"}:
        return [pad + value["text"]]
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, dict) and set(v) == {"coeffs", "text"}:
                lines.append(f"{pad}{k}: {v['text']}")
            elif isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return lines
    for item in value:
        if _flat(item):
            lines.append(f"{pad}- {_scalar(item)}")
        else:
            sub = _text(item, indent + 1)
            lines.append(f"{pad}- {sub[0].strip()}")
            lines.extend(sub[1:])
    return lines


def _flat(v) -> bool:
    if isinstance(v, list):
        return all(isinstance(x, (int, str, bool)) or x is None for x in v)
    return not isinstance(v, dict)


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"tool": {"name": "fsrsynth", "version": __version__}, "result": doc}, indent=2)
    return "\n".join(_text(doc))


def _common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", type=int, required=True, help="prime p")
    sp.add_argument("--r", type=int, default=1, help="exponent r (modulus p^r)")
    sp.add_argument("--seq", help="sequence S_1..S_N, comma or space separated")
    sp.add_argument("--seq-file", help="file with one integer per line")
    sp.add_argument("--mode", choices=["auto", "field", "ring", "bm-compat"], default="auto")
    sp.add_argument("--normalized", action="store_true", help="scale feedback polynomials to constant term 1")
    sp.add_argument("--monic", action="store_true", help="scale characteristic polynomials to be monic")
    sp.add_argument("--cap", type=int, default=parametrize.DEFAULT_CAP, help="enumeration cap in parameter tuples")
    sp.add_argument("--format", choices=["json", "text"], default="text")
    sp.add_argument("--strict", action="store_true", help="exit 3 instead of printing a truncated enumeration")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fsrsynth", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"fsrsynth {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("synth", help="complexity, feedback polynomial and parametrisations")
    _common(sp)
    sp.add_argument("--trace", action="store_true", help="include per-step discrepancies, pivots and updates")
    sp.add_argument("--enumerate", action="store_true", help="list every shortest register")
    sp.add_argument("--profile", action="store_true", help="include the complexity profile")
    for name, text in [
        ("profile", "complexity of every prefix"),
        ("enumerate", "list every shortest feedback and minimal characteristic polynomial"),
        ("oracle-check", "compare the engine against brute-force search"),
        ("trace", "per-step discrepancies, partitions, pivots and update matrices"),
    ]:
        _common(sub.add_parser(name, help=text))
    return ap


def run(args: argparse.Namespace) -> tuple[int, str]:
    cfg = build_config(args)
    if cfg.reduced:
        print(f"fsrsynth: note: sequence values were reduced modulo {cfg.modulus.q}", file=sys.stderr)
    cmd = args.command
    code = EXIT_OK
    if cmd == "synth":
        doc, truncated = synth_document(cfg, cfg.enumerate)
    elif cmd == "enumerate":
        doc, truncated = synth_document(cfg, True)
    elif cmd == "profile":
        doc, truncated = _header(cfg), False
        doc["profile"] = parametrize.complexity_profile(cfg.sequence, cfg.modulus, cfg.mode)
    elif cmd == "trace":
        _, traces = synthesis.synthesize(cfg.sequence, cfg.modulus, cfg.mode)
        doc, truncated = _header(cfg), False
        doc["trace"] = _trace_doc(traces)
    else:
        doc, problems = oracle_document(cfg)
        truncated = False
        code = EXIT_MISMATCH if problems else EXIT_OK
    if truncated and cfg.strict:
        return EXIT_INFEASIBLE, f"enumeration exceeds --cap {cfg.cap}"
    return code, render(doc, cfg.fmt)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, out = run(args)
    except (ConfigError, ModeMismatchError) as exc:
        print(f"fsrsynth: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (OracleCostError, TruncationError) as exc:
        print(f"fsrsynth: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    if code == EXIT_INFEASIBLE:
        print(f"fsrsynth: {out}", file=sys.stderr)
        return code
    print(out)
    if code == EXIT_MISMATCH:
        print("fsrsynth: engine and oracle disagree", file=sys.stderr)
    return code
