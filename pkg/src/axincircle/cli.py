"""Command-line front end: generation, evaluation, verification, degree audit
and micro-benchmarks.

Instances travel as JSON Lines, one object per line:

    {"id": str, "s1": SITE, "s2": SITE, "s3": SITE, "q": SITE}

where SITE is {"t": "p", "x": str, "y": str} for a point or
{"t": "s", "ax": str, "ay": str, "bx": str, "by": str} for a segment.
Coordinates are decimal integer strings so arbitrary precision survives the
text round-trip.  A record may carry an optional "expected" sign (fixtures and
generated boundary cases).  Exit codes: 0 success / all agree, 1 disagreement
or degree-bound violation, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, TextIO

from .generator import (GenerationExhausted, MIN_BOUND, config_for_index,
                        generate_instance)
from .geometry import (CONFIGS, InstanceRecord, PointSite, SegmentSite, Site,
                       ValidationError, validate_instance)
from .oracle import NoValidCircle, oracle_incircle
from .predicates import incircle
from .signs import DegreeAudit

DEGREE_BOUNDS = {"PPPP": 4, "PPSP": 6, "PSSP": 4, "SSSP": 2,
                 "PPPS": 6, "PPSS": 6, "PSSS": 4, "SSSS": 2}

DEFAULT_BOUND = 10 ** 6
DEFAULT_DEGENERATE_FRAC = Fraction(1, 5)


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    output_path: str | None = None
    seed: int = 0
    count: int = 0
    config_filter: str = "mixed"
    bound: int = DEFAULT_BOUND
    degenerate_fraction: Fraction = DEFAULT_DEGENERATE_FRAC


class ParseError(ValueError):
    pass


def site_to_json(site: Site) -> dict:
    if isinstance(site, PointSite):
        return {"t": "p", "x": str(site.x), "y": str(site.y)}
    return {"t": "s", "ax": str(site.a.x), "ay": str(site.a.y),
            "bx": str(site.b.x), "by": str(site.b.y)}


def site_from_json(obj: object, where: str) -> Site:
    if not isinstance(obj, dict) or "t" not in obj:
        raise ParseError(f"{where}: not a site object")
    try:
        if obj["t"] == "p":
            return PointSite(int(obj["x"]), int(obj["y"]))
        if obj["t"] == "s":
            return SegmentSite.from_endpoints(int(obj["ax"]), int(obj["ay"]),
                                              int(obj["bx"]), int(obj["by"]),
                                              where)
    except ValidationError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{where}: {exc}") from exc
    raise ParseError(f"{where}: unknown site tag {obj['t']!r}")


def record_to_json(rec: InstanceRecord) -> str:
    obj = {"id": rec.id, "s1": site_to_json(rec.s1), "s2": site_to_json(rec.s2),
           "s3": site_to_json(rec.s3), "q": site_to_json(rec.query)}
    if rec.expected is not None:
        obj["expected"] = rec.expected
    return json.dumps(obj, separators=(",", ":"))


def record_from_json(line: str, lineno: int) -> InstanceRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {lineno}: invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError(f"line {lineno}: not an object")
    try:
        rec = InstanceRecord(
            str(obj.get("id", f"line{lineno}")),
            site_from_json(obj["s1"], "s1"),
            site_from_json(obj["s2"], "s2"),
            site_from_json(obj["s3"], "s3"),
            site_from_json(obj["q"], "q"),
            expected=obj.get("expected"),
        )
    except KeyError as exc:
        raise ParseError(f"line {lineno}: missing field {exc}") from exc
    except (ParseError, ValidationError) as exc:
        raise ParseError(f"line {lineno}: {exc}") from exc
    return rec


def _read_records(stream: TextIO, errors: list[str]) -> Iterable[tuple[int, InstanceRecord]]:
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            rec = record_from_json(line, lineno)
            validate_instance(rec)
        except (ParseError, ValidationError) as exc:
            errors.append(f"line {lineno}: {exc}" if not str(exc).startswith("line")
                          else str(exc))
            continue
        yield lineno, rec


def _open_out(path: str | None) -> TextIO:
    return open(path, "w", encoding="utf-8") if path else sys.stdout


def _generated(cfg: RunConfig) -> Iterable[InstanceRecord]:
    for index in range(cfg.count):
        tag = config_for_index(cfg.config_filter, index)
        yield generate_instance(cfg.seed, index, tag, cfg.bound,
                                cfg.degenerate_fraction)


def cmd_gen(cfg: RunConfig) -> int:
    out = _open_out(cfg.output_path)
    try:
        for rec in _generated(cfg):
            out.write(record_to_json(rec) + "\n")
    except GenerationExhausted as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return 1
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_eval(cfg: RunConfig) -> int:
    errors: list[str] = []
    n = 0
    with open(cfg.input_path, "r", encoding="utf-8") if cfg.input_path \
            else sys.stdin as stream:
        out = _open_out(cfg.output_path)
        try:
            for _, rec in _read_records(stream, errors):
                sign = incircle(rec.s1, rec.s2, rec.s3, rec.query)
                out.write(json.dumps({"id": rec.id, "sign": sign},
                                     separators=(",", ":")) + "\n")
                n += 1
        finally:
            if out is not sys.stdout:
                out.close()
    for message in errors:
        print(f"eval: {message}", file=sys.stderr)
    print(f"eval: {n} instances, {len(errors)} malformed", file=sys.stderr)
    return 2 if errors else 0


def _verify_records(records: Iterable[InstanceRecord],
                    out: TextIO) -> tuple[int, int]:
    total = disagreements = 0
    for rec in records:
        total += 1
        sign = incircle(rec.s1, rec.s2, rec.s3, rec.query)
        ref = oracle_incircle(rec.s1, rec.s2, rec.s3, rec.query)
        agree = sign == ref and (rec.expected is None or sign == rec.expected)
        if not agree:
            disagreements += 1
            obj = {"id": rec.id, "sign": sign, "oracle": ref, "agree": False}
            if rec.expected is not None:
                obj["expected"] = rec.expected
            out.write(json.dumps(obj, separators=(",", ":")) + "\n")
    return total, disagreements


def cmd_verify(cfg: RunConfig) -> int:
    errors: list[str] = []
    if cfg.input_path:
        with open(cfg.input_path, "r", encoding="utf-8") as stream:
            records = [rec for _, rec in _read_records(stream, errors)]
    else:
        records = _generated(cfg)
    try:
        total, disagreements = _verify_records(records, sys.stdout)
    except (GenerationExhausted, NoValidCircle) as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 2
    for message in errors:
        print(f"verify: {message}", file=sys.stderr)
    print(f"verify: {total} instances, {disagreements} disagreements",
          file=sys.stderr)
    if errors:
        return 2
    return 1 if disagreements else 0


def cmd_audit(cfg: RunConfig) -> int:
    maxima: dict[str, int] = {}
    attained: dict[str, int] = {}
    counts: dict[str, int] = {}
    for rec in _generated(cfg):
        audit = DegreeAudit()
        incircle(rec.s1, rec.s2, rec.s3, rec.query, audit)
        tag = rec.config
        counts[tag] = counts.get(tag, 0) + 1
        maxima[tag] = max(maxima.get(tag, 0), audit.max_degree)
        if audit.max_degree == DEGREE_BOUNDS[tag]:
            attained[tag] = attained.get(tag, 0) + 1
    ok = True
    for tag in CONFIGS:
        if tag not in counts:
            continue
        bound = DEGREE_BOUNDS[tag]
        status = "OK" if maxima[tag] <= bound else "VIOLATION"
        ok = ok and maxima[tag] <= bound
        print(f"{tag}: max degree {maxima[tag]} (bound {bound}, "
              f"{attained.get(tag, 0)}/{counts[tag]} instances at bound) "
              f"{status}")
    return 0 if ok else 1


def cmd_bench(cfg: RunConfig) -> int:
    buckets: dict[str, list[InstanceRecord]] = {}
    for rec in _generated(cfg):
        buckets.setdefault(rec.config, []).append(rec)
    if not buckets:
        print("bench: no instances")
        return 0
    print(f"{'config':>6}  {'count':>7}  {'fast (s)':>10}  {'oracle (s)':>10}")
    for tag in CONFIGS:
        recs = buckets.get(tag)
        if not recs:
            continue
        t0 = time.perf_counter()
        for rec in recs:
            incircle(rec.s1, rec.s2, rec.s3, rec.query)
        t1 = time.perf_counter()
        for rec in recs:
            oracle_incircle(rec.s1, rec.s2, rec.s3, rec.query)
        t2 = time.perf_counter()
        print(f"{tag:>6}  {len(recs):>7}  {t1 - t0:>10.4f}  {t2 - t1:>10.4f}")
    return 0


def _add_gen_like(sub: argparse.ArgumentParser, with_frac: bool = True) -> None:
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--count", type=int, required=True)
    sub.add_argument("--config", default="mixed",
                     choices=("mixed",) + CONFIGS)
    sub.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    if with_frac:
        sub.add_argument("--degenerate-frac", type=Fraction,
                         default=DEFAULT_DEGENERATE_FRAC,
                         help="fraction of queries placed exactly on the circle")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="axincircle",
        description="Exact incircle predicates for Voronoi diagrams of "
                    "points and axes-aligned segments.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("eval", help="evaluate instances from a JSONL file")
    p.add_argument("--in", dest="input_path")
    p.add_argument("--out", dest="output_path")

    p = subs.add_parser("gen", help="generate a deterministic instance corpus")
    _add_gen_like(p)
    p.add_argument("--out", dest="output_path")

    p = subs.add_parser("verify",
                        help="compare the fast path against the exact oracle")
    p.add_argument("--in", dest="input_path")
    _add_gen_like(p)
    # --count is not required when reading from a file
    for action in p._actions:
        if action.dest == "count":
            action.required = False
            action.default = 0

    p = subs.add_parser("audit", help="certify per-configuration degree bounds")
    _add_gen_like(p)

    p = subs.add_parser("bench", help="time fast path vs oracle")
    _add_gen_like(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        input_path=getattr(args, "input_path", None),
        output_path=getattr(args, "output_path", None),
        seed=getattr(args, "seed", 0),
        count=getattr(args, "count", 0),
        config_filter=getattr(args, "config", "mixed"),
        bound=getattr(args, "bound", DEFAULT_BOUND),
        degenerate_fraction=getattr(args, "degenerate_frac",
                                    DEFAULT_DEGENERATE_FRAC),
    )
    if cfg.command != "eval" and not cfg.input_path and cfg.bound < MIN_BOUND:
        print(f"{cfg.command}: --bound must be at least {MIN_BOUND}",
              file=sys.stderr)
        return 2
    handler = {"eval": cmd_eval, "gen": cmd_gen, "verify": cmd_verify,
               "audit": cmd_audit, "bench": cmd_bench}[cfg.command]
    return handler(cfg)


if __name__ == "__main__":
    sys.exit(main())
