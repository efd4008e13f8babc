"""Command-line front end.

Exit codes: 0 ok, 1 theorem disagreement (or any failed check), 2 parse error,
3 precondition violation, 4 inconclusive.  When a batch hits several, the
first of 2, 3, 1, 4 that occurred wins.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .characterization import INCONCLUSIVE, Caps, PreconditionError, verify_theorem
from .graph import Graph, GraphFormatError, isolated_vertices, iter_graph6, parse_edge_list, to_graph6
from .harness import (
    CHECKS, KINDS, POLICIES, CorpusSpec, analyze_graph, emit_report, gen_corpus, lemma_suite,
    run_corpus, sweep_stream,
)
from .matching import beta
from .pairs import DEFAULT_M2_CAP, solve
from .alternating import DEFAULT_CYCLE_CAP
from .structure import DEFAULT_FOREST_CAP, TemplateError, check_template

EXIT_OK, EXIT_DISAGREE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4
_PRIORITY = (EXIT_PARSE, EXIT_PRECONDITION, EXIT_DISAGREE, EXIT_INCONCLUSIVE)

log = logging.getLogger("matchpairs")


@dataclass
class CliConfig:
    subcommand: str
    input: str = "-"
    format: str = "graph6"
    caps: Caps = field(default_factory=Caps)
    seed: int = 0
    output_format: str = "human"
    out: str | None = None
    jobs: int = 1
    verbosity: int = 0


def combine(codes) -> int:
    codes = set(codes)
    for c in _PRIORITY:
        if c in codes:
            return c
    return EXIT_OK


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _graphs(cfg: CliConfig):
    """Yield ``(label, graph_or_error)``; errors carry a message with the offset."""
    text = _read_input(cfg.input)
    if cfg.format == "edgelist":
        try:
            yield "edgelist", parse_edge_list(text)
        except GraphFormatError as exc:
            yield "edgelist", exc
        return
    for lineno, raw, g in iter_graph6(text.splitlines()):
        yield f"line {lineno}: {raw}", g


def _write(cfg: CliConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_records(cfg: CliConfig, records: list[dict]) -> None:
    if cfg.output_format == "json":
        _write(cfg, json.dumps({"records": records}, indent=2) + "\n")
    elif cfg.output_format == "csv":
        keys = list(dict.fromkeys(k for r in records for k in r))
        lines = [",".join(keys)]
        for r in records:
            lines.append(",".join("" if r.get(k) is None else str(r.get(k)) for k in keys))
        _write(cfg, "\n".join(lines) + "\n")
    else:
        _write(cfg, "".join(_human(r) + "\n" for r in records))


def _human(r: dict) -> str:
    if r.get("error"):
        return f"{r['input']}: error: {r['error']}"
    parts = [f"{r['input']}:"]
    for k in ("n", "m", "beta", "lambda", "alpha", "ratio", "extremal", "structural",
              "agreement", "all_forests_pass", "lemmas"):
        if k in r and r[k] is not None:
            parts.append(f"{k}={r[k]}")
    return " ".join(parts)


def _precondition(g: Graph) -> str | None:
    iso = isolated_vertices(g)
    if iso:
        return (f"isolated vertices {iso}: graphs are assumed to have no isolated "
                "vertices")
    return None


def cmd_analyze(cfg: CliConfig) -> int:
    records, codes = [], []
    for label, g in _graphs(cfg):
        if isinstance(g, GraphFormatError):
            records.append({"input": label, "error": f"parse error: {g}"})
            codes.append(EXIT_PARSE)
            continue
        msg = _precondition(g)
        if msg:
            records.append({"input": label, "error": msg})
            codes.append(EXIT_PRECONDITION)
            continue
        b, sol = beta(g), solve(g)
        ratio = Fraction(b, sol.alpha)
        records.append({
            "input": label, "graph6": to_graph6(g), "n": g.vertex_count, "m": g.edge_count,
            "beta": b, "lambda": sol.lam, "alpha": sol.alpha, "ratio": str(ratio),
            "extremal": ratio == Fraction(5, 4),
        })
    _emit_records(cfg, records)
    return combine(codes)


def cmd_check(cfg: CliConfig) -> int:
    records, codes = [], []
    for label, g in _graphs(cfg):
        if isinstance(g, GraphFormatError):
            records.append({"input": label, "error": f"parse error: {g}"})
            codes.append(EXIT_PARSE)
            continue
        try:
            v = verify_theorem(g, cfg.caps)
        except PreconditionError as exc:
            records.append({"input": label, "error": str(exc)})
            codes.append(EXIT_PRECONDITION)
            continue
        rec = {
            "input": label, "graph6": to_graph6(g),
            "extremal": v.ratio_extremal, "structural": v.structural.status,
            "agreement": v.agreement, "all_forests_pass": v.all_forests_pass,
            "forests_examined": len(v.structural.reports),
            "inconclusive": v.inconclusive,
            "witness_forest": [list(e.vertices) for e in v.witness_forest.embeddings]
            if v.witness_forest else None,
        }
        records.append(rec)
        if v.inconclusive:
            codes.append(EXIT_INCONCLUSIVE)
        elif not v.agreement or v.all_forests_pass is False:
            codes.append(EXIT_DISAGREE)
    _emit_records(cfg, records)
    return combine(codes)


def cmd_lemmas(cfg: CliConfig) -> int:
    records, codes = [], []
    for label, g in _graphs(cfg):
        if isinstance(g, GraphFormatError):
            records.append({"input": label, "error": f"parse error: {g}"})
            codes.append(EXIT_PARSE)
            continue
        msg = _precondition(g)
        if msg:
            records.append({"input": label, "error": msg})
            codes.append(EXIT_PRECONDITION)
            continue
        rep = lemma_suite(g, cfg.caps)
        records.append({
            "input": label, "graph6": to_graph6(g), "beta": rep.beta, "alpha": rep.alpha,
            "lemmas": rep.status, "pairs_checked": rep.pairs_checked,
            "clauses": {k: c.status for k, c in rep.clauses.items()},
            "odd_path_lengths": rep.path_lengths, "y_path_lengths": rep.y_lengths,
        })
        if rep.status == INCONCLUSIVE:
            codes.append(EXIT_INCONCLUSIVE)
        elif rep.status != "pass":
            codes.append(EXIT_DISAGREE)
    _emit_records(cfg, records)
    return combine(codes)


def cmd_verify(cfg: CliConfig, args) -> int:
    checks = args.checks or ["ratio_bound"]
    if args.corpus:
        spec = CorpusSpec(args.corpus, args.k, args.policy, args.count, cfg.seed, cfg.caps,
                          source=None if cfg.input == "-" else cfg.input)
        report = run_corpus(spec, checks, cfg.jobs)
    else:
        text = _read_input(cfg.input)
        report = sweep_stream(text.splitlines(), checks, cfg.caps, cfg.jobs,
                              {"input": cfg.input})
    fmt = cfg.output_format if cfg.output_format in ("json", "csv") else "json"
    _write(cfg, emit_report(report, fmt, timings=not args.no_timings))
    s = report.summary()
    if cfg.out or cfg.output_format == "human":
        print(json.dumps(s), file=sys.stderr)
    codes = []
    if s["parse_errors"]:
        codes.append(EXIT_PARSE)
    if s["skipped_isolated"] and set(checks) & {"theorem", "lemmas"}:
        codes.append(EXIT_PRECONDITION)
    if any(s[k] for k in ("ratio_bound_violations", "oracle_mismatches", "agreement_failures",
                          "necessity_failures", "lemma_failures")) \
            or ("minimality" in checks and s["alpha_ne_beta"]):
        codes.append(EXIT_DISAGREE)
    if s["inconclusive"]:
        codes.append(EXIT_INCONCLUSIVE)
    return combine(codes)


def cmd_gen(cfg: CliConfig, args) -> int:
    spec = CorpusSpec(args.corpus or "s_graph", args.k, args.policy, args.count, cfg.seed, cfg.caps)
    items = gen_corpus(spec)
    _write(cfg, "".join(to_graph6(it.graph) + "\n" for it in items))
    if args.annotations:
        notes = [
            {"index": i, "label": it.label, "graph6": to_graph6(it.graph),
             "forest": [{"side1": list(e.side1), "side2": list(e.side2)}
                        for e in it.forest.embeddings] if it.forest else None}
            for i, it in enumerate(items)
        ]
        with open(args.annotations, "w") as fh:
            json.dump({"corpus": spec.to_dict(), "items": notes}, fh, indent=2)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matchpairs", description=(
        "Exact disjoint-matching-pair parameters and the 5/4 characterization checks."))
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp):
        sp.add_argument("--input", default="-", help="input path, or - for stdin")
        sp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        sp.add_argument("--m2-cap", type=int, default=DEFAULT_M2_CAP)
        sp.add_argument("--cycle-cap", type=int, default=DEFAULT_CYCLE_CAP)
        sp.add_argument("--forest-cap", type=int, default=DEFAULT_FOREST_CAP)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", default=None, help="write output here instead of stdout")
        sp.add_argument("--output-format", choices=("json", "csv", "human"), default="human")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("-v", "--verbose", action="count", default=0)

    for name, help_ in (("analyze", "print beta, lambda, alpha and the ratio"),
                        ("check", "compare the ratio with the structural characterization"),
                        ("lemmas", "run the lemma suite")):
        common(sub.add_parser(name, help=help_))
    for name, help_ in (("verify", "run a verification campaign"),
                        ("gen", "write a generated corpus as graph6")):
        sp = sub.add_parser(name, help=help_)
        common(sp)
        sp.add_argument("--corpus", choices=KINDS, default=None)
        sp.add_argument("--k", type=int, default=1)
        sp.add_argument("--policy", choices=POLICIES, default="none")
        sp.add_argument("--count", type=int, default=1)
        if name == "verify":
            sp.add_argument("--checks", nargs="+", choices=CHECKS, default=None)
            sp.add_argument("--no-timings", action="store_true",
                            help="omit timing fields (byte-stable output)")
        else:
            sp.add_argument("--annotations", default=None,
                            help="JSON file receiving the construction forests")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        caps = Caps(args.m2_cap, args.cycle_cap, args.forest_cap)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    cfg = CliConfig(args.subcommand, args.input, args.format, caps, args.seed,
                    args.output_format, args.out, args.jobs, args.verbose)
    try:
        check_template()
    except TemplateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if cfg.subcommand == "analyze":
        return cmd_analyze(cfg)
    if cfg.subcommand == "check":
        return cmd_check(cfg)
    if cfg.subcommand == "lemmas":
        return cmd_lemmas(cfg)
    if cfg.subcommand == "verify":
        return cmd_verify(cfg, args)
    return cmd_gen(cfg, args)


if __name__ == "__main__":
    sys.exit(main())
