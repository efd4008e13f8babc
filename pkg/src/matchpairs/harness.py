"""Corpora, sweeps, the lemma suite and machine-readable reports."""

from __future__ import annotations

import csv
import io
import json
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable

from .alternating import Trail, decompose
from .characterization import FAIL, INCONCLUSIVE, PASS, Caps, verify_theorem
from .graph import Edge, Graph, GraphFormatError, isolated_vertices, iter_graph6, norm_edge, to_graph6
from .matching import beta, maximum_matching
from .pairs import BRUTE_EDGE_LIMIT, select_m2_overlap, solve, solve_brute
from .structure import SForest, classify_edges, s_forest

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
KINDS = ("s_forest", "s_graph", "exhaustive_stream", "random")
POLICIES = ("none", "delta_only", "random_b", "violate_a", "violate_b", "violate_c_attempt",
            "odd_b_cycle")
CHECKS = ("ratio_bound", "oracle", "minimality", "theorem", "lemmas")


@dataclass
class CorpusSpec:
    kind: str = "s_graph"
    k: int = 1
    extra_edge_policy: str = "none"
    count: int = 1
    seed: int = 0
    caps: Caps = field(default_factory=Caps)
    # random kind only
    max_vertices: int = 8
    max_edges: int = 16
    source: str | None = None  # exhaustive_stream: graph6 file

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown corpus kind {self.kind!r}")
        if self.extra_edge_policy not in POLICIES:
            raise ValueError(f"unknown policy {self.extra_edge_policy!r}")
        if self.k < 1 or self.count < 0:
            raise ValueError("k must be >= 1 and count >= 0")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["caps"] = asdict(self.caps)
        return d


@dataclass
class CorpusItem:
    graph: Graph
    forest: SForest | None = None
    label: str = ""


# --------------------------------------------------------------------------
# corpus generation


def gen_corpus(spec: CorpusSpec) -> list[CorpusItem]:
    if spec.kind == "s_forest":
        g, f = s_forest(spec.k)
        return [CorpusItem(g, f, f"s_forest k={spec.k}") for _ in range(spec.count)]
    if spec.kind == "random":
        return _random_graphs(spec)
    if spec.kind == "exhaustive_stream":
        if not spec.source:
            raise ValueError("exhaustive_stream needs a graph6 source file")
        with open(spec.source) as fh:
            return [CorpusItem(g, None, f"line {n}") for n, _, g in iter_graph6(fh)
                    if isinstance(g, Graph)]
    return _s_graphs(spec)


def _random_graphs(spec: CorpusSpec) -> list[CorpusItem]:
    rng = random.Random(spec.seed)
    out = []
    for i in range(spec.count):
        n = rng.randint(2, spec.max_vertices)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        m = rng.randint(0, min(spec.max_edges, len(pairs)))
        out.append(CorpusItem(Graph(n, rng.sample(pairs, m)), None, f"random #{i}"))
    return out


def _s_graphs(spec: CorpusSpec) -> list[CorpusItem]:
    rng = random.Random(f"{spec.seed}:{spec.k}:{spec.extra_edge_policy}")
    base_graph, forest = s_forest(spec.k)
    out = []
    dropped = 0
    for i in range(spec.count):
        extra = _extra_edges(spec.extra_edge_policy, base_graph, forest, rng)
        if extra is None:
            dropped += 1
            continue
        g = base_graph.with_edges(sorted(set(extra)))
        f = SForest(g, forest.embeddings)
        if spec.extra_edge_policy == "violate_c_attempt" and not _has_bipartite_22_cycle(g, f, spec.caps):
            dropped += 1
            continue
        out.append(CorpusItem(g, f, f"s_graph k={spec.k} {spec.extra_edge_policy} #{i}"))
    if dropped:
        log.warning("%s k=%d: dropped %d of %d instances that could not be built",
                    spec.extra_edge_policy, spec.k, dropped, spec.count)
    return out


def _has_bipartite_22_cycle(g: Graph, f: SForest, caps: Caps) -> bool:
    from .characterization import check_condition_c

    return check_condition_c(g, f, classify_edges(g, f), caps.cycle_cap).status == FAIL


def _extra_edges(policy: str, g: Graph, f: SForest, rng: random.Random) -> list[Edge] | None:
    role, base = f.role, f.base
    ones = f.vertices_with_role(1)
    twos = f.vertices_with_role(2)
    inner = [v for v in g.vertices() if role[v] != 1]
    deltas = [norm_edge(u, base[u]) for u in ones]
    inner_pairs = [
        (u, v) for i, u in enumerate(inner) for v in inner[i + 1:] if not g.has_edge(u, v)
    ]

    def some(pool, lo, hi):
        pool = sorted(set(pool))
        return rng.sample(pool, min(len(pool), rng.randint(lo, hi)))

    if policy == "none":
        return []
    if policy == "delta_only":
        return some(deltas, 1, len(deltas))
    if policy == "random_b":
        return some(inner_pairs, 1, 3 * f.k) + some(deltas, 0, 2)
    if policy == "violate_a":
        u = rng.choice(ones)
        targets = [v for v in g.vertices() if v != u and v != base[u] and not g.has_edge(u, v)]
        return [norm_edge(u, rng.choice(targets))] + some(inner_pairs, 0, f.k)
    if policy == "violate_b":
        u = rng.choice(ones)
        w = f.forest_neighbor(u)
        targets = [v for v in inner if v != w and not g.has_edge(w, v)]
        return [norm_edge(u, base[u]), norm_edge(w, rng.choice(targets))] + some(deltas, 0, 1)
    if policy == "violate_c_attempt":
        # a 2-2 edge plus the 3-3 edge between the two bases closes an L-B
        # alternating 4-cycle whose B-part is two disjoint edges
        comp = {v: i for i, emb in enumerate(f.embeddings) for v in emb.vertices}
        cands = [
            (x, y) for i, x in enumerate(twos) for y in twos[i + 1:]
            if base[x] != base[y] and not g.has_edge(x, y)
        ]
        cross = [c for c in cands if comp[c[0]] != comp[c[1]]] or cands
        if not cross:
            return None
        x, y = rng.choice(cross)
        extra = {norm_edge(x, y)}
        bb = norm_edge(base[x], base[y])
        if not g.has_edge(*bb):
            extra.add(bb)
        three_three = [(u, v) for u, v in inner_pairs if role[u] == 3 and role[v] == 3]
        extra.update(some(three_three, 0, 1))
        return sorted(extra)
    if policy == "odd_b_cycle":
        # Close every side's b-d pair and join three bases in a triangle.  The
        # 2-2 chords then lie only on L-B trails that run around the whole
        # triangle, so their B-part is odd and condition (c) holds for a
        # non-trivial reason.  Needs a third base, hence k >= 2.
        if f.k < 2:
            return None
        c1, c2 = f.embeddings[0].side1[2], f.embeddings[0].side2[2]
        emb = rng.choice(f.embeddings[1:])
        c3 = rng.choice((emb.side1[2], emb.side2[2]))
        extra = {norm_edge(c1, c3), norm_edge(c2, c3)}
        sides = {s[2]: s for e in f.embeddings for s in e.sides}
        for c in (c1, c2, c3):
            extra.add(norm_edge(sides[c][1], sides[c][3]))
        others = [
            norm_edge(s[1], s[3]) for c, s in sides.items()
            if c not in (c1, c2, c3)
        ]
        threes = [(u, v) for u, v in inner_pairs if role[u] == 3 and role[v] == 3]
        extra.update(some(others, 0, len(others)))
        extra.update(some(threes, 0, 1))
        extra.update(some(deltas, 0, 2))
        return sorted(extra - set(g.edges))
    raise ValueError(policy)


def spanner_chord_corpus() -> list[CorpusItem]:
    """The spanner with each of its 36 non-edges added in turn."""
    g, f = s_forest(1)
    out = []
    for u in range(10):
        for v in range(u + 1, 10):
            if not g.has_edge(u, v):
                h = g.with_edges([(u, v)])
                out.append(CorpusItem(h, SForest(h, f.embeddings), f"spanner+({u},{v})"))
    return out


# --------------------------------------------------------------------------
# lemma suite


@dataclass
class ClauseResult:
    status: str = PASS
    witnesses: list = field(default_factory=list)

    def fail(self, witness) -> None:
        self.status = FAIL
        if len(self.witnesses) < 10:
            self.witnesses.append(witness)


@dataclass
class LemmaSuiteReport:
    status: str
    beta: int
    alpha: int
    pairs_checked: int
    extremal: bool
    clauses: dict[str, ClauseResult]
    path_lengths: list[int] = field(default_factory=list)
    y_lengths: list[int] = field(default_factory=list)


def _component_with_end_edge(paths: list[Trail], f: Edge) -> Trail | None:
    for p in paths:
        if f in p.end_edges:
            return p
    return None


def lemma_suite(g: Graph, caps: Caps = Caps()) -> LemmaSuiteReport:
    """Check the structural lemmas on every pair of M₂(G, M) for a fixed maximum M."""
    m = maximum_matching(g)
    b = len(m)
    sol = solve(g)
    a = sol.alpha
    extremal = 4 * b == 5 * a
    names = ("end_edges_and_length", "covered_by_h_prime", "y_paths", "extremal_lengths")
    clauses = {name: ClauseResult() for name in names}
    pairs = select_m2_overlap(g, m, caps.m2_cap)
    if pairs.truncated:
        for c in clauses.values():
            c.status = INCONCLUSIVE
        return LemmaSuiteReport(INCONCLUSIVE, b, a, 0, extremal, clauses)
    path_lengths: set[int] = set()
    y_lengths: set[int] = set()
    for pair in pairs:
        h, hp = pair.h, pair.h_prime
        odd_m = decompose(g, m, h).mp_o_a
        hh = decompose(g, h, hp)
        hp_vertices = {v for e in hp for v in e}
        y_paths: set[Trail] = set()
        for p in odd_m:
            path_lengths.add(p.length)
            ends = p.end_edges
            if not all(e in hp for e in ends) or p.length < 5:
                clauses["end_edges_and_length"].fail((pair, p))
            uncovered = [v for v in p.vertices if v not in hp_vertices]
            if uncovered:
                clauses["covered_by_h_prime"].fail((pair, p, uncovered))
            for f in ends:
                pf = _component_with_end_edge(hh.mp_e, f)
                if pf is None or pf.length < 4:
                    clauses["y_paths"].fail((pair, p, f, pf))
                    continue
                y_paths.add(pf)
        if len(y_paths) != 2 * len(odd_m) or len(odd_m) != b - a:
            clauses["y_paths"].fail((pair, len(y_paths), len(odd_m), b - a))
        y_lengths.update(t.length for t in y_paths)
        if extremal:
            on_y = {e for t in y_paths for e in t.edges}
            if any(p.length != 5 for p in odd_m) or any(t.length != 4 for t in y_paths) \
                    or not h <= on_y:
                clauses["extremal_lengths"].fail((pair, [p.length for p in odd_m],
                                                  [t.length for t in y_paths]))
    status = FAIL if any(c.status == FAIL for c in clauses.values()) else PASS
    return LemmaSuiteReport(status, b, a, len(pairs), extremal, clauses,
                            sorted(path_lengths), sorted(y_lengths))


# --------------------------------------------------------------------------
# sweeps


@dataclass
class GraphRecord:
    index: int
    graph6: str
    label: str = ""
    n: int = 0
    m: int = 0
    beta: int | None = None
    lam: int | None = None
    alpha: int | None = None
    ratio: str | None = None
    ratio_bound_ok: bool | None = None
    ratio_extremal: bool | None = None
    alpha_equals_beta: bool | None = None
    brute_lambda: int | None = None
    brute_alpha: int | None = None
    oracle_agrees: bool | None = None
    structural: str | None = None
    structural_extremal: bool | None = None
    forests_examined: int | None = None
    all_forests_pass: bool | None = None
    agreement: bool | None = None
    conditions: dict | None = None
    lemmas: str | None = None
    inconclusive: bool = False
    skipped: str | None = None
    error: str | None = None
    timings: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    config: dict
    records: list[GraphRecord] = field(default_factory=list)

    def summary(self) -> dict:
        rs = self.records

        def count(pred):
            return sum(1 for r in rs if pred(r))

        return {
            "graphs": len(rs),
            "analyzed": count(lambda r: r.beta is not None),
            "parse_errors": count(lambda r: r.error is not None and r.error.startswith("parse")),
            "errors": count(lambda r: r.error is not None),
            "skipped_isolated": count(lambda r: r.skipped == "isolated_vertices"),
            "ratio_bound_violations": count(lambda r: r.ratio_bound_ok is False),
            "ratio_extremal": count(lambda r: bool(r.ratio_extremal)),
            "alpha_ne_beta": count(lambda r: r.alpha_equals_beta is False),
            "oracle_checked": count(lambda r: r.oracle_agrees is not None),
            "oracle_mismatches": count(lambda r: r.oracle_agrees is False),
            "theorem_checked": count(lambda r: r.structural is not None),
            "agreement_failures": count(lambda r: r.structural is not None
                                        and not r.inconclusive and r.agreement is False),
            "necessity_failures": count(lambda r: r.all_forests_pass is False),
            "lemma_failures": count(lambda r: r.lemmas == FAIL),
            "inconclusive": count(lambda r: r.inconclusive),
        }

    def to_dict(self, timings: bool = True) -> dict:
        recs = []
        for r in self.records:
            d = asdict(r)
            d["lambda"] = d.pop("lam")
            if not timings:
                d.pop("timings")
            recs.append(d)
        return {
            "schema": "matchpairs.verification-report",
            "version": SCHEMA_VERSION,
            "config": self.config,
            "records": recs,
            "summary": self.summary(),
        }


def analyze_graph(g: Graph, checks: Iterable[str], caps: Caps = Caps(),
                  index: int = 0, label: str = "", raw: str | None = None) -> GraphRecord:
    checks = set(checks)
    rec = GraphRecord(index, raw or to_graph6(g), label, g.vertex_count, g.edge_count)
    iso = bool(isolated_vertices(g))
    t0 = time.perf_counter()
    b = beta(g)
    sol = solve(g)
    rec.timings["solve_s"] = round(time.perf_counter() - t0, 6)
    rec.beta, rec.lam, rec.alpha = b, sol.lam, sol.alpha
    rec.ratio = str(Fraction(b, sol.alpha)) if sol.alpha else None
    rec.ratio_bound_ok = 4 * b <= 5 * sol.alpha
    rec.ratio_extremal = 4 * b == 5 * sol.alpha and b > 0
    if "minimality" in checks:
        rec.alpha_equals_beta = sol.alpha == b
    if "oracle" in checks and g.edge_count <= BRUTE_EDGE_LIMIT:
        t0 = time.perf_counter()
        br = solve_brute(g)
        rec.timings["brute_s"] = round(time.perf_counter() - t0, 6)
        rec.brute_lambda, rec.brute_alpha = br.lam, br.alpha
        rec.oracle_agrees = (br.lam, br.alpha) == (sol.lam, sol.alpha)
    if iso and checks & {"theorem", "lemmas"}:
        rec.skipped = "isolated_vertices"
        return rec
    if "theorem" in checks:
        t0 = time.perf_counter()
        v = verify_theorem(g, caps)
        rec.timings["theorem_s"] = round(time.perf_counter() - t0, 6)
        rec.structural = v.structural.status
        rec.structural_extremal = v.structural_extremal
        rec.forests_examined = len(v.structural.reports)
        rec.all_forests_pass = v.all_forests_pass
        rec.agreement = v.agreement
        rec.inconclusive = v.inconclusive
        rec.conditions = [
            {"a": r.condition_a.status, "b": r.condition_b.status, "c": r.condition_c.status,
             "cycles_examined": r.cycles_examined, "truncated": r.truncated}
            for r in v.structural.reports
        ]
    if "lemmas" in checks:
        ls = lemma_suite(g, caps)
        rec.lemmas = ls.status
        rec.inconclusive = rec.inconclusive or ls.status == INCONCLUSIVE
    return rec


def _work(args):
    g, checks, caps, index, label, raw = args
    return analyze_graph(g, checks, caps, index, label, raw)


def run_items(items: Iterable[tuple[Graph, str, str | None]], checks: Iterable[str],
              caps: Caps = Caps(), config: dict | None = None, jobs: int = 1) -> VerificationReport:
    """Analyze ``(graph, label, raw_graph6)`` items; records keep input order."""
    checks = tuple(sorted(set(checks)))
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    work = [(g, checks, caps, i, label, raw) for i, (g, label, raw) in enumerate(items)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            recs = list(ex.map(_work, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        recs = [_work(w) for w in work]
    return VerificationReport(dict(config or {}, checks=list(checks)), recs)


def sweep_stream(lines: Iterable[str], checks: Iterable[str] = ("ratio_bound",),
                 caps: Caps = Caps(), jobs: int = 1, config: dict | None = None) -> VerificationReport:
    """Analyze a graph6 line stream.  Unparseable lines become error records."""
    checks = tuple(sorted(set(checks)))
    good: list[tuple[int, Graph, str]] = []
    bad: list[GraphRecord] = []
    pos = 0
    for lineno, raw, g in iter_graph6(lines):
        if isinstance(g, GraphFormatError):
            bad.append(GraphRecord(pos, raw, f"line {lineno}", error=f"parse: {g}"))
        else:
            good.append((pos, g, raw))
        pos += 1
    rep = run_items([(g, "", raw) for _, g, raw in good], checks, caps, config, jobs)
    for rec, (p, _, _) in zip(rep.records, good):
        rec.index = p
    rep.records = sorted(rep.records + bad, key=lambda r: r.index)
    return rep


def run_corpus(spec: CorpusSpec, checks: Iterable[str], jobs: int = 1) -> VerificationReport:
    items = gen_corpus(spec)
    return run_items([(it.graph, it.label, None) for it in items], checks, spec.caps,
                     {"corpus": spec.to_dict()}, jobs)


# --------------------------------------------------------------------------
# emission


CSV_FIELDS = [
    "index", "graph6", "label", "n", "m", "beta", "lambda", "alpha", "ratio",
    "ratio_bound_ok", "ratio_extremal", "alpha_equals_beta", "brute_lambda", "brute_alpha",
    "oracle_agrees", "structural", "structural_extremal", "forests_examined",
    "all_forests_pass", "agreement", "lemmas", "inconclusive", "skipped", "error",
]


def emit_report(report: VerificationReport, fmt: str = "json", timings: bool = True) -> str:
    doc = report.to_dict(timings=timings)
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for rec in doc["records"]:
            w.writerow({k: ("" if rec.get(k) is None else rec[k]) for k in CSV_FIELDS})
        return buf.getvalue()
    raise ValueError(f"unknown report format {fmt!r}")


def load_report(text: str) -> dict:
    doc = json.loads(text)
    if doc.get("schema") != "matchpairs.verification-report":
        raise ValueError("not a verification report")
    if doc.get("version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report version {doc.get('version')}")
    return doc

