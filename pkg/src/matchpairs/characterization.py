"""When does β/α reach 5/4?  Structural conditions versus the ratio itself.

``verify_theorem`` evaluates both sides: the ratio from the exact solver, and
whether some spanning S-forest ``F`` satisfies

(a) no 1-vertex of F touches a B(G,F) edge;
(b) if a 1-vertex u touches a Δ(G,F) edge, u's 2-vertex neighbour in F
    touches no B(G,F) edge;
(c) every L(F)-B(G,F) alternating even closed trail through a 2-2 edge has a
    non-bipartite B-part.

Condition (c) is decided by enumeration; if the enumeration hits its cap
before a violation is found the result is ``inconclusive``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .alternating import DEFAULT_CYCLE_CAP, Trail, cycle_edge_subgraph, enumerate_alt_even_cycles
from .graph import Edge, Graph, is_bipartite, isolated_vertices
from .matching import beta
from .pairs import DEFAULT_M2_CAP, solve
from .structure import (
    DEFAULT_FOREST_CAP,
    EdgePartition,
    SForest,
    classify_edges,
    edge_role_pair,
    find_spanning_s_forests,
)

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


class PreconditionError(ValueError):
    """Input violates the standing assumption (no isolated vertices)."""


@dataclass(frozen=True)
class Caps:
    m2_cap: int = DEFAULT_M2_CAP
    cycle_cap: int = DEFAULT_CYCLE_CAP
    forest_cap: int = DEFAULT_FOREST_CAP

    def __post_init__(self):
        if min(self.m2_cap, self.cycle_cap, self.forest_cap) <= 0:
            raise ValueError("caps must be positive")


@dataclass
class ConditionResult:
    status: str
    witnesses: list = field(default_factory=list)
    cycles_examined: int = 0
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class ConditionReport:
    forest: SForest
    condition_a: ConditionResult
    condition_b: ConditionResult
    condition_c: ConditionResult

    @property
    def cycles_examined(self) -> int:
        return self.condition_c.cycles_examined

    @property
    def truncated(self) -> bool:
        return self.condition_c.truncated

    @property
    def status(self) -> str:
        parts = (self.condition_a.status, self.condition_b.status, self.condition_c.status)
        if FAIL in parts:
            return FAIL
        if INCONCLUSIVE in parts:
            return INCONCLUSIVE
        return PASS


def check_condition_a(g: Graph, f: SForest, part: EdgePartition) -> ConditionResult:
    bad = sorted(
        (v, e) for e in part.b for v in e if f.role[v] == 1
    )
    return ConditionResult(FAIL if bad else PASS, bad)


def check_condition_b(g: Graph, f: SForest, part: EdgePartition) -> ConditionResult:
    bad = []
    for u in sorted({v for e in part.delta for v in e if f.role[v] == 1}):
        w = f.forest_neighbor(u)
        bad.extend((u, w, e) for e in sorted(part.b) if w in e)
    return ConditionResult(FAIL if bad else PASS, bad)


def _check_cycles(g: Graph, f: SForest, part: EdgePartition, cap: int,
                  trigger: set[tuple[int, int]]) -> ConditionResult:
    cycles = enumerate_alt_even_cycles(g, part.l, part.b, cap)
    bad = []
    for c in cycles:
        if not any(edge_role_pair(f, e) in trigger for e in c.edges):
            continue
        cb = cycle_edge_subgraph(g, c, part.b)
        check = is_bipartite(cb)
        if check.bipartite:
            bad.append((c, check.coloring))
    if bad:
        status = FAIL
    elif cycles.truncated:
        status = INCONCLUSIVE
    else:
        status = PASS
    return ConditionResult(status, bad, len(cycles), cycles.truncated)


def check_condition_c(g: Graph, f: SForest, part: EdgePartition,
                      cap: int = DEFAULT_CYCLE_CAP) -> ConditionResult:
    return _check_cycles(g, f, part, cap, {(2, 2)})


def check_condition_c_variant(g: Graph, f: SForest, part: EdgePartition,
                              cap: int = DEFAULT_CYCLE_CAP) -> ConditionResult:
    """Condition (c) triggered by a 2-2 *or* a 3-3 edge on the trail."""
    return _check_cycles(g, f, part, cap, {(2, 2), (3, 3)})


def check_forest(g: Graph, f: SForest, cycle_cap: int = DEFAULT_CYCLE_CAP) -> ConditionReport:
    part = classify_edges(g, f)
    return ConditionReport(
        f,
        check_condition_a(g, f, part),
        check_condition_b(g, f, part),
        check_condition_c(g, f, part, cycle_cap),
    )


def role_edge_counts(f: SForest, c: Trail) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for e in c.edges:
        key = edge_role_pair(f, e)
        out[key] = out.get(key, 0) + 1
    return out


# --------------------------------------------------------------------------


@dataclass
class StructuralResult:
    status: str  # pass = extremal structure found, fail = none, or inconclusive
    witness: SForest | None
    reports: list[ConditionReport]
    forests_truncated: bool = False

    @property
    def extremal(self) -> bool | None:
        return {PASS: True, FAIL: False}.get(self.status)


def _require_no_isolated(g: Graph) -> None:
    iso = isolated_vertices(g)
    if iso:
        raise PreconditionError(
            f"graph has isolated vertices {iso}; the characterization assumes none"
        )


def structural_extremal(g: Graph, caps: Caps = Caps(), exhaustive: bool = False) -> StructuralResult:
    """Look for a spanning S-forest passing (a), (b), (c).

    Stops at the first passing forest unless ``exhaustive`` is set.
    """
    _require_no_isolated(g)
    forests = find_spanning_s_forests(g, caps.forest_cap)
    reports: list[ConditionReport] = []
    witness = None
    for f in forests:
        rep = check_forest(g, f, caps.cycle_cap)
        reports.append(rep)
        if rep.status == PASS and witness is None:
            witness = f
            if not exhaustive:
                break
    if witness is not None:
        status = PASS
    elif forests.truncated or any(r.status == INCONCLUSIVE for r in reports):
        status = INCONCLUSIVE
    else:
        status = FAIL
    return StructuralResult(status, witness, reports, forests.truncated)


def ratio(g: Graph) -> Fraction | None:
    sol = solve(g)
    return Fraction(beta(g), sol.alpha) if sol.alpha else None


def ratio_extremal(g: Graph) -> bool:
    return 4 * beta(g) == 5 * solve(g).alpha


@dataclass
class TheoremVerdict:
    ratio_extremal: bool
    structural: StructuralResult
    all_forests_pass: bool | None

    @property
    def structural_extremal(self) -> bool | None:
        return self.structural.extremal

    @property
    def witness_forest(self) -> SForest | None:
        return self.structural.witness

    @property
    def inconclusive(self) -> bool:
        if self.structural.status == INCONCLUSIVE:
            return True
        # the strengthened necessity check needs every forest decided
        return self.ratio_extremal and self.all_forests_pass is None

    @property
    def agreement(self) -> bool:
        return self.structural_extremal is not None and self.ratio_extremal == self.structural_extremal


def verify_theorem(g: Graph, caps: Caps = Caps()) -> TheoremVerdict:
    """Compare 4β = 5α against the structural test.

    When the ratio is extremal, every spanning S-forest is examined so that
    ``all_forests_pass`` records whether each of them satisfies (a)-(c).
    """
    _require_no_isolated(g)
    extremal = ratio_extremal(g)
    st = structural_extremal(g, caps, exhaustive=extremal)
    all_pass = None
    if extremal:
        statuses = [r.status for r in st.reports]
        if FAIL in statuses:
            all_pass = False
        elif st.forests_truncated or INCONCLUSIVE in statuses:
            all_pass = None
        else:
            all_pass = bool(statuses)
    return TheoremVerdict(extremal, st, all_pass)


__all__ = [
    "Caps", "ConditionReport", "ConditionResult", "StructuralResult", "TheoremVerdict",
    "PreconditionError", "check_condition_a", "check_condition_b", "check_condition_c",
    "check_condition_c_variant", "check_forest", "structural_extremal", "ratio",
    "ratio_extremal", "verify_theorem", "role_edge_counts", "PASS", "FAIL", "INCONCLUSIVE",
]
