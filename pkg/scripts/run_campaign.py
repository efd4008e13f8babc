"""Run the theorem check over every S-graph policy and write one report per cell.

Each (policy, k) cell becomes ``<out>/<policy>_k<k>.json``; a tally table goes
to stdout.  Everything is seeded, so reruns with ``--no-timings`` are byte-identical.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from matchpairs.harness import POLICIES, CorpusSpec, emit_report, run_corpus

COLUMNS = ("graphs", "ratio_extremal", "agreement_failures", "necessity_failures",
           "lemma_failures", "inconclusive")


@dataclass
class Campaign:
    out: Path
    ks: list[int] = field(default_factory=lambda: [1, 2])
    policies: list[str] = field(default_factory=lambda: list(POLICIES))
    count: int = 20
    seed: int = 0
    jobs: int = 1
    timings: bool = True


def run(c: Campaign) -> int:
    c.out.mkdir(parents=True, exist_ok=True)
    print(f"{'cell':<28}" + "".join(f"{h:>20}" for h in COLUMNS))
    failures = 0
    for policy in c.policies:
        for k in c.ks:
            spec = CorpusSpec("s_graph", k, policy, c.count, c.seed)
            rep = run_corpus(spec, ["ratio_bound", "theorem", "lemmas"], jobs=c.jobs)
            (c.out / f"{policy}_k{k}.json").write_text(emit_report(rep, timings=c.timings))
            s = rep.summary()
            failures += s["agreement_failures"] + s["necessity_failures"] + s["lemma_failures"]
            print(f"{policy + ' k=' + str(k):<28}" + "".join(f"{s[h]:>20}" for h in COLUMNS))
    return 1 if failures else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("campaign"))
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--policy", nargs="+", choices=POLICIES, default=list(POLICIES))
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--no-timings", action="store_true")
    a = ap.parse_args()
    return run(Campaign(a.out, a.k, a.policy, a.count, a.seed, a.jobs, not a.no_timings))


if __name__ == "__main__":
    raise SystemExit(main())
