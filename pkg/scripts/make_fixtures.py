"""Regenerate the graph6 fixtures under src/matchpairs/data.

The exhaustive streams come from nauty's ``geng``; point ``--geng`` at the
binary (or put it on PATH).  The 9-vertex stream is not shipped, but
``--extended`` writes it next to the others for the long minimality sweep.
"""

from __future__ import annotations

import argparse
import shutil
import subprocess
from pathlib import Path

from matchpairs.graph import parse_edge_list, to_edge_list, to_graph6
from matchpairs.structure import spanner_template

DATA = Path(__file__).resolve().parents[1] / "src" / "matchpairs" / "data"


def geng(binary: str, n: int, connected: bool) -> list[str]:
    args = [binary, "-q"] + (["-c"] if connected else []) + [str(n)]
    out = subprocess.run(args, check=True, capture_output=True, text=True).stdout
    return out.split()


def write(name: str, lines: list[str]) -> None:
    (DATA / name).write_text("".join(line + "\n" for line in lines))
    print(f"{name}: {len(lines)} graphs")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--geng", default=shutil.which("geng") or "geng")
    ap.add_argument("--extended", action="store_true", help="also write connected_9.g6")
    args = ap.parse_args()
    DATA.mkdir(parents=True, exist_ok=True)

    write("graphs_upto7.g6", [g for n in range(1, 8) for g in geng(args.geng, n, False)])
    # connected graphs suffice for the α = β sweep: both parameters add up over components
    write("connected_upto8.g6", [g for n in range(2, 9) for g in geng(args.geng, n, True)])
    if args.extended:
        write("connected_9.g6", geng(args.geng, 9, True))

    spanner = spanner_template()
    write("spanner.g6", [to_graph6(spanner)])
    write("spanner_a1d1.g6", [to_graph6(spanner.with_edges([(0, 3)]))])
    text = to_edge_list(spanner)
    assert parse_edge_list(text) == spanner
    (DATA / "spanner.edgelist").write_text(text)


if __name__ == "__main__":
    main()
