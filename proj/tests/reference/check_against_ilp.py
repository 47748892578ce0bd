#!/usr/bin/env python3
"""Compares `domchrom solve chidom` with the integer program on the finding instances."""

import json
import subprocess
import sys

import networkx as nx

from dominated_ilp import chidom

# Family specs for the subdivision anomalies, graph6 for the contraction counterexample.
FAMILIES = ["star:2^1/3", "star:2^1/5", "star:3^1/3", "star:3^1/5", "complete:3^1/5", "cycle:4^1/4"]
CONTRACTION = ("F|OGW", "1,4")


def run(cli, *args):
    out = subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout
    return json.loads(out)


def main(cli):
    failed = 0
    cases = [(spec, ["--family", spec]) for spec in FAMILIES]
    g6, edge = CONTRACTION
    contracted = run(cli, "op", "contract_edge", "--graph", g6, "--edge", edge)["graph"]
    cases += [(g6, ["--graph", g6]), (f"{g6}/{edge}", ["--graph", contracted])]
    for name, args in cases:
        solved = run(cli, "solve", "chidom", *args)
        ilp = chidom(nx.from_graph6_bytes(solved["graph"].encode()))
        status = "ok" if ilp == solved["value"] else "MISMATCH"
        failed += status != "ok"
        print(f"{name:16} solver {solved['value']:2}  ilp {ilp:2}  {status}")
    return failed


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
