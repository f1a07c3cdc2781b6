#!/usr/bin/env python3
"""Writes the table-backed bundled specs.

Finite-set systems: cells are computed exactly as images of the point set,
and the nerve at each depth is listed by its point stars (all words whose
cell contains a given point), which are its maximal simplices.

pbp_annuli: N_1 is the published edge list; N_2 is the one-address lift
(block copies of N_1 plus one lifted edge per N_1 edge), using the addresses
below.
"""
import itertools
import json
import pathlib
import sys


def word(w):
    return "".join(str(s + 1) for s in w)


def finite_levels(maps, npoints, depth):
    levels = {}
    for k in range(1, depth + 1):
        stars = {x: [] for x in range(npoints)}
        for w in itertools.product(range(len(maps)), repeat=k):
            cell = set(range(npoints))
            for s in reversed(w):
                cell = {maps[s][x] for x in cell}
            for x in cell:
                stars[x].append(word(w))
        simplices = sorted({tuple(v) for v in stars.values() if v})
        levels[str(k)] = [list(s) for s in simplices]
    return levels


def finite_spec(name, maps, depth, facts=None):
    doc = {
        "name": name,
        "orientation": "forward",
        "m": len(maps),
        "backend": {"kind": "table", "levels": finite_levels(maps, 3, depth)},
    }
    if facts:
        doc["facts"] = facts
    return doc


def pbp_spec():
    m = 4
    n1 = [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    x = {(1, 3): 2, (1, 4): 2, (2, 3): 1, (2, 4): 1,
         (3, 1): 3, (3, 2): 3, (4, 1): 4, (4, 2): 4,
         (3, 4): 4, (4, 3): 3}
    level2 = set()
    for j in range(1, m + 1):
        for a, b in n1:
            level2.add((f"{j}{a}", f"{j}{b}"))
    for a, b in n1:
        level2.add((f"{a}{x[(a, b)]}", f"{b}{x[(b, a)]}"))
    return {
        "name": "pbp_annuli",
        "orientation": "backward",
        "m": m,
        "backend": {
            "kind": "table",
            "levels": {
                "1": [[str(a), str(b)] for a, b in n1],
                "2": [list(e) for e in sorted(level2)],
            },
        },
        "facts": {"lx_connected": True},
    }


def main(out_dir):
    out = pathlib.Path(out_dir)
    specs = {
        "finset": finite_spec("finset", [[0, 1, 1], [2, 1, 2], [0, 0, 2]], 3),
        "fintriv": finite_spec("fintriv", [[0, 0, 0], [1, 1, 1], [2, 2, 2]], 3),
        "fixed_point_table": finite_spec(
            "fixed_point_table", [[0, 0, 1], [0, 2, 2]], 4, {"common_fixed_point": True}),
        "pbp_annuli": pbp_spec(),
    }
    for name, doc in specs.items():
        (out / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "specs")
