"""Regenerate ``cases.json`` from the CLI.

Run only after a deliberate output change; review the diff before committing.
Paths in argv are relative to this directory.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from qsymfun.cli import run

HERE = Path(__file__).parent

# (name, argv, round-trip parse argv or None)
CASES = [
    ("weyl-yx", ["weyl", "normal-order", "y . x"], ["parse", "--dialect", "weyl"]),
    ("weyl-xyxy", ["weyl", "normal-order", "x y . x y"], ["parse", "--dialect", "weyl"]),
    ("weyl-y2x2", ["weyl", "normal-order", "y^2 . x^2"], ["parse", "--dialect", "weyl"]),
    ("weyl-sum", ["weyl", "normal-order", "y . x - x y + 1/2 h"], ["parse", "--dialect", "weyl"]),
    ("weyl-empty", ["weyl", "normal-order", "1"], ["parse", "--dialect", "weyl"]),
    ("weyl-gauss", ["weyl", "normal-order", "2i y^2 . x - 1/3i x"], ["parse", "--dialect", "weyl"]),
    ("weyl-coords", ["weyl", "coords", "y^2 . x^2"], None),
    ("weyl-coords-k", ["weyl", "coords", "x y . x y . x y", "--k", "2"], None),
    ("weyl-genseries", ["weyl", "genseries", "--n", "2", "--amax", "2", "--bmax", "2", "--cmax", "2"], None),
    ("mweyl-yx", ["mweyl", "normal-order", "y . x"], ["parse", "--dialect", "mweyl"]),
    ("mweyl-yx2", ["mweyl", "normal-order", "y . x^2"], ["parse", "--dialect", "mweyl"]),
    ("mweyl-coords", ["mweyl", "coords", "y^2 . x"], None),
    ("sympow-boolean", ["sympow", "boolean", "--n", "2", "1", "1"], None),
    ("sympow-boolean-5", ["sympow", "boolean", "--n", "5", "2", "3"], None),
    ("sympow-ci-s3", ["sympow", "cycle-index", "--group", "S3"], None),
    ("sympow-ci-klein", ["sympow", "cycle-index", "--group", 'gens:"(1 2)(3 4),(1 3)(2 4)"', "--n", "4"], None),
    ("sympow-ci-trivial", ["sympow", "cycle-index", "--group", "trivial", "--n", "3"], None),
    ("sympow-dim", ["sympow", "dimension", "--group", "Sn", "--n", "2", "--dim", "4"], None),
    ("sympow-poly", ["sympow", "product", "--algebra", "poly:1,4", "--terms", "[e1 | e0]", "[e1 | e0]"],
     ["parse", "--dialect", "sympow", "--algebra", "poly:1,4"]),
    ("sympow-weyl", ["sympow", "product", "--algebra", "weyl:1,3", "--terms", "[e2 | e0]", "[e1 | e0]"],
     ["parse", "--dialect", "sympow", "--algebra", "weyl:1,3"]),
    ("sympow-weyl-oracle", ["sympow", "product", "--algebra", "weyl:1,3", "--method", "oracle", "--terms", "[e2 | e0]", "[e1 | e0]"], None),
    ("sympow-file", ["sympow", "product", "--algebra", "data/boolean.json", "--group", "S3", "--terms", "[e1 | e0 | e0]", "[e1 | e0 | e0]"],
     ["parse", "--dialect", "sympow", "--algebra", "data/boolean.json", "--group", "S3"]),
    ("sympow-graded", ["sympow", "product", "--algebra", "data/dual_numbers_odd.json", "--terms", "[e1 | e0]", "[e0 | e1]"], None),
    ("sympow-klein", ["sympow", "product", "--algebra", "poly:1,3", "--group", 'gens:"(1 2)(3 4),(1 3)(2 4)"', "--terms", "[e1 | e0 | e0 | e0]", "[e1 | e1 | e0 | e0]"], None),
    ("qsym-A-yx", ["qsym", "star", "y1", "x1"], ["parse", "--dialect", "qsym"]),
    ("qsym-A-2slot", ["qsym", "star", "--n", "2", "[x1 | 1]", "[y1 | 1]"], ["parse", "--dialect", "qsym"]),
    ("qsym-A-m2", ["qsym", "star", "--m", "2", "[y1 y2 | x1]", "[x2 | x1]"], ["parse", "--dialect", "qsym", "--m", "2"]),
    ("qsym-B", ["qsym", "star", "--type", "B", "[x1 y1 | y1^2]", "[x1^2 | 1]"], ["parse", "--dialect", "qsym"]),
    ("qsym-D", ["qsym", "star", "--type", "D", "[x1 | y1]", "[y1 | x1]"], ["parse", "--dialect", "qsym"]),
    ("qsym-zm1", ["qsym", "star", "--type", "zm:1", "zb1", "z1"], ["parse", "--dialect", "qsym", "--type", "zm:1"]),
    ("qsym-zm2", ["qsym", "star", "--type", "zm:2", "[zb^2 | 1]", "[z^2 | 1]"], ["parse", "--dialect", "qsym", "--type", "zm:2"]),
    ("qsym-zm3", ["qsym", "star", "--type", "zm:3", "[z zb | z^3]", "[zb^3 | 1]"], ["parse", "--dialect", "qsym", "--type", "zm:3"]),
    ("qsym-dihedral1", ["qsym", "star", "--type", "dihedral:1", "z", "z"], ["parse", "--dialect", "qsym", "--type", "dihedral:1"]),
    ("qsym-dihedral2", ["qsym", "star", "--type", "dihedral:2", "[z^2 | 1]", "[z zb | 1]"], ["parse", "--dialect", "qsym", "--type", "dihedral:2"]),
    ("qsym-mweyl", ["qsym", "star", "--type", "mweyl", "y1", "x1^2"], None),
    ("qsym-classical", ["qsym", "classical", "[x1 | 1]", "[x1 | 1]"], ["parse", "--dialect", "qsym"]),
    ("qsym-multi", ["qsym", "multiproduct", "[y | x]", "[y | x]", "[y | x]"], ["parse", "--dialect", "qsym"]),
    ("qsym-multi-mweyl", ["qsym", "multiproduct", "--algebra", "mweyl", "--method", "direct", "[y | x]", "[x | y]"], None),
    ("super-ext", ["super", "ext", "--m", "2", "th2", "th1"], ["parse", "--dialect", "odd", "--m", "2"]),
    ("super-clifford", ["super", "clifford", "--m", "2", "th1 th2", "th2"], ["parse", "--dialect", "odd", "--m", "2"]),
    ("super-koszul", ["super", "koszul", "--a", "0,1", "--b", "1,0", "--sigma", "1,2"], None),
    ("super-product", ["super", "product", "--m", "2", "[th1 | th2]", "[th2 | th1]"], ["parse", "--dialect", "odd", "--m", "2"]),
    ("schur-identity", ["schur", "identity", "--m", "2", "--n", "2", "--parity", "0,1"], ["parse", "--dialect", "schur", "--mod", "2", "--source", "0,1", "--target", "0,1"]),
    ("schur-compose", ["schur", "compose", "--m", "2", "--n", "2", "data/F.json", "data/G.json"], ["parse", "--dialect", "schur", "--mod", "2", "--source", "0,1", "--target", "0,1"]),
    ("schur-compose-oracle", ["schur", "compose", "--m", "2", "--n", "2", "--method", "oracle", "data/F.json", "data/G.json"], None),
    ("schur-glinf", ["schur", "glinf", "--N", "6", "y . x"], None),
    ("error-parse", ["weyl", "normal-order", "x^"], None),
    ("error-domain", ["qsym", "star", "--type", "B", "[x1 | 1]", "[y1 | 1]"], None),
    ("error-usage", ["frobnicate"], None),
    ("error-json", ["schur", "compose", "--m", "2", "--n", "2", "data/bad.json", "data/G.json"], None),
]


def run_case(argv):
    cwd = os.getcwd()
    os.chdir(HERE)
    try:
        return run(argv)
    finally:
        os.chdir(cwd)


def main():
    out = []
    for name, argv, rt in CASES:
        text, code = run_case(argv)
        out.append({"name": name, "argv": argv, "stdout": text, "exit": code, "round_trip": rt})
    (HERE / "cases.json").write_text(json.dumps(out, indent=1, ensure_ascii=True) + "\n")
    print(f"wrote {len(out)} cases")


if __name__ == "__main__":
    main()
