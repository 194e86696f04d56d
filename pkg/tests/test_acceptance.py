"""Acceptance suite: fourteen criteria, exact equality throughout.

Each criterion prints one PASS/FAIL line (collected by ``conftest.py`` into
the pytest summary).  Also runnable directly: ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import pytest

from qsymfun.cli import run
from qsymfun.verify import run_suite

# criterion number -> (suite, time limit in seconds, minimum instances, description)
CRITERIA = {
    1: ("weyl-coords", 60, 4000, "Weyl normal coordinates: closed, pairings, flows and rewriting agree"),
    2: ("genseries", 30, 1, "exponential generating series matches normal coordinates"),
    3: ("mweyl-coords", 60, 1, "M-Weyl coordinates: closed, ordered functions and rewriting agree"),
    4: ("factorial", 10, 1, "factorial identities at t = 0..10"),
    5: ("polya", 120, 1, "Polya product equals the group-average oracle"),
    6: ("qsym-tt", 120, 1, "type A star product vs oracle, B/D diagram, classical limit"),
    7: ("star-assoc", 180, 1, "star products (A, cyclic, dihedral) are associative"),
    8: ("wreath-oracle", 120, 1, "cyclic and dihedral wreath products vs character-averaged oracle"),
    9: ("symweyl", 120, 1, "multi-factor products in Sym(W) and Sym(MW): both paths and oracle"),
    10: ("odd-boolean", 60, 1, "odd symmetric and Boolean closed forms vs enumeration"),
    11: ("glinf", 10, 1, "gl(infinity) representation is multiplicative and filtered"),
    12: ("schur", 60, 1, "Schur composition: units, associativity, oracle"),
    13: ("dimensions", 10, 1, "dimension counts and the Clifford/Schur chain"),
}

GOLDEN = Path(__file__).parent / "golden"
RESULTS: list[str] = []
_REPORTS: dict = {}


def _record(num: int, ok: bool, detail: str):
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)


def _report(name):
    if name not in _REPORTS:
        _REPORTS[name] = run_suite(name)
    return _REPORTS[name]


def check_suite(num: int) -> bool:
    name, limit, min_inst, desc = CRITERIA[num]
    rep = _report(name)
    ok = rep.passed and rep.instances >= min_inst and rep.seconds < limit
    detail = f"{desc} [{name}: {rep.instances} instances, {len(rep.mismatches)} mismatches, {rep.seconds:.1f}s < {limit}s]"
    _record(num, ok, detail)
    return ok


def _golden_run(argv):
    cwd = os.getcwd()
    os.chdir(GOLDEN)
    try:
        return run(argv)
    finally:
        os.chdir(cwd)


def check_cli() -> bool:
    cases = json.loads((GOLDEN / "cases.json").read_text())
    bad = []
    for c in cases:
        first = _golden_run(c["argv"])
        if first != (c["stdout"], c["exit"]) or _golden_run(c["argv"]) != first:
            bad.append(c["name"])
            continue
        if c["round_trip"]:
            printed = json.loads(c["stdout"])["expr"]
            text, code = _golden_run(c["round_trip"] + [printed])
            if code != 0 or json.loads(text)["expr"] != printed:
                bad.append(c["name"] + " (round trip)")
    unmatched = []
    for name, *_ in CRITERIA.values():
        text, code = run(["verify", name])
        if code != 0 or json.loads(text) != _report(name).to_json():
            unmatched.append(name)
    ok = len(cases) == 50 and not bad and not unmatched
    detail = f"CLI golden corpus ({len(cases)} cases, {len(bad)} failing) and verify by name ({13 - len(unmatched)}/13 reproduced)"
    if bad or unmatched:
        detail += f": {bad + unmatched}"
    _record(14, ok, detail)
    return ok


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    assert check_suite(num)


def test_criterion_14_cli():
    assert check_cli()


if __name__ == "__main__":
    results = [check_suite(n) for n in sorted(CRITERIA)] + [check_cli()]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
