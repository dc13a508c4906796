"""Regenerate the golden files under src/orelab/data/golden.

Run once after an oracle change has been reviewed; the test-suite only reads
these files and never rewrites them.
"""

from __future__ import annotations

import json
from pathlib import Path

from orelab.bitset import to_list
from orelab.classify import comm_profile
from orelab.cli import analysis_report
from orelab.corpus import corpus_spec, load_corpus
from orelab.i1 import parse_element
from orelab.oracle import EnumerationBudget, enumerate_mult_sets, golden_lines
from orelab import oresets as ore

GOLDEN = Path(__file__).resolve().parents[1] / "src" / "orelab" / "data" / "golden"
SIDES = ("left", "right", "two-sided")

I1_EXPRESSIONS = [
    "D*I", "I*D", "H*e(2,2)", "x", "x*D", "D*x - x*D", "D*H", "H*I", "I*H",
    "D^2*e(1,5)", "e(3,4)*I^2", "I^2*D^3", "I^3*D^2", "D^3*I^2*H", "(H-2)*I*D",
    "x^2*D^2", "e(0,1)*e(1,0)", "e(0,1)*e(0,1)", "3/2*I^2*H^2 - D*H",
    "(1 + e(0,1))*(1 - e(0,1))", "D*e(0,0)", "e(2,0)*D", "I*e(1,1)*D",
]


def main() -> None:
    rings = load_corpus()
    budget = EnumerationBudget()
    lines = []
    for name in sorted(rings):
        R = rings[name]
        if not budget.full(R):
            continue
        sets = list(enumerate_mult_sets(R, budget))
        for side in SIDES:
            lines += golden_lines(R, name, side, sets)
    (GOLDEN / "multsets.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")

    R = rings["z6"]
    prof = comm_profile(R)
    fixture = {
        side: {
            "Ass": [to_list(a.members) for a in ore.enumerate_ass(R, side)],
            "maxDen": [S.elements() for S in ore.max_denominator_sets(R, side)],
            "radical": to_list(ore.localization_radical(R, side).members),
        } for side in SIDES
    }
    fixture["comm_profile"] = {
        "minimal_primes": [to_list(p.members) for p in prof.minimal_primes],
        "predicted_Ass": [to_list(a.members) for a in prof.predicted_Ass],
        "predicted_largest": {",".join(map(str, I)): S.elements()
                              for I, S in sorted(prof.predicted_largest.items())},
    }
    (GOLDEN / "z6_fixture.json").write_text(json.dumps(fixture, sort_keys=True, indent=2) + "\n")

    rep = analysis_report(R, corpus_spec("z6"), ("left", "right"), budget)
    (GOLDEN / "analyze_z6.json").write_text(json.dumps(rep, sort_keys=True, indent=2) + "\n")

    forms = [f"{e}\t{parse_element(e)}" for e in I1_EXPRESSIONS]
    (GOLDEN / "i1_normal_forms.txt").write_text("\n".join(forms) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
