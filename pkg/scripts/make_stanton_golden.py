#!/usr/bin/env python3
"""Regenerate tests/golden/stanton_8844.json from the enumeration oracle."""

import json
import pathlib

from rectcomp.enumerate import ideal_elements_Y, rank_counts
from rectcomp.qpoly import unimodality_violations

LAM = (8, 8, 4, 4)

counts = rank_counts(ideal_elements_Y(LAM))
doc = {
    "partition": list(LAM),
    "rank_sequence": counts,
    "total": sum(counts),
    "dip_indices": unimodality_violations(counts),
}
out = pathlib.Path(__file__).resolve().parents[1] / "tests" / "golden" / "stanton_8844.json"
out.write_text(json.dumps(doc, indent=1) + "\n")
print(out, doc["dip_indices"])
