"""Report documents: stable serialization of classifier output.

The JSON layout is frozen for snapshot testing: fixed field order, no
timestamps, no environment-dependent values.  ``schema_version`` is bumped
whenever any field changes shape.
"""

from __future__ import annotations

import csv
import io
import json
from typing import List, Optional

from .charclasses import char_classes
from .classifier import InvariantReport, classify
from .macdonald import MacdonaldRing, build
from .ring import render
from .verifier import CheckResult

SCHEMA_VERSION = "1"


def report_document(n: int, g: int, *, ring: Optional[MacdonaldRing] = None,
                    override_guard: bool = False) -> dict:
    """Full per-(n, g) document: invariant report plus rendered classes."""
    if ring is None:
        ring = build(n, g, override_guard=override_guard)
    rep = classify(n, g, ring=ring)
    classes = char_classes(ring)
    doc = {"schema_version": SCHEMA_VERSION}
    doc.update(rep.to_dict())
    doc["chern"] = {
        "c1": render(classes.c1),
        "c2": render(classes.c2),
        "total": render(classes.total_chern),
        "w2_mod2": render(classes.w2),
    }
    return doc


def render_report_text(doc: dict) -> str:
    lines = [f"SP^{doc['n']}(M_{doc['g']}) invariant report "
             f"(schema {doc['schema_version']})"]
    for name, payload in doc.items():
        if name in ("schema_version", "n", "g", "notes", "chern"):
            continue
        value = payload["value"]
        if isinstance(value, list):
            value = ", ".join(str(v) for v in value)
        elif isinstance(value, dict):
            value = "; ".join(f"{k} {v}" for k, v in value.items())
        elif value is None:
            value = "none"
        lines.append(f"  {name}: {value}")
        lines.append(f"      [{payload['rule']}]")
    for key in ("c1", "c2", "total", "w2_mod2"):
        lines.append(f"  chern.{key}: {doc['chern'][key]}")
    for note in doc["notes"]:
        lines.append(f"  note: {note}")
    return "\n".join(lines) + "\n"


def _flat_value(payload) -> str:
    value = payload["value"]
    if value is None:
        return "none"
    if isinstance(value, list):
        return ";".join(str(v) for v in value)
    if isinstance(value, dict):
        if "exact" in value:
            return str(value["exact"])
        return "<=" + str(value["upper_bound"])
    return str(value)


GRID_COLUMNS = ("n", "g", "real_dimension", "betti", "euler", "pi1", "pi2",
                "cat", "tc", "rationally_essential", "manifold_spin",
                "cover_spin", "spin_cover_sheets", "dim_MC", "dim_mc",
                "psc", "kahler_psc", "nonpositive_hsc_kahler",
                "symplectically_aspherical", "c1", "c2")


def grid_rows(docs: List[dict]) -> List[List[str]]:
    rows = []
    for doc in docs:
        row = [str(doc["n"]), str(doc["g"])]
        for col in GRID_COLUMNS[2:-2]:
            row.append(_flat_value(doc[col]))
        row.append(doc["chern"]["c1"])
        row.append(doc["chern"]["c2"])
        rows.append(row)
    return rows


def render_grid_csv(docs: List[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(GRID_COLUMNS)
    writer.writerows(grid_rows(docs))
    return buf.getvalue()


def render_grid_text(docs: List[dict]) -> str:
    cols = ("n", "g", "betti", "euler", "cat", "tc", "manifold_spin",
            "cover_spin", "dim_MC", "dim_mc", "psc", "kahler_psc")
    rows = [cols]
    for doc in docs:
        rows.append((
            str(doc["n"]), str(doc["g"]), _flat_value(doc["betti"]),
            _flat_value(doc["euler"]), _flat_value(doc["cat"]),
            _flat_value(doc["tc"]), _flat_value(doc["manifold_spin"]),
            _flat_value(doc["cover_spin"]), _flat_value(doc["dim_MC"]),
            _flat_value(doc["dim_mc"]), _flat_value(doc["psc"]),
            _flat_value(doc["kahler_psc"])))
    widths = [max(len(r[i]) for r in rows) for i in range(len(cols))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row))
             for row in rows]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def render_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=False, separators=(", ", ": ")) + "\n"


def render_json_lines(docs: List[dict]) -> str:
    return "".join(render_json(doc) for doc in docs)


def verify_document(max_n: int, max_g: int, results: List[CheckResult],
                    mutate: Optional[str]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "max_n": max_n,
        "max_g": max_g,
        "mutate_ideal": mutate,
        "passed": all(r.status != "fail" for r in results),
        "counts": {
            "pass": sum(1 for r in results if r.status == "pass"),
            "fail": sum(1 for r in results if r.status == "fail"),
            "skipped": sum(1 for r in results if r.status == "skipped"),
        },
        "results": [r.to_dict() for r in results],
    }


def render_verify_text(doc: dict) -> str:
    lines = []
    for entry in doc["results"]:
        lines.append(f"[{entry['status']:>7}] {entry['check_id']} "
                     f"{entry['point']}: {entry['witness']}")
    counts = doc["counts"]
    lines.append(f"verify grid n<={doc['max_n']}, g<={doc['max_g']}: "
                 f"{counts['pass']} pass, {counts['fail']} fail, "
                 f"{counts['skipped']} skipped -> "
                 + ("PASS" if doc["passed"] else "FAIL"))
    return "\n".join(lines) + "\n"
