"""Tabular and JSON views of the enumerated objects."""

from __future__ import annotations

import csv
import io
import json

from .clifford7 import label_of
from .gf2 import format_bits
from .grassmann import four_qubit_label, plane_to_four_qubit
from .pauli import label


def plane_record(p) -> dict:
    return {
        "points": p.labels(),
        "clifford": [str(label_of(v)) for v in p.points],
        "four_qubit": four_qubit_label(plane_to_four_qubit(p)),
        "bits": [format_bits(v, 6) for v in p.points],
    }


def line_record(line) -> dict:
    return {"points": line.labels(), "bits": [format_bits(v, 6) for v in line.points]}


def edge_record(e) -> dict:
    from .mermin import edge_sign

    return {
        "points": e.labels(),
        "plane": e.parent.labels(),
        "removed_line": [label(v, 3) for v in e.removed_line],
        "sign": edge_sign(e),
    }


def pentagram_record(pg) -> dict:
    from .mermin import pentad_of

    d = pg.to_dict()
    pd = pentad_of(pg)
    d["pentad"] = list(pd) if pd else None
    return d


def spread_record(s) -> dict:
    from .grassmann import spread_to_clifford9

    return {
        "planes": [p.labels() for p in s.planes],
        "ovoid": [four_qubit_label(v) for v in spread_to_clifford9(s)],
    }


def _cell(x) -> str:
    if isinstance(x, (list, tuple)):
        return " ".join(_cell(y) for y in x)
    return "" if x is None else str(x)


def to_csv(records: list[dict]) -> str:
    if not records:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow({k: _cell(v) for k, v in r.items()})
    return buf.getvalue()


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
