"""Emitters for dimension and multiplicity tables (text, CSV, JSON) and their parsers."""

from __future__ import annotations

import csv
import io
import json

from qhh.sl2 import MultiplicityTable, top_index


def multiplicity_records(table: MultiplicityTable) -> list[dict]:
    return [
        {"n": n, "t": n + 1 - 2 * l, "multiplicity": q}
        for n in table.degrees
        for l, q in enumerate(table.rows[n])
    ]


def _from_records(records) -> MultiplicityTable:
    rows: dict[int, dict[int, int]] = {}
    for r in records:
        n, t, q = int(r["n"]), int(r["t"]), int(r["multiplicity"])
        rows.setdefault(n, {})[t] = q
    out = {}
    for n, by_t in rows.items():
        out[n] = tuple(by_t.get(n + 1 - 2 * l, 0) for l in range(top_index(n) + 1))
        extra = set(by_t) - {n + 1 - 2 * l for l in range(top_index(n) + 1)}
        if extra:
            raise ValueError(f"impossible weights {sorted(extra)} in row {n}")
    return MultiplicityTable(out)


def multiplicity_csv(table: MultiplicityTable) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["n", "t", "multiplicity"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(multiplicity_records(table))
    return buf.getvalue()


def parse_multiplicity_csv(text: str) -> MultiplicityTable:
    return _from_records(csv.DictReader(io.StringIO(text)))


def multiplicity_json(table: MultiplicityTable) -> str:
    return json.dumps({"multiplicities": multiplicity_records(table)}, indent=2) + "\n"


def parse_multiplicity_json(text: str) -> MultiplicityTable:
    return _from_records(json.loads(text)["multiplicities"])


def multiplicity_text(table: MultiplicityTable) -> str:
    """Fixed-width table, one row per HH^n, blank cells for zero multiplicities."""
    weights = list(range(table.max_weight + 1))
    headers = [f"V({t})" for t in weights]
    width = max([len(h) for h in headers] + [len(str(q)) for row in table.rows.values() for q in row])
    labels = [f"HH^{n}" for n in table.degrees]
    label_w = max([len("n")] + [len(s) for s in labels])
    lines = [f"{'n':<{label_w}} || " + " ".join(h.rjust(width) for h in headers)]
    lines.append("=" * label_w + "=++=" + "=" * ((width + 1) * len(weights) - 1))
    for n, label in zip(table.degrees, labels):
        cells = []
        for t in weights:
            q = table.get(n, t)
            cells.append((str(q) if q else "").rjust(width))
        lines.append((f"{label:<{label_w}} || " + " ".join(cells)).rstrip())
    return "\n".join(lines) + "\n"


def dims_text(dims: dict[int, int]) -> str:
    w = max([len("n")] + [len(str(n)) for n in dims])
    lines = [f"{'n':>{w}}  dim HH^n"]
    lines += [f"{n:>{w}}  {d}" for n, d in dims.items()]
    return "\n".join(lines) + "\n"


def dims_csv(dims: dict[int, int]) -> str:
    return "n,dim\n" + "".join(f"{n},{d}\n" for n, d in dims.items())


def parse_dims_csv(text: str) -> dict[int, int]:
    return {int(r["n"]): int(r["dim"]) for r in csv.DictReader(io.StringIO(text))}


def dims_json(dims: dict[int, int]) -> str:
    return json.dumps({"dims": [{"n": n, "dim": d} for n, d in dims.items()]}, indent=2) + "\n"


def parse_dims_json(text: str) -> dict[int, int]:
    return {int(r["n"]): int(r["dim"]) for r in json.loads(text)["dims"]}
