"""JSON, CSV and plain-text serialisation of evaluation records."""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any, Iterable, List, Sequence

from ._base import EvalRecord

__all__ = ["FIELDS", "records_to_json", "records_to_csv", "records_to_text", "render"]

#: public columns, in order
FIELDS = ("id", "z", "params", "value", "reference", "residual", "evals", "converged")


def _clean(x: Any) -> Any:
    """Non-finite floats become ``None`` so the JSON stays standard."""
    if isinstance(x, float) and not math.isfinite(x):
        return None
    if isinstance(x, list):
        return [_clean(v) for v in x]
    if isinstance(x, dict):
        return {k: _clean(v) for k, v in x.items()}
    return x


def _rows(records: Iterable[EvalRecord]) -> List[dict]:
    return [_clean(r.to_dict()) for r in records]


def records_to_json(records: Iterable[EvalRecord]) -> str:
    """A JSON array with one record per line."""
    rows = [json.dumps(r, allow_nan=False) for r in _rows(records)]
    return "[\n" + ",\n".join("  " + r for r in rows) + ("\n" if rows else "") + "]\n"


def records_to_csv(records: Iterable[EvalRecord]) -> str:
    """One row per record; list and dict cells are JSON encoded."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for row in _rows(records):
        writer.writerow(
            [json.dumps(row[k]) if isinstance(row[k], (list, dict, bool)) else ("" if row[k] is None else row[k]) for k in FIELDS]
        )
    return buf.getvalue()


def _fmt_complex(z: complex, digits: int = 16) -> str:
    if math.isnan(z.real):
        return "nan"
    if z.imag == 0:
        return f"{z.real:.{digits}g}"
    return f"{z.real:.{digits}g}{z.imag:+.{digits}g}i"


def records_to_text(records: Sequence[EvalRecord]) -> str:
    lines = []
    for r in records:
        params = ",".join(f"{k}={v}" for k, v in r.params.items())
        status = "ok" if r.passed else ("not converged" if not r.converged else "FAIL")
        lines.append(
            f"{r.id:<7} z={_fmt_complex(r.z, 6):<14} {params:<14} value={_fmt_complex(r.value)}  "
            f"reference={_fmt_complex(r.reference)}  residual={r.residual:.2e}  evals={r.evals}  {status}"
        )
    return "\n".join(lines) + ("\n" if lines else "")


def render(records: Sequence[EvalRecord], fmt: str) -> str:
    if fmt == "json":
        return records_to_json(records)
    if fmt == "csv":
        return records_to_csv(records)
    if fmt == "text":
        return records_to_text(records)
    raise ValueError(f"unknown format {fmt!r}")
