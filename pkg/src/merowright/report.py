"""Report assembly and emission: JSON certificates, CSV tables, text tables.

Numeric fields are floats straight out of the computation; JSON emission
uses ``repr`` round-tripping (so re-reading a certificate reproduces every
finite value bit-exactly) and CSV/text format at 17 significant digits,
which also round-trips doubles.  Non-finite values never reach JSON: they
are replaced by null with a side flag where they can occur.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any

from .closure import ClosureOrder
from .radii import RadiusResult

SCHEMA_VERSION = "1"

# Deliberate algebraic corrections relative to commonly circulated printed
# variants of these formulas.  Each is validated by an independent oracle
# in the test suite; certificates embed the ids so results are auditable.
CORRECTIONS = {
    "E1_extremal_principal_part": (
        "boundary witness functions carry the principal part 1/z, not a constant term"
    ),
    "E2_closure_order_denominator_sign": (
        "closure-order denominators read sigma_k*bracket^2 - scale*eta^2*(1-alpha)*(k+2alpha-1); "
        "the boundary-pair identity pins the sign"
    ),
    "E3_convex_radius_k_factor": (
        "the convexity radius carries the factor k produced by differentiating the series"
    ),
    "E4_membership_ratio_first_derivative": (
        "the defining membership ratio uses z F'/F shifted by (1, 2alpha-1); the "
        "second-derivative variant is inconsistent with the sharp coefficient test"
    ),
}


def fmt17(x: float) -> str:
    return format(float(x), ".17g")


def sanitize(value: Any) -> Any:
    """Recursively make a payload JSON-safe (finite floats, basic types)."""
    if isinstance(value, dict):
        return {k: sanitize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [sanitize(v) for v in value]
    if isinstance(value, complex):
        return [sanitize(value.real), sanitize(value.imag)]
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    raise TypeError(f"cannot serialize {type(value).__name__} into a report")


def build_report(command: str, config_echo: dict, payload: dict) -> dict:
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": config_echo,
        "corrections": sorted(CORRECTIONS),
    }
    report.update(payload)
    return sanitize(report)


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, allow_nan=False) + "\n"


def closure_order_dict(order: ClosureOrder) -> dict:
    return {
        "kind": order.kind,
        "k_max": order.k_max,
        "aggregate": order.aggregate,
        "aggregate_defined": order.defined,
        "aggregate_in_range": order.aggregate_in_range,
        "first_invalid_k": order.first_invalid_k,
        "per_k": [
            {
                "k": e.k,
                "value": e.value,
                "denominator": e.denominator,
                "denominator_positive": e.denominator_positive,
                "in_range": e.in_range,
            }
            for e in order.per_k
        ],
    }


def radius_result_dict(result: RadiusResult) -> dict:
    return {
        "condition": result.condition,
        "order": result.order,
        "radius": result.radius,
        "attained_k": result.attained_k,
        "k_max": result.k_max,
        "tail_trend": result.tail_trend,
        "per_k": [
            {
                "k": c.k,
                "candidate": c.candidate,
                "raw": c.raw,
                **(
                    {"without_k_factor": c.without_k_factor}
                    if c.without_k_factor is not None
                    else {}
                ),
            }
            for c in result.per_k
        ],
    }


def rows_to_csv(header: list[str], rows: list[tuple]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt17(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def rows_to_text(header: list[str], rows: list[tuple], title: str = "") -> str:
    cells = [[fmt17(v) if isinstance(v, float) else str(v) for v in row] for row in rows]
    widths = [len(h) for h in header]
    for row in cells:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    if title:
        lines.append(title)
    lines.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)))
    lines.append("  ".join("-" * w for w in widths))
    for row in cells:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines) + "\n"
