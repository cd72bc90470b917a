"""Serialization of counts, classification reports and table rows; the on-disk cache."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .classifier import BurnsideTerm, ClassificationReport, StabilizerType
from .closed_forms import ThetaBreakdown

SCHEMA_VERSION = 1
CACHE_ENV = "BEAUVILLE_CACHE_DIR"

STAB_NAMES = [t.value for t in StabilizerType]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def theta_to_dict(t: ThetaBreakdown) -> dict:
    return t.as_dict()


def theta_csv(rows: list[ThetaBreakdown]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "theta1", "theta2_prod", "theta3_prod", "theta4_prod", "theta"])
    for t in rows:
        w.writerow([t.n, t.theta1, t.theta2_prod, t.theta3_prod, t.theta4_prod, t.theta])
    return buf.getvalue()


def matrix_str(row) -> str:
    return " ".join(str(int(x)) for x in row)


def parse_matrix(s: str) -> tuple[int, int, int, int]:
    a, b, c, d = (int(x) for x in s.split())
    return a, b, c, d


def report_to_dict(r: ClassificationReport) -> dict:
    reps = r.rep_codes
    n = r.n
    rows = []
    d = reps % n
    rest = reps // n
    c = rest % n
    rest //= n
    b = rest % n
    a = rest // n
    for i in range(reps.shape[0]):
        rows.append(
            {
                "rep": f"{a[i]} {b[i]} {c[i]} {d[i]}",
                "size": int(r.orbit_sizes[i]),
                "stabilizer": r.stabilizer_types[i].value,
            }
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "swap": r.swap,
        "group_order": r.group_order,
        "total_matrices": r.total_matrices,
        "theta": r.theta,
        "burnside": [{"class": t.class_index, "size": t.class_size, "fixed": t.fixed} for t in r.burnside_breakdown],
        "stabilizers": r.stabilizer_histogram(),
        "orbits": rows,
    }


def report_from_dict(obj: dict) -> ClassificationReport:
    if obj.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {obj.get('schema_version')!r}")
    n = obj["n"]
    reps = np.array([parse_matrix(o["rep"]) for o in obj["orbits"]], dtype=np.int64).reshape(-1, 4)
    codes = ((reps[:, 0] * n + reps[:, 1]) * n + reps[:, 2]) * n + reps[:, 3]
    sizes = np.array([o["size"] for o in obj["orbits"]], dtype=np.int64)
    types = [StabilizerType(o["stabilizer"]) for o in obj["orbits"]]
    terms = [BurnsideTerm(t["class"], t["size"], t["fixed"]) for t in obj["burnside"]]
    return ClassificationReport(n, obj["swap"], obj["total_matrices"], terms, codes, sizes, types)


def report_csv(r: ClassificationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "a", "b", "c", "d", "orbit_size", "stabilizer"])
    for o in report_to_dict(r)["orbits"]:
        w.writerow([r.n, *parse_matrix(o["rep"]), o["size"], o["stabilizer"]])
    return buf.getvalue()


@dataclass
class TableRow:
    theta: ThetaBreakdown
    orbits: int | None = None
    stabilizers: dict[str, int] | None = None
    burnside: int | None = None

    @property
    def verified(self) -> bool:
        if self.orbits is None or self.burnside is None:
            return False
        return self.theta.theta == self.orbits == self.burnside

    def as_dict(self) -> dict:
        out = self.theta.as_dict()
        out["orbits"] = self.orbits
        out["stabilizers"] = self.stabilizers
        out["verified"] = self.verified
        return out


TABLE_HEADER = [
    "n",
    "theta1",
    "theta2_prod",
    "theta3_prod",
    "theta4_prod",
    "theta",
    "orbits",
    *[f"stab_{s}" for s in STAB_NAMES],
    "verified",
]


def table_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    for row in rows:
        d = row.as_dict()
        stabs = d["stabilizers"] or {}
        w.writerow(
            [d[k] for k in TABLE_HEADER[:6]]
            + ["" if d["orbits"] is None else d["orbits"]]
            + [stabs.get(s, "") for s in STAB_NAMES]
            + [str(d["verified"]).lower()]
        )
    return buf.getvalue()


def table_json(rows: list[TableRow]) -> str:
    return dumps({"schema_version": SCHEMA_VERSION, "rows": [r.as_dict() for r in rows]})


def cache_dir() -> Path:
    root = os.environ.get(CACHE_ENV)
    if root:
        return Path(root)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "beauville"


def _cache_path(n: int, swap: bool) -> Path:
    return cache_dir() / (f"classify-{n}.json" if swap else f"classify-{n}-noswap.json")


def load_cached(n: int, swap: bool = True) -> ClassificationReport | None:
    path = _cache_path(n, swap)
    try:
        obj = json.loads(path.read_text())
    except FileNotFoundError:
        return None
    except (OSError, json.JSONDecodeError):
        return None
    if obj.get("schema_version") != SCHEMA_VERSION or obj.get("n") != n or obj.get("swap") != swap:
        return None
    return report_from_dict(obj)


def store_cached(r: ClassificationReport) -> Path:
    path = _cache_path(r.n, r.swap)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(dumps(report_to_dict(r)))
    tmp.replace(path)
    return path
