"""Reader for the sweep CSV format: header row, float data rows, and a final
`# meta: {...}` JSON line.  Schema validation names the offending column so
render failures are actionable."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

__all__ = ["SchemaError", "SweepTable", "read_table"]


class SchemaError(ValueError):
    pass


@dataclass(frozen=True)
class SweepTable:
    path: str
    columns: list[str]
    data: np.ndarray  # shape (rows, columns)
    meta: dict

    def col(self, name: str) -> np.ndarray:
        if name not in self.columns:
            raise SchemaError(f"{self.path}: missing column '{name}'")
        return self.data[:, self.columns.index(name)]

    def require(self, *names: str) -> None:
        for name in names:
            if name not in self.columns:
                raise SchemaError(f"{self.path}: missing column '{name}'")

    def require_prefix(self, prefix: str) -> list[str]:
        found = [c for c in self.columns if c.startswith(prefix)]
        if not found:
            raise SchemaError(f"{self.path}: missing column '{prefix}*'")
        return found


def read_table(path: str) -> SweepTable:
    with open(path) as fh:
        lines = [line.rstrip("\n") for line in fh]
    if not lines:
        raise SchemaError(f"{path}: empty file")
    meta = {}
    if lines[-1].startswith("# meta: "):
        meta = json.loads(lines[-1][len("# meta: "):])
        lines = lines[:-1]
    columns = lines[0].split(",")
    rows = []
    for line in lines[1:]:
        if not line:
            continue
        cells = line.split(",")
        if len(cells) != len(columns):
            raise SchemaError(
                f"{path}: row with {len(cells)} cells does not match header "
                f"({len(columns)} columns)"
            )
        rows.append([float(c) for c in cells])
    data = np.array(rows, dtype=np.float64) if rows else np.zeros((0, len(columns)))
    return SweepTable(path=path, columns=columns, data=data, meta=meta)
