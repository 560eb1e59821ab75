import csv
from pathlib import Path

import numpy as np

from ..detectors.base import VERDICT_FIELDS
from ..errors import DataError

__all__ = ["write_csv", "write_verdicts", "read_verdicts", "write_grid"]


def _fmt(v):
    if isinstance(v, (float, np.floating)):
        return "{:.17g}".format(float(v))
    return v


def write_csv(path, header, rows):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
    return path


def write_verdicts(path, records, verdicts):
    rows = (v.row(i, r.label) for i, (r, v) in enumerate(zip(records, verdicts)))
    return write_csv(path, VERDICT_FIELDS, rows)


def read_verdicts(path):
    """ Rows of a verdict file as dicts with `detected` and `value` parsed. """
    path = Path(path)
    if not path.is_file():
        raise DataError("verdict file not found: {}".format(path))
    with open(path, newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames != VERDICT_FIELDS:
            raise DataError("{} is not a verdict file, header {}".format(path, reader.fieldnames))
        rows = []
        for lineno, row in enumerate(reader, start=2):
            try:
                row["index"] = int(row["index"])
                row["order"] = int(row["order"]) if row["order"] else None
                row["detected"] = bool(int(row["detected"]))
                row["value"] = float(row["value"])
            except (TypeError, ValueError) as e:
                raise DataError("{}:{}: {}".format(path, lineno, e)) from e
            if row["label"] not in ("pp", "pn"):
                raise DataError("{}:{}: bad label {!r}".format(path, lineno, row["label"]))
            rows.append(row)
    return rows


def write_grid(path, x_name, y_name, x, y, F, z_name="F"):
    """ Long-format contour grid, one (x, y, F) line per node with x the slow index. """
    F = np.asarray(F)
    rows = ((xi, yj, F[i, j]) for i, xi in enumerate(x) for j, yj in enumerate(y))
    return write_csv(path, [x_name, y_name, z_name], rows)
