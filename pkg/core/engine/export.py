"""
Trace Export

CSV (header t,theta,signal,l_pub,L_post,action,region; reals at 17
significant digits) and JSON-lines files with identical fields, plus the
guide-value file used to draw the cascade boundaries next to a trace.
"""

import json
from pathlib import Path
from typing import Literal, Union

import numpy as np
import pandas as pd
import structlog

from core.engine.trace import TRACE_COLUMNS, Trace
from core.model import DerivedConstants

logger = structlog.get_logger()

ExportFormat = Literal["csv", "json"]
FLOAT_FORMAT = "%.17g"


def write_trace(trace: Trace, path: Union[str, Path], fmt: ExportFormat = "csv") -> Path:
    """Write a trace; ``json`` produces one object per line."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = trace.to_frame()

    if fmt == "csv":
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
    elif fmt == "json":
        with path.open("w", encoding="utf-8") as handle:
            for record in _records(frame):
                handle.write(json.dumps(record) + "\n")
    else:
        raise ValueError(f"Unknown export format: {fmt}")

    logger.info("Trace written", path=str(path), format=fmt, periods=len(trace))
    return path


def _records(frame: pd.DataFrame):
    theta = frame["theta"].tolist()
    for i, row in enumerate(frame.itertuples(index=False)):
        yield {
            "t": int(row.t),
            "theta": None if theta[i] is pd.NA else int(theta[i]),
            "signal": int(row.signal),
            "l_pub": float(row.l_pub),
            "L_post": float(row.L_post),
            "action": int(row.action),
            "region": row.region,
        }


def read_trace_frame(path: Union[str, Path], fmt: ExportFormat = "csv") -> pd.DataFrame:
    """Read an exported trace back into a DataFrame with exact float values."""
    path = Path(path)
    if fmt == "csv":
        frame = pd.read_csv(path, float_precision="round_trip")
    elif fmt == "json":
        with path.open(encoding="utf-8") as handle:
            frame = pd.DataFrame([json.loads(line) for line in handle if line.strip()])
    else:
        raise ValueError(f"Unknown export format: {fmt}")
    return frame[TRACE_COLUMNS]


def guide_values(constants: DerivedConstants) -> pd.DataFrame:
    """Horizontal reference lines for plotting the public likelihood."""
    return pd.DataFrame(
        {
            "name": ["upper_cascade", "zero", "lower_cascade", "upper_sup", "lower_sup"],
            "value": np.array(
                [
                    constants.c_alpha,
                    0.0,
                    -constants.c_alpha,
                    constants.l_sup,
                    -constants.l_sup,
                ]
            ),
        }
    )


def write_guides(constants: DerivedConstants, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    guide_values(constants).to_csv(path, index=False, float_format=FLOAT_FORMAT)
    return path
