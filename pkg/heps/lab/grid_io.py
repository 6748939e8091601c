"""
heps-grid v1 text format.

    # heps-grid v1 nx=<int> ny=<int> xmin=<decimal> ymin=<decimal> h=<decimal>
    <nx*ny whitespace-separated decimals, row-major>

Floats are written with the shortest round-trip representation, so
write -> read -> write is byte-identical.
"""
import logging
import re
from pathlib import Path
from typing import List, Union

import numpy as np

from heps.errors import GridFormatError, InvalidInputError
from heps.lab.grid import GridFunction

logger = logging.getLogger(__name__)

HEADER_RE = re.compile(
    r"^# heps-grid v1 nx=(?P<nx>\d+) ny=(?P<ny>\d+) "
    r"xmin=(?P<xmin>\S+) ymin=(?P<ymin>\S+) h=(?P<h>\S+)$"
)


def format_float(value: float) -> str:
    return repr(float(value))


def dumps_grid(grid: GridFunction) -> str:
    lines = [
        f"# heps-grid v1 nx={grid.nx} ny={grid.ny} xmin={format_float(grid.xmin)} "
        f"ymin={format_float(grid.ymin)} h={format_float(grid.h)}"
    ]
    for row in grid.values.tolist():
        lines.append(" ".join(format_float(v) for v in row))
    return "\n".join(lines) + "\n"


def _parse_float(token: str, line: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise GridFormatError(f"not a decimal number: {token!r}", line)


def loads_grid(text: str) -> GridFunction:
    lines = text.splitlines()
    if not lines:
        raise GridFormatError("empty grid file", 1)
    match = HEADER_RE.match(lines[0].strip())
    if match is None:
        raise GridFormatError("malformed heps-grid v1 header", 1)
    nx, ny = int(match["nx"]), int(match["ny"])
    xmin = _parse_float(match["xmin"], 1)
    ymin = _parse_float(match["ymin"], 1)
    h = _parse_float(match["h"], 1)

    expected = nx * ny
    values: List[float] = []
    for number, line in enumerate(lines[1:], start=2):
        for token in line.split():
            if len(values) == expected:
                raise GridFormatError(f"more than nx*ny={expected} values", number)
            values.append(_parse_float(token, number))
    if len(values) != expected:
        raise GridFormatError(f"expected {expected} values, found {len(values)}", len(lines) + 1)

    try:
        return GridFunction(np.array(values).reshape(ny, nx), xmin, ymin, h)
    except InvalidInputError as exc:
        raise GridFormatError(str(exc), 1)


def write_grid(grid: GridFunction, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(dumps_grid(grid), encoding="utf-8")
    logger.info("wrote %r to %s", grid, path)
    return path


def read_grid(path: Union[str, Path]) -> GridFunction:
    return loads_grid(Path(path).read_text(encoding="utf-8"))
