"""
Scalar fields on a uniform square-cell grid over a box.

``values[j, i]`` is the sample at (xmin + i h, ymin + j h); row-major order means
rows of constant y, x varying fastest.
"""
from __future__ import annotations

import math
from typing import Optional, Tuple

import numpy as np

from heps.errors import InvalidInputError


class GridFunction:
    def __init__(self, values, xmin: float, ymin: float, h: float,
                 kink: Optional[Tuple[float, float]] = None):
        arr = np.array(values, dtype=float)
        if arr.ndim != 2:
            raise InvalidInputError(f"grid values must be 2D, got shape {arr.shape}")
        ny, nx = arr.shape
        if nx < 3 or ny < 3:
            raise InvalidInputError(f"grid needs at least 3x3 nodes, got {nx}x{ny}")
        if not (math.isfinite(h) and h > 0):
            raise InvalidInputError(f"spacing h must be positive, got {h!r}")
        if not (math.isfinite(xmin) and math.isfinite(ymin)):
            raise InvalidInputError("grid origin must be finite")
        if not np.all(np.isfinite(arr)):
            raise InvalidInputError("grid values must be finite")
        arr.setflags(write=False)
        self.values = arr
        self.xmin = float(xmin)
        self.ymin = float(ymin)
        self.h = float(h)
        # location of a known non-smooth point, excluded from stencil checks
        self.kink = kink

    @classmethod
    def sample(cls, func, n: int, lo: float = -1.0, hi: float = 1.0,
               kink: Optional[Tuple[float, float]] = None) -> "GridFunction":
        """Sample func(x, y) on an n x n grid over [lo, hi]^2."""
        if n < 3:
            raise InvalidInputError(f"grid size must be >= 3, got {n!r}")
        if not hi > lo:
            raise InvalidInputError(f"empty domain [{lo!r}, {hi!r}]")
        h = (hi - lo) / (n - 1)
        axis = lo + h * np.arange(n)
        x, y = np.meshgrid(axis, axis)
        return cls(func(x, y), lo, lo, h, kink=kink)

    @property
    def nx(self) -> int:
        return self.values.shape[1]

    @property
    def ny(self) -> int:
        return self.values.shape[0]

    @property
    def xmax(self) -> float:
        return self.xmin + (self.nx - 1) * self.h

    @property
    def ymax(self) -> float:
        return self.ymin + (self.ny - 1) * self.h

    @property
    def cell_area(self) -> float:
        return self.h * self.h

    def coordinates(self) -> Tuple[np.ndarray, np.ndarray]:
        xs = self.xmin + self.h * np.arange(self.nx)
        ys = self.ymin + self.h * np.arange(self.ny)
        return np.meshgrid(xs, ys)

    def squared_norm(self) -> np.ndarray:
        x, y = self.coordinates()
        return x * x + y * y

    def with_values(self, values) -> "GridFunction":
        return GridFunction(values, self.xmin, self.ymin, self.h, kink=self.kink)

    def boundary_mask(self, width: int = 1) -> np.ndarray:
        mask = np.zeros(self.values.shape, dtype=bool)
        mask[:width, :] = True
        mask[-width:, :] = True
        mask[:, :width] = True
        mask[:, -width:] = True
        return mask

    def interior_mask(self) -> np.ndarray:
        return ~self.boundary_mask(1)

    def node_at(self, x: float, y: float) -> Tuple[int, int]:
        """Nearest node (j, i) to the point (x, y)."""
        i = int(round((x - self.xmin) / self.h))
        j = int(round((y - self.ymin) / self.h))
        if not (0 <= i < self.nx and 0 <= j < self.ny):
            raise InvalidInputError(f"point ({x!r}, {y!r}) lies outside the grid domain")
        return j, i

    def position(self, node: Tuple[int, int]) -> Tuple[float, float]:
        j, i = node
        return self.xmin + i * self.h, self.ymin + j * self.h

    def is_interior(self, node: Tuple[int, int]) -> bool:
        j, i = node
        return 0 < i < self.nx - 1 and 0 < j < self.ny - 1

    def __add__(self, other) -> "GridFunction":
        other_values = other.values if isinstance(other, GridFunction) else other
        return self.with_values(self.values + other_values)

    def __repr__(self) -> str:
        return (
            f"GridFunction(nx={self.nx}, ny={self.ny}, xmin={self.xmin!r}, "
            f"ymin={self.ymin!r}, h={self.h!r})"
        )
