from __future__ import annotations

import math
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class Ellipticity(BaseModel):
    """Ellipticity pair 0 < lambda <= Lambda; lambda = Lambda is admitted (tau = 1)."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lower: float = Field(..., gt=0, alias="lambda")
    upper: float = Field(..., gt=0, alias="Lambda")

    @model_validator(mode="after")
    def check_order(self) -> "Ellipticity":
        if not (math.isfinite(self.lower) and math.isfinite(self.upper)):
            raise ValueError("ellipticity constants must be finite")
        if self.lower > self.upper:
            raise ValueError(f"lambda={self.lower!r} must not exceed Lambda={self.upper!r}")
        return self

    @classmethod
    def from_tau(cls, tau: float) -> "Ellipticity":
        return cls(lower=tau, upper=1.0)

    @property
    def tau(self) -> float:
        return self.lower / self.upper

    @property
    def ratio(self) -> float:
        """Lambda / lambda"""
        return self.upper / self.lower


class SymMatrix2(BaseModel):
    model_config = ConfigDict(frozen=True)

    a11: float
    a12: float
    a22: float

    @classmethod
    def from_array(cls, m) -> "SymMatrix2":
        arr = np.asarray(m, dtype=float)
        if arr.shape != (2, 2):
            raise ValueError(f"expected a 2x2 array, got shape {arr.shape}")
        return cls(a11=float(arr[0, 0]), a12=float(0.5 * (arr[0, 1] + arr[1, 0])), a22=float(arr[1, 1]))

    @classmethod
    def identity(cls) -> "SymMatrix2":
        return cls(a11=1.0, a12=0.0, a22=1.0)

    def max_norm(self) -> float:
        return max(abs(self.a11), abs(self.a12), abs(self.a22))

    def trace(self) -> float:
        return self.a11 + self.a22

    def eigenvalues(self) -> Tuple[float, float]:
        """Closed 2x2 formula, ascending order."""
        mean = 0.5 * (self.a11 + self.a22)
        radius = math.hypot(0.5 * (self.a11 - self.a22), self.a12)
        return mean - radius, mean + radius

    def __neg__(self) -> "SymMatrix2":
        return SymMatrix2(a11=-self.a11, a12=-self.a12, a22=-self.a22)
