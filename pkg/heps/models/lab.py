from __future__ import annotations

from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Paraboloid(BaseModel):
    """P(x) = -(a/2)|x|^2 + slope . x + intercept"""

    model_config = ConfigDict(frozen=True)

    opening: float = Field(..., ge=0)
    slope: Tuple[float, float]
    intercept: float

    @classmethod
    def tangent_at(cls, opening: float, point: Tuple[float, float], value: float,
                   gradient: Tuple[float, float]) -> "Paraboloid":
        """Paraboloid of the given opening through (point, value) with the given gradient there."""
        px, py = point
        sx = gradient[0] + opening * px
        sy = gradient[1] + opening * py
        intercept = value + 0.5 * opening * (px * px + py * py) - sx * px - sy * py
        return cls(opening=opening, slope=(sx, sy), intercept=intercept)

    def __call__(self, x, y):
        return -0.5 * self.opening * (x * x + y * y) + self.slope[0] * x + self.slope[1] * y + self.intercept

    def lifted(self, offset: float) -> "Paraboloid":
        return Paraboloid(opening=self.opening, slope=self.slope, intercept=self.intercept + offset)


class ContactSet(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    opening: float = Field(..., ge=0)
    mask: np.ndarray
    tol: float = Field(..., ge=0)

    @field_validator("mask")
    @classmethod
    def check_mask(cls, value: np.ndarray) -> np.ndarray:
        if value.dtype != bool or value.ndim != 2:
            raise ValueError("contact mask must be a 2D boolean array")
        return value

    def count(self) -> int:
        return int(self.mask.sum())

    def __le__(self, other: "ContactSet") -> bool:
        """Set inclusion of the masks."""
        return bool(np.all(~self.mask | other.mask))


class DecayFit(BaseModel):
    model_config = ConfigDict(frozen=True)

    thresholds: List[float]
    measures: List[float]
    slope: float
    intercept: float
    r_squared: float = Field(..., ge=0, le=1)
    used: int = Field(..., ge=2)

    @model_validator(mode="after")
    def check_sequence(self) -> "DecayFit":
        if len(self.thresholds) != len(self.measures):
            raise ValueError("thresholds and measures differ in length")
        for prev, cur in zip(self.thresholds, self.thresholds[1:]):
            if not cur > prev > 0:
                raise ValueError("thresholds must be positive and increasing")
        for prev, cur in zip(self.measures, self.measures[1:]):
            if cur > prev:
                raise ValueError("level-set measures must be nonincreasing")
        return self

    @property
    def epsilon_hat(self) -> float:
        return -self.slope


class LemmaCheckReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: float = Field(..., gt=0)
    delta: float = Field(..., gt=0)
    c: float
    measure_F: float = Field(..., ge=0)
    measure_new_contact: float = Field(..., ge=0)
    bound: float = Field(..., ge=0)
    slack: float = Field(0.0, ge=0)
    touching_points: int = Field(0, ge=0)
    satisfied: bool
    interior_ok: bool
    supersolution_fraction: Optional[float] = None

    @model_validator(mode="after")
    def check_verdict(self) -> "LemmaCheckReport":
        expected = self.measure_new_contact >= self.bound - self.slack
        if self.measure_F == 0:
            expected = True
        if self.satisfied != expected:
            raise ValueError("satisfied flag disagrees with the measured inequality")
        return self
