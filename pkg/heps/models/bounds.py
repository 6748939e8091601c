from __future__ import annotations

import math
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

RESIDUAL_LIMIT = 1e-10
ORDER_SLACK = 1e-9


class CriticalPoint(BaseModel):
    """
    Solution (x_c, d_c) of the tangency system for one value of c.

    s_c = -ln(1 - x_c) locates the maximizer where x_c has rounded to 1.
    residual_slope is relative to d (1 - x)^(d - 1).
    """

    model_config = ConfigDict(frozen=True)

    c: float = Field(..., gt=0, le=1)
    n: int = Field(2, ge=2)
    x_c: float = Field(..., gt=0, le=1)
    d_c: float = Field(..., gt=0, le=1)
    s_c: Optional[float] = Field(None, gt=0)
    residual_value: float = 0.0
    residual_slope: float = 0.0
    boundary_flag: bool = False

    @model_validator(mode="after")
    def check_residuals(self) -> "CriticalPoint":
        if self.boundary_flag:
            return self
        if not (self.x_c < 1 or self.s_c is not None):
            raise ValueError("interior critical point must satisfy x_c < 1")
        if abs(self.residual_value) > RESIDUAL_LIMIT or abs(self.residual_slope) > RESIDUAL_LIMIT:
            raise ValueError(
                f"tangency residuals too large: value={self.residual_value!r}, "
                f"slope={self.residual_slope!r}"
            )
        return self

    @property
    def delta_star(self) -> float:
        """Intrinsic dyadic increment, x = (1 + 1/delta)^-1."""
        if self.boundary_flag:
            return math.inf
        if self.s_c is not None:
            return math.expm1(self.s_c)
        return self.x_c / (1.0 - self.x_c)


class BoundReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    tau: float = Field(..., gt=0, le=1)
    c: float
    eps_lower_opt: float
    eps_lower_interp: float
    eps_upper: float
    ratio: float

    @model_validator(mode="after")
    def check_ordering(self) -> "BoundReport":
        if self.eps_lower_interp > self.eps_lower_opt + ORDER_SLACK:
            raise ValueError("interpolated bound exceeds the optimized bound")
        if self.eps_lower_opt > self.eps_upper + ORDER_SLACK:
            raise ValueError("optimized lower bound exceeds the upper bound")
        if not 0.81 < self.ratio <= 1.0 + ORDER_SLACK:
            raise ValueError(f"ratio {self.ratio!r} outside (0.81, 1]")
        return self


CURVE_HEADER = ("tau", "c", "lower_opt", "lower_interp", "upper", "ratio")


class CurveRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    tau: float
    c: float
    lower_opt: float
    lower_interp: float
    upper: float
    ratio: float

    @classmethod
    def from_report(cls, report: BoundReport) -> "CurveRow":
        return cls(
            tau=report.tau,
            c=report.c,
            lower_opt=report.eps_lower_opt,
            lower_interp=report.eps_lower_interp,
            upper=report.eps_upper,
            ratio=report.ratio,
        )

    def as_tuple(self) -> tuple:
        return tuple(getattr(self, name) for name in CURVE_HEADER)


class CurveTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: List[CurveRow]

    @model_validator(mode="after")
    def check_rows(self) -> "CurveTable":
        for prev, row in zip(self.rows, self.rows[1:]):
            if not row.tau > prev.tau:
                raise ValueError("curve rows must be strictly increasing in tau")
            if row.lower_opt < prev.lower_opt - ORDER_SLACK:
                raise ValueError(f"lower_opt decreases between tau={prev.tau!r} and tau={row.tau!r}")
        for row in self.rows:
            if not row.lower_interp <= row.lower_opt + ORDER_SLACK <= row.upper + 2 * ORDER_SLACK:
                raise ValueError(f"bound ordering violated at tau={row.tau!r}")
        return self
