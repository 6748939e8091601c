from pydantic import Field, model_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Parallelism for tau sweeps (0 = sequential)
    HEPS_THREADS: int = Field(0, description="Worker cap for sweeps; 0 runs sequentially.")

    # Extremum solver
    HEPS_INTERP_EXPONENT: float = Field(
        2.4, description="Exponent of c(tau) in the interpolation point t(tau)."
    )
    HEPS_SOLVER_MAX_ITER: int = Field(
        200, description="Iteration budget for golden-section, bisection and Newton loops."
    )
    HEPS_GOLDEN_TOL: float = Field(
        1e-6, description="Bracket width at which golden-section hands over to bisection."
    )
    HEPS_POLISH_TOL: float = Field(
        1e-12, description="Bracket width in s = -ln(1 - x) for the derivative bisection."
    )

    # Paraboloid lab
    HEPS_THETA_ITERATIONS: int = Field(
        60, description="Bisection steps for the curvature function in bisection mode."
    )
    HEPS_CONTACT_TOL_FACTOR: float = Field(
        0.05, description="Contact tolerance is factor * (1 + a) * h^2; 4.0 gives the coarse rule."
    )
    HEPS_DECAY_MIN_CELLS: int = Field(
        25, description="Minimum number of grid cells for a level set to enter the decay fit."
    )
    HEPS_ELLIPTICITY_LOWER: float = Field(
        1.0, description="Default lower ellipticity used for the intrinsic dyadic ratio."
    )
    HEPS_ELLIPTICITY_UPPER: float = Field(
        3.0, description="Default upper ellipticity used for the intrinsic dyadic ratio."
    )

    HEPS_LOG_LEVEL: str = "WARNING"

    class Config:
        env_file = ".env"
        case_sensitive = True

    @model_validator(mode="after")
    def ensure_consistent_values(self) -> "Settings":
        if self.HEPS_THREADS < 0:
            raise ValueError("HEPS_THREADS must be >= 0 (0 = sequential).")
        if self.HEPS_INTERP_EXPONENT <= 0:
            raise ValueError("HEPS_INTERP_EXPONENT must be positive.")
        if self.HEPS_SOLVER_MAX_ITER < 10:
            raise ValueError("HEPS_SOLVER_MAX_ITER must allow at least 10 iterations.")
        if not 0 < self.HEPS_POLISH_TOL < self.HEPS_GOLDEN_TOL < 1:
            raise ValueError("Tolerances must satisfy 0 < HEPS_POLISH_TOL < HEPS_GOLDEN_TOL < 1.")
        if self.HEPS_CONTACT_TOL_FACTOR < 0:
            raise ValueError("HEPS_CONTACT_TOL_FACTOR must be nonnegative.")
        if not 0 < self.HEPS_ELLIPTICITY_LOWER <= self.HEPS_ELLIPTICITY_UPPER:
            raise ValueError(
                "Default ellipticity must satisfy 0 < HEPS_ELLIPTICITY_LOWER <= HEPS_ELLIPTICITY_UPPER."
            )
        return self


settings = Settings()
