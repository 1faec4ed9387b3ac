"""Exception types shared across the package."""


class GridError(ValueError):
    """Invalid periodic-grid parameters."""


class OutOfBandError(ValueError):
    """Requested wavenumber lies outside the grid's lattice or dealias band."""


class NumericError(ValueError):
    """Non-finite values encountered where finite data is required."""


class GevreyOverflowError(ValueError):
    """Exponential Fourier weight would overflow double precision."""


class ShapeError(ValueError):
    """Fields live on incompatible grids."""


class ContractError(ValueError):
    """An operation precondition (e.g. solenoidality) is violated."""


class CflError(RuntimeError):
    """Advective CFL limit exceeded for the requested time step."""

    def __init__(self, dt, dt_max):
        super().__init__(
            f"time step dt={dt:g} exceeds advective CFL limit {dt_max:g}; "
            f"suggested dt <= {dt_max:g}"
        )
        self.dt = dt
        self.suggested_dt = dt_max


class BlowUpError(RuntimeError):
    """Non-finite coefficients appeared during time integration."""

    def __init__(self, t):
        super().__init__(f"solution blew up (non-finite coefficients) at t={t:g}")
        self.t = t


class DegenerateLevelError(ValueError):
    """Level set of a constant field at its own value; measure is ill-posed."""


class UndefinedRatioError(ValueError):
    """Velocity/force ratio is undefined for zero forcing."""


class ConfigError(ValueError):
    """Configuration text failed validation; carries all errors found."""

    def __init__(self, errors):
        self.errors = list(errors)
        lines = "; ".join(f"line {ln}: {msg}" for ln, msg in self.errors)
        super().__init__(f"invalid configuration: {lines}")
