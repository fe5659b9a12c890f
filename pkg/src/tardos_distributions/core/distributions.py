"""
Bias distributions: continuous arcsine with cutoff and the three discrete families
(Gauss-Legendre, discrete arcsine, Chebyshev-Gauss).
"""

import math
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
import pandas as pd
from scipy.integrate import quad_vec

from tardos_distributions.common import names as N
from tardos_distributions.common import utils
from tardos_distributions.common.errors import TardosError, invalid_input
from tardos_distributions.core.legendre import legendre_roots, modified_weight


logger = logging.getLogger(__name__)


INTEGRATION_EPSREL = 1.0E-10
INTEGRATION_EPSABS = 1.0E-13
INTEGRATION_TOL = 1.0E-9

# DOC: func(p, q) -> array of shape (len(p), ...) ; expectations are taken over the first axis
ExpectationFunc = Callable[[np.ndarray, np.ndarray], np.ndarray]



# REGION: [Distribution types]

class BiasDistribution(ABC):

    family: str

    @property
    @abstractmethod
    def label(self) -> str:
        ...

    @abstractmethod
    def cdf(self, p):
        ...

    @abstractmethod
    def sample(self, rng: np.random.Generator, count: int) -> np.ndarray:
        ...

    @abstractmethod
    def expect(self, func: ExpectationFunc) -> tuple[np.ndarray, float]:
        """E_p[func(p, q)] and the achieved absolute error estimate."""
        ...


@dataclass(frozen=True, eq=False)
class DiscreteBiasDistribution(BiasDistribution):
    family: str
    point_count: int
    points: np.ndarray
    probabilities: np.ndarray
    raw_normalizer: float
    cumulative: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "cumulative", np.cumsum(self.probabilities))

    @property
    def label(self) -> str:
        return f"{self.family}(c={self.point_count})"

    def cdf(self, p):
        # DOC: right-continuous step function, atom mass counted at its point
        scalar = np.ndim(p) == 0
        p = np.asarray(p, dtype=float)
        index = np.searchsorted(self.points, p, side="right")
        values = np.concatenate(([0.0], self.cumulative[:-1], [1.0]))[index]
        return float(values) if scalar else values

    def sample(self, rng, count):
        if count < 1:
            raise invalid_input("sample", f"Sample count must be positive, got {count}.", count=count)
        u = rng.random(count)
        index = np.searchsorted(self.cumulative, u, side="right")
        return self.points[np.minimum(index, self.point_count - 1)]

    def expect(self, func):
        values = func(self.points, 1.0 - self.points)
        return np.tensordot(self.probabilities, values, axes=(0, 0)), 0.0

    def as_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "family": self.family,
            "c": self.point_count,
            "k": np.arange(1, self.point_count + 1),
            "point": self.points,
            "probability": self.probabilities,
        }, columns=N.DIST_COLUMNS)

    def as_document(self) -> dict:
        return {
            "family": self.family,
            "c": self.point_count,
            "raw_normalizer": float(self.raw_normalizer),
            "atoms": [
                {"k": k + 1, "point": float(point), "probability": float(prob)}
                for k, (point, prob) in enumerate(zip(self.points, self.probabilities))
            ],
        }


@dataclass(frozen=True)
class ContinuousArcsine(BiasDistribution):
    cutoff: float
    family: str = N.ARCSINE

    @property
    def label(self) -> str:
        return f"{self.family}(delta={self.cutoff:.17g})"

    @property
    def r_lo(self) -> float:
        return math.asin(math.sqrt(self.cutoff))

    @property
    def r_hi(self) -> float:
        return math.pi / 2.0 - self.r_lo

    def cdf(self, p):
        scalar = np.ndim(p) == 0
        p = np.clip(np.asarray(p, dtype=float), 0.0, 1.0)
        values = (2.0 * np.arcsin(np.sqrt(p)) - 2.0 * self.r_lo) / (math.pi - 4.0 * self.r_lo)
        values = np.clip(values, 0.0, 1.0)
        return float(values) if scalar else values

    def sample(self, rng, count):
        if count < 1:
            raise invalid_input("sample", f"Sample count must be positive, got {count}.", count=count)
        return np.sin(rng.uniform(self.r_lo, self.r_hi, count)) ** 2

    def expect(self, func):
        # DOC: p = sin^2(r) with r uniform on [r_lo, r_hi] removes the arcsine density singularity
        width = self.r_hi - self.r_lo

        def integrand(r):
            p = np.array([math.sin(r) ** 2])
            q = np.array([math.cos(r) ** 2])
            return func(p, q)[0]

        value, error, info = quad_vec(
            integrand, self.r_lo, self.r_hi,
            epsabs=INTEGRATION_EPSABS, epsrel=INTEGRATION_EPSREL, norm="max", full_output=True
        )
        value, error = value / width, error / width
        scale = max(float(np.max(np.abs(value))), 1.0)
        if not info.success or error > INTEGRATION_TOL * scale:
            raise TardosError(
                "expect",
                TardosError.TardosErrorType.NON_INTEGRABLE,
                f"Integration over {self.label} did not reach the requested accuracy.",
                {"distribution": self.label, "error_estimate": float(error), "status": int(info.status)}
            )
        logger.debug("Integrated over %s with error estimate %.3e", self.label, error)
        return value, float(error)

# ENDREGION: [Distribution types]



# REGION: [Constructors]

def _check_point_count(source, point_count):
    if int(point_count) != point_count or point_count < 1:
        raise invalid_input(source, f"Point count must be a positive integer, got {point_count}.", point_count=point_count)
    return int(point_count)


def gauss_legendre_distribution(point_count: int) -> DiscreteBiasDistribution:
    point_count = _check_point_count("gauss_legendre_distribution", point_count)
    roots = legendre_roots(point_count)
    weights = modified_weight(roots.roots, roots.derivative_at_root)
    normalizer = float(np.sum(weights))
    logger.info("Gauss-Legendre distribution with %d points, N_c = %.17g", point_count, normalizer)
    return DiscreteBiasDistribution(
        family = N.GAUSS_LEGENDRE,
        point_count = point_count,
        points = (roots.roots + 1.0) / 2.0,
        probabilities = weights / normalizer,
        raw_normalizer = normalizer,
    )


def _sine_squared_distribution(family, point_count, angles):
    return DiscreteBiasDistribution(
        family = family,
        point_count = point_count,
        points = np.sin(angles) ** 2,
        probabilities = np.full(point_count, 1.0 / point_count),
        raw_normalizer = math.pi,
    )


def discrete_arcsine_distribution(point_count: int) -> DiscreteBiasDistribution:
    """ p'_{k,c} = sin^2((4k - 1) pi / (8c + 4)), uniform weights """
    point_count = _check_point_count("discrete_arcsine_distribution", point_count)
    k = np.arange(1, point_count + 1)
    return _sine_squared_distribution(N.DISCRETE_ARCSINE, point_count, (4 * k - 1) * np.pi / (8 * point_count + 4))


def chebyshev_gauss_distribution(point_count: int) -> DiscreteBiasDistribution:
    """ p''_{k,c} = sin^2((4k - 2) pi / (8c)), uniform weights """
    point_count = _check_point_count("chebyshev_gauss_distribution", point_count)
    k = np.arange(1, point_count + 1)
    return _sine_squared_distribution(N.CHEBYSHEV_GAUSS, point_count, (4 * k - 2) * np.pi / (8 * point_count))


def continuous_arcsine(cutoff: float) -> ContinuousArcsine:
    if not (0.0 <= cutoff < 0.5):
        raise invalid_input("continuous_arcsine", f"Cutoff must lie in [0, 1/2), got {cutoff}.", cutoff=cutoff)
    return ContinuousArcsine(cutoff=float(cutoff))


def arcsine_distribution() -> ContinuousArcsine:
    """F_inf, the arcsine distribution without cutoff."""
    return ContinuousArcsine(cutoff=0.0)


def cdf(distribution: BiasDistribution, p):
    return distribution.cdf(p)


def sample(distribution: BiasDistribution, rng_stream: np.random.Generator, count: int) -> np.ndarray:
    return distribution.sample(rng_stream, count)


DISCRETE_CONSTRUCTORS = {
    N.GAUSS_LEGENDRE: gauss_legendre_distribution,
    N.DISCRETE_ARCSINE: discrete_arcsine_distribution,
    N.CHEBYSHEV_GAUSS: chebyshev_gauss_distribution,
}

# ENDREGION: [Constructors]



# REGION: [Cutoff schedules]

# DOC: heuristic schedules, not the provable cutoffs of any security proof; power43 is pinned to delta(10) = 0.003
CUTOFF_SCHEDULES = {
    N.SCHEDULE_NONE: lambda colluders: 0.0,
    N.SCHEDULE_POWER43: lambda colluders: 0.003 * (10.0 / colluders) ** (4.0 / 3.0),
    N.SCHEDULE_CONSTANT: lambda colluders: 0.003,
}


def resolve_cutoff(schedule: str, colluders: int) -> float:
    if schedule not in CUTOFF_SCHEDULES:
        raise invalid_input("resolve_cutoff", f"Unknown cutoff schedule '{schedule}'.", schedule=schedule, known=list(CUTOFF_SCHEDULES))
    if colluders < 1:
        raise invalid_input("resolve_cutoff", f"Coalition size must be positive, got {colluders}.", colluders=colluders)
    return min(CUTOFF_SCHEDULES[schedule](colluders), 0.49)


def matching_cutoff(point_count: int) -> float:
    """Cutoff whose r-interval the discrete arcsine angles split into equal cells centred on each angle."""
    return math.sin(math.pi / (8 * point_count + 4)) ** 2


def points_for_colluders(colluders: int) -> int:
    # DOC: the c-point rule fights 2c - 1 or 2c colluders
    return utils.ceil_points(colluders)

# ENDREGION: [Cutoff schedules]



# REGION: [Factory]

def normalize_family(family: str) -> str:
    key = str(family).strip().lower()
    if key not in N.FAMILY_ALIASES:
        raise invalid_input("normalize_family", f"Unknown distribution family '{family}'.", family=family, known=sorted(N.FAMILY_ALIASES))
    return N.FAMILY_ALIASES[key]


def make_distribution(
    family: str,
    point_count: int | None = None,
    colluders: int | None = None,
    cutoff: float | None = None,
    schedule: str | None = None,
) -> BiasDistribution:
    family = normalize_family(family)
    if family == N.ARCSINE:
        if cutoff is None:
            cutoff = resolve_cutoff(schedule, colluders) if schedule is not None and colluders is not None else 0.0
        return continuous_arcsine(cutoff)
    if cutoff is not None:
        raise invalid_input("make_distribution", f"A cutoff only applies to the continuous family, not to {family}.", family=family, cutoff=cutoff)
    if point_count is None:
        if colluders is None:
            raise invalid_input("make_distribution", f"Family {family} needs a point count or a coalition size.", family=family)
        point_count = points_for_colluders(colluders)
    return DISCRETE_CONSTRUCTORS[family](point_count)

# ENDREGION: [Factory]
