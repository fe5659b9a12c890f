"""
Expected coalition score, code length constants, convergence diagnostics for the
Gauss-Legendre distributions, and Monte Carlo validation of the scheme.
"""

import math
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from tardos_distributions.common import names as N
from tardos_distributions.common import utils
from tardos_distributions.common.errors import invalid_input
from tardos_distributions.core import scheme
from tardos_distributions.core.attacks import (
    StrategyProfile,
    minimizing_profile,
    normalize_strategy,
    pirate_output,
    profile_of,
)
from tardos_distributions.core.distributions import (
    BiasDistribution,
    DiscreteBiasDistribution,
    arcsine_distribution,
    gauss_legendre_distribution,
    make_distribution,
    normalize_family,
)


logger = logging.getLogger(__name__)


ARCSINE_MU = 2.0 / math.pi
ARCSINE_DL = math.pi ** 2 / 2.0

CDF_GRID = np.arange(1, 100) / 100.0



# REGION: [Expected coalition score]

@dataclass(frozen=True)
class MuReport:
    distribution: str
    coalition_size: int
    strategy: str
    mu: float
    dl: float
    second_moment: float
    error: float = 0.0

    @property
    def degenerate(self) -> bool:
        return self.mu == 0.0

    @property
    def variance(self) -> float:
        return self.second_moment - self.mu ** 2

    def as_row(self) -> dict:
        return {
            "distribution": self.distribution,
            "c_tilde": self.coalition_size,
            "strategy": self.strategy,
            "mu": self.mu,
            "dl": self.dl,
            "second_moment": self.second_moment,
            "variance": self.variance,
        }


def coalition_mean(distribution: BiasDistribution, coalition_size: int, profile: StrategyProfile) -> MuReport:
    """
    mu = E_p sum_sigma binom(c, sigma) p^sigma q^(c - sigma) (2 theta[sigma] - 1) A(sigma, p), the expected
    total coalition score per segment, and d_l = 2 / mu^2.
    """
    if coalition_size < 1:
        raise invalid_input("coalition_mean", f"Coalition size must be positive, got {coalition_size}.", coalition_size=coalition_size)
    if profile.coalition_size != coalition_size:
        raise invalid_input("coalition_mean", f"Profile is for {profile.coalition_size} pirates, not {coalition_size}.", coalition_size=coalition_size)

    expectations = scheme.coalition_expectations(distribution, coalition_size)
    mu = expectations.mean(profile.theta)
    if mu == 0.0:
        logger.warning("Expected coalition score is zero for %s, c=%d, %s: d_l undefined", distribution.label, coalition_size, profile.name)
        dl = math.inf
    else:
        dl = 2.0 / mu ** 2
    return MuReport(
        distribution = distribution.label,
        coalition_size = coalition_size,
        strategy = profile.name,
        mu = mu,
        dl = dl,
        second_moment = expectations.second_moment(),
        error = expectations.error,
    )


def resolve_profile(strategy, distribution: BiasDistribution, coalition_size: int) -> StrategyProfile:
    if isinstance(strategy, StrategyProfile):
        return strategy
    strategy = normalize_strategy(strategy)
    if strategy == N.MINIMIZING:
        return minimizing_profile(distribution, coalition_size)
    return profile_of(strategy, coalition_size)

# ENDREGION: [Expected coalition score]



# REGION: [Code length sweep]

def _sweep_task(task):
    family, coalition_size, strategy, schedule = task
    distribution = make_distribution(family, colluders=coalition_size, schedule=schedule)
    report = coalition_mean(distribution, coalition_size, resolve_profile(strategy, distribution, coalition_size))
    logger.info("Sweep %s c=%d: mu=%.12g d_l=%.12g", distribution.label, coalition_size, report.mu, report.dl)
    points = distribution.point_count if isinstance(distribution, DiscreteBiasDistribution) else pd.NA
    return {
        "family": distribution.family,
        "c_tilde": coalition_size,
        "points": points,
        "strategy": report.strategy,
        "mu": report.mu,
        "dl": report.dl,
    }


def dl_sweep(
    families: list[str],
    coalition_sizes,
    strategy_mode: str | StrategyProfile = N.MINIMIZING,
    schedule: str = N.DEFAULT_SCHEDULE,
    jobs: int = 1,
    include_reference: bool = True,
) -> pd.DataFrame:
    """
    d_l estimates per (family, coalition size): discrete families use ceil(c/2) points, the
    continuous family its scheduled cutoff. Rows keep task order for any number of jobs.
    """
    families = [normalize_family(family) for family in families]
    coalition_sizes = [int(c) for c in coalition_sizes]
    if not families or not coalition_sizes:
        raise invalid_input("dl_sweep", "Families and coalition sizes must be nonempty.")

    tasks = [(family, c, strategy_mode, schedule) for family in families for c in coalition_sizes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(_sweep_task, tasks))
    else:
        rows = [_sweep_task(task) for task in tasks]

    if include_reference:
        rows += [
            {"family": N.REFERENCE, "c_tilde": c, "points": pd.NA, "strategy": N.INTERLEAVING, "mu": ARCSINE_MU, "dl": ARCSINE_DL}
            for c in coalition_sizes
        ]

    frame = pd.DataFrame(rows, columns=N.SWEEP_COLUMNS)
    frame["points"] = frame["points"].astype("Int64")
    return frame

# ENDREGION: [Code length sweep]



# REGION: [Convergence diagnostics]

@dataclass(frozen=True)
class ConvergenceReport:
    point_count: int
    alpha: float
    max_point_error: float
    refined_point_error: float
    max_weight_error: float
    max_weight_error_scaled: float
    normalizer_gap: float
    cdf_sup_error: float

    def as_row(self) -> dict:
        return {
            "c": self.point_count,
            "alpha": self.alpha,
            "max_point_err": self.max_point_error,
            "max_weight_err_scaled": self.max_weight_error_scaled,
            "normalizer_gap": self.normalizer_gap,
            "cdf_sup_err": self.cdf_sup_error,
        }


def cdf_sup_error(distribution: BiasDistribution, grid=CDF_GRID) -> float:
    """sup over the grid of |F(p) - F_inf(p)|."""
    return float(np.max(np.abs(distribution.cdf(grid) - arcsine_distribution().cdf(grid))))


def theorem1_report(point_count: int, alpha: float) -> ConvergenceReport:
    """
    Compare the exact c-point Gauss-Legendre parameters with their large-c forms
    p_{k,c} ~ sin^2(pi k / 2c), w_{k,c} ~ pi / c, N_c ~ pi over alpha c < k < (1 - alpha) c.
    """
    if point_count < 2:
        raise invalid_input("theorem1_report", f"Point count must be at least 2, got {point_count}.", point_count=point_count)
    if not (0.0 < alpha < 0.5):
        raise invalid_input("theorem1_report", f"alpha must lie in (0, 1/2), got {alpha}.", alpha=alpha)

    k = np.arange(1, point_count + 1)
    inner = (alpha * point_count < k) & (k < (1.0 - alpha) * point_count)
    if not inner.any():
        raise invalid_input("theorem1_report", f"No index k with {alpha} c < k < {1.0 - alpha} c for c = {point_count}.", point_count=point_count, alpha=alpha)

    distribution = gauss_legendre_distribution(point_count)
    points = distribution.points[inner]
    weights = distribution.probabilities[inner] * distribution.raw_normalizer
    k = k[inner]

    max_weight_error = float(np.max(np.abs(weights - math.pi / point_count)))
    return ConvergenceReport(
        point_count = point_count,
        alpha = alpha,
        max_point_error = float(np.max(np.abs(points - np.sin(np.pi * k / (2 * point_count)) ** 2))),
        refined_point_error = float(np.max(np.abs(points - np.sin((4 * k - 1) * np.pi / (8 * point_count + 4)) ** 2))),
        max_weight_error = max_weight_error,
        max_weight_error_scaled = point_count * max_weight_error,
        normalizer_gap = math.pi - distribution.raw_normalizer,
        cdf_sup_error = cdf_sup_error(distribution),
    )

# ENDREGION: [Convergence diagnostics]



# REGION: [Simulation]

@dataclass(frozen=True)
class SimulationReport:
    params: dict
    distribution: str
    strategy: str
    coalition: list
    trials: int
    seed: int
    fp_rate: float
    fn_rate: float
    mean_pirate_score: float
    pirate_score_stderr: float
    expected_pirate_score: float
    mean_top_pirate_score: float
    trial_scores: list = field(default_factory=list, repr=False)

    def as_document(self) -> dict:
        return {
            "params": self.params,
            "distribution": self.distribution,
            "strategy": self.strategy,
            "coalition": self.coalition,
            "fp_rate": self.fp_rate,
            "fn_rate": self.fn_rate,
            "mean_pirate_score": self.mean_pirate_score,
            "pirate_score_stderr": self.pirate_score_stderr,
            "expected_pirate_score": self.expected_pirate_score,
            "mean_top_pirate_score": self.mean_top_pirate_score,
            "trials": self.trials,
            "seed": self.seed,
        }


def _simulation_trial(task):
    params, distribution, strategy, coalition, seed = task
    rng = utils.rng_stream(seed)
    biases = distribution.sample(rng, params.code_length)
    code = scheme.generate_code(params.users, biases, rng)
    output = pirate_output(strategy, code.select(coalition), rng)
    result = scheme.accuse(code, output, params.threshold)

    pirates = np.zeros(params.users, dtype=bool)
    pirates[coalition] = True
    accused = np.zeros(params.users, dtype=bool)
    accused[result.accused] = True
    pirate_scores = result.scores[coalition]
    return (
        bool(np.any(accused & ~pirates)),
        not bool(np.any(accused & pirates)),
        float(pirate_scores.sum()),
        float(pirate_scores.max()),
    )


def simulate(
    params: scheme.SchemeParameters,
    distribution: BiasDistribution,
    strategy_name: str | StrategyProfile,
    coalition=None,
    trials: int = 500,
    rng_seed: int = N.DEFAULT_SEED,
    jobs: int = 1,
) -> SimulationReport:
    """
    Fresh biases, code, forged copy and accusation per trial; each trial draws from its own
    child seed so the report is identical for any number of jobs.
    """
    coalition = np.arange(params.colluders) if coalition is None else np.asarray(coalition, dtype=int)
    if trials < 1:
        raise invalid_input("simulate", f"Number of trials must be positive, got {trials}.", trials=trials)
    if coalition.size < 1 or coalition.size > params.users:
        raise invalid_input("simulate", f"Coalition of {coalition.size} does not fit {params.users} users.", coalition=coalition.tolist())
    if np.unique(coalition).size != coalition.size or coalition.min() < 0 or coalition.max() >= params.users:
        raise invalid_input("simulate", "Coalition members must be distinct user indices.", coalition=coalition.tolist())

    profile = resolve_profile(strategy_name, distribution, coalition.size)
    executed = profile if (isinstance(strategy_name, StrategyProfile) or profile.name == N.MINIMIZING) else profile.name
    expected = params.code_length * coalition_mean(distribution, coalition.size, profile).mu

    tasks = [(params, distribution, executed, coalition, seed) for seed in utils.spawn_seeds(rng_seed, trials)]
    logger.info("Simulating %d trials of %s against %s", trials, profile.name, distribution.label)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            outcomes = list(executor.map(_simulation_trial, tasks, chunksize=max(1, trials // (4 * jobs))))
    else:
        outcomes = [_simulation_trial(task) for task in tasks]

    false_positive, false_negative, pirate_total, pirate_top = (np.array(column) for column in zip(*outcomes))
    stderr = float(np.std(pirate_total, ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    return SimulationReport(
        params = params.as_dict(),
        distribution = distribution.label,
        strategy = profile.name,
        coalition = coalition.tolist(),
        trials = trials,
        seed = int(rng_seed),
        fp_rate = float(false_positive.mean()),
        fn_rate = float(false_negative.mean()),
        mean_pirate_score = float(pirate_total.mean()),
        pirate_score_stderr = stderr,
        expected_pirate_score = float(expected),
        mean_top_pirate_score = float(pirate_top.mean()),
        trial_scores = pirate_total.tolist(),
    )

# ENDREGION: [Simulation]
