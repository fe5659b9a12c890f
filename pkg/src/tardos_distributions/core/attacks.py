"""
Pirate strategies under the marking assumption, as executable rules and as
response profiles theta[sigma] = Pr[y = 1 | sigma ones among the c pirate symbols].
"""

import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from tardos_distributions.common import names as N
from tardos_distributions.common.errors import TardosError, invalid_input
from tardos_distributions.core.distributions import BiasDistribution
from tardos_distributions.core.scheme import coalition_expectations, coalition_terms


logger = logging.getLogger(__name__)


# DOC: expectations within this fraction of their magnitude scale are ties
TIE_RELATIVE_TOL = 1.0E-10



# REGION: [Profiles]

@dataclass(frozen=True, eq=False)
class StrategyProfile:
    name: str
    coalition_size: int
    theta: np.ndarray

    def __post_init__(self):
        theta = np.asarray(self.theta, dtype=float)
        if theta.shape != (self.coalition_size + 1,):
            raise invalid_input("StrategyProfile", f"Profile needs {self.coalition_size + 1} entries, got {theta.size}.", name=self.name)
        if np.any(~((theta >= 0.0) & (theta <= 1.0))):
            raise invalid_input("StrategyProfile", "Profile entries must lie in [0, 1].", name=self.name, theta=theta.tolist())
        if theta[0] != 0.0 or theta[-1] != 1.0:
            raise invalid_input("StrategyProfile", "Marking assumption: theta[0] must be 0 and theta[c] must be 1.", name=self.name, theta=theta.tolist())
        object.__setattr__(self, "theta", theta)

    def as_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"sigma": np.arange(self.coalition_size + 1), "theta": self.theta}, columns=N.PROFILE_COLUMNS)


def normalize_strategy(strategy_name: str) -> str:
    key = str(strategy_name).strip().lower()
    if key not in N.STRATEGY_ALIASES:
        raise invalid_input("normalize_strategy", f"Unknown strategy '{strategy_name}'.", strategy=strategy_name, known=sorted(N.STRATEGY_ALIASES))
    return N.STRATEGY_ALIASES[key]


def profile_of(strategy_name: str, coalition_size: int) -> StrategyProfile:
    strategy_name = normalize_strategy(strategy_name)
    if strategy_name not in N.STRATEGIES:
        raise invalid_input("profile_of", f"Strategy '{strategy_name}' has no closed-form profile.", strategy=strategy_name)
    if coalition_size < 1:
        raise invalid_input("profile_of", f"Coalition size must be positive, got {coalition_size}.", coalition_size=coalition_size)

    sigma = np.arange(coalition_size + 1, dtype=float)
    half = coalition_size / 2.0
    if strategy_name == N.INTERLEAVING:
        theta = sigma / coalition_size
    elif strategy_name == N.MAJORITY:
        theta = np.where(sigma > half, 1.0, np.where(sigma < half, 0.0, 0.5))
    elif strategy_name == N.MINORITY:
        theta = np.where(sigma < half, 1.0, np.where(sigma > half, 0.0, 0.5))
    else:
        theta = np.full(coalition_size + 1, 0.5)
    theta[0], theta[-1] = 0.0, 1.0
    return StrategyProfile(name=strategy_name, coalition_size=coalition_size, theta=theta)


def minimizing_profile(distribution: BiasDistribution, coalition_size: int) -> StrategyProfile:
    """
    theta[sigma] = 1 where E_p[binom p^sigma q^(c - sigma) A(sigma, p)] < 0, else 0.
    Ties take the lexicographically smallest symbol-flip symmetric choice: 0 up to c/2, 1 above.
    A plain "theta = 0 on ties" rule would break the flip symmetry at sigma > c/2; both rules give
    the same expected score, since a tied sigma contributes nothing to it.
    """
    if coalition_size < 1:
        raise invalid_input("minimizing_profile", f"Coalition size must be positive, got {coalition_size}.", coalition_size=coalition_size)

    expectations = coalition_expectations(distribution, coalition_size)
    signed = expectations.signed
    sigma = np.arange(coalition_size + 1)

    magnitude, _ = distribution.expect(lambda p, q: np.abs(_signed_terms(coalition_size)(p, q)))
    tie = np.abs(signed) <= TIE_RELATIVE_TOL * np.maximum(magnitude, np.finfo(float).tiny) + expectations.error

    theta = np.where(signed < 0.0, 1.0, 0.0)
    theta = np.where(tie, np.where(sigma > coalition_size / 2.0, 1.0, 0.0), theta)
    theta[0], theta[-1] = 0.0, 1.0
    ties = int(np.count_nonzero(tie[1:-1]))
    if ties:
        logger.info("Minimizing profile for %s, c=%d broke %d ties", distribution.label, coalition_size, ties)
    return StrategyProfile(name=N.MINIMIZING, coalition_size=coalition_size, theta=theta)


def _signed_terms(coalition_size):
    terms = coalition_terms(coalition_size)
    return lambda p, q: terms(p, q)[:, :coalition_size + 1]


def load_profile(path: str) -> StrategyProfile:
    try:
        frame = pd.read_csv(path)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as error:
        raise TardosError("load_profile", TardosError.TardosErrorType.IO_FAILURE, f"Cannot read profile {path}: {error}", {"path": path})
    if list(frame.columns) != N.PROFILE_COLUMNS:
        raise TardosError("load_profile", TardosError.TardosErrorType.IO_FAILURE, f"Profile {path} must have columns {N.PROFILE_COLUMNS}.", {"path": path})

    frame = frame.sort_values("sigma")
    coalition_size = int(frame["sigma"].max())
    if list(frame["sigma"]) != list(range(coalition_size + 1)):
        raise invalid_input("load_profile", f"Profile {path} must list every sigma from 0 to {coalition_size} once.", path=path)
    return StrategyProfile(name=N.CUSTOM_PROFILE, coalition_size=coalition_size, theta=frame["theta"].to_numpy(dtype=float))

# ENDREGION: [Profiles]



# REGION: [Executable strategies]

def _coin(rng, size):
    return rng.random(size) < 0.5


def pirate_output(strategy, pirate_bits, rng_stream: np.random.Generator) -> np.ndarray:
    """
    Forge one output bit per segment from the c x l matrix of pirate symbols.
    strategy is a strategy name or a StrategyProfile executed as y ~ Bernoulli(theta[sigma]).
    """
    pirate_bits = np.asarray(pirate_bits).astype(np.uint8)
    if pirate_bits.ndim != 2 or pirate_bits.shape[0] < 1:
        raise invalid_input("pirate_output", "Pirate symbols must be a nonempty c x l matrix.")
    coalition_size, length = pirate_bits.shape
    sigma = pirate_bits.sum(axis=0).astype(int)

    if isinstance(strategy, StrategyProfile):
        if strategy.coalition_size != coalition_size:
            raise invalid_input("pirate_output", f"Profile is for {strategy.coalition_size} pirates, got {coalition_size}.")
        output = rng_stream.random(length) < strategy.theta[sigma]
    else:
        strategy = normalize_strategy(strategy)
        twice = 2 * sigma
        if strategy == N.INTERLEAVING:
            output = pirate_bits[rng_stream.integers(0, coalition_size, length), np.arange(length)] == 1
        elif strategy == N.MAJORITY:
            output = np.where(twice == coalition_size, _coin(rng_stream, length), twice > coalition_size)
        elif strategy == N.MINORITY:
            output = np.where(twice == coalition_size, _coin(rng_stream, length), twice < coalition_size)
        elif strategy == N.COIN_FLIP:
            output = _coin(rng_stream, length)
        else:
            raise invalid_input("pirate_output", f"Strategy '{strategy}' is not executable by name.", strategy=strategy)

    # marking assumption: unanimous columns are echoed
    output = np.where(sigma == 0, False, np.where(sigma == coalition_size, True, output))
    return output.astype(np.uint8)


def attack_column(strategy_name, pirate_symbols, rng_stream: np.random.Generator) -> int:
    pirate_symbols = np.asarray(pirate_symbols)
    if pirate_symbols.size == 0:
        raise invalid_input("attack_column", "Pirate symbols must be nonempty.")
    return int(pirate_output(strategy_name, pirate_symbols.reshape(-1, 1), rng_stream)[0])

# ENDREGION: [Executable strategies]
