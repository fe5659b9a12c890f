"""
The symmetric Tardos scheme: codeword generation, the symbol-symmetric score function,
accusation and heuristic (code length, threshold) selection.
"""

import math
import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from tardos_distributions.common import names as N
from tardos_distributions.common import utils
from tardos_distributions.common.errors import TardosError, invalid_input
from tardos_distributions.core.distributions import BiasDistribution


logger = logging.getLogger(__name__)


# DOC: rows of the unpacked matrix touched at once by accusation and generation
ROW_CHUNK_CELLS = 1 << 22



# REGION: [Score function]

def _check_biases(source, bias):
    bias = np.asarray(bias, dtype=float)
    if bias.size == 0 or np.any(~(bias > 0.0)) or np.any(~(bias < 1.0)):
        raise invalid_input(source, "Every bias must lie strictly inside (0, 1).")
    return bias


def score(symbol, output, bias):
    """
    g(x, y, p): +sqrt(q/p) for (1, 1), -sqrt(q/p) for (1, 0), -sqrt(p/q) for (0, 1), +sqrt(p/q) for (0, 0).
    Vectorised over broadcastable inputs.
    """
    scalar = np.ndim(symbol) == 0 and np.ndim(output) == 0 and np.ndim(bias) == 0
    bias = _check_biases("score", bias)
    symbol = np.asarray(symbol)
    output = np.asarray(output)
    odds = np.sqrt((1.0 - bias) / bias)
    magnitude = np.where(symbol == 1, odds, 1.0 / odds)
    value = np.where(symbol == output, magnitude, -magnitude)
    return float(value) if scalar else value


def innocent_score_moments(output, bias):
    """Exact mean and variance of g(X, y, p) for X ~ Bernoulli(p)."""
    bias = _check_biases("innocent_score_moments", bias)
    one, zero = score(1, output, bias), score(0, output, bias)
    mean = bias * one + (1.0 - bias) * zero
    variance = bias * one ** 2 + (1.0 - bias) * zero ** 2 - mean ** 2
    return mean, variance

# ENDREGION: [Score function]



# REGION: [Code matrix]

@dataclass(frozen=True, eq=False)
class CodeMatrix:
    """n x l binary code, rows bit-packed per user."""
    n: int
    length: int
    packed_bits: np.ndarray
    biases: np.ndarray

    @property
    def bits(self) -> np.ndarray:
        return self.rows(0, self.n)

    def rows(self, start: int, stop: int) -> np.ndarray:
        return np.unpackbits(self.packed_bits[start:stop], axis=1, count=self.length)

    def select(self, users) -> np.ndarray:
        return np.unpackbits(self.packed_bits[np.asarray(users, dtype=int)], axis=1, count=self.length)

    def row_chunks(self):
        step = max(1, ROW_CHUNK_CELLS // max(self.length, 1))
        for start in range(0, self.n, step):
            stop = min(start + step, self.n)
            yield start, stop, self.rows(start, stop)


def generate_code(n: int, biases, rng_stream: np.random.Generator) -> CodeMatrix:
    if n < 1:
        raise invalid_input("generate_code", f"Number of users must be positive, got {n}.", n=n)
    biases = _check_biases("generate_code", biases)
    length = biases.size
    step = max(1, ROW_CHUNK_CELLS // length)
    packed = [
        np.packbits(rng_stream.random((min(step, n - start), length)) < biases, axis=1)
        for start in range(0, n, step)
    ]
    return CodeMatrix(n=n, length=length, packed_bits=np.concatenate(packed, axis=0), biases=biases)


def write_code_matrix(code: CodeMatrix, path: str):
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(f"{code.n} {code.length}\n")
            f.write(" ".join(f"{b:.17g}" for b in code.biases) + "\n")
            for _, _, block in code.row_chunks():
                for row in block:
                    f.write("".join("1" if bit else "0" for bit in row) + "\n")
    except OSError as error:
        raise TardosError("write_code_matrix", TardosError.TardosErrorType.IO_FAILURE, f"Cannot write {path}: {error}", {"path": path})


def read_code_matrix(path: str) -> CodeMatrix:
    try:
        with open(path, "r", encoding="utf-8") as f:
            lines = [line.strip() for line in f if line.strip()]
    except OSError as error:
        raise TardosError("read_code_matrix", TardosError.TardosErrorType.IO_FAILURE, f"Cannot read {path}: {error}", {"path": path})

    try:
        n, length = (int(token) for token in lines[0].split())
        biases = np.array([float(token) for token in lines[1].split()])
        rows = lines[2:]
        if biases.size != length or len(rows) != n or any(len(row) != length or set(row) - {"0", "1"} for row in rows):
            raise ValueError("dimensions do not match the header")
        bits = np.array([[ch == "1" for ch in row] for row in rows], dtype=bool).reshape(n, length)
    except (ValueError, IndexError) as error:
        raise TardosError("read_code_matrix", TardosError.TardosErrorType.IO_FAILURE, f"Malformed code matrix file {path}: {error}", {"path": path})

    biases = _check_biases("read_code_matrix", biases)
    return CodeMatrix(n=n, length=length, packed_bits=np.packbits(bits, axis=1), biases=biases)

# ENDREGION: [Code matrix]



# REGION: [Accusation]

@dataclass(frozen=True, eq=False)
class AccusationResult:
    scores: np.ndarray
    threshold: float
    accused: np.ndarray

    def as_frame(self) -> pd.DataFrame:
        accused = np.zeros(self.scores.size, dtype=bool)
        accused[self.accused] = True
        return pd.DataFrame({
            "user": np.arange(self.scores.size),
            "score": self.scores,
            "accused": accused,
        }, columns=N.ACCUSATION_COLUMNS)


def accuse(code: CodeMatrix, pirate_output, threshold: float) -> AccusationResult:
    pirate_output = np.asarray(pirate_output).astype(np.uint8)
    if pirate_output.ndim != 1 or pirate_output.size != code.length:
        raise invalid_input("accuse", f"Pirate output has length {pirate_output.size}, code length is {code.length}.", length=code.length)

    one = score(np.ones(code.length, dtype=np.uint8), pirate_output, code.biases)
    zero = score(np.zeros(code.length, dtype=np.uint8), pirate_output, code.biases)
    gain = one - zero
    base = float(np.sum(zero))

    scores = np.empty(code.n)
    for start, stop, block in code.row_chunks():
        scores[start:stop] = base + block @ gain
    accused = np.flatnonzero(scores > threshold)
    return AccusationResult(scores=scores, threshold=float(threshold), accused=accused)


def accusation_table(result: AccusationResult, path: str):
    utils.write_table(result.as_frame(), path)

# ENDREGION: [Accusation]



# REGION: [Coalition score expectations]

@dataclass(frozen=True, eq=False)
class CoalitionExpectations:
    """
    Per sigma in 0..c: signed[sigma] = E_p[binom(c, sigma) p^sigma q^(c - sigma) A(sigma, p)] with
    A(sigma, p) = sigma sqrt(q/p) - (c - sigma) sqrt(p/q), the coalition score when outputting 1;
    squared[sigma] is the same expectation of A^2.
    """
    colluders: int
    signed: np.ndarray
    squared: np.ndarray
    error: float

    def mean(self, theta) -> float:
        return float(np.dot(2.0 * np.asarray(theta) - 1.0, self.signed))

    def second_moment(self) -> float:
        return float(np.sum(self.squared))


def coalition_terms(colluders: int):
    """func(p, q) for BiasDistribution.expect, returning [signed | squared] per bias."""
    sigma = np.arange(colluders + 1, dtype=float)
    rest = colluders - sigma
    log_c = utils.log_binomial(colluders, sigma)

    def terms(p, q):
        log_p = np.log(p)[:, None]
        log_q = np.log(q)[:, None]
        with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
            pmf = np.exp(log_c + sigma * log_p + rest * log_q)
            one = np.where(sigma > 0, sigma * np.exp(log_c + (sigma - 0.5) * log_p + (rest + 0.5) * log_q), 0.0)
            zero = np.where(rest > 0, rest * np.exp(log_c + (sigma + 0.5) * log_p + (rest - 0.5) * log_q), 0.0)
            one_sq = np.where(sigma > 0, sigma ** 2 * np.exp(log_c + (sigma - 1.0) * log_p + (rest + 1.0) * log_q), 0.0)
            zero_sq = np.where(rest > 0, rest ** 2 * np.exp(log_c + (sigma + 1.0) * log_p + (rest - 1.0) * log_q), 0.0)
        signed = one - zero
        squared = one_sq - 2.0 * sigma * rest * pmf + zero_sq
        return np.concatenate([signed, squared], axis=1)

    return terms


def coalition_expectations(distribution: BiasDistribution, colluders: int) -> CoalitionExpectations:
    if colluders < 1:
        raise invalid_input("coalition_expectations", f"Coalition size must be positive, got {colluders}.", colluders=colluders)
    values, error = distribution.expect(coalition_terms(colluders))
    return CoalitionExpectations(
        colluders = colluders,
        signed = values[:colluders + 1],
        squared = values[colluders + 1:],
        error = error,
    )

# ENDREGION: [Coalition score expectations]



# REGION: [Parameter selection]

@dataclass(frozen=True)
class SchemeParameters:
    colluders: int
    users: int
    epsilon1: float
    code_length: int
    threshold: float
    dl_constant: float
    mu: float

    def as_dict(self) -> dict:
        return {column: getattr(self, column) for column in N.PARAMS_COLUMNS}


def choose_parameters(colluders: int, users: int, epsilon1: float, distribution: BiasDistribution) -> SchemeParameters:
    """
    l = ceil(d_l c^2 ln(n / eps1)) with d_l = 2 / mu^2 under the mu-minimizing attack, and
    Z = sqrt(2 l ln(n / eps1)), the Gaussian union-bound heuristic (not a proof).
    """
    if colluders < 1:
        raise invalid_input("choose_parameters", f"Coalition size must be positive, got {colluders}.", colluders=colluders)
    if users < 2:
        raise invalid_input("choose_parameters", f"At least two users are needed, got {users}.", users=users)
    if not (0.0 < epsilon1 < 1.0):
        raise invalid_input("choose_parameters", f"epsilon1 must lie in (0, 1), got {epsilon1}.", epsilon1=epsilon1)

    # analysis and attacks build on this module
    from tardos_distributions.core.analysis import coalition_mean
    from tardos_distributions.core.attacks import minimizing_profile

    report = coalition_mean(distribution, colluders, minimizing_profile(distribution, colluders))
    if not report.mu > 0.0:
        raise TardosError(
            "choose_parameters",
            TardosError.TardosErrorType.UNUSABLE_CONFIGURATION,
            f"Minimum expected coalition score {report.mu:.6g} is not positive for {distribution.label}.",
            {"distribution": distribution.label, "colluders": colluders, "mu": report.mu}
        )

    log_term = math.log(users / epsilon1)
    code_length = math.ceil(report.dl * colluders ** 2 * log_term)
    threshold = math.sqrt(2.0 * code_length * log_term)
    logger.info("Parameters for c=%d, n=%d, eps1=%g: l=%d, Z=%.6g, d_l=%.6g", colluders, users, epsilon1, code_length, threshold, report.dl)
    return SchemeParameters(
        colluders = colluders,
        users = users,
        epsilon1 = epsilon1,
        code_length = code_length,
        threshold = threshold,
        dl_constant = report.dl,
        mu = report.mu,
    )

# ENDREGION: [Parameter selection]
