"""
Legendre polynomials, their roots and the two quadrature weight families built on them.
"""

import logging
from dataclasses import dataclass

import numpy as np

from tardos_distributions.common.errors import TardosError, invalid_input


logger = logging.getLogger(__name__)


ROOT_RESIDUAL_TOL = 1.0E-12
ROOT_STEP_TOL = 1.0E-14
ROOT_MAX_ITERATIONS = 100
MAX_DEGREE = 10_000



@dataclass(frozen=True, eq=False)
class LegendreRoots:
    """Roots x_{1,c} < ... < x_{c,c} of P_c and the derivative P_c' at each root."""
    degree: int
    roots: np.ndarray
    derivative_at_root: np.ndarray


def eval_legendre(degree: int, x):
    """
    Evaluate P_c and P_c' by the ascending three-term recurrence.

    Parameters
    ----------
    degree : int
        Polynomial degree c >= 0.
    x : float or array_like
        Evaluation points, normally in [-1, 1].

    Returns
    -------
    (value, derivative) with the shape of x; plain floats for scalar x.
    """
    if degree < 0:
        raise invalid_input("eval_legendre", f"Degree must be non-negative, got {degree}.", degree=degree)

    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)

    p_prev, p = np.ones_like(x), x.copy()
    dp_prev, dp = np.zeros_like(x), np.ones_like(x)
    if degree == 0:
        p, dp = p_prev, dp_prev
    for k in range(1, degree):
        # (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1};  P'_{k+1} = P'_{k-1} + (2k+1) P_k
        p_next = ((2 * k + 1) * x * p - k * p_prev) / (k + 1)
        dp_next = dp_prev + (2 * k + 1) * p
        p_prev, p = p, p_next
        dp_prev, dp = dp, dp_next

    if scalar:
        return float(p), float(dp)
    return p, dp


def legendre_roots(degree: int) -> LegendreRoots:
    """
    All roots of P_c by Newton iteration seeded with cos(theta_{k,c}),
    theta_{k,c} = (4(c - k) + 3) pi / (4c + 2).
    """
    if degree < 1:
        raise invalid_input("legendre_roots", f"Degree must be at least 1, got {degree}.", degree=degree)
    if degree > MAX_DEGREE:
        raise invalid_input("legendre_roots", f"Degree {degree} is above the supported maximum {MAX_DEGREE}.", degree=degree)

    k = np.arange(1, degree + 1)
    x = np.cos((4 * (degree - k) + 3) * np.pi / (4 * degree + 2))

    converged = np.zeros(degree, dtype=bool)
    for iteration in range(1, ROOT_MAX_ITERATIONS + 1):
        value, derivative = eval_legendre(degree, x)
        step = value / derivative
        x = x - step
        converged = np.abs(step) < ROOT_STEP_TOL
        if converged.all():
            break
    else:
        index = int(np.flatnonzero(~converged)[0]) + 1
        raise TardosError(
            "legendre_roots",
            TardosError.TardosErrorType.NUMERICAL_FAILURE,
            f"Newton iteration did not converge for degree {degree}, root index {index}.",
            {"degree": degree, "index": index, "iterations": ROOT_MAX_ITERATIONS}
        )

    # x_{k,c} = -x_{c+1-k,c}
    x = 0.5 * (x - x[::-1])
    if degree % 2 == 1:
        x[degree // 2] = 0.0

    value, derivative = eval_legendre(degree, x)
    # DOC: an ulp of x moves P_c by about |P_c'| ulp, the floor for large degrees
    residual_tol = np.maximum(ROOT_RESIDUAL_TOL, 4.0 * np.finfo(float).eps * np.abs(derivative))
    residual = np.abs(value)
    if np.any(residual > residual_tol) or np.any(np.diff(x) <= 0) or np.any(np.abs(x) >= 1):
        index = int(np.argmax(residual / residual_tol)) + 1
        raise TardosError(
            "legendre_roots",
            TardosError.TardosErrorType.NUMERICAL_FAILURE,
            f"Polished roots of degree {degree} fail the residual or ordering check at root index {index}.",
            {"degree": degree, "index": index, "residual": float(residual.max())}
        )

    logger.info("Legendre roots of degree %d converged in %d iterations", degree, iteration)
    return LegendreRoots(degree=degree, roots=x, derivative_at_root=derivative)


def _check_root_input(source, root, derivative_at_root):
    root = np.asarray(root, dtype=float)
    derivative_at_root = np.asarray(derivative_at_root, dtype=float)
    if np.any(np.abs(root) >= 1.0):
        raise invalid_input(source, "Root must lie in the open interval (-1, 1).", root=root.tolist())
    if np.any(derivative_at_root == 0.0):
        raise invalid_input(source, "Derivative at root must be nonzero.", derivative_at_root=derivative_at_root.tolist())
    return root, derivative_at_root


def modified_weight(root, derivative_at_root):
    """ w_{k,c} = 2 / ((1 - x^2)^{3/2} P_c'(x)^2) """
    scalar = np.ndim(root) == 0 and np.ndim(derivative_at_root) == 0
    root, derivative_at_root = _check_root_input("modified_weight", root, derivative_at_root)
    weight = 2.0 / ((1.0 - root ** 2) ** 1.5 * derivative_at_root ** 2)
    return float(weight) if scalar else weight


def standard_weight(root, derivative_at_root):
    """ lambda_{k,c} = 2 / ((1 - x^2) P_c'(x)^2), the classical Gauss-Legendre weight """
    scalar = np.ndim(root) == 0 and np.ndim(derivative_at_root) == 0
    root, derivative_at_root = _check_root_input("standard_weight", root, derivative_at_root)
    weight = 2.0 / ((1.0 - root ** 2) * derivative_at_root ** 2)
    return float(weight) if scalar else weight


def gauss_legendre_rule(degree: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and standard weights of the degree-c rule on [-1, 1]."""
    roots = legendre_roots(degree)
    return roots.roots, standard_weight(roots.roots, roots.derivative_at_root)
