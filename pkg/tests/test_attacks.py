import numpy as np
import pytest

from tardos_distributions.common import names as N
from tardos_distributions.common.errors import TardosError
from tardos_distributions.core.analysis import coalition_mean
from tardos_distributions.core.attacks import (
    StrategyProfile,
    attack_column,
    load_profile,
    minimizing_profile,
    normalize_strategy,
    pirate_output,
    profile_of,
)
from tardos_distributions.core.distributions import (
    chebyshev_gauss_distribution,
    continuous_arcsine,
    discrete_arcsine_distribution,
    gauss_legendre_distribution,
)


def test_named_profiles():
    np.testing.assert_allclose(profile_of("interleaving", 4).theta, [0, 0.25, 0.5, 0.75, 1])
    np.testing.assert_array_equal(profile_of("majority", 4).theta, [0, 0, 0.5, 1, 1])
    np.testing.assert_array_equal(profile_of("minority", 4).theta, [0, 1, 0.5, 0, 1])
    np.testing.assert_array_equal(profile_of("minority", 3).theta, [0, 1, 0, 1])
    np.testing.assert_array_equal(profile_of("coin-flip", 3).theta, [0, 0.5, 0.5, 1])
    np.testing.assert_array_equal(profile_of("majority", 1).theta, [0, 1])


def test_strategy_names():
    assert normalize_strategy(" Coin-Flip ") == N.COIN_FLIP
    assert normalize_strategy("MINIMIZING") == N.MINIMIZING
    with pytest.raises(TardosError):
        normalize_strategy("averaging")
    with pytest.raises(TardosError):
        profile_of(N.MINIMIZING, 3)
    with pytest.raises(TardosError):
        profile_of("majority", 0)


@pytest.mark.parametrize("theta", [[0, 0.5], [0, 1.2, 1], [0.1, 0.5, 1], [0, 0.5, 0.9]])
def test_profile_validation(theta):
    with pytest.raises(TardosError) as error:
        StrategyProfile(name="custom", coalition_size=2, theta=theta)
    assert error.value.type == TardosError.TardosErrorType.INVALID_INPUT


def test_minimizing_profile_single_point():
    profile = minimizing_profile(gauss_legendre_distribution(1), 2)
    assert profile.name == N.MINIMIZING
    np.testing.assert_array_equal(profile.theta, [0, 0, 1])


@pytest.mark.parametrize("distribution", [
    gauss_legendre_distribution(3),
    discrete_arcsine_distribution(3),
    chebyshev_gauss_distribution(4),
    continuous_arcsine(0.01),
])
@pytest.mark.parametrize("coalition_size", [2, 5, 8])
def test_minimizing_profile_is_worst_case(distribution, coalition_size):
    worst = coalition_mean(distribution, coalition_size, minimizing_profile(distribution, coalition_size)).mu
    for name in N.STRATEGIES:
        mu = coalition_mean(distribution, coalition_size, profile_of(name, coalition_size)).mu
        assert worst <= mu + 1e-12, name


def test_symbol_flip_invariance(rng):
    distribution = discrete_arcsine_distribution(4)
    c = 5
    theta = np.concatenate(([0.0], rng.random(c - 1), [1.0]))
    flipped = 1.0 - theta[::-1]
    original = coalition_mean(distribution, c, StrategyProfile("custom", c, theta)).mu
    mirrored = coalition_mean(distribution, c, StrategyProfile("custom", c, flipped)).mu
    assert original == pytest.approx(mirrored, abs=1e-12)


def test_pirate_output_marking_assumption(rng):
    bits = (rng.random((4, 3000)) < 0.5).astype(np.uint8)
    bits[:, :10] = 0
    bits[:, 10:20] = 1
    for strategy in list(N.STRATEGIES) + [profile_of("coin_flip", 4)]:
        output = pirate_output(strategy, bits, rng)
        assert output.dtype == np.uint8
        assert output.shape == (3000,)
        np.testing.assert_array_equal(output[:10], 0)
        np.testing.assert_array_equal(output[10:20], 1)


def test_majority_and_minority_are_deterministic_for_odd_coalitions(rng):
    bits = (rng.random((3, 500)) < 0.5).astype(np.uint8)
    sigma = bits.sum(axis=0)
    mixed = (sigma > 0) & (sigma < 3)
    majority = pirate_output("majority", bits, rng)
    minority = pirate_output("minority", bits, rng)
    np.testing.assert_array_equal(majority, (sigma >= 2).astype(np.uint8))
    np.testing.assert_array_equal(minority[mixed], (sigma[mixed] == 1).astype(np.uint8))


def test_interleaving_copies_a_pirate(rng):
    columns = 100_000
    bits = np.tile(np.array([[1], [1], [0]], dtype=np.uint8), columns)
    output = pirate_output("interleaving", bits, rng)
    assert output.mean() == pytest.approx(2 / 3, abs=0.005)


@pytest.mark.parametrize("strategy", N.STRATEGIES)
@pytest.mark.parametrize("coalition_size", [2, 3, 4])
def test_empirical_profile_matches_profile_of(strategy, coalition_size, rng):
    columns = 200_000
    bits = (rng.random((coalition_size, columns)) < 0.5).astype(np.uint8)
    sigma = bits.sum(axis=0)
    output = pirate_output(strategy, bits, rng)
    theta = profile_of(strategy, coalition_size).theta
    for s in range(coalition_size + 1):
        selected = output[sigma == s]
        assert selected.size >= 10_000
        bound = 3.0 * np.sqrt(theta[s] * (1.0 - theta[s]) / selected.size)
        assert abs(selected.mean() - theta[s]) <= bound + 1e-12, (s, selected.mean(), theta[s])


def test_profile_execution(rng):
    bits = (rng.random((3, 400)) < 0.5).astype(np.uint8)
    sigma = bits.sum(axis=0)
    profile = StrategyProfile(name="custom", coalition_size=3, theta=[0, 1, 0, 1])
    np.testing.assert_array_equal(pirate_output(profile, bits, rng), np.array([0, 1, 0, 1])[sigma])

    with pytest.raises(TardosError):
        pirate_output(profile_of("majority", 2), bits, rng)
    with pytest.raises(TardosError):
        pirate_output(N.MINIMIZING, bits, rng)


def test_attack_column(rng):
    assert attack_column("majority", [1, 1, 0], rng) == 1
    assert attack_column("minority", [1, 1, 0], rng) == 0
    assert attack_column("coin_flip", [0, 0], rng) == 0
    assert attack_column("coin_flip", [1, 1], rng) == 1
    with pytest.raises(TardosError):
        attack_column("majority", [], rng)


def test_load_profile(tmp_path):
    path = tmp_path / "profile.csv"
    path.write_text("sigma,theta\n2,1\n0,0\n1,0.25\n")
    profile = load_profile(str(path))
    assert profile.name == N.CUSTOM_PROFILE
    assert profile.coalition_size == 2
    np.testing.assert_array_equal(profile.theta, [0, 0.25, 1])


@pytest.mark.parametrize("content, error_type", [
    ("s,t\n0,0\n1,1\n", TardosError.TardosErrorType.IO_FAILURE),
    ("", TardosError.TardosErrorType.IO_FAILURE),
    ("sigma,theta\n0,0\n2,1\n", TardosError.TardosErrorType.INVALID_INPUT),
    ("sigma,theta\n0,0.5\n1,1\n", TardosError.TardosErrorType.INVALID_INPUT),
])
def test_load_profile_errors(tmp_path, content, error_type):
    path = tmp_path / "profile.csv"
    path.write_text(content)
    with pytest.raises(TardosError) as error:
        load_profile(str(path))
    assert error.value.type == error_type


def test_load_missing_profile(tmp_path):
    with pytest.raises(TardosError) as error:
        load_profile(str(tmp_path / "missing.csv"))
    assert error.value.type == TardosError.TardosErrorType.IO_FAILURE
