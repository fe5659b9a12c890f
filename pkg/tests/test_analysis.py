import math

import numpy as np
import pandas as pd
import pytest

from tardos_distributions.common import names as N
from tardos_distributions.common.errors import TardosError
from tardos_distributions.core.analysis import (
    ARCSINE_DL,
    MuReport,
    cdf_sup_error,
    coalition_mean,
    dl_sweep,
    resolve_profile,
    simulate,
    theorem1_report,
)
from tardos_distributions.core.attacks import StrategyProfile, profile_of
from tardos_distributions.core.distributions import (
    arcsine_distribution,
    continuous_arcsine,
    discrete_arcsine_distribution,
    gauss_legendre_distribution,
    matching_cutoff,
)
from tardos_distributions.core.scheme import choose_parameters


ALL_STRATEGIES = list(N.STRATEGIES) + [N.MINIMIZING]


# REGION: [Expected coalition score]

def test_single_point_examples():
    distribution = gauss_legendre_distribution(1)
    report = coalition_mean(distribution, 1, profile_of("interleaving", 1))
    assert report.mu == pytest.approx(1.0, abs=1e-15)
    assert report.dl == pytest.approx(2.0, abs=1e-14)

    report = coalition_mean(distribution, 2, profile_of("interleaving", 2))
    assert report.mu == pytest.approx(1.0, abs=1e-15)
    assert report.dl == pytest.approx(2.0, abs=1e-14)
    assert report.second_moment == pytest.approx(2.0, abs=1e-14)
    assert report.variance == pytest.approx(1.0, abs=1e-14)
    assert not report.degenerate
    assert list(report.as_row()) == N.MU_COLUMNS


def test_degenerate_report():
    report = MuReport(distribution="x", coalition_size=3, strategy="custom", mu=0.0, dl=math.inf, second_moment=1.0)
    assert report.degenerate
    assert report.variance == 1.0


def test_coalition_mean_checks_profile_size():
    distribution = gauss_legendre_distribution(2)
    with pytest.raises(TardosError):
        coalition_mean(distribution, 3, profile_of("majority", 4))
    with pytest.raises(TardosError):
        coalition_mean(distribution, 0, profile_of("majority", 1))


def test_resolve_profile():
    distribution = gauss_legendre_distribution(1)
    assert resolve_profile("majority", distribution, 3).name == N.MAJORITY
    np.testing.assert_array_equal(resolve_profile("minimizing", distribution, 2).theta, [0, 0, 1])
    custom = StrategyProfile(name="custom", coalition_size=2, theta=[0, 0.3, 1])
    assert resolve_profile(custom, distribution, 2) is custom


@pytest.mark.parametrize("coalition_size", range(2, 13))
def test_gauss_legendre_mean_is_strategy_invariant(coalition_size):
    distribution = gauss_legendre_distribution(math.ceil(coalition_size / 2))
    expected = 2.0 / distribution.raw_normalizer
    for strategy in ALL_STRATEGIES:
        report = coalition_mean(distribution, coalition_size, resolve_profile(strategy, distribution, coalition_size))
        assert report.mu == pytest.approx(expected, abs=1e-9), strategy


def test_interleaving_mean_is_two_over_normalizer():
    for point_count, coalition_size in [(1, 7), (3, 2), (4, 11), (10, 25)]:
        distribution = gauss_legendre_distribution(point_count)
        report = coalition_mean(distribution, coalition_size, profile_of("interleaving", coalition_size))
        assert report.mu == pytest.approx(2.0 / distribution.raw_normalizer, abs=1e-10)


def test_uncut_arcsine_under_interleaving():
    distribution = arcsine_distribution()
    previous = math.inf
    for coalition_size in (20, 100):
        report = coalition_mean(distribution, coalition_size, profile_of("interleaving", coalition_size))
        assert report.dl == pytest.approx(ARCSINE_DL, rel=0.02)
        assert report.dl <= previous + 1e-8
        previous = report.dl


@pytest.mark.parametrize("strategy", ["interleaving", "majority"])
def test_discrete_arcsine_matches_continuous_with_matching_cutoff(strategy):
    c = 400
    discrete = discrete_arcsine_distribution(c)
    continuous = continuous_arcsine(matching_cutoff(c))
    profile = profile_of(strategy, 6)
    assert coalition_mean(discrete, 6, profile).mu == pytest.approx(coalition_mean(continuous, 6, profile).mu, abs=1e-3)

# ENDREGION: [Expected coalition score]



# REGION: [Code length sweep]

@pytest.fixture(scope="module")
def discrete_sweep():
    return dl_sweep(["gl", "darcsine", "cheb"], range(2, 41))


def test_sweep_layout(discrete_sweep):
    assert list(discrete_sweep.columns) == N.SWEEP_COLUMNS
    assert len(discrete_sweep) == 4 * 39
    reference = discrete_sweep[discrete_sweep["family"] == N.REFERENCE]
    assert list(reference["c_tilde"]) == list(range(2, 41))
    np.testing.assert_allclose(reference["dl"], math.pi ** 2 / 2)
    assert reference["points"].isna().all()

    gl = discrete_sweep[discrete_sweep["family"] == N.GAUSS_LEGENDRE]
    assert list(gl["points"]) == [math.ceil(c / 2) for c in range(2, 41)]
    assert set(gl["strategy"]) == {N.MINIMIZING}


def test_gauss_legendre_dominates_other_discrete_families(discrete_sweep):
    by_family = {family: frame.set_index("c_tilde")["mu"] for family, frame in discrete_sweep.groupby("family")}
    for family in (N.DISCRETE_ARCSINE, N.CHEBYSHEV_GAUSS):
        assert np.all(by_family[N.GAUSS_LEGENDRE] >= by_family[family] - 1e-9), family


def test_gauss_legendre_code_length_constant_stays_below_arcsine(discrete_sweep):
    dl = discrete_sweep[discrete_sweep["family"] == N.GAUSS_LEGENDRE]["dl"].to_numpy()
    assert np.all(dl < ARCSINE_DL)
    assert np.all(np.diff(dl) >= -1e-12)


def test_sweep_with_continuous_family():
    frame = dl_sweep(["arcsine"], [2, 3], strategy_mode="interleaving", schedule=N.SCHEDULE_POWER43, include_reference=False)
    assert list(frame["family"]) == [N.ARCSINE, N.ARCSINE]
    assert frame["points"].isna().all()
    assert np.all(frame["dl"] > 0)


def test_sweep_order_does_not_depend_on_jobs():
    families = ["gl", "cheb"]
    serial = dl_sweep(families, range(2, 9), jobs=1)
    parallel = dl_sweep(families, range(2, 9), jobs=2)
    pd.testing.assert_frame_equal(serial, parallel)


def test_sweep_rejects_empty_input():
    with pytest.raises(TardosError):
        dl_sweep([], [2])
    with pytest.raises(TardosError):
        dl_sweep(["gl"], [])

# ENDREGION: [Code length sweep]



# REGION: [Convergence diagnostics]

def test_convergence_errors_shrink():
    coarse = theorem1_report(25, 0.1)
    fine = theorem1_report(100, 0.1)
    assert fine.max_point_error < coarse.max_point_error
    assert fine.max_weight_error_scaled < coarse.max_weight_error_scaled
    assert fine.cdf_sup_error < coarse.cdf_sup_error
    assert list(fine.as_row()) == N.CONVERGE_COLUMNS


def test_normalizer_gap():
    for c in range(1, 201):
        assert math.pi - gauss_legendre_distribution(c).raw_normalizer > 0, c
    gaps = [theorem1_report(c, 0.1).normalizer_gap for c in (5, 10, 20, 40, 80)]
    assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))


def test_cdf_sup_error_shrinks():
    assert cdf_sup_error(gauss_legendre_distribution(50)) < cdf_sup_error(gauss_legendre_distribution(10))
    assert cdf_sup_error(arcsine_distribution()) == 0.0


def test_refined_points_are_closer():
    report = theorem1_report(25, 0.1)
    assert report.refined_point_error < report.max_point_error


@pytest.mark.parametrize("point_count, alpha", [(1, 0.1), (10, 0.0), (10, 0.5), (3, 0.34)])
def test_convergence_report_rejects_bad_input(point_count, alpha):
    with pytest.raises(TardosError) as error:
        theorem1_report(point_count, alpha)
    assert error.value.type == TardosError.TardosErrorType.INVALID_INPUT

# ENDREGION: [Convergence diagnostics]



# REGION: [Simulation]

@pytest.fixture(scope="module")
def small_scheme():
    distribution = gauss_legendre_distribution(2)
    return choose_parameters(3, 100, 0.01, distribution), distribution


@pytest.mark.parametrize("strategy", ALL_STRATEGIES)
def test_simulation_matches_expected_score(small_scheme, strategy):
    params, distribution = small_scheme
    report = simulate(params, distribution, strategy, trials=500)
    assert params.code_length == 249
    assert report.fp_rate <= 0.02
    assert report.expected_pirate_score == pytest.approx(249 * 2 / math.sqrt(6.0), rel=1e-12)
    assert abs(report.mean_pirate_score - report.expected_pirate_score) <= 3 * report.pirate_score_stderr
    assert report.coalition == [0, 1, 2]
    assert len(report.trial_scores) == 500

    document = report.as_document()
    assert document["strategy"] == strategy
    assert document["params"]["code_length"] == 249


def test_simulation_is_reproducible(small_scheme):
    params, distribution = small_scheme
    first = simulate(params, distribution, "majority", trials=1, rng_seed=17)
    second = simulate(params, distribution, "majority", trials=1, rng_seed=17)
    assert first == second
    assert first.pirate_score_stderr == 0.0


def test_simulation_does_not_depend_on_jobs(small_scheme):
    params, distribution = small_scheme
    serial = simulate(params, distribution, "minimizing", coalition=[5, 50, 95], trials=12, jobs=1)
    parallel = simulate(params, distribution, "minimizing", coalition=[5, 50, 95], trials=12, jobs=2)
    assert serial.as_document() == parallel.as_document()
    assert serial.trial_scores == parallel.trial_scores


@pytest.mark.parametrize("coalition, trials", [([0, 0, 1], 10), ([0, 100], 10), ([-1], 10), ([0, 1, 2], 0)])
def test_simulation_rejects_bad_input(small_scheme, coalition, trials):
    params, distribution = small_scheme
    with pytest.raises(TardosError):
        simulate(params, distribution, "interleaving", coalition=coalition, trials=trials)

# ENDREGION: [Simulation]
