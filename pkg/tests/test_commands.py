import json
import math
import warnings

import nbformat as nbf
import numpy as np
import pandas as pd
import pytest

from tardos_distributions import cli
from tardos_distributions.common import names as N
from tardos_distributions.common.errors import TardosError
from tardos_distributions.commands import CdfCommand, DistCommand, ParamsCommand, SweepCommand


def test_dist_gauss_legendre_two_points(run_cli, tmp_path):
    path = tmp_path / "dist.csv"
    status, out, err = run_cli("dist", "--family", "gl", "--points", 2, "--output", path)
    assert status == 0, err
    assert out.startswith("dist: ")
    frame = pd.read_csv(path)
    assert list(frame.columns) == N.DIST_COLUMNS
    np.testing.assert_allclose(frame["point"], [0.2113248654, 0.7886751346], atol=1e-10)
    np.testing.assert_allclose(frame["probability"], [0.5, 0.5], atol=1e-12)
    assert set(frame["family"]) == {N.GAUSS_LEGENDRE}


def test_dist_points_from_colluders(tmp_path):
    output = DistCommand().run({"family": "darcsine", "colluders": 7, "output": str(tmp_path / "d.json")})
    assert output.document["c"] == 4
    assert output.artifact == str(tmp_path / "d.json")
    assert json.loads((tmp_path / "d.json").read_text())["family"] == N.DISCRETE_ARCSINE


def test_dist_rejects_cutoff(run_cli, tmp_path):
    status, _, err = run_cli("dist", "--family", "gl", "--points", 2, "--cutoff", 0.01, "--output", tmp_path / "x.csv")
    assert status == cli.EXIT_USAGE
    assert "cutoff" in err
    assert not (tmp_path / "x.csv").exists()


def test_missing_arguments():
    with pytest.raises(TardosError) as error:
        DistCommand().run({"points": 2}, write=False)
    assert error.value.type == TardosError.TardosErrorType.MISSING_ARGS

    with pytest.raises(TardosError) as error:
        DistCommand().run({"family": "gl"}, write=False)
    assert error.value.type == TardosError.TardosErrorType.INVALID_ARGS


def test_unknown_arguments_and_values():
    with pytest.raises(TardosError) as error:
        ParamsCommand().run({"colluders": 3, "users": 100, "colour": "red"}, write=False)
    assert error.value.type == TardosError.TardosErrorType.INVALID_ARGS

    with pytest.raises(TardosError) as error:
        ParamsCommand().run({"colluders": "three", "users": 100}, write=False)
    assert error.value.type == TardosError.TardosErrorType.INVALID_ARGS

    with pytest.raises(TardosError) as error:
        ParamsCommand().run({"colluders": 3, "users": 100, "family": "arcsine", "points": 2}, write=False)
    assert error.value.type == TardosError.TardosErrorType.INVALID_ARGS


@pytest.mark.parametrize("argv", [
    ["nothing"],
    ["dist", "--family", "gl", "--colour", "red"],
    ["params", "--colluders", "three", "--users", "100"],
    ["params", "--colluders", "3", "--users", "100", "--jobs", "0"],
    [],
])
def test_usage_errors(run_cli, argv):
    status, _, _ = run_cli(*argv)
    assert status == cli.EXIT_USAGE


def test_converge(run_cli, tmp_path):
    path = tmp_path / "converge.csv"
    status, _, err = run_cli("converge", "--points", "25,100", "--alpha", 0.1, "--output", path)
    assert status == 0, err
    frame = pd.read_csv(path)
    assert list(frame.columns) == N.CONVERGE_COLUMNS
    assert list(frame["c"]) == [25, 100]
    assert np.all(frame["normalizer_gap"] > 0)
    assert frame["max_point_err"].iloc[1] < frame["max_point_err"].iloc[0]


def test_sweep_includes_reference(run_cli, tmp_path):
    path = tmp_path / "sweep.csv"
    status, _, err = run_cli("sweep", "--families", "gl,cheb", "--cmax", 5, "--output", path)
    assert status == 0, err
    frame = pd.read_csv(path)
    assert list(frame.columns) == N.SWEEP_COLUMNS
    reference = frame[frame["family"] == N.REFERENCE]
    assert list(reference["c_tilde"]) == [2, 3, 4, 5]
    np.testing.assert_allclose(reference["dl"], math.pi ** 2 / 2, rtol=1e-15)
    assert len(frame) == 12


def test_sweep_profile_needs_single_coalition(tmp_path):
    profile = tmp_path / "profile.csv"
    profile.write_text("sigma,theta\n0,0\n1,0.5\n2,1\n")
    with pytest.raises(TardosError) as error:
        SweepCommand().run({"families": "gl", "cmin": 2, "cmax": 3, "profile_file": str(profile)}, write=False)
    assert error.value.type == TardosError.TardosErrorType.INVALID_ARGS

    output = SweepCommand().run({"families": "gl", "cmin": 2, "cmax": 2, "profile_file": str(profile)}, write=False)
    assert list(output.table["strategy"])[0] == N.CUSTOM_PROFILE


def test_params(run_cli, tmp_path):
    path = tmp_path / "params.csv"
    status, out, err = run_cli("params", "--colluders", 3, "--users", 100, "--epsilon1", 0.01, "--output", path)
    assert status == 0, err
    assert "l=249" in out
    row = pd.read_csv(path).iloc[0]
    assert row["code_length"] == 249
    assert row["dl_constant"] == pytest.approx(3.0, rel=1e-12)

    path = tmp_path / "params.json"
    status, _, err = run_cli("params", "--colluders", 3, "--users", 100, "--output", path)
    assert status == 0, err
    document = json.loads(path.read_text())
    assert document["code_length"] == 249
    assert document["distribution"] == "gauss_legendre(c=2)"


def test_params_unusable_configuration(run_cli, tmp_path):
    status, _, err = run_cli("params", "--colluders", 4, "--users", 100, "--points", 1, "--output", tmp_path / "p.csv")
    assert status == cli.EXIT_UNUSABLE
    assert TardosError.TardosErrorType.UNUSABLE_CONFIGURATION in err


def test_mu(run_cli, tmp_path):
    path = tmp_path / "mu.json"
    status, _, err = run_cli("mu", "--family", "gl", "--colluders", 2, "--points", 1, "--strategy", "interleaving", "--output", path)
    assert status == 0, err
    document = json.loads(path.read_text())
    assert document["mu"] == pytest.approx(1.0, abs=1e-15)
    assert document["dl"] == pytest.approx(2.0, abs=1e-14)
    assert document["theta"] == [0.0, 0.5, 1.0]
    assert document["degenerate"] is False


def test_mu_continuous_family(run_cli, tmp_path):
    path = tmp_path / "mu.csv"
    status, _, err = run_cli("mu", "--family", "arcsine", "--colluders", 10, "--schedule", "none", "--strategy", "interleaving", "--output", path)
    assert status == 0, err
    assert pd.read_csv(path)["dl"].iloc[0] == pytest.approx(math.pi ** 2 / 2, rel=1e-8)


def test_bad_profile_file(run_cli, tmp_path):
    profile = tmp_path / "profile.csv"
    profile.write_text("a,b\n0,0\n1,1\n")
    status, _, _ = run_cli("mu", "--family", "gl", "--colluders", 1, "--profile-file", profile, "--output", tmp_path / "mu.csv")
    assert status == cli.EXIT_IO


def test_missing_output_directory(run_cli, tmp_path):
    status, _, err = run_cli("dist", "--family", "cheb", "--points", 3, "--output", tmp_path / "missing" / "dist.csv")
    assert status == cli.EXIT_IO
    assert TardosError.TardosErrorType.IO_FAILURE in err


def test_simulate(run_cli, tmp_path):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    args = ["simulate", "--colluders", 3, "--users", 100, "--trials", 20, "--seed", 99]
    status, _, err = run_cli(*args, "--output", first)
    assert status == 0, err
    status, _, err = run_cli(*args, "--output", second, "--jobs", 2)
    assert status == 0, err
    assert first.read_bytes() == second.read_bytes()

    document = json.loads(first.read_text())
    assert {"params", "distribution", "strategy", "coalition", "fp_rate", "fn_rate", "mean_pirate_score", "trials", "seed"} <= set(document)
    assert document["coalition"] == [0, 1, 2]
    assert document["seed"] == 99
    assert document["params"]["code_length"] == 249
    assert 0.0 <= document["fp_rate"] <= 1.0


def test_simulate_rejects_bad_coalition(run_cli, tmp_path):
    status, _, _ = run_cli("simulate", "--colluders", 3, "--users", 100, "--coalition", "1,1,2", "--trials", 2, "--output", tmp_path / "s.json")
    assert status == cli.EXIT_USAGE


def test_cdf_and_notebook(run_cli, tmp_path):
    cdf_path = tmp_path / "cdf.csv"
    status, _, err = run_cli("cdf", "--families", "gl,arcsine", "--points", "2,5", "--cutoff", 0.01, "--grid", 11, "--output", cdf_path)
    assert status == 0, err
    frame = pd.read_csv(cdf_path)
    assert list(frame.columns) == N.CDF_COLUMNS
    assert len(frame) == 4 * 11
    reference = frame[frame["family"] == N.REFERENCE]
    assert reference["cdf"].iloc[0] == 0.0
    assert reference["cdf"].iloc[-1] == pytest.approx(1.0, abs=1e-15)

    notebook_path = tmp_path / "figures.ipynb"
    status, _, err = run_cli("notebook", "--cdf-csv", cdf_path, "--output", notebook_path)
    assert status == 0, err
    notebook = nbf.read(str(notebook_path), as_version=4)
    nbf.validate(notebook)
    sources = "\n".join(cell.source for cell in notebook.cells)
    assert repr(str(cdf_path)) in sources
    assert "sweep = pd.read_csv" not in sources


def test_notebook_needs_an_artifact(run_cli, tmp_path):
    status, _, _ = run_cli("notebook", "--output", tmp_path / "n.ipynb")
    assert status == cli.EXIT_USAGE
    status, _, _ = run_cli("notebook", "--sweep-csv", tmp_path / "missing.csv", "--output", tmp_path / "n.ipynb")
    assert status == cli.EXIT_USAGE


def _strict_json(text):
    def reject(token):
        raise ValueError(f"non-standard json token {token}")
    return json.loads(text, parse_constant=reject)


def test_cdf_json_is_strict(tmp_path):
    path = tmp_path / "cdf.json"
    with warnings.catch_warnings():
        warnings.simplefilter("error", FutureWarning)
        output = CdfCommand().run({"families": "gl,arcsine", "points": "2", "cutoff": 0.01, "grid": 3, "output": str(path)})
    assert str(output.table["points"].dtype) == "Int64"
    rows = _strict_json(path.read_text())["rows"]
    assert len(rows) == 3 * 3
    gl = [row for row in rows if row["family"] == N.GAUSS_LEGENDRE]
    assert {row["cutoff"] for row in gl} == {None}
    assert {row["points"] for row in gl} == {2}
    arcsine = [row for row in rows if row["family"] == N.ARCSINE]
    assert {row["cutoff"] for row in arcsine} == {0.01}
    assert {row["points"] for row in arcsine} == {None}
