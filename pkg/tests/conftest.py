import numpy as np
import pytest

from tardos_distributions import cli
from tardos_distributions.common import names as N


@pytest.fixture
def rng():
    return np.random.default_rng(N.DEFAULT_SEED)


@pytest.fixture
def run_cli(capsys):
    """Run the cli in-process; returns (exit status, stdout, stderr)."""
    def _run(*argv):
        status = cli.run([str(arg) for arg in argv])
        captured = capsys.readouterr()
        return status, captured.out, captured.err
    return _run
