import numpy as np
import pytest

from radialdec.cli import build_context


@pytest.fixture(scope="session")
def ctx():
    """Cached (preset, r0, nodes) -> OperatorContext factory."""
    return build_context


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)
