import pathlib

import pytest

import omqm

DATA_DIR = pathlib.Path(__file__).parent / "data"
ZEROS_FILE = DATA_DIR / "zeta_zeros_1300.txt"


@pytest.fixture(scope="session")
def ref_zeros():
    """1300 reference zeros (independent high-precision tabulation)."""
    return omqm.load_zeros(ZEROS_FILE)


@pytest.fixture(scope="session")
def zeros30():
    """First 30 zeros computed by the package's own scan."""
    return omqm.find_zeros(30)


@pytest.fixture(scope="session")
def lyap_coarse():
    return omqm.lyapunov_spectrum(omqm.RosslerParams(), settle=20_000, span=1_000_000, dt=0.01)


@pytest.fixture(scope="session")
def lyap_fine():
    return omqm.lyapunov_spectrum(omqm.RosslerParams(), settle=40_000, span=2_000_000, dt=0.005)


@pytest.fixture(scope="session")
def feigenbaum12():
    return omqm.feigenbaum_delta(levels=12, precision_digits=40)
