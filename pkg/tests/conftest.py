"""Shared fixtures for the test suite."""

import sys
from pathlib import Path

# Allow bare imports (e.g. `import covers`) the same way src/ code does.
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import pytest

import usage_logger
from covers import FanoInput
from varieties import WciModel


@pytest.fixture(autouse=True)
def isolated_usage_log(tmp_path, monkeypatch):
    """Keep run logs out of the source tree."""
    log_dir = tmp_path / "usage_logs"
    monkeypatch.setattr(usage_logger, "LOG_DIR", log_dir)
    return log_dir


# ── Models ────────────────────────────────────────────────────────

@pytest.fixture
def x1_model():
    return WciModel((1, 1, 1, 1, 1, 2), (2, 4))


@pytest.fixture
def x2_model():
    return WciModel((1,) * 7, (2, 2, 2))


@pytest.fixture
def x3_model():
    return WciModel((1, 1, 1, 1, 2), (4,))


@pytest.fixture
def x4_model():
    return WciModel((1,) * 6, (2, 2))


@pytest.fixture
def quintic_model():
    return WciModel((1,) * 5, (5,))


@pytest.fixture
def p3_model():
    return WciModel((1, 1, 1, 1))


# ── Covers inputs (e(X), (-K)^3, r) ───────────────────────────────

@pytest.fixture
def x1_input():
    return FanoInput(euler_x=-56, k3=4, index_r=1)


@pytest.fixture
def x2_input():
    return FanoInput(euler_x=-24, k3=8, index_r=1)


@pytest.fixture
def x3_input():
    return FanoInput(euler_x=-16, k3=16, index_r=2)


@pytest.fixture
def x4_input():
    return FanoInput(euler_x=0, k3=32, index_r=2)


@pytest.fixture
def all_inputs(x1_input, x2_input, x3_input, x4_input):
    return {"X1": x1_input, "X2": x2_input, "X3": x3_input, "X4": x4_input}
