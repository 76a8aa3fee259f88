# tests/conftest.py

import os
from pathlib import Path

import numpy as np
import pytest


def pytest_configure(config: pytest.Config) -> None:
    """
    Configures pytest to keep log files inside the .pytest_cache folder.

    This function is automatically called by pytest before running tests. It creates a
    directory named 'logs' inside the .pytest_cache folder and sets the environment
    variable 'LOG_DIR' to the absolute path of this directory, so that commands run
    by the tests never write to the user log directory.

    Args:
        config (pytest.Config): The pytest configuration object.

    Returns:
        None
    """
    root = Path(config.cache.makedir("logs").strpath)

    os.environ["LOG_DIR"] = root.as_posix()


@pytest.fixture
def rng() -> np.random.Generator:
    """
    Seeded random generator, identical for every test that requests it.

    Returns:
        np.random.Generator: Generator seeded with 42.
    """
    return np.random.default_rng(42)
