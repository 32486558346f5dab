"""Shared fixtures for the test suite."""

import pytest

from carsdj import build_model


@pytest.fixture(scope="session")
def model():
    """Default iodine model, built once for the whole session."""
    return build_model()
