from pathlib import Path

import pytest

from teamlogic import load_model_file

MODELS_DIR = Path(__file__).resolve().parent.parent / "models"


@pytest.fixture(scope="session")
def m1():
    return load_model_file(MODELS_DIR / "M1.txt")


@pytest.fixture(scope="session")
def m2():
    return load_model_file(MODELS_DIR / "M2.txt")


@pytest.fixture(scope="session")
def m3():
    return load_model_file(MODELS_DIR / "M3.txt")


@pytest.fixture(scope="session")
def full2():
    return load_model_file(MODELS_DIR / "FULL2.txt")


@pytest.fixture(scope="session")
def fixture_models(m1, m2, m3, full2):
    return [m1, m2, m3, full2]
