"""
Shared fixtures for the switch-graph test suite.
"""

from pathlib import Path

import pytest

from src.core_model.instance_format import read_instance

CORPUS_DIR = Path(__file__).parent.parent / "data" / "corpus"


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture
def load_corpus():
    def load(name: str, kind=None):
        return read_instance(CORPUS_DIR / f"{name}.txt", kind)

    return load


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep a developer's SWITCHGRAPH_* settings out of the tests."""
    for key in (
        "SWITCHGRAPH_ARRIVAL_BUDGET",
        "SWITCHGRAPH_NAIVE_BUDGET",
        "SWITCHGRAPH_PATH_LIMIT",
        "SWITCHGRAPH_SEED",
        "SWITCHGRAPH_LOG_LEVEL",
    ):
        monkeypatch.delenv(key, raising=False)
