"""Shared fixtures: the default corpus and its reports, computed once."""

import sys
from pathlib import Path

try:
    import ringlab  # noqa: F401
except ImportError:  # running from a checkout without installing
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import pytest

import ringlab as rl


@pytest.fixture(scope="session")
def corpus():
    return rl.default_corpus()


@pytest.fixture(scope="session")
def reports(corpus):
    return {s.label: rl.property_report(s) for s in corpus}


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Corpus members cheap enough for heavy per-element scans."""
    return [s for s in corpus if s.order <= 27]
