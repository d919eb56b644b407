import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from bvsum import BvFunction, load_function  # noqa: E402

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"

CORPUS_NAMES = sorted(p.name for p in CORPUS_DIR.glob("*.json"))


@pytest.fixture(scope="session")
def corpus() -> dict[str, BvFunction]:
    return {p.name: load_function(p) for p in sorted(CORPUS_DIR.glob("*.json"))}


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS_DIR


def corpus_path(name: str) -> Path:
    return CORPUS_DIR / name
