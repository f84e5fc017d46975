from __future__ import annotations

from pathlib import Path

import pytest

from nckoszul.presfile import load_presentation
from nckoszul.quotient import build_quotient

DATA = Path(__file__).resolve().parents[1] / "src" / "nckoszul" / "data"


def load(name: str, field=None):
    return load_presentation(DATA / f"{name}.pres", field)


def quotient(name: str, bound: int = 12, field=None):
    return build_quotient(load(name, field), bound)


@pytest.fixture
def data_dir() -> Path:
    return DATA
