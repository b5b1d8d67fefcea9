"""Bundled example datasets: two house-buyer sets, a mood chart and a candidate shortlist."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .core import BipolarSoftSet
from .io import load_dataset, load_weights

NAMES = ("houses_x", "houses_y", "mood_chart", "candidates")


def path(name: str) -> Path:
    """Filesystem path of a bundled file, e.g. ``path("candidates.csv")``."""
    return Path(str(resources.files(__package__).joinpath("data", name)))


def load(name: str) -> BipolarSoftSet:
    if name not in NAMES:
        raise KeyError(f"no bundled dataset {name!r}; choose from {NAMES}")
    return load_dataset(path(f"{name}.json"))


def candidate_weights() -> dict[str, float]:
    return load_weights(path("candidate_weights.json"))
