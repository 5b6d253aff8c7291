"""Bundled worked-example network files."""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def sleman_path() -> Path:
    """Filesystem path of the bundled seven-node Sleman ring plan."""
    return Path(str(resources.files(__package__) / "sleman.json"))
