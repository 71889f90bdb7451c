"""YAML side-car describing how a run was produced."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict

import yaml

__all__ = ["write_metadata", "read_metadata"]


def write_metadata(path: Path, metadata: Dict[str, Any]) -> Path:
    """Dump *metadata* as block-style YAML, keys in insertion order."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="\n", encoding="utf-8") as f:
        yaml.safe_dump(metadata, f, sort_keys=False, default_flow_style=False)
    return path


def read_metadata(path: Path) -> Dict[str, Any]:
    with Path(path).open(encoding="utf-8") as f:
        return yaml.safe_load(f) or {}
