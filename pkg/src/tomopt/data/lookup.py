"""
Bundled regression datasets and name-or-path resolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple, Union

from ..core.config import ROOT, get_setting
from ..core.errors import InvalidConfig
from .csv import Dataset, load_csv

__all__ = ["BundledDataset", "BUNDLED", "bundled_dataset", "load_dataset"]


@dataclass(frozen=True)
class BundledDataset:
    name: str
    filename: str
    target_column: str
    columns: Tuple[str, ...]
    rows: int

    @property
    def path(self) -> Path:
        return data_dir() / self.filename

    def available(self) -> bool:
        return self.path.exists()


BUNDLED = {
    "boston": BundledDataset(
        "boston",
        "boston.csv",
        "MEDV",
        ("CRIM", "ZN", "INDUS", "CHAS", "NOX", "RM", "AGE", "DIS", "RAD",
         "TAX", "PTRATIO", "B", "LSTAT", "MEDV"),
        506,
    ),
    "diabetes": BundledDataset(
        "diabetes",
        "diabetes.csv",
        "Y",
        ("AGE", "SEX", "BMI", "BP", "S1", "S2", "S3", "S4", "S5", "S6", "Y"),
        442,
    ),
    "california": BundledDataset(
        "california",
        "california.csv",
        "MedHouseVal",
        ("MedInc", "HouseAge", "AveRooms", "AveBedrms", "Population",
         "AveOccup", "Latitude", "Longitude", "MedHouseVal"),
        20640,
    ),
}


def data_dir() -> Path:
    """Configured data directory; relative paths hang off the repo root."""
    path = Path(get_setting("data.dir", "data"))
    return path if path.is_absolute() else ROOT / path


def bundled_dataset(name: str) -> BundledDataset:
    try:
        return BUNDLED[name.strip().lower()]
    except KeyError as err:
        raise InvalidConfig(
            f"Unknown dataset {name!r}; bundled: {sorted(BUNDLED)}"
        ) from err


def load_dataset(
    name_or_path: Union[str, Path], target_column: Optional[str] = None
) -> Dataset:
    """Load a bundled dataset by name or any CSV by path.

    A path needs ``target_column``; a bundled name uses its own unless one
    is given.
    """
    key = str(name_or_path).strip().lower()
    if key in BUNDLED:
        entry = BUNDLED[key]
        return load_csv(
            entry.path, target_column or entry.target_column, name=entry.name
        )
    if target_column is None:
        raise InvalidConfig(
            f"Dataset path {name_or_path} needs a target_column"
        )
    return load_csv(Path(name_or_path), target_column)
