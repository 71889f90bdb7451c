"""
Build the regression dataset CSVs from their public sources.

Each source has its own layout; the parsers turn the raw payload into a
frame with the columns ``BUNDLED`` documents, and ``fetch_dataset``
writes it under the data directory.
"""

from __future__ import annotations

import io
import logging
import tarfile
from pathlib import Path
from typing import Callable, Dict, Optional

import numpy as np
import pandas as pd

from ..core.config import get_setting
from ..core.errors import ParseError, ShapeMismatch
from ..core.http import fetch_bytes
from .lookup import BUNDLED, bundled_dataset, data_dir

logger = logging.getLogger(__name__)

__all__ = [
    "parse_boston",
    "parse_diabetes",
    "parse_california",
    "PARSERS",
    "fetch_dataset",
]

# description lines ahead of the numbers in the CMU file
BOSTON_PREAMBLE = 22
CALIFORNIA_MEMBER = "CaliforniaHousing/cal_housing.data"
CALIFORNIA_RAW = (
    "longitude", "latitude", "housingMedianAge", "totalRooms",
    "totalBedrooms", "population", "households", "medianIncome",
    "medianHouseValue",
)


def _check_rows(name: str, frame: pd.DataFrame) -> pd.DataFrame:
    expected = bundled_dataset(name).rows
    if len(frame) != expected:
        raise ShapeMismatch(
            f"{name}: expected {expected} rows, parsed {len(frame)}"
        )
    return frame


def parse_boston(payload: bytes) -> pd.DataFrame:
    """CMU StatLib layout: every record wraps over two lines (11 + 3)."""
    columns = BUNDLED["boston"].columns
    lines = payload.decode("latin-1").splitlines()[BOSTON_PREAMBLE:]
    tokens = pd.Series(" ".join(lines).split(), dtype=str)
    if len(tokens) % len(columns):
        raise ShapeMismatch(
            f"boston: {len(tokens)} values is not a multiple of "
            f"{len(columns)}"
        )
    values = pd.to_numeric(tokens, errors="coerce")
    if values.isna().any():
        pos = int(np.flatnonzero(values.isna().to_numpy())[0])
        width = len(columns)
        raise ParseError(pos // width + 1, columns[pos % width], tokens[pos])
    frame = pd.DataFrame(
        values.to_numpy().reshape(-1, len(columns)), columns=list(columns)
    )
    frame["CHAS"] = frame["CHAS"].astype(int)
    frame["RAD"] = frame["RAD"].astype(int)
    return frame


def parse_diabetes(payload: bytes) -> pd.DataFrame:
    """Tab separated, already headed AGE ... S6, Y."""
    frame = pd.read_csv(io.BytesIO(payload), sep="\t")
    frame.columns = [str(c).strip().upper() for c in frame.columns]
    return frame[list(BUNDLED["diabetes"].columns)]


def parse_california(payload: bytes) -> pd.DataFrame:
    """1990 census block groups, reduced to per-household averages.

    The house value target is rescaled to units of 100,000.
    """
    with tarfile.open(fileobj=io.BytesIO(payload), mode="r:gz") as tar:
        member = tar.extractfile(CALIFORNIA_MEMBER)
        if member is None:
            raise ShapeMismatch(f"{CALIFORNIA_MEMBER} missing from archive")
        raw = pd.read_csv(member, header=None, names=CALIFORNIA_RAW)
    households = raw["households"]
    frame = pd.DataFrame({
        "MedInc": raw["medianIncome"],
        "HouseAge": raw["housingMedianAge"],
        "AveRooms": raw["totalRooms"] / households,
        "AveBedrms": raw["totalBedrooms"] / households,
        "Population": raw["population"],
        "AveOccup": raw["population"] / households,
        "Latitude": raw["latitude"],
        "Longitude": raw["longitude"],
        "MedHouseVal": raw["medianHouseValue"] / 100000.0,
    })
    return frame


PARSERS: Dict[str, Callable[[bytes], pd.DataFrame]] = {
    "boston": parse_boston,
    "diabetes": parse_diabetes,
    "california": parse_california,
}


def fetch_dataset(
    name: str, dest: Optional[Path] = None, force: bool = False
) -> Path:
    """Download, parse and write one dataset CSV; return its path.

    An existing file is kept unless ``force`` is set.
    """
    entry = bundled_dataset(name)
    path = Path(dest or data_dir()) / entry.filename
    if path.exists() and not force:
        logger.info("%s already present at %s", entry.name, path)
        return path
    url = get_setting(f"sources.{entry.name}", required=True)
    logger.info("Downloading %s from %s", entry.name, url)
    frame = _check_rows(entry.name, PARSERS[entry.name](fetch_bytes(url)))
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, lineterminator="\n")
    logger.info("Wrote %d rows to %s", len(frame), path)
    return path
