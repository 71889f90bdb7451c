"""CSV dataset ingestion."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Union

import numpy as np
import pandas as pd

from ..core.errors import MissingColumn, ParseError, ShapeMismatch

logger = logging.getLogger(__name__)

__all__ = ["Dataset", "load_csv"]

# cells read as missing rather than malformed
MISSING_TOKENS = frozenset({"", "na", "nan", "null", "none", "?"})


@dataclass
class Dataset:
    """Feature matrix and target vector, rows in file order."""

    name: str
    features: np.ndarray
    targets: np.ndarray
    feature_names: List[str]
    target_name: str = "target"
    dropped_rows: int = field(default=0)

    def __post_init__(self):
        self.features = np.atleast_2d(np.asarray(self.features, dtype=float))
        self.targets = np.asarray(self.targets).reshape(-1)
        if len(self.features) != len(self.targets):
            raise ShapeMismatch(
                f"{len(self.features)} feature rows but "
                f"{len(self.targets)} targets"
            )

    def __len__(self) -> int:
        return len(self.targets)

    @property
    def n_features(self) -> int:
        return self.features.shape[1]


def _parse_numeric(raw: pd.DataFrame) -> pd.DataFrame:
    """Convert every cell to float; missing tokens become NaN."""
    out = {}
    for col in raw.columns:
        text = raw[col].str.strip()
        missing = text.str.lower().isin(MISSING_TOKENS)
        values = pd.to_numeric(text.where(~missing), errors="coerce")
        bad = values.isna() & ~missing
        if bad.any():
            pos = int(np.flatnonzero(bad.to_numpy())[0])
            # data rows count from 1, the header is row 0
            raise ParseError(pos + 1, col, raw[col].iloc[pos])
        out[col] = values.astype(float)
    return pd.DataFrame(out, columns=raw.columns)


def load_csv(
    path: Union[str, Path], target_column: str, name: str | None = None
) -> Dataset:
    """Read a headed, comma-separated numeric file.

    Rows holding a missing cell are dropped and counted; any other
    non-numeric cell raises ParseError naming its row and column.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"No such dataset file: {path}")
    raw = pd.read_csv(
        path, dtype=str, keep_default_na=False, encoding="utf-8"
    )
    raw.columns = [str(c).strip() for c in raw.columns]
    if target_column not in raw.columns:
        raise MissingColumn(
            f"Column {target_column!r} not in {path.name}: "
            f"{list(raw.columns)}"
        )
    df = _parse_numeric(raw)
    complete = df.notna().all(axis=1)
    dropped = int((~complete).sum())
    if dropped:
        logger.warning(
            "Dropped %d of %d rows with missing values from %s",
            dropped, len(df), path.name,
        )
    df = df.loc[complete]
    feature_names = [c for c in df.columns if c != target_column]
    return Dataset(
        name=name or path.stem,
        features=df[feature_names].to_numpy(dtype=np.float64),
        targets=df[target_column].to_numpy(dtype=np.float64),
        feature_names=feature_names,
        target_name=target_column,
        dropped_rows=dropped,
    )
