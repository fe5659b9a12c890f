# DOC: Generic utils

import os
import math
import json
import logging

import numpy as np
import pandas as pd
from scipy.special import gammaln

from tardos_distributions.common import names as N
from tardos_distributions.common.errors import TardosError



# REGION: [Path utils]

def normpath(pathname):
    """ normpath - normalizes the path to use forward slashes """
    if not pathname:
        return ""
    return os.path.normpath(pathname.replace("\\", "/")).replace("\\", "/")

def justext(pathname):
    """ justext - returns the file extension without the dot """
    pathname = os.path.basename(normpath(pathname))
    _, ext = os.path.splitext(pathname)
    return ext.lstrip(".")


def split_list(value):
    """ split_list - "a,b, c" -> ["a", "b", "c"]; lists and None pass through """
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return value

# ENDREGION: [Path utils]



# REGION: [Numeric utils]

def log_binomial(n: int, k):
    """ log_binomial - log of C(n, k), vectorised over k """
    k = np.asarray(k, dtype=float)
    return gammaln(n + 1.0) - gammaln(k + 1.0) - gammaln(n - k + 1.0)

def ceil_points(colluders: int) -> int:
    """ ceil_points - number of quadrature points designed against a coalition of the given size """
    return (int(colluders) + 1) // 2

# ENDREGION: [Numeric utils]



# REGION: [Random streams]

def rng_stream(seed: int | np.random.SeedSequence | None = N.DEFAULT_SEED) -> np.random.Generator:
    """ rng_stream - one seeded stream; never share a stream between concurrent samplers """
    return np.random.default_rng(seed)

def spawn_seeds(seed: int, count: int) -> list[np.random.SeedSequence]:
    """ spawn_seeds - per-task child seeds, identical for any number of workers """
    return np.random.SeedSequence(seed).spawn(count)

# ENDREGION: [Random streams]



# REGION: [Logging]

def setup_logging(level: str | None = None):
    level = (level or os.environ.get(N.LOG_LEVEL_ENV, N.DEFAULT_LOG_LEVEL)).upper()
    logging.basicConfig(
        level = getattr(logging, level, logging.WARNING),
        format = "%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

# ENDREGION: [Logging]



# REGION: [Artifact writers]

def write_table(frame: pd.DataFrame, path: str):
    """ write_table - csv with round-trip safe doubles """
    try:
        frame.to_csv(path, index=False, float_format=N.FLOAT_FORMAT, lineterminator="\n")
    except OSError as error:
        raise TardosError("write_table", TardosError.TardosErrorType.IO_FAILURE, f"Cannot write {path}: {error}", {"path": path})

def write_document(document: dict, path: str):
    try:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(json_safe(document), f, indent=2, allow_nan=False)
            f.write("\n")
    except OSError as error:
        raise TardosError("write_document", TardosError.TardosErrorType.IO_FAILURE, f"Cannot write {path}: {error}", {"path": path})

def json_safe(value):
    """ json_safe - plain json values, NaN, infinities and pd.NA become null """
    if isinstance(value, dict):
        return {key: json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [json_safe(item) for item in value]
    if value is None or value is pd.NA:
        return None
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value) if math.isfinite(value) else None
    if isinstance(value, str):
        return value
    raise TypeError(f"Not serializable: {type(value).__name__}")

# ENDREGION: [Artifact writers]
