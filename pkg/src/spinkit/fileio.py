"""On-disk formats: CW pair complexes and manifold catalogues.

Both formats are JSON (arbitrary-precision integers come for free).

Complex file::

    {
      "name": "(D8, S7)",
      "cells": [1, 0, 0, 0, 0, 0, 0, 1, 1],
      "boundary": {"8": [[1]]},
      "sub": {"0": [1], "7": [1], "8": [0]}
    }

``cells[k]`` counts k-cells; ``boundary[str(k)]`` is the cells[k-1] x
cells[k] integer incidence matrix, row-major, omitted when zero;
``sub[str(k)]`` holds 0/1 flags marking subcomplex cells, omitted when all
zero.

Manifold catalogue::

    {"manifolds": [{"name": ..., "p1_sq": ..., "p2": ..., "euler": ...,
                    "h7_rel_rank": ..., "h8_z2_dim": ..., "components": ...,
                    "simply_connected": ..., "has_boundary": ..., "spin": ...},
                   ...]}

Field names match :class:`spinkit.census.ManifoldCharData` exactly;
``components`` (default 1) and the three flags (defaults false, false,
true) may be omitted.
"""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path

from .census import ManifoldCharData
from .cwcomplex import CWPairComplex
from .errors import ComplexValidationError, CensusDataError

DATA_DIR_ENV = "SPINKIT_DATA_DIR"

BUNDLED_CATALOGUE = "manifolds.json"
BUNDLED_COMPLEXES = ("disk8_rel_sphere7.json", "sphere7.json", "point.json")


def data_path(filename: str) -> Path:
    """Resolve a bundled data file, honoring the data-directory override."""
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return Path(override) / filename
    return Path(str(resources.files("spinkit").joinpath("data", filename)))


def load_complex(path: str | Path) -> CWPairComplex:
    """Read a CW pair complex, raising ComplexValidationError on bad data."""
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ComplexValidationError(f"{path}: not valid JSON (line {exc.lineno}): {exc.msg}")
    if not isinstance(raw, dict) or "cells" not in raw:
        raise ComplexValidationError(f"{path}: expected an object with a 'cells' list")
    cells = raw["cells"]
    if not isinstance(cells, list) or not all(isinstance(c, int) for c in cells):
        raise ComplexValidationError(f"{path}: 'cells' must be a list of integers")
    boundary = {int(k): v for k, v in raw.get("boundary", {}).items()}
    sub = {int(k): v for k, v in raw.get("sub", {}).items()}
    return CWPairComplex(cells, boundary, sub, name=raw.get("name", Path(path).stem))


def save_complex(cx: CWPairComplex, path: str | Path) -> None:
    payload = {
        "name": cx.name,
        "cells": cx.cells,
        "boundary": {str(k): m for k, m in cx.boundary.items() if any(any(r) for r in m)},
        "sub": {str(k): [int(f) for f in flags] for k, flags in cx.sub.items() if any(flags)},
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")


_REQUIRED_FIELDS = ("name", "p1_sq", "p2", "euler", "h7_rel_rank", "h8_z2_dim")
_OPTIONAL_FIELDS = {"components": 1, "simply_connected": False, "has_boundary": False, "spin": True}


def load_catalogue(path: str | Path) -> list[ManifoldCharData]:
    """Read a manifold catalogue, naming the offending record on errors."""
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as exc:
        raise CensusDataError(f"{path}: not valid JSON (line {exc.lineno}): {exc.msg}")
    records = raw.get("manifolds") if isinstance(raw, dict) else None
    if not isinstance(records, list):
        raise CensusDataError(f"{path}: expected an object with a 'manifolds' list")
    out = []
    for i, rec in enumerate(records):
        label = rec.get("name", f"record #{i}") if isinstance(rec, dict) else f"record #{i}"
        if not isinstance(rec, dict):
            raise CensusDataError(f"{path}: {label} is not an object")
        missing = [f for f in _REQUIRED_FIELDS if f not in rec]
        if missing:
            raise CensusDataError(f"{path}: {label} is missing fields {missing}")
        unknown = set(rec) - set(_REQUIRED_FIELDS) - set(_OPTIONAL_FIELDS)
        if unknown:
            raise CensusDataError(f"{path}: {label} has unknown fields {sorted(unknown)}")
        kwargs = {f: rec[f] for f in _REQUIRED_FIELDS}
        for f, default in _OPTIONAL_FIELDS.items():
            kwargs[f] = rec.get(f, default)
        out.append(ManifoldCharData(**kwargs))
    return out
