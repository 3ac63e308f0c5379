"""Input file parsing.

One JSON file format covers all inputs (row-major nested arrays, decimal
number literals):

* ``{"n": 2, "matrix": [[...]]}``                    a single real matrix
* ``{"n": 2, "lower": [[...]], "upper": [[...]]}``   a box by bounds
* ``{"n": 2, "midpoint": [[...]], "radius": [[...]]}``  a box by center/radius
* ``{"n": 2, "midpoint": [[...]],
    "radius_scale": {"of": "abs_midpoint", "factor": 0.1}}``
  convenience: radius = factor * |midpoint|
* ``{"qp": {"C": ..., "d": ..., "B": ..., "b": ...},
    "radB": [[...]], "radC": [[...]]}``              a QP with optional radii
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .intervals import IntervalMatrix, from_bounds, from_midpoint_radius
from .lcp import QpInstance

__all__ = ["ParseError", "parse_matrix_file", "parse_matrix_data"]


class ParseError(ValueError):
    """Malformed or inconsistent input file."""


def parse_matrix_file(path) -> IntervalMatrix | np.ndarray | QpInstance:
    """Parse an input file into a box, a real matrix, or a QP instance."""
    p = Path(path)
    if not p.exists():
        raise ParseError(f"input file not found: {p}")
    try:
        data = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON in {p}: {exc}") from exc
    return parse_matrix_data(data)


def _matrix(data, key: str, n: int | None = None) -> np.ndarray:
    raw = data[key]
    try:
        M = np.array(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"field {key!r} is not a numeric matrix") from exc
    if M.ndim == 1 and n == 1:
        M = M.reshape(1, -1)
    if M.ndim != 2:
        raise ParseError(f"field {key!r} must be a nested (row-major) array")
    if n is not None and M.shape != (n, n):
        raise ParseError(f"field {key!r} has shape {M.shape}, expected ({n}, {n})")
    return M


def parse_matrix_data(data) -> IntervalMatrix | np.ndarray | QpInstance:
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    if "qp" in data:
        return _parse_qp(data)
    n = data.get("n")
    if not isinstance(n, int) or n < 1:
        raise ParseError('field "n" must be a positive integer')
    try:
        if "matrix" in data:
            return _matrix(data, "matrix", n)
        if "lower" in data or "upper" in data:
            if "lower" not in data or "upper" not in data:
                raise ParseError('both "lower" and "upper" are required')
            return from_bounds(_matrix(data, "lower", n), _matrix(data, "upper", n))
        if "midpoint" in data:
            mid = _matrix(data, "midpoint", n)
            if "radius" in data:
                return from_midpoint_radius(mid, _matrix(data, "radius", n))
            if "radius_scale" in data:
                scale_cfg = data["radius_scale"]
                if (not isinstance(scale_cfg, dict)
                        or scale_cfg.get("of") != "abs_midpoint"
                        or "factor" not in scale_cfg):
                    raise ParseError(
                        'radius_scale must be {"of": "abs_midpoint", "factor": f}'
                    )
                factor = float(scale_cfg["factor"])
                if factor < 0:
                    raise ParseError("radius_scale factor must be nonnegative")
                return from_midpoint_radius(mid, factor * np.abs(mid))
            raise ParseError('midpoint needs "radius" or "radius_scale"')
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc
    raise ParseError(
        'object must contain "matrix", "lower"/"upper", "midpoint", or "qp"'
    )


def _parse_qp(data) -> QpInstance:
    qp = data["qp"]
    if not isinstance(qp, dict):
        raise ParseError('field "qp" must be an object')
    for key in ("C", "d", "B", "b"):
        if key not in qp:
            raise ParseError(f'qp section is missing field {key!r}')
    try:
        C = np.array(qp["C"], dtype=float)
        d = np.array(qp["d"], dtype=float)
        B = np.atleast_2d(np.array(qp["B"], dtype=float))
        b = np.array(qp["b"], dtype=float)
        rad_b = data.get("radB")
        rad_c = data.get("radC")
        return QpInstance(
            C=C, d=d, B=B, b=b,
            rad_b=None if rad_b is None else np.array(rad_b, dtype=float),
            rad_c=None if rad_c is None else np.array(rad_c, dtype=float),
        )
    except ValueError as exc:
        raise ParseError(f"invalid qp data: {exc}") from exc
