"""Matrix and vector-family files.

JSON matrix: ``{"rows": r, "cols": c, "data": [row-major reals]}``.
A vector family is the matrix whose columns are the vectors, optionally
with ``"half_dim": n`` (must equal ``rows / 2``).  CSV files hold a plain
rectangular numeric grid, read the same way (columns are vectors).
"""
from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .errors import InputError
from .symplectic import VectorFamily, standard_J


def matrix_to_json(A, **extra) -> dict:
    A = np.asarray(A, dtype=float)
    return {"rows": int(A.shape[0]), "cols": int(A.shape[1]),
            "data": A.reshape(-1).tolist(), **extra}


def matrix_from_json(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise InputError("matrix file: expected a JSON object")
    try:
        rows, cols, data = int(obj["rows"]), int(obj["cols"]), obj["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"matrix file: missing or invalid field ({exc})") from None
    if rows < 1 or cols < 1:
        raise InputError("matrix file: rows and cols must be positive")
    try:
        flat = np.array(data, dtype=float)
    except (TypeError, ValueError):
        raise InputError("matrix file: data must be a list of numbers") from None
    if flat.ndim != 1 or flat.size != rows * cols:
        raise InputError(f"matrix file: expected {rows * cols} entries, got {flat.size}")
    if not np.all(np.isfinite(flat)):
        raise InputError("matrix file: entries must be finite")
    return flat.reshape(rows, cols)


def _read(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    if path.suffix.lower() == ".csv":
        try:
            grid = [[float(x) for x in row] for row in csv.reader(text.splitlines()) if row]
        except ValueError as exc:
            raise InputError(f"{path}: non-numeric CSV entry ({exc})") from None
        if not grid or len({len(r) for r in grid}) != 1:
            raise InputError(f"{path}: CSV grid must be non-empty and rectangular")
        A = np.array(grid)
        if not np.all(np.isfinite(A)):
            raise InputError(f"{path}: entries must be finite")
        return A, {}
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from None
    return matrix_from_json(obj), obj


def load_matrix(path) -> np.ndarray:
    return _read(path)[0]


def load_family(path) -> VectorFamily:
    V, meta = _read(path)
    if V.shape[0] % 2:
        raise InputError(f"{path}: vectors must have even length, got {V.shape[0]}")
    n = V.shape[0] // 2
    if "half_dim" in meta and int(meta["half_dim"]) != n:
        raise InputError(f"{path}: half_dim={meta['half_dim']} does not match {V.shape[0]} rows")
    return VectorFamily(standard_J(n), V)


def save_matrix(path, A, **extra):
    Path(path).write_text(json.dumps(matrix_to_json(A, **extra)))


def save_family(path, fam: VectorFamily):
    save_matrix(path, fam.columns, half_dim=fam.ambient.half_dim)
