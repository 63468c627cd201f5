"""Globalizations of partial actions on metric and finite topological spaces.

Each operation takes a manifest and returns the command report as a dict with
keys ``command``, ``status``, ``exit_code`` and ``payload``; the payload has
the same shape as the JSON printed by the ``pglob`` CLI.
"""

from __future__ import annotations

import json
import os
from typing import Any, Mapping, Optional, Union

from . import _pglob
from ._pglob import InputError, Manifest, PreconditionError, StepBudgetExceeded

__all__ = [
    "InputError",
    "Manifest",
    "PreconditionError",
    "StepBudgetExceeded",
    "load",
    "validate",
    "confluence",
    "distance",
    "truncation",
    "topology",
    "glue",
    "homogenize",
]

ManifestLike = Union[Manifest, Mapping[str, Any], str, os.PathLike]


def load(source: ManifestLike, step_budget: Optional[int] = None) -> Manifest:
    """Manifest from a path, a dict, or an already loaded Manifest."""
    if isinstance(source, Manifest):
        return source
    if isinstance(source, Mapping):
        return Manifest.from_json(json.dumps(source), step_budget)
    return Manifest.load(os.fspath(source), step_budget)


def _report(text: str) -> dict:
    return json.loads(text)


def validate(manifest: ManifestLike) -> dict:
    return _report(_pglob.validate(load(manifest)))


def confluence(manifest: ManifestLike) -> dict:
    return _report(_pglob.confluence(load(manifest)))


def distance(
    manifest: ManifestLike,
    a: str,
    b: str,
    *,
    oracle: bool = False,
    group_formula: bool = False,
    geodesic: bool = False,
    oracle_segments: Optional[int] = None,
    oracle_depth: Optional[int] = None,
    cap_infinite: Optional[float] = None,
) -> dict:
    """Distance between two elements written as ``"w1 ... wk x"``."""
    return _report(
        _pglob.distance(
            load(manifest), a, b, oracle, group_formula, geodesic, oracle_segments, oracle_depth, cap_infinite
        )
    )


def truncation(
    manifest: ManifestLike, n: int, *, distances: bool = False, cap_infinite: Optional[float] = None
) -> dict:
    return _report(_pglob.truncation(load(manifest), n, distances, cap_infinite))


def topology(manifest: ManifestLike, *, embedding: bool = True, t1: bool = True) -> dict:
    return _report(_pglob.topology(load(manifest), embedding, t1))


def glue(spec: Union[Mapping[str, Any], str, os.PathLike]) -> dict:
    """Glue two metric spaces; ``spec`` is ``{"glue": {...}}`` or a file holding it."""
    if isinstance(spec, Mapping):
        text = json.dumps(spec)
    else:
        with open(os.fspath(spec), encoding="utf-8") as f:
            text = f.read()
    return _report(_pglob.glue(text))


def homogenize(manifest: ManifestLike, n: int, gamma: str = "singletons") -> dict:
    """One homogenization step; ``gamma`` is ``"singletons"`` or a JSON file path."""
    return _report(_pglob.homogenize(load(manifest), n, gamma))
