"""Input coercion helpers shared by the estimator and the CLI."""

from __future__ import annotations

import os
from collections.abc import Mapping
from fractions import Fraction

from .exceptions import InstanceError
from .formats import instance_from_dict, parse_instance, read_instance
from .fptas import as_fraction
from .matroid import LaminarInstance, validate_laminar


def check_instance(X) -> LaminarInstance:
    """Coerce ``X`` into a validated, canonical :class:`LaminarInstance`.

    Accepts an instance, a decoded instance-file mapping, JSON text, or a
    path to an instance file.
    """
    if isinstance(X, LaminarInstance):
        validate_laminar(X).raise_for_issues()
        return X
    if isinstance(X, Mapping):
        return instance_from_dict(dict(X))
    if isinstance(X, str) and X.lstrip().startswith("{"):
        return parse_instance(X)
    if isinstance(X, (str, os.PathLike)):
        return read_instance(X)
    raise TypeError(f"expected a LaminarInstance, mapping, JSON text or path; got {type(X).__name__}")


def check_epsilon(epsilon) -> Fraction:
    eps = as_fraction(epsilon)
    if eps <= 0:
        raise InstanceError(f"epsilon must be positive, got {eps}", "ZERO_EPSILON")
    return eps
