"""Profit-rounding approximation scheme on top of the exact DP.

Profits are scaled down by ``alpha = eps * max_profit / n`` and floored, which
shrinks the profit axis to ``O(n / eps)`` per element.  Solving the rounded
instance exactly and re-evaluating the winning set under the original profits
loses at most ``eps * OPT``.  All scaling is done in exact rational arithmetic.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from numbers import Rational

from .dp import DecompositionNode, Solution, backtrack, best_feasible, compute_dp
from .exceptions import InstanceError
from .matroid import LaminarInstance, canonicalize

__all__ = [
    "RoundingContext",
    "Diagnostics",
    "as_fraction",
    "preprocess",
    "round_profits",
    "solve",
    "solve_exact",
]

log = logging.getLogger(__name__)


def as_fraction(value) -> Fraction:
    """Exact rational from a decimal string, ``Fraction``, ``Decimal``, int or float.

    Floats are read through their shortest repr, so ``0.1`` means ``1/10``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("epsilon must be a number, not bool")
    if isinstance(value, (int, Rational, Decimal)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError as exc:
            raise InstanceError(f"cannot read {value!r} as a decimal", "BAD_EPSILON") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


@dataclass(frozen=True)
class RoundingContext:
    """Scale factor and the profit maps before and after rounding."""

    alpha: Fraction
    epsilon: Fraction
    original_profits: dict
    rounded_profits: dict

    @property
    def max_rounded(self) -> int:
        return max(self.rounded_profits.values(), default=0)


@dataclass(frozen=True)
class Diagnostics:
    mode: str
    epsilon: Fraction | None = None
    alpha: Fraction | None = None
    rounded_profit: int | None = None
    table_shape: tuple = (0, 0)
    recursive_calls: int = 0
    # certified upper bound on OPT; equals the profit in exact mode
    opt_upper_bound: Fraction | None = None
    tree: DecompositionNode | None = field(default=None, repr=False, compare=False)

    @property
    def table_cells(self) -> int:
        return self.table_shape[0] * self.table_shape[1]


def preprocess(instance: LaminarInstance, budget: int | None = None) -> LaminarInstance:
    """Drop every element that alone exceeds the budget.

    Family sets are restricted to the surviving elements; emptied sets vanish
    and coinciding sets merge.  Returns ``instance`` itself when nothing is
    removed.
    """
    budget = instance.budget if budget is None else budget
    keep = [e for e in instance.elements if e.cost <= budget]
    if len(keep) == len(instance.elements):
        return instance
    ids = frozenset(e.id for e in keep)
    family = [type(fs)(fs.members & ids, fs.capacity, fs.name) for fs in instance.family]
    return canonicalize(LaminarInstance(keep, family, instance.budget, dict(instance.metadata)))


def _check_epsilon(epsilon) -> Fraction:
    eps = as_fraction(epsilon)
    if eps <= 0:
        raise InstanceError(f"epsilon must be positive, got {eps}", "ZERO_EPSILON")
    return eps


def round_profits(instance: LaminarInstance, epsilon) -> tuple:
    """Replace every profit ``p`` by ``floor(p / alpha)``, ``alpha = eps * max p / n``.

    Returns the rounded instance and the :class:`RoundingContext`.
    """
    eps = _check_epsilon(epsilon)
    n = len(instance)
    top = max((e.profit for e in instance.elements), default=0)
    if top == 0:
        raise InstanceError("all profits are zero; nothing to round", "ZERO_PROFIT")
    alpha = eps * top / n
    # floor(p / alpha) = floor(p * n * den / (num * top)), all in integers
    num, den = eps.numerator, eps.denominator
    rounded = {e.id: (e.profit * n * den) // (num * top) for e in instance.elements}
    original = {e.id: e.profit for e in instance.elements}
    ctx = RoundingContext(alpha, eps, original, rounded)
    return instance.with_profits(rounded), ctx


def solve(instance: LaminarInstance, epsilon) -> Solution:
    """Feasible solution with profit at least ``(1 - epsilon) * OPT``.

    The returned profit and cost are in the instance's own units; the rounded
    profit and scale factor are in ``solution.diagnostics``.
    """
    eps = _check_epsilon(epsilon)
    if eps >= 1:
        warnings.warn(f"epsilon={eps} >= 1 makes the approximation guarantee vacuous", stacklevel=2)
    work = preprocess(instance)
    if not work.elements or max(e.profit for e in work.elements) == 0:
        diag = Diagnostics("fptas", epsilon=eps, rounded_profit=0, opt_upper_bound=Fraction(0))
        return Solution.from_ids(instance, (), diag)

    rounded, ctx = round_profits(work, eps)
    root = compute_dp(rounded)
    q, t = best_feasible(root, instance.budget)
    witness = backtrack(root, q, t)
    n = len(work)
    diag = Diagnostics(
        "fptas",
        epsilon=eps,
        alpha=ctx.alpha,
        rounded_profit=t,
        table_shape=root.table.cost.shape,
        recursive_calls=root.calls,
        opt_upper_bound=ctx.alpha * (t + n),
        tree=root,
    )
    log.debug("fptas n=%d eps=%s alpha=%s table=%s", n, eps, ctx.alpha, root.table)
    return Solution.from_ids(instance, witness.ids, diag)


def solve_exact(instance: LaminarInstance) -> Solution:
    """Optimal solution by the exact pseudo-polynomial DP on the original profits."""
    work = preprocess(instance)
    root = compute_dp(work)
    q, t = best_feasible(root, instance.budget)
    witness = backtrack(root, q, t)
    diag = Diagnostics(
        "exact",
        table_shape=root.table.cost.shape,
        recursive_calls=root.calls,
        opt_upper_bound=Fraction(t),
        tree=root,
    )
    return Solution.from_ids(instance, witness.ids, diag)
