"""scikit-learn style front end.

:class:`LaminarKnapsackSolver` follows the estimator conventions
(constructor only stores hyper-parameters, ``fit`` returns ``self``, fitted
state lives in trailing-underscore attributes), so it works with
``get_params``/``set_params``, ``clone`` and parameter sweeps.  The "data" is
a budgeted laminar matroid instance; ``predict`` returns a 0/1 selection mask
over the instance's elements.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .fptas import solve, solve_exact
from .validation import check_epsilon, check_instance

MODES = ("fptas", "exact")


class LaminarKnapsackSolver(BaseEstimator):
    """Select a maximum-profit independent set within budget.

    Parameters
    ----------
    epsilon : str, float or Fraction, default="0.1"
        Relative error of the approximation scheme; ignored when
        ``mode="exact"``.
    mode : {"fptas", "exact"}, default="fptas"
        ``"exact"`` runs the pseudo-polynomial DP on the original profits.

    Attributes
    ----------
    instance_ : LaminarInstance
    solution_ : Solution
    selected_ids_ : list of str
        Sorted ids of the chosen elements.
    profit_, cost_ : int
    n_recursive_calls_ : int
    tree_ : DecompositionNode or None
    """

    def __init__(self, epsilon="0.1", mode="fptas"):
        self.epsilon = epsilon
        self.mode = mode

    def fit(self, X, y=None):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        instance = check_instance(X)
        if self.mode == "exact":
            solution = solve_exact(instance)
        else:
            solution = solve(instance, check_epsilon(self.epsilon))
        diag = solution.diagnostics
        self.instance_ = instance
        self.solution_ = solution
        self.selected_ids_ = sorted(solution.ids)
        self.profit_ = solution.profit
        self.cost_ = solution.cost
        self.n_recursive_calls_ = diag.recursive_calls
        self.tree_ = diag.tree
        return self

    def predict(self, X=None):
        """0/1 mask over the elements of ``X`` (default: the fitted instance)."""
        check_is_fitted(self, "solution_")
        instance = self.instance_ if X is None else check_instance(X)
        return np.array([e.id in self.solution_.ids for e in instance.elements], dtype=np.int8)

    def fit_predict(self, X, y=None):
        return self.fit(X).predict()
