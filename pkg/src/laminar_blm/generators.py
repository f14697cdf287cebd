"""Seeded generators for the classic special cases and for random laminar families."""

from __future__ import annotations

import random
import string
from typing import Sequence

from .exceptions import InstanceError
from .matroid import Element, FamilySet, LaminarInstance, make_instance

KINDS = ("knapsack", "cardinality", "multiple_choice", "partition", "random_laminar")

__all__ = ["KINDS", "gen_special", "group_label"]


def _bad(message: str) -> InstanceError:
    return InstanceError(message, "BAD_PARAMS")


def group_label(index: int) -> str:
    """Spreadsheet-style labels: a, b, ..., z, aa, ab, ..."""
    letters = string.ascii_lowercase
    label = ""
    index += 1
    while index:
        index, rem = divmod(index - 1, 26)
        label = letters[rem] + label
    return label


def _draw(rng: random.Random, bounds: Sequence[int], what: str) -> int:
    lo, hi = bounds
    if lo < 0 or hi < lo:
        raise _bad(f"{what} range must satisfy 0 <= lo <= hi, got {tuple(bounds)}")
    return rng.randint(lo, hi)


def _elements(rng, ids, cost_range, profit_range):
    return [Element(i, _draw(rng, cost_range, "cost"), _draw(rng, profit_range, "profit")) for i in ids]


def _plain_ids(n: int) -> list:
    width = len(str(n))
    return [f"e{i:0{width}d}" for i in range(1, n + 1)]


def _grouped_ids(groups: Sequence[int]) -> list:
    if not groups or any(g < 1 for g in groups):
        raise _bad(f"groups must be a non-empty list of positive sizes, got {groups!r}")
    return [[f"{group_label(g)}{j}" for j in range(1, size + 1)] for g, size in enumerate(groups)]


def _random_forest(rng, ids, depth, branching, max_capacity, out):
    if depth <= 0 or len(ids) < 2:
        return
    parts = rng.randint(2, min(branching, len(ids)))
    cuts = sorted(rng.sample(range(1, len(ids)), parts - 1))
    for lo, hi in zip([0] + cuts, cuts + [len(ids)]):
        block = ids[lo:hi]
        if rng.random() < 0.7:
            top = len(block) if max_capacity is None else min(len(block), max_capacity)
            out.append(FamilySet(frozenset(block), rng.randint(1, top)))
        _random_forest(rng, block, depth - 1, branching, max_capacity, out)


def gen_special(
    kind: str,
    n: int = 10,
    seed: int = 0,
    *,
    cost_range: Sequence[int] = (1, 20),
    profit_range: Sequence[int] = (1, 20),
    budget: int | None = None,
    k: int | None = None,
    groups: Sequence[int] | None = None,
    capacities: Sequence[int] | None = None,
    depth: int = 3,
    branching: int = 3,
    max_capacity: int | None = None,
) -> LaminarInstance:
    """Generate a seeded instance of one of the special shapes.

    ``knapsack``: no constraint besides the budget (``k(S) = n``).
    ``cardinality``: ``F = {S}`` with ``k(S) = k``.
    ``multiple_choice``: one capacity-1 set per group plus a slack ground set.
    ``partition``: groups with the given ``capacities`` plus a slack ground set.
    ``random_laminar``: random nested blocks up to ``depth`` levels with
    random capacities, each capped at ``max_capacity`` when given.

    The budget defaults to half the total cost.  The generator parameters are
    recorded in the instance metadata.
    """
    if kind not in KINDS:
        raise _bad(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    rng = random.Random(seed)
    params = {"generator": kind, "seed": seed}

    if kind in ("multiple_choice", "partition"):
        grouped = _grouped_ids(list(groups or []))
        ids = [i for g in grouped for i in g]
        n = len(ids)
        params["groups"] = [len(g) for g in grouped]
    else:
        if not isinstance(n, int) or n < 1:
            raise _bad(f"n must be a positive integer, got {n!r}")
        ids = _plain_ids(n)
    elements = _elements(rng, ids, cost_range, profit_range)

    family: list = []
    if kind == "knapsack":
        family = [FamilySet(frozenset(ids), n, "S")]
    elif kind == "cardinality":
        if k is None or k < 1:
            raise _bad("cardinality instances need k >= 1")
        family = [FamilySet(frozenset(ids), k, "S")]
        params["k"] = k
    elif kind == "multiple_choice":
        family = [FamilySet(frozenset(g), 1, group_label(i)) for i, g in enumerate(grouped)]
        family.append(FamilySet(frozenset(ids), n, "S"))
    elif kind == "partition":
        if capacities is None:
            capacities = [rng.randint(1, len(g)) for g in grouped]
        if len(capacities) != len(grouped) or any(c < 1 for c in capacities):
            raise _bad("partition instances need one positive capacity per group")
        family = [FamilySet(frozenset(g), c, group_label(i)) for i, (g, c) in enumerate(zip(grouped, capacities))]
        family.append(FamilySet(frozenset(ids), n, "S"))
        params["capacities"] = list(capacities)
    else:
        if depth < 0 or branching < 2 or (max_capacity is not None and max_capacity < 1):
            raise _bad("random_laminar needs depth >= 0, branching >= 2 and max_capacity >= 1")
        order = list(ids)
        rng.shuffle(order)
        _random_forest(rng, order, depth, branching, max_capacity, family)
        top = n if max_capacity is None else min(n, max_capacity)
        family.append(FamilySet(frozenset(ids), rng.randint(1, top), "S"))
        for i, fs in enumerate(family[:-1]):
            family[i] = FamilySet(fs.members, fs.capacity, f"X{i + 1}")
        params.update(depth=depth, branching=branching, max_capacity=max_capacity)

    if budget is None:
        budget = sum(e.cost for e in elements) // 2
    params.update(cost_range=list(cost_range), profit_range=list(profit_range))
    return make_instance(elements, family, budget, params)
