"""Brute-force reference solvers.

Both functions enumerate every subset of the ground set with a binary counter
over the elements sorted by id.  They are meant to be obviously correct, not
fast, and refuse instances above ``limit`` elements.
"""

from __future__ import annotations

from .dp import DpTable, Solution
from .exceptions import OracleLimitError
from .matroid import LaminarInstance

DEFAULT_LIMIT = 20


def _subsets(instance: LaminarInstance, limit: int):
    """Yield ``(ids, size, cost, profit)`` for every independent subset."""
    n = len(instance)
    if n > limit:
        raise OracleLimitError(f"{n} elements exceed the enumeration limit {limit}", n=n, limit=limit)
    elems = sorted(instance.elements, key=lambda e: e.id)
    bit = {e.id: 1 << i for i, e in enumerate(elems)}
    constraints = [(sum(bit[i] for i in fs.members), fs.capacity) for fs in instance.family]
    for mask in range(1 << n):
        if any((mask & members).bit_count() > cap for members, cap in constraints):
            continue
        chosen = [e for i, e in enumerate(elems) if mask >> i & 1]
        yield (
            tuple(e.id for e in chosen),
            len(chosen),
            sum(e.cost for e in chosen),
            sum(e.profit for e in chosen),
        )


def enumerate_opt(instance: LaminarInstance, limit: int = DEFAULT_LIMIT) -> Solution:
    """Maximum-profit independent set within budget.

    Ties go to the smaller cost, then to the lexicographically smaller sorted
    id tuple.
    """
    best = None
    best_key = None
    for ids, _, cost, profit in _subsets(instance, limit):
        if cost > instance.budget:
            continue
        key = (-profit, cost, ids)
        if best_key is None or key < best_key:
            best, best_key = ids, key
    return Solution.from_ids(instance, best)


def enumerate_table(instance: LaminarInstance, limit: int = DEFAULT_LIMIT) -> DpTable:
    """The (cardinality, profit) -> minimum cost table, by grouping all independent subsets."""
    cells: dict = {}
    for _, size, cost, profit in _subsets(instance, limit):
        key = (size, profit)
        if key not in cells or cost < cells[key]:
            cells[key] = cost
    rows = max(q for q, _ in cells) + 1
    width = max(t for _, t in cells) + 1
    table = DpTable.unreachable(len(instance), rows, width - 1)
    for (q, t), cost in cells.items():
        table.cost[q, t] = cost
        table.reach[q, t] = True
    return table
