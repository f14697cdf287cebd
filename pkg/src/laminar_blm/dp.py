"""Exact pseudo-polynomial dynamic program over the laminar decomposition.

``compute_dp`` builds, for an instance, the table mapping (cardinality q,
profit t) to the minimum cost of an independent set with exactly q elements
and profit exactly t.  Instances are decomposed recursively: a single element
is a base case, a single-set family is first split into two halves of equal
capacity, and otherwise the instance is split on a maximal family set and the
two child tables are combined by a min-plus convolution.

The whole decomposition tree is kept so that any finite cell can be traced
back to a witness set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np
from numba import njit

from .exceptions import InstanceError, UnreachableCellError
from .matroid import (
    FamilySet,
    LaminarInstance,
    find_maximal_set,
    partitioned_instance,
    restrict_difference,
    restrict_intersection,
)

__all__ = [
    "UNREACHABLE",
    "DpTable",
    "NodeKind",
    "DecompositionNode",
    "Solution",
    "profit_bound",
    "singleton_table",
    "convolve",
    "compute_dp",
    "backtrack",
    "best_feasible",
]


class _Unreachable:
    """Cost of a (q, t) cell that no independent set attains.

    Absorbs addition and compares greater than every integer, so ``min`` over
    mixed values behaves like a minimum over extended naturals.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNREACHABLE"

    def __add__(self, other):
        if isinstance(other, (int, _Unreachable)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("UNREACHABLE")

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()

_INT64_MAX = int(np.iinfo(np.int64).max)


class DpTable:
    """Dense (q, t) -> minimum cost table for one sub-instance.

    ``q_max`` is the size of the sub-instance.  Only rows ``0..min(k, q_max)``
    and columns ``0..profit_cap`` are stored; every cell outside the stored
    block is UNREACHABLE.  Storage is a pair of arrays: ``cost`` (int64) and a
    boolean ``reach`` mask that marks finite cells; the cost of an unreachable
    cell is meaningless.
    """

    __slots__ = ("q_max", "cost", "reach")

    def __init__(self, q_max: int, cost: np.ndarray, reach: np.ndarray):
        if cost.shape != reach.shape or cost.ndim != 2:
            raise ValueError("cost and reach arrays must share a 2-D shape")
        self.q_max = q_max
        self.cost = cost
        self.reach = reach

    @classmethod
    def unreachable(cls, q_max: int, rows: int, profit_cap: int) -> "DpTable":
        shape = (rows, profit_cap + 1)
        return cls(q_max, np.zeros(shape, dtype=np.int64), np.zeros(shape, dtype=np.bool_))

    @property
    def rows(self) -> int:
        return self.cost.shape[0]

    @property
    def profit_cap(self) -> int:
        return self.cost.shape[1] - 1

    @property
    def n_cells(self) -> int:
        return self.cost.size

    def __getitem__(self, key):
        q, t = key
        if 0 <= q < self.rows and 0 <= t <= self.profit_cap and self.reach[q, t]:
            return int(self.cost[q, t])
        return UNREACHABLE

    def finite_cells(self) -> dict:
        qs, ts = np.nonzero(self.reach)
        return {(int(q), int(t)): int(self.cost[q, t]) for q, t in zip(qs, ts)}

    def __eq__(self, other):
        if not isinstance(other, DpTable):
            return NotImplemented
        return self.q_max == other.q_max and self.finite_cells() == other.finite_cells()

    __hash__ = None

    def __repr__(self):
        return f"DpTable(q_max={self.q_max}, rows={self.rows}, profit_cap={self.profit_cap}, finite={int(self.reach.sum())})"


class NodeKind(enum.Enum):
    EMPTY = "empty"
    SINGLETON = "singleton"
    PARTITION = "partition"
    SPLIT = "split"


@dataclass(eq=False)
class DecompositionNode:
    """One call of the recursive decomposition, with the table it produced.

    ``children`` holds one node for PARTITION (the partitioned instance) and
    two for SPLIT (restriction to the split set, then to its complement).
    ``calls`` is filled on the root only: the number of recursive invocations
    it took to build the tree.
    """

    instance: LaminarInstance
    kind: NodeKind | None = None
    table: DpTable | None = None
    element: str | None = None
    split: FamilySet | None = None
    children: tuple = ()
    calls: int = 0

    def iter_nodes(self) -> Iterator["DecompositionNode"]:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    @property
    def n_nodes(self) -> int:
        return sum(1 for _ in self.iter_nodes())

    @property
    def leaves(self) -> list:
        return [n.element for n in self.iter_nodes() if n.kind is NodeKind.SINGLETON]


@dataclass(frozen=True)
class Solution:
    """A set of element ids with its total cost and profit."""

    ids: frozenset
    cost: int
    profit: int
    diagnostics: object = field(default=None, compare=False)

    @classmethod
    def from_ids(cls, instance: LaminarInstance, ids, diagnostics=None) -> "Solution":
        ids = frozenset(ids)
        return cls(ids, instance.cost_of(ids), instance.profit_of(ids), diagnostics)

    def __len__(self):
        return len(self.ids)


def profit_bound(instance: LaminarInstance) -> int:
    """Largest profit any independent set of ``instance`` can have.

    Sum of the ``min(k(S), |S|)`` largest profits; the table's t axis stops here.
    """
    if not instance.elements:
        return 0
    take = min(instance.root_capacity, len(instance))
    return sum(sorted((e.profit for e in instance.elements), reverse=True)[:take])


def singleton_table(element) -> DpTable:
    table = DpTable.unreachable(1, 2, element.profit)
    table.reach[0, 0] = True
    table.cost[1, element.profit] = element.cost
    table.reach[1, element.profit] = True
    return table


@njit(cache=True, nogil=True)
def _row_index(reach):
    rows, width = reach.shape
    starts = np.zeros(rows + 1, dtype=np.int64)
    for q in range(rows):
        starts[q + 1] = starts[q] + reach[q].sum()
    idx = np.empty(starts[rows], dtype=np.int64)
    for q in range(rows):
        pos = starts[q]
        for t in range(width):
            if reach[q, t]:
                idx[pos] = t
                pos += 1
    return starts, idx


@njit(cache=True, nogil=True)
def _minplus(lcost, lreach, rcost, rreach, rows, width):
    out_cost = np.zeros((rows, width), dtype=np.int64)
    out_reach = np.zeros((rows, width), dtype=np.bool_)
    lstart, lidx = _row_index(lreach)
    rstart, ridx = _row_index(rreach)
    lrows = min(lcost.shape[0], rows)
    for q1 in range(lrows):
        for i in range(lstart[q1], lstart[q1 + 1]):
            t1 = lidx[i]
            a = lcost[q1, t1]
            q2_end = min(rcost.shape[0], rows - q1)
            for q2 in range(q2_end):
                q = q1 + q2
                for j in range(rstart[q2], rstart[q2 + 1]):
                    t = t1 + ridx[j]
                    if t >= width:
                        break
                    c = a + rcost[q2, ridx[j]]
                    if not out_reach[q, t] or c < out_cost[q, t]:
                        out_cost[q, t] = c
                        out_reach[q, t] = True
    return out_cost, out_reach


def convolve(left: DpTable, right: DpTable, cap: int, q_out: int, t_out: int) -> DpTable:
    """Min-plus combination of the tables of two disjoint sub-instances.

    ``result[q][t] = min over q1+q2=q, t1+t2=t of left[q1][t1] + right[q2][t2]``
    for ``q <= cap``; rows above ``cap`` are UNREACHABLE.  Combinations whose
    profit exceeds ``t_out`` are dropped, so ``t_out`` must bound the profit of
    every independent set of the parent.
    """
    if q_out < left.q_max + right.q_max:
        raise InstanceError(
            f"output axis q_out={q_out} cannot hold {left.q_max}+{right.q_max} elements",
            "AXIS_MISMATCH",
        )
    if cap < 0 or t_out < 0:
        raise InstanceError("cap and t_out must be non-negative", "AXIS_MISMATCH")
    rows = min(cap, q_out) + 1
    cost, reach = _minplus(left.cost, left.reach, right.cost, right.reach, rows, t_out + 1)
    return DpTable(q_out, cost, reach)


def compute_dp(
    instance: LaminarInstance,
    choose: Callable[[Sequence[FamilySet]], FamilySet] | None = None,
) -> DecompositionNode:
    """Build the decomposition tree of a canonical instance and fill every table.

    ``choose`` selects the split set among the maximal sets (see
    :func:`~laminar_blm.matroid.find_maximal_set`); the resulting root table
    does not depend on it.  The recursion is unrolled onto an explicit stack,
    so deep families do not hit the interpreter's recursion limit.
    """
    root = DecompositionNode(instance)
    if not instance.elements:
        root.kind = NodeKind.EMPTY
        root.table = DpTable.unreachable(0, 1, 0)
        root.table.reach[0, 0] = True
        root.calls = 1
        return root

    preorder = []
    stack = [root]
    while stack:
        node = stack.pop()
        preorder.append(node)
        inst = node.instance
        if len(inst) == 1:
            node.kind = NodeKind.SINGLETON
            node.element = inst.elements[0].id
        elif len(inst.family) == 1:
            node.kind = NodeKind.PARTITION
            node.children = (DecompositionNode(partitioned_instance(inst)),)
        else:
            x = find_maximal_set(inst, choose)
            node.kind = NodeKind.SPLIT
            node.split = x
            node.children = (
                DecompositionNode(restrict_intersection(inst, x)),
                DecompositionNode(restrict_difference(inst, x)),
            )
        stack.extend(node.children)

    for node in reversed(preorder):
        inst = node.instance
        if node.kind is NodeKind.SINGLETON:
            node.table = singleton_table(inst.elements[0])
        elif node.kind is NodeKind.PARTITION:
            # identical independent sets, hence the identical table
            node.table = node.children[0].table
        else:
            left, right = node.children
            node.table = convolve(left.table, right.table, inst.root_capacity, len(inst), profit_bound(inst))
    root.calls = len(preorder)
    return root


def _split_point(node: DecompositionNode, q: int, t: int, target: int):
    left, right = (child.table for child in node.children)
    for q1 in range(min(q, left.rows - 1) + 1):
        q2 = q - q1
        if q2 >= right.rows:
            continue
        lo = max(0, t - right.profit_cap)
        hi = min(t, left.profit_cap)
        if lo > hi:
            continue
        a_cost = left.cost[q1, lo:hi + 1]
        a_reach = left.reach[q1, lo:hi + 1]
        # right column index t - t1 for t1 = lo..hi, i.e. descending
        b_cost = right.cost[q2, t - hi:t - lo + 1][::-1]
        b_reach = right.reach[q2, t - hi:t - lo + 1][::-1]
        hit = np.flatnonzero(a_reach & b_reach & (a_cost + b_cost == target))
        if hit.size:
            t1 = lo + int(hit[0])
            return q1, t1, q2, t - t1
    raise AssertionError(f"no split reproduces cell ({q}, {t})")


def backtrack(root: DecompositionNode, q: int, t: int) -> Solution:
    """Recover a minimum-cost independent set with ``|Q| = q`` and ``p(Q) = t``.

    At every SPLIT node the first ``(q1, t1)`` in lexicographic order whose
    children cells sum to the parent cell is followed.
    """
    value = root.table[q, t]
    if value is UNREACHABLE:
        raise UnreachableCellError(f"cell ({q}, {t}) is unreachable")
    ids = []
    stack = [(root, q, t)]
    while stack:
        node, q, t = stack.pop()
        if q == 0:
            continue
        if node.kind is NodeKind.SINGLETON:
            ids.append(node.element)
        elif node.kind is NodeKind.PARTITION:
            stack.append((node.children[0], q, t))
        else:
            q1, t1, q2, t2 = _split_point(node, q, t, int(node.table.cost[q, t]))
            left, right = node.children
            stack.append((left, q1, t1))
            stack.append((right, q2, t2))
    return Solution.from_ids(root.instance, ids)


def best_feasible(root, budget: int):
    """The (q, t) of maximum profit t whose cost fits ``budget``; smaller q on ties.

    Accepts a :class:`DecompositionNode` or a bare :class:`DpTable`.  Returns
    ``None`` only when no cell qualifies.
    """
    table = root.table if isinstance(root, DecompositionNode) else root
    ok = table.reach & (table.cost <= min(budget, _INT64_MAX))
    columns = np.flatnonzero(ok.any(axis=0))
    if columns.size == 0:
        return None
    t = int(columns[-1])
    q = int(np.flatnonzero(ok[:, t])[0])
    return q, t
