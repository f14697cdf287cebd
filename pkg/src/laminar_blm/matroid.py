"""Laminar families, laminar matroid independence, and instance restrictions.

An instance is the tuple (ground set, laminar family with capacities, costs,
profits, budget).  Instances are immutable; every operation here returns a new
instance.  The restriction operations are the building blocks of the exact
dynamic program in :mod:`laminar_blm.dp`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from .exceptions import InstanceError, ValidationError

__all__ = [
    "Element",
    "FamilySet",
    "LaminarInstance",
    "Issue",
    "ValidationReport",
    "make_instance",
    "load_instance",
    "canonicalize",
    "validate_laminar",
    "is_independent",
    "maximal_sets",
    "find_maximal_set",
    "restrict_intersection",
    "restrict_difference",
    "partitioned_instance",
]

GROUND_NAME = "S"

# table cells are int64; the total cost must fit
MAX_TOTAL_COST = 2**63 - 1


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class Element:
    """A ground-set item with integer cost and integer profit."""

    id: str
    cost: int
    profit: int

    def __post_init__(self):
        if not _is_int(self.cost) or self.cost < 0:
            raise InstanceError(f"element {self.id!r}: cost must be a non-negative integer, got {self.cost!r}", "SCHEMA")
        if not _is_int(self.profit) or self.profit < 0:
            raise InstanceError(f"element {self.id!r}: profit must be a non-negative integer, got {self.profit!r}", "SCHEMA")


@dataclass(frozen=True)
class FamilySet:
    """A member of the laminar family with its cardinality bound.

    ``name`` is cosmetic; two sets compare equal when members and capacity
    agree.  Empty sets and non-positive capacities are representable so that
    :func:`validate_laminar` can report them.
    """

    members: frozenset
    capacity: int
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        return "{" + ",".join(sorted(self.members)) + "}"

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class LaminarInstance:
    """A budgeted laminar matroid instance.

    Construct raw instances directly; use :func:`make_instance` (or
    :func:`canonicalize`) to obtain the canonical form the solvers expect,
    where the ground set is itself a family member and no member set repeats.
    """

    elements: tuple
    family: tuple
    budget: int = 0
    metadata: dict = field(default_factory=dict, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "family", tuple(self.family))
        if not _is_int(self.budget) or self.budget < 0:
            raise InstanceError(f"budget must be a non-negative integer, got {self.budget!r}", "SCHEMA")

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def by_id(self) -> dict:
        return {e.id: e for e in self.elements}

    @cached_property
    def ground(self) -> frozenset:
        return frozenset(self.by_id)

    @cached_property
    def ground_set(self) -> FamilySet | None:
        """The family member equal to the ground set, if present."""
        for fs in self.family:
            if fs.members == self.ground:
                return fs
        return None

    @property
    def root_capacity(self) -> int:
        """k(S); the ground set must be in the family."""
        if self.ground_set is None:
            raise InstanceError("ground set is not a member of the family", "MISSING_GROUND_SET")
        return self.ground_set.capacity

    @cached_property
    def parents(self) -> dict:
        """Map each member set to its minimal strict superset (``None`` at the root).

        Keys and values are member frozensets.  Relies on laminarity: after
        sorting by decreasing size, the last set seen covering an element is
        the smallest superset processed so far.
        """
        owner: dict = {}
        parents: dict = {}
        for fs in sorted(self.family, key=len, reverse=True):
            some = next(iter(fs.members), None)
            parents[fs.members] = owner.get(some)
            for e in fs.members:
                owner[e] = fs.members
        return parents

    def cost_of(self, ids: Iterable[str]) -> int:
        return sum(self.by_id[i].cost for i in ids)

    def profit_of(self, ids: Iterable[str]) -> int:
        return sum(self.by_id[i].profit for i in ids)

    def with_profits(self, profits: Mapping[str, int]) -> "LaminarInstance":
        elements = [Element(e.id, e.cost, profits[e.id]) for e in self.elements]
        return LaminarInstance(elements, self.family, self.budget, dict(self.metadata))


@dataclass(frozen=True)
class Issue:
    """One violated condition found by :func:`validate_laminar`."""

    code: str
    message: str
    sets: tuple = ()
    element: str | None = None

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.issues

    def __bool__(self) -> bool:
        return self.ok

    def codes(self) -> list:
        return [issue.code for issue in self.issues]

    def raise_for_issues(self) -> None:
        if self.issues:
            raise ValidationError(self)


def canonicalize(instance: LaminarInstance) -> LaminarInstance:
    """Merge duplicate member sets (keeping the minimum capacity) and add the ground set.

    A missing ground set is added with capacity ``|S|``, which constrains
    nothing.  Empty member sets are dropped.
    """
    merged: dict = {}
    for fs in instance.family:
        if not fs.members:
            continue
        prev = merged.get(fs.members)
        if prev is None or fs.capacity < prev.capacity:
            name = prev.name if prev is not None else fs.name
            merged[fs.members] = FamilySet(fs.members, fs.capacity, name)
    ground = instance.ground
    if ground and ground not in merged:
        merged[ground] = FamilySet(ground, len(ground), GROUND_NAME)
    return LaminarInstance(instance.elements, tuple(merged.values()), instance.budget, dict(instance.metadata))


# raw-input issues that canonicalization repairs
REPAIRED_ON_LOAD = frozenset({"DUPLICATE_SET", "MISSING_GROUND_SET"})


def load_instance(raw: LaminarInstance) -> LaminarInstance:
    """Validate a raw instance, then return its canonical form.

    Duplicate sets and a missing ground set are repaired silently; every other
    issue raises :class:`ValidationError`.
    """
    report = validate_laminar(raw)
    blocking = tuple(i for i in report.issues if i.code not in REPAIRED_ON_LOAD)
    if blocking:
        raise ValidationError(ValidationReport(blocking))
    inst = canonicalize(raw)
    validate_laminar(inst).raise_for_issues()
    return inst


def make_instance(
    elements: Iterable,
    family: Iterable = (),
    budget: int = 0,
    metadata: Mapping | None = None,
) -> LaminarInstance:
    """Build a canonical, validated instance.

    Elements may be :class:`Element` objects or ``(id, cost, profit)`` tuples;
    family sets may be :class:`FamilySet` objects or ``(members, capacity)``
    tuples.

    >>> inst = make_instance([("a", 1, 2), ("b", 3, 4)], [({"a"}, 1)], budget=3)
    >>> inst.root_capacity
    2
    """
    elems = [e if isinstance(e, Element) else Element(*e) for e in elements]
    sets = [fs if isinstance(fs, FamilySet) else FamilySet(*fs) for fs in family]
    return load_instance(LaminarInstance(elems, sets, budget, dict(metadata or {})))


def validate_laminar(instance: LaminarInstance) -> ValidationReport:
    """Check every structural invariant of an instance and report all violations."""
    issues = []
    seen_ids: set = set()
    for e in instance.elements:
        if e.id in seen_ids:
            issues.append(Issue("DUPLICATE_ELEMENT", f"element id {e.id!r} appears more than once", element=e.id))
        seen_ids.add(e.id)

    total_cost = sum(e.cost for e in instance.elements)
    if total_cost > MAX_TOTAL_COST:
        issues.append(Issue("COST_OVERFLOW", f"total element cost {total_cost} exceeds {MAX_TOTAL_COST}"))

    ground = instance.ground
    family = instance.family
    for fs in family:
        if not fs.members:
            issues.append(Issue("EMPTY_SET", f"family set {fs.label} is empty", (fs.label,)))
        if not _is_int(fs.capacity) or fs.capacity < 1:
            issues.append(
                Issue("NONPOSITIVE_CAPACITY", f"family set {fs.label} has capacity {fs.capacity!r}", (fs.label,))
            )
        for eid in sorted(fs.members - ground):
            issues.append(
                Issue("UNKNOWN_ELEMENT", f"family set {fs.label} references unknown element {eid!r}", (fs.label,), eid)
            )

    for i, x in enumerate(family):
        for y in family[i + 1:]:
            common = x.members & y.members
            if x.members == y.members:
                issues.append(
                    Issue("DUPLICATE_SET", f"family sets {x.label} and {y.label} are identical", (x.label, y.label))
                )
            elif common and common != x.members and common != y.members:
                issues.append(
                    Issue(
                        "NON_LAMINAR_PAIR",
                        f"family sets {x.label} and {y.label} overlap without nesting",
                        (x.label, y.label),
                    )
                )

    if ground and not any(fs.members == ground for fs in family):
        issues.append(Issue("MISSING_GROUND_SET", "the ground set is not a member of the family"))
    return ValidationReport(tuple(issues))


def is_independent(instance: LaminarInstance, candidate: Iterable[str]) -> bool:
    """True iff ``|candidate ∩ X| <= k(X)`` for every family set ``X``."""
    ids = frozenset(candidate)
    unknown = ids - instance.ground
    if unknown:
        raise InstanceError(f"unknown element ids: {sorted(unknown)}", "UNKNOWN_ELEMENT", ids=sorted(unknown))
    return all(len(ids & fs.members) <= fs.capacity for fs in instance.family)


def _tie_key(fs: FamilySet):
    return min(fs.members)


def maximal_sets(instance: LaminarInstance) -> list:
    """All maximal members of ``F \\ {S}``, least smallest-member-id first."""
    ground = instance.ground
    parents = instance.parents
    found = [fs for fs in instance.family if fs.members != ground and parents.get(fs.members) == ground]
    return sorted(found, key=_tie_key)


def find_maximal_set(
    instance: LaminarInstance,
    choose: Callable[[Sequence[FamilySet]], FamilySet] | None = None,
) -> FamilySet:
    """Return a maximal set of ``F \\ {S}``.

    By default the maximal set whose smallest member id is least wins;
    ``choose`` may pick any other one from the sorted candidate list.
    """
    candidates = maximal_sets(instance)
    if not candidates:
        raise InstanceError("family has no set other than the ground set", "NO_PROPER_SET")
    return candidates[0] if choose is None else choose(candidates)


def _check_maximal(instance: LaminarInstance, x: FamilySet) -> None:
    if x.members == instance.ground:
        raise InstanceError("cannot restrict by the ground set itself", "EMPTY_REMAINDER")
    if x.members not in instance.parents:
        raise InstanceError(f"{x.label} is not a member of the family", "NOT_A_MEMBER")
    if instance.parents[x.members] != instance.ground:
        raise InstanceError(f"{x.label} is not a maximal set", "NOT_MAXIMAL")


def restrict_intersection(instance: LaminarInstance, x: FamilySet) -> LaminarInstance:
    """The instance restricted to the maximal set ``x``: family sets inside ``x``, ``x`` as new ground."""
    _check_maximal(instance, x)
    members = x.members
    elements = [e for e in instance.elements if e.id in members]
    family = [fs for fs in instance.family if fs.members <= members]
    return LaminarInstance(elements, family, instance.budget)


def restrict_difference(instance: LaminarInstance, x: FamilySet) -> LaminarInstance:
    """The instance restricted to ``S \\ x``.

    The remainder becomes the new ground set.  It keeps its own capacity if it
    already is a family member and inherits ``k(S)`` otherwise.
    """
    _check_maximal(instance, x)
    rest = instance.ground - x.members
    elements = [e for e in instance.elements if e.id in rest]
    family = [fs for fs in instance.family if fs.members <= rest]
    if not any(fs.members == rest for fs in family):
        root = instance.ground_set
        family.append(FamilySet(rest, root.capacity, root.name))
    return LaminarInstance(elements, family, instance.budget)


def partitioned_instance(instance: LaminarInstance) -> LaminarInstance:
    """Add a balanced two-way partition of ``S`` to a single-set family.

    Elements are ordered by id; the first ``ceil(|S|/2)`` form one part.  Both
    parts get capacity ``k(S)``, so the independent sets are unchanged.
    """
    if len(instance.family) != 1 or len(instance) <= 1:
        raise InstanceError(
            "partitioning needs a single-set family over more than one element",
            "PRECONDITION",
        )
    k = instance.root_capacity
    ids = sorted(instance.ground)
    half = math.ceil(len(ids) / 2)
    name = instance.family[0].name or GROUND_NAME
    first = FamilySet(ids[:half], k, f"{name}/1")
    second = FamilySet(ids[half:], k, f"{name}/2")
    return LaminarInstance(instance.elements, (first, second, instance.family[0]), instance.budget)
