"""Shared fixtures-by-hand for the test modules: instance makers and tiny reference solvers."""

from __future__ import annotations

import itertools
import random

from laminar_blm import make_instance


def random_laminar(rng: random.Random, n: int, values=(0, 8), budget=None, max_depth=3):
    """Small random canonical instance with a random laminar family.

    Built independently of the package generator: blocks are carved out of a
    shuffled id list, each kept with probability 0.6, capacities in
    ``1..|X|+1`` so slack sets occur too.
    """
    ids = [f"x{i}" for i in range(n)]
    rng.shuffle(ids)
    family = []

    def carve(block, depth):
        if len(block) < 2 or depth >= max_depth:
            return
        cuts = sorted(rng.sample(range(1, len(block)), rng.randint(1, min(2, len(block) - 1))))
        bounds = [0, *cuts, len(block)]
        for lo, hi in itertools.pairwise(bounds):
            part = block[lo:hi]
            if rng.random() < 0.6:
                family.append((set(part), rng.randint(1, len(part) + 1)))
            carve(part, depth + 1)

    carve(ids, 0)
    if n and rng.random() < 0.8:
        family.append((set(ids), rng.randint(1, n + 1)))
    elements = [(i, rng.randint(*values), rng.randint(*values)) for i in sorted(ids)]
    if budget is None:
        budget = rng.randint(0, sum(c for _, c, _ in elements))
    return make_instance(elements, family, budget)


def all_subsets(ids):
    ids = sorted(ids)
    for r in range(len(ids) + 1):
        yield from (frozenset(c) for c in itertools.combinations(ids, r))


def independent_by_counting(instance, subset) -> bool:
    for fs in instance.family:
        hits = 0
        for e in subset:
            if e in fs.members:
                hits += 1
        if hits > fs.capacity:
            return False
    return True


def independent_family(instance):
    return {q for q in all_subsets(instance.ground) if independent_by_counting(instance, q)}


def knapsack_01(costs, profits, budget) -> int:
    """Textbook 0/1 knapsack over capacities 0..budget."""
    best = [0] * (budget + 1)
    for c, p in zip(costs, profits):
        for w in range(budget, c - 1, -1):
            best[w] = max(best[w], best[w - c] + p)
    return best[budget]


# one "PASS/FAIL criterion N ..." line per acceptance check, printed at session end
ACCEPTANCE_LINES: list = []


def verdict(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number} ({title}): {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
