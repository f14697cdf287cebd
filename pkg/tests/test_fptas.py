import itertools
import random
import warnings
from decimal import Decimal
from fractions import Fraction

import pytest

from _support import random_laminar
from laminar_blm import (
    InstanceError,
    enumerate_opt,
    is_independent,
    make_instance,
    preprocess,
    round_profits,
    solve,
    solve_exact,
)
from laminar_blm.fptas import as_fraction


class TestAsFraction:
    @pytest.mark.parametrize("value", ["0.1", 0.1, Decimal("0.1"), Fraction(1, 10), " 0.1 "])
    def test_tenth(self, value):
        assert as_fraction(value) == Fraction(1, 10)

    def test_bad_string(self):
        with pytest.raises(InstanceError) as info:
            as_fraction("tenth")
        assert info.value.code == "BAD_EPSILON"


class TestRounding:
    def test_worked_example(self):
        inst = make_instance([("a", 1, 100), ("b", 1, 30), ("c", 1, 0), ("d", 1, 12)])
        rounded, ctx = round_profits(inst, "0.5")
        assert ctx.alpha == Fraction(25, 2)
        assert ctx.rounded_profits == {"a": 8, "b": 2, "c": 0, "d": 0}
        assert rounded.by_id["a"].profit == 8
        assert ctx.original_profits["b"] == 30

    def test_small_alpha_may_inflate(self):
        inst = make_instance([("a", 1, 3), ("b", 1, 2)])
        _, ctx = round_profits(inst, "0.1")
        assert ctx.alpha < 1
        for e, p in ctx.original_profits.items():
            pbar = ctx.rounded_profits[e]
            assert ctx.alpha * pbar <= p < ctx.alpha * (pbar + 1)

    @pytest.mark.parametrize("eps", ["0", "-0.5"])
    def test_nonpositive_epsilon(self, eps):
        with pytest.raises(InstanceError) as info:
            round_profits(make_instance([("a", 1, 1)]), eps)
        assert info.value.code == "ZERO_EPSILON"

    @pytest.mark.parametrize("seed", range(40))
    @pytest.mark.parametrize("eps", ["0.5", "0.1", "0.01", "1/3"])
    def test_invariants_and_subset_loss(self, seed, eps):
        rng = random.Random(seed)
        n = rng.randint(1, 10)
        inst = random_laminar(rng, n, values=(0, 1000))
        if max(e.profit for e in inst.elements) == 0:
            return
        _, ctx = round_profits(inst, eps)
        alpha = ctx.alpha
        for e, p in ctx.original_profits.items():
            pbar = ctx.rounded_profits[e]
            assert alpha * pbar <= p < alpha * (pbar + 1)
        assert ctx.max_rounded <= int(n / Fraction(eps))
        ids = sorted(ctx.original_profits)
        for r in range(len(ids) + 1):
            for subset in itertools.islice(itertools.combinations(ids, r), 20):
                p = sum(ctx.original_profits[i] for i in subset)
                pbar = sum(ctx.rounded_profits[i] for i in subset)
                assert alpha * pbar >= p - n * alpha


class TestPreprocess:
    def test_drops_expensive(self):
        inst = make_instance([("a", 3, 1), ("b", 9, 1)], [({"b"}, 1)], budget=5)
        out = preprocess(inst)
        assert out.ground == {"a"}
        assert [fs.members for fs in out.family] == [frozenset("a")]

    def test_noop_returns_same_object(self):
        inst = make_instance([("a", 3, 1)], budget=5)
        assert preprocess(inst) is inst

    @pytest.mark.parametrize("seed", range(40))
    def test_opt_unchanged(self, seed):
        rng = random.Random(seed)
        inst = random_laminar(rng, rng.randint(1, 8), budget=rng.randint(0, 10))
        assert enumerate_opt(preprocess(inst)).profit == enumerate_opt(inst).profit


class TestSolve:
    def test_single_element(self):
        sol = solve(make_instance([("a", 2, 9)], budget=2), "0.1")
        assert sol.ids == {"a"} and sol.profit == 9

    def test_budget_zero(self):
        sol = solve(make_instance([("a", 2, 9), ("b", 1, 1)], budget=0), "0.1")
        assert sol.ids == frozenset() and sol.profit == 0

    def test_zero_profits(self):
        sol = solve(make_instance([("a", 2, 0), ("b", 1, 0)], budget=5), "0.1")
        assert sol.profit == 0 and sol.diagnostics.rounded_profit == 0

    def test_large_epsilon_warns(self):
        inst = make_instance([("a", 2, 9)], budget=2)
        with pytest.warns(UserWarning, match="vacuous"):
            sol = solve(inst, 2)
        assert is_independent(inst, sol.ids) and sol.cost <= inst.budget

    def test_small_epsilon_silent(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            solve(make_instance([("a", 2, 9)], budget=2), "0.5")

    def test_zero_epsilon(self):
        with pytest.raises(InstanceError) as info:
            solve(make_instance([("a", 2, 9)], budget=2), 0)
        assert info.value.code == "ZERO_EPSILON"

    def test_diagnostics(self):
        inst = make_instance([("a", 1, 100), ("b", 1, 30), ("c", 1, 0), ("d", 1, 12)], budget=2)
        diag = solve(inst, "0.5").diagnostics
        assert diag.alpha == Fraction(25, 2)
        assert diag.rounded_profit == 10
        assert diag.opt_upper_bound == Fraction(25, 2) * 14
        assert diag.recursive_calls <= 12

    @pytest.mark.parametrize("seed", range(60))
    @pytest.mark.parametrize("eps", ["0.5", "0.1", "0.01"])
    def test_guarantee(self, seed, eps):
        rng = random.Random(seed)
        inst = random_laminar(rng, rng.randint(1, 9), values=(0, 50))
        opt = enumerate_opt(inst).profit
        sol = solve(inst, eps)
        assert sol.profit >= (1 - Fraction(eps)) * opt
        assert is_independent(inst, sol.ids) and sol.cost <= inst.budget
        assert sol.profit <= opt <= sol.diagnostics.opt_upper_bound

    @pytest.mark.parametrize("seed", range(30))
    def test_rounded_profit_is_rounded_opt(self, seed):
        rng = random.Random(seed)
        inst = random_laminar(rng, rng.randint(1, 8), values=(0, 50))
        work = preprocess(inst)
        if not work.elements or max(e.profit for e in work.elements) == 0:
            return
        rounded, _ = round_profits(work, "0.25")
        assert solve(inst, "0.25").diagnostics.rounded_profit == enumerate_opt(rounded).profit

    @pytest.mark.parametrize("seed", range(40))
    def test_exact_matches_oracle(self, seed):
        rng = random.Random(seed)
        inst = random_laminar(rng, rng.randint(0, 10))
        sol = solve_exact(inst)
        assert sol.profit == enumerate_opt(inst).profit
        assert is_independent(inst, sol.ids) and sol.cost <= inst.budget
