"""Densities, elementary operations, flow maps, and mixing windows."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from booksort import (
    AlternatingSeries,
    BinaryDensity,
    ElementaryOp,
    FlowMap,
    OperationRejectedError,
    PlanError,
    SortingPlan,
    apply_elementary,
    density_to_series,
    flow_map_apply,
    flow_map_cost,
    is_kappa_mixed,
    mass_bounds_check,
    prefix_mass,
    proof_lower_bound,
    series_plan_to_sorting_plan,
    series_to_density,
    terminal_density,
    total_mass,
    validate_plan,
)
from conftest import WORKED_A, WORKED_B

F = Fraction


def alternating_density(blocks: int) -> BinaryDensity:
    """blocks white runs and blocks black runs of equal width, white first."""
    width = F(1, 2 * blocks)
    runs = []
    for _ in range(blocks):
        runs.append((1, width))
        runs.append((0, width))
    return BinaryDensity.from_runs(runs)


def run_lengths_strategy():
    return st.lists(st.integers(min_value=1, max_value=8), min_size=2, max_size=10)


def density_from_lengths(lengths, first_value):
    total = sum(lengths)
    runs = []
    value = first_value
    for length in lengths:
        runs.append((value, F(length, total)))
        value = 1 - value
    return BinaryDensity.from_runs(runs)


class TestMass:
    def test_zero_function(self):
        assert total_mass(terminal_density(0)) == 0

    def test_half_split(self):
        rho = BinaryDensity.from_runs([(1, F(1, 2)), (0, F(1, 2))])
        assert total_mass(rho) == F(1, 2)

    def test_alternating_eight_blocks(self):
        # four white blocks of width 1/8 each
        assert total_mass(alternating_density(4)) == F(1, 2)


class TestTerminalDensity:
    def test_half(self):
        rho = terminal_density(F(1, 2))
        assert rho.breakpoints == (0, F(1, 2), 1)
        assert rho.values == (0, 1)

    def test_empty_white(self):
        rho = terminal_density(0)
        assert rho.values == (0,)

    def test_third(self):
        rho = terminal_density(F(1, 3))
        assert rho.breakpoints == (0, F(2, 3), 1)
        assert rho.values == (0, 1)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            terminal_density(F(3, 2))


class TestApplyElementary:
    def test_full_swap(self):
        rho = BinaryDensity.from_runs([(1, F(1, 2)), (0, F(1, 2))])
        out, cost = apply_elementary(rho, ElementaryOp(0, F(1, 2), F(1, 2)))
        assert cost == 1
        assert out == terminal_density(F(1, 2))

    def test_quarter_blocks(self):
        rho = BinaryDensity.from_runs([(1, F(1, 4)), (0, F(1, 4)), (1, F(1, 2))])
        out, cost = apply_elementary(rho, ElementaryOp(0, F(1, 4), F(1, 4)))
        assert cost == F(1, 2)
        assert out == BinaryDensity.from_runs([(0, F(1, 4)), (1, F(3, 4))])

    def test_pattern_mismatch_rejected(self):
        rho = BinaryDensity.from_runs([(0, F(1, 2)), (1, F(1, 2))])
        with pytest.raises(OperationRejectedError) as err:
            apply_elementary(rho, ElementaryOp(0, F(1, 4), F(1, 4)))
        assert err.value.expected == 1
        assert err.value.lo == 0
        assert err.value.hi == F(1, 4)

    def test_partial_overlap_rejected(self):
        # white run too short for the requested a
        rho = BinaryDensity.from_runs([(1, F(1, 8)), (0, F(7, 8))])
        with pytest.raises(OperationRejectedError):
            apply_elementary(rho, ElementaryOp(0, F(1, 4), F(1, 4)))

    def test_mass_conserved_on_worked_example(self, worked_plan):
        plan = series_plan_to_sorting_plan(worked_plan)
        state = plan.initial
        m = total_mass(state)
        for op in plan.ops:
            state, _ = apply_elementary(state, op)
            assert total_mass(state) == m


class TestValidatePlan:
    def test_empty_plan_on_sorted_density(self):
        rho = terminal_density(F(1, 2))
        assert validate_plan(SortingPlan(rho, ())) == 0

    def test_worked_example_normalized(self, worked_plan):
        plan = series_plan_to_sorting_plan(worked_plan)
        assert validate_plan(plan) == F(142, 84)

    def test_unsorted_final_state(self):
        rho = BinaryDensity.from_runs([(1, F(1, 2)), (0, F(1, 2))])
        with pytest.raises(PlanError):
            validate_plan(SortingPlan(rho, ()))

    def test_inapplicable_op_reports_step(self):
        rho = BinaryDensity.from_runs([(1, F(1, 2)), (0, F(1, 2))])
        bad = SortingPlan(rho, (ElementaryOp(F(1, 2), F(1, 4), F(1, 4)),))
        with pytest.raises(PlanError) as err:
            validate_plan(bad)
        assert err.value.step == 1


class TestFlowMap:
    def test_moves_white_right(self):
        flow = FlowMap(ElementaryOp(0, F(1, 2), F(1, 2)))
        assert flow_map_apply(flow, F(1, 4)) == F(3, 4)

    def test_moves_black_left(self):
        flow = FlowMap(ElementaryOp(0, F(1, 2), F(1, 2)))
        assert flow_map_apply(flow, F(3, 4)) == F(1, 4)

    def test_identity_outside_window(self):
        flow = FlowMap(ElementaryOp(F(1, 4), F(1, 8), F(1, 8)))
        assert flow_map_apply(flow, 0) == 0

    def test_rejects_outside_domain(self):
        flow = FlowMap(ElementaryOp(0, F(1, 2), F(1, 2)))
        with pytest.raises(ValueError):
            flow_map_apply(flow, 1)

    def test_cost_full_interval(self):
        assert flow_map_cost(FlowMap(ElementaryOp(0, F(1, 2), F(1, 2)))) == 1

    def test_cost_third(self):
        assert flow_map_cost(FlowMap(ElementaryOp(F(1, 3), F(1, 6), F(1, 6)))) == F(1, 3)

    def test_cost_worked_example_step(self):
        op = ElementaryOp(0, F(12, 84), F(5, 84))
        assert flow_map_cost(FlowMap(op)) == F(17, 84)

    def test_matches_apply_cost(self):
        rho = BinaryDensity.from_runs([(1, F(1, 4)), (0, F(3, 4))])
        op = ElementaryOp(0, F(1, 4), F(1, 2))
        _, cost = apply_elementary(rho, op)
        assert cost == flow_map_cost(FlowMap(op))

    @given(
        y_num=st.integers(0, 6),
        a_num=st.integers(1, 6),
        b_num=st.integers(1, 6),
    )
    @settings(deadline=None)
    def test_bijection_via_inverse_pieces(self, y_num, a_num, b_num):
        den = 16
        if y_num + a_num + b_num > den:
            return
        y, a, b = F(y_num, den), F(a_num, den), F(b_num, den)
        flow = FlowMap(ElementaryOp(y, a, b))

        def inverse(x):
            if y < x < y + b:
                return x + a
            if y + b < x < y + a + b:
                return x - b
            return x

        cuts = sorted({F(0), y, y + a, y + b, y + a + b, F(1)})
        for lo, hi in zip(cuts, cuts[1:]):
            mid = (lo + hi) / 2
            assert inverse(flow_map_apply(flow, mid)) == mid

    def test_density_consistency_on_pieces(self):
        rho = BinaryDensity.from_runs(
            [(1, F(1, 8)), (0, F(1, 8)), (1, F(1, 4)), (0, F(1, 2))]
        )
        op = ElementaryOp(F(1, 4), F(1, 4), F(1, 4))
        out, _ = apply_elementary(rho, op)
        flow = FlowMap(op)
        cuts = sorted(set(rho.breakpoints) | set(out.breakpoints)
                      | {op.y, op.y + op.a, op.y + op.b, op.y + op.a + op.b})
        for lo, hi in zip(cuts, cuts[1:]):
            mid = (lo + hi) / 2
            assert out.value_at(flow_map_apply(flow, mid)) == rho.value_at(mid)


class TestMixing:
    def test_alternating_blocks_are_mixed(self):
        rho = alternating_density(8)  # block width 1/16
        assert is_kappa_mixed(rho, F(1, 3), F(1, 8))

    def test_half_split_not_mixed(self):
        rho = BinaryDensity.from_runs([(1, F(1, 2)), (0, F(1, 2))])
        assert not is_kappa_mixed(rho, F(1, 3), F(1, 4))

    def test_kappa_above_half_never_mixed(self):
        kappa = F(1, 2) + F(1, 100)
        for rho in (alternating_density(8), terminal_density(F(1, 2))):
            for eps in (F(1, 8), F(1, 2), F(1)):
                assert not is_kappa_mixed(rho, kappa, eps)

    def test_parameter_ranges(self):
        rho = alternating_density(2)
        with pytest.raises(ValueError):
            is_kappa_mixed(rho, F(0), F(1, 2))
        with pytest.raises(ValueError):
            is_kappa_mixed(rho, F(1, 3), F(2))

    def test_window_constant_value(self):
        # window of one full period holds exactly half its length in white
        rho = alternating_density(8)
        eps = F(1, 8)
        for y in (F(0), F(1, 32), F(3, 16), 1 - eps):
            assert prefix_mass(rho, y + eps) - prefix_mass(rho, y) == eps / 2

    def test_grid_oracle_agreement(self):
        rng = random.Random(1405)
        for _ in range(60):
            lengths = [rng.randint(1, 5) for _ in range(rng.randint(2, 8))]
            rho = density_from_lengths(lengths, rng.randint(0, 1))
            denom_lcm = math.lcm(*(bp.denominator for bp in rho.breakpoints))
            eps = F(rng.randint(1, denom_lcm), denom_lcm)
            kappa = F(rng.randint(1, 9), 20)
            expected = is_kappa_mixed(rho, kappa, eps)
            step = F(1, 4 * denom_lcm)
            lo, hi = kappa * eps, (1 - kappa) * eps
            y = F(0)
            grid_ok = True
            while y <= 1 - eps:
                window = prefix_mass(rho, y + eps) - prefix_mass(rho, y)
                if not lo <= window <= hi:
                    grid_ok = False
                    break
                y += step
            assert grid_ok == expected


class TestMassBounds:
    def test_alternating_sixteenths(self):
        rho = alternating_density(8)
        assert is_kappa_mixed(rho, F(1, 3), F(1, 8))
        assert mass_bounds_check(rho, F(1, 3), F(1, 8))

    def test_eps_one(self):
        rho = alternating_density(8)
        assert is_kappa_mixed(rho, F(1, 3), F(1))
        assert mass_bounds_check(rho, F(1, 3), F(1))

    def test_random_mixed_instances(self):
        rng = random.Random(77)
        for _ in range(30):
            blocks = rng.choice([2, 4, 8, 16])
            rho = alternating_density(blocks)
            eps = F(1, blocks)
            assert is_kappa_mixed(rho, F(1, 3), eps)
            assert mass_bounds_check(rho, F(1, 3), eps)


class TestProofLowerBound:
    def test_degenerate_eps_equals_s(self):
        assert proof_lower_bound(F(1, 3), F(1, 2), F(1, 2)) == 0

    def test_scan_matches_direct_maximum(self):
        kappa, eps, s = F(1, 3), F(1, 1024), F(1, 2)

        def g(n):
            return (1 + n * kappa * kappa) * s - 2**n * eps

        direct = max(g(n) for n in range(21))
        assert proof_lower_bound(kappa, eps, s) == direct
        assert direct == F(37, 48)

    def test_nonincreasing_in_eps(self):
        kappa, s = F(1, 4), F(2, 3)
        values = [
            proof_lower_bound(kappa, eps, s)
            for eps in (F(1, 1000), F(1, 100), F(1, 10), F(1, 2))
        ]
        assert values == sorted(values, reverse=True)

    def test_parameter_ranges(self):
        with pytest.raises(ValueError):
            proof_lower_bound(F(1, 3), F(3, 4), F(1, 2))


class TestSeriesConversion:
    def test_single_pair(self):
        rho = BinaryDensity.from_runs([(1, F(1, 2)), (0, F(1, 2))])
        series = density_to_series(rho)
        assert series.a == (F(1, 2),)
        assert series.b == (F(1, 2),)

    def test_worked_example_scaled(self):
        series = AlternatingSeries(WORKED_A, WORKED_B)
        rho = series_to_density(series, 84)
        back = density_to_series(rho)
        assert back.a == tuple(F(x, 84) for x in WORKED_A)
        assert back.b == tuple(F(x, 84) for x in WORKED_B)

    def test_starts_black_rejected(self):
        rho = terminal_density(F(1, 2))
        with pytest.raises(ValueError):
            density_to_series(rho)

    def test_total_mismatch_rejected(self):
        series = AlternatingSeries((1,), (1,))
        with pytest.raises(ValueError):
            series_to_density(series, 3)

    def test_roundtrip_random_series(self):
        rng = random.Random(9)
        for _ in range(100):
            k = rng.randint(1, 8)
            a = tuple(F(rng.randint(1, 9), rng.randint(1, 3)) for _ in range(k))
            b = tuple(F(rng.randint(1, 9), rng.randint(1, 3)) for _ in range(k))
            series = AlternatingSeries(a, b)
            rho = series_to_density(series, series.total)
            back = density_to_series(rho)
            assert back.a == tuple(x / series.total for x in a)
            assert back.b == tuple(x / series.total for x in b)


@given(run_lengths_strategy(), st.integers(0, 1))
@settings(deadline=None, max_examples=60)
def test_mass_conservation_and_flow_consistency_random_ops(lengths, first_value):
    rho = density_from_lengths(lengths, first_value)
    # apply every full-run white/black adjacent transposition available
    for (lo, hi, value), (lo2, hi2, value2) in zip(
        rho.intervals(), list(rho.intervals())[1:]
    ):
        if value == 1 and value2 == 0:
            op = ElementaryOp(lo, hi - lo, hi2 - lo2)
            out, cost = apply_elementary(rho, op)
            assert total_mass(out) == total_mass(rho)
            assert cost == (hi - lo) + (hi2 - lo2)
            # the moved density agrees with the point map on every piece
            flow = FlowMap(op)
            cuts = sorted(
                set(rho.breakpoints)
                | set(out.breakpoints)
                | {op.y, op.y + op.a, op.y + op.b, op.y + op.a + op.b}
            )
            for piece_lo, piece_hi in zip(cuts, cuts[1:]):
                mid = (piece_lo + piece_hi) / 2
                assert out.value_at(flow_map_apply(flow, mid)) == rho.value_at(mid)
