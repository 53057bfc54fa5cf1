"""Binary densities on [0,1) and the continuous block-transposition model.

A density is a piecewise-constant {0,1} function stored as maximal runs with
exact rational breakpoints; value 1 is a white block, value 0 a black block.
The elementary operation transposes a white block of length a sitting
directly left of a black block of length b, at cost a + b, moving white
rightward only.  A plan is valid when every operation applies to its
predecessor's output and the final density is fully sorted (all black on
the left, all white on the right).

This module also provides the per-window mixing test (every length-eps
window must hold between kappa*eps and (1-kappa)*eps of white mass), the
mass bracket that test implies, and the induction lower bound
max_n (1 + n*kappa^2)*s - 2^n*eps used to sanity-check solver output.
"""

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import OperationRejectedError, PlanError
from .series import AlternatingSeries, SeriesPlan, permute


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class BinaryDensity:
    """Piecewise-constant {0,1} function on [0,1) stored as maximal runs.

    ``breakpoints`` is strictly increasing from 0 to 1 and ``values`` holds
    one {0,1} value per gap between consecutive breakpoints; adjacent values
    always differ.  Use ``from_runs`` to build one from possibly unmerged
    run lengths.
    """

    breakpoints: tuple
    values: tuple
    _cum: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "breakpoints", tuple(_frac(x) for x in self.breakpoints)
        )
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        bp, vals = self.breakpoints, self.values
        if len(bp) < 2 or len(vals) != len(bp) - 1:
            raise ValueError("need one value per interval between breakpoints")
        if bp[0] != 0 or bp[-1] != 1:
            raise ValueError("breakpoints must start at 0 and end at 1")
        if any(lo >= hi for lo, hi in zip(bp, bp[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if any(v not in (0, 1) for v in vals):
            raise ValueError("values must be 0 or 1")
        if any(u == v for u, v in zip(vals, vals[1:])):
            raise ValueError("adjacent runs must have different values")
        # white mass accumulated up to each breakpoint, for O(log n) queries
        cum = [Fraction(0)]
        for (lo, hi), v in zip(zip(bp, bp[1:]), vals):
            cum.append(cum[-1] + (hi - lo) * v)
        object.__setattr__(self, "_cum", tuple(cum))

    @classmethod
    def from_runs(cls, runs) -> "BinaryDensity":
        """Build from (value, length) pairs; lengths must sum to exactly 1.

        Zero-length runs are dropped and equal-valued neighbours merged.
        """
        merged = []
        for value, length in runs:
            length = _frac(length)
            if length < 0:
                raise ValueError("run lengths must be nonnegative")
            if length == 0:
                continue
            value = int(value)
            if merged and merged[-1][0] == value:
                merged[-1][1] += length
            else:
                merged.append([value, length])
        if not merged:
            raise ValueError("no runs given")
        breakpoints = [Fraction(0)]
        values = []
        for value, length in merged:
            values.append(value)
            breakpoints.append(breakpoints[-1] + length)
        return cls(tuple(breakpoints), tuple(values))

    def intervals(self):
        """Yield (lo, hi, value) for each maximal run."""
        for (lo, hi), v in zip(zip(self.breakpoints, self.breakpoints[1:]), self.values):
            yield lo, hi, v

    def value_at(self, x) -> int:
        """Value on the run containing x, right-continuous at breakpoints."""
        x = _frac(x)
        if not 0 <= x < 1:
            raise ValueError(f"x={x} outside [0, 1)")
        idx = bisect_right(self.breakpoints, x) - 1
        return self.values[idx]


@dataclass(frozen=True)
class ElementaryOp:
    """One transposition: white on (y, y+a) swaps with black on (y+a, y+a+b)."""

    y: Fraction
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "y", _frac(self.y))
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        if not 0 <= self.y < 1:
            raise ValueError(f"y={self.y} outside [0, 1)")
        if self.a <= 0 or self.b <= 0:
            raise ValueError("block lengths a, b must be positive")
        if self.y + self.a + self.b > 1:
            raise ValueError("operation window extends past 1")


@dataclass(frozen=True)
class SortingPlan:
    """An initial density plus the ordered operations meant to sort it."""

    initial: BinaryDensity
    ops: tuple

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))


@dataclass(frozen=True)
class FlowMap:
    """The measure-preserving point map induced by one elementary operation."""

    op: ElementaryOp


def total_mass(rho: BinaryDensity) -> Fraction:
    """Exact measure of the white set {rho = 1}."""
    return rho._cum[-1]


def prefix_mass(rho: BinaryDensity, x) -> Fraction:
    """White mass on [0, x] for x in [0, 1]."""
    x = _frac(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x={x} outside [0, 1]")
    idx = bisect_right(rho.breakpoints, x) - 1
    if idx >= len(rho.values):
        return rho._cum[-1]
    return rho._cum[idx] + (x - rho.breakpoints[idx]) * rho.values[idx]


def terminal_density(m) -> BinaryDensity:
    """Fully sorted density with white mass m: black on (0, 1-m), white after."""
    m = _frac(m)
    if not 0 <= m <= 1:
        raise ValueError(f"mass m={m} outside [0, 1]")
    if m == 0:
        return BinaryDensity.from_runs([(0, Fraction(1))])
    if m == 1:
        return BinaryDensity.from_runs([(1, Fraction(1))])
    return BinaryDensity.from_runs([(0, 1 - m), (1, m)])


def _runs_between(rho: BinaryDensity, lo, hi):
    """Run list of rho clipped to the window (lo, hi)."""
    out = []
    for start, end, value in rho.intervals():
        a = max(start, lo)
        b = min(end, hi)
        if a < b:
            out.append((value, b - a))
    return out


def _require_constant(rho, lo, hi, expected, op):
    """Raise OperationRejectedError at the first run in (lo, hi) not equal to expected."""
    for start, end, value in rho.intervals():
        a = max(start, lo)
        b = min(end, hi)
        if a < b and value != expected:
            raise OperationRejectedError(op, a, b, expected, value)


def apply_elementary(rho: BinaryDensity, op: ElementaryOp):
    """Apply one transposition; returns (new density, cost a+b).

    The density must be exactly 1 on the whole of (y, y+a) and exactly 0 on
    the whole of (y+a, y+a+b); partial overlaps are rejected, not clipped.
    Reverse transpositions (black moving right) are therefore impossible to
    express.
    """
    y, a, b = op.y, op.a, op.b
    _require_constant(rho, y, y + a, 1, op)
    _require_constant(rho, y + a, y + a + b, 0, op)
    runs = (
        _runs_between(rho, Fraction(0), y)
        + [(0, b), (1, a)]
        + _runs_between(rho, y + a + b, Fraction(1))
    )
    return BinaryDensity.from_runs(runs), a + b


def _first_mismatch(lhs: BinaryDensity, rhs: BinaryDensity):
    """First open subinterval where two densities differ, or None."""
    cuts = sorted(set(lhs.breakpoints) | set(rhs.breakpoints))
    for lo, hi in zip(cuts, cuts[1:]):
        if lhs.value_at(lo) != rhs.value_at(lo):
            return lo, hi
    return None


def validate_plan(plan: SortingPlan) -> Fraction:
    """Replay a plan; return its exact total cost.

    Every operation must apply to the density produced by its predecessors
    and the final density must equal the sorted target for the initial mass.
    """
    state = plan.initial
    total = Fraction(0)
    for step, op in enumerate(plan.ops, 1):
        try:
            state, cost = apply_elementary(state, op)
        except OperationRejectedError as exc:
            raise PlanError(step, str(exc)) from exc
        total += cost
    target = terminal_density(total_mass(plan.initial))
    if state != target:
        lo, hi = _first_mismatch(state, target)
        raise PlanError(
            None,
            f"final density is not sorted: differs from target on ({lo}, {hi})",
        )
    return total


def flow_map_apply(flow: FlowMap, x) -> Fraction:
    """Point image under the transposition map.

    x + b on (y, y+a), x - a on (y+a, y+a+b), identity elsewhere (including
    the three window boundary points, which form a null set).
    """
    x = _frac(x)
    if not 0 <= x < 1:
        raise ValueError(f"x={x} outside [0, 1)")
    y, a, b = flow.op.y, flow.op.a, flow.op.b
    if y < x < y + a:
        return x + b
    if y + a < x < y + a + b:
        return x - a
    return x


def flow_map_cost(flow: FlowMap) -> Fraction:
    """Measure of the moved set {x : T(x) != x}, which is exactly a + b."""
    return flow.op.a + flow.op.b


def is_kappa_mixed(rho: BinaryDensity, kappa, eps) -> bool:
    """Exact test that every eps-window holds white mass in [kappa*eps, (1-kappa)*eps].

    The window integral is piecewise linear in the window position y, with
    kinks only where y or y+eps crosses a breakpoint, so it suffices to
    check the bracket at those positions (clamped to [0, 1-eps]) and at the
    two endpoint positions.
    """
    kappa = _frac(kappa)
    eps = _frac(eps)
    if not 0 < kappa < 1:
        raise ValueError(f"kappa={kappa} outside (0, 1)")
    if not 0 < eps <= 1:
        raise ValueError(f"eps={eps} outside (0, 1]")
    y_max = 1 - eps
    candidates = {Fraction(0), y_max}
    for t in rho.breakpoints:
        if 0 <= t <= y_max:
            candidates.add(t)
        shifted = t - eps
        if 0 <= shifted <= y_max:
            candidates.add(shifted)
    lo = kappa * eps
    hi = (1 - kappa) * eps
    for y in candidates:
        window = prefix_mass(rho, y + eps) - prefix_mass(rho, y)
        if not lo <= window <= hi:
            return False
    return True


def mass_bounds_check(rho: BinaryDensity, kappa, eps) -> bool:
    """Bracket on the white mass implied by the mixing test.

    For a density passing ``is_kappa_mixed`` the total white mass m must
    satisfy kappa*eps*floor(1/eps) <= m <= (1-kappa)*eps*(floor(1/eps)+1).
    Returns False only on an implementation bug.
    """
    kappa = _frac(kappa)
    eps = _frac(eps)
    m = total_mass(rho)
    inv = Fraction(1) / eps
    floor_inv = inv.numerator // inv.denominator
    lower = kappa * eps * floor_inv
    upper = (1 - kappa) * eps * (floor_inv + 1)
    return lower <= m <= upper


def proof_lower_bound(kappa, eps, s) -> Fraction:
    """Exact maximum over integers n >= 0 of (1 + n*kappa^2)*s - 2^n*eps.

    The increment from n to n+1 is kappa^2*s - 2^n*eps, which strictly
    decreases in n, so the scan stops as soon as the next increment is no
    longer positive; everything beyond that point is smaller.
    """
    kappa = _frac(kappa)
    eps = _frac(eps)
    s = _frac(s)
    if not 0 < kappa < 1:
        raise ValueError(f"kappa={kappa} outside (0, 1)")
    if not 0 < eps <= s:
        raise ValueError(f"eps={eps} must satisfy 0 < eps <= s={s}")
    gain = kappa * kappa * s
    value = s - eps
    power = eps
    while gain > power:
        value += gain - power
        power *= 2
    return value


def density_to_series(rho: BinaryDensity) -> AlternatingSeries:
    """Run-length encode a density whose first run is white and last is black.

    Densities violating that normalization are rejected rather than padded.
    """
    if rho.values[0] != 1 or rho.values[-1] != 0:
        raise ValueError(
            "density must start with a white run and end with a black run; "
            "normalize before encoding"
        )
    whites = []
    blacks = []
    for lo, hi, value in rho.intervals():
        (whites if value == 1 else blacks).append(hi - lo)
    return AlternatingSeries(tuple(whites), tuple(blacks))


def series_to_density(series: AlternatingSeries, total) -> BinaryDensity:
    """Density on [0,1) for a pristine layout, rescaled by 1/total."""
    total = _frac(total)
    if not series.is_pristine:
        raise ValueError("only a pristine layout converts to a density")
    if series.total != total:
        raise ValueError(
            f"layout length {series.total} does not match declared total {total}"
        )
    runs = []
    for white, black in zip(series.a, series.b):
        runs.append((1, white / total))
        runs.append((0, black / total))
    return BinaryDensity.from_runs(runs)


def series_plan_to_sorting_plan(plan: SeriesPlan) -> SortingPlan:
    """Rebuild a series plan as density operations on [0,1).

    The whole layout is rescaled to unit length; each move becomes the
    elementary operation on the white/black pair it addresses, positioned
    after the settled head mass and the pairs to its left.
    """
    total = plan.initial.total
    state = plan.initial
    ops = []
    for j in plan.moves:
        if not 1 <= j <= state.k:
            raise PlanError(len(ops) + 1, f"move index {j} out of range 1..{state.k}")
        offset = state.head + sum(
            (state.a[t] + state.b[t] for t in range(j - 1)), Fraction(0)
        )
        ops.append(
            ElementaryOp(offset / total, state.a[j - 1] / total, state.b[j - 1] / total)
        )
        state, _ = permute(state, j)
    return SortingPlan(series_to_density(plan.initial, total), tuple(ops))
