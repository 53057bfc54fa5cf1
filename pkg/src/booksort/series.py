"""Signed run-length series of white/black blocks and their permutation moves.

A block layout is encoded as the alternating sequence
(a_1, -b_1, a_2, -b_2, ..., a_k, -b_k): positive entries are white runs,
negative entries are black runs.  A move picks the j-th white/black pair and
transposes it at cost a_j + b_j.  After the transposition the white run
merges with the next white run on its right and the black run merges with
the next black run on its left.  A black run pushed to the far left edge
never moves again (black only ever travels left), and symmetrically a white
run pushed to the far right edge is settled; those two settled masses are
stored separately as ``head`` and ``tail``.  Sorting is complete when no
pairs remain, i.e. the layout is (-head, +tail).

Layouts also convert to node/gap instances: pair masses become node masses,
black runs become gaps between consecutive nodes, and a zero-mass sink node
is appended at the right end.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import PlanError


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class AlternatingSeries:
    """Alternating white/black run lengths, plus settled edge masses.

    ``a[i]`` and ``b[i]`` are the i-th white and black run (both positive).
    ``head`` is black mass settled at the left edge, ``tail`` white mass
    settled at the right edge; both are zero for a freshly encoded layout.
    An empty series (k = 0) is a fully sorted layout.
    """

    a: tuple
    b: tuple
    head: Fraction = Fraction(0)
    tail: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(_frac(x) for x in self.a))
        object.__setattr__(self, "b", tuple(_frac(x) for x in self.b))
        object.__setattr__(self, "head", _frac(self.head))
        object.__setattr__(self, "tail", _frac(self.tail))
        if len(self.a) != len(self.b):
            raise ValueError(
                f"white/black run counts differ: {len(self.a)} vs {len(self.b)}"
            )
        if any(x <= 0 for x in self.a) or any(x <= 0 for x in self.b):
            raise ValueError("run lengths must be positive")
        if self.head < 0 or self.tail < 0:
            raise ValueError("settled edge masses must be nonnegative")

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def white_mass(self) -> Fraction:
        return sum(self.a, self.tail)

    @property
    def black_mass(self) -> Fraction:
        return sum(self.b, self.head)

    @property
    def total(self) -> Fraction:
        return self.white_mass + self.black_mass

    @property
    def is_pristine(self) -> bool:
        """True when nothing has settled at either edge yet."""
        return self.head == 0 and self.tail == 0

    @property
    def is_terminal(self) -> bool:
        """True when the layout is fully sorted: all black left, all white right."""
        return self.k == 0

    def signed(self) -> tuple:
        """The layout as one signed sequence, black runs negated."""
        out = []
        if self.head > 0:
            out.append(-self.head)
        for white, black in zip(self.a, self.b):
            out.append(white)
            out.append(-black)
        if self.tail > 0:
            out.append(self.tail)
        return tuple(out)

    def __str__(self):
        return "{" + ", ".join(str(x) for x in self.signed()) + "}"


@dataclass(frozen=True)
class SeriesPlan:
    """A pristine starting layout plus an ordered list of 1-based pair moves.

    Each move index addresses the series state produced by the moves before
    it, not the initial one.
    """

    initial: AlternatingSeries
    moves: tuple

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(int(j) for j in self.moves))
        if not self.initial.is_pristine:
            raise ValueError("plan must start from a layout with no settled edges")


@dataclass(frozen=True)
class Instance:
    """Node masses and gaps on a line; the last node is the zero-or-more sink.

    ``a`` has N entries (node masses, 1-based positions), ``b`` has N - 1
    entries (gaps between consecutive nodes).  Layout-derived instances have
    a positive mass on every node except the sink, which is zero.
    """

    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(_frac(x) for x in self.a))
        object.__setattr__(self, "b", tuple(_frac(x) for x in self.b))
        if len(self.a) < 1:
            raise ValueError("instance needs at least one node")
        if len(self.b) != len(self.a) - 1:
            raise ValueError(
                f"need exactly {len(self.a) - 1} gaps for {len(self.a)} nodes, "
                f"got {len(self.b)}"
            )
        if any(x < 0 for x in self.a) or any(x < 0 for x in self.b):
            raise ValueError("masses and gaps must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def total(self) -> Fraction:
        return sum(self.a, Fraction(0)) + sum(self.b, Fraction(0))


def permute(series: AlternatingSeries, j: int):
    """Transpose the j-th white run with the black run on its right.

    Returns ``(new_series, cost)`` with cost a_j + b_j.  The black run joins
    the black run on its left (or settles into ``head`` if there is none);
    the white run joins the next white run (or settles into ``tail``).
    """
    if not 1 <= j <= series.k:
        raise IndexError(f"move index {j} out of range 1..{series.k}")
    a = list(series.a)
    b = list(series.b)
    moved_white = a.pop(j - 1)
    moved_black = b.pop(j - 1)
    cost = moved_white + moved_black
    head, tail = series.head, series.tail
    if j >= 2:
        b[j - 2] += moved_black
    else:
        head += moved_black
    if j <= len(a):
        a[j - 1] += moved_white
    else:
        tail += moved_white
    return AlternatingSeries(tuple(a), tuple(b), head, tail), cost


def replay_steps(plan: SeriesPlan):
    """Apply all moves; return (per-move costs, final series).

    Raises PlanError with the 1-based step index on an out-of-range move.
    Does not require the final state to be sorted; ``replay`` does.
    """
    state = plan.initial
    costs = []
    for step, j in enumerate(plan.moves, 1):
        try:
            state, cost = permute(state, j)
        except IndexError as exc:
            raise PlanError(step, str(exc)) from exc
        costs.append(cost)
    return costs, state


def replay(plan: SeriesPlan) -> Fraction:
    """Total cost of the plan; the final state must be fully sorted."""
    costs, state = replay_steps(plan)
    if not state.is_terminal:
        raise PlanError(None, f"final state {state} is not fully sorted")
    return sum(costs, Fraction(0))


def to_instance(series: AlternatingSeries) -> Instance:
    """Node/gap instance for a layout: pair masses, gaps, and a zero-mass sink."""
    if not series.is_pristine:
        raise ValueError("only a pristine layout converts to an instance")
    return Instance(series.a + (Fraction(0),), series.b)


def instance_to_series(inst: Instance) -> AlternatingSeries:
    """Inverse of ``to_instance``; requires a zero-mass sink and positive entries."""
    if inst.a[-1] != 0:
        raise ValueError("instance sink mass must be zero to form a layout")
    return AlternatingSeries(inst.a[:-1], inst.b)


def uniform_alternating_instance(k: int) -> Instance:
    """Instance for k unit white blocks interleaved with k unit black blocks."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return Instance((Fraction(1),) * k + (Fraction(0),), (Fraction(1),) * k)
