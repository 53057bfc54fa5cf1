"""Non-crossing parent maps: the tree view of sorting plans.

A parent map on [N] sends every node i < N to a parent P(i) > i and fixes
the root, P(N) = N.  The map is admissible when no two parent arcs cross:
for i < j, if j lies strictly under i's arc (j < P(i)) then j's arc must
stay inside it (P(j) <= P(i)).  Admissible maps are exactly the trees
realizable by a sequence of white-right block transpositions, and there are
Catalan(N-1) of them.

The cost of a tree on an instance (a, b) is

    sum_i a_i * depth(i)  +  sum_i b_i * #{j <= i : P(j) > i},

equivalently the sum over edges of (mass through the edge + gap distance
spanned).  This module provides the admissibility test, depth computation
and its inverse, exact cost evaluation, lexicographic enumeration, and the
two bridges between trees and series plans.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import PlanError
from .series import Instance, SeriesPlan, instance_to_series, permute


@dataclass(frozen=True)
class ParentFunction:
    """Parent map stored as a tuple: p[i-1] is the 1-based parent of node i."""

    p: tuple

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(int(v) for v in self.p))
        n = len(self.p)
        if n < 1:
            raise ValueError("parent map needs at least one node")
        if self.p[-1] != n:
            raise ValueError(f"root must map to itself: P({n}) = {self.p[-1]}")
        for i, parent in enumerate(self.p[:-1], 1):
            if not i < parent <= n:
                raise ValueError(f"P({i}) = {parent} must lie in ({i}, {n}]")

    @property
    def n(self) -> int:
        return len(self.p)

    def parent(self, i: int) -> int:
        return self.p[i - 1]


@dataclass(frozen=True)
class DepthVector:
    """Per-node tree depth; the root (last node) has depth 0.

    Construction enforces only the cheap necessary conditions; whether a
    vector actually comes from an admissible parent map is decided by
    ``depth_to_parent``.
    """

    d: tuple

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(v) for v in self.d))
        if len(self.d) < 1:
            raise ValueError("depth vector needs at least one node")
        if self.d[-1] != 0:
            raise ValueError("root depth must be 0")
        if any(v < 0 for v in self.d):
            raise ValueError("depths must be nonnegative")
        present = set(self.d)
        for v in present:
            if v > 0 and v - 1 not in present:
                raise ValueError(f"depth {v} appears without depth {v - 1}")


def is_admissible(parent: ParentFunction) -> bool:
    """Non-crossing test in O(N) with a stack of still-open parent arcs.

    Walking i = 1..N-1, the stack holds the endpoints of arcs that started
    left of i and end beyond it; nesting makes it non-increasing, so the
    tightest bound on P(i) is the top.
    """
    stack = []
    for i, parent_i in enumerate(parent.p[:-1], 1):
        while stack and stack[-1] <= i:
            stack.pop()
        if stack and parent_i > stack[-1]:
            return False
        stack.append(parent_i)
    return True


def generation(parent: ParentFunction) -> DepthVector:
    """Depths via a right-to-left sweep; parents point right, so each is known."""
    n = parent.n
    depth = [0] * (n + 1)
    for i in range(n - 1, 0, -1):
        depth[i] = depth[parent.p[i - 1]] + 1
    return DepthVector(tuple(depth[1:]))


def tree_cost_coefficients(parent: ParentFunction):
    """Integer coefficient vectors (on a_1..a_{N-1} and b_1..b_{N-1}) of the cost.

    The a-coefficient of node i is its depth; the b-coefficient of gap i
    counts the arcs that start at or left of i and end beyond it.
    """
    if not is_admissible(parent):
        raise ValueError("parent map is not admissible")
    n = parent.n
    a_coefs = generation(parent).d[: n - 1]
    crossing = [0] * (n + 1)
    for i, parent_i in enumerate(parent.p[:-1], 1):
        crossing[i] += 1
        crossing[parent_i] -= 1
    b_coefs = []
    running = 0
    for i in range(1, n):
        running += crossing[i]
        b_coefs.append(running)
    return tuple(a_coefs), tuple(b_coefs)


def tree_cost(parent: ParentFunction, inst: Instance) -> Fraction:
    """Exact sorting cost of an admissible tree on an instance."""
    if parent.n != inst.n:
        raise ValueError(
            f"instance has {inst.n} nodes but parent map has {parent.n}"
        )
    a_coefs, b_coefs = tree_cost_coefficients(parent)
    cost = Fraction(0)
    for mass, coef in zip(inst.a, a_coefs):
        cost += mass * coef
    for gap, coef in zip(inst.b, b_coefs):
        cost += gap * coef
    return cost


def catalan(n: int) -> int:
    """The n-th Catalan number, binom(2n, n) / (n + 1), exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def enumerate_admissible(n: int):
    """Yield every admissible parent map on [n] once, in lexicographic order.

    Depth-first choice of p[i] in increasing order, bounded above by the
    tightest still-open arc, which is exactly the stack discipline of
    ``is_admissible``.  Any prefix that respects the bound extends (finish
    with p[t] = t + 1), so there is no backtracking.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        yield ParentFunction((1,))
        return
    p = [0] * (n + 1)

    def walk(i, active):
        if i == n:
            p[n] = n
            yield ParentFunction(tuple(p[1:]))
            return
        cap = active[-1] if active else n
        for v in range(i + 1, cap + 1):
            p[i] = v
            deeper = [arc for arc in active + [v] if arc > i + 1]
            yield from walk(i + 1, deeper)

    yield from walk(1, [])


def depth_to_parent(depth: DepthVector):
    """The unique admissible parent map inducing a depth vector, or None.

    In an admissible tree the parent of i is the nearest node to its right
    one level up, so build that candidate and verify it; any failure means
    no admissible map induces the vector.
    """
    d = depth.d
    n = len(d)
    p = []
    for i in range(1, n):
        want = d[i - 1] - 1
        parent_i = next((q for q in range(i + 1, n + 1) if d[q - 1] == want), None)
        if parent_i is None:
            return None
        p.append(parent_i)
    p.append(n)
    candidate = ParentFunction(tuple(p))
    if not is_admissible(candidate):
        return None
    if generation(candidate) != depth:
        return None
    return candidate


def tree_to_plan(parent: ParentFunction, inst: Instance) -> SeriesPlan:
    """A series plan realizing an admissible tree, deepest-leftmost first.

    Simulates the layout while picking, at each step, the deepest (then
    leftmost) node whose children are all merged and whose run sits directly
    left of its parent's run; the resulting moves replay to exactly the
    tree's cost and induce the tree back under ``plan_to_tree``.
    """
    if not is_admissible(parent):
        raise ValueError("parent map is not admissible")
    if parent.n != inst.n:
        raise ValueError(
            f"instance has {inst.n} nodes but parent map has {parent.n}"
        )
    n = parent.n
    layout = instance_to_series(inst)
    depth = generation(parent).d
    pending_children = Counter(parent.p[i - 1] for i in range(1, n))
    reps = list(range(1, n))
    moves = []
    while reps:
        chosen = None
        for pos, node in enumerate(reps):
            if pending_children[node]:
                continue
            target = reps[pos + 1] if pos + 1 < len(reps) else n
            if target != parent.p[node - 1]:
                continue
            key = (-depth[node - 1], node)
            if chosen is None or key < chosen[0]:
                chosen = (key, pos, node)
        if chosen is None:
            raise AssertionError("admissible tree left no realizable move")
        _, pos, node = chosen
        moves.append(pos + 1)
        reps.pop(pos)
        pending_children[parent.p[node - 1]] -= 1
    return SeriesPlan(layout, tuple(moves))


def plan_to_tree(plan: SeriesPlan) -> ParentFunction:
    """Parent map induced by a series plan via merge tracking.

    Each run keeps the original node id of the run it merged into; a move on
    pair j makes the (j+1)-th surviving node the parent of the j-th, with
    the sink standing in when the white run settles at the right edge.
    """
    state = plan.initial
    k = state.k
    n = k + 1
    reps = list(range(1, n))
    p = [0] * (n + 1)
    p[n] = n
    for step, j in enumerate(plan.moves, 1):
        if not 1 <= j <= state.k:
            raise PlanError(step, f"move index {j} out of range 1..{state.k}")
        node = reps[j - 1]
        p[node] = reps[j] if j < state.k else n
        reps.pop(j - 1)
        state, _ = permute(state, j)
    if not state.is_terminal:
        raise PlanError(None, f"final state {state} is not fully sorted")
    return ParentFunction(tuple(p[1:]))
