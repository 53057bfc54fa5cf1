"""Shared fixtures: the worked five-move example and small reference data."""

import random
from fractions import Fraction

import pytest

from booksort import AlternatingSeries, Instance, SeriesPlan

# Five-pair layout whose five-move plan has per-move costs 22, 19, 17, 46, 38
# (total 142) and induces the parent map (2, 4, 4, 6, 6, 6).
WORKED_A = (12, 7, 5, 4, 14)
WORKED_B = (5, 10, 17, 5, 5)
WORKED_MOVES = (3, 4, 1, 1, 1)
WORKED_MOVE_COSTS = (22, 19, 17, 46, 38)
WORKED_TOTAL = 142
WORKED_PARENT = (2, 4, 4, 6, 6, 6)
WORKED_DEPTH = (3, 2, 2, 1, 1, 0)

# Tiny layout (5, -1, 1, -5): every valid plan costs 17, while the cheaper
# value 14 needs a black-right move the model forbids.
SMALL_A = (5, 1)
SMALL_B = (1, 5)
SMALL_OPTIMUM = 17


@pytest.fixture
def worked_series():
    return AlternatingSeries(WORKED_A, WORKED_B)


@pytest.fixture
def worked_plan(worked_series):
    return SeriesPlan(worked_series, WORKED_MOVES)


@pytest.fixture
def worked_instance():
    return Instance(WORKED_A + (0,), WORKED_B)


@pytest.fixture
def small_instance():
    return Instance(SMALL_A + (0,), SMALL_B)


def random_positive_instance(rng: random.Random, n: int, max_num=9, max_den=4):
    """Instance with positive rational masses/gaps and a zero sink."""
    masses = [
        Fraction(rng.randint(1, max_num), rng.randint(1, max_den))
        for _ in range(n - 1)
    ]
    gaps = [
        Fraction(rng.randint(1, max_num), rng.randint(1, max_den))
        for _ in range(n - 1)
    ]
    return Instance(tuple(masses) + (Fraction(0),), tuple(gaps))


def all_complete_plans(k: int):
    """Every move sequence that fully sorts a k-pair layout."""
    if k == 0:
        yield ()
        return
    for j in range(1, k + 1):
        for rest in all_complete_plans(k - 1):
            yield (j,) + rest
