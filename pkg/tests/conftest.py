"""Shared golden fixtures.

The two hand-checked scenarios used across the suite:

- a rank 5 configuration of tensor type (3,2)(3,1)(2,2)(1,2)(1,1) together
  with its image path under the inverse bijection, and
- a rank 5 three factor element of type (3,3)(2,4)(2,2) together with its
  unrestricted configuration and its full reversal under the R-matrix.

A third fixture pins every intermediate state of the removal run on a
(3,2)(3,3)(2,3) configuration, one elementary move at a time.
"""

import pytest

from krrc import crystals, rigged
from krrc.crystals import KRElement, TensorElement


def _rc(n, L, levels):
    return rigged.rc_from_json({"n": n, "L": L, "levels": levels})


# ---------------------------------------------------------------------------
# five factor scenario: configuration <-> path

FIVE_FACTOR_SPEC = ((3, 2), (3, 1), (2, 2), (1, 2), (1, 1))

FIVE_FACTOR_RC = _rc(
    5,
    [[3, 2, 1], [3, 1, 1], [2, 2, 1], [1, 2, 1], [1, 1, 1]],
    [
        [[2, 1], [1, 1]],
        [[3, 0], [2, 1], [1, 0]],
        [[3, 0], [2, 1], [1, 1], [1, 0]],
        [[1, 0], [1, 0]],
        [[2, 0], [1, 0]],
    ],
)

# vacancy numbers of the configuration above, per level, one value for each
# distinct part length appearing there, largest length first
FIVE_FACTOR_VACANCIES = {
    1: {2: 2, 1: 1},
    2: {3: 0, 2: 1, 1: 1},
    3: {3: 0, 2: 1, 1: 1},
    4: {1: 0},
    5: {2: 0, 1: 0},
}

FIVE_FACTOR_PATH = TensorElement(5, (
    KRElement(5, 3, 2, ((-5, 4, 1), (3,))),
    KRElement(5, 3, 1, ((4, 3, 1),)),
    KRElement(5, 2, 2, ((2, 1), (-1, 2))),
    KRElement(5, 1, 2, ((1,), (1,))),
    KRElement(5, 1, 1, ((1,),)),
))

# image of the configuration under f at node 4; f at node 2 annihilates it
FIVE_FACTOR_RC_F4 = _rc(
    5,
    [[3, 2, 1], [3, 1, 1], [2, 2, 1], [1, 2, 1], [1, 1, 1]],
    [
        [[2, 1], [1, 1]],
        [[3, 0], [2, 1], [1, 0]],
        [[3, 1], [2, 2], [1, 1], [1, 0]],
        [[2, -1], [1, 0]],
        [[2, 0], [1, 0]],
    ],
)


# ---------------------------------------------------------------------------
# three factor scenario: R-matrix reversal through the shared configuration

TRIPLE_SPEC = ((3, 3), (2, 4), (2, 2))

TRIPLE_ELEMENT = TensorElement(5, (
    KRElement(5, 3, 3, ((-5, 2, 1), (-5, 2, 1), (-2,))),
    KRElement(5, 2, 4, ((2, 1), (3, 2), (-4, 3), (-1, -3))),
    KRElement(5, 2, 2, ((3, 1), (4, 3))),
))

TRIPLE_RC = _rc(
    5,
    [[3, 3, 1], [2, 4, 1], [2, 2, 1]],
    [
        [[4, -1], [1, 0], [1, 0]],
        [[4, -2], [3, -2], [2, -2], [1, -1], [1, -1], [1, -1]],
        [[5, 3], [2, 0], [2, 0], [1, 1], [1, 1], [1, 1]],
        [[3, 0], [1, 0], [1, 0]],
        [[5, -2], [1, 0], [1, 0]],
    ],
)

TRIPLE_REVERSED = TensorElement(5, (
    KRElement(5, 2, 2, ((-5, 1),)),
    KRElement(5, 2, 4, ((2, 1), (2, 1), (-5, 3), (-1, -3))),
    KRElement(5, 3, 3, ((3, 2, 1), (-4, 3, 2), (-2, 4, 3))),
))


# ---------------------------------------------------------------------------
# removal walkthrough: every state of the run that strips the first factor
# of a (3,2)(3,3)(2,3) configuration, keyed by the move that produced it

WALK_SPEC = ((3, 2), (3, 3), (2, 3))

_W1 = [
    [[1, 0], [1, 0]],
    [[3, 1], [2, 0], [1, 0], [1, -1]],
    [[3, 0], [3, -1], [2, 1], [1, 1], [1, 1]],
    [[2, -1], [1, -1], [1, -1]],
    [[4, 0], [1, 1]],
]
_W3 = [
    [[1, 0], [1, 0], [1, 0]],
    [[3, 1], [2, 0], [1, 0], [1, 0], [1, -1]],
    _W1[2], _W1[3], _W1[4],
]
_W4 = [
    [[1, 0], [1, 0]],
    [[3, 1], [2, 0], [1, 0], [1, -1]],
    [[3, 0], [3, -1], [1, 1], [1, 1], [1, 1]],
    [[2, -1], [1, -1], [1, -1]],
    [[3, 1], [1, 1]],
]
_W5 = [
    [[1, 0], [1, 0], [1, 0]],
    _W4[1], _W4[2], _W4[3], _W4[4],
]
_W6 = [
    [[1, 0], [1, 0]],
    [[3, 1], [1, 0], [1, 0], [1, -1]],
    _W4[2], _W4[3], _W4[4],
]
_W8 = [
    [[1, 0]],
    [[3, 1], [1, 0], [1, -1]],
    [[3, 0], [3, -1], [1, 1]],
    [[2, -1], [1, -1]],
    [[3, 1]],
]
_W9 = [
    [[1, 0]],
    [[3, 1], [1, -1]],
    [[3, -1], [2, 1]],
    [[2, -1]],
    [[2, 0]],
]

WALK_START = _rc(5, [[3, 2, 1], [3, 3, 1], [2, 3, 1]], _W1)

# (move, levels after the move, letter emitted if the move was a removal);
# the two beta moves inside the second column are folded into the removal
# that follows them, matching how the run is usually displayed
WALK_STEPS = [
    ("gamma", _W1, None),
    ("beta", _W3, None),
    ("delta", _W4, -5),
    ("beta", _W5, None),
    ("delta", _W6, 3),
    ("delta", _W6, 1),
    ("beta+delta", _W8, -1),
    ("beta+delta", _W9, -3),
    ("delta", _W9, 1),
]

WALK_LETTERS = [-5, 3, 1, -1, -3, 1]

WALK_PATH = TensorElement(5, (
    KRElement(5, 3, 2, ((-5, 3, 1), (-3,))),
    KRElement(5, 3, 3, ((3, 2, 1), (-5, 3, 1), (-3, 4, 1))),
    KRElement(5, 2, 3, ((2, 1), (2, 1), (5, 3))),
))


@pytest.fixture
def five_factor_rc():
    return FIVE_FACTOR_RC


@pytest.fixture
def five_factor_path():
    return FIVE_FACTOR_PATH
