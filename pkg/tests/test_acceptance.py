"""Acceptance suite: one test per contract criterion.

Each function checks one end-to-end property of the package on desk-scale
crystals: the worked fixtures, bijectivity, equivariance, swap invariance,
duality, the move commutations, the statistics, the generating function
identity, the affine structure, and the local energy identities.
"""

import time
from functools import lru_cache

from conftest import (
    FIVE_FACTOR_PATH,
    FIVE_FACTOR_RC,
    FIVE_FACTOR_RC_F4,
    FIVE_FACTOR_SPEC,
    TRIPLE_ELEMENT,
    TRIPLE_RC,
    TRIPLE_REVERSED,
    TRIPLE_SPEC,
    WALK_LETTERS,
    WALK_PATH,
    WALK_SPEC,
    WALK_START,
    WALK_STEPS,
)
from krrc import bijection, crystals, energy, kr, rigged, roots, xm
from krrc.crystals import KRElement, TensorElement

SPECS = [
    ((1, 1), (1, 1)),
    ((2, 1), (1, 1)),
    ((1, 2), (1, 1)),
    ((2, 2), (1, 1)),
    ((3, 1), (1, 1)),
    ((4, 1), (1, 1)),
    ((2, 2), (1, 2), (1, 1)),
]


def _all_rcs(n, spec):
    L = rigged.multiplicity_array(n, spec)
    out = []
    for lam in xm.rc_weights(n, L):
        out.extend(rigged.rigged_configurations(n, L, lam))
    return out


@lru_cache(maxsize=None)
def _phi_table(n, spec):
    return bijection.phi_map(n, spec)


def _state(x):
    return x[0] if isinstance(x, tuple) else x


def _spin_col(n, *marks):
    return tuple(-1 if i + 1 in marks else 1 for i in range(n))


# ---------------------------------------------------------------------------
# 1. the worked fixtures, each in under a second

def test_worked_examples_reproduced():
    clock = time.perf_counter

    t0 = clock()
    assert bijection.rc_to_path(5, FIVE_FACTOR_SPEC, FIVE_FACTOR_RC) == FIVE_FACTOR_PATH
    assert bijection.path_to_rc(FIVE_FACTOR_PATH) == FIVE_FACTOR_RC
    assert clock() - t0 < 1.0

    t0 = clock()
    assert rigged.rc_f(FIVE_FACTOR_RC, 4) == FIVE_FACTOR_RC_F4
    assert rigged.rc_f(FIVE_FACTOR_RC, 2) is None
    assert clock() - t0 < 1.0

    t0 = clock()
    trace = list(bijection.removal_trace(5, WALK_SPEC, WALK_START))
    assert trace[0] == ("start", WALK_START, None)
    pos = 1
    for move, levels, letter in WALK_STEPS:
        if move == "beta+delta":
            assert trace[pos][0] == "beta"
            pos += 1
        op, state, payload = trace[pos]
        assert op == move.split("+")[-1]
        canon = tuple(
            tuple(sorted(((l, r) for l, r in lev), key=lambda s: (-s[0], -s[1])))
            for lev in levels
        )
        assert state.rows == canon
        if letter is not None:
            assert payload == letter
        pos += 1
    assert [p for op, _, p in trace[1:pos] if op == "delta"] == WALK_LETTERS
    assert bijection.rc_to_path(5, WALK_SPEC, WALK_START) == WALK_PATH
    assert clock() - t0 < 1.0

    t0 = clock()
    assert bijection.path_to_rc(TRIPLE_ELEMENT) == TRIPLE_RC
    assert bijection.rc_to_path(5, tuple(reversed(TRIPLE_SPEC)), TRIPLE_RC) == TRIPLE_REVERSED
    assert clock() - t0 < 1.0


# ---------------------------------------------------------------------------
# 2. bijectivity between paths and configurations, weight by weight

def test_highest_weight_bijection():
    n = 4
    for spec in SPECS:
        L = rigged.multiplicity_array(n, spec)
        by_weight = {}
        for t in kr.tensor_highest(n, spec):
            by_weight.setdefault(crystals.weight(t), []).append(t)
        rc_lams = list(xm.rc_weights(n, L))
        assert set(by_weight) == set(rc_lams)
        for lam in rc_lams:
            paths = by_weight[lam]
            rcs = list(rigged.rigged_configurations(n, L, lam))
            assert len(paths) == len(rcs)
            rc_set = set(rcs)
            images = set()
            for t in paths:
                rc = bijection.path_to_rc(t)
                assert rc in rc_set
                assert bijection.rc_to_path(n, spec, rc) == t
                images.add(rc)
            assert len(images) == len(paths)
            path_set = set(paths)
            for rc in rcs:
                t = bijection.rc_to_path(n, spec, rc)
                assert t in path_set
                assert bijection.path_to_rc(t) == rc


# ---------------------------------------------------------------------------
# 3. the classical operators move through the bijection

def test_operator_equivariance():
    n = 4
    for spec in SPECS:
        if len(spec) == 2:
            table = {t: bijection.path_to_rc(t) for t in kr.tensor_elements(n, spec)}
        else:
            table = _phi_table(n, spec)
        for t, rc in table.items():
            for i in range(1, n + 1):
                ft = kr.apply_f(t, i)
                frc = rigged.rc_f(rc, i)
                assert (table[ft] if ft is not None else None) == frc
                et = kr.apply_e(t, i)
                erc = rigged.rc_e(rc, i)
                assert (table[et] if et is not None else None) == erc


# ---------------------------------------------------------------------------
# 4. factor swaps do not change the configuration

def test_factor_swap_invariance():
    n = 4
    for spec in [((2, 2), (1, 2), (1, 1)), ((4, 1), (2, 1), (1, 1))]:
        table = _phi_table(n, spec)
        for i in range(1, len(spec)):
            swapped = list(spec)
            j = len(spec) - i - 1
            swapped[j], swapped[j + 1] = swapped[j + 1], swapped[j]
            other = _phi_table(n, tuple(swapped))
            for t, rc in table.items():
                assert other[energy.apply_r(t, i)] == rc


# ---------------------------------------------------------------------------
# 5. rigging complement against the star dual of the path

def test_complement_duality():
    n = 4
    for spec in [((2, 1), (1, 1)), ((2, 2), (1, 1))]:
        for t in kr.tensor_highest(n, spec):
            assert bijection.path_to_rc(crystals.diamond(t)) == rigged.theta(
                bijection.path_to_rc(t)
            )


# ---------------------------------------------------------------------------
# 6. the elementary moves commute with their duals

def test_move_commutations():
    ds = lambda r: (lambda rc: bijection.delta_spin(rc, r))
    bd = lambda r: (lambda rc: bijection.beta_d(rc, r))
    gd = lambda r, s: (lambda rc: bijection.gamma_d(rc, r, s))
    relations = [
        (((1, 1), (1, 1)), bijection.delta, bijection.delta_d),
        (((2, 1), (1, 1)), bijection.delta, bd(2)),
        (((1, 2), (1, 1)), bijection.delta, gd(1, 2)),
        (((2, 2), (1, 1)), bijection.delta, gd(2, 2)),
        (((2, 1), (2, 1)), lambda rc: bijection.beta(rc, 2), bd(2)),
        (((2, 1), (1, 2)), lambda rc: bijection.beta(rc, 2), gd(1, 2)),
        (((2, 2), (1, 2), (1, 1)), lambda rc: bijection.gamma(rc, 2, 2), gd(1, 2)),
        (((4, 1), (1, 1)), ds(4), bijection.delta_d),
        (((3, 1), (1, 1)), ds(3), bijection.delta_d),
        (((4, 1), (2, 1)), ds(4), bd(2)),
        (((3, 1), (2, 1)), ds(3), bd(2)),
        (((4, 1), (1, 2)), ds(4), gd(1, 2)),
        (((3, 1), (1, 2)), ds(3), gd(1, 2)),
    ]
    for spec, first, second in relations:
        pool = _all_rcs(4, spec)
        assert pool, spec
        for rc in pool:
            one = _state(second(_state(first(rc))))
            two = _state(first(_state(second(rc))))
            assert one == two, (spec, rc)


# ---------------------------------------------------------------------------
# 7. intrinsic energy equals cocharge across the bijection

def test_energy_equals_cocharge():
    n = 4
    for spec in [((2, 2), (1, 1)), ((1, 2), (2, 1))]:
        for t in kr.tensor_highest(n, spec):
            cc = rigged.cocharge(rigged.theta(bijection.path_to_rc(t)))
            assert energy.intrinsic_energy(t) == cc


# ---------------------------------------------------------------------------
# 8. the two generating functions agree weight by weight

def test_generating_function_identity():
    for n in (4, 5):
        for spec in [((2, 1), (1, 1)), ((2, 2), (1, 1))]:
            rows = list(xm.compare(n, spec))
            assert rows
            for lam, x, m in rows:
                assert x == m, (n, spec, lam, x, m)


# ---------------------------------------------------------------------------
# 9. the affine structure

def test_affine_crystal_structure():
    n = 4
    for b in kr.kr_elements(n, 2, 2):
        assert kr.sigma(kr.sigma(b)) == b
    for b in kr.kr_elements(n, 4, 1):
        img = kr.sigma(b)
        assert img.r == 3 and kr.sigma(img) == b

    # closed two-case rule for the affine operators on spin columns
    for r in (3, 4):
        for b in kr.kr_elements(n, r, 1):
            pre = b.cols[0][:2]
            up = kr.aff_e(b)
            if pre == (1, 1):
                assert up is not None and up.cols[0] == (-1, -1) + b.cols[0][2:]
            else:
                assert up is None
            down = kr.aff_f(b)
            if pre == (-1, -1):
                assert down is not None and down.cols[0] == (1, 1) + b.cols[0][2:]
            else:
                assert down is None

    # lowering case analysis on the 2 by 2 factor
    checked = 0
    for b in kr.kr_elements(n, 2, 2):
        if any(crystals.eps(b, i) > (1 if i == n else 0) for i in range(1, n + 1)):
            continue
        checked += 1
        h, _ = crystals.to_highest(b)
        down = kr.aff_f(b)
        if crystals.shape(h) == (2, 2):
            assert down is None
        else:
            assert down == KRElement(n, 2, 2, ((2, 1),) + b.cols)
        up = kr.aff_e(b)
        if down is not None:
            assert kr.aff_e(down) == b
        if up is not None:
            assert kr.aff_f(up) == b
            delta = roots.sub(crystals.weight(up), crystals.weight(b))
            assert delta == (-2, -2, 0, 0)
    assert checked > 3

    # raising string lengths of the one-parameter tableau family
    r, s = 2, 2
    c = tuple(range(r, 0, -1))
    cp = (n,) + tuple(range(r, 2, -1)) + (1,)
    for alpha in range(s + 1):
        b = KRElement(n, r, s, (c,) * (s - alpha) + (cp,) * alpha)
        e, p = kr.aff_counts(b)
        assert e == 2 * s - alpha
        assert p == 0


# ---------------------------------------------------------------------------
# 10. local and intrinsic energy identities

def test_local_energy_identities():
    n = 4
    # pair energy against the widest highest element reads off the column count
    for r in (2, 3):
        for s in (1, 2):
            table = energy.local_energy(n, (3, 2), (r, s))
            u = crystals.highest_element(n, r, s)
            for a in range(0, min(2, s) + 1):
                cols = (_spin_col(n, n),) * (2 - a) + (_spin_col(n, 2),) * a
                assert table[(KRElement(n, 3, 2, cols), u)] == a

    # intrinsic energy against the index-reversed product
    for spec in SPECS:
        for t in kr.tensor_highest(n, spec):
            gap = energy.size2(t) - sum(crystals.weight(t))
            assert gap % 4 == 0
            rev = energy.intrinsic_energy(energy.varsigma(t))
            assert energy.intrinsic_energy(t) == rev + gap // 4

    # intrinsic energy survives splitting the rightmost factor
    for spec in [((1, 1), (1, 2)), ((1, 1), (2, 2)), ((2, 2), (1, 1), (1, 2))]:
        for t in kr.tensor_highest(n, spec):
            pair = kr.right_split(t.factors[-1])
            t2 = TensorElement(n, t.factors[:-1] + pair.factors)
            assert energy.intrinsic_energy(t2) == energy.intrinsic_energy(t)
