"""The bijection and its elementary moves."""

import pytest

from conftest import (
    FIVE_FACTOR_PATH,
    FIVE_FACTOR_RC,
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
from krrc import bijection, crystals, kr, rigged, roots, xm
from krrc.crystals import KRElement, TensorElement


def _canon(levels):
    return tuple(
        tuple(sorted(((l, r) for l, r in lev), key=lambda s: (-s[0], -s[1])))
        for lev in levels
    )


def _all_rcs(n, spec):
    L = rigged.multiplicity_array(n, spec)
    out = []
    for lam in xm.rc_weights(n, L):
        out.extend(rigged.rigged_configurations(n, L, lam))
    return out


# ---------------------------------------------------------------------------
# golden scenarios

def test_five_factor_removal(five_factor_rc, five_factor_path):
    assert bijection.rc_to_path(5, FIVE_FACTOR_SPEC, five_factor_rc) == five_factor_path


def test_five_factor_insertion(five_factor_rc, five_factor_path):
    assert bijection.path_to_rc(five_factor_path) == five_factor_rc


def test_triple_insertion_hits_shared_configuration():
    assert bijection.path_to_rc(TRIPLE_ELEMENT) == TRIPLE_RC


def test_triple_removal_in_reversed_type():
    spec = tuple(reversed(TRIPLE_SPEC))
    assert bijection.rc_to_path(5, spec, TRIPLE_RC) == TRIPLE_REVERSED


def test_walkthrough_states_letters_and_path():
    trace = list(bijection.removal_trace(5, WALK_SPEC, WALK_START))
    assert trace[0] == ("start", WALK_START, None)
    pos = 1
    for move, levels, letter in WALK_STEPS:
        if move == "beta+delta":
            assert trace[pos][0] == "beta"
            pos += 1
        op, state, payload = trace[pos]
        assert op == move.split("+")[-1]
        assert state.rows == _canon(levels)
        if letter is not None:
            assert payload == letter
        pos += 1
    letters = [p for op, _, p in trace[1:pos] if op == "delta"]
    assert letters == WALK_LETTERS
    assert bijection.rc_to_path(5, WALK_SPEC, WALK_START) == WALK_PATH


def test_walkthrough_vacancy_turnaround():
    # the first level's vacancies rise while the wide factor is half eaten
    # and drop back once its column is complete
    trace = list(bijection.removal_trace(5, WALK_SPEC, WALK_START))
    mid = trace[5][1]     # after the letter 3 removal
    done = trace[6][1]    # after the letter 1 removal
    assert [rigged.vacancy(mid, 1, l) for l, _ in mid.level(1)] == [1, 1]
    assert [rigged.vacancy(done, 1, l) for l, _ in done.level(1)] == [0, 0]


def test_walkthrough_box_count():
    # each removal emits one letter; a tableau factor of r rows and s columns
    # emits r times s letters in total
    trace = list(bijection.removal_trace(5, WALK_SPEC, WALK_START))
    letters = [p for op, _, p in trace if op == "delta"]
    assert len(letters) == sum(r * s for r, s in WALK_SPEC)


def test_round_trip_through_traces():
    rebuilt = None
    for op, state, payload in bijection.insertion_trace(WALK_PATH):
        rebuilt = state
    assert rebuilt == WALK_START


# ---------------------------------------------------------------------------
# elementary moves

def test_delta_on_empty():
    rc, k = bijection.delta(rigged.empty_rc(4, (((1, 1), 1),)))
    assert k == 1
    assert all(not rc.level(a) for a in range(1, 5))


def test_delta_inverse_round_trip():
    for rc in _all_rcs(4, ((2, 1), (1, 1))):
        out, k = bijection.delta(rc)
        assert bijection.delta_inv(out, k) == rc


def test_beta_gamma_inverses():
    for rc in _all_rcs(4, ((2, 2), (1, 1))):
        g = bijection.gamma(rc, 2, 2)
        assert bijection.gamma_inv(g, 2, 2) == rc
        b = bijection.beta(g, 2)
        assert bijection.beta_inv(b, 2) == g


def test_gamma_keeps_riggings():
    for rc in _all_rcs(4, ((1, 2), (1, 1))):
        assert bijection.gamma(rc, 1, 2).rows == rc.rows


def test_duals_equal_their_conjugates():
    for rc in _all_rcs(4, ((2, 2), (1, 1))):
        assert bijection.delta_d(rc) == bijection.delta_d_theta(rc)
        g = bijection.gamma_d(rc, 2, 2)
        assert g == bijection.gamma_d_theta(rc, 2, 2)
        assert bijection.beta_d(g, 2) == bijection.beta_d_theta(g, 2)


def test_emb_scaling():
    rc = FIVE_FACTOR_RC
    d = bijection.emb(rc)
    assert bijection.emb_inv(d) == rc
    assert rigged.weight(d) == roots.scale(2, rigged.weight(rc))
    with pytest.raises(RuntimeError):
        bijection.emb_inv(rc)


def test_spin_removal_of_highest_is_all_plus():
    u = crystals.highest_spin(4, 4, 1)
    rc = bijection.path_to_rc(TensorElement(4, (u,)))
    out, signs = bijection.delta_spin(rc, 4)
    assert signs == (1, 1, 1, 1)
    assert all(not out.level(a) for a in range(1, 5))


def test_spin_removal_round_trip():
    for rc in _all_rcs(4, ((4, 1), (1, 1))):
        out, signs = bijection.delta_spin(rc, 4)
        assert bijection.delta_spin_inv(out, 4, signs) == rc


def test_highest_rc_matches_insertion():
    for n, r, s in [(4, 2, 2), (5, 3, 2)]:
        for lam in kr.kr_shapes(n, r, s):
            u = crystals.highest_element(n, r, s, lam)
            direct = bijection.highest_rc(n, r, s, lam)
            assert bijection.path_to_rc(TensorElement(n, (u,))) == direct
            assert all(rig == 0 for a in range(1, n + 1) for _, rig in direct.level(a))


def test_split_intertwines_with_dual_gamma():
    # splitting the rightmost column of a highest factor acts on its
    # configuration as the dual wide-factor split
    for n, r, s in [(4, 2, 2), (5, 3, 2)]:
        for lam in kr.kr_shapes(n, r, s):
            u = crystals.highest_element(n, r, s, lam)
            pair = kr.right_split(u)
            lhs = bijection.path_to_rc(pair)
            rhs = bijection.gamma_d(bijection.path_to_rc(TensorElement(n, (u,))), r, s)
            assert lhs == rhs


# ---------------------------------------------------------------------------
# whole crystal tables

def test_phi_map_is_injective():
    table = bijection.phi_map(4, ((2, 1), (1, 1)))
    assert len(set(table.values())) == len(table)
    inv = bijection.phi_inverse_map(4, ((2, 1), (1, 1)))
    for t, rc in table.items():
        assert inv[rc] == t


def test_direct_insertion_equals_transport():
    for spec in [((2, 1), (1, 1)), ((4, 1), (2, 1))]:
        for t, rc in bijection.phi_map(4, spec).items():
            assert bijection.path_to_rc(t) == rc


def test_path_images_are_restricted_highest():
    for t in kr.tensor_highest(4, ((2, 2), (1, 1))):
        rc = bijection.path_to_rc(t)
        assert rigged.is_highest(rc)
        assert rigged.weight(rc) == crystals.weight(t)


def test_type_mismatch_rejected():
    with pytest.raises(ValueError):
        bijection.rc_to_path(5, ((1, 1),), FIVE_FACTOR_RC)
