"""The bijection between tensor products of KR crystals and rigged configurations.

The forward map consumes a tensor element factor by factor, leftmost first.
Wide factors are first split into columns (gamma), columns are peeled cell by
cell (beta), and every single box is absorbed into the configuration while
emitting a letter (delta).  Collecting the letters column by column recovers
the rectangular filling of each factor.  Spin factors are removed one sign
column at a time by a doubled run of the same operations.

Every operation acts on unrestricted configurations directly; riggings may be
negative throughout.  Inverse operations replay the same moves backwards, so
the bijection and its inverse are literal mirror images of each other.  The
dual operations, written with a trailing underscore d, complement the role of
singular and cosingular strings and are equivalent to conjugating by the
rigging complement theta.
"""

from collections import deque
from math import inf

from . import crystals, rigged, roots
from .crystals import KRElement, TensorElement
from .rigged import RC


# ---------------------------------------------------------------------------
# multiplicity array surgery

def _adjust(L, *changes):
    counts = dict(L)
    for key, d in changes:
        counts[key] = counts.get(key, 0) + d
        if counts[key] < 0:
            raise ValueError(f"no factor B^{{{key[0]},{key[1]}}} left to remove")
    return tuple(sorted((k, m) for k, m in counts.items() if m))


def _surgery_add(rc, l_changes, levels, cosingular=False):
    """Adjust the multiplicity array and create a length one string per level.

    The new strings are singular (or cosingular) for the adjusted data; all
    other strings keep their riggings, which is consistent because this kind
    of surgery never moves a vacancy number of an occupied row.
    """
    n = rc.n
    new_L = _adjust(rc.L, *l_changes)
    idx = roots.classical_indices(n)
    nus = tuple(
        tuple(sorted(rc.nu(a) + ((1,) if a in levels else ()), reverse=True))
        for a in idx
    )
    out = []
    for a in idx:
        lv = list(rc.level(a))
        if a in levels:
            p = rigged.vacancy_raw(n, new_L, nus, a, 1)
            lv.append((1, 0 if cosingular else p))
        out.append(tuple(lv))
    return RC(n, new_L, tuple(out))


def _surgery_remove(rc, l_changes, levels, cosingular=False):
    n = rc.n
    new_L = _adjust(rc.L, *l_changes)
    out = []
    for a in roots.classical_indices(n):
        lv = list(rc.level(a))
        if a in levels:
            target = 0 if cosingular else rigged.vacancy(rc, a, 1)
            for i, (length, rig) in enumerate(lv):
                if length == 1 and rig == target:
                    del lv[i]
                    break
            else:
                raise RuntimeError(f"no length one string to absorb at level {a}")
        out.append(tuple(lv))
    return RC(n, new_L, tuple(out))


# ---------------------------------------------------------------------------
# delta: absorb one box, emit one letter

def _delta_generic(rc, cosingular):
    n = rc.n
    if dict(rc.L).get((1, 1), 0) < 1:
        raise ValueError("no single box factor to remove")

    vac = {}

    def invac(a, length):
        if (a, length) not in vac:
            vac[(a, length)] = rigged.vacancy(rc, a, length)
        return vac[(a, length)]

    def pick(a, bound, used):
        """Shortest selectable string of length at least bound, or None."""
        best = None
        for i, (length, rig) in enumerate(rc.level(a)):
            if length < bound or (a, i) in used:
                continue
            if rig != (0 if cosingular else invac(a, length)):
                continue
            if best is None or length < best[0]:
                best = (length, i)
        return best

    sel = set()
    letter = None
    bound = 1
    for a in range(1, n - 1):
        hit = pick(a, bound, sel)
        if hit is None:
            letter = a
            break
        bound = hit[0]
        sel.add((a, hit[1]))
    if letter is None:
        h1 = pick(n - 1, bound, sel)
        h2 = pick(n, bound, sel)
        if h1 is None and h2 is None:
            letter = n - 1
        elif h2 is None:
            sel.add((n - 1, h1[1]))
            letter = n
        elif h1 is None:
            sel.add((n, h2[1]))
            letter = -n
        else:
            sel.add((n - 1, h1[1]))
            sel.add((n, h2[1]))
            bound = max(h1[0], h2[0])
            for a in range(n - 2, 0, -1):
                hit = pick(a, bound, sel)
                if hit is None:
                    letter = -(a + 1)
                    break
                bound = hit[0]
                sel.add((a, hit[1]))
            else:
                letter = -1

    new_L = _adjust(rc.L, ((1, 1), -1))
    idx = roots.classical_indices(n)
    plan = []
    for a in idx:
        entries = []
        for i, (length, rig) in enumerate(rc.level(a)):
            shrunk = (a, i) in sel
            entries.append((length - 1 if shrunk else length, length, rig, shrunk))
        plan.append(entries)
    nus = tuple(
        tuple(sorted((e[0] for e in plan[a - 1] if e[0] > 0), reverse=True))
        for a in idx
    )
    out = []
    for a in idx:
        lv = []
        for newlen, oldlen, oldrig, shrunk in plan[a - 1]:
            if newlen == 0:
                continue
            if shrunk:
                p = rigged.vacancy_raw(n, new_L, nus, a, newlen)
                lv.append((newlen, 0 if cosingular else p))
            elif cosingular:
                p = rigged.vacancy_raw(n, new_L, nus, a, newlen)
                lv.append((newlen, p - (invac(a, oldlen) - oldrig)))
            else:
                lv.append((newlen, oldrig))
        out.append(tuple(lv))
    return RC(n, new_L, tuple(out)), letter


def delta(rc):
    """Remove a single box factor, shortening one singular string per visited
    level, and report which letter the removed box carries.

    The search walks up the levels, continues through both tail levels of the
    diagram when possible, and then returns back down; a failed step at any
    point decides the letter.  Unselected strings keep their riggings.
    """
    return _delta_generic(rc, False)


def delta_d(rc):
    """Dual box removal: selects cosingular strings, preserves coriggings."""
    return _delta_generic(rc, True)


def _slots(n, letter):
    """Level sequence, earliest first, along which the inverse adds boxes.

    The marker object stands for the pair of tail levels, which are served
    together.
    """
    v = abs(letter)
    if letter > 0:
        if v == n:
            return [n - 1] + list(range(n - 2, 0, -1))
        return list(range(v - 1, 0, -1))
    if v == n:
        return [n] + list(range(n - 2, 0, -1))
    if v == n - 1:
        return ["fork"] + list(range(n - 2, 0, -1))
    return list(range(v, n - 1)) + ["fork"] + list(range(n - 2, 0, -1))


def delta_inv(rc, letter):
    """Add back a single box factor carrying the given letter.

    Boxes are appended to the largest singular string that stays within the
    running length bound, with a fresh length one string always available as
    a fallback; no string is extended twice.  Singularity is judged in the
    incoming configuration.
    """
    n = rc.n
    if not (1 <= abs(letter) <= n):
        raise ValueError(f"letter {letter} out of range")
    vac = {}

    def invac(a, length):
        if (a, length) not in vac:
            vac[(a, length)] = rigged.vacancy(rc, a, length)
        return vac[(a, length)]

    work = [[[length, rig] for length, rig in rc.level(a)] for a in roots.classical_indices(n)]
    grown = set()

    def grow(a, bound):
        best = None
        for i, (length, _) in enumerate(work[a - 1]):
            if (a, i) in grown or length + 1 > bound:
                continue
            length0, rig0 = rc.level(a)[i]
            if rig0 != invac(a, length0):
                continue
            if best is None or length > best[0]:
                best = (length, i)
        if best is None:
            if bound < 1:
                raise RuntimeError("no room to add a box")
            work[a - 1].append([1, None])
            grown.add((a, len(work[a - 1]) - 1))
            return 1
        work[a - 1][best[1]][0] = best[0] + 1
        grown.add((a, best[1]))
        return best[0] + 1

    bound = inf
    for slot in _slots(n, letter):
        if slot == "fork":
            l1 = grow(n - 1, bound)
            l2 = grow(n, bound)
            bound = min(l1, l2)
        else:
            bound = grow(slot, bound)

    new_L = _adjust(rc.L, ((1, 1), 1))
    idx = roots.classical_indices(n)
    nus = tuple(
        tuple(sorted((length for length, _ in work[a - 1]), reverse=True)) for a in idx
    )
    out = []
    for a in idx:
        lv = []
        for i, (length, rig) in enumerate(work[a - 1]):
            if (a, i) in grown:
                lv.append((length, rigged.vacancy_raw(n, new_L, nus, a, length)))
            else:
                lv.append((length, rig))
        out.append(tuple(lv))
    return RC(n, new_L, tuple(out))


# ---------------------------------------------------------------------------
# beta: peel one cell off a column factor

def beta(rc, r):
    """Trade the leftmost height r column factor for a box and a shorter column."""
    if not 1 < r <= rc.n - 2:
        raise ValueError(f"no column of height {r} to peel")
    return _surgery_add(
        rc, (((r, 1), -1), ((1, 1), 1), ((r - 1, 1), 1)), set(range(1, r))
    )


def beta_inv(rc, r):
    if not 1 < r <= rc.n - 2:
        raise ValueError(f"no column of height {r} to rebuild")
    return _surgery_remove(
        rc, (((r, 1), 1), ((1, 1), -1), ((r - 1, 1), -1)), set(range(1, r))
    )


def beta_d(rc, r):
    """Dual peel: the new length one strings are cosingular."""
    if not 1 < r <= rc.n - 2:
        raise ValueError(f"no column of height {r} to peel")
    return _surgery_add(
        rc, (((r, 1), -1), ((1, 1), 1), ((r - 1, 1), 1)), set(range(1, r)), cosingular=True
    )


# ---------------------------------------------------------------------------
# gamma: split one column off a wide factor

def gamma(rc, r, s):
    """Trade the leftmost r by s factor for a column and an r by s-1 factor."""
    if s < 2:
        raise ValueError("nothing to split off")
    new_L = _adjust(rc.L, ((r, s), -1), ((r, s - 1), 1), ((r, 1), 1))
    return RC(rc.n, new_L, rc.rows)


def gamma_inv(rc, r, s):
    if s < 2:
        raise ValueError("nothing to merge")
    new_L = _adjust(rc.L, ((r, s), 1), ((r, s - 1), -1), ((r, 1), -1))
    return RC(rc.n, new_L, rc.rows)


def gamma_d(rc, r, s):
    """Dual split: strings at the factor's level shorter than s gain a rigging."""
    if s < 2:
        raise ValueError("nothing to split off")
    new_L = _adjust(rc.L, ((r, s), -1), ((r, s - 1), 1), ((r, 1), 1))
    rows = list(rc.rows)
    rows[r - 1] = tuple(
        (length, rig + 1 if length < s else rig) for length, rig in rc.level(r)
    )
    return RC(rc.n, new_L, tuple(rows))


# ---------------------------------------------------------------------------
# conjugated forms of the duals, for cross checking

def delta_d_theta(rc):
    x, letter = delta(rigged.theta(rc))
    return rigged.theta(x), letter


def beta_d_theta(rc, r):
    return rigged.theta(beta(rigged.theta(rc), r))


def gamma_d_theta(rc, r, s):
    return rigged.theta(gamma(rigged.theta(rc), r, s))


# ---------------------------------------------------------------------------
# spin column removal

def emb(rc):
    """Doubling embedding: all widths, lengths and riggings scale by two."""
    L2 = tuple(((a, 2 * i), m) for (a, i), m in rc.L)
    rows2 = tuple(tuple((2 * l, 2 * x) for l, x in lv) for lv in rc.rows)
    return RC(rc.n, L2, rows2)


def emb_inv(rc):
    for (_, i), _ in rc.L:
        if i % 2:
            raise RuntimeError("configuration not in the doubled image")
    for lv in rc.rows:
        for length, x in lv:
            if length % 2 or x % 2:
                raise RuntimeError("configuration not in the doubled image")
    L2 = tuple(((a, i // 2), m) for (a, i), m in rc.L)
    rows2 = tuple(tuple((l // 2, x // 2) for l, x in lv) for lv in rc.rows)
    return RC(rc.n, L2, rows2)


def beta_spin(rc, r):
    """Open a doubled spin column: a box, a tail column, and a spin remnant."""
    n = rc.n
    if r not in (n - 1, n):
        raise ValueError("only the two tail levels carry spin columns")
    other = 2 * n - 1 - r
    return _surgery_add(
        rc,
        (((r, 2), -1), ((r, 1), 1), ((1, 1), 1), ((other, 1), 1)),
        set(range(1, n - 1)) | {other},
    )


def beta_spin_inv(rc, r):
    n = rc.n
    if r not in (n - 1, n):
        raise ValueError("only the two tail levels carry spin columns")
    other = 2 * n - 1 - r
    return _surgery_remove(
        rc,
        (((r, 2), 1), ((r, 1), -1), ((1, 1), -1), ((other, 1), -1)),
        set(range(1, n - 1)) | {other},
    )


def beta_bar(rc):
    """Merge the two spin remnants into a box and a height n-2 column."""
    n = rc.n
    return _surgery_add(
        rc,
        (((n - 1, 1), -1), ((n, 1), -1), ((1, 1), 1), ((n - 2, 1), 1)),
        set(range(1, n - 1)),
    )


def beta_bar_inv(rc):
    n = rc.n
    return _surgery_remove(
        rc,
        (((n - 1, 1), 1), ((n, 1), 1), ((1, 1), -1), ((n - 2, 1), -1)),
        set(range(1, n - 1)),
    )


def _column_signs(n, letters):
    """Sign column encoded by the letters of a removed spin column.

    The letters must visit every magnitude once, in decreasing order; the
    sign at a coordinate records whether its letter came out barred.
    """
    keys = [crystals.letter_key(n, x) for x in letters]
    if sorted(keys, reverse=True) != keys or {abs(x) for x in letters} != set(range(1, n + 1)):
        raise RuntimeError("spin removal produced an invalid column")
    signs = [0] * n
    for x in letters:
        signs[abs(x) - 1] = 1 if x > 0 else -1
    return tuple(signs)


def spin_letters(n, signs):
    """Letters of a sign column, top cell first: unbarred magnitudes with a
    plus sign in increasing order, then barred ones."""
    letters = [i if sg > 0 else -i for i, sg in enumerate(signs, 1)]
    return sorted(letters, key=lambda x: crystals.letter_key(n, x))


def delta_spin(rc, r):
    """Remove a spin column factor at tail level r, returning its signs.

    Runs inside the doubled picture: the spin column opens into ordinary
    columns which are peeled by the usual moves, one letter per level of the
    column, deepest cell first.
    """
    n = rc.n
    d = beta_spin(emb(rc), r)
    letters = []
    d, k = delta(d)
    letters.append(k)
    d = beta_bar(d)
    d, k = delta(d)
    letters.append(k)
    for p in range(n - 2, 1, -1):
        d = beta(d, p)
        d, k = delta(d)
        letters.append(k)
    d, k = delta(d)
    letters.append(k)
    return emb_inv(d), _column_signs(n, letters)


def delta_spin_inv(rc, r, signs):
    """Add back a spin column factor with the given signs."""
    n = rc.n
    feed = spin_letters(n, signs)
    d = delta_inv(emb(rc), feed[0])
    pos = 1
    for p in range(2, n - 1):
        d = delta_inv(d, feed[pos])
        pos += 1
        d = beta_inv(d, p)
    d = delta_inv(d, feed[pos])
    d = beta_bar_inv(d)
    d = delta_inv(d, feed[pos + 1])
    d = beta_spin_inv(d, r)
    return emb_inv(d)


def delta_spin_d(rc, r):
    """Dual spin column removal, conjugated through the rigging complement."""
    x, signs = delta_spin(rigged.theta(rc), r)
    return rigged.theta(x), signs


# ---------------------------------------------------------------------------
# highest weight seeds

def _complement(lam, r, s):
    rows = list(lam) + [0] * (r - len(lam))
    out = tuple(s - rows[r - 1 - j] for j in range(r))
    return tuple(x for x in out if x > 0)


def highest_rc(n, r, s, lam=None):
    """Configuration of the highest element of a single factor.

    For a tableau factor in the component of shape lam, the levels at and
    above r repeat the complement of lam in the r by s rectangle, the levels
    below drop its longest rows one by one, and the two tail levels halve its
    columns.  All riggings and all vacancy numbers vanish.  Spin factors sit
    on the empty configuration.
    """
    L = (((r, s), 1),)
    if r > n - 2:
        return rigged.empty_rc(n, L)
    lamc = _complement(lam or (), r, s)
    halves = roots.conjugate(lamc)
    if any(h % 2 for h in halves):
        raise ValueError(f"shape {lam} is not a component of this factor")
    tail = roots.conjugate(tuple(h // 2 for h in halves))
    rows = []
    for a in range(1, n + 1):
        if a >= n - 1:
            part = tail
        elif a >= r:
            part = lamc
        else:
            part = lamc[r - a :]
        rows.append(tuple((x, 0) for x in part))
    return RC(n, L, tuple(rows))


def phi_single(b):
    """Image of one factor, via its highest element and operator transport."""
    t = TensorElement(b.n, (b,))
    h, trace = crystals.to_highest(t)
    hb = h.factors[0]
    lam = None if b.spin else crystals.shape(hb)
    rc = highest_rc(b.n, b.r, b.s, lam)
    return rigged.replay_f(rc, trace)


# ---------------------------------------------------------------------------
# fillings

def _check_empty(rc):
    if rc.L or any(rc.rows[a] for a in range(rc.n)):
        raise RuntimeError("configuration was not exhausted")


def _consume_column(rc, r):
    letters = []
    for p in range(r, 1, -1):
        rc = beta(rc, p)
        rc, k = delta(rc)
        letters.append(k)
    rc, k = delta(rc)
    letters.append(k)
    return rc, tuple(letters)


def _add_column(rc, r, col):
    rc = delta_inv(rc, col[r - 1])
    for p in range(2, r + 1):
        rc = delta_inv(rc, col[r - p])
        rc = beta_inv(rc, p)
    return rc


_FILL = {}


def fill(b):
    """Rectangle of letters behind one tableau factor.

    Returned as a tuple of s columns, each listing its r letters bottom to
    top, exactly in the order the removal spell emits them.
    """
    hit = _FILL.get(b)
    if hit is not None:
        return hit
    if b.spin:
        raise ValueError("spin factors carry sign columns, not fillings")
    n, r, s = b.n, b.r, b.s
    rc = phi_single(b)
    cols = []
    for w in range(s, 0, -1):
        if w > 1:
            rc = gamma(rc, r, w)
        rc, letters = _consume_column(rc, r)
        cols.append(letters)
    _check_empty(rc)
    out = tuple(cols)
    _FILL[b] = out
    return out


_INVERSE_FILL = {}


def inverse_fill(n, r, s, rect):
    """Tableau factor whose filling is the given rectangle of letters."""
    key = (n, r, s, rect)
    hit = _INVERSE_FILL.get(key)
    if hit is not None:
        return hit
    if len(rect) != s or any(len(col) != r for col in rect):
        raise ValueError("need a full rectangle of letters")
    rc = rigged.empty_rc(n, ())
    for j in range(s - 1, -1, -1):
        rc = _add_column(rc, r, rect[j])
        if s - j > 1:
            rc = gamma_inv(rc, r, s - j)
    h, trace = rigged.to_highest(rc)
    lam = roots.partition_from_dominant(n, rigged.weight(h))
    t = TensorElement(n, (crystals.highest_tableau(n, r, s, lam),))
    for a in reversed(trace):
        t = crystals.apply_f(t, a)
        if t is None:
            raise RuntimeError("letters do not assemble into a factor")
    out = t.factors[0]
    _INVERSE_FILL[key] = out
    _FILL[out] = rect
    return out


_SPLIT_EMPTY = {}


def split_of_empty(n, r, s):
    """Column split of the weight zero highest element of an r by s factor."""
    key = (n, r, s)
    if key not in _SPLIT_EMPTY:
        rc = gamma(highest_rc(n, r, s, ()), r, s)
        _SPLIT_EMPTY[key] = rc_to_path(n, ((r, 1), (r, s - 1)), rc)
    return _SPLIT_EMPTY[key]


# ---------------------------------------------------------------------------
# the bijection

def rc_to_path(n, spec, rc):
    """Tensor element of the given type attached to a configuration.

    Factors are produced leftmost first; the configuration must carry
    exactly the multiplicity array of the spec and is emptied on the way.
    """
    if rc.L != rigged.multiplicity_array(n, spec):
        raise ValueError("configuration does not match the tensor type")
    factors = []
    for r, s in spec:
        if r > n - 2:
            cols = []
            for w in range(s, 0, -1):
                if w > 1:
                    rc = gamma(rc, r, w)
                rc, signs = delta_spin(rc, r)
                cols.append(signs)
            factors.append(KRElement(n, r, s, tuple(cols)))
        else:
            rect = []
            for w in range(s, 0, -1):
                if w > 1:
                    rc = gamma(rc, r, w)
                rc, letters = _consume_column(rc, r)
                rect.append(letters)
            factors.append(inverse_fill(n, r, s, tuple(rect)))
    _check_empty(rc)
    return TensorElement(n, tuple(factors))


def _add_factor(rc, b):
    n, r, s = b.n, b.r, b.s
    if b.spin:
        for j in range(s - 1, -1, -1):
            rc = delta_spin_inv(rc, r, b.cols[j])
            if s - j > 1:
                rc = gamma_inv(rc, r, s - j)
        return rc
    rect = fill(b)
    for j in range(s - 1, -1, -1):
        rc = _add_column(rc, r, rect[j])
        if s - j > 1:
            rc = gamma_inv(rc, r, s - j)
    return rc


def path_to_rc(t):
    """Configuration attached to a tensor element, rightmost factor first."""
    rc = rigged.empty_rc(t.n, ())
    for b in reversed(t.factors):
        rc = _add_factor(rc, b)
    return rc


def removal_trace(n, spec, rc):
    """Yield every intermediate state of the removal run, op by op.

    Each step is (op, state, payload) where op names the move, state is the
    configuration after it, and payload is the emitted letter for delta, the
    sign column for delta_spin, and None otherwise.  The schedule matches
    rc_to_path exactly; the final state is empty.
    """
    if rc.L != rigged.multiplicity_array(n, spec):
        raise ValueError("configuration does not match the tensor type")
    yield ("start", rc, None)
    for r, s in spec:
        for w in range(s, 0, -1):
            if w > 1:
                rc = gamma(rc, r, w)
                yield ("gamma", rc, None)
            if r > n - 2:
                rc, signs = delta_spin(rc, r)
                yield ("delta_spin", rc, signs)
            else:
                for p in range(r, 1, -1):
                    rc = beta(rc, p)
                    yield ("beta", rc, None)
                    rc, k = delta(rc)
                    yield ("delta", rc, k)
                rc, k = delta(rc)
                yield ("delta", rc, k)
    _check_empty(rc)


def insertion_trace(t):
    """Yield every intermediate state of the insertion run, op by op.

    Mirrors path_to_rc: factors enter rightmost first, each through its
    column letters.  Steps are (op, state, payload) with payload the fed
    letter or sign column where one applies.
    """
    rc = rigged.empty_rc(t.n, ())
    yield ("start", rc, None)
    for b in reversed(t.factors):
        r, s = b.r, b.s
        for j in range(s - 1, -1, -1):
            if b.spin:
                rc = delta_spin_inv(rc, r, b.cols[j])
                yield ("delta_spin_inv", rc, b.cols[j])
            else:
                col = fill(b)[j]
                rc = delta_inv(rc, col[r - 1])
                yield ("delta_inv", rc, col[r - 1])
                for p in range(2, r + 1):
                    rc = delta_inv(rc, col[r - p])
                    yield ("delta_inv", rc, col[r - p])
                    rc = beta_inv(rc, p)
                    yield ("beta_inv", rc, None)
            if s - j > 1:
                rc = gamma_inv(rc, r, s - j)
                yield ("gamma_inv", rc, None)


# ---------------------------------------------------------------------------
# whole crystal tables

_PHI_TABLE = {}


def phi_map(n, spec):
    """Bijection table for a whole tensor product.

    Seeds every highest element through the removal spell and grows the rest
    along lowering operators, checking agreement whenever two routes meet.
    """
    key = (n, tuple(spec))
    hit = _PHI_TABLE.get(key)
    if hit is not None:
        return hit
    from . import kr

    table = {}
    queue = deque()
    for t in kr.tensor_highest(n, spec):
        rc = path_to_rc(t)
        table[t] = rc
        queue.append(t)
    while queue:
        t = queue.popleft()
        rc = table[t]
        for a in roots.classical_indices(n):
            t2 = crystals.apply_f(t, a)
            if t2 is None:
                continue
            rc2 = rigged.rc_f(rc, a)
            if rc2 is None:
                raise RuntimeError("operators fell out of step across the bijection")
            known = table.get(t2)
            if known is None:
                table[t2] = rc2
                queue.append(t2)
            elif known != rc2:
                raise RuntimeError("two lowering routes disagree across the bijection")
    _PHI_TABLE[key] = table
    return table


def phi_inverse_map(n, spec):
    """Configuration to element lookup for a whole tensor product."""
    return {rc: t for t, rc in phi_map(n, spec).items()}
