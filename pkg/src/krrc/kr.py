"""Kirillov-Reshetikhin crystals B^{r,s} of type D_n and their affine operators.

For 1 <= r <= n-2 the classical decomposition runs over shapes obtained from
the r x s rectangle by removing vertical dominoes; for r = n-1, n the crystal
is a single spin component.  The affine raising and lowering operators are
realized through the involution sigma, which exchanges the affine node with
node 1.  On the non-spin crystals sigma is computed by transporting elements
to the {2..n}-highest place, where it acts as an explicit involution of
plus-minus diagrams; on the spin crystals it is the analogous {2..n}-crystal
isomorphism between the two spin families.
"""

from itertools import combinations_with_replacement

from . import crystals, roots
from .crystals import KRElement, TensorElement


def _subrange(n):
    return tuple(range(2, n + 1))


def _replay_f(x, trace):
    for i in reversed(trace):
        x = crystals.apply_f(x, i)
        if x is None:
            raise RuntimeError("lowering trace broke; the map is not equivariant here")
    return x


# ---------------------------------------------------------------------------
# enumeration

def kr_shapes(n, r, s):
    """Classical components of B^{r,s} for r <= n-2, as row partitions."""
    if r > n - 2:
        raise ValueError("spin crystals have a single component")
    allowed = tuple(range(r, -1, -2))
    shapes = []
    for heights in combinations_with_replacement(allowed, s):
        hs = tuple(sorted(heights, reverse=True))
        rows = roots.conjugate(tuple(h for h in hs if h > 0))
        if rows not in shapes:
            shapes.append(rows)
    return shapes


_HIGHEST = {}
_ELEMENTS = {}


def kr_highest(n, r, s):
    """All classically highest elements of B^{r,s}."""
    key = (n, r, s)
    if key not in _HIGHEST:
        if r >= n - 1:
            _HIGHEST[key] = (crystals.highest_spin(n, r, s),)
        else:
            _HIGHEST[key] = tuple(
                crystals.highest_tableau(n, r, s, lam) for lam in kr_shapes(n, r, s)
            )
    return _HIGHEST[key]


def kr_elements(n, r, s):
    key = (n, r, s)
    if key not in _ELEMENTS:
        out = set()
        for u in kr_highest(n, r, s):
            out |= crystals.component(u)
        _ELEMENTS[key] = frozenset(out)
    return _ELEMENTS[key]


def tensor_highest(n, spec):
    """All paths (classically highest elements) of the tensor product.

    spec lists (r, s) pairs leftmost factor first.  Partial products are
    pruned using the fact that any right tail of a path is again a path.
    """
    partial = [TensorElement(n, ())]
    for r, s in reversed(spec):
        grown = []
        for t in partial:
            for b in kr_elements(n, r, s):
                cand = TensorElement(n, (b,) + t.factors)
                if crystals.is_highest(cand):
                    grown.append(cand)
        partial = grown
    return partial


def tensor_elements(n, spec):
    """Every element of the tensor product, grown from its paths."""
    out = set()
    for t in tensor_highest(n, spec):
        out |= crystals.component(t)
    return out


# ---------------------------------------------------------------------------
# plus-minus diagrams

_SIGNS = ("0", "+", "-", "=")  # "=" marks a column carrying both signs


def _column_triple(h, sign):
    """Heights (outer, middle, inner) of one diagram column."""
    if sign == "0":
        return (h, h, h)
    if sign == "+":
        return (h, h, h - 1)
    if sign == "-":
        return (h, h - 1, h - 1)
    return (h, h - 1, h - 2)


def _column_ok(r, h, sign):
    if h > r or h % 2 != r % 2:
        return False
    if sign == "0":
        return h >= 0
    if sign in ("+", "-"):
        return h >= 1
    return h >= 2


def pm_diagrams(r, s):
    """All plus-minus diagrams with s columns inside the r x s rectangle."""
    types = [(h, sgn) for h in range(r + 1) for sgn in _SIGNS if _column_ok(r, h, sgn)]
    out = []
    for combo in combinations_with_replacement(types, s):
        cols = tuple(sorted(combo, key=lambda c: _column_triple(*c), reverse=True))
        out.append(cols)
    return out


def pm_shape(cols):
    """Inner shape of a diagram, as a row partition."""
    heights = tuple(t[2] for t in (_column_triple(h, sgn) for h, sgn in cols) if t[2] > 0)
    return roots.conjugate(heights)


def s_involution(r, cols):
    """Involution on diagrams behind sigma.

    At each height it trades plus-only columns with minus-only ones, and
    columns carrying both signs with sign-free columns two rows shorter.
    Sign-free columns of full height r are fixed.
    """
    swapped = []
    for h, sgn in cols:
        if sgn == "+":
            swapped.append((h, "-"))
        elif sgn == "-":
            swapped.append((h, "+"))
        elif sgn == "=":
            swapped.append((h - 2, "0"))
        else:
            swapped.append((h, "0") if h == r else (h + 2, "="))
    return tuple(sorted(swapped, key=lambda c: _column_triple(*c), reverse=True))


def kappa(n, r, s, cols):
    """Tableau realization of a plus-minus diagram.

    Builds the {2..n}-highest element of B^{r,s} attached to the diagram.
    Every minus becomes a barred one at the bottom of its column and the
    rest of each column is filled with 2,3,...  The pluses are then worked
    in, deepest first; each one claims the leftmost column that still offers
    a barred one at its foot or an untouched leading 2, either barring the
    one one step further or bending the column into a near-initial segment.
    """
    heights = [h for h, _ in cols if h > 0]
    signs = [sgn for h, sgn in cols if h > 0]
    grid = []
    for h, sgn in zip(heights, signs):
        body = h - 1 if sgn in ("-", "=") else h
        col = list(range(2, body + 2))
        if sgn in ("-", "="):
            col.append(-1)
        grid.append(col)

    plus_rows = []
    for ci, (h, sgn) in enumerate(zip(heights, signs)):
        if sgn == "+":
            plus_rows.append((h, ci))
        elif sgn == "=":
            plus_rows.append((h - 1, ci))
    plus_rows.sort(key=lambda t: (-t[0], t[1]))

    for hp, _ in plus_rows:
        target = None
        for col in grid:
            if col and col[-1] == -1:
                target = ("bar", col)
            elif col and col[0] == 2:
                target = ("string", col)
            if target:
                break
        if target is None:
            raise RuntimeError("plus insertion found no slot")
        kind, col = target
        if kind == "bar":
            col[-1] = -(hp + 1)
        else:
            k = col[-1] if col[-1] > 0 else col[-2]
            tail = [] if col[-1] > 0 else [col[-1]]
            if hp >= k:
                body = list(range(1, k))
            else:
                body = list(range(1, hp + 1)) + list(range(hp + 2, k + 1))
            col[:] = body + tail

    out = tuple(tuple(reversed(col)) for col in grid)
    return KRElement(n, r, s, out)


_KAPPA = {}


def kappa_tables(n, r, s):
    """Forward and inverse dictionaries of the diagram realization."""
    key = (n, r, s)
    if key not in _KAPPA:
        fwd = {}
        for cols in pm_diagrams(r, s):
            fwd[cols] = kappa(n, r, s, cols)
        sub = _subrange(n)
        top = {b for b in kr_elements(n, r, s) if crystals.is_highest(b, sub)}
        if set(fwd.values()) != top or len(set(fwd.values())) != len(fwd):
            raise RuntimeError(f"diagram realization failed for B^{{{r},{s}}}")
        _KAPPA[key] = (fwd, {v: k for k, v in fwd.items()})
    return _KAPPA[key]


# ---------------------------------------------------------------------------
# sigma and the affine operators

_SIGMA = {}


def _sigma_tableau(b):
    fwd, inv = kappa_tables(b.n, b.r, b.s)
    h, etr = crystals.to_highest(b, _subrange(b.n))
    image = fwd[s_involution(b.r, inv[h])]
    return _replay_f(image, etr)


def _spin_top_form(n, r, s, alpha):
    """The {2..n}-highest spin element with parameter alpha."""
    allplus = (1,) * n
    c1n = (-1,) + (1,) * (n - 2) + (-1,)
    cn = (1,) * (n - 1) + (-1,)
    c1 = (-1,) + (1,) * (n - 1)
    if r == n:
        cols = (allplus,) * alpha + (c1n,) * (s - alpha)
    else:
        cols = (cn,) * (s - alpha) + (c1,) * alpha
    return KRElement(n, r, s, cols)


_SPIN_TOP = {}


def _spin_top_table(n, r, s):
    key = (n, r, s)
    if key not in _SPIN_TOP:
        _SPIN_TOP[key] = {_spin_top_form(n, r, s, a): a for a in range(s + 1)}
    return _SPIN_TOP[key]


def _sigma_spin(b):
    n, s = b.n, b.s
    other = 2 * n - 1 - b.r
    h, etr = crystals.to_highest(b, _subrange(n))
    table = _spin_top_table(n, b.r, s)
    if h not in table:
        raise RuntimeError("unexpected {2..n}-highest spin element")
    image = _spin_top_form(n, other, s, table[h])
    return _replay_f(image, etr)


def sigma(b):
    """Involution exchanging the affine node with node 1.

    Maps each non-spin B^{r,s} to itself and the two spin crystals B^{n,s}
    and B^{n-1,s} to each other.
    """
    hit = _SIGMA.get(b)
    if hit is None:
        hit = _sigma_spin(b) if b.spin else _sigma_tableau(b)
        _SIGMA[b] = hit
        _SIGMA[hit] = b
    return hit


def _aff_single(b, raising):
    x = sigma(b)
    x = crystals.apply_e(x, 1) if raising else crystals.apply_f(x, 1)
    return None if x is None else sigma(x)


_AFF = {}


def aff_counts(b):
    """String lengths (eps, phi) of a single factor at the affine node."""
    hit = _AFF.get(b)
    if hit is not None:
        return hit
    e = 0
    x = b
    while (x := _aff_single(x, True)) is not None:
        e += 1
    p = 0
    x = b
    while (x := _aff_single(x, False)) is not None:
        p += 1
    _AFF[b] = (e, p)
    return (e, p)


def aff_e(x):
    """Affine raising operator."""
    if isinstance(x, TensorElement):
        pairs = [aff_counts(b) for b in reversed(x.factors)]
        minus, _ = crystals._scan(pairs)
        if not minus:
            return None
        j = len(x.factors) - 1 - minus[-1]
        new = _aff_single(x.factors[j], True)
        return TensorElement(x.n, x.factors[:j] + (new,) + x.factors[j + 1 :])
    return _aff_single(x, True)


def aff_f(x):
    """Affine lowering operator."""
    if isinstance(x, TensorElement):
        pairs = [aff_counts(b) for b in reversed(x.factors)]
        _, plus = crystals._scan(pairs)
        if not plus:
            return None
        j = len(x.factors) - 1 - plus[0]
        new = _aff_single(x.factors[j], False)
        return TensorElement(x.n, x.factors[:j] + (new,) + x.factors[j + 1 :])
    return _aff_single(x, False)


def apply_e(x, i):
    return aff_e(x) if i == 0 else crystals.apply_e(x, i)


def apply_f(x, i):
    return aff_f(x) if i == 0 else crystals.apply_f(x, i)


# ---------------------------------------------------------------------------
# column splitting

def _weight_multiplicities(lam, r):
    rows = list(lam) + [0] * (r - len(lam))
    return [0] + [rows[j - 1] - rows[j] if j < r else rows[r - 1] for j in range(1, r + 1)]


def _shape_from_multiplicities(k):
    rows = []
    for j in range(len(k) - 1, 0, -1):
        rows.extend([j] * k[j])
    lam = []
    for j in sorted(rows, reverse=True):
        lam.append(j)
    heights = sorted(rows, reverse=True)
    out = roots.conjugate(tuple(heights)) if heights else ()
    return out


def split_column_word(n, r, s, lam):
    """Letters, bottom cell first, of the column split off the highest element."""
    k = _weight_multiplicities(lam, r)
    positive = [j for j in range(1, r + 1) if k[j] > 0]
    if not positive:
        raise ValueError("empty shape splits through the bijection instead")
    p = positive[-1]
    if p == r:
        word = list(range(r, 0, -1))
        k2 = list(k)
        k2[r] -= 1
    elif k[p] >= 2:
        word = [-j for j in range(p + 1, r + 1)] + list(range(p, 0, -1))
        k2 = list(k)
        k2[p] -= 2
        k2[r] += 1
    else:
        lower = [j for j in positive if j < p]
        q = lower[-1] if lower else 0
        word = (
            [-j for j in range(p + 1, r + 1)]
            + list(range(r, r - p + q, -1))
            + list(range(q, 0, -1))
        )
        k2 = list(k)
        k2[p] -= 1
        if q > 0:
            k2[q] -= 1
        k2[r - p + q] += 1
    return tuple(word), _shape_from_multiplicities(k2)


def left_split(b):
    """Split the leftmost column off one factor, giving a two factor tensor."""
    n, r, s = b.n, b.r, b.s
    if s < 2:
        raise ValueError("nothing to split")
    if b.spin:
        h, etr = crystals.to_highest(b)
        pair = TensorElement(
            n, (crystals.highest_spin(n, r, 1), crystals.highest_spin(n, r, s - 1))
        )
        return _replay_f(pair, etr)
    h, etr = crystals.to_highest(b)
    lam = crystals.shape(h)
    from . import bijection

    if not lam:
        pair = bijection.split_of_empty(n, r, s)
    else:
        word, lam2 = split_column_word(n, r, s, lam)
        col = bijection.inverse_fill(n, r, 1, (word,))
        pair = TensorElement(n, (col, crystals.highest_tableau(n, r, s - 1, lam2)))
    return _replay_f(pair, etr)


def right_split(b):
    """Split the rightmost column off one factor."""
    pair = left_split(crystals.star(b))
    return crystals.star_tensor(pair)


# ---------------------------------------------------------------------------
# operations on paths

def left_hat(t):
    b = t.factors[0]
    if (b.r, b.s) != (1, 1):
        raise ValueError("leftmost factor is not a single box")
    return TensorElement(t.n, t.factors[1:])


def left_hat_spin(t):
    b = t.factors[0]
    if not (b.spin and b.s == 1):
        raise ValueError("leftmost factor is not a spin column")
    return TensorElement(t.n, t.factors[1:])


def left_box(t):
    """Cut the bottom cell off the leftmost column factor."""
    b = t.factors[0]
    n, r = t.n, b.r
    if b.s != 1 or b.spin or r < 2:
        raise ValueError("leftmost factor is not a splittable column")
    from . import bijection

    word = bijection.fill(b)[0]
    box = KRElement(n, 1, 1, ((word[0],),))
    rest = bijection.inverse_fill(n, r - 1, 1, (word[1:],))
    return TensorElement(n, (box, rest) + t.factors[1:])


def left_split_path(t):
    pair = left_split(t.factors[0])
    return TensorElement(t.n, pair.factors + t.factors[1:])


def _conjugated(op):
    def apply(t):
        return crystals.diamond(op(crystals.diamond(t)))

    return apply


right_hat = _conjugated(left_hat)
right_hat_spin = _conjugated(left_hat_spin)
right_box = _conjugated(left_box)
right_split_path = _conjugated(left_split_path)


def factor_size2(n, r, s):
    """Doubled box count of one factor, in the sense of weight coordinate sums."""
    if r <= n - 2:
        return 2 * r * s
    return (n - 2) * s if r == n - 1 else n * s
