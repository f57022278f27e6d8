"""Classical crystal structures for type D_n.

Elements of the single-column crystal are signed letters: 1..n unbarred,
-1..-n barred (so -k prints as the barred letter k).  A Kirillov-Reshetikhin
factor is stored as a tuple of columns.  For 1 <= r <= n-2 the columns hold
letters, each column listed bottom to top, columns left to right, and the
whole array is a Kashiwara-Nakashima tableau.  For r = n-1 or n each column
is a tuple of n signs +1/-1 (a spin column), again listed left to right.

Tensor factors are displayed leftmost first.  All crystal operator
computations run through one signature scan: atoms are listed in processing
order (rightmost factor first, and inside a tableau rightmost column first,
top to bottom), each atom contributes its minus signs then its plus signs,
adjacent plus-minus pairs cancel, a raising operator acts on the atom of the
rightmost surviving minus and a lowering operator on the atom of the leftmost
surviving plus.
"""

from dataclasses import dataclass

from . import roots


# ---------------------------------------------------------------------------
# letters

def letter_key(n, x):
    """Sort key realizing the letter order 1 < 2 < ... < n, -n < ... < -1."""
    return x if x > 0 else 2 * n + 1 + x


def letters(n):
    """All 2n letters in increasing order."""
    return tuple(range(1, n + 1)) + tuple(range(-n, 0))


def letter_weight(n, x):
    v = [0] * n
    v[abs(x) - 1] = 2 if x > 0 else -2
    return tuple(v)


def _letter_f(n, i, x):
    if i < n:
        if x == i:
            return i + 1
        if x == -(i + 1):
            return -i
    else:
        if x == n - 1:
            return -n
        if x == n:
            return -(n - 1)
    return None


def _letter_e(n, i, x):
    if i < n:
        if x == i + 1:
            return i
        if x == -i:
            return -(i + 1)
    else:
        if x == -n:
            return n - 1
        if x == -(n - 1):
            return n
    return None


# ---------------------------------------------------------------------------
# spin columns

def _spin_f(n, i, col):
    if i < n:
        if col[i - 1] == 1 and col[i] == -1:
            return col[: i - 1] + (-1, 1) + col[i + 1 :]
    else:
        if col[n - 2] == 1 and col[n - 1] == 1:
            return col[: n - 2] + (-1, -1)
    return None


def _spin_e(n, i, col):
    if i < n:
        if col[i - 1] == -1 and col[i] == 1:
            return col[: i - 1] + (1, -1) + col[i + 1 :]
    else:
        if col[n - 2] == -1 and col[n - 1] == -1:
            return col[: n - 2] + (1, 1)
    return None


# ---------------------------------------------------------------------------
# elements

@dataclass(frozen=True)
class KRElement:
    """One Kirillov-Reshetikhin factor."""

    n: int
    r: int
    s: int
    cols: tuple

    @property
    def spin(self):
        return self.r >= self.n - 1

    def __post_init__(self):
        roots.check_rank(self.n)
        if not (1 <= self.r <= self.n):
            raise ValueError(f"invalid row label {self.r}")
        if self.spin:
            if len(self.cols) != self.s or any(len(c) != self.n for c in self.cols):
                raise ValueError("spin element needs s sign columns of length n")
        else:
            if len(self.cols) > self.s:
                raise ValueError("too many columns")
            heights = [len(c) for c in self.cols]
            if any(h == 0 or h > self.r for h in heights):
                raise ValueError("column height out of range")
            if any(heights[i] < heights[i + 1] for i in range(len(heights) - 1)):
                raise ValueError("column heights must decrease left to right")

    def __repr__(self):
        return f"KRElement({self.n},{self.r},{self.s},{self.cols})"


@dataclass(frozen=True)
class TensorElement:
    """Tensor product of KR factors, leftmost display factor first."""

    n: int
    factors: tuple

    def __post_init__(self):
        if any(b.n != self.n for b in self.factors):
            raise ValueError("mixed ranks in tensor")

    def spec(self):
        return tuple((b.r, b.s) for b in self.factors)

    def __repr__(self):
        return f"TensorElement({self.n},{self.factors})"


def shape(elem):
    """Row partition of a tableau factor (its classical component)."""
    heights = tuple(len(c) for c in elem.cols)
    return roots.conjugate(heights)


def highest_tableau(n, r, s, lam):
    """The tableau with letter i in every cell of row i, shape lam."""
    heights = roots.conjugate(tuple(lam))
    cols = tuple(tuple(range(h, 0, -1)) for h in heights)
    return KRElement(n, r, s, cols)


def highest_spin(n, r, s):
    """Highest weight spin element: s copies of the dominant sign column."""
    col = (1,) * n if r == n else (1,) * (n - 1) + (-1,)
    return KRElement(n, r, s, (col,) * s)


def highest_element(n, r, s, lam=None):
    if r >= n - 1:
        return highest_spin(n, r, s)
    if lam is None:
        lam = (s,) * r
    return highest_tableau(n, r, s, lam)


# ---------------------------------------------------------------------------
# the signature scan

def _scan(pairs):
    """Cancel plus-minus pairs over atoms given as (eps, phi) in processing order.

    Returns the atom indices of surviving minuses (in order) and the stack of
    surviving pluses (bottom of the stack is the leftmost survivor).
    """
    minus, plus = [], []
    for k, (e, p) in enumerate(pairs):
        for _ in range(e):
            if plus:
                plus.pop()
            else:
                minus.append(k)
        if p:
            plus.extend([k] * p)
    return minus, plus


def _tableau_atoms(elem):
    """Cell positions of a tableau factor in processing order."""
    pos = []
    for ci in range(len(elem.cols) - 1, -1, -1):
        col = elem.cols[ci]
        for cj in range(len(col) - 1, -1, -1):
            pos.append((ci, cj))
    return pos


def _factor_pairs(elem, i):
    n = elem.n
    if elem.spin:
        pairs = []
        for ci in range(len(elem.cols) - 1, -1, -1):
            col = elem.cols[ci]
            pairs.append(
                (
                    1 if _spin_e(n, i, col) is not None else 0,
                    1 if _spin_f(n, i, col) is not None else 0,
                )
            )
        return pairs
    pairs = []
    for ci, cj in _tableau_atoms(elem):
        x = elem.cols[ci][cj]
        pairs.append(
            (
                1 if _letter_e(n, i, x) is not None else 0,
                1 if _letter_f(n, i, x) is not None else 0,
            )
        )
    return pairs


def eps(x, i):
    """Maximal number of times the raising operator i applies."""
    if isinstance(x, TensorElement):
        pairs = [(eps(b, i), phi(b, i)) for b in reversed(x.factors)]
    else:
        pairs = _factor_pairs(x, i)
    minus, _ = _scan(pairs)
    return len(minus)


def phi(x, i):
    """Maximal number of times the lowering operator i applies."""
    if isinstance(x, TensorElement):
        pairs = [(eps(b, i), phi(b, i)) for b in reversed(x.factors)]
    else:
        pairs = _factor_pairs(x, i)
    _, plus = _scan(pairs)
    return len(plus)


def _replace_col(elem, ci, col):
    return KRElement(elem.n, elem.r, elem.s, elem.cols[:ci] + (col,) + elem.cols[ci + 1 :])


def _factor_apply(elem, i, k, raising):
    """Apply a crystal operator at processing-order atom k of a single factor."""
    n = elem.n
    if elem.spin:
        ci = len(elem.cols) - 1 - k
        col = elem.cols[ci]
        new = _spin_e(n, i, col) if raising else _spin_f(n, i, col)
        return _replace_col(elem, ci, new)
    ci, cj = _tableau_atoms(elem)[k]
    x = elem.cols[ci][cj]
    y = _letter_e(n, i, x) if raising else _letter_f(n, i, x)
    col = elem.cols[ci]
    return _replace_col(elem, ci, col[:cj] + (y,) + col[cj + 1 :])


def apply_e(x, i):
    """Raising operator; returns None when it vanishes."""
    if isinstance(x, TensorElement):
        pairs = [(eps(b, i), phi(b, i)) for b in reversed(x.factors)]
        minus, _ = _scan(pairs)
        if not minus:
            return None
        j = len(x.factors) - 1 - minus[-1]
        new = apply_e(x.factors[j], i)
        return TensorElement(x.n, x.factors[:j] + (new,) + x.factors[j + 1 :])
    pairs = _factor_pairs(x, i)
    minus, _ = _scan(pairs)
    if not minus:
        return None
    return _factor_apply(x, i, minus[-1], True)


def apply_f(x, i):
    """Lowering operator; returns None when it vanishes."""
    if isinstance(x, TensorElement):
        pairs = [(eps(b, i), phi(b, i)) for b in reversed(x.factors)]
        _, plus = _scan(pairs)
        if not plus:
            return None
        j = len(x.factors) - 1 - plus[0]
        new = apply_f(x.factors[j], i)
        return TensorElement(x.n, x.factors[:j] + (new,) + x.factors[j + 1 :])
    pairs = _factor_pairs(x, i)
    _, plus = _scan(pairs)
    if not plus:
        return None
    return _factor_apply(x, i, plus[0], False)


def weight(x):
    """Doubled weight coordinates."""
    if isinstance(x, TensorElement):
        wt = roots.zero_weight(x.n)
        for b in x.factors:
            wt = roots.add(wt, weight(b))
        return wt
    wt = roots.zero_weight(x.n)
    if x.spin:
        for col in x.cols:
            wt = roots.add(wt, col)
        return wt
    for col in x.cols:
        for a in col:
            wt = roots.add(wt, letter_weight(x.n, a))
    return wt


# ---------------------------------------------------------------------------
# component navigation

def _index_set(x, indices):
    return roots.classical_indices(x.n) if indices is None else indices


def is_highest(x, indices=None):
    return all(eps(x, i) == 0 for i in _index_set(x, indices))


def to_highest(x, indices=None):
    """Raise to the highest weight element, returning it and the index trace."""
    idx = _index_set(x, indices)
    trace = []
    while True:
        for i in idx:
            if eps(x, i) > 0:
                x = apply_e(x, i)
                trace.append(i)
                break
        else:
            return x, trace


def to_lowest(x, indices=None):
    idx = _index_set(x, indices)
    trace = []
    while True:
        for i in idx:
            if phi(x, i) > 0:
                x = apply_f(x, i)
                trace.append(i)
                break
        else:
            return x, trace


def component(x, indices=None):
    """All elements reachable from x by the given classical operators."""
    idx = _index_set(x, indices)
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for i in idx:
            for img in (apply_e(y, i), apply_f(y, i)):
                if img is not None and img not in seen:
                    seen.add(img)
                    stack.append(img)
    return seen


# ---------------------------------------------------------------------------
# Lusztig involution

_STAR_CACHE = {}


def star(b):
    """Lusztig involution on one factor.

    Transports b along its raising trace: the involution sends the highest
    element of a component to its lowest, and exchanges the operators e_i
    and f_{tau(i)}.
    """
    hit = _STAR_CACHE.get(b)
    if hit is not None:
        return hit
    h, etr = to_highest(b)
    x, _ = to_lowest(h)
    for a in reversed(etr):
        x = apply_e(x, roots.tau(b.n, a))
    _STAR_CACHE[b] = x
    return x


def star_tensor(t):
    """Lusztig involution on a tensor product: star each factor, reverse order."""
    return TensorElement(t.n, tuple(star(b) for b in reversed(t.factors)))


def diamond(t):
    """Involution on paths: reverse with star, then raise to the path."""
    h, _ = to_highest(star_tensor(t))
    return h


# ---------------------------------------------------------------------------
# serialization

def element_to_json(x):
    if isinstance(x, TensorElement):
        return {"n": x.n, "factors": [_factor_json(b) for b in x.factors]}
    return {"n": x.n, "factors": [_factor_json(x)]}


def _factor_json(b):
    key = "spin" if b.spin else "columns"
    return {"r": b.r, "s": b.s, key: [list(c) for c in b.cols]}


def element_from_json(data):
    n = data["n"]
    factors = []
    for f in data["factors"]:
        if "spin" in f:
            cols = tuple(tuple(c) for c in f["spin"])
        else:
            cols = tuple(tuple(c) for c in f["columns"])
        factors.append(KRElement(n, f["r"], f["s"], cols))
    return TensorElement(n, tuple(factors))


def _letter_str(x):
    return str(x) if x > 0 else f"{-x}~"


def factor_str(b):
    """Compact single-line rendering, rows top to bottom inside brackets."""
    if b.spin:
        return " ".join("".join("+" if v > 0 else "-" for v in col) for col in b.cols)
    if not b.cols:
        return "(empty)"
    height = len(b.cols[0])
    rows = []
    for j in range(height):
        row = []
        for col in b.cols:
            cj = len(col) - 1 - j
            if 0 <= cj < len(col):
                row.append(_letter_str(col[cj]))
        rows.append(" ".join(row))
    return "[" + " / ".join(rows) + "]"


def element_str(x):
    if isinstance(x, TensorElement):
        return " (x) ".join(factor_str(b) for b in x.factors)
    return factor_str(x)
