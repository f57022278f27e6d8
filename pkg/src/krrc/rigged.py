"""Rigged configurations of type D_n and their crystal structure.

A rigged configuration is a sequence of partitions nu^(1), ..., nu^(n), one
for each classical Dynkin node, whose rows carry integer labels called
riggings.  The admissible labels are bounded above by the vacancy numbers,
which depend on the multiplicity array L recording how many tensor factors
B^{a,i} the configuration refers to.  Restricted configurations (all labels
between 0 and the vacancy number) correspond to classically highest weight
elements; the Kashiwara operators below generate the unrestricted ones.

Levels are indexed 1..n externally and stored in a tuple.  Strings of one
level are kept sorted by decreasing length, then decreasing rigging, so that
equal configurations compare equal.
"""

from dataclasses import dataclass, field
from itertools import product

from . import roots


def _canonical_level(strings):
    return tuple(sorted(strings, key=lambda t: (-t[0], -t[1])))


@dataclass(frozen=True)
class RC:
    """One rigged configuration, tied to a multiplicity array.

    L is a tuple of ((a, i), count) pairs; rows holds per level a tuple of
    (length, rigging) strings.
    """

    n: int
    L: tuple
    rows: tuple

    def __post_init__(self):
        roots.check_rank(self.n)
        norm = tuple(sorted((k, m) for k, m in self.L if m))
        for (a, i), m in norm:
            if not (1 <= a <= self.n and i >= 1 and m >= 1):
                raise ValueError(f"bad multiplicity entry ({a},{i}):{m}")
        if len(self.rows) != self.n:
            raise ValueError("need one string list per level")
        levels = tuple(_canonical_level(lv) for lv in self.rows)
        for lv in levels:
            if any(length < 1 for length, _ in lv):
                raise ValueError("string lengths must be positive")
        object.__setattr__(self, "L", norm)
        object.__setattr__(self, "rows", levels)

    def level(self, a):
        return self.rows[a - 1]

    def nu(self, a):
        return tuple(length for length, _ in self.rows[a - 1])


def multiplicity_array(n, spec):
    """Multiplicity array of a tensor product given as (r, s) pairs."""
    counts = {}
    for r, s in spec:
        if not (1 <= r <= n and s >= 1):
            raise ValueError(f"no factor B^{{{r},{s}}} at rank {n}")
        counts[(r, s)] = counts.get((r, s), 0) + 1
    return tuple(sorted(counts.items()))


def empty_rc(n, L):
    return RC(n, tuple(L), ((),) * n)


def mu(rc, a):
    parts = []
    for (b, i), m in rc.L:
        if b == a:
            parts.extend([i] * m)
    return tuple(sorted(parts, reverse=True))


def _Q(i, parts):
    return sum(min(i, p) for p in parts)


def vacancy_raw(n, L, nus, a, i):
    """Vacancy number P_i^{(a)} from a bare configuration."""
    mu_parts = [j for (b, j), m in L if b == a for _ in range(m)]
    total = _Q(i, mu_parts) - 2 * _Q(i, nus[a - 1])
    for b in roots.neighbors(n, a):
        total += _Q(i, nus[b - 1])
    return total


def vacancy(rc, a, i):
    return vacancy_raw(rc.n, rc.L, tuple(rc.nu(b) for b in roots.classical_indices(rc.n)), a, i)


def weight(rc):
    """Doubled weight of the configuration."""
    wt = roots.zero_weight(rc.n)
    for (a, i), m in rc.L:
        wt = roots.add(wt, roots.scale(i * m, roots.fundamental_weight(rc.n, a)))
    for a in roots.classical_indices(rc.n):
        size = sum(rc.nu(a))
        wt = roots.sub(wt, roots.scale(size, roots.simple_root(rc.n, a)))
    return wt


def is_valid(rc):
    """Riggings never exceed their vacancy numbers."""
    return all(
        x <= vacancy(rc, a, length)
        for a in roots.classical_indices(rc.n)
        for length, x in rc.level(a)
    )


def is_restricted(rc):
    return is_valid(rc) and all(x >= 0 for lv in rc.rows for _, x in lv)


def is_highest(rc):
    return all(x >= 0 for lv in rc.rows for _, x in lv)


def _rebuild(rc, a, old_string, new_string):
    """Replace one string at level a, keeping every other corigging fixed.

    old_string None adds new_string; new_string None removes old_string.
    The replaced string keeps the explicitly given rigging.
    """
    n = rc.n
    idx = roots.classical_indices(n)
    old_vac = {}
    for b in idx:
        for length, x in rc.level(b):
            old_vac.setdefault((b, length), vacancy(rc, b, length))

    new_levels = []
    for b in idx:
        lv = list(rc.level(b))
        if b == a:
            if old_string is not None:
                lv.remove(old_string)
        new_levels.append(lv)

    nus = tuple(tuple(sorted((length for length, _ in lv), reverse=True)) for lv in new_levels)
    if new_string is not None:
        nus = tuple(
            tuple(sorted(parts + ((new_string[0],) if b == a else ()), reverse=True))
            for b, parts in zip(idx, nus)
        )

    out = []
    for b in idx:
        lv = []
        for length, x in new_levels[b - 1]:
            cor = old_vac[(b, length)] - x
            lv.append((length, vacancy_raw(n, rc.L, nus, b, length) - cor))
        if b == a and new_string is not None:
            lv.append(new_string)
        out.append(tuple(lv))
    return RC(n, rc.L, tuple(out))


def rc_e(rc, a):
    """Kashiwara raising operator at classical node a."""
    lv = rc.level(a)
    if not lv:
        return None
    x = min(rig for _, rig in lv)
    if x >= 0:
        return None
    ell = min(length for length, rig in lv if rig == x)
    new = (ell - 1, x + 1) if ell > 1 else None
    return _rebuild(rc, a, (ell, x), new)


def rc_f(rc, a):
    """Kashiwara lowering operator at classical node a."""
    lv = rc.level(a)
    x = min((rig for _, rig in lv), default=None)
    if x is None or x > 0:
        old, new = None, (1, -1)
    else:
        ell = max(length for length, rig in lv if rig == x)
        old, new = (ell, x), (ell + 1, x - 1)
    result = _rebuild(rc, a, old, new)
    if new[1] > vacancy(result, a, new[0]):
        return None
    return result


def to_highest(rc):
    trace = []
    x = rc
    changed = True
    while changed:
        changed = False
        for a in roots.classical_indices(rc.n):
            y = rc_e(x, a)
            if y is not None:
                trace.append(a)
                x = y
                changed = True
                break
    return x, tuple(trace)


def replay_f(rc, trace):
    x = rc
    for a in reversed(trace):
        x = rc_f(x, a)
        if x is None:
            raise RuntimeError("lowering replay broke on rigged configurations")
    return x


def component(rc):
    from collections import deque

    seen = {rc}
    queue = deque([rc])
    while queue:
        x = queue.popleft()
        for a in roots.classical_indices(rc.n):
            for op in (rc_e, rc_f):
                y = op(x, a)
                if y is not None and y not in seen:
                    seen.add(y)
                    queue.append(y)
    return seen


def _theta_restricted(rc):
    out = []
    for a in roots.classical_indices(rc.n):
        out.append(tuple((length, vacancy(rc, a, length) - x) for length, x in rc.level(a)))
    return RC(rc.n, rc.L, tuple(out))


def theta(rc):
    """Complement all riggings against their vacancy numbers.

    Directly defined on restricted configurations; carried to the rest of
    each classical component by equivariance.
    """
    if is_highest(rc):
        return _theta_restricted(rc)
    h, trace = to_highest(rc)
    return replay_f(_theta_restricted(h), trace)


def cocharge(rc):
    """Cocharge statistic of a restricted configuration."""
    n = rc.n
    pairing = 0
    for a in roots.classical_indices(n):
        for b in roots.classical_indices(n):
            coeff = roots.cartan(n, a, b)
            if coeff == 0:
                continue
            for j in rc.nu(a):
                for k in rc.nu(b):
                    pairing += coeff * min(j, k)
    if pairing % 2:
        raise RuntimeError("configuration pairing must be even")
    return pairing // 2 + sum(x for lv in rc.rows for _, x in lv)


# ---------------------------------------------------------------------------
# enumeration

def partitions(total, bound=None):
    """All partitions of the given size with parts at most bound."""
    if bound is None:
        bound = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, bound), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def nu_sizes(n, L, lam):
    """Box counts of each level forced by the weight, or None."""
    target = roots.zero_weight(n)
    for (a, i), m in sorted(L):
        target = roots.add(target, roots.scale(i * m, roots.fundamental_weight(n, a)))
    target = roots.sub(target, lam)

    sizes = []
    prev = 0
    for j in range(1, n - 1):
        q, r = divmod(target[j - 1], 2)
        if r:
            return None
        prev = prev + q if j > 1 else q
        sizes.append(prev)
    d, r = divmod(target[n - 1], 2)
    if r:
        return None
    s2, r = divmod(target[n - 2], 2)
    if r:
        return None
    s2 += sizes[-1] if n > 2 else 0
    top, r = divmod(s2 - d, 2)
    if r:
        return None
    sizes.extend([top, top + d])
    if any(size < 0 for size in sizes):
        return None
    return sizes


def configurations(n, L, lam):
    """All admissible bare configurations of the given weight.

    Yields tuples of partitions with every occupied vacancy number
    nonnegative.
    """
    sizes = nu_sizes(n, L, lam)
    if sizes is None:
        return
    for nus in product(*(list(partitions(size)) for size in sizes)):
        ok = True
        for a in roots.classical_indices(n):
            for length in set(nus[a - 1]):
                if vacancy_raw(n, L, nus, a, length) < 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield nus


def _rigging_blocks(m, p):
    """All weakly decreasing rigging tuples of length m inside [0, p]."""
    if m == 0:
        yield ()
        return
    for first in range(p, -1, -1):
        for rest in _rigging_blocks(m - 1, first):
            yield (first,) + rest


def rigged_configurations(n, L, lam):
    """All restricted rigged configurations of the given weight."""
    for nus in configurations(n, L, lam):
        per_level_choices = []
        for a in roots.classical_indices(n):
            blocks = []
            for length in sorted(set(nus[a - 1]), reverse=True):
                m = nus[a - 1].count(length)
                p = vacancy_raw(n, L, nus, a, length)
                blocks.append([(length, tuple(r)) for r in _rigging_blocks(m, p)])
            level_options = []
            for combo in product(*blocks):
                level_options.append(
                    tuple((length, x) for length, rigs in combo for x in rigs)
                )
            per_level_choices.append(level_options)
        for levels in product(*per_level_choices):
            yield RC(n, L, tuple(levels))


# ---------------------------------------------------------------------------
# serialization

def rc_to_json(rc):
    return {
        "n": rc.n,
        "L": [[a, i, m] for (a, i), m in rc.L],
        "levels": [[[length, x] for length, x in lv] for lv in rc.rows],
    }


def rc_from_json(data):
    L = tuple(((a, i), m) for a, i, m in data["L"])
    rows = tuple(tuple((length, x) for length, x in lv) for lv in data["levels"])
    return RC(data["n"], L, rows)


def rc_str(rc):
    chunks = []
    for a in roots.classical_indices(rc.n):
        if not rc.level(a):
            chunks.append(f"({a}) empty")
            continue
        body = ", ".join(
            f"{length}:{x}|{vacancy(rc, a, length)}" for length, x in rc.level(a)
        )
        chunks.append(f"({a}) {body}")
    return "  ".join(chunks)
