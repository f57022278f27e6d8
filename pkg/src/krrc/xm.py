"""Generating functions over paths and over configurations.

X collects q to the intrinsic energy over the classically highest weight
elements of a tensor product, M is the configuration sum with q-binomial
rigging weights, and the headline identity of this package is that the
two polynomials agree.  Polynomials are plain dicts mapping a nonnegative
exponent to a positive integer coefficient; absent exponents mean zero.
"""

from functools import lru_cache
from itertools import product

from . import crystals, energy, kr, rigged, roots


# ---------------------------------------------------------------------------
# weight labels

def weight_from_label(n, coeffs):
    """Doubled weight from coefficients of the fundamental weights."""
    if len(coeffs) != n:
        raise ValueError(f"need {n} coefficients, got {len(coeffs)}")
    wt = roots.zero_weight(n)
    for a, c in zip(roots.classical_indices(n), coeffs):
        wt = roots.add(wt, roots.scale(c, roots.fundamental_weight(n, a)))
    return wt


def weight_label(n, wt):
    """Coefficients of the fundamental weights for a doubled dominant weight."""
    out = [(wt[a - 1] - wt[a]) // 2 for a in range(1, n - 1)]
    out.append((wt[n - 2] - wt[n - 1]) // 2)
    out.append((wt[n - 2] + wt[n - 1]) // 2)
    return tuple(out)


# ---------------------------------------------------------------------------
# paths

def paths(n, spec, lam=None):
    """Classically highest elements, optionally filtered by doubled weight."""
    found = kr.tensor_highest(n, spec)
    if lam is None:
        return found
    return [t for t in found if crystals.weight(t) == lam]


def path_weights(n, spec):
    """Distinct doubled weights of the paths, largest first."""
    return sorted({crystals.weight(t) for t in kr.tensor_highest(n, spec)}, reverse=True)


def rc_weights(n, L):
    """Dominant doubled weights carrying at least one restricted configuration.

    Candidates are swept through the box-count parametrization: the weight
    determines the sizes of the configuration partitions linearly, so each
    candidate is the top weight minus a bounded combination of simple roots.
    """
    top = roots.zero_weight(n)
    for (a, i), m in L:
        top = roots.add(top, roots.scale(i * m, roots.fundamental_weight(n, a)))
    bounds = [
        2 * sum(m * i * min(a, b) for (b, i), m in L)
        for a in roots.classical_indices(n)
    ]
    out = []
    for sizes in product(*(range(s + 1) for s in bounds)):
        lam = top
        for a, count in zip(roots.classical_indices(n), sizes):
            lam = roots.sub(lam, roots.scale(count, roots.simple_root(n, a)))
        if not roots.is_dominant(n, lam):
            continue
        if next(rigged.configurations(n, L, lam), None) is not None:
            out.append(lam)
    return sorted(out, reverse=True)


# ---------------------------------------------------------------------------
# polynomial helpers

def poly_mul(f, g):
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return out


def poly_eval_one(f):
    return sum(f.values())


def poly_str(f):
    if not f:
        return "0"
    terms = []
    for e in sorted(f):
        c = f[e]
        if e == 0:
            terms.append(str(c))
        elif e == 1:
            terms.append("q" if c == 1 else f"{c}q")
        else:
            terms.append(f"q^{e}" if c == 1 else f"{c}q^{e}")
    return " + ".join(terms)


@lru_cache(maxsize=None)
def q_binomial(m, p):
    """Gaussian binomial choosing m from m + p, as sorted (exponent, coeff) pairs."""
    if m < 0 or p < 0:
        return ()
    if m == 0 or p == 0:
        return ((0, 1),)
    out = {}
    for e, c in q_binomial(m - 1, p):
        out[e] = out.get(e, 0) + c
    for e, c in q_binomial(m, p - 1):
        out[e + m] = out.get(e + m, 0) + c
    return tuple(sorted(out.items()))


# ---------------------------------------------------------------------------
# the two generating functions

def x_polynomial(n, spec, lam):
    """Sum of q to the intrinsic energy over the paths of the given weight."""
    poly = {}
    for t in paths(n, spec, lam):
        d = energy.intrinsic_energy(t)
        if d < 0:
            raise RuntimeError(f"negative energy {d} on a path")
        poly[d] = poly.get(d, 0) + 1
    return poly


def configuration_charge(n, L, nus):
    """Cocharge of a bare configuration, riggings set to zero."""
    levels = tuple(tuple((length, 0) for length in parts) for parts in nus)
    return rigged.cocharge(rigged.RC(n, L, levels))


def m_polynomial(n, spec, lam):
    """Configuration sum weighted by q-binomials over the rigging slots."""
    L = rigged.multiplicity_array(n, spec)
    poly = {}
    for nus in rigged.configurations(n, L, lam):
        term = {configuration_charge(n, L, nus): 1}
        for a in roots.classical_indices(n):
            for length in set(nus[a - 1]):
                m = nus[a - 1].count(length)
                p = rigged.vacancy_raw(n, L, nus, a, length)
                term = poly_mul(term, dict(q_binomial(m, p)))
        for e, c in term.items():
            if e < 0:
                raise RuntimeError(f"negative exponent {e} in the configuration sum")
            poly[e] = poly.get(e, 0) + c
    return poly


def compare(n, spec):
    """Yield (doubled weight, X, M) for every weight seen on either side."""
    L = rigged.multiplicity_array(n, spec)
    lams = sorted(set(path_weights(n, spec)) | set(rc_weights(n, L)), reverse=True)
    for lam in lams:
        yield lam, x_polynomial(n, spec, lam), m_polynomial(n, spec, lam)
