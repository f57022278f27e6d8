"""Root and weight data for the even orthogonal Dynkin diagram D_n.

Weights live in the standard orthogonal coordinates epsilon_1..epsilon_n.
Since the two spin fundamental weights have half-integer coordinates, every
weight in this package is stored as a tuple of DOUBLED integer coordinates.
The classical index set is 1..n; the affine node is 0.
"""


def check_rank(n):
    if n < 4:
        raise ValueError(f"rank must be at least 4, got {n}")


def classical_indices(n):
    """Node labels of the classical diagram, 1..n."""
    return tuple(range(1, n + 1))


def neighbors(n, a):
    """Nodes adjacent to a in the classical diagram.

    The diagram is a chain 1-2-...-(n-2) with both n-1 and n attached
    to node n-2; the two tail nodes are not adjacent to each other.
    """
    check_rank(n)
    if a == n or a == n - 1:
        return (n - 2,)
    if a == n - 2:
        return (n - 3, n - 1, n) if n - 3 >= 1 else (n - 1, n)
    if a == 1:
        return (2,)
    return (a - 1, a + 1)


def cartan(n, a, b):
    if a == b:
        return 2
    return -1 if b in neighbors(n, a) else 0


def simple_root(n, a):
    """Simple root alpha_a in doubled coordinates."""
    check_rank(n)
    v = [0] * n
    if a < n:
        v[a - 1] = 2
        v[a] = -2
    else:
        v[n - 2] = 2
        v[n - 1] = 2
    return tuple(v)


def fundamental_weight(n, a):
    """Fundamental weight for node a in doubled coordinates."""
    check_rank(n)
    if a <= n - 2:
        return tuple([2] * a + [0] * (n - a))
    if a == n - 1:
        return tuple([1] * (n - 1) + [-1])
    return tuple([1] * n)


def zero_weight(n):
    return (0,) * n


def add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def neg(u):
    return tuple(-x for x in u)


def scale(c, u):
    return tuple(c * x for x in u)


def tau(n, i):
    """Diagram involution induced by the longest Weyl group element.

    Trivial for even rank; for odd rank it exchanges the two spin nodes.
    The affine node is always fixed.
    """
    if n % 2 == 1 and i in (n - 1, n):
        return 2 * n - 1 - i
    return i


def is_dominant(n, wt):
    """Whether a doubled weight is dominant for the classical subalgebra."""
    for a in range(1, n - 1):
        if wt[a - 1] - wt[a] < 0:
            return False
    return wt[n - 2] + wt[n - 1] >= 0 and wt[n - 2] - wt[n - 1] >= 0


def partition_from_dominant(n, wt):
    """Express a doubled dominant weight as a row partition, if it is one.

    Works for weights that are nonnegative integer combinations of the
    first n-2 fundamental weights, which is the only case where a weight
    is literally a Young diagram.  Returns a tuple of row lengths.
    """
    rows = []
    for x in wt:
        if x % 2 != 0 or x < 0:
            raise ValueError(f"weight {wt} is not a partition")
        rows.append(x // 2)
    if any(rows[i] < rows[i + 1] for i in range(n - 1)):
        raise ValueError(f"weight {wt} is not a partition")
    while rows and rows[-1] == 0:
        rows.pop()
    return tuple(rows)


def weight_from_partition(n, lam):
    """Doubled weight tuple of a row partition with at most n rows."""
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} rows")
    return tuple(2 * lam[i] if i < len(lam) else 0 for i in range(n))


def conjugate(lam):
    """Conjugate partition (column lengths)."""
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= c) for c in range(1, lam[0] + 1))
