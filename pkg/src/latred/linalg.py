"""Exact rational vectors, matrices, and the integer normal forms.

Vectors are tuples of rationals and matrices are tuples of row vectors.
All routines here are pure and exact; there is no floating point on any
path.  Integer matrices (HNF/SNF) are plain nested tuples of Python ints.
"""

from dataclasses import dataclass
from math import gcd

from .errors import DependentRows, DimensionMismatch, Singular
from .rationals import Q, QONE, QZERO, is_integer


# ---------------------------------------------------------------------------
# vectors


def vector(entries):
    return tuple(Q(e) for e in entries)


def matrix(rows):
    rows = tuple(tuple(Q(e) for e in r) for r in rows)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DimensionMismatch("ragged matrix")
    return rows


def zero_vector(n):
    return (QZERO,) * n


def unit_vector(n, i):
    return tuple(QONE if j == i else QZERO for j in range(n))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vscale(c, u):
    return tuple(c * a for a in u)


def dot(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("dot: %d vs %d" % (len(u), len(v)))
    s = QZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def norm_sq(u):
    s = QZERO
    for a in u:
        if a:
            s += a * a
    return s


def is_zero_vector(u):
    return all(not a for a in u)


def vec_is_integral(u):
    return all(is_integer(a) for a in u)


def normalize_sign(u):
    """Flip so the first nonzero entry is positive; canonical +/- pair rep."""
    for a in u:
        if a:
            return vneg(u) if a < 0 else u
    return u


# ---------------------------------------------------------------------------
# matrices


def identity(n):
    return tuple(unit_vector(n, i) for i in range(n))


def transpose(m):
    return tuple(zip(*m)) if m else ()


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def row_times_mat(x, m):
    """Row vector times matrix: sum_i x_i * m[i]."""
    out = list(zero_vector(len(m[0])))
    for xi, row in zip(x, m):
        if xi:
            for j, e in enumerate(row):
                if e:
                    out[j] += xi * e
    return tuple(out)


def gram_matrix(basis):
    """Matrix of pairwise inner products of the rows; symmetric."""
    n = len(basis)
    g = [[QZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            v = dot(basis[i], basis[j])
            g[i][j] = v
            g[j][i] = v
    return tuple(tuple(r) for r in g)


def rank(m):
    rows = [list(r) for r in m]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = QONE / rows[r][c]
        for i in range(r + 1, nr):
            f = rows[i][c]
            if f:
                f = f * inv
                for j in range(c, nc):
                    rows[i][j] -= f * rows[r][j]
        r += 1
        if r == nr:
            break
    return r


def determinant(m):
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionMismatch("determinant of non-square matrix")
    rows = [list(r) for r in m]
    det = QONE
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return QZERO
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        p = rows[c][c]
        det *= p
        inv = QONE / p
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f = f * inv
                for j in range(c, n):
                    rows[i][j] -= f * rows[c][j]
    return det


def inverse(m):
    """Exact inverse; raises Singular when det = 0."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionMismatch("inverse of non-square matrix")
    rows = [list(r) + list(unit_vector(n, i)) for i, r in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            raise Singular("matrix is singular")
        rows[c], rows[piv] = rows[piv], rows[c]
        inv = QONE / rows[c][c]
        rows[c] = [e * inv for e in rows[c]]
        for i in range(n):
            if i != c and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return tuple(tuple(r[n:]) for r in rows)


def solve_in_span(rows, v):
    """Coordinates x with x . rows = v, or None when v is outside the span.

    Works for any linearly independent row set (not necessarily square) via
    the Gram matrix; the result is verified by substitution.
    """
    g = gram_matrix(rows)
    try:
        ginv = inverse(g)
    except Singular:
        raise DependentRows("row set is linearly dependent")
    rhs = tuple(dot(v, r) for r in rows)
    x = row_times_mat(rhs, ginv)
    if row_times_mat(x, rows) != tuple(v):
        return None
    return x


def nullspace(a):
    """Basis of {x : a . x = 0} for a matrix a given as rows (maps columns)."""
    nr = len(a)
    nc = len(a[0]) if a else 0
    rows = [list(r) for r in a]
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = QONE / rows[r][c]
        rows[r] = [e * inv for e in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        x = [QZERO] * nc
        x[fc] = QONE
        for ri, pc in enumerate(pivots):
            x[pc] = -rows[ri][fc]
        basis.append(tuple(x))
    return basis


# ---------------------------------------------------------------------------
# Gram-Schmidt


@dataclass(frozen=True)
class GSOData:
    """Exact Gram-Schmidt data: b_i = b*_i + sum_{j<i} mu[i][j] b*_j."""

    bstar: tuple
    mu: tuple
    norms_sq: tuple


def gram_schmidt(basis) -> GSOData:
    """Exact GSO of linearly independent rows; raises DependentRows."""
    bstar = []
    norms = []
    mu = []
    for i, b in enumerate(basis):
        murow = [QZERO] * len(basis)
        w = tuple(b)
        for j in range(i):
            c = dot(b, bstar[j]) / norms[j]
            murow[j] = c
            if c:
                w = vsub(w, vscale(c, bstar[j]))
        murow[i] = QONE
        ns = norm_sq(w)
        if not ns:
            raise DependentRows("row %d depends on the previous rows" % i)
        bstar.append(w)
        norms.append(ns)
        mu.append(tuple(murow))
    return GSOData(tuple(bstar), tuple(mu), tuple(norms))


# ---------------------------------------------------------------------------
# integer normal forms


def _int_rows(m):
    rows = []
    for r in m:
        row = []
        for e in r:
            ie = int(e)
            if ie != e:
                raise DimensionMismatch("integer matrix expected")
            row.append(ie)
        rows.append(row)
    return rows


def hnf(m):
    """Row-style Hermite normal form.

    Returns (H, U) with H = U . m, U unimodular (det +-1).  H is in row
    echelon form with positive pivots and entries above each pivot reduced
    into [0, pivot).  Zero rows, if any, are at the bottom.
    """
    rows = _int_rows(m)
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    r = 0
    for c in range(nc):
        # gcd-eliminate column c below row r
        while True:
            nz = [i for i in range(r, nr) if rows[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][c]))
            if piv != r:
                rows[r], rows[piv] = rows[piv], rows[r]
                u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, nr):
                if rows[i][c]:
                    f = rows[i][c] // rows[r][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                    u[i] = [a - f * b for a, b in zip(u[i], u[r])]
                    if rows[i][c]:
                        done = False
            if done:
                break
        if r < nr and rows[r][c]:
            if rows[r][c] < 0:
                rows[r] = [-a for a in rows[r]]
                u[r] = [-a for a in u[r]]
            p = rows[r][c]
            for i in range(r):
                f = rows[i][c] // p
                if f:
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                    u[i] = [a - f * b for a, b in zip(u[i], u[r])]
            r += 1
            if r == nr:
                break
    h = tuple(tuple(row) for row in rows)
    return h, tuple(tuple(row) for row in u)


def snf_divisors(m):
    """Elementary divisors d_1 | d_2 | ... of an integer matrix.

    Returns min(rows, cols) nonnegative integers; trailing zeros indicate
    rank deficiency.
    """
    a = _int_rows(m)
    nr = len(a)
    nc = len(a[0]) if a else 0
    k = min(nr, nc)
    divisors = []
    t = 0
    while t < k:
        # locate a nonzero pivot in the trailing block
        piv = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best = v
                    piv = (i, j)
        if piv is None:
            divisors.extend([0] * (k - t))
            break
        i0, j0 = piv
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        # clear row and column t, repeating while remainders appear
        while True:
            changed = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    f = a[i][t] // a[t][t]
                    a[i] = [x - f * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        changed = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    f = a[t][j] // a[t][t]
                    if f:
                        for row in a:
                            row[j] -= f * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        changed = True
            if not changed:
                break
        # divisibility: pivot must divide every remaining entry
        p = abs(a[t][t])
        offender = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if a[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            continue
        divisors.append(p)
        t += 1
    return divisors


def int_matrix_inverse(m):
    """Exact inverse of a unimodular integer matrix, as integer rows."""
    inv = inverse(matrix(m))
    out = []
    for r in inv:
        row = []
        for e in r:
            if not is_integer(e):
                raise Singular("matrix is not unimodular")
            row.append(int(e))
        out.append(tuple(row))
    return tuple(out)


def content(ints):
    g = 0
    for a in ints:
        g = gcd(g, int(a))
    return g
