"""Generators for every lattice family the toolkit studies.

Covers Z^n, the checkerboard lattice D_n and its dual, the glued-prime
family built from blocks of size p_i^2 sharing the first coordinate, the
incidence lattices of projective planes over F_2 and F_4, the 21- and
42-dimensional line lattices, and the height-perturbation lift that turns
an (n-1)-dimensional lattice with a unique generator dependence into an
n-dimensional one.
"""

from dataclasses import dataclass

from .errors import BadParams, DegenerateHeights, NotInLattice, UnsupportedFieldOrder
from .lattice import Lattice, contains, lattice_from_generators, linear_dependence
from .linalg import unit_vector, vector
from .rationals import Q, QONE, QZERO, is_integer

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


@dataclass(frozen=True)
class GluedFamilyParams:
    k: int
    primes: tuple
    dims: tuple  # a_0, ..., a_k
    blocks: tuple  # block i covers 0-based coords [dims[i-1], dims[i])


@dataclass(frozen=True)
class IncidenceStructure:
    q: int
    points: tuple
    lines: tuple


@dataclass(frozen=True)
class GluedResidues:
    residues: tuple


# ---------------------------------------------------------------------------
# classical lattices


def hypercubic(n: int) -> Lattice:
    return Lattice(tuple(unit_vector(n, i) for i in range(n)))


def root_d(n: int) -> Lattice:
    """D_n = {x in Z^n : sum x_i even}."""
    if n < 2:
        raise BadParams("D_n needs n >= 2")
    rows = [
        tuple(
            QONE if j == i else (-QONE if j == i + 1 else QZERO)
            for j in range(n)
        )
        for i in range(n - 1)
    ]
    rows.append(
        tuple(QONE if j >= n - 2 else QZERO for j in range(n))
    )
    return Lattice(rows)


def dual_root_d(n: int) -> Lattice:
    """D_n^* = span_Z(e_1, ..., e_{n-1}, (e_1 + ... + e_n)/2)."""
    if n < 2:
        raise BadParams("D_n^* needs n >= 2")
    rows = [unit_vector(n, i) for i in range(n - 1)]
    rows.append((Q(1, 2),) * n)
    return Lattice(rows)


# ---------------------------------------------------------------------------
# glued-prime family


def glued_params(k: int) -> GluedFamilyParams:
    if k < 1:
        raise BadParams("glued family needs k >= 1")
    if k > len(_PRIMES):
        raise BadParams("glued family implemented for k <= %d" % len(_PRIMES))
    primes = _PRIMES[:k]
    dims = [1]
    for p in primes:
        dims.append(dims[-1] + p * p)
    blocks = tuple((dims[i], dims[i + 1]) for i in range(k))
    return GluedFamilyParams(k, primes, tuple(dims), blocks)


def _glue_vector(d, lo, hi, p):
    """(e_1 + e_{lo+1} + ... + e_hi) / p in 0-based coordinates."""
    return tuple(
        Q(1, p) if (j == 0 or lo <= j < hi) else QZERO for j in range(d)
    )


def glued_prime_lattice(k: int) -> Lattice:
    """Z^{a_k} glued by (e_1 + g_i)/p_i over disjoint prime-squared blocks."""
    params = glued_params(k)
    d = params.dims[-1]
    gens = [unit_vector(d, i) for i in range(d)]
    for p, (lo, hi) in zip(params.primes, params.blocks):
        gens.append(_glue_vector(d, lo, hi, p))
    return lattice_from_generators(gens)


def glued_kz_claimed_basis(k: int):
    """The block-structured KZ basis.  The first block contributes its
    units except the shared coordinate, with the glue vector in the third
    slot; every later block contributes its units except the second one,
    with the glue vector in the second slot."""
    params = glued_params(k)
    d = params.dims[-1]
    out = []
    for j, (p, (lo, hi)) in enumerate(zip(params.primes, params.blocks)):
        glue = _glue_vector(d, lo, hi, p)
        units = [unit_vector(d, c) for c in range(lo, hi)]
        if j == 0:
            block = [units[0], units[1], glue] + units[2:]
        else:
            block = [units[0], glue] + units[2:]
        out.extend(block)
    return tuple(out)


def glued_shortest_basis(k: int):
    """The short generating basis: all glue vectors plus the unit vectors
    e_j for j not equal to any a_i (1-based), i < k."""
    params = glued_params(k)
    d = params.dims[-1]
    excluded = {0} | {params.dims[i + 1] - 1 for i in range(1, k)}
    out = [
        _glue_vector(d, lo, hi, p)
        for p, (lo, hi) in zip(params.primes, params.blocks)
    ]
    out.extend(unit_vector(d, j) for j in range(d) if j not in excluded)
    return tuple(out)


def glued_residues(k: int, w) -> GluedResidues:
    """The residues x_i in [0, p_i) of w's glue coefficients; w is integral
    iff all of them vanish."""
    params = glued_params(k)
    L = glued_prime_lattice(k)
    w = vector(w)
    if not contains(L, w):
        raise NotInLattice("vector is not in the glued lattice")
    res = []
    for p, (lo, hi) in zip(params.primes, params.blocks):
        t = w[lo] * p  # first block coordinate is s + r/p with s integral
        if not is_integer(t):
            raise NotInLattice("unexpected denominator in block coordinate")
        res.append(int(t) % p)
    return GluedResidues(tuple(res))


def l2_small() -> Lattice:
    """The 12-dimensional variant: the second glue overlaps the first block."""
    d = 12
    gens = [unit_vector(d, i) for i in range(d)]
    gens.append(tuple(Q(1, 2) if j < 5 else QZERO for j in range(d)))
    gens.append(
        tuple(Q(1, 3) if (j == 0 or 3 <= j < 12) else QZERO for j in range(d))
    )
    return lattice_from_generators(gens)


# ---------------------------------------------------------------------------
# projective planes and line lattices


# elements 0,1,2,3 encode polynomials over F_2 modulo x^2 + x + 1
_GF4_TABLE = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)


def projective_plane_lines(q: int) -> IncidenceStructure:
    """Points and lines of P^2(F_q) for q in {2, 4}.

    Points are normalized so the last nonzero coordinate is 1 and listed in
    lexicographic order of the remaining coordinates: (x, y, 1) for all
    x, y, then (x, 1, 0), then (1, 0, 0).  Line i is the set of points
    orthogonal to point i under the standard bilinear form; this ordering
    is part of the interface (the special quintuplet indices depend on it).
    """
    if q == 2:
        elements = (0, 1)
        mul = lambda a, b: a & b
        add = lambda a, b: a ^ b
    elif q == 4:
        elements = (0, 1, 2, 3)
        mul = lambda a, b: _GF4_TABLE[a][b]
        add = lambda a, b: a ^ b
    else:
        raise UnsupportedFieldOrder("q must be 2 or 4")
    points = [(x, y, 1) for x in elements for y in elements]
    points += [(x, 1, 0) for x in elements]
    points.append((1, 0, 0))
    lines = []
    for p in points:
        line = tuple(
            j
            for j, r in enumerate(points)
            if add(add(mul(r[0], p[0]), mul(r[1], p[1])), mul(r[2], p[2])) == 0
        )
        lines.append(line)
    return IncidenceStructure(q, tuple(points), tuple(lines))


def _support_vector(dim, indices):
    return tuple(QONE if j in indices else QZERO for j in range(dim))


def l_proj() -> Lattice:
    """Span of the 7 line vectors of the Fano plane in R^7."""
    inc = projective_plane_lines(2)
    rows = [_support_vector(7, set(line)) for line in inc.lines]
    return Lattice(rows)


def attempt21():
    """Three Fano copies plus the triplet {0, 7, 14}; 22 generators whose
    dependence turns out to contain unit coefficients."""
    inc = projective_plane_lines(2)
    supports = []
    for line in inc.lines:
        for copy in range(3):
            supports.append(tuple(p + 7 * copy for p in line))
    supports.append((0, 7, 14))
    vecs = tuple(_support_vector(21, set(s)) for s in supports)
    return lattice_from_generators(vecs), vecs


def lattice42():
    """Two copies of P^2(F_4) plus the quintuplet {0, 1, 4, 21, 22}."""
    inc = projective_plane_lines(4)
    supports = []
    for line in inc.lines:
        supports.append(line)
        supports.append(tuple(p + 21 for p in line))
    supports.append((0, 1, 4, 21, 22))
    vecs = tuple(_support_vector(42, set(s)) for s in supports)
    return lattice_from_generators(vecs), vecs


# ---------------------------------------------------------------------------
# height perturbation


def perturbed_lift(Lprime: Lattice, generators, heights) -> Lattice:
    """Lift n generators of a rank n-1 lattice by heights in a fresh
    coordinate; the dependence collapses to a short multiple of e_n."""
    gens = [vector(g) for g in generators]
    heights = [Q(h) for h in heights]
    if len(heights) != len(gens):
        raise BadParams("one height per generator required")
    if any(not h for h in heights):
        raise DegenerateHeights("heights must be nonzero")
    rel = linear_dependence(gens)
    s = sum((a * h for a, h in zip(rel.coefficients, heights)), Q(0))
    if not s:
        raise DegenerateHeights("heights annihilate the dependence")
    rows = [tuple(g) + (h,) for g, h in zip(gens, heights)]
    return Lattice(rows)


def default_heights(n, scale=10**4):
    """1/(scale * q_i) with q_i the i-th prime; small, distinct, nonzero."""
    primes = []
    c = 2
    while len(primes) < n:
        if all(c % p for p in primes):
            primes.append(c)
        c += 1
    return tuple(Q(1, scale * p) for p in primes)


def perturbed43() -> Lattice:
    _, vecs = lattice42()
    return perturbed_lift(lattice_from_generators(vecs), vecs, default_heights(43))
