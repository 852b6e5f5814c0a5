"""Exact shortest-vector, bounded-norm, and closest-vector enumeration.

Depth-first enumeration over the exact rational Gram-Schmidt data of an
LLL-preprocessed basis.  All pruning uses exact interval bounds; there is
no floating point anywhere.  A node budget turns out-of-desk-scale
instances into an explicit BudgetExceeded error instead of a long stall.
"""

from dataclasses import dataclass
from math import isqrt

from . import linalg
from .errors import BudgetExceeded
from .lattice import Lattice, coordinates
from .linalg import (
    gram_schmidt,
    matrix,
    norm_sq,
    normalize_sign,
    row_times_mat,
    vsub,
    vscale,
)
from .rationals import Q, QONE, QZERO, qceil, qfloor, qnum, qden, qround

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class MinimaReport:
    minima_sq: tuple
    witnesses: tuple


@dataclass(frozen=True)
class VectorList:
    vectors: tuple
    bound_sq: object


# ---------------------------------------------------------------------------
# LLL preprocessing (plumbing, not a contribution; delta = 3/4 by default)


def lll_rows(rows, delta=Q(3, 4)):
    """Exact LLL reduction of independent rows; same lattice, new basis."""
    b = [tuple(r) for r in matrix(rows)]
    n = len(b)
    if n <= 1:
        return tuple(b)
    gso = gram_schmidt(b)
    mu = [list(r) for r in gso.mu]
    c = list(gso.norms_sq)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            r = qround(mu[k][j])
            if r:
                b[k] = vsub(b[k], vscale(Q(r), b[j]))
                for i in range(j + 1):
                    mu[k][i] -= r * mu[j][i]
        if c[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * c[k - 1]:
            k += 1
        else:
            b[k - 1], b[k] = b[k], b[k - 1]
            gso = gram_schmidt(b)
            mu = [list(r) for r in gso.mu]
            c = list(gso.norms_sq)
            k = max(k - 1, 1)
    return tuple(b)


# ---------------------------------------------------------------------------
# bounded enumeration


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n):
        self.left = n

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("enumeration node budget exhausted")


def _level_range(center, remaining, ck):
    """Integer x with ck * (x - center)^2 <= remaining, as [lo, hi]."""
    t = remaining / ck
    p = qnum(center)
    q = qden(center)
    s = isqrt(qfloor(t * q * q))
    lo = -((s - p) // q)  # ceil((p - s) / q)
    hi = (p + s) // q
    return lo, hi


def _enum_coeffs(rows, bound_sq, budget):
    """Yield coefficient tuples of all nonzero v with |v|^2 <= bound, one
    per +/- pair (topmost nonzero coefficient positive)."""
    gso = gram_schmidt(rows)
    mu = gso.mu
    c = gso.norms_sq
    n = len(rows)
    x = [0] * n

    def rec(k, rho, allzero):
        if k < 0:
            if not allzero:
                yield tuple(x)
            return
        budget.spend()
        center = QZERO
        for i in range(k + 1, n):
            if x[i]:
                center -= x[i] * mu[i][k]
        remaining = bound_sq - rho
        lo, hi = _level_range(center, remaining, c[k])
        if allzero and lo < 0:
            lo = 0
        for xk in range(lo, hi + 1):
            d = xk - center
            add = c[k] * d * d
            if add > remaining:
                continue
            x[k] = xk
            yield from rec(k - 1, rho + add, allzero and xk == 0)
        x[k] = 0

    yield from rec(n - 1, QZERO, True)


def enumerate_up_to(L: Lattice, bound_sq, node_budget=DEFAULT_BUDGET) -> VectorList:
    """All nonzero v in L with |v|^2 <= bound_sq, one per +/- pair,
    sorted by (squared norm, lexicographic order of the entries)."""
    bound_sq = Q(bound_sq)
    rows = lll_rows(L.basis)
    budget = _Budget(node_budget)
    out = []
    for coeffs in _enum_coeffs(rows, bound_sq, budget):
        v = normalize_sign(row_times_mat([Q(t) for t in coeffs], rows))
        out.append((norm_sq(v), v))
    out.sort()
    return VectorList(tuple(v for _, v in out), bound_sq)


def shortest_vector(L: Lattice, node_budget=DEFAULT_BUDGET):
    """A shortest nonzero vector and its squared norm, deterministic
    tie-break: lexicographically smallest after sign normalization."""
    rows = lll_rows(L.basis)
    start = min(norm_sq(r) for r in rows)
    pool = enumerate_up_to(L, start, node_budget)
    v = pool.vectors[0]
    return v, norm_sq(v)


def successive_minima(L: Lattice, node_budget=DEFAULT_BUDGET) -> MinimaReport:
    """Greedy successive minima with witnesses over a growing-bound pool."""
    rows = lll_rows(L.basis)
    bound = min(norm_sq(r) for r in rows)
    n = L.rank
    while True:
        pool = enumerate_up_to(L, bound, node_budget)
        chosen = []
        chosen_rows = []
        for v in pool.vectors:
            cand = matrix(chosen_rows + [list(v)])
            if linalg.rank(cand) == len(chosen) + 1:
                chosen.append(v)
                chosen_rows.append(list(v))
                if len(chosen) == n:
                    return MinimaReport(
                        tuple(norm_sq(v) for v in chosen), tuple(chosen)
                    )
        bound *= 2


# ---------------------------------------------------------------------------
# closest vector


def closest_vectors_all(L: Lattice, target, node_budget=DEFAULT_BUDGET):
    """All v in L minimizing |target - v|^2, plus the squared distance."""
    rows = lll_rows(L.basis)
    gso = gram_schmidt(rows)
    t = coordinates(Lattice(rows), target)  # raises NotInSpan when unsolvable
    mu = gso.mu
    c = gso.norms_sq
    n = len(rows)
    x = [0] * n
    budget = _Budget(node_budget)
    best = [None]
    found = []

    def rec(k, rho):
        budget.spend()
        if k < 0:
            if best[0] is None or rho < best[0]:
                best[0] = rho
                found.clear()
            if rho == best[0]:
                found.append(tuple(x))
            return
        center = t[k]
        for i in range(k + 1, n):
            d = x[i] - t[i]
            if d:
                center -= d * mu[i][k]
        # zig-zag outward from the rounded center; prune once past best
        x0 = qround(center)
        step = 0
        while True:
            if step == 0:
                cands = (x0,)
            else:
                cands = (x0 + step, x0 - step)
            alive = False
            for xk in cands:
                d = xk - center
                add = c[k] * d * d
                if best[0] is not None and rho + add > best[0]:
                    continue
                alive = True
                x[k] = xk
                rec(k - 1, rho + add)
            if step and not alive:
                break
            if best[0] is None and step > 10**6:  # safety; never expected
                break
            step += 1
        x[k] = 0

    rec(n - 1, QZERO)
    vecs = sorted(
        row_times_mat([Q(e) for e in coeffs], rows) for coeffs in found
    )
    # dedupe (distinct coefficient vectors give distinct lattice points,
    # but keep this robust)
    out = []
    for v in vecs:
        if not out or out[-1] != v:
            out.append(v)
    return tuple(out), best[0]


def closest_vector(L: Lattice, target, node_budget=DEFAULT_BUDGET):
    """The closest lattice vector; ties broken lexicographically."""
    vecs, _ = closest_vectors_all(L, target, node_budget)
    return vecs[0]
