"""Minkowski and Korkin-Zolotarev reduction, shortest bases, and the
van der Waerden bound table with its k = 6, 7 improvements.

Ties are resolved deterministically everywhere: candidate vectors are sign
normalized and compared lexicographically, and the per-step log records how
many candidates were tied so tests can spot tie-sensitive assertions.
"""

from dataclasses import dataclass, field

from . import linalg
from .enumeration import (
    DEFAULT_BUDGET,
    closest_vectors_all,
    enumerate_up_to,
    lll_rows,
    shortest_vector,
)
from .errors import DependentTuple, PreconditionViolated
from .lattice import (
    Lattice,
    integer_coordinates,
    is_primitive_tuple,
    project_orthogonal_with_lift,
    sublattice,
)
from .linalg import hnf, matrix, norm_sq, normalize_sign, row_times_mat, vneg
from .rationals import Q, QONE


@dataclass(frozen=True)
class StepRecord:
    index: int
    vector: tuple
    norm_sq: object
    ties: int


@dataclass(frozen=True)
class ReductionResult:
    basis: tuple
    kind: str
    step_log: tuple


@dataclass(frozen=True)
class DeltaTable:
    values: tuple
    improved: tuple


@dataclass(frozen=True)
class ShortestBasisReport:
    basis: tuple
    max_norm_sq: object
    pool: tuple
    bound_sq: object
    certified: bool


def lll(L: Lattice, delta=Q(3, 4)) -> ReductionResult:
    if not (Q(1, 4) < delta < 1):
        raise PreconditionViolated("delta must lie in (1/4, 1)")
    rows = lll_rows(L.basis, delta)
    return ReductionResult(rows, "lll", ())


def minkowski_reduce(L: Lattice, node_budget=DEFAULT_BUDGET) -> ReductionResult:
    """Greedy reduction: each b_i is a shortest vector keeping the prefix
    primitive, found by scanning the bounded enumeration in norm order."""
    prefix = []
    log = []
    bound = min(norm_sq(r) for r in lll_rows(L.basis))
    pool = enumerate_up_to(L, bound, node_budget)
    for i in range(L.rank):
        chosen = None
        while chosen is None:
            for v in pool.vectors:
                try:
                    ok = is_primitive_tuple(L, prefix + [v]).verdict
                except DependentTuple:
                    ok = False
                if ok:
                    chosen = v
                    break
            if chosen is None:
                bound = bound * 3 / 2
                pool = enumerate_up_to(L, bound, node_budget)
        nsq = norm_sq(chosen)
        ties = 0
        for v in pool.vectors:
            if norm_sq(v) != nsq:
                continue
            try:
                if is_primitive_tuple(L, prefix + [v]).verdict:
                    ties += 1
            except DependentTuple:
                pass
        prefix.append(chosen)
        log.append(StepRecord(i, chosen, nsq, ties))
    return ReductionResult(tuple(prefix), "minkowski", tuple(log))


def _kz_candidates(L, prefix, node_budget):
    """Lifts of all shortest projected vectors, size-minimized over the
    prefix sublattice; both signs, sign normalized."""
    if not prefix:
        sv, nsq = shortest_vector(L, node_budget)
        mins = enumerate_up_to(L, nsq, node_budget).vectors
        return [v for v in mins if norm_sq(v) == nsq]
    proj, lifts = project_orthogonal_with_lift(L, prefix)
    _, pnsq = shortest_vector(proj, node_budget)
    minimizers = [
        p
        for p in enumerate_up_to(proj, pnsq, node_budget).vectors
        if norm_sq(p) == pnsq
    ]
    sub = sublattice(prefix)
    cands = set()
    from .lattice import coordinates

    for p in minimizers:
        for q in (p, vneg(p)):
            x = coordinates(proj, q)
            y = row_times_mat(x, lifts)
            # the in-span component is y - q; pull it toward the sublattice
            target = linalg.vsub(y, q)
            closest, _ = closest_vectors_all(sub, target, node_budget)
            for c in closest:
                cands.add(normalize_sign(linalg.vsub(y, c)))
    best = min(norm_sq(v) for v in cands)
    return sorted(v for v in cands if norm_sq(v) == best)


def kz_reduce(L: Lattice, node_budget=DEFAULT_BUDGET) -> ReductionResult:
    """Korkin-Zolotarev reduction: at each step the new vector minimizes the
    projected norm and, among those minimizers, the full norm."""
    prefix = []
    log = []
    for i in range(L.rank):
        cands = _kz_candidates(L, prefix, node_budget)
        chosen = cands[0]
        prefix.append(chosen)
        log.append(StepRecord(i, chosen, norm_sq(chosen), len(cands)))
    return ReductionResult(tuple(prefix), "kz", tuple(log))


# ---------------------------------------------------------------------------
# shortest basis (min-max over all bases)


def _generates(L, vectors):
    """Do the vectors Z-span all of L?"""
    if not vectors:
        return False
    coords = [integer_coordinates(L, v) for v in vectors]
    if linalg.rank(matrix(coords)) < L.rank:
        return False
    h, _ = hnf(coords)
    det = 1
    for i in range(L.rank):
        det *= h[i][i]
    return abs(det) == 1


def _basis_subset_search(L, pool, budget):
    """Depth-first search for a primitive rank-subset of the pool.

    Pool order is the search order; prefixes are pruned by primitivity and
    by whether prefix + remaining pool can still generate L.
    """
    n = L.rank
    nodes = [0]

    def rec(prefix, start):
        if len(prefix) == n:
            return list(prefix)
        if len(prefix) + (len(pool) - start) < n:
            return None
        for idx in range(start, len(pool)):
            nodes[0] += 1
            if nodes[0] > budget:
                raise PreconditionViolated("subset search budget exhausted")
            v = pool[idx]
            try:
                if not is_primitive_tuple(L, prefix + [v]).verdict:
                    continue
            except DependentTuple:
                continue
            got = rec(prefix + [v], idx + 1)
            if got is not None:
                return got
        return None

    return rec([], 0)


def shortest_basis(L: Lattice, node_budget=DEFAULT_BUDGET) -> ShortestBasisReport:
    """Exact min-max basis: certify the smallest possible maximum squared
    norm by exhausting the candidate pool level by level."""
    upper = max(norm_sq(v) for v in kz_reduce(L, node_budget).basis)
    pool = enumerate_up_to(L, upper, node_budget).vectors
    levels = sorted({norm_sq(v) for v in pool})
    certified = True
    for level in levels:
        sub = [v for v in pool if norm_sq(v) <= level]
        if not _generates(L, sub):
            continue
        # search order: rare (large-denominator) vectors first, then by norm
        def order_key(v):
            den = 1
            for e in v:
                den = max(den, int(e.denominator))
            return (-den, norm_sq(v), v)

        ordered = sorted(sub, key=order_key)
        try:
            found = _basis_subset_search(L, ordered, budget=2_000_000)
        except PreconditionViolated:
            certified = False
            found = None
        if found is not None:
            found.sort(key=lambda v: (norm_sq(v), v))
            return ShortestBasisReport(
                tuple(found), level, tuple(pool), upper, certified
            )
    # fall back to the KZ basis itself (always a basis below upper)
    kz = kz_reduce(L, node_budget).basis
    return ShortestBasisReport(tuple(kz), upper, tuple(pool), upper, False)


# ---------------------------------------------------------------------------
# van der Waerden Delta table


def vdw_delta_table(K: int, use_improvements: bool) -> DeltaTable:
    """Exact Delta_1..Delta_K from the size-reduction recurrence
    Delta_{k+1} = max(1, (sum_i Delta_i + 1) / 4), optionally substituting
    the proven Delta_6 = 3/2 and Delta_7 = 7/4."""
    values = []
    improved = []
    total = Q(0)
    for k in range(1, K + 1):
        if k == 1:
            v = QONE
        else:
            v = max(QONE, (total + 1) / 4)
        flag = False
        if use_improvements and k == 6:
            v = Q(3, 2)
            flag = True
        elif use_improvements and k == 7:
            v = Q(7, 4)
            flag = True
        elif use_improvements and k >= 8:
            flag = True  # inherits the substituted entries via the recurrence
        values.append(v)
        improved.append(flag)
        total += v
    return DeltaTable(tuple(values), tuple(improved))
