import random

from latred.errors import LatredError
from latred.lattice import Lattice
from latred.rationals import Q


def random_integer_lattice(rng: random.Random, n: int, limit: int = 3) -> Lattice:
    """Full-rank integer lattice with entries in [-limit, limit]."""
    while True:
        rows = tuple(
            tuple(Q(rng.randint(-limit, limit)) for _ in range(n)) for _ in range(n)
        )
        try:
            return Lattice(rows)
        except LatredError:
            continue


def random_unimodular(rng: random.Random, n: int, steps: int = 20):
    """Random unimodular integer matrix from elementary row operations."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        if not c:
            continue
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    if rng.random() < 0.5:
        rng.shuffle(rows)
    return tuple(tuple(Q(x) for x in row) for row in rows)
