"""Text file format for exact-rational lattices.

Layout:
    LATTICE v1
    <rank> <ambient_dim>
    <ambient_dim rationals per row, "p/q" or "p", space separated>

Round-trips losslessly; no floating point anywhere.
"""

from .errors import ParseError
from .lattice import Lattice
from .rationals import qparse, qstr

HEADER = "LATTICE v1"


def serialize(L: Lattice) -> str:
    lines = [HEADER, "%d %d" % (L.rank, L.ambient_dim)]
    for row in L.basis:
        lines.append(" ".join(qstr(x) for x in row))
    return "\n".join(lines) + "\n"


def parse(text: str) -> Lattice:
    lines = [ln for ln in text.splitlines()]
    if not lines or lines[0].strip() != HEADER:
        raise ParseError("missing '%s' header" % HEADER)
    if len(lines) < 2:
        raise ParseError("missing dimension line")
    parts = lines[1].split()
    if len(parts) != 2:
        raise ParseError("dimension line must be '<rank> <ambient_dim>'")
    try:
        rank, dim = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("dimensions must be integers") from None
    if rank < 1 or dim < rank:
        raise ParseError("need 1 <= rank <= ambient_dim")
    body = [ln for ln in lines[2:] if ln.strip()]
    if len(body) != rank:
        raise ParseError("expected %d basis rows, found %d" % (rank, len(body)))
    rows = []
    for ln in body:
        entries = ln.split()
        if len(entries) != dim:
            raise ParseError("row has %d entries, expected %d" % (len(entries), dim))
        rows.append(tuple(qparse(e) for e in entries))
    return Lattice(tuple(rows))


def load(path: str) -> Lattice:
    with open(path, "r", encoding="ascii") as fh:
        return parse(fh.read())


def save(L: Lattice, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize(L))
