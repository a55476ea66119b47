"""Directed multigraphs without loops or 2-cycles, as skew-symmetric matrices.

The entry ``b[i][j]`` is an integer; a positive value means ``b[i][j]``
parallel arrows from vertex ``j`` to vertex ``i``, and skew-symmetry makes
``b[j][i]`` carry the opposite sign.  Quiver values are immutable and
hashable; every operation returns a new value.

Entries are plain Python integers, so there is no overflow to detect
anywhere in the engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

Matrix = tuple[tuple[int, ...], ...]

__all__ = [
    "Matrix",
    "Quiver",
    "QuiverError",
    "ValidationError",
    "validate",
    "mutate",
    "mutate_rows",
    "full_subquiver",
    "is_connected",
    "components",
    "max_multiplicity",
    "from_json_dict",
    "to_json_dict",
    "dumps_json",
    "dumps_edge_list",
    "loads_edge_list",
    "loads_auto",
]


class QuiverError(Exception):
    """Base class for every error this package raises on purpose."""


class ValidationError(QuiverError, ValueError):
    """A matrix or argument fails the structural contract."""


def _check_rows(rows) -> Matrix:
    try:
        mat = tuple(tuple(row) for row in rows)
    except TypeError:
        raise ValidationError("matrix must be an iterable of rows") from None
    n = len(mat)
    if n == 0:
        raise ValidationError("matrix is empty; a quiver needs at least one vertex")
    for i, row in enumerate(mat):
        if len(row) != n:
            raise ValidationError(
                f"not square: row {i} has length {len(row)}, expected {n}"
            )
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"entry ({i},{j}) is not an integer: {v!r}")
    for i in range(n):
        for j in range(i, n):
            if mat[i][j] != -mat[j][i]:
                raise ValidationError(
                    f"not skew-symmetric at ({i},{j}): "
                    f"b[{i}][{j}]={mat[i][j]} but b[{j}][{i}]={mat[j][i]}"
                )
    return mat


@dataclass(frozen=True)
class Quiver:
    """An immutable quiver on vertices ``0..n-1``."""

    b: Matrix

    def __post_init__(self):
        object.__setattr__(self, "b", _check_rows(self.b))

    @property
    def n(self) -> int:
        return len(self.b)

    def __repr__(self) -> str:
        return f"Quiver({[list(r) for r in self.b]})"


def validate(rows) -> Quiver:
    """Build a Quiver from any iterable of rows, checking the contract."""
    return Quiver(rows)


def mutate_rows(b: Matrix, k: int) -> Matrix:
    """Mutation at vertex ``k`` on a raw matrix (no wrapping, no checks)."""
    n = len(b)
    bk = b[k]
    out = []
    for i in range(n):
        bi = b[i]
        if i == k:
            out.append(tuple(-x for x in bi))
            continue
        bik = bi[k]
        if bik == 0:
            out.append(bi)
            continue
        row = list(bi)
        row[k] = -bik
        if bik > 0:
            for j in range(n):
                bkj = bk[j]
                if bkj > 0:
                    row[j] += bik * bkj
        else:
            for j in range(n):
                bkj = bk[j]
                if bkj < 0:
                    row[j] -= bik * bkj
        out.append(tuple(row))
    return tuple(out)


def mutate(q: Quiver, k: int) -> Quiver:
    """Mutate at vertex ``k``: entries in row/column ``k`` flip sign, any
    other entry picks up the signed count of length-2 paths through ``k``.

    Applying the same mutation twice returns the original quiver.
    """
    if not 0 <= k < q.n:
        raise ValidationError(f"vertex out of range: {k} (n={q.n})")
    return Quiver(mutate_rows(q.b, k))


def full_subquiver(q: Quiver, vertices) -> Quiver:
    """Restrict to the given vertices, keeping their order and all arrows
    between them."""
    vs = list(vertices)
    if not vs:
        raise ValidationError("vertex selection is empty")
    seen = set()
    for v in vs:
        if not 0 <= v < q.n:
            raise ValidationError(f"vertex out of range: {v} (n={q.n})")
        if v in seen:
            raise ValidationError(f"vertex repeated in selection: {v}")
        seen.add(v)
    b = q.b
    return Quiver(tuple(tuple(b[i][j] for j in vs) for i in vs))


def components(b: Matrix) -> list[int]:
    """Component label per vertex (labels are arbitrary but consistent)."""
    n = len(b)
    label = [-1] * n
    nxt = 0
    for s in range(n):
        if label[s] != -1:
            continue
        label[s] = nxt
        stack = [s]
        while stack:
            v = stack.pop()
            row = b[v]
            for u in range(n):
                if row[u] != 0 and label[u] == -1:
                    label[u] = nxt
                    stack.append(u)
        nxt += 1
    return label


def is_connected(q: Quiver) -> bool:
    return max(components(q.b)) == 0


def max_multiplicity(q: Quiver) -> int:
    """Largest arrow multiplicity between any two vertices (0 if no arrows)."""
    return max((abs(v) for row in q.b for v in row), default=0)


# ---------------------------------------------------------------------------
# serialization

def to_json_dict(q: Quiver) -> dict:
    return {"n": q.n, "b": [list(row) for row in q.b]}


def from_json_dict(d) -> Quiver:
    if not isinstance(d, dict) or "b" not in d:
        raise ValidationError('quiver JSON must be an object with a "b" key')
    q = Quiver(d["b"])
    if "n" in d and d["n"] != q.n:
        raise ValidationError(f'declared n={d["n"]} but matrix has {q.n} rows')
    return q


def dumps_json(q: Quiver) -> str:
    return json.dumps(to_json_dict(q), separators=(",", ":"))


def dumps_edge_list(q: Quiver) -> str:
    """One line per arrow bundle: ``<from> <to> <multiplicity>``.

    Only positive multiplicities are written; the skew half is implied.
    Trailing isolated vertices are not representable in this format, so a
    quiver whose last vertex is isolated is rejected (use JSON for those).
    """
    lines = []
    b = q.b
    touched = 0
    for i in range(q.n):
        for j in range(q.n):
            if b[j][i] > 0:
                lines.append(f"{i} {j} {b[j][i]}")
                touched = max(touched, i + 1, j + 1)
    if touched < q.n:
        raise ValidationError(
            "edge-list format cannot express trailing isolated vertices; "
            "serialize as JSON instead"
        )
    return "\n".join(lines) + ("\n" if lines else "")


def loads_edge_list(text: str) -> Quiver:
    """Parse ``<from> <to> <mult>`` lines; ``#`` comments and blanks ignored.

    Vertices are 0-indexed and the vertex count is the largest index + 1.
    """
    arrows: dict[tuple[int, int], int] = {}
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValidationError(
                f"line {lineno}: expected '<from> <to> <mult>', got {raw!r}"
            )
        try:
            src, dst, mult = (int(p) for p in parts)
        except ValueError:
            raise ValidationError(f"line {lineno}: non-integer field in {raw!r}") from None
        if src < 0 or dst < 0:
            raise ValidationError(f"line {lineno}: negative vertex index")
        if src == dst:
            raise ValidationError(f"line {lineno}: loop at vertex {src} not allowed")
        if mult <= 0:
            raise ValidationError(f"line {lineno}: multiplicity must be positive")
        if (src, dst) in arrows or (dst, src) in arrows:
            raise ValidationError(f"line {lineno}: pair {src},{dst} given twice")
        arrows[(src, dst)] = mult
        top = max(top, src, dst)
    if top < 0:
        raise ValidationError("edge list is empty")
    n = top + 1
    rows = [[0] * n for _ in range(n)]
    for (src, dst), mult in arrows.items():
        rows[dst][src] = mult
        rows[src][dst] = -mult
    return Quiver(rows)


def loads_auto(text: str) -> Quiver:
    """Detect format by the first non-blank byte: ``{`` means JSON."""
    stripped = text.lstrip()
    if not stripped:
        raise ValidationError("empty input")
    if stripped[0] == "{":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"invalid JSON: {e}") from None
        return from_json_dict(payload)
    return loads_edge_list(text)
