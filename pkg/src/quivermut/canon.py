"""Canonical labeling for quivers.

The canonical form of an n-vertex quiver is the lexicographically smallest
matrix (flattened row-major, entries compared as integers) over all
relabelings of the vertices.  Two quivers are isomorphic exactly when their
canonical matrices are equal; the 64-bit digest is a convenience key and is
never trusted on its own.

Strategy: build the relabeling one position at a time.  After placing p
vertices, the unplaced vertices sit in an ordered partition whose cells group
vertices with identical arrow patterns toward the placed prefix; row-major
minimality forces the next vertex to come from the first cell, and within it
only vertices whose remaining row (cell blocks sorted ascending) is minimal
can appear in an optimal labeling.  Ties branch; a cheap interchangeability
test (swapping the two candidates is an automorphism) collapses symmetric
branches, which keeps highly symmetric inputs such as arrowless quivers
linear instead of factorial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import Matrix, Quiver, QuiverError

__all__ = ["CanonicalForm", "canonical_form", "canonical_matrix", "are_isomorphic",
           "apply_permutation", "fnv1a64"]

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = 0xFFFFFFFFFFFFFFFF


def fnv1a64(mat: Matrix) -> int:
    """FNV-1a over the matrix entries, row-major, each entry as 8 bytes
    two's-complement little-endian."""
    h = _FNV_OFFSET
    for row in mat:
        for v in row:
            try:
                data = v.to_bytes(8, "little", signed=True)
            except OverflowError:
                raise QuiverError(
                    f"entry {v} does not fit in 8 bytes; digest undefined"
                ) from None
            for byte in data:
                h = ((h ^ byte) * _FNV_PRIME) & _MASK64
    return h


def apply_permutation(b: Matrix, perm) -> Matrix:
    """Relabel: vertex ``i`` of ``b`` becomes vertex ``perm[i]``."""
    n = len(b)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(tuple(b[inv[i]][inv[j]] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class CanonicalForm:
    matrix: Matrix
    witness: tuple[int, ...]  # witness[i] = canonical label of input vertex i
    hash: int


def _search_min(b: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    n = len(b)
    if n == 1:
        return ((0,),), (0,)

    best_mat: list | None = None
    best_order: tuple[int, ...] | None = None

    def rec(placed: list[int], cells: list[list[int]]):
        nonlocal best_mat, best_order
        if not cells:
            order = placed  # order[p] = input vertex at canonical position p
            mat = [tuple(b[v][u] for u in order) for v in order]
            if best_mat is None or mat < best_mat:
                best_mat = mat
                best_order = tuple(order)
            return
        first = cells[0]
        if len(first) == 1:
            cands = first
        else:
            keyed = []
            for v in first:
                bv = b[v]
                key: list[int] = []
                for cell in cells:
                    key.extend(sorted(bv[u] for u in cell if u != v))
                keyed.append((key, v))
            minkey = min(k for k, _ in keyed)
            cands = [v for k, v in keyed if k == minkey]
            if len(cands) > 1:
                kept: list[int] = []
                for v in cands:
                    bv = b[v]
                    for u in kept:
                        bu = b[u]
                        if bu[v] == 0 and all(
                            bu[w] == bv[w] for w in range(n) if w != u and w != v
                        ):
                            break
                    else:
                        kept.append(v)
                cands = kept
        for v in cands:
            bv = b[v]
            newcells: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    if cell[0] != v:
                        newcells.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for u in cell:
                    if u != v:
                        groups.setdefault(bv[u], []).append(u)
                for val in sorted(groups):
                    newcells.append(groups[val])
            placed.append(v)
            rec(placed, newcells)
            placed.pop()

    rec([], [list(range(n))])
    assert best_mat is not None and best_order is not None
    witness = [0] * n
    for pos, v in enumerate(best_order):
        witness[v] = pos
    return tuple(best_mat), tuple(witness)


def canonical_matrix(b: Matrix) -> Matrix:
    """Canonical matrix of a raw matrix (assumed already valid)."""
    return _search_min(b)[0]


def canonical_form(q: Quiver) -> CanonicalForm:
    mat, witness = _search_min(q.b)
    return CanonicalForm(matrix=mat, witness=witness, hash=fnv1a64(mat))


def are_isomorphic(a: Quiver, b: Quiver) -> bool:
    if a.n != b.n:
        return False
    return _search_min(a.b)[0] == _search_min(b.b)[0]
