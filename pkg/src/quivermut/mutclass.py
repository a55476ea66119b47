"""Mutation classes: enumeration up to isomorphism and finiteness decision.

A quiver's mutation class is the set of isomorphism classes reachable by
mutation.  Enumeration is a FIFO breadth-first search over canonical forms,
mutating vertices in increasing index, so the set of representatives and any
reported witness are deterministic.

The search is total because of an abort rule: once any reachable quiver has
two vertices joined by three or more arrows *inside a connected component of
three or more vertices*, the class is infinite and the search stops with the
mutation sequence that got there.  (For such a component, take vertices x, y
with >= 3 arrows and a third vertex z adjacent to x or y; the full subquiver
on {x, y, z} is connected and lies outside the finitely many finite 3-vertex
classes, and restriction to a vertex subset commutes with mutation inside the
subset, so the whole quiver's class is infinite.)  Components of one or two
vertices never change under mutation beyond a sign flip, so they are exempt;
this makes the decision correct for disconnected inputs as well.  When no
abort fires, every entry stays in {-2..2} within big components, a finite
space, so the search terminates.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .canon import canonical_matrix
from .quiver import (
    Matrix,
    Quiver,
    QuiverError,
    ValidationError,
    components,
    mutate_rows,
)

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "MutationClass",
    "FinitenessVerdict",
    "enumerate_class",
    "decide_mutation_finite",
    "is_mutation_finite",
    "apply_sequence",
    "check_obstructive",
    "one_vertex_extensions",
    "attach_vertex",
    "extension_vectors",
    "find_subquiver_isomorphic_to",
    "contains_subquiver_isomorphic_to",
    "class_to_json_dict",
]

DEFAULT_BUDGET = 10_000_000


class BudgetExceededError(QuiverError):
    """The representative budget was exhausted before the search finished."""


@dataclass(frozen=True)
class FinitenessVerdict:
    finite: bool
    witness: tuple[int, ...] | None  # mutation sequence reaching >= 3 arrows


@dataclass(frozen=True)
class MutationClass:
    """Result of a class enumeration.

    For a finite class, ``representatives`` holds every canonical matrix,
    sorted.  For an infinite class it is empty and ``witness`` is a mutation
    sequence (seed frame) whose endpoint has two vertices joined by >= 3
    arrows inside a component with >= 3 vertices.
    """

    seed: Quiver
    status: str  # "finite" | "infinite"
    representatives: tuple[Matrix, ...]
    witness: tuple[int, ...] | None

    @property
    def finite(self) -> bool:
        return self.status == "finite"

    @property
    def size(self) -> int:
        if not self.finite:
            raise QuiverError("an infinite class has no size")
        return len(self.representatives)

    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """Mutation edges between representatives: (rep, vertex, rep).

        Recomputed from the canonical matrices themselves, so the result does
        not depend on the order the search happened to visit anything.
        """
        if not self.finite:
            raise QuiverError("an infinite class has no edge set")
        index = {m: i for i, m in enumerate(self.representatives)}
        out = []
        for i, m in enumerate(self.representatives):
            for k in range(len(m)):
                out.append((i, k, index[canonical_matrix(mutate_rows(m, k))]))
        return tuple(out)


def _big_component_mask(b: Matrix) -> list[bool]:
    labels = components(b)
    sizes: dict[int, int] = {}
    for c in labels:
        sizes[c] = sizes.get(c, 0) + 1
    return [sizes[c] >= 3 for c in labels]


def _offending(m: Matrix, big: list[bool]) -> bool:
    n = len(m)
    for i in range(n):
        if not big[i]:
            continue
        row = m[i]
        for j in range(i + 1, n):
            v = row[j]
            if (v >= 3 or v <= -3) and big[j]:
                return True
    return False


def enumerate_class(q: Quiver, budget: int | None = None) -> MutationClass:
    """Breadth-first enumeration of the mutation class up to isomorphism."""
    cap = DEFAULT_BUDGET if budget is None else budget
    if cap < 1:
        raise ValidationError(f"budget must be positive, got {cap}")
    b0 = q.b
    n = q.n
    big = _big_component_mask(b0)
    if _offending(b0, big):
        return MutationClass(seed=q, status="infinite", representatives=(), witness=())
    seen = {canonical_matrix(b0)}
    queue: deque[tuple[Matrix, tuple[int, ...]]] = deque([(b0, ())])
    while queue:
        m, seq = queue.popleft()
        last = seq[-1] if seq else -1
        for k in range(n):
            if k == last:
                continue  # undoes the arriving mutation; parent already seen
            child = mutate_rows(m, k)
            if _offending(child, big):
                return MutationClass(
                    seed=q, status="infinite", representatives=(), witness=seq + (k,)
                )
            c = canonical_matrix(child)
            if c not in seen:
                if len(seen) >= cap:
                    raise BudgetExceededError(
                        f"budget exhausted: more than {cap} representatives"
                    )
                seen.add(c)
                queue.append((child, seq + (k,)))
    return MutationClass(
        seed=q, status="finite", representatives=tuple(sorted(seen)), witness=None
    )


def decide_mutation_finite(q: Quiver, budget: int | None = None) -> FinitenessVerdict:
    mc = enumerate_class(q, budget=budget)
    return FinitenessVerdict(finite=mc.finite, witness=mc.witness)


def is_mutation_finite(q: Quiver, budget: int | None = None) -> bool:
    return enumerate_class(q, budget=budget).finite


def apply_sequence(q: Quiver, seq) -> Quiver:
    m = q.b
    n = q.n
    for pos, k in enumerate(seq):
        if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k < n:
            raise ValidationError(f"vertex out of range at step {pos}: {k!r} (n={n})")
        m = mutate_rows(m, k)
    return Quiver(m)


def check_obstructive(q: Quiver, seq) -> bool:
    """True iff applying ``seq`` yields two vertices with >= 3 arrows between
    them.  That certifies an infinite class when the pair lies in a connected
    component with at least three vertices."""
    out = apply_sequence(q, seq)
    return max((abs(v) for row in out.b for v in row), default=0) >= 3


def extension_vectors(n: int):
    """All attachment vectors in {-2..2}^n except all-zero, lexicographic."""
    return (
        vec
        for vec in itertools.product((-2, -1, 0, 1, 2), repeat=n)
        if any(vec)
    )


def attach_vertex(q: Quiver, vec) -> Quiver:
    """Add one vertex; ``vec[i]`` is the new row entry toward old vertex i
    (positive = arrows from i to the new vertex)."""
    vec = tuple(vec)
    if len(vec) != q.n:
        raise ValidationError(f"attachment vector has length {len(vec)}, need {q.n}")
    b = q.b
    n = q.n
    rows = [b[i] + (-vec[i],) for i in range(n)]
    rows.append(vec + (0,))
    return Quiver(rows)


def one_vertex_extensions(q: Quiver):
    """Stream the 5^n - 1 one-vertex extensions with new multiplicities in
    {-2..2}.  Larger attachment multiplicities are deliberately excluded:
    with them, the new vertex, its partner, and any third vertex of the
    partner's component span a connected 3-vertex subquiver outside every
    finite 3-vertex class, so those extensions are infinite a fortiori.
    """
    for vec in extension_vectors(q.n):
        yield attach_vertex(q, vec)


def _shape_key(mat: Matrix) -> tuple[int, ...]:
    return tuple(sorted(abs(v) for row in mat for v in row))


def find_subquiver_isomorphic_to(q: Quiver, pattern: Quiver):
    """Vertex subset whose full subquiver is isomorphic to ``pattern``, or
    None.  Subsets are scanned in lexicographic order."""
    k = pattern.n
    if k > q.n:
        return None
    target = canonical_matrix(pattern.b)
    target_shape = _shape_key(target)
    b = q.b
    for vs in itertools.combinations(range(q.n), k):
        sub = tuple(tuple(b[i][j] for j in vs) for i in vs)
        if _shape_key(sub) != target_shape:
            continue
        if canonical_matrix(sub) == target:
            return vs
    return None


def contains_subquiver_isomorphic_to(q: Quiver, pattern: Quiver) -> bool:
    return find_subquiver_isomorphic_to(q, pattern) is not None


def class_to_json_dict(mc: MutationClass) -> dict:
    out = {
        "status": mc.status,
        "seed": {"n": mc.seed.n, "b": [list(r) for r in mc.seed.b]},
    }
    if mc.finite:
        out["size"] = mc.size
        out["representatives"] = [[list(r) for r in m] for m in mc.representatives]
    else:
        out["witness"] = list(mc.witness)
    return out
