"""Block decomposability for quivers of geometric type.

A quiver is block decomposable when it can be assembled from the six block
shapes (I, II, IIIa, IIIb, IV, V): take a disjoint union of block copies,
match some open vertices pairwise (never two vertices of the same copy),
identify matched vertices, and cancel any resulting 2-cycles.  Every vertex
of the assembled quiver is covered by one or two block vertices; double
coverage happens exactly at the identified pairs, which must both be open.

``decompose`` runs an exact backtracking search over block placements.  It
terminates because each vertex can absorb at most two block slots (total
capacity 2n) and every block consumes at least two slots, so any assembly
uses at most n blocks.  Pruning is sound under arrow cancellation: a future
block contributes at most one arrow between any vertex pair and must cover
both endpoints, so a pair (u, v) can still gain or lose at most
min(cap(u), cap(v)) arrows.  Any residual entry larger than that bound kills
the branch, and a ``None`` result is therefore a proof of non-decomposability
rather than a search give-up.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import Matrix, Quiver, QuiverError, ValidationError, max_multiplicity

__all__ = [
    "BlockKind",
    "Placement",
    "BlockSearchBudgetError",
    "KINDS",
    "KIND_ORDER",
    "assemble",
    "decompose",
    "is_block_decomposable",
    "placement_to_dict",
    "placement_from_dict",
    "DEFAULT_NODE_BUDGET",
]

DEFAULT_NODE_BUDGET = 2_000_000


class BlockSearchBudgetError(QuiverError):
    """Raised when the placement search exceeds its node budget."""


@dataclass(frozen=True)
class BlockKind:
    name: str
    size: int
    open_slots: frozenset[int]
    arrows: tuple[tuple[int, int], ...]
    automorphisms: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Placement:
    """One block copy embedded into the target: slot i sits on vertices[i]."""

    kind: str
    vertices: tuple[int, ...]


def _kind(name, open_slots, arrows, automorphisms):
    size = 1 + max(max(a) for a in arrows)
    return BlockKind(
        name=name,
        size=size,
        open_slots=frozenset(open_slots),
        arrows=tuple(arrows),
        automorphisms=tuple(tuple(p) for p in automorphisms),
    )


# Slot numbering is part of the contract: Placement.vertices[i] is the image
# of slot i.  Open slots are the ones that may be glued.
KINDS: dict[str, BlockKind] = {
    # one arrow 0 -> 1, both ends open
    "I": _kind("I", (0, 1), [(0, 1)], [(0, 1)]),
    # oriented triangle 0 -> 1 -> 2 -> 0, all open; rotations are symmetries
    "II": _kind("II", (0, 1, 2), [(0, 1), (1, 2), (2, 0)], [(0, 1, 2), (1, 2, 0), (2, 0, 1)]),
    # two closed vertices feeding one open tip
    "IIIa": _kind("IIIa", (0,), [(1, 0), (2, 0)], [(0, 1, 2), (0, 2, 1)]),
    # one open tip feeding two closed vertices
    "IIIb": _kind("IIIb", (0,), [(0, 1), (0, 2)], [(0, 1, 2), (0, 2, 1)]),
    # opens 0, 1; closed 2 (top) and 3 (bottom); two triangles sharing 1 -> 0
    "IV": _kind(
        "IV",
        (0, 1),
        [(0, 2), (2, 1), (1, 0), (0, 3), (3, 1)],
        [(0, 1, 2, 3), (0, 1, 3, 2)],
    ),
    # open center 0, closed ring 1..4; swapping the ring ends is a symmetry
    "V": _kind(
        "V",
        (0,),
        [(1, 0), (2, 4), (2, 1), (0, 2), (0, 3), (3, 1), (3, 4), (4, 0)],
        [(0, 1, 2, 3, 4), (0, 4, 3, 2, 1)],
    ),
}

KIND_ORDER = ("I", "II", "IIIa", "IIIb", "IV", "V")


def placement_to_dict(p: Placement) -> dict:
    return {"kind": p.kind, "vertices": list(p.vertices)}


def placement_from_dict(d: dict) -> Placement:
    try:
        kind = d["kind"]
        vertices = tuple(d["vertices"])
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"bad placement object: {d!r}") from exc
    return Placement(kind=kind, vertices=vertices)


def _validate_placement(i: int, p: Placement) -> BlockKind:
    if p.kind not in KINDS:
        raise ValidationError(f"placement {i}: unknown block kind {p.kind!r}")
    k = KINDS[p.kind]
    if len(p.vertices) != k.size:
        raise ValidationError(
            f"placement {i}: block {p.kind} takes {k.size} vertices, got {len(p.vertices)}"
        )
    for v in p.vertices:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValidationError(f"placement {i}: bad vertex {v!r}")
    if len(set(p.vertices)) != k.size:
        raise ValidationError(f"placement {i}: block vertices must be distinct")
    return k


def assemble(placements, n: int | None = None) -> Quiver:
    """Glue block placements into a quiver.

    Gluing constraints are enforced: a vertex may lie in at most two blocks,
    and when it lies in two, both covering slots must be open and belong to
    different placements.  Vertices below ``n`` that no block covers are
    allowed and stay isolated; with ``n`` omitted it is inferred as one past
    the largest used vertex.
    """
    placements = [
        p if isinstance(p, Placement) else placement_from_dict(p) for p in placements
    ]
    cover: dict[int, list[tuple[int, int]]] = {}
    top = -1
    for i, p in enumerate(placements):
        k = _validate_placement(i, p)
        for slot, v in enumerate(p.vertices):
            cover.setdefault(v, []).append((i, slot))
            top = max(top, v)
    if n is None:
        if top < 0:
            raise ValidationError("assembly has no blocks and no vertex count")
        n = top + 1
    elif top >= n:
        raise ValidationError(f"vertex {top} out of range for n={n}")
    for v, slots in cover.items():
        if len(slots) > 2:
            raise ValidationError(f"vertex {v} lies in more than two blocks")
        if len(slots) == 2:
            (b1, s1), (b2, s2) = slots
            if b1 == b2:
                raise ValidationError(f"vertex {v} glued to the same block twice")
            for b, s in slots:
                if s not in KINDS[placements[b].kind].open_slots:
                    raise ValidationError(
                        f"vertex {v} glued at a closed vertex of block {placements[b].kind}"
                    )
    rows = [[0] * n for _ in range(n)]
    for p in placements:
        for src, dst in KINDS[p.kind].arrows:
            u, v = p.vertices[src], p.vertices[dst]
            rows[v][u] += 1
            rows[u][v] -= 1
    return Quiver(rows)


def decompose(
    q: Quiver, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[Placement, ...] | None:
    """Find a block decomposition of ``q`` covering every vertex, or prove
    there is none.

    Returns the placements (``assemble`` on them reproduces ``q`` exactly) or
    ``None`` when no decomposition exists.  Raises BlockSearchBudgetError if
    the search tries more than ``node_budget`` placements; only then is the
    question left open.
    """
    n = q.n
    if max_multiplicity(q) >= 3:
        # a vertex pair is covered by at most two common blocks, each
        # contributing one arrow, so multiplicities above 2 are impossible
        return None
    R = [list(row) for row in q.b]
    cap = [2] * n
    placements: list[Placement] = []
    nodes = 0
    dead: set[tuple] = set()  # (R, cap) states proven uncompletable

    def aut_min(k: BlockKind, emb: tuple[int, ...]) -> bool:
        return emb == min(tuple(emb[s] for s in a) for a in k.automorphisms)

    def slot_ok(slot: int, k: BlockKind, v: int) -> bool:
        if slot in k.open_slots:
            return cap[v] >= 1
        return cap[v] == 2

    def fill_free(k: BlockKind, emb: list, fixed: frozenset, out: list) -> None:
        def go(slot: int):
            if slot == k.size:
                e = tuple(emb)
                if aut_min(k, e):
                    out.append((k.name, e))
                return
            if slot in fixed:
                go(slot + 1)
                return
            for v in range(n):
                if v in emb:
                    continue
                if not slot_ok(slot, k, v):
                    continue
                emb[slot] = v
                go(slot + 1)
                emb[slot] = -1

        go(0)

    def pair_candidates(x: int, y: int) -> list:
        # every completion must still place a block covering both x and y
        out: list = []
        for name in KIND_ORDER:
            k = KINDS[name]
            for sx in range(k.size):
                if not slot_ok(sx, k, x):
                    continue
                for sy in range(k.size):
                    if sy == sx or not slot_ok(sy, k, y):
                        continue
                    emb = [-1] * k.size
                    emb[sx] = x
                    emb[sy] = y
                    fill_free(k, emb, frozenset((sx, sy)), out)
        return out

    def vertex_candidates(pivot: int) -> list:
        out: list = []
        for name in KIND_ORDER:
            k = KINDS[name]
            for pslot in range(k.size):
                if not slot_ok(pslot, k, pivot):
                    continue
                emb = [-1] * k.size
                emb[pslot] = pivot
                fill_free(k, emb, frozenset((pslot,)), out)
        return out

    def place(name: str, emb: tuple[int, ...]):
        k = KINDS[name]
        saved = [cap[v] for v in emb]
        for slot, v in enumerate(emb):
            cap[v] = cap[v] - 1 if slot in k.open_slots else 0
        for src, dst in k.arrows:
            u, v = emb[src], emb[dst]
            R[v][u] -= 1
            R[u][v] += 1
        # local viability: only pairs touching the block changed
        ok = True
        for u in emb:
            cu = cap[u]
            row = R[u]
            for v in range(n):
                if row[v] and abs(row[v]) > (cu if cu < cap[v] else cap[v]):
                    ok = False
                    break
            if not ok:
                break
        return saved, ok

    def unplace(name: str, emb: tuple[int, ...], saved) -> None:
        k = KINDS[name]
        for slot, v in enumerate(emb):
            cap[v] = saved[slot]
        for src, dst in k.arrows:
            u, v = emb[src], emb[dst]
            R[v][u] += 1
            R[u][v] -= 1

    def pick_branch():
        # most constrained unresolved pair first: least remaining slack,
        # then largest residual
        best = None
        best_key = None
        for x in range(n):
            row = R[x]
            for y in range(x + 1, n):
                r = row[y]
                if r:
                    slack = cap[x] if cap[x] < cap[y] else cap[y]
                    key = (slack, -abs(r))
                    if best is None or key < best_key:
                        best, best_key = (x, y), key
        if best is not None:
            return ("pair", best)
        # a zero residual row at an uncovered vertex means the vertex was
        # isolated in the input; it still needs covering, via cancellation
        for v in range(n):
            if cap[v] == 2:
                return ("vertex", (v,))
        return None

    def rec():
        nonlocal nodes
        branch = pick_branch()
        if branch is None:
            # every vertex covered and no residual remains
            return tuple(placements)
        state = (tuple(tuple(r) for r in R), tuple(cap))
        if state in dead:
            return None
        kind, args = branch
        cands = pair_candidates(*args) if kind == "pair" else vertex_candidates(*args)
        for name, emb in cands:
            nodes += 1
            if nodes > node_budget:
                raise BlockSearchBudgetError(
                    f"block search budget exhausted after {node_budget} placements"
                )
            saved, ok = place(name, emb)
            if ok:
                placements.append(Placement(name, emb))
                found = rec()
                placements.pop()
                if found is not None:
                    unplace(name, emb, saved)
                    return found
            unplace(name, emb, saved)
        if len(dead) < 1_000_000:
            dead.add(state)
        return None

    return rec()


def is_block_decomposable(q: Quiver, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    return decompose(q, node_budget=node_budget) is not None
