"""Named quiver constructors.

Every entry documents its vertex numbering.  Figure-derived entries number
vertices reading the drawn diagram top-to-bottom, then left-to-right within
a row, so the same vertex keeps its index across related entries (X7
restricted to vertices 0..5 is exactly X6).
"""

from __future__ import annotations

from .quiver import Quiver, ValidationError

__all__ = ["make", "entries", "labels", "exceptional_nine", "EXCEPTIONAL_NINE"]


def _from_arrows(n: int, arrows) -> Quiver:
    rows = [[0] * n for _ in range(n)]
    for src, dst, mult in arrows:
        rows[dst][src] += mult
        rows[src][dst] -= mult
    return Quiver(rows)


def _need(params, count, usage):
    if len(params) != count:
        raise ValidationError(f"expected {usage}")
    for p in params:
        if not isinstance(p, int) or isinstance(p, bool):
            raise ValidationError(f"expected {usage}")
    return params


def _a(n: int) -> Quiver:
    if n < 1:
        raise ValidationError("A requires n >= 1")
    return _from_arrows(n, [(i, i + 1, 1) for i in range(n - 1)])


def _d(n: int) -> Quiver:
    if n < 4:
        raise ValidationError("D requires n >= 4")
    arrows = [(0, 2, 1), (1, 2, 1)] + [(i, i + 1, 1) for i in range(2, n - 1)]
    return _from_arrows(n, arrows)


def _e(n: int) -> Quiver:
    # vertex 0 above the chain, attached to the chain's third vertex;
    # chain 1..n-1 oriented inward: 1 -> 2 -> 3 <- 4 <- ... <- n-1
    arrows = [(0, 3, 1), (1, 2, 1), (2, 3, 1)]
    arrows += [(i + 1, i, 1) for i in range(3, n - 1)]
    return _from_arrows(n, arrows)


def _d_hat(n: int) -> Quiver:
    # n+1 vertices: fork, path, fork.  0 and 1 feed path start 2; the path
    # runs 2 -> 3 -> ... -> n-2; its end feeds both n-1 and n.
    if n < 4:
        raise ValidationError("D_hat requires n >= 4")
    arrows = [(0, 2, 1), (1, 2, 1)]
    arrows += [(i, i + 1, 1) for i in range(2, n - 2)]
    arrows += [(n - 2, n - 1, 1), (n - 2, n, 1)]
    return _from_arrows(n + 1, arrows)


def _e6_hat() -> Quiver:
    # 0 -> 1 is the two-vertex tail above the center (4) of the path 2..6
    return _from_arrows(
        7, [(0, 1, 1), (1, 4, 1), (2, 3, 1), (3, 4, 1), (5, 4, 1), (6, 5, 1)]
    )


def _e7_hat() -> Quiver:
    # 0 above the center (4) of the path 1..7
    return _from_arrows(
        8,
        [(0, 4, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (5, 4, 1), (6, 5, 1), (7, 6, 1)],
    )


def _e8_hat() -> Quiver:
    # 0 above vertex 3 of the path 1..8; long side on the right
    return _from_arrows(
        9,
        [
            (0, 3, 1),
            (1, 2, 1),
            (2, 3, 1),
            (4, 3, 1),
            (5, 4, 1),
            (6, 5, 1),
            (7, 6, 1),
            (8, 7, 1),
        ],
    )


def _e6_11() -> Quiver:
    # 0 = top hub, 7 = bottom hub with a double arrow 7 => 0; vertices 2, 3, 5
    # close oriented triangles through both hubs and each carries one pendant
    return _from_arrows(
        8,
        [
            (0, 2, 1),
            (0, 3, 1),
            (0, 5, 1),
            (1, 2, 1),
            (2, 7, 1),
            (3, 7, 1),
            (4, 3, 1),
            (5, 7, 1),
            (6, 5, 1),
            (7, 0, 2),
        ],
    )


def _e7_11() -> Quiver:
    # hubs 0 (top) and 8 (bottom, double arrow 8 => 0); triangle vertices
    # 3, 4, 5; pendant arms 1 -> 2 -> 3 and 5 <- 6 <- 7
    return _from_arrows(
        9,
        [
            (0, 3, 1),
            (0, 4, 1),
            (0, 5, 1),
            (1, 2, 1),
            (2, 3, 1),
            (3, 8, 1),
            (4, 8, 1),
            (5, 8, 1),
            (6, 5, 1),
            (7, 6, 1),
            (8, 0, 2),
        ],
    )


def _e8_11() -> Quiver:
    # hubs 0 (top) and 9 (bottom, double arrow 9 => 0); triangle vertices
    # 2, 3, 4; arms 1 -> 2 and 4 <- 5 <- 6 <- 7 <- 8
    return _from_arrows(
        10,
        [
            (0, 2, 1),
            (0, 3, 1),
            (0, 4, 1),
            (1, 2, 1),
            (2, 9, 1),
            (3, 9, 1),
            (4, 9, 1),
            (5, 4, 1),
            (6, 5, 1),
            (7, 6, 1),
            (8, 7, 1),
            (9, 0, 2),
        ],
    )


def _a_pq(p: int, q: int) -> Quiver:
    # (p+q)-gon: vertices in circular order; the first p boundary edges run
    # forward (i -> i+1), the remaining q run backward
    if not (p >= q >= 1):
        raise ValidationError("A_pq requires p >= q >= 1")
    m = p + q
    arrows = []
    for k in range(m):
        a, b = k, (k + 1) % m
        arrows.append((a, b, 1) if k < p else (b, a, 1))
    return _from_arrows(m, arrows)


def _a_cycle_uniform(n: int) -> Quiver:
    if n < 3:
        raise ValidationError("A_cycle_uniform requires n >= 3")
    return _from_arrows(n, [(i, (i + 1) % n, 1) for i in range(n)])


def _theta(m: int) -> Quiver:
    if m < 1:
        raise ValidationError("Theta requires m >= 1")
    return _from_arrows(2, [(0, 1, m)])


_X6_ARROWS = [
    (2, 0, 2),  # cap1 => base1
    (0, 3, 1),  # base1 -> hub
    (3, 2, 1),  # hub -> cap1
    (3, 1, 1),  # hub -> cap2
    (1, 4, 2),  # cap2 => base2
    (4, 3, 1),  # base2 -> hub
    (5, 3, 1),  # tail -> hub
]

_X7_ARROWS = [
    (2, 0, 2),
    (0, 3, 1),
    (3, 2, 1),
    (3, 1, 1),
    (1, 4, 2),
    (4, 3, 1),
    (5, 3, 1),  # base3 -> hub
    (3, 6, 1),  # hub -> cap3
    (6, 5, 2),  # cap3 => base3
]


def _x6() -> Quiver:
    return _from_arrows(6, _X6_ARROWS)


def _x7() -> Quiver:
    return _from_arrows(7, _X7_ARROWS)


def _z3() -> Quiver:
    return _from_arrows(3, [(0, 1, 2), (1, 2, 2), (2, 0, 2)])


def _a3_cycle() -> Quiver:
    return _from_arrows(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])


def _a2_hat() -> Quiver:
    return _a_pq(2, 1)


_REGISTRY: dict[str, tuple] = {
    # name: (param count, param usage, description, builder)
    "A": (1, "n>=1", "oriented path 0 -> 1 -> ... -> n-1", _a),
    "D": (1, "n>=4", "path 1..n-1 with vertex 0 also feeding vertex 2", _d),
    "E6": (0, "", "6 vertices: chain 1..5 oriented inward, 0 above vertex 3", lambda: _e(6)),
    "E7": (0, "", "7 vertices: chain 1..6 oriented inward, 0 above vertex 3", lambda: _e(7)),
    "E8": (0, "", "8 vertices: chain 1..7 oriented inward, 0 above vertex 3", lambda: _e(8)),
    "D_hat": (1, "n>=4", "n+1 vertices: 0,1 feed path 2..n-2 which feeds n-1,n", _d_hat),
    "E6_hat": (0, "", "7 vertices: two-vertex tail 0 -> 1 over the center of path 2..6", _e6_hat),
    "E7_hat": (0, "", "8 vertices: 0 over the center of path 1..7", _e7_hat),
    "E8_hat": (0, "", "9 vertices: 0 over vertex 3 of path 1..8", _e8_hat),
    "E6_11": (0, "", "8 vertices: double-arrow hub pair plus three triangles, arms 1/1/1", _e6_11),
    "E7_11": (0, "", "9 vertices: double-arrow hub pair plus three triangles, arms 2/0/2", _e7_11),
    "E8_11": (0, "", "10 vertices: double-arrow hub pair plus three triangles, arms 1/0/4", _e8_11),
    "A_pq": (2, "p>=q>=1", "(p+q)-gon with p forward and q backward edges", _a_pq),
    "A_cycle_uniform": (1, "n>=3", "n-gon with every edge oriented the same way", _a_cycle_uniform),
    "Theta": (1, "m>=1", "two vertices joined by m parallel arrows 0 -> 1", _theta),
    "X6": (0, "", "6 vertices: two doubled triangles through a hub, plus a tail", _x6),
    "X7": (0, "", "7 vertices: three doubled triangles through a hub", _x7),
    "Z3": (0, "", "oriented triangle, every edge doubled", _z3),
    "A3_cycle": (0, "", "oriented triangle, single arrows", _a3_cycle),
    "A2_hat": (0, "", "acyclic triangle 0 -> 1 -> 2 with 0 -> 2", _a2_hat),
}

_LABELS = {
    # X6/X7: each wing is a directed triangle hub -> cap => base -> hub with
    # the cap-to-base edge doubled; the tail is a single arrow into the hub.
    "X6": {"base1": 0, "cap2": 1, "cap1": 2, "hub": 3, "base2": 4, "tail": 5},
    "X7": {"base1": 0, "cap2": 1, "cap1": 2, "hub": 3, "base2": 4, "base3": 5, "cap3": 6},
}

EXCEPTIONAL_NINE = (
    "E6",
    "E7",
    "E8",
    "E6_hat",
    "E7_hat",
    "E8_hat",
    "E6_11",
    "E7_11",
    "E8_11",
)


def make(name: str, *params: int) -> Quiver:
    """Build a catalog quiver, e.g. ``make("A", 5)`` or ``make("X6")``."""
    if name not in _REGISTRY:
        raise ValidationError(f"unknown catalog entry: {name!r}")
    want, usage, _, builder = _REGISTRY[name]
    _need(params, want, f"{name}({usage})")
    return builder(*params)


def entries() -> list[tuple[str, int, str, str]]:
    """(name, parameter count, parameter usage, description) per entry."""
    return [
        (name, nparams, usage, desc)
        for name, (nparams, usage, desc, _b) in _REGISTRY.items()
    ]


def labels(name: str) -> dict[str, int]:
    """Documented vertex names, empty for entries that have none."""
    if name not in _REGISTRY:
        raise ValidationError(f"unknown catalog entry {name!r}")
    return dict(_LABELS.get(name, {}))


def exceptional_nine() -> dict[str, Quiver]:
    """The nine exceptional mutation-finite quivers beyond rank 2, keyed by
    name, in order E6, E7, E8, their hats, then the double-arrow-hub family."""
    return {name: make(name) for name in EXCEPTIONAL_NINE}
