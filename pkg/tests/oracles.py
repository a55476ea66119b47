"""Independent brute-force oracles used to pin expected values.

Everything here is deliberately written from scratch: its own mutation
rule, its own permutation machinery, no imports from the package under
test. Slow on purpose; only run at small sizes.
"""

from itertools import permutations


def brute_mutate(b, k):
    """Matrix mutation at k, written directly from the max(0, .) formula."""
    n = len(b)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -b[i][j]
            else:
                out[i][j] = (
                    b[i][j]
                    + max(0, b[i][k]) * max(0, b[k][j])
                    - max(0, -b[i][k]) * max(0, -b[k][j])
                )
    return out


def brute_permute(b, perm):
    """Relabel vertices: vertex i of the input becomes perm[i] of the output."""
    n = len(b)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = b[i][j]
    return out


def brute_min_matrix(b):
    """Lexicographically least flattened matrix over all n! relabelings."""
    n = len(b)
    best = None
    for perm in permutations(range(n)):
        flat = tuple(b[perm.index(i)][perm.index(j)] for i in range(n) for j in range(n))
        if best is None or flat < best:
            best = flat
    return [list(best[i * n:(i + 1) * n]) for i in range(n)]


def _orbit(b):
    """All n! relabeled copies of b, as flattened tuples."""
    n = len(b)
    seen = set()
    for perm in permutations(range(n)):
        m = brute_permute(b, perm)
        seen.add(tuple(v for row in m for v in row))
    return seen


def brute_class_size(b, max_classes=100_000):
    """Number of isomorphism classes reachable from b by mutation.

    Raw-matrix breadth-first search; a matrix is new when it lies in no
    previously seen relabeling orbit. Only call this on inputs known to
    be mutation finite.
    """
    n = len(b)
    start = [list(row) for row in b]
    seen = _orbit(start)
    queue = [start]
    count = 1
    while queue:
        cur = queue.pop()
        for k in range(n):
            nxt = brute_mutate(cur, k)
            key = tuple(v for row in nxt for v in row)
            if key in seen:
                continue
            count += 1
            if count > max_classes:
                raise RuntimeError("class larger than max_classes")
            seen |= _orbit(nxt)
            queue.append(nxt)
    return count
