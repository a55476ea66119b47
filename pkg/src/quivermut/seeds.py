"""Seed mutation with exact integer Laurent polynomial arithmetic.

A seed pairs a cluster (a tuple of Laurent polynomials in the initial
variables) with a quiver.  Mutating a seed at position k replaces the k-th
cluster entry by (M+ + M-) / x_k, where M+ and M- are the monomials built
from the positive and negative parts of column k of the exchange matrix,
and mutates the quiver.  The division is performed exactly over the integer
Laurent ring; if it does not come out exact the arithmetic (or the caller's
input) is broken, and LaurentViolationError is raised rather than rounding.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations

from .quiver import Quiver, QuiverError, mutate

__all__ = [
    "LaurentPoly",
    "LaurentViolationError",
    "SeedCapExceeded",
    "Seed",
    "initial_seed",
    "mutate_seed",
    "apply_seed_sequence",
    "seeds_equal_up_to_relabeling",
    "enumerate_seeds",
    "DEFAULT_SEED_CAP",
]

DEFAULT_SEED_CAP = 10_000


class LaurentViolationError(QuiverError):
    """An exact division over the Laurent ring failed."""


class SeedCapExceeded(QuiverError):
    """Seed enumeration hit its cap before closing."""


def _canon_terms(d: dict[tuple[int, ...], int]) -> tuple:
    return tuple(sorted((e, c) for e, c in d.items() if c))


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial; terms are (exponent vector, coefficient),
    sorted, with no zero coefficients, so equality is structural."""

    nvars: int
    terms: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def from_dict(cls, nvars: int, d: dict) -> "LaurentPoly":
        return cls(nvars, _canon_terms(d))

    @classmethod
    def constant(cls, c: int, nvars: int) -> "LaurentPoly":
        if c == 0:
            return cls(nvars, ())
        return cls(nvars, (((0,) * nvars, c),))

    @classmethod
    def variable(cls, i: int, nvars: int) -> "LaurentPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, ((tuple(e), 1),))

    def _check(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        d = dict(self.terms)
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return LaurentPoly.from_dict(self.nvars, d)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        d: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly.from_dict(self.nvars, d)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        out = LaurentPoly.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _shifted_nonneg(self):
        """(shift vector s, terms with exponents e - s >= 0, min 0 per var)."""
        mins = [min(e[i] for e, _ in self.terms) for i in range(self.nvars)]
        shifted = {
            tuple(a - b for a, b in zip(e, mins)): c for e, c in self.terms
        }
        return mins, shifted

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other, or LaurentViolationError."""
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return self
        sf, f = self._shifted_nonneg()
        sg, g = other._shifted_nonneg()
        lt_g = max(g)
        lc_g = g[lt_g]
        q: dict[tuple[int, ...], int] = {}
        while f:
            lt_f = max(f)
            lc_f = f[lt_f]
            diff = tuple(a - b for a, b in zip(lt_f, lt_g))
            if any(d < 0 for d in diff) or lc_f % lc_g != 0:
                raise LaurentViolationError(
                    "inexact Laurent division: remainder is nonzero"
                )
            c = lc_f // lc_g
            q[diff] = q.get(diff, 0) + c
            for e, ce in g.items():
                key = tuple(a + b for a, b in zip(diff, e))
                nv = f.get(key, 0) - c * ce
                if nv:
                    f[key] = nv
                else:
                    f.pop(key, None)
        shift = tuple(a - b for a, b in zip(sf, sg))
        return LaurentPoly.from_dict(
            self.nvars,
            {tuple(a + b for a, b in zip(e, shift)): c for e, c in q.items()},
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms, reverse=True):
            factors = []
            for i, p in enumerate(e):
                if p == 1:
                    factors.append(f"x{i + 1}")
                elif p:
                    factors.append(f"x{i + 1}^{p}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


@dataclass(frozen=True)
class Seed:
    cluster: tuple[LaurentPoly, ...]
    quiver: Quiver

    @property
    def n(self) -> int:
        return self.quiver.n


def initial_seed(q: Quiver) -> Seed:
    n = q.n
    return Seed(tuple(LaurentPoly.variable(i, n) for i in range(n)), q)


def mutate_seed(s: Seed, k: int) -> Seed:
    n = s.n
    if not 0 <= k < n:
        raise ValueError(f"position {k} out of range for seed of rank {n}")
    b = s.quiver.b
    pos = LaurentPoly.constant(1, n)
    neg = LaurentPoly.constant(1, n)
    for i in range(n):
        e = b[i][k]
        if e > 0:
            pos = pos * s.cluster[i] ** e
        elif e < 0:
            neg = neg * s.cluster[i] ** (-e)
    new_var = (pos + neg).exact_div(s.cluster[k])
    cluster = s.cluster[:k] + (new_var,) + s.cluster[k + 1 :]
    return Seed(cluster, mutate(s.quiver, k))


def apply_seed_sequence(s: Seed, ks) -> Seed:
    for k in ks:
        s = mutate_seed(s, k)
    return s


def seeds_equal_up_to_relabeling(a: Seed, b: Seed) -> bool:
    """True when some position permutation carries one seed to the other.

    The permutation acts on cluster positions and on both matrix axes at
    once; cluster entries are compared as polynomials in the fixed initial
    variables, which are never renamed.
    """
    n = a.n
    if n != b.n:
        return False
    ba, bb = a.quiver.b, b.quiver.b
    for sigma in permutations(range(n)):
        if all(b.cluster[sigma[i]] == a.cluster[i] for i in range(n)) and all(
            bb[sigma[i]][sigma[j]] == ba[i][j] for i in range(n) for j in range(n)
        ):
            return True
    return False


def _seed_key(s: Seed):
    n = s.n
    b = s.quiver.b
    best = None
    for sigma in permutations(range(n)):
        inv = [0] * n
        for i, v in enumerate(sigma):
            inv[v] = i
        mat = tuple(b[inv[i]][inv[j]] for i in range(n) for j in range(n))
        cl = tuple(s.cluster[inv[i]].terms for i in range(n))
        key = (mat, cl)
        if best is None or key < best:
            best = key
    return best


def enumerate_seeds(s: Seed, cap: int = DEFAULT_SEED_CAP) -> tuple[Seed, ...]:
    """All seeds reachable from ``s``, up to relabeling, in BFS order.

    Raises SeedCapExceeded once more than ``cap`` distinct seeds are found.
    """
    seen = {_seed_key(s)}
    reps = [s]
    queue = deque([s])
    while queue:
        cur = queue.popleft()
        for k in range(cur.n):
            child = mutate_seed(cur, k)
            key = _seed_key(child)
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > cap:
                raise SeedCapExceeded(f"seed cap exceeded: more than {cap} seeds")
            reps.append(child)
            queue.append(child)
    return tuple(reps)
