"""Hypothesis property checks.

The acceptance module runs the bulk randomized suites (1000 seeded cases
per property); these are the shrinking-friendly variants that make a
counterexample readable if a regression slips in.
"""

import hypothesis.strategies as st
from hypothesis import given, settings

from quivermut import (
    Quiver,
    apply_permutation,
    canonical_matrix,
    full_subquiver,
    initial_seed,
    mutate,
    mutate_seed,
)

from oracles import brute_min_matrix, brute_mutate


@st.composite
def skew_matrices(draw, max_n=6, max_entry=2):
    n = draw(st.integers(1, max_n))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = draw(st.integers(-max_entry, max_entry))
            rows[i][j] = v
            rows[j][i] = -v
    return tuple(tuple(r) for r in rows)


@st.composite
def quiver_and_vertex(draw, max_n=6):
    b = draw(skew_matrices(max_n=max_n))
    k = draw(st.integers(0, len(b) - 1))
    return Quiver(b), k


@st.composite
def quiver_vertex_perm(draw, max_n=6):
    q, k = draw(quiver_and_vertex(max_n=max_n))
    perm = tuple(draw(st.permutations(range(q.n))))
    return q, k, perm


@given(quiver_and_vertex())
@settings(max_examples=300, deadline=None)
def test_mutation_is_an_involution(qk):
    q, k = qk
    assert mutate(mutate(q, k), k) == q


@given(quiver_and_vertex())
@settings(max_examples=300, deadline=None)
def test_mutation_preserves_skew_symmetry(qk):
    q, k = qk
    out = mutate(q, k)
    assert all(out.b[i][j] == -out.b[j][i] for i in range(q.n) for j in range(q.n))


@given(quiver_and_vertex())
@settings(max_examples=200, deadline=None)
def test_mutation_agrees_with_independent_formula(qk):
    q, k = qk
    assert mutate(q, k).b == tuple(
        tuple(r) for r in brute_mutate([list(r) for r in q.b], k)
    )


@given(quiver_vertex_perm())
@settings(max_examples=300, deadline=None)
def test_mutation_commutes_with_relabeling(qkp):
    q, k, perm = qkp
    relabeled = Quiver(apply_permutation(q.b, perm))
    assert mutate(relabeled, perm[k]).b == apply_permutation(mutate(q, k).b, perm)


@given(quiver_vertex_perm())
@settings(max_examples=300, deadline=None)
def test_canonical_form_ignores_labels(qkp):
    q, _, perm = qkp
    assert canonical_matrix(apply_permutation(q.b, perm)) == canonical_matrix(q.b)


@given(skew_matrices(max_n=5))
@settings(max_examples=200, deadline=None)
def test_canonical_form_agrees_with_brute_minimum(b):
    assert canonical_matrix(b) == tuple(
        tuple(r) for r in brute_min_matrix([list(r) for r in b])
    )


@given(quiver_and_vertex(), st.data())
@settings(max_examples=200, deadline=None)
def test_mutation_commutes_with_taking_subquivers(qk, data):
    q, k = qk
    keep = data.draw(
        st.sets(st.integers(0, q.n - 1), min_size=1).map(sorted)
    )
    if k not in keep:
        keep = sorted(set(keep) | {k})
    inside = keep.index(k)
    assert full_subquiver(mutate(q, k), keep) == mutate(full_subquiver(q, keep), inside)


@given(skew_matrices(max_n=3, max_entry=1), st.lists(st.integers(0, 2), max_size=6))
@settings(max_examples=150, deadline=None)
def test_seed_mutation_keeps_matrix_in_step(b, seq):
    q = Quiver(b)
    s = initial_seed(q)
    step = q
    for k in seq:
        k = k % q.n
        s = mutate_seed(s, k)
        step = mutate(step, k)
    assert s.quiver == step
