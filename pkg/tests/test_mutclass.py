import pytest

from quivermut import (
    BudgetExceededError,
    Quiver,
    ValidationError,
    apply_sequence,
    attach_vertex,
    canonical_matrix,
    check_obstructive,
    class_to_json_dict,
    contains_subquiver_isomorphic_to,
    decide_mutation_finite,
    enumerate_class,
    extension_vectors,
    find_subquiver_isomorphic_to,
    is_mutation_finite,
    make,
    mutate,
    one_vertex_extensions,
)


def test_enumerate_class_three_path():
    cls = enumerate_class(make("A", 3))
    assert cls.finite
    assert cls.size == 4
    # representatives are canonical and sorted
    assert list(cls.representatives) == sorted(cls.representatives)
    assert all(canonical_matrix(m) == m for m in cls.representatives)


def test_enumerate_class_small_known_sizes():
    assert enumerate_class(make("Theta", 4)).size == 1
    assert enumerate_class(make("Z3")).size == 1
    assert enumerate_class(make("A2_hat")).size == 2
    assert enumerate_class(make("X7")).size == 2


def test_two_vertex_quivers_are_always_finite():
    for m in range(0, 9):
        assert is_mutation_finite(Quiver([[0, m], [-m, 0]]))


def test_infinite_class_yields_replayable_witness():
    # acyclic triangle with a double arrow is not among the finite triples
    q = Quiver([[0, 2, 1], [-2, 0, 1], [-1, -1, 0]])
    verdict = decide_mutation_finite(q)
    assert not verdict.finite
    assert verdict.witness is not None
    assert check_obstructive(q, verdict.witness)


def test_disconnected_quiver_finite_iff_each_component_is():
    # triple arrow in a 2-vertex component does not certify anything
    kronecker_heavy = Quiver(
        [[0, 5, 0], [-5, 0, 0], [0, 0, 0]]
    )
    assert is_mutation_finite(kronecker_heavy)
    bad_component = Quiver(
        [
            [0, 2, 1, 0],
            [-2, 0, 1, 0],
            [-1, -1, 0, 0],
            [0, 0, 0, 0],
        ]
    )
    assert not is_mutation_finite(bad_component)


def test_budget_exhaustion_raises():
    with pytest.raises(BudgetExceededError):
        enumerate_class(make("E8"), budget=10)


def test_apply_sequence_matches_stepwise_mutation():
    q = make("X6")
    seq = (0, 3, 5, 3, 1)
    step = q
    for k in seq:
        step = mutate(step, k)
    assert apply_sequence(q, seq) == step
    assert apply_sequence(q, ()) == q
    with pytest.raises(ValidationError):
        apply_sequence(q, (0, 6))


def test_check_obstructive():
    q = make("A", 3)
    assert not check_obstructive(q, ())
    heavy = Quiver([[0, -3], [3, 0]])
    assert check_obstructive(heavy, ())


def test_extension_vectors_count_and_range():
    vecs = list(extension_vectors(3))
    assert len(vecs) == 5**3 - 1
    assert all(any(v) for v in vecs)
    assert all(all(-2 <= x <= 2 for x in v) for v in vecs)


def test_attach_vertex_orientation():
    base = Quiver([[0]])
    # positive entry: arrows run from the old vertex into the new one
    ext = attach_vertex(base, (2,))
    assert ext.b == ((0, -2), (2, 0))


def test_one_vertex_extensions_iterates_all_vectors():
    base = make("A", 2)
    exts = list(one_vertex_extensions(base))
    assert len(exts) == 24
    assert all(e.n == 3 for e in exts)
    for vec, ext in zip(extension_vectors(2), exts):
        assert attach_vertex(base, vec) == ext


def test_subquiver_search():
    x7 = make("X7")
    x6 = make("X6")
    hit = find_subquiver_isomorphic_to(x7, x6)
    assert hit is not None
    from quivermut import full_subquiver, are_isomorphic

    assert are_isomorphic(full_subquiver(x7, hit), x6)
    assert contains_subquiver_isomorphic_to(x7, make("A", 3))
    assert not contains_subquiver_isomorphic_to(x6, make("Theta", 3))


def test_class_to_json_dict_shapes():
    fin = class_to_json_dict(enumerate_class(make("A", 2)))
    assert fin["status"] == "finite"
    assert fin["size"] == 1
    inf = class_to_json_dict(
        enumerate_class(Quiver([[0, 2, 1], [-2, 0, 1], [-1, -1, 0]]))
    )
    assert inf["status"] == "infinite"
    assert "witness" in inf
