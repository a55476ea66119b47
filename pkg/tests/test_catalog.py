import pytest

from quivermut import (
    EXCEPTIONAL_NINE,
    ValidationError,
    entries,
    exceptional_nine,
    is_connected,
    labels,
    make,
)


def test_entries_lists_every_registered_name():
    rows = entries()
    names = [r[0] for r in rows]
    assert len(names) == len(set(names))
    for name, nparams, usage, desc in rows:
        assert isinstance(nparams, int) and nparams >= 0
        assert isinstance(usage, str) and isinstance(desc, str)
    for name in ("A", "D", "X6", "X7", "Theta", "A_pq"):
        assert name in names


def test_make_checks_parameter_counts():
    with pytest.raises(ValidationError):
        make("A")
    with pytest.raises(ValidationError):
        make("X6", 3)
    with pytest.raises(ValidationError):
        make("no_such_family")
    with pytest.raises(ValidationError):
        make("D", 3)
    with pytest.raises(ValidationError):
        make("A_pq", 1, 2)


def test_small_fixed_quivers():
    assert make("Theta", 3).b == ((0, -3), (3, 0))
    assert make("A", 2).b == ((0, -1), (1, 0))
    assert make("Z3").b == ((0, -2, 2), (2, 0, -2), (-2, 2, 0))
    # oriented triangle, two arrows counterclockwise and one clockwise
    assert make("A_pq", 2, 1).b == ((0, -1, 1), (1, 0, -1), (-1, 1, 0))


def test_path_family_shape():
    q = make("A", 5)
    assert q.n == 5
    for i in range(4):
        assert abs(q.b[i][i + 1]) == 1
    assert all(q.b[i][j] == 0 for i in range(5) for j in range(i + 2, 5))


def test_branching_families_are_trees_with_right_degree():
    for name, n, want_forks in (("D", 6, 1), ("D_hat", 6, 2)):
        q = make(name, n)
        deg = [sum(1 for v in row if v) for row in q.b]
        assert deg.count(3) == want_forks
        arrows = sum(1 for i in range(q.n) for j in range(q.n) if q.b[i][j] > 0)
        assert arrows == q.n - 1  # tree


def test_exceptional_nine_inventory():
    quivers = exceptional_nine()
    assert tuple(quivers) == EXCEPTIONAL_NINE
    assert len(quivers) == 9
    assert [q.n for q in quivers.values()] == [6, 7, 8, 7, 8, 9, 8, 9, 10]
    assert all(is_connected(q) for q in quivers.values())


def test_every_catalog_member_is_connected():
    cases = [("A", (4,)), ("D", (5,)), ("D_hat", (5,)), ("A_pq", (3, 2)),
             ("A_cycle_uniform", (5,)), ("Theta", (2,)), ("X6", ()), ("X7", ())]
    for name, params in cases:
        assert is_connected(make(name, *params))


def test_labels_contract():
    x6 = labels("X6")
    assert set(x6) == {"base1", "base2", "cap1", "cap2", "hub", "tail"}
    assert sorted(x6.values()) == list(range(6))
    x7 = labels("X7")
    assert set(x7) == (set(x6) - {"tail"}) | {"base3", "cap3"}
    assert sorted(x7.values()) == list(range(7))
    assert labels("A") == {}
    with pytest.raises(ValidationError):
        labels("no_such_family")


def test_x7_restricts_to_x6():
    from quivermut import are_isomorphic, full_subquiver

    x7 = make("X7")
    assert are_isomorphic(full_subquiver(x7, range(6)), make("X6"))
