"""Difference-function axioms and the action equivalence, checked exhaustively."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinkit.errors import TorsorError
from spinkit.torsor import (
    ActionTable,
    DifferenceTable,
    FiniteAbelianGroup,
    abelian_groups_up_to,
    action_from_difference,
    difference_from_action,
    regular_difference_table,
    verify_difference_axioms,
)


def test_singleton_trivial_torsor():
    trivial = FiniteAbelianGroup(())
    d = DifferenceTable(trivial, ("a",), {("a", "a"): ()})
    assert verify_difference_axioms(d).passed
    action = action_from_difference(d)
    assert action.act((), "a") == "a"
    assert difference_from_action(action).table == d.table


def test_two_point_torsor():
    z2 = FiniteAbelianGroup((2,))
    d = DifferenceTable(
        z2,
        ("a", "b"),
        {("a", "a"): (0,), ("b", "b"): (0,), ("a", "b"): (1,), ("b", "a"): (1,)},
    )
    assert verify_difference_axioms(d).passed
    action = action_from_difference(d)
    assert action.act((1,), "a") == "b"
    assert action.act((1,), "b") == "a"
    assert action.act((0,), "a") == "a"


def test_degenerate_difference_fails_separation():
    z2 = FiniteAbelianGroup((2,))
    d = DifferenceTable(z2, ("a", "b"), {(x, y): (0,) for x in "ab" for y in "ab"})
    report = verify_difference_axioms(d)
    assert not report.passed
    assert any("separation" in f for f in report.failures)
    with pytest.raises(TorsorError):
        action_from_difference(d)


def test_wrong_carrier_size_fails():
    z4 = FiniteAbelianGroup((4,))
    d = DifferenceTable(
        z4,
        ("a", "b"),
        {("a", "a"): (0,), ("b", "b"): (0,), ("a", "b"): (1,), ("b", "a"): (3,)},
    )
    assert not verify_difference_axioms(d).passed


def test_regular_difference_of_cyclic_four():
    z4 = FiniteAbelianGroup((4,))
    d = regular_difference_table(z4)
    # D(x, y) = y - x on the group itself
    assert d.difference("g0", "g3") == (3,)
    assert d.difference("g3", "g0") == (1,)
    assert verify_difference_axioms(d).passed


def test_invalid_action_rejected():
    z2 = FiniteAbelianGroup((2,))
    constant = ActionTable(
        z2, ("a", "b"), {((0,), "a"): "a", ((0,), "b"): "b", ((1,), "a"): "a", ((1,), "b"): "b"}
    )
    with pytest.raises(TorsorError):
        difference_from_action(constant)


def test_classification_count_up_to_16():
    groups = abelian_groups_up_to(16)
    assert len(groups) == 25  # sum over n <= 16 of the number of abelian groups of order n
    orders = sorted(g.order() for g in groups)
    assert orders[0] == 1 and orders[-1] == 16
    assert sum(1 for g in groups if g.order() == 16) == 5


def test_exhaustive_roundtrips_up_to_16():
    for group in abelian_groups_up_to(16):
        table = regular_difference_table(group)
        report = verify_difference_axioms(table)
        assert report.passed, (str(group), str(report))
        action = action_from_difference(table)
        back = difference_from_action(action)
        assert back.table == table.table
        assert action_from_difference(back).table == action.table


def test_antisymmetry_follows_from_axioms():
    for group in abelian_groups_up_to(12):
        d = regular_difference_table(group)
        for x in d.carrier:
            for y in d.carrier:
                assert d.difference(x, y) == group.neg(d.difference(y, x))


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=6), min_size=0, max_size=3),
    st.integers(min_value=0, max_value=10**6),
)
def test_group_arithmetic_laws(orders, seed):
    g = FiniteAbelianGroup(tuple(orders))
    elements = g.elements()
    a = elements[seed % len(elements)]
    b = elements[(seed // 7) % len(elements)]
    assert g.add(a, g.zero) == a
    assert g.add(a, g.neg(a)) == g.zero
    assert g.add(a, b) == g.add(b, a)
    assert g.sub(a, b) == g.add(a, g.neg(b))
