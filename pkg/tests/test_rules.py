import numpy as np
import pytest

from conecut import (RuleChoice, cone_view, deepest_cutter, highest_cutter, initial_tableau,
                     klee_minty, new_problem, select_cutter, steepest_cutter)
from conecut.exceptions import EmptyFeasibleRegion, NotACutter
from conecut.rules import leaving_row, lowest_heights

from cases import ex21


def view_of(problem):
    return cone_view(initial_tableau(problem))


def test_leaving_rows():
    assert leaving_row(view_of(ex21()), 0) == 0
    assert leaving_row(view_of(klee_minty(3)), 2) == 2


def test_leaving_row_needs_cutter():
    with pytest.raises(NotACutter):
        leaving_row(view_of(ex21()), 2)


def test_leaving_row_none_when_unblocked():
    assert leaving_row(view_of(new_problem([[-1.0]], [1], [1])), 0) is None


def test_deepest():
    assert deepest_cutter(view_of(klee_minty(3))).j_star == 0
    assert deepest_cutter(view_of(ex21())).j_star == 0


def test_deepest_empty_region():
    with pytest.raises(EmptyFeasibleRegion):
        deepest_cutter(view_of(new_problem([[-1.0]], [1], [1])))


def test_highest_klee_minty():
    view = view_of(klee_minty(3))
    assert lowest_heights(view) == {0: 100.0, 1: 1000.0, 2: 10000.0}
    d = highest_cutter(view)
    assert (d.j_star, d.i_star, d.h_j) == (2, 2, 10000.0)


def test_steepest():
    d = steepest_cutter(view_of(klee_minty(3)))
    assert (d.j_star, d.i_star) == (2, 2)
    assert steepest_cutter(view_of(ex21())).j_star == 1


def test_no_cutter_returns_none():
    view = view_of(new_problem([[1.0]], [1], [-1]))
    for rule in RuleChoice:
        assert select_cutter(view, rule) is None


def test_candidates_restrict_choice():
    d = select_cutter(view_of(klee_minty(3)), "highest", candidates=[0, 1])
    assert d.j_star == 1


def test_ties_take_smallest_index():
    view = view_of(new_problem([[1, 1]], [1], [1, 1]))
    for rule in RuleChoice:
        assert select_cutter(view, rule).j_star == 0


def test_rule_parse():
    assert RuleChoice.parse("Highest") is RuleChoice.HIGHEST
    with pytest.raises(ValueError):
        RuleChoice.parse("dantzig")
