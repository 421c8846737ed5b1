import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conecut import SolverConfig, klee_minty, new_problem, parse_problem, render_problem, solve
from conecut.exceptions import NegativeTarget, ParseError
from conecut.io import dump_trace, load_trace, replay_trace, replayed_vertex, trace_document

from cases import ex21, ex51


def test_parse_example():
    assert parse_problem("2 2\n1 -1\n1 1\n1 2\n2 1") == ex21()


def test_comments_and_blank_lines():
    text = "# header\n2 2  # dims\n\n1 -1\n1 1\n1 2\n2 1 # c\n"
    assert parse_problem(text) == ex21()


def test_empty_input():
    with pytest.raises(ParseError) as info:
        parse_problem("")
    assert info.value.line == 1
    assert "expected dimensions" in str(info.value)


def test_short_matrix():
    with pytest.raises(ParseError) as info:
        parse_problem("2 2\n1 -1\n")
    assert "rows of A" in str(info.value)


@pytest.mark.parametrize("text,line", [
    ("2 x\n", 1),
    ("1 2\n1 2 3\n1\n1 1\n", 2),
    ("1 1\n1\n1\nfoo\n", 4),
    ("1 1\n1\n1\n1\n1\n", 5),
    ("1 1\n1\nnan\n1\n", 3),
])
def test_bad_lines(text, line):
    with pytest.raises(ParseError) as info:
        parse_problem(text)
    assert info.value.line == line


def test_validation_errors_pass_through():
    with pytest.raises(NegativeTarget):
        parse_problem("1 1\n1\n-1\n1\n")


def test_render_round_trip_examples():
    for p in (ex21(), ex51(), klee_minty(6)):
        assert parse_problem(render_problem(p)) == p


finite = st.floats(allow_nan=False, allow_infinity=False, min_value=-1e12, max_value=1e12)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_render_round_trip_is_bit_exact(m, n, data):
    a = np.array(data.draw(st.lists(finite, min_size=m * n, max_size=m * n))).reshape(m, n)
    b = np.abs(data.draw(st.lists(finite, min_size=m, max_size=m)))
    c = data.draw(st.lists(finite, min_size=n, max_size=n))
    p = new_problem(a, b, c)
    q = parse_problem(render_problem(p))
    assert q.a_matrix.tobytes() == p.a_matrix.tobytes()
    assert q.b_vec.tobytes() == p.b_vec.tobytes()
    assert q.c_vec.tobytes() == p.c_vec.tobytes()


def test_trace_document(tmp_path):
    p = klee_minty(3)
    cfg = SolverConfig(rule="deepest", enable_elimination=True)
    sol = solve(p, cfg)
    doc = trace_document(p, cfg, sol)
    path = tmp_path / "t.json"
    dump_trace(doc, path)
    again = load_trace(path)
    assert again["schema"] == "conecut-trace/1"
    assert again["problem"]["m"] == 3
    assert again["summary"]["pivots"] == 7
    assert again["events"][-1]["kind"] == "terminal"
    np.testing.assert_allclose(replayed_vertex(again), sol.dual_point, atol=1e-8)


def test_trace_replay_interval(tmp_path):
    p = ex51()
    cfg = SolverConfig()
    sol = solve(p, cfg)
    doc = json.loads(json.dumps(trace_document(p, cfg, sol)))
    tab = replay_trace(doc)
    assert -tab.objective_neg == pytest.approx(12)


def test_load_rejects_unknown_schema(tmp_path):
    path = tmp_path / "x.json"
    path.write_text('{"schema": "other"}')
    with pytest.raises(ValueError):
        load_trace(path)
