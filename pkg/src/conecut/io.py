"""LPT problem files and JSON trace documents.

LPT layout (whitespace separated, ``#`` starts a comment)::

    m n
    <m rows of A, n numbers each>
    <b, m numbers>
    <c, n numbers>
"""

import hashlib
import json
import math
from dataclasses import asdict, is_dataclass

import numpy as np

from .exceptions import ParseError
from .problem import new_problem
from .tableau import _pivot_inplace, initial_tableau, vertex

TRACE_SCHEMA = "conecut-trace/1"


def _lines(text):
    """Yield ``(lineno, tokens)`` for non-blank lines, comments removed."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield lineno, body


def _numbers(lineno, tokens, count, what):
    if len(tokens) != count:
        raise ParseError(lineno, f"{what}: expected {count} numbers, found {len(tokens)}")
    out = []
    for col, tok in enumerate(tokens, start=1):
        try:
            val = float(tok)
        except ValueError:
            raise ParseError(lineno, f"{what}: item {col} is not a number: {tok!r}") from None
        if not math.isfinite(val):
            raise ParseError(lineno, f"{what}: item {col} is not finite: {tok!r}")
        out.append(val)
    return out


def parse_problem(text):
    """Parse LPT text into a validated :class:`LpProblem`."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError(1, "expected dimensions")
    lineno, head = lines[0]
    if len(head) != 2:
        raise ParseError(lineno, "expected dimensions")
    try:
        m, n = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(lineno, "expected dimensions") from None
    if m < 1 or n < 1:
        raise ParseError(lineno, f"dimensions must be positive, got {m} {n}")
    body = lines[1:]
    need = m + 2
    if len(body) < need:
        n_rows = max(0, min(len(body), m))
        last = body[-1][0] + 1 if body else lineno + 1
        if len(body) < m:
            raise ParseError(last, f"expected {m} rows of A, found {n_rows}")
        raise ParseError(last, "missing " + ("b and c" if len(body) == m else "c"))
    if len(body) > need:
        raise ParseError(body[need][0], f"unexpected extra line after c ({need + 1} lines expected)")
    rows = [_numbers(ln, toks, n, f"row {k + 1} of A") for k, (ln, toks) in enumerate(body[:m])]
    b = _numbers(*body[m], m, "b")
    c = _numbers(*body[m + 1], n, "c")
    return new_problem(np.array(rows), np.array(b), np.array(c))


def read_problem(path):
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())


def _fmt(value):
    value = float(value)
    negative_zero = value == 0 and math.copysign(1.0, value) < 0
    if value.is_integer() and abs(value) < 1e15 and not negative_zero:
        return str(int(value))
    return repr(value)


def render_problem(problem):
    """LPT text for ``problem``; ``parse_problem`` inverts it exactly."""
    out = [f"{problem.m} {problem.n}"]
    out += [" ".join(_fmt(v) for v in row) for row in problem.a_matrix]
    out.append(" ".join(_fmt(v) for v in problem.b_vec))
    out.append(" ".join(_fmt(v) for v in problem.c_vec))
    return "\n".join(out) + "\n"


def problem_digest(problem):
    text = render_problem(problem)
    return {"m": problem.m, "n": problem.n,
            "sha256": hashlib.sha256(text.encode("ascii")).hexdigest()}


def _plain(obj):
    """Convert numpy values, enums and dataclasses into JSON-ready objects."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, np.generic):
        return _plain(obj.item())
    if isinstance(obj, float) and not math.isfinite(obj):
        return None if math.isnan(obj) else ("inf" if obj > 0 else "-inf")
    if hasattr(obj, "value") and hasattr(obj, "name"):
        return obj.value
    if is_dataclass(obj):
        return _plain(asdict(obj))
    return obj


def trace_document(problem, config, solution):
    """Self-contained JSON-ready record of one solve."""
    echo = {k: v for k, v in vars(config).items()}
    return {
        "schema": TRACE_SCHEMA,
        "problem": problem_digest(problem),
        "lpt": render_problem(problem),
        "config": _plain(echo),
        "events": _plain(solution.trace),
        "summary": {
            "status": solution.status.value,
            "value": _plain(solution.objective),
            "pivots": solution.pivots,
            "wall_time": solution.wall_time,
            "dual_point": _plain(solution.dual_point),
            "primal_point": _plain(solution.primal_point),
        },
    }


def dump_trace(document, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(document, fh, indent=2, allow_nan=False)
        fh.write("\n")


def load_trace(path):
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if doc.get("schema") != TRACE_SCHEMA:
        raise ValueError(f"unknown trace schema {doc.get('schema')!r}")
    return doc


def replay_trace(document, problem=None):
    """Re-apply the recorded pivots to a fresh tableau and return it.

    ``problem`` defaults to the LPT text embedded in the document.
    """
    if problem is None:
        problem = parse_problem(document["lpt"])
    tab = initial_tableau(problem)
    for ev in document["events"]:
        if ev["kind"] in ("pivot", "polish"):
            _pivot_inplace(tab, ev["row"], ev["entering"])
    return tab


def replayed_vertex(document, problem=None):
    return vertex(replay_trace(document, problem))
