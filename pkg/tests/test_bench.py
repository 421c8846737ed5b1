import pytest

from conecut.bench import benchmark, parse_family, summarize, to_csv, to_text


def test_klee_minty_family():
    rows = benchmark(["deepest", "highest"], parse_family("klee-minty:3-8"))
    for m in range(3, 9):
        deep, high = [r for r in rows if r.instance == f"klee-minty-{m}"]
        assert deep.pivots == 2 ** m - 1
        assert high.pivots == 1


def test_deterministic_and_parallel_order():
    inst = parse_family("random:6:3:3:10")
    serial = benchmark(["highest", "steepest"], inst)
    parallel = benchmark(["highest", "steepest"], inst, workers=2)
    key = lambda r: (r.instance, r.rule, r.status, r.pivots)
    assert [key(r) for r in serial] == [key(r) for r in parallel]


def test_renderings():
    rows = benchmark(["deepest"], parse_family("klee-minty:2"))
    assert to_csv(rows).splitlines()[1].startswith("klee-minty-2,deepest,optimal,3,")
    assert "klee-minty-2" in to_text(rows)
    assert summarize(rows) == {"deepest": 3}


@pytest.mark.parametrize("spec", ["cube:3", "klee-minty:x", "random:1:2"])
def test_bad_family(spec):
    with pytest.raises(ValueError):
        parse_family(spec)
