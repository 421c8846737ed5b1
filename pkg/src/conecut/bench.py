"""Rule-comparison benchmark: pivot counts, statuses and timings per instance."""

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields, replace

from .generators import klee_minty, random_instance
from .rules import RuleChoice
from .solver import SolverConfig, solve


@dataclass
class BenchRow:
    instance: str
    rule: str
    status: str
    pivots: int
    value: float
    wall_time: float
    error: str = ""


def parse_family(spec):
    """Expand a family spec into ``[(name, problem), ...]``.

    ``klee-minty:M`` or ``klee-minty:LO-HI``; ``random:COUNT:M:N[:SEED]``.
    """
    kind, _, rest = spec.partition(":")
    parts = rest.split(":") if rest else []
    try:
        if kind == "klee-minty" and len(parts) == 1:
            lo, _, hi = parts[0].partition("-")
            return [(f"klee-minty-{m}", klee_minty(m)) for m in range(int(lo), int(hi or lo) + 1)]
        if kind == "random" and len(parts) in (3, 4):
            count, m, n = (int(v) for v in parts[:3])
            seed0 = int(parts[3]) if len(parts) == 4 else 0
            return [(f"random-{m}x{n}-s{s}", random_instance(s, m, n))
                    for s in range(seed0, seed0 + count)]
    except ValueError as exc:
        raise ValueError(f"bad family spec {spec!r}: {exc}") from None
    raise ValueError(f"bad family spec {spec!r}; use klee-minty:LO-HI or random:COUNT:M:N[:SEED]")


def _run_one(job):
    name, problem, rule, config = job
    cfg = replace(config, rule=rule)
    try:
        sol = solve(problem, cfg)
    except Exception as exc:  # recorded, never raised
        return BenchRow(name, rule.value, "error", 0, float("nan"), 0.0, repr(exc))
    return BenchRow(name, rule.value, sol.status.value, sol.pivots, sol.objective, sol.wall_time)


def benchmark(rules, instances, config=None, workers=1):
    """Solve every instance under every rule; one :class:`BenchRow` each.

    Rows come back in (instance, rule) order regardless of ``workers``.
    """
    config = config or SolverConfig()
    jobs = [(name, prob, RuleChoice.parse(r), config) for name, prob in instances for r in rules]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(job) for job in jobs]


def to_csv(rows):
    buf = io.StringIO()
    names = [f.name for f in fields(BenchRow)]
    writer = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in asdict(row).items()})
    return buf.getvalue()


def to_text(rows):
    header = ["instance", "rule", "status", "pivots", "value", "time_ms"]
    body = [[r.instance, r.rule, r.status, str(r.pivots), f"{r.value:.6g}",
             f"{1000 * r.wall_time:.2f}"] for r in rows]
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    line = lambda cells: "  ".join(c.rjust(w) if k >= 3 else c.ljust(w)
                                   for k, (c, w) in enumerate(zip(cells, widths)))
    return "\n".join([line(header), line(["-" * w for w in widths])] + [line(b) for b in body]) + "\n"


def summarize(rows):
    """Total pivots per rule over the solved rows."""
    out = {}
    for r in rows:
        if r.status in ("optimal", "optimal-interval"):
            out[r.rule] = out.get(r.rule, 0) + r.pivots
    return out
