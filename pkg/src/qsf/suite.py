"""Suite runner: seeded sampling, evaluation, and report serialization.

Samples are pre-generated from per-(entry, index) substreams, then
evaluated (sequentially or over a process pool); the report content is
a pure function of the configuration, so two runs differ only in the
wall-time field.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .catalog import FAIL, INCONCLUSIVE, PASS, CheckOutcome, get_entry, list_entries, run_check
from .context import QContext
from .errors import InvalidArgument
from .sampling import sample_params, substream

MAX_SAMPLES = 100_000


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 42
    samples_per_entry: int = 1000
    q_min: float = 0.05
    q_max: float = 0.95
    eps: float = 1e-12
    include: tuple[str, ...] = ()
    exclude: tuple[str, ...] = ()
    parallelism: int = 0  # 0 = auto (sequential)

    def __post_init__(self) -> None:
        if not (0 <= self.seed < 2**64):
            raise InvalidArgument(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if not (1 <= self.samples_per_entry <= MAX_SAMPLES):
            raise InvalidArgument(
                f"samples_per_entry must be in [1, {MAX_SAMPLES}], got {self.samples_per_entry}"
            )
        if not (1e-4 <= self.q_min < self.q_max <= 0.9995):
            raise InvalidArgument(f"bad q window [{self.q_min}, {self.q_max}]")
        if self.eps <= 0:
            raise InvalidArgument(f"eps must be positive, got {self.eps}")
        if self.parallelism < 0:
            raise InvalidArgument(f"parallelism must be >= 0, got {self.parallelism}")
        known = {e.id for e in list_entries()}
        for cid in (*self.include, *self.exclude):
            if cid not in known:
                raise InvalidArgument(f"unknown check id in include/exclude: {cid!r}")

    def selected_ids(self) -> list[str]:
        ids = [e.id for e in list_entries()]
        if self.include:
            ids = [i for i in ids if i in self.include]
        if self.exclude:
            ids = [i for i in ids if i not in self.exclude]
        return sorted(ids)


@dataclass(frozen=True)
class EntryStats:
    id: str
    count: int
    passed: int
    failed: int
    inconclusive: int
    min_margin: float
    argmin_params: dict[str, float]


@dataclass(frozen=True)
class SuiteReport:
    config: SuiteConfig
    entries: tuple[EntryStats, ...]
    verdict: str
    wall_time_s: float
    outcomes: tuple[CheckOutcome, ...] = field(repr=False, default=())

    @property
    def failed_total(self) -> int:
        return sum(e.failed for e in self.entries)


def _eval_task(task: tuple[str, dict, float, int]) -> CheckOutcome:
    entry_id, params, eps, _index = task
    entry = get_entry(entry_id)
    p = dict(params)
    q = p.pop("q", 0.5) if entry.uses_q else 0.5
    ctx = QContext(q=q, eps=eps)
    return run_check(ctx, entry_id, p)


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Run every included entry x samples_per_entry and aggregate.

    Per-sample numeric errors surface as inconclusive outcomes; the
    suite never aborts mid-run.  The global verdict is pass exactly
    when no sample failed.
    """
    t0 = time.perf_counter()
    ids = config.selected_ids()
    tasks = []
    for entry_id in ids:
        entry = get_entry(entry_id)
        for index in range(config.samples_per_entry):
            rng = substream(config.seed, entry_id, index)
            params = sample_params(entry, rng, config.q_min, config.q_max)
            tasks.append((entry_id, params, config.eps, index))

    if config.parallelism > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            outcomes = list(pool.map(_eval_task, tasks, chunksize=64))
    else:
        outcomes = [_eval_task(t) for t in tasks]

    stats = []
    by_id: dict[str, list[CheckOutcome]] = {i: [] for i in ids}
    for outcome in outcomes:
        by_id[outcome.id].append(outcome)
    for entry_id in ids:
        outs = by_id[entry_id]
        n_pass = sum(1 for o in outs if o.verdict == PASS)
        n_fail = sum(1 for o in outs if o.verdict == FAIL)
        n_inc = sum(1 for o in outs if o.verdict == INCONCLUSIVE)
        min_margin = math.nan
        argmin: dict[str, float] = {}
        for o in outs:
            if not math.isnan(o.margin) and not (min_margin <= o.margin):
                min_margin = o.margin
                argmin = o.params
        stats.append(EntryStats(
            id=entry_id, count=len(outs), passed=n_pass, failed=n_fail,
            inconclusive=n_inc, min_margin=min_margin, argmin_params=argmin,
        ))
    verdict = PASS if all(s.failed == 0 for s in stats) else FAIL
    return SuiteReport(
        config=config,
        entries=tuple(stats),
        verdict=verdict,
        wall_time_s=time.perf_counter() - t0,
        outcomes=tuple(outcomes),
    )


# ---------------------------------------------------------------------------
# serialization: stable key order, 17 significant digits
# ---------------------------------------------------------------------------

def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int,)):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "NaN"
        if math.isinf(value):
            return "Infinity" if value > 0 else "-Infinity"
        return format(value, ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    if isinstance(value, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {_fmt(v)}" for k, v in value.items())
        return "{" + items + "}"
    raise InvalidArgument(f"cannot serialize {type(value)}")


def report_as_dict(report: SuiteReport) -> dict:
    cfg = report.config
    return {
        "config": {
            "seed": cfg.seed,
            "samples_per_entry": cfg.samples_per_entry,
            "q_min": cfg.q_min,
            "q_max": cfg.q_max,
            "eps": cfg.eps,
            "include": list(cfg.include),
            "exclude": list(cfg.exclude),
            "parallelism": cfg.parallelism,
        },
        "entries": [
            {
                "id": s.id,
                "count": s.count,
                "pass": s.passed,
                "fail": s.failed,
                "inconclusive": s.inconclusive,
                "min_margin": s.min_margin,
                "argmin_params": dict(s.argmin_params),
            }
            for s in report.entries
        ],
        "verdict": report.verdict,
        "wall_time_s": report.wall_time_s,
    }


CSV_HEADER = "check_id,count,pass,fail,inconclusive,min_margin"


def serialize_report(report: SuiteReport, format: str = "json") -> bytes:
    """Render a report as JSON or CSV bytes with 17-significant-digit numbers."""
    if format == "json":
        return (_fmt(report_as_dict(report)) + "\n").encode()
    if format == "csv":
        lines = [CSV_HEADER]
        for s in report.entries:
            lines.append(
                f"{s.id},{s.count},{s.passed},{s.failed},{s.inconclusive},{_fmt(s.min_margin)}"
            )
        return ("\n".join(lines) + "\n").encode()
    raise InvalidArgument(f"format must be 'json' or 'csv', got {format!r}")
