"""Parameter sweeps over surface families with exact, diffable output.

CSV and JSON cells carry canonical scalar text, never floats, so sweep
tables are byte-stable across runs and thread counts.  Row evaluation may
fan out over a thread pool capped by ABSURF_THREADS; ordering is fixed by
the plan (range-major, then p), not by completion time.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .criteria import Verdict, np_verdict
from .errors import ParseError
from .seshadri import parse_surface_spec

CSV_COLUMNS = ("spec", "l2", "eps", "p", "status", "rules", "alpha")


@dataclass(frozen=True)
class SweepPlan:
    """A spec-string template swept over one integer placeholder."""

    spec_template: str
    start: int
    stop: int
    p_start: int
    p_stop: int
    step: int = 1
    output_format: str = "csv"
    output_path: str | None = None

    def __post_init__(self):
        if self.spec_template.count("{}") != 1:
            raise ParseError(
                f"template must contain exactly one {{}} placeholder: {self.spec_template!r}"
            )
        if self.step < 1:
            raise ParseError(f"step must be >= 1, got {self.step}")
        if self.start > self.stop:
            raise ParseError(f"empty range {self.start}:{self.stop}")
        if self.p_start < 0 or self.p_start > self.p_stop:
            raise ParseError(f"bad p range {self.p_start}:{self.p_stop}")
        if self.output_format not in ("csv", "json"):
            raise ParseError(f"unknown output format {self.output_format!r}")

    def instantiations(self) -> list[tuple[str, int]]:
        out = []
        for value in range(self.start, self.stop + 1, self.step):
            text = self.spec_template.format(value)
            for p in range(self.p_start, self.p_stop + 1):
                out.append((text, p))
        return out


@dataclass(frozen=True)
class SweepRow:
    spec: str
    l2: int
    eps: str
    p: int
    status: str
    rules: str
    alpha: str

    def as_record(self) -> dict:
        return {
            "spec": self.spec,
            "l2": self.l2,
            "eps": self.eps,
            "p": self.p,
            "status": self.status,
            "rules": self.rules.split(";") if self.rules else [],
            "alpha": self.alpha,
        }


def _interval_text(lo: str, hi: str) -> str:
    return f"{lo}..{hi}"


def _row_from_verdict(spec_text: str, p: int, verdict: Verdict) -> SweepRow:
    diag = verdict.diagnostics
    if "eps" in diag:
        eps_text = diag["eps"]
        alpha_text = diag["alpha"]
    else:
        eps_text = _interval_text(diag["eps_lo"], diag["eps_hi"])
        alpha_text = _interval_text(diag["alpha_lo"], diag["alpha_hi"])
    return SweepRow(
        spec=spec_text,
        l2=diag["l2"],
        eps=eps_text,
        p=p,
        status=verdict.status.value,
        rules=";".join(verdict.rule_ids()),
        alpha=alpha_text,
    )


def _evaluate(task: tuple[str, int]) -> SweepRow:
    spec_text, p = task
    try:
        spec = parse_surface_spec(spec_text)
    except ParseError as exc:
        raise ParseError(f"bad sweep instantiation {spec_text!r}: {exc}") from exc
    return _row_from_verdict(spec_text, p, np_verdict(spec, p))


def thread_count() -> int:
    """Worker cap: ABSURF_THREADS when set, else the machine's cores."""
    raw = os.environ.get("ABSURF_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        count = int(raw)
    except ValueError as exc:
        raise ParseError(f"ABSURF_THREADS must be an integer, got {raw!r}") from exc
    if count < 1:
        raise ParseError(f"ABSURF_THREADS must be >= 1, got {count}")
    return count


def run_sweep(plan: SweepPlan) -> list[SweepRow]:
    """Evaluate the plan and write its table; returns the ordered rows."""
    tasks = plan.instantiations()
    workers = thread_count()
    if workers == 1:
        rows = [_evaluate(task) for task in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_evaluate, tasks))
    if plan.output_path is not None:
        if plan.output_format == "csv":
            write_csv(rows, plan.output_path)
        else:
            write_json(rows, plan.output_path)
    return rows


def csv_text(rows: list[SweepRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [row.spec, row.l2, row.eps, row.p, row.status, row.rules, row.alpha]
        )
    return buffer.getvalue()


def write_csv(rows: list[SweepRow], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(csv_text(rows))


def json_text(rows: list[SweepRow]) -> str:
    return json.dumps([row.as_record() for row in rows], indent=2) + "\n"


def write_json(rows: list[SweepRow], path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(json_text(rows))
