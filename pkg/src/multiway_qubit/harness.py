"""Convergence sweeps, rate fitting, CSV output and DOT export."""

from __future__ import annotations

import csv
import math
import statistics
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .continuum import exact_solution, l2_error
from .multiway import ModelConfig, Word, enumerate_level
from .renormalization import QubitTerm, coarse_grain, renormalized_ruleset
from .templates import ALGORITHMS, compute_template, normalize_template

CSV_HEADER = ("K", "t", "k", "err_l2", "norm_defect", "algo")


class DegenerateFit(ValueError):
    pass


@dataclass(frozen=True)
class ConvergenceRecord:
    K: int
    t: float
    k: int
    err_l2: float
    norm_defect: float
    algo: str

    def csv_row(self) -> list[str]:
        return [str(self.K), _fmt(self.t), str(self.k), _fmt(self.err_l2), _fmt(self.norm_defect), self.algo]


@dataclass(frozen=True)
class SweepConfig:
    t_values: tuple[float, ...]
    K_values: tuple[int, ...]
    algo: str = "closedform"
    output_path: Path | None = None
    enumeration_cap: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "t_values", tuple(float(t) for t in self.t_values))
        object.__setattr__(self, "K_values", tuple(int(K) for K in self.K_values))
        if not self.t_values or not self.K_values:
            raise ValueError("t_values and K_values must be nonempty")
        if any(K < 1 for K in self.K_values):
            raise ValueError("K values must be positive")
        if any(b <= a for a, b in zip(self.K_values, self.K_values[1:])):
            raise ValueError("K values must be strictly increasing")
        if any(t < 0 or not math.isfinite(t) for t in self.t_values):
            raise ValueError("t values must be finite and nonnegative")
        if self.algo not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algo!r}")


def _fmt(x: float) -> str:
    return format(x, ".17g")


def level_for(t: float, K: int) -> int:
    """``floor(t*K)``, snapping to the nearest integer when within one ulp of it."""
    x = t * K
    nearest = round(x)
    if abs(x - nearest) <= math.ulp(x):
        return int(nearest)
    return math.floor(x)


def convergence_record(t: float, K: int, algo: str, cap: int | None = None) -> ConvergenceRecord:
    k = level_for(t, K)
    cfg = ModelConfig(K) if cap is None else ModelConfig(K, enumeration_cap=cap)
    wf = normalize_template(compute_template(algo, cfg, k))
    return ConvergenceRecord(K, t, k, l2_error(wf, exact_solution(t)), wf.norm() - 1.0, algo)


def run_convergence_sweep(cfg: SweepConfig) -> list[ConvergenceRecord]:
    records = [
        convergence_record(t, K, cfg.algo, cfg.enumeration_cap)
        for t in cfg.t_values
        for K in cfg.K_values
    ]
    records.sort(key=lambda r: (r.t, r.K))
    if cfg.output_path is not None:
        write_csv(records, cfg.output_path)
    return records


def write_csv(records: Iterable[ConvergenceRecord], path: Path | str) -> None:
    path = Path(path)
    try:
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for rec in records:
                writer.writerow(rec.csv_row())
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write sweep CSV: {exc.strerror}", str(path)) from exc


def read_csv(path: Path | str) -> list[ConvergenceRecord]:
    with Path(path).open(newline="") as fh:
        reader = csv.DictReader(fh)
        return [
            ConvergenceRecord(int(r["K"]), float(r["t"]), int(r["k"]), float(r["err_l2"]),
                              float(r["norm_defect"]), r["algo"])
            for r in reader
        ]


def fit_convergence_rate(records: Sequence[ConvergenceRecord]) -> float:
    """Least-squares slope of log(err_l2) against log(K)."""
    if len(records) < 3:
        raise DegenerateFit(f"need at least 3 records, got {len(records)}")
    if len({r.K for r in records}) != len(records):
        raise DegenerateFit("K values must be distinct")
    if any(r.err_l2 <= 0 for r in records):
        raise DegenerateFit("err_l2 must be positive to take logs")
    xs = [math.log(r.K) for r in records]
    ys = [math.log(r.err_l2) for r in records]
    return statistics.linear_regression(xs, ys).slope


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_multiway_dot(
    cfg: ModelConfig, depth: int, renormalized: bool = False, parallel_edges: bool = False
) -> str:
    """Render the multiway system down to ``depth`` as a Graphviz digraph.

    Raw mode labels nodes by subindex strings. Renormalized mode labels them
    by qubit term; by default the K successors sharing their parent's term
    collapse into one child whose edge is labeled with the multiplicity.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    cfg.require_within_cap(cfg.level_size(depth))
    name = "renormalized" if renormalized else "multiway"
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    if renormalized and not parallel_edges:
        _merged_renormalized_body(cfg, depth, lines)
    else:
        levels = [enumerate_level(cfg, k).words for k in range(depth + 1)]
        for k, words in enumerate(levels):
            for j, w in enumerate(words):
                label = coarse_grain(w, cfg.K).label() if renormalized else w.label(cfg.K)
                lines.append(f"  n{k}_{j} [label={_dot_quote(label)}];")
        width = cfg.alphabet_size
        for k in range(depth):
            for j in range(len(levels[k])):
                for i in range(width):
                    lines.append(f"  n{k}_{j} -> n{k + 1}_{j * width + i};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _merged_renormalized_body(cfg: ModelConfig, depth: int, lines: list[str]) -> None:
    rules = renormalized_ruleset(cfg.K)
    stay = {r.source_basis: r for r in rules if r.source_basis == r.target_basis}
    flip = {r.source_basis: r for r in rules if r.source_basis != r.target_basis}
    level: list[QubitTerm] = [coarse_grain(cfg.initial_word, cfg.K)]
    lines.append(f"  n0_0 [label={_dot_quote(level[0].label())}];")
    for k in range(depth):
        nxt: list[QubitTerm] = []
        for j, term in enumerate(level):
            for rule in (stay[term.basis], flip[term.basis]):
                child = term.apply(rule)
                cid = f"n{k + 1}_{len(nxt)}"
                nxt.append(child)
                lines.append(f"  {cid} [label={_dot_quote(child.label())}];")
                attr = f' [label="×{rule.multiplicity}"]' if rule is stay[term.basis] else ""
                lines.append(f"  n{k}_{j} -> {cid}{attr};")
        level = nxt
