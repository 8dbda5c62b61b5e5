"""Case sweeps over (type, parabolic, minimal degree) and report emission.

One CaseReport per minimal degree of each requested parabolic. Reports are
plain data (strings, ints, tuples), so they serialize and pickle cleanly;
sweeps are deterministic regardless of worker count because the merge sorts
by the case key.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .curve_nbhd import minimal_degree_records
from .exceptions import ResourceGuardError
from .parabolic import Parabolic
from .root_system import SimpleType, build_root_system
from .tangent_directions import (
    VERDICT_ONLY_AUT_X, key_inequality, quasi_homogeneity_verdict,
    tangent_direction_sets,
)
from .weyl import word_str

__all__ = ["SweepConfig", "CaseReport", "default_types", "all_parabolic_subsets",
           "case_reports", "run_sweep", "predictions_confirmed", "emit"]

_MAX_SWEEP_RANK = 6

CSV_HEADER = ("type", "delta_p", "degree", "z_length", "z_word", "cascade",
              "td", "td_tilde", "lhs", "rhs", "holds", "exception", "verdict")


@dataclass(frozen=True)
class CaseReport:
    type: str
    delta_p: tuple[int, ...]
    degree: tuple[int, ...]
    z_length: int
    z_word: str
    cascade: tuple[tuple[int, ...], ...]
    td: tuple[tuple[int, ...], ...]
    td_tilde: tuple[tuple[int, ...], ...]
    lhs: int
    rhs: int
    holds: bool
    exception: bool
    verdict: str


@dataclass(frozen=True)
class SweepConfig:
    types: tuple[SimpleType, ...]
    parabolics: tuple[tuple[int, ...], ...] | str = "all"  # "all" or explicit index tuples
    max_rank: int = _MAX_SWEEP_RANK
    output: str = "json"
    workers: int = 1


def default_types(max_rank: int, include_e6: bool = False) -> tuple[SimpleType, ...]:
    """All admissible non-E types up to max_rank; E6 only on request."""
    out = []
    for l in range(1, max_rank + 1):
        out.append(SimpleType("A", l))
    for fam, lo in (("B", 2), ("C", 2), ("D", 3)):
        for l in range(lo, max_rank + 1):
            out.append(SimpleType(fam, l))
    if max_rank >= 4:
        out.append(SimpleType("F", 4))
    if max_rank >= 2:
        out.append(SimpleType("G", 2))
    if include_e6 and max_rank >= 6:
        out.append(SimpleType("E", 6))
    return tuple(sorted(out, key=lambda t: (t.family, t.rank)))


def all_parabolic_subsets(rank: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for r in range(rank + 1):
        out.extend(itertools.combinations(range(1, rank + 1), r))
    return tuple(sorted(out))


def case_reports(type_label: str, delta_p: tuple[int, ...]) -> list[CaseReport]:
    """All per-minimal-degree reports of one (type, parabolic) case."""
    rs = build_root_system(type_label)
    p = Parabolic(rs, frozenset(delta_p))
    out = []
    for rec in minimal_degree_records(p):
        sets = tangent_direction_sets(p, rec.degree)
        ineq = key_inequality(p, rec.degree)
        verdict = quasi_homogeneity_verdict(p, rec.degree)
        out.append(CaseReport(
            type=str(rs.simple_type),
            delta_p=tuple(sorted(p.delta_p)),
            degree=rec.degree,
            z_length=rec.z.length,
            z_word=word_str(rec.z),
            cascade=tuple(r.coeffs for r in rec.cascade),
            td=tuple(r.coeffs for r in sets.td),
            td_tilde=tuple(r.coeffs for r in sets.td_tilde),
            lhs=ineq.lhs,
            rhs=ineq.rhs,
            holds=ineq.holds,
            exception=ineq.exception,
            verdict=verdict.kind,
        ))
    return out


def _case_worker(task: tuple[str, tuple[int, ...]]) -> list[CaseReport]:
    return case_reports(*task)


def _sort_key(r: CaseReport):
    t = SimpleType.parse(r.type)
    return (t.family, t.rank, r.delta_p, r.degree)


def run_sweep(cfg: SweepConfig) -> list[CaseReport]:
    if cfg.max_rank > _MAX_SWEEP_RANK:
        raise ResourceGuardError(f"sweeps are capped at rank {_MAX_SWEEP_RANK}")
    tasks = []
    for t in cfg.types:
        if t.rank > cfg.max_rank:
            raise ResourceGuardError(f"{t} exceeds the sweep rank cap {cfg.max_rank}")
        if cfg.parabolics == "all":
            subsets = all_parabolic_subsets(t.rank)
        else:
            subsets = tuple(tuple(sorted(dp)) for dp in cfg.parabolics)
        for dp in subsets:
            tasks.append((str(t), dp))
    tasks.sort()
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(_case_worker, tasks, chunksize=4))
    else:
        chunks = [_case_worker(t) for t in tasks]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=_sort_key)
    return reports


def predictions_confirmed(reports) -> bool:
    """The inequality holds off the exception, fails on it, verdict matching."""
    for r in reports:
        if r.exception:
            if r.holds or r.verdict != VERDICT_ONLY_AUT_X:
                return False
        elif not r.holds or r.verdict == VERDICT_ONLY_AUT_X:
            return False
    return True


def _inequality_cell(r: CaseReport) -> str:
    return f"{r.lhs} <= {r.rhs}" if r.holds else f"{r.lhs} > {r.rhs}"


def emit(reports, fmt: str) -> str:
    """Render reports as json, csv, or md with a stable field order."""
    if fmt == "json":
        return json.dumps([asdict(r) for r in reports], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in reports:
            d = asdict(r)
            writer.writerow([json.dumps(d[k]) if isinstance(d[k], tuple) else d[k]
                             for k in CSV_HEADER])
        return buf.getvalue()
    if fmt == "md":
        head = ("| type | delta_p | degree | z_length | inequality | holds "
                "| exception | verdict | cascade | td | td_tilde |")
        rule = "|" + "---|" * 11
        lines = [head, rule]
        for r in reports:
            lines.append(
                f"| {r.type} | {list(r.delta_p)} | {list(r.degree)} | {r.z_length} "
                f"| {_inequality_cell(r)} | {r.holds} | {r.exception} | {r.verdict} "
                f"| {[list(c) for c in r.cascade]} | {[list(c) for c in r.td]} "
                f"| {[list(c) for c in r.td_tilde]} |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown output format {fmt!r}")
