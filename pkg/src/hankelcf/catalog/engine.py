"""Verification of catalog entries and derivation scripts."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from types import FunctionType

from .. import contfrac as cfm
from ..contfrac import CFPattern, GeneralizedCF, as_poly
from ..errors import DivisionFails, HankelCFError, UnknownId
from ..exact import format_scalar
from ..hankel import hankel_sequence
from ..hfrac import classify, expand
from .registry import (DERIVATIONS, ENTRIES, EXTRA_SOURCES, Derivation, FormulaEntry, lookup,
                       lookup_derivation)
from .targets import target_sequence, target_series


def _fmt(v) -> str:
    if isinstance(v, (int,)) or hasattr(v, "denominator"):
        return format_scalar(v)
    return str(v)


@dataclass
class Report:
    id: str
    status: str  # PASS | FAIL
    first_mismatch: dict | None = None
    elapsed_ms: int = 0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def to_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "first_mismatch": self.first_mismatch,
                "elapsed_ms": self.elapsed_ms, "notes": list(self.notes)}

    @classmethod
    def from_dict(cls, data: dict) -> Report:
        return cls(data["id"], data["status"], data.get("first_mismatch"), data.get("elapsed_ms", 0),
                   list(data.get("notes", [])))


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = int((time.perf_counter() - self.t0) * 1000)


def _mismatch(n, expected, got, r=None) -> dict:
    out = {"n": n, "expected": _fmt(expected), "got": _fmt(got)}
    if r is not None:
        out["r"] = r
    return out


def _r_list(entry: FormulaEntry, r) -> tuple:
    if not entry.parameterized:
        return (None,)
    return entry.r_values if r is None else (r,)


# -- fractions -------------------------------------------------------------

def prefix_discrepancies(entry: FormulaEntry, r=None) -> list[str]:
    """Printed leading levels and stated first values that disagree with the pattern."""
    notes = []
    r = r if r is not None or not entry.parameterized else entry.r_values[0]
    cf = entry.build(r)
    for label, table in (("displayed", entry.displayed), ("stated first value", entry.stated_first)):
        for (part, j), shown in sorted(table.items()):
            shown = as_poly(shown(r) if isinstance(shown, FunctionType) else shown)
            actual = cf.a(j) if part == "a" else cf.b(j)
            if shown != actual:
                notes.append(f"{label} {part}_{j} = {shown}, pattern gives {actual}"
                             + (f" (r = {r})" if entry.parameterized else ""))
    return notes


def verify_fraction(id_: str, order: int = 30, r=None, pattern: CFPattern | None = None) -> Report:
    """PASS iff the pattern, certified to x^order, equals the target series.

    ``pattern`` replaces the registered pattern (used for falsification tests).
    """
    entry = lookup(id_)
    if entry.pattern is None and pattern is None:
        raise UnknownId(f"{id_} has no fraction pattern")
    with _Timer() as t:
        report = Report(id_, "PASS")
        for rv in _r_list(entry, r):
            cf = pattern if pattern is not None else entry.build(rv)
            target = target_series(entry.target, order, rv)
            try:
                value = cf.evaluate(order, certify=True)
            except HankelCFError as exc:
                report.status = "FAIL"
                report.notes.append(f"{type(exc).__name__}: {exc}")
                break
            bad = target.first_mismatch(value, order)
            if bad is not None:
                report.status = "FAIL"
                report.first_mismatch = _mismatch(*bad, rv)
                break
        if pattern is None and entry.pattern is not None:
            for rv in _r_list(entry, r):
                report.notes.extend(prefix_discrepancies(entry, rv))
    report.elapsed_ms = t.ms
    return report


def fraction_class_of(entry: FormulaEntry, order: int = 30, r=None) -> str:
    """classify() of the super delta-fraction expansion of the entry's target."""
    rv = r if r is not None or not entry.parameterized else entry.r_values[0]
    return classify(expand(target_series(entry.target, order, rv), entry.delta))


# -- determinants ----------------------------------------------------------

def verify_hankel(id_: str, n_max: int = 8, r=None) -> Report:
    """PASS iff the closed form equals the oracle determinant for 0 <= n <= n_max."""
    entry = lookup(id_)
    if entry.closed_form is None:
        raise UnknownId(f"{id_} has no determinant closed form")
    with _Timer() as t:
        report = Report(id_, "PASS")
        for rv in _r_list(entry, r):
            seq = target_sequence(entry.target, max(2 * n_max - 1, 1), rv)
            oracle = hankel_sequence(seq, n_max)
            bad = next((n for n in range(n_max + 1) if oracle[n] != entry.closed_form(n, rv)), None)
            if bad is not None:
                report.status = "FAIL"
                report.first_mismatch = _mismatch(bad, oracle[bad], entry.closed_form(bad, rv), rv)
                break
    report.elapsed_ms = t.ms
    return report


# -- derivations -----------------------------------------------------------

def _apply(cf: GeneralizedCF, step: tuple, r) -> GeneralizedCF:
    op, *args = step
    args = [r if a == "r" else a for a in args]
    if op == "even":
        return cfm.contract_even(cf)
    if op == "odd":
        return cfm.contract_odd(cf)
    if op == "chop":
        return cfm.chop(cf, *args)
    if op == "chop_chain":
        return cfm.chop_chain(cf, *args)
    if op == "haircut":
        return cfm.haircut(cf, *args)
    if op == "normalize":
        return cfm.normalize(cf)
    if op == "add":
        return cf.add_constant(args[0])
    if op == "divide":
        return cf.divide(args[0])
    if op == "divide_x":
        return cf.divide_by_x(*args)
    if op == "multiply_x":
        return cf.multiply_by_x(*args)
    if op == "compose_power":
        return cf.compose_power(*args)
    if op == "contract_power":
        return cf.contract_power(*args)
    raise ValueError(f"unknown derivation step {op!r}")


def replay(steps, cf: GeneralizedCF, r=None) -> GeneralizedCF:
    for step in steps:
        cf = _apply(cf, step, r)
    return cf


def _source(d: Derivation, r) -> CFPattern:
    if d.source in EXTRA_SOURCES:
        return EXTRA_SOURCES[d.source]()
    sr = r if d.source_r == "r" else d.source_r
    entry = lookup(d.source)
    return entry.pattern(sr) if entry.parameterized or sr is not None else entry.pattern()


def _structural_diff(got: GeneralizedCF, want: GeneralizedCF, levels: int):
    """First (part, index) where the two prefixes differ, after normalizing both."""
    got, want = got.prefix(levels), want.prefix(levels)
    try:
        got_n, want_n = cfm.normalize(got), cfm.normalize(want)
    except DivisionFails:
        got_n, want_n = got, want
    if got_n.b0 != want_n.b0:
        return "b_0", want_n.b0, got_n.b0
    for j in range(1, levels + 1):
        for part, g, w in (("a", got_n.a(j), want_n.a(j)), ("b", got_n.b(j), want_n.b(j))):
            if g != w:
                return f"{part}_{j}", w, g
    return None


def verify_derivation(id_: str, r=None, value_order: int = 16) -> Report:
    """Replay a derivation script; compare leading levels and the value."""
    d = lookup_derivation(id_)
    target_entry = lookup(d.target)
    with _Timer() as t:
        report = Report(id_, "PASS")
        compared = 0
        for rv in (d.r_values if r is None else (r,)):
            try:
                got = replay(d.steps, _source(d, rv).materialize(d.depth), rv)
                tr = rv if target_entry.parameterized else None
                want = replay(d.target_steps, target_entry.build(tr).materialize(d.compare + 2), rv)
                levels = compared = min(d.compare, got.depth - 1)
                diff = _structural_diff(got, want, levels)
                if diff is not None:
                    report.status = "FAIL"
                    report.first_mismatch = {"n": diff[0], "expected": str(diff[1]), "got": str(diff[2])}
                    if rv is not None:
                        report.first_mismatch["r"] = rv
                    break
                value = cfm.evaluate(got, value_order, got.depth - 1, certify=True)
                if d.target_steps:
                    expected = cfm.evaluate(want, value_order, want.depth - 1, certify=True)
                else:
                    expected = target_series(target_entry.target, value_order, tr)
                bad = expected.first_mismatch(value, value_order)
                if bad is not None:
                    report.status = "FAIL"
                    report.first_mismatch = _mismatch(*bad, rv)
                    break
            except HankelCFError as exc:
                report.status = "FAIL"
                report.notes.append(f"{type(exc).__name__}: {exc}")
                break
        report.notes.append(f"compared {compared} levels")
    report.elapsed_ms = t.ms
    return report


# -- everything ------------------------------------------------------------

def all_ids() -> list[str]:
    return sorted(ENTRIES) + sorted(DERIVATIONS)


def verify_id(id_: str, order: int = 30, n_max: int = 8, r=None) -> Report:
    """Dispatch on the id: derivation, fraction or determinant."""
    if id_ in DERIVATIONS:
        return verify_derivation(id_, r)
    entry = lookup(id_)
    if entry.kind == "fraction":
        return verify_fraction(id_, order, r)
    return verify_hankel(id_, n_max, r)


def verify_all(order: int = 30, n_max: int = 8, ids=None, r_values=None,
               workers: int = 1) -> list[Report]:
    """Run every registered check (or those in ``ids``), ordered by id.

    ``r_values`` restricts parameterized entries; ``workers`` > 1 fans the
    checks out over processes.
    """
    chosen = all_ids() if ids is None else list(ids)
    for id_ in chosen:
        if id_ not in ENTRIES and id_ not in DERIVATIONS:
            raise UnknownId(f"no catalog entry {id_!r}")
    jobs = [(id_, order, n_max, r_values) for id_ in sorted(chosen)]
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_run_job, jobs))
    return [_run_job(job) for job in jobs]


def _run_job(job) -> Report:
    id_, order, n_max, r_values = job
    if r_values is None:
        return verify_id(id_, order, n_max)
    parts = [verify_id(id_, order, n_max, r) for r in r_values] if _is_parameterized(id_) else \
        [verify_id(id_, order, n_max)]
    out = next((p for p in parts if not p.passed), parts[0])
    out.elapsed_ms = sum(p.elapsed_ms for p in parts)
    return out


def _is_parameterized(id_: str) -> bool:
    if id_ in DERIVATIONS:
        return DERIVATIONS[id_].r_values != (None,)
    return ENTRIES[id_].parameterized
