"""Differential corpus runner: definition versus structural classifier."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .classification import SAMPLING_SEED, classify, lemma21_predicates
from .errors import CapExceeded
from .families import resolve
from .kernel import DEFAULT_CAP, Group
from .maps import DEFAULT_AUT_BUDGET, DEFAULT_ISO_BUDGET
from .structure import is_solvable, p_length

LEMMA_CHECK_BOUND = 2000


@dataclass
class EntryResult:
    index: int
    name: str
    expected: str
    order: int = 0
    involution_count: int = 0
    oracle: bool = False
    verdict: str = ""
    params: dict = field(default_factory=dict)
    agree: bool = False
    expected_ok: bool = True
    invariant_failures: list = field(default_factory=list)
    error: str = ""
    seconds: float = 0.0


@dataclass
class RunReport:
    profile: str
    entries: list
    seed: int = SAMPLING_SEED
    extra_checks: dict = field(default_factory=dict)

    @property
    def disagreements(self) -> int:
        return sum(1 for e in self.entries if not e.agree)

    @property
    def agreements(self) -> int:
        return sum(1 for e in self.entries if e.agree)

    @property
    def invariant_failures(self) -> int:
        return (sum(len(e.invariant_failures) for e in self.entries)
                + sum(1 for v in self.extra_checks.values() if not v))

    @property
    def errors(self) -> int:
        return sum(1 for e in self.entries if e.error)

    def to_json(self) -> dict:
        return {
            "format": "corpus-run/v1",
            "profile": self.profile,
            "seed": self.seed,
            "summary": {
                "groups": len(self.entries),
                "agreements": self.agreements,
                "disagreements": self.disagreements,
                "invariant_failures": self.invariant_failures,
                "errors": self.errors,
            },
            "extra_checks": self.extra_checks,
            "entries": [asdict(e) for e in self.entries],
        }


def positive_invariants(g: Group, lemma_bound: int = LEMMA_CHECK_BOUND) -> list[str]:
    """Names of failed invariants for an oracle-positive group."""
    failed = []
    if not is_solvable(g):
        failed.append("solvable")
    elif p_length(g, 2) != 1:
        failed.append("2-length 1")
    if g.order <= lemma_bound:
        lem = lemma21_predicates(g, samples=10)
        failed += [f"lemma ({k})" for k, v in lem.checks.items() if v is False]
    return failed


def run_entry(index: int, entry: dict, cap: int = DEFAULT_CAP,
              iso_budget: int = DEFAULT_ISO_BUDGET, data_dir=None) -> EntryResult:
    res = EntryResult(index, entry["name"], entry.get("expected", "unknown"))
    start = time.perf_counter()
    try:
        g = resolve(entry["spec"], cap=cap, data_dir=data_dir)
        rep = classify(g, iso_budget=iso_budget, data_dir=data_dir)
    except CapExceeded as exc:
        res.error = f"CapExceeded: {exc}"
        res.seconds = time.perf_counter() - start
        return res
    res.order = g.order
    res.involution_count = rep.involution_count
    res.oracle = rep.oracle
    res.verdict = rep.verdict.tag
    res.params = rep.verdict.params()
    res.agree = rep.oracle == rep.positive and not getattr(rep.verdict, "inconsistent", False)
    if res.expected != "unknown":
        res.expected_ok = (res.expected == "positive") == rep.oracle
    if rep.oracle:
        res.invariant_failures = positive_invariants(g)
    res.seconds = time.perf_counter() - start
    return res


def _run_star(args):
    return run_entry(*args)


def run_corpus(entries: list[dict], profile: str = "custom", jobs: int = 1,
               cap: int = DEFAULT_CAP, iso_budget: int = DEFAULT_ISO_BUDGET,
               data_dir=None, slow: bool = False,
               aut_budget: int = DEFAULT_AUT_BUDGET) -> RunReport:
    tasks = [(i, e, cap, iso_budget, data_dir) for i, e in enumerate(entries)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_star, tasks))
    else:
        results = [_run_star(t) for t in tasks]
    results.sort(key=lambda r: r.index)
    report = RunReport(profile, results)
    if slow:
        report.extra_checks.update(slow_checks(data_dir, aut_budget))
    return report


def slow_checks(data_dir=None, aut_budget: int = DEFAULT_AUT_BUDGET) -> dict:
    from .families import load_reference
    from .maps import automorphism_group_order

    suz = load_reference("suzuki64", data_dir)
    return {"|Aut(Suz64)| = 15360": automorphism_group_order(suz, aut_budget) == 15360}


def exit_code(report: RunReport) -> int:
    if report.errors:
        return CapExceeded.exit_code
    if report.disagreements or report.invariant_failures or \
            not all(e.expected_ok for e in report.entries):
        return 3
    return 0

