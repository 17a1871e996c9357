"""Exhaustive verification of b(G) = n - 3 and known-value regression tables."""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

from .bondage import bondage_number
from .domination import domination_number, is_dominating, two_dominating_set_regular
from .generators import (
    CyclePartition,
    cocktail_party,
    complete_graph,
    disjoint_cycles,
    enumerate_n_minus_3_regular,
)
from .graph import Graph, GraphError, complement, remove_edges, to_graph6

DEFAULT_MAX_ORDER = 10
OPT_IN_MAX_ORDER = 11


@dataclass
class VerificationEntry:
    n: int
    partition: list[int]
    graph6: str
    gamma: int
    bondage: int
    expected_bondage: int
    domination_witness: list[int]
    bondage_witness: list[list[int]]
    constructive_pair: list[int]
    status: str
    elapsed_ms: float


@dataclass
class VerificationReport:
    entries: list[VerificationEntry] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(e.status == "pass" for e in self.entries)

    @property
    def failed(self) -> int:
        return len(self.entries) - self.passed

    @property
    def ok(self) -> bool:
        return bool(self.entries) and self.failed == 0

    def to_json(self, include_timing: bool = True) -> dict:
        entries = []
        for e in self.entries:
            row = asdict(e)
            if not include_timing:
                del row["elapsed_ms"]
            entries.append(row)
        return {
            "entries": entries,
            "summary": {
                "total": len(self.entries),
                "passed": self.passed,
                "failed": self.failed,
                "status": "pass" if self.ok else "fail",
            },
        }

    def to_table(self) -> str:
        header = f"{'n':>3}  {'partition':<14} {'gamma':>5} {'b':>3} {'n-3':>4}  {'status':<6} {'ms':>9}"
        lines = [header, "-" * len(header)]
        for e in self.entries:
            part = "+".join(f"C{p}" for p in e.partition)
            lines.append(
                f"{e.n:>3}  {part:<14} {e.gamma:>5} {e.bondage:>3} {e.expected_bondage:>4}"
                f"  {e.status:<6} {e.elapsed_ms:>9.1f}"
            )
        lines.append("-" * len(header))
        lines.append(
            f"total {len(self.entries)}, passed {self.passed}, failed {self.failed}: "
            + ("PASS" if self.ok else "FAIL")
        )
        return "\n".join(lines)


def verify_graph(n: int, parts: tuple[int, ...]) -> VerificationEntry:
    start = time.perf_counter()
    g = complement(disjoint_cycles(CyclePartition(parts)))
    dom = domination_number(g)
    bond = bondage_number(g)
    pair = two_dominating_set_regular(g)
    elapsed = (time.perf_counter() - start) * 1000.0

    # an unsound certificate is a solver bug, not a counterexample
    if not (is_dominating(g, dom.witness) and len(dom.witness) == dom.gamma):
        raise AssertionError(f"bad domination certificate for {to_graph6(g)}")
    if not is_dominating(g, pair):
        raise AssertionError(f"constructive pair {pair} does not dominate {to_graph6(g)}")
    if domination_number(remove_edges(g, bond.witness)).gamma != dom.gamma + 1:
        raise AssertionError(f"bad bondage certificate for {to_graph6(g)}")
    expected = n - 3
    ok = dom.gamma == 2 and bond.b == expected
    return VerificationEntry(
        n=n,
        partition=list(parts),
        graph6=to_graph6(g),
        gamma=dom.gamma,
        bondage=bond.b,
        expected_bondage=expected,
        domination_witness=list(dom.witness),
        bondage_witness=[list(e) for e in bond.witness],
        constructive_pair=list(pair),
        status="pass" if ok else "fail",
        elapsed_ms=round(elapsed, 3),
    )


def _verify_task(task: tuple[int, tuple[int, ...]]) -> VerificationEntry:
    return verify_graph(*task)


def check_range(n_min: int, n_max: int, allow_large: bool = False) -> None:
    ceiling = OPT_IN_MAX_ORDER if allow_large else DEFAULT_MAX_ORDER
    if n_min < 4:
        raise GraphError(f"n_min must be >= 4, got {n_min}")
    if n_min > n_max:
        raise GraphError(f"empty range {n_min}..{n_max}")
    if n_max > ceiling:
        hint = "" if allow_large else " (pass --allow-large for n = 11)"
        raise GraphError(f"n_max {n_max} above practical ceiling {ceiling}{hint}")


def verify_theorem(
    n_min: int,
    n_max: int,
    jobs: int = 1,
    allow_large: bool = False,
    progress: Callable[[VerificationEntry], None] | None = None,
) -> VerificationReport:
    check_range(n_min, n_max, allow_large)
    tasks = [
        (n, partition.parts)
        for n in range(n_min, n_max + 1)
        for partition, _ in enumerate_n_minus_3_regular(n)
    ]
    report = VerificationReport()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_verify_task, tasks)
            for entry in results:
                report.entries.append(entry)
                if progress:
                    progress(entry)
    else:
        for task in tasks:
            entry = _verify_task(task)
            report.entries.append(entry)
            if progress:
                progress(entry)
    return report


@dataclass
class KnownValueRow:
    family: str
    parameter: int
    n: int
    computed: int
    expected: int
    status: str


def known_values() -> list[KnownValueRow]:
    """b(K_n) = ceil(n/2) for n = 2..8 and b(K_{2,...,2}) = 2t - 1 for t = 2..4."""
    cases: list[tuple[str, int, Graph, int]] = []
    cases += [("complete", n, complete_graph(n), math.ceil(n / 2)) for n in range(2, 9)]
    cases += [("cocktail-party", t, cocktail_party(t), 2 * t - 1) for t in range(2, 5)]
    rows = []
    for family, param, g, expected in cases:
        computed = bondage_number(g).b
        rows.append(
            KnownValueRow(family, param, g.n, computed, expected, "pass" if computed == expected else "fail")
        )
    return rows
