"""Randomized campaigns: generate dense graphs, extract, verify, audit."""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field

from .closure import closure_violations, family_violations
from .cycles import Budget
from .errors import KeyringError
from .generators import gen_random_dense
from .graph import Graph, build_graph, is_dense
from .keyring import extract, verify_keyring
from .lemma import LemmaTrace
from .oracle import oracle_exists_keyring

ORACLE_MAX_N = 12
RICH_AUDIT_MAX_N = 10


@dataclass
class StressReport:
    n: int
    k: int
    r: int
    seed: int
    trials: int = 0
    successes: int = 0
    failures: int = 0
    oracle_checks: int = 0
    oracle_agreements: int = 0
    audit_failures: int = 0
    contractions: int = 0
    max_expansions: int = 0
    max_seconds: float | None = None
    failure_cases: list[dict] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"


def trial_seeds(seed: int, trials: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.randrange(2**32) for _ in range(trials)]


def check_once(G: Graph, k: int, r: int, *, with_oracle: bool = False,
               rich_audit: bool = False) -> tuple[list[str], LemmaTrace, Budget]:
    """Run extract on G and audit everything; return the list of problems."""
    problems: list[str] = []
    trace = LemmaTrace()
    budget = Budget()
    extracted = True
    try:
        K = extract(G, k, r, budget, trace)
        verdict = verify_keyring(G, K, k, r)
        if not verdict:
            problems.append(f"keyring rejected: {verdict.reason}")
    except KeyringError as exc:
        extracted = False
        problems.append(f"{type(exc).__name__}: {exc}")
    host = trace.host
    if host is not None:
        for fam in trace.families:
            problems.extend(f"family: {p}" for p in family_violations(host, fam))
        for cs in trace.closures:
            problems.extend(
                f"closure: {p}"
                for p in closure_violations(host, cs, k, audit_rich=rich_audit)
            )
        for chk in trace.contractions:
            problems.extend(f"contraction: {p}" for p in chk.violations())
    if with_oracle and oracle_exists_keyring(G, k, r) != extracted:
        problems.append("oracle disagrees with extraction")
    return problems, trace, budget


def _shrink(G: Graph, k: int, r: int) -> Graph:
    # greedily drop edges while the graph stays dense and still fails
    edges = list(G.edges)
    i = 0
    while i < len(edges):
        cand = build_graph(G.n, edges[:i] + edges[i + 1:])
        if is_dense(cand, k) and check_once(cand, k, r)[0]:
            edges = list(cand.edges)
        else:
            i += 1
    return build_graph(G.n, edges)


def stress(trials: int, n: int, k: int, r: int, seed: int, *, timing: bool = False) -> StressReport:
    """Run ``trials`` independent extraction trials; failures are recorded, not raised."""
    report = StressReport(n=n, k=k, r=r, seed=seed)
    if timing:
        report.max_seconds = 0.0
    for ts in trial_seeds(seed, trials):
        started = time.perf_counter()
        G = gen_random_dense(n, k, ts)
        with_oracle = n <= ORACLE_MAX_N
        problems, trace, budget = check_once(
            G, k, r, with_oracle=with_oracle, rich_audit=n <= RICH_AUDIT_MAX_N
        )
        report.trials += 1
        report.contractions += len(trace.contractions)
        report.max_expansions = max(report.max_expansions, budget.used)
        if with_oracle:
            report.oracle_checks += 1
            if not any(p.startswith("oracle") for p in problems):
                report.oracle_agreements += 1
        if any(p.startswith(("family", "closure", "contraction")) for p in problems):
            report.audit_failures += 1
        if problems:
            report.failures += 1
            small = _shrink(G, k, r)
            report.failure_cases.append({
                "seed": ts,
                "problems": problems,
                "n": small.n,
                "edges": [list(e) for e in small.edges],
            })
        else:
            report.successes += 1
        if timing:
            report.max_seconds = max(report.max_seconds, time.perf_counter() - started)
    report.failure_cases.sort(key=lambda case: case["seed"])
    return report
