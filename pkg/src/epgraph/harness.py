"""Verification sweeps: construct groups, run oracles, diff against formulas."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .epg import enhanced_power_graph
from .errors import BudgetExceededError, UnsupportedFamilyError
from .formulas import (
    U6nShape,
    abelian_invariants,
    cyclic_invariants,
    d2n_invariants,
    genq_invariants,
    sd8n_invariants,
    u6n_invariants,
)
from .graphs import edge_connectivity, min_degree
from .groups import GroupSpec, build_group, parse_spec
from .invariants import (
    DEFAULT_NODE_BUDGET,
    independence_number,
    max_clique,
    maximum_matching,
    perfectness_verdict,
    strong_metric_dimension,
)
from .report import InvariantReport, VerificationRow, make_row

CHECK_NAMES = (
    "min_degree",
    "independence_number",
    "matching_number",
    "vertex_cover_number",
    "edge_cover_number",
    "edge_connectivity",
    "strong_metric_dimension",
)

SWEEP_FAMILIES = ("cyclic", "dihedral", "semidihedral", "u6n", "gen_quaternion", "abelian")


def formula_report(spec: GroupSpec) -> InvariantReport:
    """Closed-form invariants for a family instance; raises for families
    without any closed form."""
    if spec.family == "cyclic":
        return cyclic_invariants(spec.params[0])
    if spec.family == "abelian":
        return abelian_invariants(spec.params)
    if spec.family == "dihedral":
        return d2n_invariants(spec.params[0])
    if spec.family == "semidihedral":
        return sd8n_invariants(spec.params[0])
    if spec.family == "u6n":
        return u6n_invariants(U6nShape.from_n(spec.params[0]))
    if spec.family == "gen_quaternion":
        return genq_invariants(spec.params[0])
    raise UnsupportedFamilyError(f"no closed-form invariants for family {spec.family!r}")


def oracle_report(spec: GroupSpec, checks=CHECK_NAMES, budget: int = DEFAULT_NODE_BUDGET,
                  size_cap: int | None = None, with_clique: bool = False,
                  with_perfect: bool = False, max_len: int = 9) -> InvariantReport:
    """Exact invariants of the enhanced power graph, computed from scratch.

    Only the requested checks are computed; a blown search budget leaves
    that field None (the caller decides how to report it).
    """
    group = build_group(spec, size_cap)
    graph = enhanced_power_graph(group).graph
    n = graph.n
    values: dict[str, object] = {}
    wanted = set(checks)

    if "min_degree" in wanted:
        values["min_degree"] = min_degree(graph)
    if wanted & {"independence_number", "vertex_cover_number"}:
        try:
            alpha = independence_number(graph, budget=budget)
        except BudgetExceededError:
            alpha = None
        if "independence_number" in wanted:
            values["independence_number"] = alpha
        if "vertex_cover_number" in wanted:
            values["vertex_cover_number"] = None if alpha is None else n - alpha
    if wanted & {"matching_number", "edge_cover_number"}:
        alpha_prime = maximum_matching(graph)
        if "matching_number" in wanted:
            values["matching_number"] = alpha_prime
        if "edge_cover_number" in wanted:
            isolated = any(graph.adj[v] == 0 for v in range(n))
            values["edge_cover_number"] = None if isolated else n - alpha_prime
    if "edge_connectivity" in wanted:
        values["edge_connectivity"] = edge_connectivity(graph) if n >= 2 else None
    if "strong_metric_dimension" in wanted:
        try:
            values["strong_metric_dimension"] = strong_metric_dimension(graph, budget=budget)
        except BudgetExceededError:
            values["strong_metric_dimension"] = None
    if with_clique:
        try:
            values["clique_number"] = max_clique(graph, budget=budget)
        except BudgetExceededError:
            values["clique_number"] = None
    if with_perfect:
        values["perfect_verdict"] = perfectness_verdict(graph, max_len=max_len, budget=budget)

    return InvariantReport(label=group.label, source="oracle", size=n, **values)


def verify_spec(spec: GroupSpec | str, checks=CHECK_NAMES,
                budget: int = DEFAULT_NODE_BUDGET,
                size_cap: int | None = None) -> list[VerificationRow]:
    """Formula-vs-oracle rows for one group, in canonical invariant order.

    Rows are emitted only for checks the family has a closed form for; an
    oracle that ran out of budget yields an oracle-skipped row rather than
    a silent drop.
    """
    if isinstance(spec, str):
        spec = parse_spec(spec)
    formula = formula_report(spec)
    fvals = formula.values()
    active = [c for c in CHECK_NAMES if c in checks and fvals.get(c) is not None]
    oracle = oracle_report(spec, checks=active, budget=budget, size_cap=size_cap)
    ovals = oracle.values()
    rows = []
    for name in active:
        o = ovals.get(name)
        rows.append(make_row(str(spec), name, fvals[name], o, oracle_skipped=o is None))
    return rows


@dataclass
class SweepConfig:
    """One verification sweep: a family, its parameter list, and budgets."""

    family: str
    params: list
    checks: tuple[str, ...] = CHECK_NAMES
    max_len: int = 9
    budget: int = DEFAULT_NODE_BUDGET
    out: str | None = None
    jobs: int = 1
    size_cap: int | None = None

    specs: list[GroupSpec] = field(init=False)

    def __post_init__(self):
        bad = set(self.checks) - set(CHECK_NAMES)
        if bad:
            raise UnsupportedFamilyError(f"unknown checks: {sorted(bad)}")
        if self.family == "abelian":
            self.specs = [p if isinstance(p, GroupSpec) else GroupSpec("abelian", tuple(p))
                          for p in self.params]
        else:
            self.specs = [GroupSpec(self.family, (int(p),)) for p in self.params]


def _verify_worker(args) -> list[VerificationRow]:
    spec_text, checks, budget, size_cap = args
    return verify_spec(spec_text, checks=checks, budget=budget, size_cap=size_cap)


def run_sweep(cfg: SweepConfig) -> list[VerificationRow]:
    """All rows of a sweep in deterministic order (spec order, then check order).

    Parallelism is across group instances only; each oracle runs
    single-threaded so budgets stay reproducible.
    """
    tasks = [(str(s), cfg.checks, cfg.budget, cfg.size_cap) for s in cfg.specs]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_verify_worker, tasks))
    else:
        chunks = [_verify_worker(t) for t in tasks]
    return [row for chunk in chunks for row in chunk]


def pgroup_part_lists(p: int, max_order: int) -> list[tuple[int, ...]]:
    """All abelian p-group part lists (descending prime powers) with order
    <= max_order, ordered by order then lexicographically."""
    out = []
    e = 1
    while p ** e <= max_order:
        for partition in _descending_partitions(e):
            out.append(tuple(p ** a for a in partition))
        e += 1
    return out


def _descending_partitions(total: int, cap: int | None = None) -> list[tuple[int, ...]]:
    if total == 0:
        return [()]
    cap = total if cap is None else min(cap, total)
    result = []
    for head in range(cap, 0, -1):
        for tail in _descending_partitions(total - head, head):
            result.append((head,) + tail)
    return result


def abelian_sweep_specs(max_order: int, primes=(2, 3, 5), min_order: int = 2) -> list[GroupSpec]:
    """Abelian p-group specs for each prime, every shape with order in range."""
    specs = []
    for p in primes:
        for parts in pgroup_part_lists(p, max_order):
            order = 1
            for v in parts:
                order *= v
            if order >= min_order:
                specs.append(GroupSpec("abelian", parts))
    return specs
