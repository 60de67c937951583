"""Executable certificates for the known identities and bounds.

Each check composes public operations from the energy and constructions
modules (never re-deriving any formula privately), measures the slack of
one relation, and reports a CheckResult.  Strict inequalities are
certified as their non-strict form within tolerance, with the measured
slack left for the caller to judge; a check whose instance meets a known
equality condition additionally demands |slack| <= tolerance.

``run_all`` evaluates every applicable check in a fixed order; checks
whose preconditions fail are reported as skipped rather than errors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import constructions, energy
from ._fmt import g17, json_scalar
from .errors import InvalidParams
from .hypergraph import (
    DEFAULT_EDGE_LIMIT,
    Hypergraph,
    complement,
    degree_summary,
    is_linear,
    is_regular,
    remove_edge,
    add_edge,
    zagreb_index,
)
from .spectra import (
    DEFAULT_TOLERANCES,
    Tolerances,
    matrix_energy,
    singular_values,
    spectral_radius,
    sym_eigenvalues,
)

__all__ = [
    "CheckResult",
    "CertificationReport",
    "check_subdivision_identity",
    "check_be_range",
    "check_rank_bound",
    "check_rho_index_bound",
    "check_zagreb_index_bound",
    "check_rho_geq_zfrak",
    "check_trace_bound",
    "check_lower_bound_zagreb",
    "check_avg_degree_rho",
    "check_nordhaus_gaddum",
    "check_edge_monotonicity",
    "check_qe_edge_perturbation",
    "check_qe_line_trichotomy",
    "check_power_spectrum",
    "check_power_qe",
    "check_line_scaling",
    "check_ml_formula",
    "check_linear_line_bounds",
    "run_all",
    "report_json",
    "report_csv",
]

CSV_COLUMNS = (
    "name",
    "lhs",
    "rhs",
    "relation",
    "slack",
    "holds",
    "equality_expected",
    "tolerance",
    "skipped_reason",
)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one certified relation (or a skip with its reason)."""

    name: str
    lhs: float | None
    rhs: float | None
    relation: str
    slack: float | None
    holds: bool
    equality_expected: bool
    tolerance: float
    skipped_reason: str | None = None


@dataclass(frozen=True)
class CertificationReport:
    instance: str
    checks: tuple[CheckResult, ...]
    overall_pass: bool


def _make(
    name: str,
    lhs: float,
    relation: str,
    rhs: float,
    equality_expected: bool,
    tol: Tolerances,
    tolerance: float | None = None,
) -> CheckResult:
    lhs = float(lhs)
    rhs = float(rhs)
    if tolerance is None:
        tolerance = tol.check_rel * max(1.0, abs(lhs), abs(rhs))
    slack = rhs - lhs if relation in ("<=", "<", "=") else lhs - rhs
    if relation == "=":
        satisfied = abs(slack) <= tolerance
    elif relation in ("<=", "<", ">=", ">"):
        satisfied = slack >= -tolerance
    else:
        raise InvalidParams(f"unknown relation {relation!r}")
    holds = satisfied and (not equality_expected or abs(slack) <= tolerance)
    return CheckResult(name, lhs, rhs, relation, slack, holds, equality_expected, tolerance)


def _skipped(name: str, reason: str) -> CheckResult:
    return CheckResult(name, None, None, "", None, True, False, 0.0, reason)


def _is_disjoint(h: Hypergraph) -> bool:
    return constructions.line_multigraph_edge_count(h) == 0


def _is_complete(h: Hypergraph) -> bool:
    total = math.comb(h.n, h.k)
    return total >= 1 and h.m == total


def check_subdivision_identity(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> CheckResult:
    """Incidence energy equals half the subdivision-graph adjacency energy."""
    lhs = energy.incidence_energy(h, tol)
    rhs = 0.5 * matrix_energy(constructions.subdivision_adjacency(h), tol)
    return _make("subdivision_identity", lhs, "=", rhs, True, tol)


def check_be_range(
    h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[CheckResult, CheckResult]:
    """sqrt(km) <= BE <= sqrt(kmn); tight below iff m <= 1, above iff m = 0."""
    be = energy.incidence_energy(h, tol)
    km = h.k * h.m
    lower = _make("be_range_lower", math.sqrt(km), "<=", be, h.m <= 1, tol)
    upper = _make("be_range_upper", be, "<=", math.sqrt(km * h.n), h.m == 0, tol)
    return lower, upper


def check_rank_bound(
    h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[CheckResult, CheckResult]:
    """BE <= sqrt(k m r) <= sqrt(k) m with r the numeric incidence rank;
    tight exactly for disjoint edges."""
    be = energy.incidence_energy(h, tol)
    rank = singular_values(constructions.incidence_matrix(h), tol).numeric_rank
    mid = math.sqrt(h.k * h.m * rank)
    disjoint = _is_disjoint(h)
    bound = _make("rank_bound", be, "<=", mid, disjoint, tol)
    chain = _make("rank_bound_chain", mid, "<=", math.sqrt(h.k) * h.m, disjoint, tol)
    return bound, chain


def check_rho_index_bound(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> CheckResult:
    """BE <= sqrt(rho) + sqrt((n-1)(km - rho)); equality for complete k-graphs."""
    be = energy.incidence_energy(h, tol)
    rho = spectral_radius(constructions.signless_laplacian(h), tol)
    rest = max(0.0, h.k * h.m - rho)
    rhs = math.sqrt(rho) + math.sqrt((h.n - 1) * rest)
    return _make("rho_index_bound", be, "<=", rhs, _is_complete(h), tol)


def _zfrak(h: Hypergraph) -> float:
    return h.k * math.sqrt(zagreb_index(h) / h.n)


def _index_bound(h: Hypergraph, x: float) -> float:
    return math.sqrt(x) + math.sqrt((h.n - 1) * max(0.0, h.k * h.m - x))


def check_zagreb_index_bound(
    h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[CheckResult, CheckResult]:
    """BE <= sqrt(zf) + sqrt((n-1)(km - zf)) with zf = k sqrt(Z/n); since
    zf never exceeds the spectral radius, the radius-based bound is the
    tighter of the two."""
    be = energy.incidence_energy(h, tol)
    zf = _zfrak(h)
    rho = spectral_radius(constructions.signless_laplacian(h), tol)
    bound = _make("zagreb_index_bound", be, "<=", _index_bound(h, zf), _is_complete(h), tol)
    order = _make(
        "rho_zagreb_bound_order",
        _index_bound(h, rho),
        "<=",
        _index_bound(h, zf),
        is_regular(h),
        tol,
    )
    return bound, order


def check_rho_geq_zfrak(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> CheckResult:
    """k sqrt(Z/n) <= rho(Q); equality exactly for regular hypergraphs."""
    rho = spectral_radius(constructions.signless_laplacian(h), tol)
    return _make("rho_geq_zfrak", _zfrak(h), "<=", rho, is_regular(h), tol)


def check_trace_bound(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> CheckResult:
    """sum of squared Q-eigenvalues <= k Z; equality for disjoint edges."""
    values = sym_eigenvalues(constructions.signless_laplacian(h), tol).as_array()
    lhs = float((values * values).sum())
    return _make("trace_bound", lhs, "<=", h.k * zagreb_index(h), _is_disjoint(h), tol)


def check_lower_bound_zagreb(
    h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[CheckResult, CheckResult]:
    """sqrt((km)^3 / (kZ)) <= BE and sqrt(k) m / sqrt(max degree) <= BE.

    The first is tight for disjoint edges; the second additionally needs
    every vertex covered (or no edges at all)."""
    be = energy.incidence_energy(h, tol)
    summary = degree_summary(h)
    km = h.k * h.m
    if h.m == 0:
        zagreb_lower = 0.0
        degree_lower = 0.0
    else:
        zagreb_lower = math.sqrt(km**3 / (h.k * summary.zagreb))
        degree_lower = math.sqrt(h.k) * h.m / math.sqrt(summary.max_degree)
    disjoint = _is_disjoint(h)
    first = _make("zagreb_lower_bound", zagreb_lower, "<=", be, disjoint, tol)
    second = _make(
        "max_degree_lower_bound",
        degree_lower,
        "<=",
        be,
        h.m == 0 or (disjoint and summary.min_degree >= 1),
        tol,
    )
    return first, second


def check_avg_degree_rho(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> CheckResult:
    """k d(H) <= rho(Q); equality for regular hypergraphs."""
    rho = spectral_radius(constructions.signless_laplacian(h), tol)
    lhs = h.k * (h.k * h.m) / h.n
    return _make("avg_degree_rho", lhs, "<=", rho, is_regular(h), tol)


def check_nordhaus_gaddum(
    h: Hypergraph,
    tol: Tolerances = DEFAULT_TOLERANCES,
    edge_limit: int = DEFAULT_EDGE_LIMIT,
) -> tuple[CheckResult, CheckResult]:
    """Bounds on BE(H) + BE(complement); tight below iff at most one
    potential edge exists at all (n <= k)."""
    total = math.comb(h.n, h.k)
    both = energy.incidence_energy(h, tol) + energy.incidence_energy(
        complement(h, edge_limit), tol
    )
    if total == 0:
        lower_value = 0.0
    else:
        lower_value = math.sqrt(h.k) * total / math.sqrt(math.comb(h.n - 1, h.k - 1))
    lower = _make("nordhaus_gaddum_lower", lower_value, "<=", both, total <= 1, tol)
    upper_value = h.k * math.sqrt(2.0 * total / h.n) + math.sqrt(
        2.0 * h.k * (h.n - 1) * (h.n - h.k) / h.n * total
    )
    upper = _make("nordhaus_gaddum_upper", both, "<=", upper_value, False, tol)
    return lower, upper


def check_edge_monotonicity(
    h: Hypergraph, edge, tol: Tolerances = DEFAULT_TOLERANCES
) -> CheckResult:
    """Deleting an edge strictly lowers the incidence energy."""
    lhs = energy.incidence_energy(h, tol)
    rhs = energy.incidence_energy(remove_edge(h, edge), tol)
    return _make("edge_monotonicity", lhs, ">", rhs, False, tol)


def check_qe_edge_perturbation(
    h: Hypergraph, edge, tol: Tolerances = DEFAULT_TOLERANCES
) -> CheckResult:
    """Adding one edge moves QE by at most 2k - 2k/n."""
    before = energy.signless_laplacian_energy(h, tol)
    after = energy.signless_laplacian_energy(add_edge(h, edge), tol)
    bound = 2.0 * h.k - 2.0 * h.k / h.n
    return _make("qe_edge_perturbation", abs(after - before), "<=", bound, False, tol)


def check_qe_line_trichotomy(
    h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[CheckResult, ...]:
    """Relate QE and the line-multigraph energy according to m versus n."""
    qe = energy.signless_laplacian_energy(h, tol)
    al_energy = energy.line_energy(h, tol)
    if h.m == h.n:
        return (_make("qe_line_equality", qe, "=", al_energy, True, tol),)
    if h.m < h.n:
        gap = 2.0 * h.k * h.m * (h.n - h.m) / h.n
        lower = _make("qe_line_lower_bound", qe - gap, "<=", al_energy, _is_disjoint(h), tol)
        upper = _make("qe_line_strict_upper", al_energy, "<", qe, False, tol)
        return lower, upper
    lower = _make("qe_line_strict_lower", qe, "<", al_energy, False, tol)
    upper = _make(
        "qe_line_gap_upper", al_energy, "<", qe + 2.0 * h.k * (h.m - h.n), False, tol
    )
    return lower, upper


def check_power_spectrum(
    h: Hypergraph, s: int, r: int, tol: Tolerances = DEFAULT_TOLERANCES
) -> CheckResult:
    """Closed-form Q-spectrum of the padded blow-up versus a direct solve."""
    predicted = energy.power_q_spectrum_closed_form(h, s, r, tol).expand_descending()
    power = constructions.power_hypergraph(h, s, r)
    direct = sym_eigenvalues(constructions.signless_laplacian(power), tol).as_array()
    deviation = float(np.abs(predicted - direct).max())
    return _make(
        "power_spectrum_match", deviation, "=", 0.0, True, tol, tolerance=tol.spectrum_match
    )


def check_power_qe(
    h: Hypergraph, s: int, r: int, tol: Tolerances = DEFAULT_TOLERANCES
) -> CheckResult:
    """Closed-form QE of the padded blow-up versus a direct solve."""
    closed = energy.power_qe_closed_form(h, s, r)
    power = constructions.power_hypergraph(h, s, r)
    direct = energy.signless_laplacian_energy(power, tol)
    if closed.is_exact:
        return _make(f"power_qe_{closed.case}", direct, "=", closed.value, True, tol)
    return _make(f"power_qe_{closed.case}", direct, "<", closed.value, False, tol)


def check_line_scaling(
    h: Hypergraph, s: int, r: int, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[CheckResult, CheckResult, CheckResult]:
    """Blow-up by s scales the line multigraph: adjacency entrywise (exact
    integers), spectrum, and energy all by the factor s."""
    base = constructions.line_multigraph(h)
    power = constructions.power_hypergraph(h, s, r)
    scaled = constructions.line_multigraph(power)
    entry_dev = float(np.abs(scaled - s * base).max())
    matrix_check = _make(
        "line_matrix_scaling", entry_dev, "=", 0.0, True, tol, tolerance=0.0
    )
    base_spec = sym_eigenvalues(base, tol).as_array()
    scaled_spec = sym_eigenvalues(scaled, tol).as_array()
    spec_dev = float(np.abs(scaled_spec - s * base_spec).max())
    spectrum_check = _make(
        "line_spectrum_scaling", spec_dev, "=", 0.0, True, tol, tolerance=tol.spectrum_match
    )
    energy_check = _make(
        "line_energy_scaling",
        energy.line_energy(power, tol),
        "=",
        s * energy.line_energy(h, tol),
        True,
        tol,
    )
    return matrix_check, spectrum_check, energy_check


def check_ml_formula(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> CheckResult:
    """Line-multigraph edge count equals (Z - km)/2, exactly."""
    counted = constructions.line_multigraph_edge_count(h)
    predicted = (zagreb_index(h) - h.k * h.m) / 2.0
    return _make("ml_formula", float(counted), "=", predicted, True, tol, tolerance=0.0)


def check_linear_line_bounds(
    h: Hypergraph, s: int, r: int, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[CheckResult, CheckResult]:
    """For linear hypergraphs: sqrt(2 s^2 (Z - km)) <= E(line of power)
    <= s (Z - km); both collapse when the line graph has a single edge."""
    if not is_linear(h):
        raise InvalidParams("hypergraph is not linear")
    ml = constructions.line_multigraph_edge_count(h)
    if ml < 1:
        raise InvalidParams("line multigraph has no edges")
    gap = zagreb_index(h) - h.k * h.m
    value = energy.line_energy(constructions.power_hypergraph(h, s, r), tol)
    tight = ml == 1
    lower = _make(
        "linear_line_lower", math.sqrt(2.0 * s * s * gap), "<=", value, tight, tol
    )
    upper = _make("linear_line_upper", value, "<=", float(s * gap), tight, tol)
    return lower, upper


def _first_absent_edge(h: Hypergraph):
    present = set(h.edges)
    for candidate in combinations(range(h.n), h.k):
        if candidate not in present:
            return candidate
    return None


def run_all(
    h: Hypergraph,
    power_params: tuple[int, int] | None = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
    edge_limit: int = DEFAULT_EDGE_LIMIT,
) -> CertificationReport:
    """Every applicable check in a fixed order; unmet preconditions are
    recorded as skips, and individual failures are data, not errors."""
    results: list[CheckResult] = []
    no_edges = h.m == 0

    if no_edges:
        results.append(_skipped("subdivision_identity", "hypergraph has no edges"))
    else:
        results.append(check_subdivision_identity(h, tol))
    results.extend(check_be_range(h, tol))
    if no_edges:
        results.append(_skipped("rank_bound", "hypergraph has no edges"))
        results.append(_skipped("rank_bound_chain", "hypergraph has no edges"))
    else:
        results.extend(check_rank_bound(h, tol))
    results.append(check_rho_index_bound(h, tol))
    results.extend(check_zagreb_index_bound(h, tol))
    results.append(check_rho_geq_zfrak(h, tol))
    results.append(check_trace_bound(h, tol))
    results.extend(check_lower_bound_zagreb(h, tol))
    results.append(check_avg_degree_rho(h, tol))
    if math.comb(h.n, h.k) > edge_limit:
        reason = f"complement would exceed the edge limit {edge_limit}"
        results.append(_skipped("nordhaus_gaddum_lower", reason))
        results.append(_skipped("nordhaus_gaddum_upper", reason))
    else:
        results.extend(check_nordhaus_gaddum(h, tol, edge_limit))
    if no_edges:
        results.append(_skipped("edge_monotonicity", "hypergraph has no edges"))
    else:
        results.append(check_edge_monotonicity(h, h.edges[0], tol))
    absent = _first_absent_edge(h) if h.n >= h.k else None
    if absent is None:
        results.append(
            _skipped("qe_edge_perturbation", "no edge can be added (complete or n < k)")
        )
    else:
        results.append(check_qe_edge_perturbation(h, absent, tol))
    if no_edges:
        results.append(_skipped("qe_line_trichotomy", "hypergraph has no edges"))
    else:
        results.extend(check_qe_line_trichotomy(h, tol))
    results.append(check_ml_formula(h, tol))

    if power_params is not None:
        s, r = power_params
        if r > h.k * s:
            results.append(check_power_spectrum(h, s, r, tol))
            results.append(check_power_qe(h, s, r, tol))
        else:
            reason = f"closed forms require r > k*s = {h.k * s}"
            results.append(_skipped("power_spectrum_match", reason))
            results.append(_skipped("power_qe", reason))
        if no_edges:
            for name in ("line_matrix_scaling", "line_spectrum_scaling", "line_energy_scaling"):
                results.append(_skipped(name, "hypergraph has no edges"))
        else:
            results.extend(check_line_scaling(h, s, r, tol))
        if no_edges or not is_linear(h):
            reason = "requires a linear hypergraph with at least one line edge"
            results.append(_skipped("linear_line_lower", reason))
            results.append(_skipped("linear_line_upper", reason))
        elif constructions.line_multigraph_edge_count(h) < 1:
            reason = "line multigraph has no edges"
            results.append(_skipped("linear_line_lower", reason))
            results.append(_skipped("linear_line_upper", reason))
        else:
            results.extend(check_linear_line_bounds(h, s, r, tol))

    descriptor = f"k={h.k} n={h.n} m={h.m}"
    if power_params is not None:
        descriptor += f" s={power_params[0]} r={power_params[1]}"
    return CertificationReport(
        instance=descriptor,
        checks=tuple(results),
        overall_pass=all(c.holds for c in results),
    )


def report_json(report: CertificationReport) -> str:
    """JSON array of CheckResult objects, floats at 17 significant digits."""
    rows = []
    for c in report.checks:
        fields = ", ".join(
            f'"{key}": {json_scalar(value)}'
            for key, value in (
                ("name", c.name),
                ("lhs", c.lhs),
                ("rhs", c.rhs),
                ("relation", c.relation),
                ("slack", c.slack),
                ("holds", c.holds),
                ("equality_expected", c.equality_expected),
                ("tolerance", c.tolerance),
                ("skipped_reason", c.skipped_reason),
            )
        )
        rows.append("{" + fields + "}")
    return "[" + ", ".join(rows) + "]"


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return g17(value)
    return str(value)


def report_csv(report: CertificationReport) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for c in report.checks:
        lines.append(
            ",".join(
                _csv_cell(v)
                for v in (
                    c.name,
                    c.lhs,
                    c.rhs,
                    c.relation,
                    c.slack,
                    c.holds,
                    c.equality_expected,
                    c.tolerance,
                    c.skipped_reason,
                )
            )
        )
    return "\n".join(lines) + "\n"
