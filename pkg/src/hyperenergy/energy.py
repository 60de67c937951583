"""Energy functionals of a k-uniform hypergraph.

Incidence energy BE (sum of incidence-matrix singular values, computed as
sum of square roots of the signless Laplacian spectrum), signless
Laplacian energy QE = E(Q - d I) with d the average degree, the line
multigraph energy, and the closed forms that make several of them
predictable: complete k-graphs, and power hypergraphs obtained by vertex
blow-up plus edge padding.

Wherever a value admits two computation routes (BE through Q versus
through the line multigraph; QE through |lambda - d| versus through the
count of eigenvalues above d) both routes are exposed so they can serve
as mutual oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import constructions
from ._fmt import flat_json
from .errors import InvalidParams, InvalidPowerParams, ParityViolation
from .hypergraph import Hypergraph, degree_summary, zagreb_index
from .spectra import (
    DEFAULT_TOLERANCES,
    Tolerances,
    clamp_psd,
    matrix_energy,
    sym_eigenvalues,
)

__all__ = [
    "EnergyReport",
    "PowerSpectrumClosedForm",
    "PowerEnergyValue",
    "incidence_energy",
    "incidence_energy_via_line",
    "complete_be_closed_form",
    "signless_laplacian_energy",
    "omega",
    "qe_via_omega",
    "power_q_spectrum_closed_form",
    "power_qe_closed_form",
    "parity_classification",
    "line_energy",
    "energy_report",
    "report_json",
]

PARITY_EVEN = "even-integer"
PARITY_ODD = "odd-integer"
PARITY_UNDETECTED = "irrational-or-undetected"


def _q_spectrum(h: Hypergraph, tol: Tolerances) -> np.ndarray:
    return sym_eigenvalues(constructions.signless_laplacian(h), tol).as_array()


def avg_degree(h: Hypergraph) -> float:
    return (h.k * h.m) / h.n


def incidence_energy(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Sum of the square roots of the signless Laplacian eigenvalues."""
    if h.m == 0:
        return 0.0
    values = clamp_psd(_q_spectrum(h, tol), tol)
    return float(np.sqrt(values).sum())


def incidence_energy_via_line(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Independent route to the incidence energy: sum of sqrt(k + lambda)
    over the line-multigraph spectrum."""
    spec = sym_eigenvalues(constructions.line_multigraph(h), tol).as_array()
    shifted = clamp_psd(h.k + spec, tol)
    return float(np.sqrt(shifted).sum())


def complete_be_closed_form(n: int, k: int) -> float:
    """Incidence energy of the complete k-graph on n vertices.

    Its signless Laplacian spectrum is rho = k * C(n-1, k-1) once and
    lambda = C(n-2, k-1) with multiplicity n-1, so the energy is
    sqrt(rho) + (n-1) * sqrt(lambda).
    """
    if not 2 <= k <= n:
        raise InvalidParams(f"need 2 <= k <= n, got k={k}, n={n}")
    rho = k * math.comb(n - 1, k - 1)
    lam = math.comb(n - 2, k - 1)
    return _sqrt_int(rho) + (n - 1) * _sqrt_int(lam)


def _sqrt_int(value: int) -> float:
    if value == 0:
        return 0.0
    if value.bit_length() <= 1023:
        return math.sqrt(value)
    # beyond float range: halve the exponent in log space
    return math.exp(0.5 * math.log(value))


def signless_laplacian_energy(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """QE = sum of |lambda_i(Q) - d| with d the average degree."""
    if h.m == 0:
        return 0.0
    return float(np.abs(_q_spectrum(h, tol) - avg_degree(h)).sum())


def omega(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> int:
    """Number of signless Laplacian eigenvalues >= the average degree."""
    values = _q_spectrum(h, tol)
    return int(np.count_nonzero(values >= avg_degree(h) - tol.omega_tie))


def qe_via_omega(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Second route to QE: twice the sum of the eigenvalues at or above the
    average degree, minus twice their count times the average degree."""
    values = _q_spectrum(h, tol)
    d = avg_degree(h)
    w = int(np.count_nonzero(values >= d - tol.omega_tie))
    return float(2.0 * values[:w].sum() - 2.0 * w * d)


@dataclass(frozen=True)
class PowerSpectrumClosedForm:
    """Predicted Q-spectrum of a padded blow-up, as (value, multiplicity)
    pairs: the t scaled-and-shifted positive base eigenvalues, the pad
    weight r - k*s with multiplicity m - t, and zero for the rest."""

    values_with_multiplicity: tuple[tuple[float, int], ...]
    t: int

    def expand_descending(self) -> np.ndarray:
        out: list[float] = []
        for value, mult in self.values_with_multiplicity:
            out.extend([value] * mult)
        return np.sort(np.asarray(out, dtype=float))[::-1]


def power_q_spectrum_closed_form(
    h: Hypergraph, s: int, r: int, tol: Tolerances = DEFAULT_TOLERANCES
) -> PowerSpectrumClosedForm:
    """Closed-form Q-spectrum of the power hypergraph, requiring r > k*s."""
    if s < 1 or r <= h.k * s:
        raise InvalidPowerParams(f"need s >= 1 and r > k*s = {h.k * s}, got s={s}, r={r}")
    base = clamp_psd(_q_spectrum(h, tol), tol)
    positive = base[base > 0.0]
    t = int(positive.size)
    pad = r - h.k * s
    entries = [(float(s * value + pad), 1) for value in positive]
    entries.append((float(pad), h.m - t))
    entries.append((0.0, (pad - 1) * h.m + s * h.n))
    return PowerSpectrumClosedForm(tuple(entries), t)


@dataclass(frozen=True)
class PowerEnergyValue:
    """QE of a padded blow-up: exact in cases 'a' and 'b'; in case 'c' the
    paper-true strict upper bound 2*k*s*m with is_exact False."""

    case: str
    value: float
    is_exact: bool


def power_qe_closed_form(h: Hypergraph, s: int, r: int) -> PowerEnergyValue:
    """Signless Laplacian energy of the power hypergraph, requiring r > k*s.

    The case splits on how the pad weight r - k*s compares with the average
    degree of the power hypergraph; the comparison is exact in integers.
    """
    if s < 1 or r <= h.k * s:
        raise InvalidPowerParams(f"need s >= 1 and r > k*s = {h.k * s}, got s={s}, r={r}")
    vertices = h.n * s + (r - h.k * s) * h.m
    lhs = (r - h.k * s) * vertices  # (r - ks) vs r*m / vertices, cleared of the denominator
    rhs = r * h.m
    if lhs > rhs:
        value = 2.0 * r * h.m * (1.0 - h.m / vertices)
        return PowerEnergyValue("a", value, True)
    if lhs == rhs:
        return PowerEnergyValue("b", float(2 * h.k * s * h.m), True)
    return PowerEnergyValue("c", float(2 * h.k * s * h.m), False)


def parity_classification(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> str:
    """Classify the incidence energy as even-integer, odd-integer, or
    irrational-or-undetected.

    A detected integer must obey the parity law (even when k is even,
    matching the parity of m when k is odd); a contradiction means a bug
    somewhere in the numerics and raises ParityViolation.
    """
    be = incidence_energy(h, tol)
    nearest = round(be)
    if abs(be - nearest) >= tol.parity_window:
        return PARITY_UNDETECTED
    value = int(nearest)
    if h.k % 2 == 0:
        expected_even = True
    else:
        expected_even = h.m % 2 == 0
    if (value % 2 == 0) != expected_even:
        raise ParityViolation(
            f"incidence energy detected as integer {value}, but k={h.k}, m={h.m} "
            f"require an {'even' if expected_even else 'odd'} value"
        )
    return PARITY_EVEN if value % 2 == 0 else PARITY_ODD


def line_energy(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Energy of the line multigraph adjacency."""
    return matrix_energy(constructions.line_multigraph(h), tol)


@dataclass(frozen=True)
class EnergyReport:
    """Every scalar invariant of one hypergraph, in one flat record."""

    n: int
    m: int
    k: int
    be: float
    qe: float
    line_energy: float
    omega: int
    avg_degree: float
    spectral_radius_q: float
    zagreb: int
    zfrak: float
    parity: str


def energy_report(h: Hypergraph, tol: Tolerances = DEFAULT_TOLERANCES) -> EnergyReport:
    summary = degree_summary(h)
    q_values = _q_spectrum(h, tol)
    return EnergyReport(
        n=h.n,
        m=h.m,
        k=h.k,
        be=incidence_energy(h, tol),
        qe=signless_laplacian_energy(h, tol),
        line_energy=line_energy(h, tol) if h.m else 0.0,
        omega=omega(h, tol),
        avg_degree=summary.avg_degree,
        spectral_radius_q=float(np.abs(q_values).max()),
        zagreb=summary.zagreb,
        zfrak=h.k * math.sqrt(summary.zagreb / h.n),
        parity=parity_classification(h, tol),
    )


def report_json(report: EnergyReport) -> str:
    """Flat JSON object; floats carry 17 significant digits."""
    return flat_json(
        [
            ("n", report.n),
            ("m", report.m),
            ("k", report.k),
            ("be", report.be),
            ("qe", report.qe),
            ("line_energy", report.line_energy),
            ("omega", report.omega),
            ("avg_degree", report.avg_degree),
            ("spectral_radius_q", report.spectral_radius_q),
            ("zagreb", report.zagreb),
            ("zfrak", report.zfrak),
            ("parity", report.parity),
        ]
    )
