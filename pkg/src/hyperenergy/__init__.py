"""Energies of k-uniform hypergraphs via their matrix representations.

Core objects: a canonical :class:`~hyperenergy.hypergraph.Hypergraph`, the
derived matrices (incidence, signless Laplacian, line/clique multigraph
adjacencies, subdivision graph), the energy functionals built on them, and
a certification harness that measures every known identity and bound on
concrete instances.
"""

__version__ = "0.1.0"

from .errors import (
    DuplicateEdge,
    EdgeNotFound,
    EdgeWrongSize,
    EmptyHypergraph,
    HyperenergyError,
    InvalidParams,
    InvalidPowerParams,
    NegativeGramEigenvalue,
    NoConvergence,
    ParityViolation,
    ParseError,
    TooManyEdges,
    VertexOutOfRange,
)
from .hypergraph import (
    DEFAULT_EDGE_LIMIT,
    DegreeSummary,
    Hypergraph,
    SplitMix64,
    add_edge,
    complement,
    complete_k_graph,
    degree_summary,
    disjoint_edges,
    format_hg,
    is_linear,
    is_regular,
    load_hg,
    new_validated,
    parse_hg,
    random_uniform,
    remove_edge,
    save_hg,
    zagreb_index,
)
from .spectra import (
    DEFAULT_TOLERANCES,
    Spectrum,
    Tolerances,
    clamp_psd,
    matrix_energy,
    singular_values,
    spectral_radius,
    sym_eigenvalues,
)
from .constructions import (
    clique_multigraph,
    degree_matrix,
    incidence_matrix,
    line_multigraph,
    line_multigraph_edge_count,
    power_hypergraph,
    signless_laplacian,
    subdivision_adjacency,
)
from .energy import (
    EnergyReport,
    PowerEnergyValue,
    PowerSpectrumClosedForm,
    complete_be_closed_form,
    energy_report,
    incidence_energy,
    incidence_energy_via_line,
    line_energy,
    omega,
    parity_classification,
    power_q_spectrum_closed_form,
    power_qe_closed_form,
    qe_via_omega,
    signless_laplacian_energy,
)
from .certify import CertificationReport, CheckResult, run_all
