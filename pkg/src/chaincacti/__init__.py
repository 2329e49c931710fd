"""Exact independence polynomials of chain cactus graphs.

A chain cactus is a connected graph whose blocks are cycles strung in a row,
consecutive cycles sharing one cut vertex.  This package builds them from
compact specs, computes independence polynomials by three independent engines
(brute-force enumeration, pivot recursion, and a linear transfer scan),
provides closed forms for path/cycle/ortho/meta families, and verifies the
dominance and extremality facts about attachment positions exhaustively.
"""

from .chain_model import (
    ChainSpec,
    LabeledGraph,
    SpecError,
    VertexLabel,
    build,
    enumerate_specs,
    parse_spec,
    reversed_spec,
    validate,
)
from .closed_forms import (
    FibLucas,
    alpha_meta,
    alpha_ortho,
    count_mis_meta,
    count_mis_ortho,
    cycle_poly,
    fib_lucas,
    meta_poly,
    meta_recurrence_coeffs,
    ortho_poly,
    path_poly,
    psi_path,
)
from .engine import (
    BRUTE_FORCE_CAP,
    TransferState,
    VertexCapError,
    arc_poly,
    indpoly_bruteforce,
    indpoly_chain,
    indpoly_chain_minus_last_vertex,
    indpoly_recursive,
    transfer_state,
)
from .extremal import (
    SweepEntry,
    SweepReport,
    Verdict,
    sweep,
    verify_meta_deletion_max,
    verify_ortho_deletion_min,
    verify_psi_deletion_ordering,
)
from .polynomial import Dominance, UniPoly, dominance

__version__ = "0.1.0"

__all__ = [
    "BRUTE_FORCE_CAP",
    "ChainSpec",
    "Dominance",
    "FibLucas",
    "LabeledGraph",
    "SpecError",
    "SweepEntry",
    "SweepReport",
    "TransferState",
    "UniPoly",
    "Verdict",
    "VertexCapError",
    "VertexLabel",
    "alpha_meta",
    "alpha_ortho",
    "arc_poly",
    "build",
    "count_mis_meta",
    "count_mis_ortho",
    "cycle_poly",
    "dominance",
    "enumerate_specs",
    "fib_lucas",
    "indpoly_bruteforce",
    "indpoly_chain",
    "indpoly_chain_minus_last_vertex",
    "indpoly_recursive",
    "meta_poly",
    "meta_recurrence_coeffs",
    "ortho_poly",
    "parse_spec",
    "path_poly",
    "psi_path",
    "reversed_spec",
    "sweep",
    "transfer_state",
    "validate",
    "verify_meta_deletion_max",
    "verify_ortho_deletion_min",
    "verify_psi_deletion_ordering",
    "__version__",
]
