"""Exact discrete exterior calculus on the clique complex of a finite graph.

Forms are alternating rational-valued tensors supported on cliques; the
package provides their wedge algebra, the exterior derivative, coordinate
expansions through characteristic functions, rational cohomology, and a
checker that certifies any operator satisfying the derivation axioms equals
the exterior derivative.
"""

from .errors import CapacityError, DomainError, GraphFormsError, ParseError
from .graph import BUILTIN_NAMES, Graph
from .cliques import CliqueComplex
from .forms import Form, Tensor, chi, constant, format_rational, parse_rational, random_form
from .calculus import (
    chi_expansion,
    clique_cutoff,
    coefficient_form,
    dchi,
    dchi_chain,
    expansion_terms,
    expansion_tuples,
    exterior_derivative,
    is_closed,
    iterated_wedge,
    scalar_wedge,
    skew_symmetrize,
    tensor_product,
    wedge,
)
from .cohomology import (
    CoboundaryMatrix,
    betti,
    coboundary_matrix,
    euler_characteristic,
    matrix_product,
    rational_rank,
)
from .uniqueness import (
    CHECK_NAMES,
    AxiomReport,
    CheckResult,
    Operator,
    ProofTrace,
    TableOperator,
    certify_equality,
    check_axioms,
    derivative_operator,
    mutant_catalogue,
    operator_table_json,
    proof_trace,
    replay_witness,
)
from .selftest import run_selftest

__version__ = "0.1.0"

__all__ = [
    "CHECK_NAMES",
    "AxiomReport",
    "BUILTIN_NAMES",
    "CapacityError",
    "CheckResult",
    "CliqueComplex",
    "CoboundaryMatrix",
    "DomainError",
    "Form",
    "Graph",
    "GraphFormsError",
    "Operator",
    "ParseError",
    "ProofTrace",
    "TableOperator",
    "Tensor",
    "betti",
    "certify_equality",
    "check_axioms",
    "chi",
    "chi_expansion",
    "clique_cutoff",
    "coboundary_matrix",
    "coefficient_form",
    "constant",
    "dchi",
    "dchi_chain",
    "derivative_operator",
    "euler_characteristic",
    "expansion_terms",
    "expansion_tuples",
    "exterior_derivative",
    "format_rational",
    "is_closed",
    "iterated_wedge",
    "matrix_product",
    "mutant_catalogue",
    "operator_table_json",
    "parse_rational",
    "proof_trace",
    "random_form",
    "rational_rank",
    "replay_witness",
    "run_selftest",
    "scalar_wedge",
    "skew_symmetrize",
    "tensor_product",
    "wedge",
]
