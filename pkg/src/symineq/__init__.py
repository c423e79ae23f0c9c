"""Exact-arithmetic verification of subset-product bounds.

For a positive vector, the weighted sum of product-over-sum terms across all
k-subsets is bounded by a scaled elementary symmetric polynomial. This
package checks that bound, its supporting lemmas, and the rearrangement
identity behind it in exact rational arithmetic, and ships float-side fuzzing
and maximization harnesses whose verdicts are always re-certified exactly.
"""

from symineq.exact import (
    ExactScalar,
    PositiveVector,
    ScalarParseError,
    VectorError,
    make_vector,
    parse_scalar,
    render_scalar,
)
from symineq.symfun import (
    elementary_symmetric,
    iterate_k_subsets,
    subset_product,
    subset_sum,
)
from symineq.inequality import (
    EqualityClass,
    InequalityReport,
    Statement,
    Violation,
    check_main,
    check_pairwise_lemma,
    check_proof_identity,
    check_reciprocal_lemma,
    classify_equality,
    lhs_main,
    normalize,
    proof_identity,
    report_from_record,
    report_to_record,
    rhs_main,
)
from symineq.search import (
    Distribution,
    FuzzReport,
    SearchConfig,
    SearchResult,
    fuzz,
    maximize_ratio,
    ratio,
)

__version__ = "0.1.0"

__all__ = [
    "ExactScalar",
    "PositiveVector",
    "ScalarParseError",
    "VectorError",
    "make_vector",
    "parse_scalar",
    "render_scalar",
    "elementary_symmetric",
    "iterate_k_subsets",
    "subset_product",
    "subset_sum",
    "EqualityClass",
    "InequalityReport",
    "Statement",
    "Violation",
    "check_main",
    "check_pairwise_lemma",
    "check_proof_identity",
    "check_reciprocal_lemma",
    "classify_equality",
    "lhs_main",
    "normalize",
    "proof_identity",
    "report_from_record",
    "report_to_record",
    "rhs_main",
    "Distribution",
    "FuzzReport",
    "SearchConfig",
    "SearchResult",
    "fuzz",
    "maximize_ratio",
    "ratio",
    "__version__",
]
