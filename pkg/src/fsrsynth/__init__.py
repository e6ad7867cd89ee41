"""Shortest feedback shift registers over Z_p and Z_{p^r} via minimal Groebner bases."""

from .errors import (
    FSRError,
    InvariantError,
    ModeMismatchError,
    NonInvertibleError,
    OracleCostError,
    OrderingError,
    TruncationError,
    ZeroDecompositionError,
    ZeroVectorError,
)
from .oracle import OracleResult, oracle_complexity_profile, oracle_min_char, oracle_shortest_feedback
from .parametrize import (
    CoefficientDomain,
    FreeTerm,
    ParamDescriptor,
    SynthesisReport,
    analyze,
    bidirectional_filter,
    complexity_profile,
    count_parametrization,
    enumerate_min_char_reciprocal,
    enumerate_shortest_feedback,
    make_monic,
    normalize_constant,
    raw_enumeration,
)
from .poly import (
    POT,
    TOP,
    LeadingData,
    ModuleSpec,
    Monomial,
    MonomialOrder,
    Poly,
    PolyRowVec,
    compare_monomials,
    discrepancy,
    leading_data,
    membership,
    parse_poly,
    render_poly,
)
from .ring import Modulus, Residue, inverse, is_unit, order, p_adic_expansion, unit_decompose
from .synthesis import (
    Mode,
    StepTrace,
    SynthState,
    apply_update,
    init_state,
    invariant_violations,
    states,
    step,
    synthesize,
)
from .verify import (
    PBasis,
    check_p_generator_sequence,
    check_p_plm,
    is_minimal_grobner_field,
    p_basis_order,
    p_expand,
    p_generator_witnesses,
    p_plm_counterexample,
)

__version__ = "0.1.0"
