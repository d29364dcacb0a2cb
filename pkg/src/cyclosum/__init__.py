"""Exact computations with vanishing sums of roots of unity.

The library works in the integer group ring of a cyclic group of order m: an
element encodes a formal integer combination of m-th roots of unity, and the
vanishing sums are the nonnegative elements killed by the evaluation map onto
cyclotomic integers.  Provided here: exact group-ring arithmetic, kernel
membership with constructive certificates, the achievable weight set, an
exhaustive census of minimal vanishing sums up to rotation, and the
verification routines built on the census.
"""

from .groupring import (
    Factorization,
    GroupRingElement,
    element_from_json,
    element_to_json,
    factorize,
    format_element,
    parse_element,
    sigma_subgroup,
    subgroup_exponents,
)
from .cyclotomic import (
    ComplexEstimate,
    CyclotomicInteger,
    IntPolynomial,
    KernelCertificate,
    NotInKernelError,
    complex_eval,
    constrained_decompose,
    coset_split,
    cyclotomic_poly,
    euler_phi,
    format_poly,
    in_kernel,
    kernel_decompose,
    phi_map,
    reduction_table,
    squarefree_reduce,
    two_prime_decompose,
)
from .weights import (
    CharCheckInput,
    CharCheckVerdict,
    WeightSet,
    char_constraint_check,
    frobenius_bound,
    is_weight,
    smallest_positive_weight,
    weight_set,
)
from .census import (
    CensusRecord,
    MinimalityWitness,
    TransferReport,
    VerificationReport,
    asymmetric_seed,
    check_transfer,
    classify,
    enumerate_minimal,
    is_minimal,
    oracle_agreement,
    record_from_json_line,
    record_to_json_line,
    records_from_jsonl,
    records_to_jsonl,
    symmetric_cover,
    verify_lower_bound,
    verify_uniqueness,
    weight_plus_one_form,
    weight_plus_one_templates,
)

__version__ = "0.1.0"
