"""tgv: exact-arithmetic workbench for Turan-type Gilbert-Varshamov bounds.

Distance enumerators of explicit codes, clique-based asymptotic rate bounds
with numeric optimization, exact Delsarte-spectrum verification, improvement
condition sweeps, counterexample search, and finite-n brute-force oracles.
"""

from .bounds import (
    BoundMethod,
    BoundReport,
    bound_report,
    carowei_bound,
    entropy,
    gv_asymptotic,
    main_bound,
    optimize_x_carowei,
    optimize_x_main,
    x_delta,
)
from .codes import (
    Code,
    DistanceEnumerator,
    LocalDistanceEnumerator,
    Word,
    all_local_enumerators,
    distance_enumerator,
    hamming_distance,
    local_distance_enumerator,
    parse_code,
    power_enumerator,
    product_code,
    serialize_code,
)
from .conditions import (
    ConditionKind,
    ConditionSweep,
    MonotonicityReport,
    delta_of_z,
    lemma4_lhs,
    lemma4_lhs_delta_form,
    lemma8_lhs,
    monotonicity_probe,
    sweep,
    z_of_delta,
)
from .delsarte import (
    DelsarteSpectrum,
    krawtchouk,
    spectrum_by_krawtchouk,
    spectrum_by_substitution,
    verify_nonnegativity,
)
from .errors import ConsistencyError, GuardError, InputError, TgvError
from .oracle import (
    CliqueCertificate,
    DistanceGraph,
    build_graph,
    carowei_lower_bound,
    finite_size_bound,
    greedy_clique,
    turan_lower_bound,
    verify_instance,
)
from .rational import RationalPolynomial
from .search import (
    SearchConfig,
    SearchResult,
    Strategy,
    canonical_form,
    enumerate_canonical_codes,
    run_search,
)

__version__ = "0.1.0"

__all__ = [
    "BoundMethod",
    "BoundReport",
    "CliqueCertificate",
    "Code",
    "ConditionKind",
    "ConditionSweep",
    "ConsistencyError",
    "DelsarteSpectrum",
    "DistanceEnumerator",
    "DistanceGraph",
    "GuardError",
    "InputError",
    "LocalDistanceEnumerator",
    "MonotonicityReport",
    "RationalPolynomial",
    "SearchConfig",
    "SearchResult",
    "Strategy",
    "TgvError",
    "Word",
    "all_local_enumerators",
    "bound_report",
    "build_graph",
    "canonical_form",
    "carowei_bound",
    "carowei_lower_bound",
    "delta_of_z",
    "distance_enumerator",
    "entropy",
    "enumerate_canonical_codes",
    "finite_size_bound",
    "greedy_clique",
    "gv_asymptotic",
    "hamming_distance",
    "krawtchouk",
    "lemma4_lhs",
    "lemma4_lhs_delta_form",
    "lemma8_lhs",
    "local_distance_enumerator",
    "main_bound",
    "monotonicity_probe",
    "optimize_x_carowei",
    "optimize_x_main",
    "parse_code",
    "power_enumerator",
    "product_code",
    "run_search",
    "serialize_code",
    "spectrum_by_krawtchouk",
    "spectrum_by_substitution",
    "sweep",
    "turan_lower_bound",
    "verify_instance",
    "verify_nonnegativity",
    "x_delta",
    "z_of_delta",
]
