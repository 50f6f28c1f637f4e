"""frobcrit: exact Frobenius-splitting criteria for spherical orbit closures.

The package works entirely on the weight level with exact rational
arithmetic.  Modules:

- ``rootsys``: root systems, weights, pairings
- ``weyl``: Weyl group elements, enumeration, Steinberg-type identities
- ``embed``: subgroup embeddings as restriction matrices, plus builders
- ``charalg``: weight multiplicities, dimensions, branching
- ``criteria``: the splitting criteria and their reports
- ``registry``: known good-filtration pairs and worked examples
- ``cli``: the ``frobcrit`` command
"""

from .charalg import branch, freudenthal, fundamental_weight_surjectivity_scan, weyl_dim
from .criteria import (
    CriterionInput,
    CriterionReport,
    check_main,
    conjugated_borel_check,
    divisor_weights,
    lemma53_min_p,
    thm41_hypotheses,
)
from .embed import Embedding, detect_twist, restrict, rho_h, validate
from .registry import lookup_donkin
from .rootsys import (
    RootSystem,
    Weight,
    build_root_system,
    cartan_pairing,
    is_dominant,
    is_regular_dominant,
    rho,
    rho_J,
    root_to_weight,
)
from .weyl import (
    EnumerationCapExceeded,
    WeylElement,
    enumerate_parabolic,
    from_word,
    longest_element,
    steinberg_weights,
    verify_st_decomp,
)

__version__ = "0.1.0"

__all__ = [
    "branch", "freudenthal", "fundamental_weight_surjectivity_scan", "weyl_dim",
    "CriterionInput", "CriterionReport", "check_main", "conjugated_borel_check",
    "divisor_weights", "lemma53_min_p", "thm41_hypotheses",
    "Embedding", "detect_twist", "restrict", "rho_h", "validate",
    "lookup_donkin",
    "RootSystem", "Weight", "build_root_system", "cartan_pairing",
    "is_dominant", "is_regular_dominant", "rho", "rho_J", "root_to_weight",
    "EnumerationCapExceeded", "WeylElement", "enumerate_parabolic", "from_word",
    "longest_element", "steinberg_weights", "verify_st_decomp",
    "__version__",
]
