"""deglab: exact-arithmetic experiments on the complexity of algebraic
dynamical systems on projective space -- degree growth and dynamical
degrees, Weil/canonical heights and arithmetic degrees of orbits, mod-p
degree behavior, and gcd-heights relative to small subvarieties.
"""

from .errors import DeglabError
from .hompoly import HomPoly, content, multi_gcd, poly_add, poly_compose, \
    poly_mul
from .matrices import IntMatrix, RealEnclosure, char_poly, exterior_power, \
    spectral_radius
from .monomial import MonomialMapA, check_log_concavity, degree_of_power, \
    dynamical_degrees, homogenize
from .points import ProjPointQ, weil_height
from .projmaps import (DegreeSequence, Dominance, DynamicalDegreeEstimate,
                       RationalMapPN, compose, degree_sequence,
                       dyndeg_estimate, is_dominant, parse_map)
from .heights import (ArithmeticDegreeEstimate, CanonicalHeightValue,
                      CriticalHeight, OrbitRecord, arith_degree_estimate,
                      canonical_height, critical_height_P1,
                      critical_points_P1, is_preperiodic, orbit,
                      shibata_ell_estimate)
from .modp import compare_dyndeg, degree_sequence_mod_p, reduce_map
from .gcdheights import SubvarietySpec, gcd_height, gcd_ratio_series

__version__ = "0.1.0"

__all__ = [
    "ArithmeticDegreeEstimate", "CanonicalHeightValue", "CriticalHeight",
    "DeglabError", "DegreeSequence", "Dominance", "DynamicalDegreeEstimate",
    "HomPoly", "IntMatrix", "MonomialMapA", "OrbitRecord", "ProjPointQ",
    "RationalMapPN", "RealEnclosure", "SubvarietySpec",
    "arith_degree_estimate", "canonical_height", "char_poly",
    "check_log_concavity", "compare_dyndeg", "compose", "content",
    "critical_height_P1", "critical_points_P1", "degree_of_power",
    "degree_sequence", "degree_sequence_mod_p", "dynamical_degrees",
    "dyndeg_estimate", "exterior_power", "gcd_height", "gcd_ratio_series",
    "homogenize", "is_dominant", "is_preperiodic", "multi_gcd", "orbit",
    "parse_map", "poly_add", "poly_compose", "poly_mul", "reduce_map",
    "shibata_ell_estimate", "spectral_radius", "weil_height",
]
