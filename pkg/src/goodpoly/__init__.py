"""Good polynomials over finite fields and the LRC codes they carry."""

from .errors import FormatError, PreconditionError, ResourceLimitError
from .gf import (FieldElement, FieldSpec, QuadraticExtension, make_field,
                 nth_root_of_unity, parse_field_spec, quadratic_extension)
from .polyring import (Factorization, Poly, count_distinct_roots_in_field,
                       factor, frobenius_power, poly_gcd, roots_in_field)
from .goodness import (GoodnessReport, fibers, gamma, gamma_oracle,
                       goodness_report, infer_group_order, value_histogram)
from .constructions import (AdditiveSubgroup, annihilator, dickson,
                            dickson_shifted, dickson_sum_formula,
                            family_members, linearized_power, normalize,
                            omega_stabilizes, span_subgroup,
                            subgroup_power_polynomial)
from .theorems import (DivisibilityWitness, LinearizedBoundsReport,
                       dickson_gamma_closed_form, extension_feasibility,
                       galois_index_lower_bound, linearized_power_bounds,
                       square_shift_count)
from .lrc import (Codeword, LrcCode, build_code, encode, erasure_decode,
                  local_repair, min_distance_bruteforce)

__version__ = "0.1.0"
