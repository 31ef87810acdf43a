"""Skew-polynomial approximant bases over F_{q^m}[x; sigma] and the
decoders built on them: interleaved Gabidulin (rank metric), lifted
interleaved Gabidulin (subspace metric), and skew / linearized
Reed-Solomon (skew / sum-rank metric)."""

from .fields import Automorphism, ExtField, get_field, new_field
from .skewpoly import SkewPoly, SkewPolyRing, llcm, skew_ring
from .skewmatrix import SkewPolyMatrix
from .approxbasis import (left_m_basis, left_pm_basis, m_basis, pm_basis,
                          right_m_basis, right_pm_basis,
                          verify_approximant_basis)
from .opeval import op_annihilator, op_eval, op_interpolate, op_mpe
from .remeval import (p_independent, rem_annihilator, rem_eval,
                      rem_interpolate, rem_mpe)
from .interpsolver import (AffineRootSpace, module_basis, normalize_points,
                           vector_interpolate, vector_root_find)
from .outcomes import DecodeOutcome
from .rankcodes import (IGCode, ig_decode, ig_encode, make_ig_code,
                        rank_error_channel, rank_weight)
from .subspacecodes import (LIGCode, lig_decode, lig_encode, make_lig_code,
                            operator_channel, subspace_distance)
from .sumrankcodes import (LinRSCode, SkewRSCode, bivariate_rem_interpolate,
                           build_linearized_rs, isometry_map, lin_rs_decode,
                           lin_rs_encode, make_skew_rs_code, skew_rs_decode,
                           skew_rs_encode, skew_weight, sum_rank_channel,
                           sum_rank_weight)

__version__ = "0.1.0"
