"""Exact counting of Bethe states for twisted and untwisted spin chains."""
from .characters import (CharacterInverse, apply_shift, explain, partial_inverse, super_character,
                         super_inverse, verma_inverse)
from .counting import (BranchedLabel, CompletenessReport, branch_label, completeness_check, count_table,
                       default_charge,
                       dim_branched, dim_irrep, hook_length_mu, mixed_completeness, mu_from_coefficients,
                       mu_partial, mu_table, mu_untwisted, reconstruct_c, weyl_extension, young_from_magnons)
from .errors import BetheCountError, ConsistencyError, SizeGuardError, ValidationError
from .occupancy import (SpinChainSpec, brute_force_c, brute_force_table, c_coefficient, c_table, kondo_c,
                        kondo_nested, mixed_c, schur_specialized, site_factor, tj_c, total_states)
from .peeling import mu_oracle, peel
from .poly import SignedPolynomial, add, coefficient, mul, pow, series_reciprocal
from .rootsys import (PositiveRoot, SubalgebraDecomposition, SuperPositiveRoot, TwistConfiguration,
                      decomposition_from_subset, parse_root, parse_root_list, parse_zeros, positive_roots,
                      preserved_roots, simple_roots, super_positive_roots)
from .superalg import dim_super, mu_super, sl11_closed_form, super_completeness, tj_closed_form

__version__ = "0.1.0"
