"""Closed-form evaluation and validation of non-Gaussian integrals of
homogeneous forms: SL(n)-invariant contractions, Ward-identity machinery,
hypergeometric kernels, and independent quadrature oracles."""

from .errors import CalibrationError, DomainError, InputError, IntdiscError
from .forms import (FormShape, SymmetricForm, invariant_count, is_positive_definite,
                    load_form, make_form, parse_form_text, random_form,
                    random_posdef_quartic)
from .invariants import (CalibrationRecord, InvariantSet, compute_invariants,
                         derive_25, discriminant, discriminant_23_classical,
                         invariant_spoly, vertical_invariants_24)
from .jnr import (BranchValue, SingularityReport, asymptotic_value,
                  classify_singularity, eval_23, eval_24, eval_25, eval_33,
                  eval_gaussian, vertical_combination_24)
from .oracle import (FitResult, QuadratureResult, fit_constants,
                     integrate_exp_form, integrate_weight, radial_oracle)
from .polyalg import SparsePoly, discriminant_uni, resultant
from .specfun import (G25Point, Hyp2F1Params, gamma_fn, gauss_2f1,
                      hyp2f1_integral, integral_g25, pochhammer, series_g25)
from .tensornet import (ContractionDiagram, ContractionPlan, builtin_diagram,
                        contract_numeric, contract_symbolic, plan_order)
from .wardops import (ActionTable, DiffOperator, WardQuadruple,
                      apply_operator_exact, build_O0_25, build_O4_25,
                      chain_rule_apply, fd_mixed_second, gl_generator,
                      ode_residual_24, ode_residual_33, pde_residuals_25,
                      ward_pairs, ward_residual)

__version__ = "0.1.0"
