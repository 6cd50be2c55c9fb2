# flake8: noqa
# coding=utf-8
# Copyright 2020 George Mihaila.

__version__ = "0.1.0"

# make sure warnings are imported
import warnings
# always show deprecation warnings
warnings.simplefilter('always', DeprecationWarning)

from .configuration import (CONVENTION_ALIASES,
                            DEFAULT_TOLERANCES,
                            S_CONVENTIONS,
                            RunConfig,
                            Tolerances,
                            resolve_convention)
from .logging_functions import (custom_logger)

# linear algebra kernel
from .linalg_functions import (ConvergenceError,
                               DimensionError,
                               NotHermitianError,
                               PreconditionError,
                               decompose,
                               hermitian_eig,
                               hermitian_split,
                               is_hermitian,
                               kron,
                               operator_basis,
                               orthonormal_basis,
                               partial_trace,
                               partial_transpose,
                               singular_values)

# states
from .state_functions import (DensityMatrix,
                              Ket,
                              adjacent_levels_ket,
                              bell,
                              density_matrix,
                              maximally_entangled_ket,
                              ppt_min_eigenvalue,
                              pure_state,
                              random_product_state,
                              rho_b,
                              schmidt_weight,
                              werner)

# witnesses
from .witness_functions import (LinearWitness,
                                NonlinearWitness,
                                PositiveMap,
                                apply_extended,
                                choi_map,
                                detecting_witness,
                                eval_linear,
                                eval_nonlinear,
                                find_nonlinear_advantage,
                                map_adjoint,
                                nonlinear_extend,
                                sampled_minimum,
                                separable_bound,
                                transpose_map,
                                witness_from_map,
                                witness_from_ppt)

# detector model
from .loophole_functions import (DetectorModel,
                                 MeasuredTriple,
                                 WitnessConstants,
                                 certify,
                                 linear_threshold,
                                 measured_from_true,
                                 minimum_efficiency,
                                 nonlinear_threshold,
                                 simulate_clicks,
                                 surface_grid,
                                 true_from_measured)

from .io_functions import (load_state,
                           read_csv,
                           save_json,
                           write_csv)
