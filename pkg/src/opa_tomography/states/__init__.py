from .gaussian import gaussian_loss, gaussian_marginal, gaussian_wigner, make_gaussian, rotate
from .models import (
    CAT, CONVENTION, FOCK, GAUSSIAN_KINDS, PURE_DETERMINANT, SQUEEZED_FOCK, SQUEEZED_VACUUM, STATE_KINDS, VACUUM,
    GaussianState, QuadratureConvention, StateSpec, WignerGrid, rotation,
)
from .phase_space import State, apply_pre_amp_loss, marginal_density, prepare_state, sample_quadrature, sampling_table
from .wigner import amplify_wigner, build_wigner_grid, default_extent, grid_loss, grid_marginal, wigner_function
