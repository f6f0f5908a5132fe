"""Aitchison (log-ratio) Hilbert-space geometry on quantum density matrices."""

from .basis import basis_hamiltonian, basis_state, coordinates, full_basis, labels, synthesize
from .linalg import (
    EPS_PD,
    hermitian_eig,
    hs_inner,
    kron,
    matrix_exp_h,
    matrix_log_pd,
    random_density,
    random_unitary,
)
from .modular import (
    inner_via_modular,
    left_mult,
    log_modular,
    relative_entropy,
    relative_modular,
    right_mult,
)
from .states import (
    arc,
    clr,
    clr_inverse,
    conjugate,
    density_state,
    distance,
    gibbs,
    inner,
    maximally_mixed,
    negate,
    norm,
    perturb,
    power,
    subtract,
    tensor,
)

__version__ = "0.1.0"
