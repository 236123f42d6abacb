"""Momentum-parametrized little-group algebra, even spin operator and
relativistic Bell correlations for the free Dirac equation."""

__version__ = "0.1.0"

from .bell import (
    BellSetting,
    TwoParticleState,
    bell_correlation,
    build_two_particle_even_spin,
    build_two_particle_system,
    chsh_scan,
    chsh_value,
    helicity_block_matrix,
    singlet_state,
)
from .dirac import (
    DiracOperatorSet,
    FourMomentum,
    build_dirac_set,
    even_part,
    even_part_via_projectors,
)
from .even_spin import (
    EvenSpinSet,
    build_even_spin,
    build_pauli_lubanski,
    direction_spin_eigenvalue,
    even_spin_eigenvectors,
    even_spin_spectrum,
    limit_inequivalence_scan,
    polarization_density,
    verify_even_spin_algebra,
)
from .extended import (
    ExtendedQuantities,
    build_even_velocity_set,
    massless_extended_set,
    robinson_circle_samples,
    robinson_radius,
    verify_precession,
)
from .little_algebra import (
    FrameTriad,
    LittleGenerators,
    LorentzGenerators,
    bispinor_generators,
    build_triad,
    contraction_scan,
    four_vector_generators,
    little_generators,
    verify_invariance,
    verify_little_algebra,
    verify_vector_bracket,
)
from .numkernel import (
    ContractError,
    DomainError,
    InvariantViolation,
    ShapeError,
    SpinSpectrum,
    Tolerance,
    approx_eq,
    commutator,
    anticommutator,
    expm,
    hermitian_eigensystem,
    kernel_backend,
    kron,
)
from .report import CheckRecord, CheckReport

__all__ = [name for name in dir() if not name.startswith("_")]
