"""Standard-representation Dirac matrices and the momentum-parametrized bundle.

Conventions, all in natural units (hbar = c = 1), metric (+,-,-,-):

* gamma0 = diag(1,1,-1,-1); gamma_k carries sigma_k off-diagonal.
* gamma5 = -i gamma0 gamma1 gamma2 gamma3. The sign is the one for which
  the massless Hamiltonian equals the angular-velocity form w.S with
  w = -2 gamma5 p; the module refuses to import if that identity breaks.
* energy uses the positive branch p0 = +sqrt(p^2 + m^2); negative-energy
  physics enters only through the sign operator and its projectors.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numkernel import DomainError, ShapeError, frob

SIGMA1 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULI = (SIGMA1, SIGMA2, SIGMA3)


def _block_diag(a, b):
    out = np.zeros((4, 4), dtype=np.complex128)
    out[:2, :2] = a
    out[2:, 2:] = b
    return out


def _block_off(a, b):
    out = np.zeros((4, 4), dtype=np.complex128)
    out[:2, 2:] = a
    out[2:, :2] = b
    return out


GAMMA0 = _block_diag(np.eye(2), -np.eye(2))
GAMMAS = tuple(_block_off(s, -s) for s in PAULI)
GAMMA5 = -1j * GAMMA0 @ GAMMAS[0] @ GAMMAS[1] @ GAMMAS[2]
ALPHA = tuple(GAMMA0 @ g for g in GAMMAS)
SPIN = tuple(0.5 * _block_diag(s, s) for s in PAULI)


def _check_sign_conventions():
    # massless H = w.S with w = -2 gamma5 p must hold as a matrix identity;
    # the opposite gamma5 sign flips it and would silently corrupt every
    # downstream precession and even-velocity result.
    h = ALPHA[2]
    ws = -2.0 * GAMMA5 @ SPIN[2]
    if frob(h - ws) > 1e-14:
        raise AssertionError(
            "gamma5 sign convention broken: massless Hamiltonian does not "
            "equal the angular-velocity form"
        )


_check_sign_conventions()


@dataclass(frozen=True)
class FourMomentum:
    """On-shell four-momentum: mass, spatial momentum, derived energy."""

    mass: float
    p: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float).reshape(3).copy()
        p.flags.writeable = False
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "mass", float(self.mass))
        if self.mass < 0:
            raise DomainError(f"mass must be nonnegative, got {self.mass}")
        if self.mass == 0 and self.p_mag == 0:
            raise DomainError("massless momentum with p = 0 is excluded")

    @property
    def p_mag(self) -> float:
        return float(np.linalg.norm(self.p))

    @property
    def energy(self) -> float:
        return float(np.sqrt(self.mass**2 + self.p @ self.p))

    @property
    def direction(self) -> np.ndarray:
        if self.p_mag == 0:
            raise DomainError("rest-frame momentum has no direction")
        return self.p / self.p_mag

    @property
    def contraction_param(self) -> float:
        """m^2 / p0^2, the scalar deforming su(2) toward e(2)."""
        return self.mass**2 / self.energy**2

    @property
    def four_vector(self) -> np.ndarray:
        return np.array([self.energy, *self.p], dtype=np.complex128)

    def opposite(self) -> "FourMomentum":
        return FourMomentum(self.mass, -self.p)


@dataclass(frozen=True)
class DiracOperatorSet:
    """The operator bundle {gamma, gamma5, alpha, S, H, sign, projectors} at fixed (m, p)."""

    momentum: FourMomentum
    gamma0: np.ndarray
    gamma1: np.ndarray
    gamma2: np.ndarray
    gamma3: np.ndarray
    gamma5: np.ndarray
    alpha: tuple
    spin: tuple
    hamiltonian: np.ndarray
    energy_sign: np.ndarray
    pi_plus: np.ndarray
    pi_minus: np.ndarray

    @property
    def gammas(self) -> tuple:
        return (self.gamma1, self.gamma2, self.gamma3)


def build_dirac_set(fm: FourMomentum) -> DiracOperatorSet:
    """Assemble H = alpha.p + m gamma0, the sign-of-energy operator and projectors."""
    h = sum(fm.p[k] * ALPHA[k] for k in range(3)) + fm.mass * GAMMA0
    lam = h / fm.energy
    eye = np.eye(4, dtype=np.complex128)
    return DiracOperatorSet(
        momentum=fm,
        gamma0=GAMMA0,
        gamma1=GAMMAS[0],
        gamma2=GAMMAS[1],
        gamma3=GAMMAS[2],
        gamma5=GAMMA5,
        alpha=ALPHA,
        spin=SPIN,
        hamiltonian=h,
        energy_sign=lam,
        pi_plus=0.5 * (eye + lam),
        pi_minus=0.5 * (eye - lam),
    )


def even_part(a: np.ndarray, dset: DiracOperatorSet) -> np.ndarray:
    """Energy-sign-diagonal part of a 4x4 operator: (a + lam a lam) / 2."""
    a = np.asarray(a, dtype=np.complex128)
    if a.shape != (4, 4):
        raise ShapeError(f"even_part needs a 4x4 matrix, got {a.shape}")
    lam = dset.energy_sign
    return 0.5 * (a + lam @ a @ lam)


def even_part_via_projectors(a: np.ndarray, dset: DiracOperatorSet) -> np.ndarray:
    """Same projection written as Pi+ a Pi+ + Pi- a Pi- (cross-check route)."""
    a = np.asarray(a, dtype=np.complex128)
    return dset.pi_plus @ a @ dset.pi_plus + dset.pi_minus @ a @ dset.pi_minus


def random_direction(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_momentum(rng: np.random.Generator,
                    mass_range=(0.1, 4.0),
                    p_range=(0.1, 8.0),
                    massless: bool = False) -> FourMomentum:
    """Seeded on-shell momentum, log-uniform in mass and |p|, random direction."""
    pmag = float(np.exp(rng.uniform(np.log(p_range[0]), np.log(p_range[1]))))
    if massless:
        mass = 0.0
    else:
        mass = float(np.exp(rng.uniform(np.log(mass_range[0]), np.log(mass_range[1]))))
    return FourMomentum(mass, pmag * random_direction(rng))
