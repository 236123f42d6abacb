"""Two-electron center-of-mass sector: squared total even spin, singlet
state, analyzer correlations and CHSH scans.

Particle 1 carries momentum p, particle 2 carries -p. Basis states label
spin along the common axis n = p/|p| (particle 1's direction); in that
basis the squared total even spin reproduces the expected block pattern
and the singlet is its unique positive-energy null vector for m > 0. The
singlet average of the normalized analyzer product has the closed form

    E(a, b) = -(a_par . b_par + (m^2/p0^2) a_perp . b_perp) / (4 |s_a s_b|)

which reduces to -a.b for analyzers perpendicular to p. The parallel/perp
split refers only to n and is insensitive to which particle's triad is
used (it enters through (a.n)(b.n) and a.b - (a.n)(b.n) only).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import DiracOperatorSet, FourMomentum, build_dirac_set
from .even_spin import (
    EvenSpinSet,
    build_even_spin,
    direction_spin_eigenvalue,
    positive_energy_spin_states,
)
from .little_algebra import FrameTriad, build_triad
from .numkernel import (
    DomainError,
    InvariantViolation,
    commutator,
    frob,
    hermitian_eigensystem,
    kron,
)

S_A_CUTOFF = 1e-14
ORACLE_TOL = 1e-10


def _dot(vec, mats):
    return sum(float(vec[k]) * mats[k] for k in range(3))


@dataclass(frozen=True)
class TwoParticleState:
    """16-component amplitude vector over basis (particle 1 at p) x (particle 2 at -p)."""

    amplitudes: np.ndarray
    description: str

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=np.complex128).reshape(16).copy()
        amp.flags.writeable = False
        object.__setattr__(self, "amplitudes", amp)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class BellSetting:
    """Analyzer directions; primed pair optional (CHSH)."""

    a: np.ndarray
    b: np.ndarray
    a_prime: np.ndarray | None = None
    b_prime: np.ndarray | None = None

    def __post_init__(self):
        for name in ("a", "b", "a_prime", "b_prime"):
            v = getattr(self, name)
            if v is None:
                continue
            v = np.asarray(v, dtype=float).reshape(3)
            if abs(np.linalg.norm(v) - 1.0) > 1e-12:
                raise DomainError(f"analyzer {name} must be a unit vector")
            v = v.copy()
            v.flags.writeable = False
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class TwoParticleSystem:
    """Everything the two-particle operations share at one (m, p)."""

    fm: FourMomentum
    triad: FrameTriad
    dset1: DiracOperatorSet
    dset2: DiracOperatorSet
    es1: EvenSpinSet
    es2: EvenSpinSet
    total_sq: np.ndarray
    basis: tuple  # (up1 up2, up1 dn2, dn1 up2, dn1 dn2), common-axis labels


def build_two_particle_system(fm: FourMomentum,
                              triad: FrameTriad | None = None) -> TwoParticleSystem:
    """Assemble both single-particle sectors and the squared total even spin."""
    if triad is None:
        triad = build_triad(fm.p, rest=fm.p_mag == 0)
    dset1 = build_dirac_set(fm)
    dset2 = build_dirac_set(fm.opposite())
    es1 = build_even_spin(dset1, triad=triad)
    triad2 = build_triad(fm.opposite().p, rest=fm.p_mag == 0)
    es2 = build_even_spin(dset2, triad=triad2)

    eye = np.eye(4, dtype=np.complex128)
    total = [kron(es1.sp[i], eye) + kron(eye, es2.sp[i]) for i in range(3)]
    total_sq = sum(t @ t for t in total)

    up1, dn1 = positive_energy_spin_states(fm, triad)
    up2, dn2 = positive_energy_spin_states(fm.opposite(), triad)
    basis = (np.kron(up1, up2), np.kron(up1, dn2), np.kron(dn1, up2), np.kron(dn1, dn2))
    return TwoParticleSystem(fm=fm, triad=triad, dset1=dset1, dset2=dset2,
                             es1=es1, es2=es2, total_sq=total_sq, basis=basis)


def build_two_particle_even_spin(fm: FourMomentum,
                                 system: TwoParticleSystem | None = None) -> np.ndarray:
    """The 16x16 squared total even spin (sum over squared components)."""
    if system is None:
        system = build_two_particle_system(fm)
    return system.total_sq


def total_spin_spectrum(fm: FourMomentum,
                        system: TwoParticleSystem | None = None):
    """Clustered eigenvalues of the squared total even spin."""
    if system is None:
        system = build_two_particle_system(fm)
    h12 = kron(system.dset1.hamiltonian, np.eye(4)) + kron(np.eye(4), system.dset2.hamiltonian)
    if frob(commutator(system.total_sq, h12)) > 1e-10 * max(1.0, frob(h12)):
        raise InvariantViolation("squared total even spin does not commute with H1 + H2")
    return hermitian_eigensystem(system.total_sq)


def helicity_block_matrix(fm: FourMomentum,
                          system: TwoParticleSystem | None = None,
                          tol: float = 1e-11,
                          strict: bool = True) -> np.ndarray:
    """Squared total even spin projected on the positive-energy spin basis.

    Expected pattern: diag(1+k, k, k, 1+k) with k = m^2/p0^2 and the middle
    pair coupled by k.
    """
    if system is None:
        system = build_two_particle_system(fm)
    basis = system.basis
    block = np.array([[bi.conj() @ system.total_sq @ bj for bj in basis] for bi in basis])
    kappa = fm.contraction_param
    expected = np.array([
        [1 + kappa, 0, 0, 0],
        [0, kappa, kappa, 0],
        [0, kappa, kappa, 0],
        [0, 0, 0, 1 + kappa],
    ], dtype=np.complex128)
    if strict and frob(block - expected) > tol * max(1.0, frob(expected)):
        raise InvariantViolation(
            f"two-particle block pattern off by {frob(block - expected):.3e}"
        )
    return block


def singlet_state(fm: FourMomentum,
                  system: TwoParticleSystem | None = None,
                  tol: float = 1e-10) -> TwoParticleState:
    """(up1 dn2 - dn1 up2)/sqrt(2); annihilated by the squared total even spin."""
    if system is None:
        system = build_two_particle_system(fm)
    _, updn, dnup, _ = system.basis
    amplitudes = (updn - dnup) / np.sqrt(2.0)
    state = TwoParticleState(amplitudes=amplitudes,
                             description="spin singlet, common-axis labels")
    residual = float(np.linalg.norm(system.total_sq @ state.amplitudes))
    if residual > tol:
        raise InvariantViolation(f"singlet not annihilated: residual {residual:.3e}")
    return state


def correlation_formula(fm: FourMomentum, a, b) -> float:
    """Closed-form singlet average of the normalized analyzer product."""
    a = np.asarray(a, dtype=float).reshape(3)
    b = np.asarray(b, dtype=float).reshape(3)
    s_a = direction_spin_eigenvalue(fm, a)
    s_b = direction_spin_eigenvalue(fm, b)
    if s_a <= S_A_CUTOFF or s_b <= S_A_CUTOFF:
        raise DomainError("normalized observable undefined: zero spin eigenvalue")
    if fm.p_mag == 0:
        # contraction parameter is 1 at rest, so the split is immaterial
        return -float(a @ b) / (4 * s_a * s_b)
    n = fm.direction
    par = float((a @ n) * (b @ n))
    perp = float(a @ b) - par
    return -(par + fm.contraction_param * perp) / (4 * s_a * s_b)


def bell_correlation(fm: FourMomentum, setting: BellSetting,
                     system: TwoParticleSystem | None = None,
                     tol: float = ORACLE_TOL,
                     strict: bool = True) -> tuple[float, float]:
    """Closed form vs direct 16-dimensional contraction of the singlet average.

    Returns (E_formula, E_numeric); with strict=True the two must agree
    within tol and both lie in [-1, 1].
    """
    if system is None:
        system = build_two_particle_system(fm)
    state = singlet_state(fm, system=system)
    s_a = direction_spin_eigenvalue(fm, setting.a)
    s_b = direction_spin_eigenvalue(fm, setting.b)
    if s_a <= S_A_CUTOFF or s_b <= S_A_CUTOFF:
        raise DomainError("normalized observable undefined: zero spin eigenvalue")
    obs = kron(_dot(setting.a, system.es1.sp) / s_a,
               _dot(setting.b, system.es2.sp) / s_b)
    psi = state.amplitudes
    e_numeric = float((psi.conj() @ obs @ psi).real)
    e_formula = correlation_formula(fm, setting.a, setting.b)
    if strict:
        if abs(e_numeric - e_formula) > tol:
            raise InvariantViolation(
                f"correlation oracle disagreement: formula {e_formula} vs "
                f"numeric {e_numeric}"
            )
        if abs(e_formula) > 1.0 + 1e-12 or abs(e_numeric) > 1.0 + 1e-12:
            raise InvariantViolation("correlation left [-1, 1]")
    return e_formula, e_numeric


def chsh_value(fm: FourMomentum, setting: BellSetting,
               system: TwoParticleSystem | None = None) -> float:
    """Signed CHSH combination E(a,b) - E(a,b') + E(a',b) + E(a',b')."""
    if setting.a_prime is None or setting.b_prime is None:
        raise DomainError("CHSH needs both primed analyzer directions")
    if system is None:
        system = build_two_particle_system(fm)
    e = {}
    for key, x, y in (("ab", setting.a, setting.b),
                      ("ab'", setting.a, setting.b_prime),
                      ("a'b", setting.a_prime, setting.b),
                      ("a'b'", setting.a_prime, setting.b_prime)):
        e[key] = bell_correlation(fm, BellSetting(a=x, b=y), system=system)[1]
    return e["ab"] - e["ab'"] + e["a'b"] + e["a'b'"]


def plane_direction(triad: FrameTriad, plane: str, angle_rad: float) -> np.ndarray:
    """Analyzer direction at an angle inside a scan plane.

    'perp': angle from m-hat toward l-hat in the transverse plane;
    'mixed': angle from n toward m-hat (the plane containing the momentum).
    """
    c, s = np.cos(angle_rad), np.sin(angle_rad)
    if plane == "perp":
        return c * triad.m + s * triad.l
    if plane == "mixed":
        return c * triad.n + s * triad.m
    raise DomainError(f"unknown scan plane: {plane}")


def direction_angles(triad: FrameTriad, v) -> tuple[float, float]:
    """Spherical angles (degrees): theta from n, phi from m-hat toward l-hat."""
    v = np.asarray(v, dtype=float).reshape(3)
    theta = np.degrees(np.arccos(np.clip(v @ triad.n, -1.0, 1.0)))
    phi = np.degrees(np.arctan2(v @ triad.l, v @ triad.m)) % 360.0
    return float(theta), float(phi)


def correlation_scan(fm: FourMomentum, plane: str, step_deg: float = 5.0,
                     system: TwoParticleSystem | None = None) -> list[tuple]:
    """E(a, b) rows with a fixed at angle 0 in the plane and b swept.

    Rows: (m, p_mag, a_theta, a_phi, b_theta, b_phi, E_formula, E_numeric,
    abs_diff). Rows whose normalized observable is undefined are skipped.
    """
    if system is None:
        system = build_two_particle_system(fm)
    triad = system.triad
    a = plane_direction(triad, plane, 0.0)
    rows = []
    for angle in np.arange(0.0, 360.0, step_deg):
        b = plane_direction(triad, plane, np.radians(angle))
        try:
            e_formula, e_numeric = bell_correlation(
                fm, BellSetting(a=a, b=b), system=system)
        except DomainError:
            continue
        a_th, a_ph = direction_angles(triad, a)
        b_th, b_ph = direction_angles(triad, b)
        rows.append((fm.mass, fm.p_mag, a_th, a_ph, b_th, b_ph,
                     e_formula, e_numeric, abs(e_formula - e_numeric)))
    return rows


def chsh_scan(fm: FourMomentum, plane: str, step_deg: float = 5.0,
              system: TwoParticleSystem | None = None) -> list[tuple]:
    """CHSH rows: the canonical 0/90/45/135 quadruple rotated through the plane.

    Rows: (m, p_mag, a_theta, a_phi, ap_theta, ap_phi, b_theta, b_phi,
    bp_theta, bp_phi, S, violation) with violation = |S| > 2. Rows with an
    undefined correlation are marked invalid (S = nan, violation = False).
    """
    if system is None:
        system = build_two_particle_system(fm)
    triad = system.triad
    rows = []
    for base in np.arange(0.0, 360.0, step_deg):
        angles = [base, base + 90.0, base + 45.0, base + 135.0]
        a, ap, b, bp = (plane_direction(triad, plane, np.radians(x)) for x in angles)
        try:
            s_val = chsh_value(fm, BellSetting(a=a, b=b, a_prime=ap, b_prime=bp),
                               system=system)
            violation = abs(s_val) > 2.0
        except DomainError:
            s_val, violation = float("nan"), False
        coords = []
        for v in (a, ap, b, bp):
            coords.extend(direction_angles(triad, v))
        rows.append((fm.mass, fm.p_mag, *coords, s_val, violation))
    return rows


CORRELATION_HEADER = ("m", "p_mag", "a_theta", "a_phi", "b_theta", "b_phi",
                      "E_formula", "E_numeric", "abs_diff")
CHSH_HEADER = ("m", "p_mag", "a_theta", "a_phi", "ap_theta", "ap_phi",
               "b_theta", "b_phi", "bp_theta", "bp_phi", "S", "violation")
