"""Even angular velocity, Hamiltonian identities, kinetic moment of inertia
and the circular-string geometry of massless fields.

The free spin precesses about w = -2 gamma5 p. The even part of w commutes
with H and turns the Hamiltonian into a precession-energy form

    H = (1 + m^2/|p|^2) Omega . S_p = beta^-2 Omega . S = beta^-2 Omega . S_p

with beta = |p|/p0. At m = 0 the Hamiltonian collapses to H = w.S = c.p
(c the even velocity), which defines a kinetic moment of inertia and a
radius r_s = s/|p| obeying |p| r_s = s: helicity fixes an extension.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import DiracOperatorSet, FourMomentum
from .even_spin import EvenSpinSet, build_even_spin, positive_energy_spin_states
from .little_algebra import FrameTriad, build_triad
from .numkernel import DomainError, Tolerance, commutator, frob
from .report import CheckReport


def _dot(vec, mats):
    return sum(float(vec[k]) * mats[k] for k in range(3))


def _op_dot(a_mats, b_mats):
    return sum(a_mats[k] @ b_mats[k] for k in range(3))


@dataclass(frozen=True)
class ExtendedQuantities:
    """Angular-velocity pair plus the massless extension data (None if massive)."""

    momentum: FourMomentum
    omega: tuple
    omega_even: tuple
    inertia: np.ndarray | None
    radius: float | None
    helicity: float | None


def angular_velocity(dset: DiracOperatorSet) -> tuple:
    """Precession angular velocity: omega_i = -2 p_i gamma5."""
    return tuple(-2.0 * float(p_i) * dset.gamma5 for p_i in dset.momentum.p)


def verify_precession(dset: DiracOperatorSet,
                      tol: Tolerance = Tolerance(abs_eps=1e-12, rel_eps=0.0),
                      strict: bool = True) -> CheckReport:
    """Heisenberg identity i[H, S] = omega x S, componentwise.

    Also records that the helicity component n.S commutes with H, which is
    the only conserved projection of the odd spin.
    """
    fm = dset.momentum
    h = dset.hamiltonian
    omega = angular_velocity(dset)
    report = CheckReport()
    scale = max(1.0, frob(h))
    for i in range(3):
        a, b = (i + 1) % 3, (i + 2) % 3
        lhs = 1j * commutator(h, dset.spin[i])
        rhs = omega[a] @ dset.spin[b] - omega[b] @ dset.spin[a]
        report.add(id=f"spin.precession.{'xyz'[i]}",
                   equation="i [H, S_i] = (omega x S)_i",
                   quote_tag="spin-precession",
                   residual=frob(lhs - rhs), tolerance=tol.bound(scale))
    if fm.p_mag > 0:
        helicity_op = _dot(fm.direction, dset.spin)
        report.add(id="spin.helicity_conserved",
                   equation="[H, n.S] = 0",
                   quote_tag="helicity-conserved",
                   residual=frob(commutator(h, helicity_op)),
                   tolerance=tol.bound(scale))
    if strict:
        report.require()
    return report


def even_angular_velocity(dset: DiracOperatorSet) -> tuple:
    """Even part of omega: prefactor (1 + m (gamma.n)/|p|) / (1 + m^2/|p|^2)."""
    fm = dset.momentum
    if fm.p_mag == 0:
        raise DomainError("even angular velocity is undefined at rest")
    omega = angular_velocity(dset)
    gn = _dot(fm.direction, dset.gammas)
    prefactor = (np.eye(4) + (fm.mass / fm.p_mag) * gn) / (1.0 + fm.mass**2 / fm.p_mag**2)
    return tuple(prefactor @ w for w in omega)


def build_even_velocity_set(dset: DiracOperatorSet,
                            es: EvenSpinSet | None = None,
                            tol: Tolerance = Tolerance(abs_eps=1e-11, rel_eps=0.0),
                            strict: bool = True) -> tuple:
    """Even angular velocity plus the precession-energy Hamiltonian checks.

    Returns (ExtendedQuantities, CheckReport). Verifies [Omega_i, H] = 0,
    the three-way identity H = beta^-2 Omega.S_p = beta^-2 Omega.S, and for
    m = 0 that Omega equals omega.
    """
    fm = dset.momentum
    if fm.p_mag == 0:
        raise DomainError("the even-velocity form needs |p| > 0")
    omega = angular_velocity(dset)
    omega_even = even_angular_velocity(dset)
    if es is None:
        es = build_even_spin(dset)

    h = dset.hamiltonian
    beta_inv_sq = fm.energy**2 / fm.p_mag**2
    report = CheckReport()
    scale = max(1.0, frob(h))
    for i in range(3):
        report.add(id=f"hamiltonian.omega_even_commutes.{'xyz'[i]}",
                   equation="[Omega_i, H] = 0",
                   quote_tag="even-velocity-commutes",
                   residual=frob(commutator(omega_even[i], h)),
                   tolerance=tol.bound(scale))
    report.add(id="hamiltonian.even_form_sp",
               equation="H = (1 + m^2/p^2) Omega . S_p",
               quote_tag="hamiltonian-even-form",
               residual=frob(h - beta_inv_sq * _op_dot(omega_even, es.sp)),
               tolerance=tol.bound(scale))
    report.add(id="hamiltonian.even_form_s",
               equation="Omega . S_p = Omega . S",
               quote_tag="hamiltonian-even-form",
               residual=frob(_op_dot(omega_even, es.sp) - _op_dot(omega_even, dset.spin)),
               tolerance=tol.bound(scale))
    if fm.mass == 0:
        resid = max(frob(omega_even[i] - omega[i]) for i in range(3))
        report.add(id="hamiltonian.omega_even_massless",
                   equation="Omega = omega at m = 0",
                   quote_tag="even-velocity-massless",
                   residual=resid, tolerance=tol.bound(scale))
    if strict:
        report.require()

    quantities = ExtendedQuantities(momentum=fm, omega=omega, omega_even=omega_even,
                                    inertia=None, radius=None, helicity=None)
    return quantities, report


def robinson_radius(helicity: float, p_mag: float) -> float:
    """Circle radius of a massless spinning field: r_s = s / |p| (hbar = 1)."""
    if p_mag <= 0:
        raise DomainError("radius needs |p| > 0")
    return float(helicity) / float(p_mag)


def massless_extended_set(dset: DiracOperatorSet, helicity: float = 0.5,
                          tol: Tolerance = Tolerance(abs_eps=1e-11, rel_eps=0.0),
                          strict: bool = True) -> tuple:
    """Even velocity, kinetic moment of inertia and radius for m = 0.

    Returns (ExtendedQuantities, CheckReport). Checks H = c.p as matrices,
    |p| r_s = s, and for the s = 1/2 instance H = I_k omega^2 on the
    positive-energy positive-helicity state.
    """
    fm = dset.momentum
    if fm.mass != 0:
        raise DomainError("extension data applies to massless momenta only")
    p = fm.p
    psq = float(p @ p)
    h = dset.hamiltonian
    omega = angular_velocity(dset)
    v_dot_p = _dot(p, dset.alpha)
    c_vec = tuple(v_dot_p * (p_i / psq) for p_i in p)
    inertia = float(helicity) * _dot(p, dset.spin) / psq
    radius = robinson_radius(helicity, fm.p_mag)

    report = CheckReport()
    scale = max(1.0, frob(h))
    report.add(id="hamiltonian.massless_spin_form",
               equation="H = omega . S at m = 0",
               quote_tag="hamiltonian-massless-spin",
               residual=frob(h - _op_dot(omega, dset.spin)),
               tolerance=tol.bound(scale))
    report.add(id="hamiltonian.massless_velocity_form",
               equation="H = c . p at m = 0",
               quote_tag="hamiltonian-massless-velocity",
               residual=frob(h - _dot(p, c_vec)),
               tolerance=tol.bound(scale))
    report.add(id="radius.uncertainty",
               equation="|p| r_s = s",
               quote_tag="radius-momentum-product",
               residual=abs(fm.p_mag * radius - float(helicity)),
               tolerance=max(tol.abs_eps, 4e-16 * abs(float(helicity))))
    if helicity == 0.5:
        omega_sq = _op_dot(omega, omega)
        triad = build_triad(p)
        psi_plus, _ = positive_energy_spin_states(fm, triad)
        action = inertia @ omega_sq @ psi_plus - h @ psi_plus
        report.add(id="hamiltonian.kinetic_inertia_state",
                   equation="(I_k omega^2 - H) psi = 0 on the +helicity +energy state",
                   quote_tag="kinetic-inertia",
                   residual=float(np.linalg.norm(action)),
                   tolerance=tol.bound(scale))
        expect_ik = float((psi_plus.conj() @ inertia @ omega_sq @ psi_plus).real)
        expect_h = float((psi_plus.conj() @ h @ psi_plus).real)
        report.add(id="hamiltonian.kinetic_inertia_expectation",
                   equation="<I_k omega^2> = <H>",
                   quote_tag="kinetic-inertia",
                   residual=abs(expect_ik - expect_h),
                   tolerance=tol.bound(scale))
    if strict:
        report.require()

    quantities = ExtendedQuantities(momentum=fm, omega=omega, omega_even=omega,
                                    inertia=inertia, radius=radius,
                                    helicity=float(helicity))
    return quantities, report


def robinson_circle_samples(fm: FourMomentum, helicity: float,
                            n_samples: int, n_frames: int,
                            dt: float | None = None,
                            triad: FrameTriad | None = None) -> list[tuple]:
    """Sample the light-speed circle traced by a massless spinning field.

    Points lie on a circle of radius r_s = s/|p| in the plane perpendicular
    to the momentum, the center advances along n at speed 1, and the phase
    advances at rate 1/r_s with the sense given by the helicity sign.
    Rows: (frame, t, x, y, z, phase).
    """
    if fm.mass != 0:
        raise DomainError("circle samples apply to massless momenta only")
    if n_samples < 3:
        raise DomainError("need at least 3 samples per circle")
    if n_frames < 1:
        raise DomainError("need at least one frame")
    radius = abs(robinson_radius(helicity, fm.p_mag))
    sense = 1.0 if helicity >= 0 else -1.0
    if dt is None:
        dt = radius / 8.0
    if triad is None:
        triad = build_triad(fm.p)

    rows = []
    for frame in range(int(n_frames)):
        t = frame * dt
        center = t * triad.n
        for k in range(int(n_samples)):
            phase = 2.0 * np.pi * k / n_samples + sense * t / radius
            point = center + radius * (np.cos(phase) * triad.m + np.sin(phase) * triad.l)
            rows.append((frame, t, float(point[0]), float(point[1]), float(point[2]), phase))
    return rows


ROBINSON_HEADER = ("frame", "t", "x", "y", "z", "phase")
