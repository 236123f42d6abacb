import numpy as np
import pytest

from evenspin.dirac import FourMomentum, build_dirac_set, random_momentum
from evenspin.even_spin import build_even_spin, positive_energy_spin_states
from evenspin.extended import (
    angular_velocity,
    build_even_velocity_set,
    even_angular_velocity,
    massless_extended_set,
    robinson_circle_samples,
    robinson_radius,
    verify_precession,
)
from evenspin.little_algebra import build_triad
from evenspin.numkernel import DomainError, commutator, frob

EXAMPLE = FourMomentum(1.0, np.array([0.0, 0.0, 2.0]))


def dot(vec, mats):
    return sum(float(vec[k]) * mats[k] for k in range(3))


def op_dot(a, b):
    return sum(a[k] @ b[k] for k in range(3))


class TestPrecession:
    def test_rest_frame_spin_conserved(self):
        dset = build_dirac_set(FourMomentum(1.0, np.zeros(3)))
        report = verify_precession(dset)
        assert report.ok
        for i in range(3):
            assert frob(commutator(dset.hamiltonian, dset.spin[i])) < 1e-14

    def test_moving_example(self):
        dset = build_dirac_set(EXAMPLE)
        report = verify_precession(dset)
        assert report.ok and report.max_residual < 1e-12
        # helicity component conserved
        assert frob(commutator(dset.hamiltonian, dset.spin[2])) < 1e-13

    def test_massless_joint_consistency(self):
        fm = FourMomentum(0.0, np.array([0.0, 0.0, 1.0]))
        dset = build_dirac_set(fm)
        assert verify_precession(dset).ok
        omega = angular_velocity(dset)
        assert frob(dset.hamiltonian - op_dot(omega, dset.spin)) < 1e-14

    def test_random_momenta(self):
        rng = np.random.default_rng(51)
        for _ in range(20):
            assert verify_precession(build_dirac_set(random_momentum(rng))).ok


class TestEvenVelocity:
    def test_example_identity(self):
        dset = build_dirac_set(EXAMPLE)
        es = build_even_spin(dset)
        quantities, report = build_even_velocity_set(dset, es=es)
        assert report.ok
        factor = 1.0 + EXAMPLE.mass**2 / EXAMPLE.p_mag**2
        assert abs(factor - 1.25) < 1e-15
        h_rebuilt = factor * op_dot(quantities.omega_even, es.sp)
        assert frob(dset.hamiltonian - h_rebuilt) < 1e-11

    def test_even_and_odd_spin_absorption(self):
        dset = build_dirac_set(EXAMPLE)
        es = build_even_spin(dset)
        omega_even = even_angular_velocity(dset)
        assert frob(op_dot(omega_even, es.sp) - op_dot(omega_even, dset.spin)) < 1e-11

    def test_massless_collapses_to_odd_velocity(self):
        fm = FourMomentum(0.0, np.array([0.0, 0.0, 1.0]))
        dset = build_dirac_set(fm)
        quantities, report = build_even_velocity_set(dset)
        assert report.ok
        for i in range(3):
            assert frob(quantities.omega_even[i] - quantities.omega[i]) < 1e-13

    def test_linear_vanishing_of_even_odd_gap(self):
        # ||Omega - omega|| <= C m at fixed |p|; empirical constant frozen
        C = 4.5
        pvec = np.array([0.0, 0.0, 1.0])
        for mass in (0.2, 0.1, 0.01, 0.001):
            dset = build_dirac_set(FourMomentum(mass, pvec))
            omega = angular_velocity(dset)
            omega_even = even_angular_velocity(dset)
            gap = max(frob(omega_even[i] - omega[i]) for i in range(3))
            assert gap <= C * mass

    def test_random_massive(self):
        rng = np.random.default_rng(52)
        for _ in range(15):
            dset = build_dirac_set(random_momentum(rng))
            _, report = build_even_velocity_set(dset)
            assert report.ok

    def test_rest_frame_rejected(self):
        dset = build_dirac_set(FourMomentum(1.0, np.zeros(3)))
        with pytest.raises(DomainError):
            build_even_velocity_set(dset)


class TestMasslessExtension:
    def test_radius_values(self):
        assert abs(robinson_radius(1.0, 1.0) - 1.0) < 1e-16
        assert abs(robinson_radius(0.5, 2.0) - 0.25) < 1e-16

    def test_radius_momentum_product(self):
        for s in (0.5, 1.0, 1.5, 2.0):
            for pmag in np.geomspace(1e-3, 1e3, 13):
                r = robinson_radius(s, pmag)
                assert abs(pmag * r - s) <= 4e-16 * s

    def test_dirac_instance(self):
        fm = FourMomentum(0.0, np.array([0.0, 0.0, 1.0]))
        dset = build_dirac_set(fm)
        quantities, report = massless_extended_set(dset, helicity=0.5)
        assert report.ok
        psi_plus, _ = positive_energy_spin_states(fm, build_triad(fm.p))
        omega_sq = op_dot(quantities.omega, quantities.omega)
        assert frob(omega_sq - 4.0 * (fm.p @ fm.p) * np.eye(4)) < 1e-14
        expect = (psi_plus.conj() @ quantities.inertia @ omega_sq @ psi_plus).real
        assert abs(expect - 1.0) < 1e-12
        assert abs(quantities.radius - 0.5) < 1e-16

    def test_hamiltonian_forms(self):
        fm = FourMomentum(0.0, np.array([0.3, -0.4, 1.2]))
        dset = build_dirac_set(fm)
        _, report = massless_extended_set(dset, helicity=0.5)
        assert report.ok and report.max_residual < 1e-12

    def test_massive_rejected(self):
        with pytest.raises(DomainError):
            massless_extended_set(build_dirac_set(EXAMPLE))


class TestRobinsonSamples:
    def test_single_frame_geometry(self):
        fm = FourMomentum(0.0, np.array([0.0, 0.0, 1.0]))
        rows = robinson_circle_samples(fm, helicity=1.0, n_samples=4, n_frames=1)
        assert len(rows) == 4
        for (_, t, x, y, z, _) in rows:
            assert t == 0.0 and abs(z) < 1e-15
            assert abs(np.hypot(x, y) - 1.0) < 1e-12

    def test_radius_invariant_off_axis(self):
        fm = FourMomentum(0.0, np.array([0.6, -0.3, 0.9]))
        n = fm.direction
        rows = robinson_circle_samples(fm, helicity=0.5, n_samples=16, n_frames=3)
        r = abs(robinson_radius(0.5, fm.p_mag))
        by_frame = {}
        for (frame, t, x, y, z, _) in rows:
            by_frame.setdefault(frame, []).append(np.array([x, y, z]))
        for frame, pts in by_frame.items():
            center = np.mean(pts, axis=0)
            for pt in pts:
                rel = pt - center
                axial = (rel @ n) * n
                assert abs(np.linalg.norm(rel - axial) - r) < 1e-12

    def test_centroid_advances_at_light_speed(self):
        fm = FourMomentum(0.0, np.array([0.0, 0.0, 2.0]))
        rows = robinson_circle_samples(fm, helicity=1.0, n_samples=8, n_frames=2,
                                       dt=0.125)
        first = np.mean([[x, y, z] for (f, _, x, y, z, _) in rows if f == 0], axis=0)
        second = np.mean([[x, y, z] for (f, _, x, y, z, _) in rows if f == 1], axis=0)
        assert np.allclose(second - first, 0.125 * fm.direction, atol=1e-12)

    def test_phase_sense_follows_helicity(self):
        fm = FourMomentum(0.0, np.array([0.0, 0.0, 1.0]))
        plus = robinson_circle_samples(fm, helicity=1.0, n_samples=4, n_frames=2)
        minus = robinson_circle_samples(fm, helicity=-1.0, n_samples=4, n_frames=2)
        dplus = plus[4][5] - plus[0][5]
        dminus = minus[4][5] - minus[0][5]
        assert dplus > 0 and dminus < 0
        assert abs(dplus + dminus) < 1e-15

    def test_input_validation(self):
        fm = FourMomentum(0.0, np.array([0.0, 0.0, 1.0]))
        with pytest.raises(DomainError):
            robinson_circle_samples(EXAMPLE, 0.5, 8, 1)
        with pytest.raises(DomainError):
            robinson_circle_samples(fm, 0.5, 2, 1)
        with pytest.raises(DomainError):
            robinson_circle_samples(fm, 0.5, 8, 0)
