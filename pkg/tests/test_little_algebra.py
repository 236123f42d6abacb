import numpy as np
import pytest

from evenspin.dirac import FourMomentum, build_dirac_set, random_momentum
from evenspin.little_algebra import (
    bispinor_generators,
    build_triad,
    cartesian_little_vector,
    contraction_scan,
    four_vector_generators,
    invariance_rotation,
    little_generators,
    structure_constant,
    verify_invariance,
    verify_little_algebra,
    verify_vector_bracket,
)
from evenspin.numkernel import DomainError, InvariantViolation, commutator, frob

X, Y, Z = np.eye(3)


def assert_valid_triad(t):
    for v in (t.m, t.l, t.n):
        assert abs(np.linalg.norm(v) - 1.0) < 1e-14
    assert abs(t.m @ t.l) < 1e-14
    assert abs(t.m @ t.n) < 1e-14
    assert abs(t.l @ t.n) < 1e-14
    assert np.allclose(np.cross(t.n, t.m), t.l, atol=1e-14)
    # right-handed: m x l = n
    assert np.allclose(np.cross(t.m, t.l), t.n, atol=1e-14)


class TestTriad:
    def test_momentum_along_z(self):
        t = build_triad(np.array([0.0, 0.0, 5.0]))
        assert np.allclose(t.n, Z)
        assert_valid_triad(t)

    def test_momentum_along_x(self):
        t = build_triad(np.array([3.0, 0.0, 0.0]))
        assert np.allclose(t.n, X)
        assert_valid_triad(t)

    def test_rest_frame_canonical(self):
        t = build_triad(np.zeros(3), rest=True)
        assert np.allclose(t.m, X) and np.allclose(t.l, Y) and np.allclose(t.n, Z)

    def test_rest_without_flag_rejected(self):
        with pytest.raises(DomainError):
            build_triad(np.zeros(3))

    def test_random_directions(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            assert_valid_triad(build_triad(rng.normal(size=3)))

    def test_reference_override_and_rotation(self):
        p = np.array([1.0, 2.0, 0.5])
        t = build_triad(p, reference=np.array([0.0, 1.0, 0.0]))
        assert_valid_triad(t)
        assert_valid_triad(build_triad(p).rotated(0.7))

    def test_parallel_reference_rejected(self):
        with pytest.raises(DomainError):
            build_triad(Z, reference=Z)


class TestLittleGenerators:
    def test_rest_frame_reduces_to_rotations(self):
        fm = FourMomentum(1.0, np.zeros(3))
        triad = build_triad(fm.p, rest=True)
        gens = four_vector_generators()
        lg = little_generators(gens, fm, triad)
        assert np.allclose(lg.l1, gens.j[0]) and np.allclose(lg.l3, gens.j[2])
        assert lg.contraction_param == 1.0

    def test_contraction_param_example(self):
        fm = FourMomentum(1.0, np.array([0.0, 0.0, 2.0]))
        lg = little_generators(bispinor_generators(), fm, build_triad(fm.p))
        assert abs(lg.contraction_param - 0.2) < 1e-15

    def test_brackets_both_representations(self):
        rng = np.random.default_rng(32)
        for _ in range(25):
            fm = random_momentum(rng)
            triad = build_triad(fm.p)
            dset = build_dirac_set(fm)
            for gens in (four_vector_generators(), bispinor_generators(dset)):
                lg = little_generators(gens, fm, triad)
                report = verify_little_algebra(lg)
                assert report.ok and report.max_residual < 1e-12

    def test_structure_constant_matches(self):
        rng = np.random.default_rng(33)
        for _ in range(25):
            fm = random_momentum(rng)
            lg = little_generators(bispinor_generators(), fm, build_triad(fm.p))
            assert abs(structure_constant(lg) - fm.contraction_param) < 1e-12

    def test_massless_translation_subalgebra(self):
        fm = FourMomentum(0.0, np.array([0.0, 0.0, 1.0]))
        lg = little_generators(bispinor_generators(), fm, build_triad(fm.p))
        assert frob(commutator(lg.l1, lg.l2)) < 1e-14

    def test_bispinor_non_hermitian_off_axis(self):
        fm = FourMomentum(1.0, np.array([0.0, 0.0, 2.0]))
        lg = little_generators(bispinor_generators(), fm, build_triad(fm.p))
        assert frob(lg.l1 - lg.l1.conj().T) > 0.1
        assert frob(lg.l2 - lg.l2.conj().T) > 0.1
        assert frob(lg.l3 - lg.l3.conj().T) < 1e-14

    def test_violation_is_named(self):
        fm = FourMomentum(1.0, np.array([0.0, 0.0, 2.0]))
        lg = little_generators(bispinor_generators(), fm, build_triad(fm.p))
        broken = type(lg)(l1=lg.l1, l2=lg.l2, l3=lg.l3,
                          contraction_param=0.9, rep_tag=lg.rep_tag)
        with pytest.raises(InvariantViolation, match="bracket_12"):
            verify_little_algebra(broken)


class TestInvariance:
    def test_worked_example(self):
        fm = FourMomentum(1.0, np.array([0.0, 0.0, 2.0]))
        mu = np.array([0.3, 0.0, 0.0])
        nu = -np.cross(mu, fm.p) / fm.energy
        assert np.allclose(nu, [0.0, 0.6 / np.sqrt(5.0), 0.0])
        assert abs(nu[1] - 0.26832815729997476) < 1e-15
        report = verify_invariance(four_vector_generators(), fm, mu)
        assert report.ok

    def test_zero_parameter_is_identity(self):
        fm = FourMomentum(1.0, np.array([0.0, 0.0, 2.0]))
        lam = invariance_rotation(four_vector_generators(), fm, np.zeros(3))
        assert np.allclose(lam, np.eye(4), atol=1e-14)

    def test_parallel_mu_is_pure_rotation(self):
        fm = FourMomentum(1.0, np.array([0.0, 0.0, 2.0]))
        mu = np.array([0.0, 0.0, 0.8])
        lam = invariance_rotation(four_vector_generators(), fm, mu)
        p4 = fm.four_vector
        assert np.linalg.norm(lam @ p4 - p4) < 1e-12
        # time row/column untouched: no boost content
        assert np.allclose(lam[0], [1, 0, 0, 0], atol=1e-13)

    def test_random_pairs(self):
        rng = np.random.default_rng(34)
        gens = four_vector_generators()
        for _ in range(25):
            fm = random_momentum(rng)
            mu = rng.uniform(-2.0, 2.0, size=3)
            report = verify_invariance(gens, fm, mu)
            assert report.ok


class TestVectorBracket:
    def test_rest_frame_pure_rotation_algebra(self):
        fm = FourMomentum(1.0, np.zeros(3))
        gens = four_vector_generators()
        lvec = cartesian_little_vector(gens, fm)
        for i in range(3):
            a, b = (i + 1) % 3, (i + 2) % 3
            assert frob(commutator(lvec[a], lvec[b]) - 1j * gens.j[i]) < 1e-14

    def test_both_representations(self):
        for mass, p in ((1.0, [0.0, 0.0, 2.0]), (0.0, [0.0, 0.0, 1.0]),
                        (2.0, [0.3, -1.1, 0.7])):
            fm = FourMomentum(mass, np.array(p))
            triad = build_triad(fm.p)
            dset = build_dirac_set(fm)
            for gens in (four_vector_generators(), bispinor_generators(dset)):
                lg = little_generators(gens, fm, triad)
                report = verify_vector_bracket(lg, gens, fm, triad=triad)
                assert report.ok and report.max_residual < 1e-12


class TestContractionScan:
    def test_mass_scan_values(self):
        rows = contraction_scan("mass_to_zero", [1.0, 0.1, 0.01], fixed=1.0)
        for (m, pmag, param, ratio) in rows:
            want = m * m / (m * m + 1.0)
            assert np.isclose(param, want, rtol=1e-13, atol=0)
            assert np.isclose(ratio, want, rtol=1e-11, atol=1e-15)
        assert np.isclose(rows[0][2], 0.5, rtol=1e-14)
        assert np.isclose(rows[1][2], 0.009900990099009901, rtol=1e-13)
        assert np.isclose(rows[2][2], 9.999000099990002e-05, rtol=1e-13)

    def test_momentum_scan_values(self):
        rows = contraction_scan("momentum_to_infinity", [1.0, 10.0, 100.0], fixed=1.0)
        for (m, pmag, param, ratio) in rows:
            want = 1.0 / (1.0 + pmag * pmag)
            assert np.isclose(param, want, rtol=1e-13, atol=0)

    def test_contraction_equivalence(self):
        # same m/|p| ratio must give the same contraction parameter
        ratios = [2.0, 1.0, 0.5, 0.1, 0.01, 0.001]
        mass_rows = contraction_scan("mass_to_zero", ratios, fixed=1.0)
        mom_rows = contraction_scan("momentum_to_infinity",
                                    [1.0 / r for r in ratios], fixed=1.0)
        for (_, _, pm, _), (_, _, pp, _) in zip(mass_rows, mom_rows):
            assert abs(pm - pp) < 1e-14

    def test_rest_row_is_pure_rotation_algebra(self):
        rows = contraction_scan("mass_to_zero", [1.0], fixed=0.0)
        assert rows[0][2] == 1.0
        assert abs(rows[0][3] - 1.0) < 1e-14

    def test_monotone_decay(self):
        rows = contraction_scan("momentum_to_infinity",
                                np.geomspace(0.1, 1000.0, 25), fixed=1.0)
        params = [r[2] for r in rows]
        assert all(a > b for a, b in zip(params, params[1:]))

    def test_rejects_bad_grid(self):
        with pytest.raises(DomainError):
            contraction_scan("mass_to_zero", [1.0, -2.0])
        with pytest.raises(DomainError):
            contraction_scan("sideways", [1.0])
