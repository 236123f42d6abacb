import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from evenspin.numkernel import (
    ContractError,
    ShapeError,
    Tolerance,
    anticommutator,
    approx_eq,
    commutator,
    expm,
    hermitian_eigensystem,
    kron,
)

SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)


def random_complex(rng, n, scale=1.0):
    return scale * (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))


def random_hermitian(rng, n, scale=1.0):
    a = random_complex(rng, n, scale)
    return 0.5 * (a + a.conj().T)


def series_expm(a, terms=60):
    """Independent oracle: raw Taylor sum, no scaling or squaring."""
    acc = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for k in range(1, terms):
        term = term @ a / k
        acc = acc + term
    return acc


class TestCommutator:
    def test_identity_commutes(self):
        rng = np.random.default_rng(0)
        b = random_complex(rng, 4)
        assert np.allclose(commutator(np.eye(4), b), 0.0)

    def test_pauli_relation(self):
        assert np.allclose(commutator(SIGMA1, SIGMA2), 2j * SIGMA3, atol=1e-15)

    def test_self_commutator_vanishes(self):
        rng = np.random.default_rng(1)
        a = random_hermitian(rng, 4)
        assert np.allclose(commutator(a, a), 0.0)

    def test_antisymmetry(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            a = random_complex(rng, 4)
            b = random_complex(rng, 4)
            assert np.allclose(commutator(a, b), -commutator(b, a), atol=1e-10)

    def test_dimension_mismatch(self):
        with pytest.raises(ShapeError):
            commutator(np.eye(2), np.eye(3))
        with pytest.raises(ShapeError):
            commutator(np.ones((2, 3)), np.ones((3, 2)))

    def test_anticommutator_paulis(self):
        assert np.allclose(anticommutator(SIGMA1, SIGMA2), 0.0)
        assert np.allclose(anticommutator(SIGMA1, SIGMA1), 2 * np.eye(2))


class TestHermitianEigensystem:
    def test_diagonal_input(self):
        spec = hermitian_eigensystem(np.diag([3.0, 1.0, 2.0]).astype(complex))
        assert np.allclose(spec.values, [1.0, 2.0, 3.0])
        assert spec.eigenvalues == ((1.0, 1), (2.0, 1), (3.0, 1))

    def test_pauli_spectrum(self):
        spec = hermitian_eigensystem(SIGMA1)
        assert np.allclose(spec.values, [-1.0, 1.0])

    def test_even_spin_direction_doublet(self):
        # a.Sp for m=1, p=(0,0,2), a=x: closed form gives +-1/(2 sqrt 5),
        # each doubly degenerate
        from evenspin.dirac import FourMomentum, build_dirac_set
        from evenspin.even_spin import build_even_spin

        fm = FourMomentum(1.0, np.array([0.0, 0.0, 2.0]))
        es = build_even_spin(build_dirac_set(fm))
        spec = hermitian_eigensystem(es.sp[0])
        s = 1.0 / (2.0 * np.sqrt(5.0))
        assert np.allclose(spec.values, [-s, -s, s, s], atol=1e-12)
        assert [m for _, m in spec.eigenvalues] == [2, 2]
        assert abs(s - 0.223606797749979) < 1e-15

    def test_reconstruction_and_orthonormality(self):
        rng = np.random.default_rng(3)
        for n in (2, 4, 8, 16):
            a = random_hermitian(rng, n, scale=2.0)
            spec = hermitian_eigensystem(a)
            v = spec.vectors
            assert np.allclose(v.conj().T @ v, np.eye(n), atol=1e-12)
            rebuilt = v @ np.diag(spec.values) @ v.conj().T
            assert np.linalg.norm(rebuilt - a) <= 1e-10 * np.linalg.norm(a) + 1e-12

    def test_rejects_non_hermitian(self):
        with pytest.raises(ContractError):
            hermitian_eigensystem(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_deterministic_output(self):
        rng = np.random.default_rng(4)
        a = random_hermitian(rng, 6)
        s1 = hermitian_eigensystem(a)
        s2 = hermitian_eigensystem(a.copy())
        assert np.array_equal(s1.values, s2.values)
        assert np.array_equal(s1.vectors, s2.vectors)

    def test_degenerate_clustering(self):
        a = np.diag([1.0, 1.0 + 1e-12, 5.0]).astype(complex)
        spec = hermitian_eigensystem(a)
        assert [m for _, m in spec.eigenvalues] == [2, 1]

    def test_phase_convention(self):
        rng = np.random.default_rng(5)
        spec = hermitian_eigensystem(random_hermitian(rng, 5))
        for k in range(5):
            col = spec.vectors[:, k]
            first = col[np.argmax(np.abs(col) > 1e-12)]
            assert first.real > 0
            assert abs(first.imag) < 1e-12


class TestExpm:
    def test_zero_exponent(self):
        assert np.allclose(expm(np.zeros((3, 3))), np.eye(3))

    def test_diagonal_exponent(self):
        got = expm(np.diag([np.log(2.0), np.log(3.0)]).astype(complex))
        assert np.allclose(got, np.diag([2.0, 3.0]), atol=1e-14)

    def test_half_turn_rotation(self):
        # exp(-i pi sigma3 / 2) = diag(-i, i); cross-checked by raw series
        a = -1j * np.pi * SIGMA3 / 2
        got = expm(a)
        assert np.allclose(got, np.diag([-1j, 1j]), atol=1e-14)
        assert np.allclose(got, series_expm(a), atol=1e-13)

    def test_inverse_property(self):
        rng = np.random.default_rng(6)
        for n in (2, 4, 8, 16):
            a = random_complex(rng, n)
            a *= 10.0 / np.linalg.norm(a)
            resid = np.linalg.norm(expm(a) @ expm(-a) - np.eye(n))
            assert resid <= 1e-12 * n

    def test_matches_series_oracle(self):
        rng = np.random.default_rng(7)
        for _ in range(10):
            a = random_complex(rng, 4, scale=0.5)
            assert np.allclose(expm(a), series_expm(a), atol=1e-13)

    def test_rejects_non_square(self):
        with pytest.raises(ShapeError):
            expm(np.ones((2, 3)))


class TestKron:
    def test_identity(self):
        assert np.allclose(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_sigma3_expansion(self):
        assert np.allclose(kron(SIGMA3, np.eye(2)), np.diag([1, 1, -1, -1]))

    def test_index_convention(self):
        # first factor is the slow index
        a = np.array([[0, 1], [0, 0]], dtype=complex)
        out = kron(a, np.eye(2))
        assert out[0, 2] == 1 and out[1, 3] == 1


bounded = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)


@st.composite
def complex_matrix(draw, n=2):
    re = draw(arrays(np.float64, (n, n), elements=bounded))
    im = draw(arrays(np.float64, (n, n), elements=bounded))
    return re + 1j * im


@given(a=complex_matrix(), b=complex_matrix(), c=complex_matrix(), d=complex_matrix())
@settings(max_examples=50, deadline=None)
def test_kron_mixed_product(a, b, c, d):
    lhs = kron(a, b) @ kron(c, d)
    rhs = kron(a @ c, b @ d)
    assert np.allclose(lhs, rhs, atol=1e-9)


@given(a=complex_matrix(n=3))
@settings(max_examples=50, deadline=None)
def test_expm_inverse_hypothesis(a):
    resid = np.linalg.norm(expm(a) @ expm(-a) - np.eye(3))
    assert resid <= 1e-12 * 3


class TestTolerance:
    def test_symmetry(self):
        rng = np.random.default_rng(8)
        a = random_complex(rng, 3)
        b = a + 1e-12 * random_complex(rng, 3)
        tol = Tolerance()
        assert approx_eq(a, b, tol) == approx_eq(b, a, tol)
        assert approx_eq(a, b, tol)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Tolerance(abs_eps=-1.0)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            approx_eq(np.eye(2), np.eye(3))
