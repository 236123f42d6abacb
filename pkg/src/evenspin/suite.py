"""Full invariant suite at one configuration: every identity the library
exposes, collected into a machine-readable report."""
from __future__ import annotations

import numpy as np

from . import bell, even_spin, extended, little_algebra
from .dirac import FourMomentum, build_dirac_set, random_momentum
from .numkernel import InvariantViolation, Tolerance, frob, hermitian_eigensystem
from .report import CheckReport


def _tol(override: float | None, default: float) -> Tolerance:
    if override is None:
        return Tolerance(abs_eps=default, rel_eps=0.0)
    return Tolerance(abs_eps=override, rel_eps=0.0)


def point_checks(fm: FourMomentum, tol_override: float | None = None) -> CheckReport:
    """Every identity evaluated at a single (m, p)."""
    report = CheckReport()
    dset = build_dirac_set(fm)
    rest = fm.p_mag == 0
    triad = little_algebra.build_triad(fm.p, rest=rest)

    # little algebra in both representations
    for gens in (little_algebra.four_vector_generators(),
                 little_algebra.bispinor_generators(dset)):
        lg = little_algebra.little_generators(gens, fm, triad)
        report.extend(little_algebra.verify_little_algebra(
            lg, tol=_tol(tol_override, 1e-12), strict=False))
        report.extend(little_algebra.verify_vector_bracket(
            lg, gens, fm, triad=triad, tol=_tol(tol_override, 1e-12), strict=False))

    # finite invariance needs the four-vector representation
    gens4 = little_algebra.four_vector_generators()
    mu = np.array([0.3, -0.2, 0.4])
    inv_tol = (Tolerance(abs_eps=0.0, rel_eps=1e-10) if tol_override is None
               else Tolerance(abs_eps=tol_override, rel_eps=0.0))
    report.extend(little_algebra.verify_invariance(
        gens4, fm, mu, tol=inv_tol, strict=False))

    # precession and even spin
    report.extend(extended.verify_precession(
        dset, tol=_tol(tol_override, 1e-12), strict=False))
    es = even_spin.build_even_spin(dset, triad=triad)
    report.extend(even_spin.verify_even_spin_algebra(
        es, tol=_tol(tol_override, 1e-12), strict=False))

    scale = max(1.0, frob(dset.hamiltonian))
    triple_tol = _tol(tol_override, 1e-11).bound(scale)
    closed = even_spin.even_spin_closed_form(dset)
    hinv = np.linalg.inv(dset.hamiltonian)
    report.add(id="evenspin.triple_construction",
               equation="(S + lam S lam)/2 = closed form = W H^-1",
               quote_tag="even-spin-construction",
               residual=max(
                   max(frob(es.sp[i] - closed[i]) for i in range(3)),
                   max(frob(es.sp[i] - es.w[i] @ hinv) for i in range(3))),
               tolerance=triple_tol)
    report.add(id="evenspin.conserved",
               equation="[Sp_i, H] = 0",
               quote_tag="even-spin-conserved",
               residual=max(frob(es.sp[i] @ dset.hamiltonian
                                 - dset.hamiltonian @ es.sp[i]) for i in range(3)),
               tolerance=_tol(tol_override, 1e-12).bound(scale))

    # spectrum law at a generic direction plus the triad axes
    spec_tol = _tol(tol_override, 1e-10)
    worst = 0.0
    for a in (triad.m, triad.n, (triad.m + triad.l + triad.n) / np.sqrt(3.0)):
        values = hermitian_eigensystem(
            sum(float(a[k]) * es.sp[k] for k in range(3))).values
        s_a = even_spin.direction_spin_eigenvalue(fm, a)
        worst = max(worst, float(np.max(np.abs(
            values - np.array([-s_a, -s_a, s_a, s_a])))))
    report.add(id="evenspin.spectrum_law",
               equation="spec(a.Sp) = +- sqrt((p.a)^2 + m^2)/(2 p0), each twice",
               quote_tag="even-spin-spectrum",
               residual=worst, tolerance=spec_tol.bound(1.0))

    # eigenvector formula against the numeric eigenspaces
    if fm.p_mag > 0:
        try:
            fe = even_spin.even_spin_eigenvectors(
                es, (triad.m + 2.0 * triad.n) / np.sqrt(5.0))
            report.add(id="evenspin.eigenvector_formula",
                       equation=f"closed-form eigenvectors ({fe.reading} reading)",
                       quote_tag="even-spin-eigenvectors",
                       residual=min(fe.residuals.values()),
                       tolerance=_tol(tol_override, 1e-9).bound(1.0))
        except InvariantViolation:
            report.add(id="evenspin.eigenvector_formula",
                       equation="closed-form eigenvectors (no reading matches)",
                       quote_tag="even-spin-eigenvectors",
                       residual=float("inf"),
                       tolerance=_tol(tol_override, 1e-9).bound(1.0))

    # Pauli-Lubanski eigenvalue scaling w_a = p0 s_a on a transverse axis
    if fm.p_mag > 0:
        a = triad.m
        w_vals = np.linalg.eigvalsh(sum(float(a[k]) * es.w[k] for k in range(3)))
        s_a = even_spin.direction_spin_eigenvalue(fm, a)
        report.add(id="paulilubanski.eigenvalue_scaling",
                   equation="spec(a.W) = p0 * spec(a.Sp)",
                   quote_tag="pauli-lubanski-scaling",
                   residual=float(np.max(np.abs(
                       np.sort(w_vals) - fm.energy * np.array([-s_a, -s_a, s_a, s_a])))),
                   tolerance=_tol(tol_override, 1e-10).bound(scale))

    # even-velocity Hamiltonian form
    if fm.p_mag > 0:
        _, vel_report = extended.build_even_velocity_set(
            dset, es=es, tol=_tol(tol_override, 1e-11), strict=False)
        report.extend(vel_report)

    # massless identities at the same direction and magnitude
    if fm.p_mag > 0:
        fm0 = FourMomentum(0.0, fm.p)
        dset0 = build_dirac_set(fm0)
        _, m0_report = extended.massless_extended_set(
            dset0, helicity=0.5, tol=_tol(tol_override, 1e-11), strict=False)
        report.extend(m0_report)
        for s_h in (1.0, 1.5, 2.0):
            radius = extended.robinson_radius(s_h, fm0.p_mag)
            report.add(id=f"radius.uncertainty.s{s_h}",
                       equation="|p| r_s = s",
                       quote_tag="radius-momentum-product",
                       residual=abs(fm0.p_mag * radius - s_h),
                       tolerance=max(4e-16 * s_h, 0.0 if tol_override is None
                                     else tol_override))

    # two-particle sector
    system = bell.build_two_particle_system(fm)
    kappa = fm.contraction_param
    spectrum = hermitian_eigensystem(system.total_sq)
    expected = np.sort(np.array([1 + kappa] * 8 + [2 * kappa] * 4 + [0.0] * 4))
    report.add(id="bell.total_spectrum",
               equation="spec((Sp1 x 1 + 1 x Sp2)^2) = {1+k x8, 2k x4, 0 x4}",
               quote_tag="two-particle-spectrum",
               residual=float(np.max(np.abs(np.sort(spectrum.values) - expected))),
               tolerance=_tol(tol_override, 1e-11).bound(1.0))
    block = bell.helicity_block_matrix(fm, system=system, strict=False)
    expected_block = np.array([
        [1 + kappa, 0, 0, 0],
        [0, kappa, kappa, 0],
        [0, kappa, kappa, 0],
        [0, 0, 0, 1 + kappa]], dtype=np.complex128)
    report.add(id="bell.block_pattern",
               equation="positive-energy block of the squared total even spin",
               quote_tag="two-particle-block",
               residual=frob(block - expected_block),
               tolerance=_tol(tol_override, 1e-11).bound(1.0))
    singlet = bell.singlet_state(fm, system=system)
    report.add(id="bell.singlet_null",
               equation="(Sp1 x 1 + 1 x Sp2)^2 psi_singlet = 0",
               quote_tag="two-particle-singlet",
               residual=float(np.linalg.norm(system.total_sq @ singlet.amplitudes)),
               tolerance=_tol(tol_override, 1e-10).bound(1.0))

    # correlation oracle at canonical analyzer pairs
    worst = 0.0
    pairs = []
    if fm.p_mag > 0:
        n, m_hat = system.triad.n, system.triad.m
        pairs = [(n, n), ((n + m_hat) / np.sqrt(2), (n - m_hat) / np.sqrt(2)),
                 (m_hat, (m_hat + system.triad.l) / np.sqrt(2))]
    else:
        pairs = [(np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]))]
    for a, b in pairs:
        e_f, e_n = bell.bell_correlation(
            fm, bell.BellSetting(a=a, b=b), system=system, strict=False)
        worst = max(worst, abs(e_f - e_n))
    report.add(id="bell.correlation_oracle",
               equation="closed-form E(a,b) = 16-dim singlet contraction",
               quote_tag="bell-correlation-oracle",
               residual=worst, tolerance=_tol(tol_override, 1e-10).bound(1.0))
    return report


def random_batch_checks(fm_seed: int, count: int,
                        tol_override: float | None = None) -> CheckReport:
    """Seeded random momenta: bracket, invariance and oracle residuals."""
    rng = np.random.default_rng(fm_seed)
    report = CheckReport()
    gens4 = little_algebra.four_vector_generators()

    worst_bracket = 0.0
    worst_structure = 0.0
    worst_invariance = 0.0
    worst_oracle = 0.0
    for _ in range(count):
        fm = random_momentum(rng)
        dset = build_dirac_set(fm)
        triad = little_algebra.build_triad(fm.p)
        for gens in (gens4, little_algebra.bispinor_generators(dset)):
            lg = little_algebra.little_generators(gens, fm, triad)
            rep = little_algebra.verify_little_algebra(lg, strict=False)
            worst_bracket = max(worst_bracket, rep.max_residual)
            worst_structure = max(worst_structure, abs(
                little_algebra.structure_constant(lg) - fm.contraction_param))
        mu = rng.uniform(-2.0, 2.0, size=3)
        lam = little_algebra.invariance_rotation(gens4, fm, mu)
        p4 = fm.four_vector
        worst_invariance = max(
            worst_invariance,
            float(np.linalg.norm(lam @ p4 - p4) / np.linalg.norm(p4)))

        system = bell.build_two_particle_system(fm)
        for _ in range(2):
            e_f, e_n = bell.bell_correlation(
                fm, bell.BellSetting(a=_random_unit(rng), b=_random_unit(rng)),
                system=system, strict=False)
            worst_oracle = max(worst_oracle, abs(e_f - e_n))

    report.add(id="little.brackets.random_batch",
               equation="little-algebra brackets over seeded random momenta",
               quote_tag="little-algebra-brackets",
               residual=worst_bracket,
               tolerance=1e-10 if tol_override is None else tol_override)
    report.add(id="little.structure_constant.random_batch",
               equation="coefficient of [L1, L2] equals m^2/p0^2",
               quote_tag="little-structure-constant",
               residual=worst_structure,
               tolerance=1e-12 if tol_override is None else tol_override)
    report.add(id="little.invariance.random_batch",
               equation="||exp(-i(mu.J + nu.K)) p - p|| / ||p|| over seeded pairs",
               quote_tag="little-group-invariance",
               residual=worst_invariance,
               tolerance=1e-10 if tol_override is None else tol_override)
    report.add(id="bell.oracle.random_batch",
               equation="E closed form vs contraction over seeded random settings",
               quote_tag="bell-correlation-oracle",
               residual=worst_oracle,
               tolerance=1e-10 if tol_override is None else tol_override)
    return report


def _random_unit(rng) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def full_report(fm: FourMomentum, seed: int = 0, samples: int = 20,
                tol_override: float | None = None) -> CheckReport:
    report = point_checks(fm, tol_override=tol_override)
    if samples > 0:
        report.extend(random_batch_checks(seed, samples, tol_override=tol_override))
    return report
