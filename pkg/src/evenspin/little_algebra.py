"""Momentum-parametrized little-group generators and their bracket relations.

For a timelike or null momentum with p0 != 0 the stabilizing algebra is
generated by L = J - (p/p0) x K. In triad components (m-hat, l-hat, n-hat
with n-hat along p) the generators read

    L1 = J.m + (K.l) |p|/p0,  L2 = J.l - (K.m) |p|/p0,  L3 = J.n

and close under

    [L1, L2] = i (m^2/p0^2) L3,   [L3, L1] = i L2,   [L2, L3] = i L1,

interpolating between su(2) at rest (m^2/p0^2 = 1) and e(2) in the
massless or infinite-momentum limit (m^2/p0^2 -> 0). Both the defining
four-vector representation and the bispinor representation (J = S,
K = i alpha / 2) are provided.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import ALPHA, SPIN, DiracOperatorSet, FourMomentum
from .numkernel import DomainError, Tolerance, commutator, expm, frob
from .report import CheckReport

FOUR_VECTOR = "four_vector"
BISPINOR = "bispinor"

_X = np.array([1.0, 0.0, 0.0])
_Y = np.array([0.0, 1.0, 0.0])
_Z = np.array([0.0, 0.0, 1.0])


@dataclass(frozen=True)
class FrameTriad:
    """Right-handed orthonormal triad (m, l, n) with n along the momentum."""

    m: np.ndarray
    l: np.ndarray
    n: np.ndarray

    def __post_init__(self):
        for name in ("m", "l", "n"):
            v = np.asarray(getattr(self, name), dtype=float).reshape(3).copy()
            v.flags.writeable = False
            object.__setattr__(self, name, v)

    def rotated(self, angle: float) -> "FrameTriad":
        """Rotate the transverse pair about n; n itself is untouched."""
        c, s = np.cos(angle), np.sin(angle)
        return FrameTriad(m=c * self.m + s * self.l,
                          l=-s * self.m + c * self.l,
                          n=self.n)

    def component_frame(self) -> np.ndarray:
        return np.stack([self.m, self.l, self.n])


def build_triad(p, *, rest: bool = False, reference=None) -> FrameTriad:
    """Deterministic triad for a momentum direction.

    m = normalize(e x n) with e = z-hat unless n is nearly parallel to it
    (then e = x-hat), l = n x m. A caller may override e via reference to
    probe triad independence. p = 0 requires rest=True and returns the
    canonical axes.
    """
    p = np.asarray(p, dtype=float).reshape(3)
    pmag = float(np.linalg.norm(p))
    if pmag == 0.0:
        if not rest:
            raise DomainError("triad for p = 0 requires the rest-frame flag")
        return FrameTriad(m=_X, l=_Y, n=_Z)
    n = p / pmag
    if reference is None:
        e = _Z if abs(n @ _Z) < 0.9 else _X
    else:
        e = np.asarray(reference, dtype=float).reshape(3)
    m = np.cross(e, n)
    norm = np.linalg.norm(m)
    if norm < 1e-12:
        raise DomainError("reference vector is parallel to the momentum")
    m = m / norm
    return FrameTriad(m=m, l=np.cross(n, m), n=n)


@dataclass(frozen=True)
class LorentzGenerators:
    """Rotation and boost generators in one representation."""

    j: tuple
    k: tuple
    rep_tag: str


def four_vector_generators() -> LorentzGenerators:
    """Generators acting on (p0, p1, p2, p3) columns.

    Pinned by the infinitesimal action (mu.J + nu.K) p =
    i (nu.p, nu p0 + mu x p), which fixes every sign.
    """
    eps = np.zeros((3, 3, 3))
    for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[a, b, c] = 1.0
        eps[a, c, b] = -1.0
    j = []
    k = []
    for i in range(3):
        ji = np.zeros((4, 4), dtype=np.complex128)
        ji[1:, 1:] = -1j * eps[i]
        j.append(ji)
        ki = np.zeros((4, 4), dtype=np.complex128)
        ki[0, 1 + i] = 1j
        ki[1 + i, 0] = 1j
        k.append(ki)
    return LorentzGenerators(j=tuple(j), k=tuple(k), rep_tag=FOUR_VECTOR)


def bispinor_generators(dset: DiracOperatorSet | None = None) -> LorentzGenerators:
    """Bispinor representation: J = S, K = (i/2) alpha."""
    spin = dset.spin if dset is not None else SPIN
    alpha = dset.alpha if dset is not None else ALPHA
    return LorentzGenerators(j=tuple(spin),
                             k=tuple(0.5j * a for a in alpha),
                             rep_tag=BISPINOR)


@dataclass(frozen=True)
class LittleGenerators:
    """Triad components of the little-group generators at one momentum."""

    l1: np.ndarray
    l2: np.ndarray
    l3: np.ndarray
    contraction_param: float
    rep_tag: str


def _dot(vec, mats):
    return sum(float(vec[k]) * mats[k] for k in range(3))


def little_generators(gens: LorentzGenerators, fm: FourMomentum,
                      triad: FrameTriad) -> LittleGenerators:
    """Assemble L1, L2, L3 from J, K, the momentum and its triad."""
    ratio = fm.p_mag / fm.energy
    l1 = _dot(triad.m, gens.j) + _dot(triad.l, gens.k) * ratio
    l2 = _dot(triad.l, gens.j) - _dot(triad.m, gens.k) * ratio
    l3 = _dot(triad.n, gens.j)
    return LittleGenerators(l1=l1, l2=l2, l3=l3,
                            contraction_param=fm.contraction_param,
                            rep_tag=gens.rep_tag)


def cartesian_little_vector(gens: LorentzGenerators, fm: FourMomentum) -> tuple:
    """The vector form L = J - (p/p0) x K, one matrix per Cartesian axis."""
    w = fm.p / fm.energy
    out = []
    for i in range(3):
        a, b = (i + 1) % 3, (i + 2) % 3
        out.append(gens.j[i] - (w[a] * gens.k[b] - w[b] * gens.k[a]))
    return tuple(out)


def verify_little_algebra(lg: LittleGenerators,
                          tol: Tolerance = Tolerance(abs_eps=1e-12, rel_eps=0.0),
                          strict: bool = True) -> CheckReport:
    """Check the three parametrized brackets of the little algebra."""
    kappa = lg.contraction_param
    report = CheckReport()
    checks = [
        ("bracket_12", "[L1, L2] - i (m^2/p0^2) L3",
         commutator(lg.l1, lg.l2) - 1j * kappa * lg.l3),
        ("bracket_31", "[L3, L1] - i L2", commutator(lg.l3, lg.l1) - 1j * lg.l2),
        ("bracket_23", "[L2, L3] - i L1", commutator(lg.l2, lg.l3) - 1j * lg.l1),
    ]
    scale = max(frob(lg.l1), frob(lg.l2), frob(lg.l3), 1.0)
    for name, eqn, resid in checks:
        report.add(id=f"little.{name}.{lg.rep_tag}", equation=f"{eqn} = 0",
                   quote_tag="little-algebra-brackets",
                   residual=frob(resid), tolerance=tol.bound(scale))
    if strict:
        report.require()
    return report


def structure_constant(lg: LittleGenerators) -> float:
    """Extract c from [L1, L2] = i c L3 by projection onto L3."""
    bracket = commutator(lg.l1, lg.l2)
    denom = np.trace(lg.l3.conj().T @ lg.l3)
    return float((np.trace(lg.l3.conj().T @ bracket) / (1j * denom)).real)


def invariance_rotation(gens: LorentzGenerators, fm: FourMomentum, mu) -> np.ndarray:
    """Finite little-group element exp(-i (mu.J + nu.K)) with nu = -mu x p / p0."""
    mu = np.asarray(mu, dtype=float).reshape(3)
    nu = -np.cross(mu, fm.p) / fm.energy
    generator = _dot(mu, gens.j) + _dot(nu, gens.k)
    return expm(-1j * generator)


def verify_invariance(gens: LorentzGenerators, fm: FourMomentum, mu,
                      tol: Tolerance = Tolerance(abs_eps=0.0, rel_eps=1e-10),
                      strict: bool = True) -> CheckReport:
    """Check that the finite transformation fixes p and that the generator
    action matches its closed form i (nu.p, nu p0 + mu x p)."""
    if gens.rep_tag != FOUR_VECTOR:
        raise DomainError("invariance check needs the four-vector representation")
    mu = np.asarray(mu, dtype=float).reshape(3)
    nu = -np.cross(mu, fm.p) / fm.energy
    p4 = fm.four_vector

    lam = invariance_rotation(gens, fm, mu)
    report = CheckReport()
    report.add(id="little.invariance", equation="exp(-i(mu.J + nu.K)) p - p = 0",
               quote_tag="little-group-invariance",
               residual=float(np.linalg.norm(lam @ p4 - p4)),
               tolerance=tol.bound(np.linalg.norm(p4)))

    # closed-form generator action for arbitrary (mu, nu): check the
    # stabilizing pair and an independent generic pair
    for tag, mu_c, nu_c in (("stabilizing", mu, nu), ("generic", nu + 0.5, mu - 0.25)):
        gen = _dot(mu_c, gens.j) + _dot(nu_c, gens.k)
        acted = gen @ p4
        closed = 1j * np.concatenate(
            [[nu_c @ fm.p], nu_c * fm.energy + np.cross(mu_c, fm.p)]
        )
        report.add(id=f"little.generator_action.{tag}",
                   equation="(mu.J + nu.K) p = i (nu.p, nu p0 + mu x p)",
                   quote_tag="little-generator-action",
                   residual=float(np.linalg.norm(acted - closed)),
                   tolerance=tol.bound(np.linalg.norm(p4) * (1 + np.linalg.norm(mu_c) + np.linalg.norm(nu_c))))
    if strict:
        report.require()
    return report


def verify_vector_bracket(lg: LittleGenerators, gens: LorentzGenerators,
                          fm: FourMomentum, triad: FrameTriad | None = None,
                          tol: Tolerance = Tolerance(abs_eps=1e-12, rel_eps=0.0),
                          strict: bool = True) -> CheckReport:
    """Check the vector bracket L x L = i L - i p (p.J) / p0^2 componentwise.

    p.J = p.L, so the right side lives entirely inside the little algebra,
    reduces to L x L = i J at rest, and reproduces the triad brackets when
    projected on (m, l, n).
    """
    lvec = cartesian_little_vector(gens, fm)
    pj = _dot(fm.p, gens.j)
    p0sq = fm.energy**2
    report = CheckReport()
    scale = max(max(frob(m) for m in lvec), 1.0)
    for i in range(3):
        a, b = (i + 1) % 3, (i + 2) % 3
        lhs = commutator(lvec[a], lvec[b])
        rhs = 1j * lvec[i] - 1j * (fm.p[i] / p0sq) * pj
        report.add(id=f"little.vector_bracket.{'xyz'[i]}.{gens.rep_tag}",
                   equation="(L x L)_i = i L_i - i p_i (p.J)/p0^2",
                   quote_tag="little-vector-bracket",
                   residual=frob(lhs - rhs), tolerance=tol.bound(scale))

    if triad is not None:
        # triad components of the Cartesian vector must reproduce L1, L2, L3
        for name, axis, mat in (("l1", triad.m, lg.l1), ("l2", triad.l, lg.l2),
                                ("l3", triad.n, lg.l3)):
            report.add(id=f"little.component.{name}.{gens.rep_tag}",
                       equation="triad component of L equals assembled generator",
                       quote_tag="little-component-consistency",
                       residual=frob(_dot(axis, lvec) - mat),
                       tolerance=tol.bound(scale))
    if strict:
        report.require()
    return report


def contraction_scan(mode: str, values, fixed: float = 1.0,
                     rep: str = BISPINOR) -> list[tuple]:
    """Scan the contraction parameter and the measured bracket ratio.

    mode 'mass_to_zero': values are masses at fixed |p|; mode
    'momentum_to_infinity': values are momentum magnitudes at fixed mass.
    Rows are (m, p_mag, contraction_param, ||[L1,L2]|| / ||L3||) in grid
    order.
    """
    values = [float(v) for v in values]
    if any(v <= 0 for v in values):
        raise DomainError("scan grid must be strictly positive")
    if mode == "mass_to_zero":
        points = [(v, fixed) for v in values]
    elif mode == "momentum_to_infinity":
        points = [(fixed, v) for v in values]
    else:
        raise DomainError(f"unknown scan mode: {mode}")

    rows = []
    for mass, pmag in points:
        fm = FourMomentum(mass, np.array([0.0, 0.0, pmag]))
        triad = build_triad(fm.p, rest=pmag == 0.0)
        if rep == BISPINOR:
            gens = bispinor_generators()
        elif rep == FOUR_VECTOR:
            gens = four_vector_generators()
        else:
            raise DomainError(f"unknown representation: {rep}")
        lg = little_generators(gens, fm, triad)
        ratio = frob(commutator(lg.l1, lg.l2)) / frob(lg.l3)
        rows.append((mass, pmag, fm.contraction_param, ratio))
    return rows


CONTRACTION_SCAN_HEADER = ("m", "p_mag", "contraction_param", "bracket_ratio")
