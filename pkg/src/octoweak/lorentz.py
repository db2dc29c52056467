"""Lorentz generators, exponentials, and the spinor/vector double cover.

The invariant basis is e_mu = (i, e1, e2, e3) with metric
eta = diag(-1, 1, 1, 1); raised indices flip the sign of the time slot,
e^0 = -e_0.  Spinor generators live in the quaternionic subalgebra, so
their exponential uses the closed form; the vector generators are 4x4
matrices exponentiated by scaling and squaring.
"""

from __future__ import annotations

import math

import numpy as np

from .core import (
    E,
    CplxOcton,
    bar_star,
    commutator,
    conj_complex,
    conj_oct,
    exp_assoc,
    mul,
)
from .grading import SubspaceTag, require_member

#: Minkowski metric, mostly-plus convention.
ETA = np.diag([-1.0, 1.0, 1.0, 1.0])
ETA.flags.writeable = False

#: Lorentz-invariant basis e_mu = (i, e1, e2, e3) and its raised/conjugated forms.
E_LOWER = (CplxOcton.scalar(1j), E[1], E[2], E[3])
E_UPPER = (CplxOcton.scalar(-1j), E[1], E[2], E[3])
EBAR_LOWER = tuple(conj_oct(e) for e in E_LOWER)
EBAR_UPPER = tuple(conj_oct(e) for e in E_UPPER)

#: Taylor/squaring parameters for :func:`mat_exp`.
MAT_EXP_NORM_CAP = 0.5
MAT_EXP_TERMS = 18


class Theta:
    """Antisymmetric real 4x4 block of boost/rotation parameters."""

    __slots__ = ("m",)

    def __init__(self, m) -> None:
        arr = np.array(m, dtype=float)
        if arr.shape != (4, 4):
            raise ValueError("theta must be 4x4")
        if not np.all(np.isfinite(arr)):
            raise ValueError("theta must be finite")
        if not np.array_equal(arr, -arr.T):
            raise ValueError("theta must be exactly antisymmetric")
        arr.flags.writeable = False
        self.m = arr

    @classmethod
    def zero(cls) -> "Theta":
        return cls(np.zeros((4, 4)))

    @classmethod
    def from_upper(cls, entries: dict[tuple[int, int], float]) -> "Theta":
        """Build from upper-triangle values {(mu, nu): theta^{mu nu}}, mu < nu."""
        arr = np.zeros((4, 4))
        for (mu, nu), val in entries.items():
            if not (0 <= mu < nu <= 3):
                raise ValueError("upper-triangle indices required (mu < nu)")
            arr[mu, nu] = val
            arr[nu, mu] = -val
        return cls(arr)

    @classmethod
    def single(cls, mu: int, nu: int, value: float) -> "Theta":
        return cls.from_upper({(mu, nu): value})

    @classmethod
    def random(cls, rng: np.random.Generator, bound: float) -> "Theta":
        """Uniform entries in [-bound, bound] on the six free parameters."""
        pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        vals = rng.uniform(-bound, bound, size=6)
        return cls.from_upper(dict(zip(pairs, vals)))

    @classmethod
    def random_rotation(cls, rng: np.random.Generator, bound: float) -> "Theta":
        """Rotation-only draw: all boost entries theta^{0i} stay zero."""
        pairs = [(1, 2), (1, 3), (2, 3)]
        vals = rng.uniform(-bound, bound, size=3)
        return cls.from_upper(dict(zip(pairs, vals)))

    def __neg__(self) -> "Theta":
        return Theta(-self.m)

    def __repr__(self) -> str:
        return f"Theta({self.m.tolist()})"


def s_gen(mu: int, nu: int) -> CplxOcton:
    """Spinor generator: (e_mu ebar_nu - e_nu ebar_mu) / (4i)."""
    diff = mul(E_LOWER[mu], EBAR_LOWER[nu]) - mul(E_LOWER[nu], EBAR_LOWER[mu])
    return diff * (-0.25j)


def v_gen(mu: int, nu: int) -> np.ndarray:
    """Vector generator: entries -i(delta^rho_mu eta_{nu sigma} - delta^rho_nu eta_{mu sigma})."""
    out = np.zeros((4, 4), dtype=np.complex128)
    out[mu, :] += -1j * ETA[nu, :]
    out[nu, :] -= -1j * ETA[mu, :]
    return out


_S_GEN = tuple(tuple(s_gen(mu, nu) for nu in range(4)) for mu in range(4))
_V_GEN = tuple(tuple(v_gen(mu, nu) for nu in range(4)) for mu in range(4))


def mat_exp(m: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring on an 18-term Taylor sum."""
    a = np.asarray(m, dtype=np.complex128)
    n1 = float(np.abs(a).sum(axis=0).max()) if a.size else 0.0
    squarings = max(0, math.ceil(math.log2(n1 / MAT_EXP_NORM_CAP))) if n1 > MAT_EXP_NORM_CAP else 0
    a = a / (2.0**squarings)
    acc = np.eye(a.shape[0], dtype=np.complex128)
    term = np.eye(a.shape[0], dtype=np.complex128)
    for k in range(1, MAT_EXP_TERMS + 1):
        term = term @ a / k
        acc = acc + term
    for _ in range(squarings):
        acc = acc @ acc
    return acc


def _spinor_generator_sum(theta: Theta) -> CplxOcton:
    acc = np.zeros(8, dtype=np.complex128)
    for mu in range(4):
        for nu in range(mu + 1, 4):
            t = theta.m[mu, nu]
            if t != 0.0:
                acc = acc + (2.0 * t) * _S_GEN[mu][nu].c
    return CplxOcton._wrap(-0.5j * acc)


def lambda_S(theta: Theta) -> CplxOcton:
    """Spinor transformation exp(-(i/2) theta^{mu nu} S_mu_nu)."""
    return exp_assoc(_spinor_generator_sum(theta))


def lambda_V(theta: Theta) -> np.ndarray:
    """Vector transformation exp(-(i/2) theta^{mu nu} V_mu_nu); real up to roundoff."""
    g = np.zeros((4, 4), dtype=np.complex128)
    for mu in range(4):
        for nu in range(mu + 1, 4):
            t = theta.m[mu, nu]
            if t != 0.0:
                g += (2.0 * t) * _V_GEN[mu][nu]
    return mat_exp(-0.5j * g)


def lambda_V_real(theta: Theta) -> np.ndarray:
    """Real-cast vector transformation; raises if the imaginary fuzz is large."""
    lv = lambda_V(theta)
    if float(np.max(np.abs(lv.imag))) > 1e-10 * max(1.0, float(np.max(np.abs(lv.real)))):
        raise ArithmeticError("vector transformation has non-negligible imaginary part")
    return lv.real.copy()


def double_cover_residual(theta: Theta) -> float:
    """Max over rho of || bar_star(L) ebar^rho L - (L_V)^rho_sigma ebar^sigma ||."""
    lam = lambda_S(theta)
    lam_bs = bar_star(lam)
    lv = lambda_V(theta)
    worst = 0.0
    for rho in range(4):
        lhs = mul(mul(lam_bs, EBAR_UPPER[rho]), lam)
        rhs = CplxOcton._wrap(sum(lv[rho, s] * EBAR_UPPER[s].c for s in range(4)))
        worst = max(worst, abs(lhs - rhs))
    return worst


def lorentz_algebra_residual(mu: int, nu: int, rho: int, sigma: int) -> CplxOcton:
    """-i[S_mn, S_rs] minus its metric combination of generators."""
    lhs = commutator(_S_GEN[mu][nu], _S_GEN[rho][sigma]) * (-1j)
    rhs = (
        ETA[mu, rho] * _S_GEN[nu][sigma]
        - ETA[mu, sigma] * _S_GEN[nu][rho]
        - ETA[nu, rho] * _S_GEN[mu][sigma]
        + ETA[nu, sigma] * _S_GEN[mu][rho]
    )
    return lhs - rhs


def infinitesimal_dc_residual(mu: int, nu: int, rho: int) -> CplxOcton:
    """S*_mn ebar^rho + ebar^rho S_mn - (V_mn)^rho_sigma ebar^sigma."""
    s = _S_GEN[mu][nu]
    lhs = mul(conj_complex(s), EBAR_UPPER[rho]) + mul(EBAR_UPPER[rho], s)
    v = _V_GEN[mu][nu]
    rhs = CplxOcton._wrap(sum(v[rho, s_] * EBAR_UPPER[s_].c for s_ in range(4)))
    return lhs - rhs


def transform_alpha(lam: CplxOcton, alpha: CplxOcton) -> CplxOcton:
    """Left action on the quaternionic spinor: alpha' = L alpha."""
    require_member(lam, SubspaceTag.A, "transformation")
    require_member(alpha, SubspaceTag.A, "alpha")
    return mul(lam, alpha)


def transform_beta(lam: CplxOcton, beta: CplxOcton) -> CplxOcton:
    """Action on the complement spinor: beta' = bar_star(L) beta = beta conj_complex(L).

    Both routes are computed; disagreement would mean the frozen table broke
    the exchange identity that makes this representation exist.
    """
    require_member(lam, SubspaceTag.A, "transformation")
    require_member(beta, SubspaceTag.B, "beta")
    left = mul(bar_star(lam), beta)
    right = mul(beta, conj_complex(lam))
    if abs(left - right) > 1e-10 * max(1.0, abs(left)):
        raise ArithmeticError("exchange identity violated for beta transform")
    return left


def gamma5_analogue() -> CplxOcton:
    """-i e^0 ebar^1 e^2 ebar^3, associated left to right; equals 1."""
    acc = E_UPPER[0]
    for f in (EBAR_UPPER[1], E_UPPER[2], EBAR_UPPER[3]):
        acc = mul(acc, f)
    return acc * (-1j)


def eta_inverse_transform(lv: np.ndarray) -> np.ndarray:
    """Group inverse via the metric: eta L^T eta (exact for eta-preserving L)."""
    return ETA @ lv.T @ ETA
