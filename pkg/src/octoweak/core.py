"""Arithmetic of complexified octonions.

An element carries eight complex coefficients over the basis
(1, e1, ..., e7).  The basis product table is generated once at import
time by Cayley-Dickson doubling of the quaternions,

    (a, b)(c, d) = (ac - d~b, da + bc~),        e4 = (0, 1),

with e_{4+i} = e_i e4, and is then frozen as a :class:`StructureTable`.
The span of {1, e1, e2, e3} is the canonical associative (quaternionic)
subalgebra; all of its complements are reached by the doubling step.
"""

from __future__ import annotations

import cmath
import numbers
from dataclasses import dataclass

import numpy as np

from .errors import NotInAssociativeSubalgebra, ZeroDivisor

#: Componentwise tolerance used by ``==`` and :func:`isclose`.
EQ_TOL = 1e-12

#: Relative scale for declaring a quadratic norm "zero" in :func:`inverse`.
ZERO_DIVISOR_EPS = 1e-12

#: Relative tolerance for the subalgebra membership check in :func:`exp_assoc`.
ASSOC_MEMBERSHIP_TOL = 1e-10

#: Below this magnitude of omega the trigonometric factors of the closed-form
#: exponential switch to their Taylor expansions (4 terms each).
SMALL_ANGLE = 1e-6


def _qmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # quaternion product on integer coefficient vectors (1, e1, e2, e3)
    a0, a1, a2, a3 = x
    b0, b1, b2, b3 = y
    return np.array(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        ],
        dtype=np.int64,
    )


def _qconj(x: np.ndarray) -> np.ndarray:
    return np.array([x[0], -x[1], -x[2], -x[3]], dtype=np.int64)


@dataclass(frozen=True)
class StructureTable:
    """Signed basis-product table: b_a * b_b = sign[a, b] * b_index[a, b]."""

    sign: np.ndarray
    index: np.ndarray
    tensor: np.ndarray  # (8, 8, 8): tensor[a, b, c] = coefficient of b_c in b_a*b_b

    @classmethod
    def build(cls) -> "StructureTable":
        sign = np.zeros((8, 8), dtype=np.int8)
        index = np.zeros((8, 8), dtype=np.int8)
        for a in range(8):
            xa = np.zeros(4, np.int64)
            xb = np.zeros(4, np.int64)
            (xa if a < 4 else xb)[a % 4] = 1
            for b in range(8):
                ya = np.zeros(4, np.int64)
                yb = np.zeros(4, np.int64)
                (ya if b < 4 else yb)[b % 4] = 1
                za = _qmul(xa, ya) - _qmul(_qconj(yb), xb)
                zb = _qmul(yb, xa) + _qmul(xb, _qconj(ya))
                z = np.concatenate([za, zb])
                (nz,) = np.nonzero(z)
                if len(nz) != 1 or abs(z[nz[0]]) != 1:
                    raise AssertionError("basis product is not a signed basis element")
                index[a, b] = nz[0]
                sign[a, b] = z[nz[0]]
        tensor = np.zeros((8, 8, 8))
        for a in range(8):
            for b in range(8):
                tensor[a, b, index[a, b]] = sign[a, b]
        sign.flags.writeable = False
        index.flags.writeable = False
        tensor.flags.writeable = False
        return cls(sign=sign, index=index, tensor=tensor)

    def format(self) -> str:
        """Render the table as a signed-index text grid."""
        names = ["1"] + [f"e{k}" for k in range(1, 8)]

        def cell(a: int, b: int) -> str:
            s = "+" if self.sign[a, b] > 0 else "-"
            return s + names[self.index[a, b]]

        width = 4
        header = " " * (width + 1) + " ".join(n.rjust(width) for n in names)
        rows = [header]
        for a in range(8):
            rows.append(
                names[a].rjust(width)
                + " "
                + " ".join(cell(a, b).rjust(width) for b in range(8))
            )
        return "\n".join(rows)


_TABLE = StructureTable.build()
# complex copy so products do not re-promote the tensor on every call
_FLAT_TENSOR = np.ascontiguousarray(_TABLE.tensor.reshape(64, 8).astype(np.complex128))


def structure_table() -> StructureTable:
    """The frozen basis-product table (read-only, shared)."""
    return _TABLE


class CplxOcton:
    """One element of the complexified octonions: 8 complex coefficients.

    Values are immutable after construction; every operation returns a new
    element.  ``*`` multiplies in the algebra when given another element and
    scales coefficientwise when given a real or complex number.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs) -> None:
        c = np.array(coeffs, dtype=np.complex128)
        if c.shape != (8,):
            raise ValueError(f"expected 8 coefficients, got shape {c.shape}")
        if not np.all(np.isfinite(c.view(np.float64))):
            raise ValueError("coefficients must be finite")
        c.flags.writeable = False
        self.c = c

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "CplxOcton":
        # internal fast path: trusts dtype/shape, skips finiteness check
        obj = object.__new__(cls)
        arr.flags.writeable = False
        obj.c = arr
        return obj

    @classmethod
    def zero(cls) -> "CplxOcton":
        return cls._wrap(np.zeros(8, dtype=np.complex128))

    @classmethod
    def one(cls) -> "CplxOcton":
        return cls.scalar(1.0)

    @classmethod
    def scalar(cls, z: complex) -> "CplxOcton":
        c = np.zeros(8, dtype=np.complex128)
        c[0] = z
        return cls._wrap(c)

    @classmethod
    def basis(cls, a: int) -> "CplxOcton":
        if not 0 <= a <= 7:
            raise ValueError("basis index must be in 0..7")
        c = np.zeros(8, dtype=np.complex128)
        c[a] = 1.0
        return cls._wrap(c)

    def __add__(self, other: "CplxOcton") -> "CplxOcton":
        if not isinstance(other, CplxOcton):
            return NotImplemented
        return CplxOcton._wrap(self.c + other.c)

    def __sub__(self, other: "CplxOcton") -> "CplxOcton":
        if not isinstance(other, CplxOcton):
            return NotImplemented
        return CplxOcton._wrap(self.c - other.c)

    def __neg__(self) -> "CplxOcton":
        return CplxOcton._wrap(-self.c)

    def __mul__(self, other):
        if isinstance(other, CplxOcton):
            return mul(self, other)
        if isinstance(other, numbers.Complex):
            return CplxOcton._wrap(self.c * complex(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Complex):
            return CplxOcton._wrap(self.c * complex(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Complex):
            return CplxOcton._wrap(self.c / complex(other))
        return NotImplemented

    def __abs__(self) -> float:
        # Euclidean magnitude of the 16 real components (not the quadratic norm)
        return float(np.linalg.norm(self.c))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CplxOcton):
            return NotImplemented
        return bool(np.allclose(self.c, other.c, rtol=EQ_TOL, atol=EQ_TOL))

    __hash__ = None  # tolerance-based equality is incompatible with hashing

    def __repr__(self) -> str:
        names = ["", "e1", "e2", "e3", "e4", "e5", "e6", "e7"]
        parts = []
        for a, z in enumerate(self.c):
            if z == 0:
                continue
            zs = f"{z:.6g}" if z.imag == 0 else f"({z:.6g})"
            parts.append(zs if a == 0 else f"{zs}{names[a]}")
        return "CplxOcton<" + (" + ".join(parts) if parts else "0") + ">"


#: The multiplicative unit and the eight basis elements.
ONE = CplxOcton.one()
E = tuple(CplxOcton.basis(a) for a in range(8))
IM = CplxOcton.scalar(1j)


def mul(x: CplxOcton, y: CplxOcton) -> CplxOcton:
    """Bilinear product via the frozen structure table."""
    prod = (x.c[:, None] * y.c[None, :]).reshape(64)
    return CplxOcton._wrap(prod @ _FLAT_TENSOR)


def conj_oct(x: CplxOcton) -> CplxOcton:
    """Octonionic conjugation: fixes the scalar slot, negates e1..e7."""
    c = x.c.copy()
    c[1:] = -c[1:]
    return CplxOcton._wrap(c)


def conj_complex(x: CplxOcton) -> CplxOcton:
    """Complex conjugation of every coefficient; basis untouched."""
    return CplxOcton._wrap(np.conj(x.c))


def bar_star(x: CplxOcton) -> CplxOcton:
    """Combined octonionic and complex conjugation (an R-linear involution)."""
    c = np.conj(x.c)
    c[1:] = -c[1:]
    return CplxOcton._wrap(c)


def scal(x: CplxOcton) -> complex:
    """Scalar part (x + conj_oct(x))/2, returned as a complex number."""
    return complex(x.c[0])


def vec(x: CplxOcton) -> CplxOcton:
    """Vector part (x - conj_oct(x))/2."""
    c = x.c.copy()
    c[0] = 0.0
    return CplxOcton._wrap(c)


def inner(x: CplxOcton, y: CplxOcton) -> complex:
    """Symmetric complex-bilinear inner product 2<x,y> = x y~ + y x~.

    Reduces to the coefficient contraction sum_a x_a y_a (no complex
    conjugation: the form is bilinear, not sesquilinear).
    """
    return complex(np.dot(x.c, y.c))


def norm(x: CplxOcton) -> complex:
    """Complex quadratic form N(x) = x * conj_oct(x); multiplicative."""
    return complex(np.dot(x.c, x.c))


def inverse(x: CplxOcton) -> CplxOcton:
    """conj_oct(x)/N(x); raises :class:`ZeroDivisor` when N(x) ~ 0."""
    n = norm(x)
    mag2 = float(np.real(np.vdot(x.c, x.c)))
    if abs(n) < ZERO_DIVISOR_EPS * max(1.0, mag2):
        raise ZeroDivisor(f"element has vanishing quadratic norm {n!r}")
    return conj_oct(x) * (1.0 / n)


def commutator(x: CplxOcton, y: CplxOcton) -> CplxOcton:
    return mul(x, y) - mul(y, x)


def associator(x: CplxOcton, y: CplxOcton, z: CplxOcton) -> CplxOcton:
    """[x, y, z] = (xy)z - x(yz)."""
    return mul(mul(x, y), z) - mul(x, mul(y, z))


def _cos_sinc(z: complex) -> tuple[complex, complex]:
    # cos(omega) and sin(omega)/omega as functions of z = omega^2.  Both are
    # entire in z, so the square-root branch cannot change the result; the
    # principal branch is used, with a 4-term Taylor fallback near zero.
    om = cmath.sqrt(z)
    if abs(om) < SMALL_ANGLE:
        z2 = z * z
        z3 = z2 * z
        return 1 - z / 2 + z2 / 24 - z3 / 720, 1 - z / 6 + z2 / 120 - z3 / 5040
    return cmath.cos(om), cmath.sin(om) / om


def exp_assoc(u: CplxOcton) -> CplxOcton:
    """Closed-form exponential on the quaternionic subalgebra.

    With u = s + v (scalar plus vector part) and omega the principal square
    root of <v, v>:  exp(u) = e^s (cos(omega) + sinc(omega) v).

    Raises :class:`NotInAssociativeSubalgebra` if u has components on
    e4..e7 beyond a scale-relative tolerance.
    """
    tail = float(np.max(np.abs(u.c[4:])))
    if tail > ASSOC_MEMBERSHIP_TOL * max(1.0, abs(u)):
        raise NotInAssociativeSubalgebra(
            f"argument has components outside span{{1,e1,e2,e3}} (max {tail:.3g})"
        )
    s = complex(u.c[0])
    v = u.c[1:4]
    cos_w, sinc_w = _cos_sinc(complex(np.dot(v, v)))
    es = cmath.exp(s)
    c = np.zeros(8, dtype=np.complex128)
    c[0] = es * cos_w
    c[1:4] = (es * sinc_w) * v
    return CplxOcton._wrap(c)


def isclose(x: CplxOcton, y: CplxOcton, tol: float = EQ_TOL) -> bool:
    """Componentwise comparison within an absolute tolerance."""
    return bool(np.all(np.abs(x.c - y.c) <= tol))
