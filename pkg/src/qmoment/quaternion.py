"""Quaternion scalars and quaternionic matrices.

Quaternions are stored as four real components (w, x, y, z) with
q = w + x*i + y*j + z*k and the Hamilton product.  Matrices over the
quaternions are stored natively as float arrays of shape (rows, cols, 4);
the complex 2x2-block embedding is used only where complex linear algebra
is genuinely needed (matrix exponentials).

Array-level helpers (``quat_mul``, ``quat_conj``, ...) operate on
``(..., 4)`` float arrays and broadcast; the ``Quaternion`` and
``QuatMatrix`` classes wrap them for convenience.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

# Centralized tolerance conventions: algebraic identities are required to
# hold to ALGEBRA_TOL, membership in matrix groups to GROUP_TOL.
ALGEBRA_TOL = 1e-12
GROUP_TOL = 1e-10
UNEMBED_TOL = 1e-10


# ---------------------------------------------------------------------------
# array-level quaternion algebra
# ---------------------------------------------------------------------------

def quat_mul(a, b):
    """Hamilton product of component arrays of shape (..., 4), broadcasting."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    bw, bx, by, bz = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ],
        axis=-1,
    )


def quat_conj(a):
    """Quaternion conjugate of a component array of shape (..., 4)."""
    a = np.asarray(a, dtype=float)
    out = a.copy()
    out[..., 1:] *= -1.0
    return out


def quat_normsq(a):
    a = np.asarray(a, dtype=float)
    return np.sum(a * a, axis=-1)


def quat_norm(a):
    return np.sqrt(quat_normsq(a))


def quat_inv(a):
    n2 = quat_normsq(a)
    if np.any(n2 == 0.0):
        raise ZeroDivisionError("inverse of zero quaternion")
    return quat_conj(a) / n2[..., None]


def quat_from_complex(z):
    """Embed a complex scalar w + xi as the quaternion (w, x, 0, 0)."""
    z = complex(z)
    return np.array([z.real, z.imag, 0.0, 0.0])


def im_parts(q):
    """Return the four real components (re, im_i, im_j, im_k) of a quaternion."""
    arr = q.q if isinstance(q, Quaternion) else np.asarray(q, dtype=float)
    return float(arr[0]), float(arr[1]), float(arr[2]), float(arr[3])


def im_i(q):
    """The coefficient of i."""
    arr = q.q if isinstance(q, Quaternion) else np.asarray(q, dtype=float)
    return float(arr[..., 1]) if arr.ndim == 1 else arr[..., 1]


class Quaternion:
    """A single quaternion w + x*i + y*j + z*k."""

    __slots__ = ("q",)

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        self.q = np.array([w, x, y, z], dtype=float)

    @classmethod
    def from_array(cls, arr):
        out = object.__new__(cls)
        out.q = np.asarray(arr, dtype=float).reshape(4).copy()
        return out

    @property
    def w(self):
        return float(self.q[0])

    @property
    def x(self):
        return float(self.q[1])

    @property
    def y(self):
        return float(self.q[2])

    @property
    def z(self):
        return float(self.q[3])

    def conj(self):
        return Quaternion.from_array(quat_conj(self.q))

    def norm(self):
        return float(quat_norm(self.q))

    def inverse(self):
        return Quaternion.from_array(quat_inv(self.q))

    def __add__(self, other):
        return Quaternion.from_array(self.q + _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Quaternion.from_array(self.q - _coerce(other))

    def __rsub__(self, other):
        return Quaternion.from_array(_coerce(other) - self.q)

    def __neg__(self):
        return Quaternion.from_array(-self.q)

    def __mul__(self, other):
        return Quaternion.from_array(quat_mul(self.q, _coerce(other)))

    def __rmul__(self, other):
        return Quaternion.from_array(quat_mul(_coerce(other), self.q))

    def allclose(self, other, tol=ALGEBRA_TOL):
        return bool(np.max(np.abs(self.q - _coerce(other))) <= tol)

    def __repr__(self):
        w, x, y, z = self.q
        return f"Quaternion({w:+.6g} {x:+.6g}i {y:+.6g}j {z:+.6g}k)"


def _coerce(value):
    """Coerce a Quaternion / real / complex / array to a (4,) component array."""
    if isinstance(value, Quaternion):
        return value.q
    if isinstance(value, complex):
        return np.array([value.real, value.imag, 0.0, 0.0])
    if np.isscalar(value):
        return np.array([float(value), 0.0, 0.0, 0.0])
    return np.asarray(value, dtype=float).reshape(4)


QUAT_ONE = Quaternion(1.0)
QUAT_I = Quaternion(0.0, 1.0)
QUAT_J = Quaternion(0.0, 0.0, 1.0)
QUAT_K = Quaternion(0.0, 0.0, 0.0, 1.0)


# ---------------------------------------------------------------------------
# quaternionic matrices
# ---------------------------------------------------------------------------

class QuatMatrix:
    """A matrix with quaternion entries, stored as a (rows, cols, 4) array."""

    __slots__ = ("q",)

    def __init__(self, arr):
        arr = np.asarray(arr, dtype=float)
        if arr.ndim != 3 or arr.shape[2] != 4:
            raise ValueError(f"expected shape (rows, cols, 4), got {arr.shape}")
        self.q = arr

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(np.zeros((rows, cols, 4)))

    @classmethod
    def identity(cls, n):
        arr = np.zeros((n, n, 4))
        arr[np.arange(n), np.arange(n), 0] = 1.0
        return cls(arr)

    @classmethod
    def from_entries(cls, entries):
        """Build from a nested list of Quaternion / scalar / complex entries."""
        rows = len(entries)
        cols = len(entries[0])
        arr = np.zeros((rows, cols, 4))
        for p in range(rows):
            for r in range(cols):
                arr[p, r] = _coerce(entries[p][r])
        return cls(arr)

    @classmethod
    def diag_complex(cls, values):
        """Diagonal matrix with complex entries embedded in the i-plane."""
        n = len(values)
        arr = np.zeros((n, n, 4))
        for p, z in enumerate(values):
            z = complex(z)
            arr[p, p, 0] = z.real
            arr[p, p, 1] = z.imag
        return cls(arr)

    # -- shape and entries -------------------------------------------------

    @property
    def rows(self):
        return self.q.shape[0]

    @property
    def cols(self):
        return self.q.shape[1]

    @property
    def shape(self):
        return (self.q.shape[0], self.q.shape[1])

    def entry(self, p, r):
        return Quaternion.from_array(self.q[p, r])

    def set_entry(self, p, r, value):
        self.q[p, r] = _coerce(value)

    def copy(self):
        return QuatMatrix(self.q.copy())

    # -- algebra ------------------------------------------------------------

    def __add__(self, other):
        return QuatMatrix(self.q + other.q)

    def __sub__(self, other):
        return QuatMatrix(self.q - other.q)

    def __neg__(self):
        return QuatMatrix(-self.q)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        prod = quat_mul(self.q[:, :, None, :], other.q[None, :, :, :])
        return QuatMatrix(prod.sum(axis=1))

    def scale(self, real):
        return QuatMatrix(self.q * float(real))

    def left_mul_scalar(self, s):
        """Entrywise multiplication by a quaternion scalar on the left."""
        return QuatMatrix(quat_mul(_coerce(s), self.q))

    def right_mul_scalar(self, s):
        """Entrywise multiplication by a quaternion scalar on the right."""
        return QuatMatrix(quat_mul(self.q, _coerce(s)))

    def dagger(self):
        """Conjugate transpose."""
        return QuatMatrix(quat_conj(np.swapaxes(self.q, 0, 1)))

    def norm(self):
        return float(np.sqrt(np.sum(self.q * self.q)))

    def allclose(self, other, tol=ALGEBRA_TOL):
        return bool(np.max(np.abs(self.q - other.q)) <= tol)

    def __repr__(self):
        return f"QuatMatrix({self.rows}x{self.cols})"


def mat_ip(A, B):
    """Real inner product Re tr(A conj(B)^t); symmetric and positive definite."""
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch {A.shape} vs {B.shape}")
    return float(np.sum(A.q * B.q))


def mat_identity_defect(A):
    """Frobenius distance from dagger(A) @ A to the identity."""
    return (A.dagger() @ A - QuatMatrix.identity(A.rows)).norm()


# ---------------------------------------------------------------------------
# complex embedding: q = a + j*b with complex a, b maps to [[a, -conj(b)],
# [b, conj(a)]]; blockwise for matrices.  This is an algebra homomorphism.
# ---------------------------------------------------------------------------

def complex_embed(A):
    """Embed a QuatMatrix as a complex matrix of shape (2*rows, 2*cols)."""
    a = A.q[..., 0] + 1j * A.q[..., 1]
    b = A.q[..., 2] - 1j * A.q[..., 3]
    top = np.concatenate([a, -np.conj(b)], axis=1)
    bot = np.concatenate([b, np.conj(a)], axis=1)
    return np.concatenate([top, bot], axis=0)


def complex_unembed(M, tol=UNEMBED_TOL):
    """Invert ``complex_embed``; rejects matrices without the block symmetry."""
    M = np.asarray(M, dtype=complex)
    rows2, cols2 = M.shape
    if rows2 % 2 or cols2 % 2:
        raise ValueError("embedded matrix must have even dimensions")
    r, c = rows2 // 2, cols2 // 2
    a, nb = M[:r, :c], M[:r, c:]
    b, ca = M[r:, :c], M[r:, c:]
    scale = max(1.0, np.abs(M).max())
    defect = max(np.abs(ca - np.conj(a)).max(), np.abs(nb + np.conj(b)).max())
    if defect > tol * scale:
        raise ValueError(f"block symmetry violated by {defect:.3e}")
    a = 0.5 * (a + np.conj(ca))
    b = 0.5 * (b - np.conj(nb))
    arr = np.stack([a.real, a.imag, b.real, -b.imag], axis=-1)
    return QuatMatrix(arr)


def mat_exp(X):
    """Matrix exponential of a square QuatMatrix via the complex embedding."""
    if X.rows != X.cols:
        raise ValueError("matrix exponential requires a square matrix")
    return complex_unembed(scipy.linalg.expm(complex_embed(X)), tol=1e-8)
