"""Dense complex matrix algebra.

A ComplexMatrix is a square `numpy.ndarray` of dtype complex128. Functions
here never modify their arguments.
"""
import logging
import numpy as np

from mumsep.common import EIGEN_TOL, HERMITIAN_TOL
from mumsep.errors import ContractError, InvalidDimensionError, InvalidStateError, ShapeError

logger = logging.getLogger('mumsep')


def asMatrix(a):
    """Coerce `a` to a square complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ShapeError("Expecting a non-empty square matrix, got shape %s" % (m.shape,))
    return m


def identity(d: int):
    if not isinstance(d, (int, np.integer)) or d < 1:
        raise InvalidDimensionError("Invalid dimension %s for identity" % d)
    return np.eye(d, dtype=np.complex128)


def kron(a, b):
    return np.kron(asMatrix(a), asMatrix(b))


def kronAll(mats):
    assert(len(mats) > 0)
    out = asMatrix(mats[0])
    for m in mats[1:]:
        out = kron(out, m)
    return out


def trace(a):
    return complex(np.trace(asMatrix(a)))


def traceProduct(a, b):
    """Tr(ab) as sum_ij a[i,j] b[j,i], without forming the product."""
    a = asMatrix(a)
    b = asMatrix(b)
    if a.shape != b.shape:
        raise ShapeError("Mismatched shapes %s and %s" % (a.shape, b.shape))
    return complex(np.sum(a * b.T))


def dagger(a):
    return asMatrix(a).conj().T.copy()


def transpose(a):
    return asMatrix(a).T.copy()


def add(*mats):
    assert(len(mats) > 0)
    shape = asMatrix(mats[0]).shape
    out = np.zeros(shape, dtype=np.complex128)
    for m in mats:
        m = asMatrix(m)
        if m.shape != shape:
            raise ShapeError("Mismatched shapes %s and %s" % (shape, m.shape))
        out += m
    return out


def scale(c, a):
    return complex(c) * asMatrix(a)


def outer(v):
    """Rank-one projector v v^dagger normalized to unit trace."""
    v = np.asarray(v, dtype=np.complex128).reshape(-1)
    norm = np.linalg.norm(v)
    if v.size == 0 or norm == 0.0:
        raise InvalidStateError("Cannot build a projector from a zero vector")
    v = v / norm
    return np.outer(v, v.conj())


def hermiticityError(h):
    h = asMatrix(h)
    return float(np.max(np.abs(h - h.conj().T)))


def isHermitian(h, tol=HERMITIAN_TOL):
    return hermiticityError(h) <= tol


def eigenvalues(h, tol=HERMITIAN_TOL):
    """All eigenvalues of a Hermitian matrix, ascending.

    Uses LAPACK `heevd` through `numpy.linalg.eigvalsh`: Householder reduction
    to real tridiagonal form, then implicit QL/QR and divide-and-conquer
    iterations. An off-diagonal entry is deflated once it drops below machine
    epsilon times the neighbouring diagonal entries, which gives eigenvalues
    to an absolute accuracy of about eps * ||h||_2, far below EIGEN_TOL for
    the operator sizes used here.
    """
    h = asMatrix(h)
    err = hermiticityError(h)
    if err > tol:
        raise ContractError("Matrix is not Hermitian (deviation %.3e > %.1e)" % (err, tol))
    # symmetrize so that the solver only sees the Hermitian part
    return np.linalg.eigvalsh(0.5 * (h + h.conj().T))


def minEigenvalue(h, tol=EIGEN_TOL, herm_tol=HERMITIAN_TOL):
    """Smallest eigenvalue of Hermitian `h`, accurate to `tol` (absolute)."""
    w = eigenvalues(h, herm_tol)
    if tol < np.finfo(np.float64).eps * max(1.0, float(np.max(np.abs(w)))):
        logger.warning("Requested eigenvalue tolerance %.1e is below working precision", tol)
    return float(w[0])
