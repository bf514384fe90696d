import logging

import numpy as np

from mumsep.common import DETECT_TOL, IMAG_TOL, VERIFY_TOL
from mumsep.criteria.common import Criterion, CriterionReport, checkReal
from mumsep.errors import ContractError, ShapeError, UnsupportedDimensionError
from mumsep.mub import isPrime, mubPrime

logger = logging.getLogger('mumsep')


def probabilities(measurement, rho, tol=IMAG_TOL):
    """Outcome probabilities Tr(P_n rho) of one measurement on a single party."""
    measurement = np.asarray(measurement)
    if measurement.shape[1:] != rho.matrix.shape:
        raise ShapeError("Measurement on C^%d cannot act on a state of dimension %d"
                         % (measurement.shape[1], rho.D))
    p = np.einsum('nij,ji->n', measurement, rho.matrix)
    return checkReal(p, "Outcome probabilities", tol)


def coincidence(measurement, rho, tol=IMAG_TOL):
    """Index of coincidence C(P|rho) = sum_n Tr(P_n rho)^2."""
    p = probabilities(measurement, rho, tol)
    return float(np.sum(p * p))


def coincidenceSum(mums, rho, tol=IMAG_TOL):
    """Sum of the indices of coincidence over every measurement of a set."""
    return sum(coincidence(mums.measurement(b), rho, tol) for b in range(mums.M))


def coincidenceBound(M, d, kappa, purity, tol=VERIFY_TOL):
    """Upper bound on the coincidence sum of M MUMs of efficiency kappa.

    For M = d+1 the sum equals this bound exactly.
    """
    if M < 1:
        raise ContractError("Need at least one measurement, got M=%s" % M)
    if not (1.0 / d < kappa <= 1.0 + tol):
        raise ContractError("Efficiency %s outside (1/%d, 1]" % (kappa, d))
    if not (1.0 / d - tol <= purity <= 1.0 + tol):
        raise ContractError("Purity %s outside [1/%d, 1]" % (purity, d))
    return (M - 1) / d + (1.0 - kappa + (kappa * d - 1.0) * purity) / (d - 1)


def mubIndex(bases, rho, conjugate=False, tol=IMAG_TOL):
    """MUB correlation I_m = sum_ij <b_ij b_ij| rho |b_ij b_ij> and its bound 1 + (m-1)/d.

    `bases` has shape (m, d, d) (see `mubPrime`); None builds the complete
    prime-dimension set. With `conjugate` the second party uses the complex
    conjugate basis vectors, which is what correlates with |phi+>.
    """
    if len(rho.dims) != 2 or rho.dims[0] != rho.dims[1]:
        raise ShapeError("MUB index needs a state on C^d x C^d, got dims %s" % (rho.dims,))
    d = rho.dims[0]
    if bases is None:
        bases = mubPrime(d)
    bases = np.asarray(bases, dtype=np.complex128)
    if not isPrime(d) or bases.shape[1:] != (d, d):
        raise UnsupportedDimensionError("MUB index needs a prime dimension, got %d" % d)
    m = bases.shape[0]
    total = 0.0
    for i in range(m):
        for j in range(d):
            u = bases[i, j]
            v = np.kron(u, u.conj() if conjugate else u)
            total += checkReal(v.conj() @ rho.matrix @ v, "MUB overlap", tol)
    return float(total), 1.0 + (m - 1) / d


class MubCriterion(Criterion):
    TypeMapping = {
        'MUB': 'mutually unbiased bases correlation',
    }

    def __init__(self, theorem, sets, rho, strategy='diagonal', tol=DETECT_TOL,
                 imag_tol=IMAG_TOL, bases=None, conjugate=False, **kwargs):
        super().__init__(theorem, None, rho, 'diagonal', tol, imag_tol)
        self.bases = bases
        self.conjugate = conjugate
        self.setInited()

    def validate(self):
        if len(self.rho.dims) != 2 or self.rho.dims[0] != self.rho.dims[1]:
            raise ShapeError("MUB criterion needs a state on C^d x C^d, got dims %s"
                             % (self.rho.dims,))
        if self.bases is None:
            self.bases = mubPrime(self.rho.dims[0])

    def evaluate(self):
        value, bound = mubIndex(self.bases, self.rho, self.conjugate, self.imag_tol)
        m = len(self.bases)
        return CriterionReport(self.theorem, value, bound, self.strategy, 'full diagonal',
                               self.rho.dims, m, [1.0, 1.0], self.tol, self.imag_tol)
