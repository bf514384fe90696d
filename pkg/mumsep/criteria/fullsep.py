import logging
import math

import numpy as np

from mumsep.common import DETECT_TOL, IMAG_TOL
from mumsep.criteria.common import Criterion, CriterionReport
from mumsep.errors import ConfigurationError

logger = logging.getLogger('mumsep')


def lemma1Gap(x):
    """(sum x_i^2 / n)^(n/2) - prod x_i, nonnegative for nonnegative x."""
    x = np.asarray(x, dtype=np.float64)
    n = x.size
    assert(n > 0 and np.all(x >= 0))
    return float(np.mean(x * x) ** (n / 2.0) - np.prod(x))


def bound1(M, d, kappas):
    return (M - 1) / d + float(np.mean(kappas))


class FullSeparability(Criterion):
    """m parties of equal dimension d, each with its own set of M MUMs.

    J sums the joint probabilities of equal outcomes across all parties;
    a fully separable state has J <= (M-1)/d + mean(kappa_i).
    """
    TypeMapping = {
        'T1': 'full separability, equal dimensions',
    }

    def __init__(self, theorem, sets, rho, strategy='diagonal', tol=DETECT_TOL,
                 imag_tol=IMAG_TOL, **kwargs):
        super().__init__(theorem, sets, rho, 'diagonal', tol, imag_tol)
        self.setInited()

    def validate(self):
        if len(self.sets) < 2:
            raise ConfigurationError("T1 needs at least two parties, got %d sets" % len(self.sets))
        ds = set(s.d for s in self.sets)
        Ms = set(s.M for s in self.sets)
        if len(ds) != 1 or len(Ms) != 1:
            raise ConfigurationError("T1 needs sets of one dimension and one size, got d=%s M=%s"
                                     % (sorted(ds), sorted(Ms)))
        self.validateDims()

    def evaluate(self):
        d = self.sets[0].d
        M = self.sets[0].M
        m = len(self.sets)
        diag = tuple([np.arange(d)] * m)
        J = 0.0
        for b in range(M):
            W = self.weights(b)
            J += float(np.sum(W[diag]))
            logger.debug("T1: measurement %d, running J=%.12f", b, J)
        kappas = [s.kappa for s in self.sets]
        bound = bound1(M, d, kappas)
        assert(math.isfinite(J))
        return CriterionReport(self.theorem, J, bound, self.strategy, 'full diagonal',
                               self.rho.dims, M, kappas, self.tol, self.imag_tol)


def theorem1(sets, rho, tol=DETECT_TOL):
    return FullSeparability('T1', sets, rho, tol=tol).run()
