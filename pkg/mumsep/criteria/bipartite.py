import logging
import math

from mumsep.common import DETECT_TOL, IMAG_TOL
from mumsep.criteria.assignment import assignmentMax, selectionByParty
from mumsep.criteria.common import Criterion, CriterionReport, harmonizeM
from mumsep.errors import ConfigurationError

logger = logging.getLogger('mumsep')


def bound2(M, d1, d2, kappa1, kappa2):
    return 0.5 * ((M - 1) * (1.0 / d1 + 1.0 / d2) + kappa1 + kappa2)


def bound3(M, d1, d2, kappa1, kappa2):
    return math.sqrt((M - 1) / d1 + kappa1) * math.sqrt((M - 1) / d2 + kappa2)


class Bipartite(Criterion):
    """C^d1 x C^d2 with one set of M MUMs per party.

    For every measurement, d = min(d1, d2) outcomes of each party are paired
    one to one; J is the best total joint probability over such pairings.
    T2 and T3 share J and differ in the separable bound.
    """
    TypeMapping = {
        'T2': 'bipartite, arithmetic-mean bound',
        'T3': 'bipartite, geometric-mean bound',
    }

    def __init__(self, theorem, sets, rho, strategy='exact', tol=DETECT_TOL,
                 imag_tol=IMAG_TOL, **kwargs):
        super().__init__(theorem, sets, rho, strategy, tol, imag_tol)
        self.setInited()

    def validate(self):
        self.validateStrategy()
        if len(self.sets) != 2:
            raise ConfigurationError("%s needs exactly two sets, got %d"
                                     % (self.theorem, len(self.sets)))
        self.validateDims()
        self.sets, self.truncated = harmonizeM(self.sets)

    def evaluate(self):
        P, Q = self.sets
        d = min(P.d, Q.d)
        M = P.M
        J = 0.0
        selection = []
        for b in range(M):
            W = self.weights(b)
            value, pairs = assignmentMax(W, d, self.strategy)
            J += value
            selection.append(selectionByParty(pairs))
            logger.debug("%s: measurement %d pairs %s value %.12f", self.theorem, b, pairs, value)

        bound = bound2 if self.theorem == 'T2' else bound3
        return CriterionReport(self.theorem, J, bound(M, P.d, Q.d, P.kappa, Q.kappa),
                               self.strategy, selection, self.rho.dims, M, [P.kappa, Q.kappa],
                               self.tol, self.imag_tol, truncated=self.truncated)


def theorem2(P, Q, rho, strategy='exact', tol=DETECT_TOL):
    return Bipartite('T2', [P, Q], rho, strategy, tol).run()


def theorem3(P, Q, rho, strategy='exact', tol=DETECT_TOL):
    return Bipartite('T3', [P, Q], rho, strategy, tol).run()
