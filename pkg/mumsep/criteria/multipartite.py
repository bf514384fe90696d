import itertools
import logging
import math

import numpy as np

from mumsep.common import ASSIGNMENT_BUDGET, DETECT_TOL, IMAG_TOL
from mumsep.criteria.assignment import multiAssignment, selectionByParty
from mumsep.criteria.common import Criterion, CriterionReport, harmonizeM
from mumsep.errors import ConfigurationError, ShapeError
from mumsep.partition import PartitionSpec

logger = logging.getLogger('mumsep')


def _terms(M, dims, kappas):
    return [(M - 1) / d + k for d, k in zip(dims, kappas)]


def bound4(M, dims, kappas):
    return float(np.mean(_terms(M, dims, kappas)))


def bound5(M, dims, kappas):
    terms = _terms(M, dims, kappas)
    return min(math.sqrt(a) * math.sqrt(b) for a, b in itertools.combinations(terms, 2))


class Multipartite(Criterion):
    """C^d1 x ... x C^dm with one set of M MUMs per party, dimensions may differ.

    d = min(d_i) outcomes per party are matched into d tuples, one-to-one
    within each party. Both separable bounds are reported; `theorem` picks
    which one is primary (`bound`), the other goes to `bound2`.
    """
    TypeMapping = {
        'T4': 'multipartite, arithmetic-mean bound',
        'T5': 'multipartite, pairwise geometric-mean bound',
    }

    def __init__(self, theorem, sets, rho, strategy='exact', tol=DETECT_TOL,
                 imag_tol=IMAG_TOL, budget=ASSIGNMENT_BUDGET, partition=None, **kwargs):
        super().__init__(theorem, sets, rho, strategy, tol, imag_tol)
        self.budget = budget
        self.partition = partition
        self.setInited()

    def validate(self):
        self.validateStrategy()
        if len(self.sets) < 2:
            raise ConfigurationError("%s needs at least two sets, got %d"
                                     % (self.theorem, len(self.sets)))
        self.validateDims()
        self.sets, self.truncated = harmonizeM(self.sets)

    def evaluate(self):
        dims = [s.d for s in self.sets]
        d = min(dims)
        M = self.sets[0].M
        J = 0.0
        fallback = False
        selection = []
        for b in range(M):
            W = self.weights(b)
            value, tuples, used = multiAssignment(W, d, self.strategy, self.budget)
            fallback = fallback or used
            J += value
            selection.append(selectionByParty(tuples))
            logger.debug("%s: measurement %d tuples %s value %.12f", self.theorem, b, tuples, value)

        kappas = [s.kappa for s in self.sets]
        b4 = bound4(M, dims, kappas)
        b5 = bound5(M, dims, kappas)
        primary, secondary = (b4, b5) if self.theorem == 'T4' else (b5, b4)
        return CriterionReport(self.theorem, J, primary, self.strategy, selection,
                               self.rho.dims, M, kappas, self.tol, self.imag_tol,
                               bound2=secondary, fallback_used=fallback,
                               truncated=self.truncated, partition=self.partition)


def theorem45(sets, rho, strategy='exact', primary='T4', tol=DETECT_TOL,
              budget=ASSIGNMENT_BUDGET):
    return Multipartite(primary, sets, rho, strategy, tol, budget=budget).run()


def kNonsepCheck(rho, partition, sets, strategy='exact', primary='T4', tol=DETECT_TOL,
                 budget=ASSIGNMENT_BUDGET):
    """The multipartite criteria on rho read as a k-partite state over the partition blocks.

    Detection means rho is k-nonseparable with respect to this partition.
    Blocks must be runs of adjacent parties.
    """
    if not isinstance(partition, PartitionSpec):
        partition = PartitionSpec(partition, rho.dims)
    if tuple(partition.dims) != tuple(rho.dims):
        raise ShapeError("Partition over dims %s does not fit state dims %s"
                         % (list(partition.dims), list(rho.dims)))
    partition.requireAdjacent()
    block_dims = partition.blockDims
    if len(sets) != partition.k:
        raise ConfigurationError("Partition has %d blocks but %d sets were given"
                                 % (partition.k, len(sets)))
    logger.debug("k-nonseparability check on %s", partition)
    blocked = rho.withDims(block_dims)
    return Multipartite(primary, sets, blocked, strategy, tol, budget=budget,
                        partition=partition.shorty).run()
