"""Parameter scans and soundness sweeps over state families."""
import logging
import math

import numpy as np

from mumsep import states
from mumsep.common import DETECT_TOL, WEIGHT_TOL
from mumsep.criteria import CriterionFactory, kNonsepCheck
from mumsep.errors import ConfigurationError, InvalidDimensionError
from mumsep.mum import buildMums, transposeMums
from mumsep.partition import PartitionSpec

logger = logging.getLogger('mumsep')

SCAN_HEADER = ['p', 'J', 'bound', 'margin', 'detected']


def pGrid(start, stop, step):
    """start, start+step, ... up to stop inclusive (within 1e-9 of a step)."""
    if not step > 0:
        raise ConfigurationError("Grid step must be positive, got %s" % step)
    if stop < start:
        raise ConfigurationError("Grid stop %s is below start %s" % (stop, start))
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(count)]


def checkGrid(grid, D, family):
    """Reject grid values outside the weights [-1/(D-1), 1] that keep the family positive."""
    if D < 2:
        raise InvalidDimensionError("%s needs a space of dimension >= 2, got %d" % (family, D))
    low = -1.0 / (D - 1)
    bad = [p for p in grid if p < low - WEIGHT_TOL or p > 1.0 + WEIGHT_TOL]
    if bad:
        raise ConfigurationError("%s grid leaves the valid range [%.6g, 1] at p=%s"
                                 % (family, low, bad[0]))


def isotropicWitness(d, p, kappa):
    """J(p) = p(d+1)kappa + (1-p)(d+1)/d for the isotropic family with Q = P^T."""
    return p * (d + 1) * kappa + (1.0 - p) * (d + 1) / d


def isotropicThreshold(d, kappa=None):
    """Isotropic weight where J crosses 1 + kappa; 1/(d+1) for any kappa > 1/d."""
    return 1.0 / (d + 1)


def _setsFor(dims, cache=None):
    cache = dict() if cache is None else cache
    out = []
    for d in dims:
        if d not in cache:
            cache[d] = buildMums(d)
        out.append(cache[d])
    return out


def _evaluate(theorem, sets, rho, strategy, tol, partition=None, **kwargs):
    if partition is not None:
        primary = theorem if theorem in ('T4', 'T5') else 'T4'
        return kNonsepCheck(rho, partition, sets, strategy, primary, tol)
    return CriterionFactory.create(theorem, sets, rho, strategy=strategy, tol=tol, **kwargs).run()


def scanIsotropic(d, theorem, grid, strategy='exact', t=None, tol=DETECT_TOL):
    """Evaluate `theorem` on isotropic(d, p) for every p in `grid`.

    Party 2 measures the transpose of party 1's set. Returns CSV-ready rows
    (p, J, bound, margin, detected) in grid order.
    """
    checkGrid(grid, d * d, "Isotropic")
    P = buildMums(d, t)
    sets = [P, transposeMums(P)]
    rows = []
    for p in grid:
        rho = states.isotropic(d, p)
        if theorem == 'MUB':
            report = _evaluate(theorem, None, rho, strategy, tol, conjugate=True)
        else:
            report = _evaluate(theorem, sets, rho, strategy, tol)
        rows.append([p, report.J, report.bound, report.margin, report.detected])
    logger.info("Isotropic scan d=%d %s: %d points, threshold %s", d, theorem, len(rows),
                thresholdOf(rows))
    return rows


def scanNoisyGhz(d, m, grid, theorem='T4', strategy='exact', partition=None, tol=DETECT_TOL):
    """Evaluate `theorem` on noisyGhz(d, m, p) for every p in `grid`.

    With `partition` the state is checked for k-nonseparability over the
    partition blocks, one maximal-efficiency set per block.
    """
    dims = (d,) * m
    checkGrid(grid, d ** m, "Noisy GHZ")
    cache = dict()
    if partition is not None:
        if not isinstance(partition, PartitionSpec):
            partition = PartitionSpec(partition, dims)
        sets = _setsFor(partition.blockDims, cache)
    else:
        sets = _setsFor(dims, cache)
    rows = []
    for p in grid:
        rho = states.noisyGhz(d, m, p)
        report = _evaluate(theorem, sets, rho, strategy, tol, partition)
        rows.append([p, report.J, report.bound, report.margin, report.detected])
    return rows


def thresholdOf(rows):
    """Smallest grid p with detected = True, or None. No interpolation."""
    for r in rows:
        if r[4]:
            return r[0]
    return None


def sweepSeparable(dims, count, seed, theorem, strategy='exact', terms=4, partition=None,
                   tol=DETECT_TOL):
    """Evaluate `theorem` on `count` seeded random fully separable states.

    Returns `(max_margin, reports)`. For T4/T5 both bounds count towards the
    maximum margin. A positive maximum beyond `tol` is a false positive.
    """
    if count < 1:
        raise ConfigurationError("Sweep needs at least one state, got %s" % count)
    dims = tuple(dims)
    cache = dict()
    if partition is not None:
        if not isinstance(partition, PartitionSpec):
            partition = PartitionSpec(partition, dims)
        sets = _setsFor(partition.blockDims, cache)
    else:
        sets = _setsFor(dims, cache)

    children = np.random.SeedSequence(seed).spawn(count)
    reports = []
    max_margin = -math.inf
    for child in children:
        rho = states.randomSeparable(dims, terms, child)
        if theorem == 'MUB':
            report = _evaluate(theorem, None, rho, strategy, tol)
        else:
            report = _evaluate(theorem, sets, rho, strategy, tol, partition)
        margins = [report.margin] + ([] if report.margin2 is None else [report.margin2])
        max_margin = max([max_margin] + margins)
        reports.append(report)
    logger.info("Separable sweep %s over %s: %d states, max margin %.3e", theorem, list(dims),
                count, max_margin)
    return max_margin, reports
