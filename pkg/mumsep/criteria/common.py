import logging

import numpy as np

from mumsep.common import DETECT_TOL, IMAG_TOL, MumsepBase
from mumsep.errors import ConfigurationError, NumericIntegrityError, ShapeError

logger = logging.getLogger('mumsep')

STRATEGIES = ('exact', 'greedy', 'diagonal')

DETECTED = 'detected'
NOT_DETECTED = 'not-detected'
INCONCLUSIVE = 'inconclusive-at-tolerance'


def verdictOf(margin, tol):
    if margin > tol:
        return DETECTED
    if margin < -tol:
        return NOT_DETECTED
    return INCONCLUSIVE


def checkReal(values, what, tol=IMAG_TOL):
    """Real part of `values` after checking the imaginary part is noise."""
    values = np.asarray(values)
    if np.iscomplexobj(values):
        imag = float(np.max(np.abs(values.imag))) if values.size else 0.0
        if imag > tol:
            raise NumericIntegrityError("%s has imaginary part %.3e > %.1e" % (what, imag, tol))
        return values.real.copy()
    return values.astype(np.float64)


def jointWeights(stacks, rho, tol=IMAG_TOL):
    """W[n1..nm] = Re Tr((P_1,n1 x ... x P_m,nm) rho).

    `stacks[i]` holds the d_i operators of party i with shape (d_i, d_i, d_i);
    `rho` is a DensityMatrix whose dims are (d_1, ..., d_m).
    """
    m = len(stacks)
    dims = rho.dims
    if tuple(s.shape[1] for s in stacks) != tuple(dims):
        raise ShapeError("Operator dims %s do not match state dims %s"
                         % ([s.shape[1] for s in stacks], list(dims)))
    tensor = rho.matrix.reshape(tuple(dims) + tuple(dims))
    # Tr(A rho) = sum A[r, c] rho[c, r]; party i uses axes n_i=i, r_i=m+i, c_i=2m+i.
    operands = []
    for i, s in enumerate(stacks):
        operands += [s, [i, m + i, 2 * m + i]]
    operands += [tensor, [2 * m + i for i in range(m)] + [m + i for i in range(m)]]
    operands += [list(range(m))]
    w = np.einsum(*operands, optimize=True)
    return checkReal(w, "Joint probability tensor", tol)


def harmonizeM(sets):
    """Truncate all sets to the smallest measurement count.

    Returns the sets and whether anything was truncated.
    """
    M = min(s.M for s in sets)
    truncated = any(s.M != M for s in sets)
    if truncated:
        logger.warning("Measurement counts %s differ, truncating all sets to M=%d",
                       [s.M for s in sets], M)
        sets = [s.truncate(M) if s.M != M else s for s in sets]
    return sets, truncated


class CriterionReport(object):
    """Witness value, bound(s) and verdict of one criterion evaluation."""
    def __init__(self, theorem, J, bound, strategy, selection, dims, M, kappas,
                 tol=DETECT_TOL, imag_tol=IMAG_TOL, bound2=None, fallback_used=False,
                 truncated=False, partition=None):
        assert(J >= -abs(tol))
        self.theorem = theorem
        self.J = float(J)
        self.bound = float(bound)
        self.bound2 = None if bound2 is None else float(bound2)
        self.strategy = strategy
        self.selection = selection
        self.dims = list(dims)
        self.M = M
        self.kappas = [float(k) for k in kappas]
        self.tol = tol
        self.imag_tol = imag_tol
        self.fallback_used = bool(fallback_used)
        self.truncated = bool(truncated)
        self.partition = partition

    @property
    def margin(self):
        return self.J - self.bound

    @property
    def detected(self):
        return self.margin > self.tol

    @property
    def verdict(self):
        return verdictOf(self.margin, self.tol)

    @property
    def margin2(self):
        return None if self.bound2 is None else self.J - self.bound2

    @property
    def detected2(self):
        return None if self.bound2 is None else self.margin2 > self.tol

    def asDict(self):
        out = {
            'theorem': self.theorem,
            'J': self.J,
            'bound': self.bound,
            'bound2': self.bound2,
            'margin': self.margin,
            'margin2': self.margin2,
            'detected': self.detected,
            'detected2': self.detected2,
            'verdict': self.verdict,
            'strategy': self.strategy,
            'selection': self.selection,
            'dims': self.dims,
            'M': self.M,
            'kappas': self.kappas,
            'tolerances': {'detect': self.tol, 'imag': self.imag_tol},
            'fallback_used': self.fallback_used,
            'truncated': self.truncated,
        }
        if self.partition is not None:
            out['partition'] = self.partition
        return out

    @property
    def shorty(self):
        return '<%s>(J=%.9f, bound=%.9f, %s)' % (self.theorem, self.J, self.bound, self.verdict)

    def __str__(self):
        extra = '' if self.bound2 is None else ' bound2=%.9f' % self.bound2
        return '%s dims=%s M=%d strategy=%s%s' % (self.shorty, self.dims, self.M,
                                                  self.strategy, extra)


class Criterion(MumsepBase):
    """One evaluation of a separability criterion on a state.

    Subclasses list the criterion ids they implement in `TypeMapping`, check
    their preconditions in `validate()` and produce a `CriterionReport` from
    `evaluate()`.
    """
    TypeMapping = dict()

    def __init__(self, theorem, sets, rho, strategy='exact', tol=DETECT_TOL, imag_tol=IMAG_TOL):
        super().__init__()
        assert(theorem in self.TypeMapping)
        self.theorem = theorem
        self.sets = list(sets) if sets is not None else []
        self.rho = rho
        self.strategy = strategy
        self.tol = tol
        self.imag_tol = imag_tol
        self.truncated = False
        self.name = theorem

    @property
    def type(self):
        return self.TypeMapping[self.theorem]

    def validateStrategy(self):
        if self.strategy not in STRATEGIES:
            raise ConfigurationError("Unknown strategy '%s', expecting one of %s"
                                     % (self.strategy, STRATEGIES))

    def validateDims(self):
        set_dims = tuple(s.d for s in self.sets)
        if set_dims != tuple(self.rho.dims):
            raise ShapeError("%s: set dimensions %s do not match state dims %s"
                             % (self.theorem, list(set_dims), list(self.rho.dims)))

    def weights(self, b):
        return jointWeights([s.measurement(b) for s in self.sets], self.rho, self.imag_tol)

    def run(self):
        """Validate and evaluate, returning the report."""
        try:
            self.validate()
        except Exception:
            self.setInvalid()
            raise
        self.setValidated()
        self.result = self.evaluate()
        self.setEvaluated()
        logger.debug("%s", self.result)
        return self.result

    @property
    def shorty(self):
        return '[%s](%s)' % (self.theorem, self.type)

    def __str__(self):
        return '%s on %s with %d sets, strategy %s' % (self.shorty, self.rho.shorty,
                                                       len(self.sets), self.strategy)


class CriterionFactory:
    """The factory for creating criterion evaluator objects."""

    registry = dict()

    @staticmethod
    def register(evaluator):
        for theorem in evaluator.TypeMapping.keys():
            assert(theorem not in CriterionFactory.registry)
            CriterionFactory.registry[theorem] = evaluator

    @staticmethod
    def create(theorem, sets, rho, **kwargs):
        if theorem not in CriterionFactory.registry:
            raise ConfigurationError("Unsupported criterion '%s', expecting one of %s"
                                     % (theorem, sorted(CriterionFactory.registry.keys())))
        evaluator = CriterionFactory.registry[theorem]
        return evaluator(theorem, sets, rho, **kwargs)

    @staticmethod
    def dump():
        return "Registered criteria: %d" % len(CriterionFactory.registry)
