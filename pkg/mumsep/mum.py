"""Complete sets of mutually unbiased measurements (MUMs) in any dimension.

The construction starts from the d^2-1 generators of SU(d), splits them into
d+1 groups of d-1, turns each group into d traceless operators F_n^(b) and
finally shifts them into positive operators P_n^(b) = I/d + t F_n^(b).

Basis states |1>..|d> and the (n, b) generator labels are 1-based to follow
the usual physics notation; every array is indexed 0-based, so |k> lives at
row/column k-1 and measurement b, outcome n is `operators[b-1][n-1]`.
"""
import functools
import logging
import math
from collections import namedtuple

import numpy as np

from mumsep import opalg
from mumsep.common import HERMITIAN_TOL, VERIFY_TOL
from mumsep.errors import ContractError, InvalidDimensionError, PositivityError

logger = logging.getLogger('mumsep')

KINDS = ('symmetric', 'antisymmetric', 'diagonal')

GeneratorLabel = namedtuple('GeneratorLabel', ['n', 'b', 'kind'])


def _checkDimension(d):
    if not isinstance(d, (int, np.integer)) or d < 2:
        raise InvalidDimensionError("Dimension must be an integer >= 2, got %s" % (d,))


def _ket(d, k):
    v = np.zeros(d, dtype=np.complex128)
    v[k - 1] = 1.0
    return v


class GeneratorSet(object):
    """The d^2-1 orthonormal SU(d) generators F_{n,b} with their labels."""
    def __init__(self, d, ops, labels):
        assert(len(ops) == len(labels) == d * d - 1)
        self.d = d
        self.ops = ops
        self.labels = labels

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return zip(self.labels, self.ops)

    @property
    def shorty(self):
        return '<SU(%d) generators>(%d)' % (self.d, len(self.ops))

    def __str__(self):
        return '%s: %s' % (self.shorty, [tuple(lb) for lb in self.labels])


def suGenerators(d: int):
    _checkDimension(d)
    ops = []
    labels = []
    sq2 = math.sqrt(2.0)
    for n in range(1, d + 1):
        for b in range(1, d + 1):
            if n < b:
                kn, kb = _ket(d, n), _ket(d, b)
                op = (np.outer(kn, kb) + np.outer(kb, kn)) / sq2
                kind = 'symmetric'
            elif b < n:
                kn, kb = _ket(d, n), _ket(d, b)
                op = 1j * (np.outer(kn, kb) - np.outer(kb, kn)) / sq2
                kind = 'antisymmetric'
            elif n < d:
                diag = np.zeros(d)
                diag[:n] = 1.0
                diag[n] = -n
                op = np.diag(diag).astype(np.complex128) / math.sqrt(n * (n + 1))
                kind = 'diagonal'
            else:
                continue
            ops.append(op)
            labels.append(GeneratorLabel(n, b, kind))
    logger.debug("Built %d SU(%d) generators", len(ops), d)
    return GeneratorSet(d, ops, labels)


def partitionGenerators(g: GeneratorSet):
    """Split the generators into d+1 disjoint groups of d-1.

    Generators are ordered by (kind, n, b), kinds in the order symmetric,
    antisymmetric, diagonal, and chunked consecutively. Returns a list of
    groups, each a list of (label, operator) pairs; group b supplies
    F_{1,b}..F_{d-1,b}.
    """
    d = g.d
    order = sorted(range(len(g)), key=lambda i: (KINDS.index(g.labels[i].kind),
                                                  g.labels[i].n, g.labels[i].b))
    size = d - 1
    groups = []
    for b in range(d + 1):
        chunk = order[b * size:(b + 1) * size]
        groups.append([(g.labels[i], g.ops[i]) for i in chunk])
    assert(sum(len(grp) for grp in groups) == len(g))
    return groups


@functools.lru_cache(maxsize=32)
def _fOperators(d):
    groups = partitionGenerators(suGenerators(d))
    sqd = math.sqrt(d)
    f_ops = np.zeros((d + 1, d, d, d), dtype=np.complex128)
    for b, grp in enumerate(groups):
        total = sum(op for _, op in grp)
        for n, (_, op) in enumerate(grp):
            f_ops[b, n] = total - (d + sqd) * op
        f_ops[b, d - 1] = (1.0 + sqd) * total
    f_ops.setflags(write=False)
    return f_ops


def buildFOperators(d: int):
    """The traceless operators F_n^(b), as an array of shape (d+1, d, d, d)."""
    _checkDimension(d)
    return _fOperators(int(d))


@functools.lru_cache(maxsize=32)
def _maxT(d):
    f_ops = buildFOperators(d)
    t = math.inf
    for b in range(f_ops.shape[0]):
        for n in range(d):
            lam = opalg.minEigenvalue(f_ops[b, n])
            assert(lam < 0), "traceless non-zero operator must have a negative eigenvalue"
            t = min(t, (1.0 / d) / abs(lam))
    logger.debug("max t for d=%d: %.17g", d, t)
    return t


def maxT(d: int):
    """Largest t keeping every I/d + t F_n^(b) positive semidefinite."""
    _checkDimension(d)
    return _maxT(int(d))


def kappaFromT(d: int, t: float):
    if t < 0:
        raise ContractError("Construction parameter t must be nonnegative, got %s" % t)
    sqd = math.sqrt(d)
    return 1.0 / d + t * t * (1.0 + sqd) ** 2 * (d - 1)


class MumSet(object):
    """M measurements of d operators each on C^d with efficiency kappa.

    `operators[b, n]` is P_{n+1}^{(b+1)}. Arrays are read-only so a set can
    be shared freely once built.
    """
    def __init__(self, d, t, kappa, operators, f_ops=None):
        operators = np.array(operators, dtype=np.complex128)
        assert(operators.ndim == 4 and operators.shape[1:] == (d, d, d))
        operators.setflags(write=False)
        if f_ops is not None:
            f_ops = np.array(f_ops, dtype=np.complex128)
            f_ops.setflags(write=False)
        self.d = d
        self.M = operators.shape[0]
        self.t = t
        self.kappa = kappa
        self.operators = operators
        self.f_ops = f_ops

    def measurement(self, b):
        """The d operators of measurement b (0-based) as shape (d, d, d)."""
        return self.operators[b]

    def truncate(self, M):
        """The first M measurements, an incomplete set with the same kappa."""
        if M < 1 or M > self.M:
            raise ContractError("Cannot truncate %d measurements to %d" % (self.M, M))
        f_ops = None if self.f_ops is None else self.f_ops[:M]
        return MumSet(self.d, self.t, self.kappa, self.operators[:M], f_ops)

    @property
    def isComplete(self):
        return self.M == self.d + 1

    def __eq__(self, other):
        if not isinstance(other, MumSet):
            return NotImplemented
        return (self.d == other.d and self.M == other.M and self.t == other.t and
                self.kappa == other.kappa and np.array_equal(self.operators, other.operators))

    def __hash__(self):
        return hash((self.d, self.M, self.t, self.kappa))

    @property
    def shorty(self):
        return '<MUMs d=%d>(M=%d, kappa=%.6f)' % (self.d, self.M, self.kappa)

    def __str__(self):
        t = 'None' if self.t is None else '%.17g' % self.t
        return '%s: t=%s kappa=%.17g' % (self.shorty, t, self.kappa)


def buildMums(d: int, t=None):
    """Build the complete set of d+1 MUMs, P_n^(b) = I/d + t F_n^(b).

    `t` defaults to `maxT(d)`, the maximal efficiency. A `t` beyond it raises
    `PositivityError` naming the first non-positive operator.
    """
    _checkDimension(d)
    f_ops = buildFOperators(d)
    if t is None:
        t = maxT(d)
    t = float(t)
    if not t > 0:
        raise ContractError("Construction parameter t must be positive, got %s" % t)

    operators = np.eye(d, dtype=np.complex128) / d + t * f_ops
    for b in range(d + 1):
        for n in range(d):
            lam = opalg.minEigenvalue(operators[b, n])
            if lam < -HERMITIAN_TOL:
                raise PositivityError("P_%d^(%d) is not positive (min eigenvalue %.3e) for t=%.17g"
                                      % (n + 1, b + 1, lam, t), where=(b, n))

    kappa = kappaFromT(d, t)
    s = MumSet(d, t, kappa, operators, f_ops)
    logger.info("Built %s", s)
    return s


def transposeMums(s: MumSet):
    """Entrywise transpose of every operator; a valid set with the same kappa."""
    operators = np.swapaxes(s.operators, -1, -2)
    f_ops = None if s.f_ops is None else np.swapaxes(s.f_ops, -1, -2)
    return MumSet(s.d, s.t, s.kappa, operators, f_ops)


class VerificationReport(object):
    """Maximum absolute deviation per condition and whether it passed."""
    def __init__(self, name, tol):
        self.name = name
        self.tol = tol
        self.deviations = dict()
        self.checks = dict()

    def record(self, condition, deviation, passed=None):
        deviation = float(deviation)
        self.deviations[condition] = deviation
        self.checks[condition] = (deviation <= self.tol) if passed is None else bool(passed)

    @property
    def passed(self):
        return all(self.checks.values())

    @property
    def failures(self):
        return [c for c, ok in self.checks.items() if not ok]

    def asDict(self):
        return {
            'name': self.name,
            'tolerance': self.tol,
            'passed': self.passed,
            'deviations': dict(self.deviations),
            'checks': dict(self.checks),
        }

    @property
    def shorty(self):
        return '<%s>(%s)' % (self.name, 'pass' if self.passed else 'FAIL')

    def __str__(self):
        lines = [self.shorty]
        for c in self.deviations:
            lines.append('  %-16s %.3e %s' % (c, self.deviations[c],
                                              'ok' if self.checks[c] else 'FAIL'))
        return '\n'.join(lines)


def _gram(ops_a, ops_b):
    """Tr(A_i B_j) for all pairs of stacked operators."""
    na = ops_a.shape[0]
    nb = ops_b.shape[0]
    a = ops_a.reshape(na, -1)
    bt = np.swapaxes(ops_b, -1, -2).reshape(nb, -1)
    return a @ bt.T


def verifyMums(s: MumSet, tol=VERIFY_TOL):
    d = s.d
    M = s.M
    report = VerificationReport('MUM verification', tol)
    ops = s.operators

    report.record('hermitian', max(opalg.hermiticityError(p) for p in ops.reshape(-1, d, d)))
    traces = np.trace(ops, axis1=-2, axis2=-1)
    report.record('unit_trace', np.max(np.abs(traces - 1.0)))

    # symmetrize for the eigensolver, hermiticity already recorded above
    herm = 0.5 * (ops + np.conj(np.swapaxes(ops, -1, -2)))
    min_eig = float(np.min(np.linalg.eigvalsh(herm)))
    report.record('positive', max(0.0, -min_eig))

    complete = ops.sum(axis=1) - np.eye(d)
    report.record('completeness', np.max(np.abs(complete)))

    flat = ops.reshape(M * d, d, d)
    gram = _gram(flat, flat)
    same_b = np.kron(np.eye(M), np.ones((d, d)))
    same_n = np.kron(np.ones((M, M)), np.eye(d))
    kappa = s.kappa
    expected = (same_n * same_b * kappa + (1 - same_n) * same_b * (1 - kappa) / (d - 1) +
                (1 - same_b) / d)
    report.record('trace_relations', np.max(np.abs(gram - expected)))

    in_range = (1.0 / d < kappa <= 1.0 + tol)
    report.record('kappa_range', max(0.0, 1.0 / d - kappa, kappa - 1.0), in_range)

    if s.t is not None:
        report.record('kappa_formula', abs(kappa - kappaFromT(d, s.t)))

    logger.debug("%s", report)
    return report


def verifyFConditions(f_ops, d, tol=VERIFY_TOL):
    f_ops = np.asarray(f_ops, dtype=np.complex128)
    B = f_ops.shape[0]
    assert(f_ops.shape[1:] == (d, d, d))
    report = VerificationReport('F-operator verification', tol)

    flat = f_ops.reshape(B * d, d, d)
    report.record('hermitian', max(opalg.hermiticityError(f) for f in flat))
    report.record('traceless', np.max(np.abs(np.trace(flat, axis1=-2, axis2=-1))))
    report.record('sum_zero', np.max(np.abs(f_ops.sum(axis=1))))

    gram = _gram(flat, flat)
    scale2 = (1.0 + math.sqrt(d)) ** 2
    intra = scale2 * (d * np.eye(d) - np.ones((d, d)))
    intra_dev = 0.0
    inter_dev = 0.0
    for b in range(B):
        for b2 in range(B):
            block = gram[b * d:(b + 1) * d, b2 * d:(b2 + 1) * d]
            if b == b2:
                intra_dev = max(intra_dev, float(np.max(np.abs(block - intra))))
            else:
                inter_dev = max(inter_dev, float(np.max(np.abs(block))))
    report.record('intra_gram', intra_dev)
    report.record('inter_orthogonal', inter_dev)
    logger.debug("%s", report)
    return report
