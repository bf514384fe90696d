"""Density matrices on composite spaces and the families the criteria are tested on.

Randomness always comes from an explicit seed. Seeds are expanded with
`numpy.random.SeedSequence` and drawn through the PCG64 bit generator;
multi-party and multi-term states spawn one child stream per party/term so
the draw of one party never shifts another's.
"""
import logging
import math

import numpy as np

from mumsep import opalg
from mumsep.common import HERMITIAN_TOL, PSD_TOL, WEIGHT_TOL
from mumsep.errors import (InvalidDimensionError, InvalidMixtureError, InvalidStateError,
                           PositivityError, ShapeError)

logger = logging.getLogger('mumsep')


def _checkDims(dims):
    dims = tuple(int(x) for x in dims)
    if len(dims) == 0 or any(x < 2 for x in dims):
        raise InvalidDimensionError("Subsystem dimensions must all be >= 2, got %s" % (dims,))
    return dims


class DensityMatrix(object):
    """Trace-one positive Hermitian operator on C^d1 x ... x C^dm.

    The invariants are checked on construction unless `check=False`; in that
    case call `validate()` to learn which ones fail.
    """
    def __init__(self, matrix, dims, check=True):
        dims = _checkDims(dims)
        matrix = opalg.asMatrix(matrix).copy()
        D = int(np.prod(dims))
        if matrix.shape != (D, D):
            raise ShapeError("Matrix shape %s does not match dims %s" % (matrix.shape, dims))
        matrix.setflags(write=False)
        self.dims = dims
        self.matrix = matrix
        if check:
            failures = self.validate()
            if failures:
                raise InvalidStateError("Invalid density matrix: %s" % '; '.join(failures))

    @property
    def D(self):
        return self.matrix.shape[0]

    def validate(self, herm_tol=HERMITIAN_TOL, psd_tol=PSD_TOL):
        """Return the list of violated invariants, empty if the state is valid."""
        failures = []
        herm = opalg.hermiticityError(self.matrix)
        if herm > herm_tol:
            failures.append("not Hermitian (deviation %.3e)" % herm)
        tr = np.trace(self.matrix)
        if abs(tr - 1.0) > herm_tol:
            failures.append("trace is %s, not 1" % tr)
        if herm <= herm_tol:
            lam = opalg.minEigenvalue(self.matrix, herm_tol=herm_tol)
            if lam < -psd_tol:
                failures.append("not positive (min eigenvalue %.3e)" % lam)
        return failures

    def withDims(self, dims):
        """The same operator read over another factorization of the space."""
        return DensityMatrix(self.matrix, dims, check=False)

    def __eq__(self, other):
        if not isinstance(other, DensityMatrix):
            return NotImplemented
        return self.dims == other.dims and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self.dims)

    @property
    def shorty(self):
        return '<rho>(%s)' % 'x'.join(str(x) for x in self.dims)

    def __str__(self):
        return '%s purity=%.6f' % (self.shorty, purity(self))


def _generator(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def _seedSequence(seed):
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(seed)


def maximallyMixed(dims):
    dims = _checkDims(dims)
    D = int(np.prod(dims))
    return DensityMatrix(opalg.identity(D) / D, dims)


def pure(v, dims):
    dims = _checkDims(dims)
    v = np.asarray(v, dtype=np.complex128).reshape(-1)
    if v.size != int(np.prod(dims)):
        raise ShapeError("Vector of length %d does not match dims %s" % (v.size, dims))
    return DensityMatrix(opalg.outer(v), dims)


def _maximallyEntangledVector(d, m):
    D = d ** m
    v = np.zeros(D, dtype=np.complex128)
    step = sum(d ** i for i in range(m))
    v[::step] = 1.0 / math.sqrt(d)
    return v


def _noisy(target, p, dims, name):
    D = target.shape[0]
    low = -1.0 / (D - 1)
    if p < low - WEIGHT_TOL or p > 1.0 + WEIGHT_TOL:
        raise PositivityError("%s weight p=%s outside the positive range [%.6g, 1]"
                              % (name, p, low))
    return DensityMatrix(p * target + (1.0 - p) * opalg.identity(D) / D, dims)


def isotropic(d: int, p: float):
    """p |phi+><phi+| + (1-p) I/d^2 on C^d x C^d."""
    dims = _checkDims((d, d))
    target = opalg.outer(_maximallyEntangledVector(d, 2))
    return _noisy(target, p, dims, 'Isotropic')


def ghz(d: int, m: int):
    if m < 2:
        raise InvalidDimensionError("GHZ state needs at least 2 parties, got %s" % m)
    return pure(_maximallyEntangledVector(d, m), (d,) * m)


def noisyGhz(d: int, m: int, p: float):
    if m < 2:
        raise InvalidDimensionError("GHZ state needs at least 2 parties, got %s" % m)
    dims = _checkDims((d,) * m)
    target = opalg.outer(_maximallyEntangledVector(d, m))
    return _noisy(target, p, dims, 'Noisy GHZ')


def product(states):
    if len(states) == 0:
        raise ShapeError("Product of no states")
    mat = opalg.kronAll([s.matrix for s in states])
    dims = tuple(x for s in states for x in s.dims)
    return DensityMatrix(mat, dims)


def mixture(states, weights):
    if len(states) == 0 or len(states) != len(weights):
        raise InvalidMixtureError("Need one weight per state, got %d states and %d weights"
                                  % (len(states), len(weights)))
    weights = np.asarray(weights, dtype=np.float64)
    if np.any(weights < -WEIGHT_TOL) or abs(weights.sum() - 1.0) > WEIGHT_TOL:
        raise InvalidMixtureError("Mixture weights must be nonnegative and sum to 1, got %s"
                                  % weights.tolist())
    dims = states[0].dims
    for s in states[1:]:
        if s.dims != dims:
            raise ShapeError("Cannot mix states over %s and %s" % (dims, s.dims))
    mat = sum(w * s.matrix for w, s in zip(weights, states))
    return DensityMatrix(mat, dims)


def _ginibre(rng, D):
    g = (rng.standard_normal((D, D)) + 1j * rng.standard_normal((D, D))) / math.sqrt(2.0)
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def randomDensity(dims, seed):
    """G G^dagger / Tr(G G^dagger) with G complex standard normal."""
    dims = _checkDims(dims)
    rng = _generator(seed)
    return DensityMatrix(_ginibre(rng, int(np.prod(dims))), dims)


def randomPure(dims, seed):
    dims = _checkDims(dims)
    rng = _generator(seed)
    D = int(np.prod(dims))
    v = rng.standard_normal(D) + 1j * rng.standard_normal(D)
    return pure(v, dims)


def randomProduct(dims, seed, pure_parties=False):
    """Kronecker product of independent single-party random states."""
    dims = _checkDims(dims)
    children = _seedSequence(seed).spawn(len(dims))
    factory = randomPure if pure_parties else randomDensity
    return product([factory((d,), child) for d, child in zip(dims, children)])


def dirichletWeights(rng, terms):
    """Uniform Dirichlet weights: normalized exponential variates -log(u)."""
    u = 1.0 - rng.random(terms)  # uniform on (0, 1]
    e = -np.log(u)
    if e.sum() == 0.0:
        return np.full(terms, 1.0 / terms)
    return e / e.sum()


def randomSeparable(dims, terms, seed):
    """Seeded convex mixture of `terms` random product states."""
    dims = _checkDims(dims)
    if terms < 1:
        raise InvalidMixtureError("A separable mixture needs at least one term, got %s" % terms)
    children = _seedSequence(seed).spawn(terms + 1)
    weights = dirichletWeights(_generator(children[0]), terms)
    states = [randomProduct(dims, child) for child in children[1:]]
    # renormalize so the weights pass the sum check exactly
    weights = weights / weights.sum()
    return mixture(states, weights)


def purity(rho: DensityMatrix):
    return opalg.traceProduct(rho.matrix, rho.matrix).real
