"""Selecting d outcomes per party to maximize summed joint probabilities.

A selection pairs outcome indices position by position across the parties,
one-to-one within each party. For two parties this is the rectangular
assignment problem; for more parties it is a multidimensional assignment
solved by enumeration with an exact linear assignment for the last party.
"""
import itertools
import logging
import math

import numpy as np
from scipy.optimize import linear_sum_assignment

from mumsep.common import ASSIGNMENT_BUDGET
from mumsep.criteria.common import STRATEGIES
from mumsep.errors import ConfigurationError

logger = logging.getLogger('mumsep')


def _checkSize(shape, size, strategy):
    if strategy not in STRATEGIES:
        raise ConfigurationError("Unknown strategy '%s', expecting one of %s"
                                 % (strategy, STRATEGIES))
    if size < 1 or size > min(shape):
        raise ConfigurationError("Selection size %d is not within 1..%d" % (size, min(shape)))
    if strategy == 'diagonal' and len(set(shape)) != 1:
        raise ConfigurationError("Diagonal selection needs equal dimensions, got %s" % (shape,))


def _exactPairs(W, size):
    d1, d2 = W.shape
    transposed = d1 > d2
    A = W.T if transposed else W
    rows, cols = A.shape
    spare = rows - size
    if spare > 0:
        # Dummy columns absorb exactly `spare` rows, leaving `size` real pairs.
        big = (float(np.max(np.abs(A))) + 1.0) * (rows + cols + 1)
        A = np.hstack([A, np.full((rows, spare), big)])
    r, c = linear_sum_assignment(A, maximize=True)
    pairs = [(int(i), int(j)) for i, j in zip(r, c) if j < cols]
    if transposed:
        pairs = [(j, i) for i, j in pairs]
    assert(len(pairs) == size)
    return sorted(pairs)


def _greedyTuples(W, size):
    flat = np.argsort(-W, axis=None, kind='stable')
    used = [set() for _ in range(W.ndim)]
    chosen = []
    for f in flat:
        idx = np.unravel_index(f, W.shape)
        if any(int(i) in u for i, u in zip(idx, used)):
            continue
        chosen.append(tuple(int(i) for i in idx))
        for i, u in zip(idx, used):
            u.add(int(i))
        if len(chosen) == size:
            break
    return sorted(chosen)


def _diagonalTuples(W, size):
    d = W.shape[0]
    diag = np.array([W[(n,) * W.ndim] for n in range(d)])
    best = np.argsort(-diag, kind='stable')[:size]
    return sorted((int(n),) * W.ndim for n in best)


def _value(W, tuples):
    return float(sum(W[t] for t in tuples))


def assignmentMax(W, size, strategy='exact'):
    """Best total weight of `size` one-to-one (row, column) pairs.

    Returns `(value, pairs)` with `pairs` sorted by row.
    """
    W = np.asarray(W, dtype=np.float64)
    assert(W.ndim == 2)
    _checkSize(W.shape, size, strategy)
    if strategy == 'exact':
        pairs = _exactPairs(W, size)
    elif strategy == 'greedy':
        pairs = _greedyTuples(W, size)
    else:
        pairs = _diagonalTuples(W, size)
    return _value(W, pairs), pairs


def candidateCount(dims, size):
    """Number of ordered selections, prod_i d_i!/(d_i-size)!."""
    count = 1
    for d in dims:
        count *= math.perm(d, size)
    return count


def _exactTuples(W, size):
    m = W.ndim
    dims = W.shape
    best_value = -math.inf
    best = None
    heads = itertools.combinations(range(dims[0]), size)
    middles = [list(itertools.permutations(range(dims[i]), size)) for i in range(1, m - 1)]
    for head in heads:
        for middle in itertools.product(*middles):
            prefix = (np.array(head),) + tuple(np.array(p) for p in middle)
            # A[pos, n_last] for the fixed prefix
            A = W[prefix + (slice(None),)]
            _, pairs = assignmentMax(A, size, 'exact')
            value = float(sum(A[pos, n] for pos, n in pairs))
            if value > best_value:
                best_value = value
                best = [tuple(int(p[pos]) for p in prefix) + (int(n),) for pos, n in pairs]
    assert(best is not None and len(best) == size)
    return sorted(best)


def multiAssignment(W, size, strategy='exact', budget=ASSIGNMENT_BUDGET):
    """Best total weight of `size` tuples, one-to-one within every axis of W.

    Returns `(value, tuples, fallback_used)`. The exact strategy falls back to
    greedy when the number of candidate selections exceeds `budget`.
    """
    W = np.asarray(W, dtype=np.float64)
    _checkSize(W.shape, size, strategy)
    fallback = False
    if W.ndim == 2:
        value, pairs = assignmentMax(W, size, strategy)
        return value, pairs, fallback

    if strategy == 'exact':
        count = candidateCount(W.shape, size)
        if count > budget:
            logger.warning("Selections %d exceed budget %d for shape %s, using greedy",
                           count, budget, W.shape)
            strategy = 'greedy'
            fallback = True

    if strategy == 'exact':
        tuples = _exactTuples(W, size)
    elif strategy == 'greedy':
        tuples = _greedyTuples(W, size)
    else:
        tuples = _diagonalTuples(W, size)
    return _value(W, tuples), tuples, fallback


def selectionByParty(tuples):
    """[(n1, .., nm), ...] -> per party list of indices, paired by position."""
    if not tuples:
        return []
    return [[t[i] for t in tuples] for i in range(len(tuples[0]))]
