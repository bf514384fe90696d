import itertools

import numpy as np
import pytest

from mumsep import enableDebugLog
from mumsep.criteria.assignment import (assignmentMax, candidateCount, multiAssignment,
                                        selectionByParty)
from mumsep.errors import ConfigurationError

enableDebugLog()


def bruteForce(W, size):
    best = -np.inf
    heads = itertools.combinations(range(W.shape[0]), size)
    for head in heads:
        rests = [itertools.permutations(range(n), size) for n in W.shape[1:]]
        for rest in itertools.product(*rests):
            value = sum(W[(head[k],) + tuple(r[k] for r in rest)] for k in range(size))
            best = max(best, value)
    return best


def randomWeights(shape, seed):
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.random(shape)


def test_pairs_against_brute_force():
    for seed, shape, size in [(0, (5, 5), 5), (1, (4, 6), 4), (2, (6, 4), 4),
                              (3, (5, 5), 3), (4, (3, 7), 2)]:
        W = randomWeights(shape, seed)
        value, pairs = assignmentMax(W, size)
        assert(abs(value - bruteForce(W, size)) < 1e-12)
        assert(len(pairs) == size)
        assert(len(set(i for i, _ in pairs)) == size)
        assert(len(set(j for _, j in pairs)) == size)
        assert(abs(value - sum(W[p] for p in pairs)) < 1e-12)


def test_pairs_oracle_sweep():
    for seed in range(100):
        for shape in [(5, 5), (4, 6)]:
            W = randomWeights(shape, 1000 + seed)
            value, _ = assignmentMax(W, 4 if shape == (4, 6) else 5)
            assert(abs(value - bruteForce(W, min(shape))) < 1e-12)


def test_strategies_bounded_by_exact():
    for seed in range(5):
        W = randomWeights((4, 4), 10 + seed)
        exact, _ = assignmentMax(W, 4, 'exact')
        greedy, _ = assignmentMax(W, 4, 'greedy')
        diagonal, pairs = assignmentMax(W, 4, 'diagonal')
        assert(greedy <= exact + 1e-12)
        assert(diagonal <= exact + 1e-12)
        assert(pairs == [(0, 0), (1, 1), (2, 2), (3, 3)])


def test_multi_against_brute_force():
    for seed, shape, size in [(0, (3, 3, 3), 3), (1, (2, 3, 4), 2), (2, (3, 2, 3), 2),
                              (3, (2, 2, 2, 2), 2)]:
        W = randomWeights(shape, seed)
        value, tuples, fallback = multiAssignment(W, size)
        assert(not fallback)
        assert(abs(value - bruteForce(W, size)) < 1e-12)
        for axis in range(W.ndim):
            assert(len(set(t[axis] for t in tuples)) == size)


def test_budget_fallback():
    W = randomWeights((3, 3, 3), 7)
    assert(candidateCount(W.shape, 3) == 216)
    exact, _, used = multiAssignment(W, 3, 'exact')
    greedy, _, fallback = multiAssignment(W, 3, 'exact', budget=10)
    assert(not used)
    assert(fallback)
    assert(greedy <= exact + 1e-12)


def test_selection_by_party():
    assert(selectionByParty([(0, 2, 1), (1, 0, 0)]) == [[0, 1], [2, 0], [1, 0]])
    assert(selectionByParty([]) == [])


def test_invalid():
    W = randomWeights((3, 4), 0)
    with pytest.raises(ConfigurationError):
        assignmentMax(W, 4)
    with pytest.raises(ConfigurationError):
        assignmentMax(W, 0)
    with pytest.raises(ConfigurationError):
        assignmentMax(W, 2, 'random')
    with pytest.raises(ConfigurationError):
        assignmentMax(W, 2, 'diagonal')


if __name__ == '__main__':
    test_pairs_against_brute_force()
    test_pairs_oracle_sweep()
    test_strategies_bounded_by_exact()
    test_multi_against_brute_force()
    test_budget_fallback()
    test_selection_by_party()
    test_invalid()
