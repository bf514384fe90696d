import numpy as np
import pytest

from mumsep import enableDebugLog
from mumsep.errors import UnsupportedDimensionError
from mumsep.mub import isPrime, maxOverlapError, mubPrime

enableDebugLog()


def test_is_prime():
    assert([d for d in range(12) if isPrime(d)] == [2, 3, 5, 7, 11])


def test_mub_prime():
    for d in (2, 3, 5, 7):
        bases = mubPrime(d)
        assert(bases.shape == (d + 1, d, d))
        assert(maxOverlapError(bases) < 1e-12)


def test_qubit_bases():
    bases = mubPrime(2)
    s = 1.0 / np.sqrt(2.0)
    assert(np.allclose(bases[1], [[s, s], [s, -s]]))
    assert(np.allclose(bases[2], [[s, 1j * s], [s, -1j * s]]))


def test_non_prime():
    for d in (4, 6, 9):
        with pytest.raises(UnsupportedDimensionError):
            mubPrime(d)


if __name__ == '__main__':
    test_is_prime()
    test_mub_prime()
    test_qubit_bases()
    test_non_prime()
