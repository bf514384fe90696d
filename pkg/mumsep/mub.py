"""Complete sets of mutually unbiased bases in prime dimension.

Only used as the comparison baseline; the MUM construction in `mum` works
in every dimension.
"""
import logging

import numpy as np

from mumsep.errors import UnsupportedDimensionError

logger = logging.getLogger('mumsep')


def isPrime(d: int):
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % k == 0:
            return False
        k += 1
    return True


def mubPrime(d: int):
    """The d+1 mutually unbiased bases of C^d for prime d.

    Returns an array `bases` of shape (d+1, d, d) where `bases[i, j]` is the
    j-th vector of basis i. Basis 0 is the computational basis; basis a+1
    holds the vectors with components w^(a k^2 + b k)/sqrt(d), w = exp(2 pi i/d).
    For d = 2 the phase is i^(a k^2 + 2 b k), giving the X and Y eigenbases.
    """
    if not isinstance(d, (int, np.integer)) or not isPrime(int(d)):
        raise UnsupportedDimensionError("MUB baseline needs a prime dimension, got %s" % (d,))
    k = np.arange(d)
    bases = np.zeros((d + 1, d, d), dtype=np.complex128)
    bases[0] = np.eye(d)
    for a in range(d):
        for b in range(d):
            if d == 2:
                phase = (1j) ** ((a * k * k + 2 * b * k) % 4)
            else:
                phase = np.exp(2j * np.pi * ((a * k * k + b * k) % d) / d)
            bases[a + 1, b] = phase / np.sqrt(d)
    logger.debug("Built %d MUBs for d=%d", d + 1, d)
    return bases


def maxOverlapError(bases):
    """Largest deviation of |<u|v>| from 1/sqrt(d) across distinct bases, and
    from orthonormality within a basis."""
    bases = np.asarray(bases)
    m, d, _ = bases.shape
    target = 1.0 / np.sqrt(d)
    err = 0.0
    for i in range(m):
        gram = bases[i].conj() @ bases[i].T
        err = max(err, float(np.max(np.abs(gram - np.eye(d)))))
        for j in range(i + 1, m):
            cross = np.abs(bases[i].conj() @ bases[j].T)
            err = max(err, float(np.max(np.abs(cross - target))))
    return err
