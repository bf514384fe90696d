"""Entanglement detection with mutually unbiased measurements (MUMs)"""

from mumsep.criteria import evaluate, kNonsepCheck
from mumsep.mum import buildMums, verifyMums
from mumsep.utils import enableDebugLog, getSupportedCriteria

# package metadata
__name__ = 'mumsep'
__version__ = '0.1.0'
DESCRIPTION = "Separability criteria from mutually unbiased measurements"

__all__ = [
    buildMums,
    enableDebugLog,
    evaluate,
    getSupportedCriteria,
    kNonsepCheck,
    verifyMums,
    __name__,
    __version__,
    DESCRIPTION,
]
