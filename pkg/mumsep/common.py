from abc import ABC
from enum import Enum


# Default tolerances, all absolute.
HERMITIAN_TOL = 1e-10
EIGEN_TOL = 1e-12
VERIFY_TOL = 1e-9
PSD_TOL = 1e-9
IMAG_TOL = 1e-10
DETECT_TOL = 1e-9
WEIGHT_TOL = 1e-12

# Candidate selections enumerated per measurement before falling back to greedy.
ASSIGNMENT_BUDGET = 10**6

JSON_DIGITS = 17
CSV_DIGITS = 12


class Status(Enum):
    # Constructor has not returned yet.
    UNINITIALIZED = 0

    # Inputs stored, nothing checked.
    INITIALIZED = 1

    # Inputs passed the criterion preconditions.
    VALIDATED = 2

    # Report available in `result`.
    EVALUATED = 3

    # Validation raised; the object must not be evaluated.
    INVALID = 10

    @property
    def uninitialized(self):
        return self == self.UNINITIALIZED

    @property
    def initialized(self):
        return self == self.INITIALIZED

    @property
    def validated(self):
        return self == self.VALIDATED

    @property
    def evaluated(self):
        return self == self.EVALUATED


class MumsepBase(ABC):
    """Lifecycle shared by evaluators: init, validate, evaluate."""
    def __init__(self):
        self.status = Status.UNINITIALIZED
        self.name = None
        self.result = None

    def setInited(self):
        assert(self.status.uninitialized)
        self.status = Status.INITIALIZED

    def validate(self):
        raise NotImplementedError("%s must implement validate()" % type(self).__name__)

    def setValidated(self):
        assert(self.status.initialized)
        self.status = Status.VALIDATED

    def evaluate(self):
        raise NotImplementedError("%s must implement evaluate()" % type(self).__name__)

    def setEvaluated(self):
        assert(self.status.validated)
        self.status = Status.EVALUATED

    def setInvalid(self):
        self.status = Status.INVALID

    @property
    def shorty(self):
        """One-line tag used in log messages; `__str__` gives the full description."""
        raise NotImplementedError("%s must implement shorty" % type(self).__name__)

    def __str__(self):
        raise NotImplementedError("%s must implement __str__()" % type(self).__name__)
