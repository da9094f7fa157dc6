"""Exception hierarchy shared by all modules.

Input problems (bad dimensions, rank deficiency, out-of-range parameters)
raise DomainError subclasses; blowing a configured enumeration cap raises
CapacityError.  The CLI maps these to exit codes 2 and 3 respectively.
"""


class LathetaError(Exception):
    pass


class DomainError(LathetaError, ValueError):
    pass


class DimensionError(DomainError):
    pass


class RankError(DomainError):
    pass


class CapacityError(LathetaError, RuntimeError):
    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap
