"""Exception hierarchy shared by all modules."""


class GaleCircuitError(Exception):
    """Base class for every error raised by this package."""


class SingularMatrix(GaleCircuitError):
    pass


class DegreeCapExceeded(GaleCircuitError):
    def __init__(self, degree, cap):
        super().__init__(f"polynomial degree {degree} exceeds cap {cap}")
        self.degree = degree
        self.cap = cap


class NotIsolating(GaleCircuitError):
    pass


class NotACircuit(GaleCircuitError):
    pass


class PreconditionViolated(GaleCircuitError):
    pass


class NoDiagonalization(GaleCircuitError):
    pass


class DegenerateSystem(GaleCircuitError):
    """The Gale polynomial vanishes identically (infinitely many solutions)."""


class ResidualTooLarge(GaleCircuitError):
    pass


class NotStrictlyIncreasing(GaleCircuitError):
    def __init__(self, index, values):
        super().__init__(
            f"p-sequence not strictly increasing: p_{index} = {values[index]}"
            f" >= p_{index + 1} = {values[index + 1]}"
        )
        self.index = index
        self.values = values


class InvalidSlopes(GaleCircuitError):
    pass


class NotBinomial(GaleCircuitError):
    pass


class SmallTExhausted(GaleCircuitError):
    pass


class InvalidProfile(GaleCircuitError):
    def __init__(self, index, value):
        # index i refers to N_{i,i+1}, 1-based
        super().__init__(f"N_{{{index},{index + 1}}} = {value} < 0")
        self.index = index
        self.value = value
