"""Exception hierarchy shared by every module."""


class LatticeIsoError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class NotRealized(LatticeIsoError):
    """The radicand is not a sum of two squares, so the graph has no edges."""

    def __init__(self, r, which=None):
        self.r = r
        self.which = which
        where = f"{which}: " if which else ""
        super().__init__(f"{where}r={r} is not a sum of two squares")


class NoPrimitiveRepresentation(LatticeIsoError):
    pass


class NotCoreRadicand(LatticeIsoError):
    """Raised when r has a prime factor that is not 1 mod 4."""

    def __init__(self, r):
        self.r = r
        super().__init__(f"r={r} has a prime factor not congruent to 1 mod 4")


class BadParity(LatticeIsoError):
    pass


class NotCoprime(LatticeIsoError):
    pass


class IdenticalRadicands(LatticeIsoError):
    def __init__(self, r):
        self.r = r
        super().__init__(f"both radicands equal {r}")


class BudgetExceeded(LatticeIsoError):
    """The path search visited more nodes than allowed.

    Counts are never truncated; the caller has to raise the budget.
    """

    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"search exceeded budget of {budget} nodes")
