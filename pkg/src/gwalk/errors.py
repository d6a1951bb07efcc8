"""Exception hierarchy shared by every module in the package."""


class GWalkError(Exception):
    pass


class DomainError(GWalkError, ValueError):
    """An argument lies outside the domain of the operation (e.g. ``n <= 0``)."""


class WalkError(GWalkError, ValueError):
    pass


class EmptyWalk(WalkError):
    def __init__(self):
        super().__init__("a walk needs at least one point")


class NonUnitStep(WalkError):
    def __init__(self, index, a, b):
        self.index = index
        super().__init__(f"step {index} from {tuple(a)} to {tuple(b)} is not an axis-aligned unit step")


class IndexOutOfRange(GWalkError, IndexError):
    pass


class NotAvoidable(GWalkError):
    """``d`` belongs to A_n, so no walk realises ``n`` while avoiding ``d``."""

    def __init__(self, n, d, k, r):
        self.n, self.d, self.k, self.r = n, d, k, r
        super().__init__(
            f"{n} is not {d}-avoidable: k={k} >= |r|+1={abs(r) + 1}"
        )


class InternalConstructionFailure(GWalkError, AssertionError):
    pass


class BudgetExceeded(GWalkError):
    def __init__(self, expansions):
        self.expansions = expansions
        super().__init__(f"search budget exhausted after {expansions} node expansions")


class FormulaMismatch(GWalkError, AssertionError):
    pass


class WitnessNotFound(GWalkError):
    pass


class FixtureMismatch(GWalkError):
    pass


class VerdictContradiction(GWalkError, AssertionError):
    """A case of the classification failed to produce the evidence it promises."""
