"""Exception hierarchy shared by every torsionkit module."""


class TorsionKitError(Exception):
    """Base class; the CLI maps these to exit status 2."""


class RingAxiomError(TorsionKitError):
    """A table failed a ring axiom.

    ``axiom`` names the law, ``witness`` is the tuple of offending element
    indices in the order the law quantifies over them.
    """

    axiom = "ring"

    def __init__(self, witness, detail=""):
        self.witness = tuple(witness)
        msg = f"{self.axiom} violated at {self.witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotAGroup(RingAxiomError):
    axiom = "additive-group"


class NotAssociative(RingAxiomError):
    axiom = "associativity"


class NotDistributive(RingAxiomError):
    axiom = "distributivity"


class NoUnit(RingAxiomError):
    axiom = "unit"


class ModuleAxiomError(RingAxiomError):
    axiom = "module"


class OrderCapExceeded(TorsionKitError):
    def __init__(self, what, order, cap):
        self.order, self.cap = order, cap
        super().__init__(f"{what} of order {order} exceeds cap {cap}")


class SearchBudgetExceeded(TorsionKitError):
    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"derivation search exceeded {budget} nodes")


class LatticeTooLarge(TorsionKitError):
    def __init__(self, size, cap):
        super().__init__(f"ideal lattice has {size} members, cap is {cap}")


class IllFormed(TorsionKitError):
    pass


class NotIdempotent(TorsionKitError):
    pass


class NotCentral(TorsionKitError):
    pass


class NoWitness(TorsionKitError):
    pass


class RankMismatch(TorsionKitError):
    pass


class MalformedGroup(TorsionKitError):
    pass


class SpecFileError(TorsionKitError):
    """Bad ring/module spec file or unknown configuration key."""


class InvariantViolation(TorsionKitError):
    """An internal postcondition failed; always a bug or a false theorem."""
