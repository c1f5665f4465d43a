"""Exception hierarchy shared by all gadgetlab modules."""


class GadgetLabError(Exception):
    """Base class for every error raised by gadgetlab."""


class DimensionMismatch(GadgetLabError, ValueError):
    """Words or families with different length or alphabet were combined."""


class FamilyTooSmall(GadgetLabError, ValueError):
    pass


class BinaryOnly(GadgetLabError, ValueError):
    """Operation is only defined over the binary alphabet."""


class OutOfRange(GadgetLabError, ValueError):
    pass


class Infeasible(GadgetLabError):
    """A search or enumeration would exceed its configured caps.

    ``estimate`` carries the size that triggered the refusal, when known.
    """

    def __init__(self, message: str, estimate: int | None = None):
        super().__init__(message)
        self.estimate = estimate


class InvalidConfig(GadgetLabError, ValueError):
    pass


class InvalidAssignment(GadgetLabError, ValueError):
    pass


class InvalidInstance(GadgetLabError, ValueError):
    pass


class NotAnEdgeShape(GadgetLabError, ValueError):
    """Vertex tuple cannot be a hyperedge of the gadget (wrong arity or clouds)."""


class HypothesisViolated(GadgetLabError, ValueError):
    pass


class EmptyFamily(GadgetLabError, ValueError):
    pass


class NoHeavyClouds(GadgetLabError):
    pass


class NoLayerPair(GadgetLabError):
    pass


class NotIndependent(GadgetLabError):
    """The candidate independent set contains a hyperedge.

    ``witness`` is the offending edge as a tuple of canonical vertex indices.
    """

    def __init__(self, message: str, witness: tuple[int, ...] | None = None):
        super().__init__(message)
        self.witness = witness
