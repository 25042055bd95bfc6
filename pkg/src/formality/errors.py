"""Exception types shared by the computational modules."""


class Refusal(Exception):
    """A well-formed request the engine declines to answer.

    Raised when a hypothesis fails or when an answer would depend on degrees
    beyond what the model is known to represent faithfully.  The CLI maps
    these to exit status 1.
    """


class OutOfRange(Refusal):
    """A degree lies beyond the computed or faithful range."""


class PreconditionError(Refusal):
    """An operation's mathematical hypothesis does not hold."""
