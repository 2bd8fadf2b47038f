"""Exception hierarchy shared by every mostarlab module."""


class MostarLabError(ValueError):
    """Base class for all errors raised by mostarlab."""


class InvalidEdge(MostarLabError):
    pass


class OutOfRange(MostarLabError):
    pass


class NotConnected(MostarLabError):
    pass


class NotAnEdge(MostarLabError):
    pass


class NotABridge(MostarLabError):
    pass


class PendantBridge(MostarLabError):
    pass


class NotPendant(MostarLabError):
    pass


class InvalidMove(MostarLabError):
    pass


class DegenerateFamily(MostarLabError):
    """A family constructor was asked for parameters that break its defining property."""


class EmptyClass(MostarLabError):
    """The requested graph class has no members."""


class Graph6Error(MostarLabError):
    """Malformed graph6 input."""
