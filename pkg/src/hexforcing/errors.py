"""Exception hierarchy shared by all modules."""


class HexError(ValueError):
    """Base class for every error raised by this package."""


class EmptySystem(HexError):
    pass


class ParityViolation(HexError):
    def __init__(self, center):
        super().__init__(f"center {tuple(center)} is not on the hexagon lattice")
        self.center = center


class Disconnected(HexError):
    pass


class HexSyntaxError(HexError):
    """Malformed HEXSYS or edge-set text."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class UnknownHexagon(HexError):
    pass


class UnknownEdge(HexError):
    pass


class NotAMatching(HexError):
    pass


class NotASubset(HexError):
    pass


class NoPerfectMatching(HexError):
    pass


class NotCatacondensed(HexError):
    pass


class NotNormal(HexError):
    pass


class IsolatedVertex(HexError):
    pass


class InvalidSpec(HexError):
    pass


class NotAnECut(HexError):
    def __init__(self, index):
        super().__init__(f"cut #{index} is not an elementary edge cut")
        self.index = index


class UncoveredNiceCycle(HexError):
    """A nice cycle avoids every supplied cut; ``witness`` is that cycle."""

    def __init__(self, witness):
        super().__init__(f"nice cycle of length {len(witness.edges)} avoids all cuts")
        self.witness = witness


class LimitExceeded(HexError):
    """Instance is above the configured size limit for exact search."""
