"""Exception hierarchy shared by all modules."""


class BenzenoidError(ValueError):
    """Base class for every error raised by this package."""


class DisconnectedSystem(BenzenoidError):
    pass


class VertexOnlyContact(BenzenoidError):
    pass


class UnknownHexagon(BenzenoidError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class NotCatacondensed(BenzenoidError):
    pass


class RootNotLeaf(BenzenoidError):
    pass


class HexagonsNotAdjacent(BenzenoidError):
    pass


class NoPerfectMatching(BenzenoidError):
    pass


class NotKinky(BenzenoidError):
    pass


class VertexNotPresent(BenzenoidError):
    pass


class SelfOverlap(BenzenoidError):
    pass


class LabelTooLong(BenzenoidError):
    pass


class InstanceParseError(BenzenoidError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
