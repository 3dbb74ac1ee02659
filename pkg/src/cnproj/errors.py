"""Exception hierarchy for contract violations and budget exhaustion."""


class CnprojError(Exception):
    pass


class QuiverFileError(CnprojError):
    """Raised by the quiver file parser; carries a line number."""

    def __init__(self, lineno, message):
        super().__init__("line %d: %s" % (lineno, message))
        self.lineno = lineno


class InfiniteDimensional(CnprojError):
    pass


class NoSourceOrSink(CnprojError):
    pass


class AlgebraMismatch(CnprojError):
    pass


class FieldNotSupported(CnprojError):
    pass


class NotProjective(CnprojError):
    pass


class NotInjective(CnprojError):
    pass


class IndexOutOfRange(CnprojError):
    pass


class ResolutionTooLong(CnprojError):
    pass


class SizeMismatch(CnprojError):
    pass


class NotIrreducible(CnprojError):
    pass


class ClassificationImpossible(CnprojError):
    pass


class RegistryMissing(CnprojError):
    pass


class UnsupportedAlgebraForN(CnprojError):
    pass


class ProbablyInfiniteType(CnprojError):
    pass


class CountMismatch(CnprojError):
    def __init__(self, got, expected, what=""):
        super().__init__("count mismatch%s: got %d, expected %d"
                         % (" (%s)" % what if what else "", got, expected))
        self.got = got
        self.expected = expected


class DepthExceeded(CnprojError):
    pass


class MeshAmbiguous(CnprojError):
    pass


class KnitStuck(CnprojError):
    def __init__(self, frontier, message="knitting stuck"):
        super().__init__("%s; frontier: %s" % (message, frontier))
        self.frontier = frontier


class TruncatedTable(CnprojError):
    pass


class PreconditionFailed(CnprojError):
    pass


class NoWitnessFound(CnprojError):
    pass


class FormulaMismatch(CnprojError):
    pass


class DecompositionFailed(CnprojError):
    pass
