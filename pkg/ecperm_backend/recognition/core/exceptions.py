class ECPermError(Exception):
    """Base class for every error raised by the recognition library."""


# Graph construction and queries

class GraphError(ECPermError, ValueError):
    pass


class PairError(GraphError):
    def __init__(self, pair, message=None):
        self.pair = tuple(pair)
        super().__init__(message or f"{self.default_message} {self.pair}")


class MissingPair(PairError):
    default_message = "no color assigned to pair"


class DuplicatePair(PairError):
    default_message = "color assigned twice to pair"


class SelfLoop(PairError):
    default_message = "self pair is not allowed:"


class VertexOutOfRange(PairError):
    default_message = "vertex out of range in pair"


class InvalidColor(GraphError):
    pass


class UnknownColor(GraphError):
    pass


class EmptySet(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


# Permutations, labelings and certificates

class PermutationError(ECPermError, ValueError):
    pass


class InvalidPermutation(PermutationError):
    pass


class InvalidLabeling(PermutationError):
    pass


class ArityMismatch(PermutationError):
    pass


class UncoveredPair(PermutationError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"pair {self.pair} is inverted by no permutation")


class OverlapPair(PermutationError):
    def __init__(self, pair, colors):
        self.pair = tuple(pair)
        self.colors = tuple(colors)
        super().__init__(f"pair {self.pair} is inverted by permutations {self.colors}")


class EmptyColorClass(PermutationError):
    pass


class DegenerateGraph(PermutationError):
    pass


class NotARealization(PermutationError):
    pass


# Modular decomposition

class DecompositionError(ECPermError):
    pass


class NotAPartition(DecompositionError, ValueError):
    pass


class TooSmall(DecompositionError, ValueError):
    pass


# Recognition pipeline

class RecognitionError(ECPermError):
    pass


class IncompleteLabelings(RecognitionError):
    pass


class InvalidQuotientLabeling(RecognitionError, ValueError):
    pass


class NotTotalOrder(RecognitionError):
    pass


class TooLarge(ECPermError, ValueError):
    def __init__(self, n, limit, what="input"):
        self.n = n
        self.limit = limit
        super().__init__(f"{what} has {n} vertices; the limit is {limit}")


class GraphFormatError(ECPermError, ValueError):
    def __init__(self, message, source="<input>", line=None):
        self.source = source
        self.line = line
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")
