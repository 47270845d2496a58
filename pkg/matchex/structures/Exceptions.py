class MatchingException(Exception):
    """
    A base Exception to catch all matchex-related Exceptions, while still letting any unrelated Exception
    propagate as a genuine fault.
    """
    pass


class InvalidArgument(MatchingException):
    """
    Raised when an operation is called outside its preconditions; an out-of-range vertex, a set of edges that is not
    a matching, or a graph that violates an order, parity or connectivity bound. The message names the violated bound.
    """
    pass


class Graph6ParseError(InvalidArgument):
    """
    Raised when a graph6 string is malformed. The offset of the offending byte is available as the offset attribute.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class ResourceLimitExceeded(MatchingException):
    """
    Raised when an enumeration or search passes one of the configured resource guards (yielded matchings, examined
    configurations, or vertex count for exponential parameters). A guarded search never reports that a property holds.
    """
    pass


class UndefinedParameter(MatchingException):
    """
    Raised when a graph parameter is undefined for the given graph, such as the binding number of a graph with fewer
    than two vertices.
    """
    pass


class InvalidCertificate(MatchingException):
    """
    Raised when a supplied certificate (a barrier, a Tutte set, or a matching/vertex-set pair) does not certify what it
    claims to certify for the given graph.
    """
    pass
