"""Exception hierarchy.

Every error raised by the library derives from :class:`StrataError`, which is
itself a :class:`ValueError`.
"""


class StrataError(ValueError):
    pass


class BadLeaf(StrataError):
    """A leaf label outside ``{a, b, c, 1, ..., n}`` or of the wrong kind."""


class BadLabel(StrataError):
    """A leaf insertion/forgetting was asked for a non-maximal label."""


class IncompatibleSplits(StrataError):
    pass


class UnstableTree(StrataError):
    pass


class NoSuchSplit(StrataError):
    pass


class BoundExceeded(StrataError):
    pass


class BadComposition(StrataError):
    pass


class BadDegree(StrataError):
    pass


class NotTrivalent(StrataError):
    pass


class UnsupportedShape(StrataError):
    pass


class MalformedSchedule(StrataError):
    pass


class DegenerateRestriction(StrataError):
    """The moving hyperplane vanishes identically on the stratum."""


class BadParametrization(StrataError):
    pass


class NotCaterpillar(StrataError):
    pass


class NoValidLabeling(StrataError):
    pass


class PatternViolation(StrataError):
    pass
