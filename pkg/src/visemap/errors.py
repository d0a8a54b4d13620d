"""Exception types raised across the toolkit.

Every domain error derives from :class:`VisemapError`; the command line maps
these to exit status 1 and prints the class name.
"""


class VisemapError(Exception):
    """Base class for all domain errors."""


class ParseError(VisemapError):
    pass


class DuplicatePhoneme(VisemapError):
    pass


class UnknownPhoneme(VisemapError):
    pass


class CoverageMismatch(VisemapError):
    pass


class OverlappingClasses(VisemapError):
    pass


class EmptyMap(VisemapError):
    pass


class DuplicateMapId(VisemapError):
    pass


class UnknownMap(VisemapError):
    pass


class ShapeError(VisemapError):
    pass


class LabelMismatch(VisemapError):
    pass


class IdMismatch(VisemapError):
    pass


class EmptyReference(VisemapError):
    pass


class EmptyInput(VisemapError):
    pass


class IncompleteSweep(VisemapError):
    pass
