"""Exception types shared across the package."""


class MinorsmithError(Exception):
    pass


class EditPreconditionViolated(MinorsmithError, ValueError):
    """An edit referenced vertices/edges that make it inapplicable (caller bug)."""


class SplitDegreeTooLow(MinorsmithError, ValueError):
    """Vertex split requested at a vertex of degree < 4."""


class InvalidPartition(MinorsmithError, ValueError):
    """Vertex split partition is not a valid (>=2, >=2) bipartition of N(v)."""


class TooManyEdges(MinorsmithError, ValueError):
    """Line graph requested for a graph with more than 64 edges."""


class HostTooLarge(MinorsmithError, ValueError):
    """Brute-force minor oracle called on a host above its size cap."""


class UnknownName(MinorsmithError, KeyError):
    """Catalog lookup for a name that is not built in."""


class ParseError(MinorsmithError, ValueError):
    """Malformed graph or collection input; carries a location when known."""

    def __init__(self, message, line=None, entry=None):
        loc = []
        if entry is not None:
            loc.append(f"entry {entry}")
        if line is not None:
            loc.append(f"line {line}")
        if loc:
            message = f"{message} ({', '.join(loc)})"
        super().__init__(message)
        self.line = line
        self.entry = entry


class DuplicateName(MinorsmithError, ValueError):
    """Two collection entries share a name."""


class DataMissing(MinorsmithError, RuntimeError):
    """A statement needs an external data file that is not available."""
