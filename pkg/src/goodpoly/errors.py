"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class ResourceLimitError(RuntimeError):
    """A size guard refused to start an oversized computation."""


class FormatError(ValueError):
    """Malformed textual input: field specs, polynomial strings, descriptors."""
