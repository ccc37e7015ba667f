"""Error hierarchy shared by the library and the command-line front end."""

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_PRECONDITION = 3
EXIT_TIMEOUT = 4


class SchubertError(ValueError):
    """Base class for rejected inputs."""

    exit_status = EXIT_PRECONDITION


class ParseError(SchubertError):
    """Malformed monomial, partition, class list or JSON document."""

    exit_status = EXIT_PARSE_ERROR


class BoxViolationError(SchubertError):
    """A partition or monomial does not fit the (k, n-k) box."""


class GradeMismatchError(SchubertError):
    """An element's arity differs from the Grassmannian context."""


class DegreeRangeError(SchubertError):
    """A quantum generator index lies outside 0 <= h <= n."""
