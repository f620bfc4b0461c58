"""Exception types shared across the toolkit.

Every precondition failure raises a named exception so callers (and the
CLI/service layers) can map failures to exact error codes.
"""


class BsxError(Exception):
    """Base class for all domain errors."""


class NotAPhenotype(BsxError):
    """q was required to be a fixed point of the phenotype map but is not."""


class ParamTooSmall(BsxError):
    """The operation needs |m| >= 2 and |n| >= 2."""


class PhenotypeMismatch(BsxError):
    """Two objects that must share a phenotype do not."""


class LabelMismatch(BsxError):
    """Welding requires both vertices to carry the same label."""


class DegreeOverflow(BsxError):
    """Welding would exceed a degree bound at the merged vertex."""


class NoFreeSlot(BsxError):
    """A non-saturated input was required but the object is saturated."""


class NotConnected(BsxError):
    """A connected graph / transitive pre-action was required."""


class InvalidGraph(BsxError):
    """The graph fails the labeled-graph axioms; see the validation report."""

    def __init__(self, report=None, message="graph fails validation"):
        super().__init__(message)
        self.report = report


class InvalidPreAction(BsxError):
    """The pre-action data fails its structural checks."""

    def __init__(self, report=None, message="pre-action fails validation"):
        super().__init__(message)
        self.report = report


class InvalidInput(BsxError):
    """Input data could not be interpreted (wrong type or malformed JSON)."""


class InfiniteLabel(BsxError):
    """The operation is only defined for graphs with finite labels."""


class EmbeddingMismatch(BsxError):
    """The claimed embedding does not identify a sub-graph of the host."""


class NotCoprime(BsxError):
    """gcd(q, m) = gcd(q, n) = 1 was required."""


class TruncationTooSmall(BsxError):
    """The truncated data does not carry enough of the orbit to answer."""


class PreconditionFailed(BsxError):
    """An arithmetic precondition failed at a specific prime."""

    def __init__(self, prime, message=None):
        super().__init__(message or f"precondition fails at prime {prime}")
        self.prime = prime


class Undefined(BsxError):
    """A word evaluation left the domain of the partial action."""


class WordSyntaxError(BsxError):
    """Unparseable word text; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
