"""Exception hierarchy shared by all modules.

Four broad classes matter to callers (and drive CLI exit codes):
validation failures, unmet structural hypotheses, resource caps, and
internal-inconsistency signals that indicate a bug rather than bad input.
"""


class SemibraceError(Exception):
    pass


class ValidationError(SemibraceError):
    """Input fails a verifiable law (malformed table, broken axiom, ...)."""


class TableError(ValidationError):
    """Malformed operation table: not square, entry out of range, empty."""


class GroupLawError(ValidationError):
    """A group law fails.  `law` is one of 'no_identity', 'no_inverse',
    'not_associative'; `witness` locates the failure."""

    def __init__(self, law, witness=None):
        self.law = law
        self.witness = witness
        detail = f" at {witness}" if witness is not None else ""
        super().__init__(f"group law violated: {law}{detail}")


class SemibraceLawError(ValidationError):
    """A semi-brace axiom fails.  `kind` is one of 'dot_not_semigroup',
    'circ_not_group', 'identity_fails'; `witnesses` lists offending triples."""

    def __init__(self, kind, witnesses=()):
        self.kind = kind
        self.witnesses = tuple(witnesses)
        detail = f", e.g. {self.witnesses[0]}" if self.witnesses else ""
        super().__init__(f"not a left semi-brace: {kind}{detail}")


class ReesError(ValidationError):
    """Completely-simple decomposition failed.  `kind` is one of
    'not_a_semigroup', 'not_simple', 'no_primitive_idempotent'."""

    def __init__(self, kind, witness=None):
        self.kind = kind
        self.witness = witness
        detail = f" (witness {witness})" if witness is not None else ""
        super().__init__(f"not completely simple: {kind}{detail}")


class InvalidMatchedDataError(ValidationError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"matched-product data invalid: {report.first_failure}")


class NotAnIdealError(ValidationError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"subset is not an ideal: {report.first_failure}")


class NotAMorphismError(ValidationError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"map is not a semi-brace morphism, witness pair {witness}")


class HypothesisNotMetError(SemibraceError):
    """The operation's standing hypothesis fails for this input."""


class RhoNotAntihomomorphismError(HypothesisNotMetError):
    def __init__(self, witness=None):
        self.witness = witness
        detail = f" (witness {witness})" if witness is not None else ""
        super().__init__(f"rho is not an anti-homomorphism{detail}")


class NotCompletelySimpleError(HypothesisNotMetError):
    def __init__(self, cause):
        self.cause_kind = getattr(cause, "kind", None)
        super().__init__(f"multiplicative semigroup is not completely simple: {cause}")


class NotZeroSemibraceError(HypothesisNotMetError):
    pass


class NotInKError(SemibraceError):
    """Element lies outside the corner subset required by the operation."""


class CapExceededError(SemibraceError):
    def __init__(self, what, value, cap):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f"{what} = {value} exceeds cap {cap}")


class InternalInconsistencyError(SemibraceError):
    """Two independently computed results disagree where theory says they
    cannot.  Signals an implementation bug, never a property of the input."""


class CongruenceBrokenError(InternalInconsistencyError):
    """Quotient operations are not well defined on the congruence classes."""


class DocumentError(ValidationError):
    """Problems with the JSON document format."""


class SchemaError(DocumentError):
    def __init__(self, field, message, line=None):
        self.field = field
        self.line = line
        where = f"{field}: " if field else ""
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"{where}{message}{at}")


class EntryRangeError(DocumentError):
    def __init__(self, field, value, size):
        self.field = field
        self.value = value
        super().__init__(f"{field}: entry {value} out of range [0, {size})")
