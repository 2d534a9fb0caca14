"""Exception hierarchy for the quantum graph toolkit."""


class QGraphError(Exception):
    """Base class for all toolkit errors."""


class NotAState(QGraphError):
    pass


class NotFaithful(QGraphError):
    pass


class NotDeltaForm(QGraphError):
    pass


class SingularGram(QGraphError):
    pass


class DimensionMismatch(QGraphError):
    pass


class AxiomViolation(QGraphError):
    pass


class SelfLoop(QGraphError):
    pass


class NotClassical(QGraphError):
    pass


class NotIrreflexive(QGraphError):
    pass


class FormulaMismatch(QGraphError):
    """Two independent constructions of the same operator disagree.

    This always indicates a bug in the toolkit, never bad user input.
    """


class InvalidCertificate(QGraphError):
    pass


class CommutativityFailure(QGraphError):
    pass


class LemmaViolation(QGraphError):
    pass


class ZeroVector(QGraphError):
    pass


class NotIsometry(QGraphError):
    pass


class LambdaNotPSD(QGraphError):
    pass


class ValueAtLeastOne(QGraphError):
    pass


class UnknownGenerator(QGraphError):
    pass


class MalformedInput(QGraphError):
    pass
