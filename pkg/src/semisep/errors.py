class SemisepError(Exception):
    """Base class for every error raised by the package."""


class NonParallel(SemisepError):
    pass


class BackendMismatch(SemisepError):
    pass


class ShapeMismatch(SemisepError):
    pass


class OrderMismatch(SemisepError):
    pass


class CapExceeded(SemisepError):
    def __init__(self, count, cap):
        super().__init__(f"candidate count {count} exceeds cap {cap}")
        self.count = count
        self.cap = cap


class AlgebraMismatch(SemisepError):
    pass


class CoalgebraMismatch(SemisepError):
    pass


class StructureMismatch(SemisepError):
    pass


class BackendNotAbelian(SemisepError):
    pass


class SolveFailed(SemisepError):
    pass


class FactorError(SemisepError):
    """A morphism does not factor through the given epi or mono."""


class InvalidWitness(SemisepError):
    pass


class PremiseMismatch(SemisepError):
    pass


class DirectionMismatch(SemisepError):
    pass


class NotStrong(SemisepError):
    pass


class HypothesisNotMet(SemisepError):
    pass


class ParseError(SemisepError):
    pass


class UnknownReference(SemisepError):
    pass


class LawViolation(SemisepError):
    def __init__(self, law, detail=""):
        msg = f"law violated: {law}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.law = law
