class PlaygroundError(Exception):
    pass


class ElementParseError(PlaygroundError):
    pass


class PreconditionError(PlaygroundError):
    pass


class FieldMismatchError(PreconditionError):
    pass


class ExcludedParameterError(PreconditionError):
    pass


class TrivialSolutionError(PreconditionError):
    pass


class DegenerateConjugateError(PreconditionError):
    """
    The K-point is fixed by conjugation, so P − σ(P) is the point at infinity.

    The rational point itself is attached so that callers can still report it.
    """

    def __init__(self, message: str, point) -> None:
        super().__init__(message)
        self.point = point


class VerificationError(PlaygroundError):
    pass


class NotOnCurveError(VerificationError):
    pass


class NotOnVarietyError(VerificationError):
    pass


class ProofInvariantError(VerificationError):
    pass


class RemoteLookupError(PlaygroundError):
    pass
