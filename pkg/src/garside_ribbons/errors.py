"""Exception hierarchy. Every error carries a machine-readable ``code``."""

from __future__ import annotations


class GarsideError(Exception):
    code = "garside_error"

    def __init__(self, message: str = "", **details):
        super().__init__(message)
        self.details = details

    def to_dict(self) -> dict:
        out = {"error": self.code, "message": str(self)}
        if self.details:
            out["details"] = {k: _jsonable(v) for k, v in self.details.items()}
        return out


def _jsonable(v):
    if isinstance(v, (frozenset, set)):
        return sorted(v)
    if isinstance(v, tuple):
        return list(v)
    return v


class NotADivisor(GarsideError):
    code = "not_a_divisor"


class BoundExceeded(GarsideError):
    code = "bound_exceeded"


class GroupNotFinite(GarsideError):
    code = "group_not_finite"


class InvalidCoxeterElement(GarsideError):
    code = "invalid_coxeter_element"


class InvalidSpec(GarsideError):
    code = "invalid_spec"


class AssumptionViolated(GarsideError):
    code = "assumption_violated"


class AtomInP(GarsideError):
    code = "atom_in_parabolic"


class NotReduced(GarsideError):
    code = "not_reduced"


class ConjugateUndefined(GarsideError):
    code = "conjugate_undefined"


class NotARibbon(GarsideError):
    code = "not_a_ribbon"


class SourceMismatch(GarsideError):
    code = "source_mismatch"


class NotConjugate(GarsideError):
    code = "not_conjugate"


class InternalError(GarsideError):
    code = "internal_error"


class ParseError(GarsideError):
    code = "parse_error"

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}", position=position, text=text)
        self.position = position


class UnknownAtom(ParseError):
    code = "unknown_atom"
