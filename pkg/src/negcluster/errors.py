"""Exception hierarchy shared by the engine, the CLI, and the HTTP service.

Every error carries a stable machine-readable ``code`` so that the wire
formats can expose the closed set of error codes without string matching.
"""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for all domain errors raised by the workbench."""

    code = "parameter_error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_wire(self) -> dict:
        return {"code": self.code, "message": self.message, "details": self.details}


class ParameterError(WorkbenchError):
    """Invalid category parameters, degenerate diagonals, bad subsets."""

    code = "parameter_error"


class NotAdmissibleError(WorkbenchError):
    """A diagonal that is not an object of the category was passed in."""

    code = "not_admissible"


class NotSmsError(WorkbenchError):
    """A collection failed the simple minded system (or orthogonality) check."""

    code = "not_sms"


class NoExtensionError(ParameterError):
    """Middle term requested for a pair with vanishing extension space."""

    code = "parameter_error"


class TiltRuleIncompleteError(WorkbenchError):
    """The combinatorial tilting rule did not post-validate for this input.

    Raised instead of returning a silently wrong system; subset tilts use an
    extrapolated simultaneous-replacement rule whose result is always checked.
    """

    code = "tilt_rule_incomplete"


class UnsupportedWeightError(WorkbenchError):
    """Theorem-level operation requested at weight 1, where it does not hold."""

    code = "unsupported_weight"
