from __future__ import annotations

from dataclasses import dataclass, field


class FinCatError(Exception):
    pass


class IndexOutOfRange(FinCatError, IndexError):
    """A table refers to an object or morphism that does not exist."""


class CyclicQuiver(FinCatError):
    pass


class EnumerationCapExceeded(FinCatError):
    def __init__(self, cap, what="enumeration"):
        super().__init__(f"{what} exceeded cap of {cap} candidate checks")
        self.cap = cap
        self.what = what


class ShapeMismatch(FinCatError):
    pass


class NotInitial(FinCatError):
    pass


class MissingLimit(FinCatError):
    pass


class MissingColimit(FinCatError):
    pass


class StrictnessViolation(FinCatError):
    pass


class NoUniversalMorphism(FinCatError):
    pass


class ParseError(FinCatError):
    """Malformed input document; the message starts with a JSON-path position."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path


class ValidationError(FinCatError):
    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


@dataclass(frozen=True)
class Violation:
    clause: str
    witness: tuple

    def __str__(self):
        return f"{self.clause} at {self.witness}"


@dataclass
class ValidationReport:
    """Every law violation found, each with the objects/morphisms witnessing it.

    An empty report means the subject is valid.
    """

    subject: str
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, clause, *witness):
        self.violations.append(Violation(clause, tuple(witness)))

    def extend(self, other: ValidationReport, prefix=""):
        for v in other.violations:
            self.violations.append(Violation(prefix + v.clause, v.witness))

    def clauses(self):
        return [v.clause for v in self.violations]

    def raise_if_invalid(self):
        if self.violations:
            raise ValidationError(self)
        return self

    def to_dict(self):
        return {
            "subject": self.subject,
            "valid": self.ok,
            "violations": [
                {"clause": v.clause, "witness": list(v.witness)} for v in self.violations
            ],
        }

    def __str__(self):
        if self.ok:
            return f"{self.subject}: valid"
        body = "; ".join(str(v) for v in self.violations[:10])
        more = len(self.violations) - 10
        if more > 0:
            body += f"; ... {more} more"
        return f"{self.subject}: {body}"
