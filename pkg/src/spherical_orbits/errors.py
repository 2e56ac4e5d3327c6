"""Exception types and the validation report shared by all modules."""

from __future__ import annotations

from dataclasses import dataclass, field


class SphericalError(Exception):
    """Base class for every error raised by this package."""


class ZeroVector(SphericalError, ValueError):
    pass


class NotInLattice(SphericalError, ValueError):
    pass


class DimensionMismatch(SphericalError, ValueError):
    pass


class ParseError(SphericalError, ValueError):
    pass


class UnsupportedType(SphericalError, ValueError):
    pass


class IndexOutOfRange(SphericalError, IndexError):
    pass


class UnknownColor(SphericalError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class InvalidDatum(SphericalError, ValueError):
    pass


class NonIntegralRho(InvalidDatum):
    pass


class InvalidColoredCone(SphericalError, ValueError):
    pass


class NonSimplicialTrace(SphericalError, ValueError):
    """The trace of cone(Sigma) on M0 is not generated by independent
    primitive vectors; the input cannot come from a genuine spherical
    embedding."""


class TheoremViolation(SphericalError, AssertionError):
    pass


class NotInFan(SphericalError, ValueError):
    pass


class ColorInF(SphericalError, ValueError):
    """The color closure contains the whole orbit."""


@dataclass
class ValidationReport:
    """Collected outcome of a validity check.

    ``violations`` lists every failed condition; the report is truthy when
    there are none.
    """

    subject: str = ""
    violations: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, message: str) -> None:
        self.violations.append(message)

    def note(self, message: str) -> None:
        self.notes.append(message)

    def extend(self, other: "ValidationReport", prefix: str = "") -> None:
        self.violations.extend(prefix + v for v in other.violations)
        self.notes.extend(prefix + n for n in other.notes)

    def __str__(self) -> str:
        head = self.subject or "report"
        if self.ok:
            lines = [f"{head}: OK"]
        else:
            lines = [f"{head}: {len(self.violations)} violation(s)"]
            lines += [f"  - {v}" for v in self.violations]
        lines += [f"  * {n}" for n in self.notes]
        return "\n".join(lines)
