"""Exception hierarchy shared by every surfcalc module.

All errors derive from ``SurfcalcError`` (itself a ``ValueError``). Errors that
are caused by bad user input additionally derive from ``InputError`` so the CLI
can map them to exit code 2.
"""


class SurfcalcError(ValueError):
    """Base class for all surfcalc errors."""


class InputError(SurfcalcError):
    """The caller supplied data outside the documented domain."""


# exact


class SingularMatrix(SurfcalcError):
    """Linear system has no unique solution (determinant is zero)."""


class NotSymmetric(InputError):
    """A symmetric matrix was required."""


# dualgraph


class NotContractible(InputError):
    """Graph is disconnected or its intersection matrix is not negative definite."""


class NonRationalVertex(InputError):
    """Operation requires every exceptional curve to have genus 0."""

    def __init__(self, vertex_id: str, genus: int) -> None:
        super().__init__(f"vertex '{vertex_id}' has genus {genus}; genus 0 required")
        self.vertex_id = vertex_id
        self.genus = genus


class NonIntegralCycle(InputError):
    """Cycle was required to have integer coefficients."""


class PreconditionViolated(InputError):
    """Graph does not meet the preconditions of type recognition."""

    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


class InvalidParameters(InputError):
    """Numeric parameters outside their documented range."""


# surface


class UnknownCurve(InputError):
    def __init__(self, curve_id: str) -> None:
        super().__init__(f"unknown curve '{curve_id}'")
        self.curve_id = curve_id


class UnknownBase(InputError):
    def __init__(self, name: str, known: list[str]) -> None:
        super().__init__(f"unknown base surface '{name}'; known: {', '.join(known)}")
        self.name = name


class NegativeGenus(InputError):
    def __init__(self, curve_id: str, genus: int) -> None:
        super().__init__(
            f"blowup would give curve '{curve_id}' arithmetic genus {genus}"
        )
        self.curve_id = curve_id
        self.genus = genus


class InconsistentModel(InputError):
    """Surface model data violates symmetry, nondegeneracy or adjunction."""


class NotNegativeDefinite(InputError):
    """A contracted group has a non negative-definite intersection matrix."""


class Disconnected(InputError):
    """A contracted group is not connected under nonzero pairing."""


class OverlappingGroups(InputError):
    """A curve appears in more than one contracted group."""


class NonIntegralClasses(InputError):
    """Class group needs an integral unimodular ambient lattice."""


class CurveContracted(InputError):
    def __init__(self, curve_id: str) -> None:
        super().__init__(f"curve '{curve_id}' is contracted")
        self.curve_id = curve_id


class RankNotOne(InputError):
    """Operation needs a class group of free rank one."""


class DegenerateCurve(InputError):
    """Curve has zero self-intersection on the singular model."""


# classify


class InvalidParams(InputError):
    """Construction parameters violate their invariants."""


# cli input


class ParseError(InputError):
    def __init__(self, message: str, field: str | None = None) -> None:
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field


class DuplicateId(ParseError):
    def __init__(self, vertex_id: str, field: str = "vertices") -> None:
        super().__init__(f"duplicate id '{vertex_id}'", field=field)
        self.vertex_id = vertex_id


class SelfLoop(ParseError):
    def __init__(self, vertex_id: str) -> None:
        super().__init__(f"edge joins '{vertex_id}' to itself", field="edges")
        self.vertex_id = vertex_id
