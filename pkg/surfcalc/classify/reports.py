from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from surfcalc.exact import RatField, format_rat


def show(value: object) -> str:
    """Exact text form used in check reports."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int | Fraction):
        return format_rat(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {show(v)}" for k, v in value.items()) + "}"
    if isinstance(value, list | tuple):
        return "(" + ", ".join(show(v) for v in value) + ")"
    return str(value)


class CheckResult(BaseModel):
    """One named comparison of a computed value against its expected value."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(description="Check name")
    passed: bool = Field(description="Whether computed matches expected")
    computed: str = Field(description="Computed value, exact")
    expected: str = Field(description="Expected value, exact")

    @classmethod
    def compare(cls, name: str, computed: object, expected: object) -> "CheckResult":
        return cls(
            name=name,
            passed=computed == expected,
            computed=show(computed),
            expected=show(expected),
        )

    @classmethod
    def holds(cls, name: str, condition: bool, detail: str = "") -> "CheckResult":
        return cls(
            name=name,
            passed=bool(condition),
            computed=detail or show(condition),
            expected="holds" if detail else "true",
        )

    @classmethod
    def failed(cls, name: str, error: Exception) -> "CheckResult":
        return cls(
            name=name,
            passed=False,
            computed=f"{type(error).__name__}: {error}",
            expected="no error",
        )


class CheckedReport(BaseModel):
    """Report carrying a list of checks; passes when every check does."""

    model_config = ConfigDict(frozen=True)

    label: str = Field(description="What was checked")
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]


class ScreenReport(BaseModel):
    """Noether screen of a set of singular points: ρ = 10 + Σ(K_Y·G) - 1/r."""

    model_config = ConfigDict(frozen=True)

    label: str = Field(description="Candidate configuration")
    candidates: list[str] = Field(description="Recognized type of each point")
    rho: RatField = Field(description="Picard number forced by Noether's formula")
    r: int = Field(description="Lcm of the local indices")
    kg: RatField = Field(description="Sum of (K_Y.G) over the points")
    integral: bool = Field(description="Whether rho is an integer")


class AttachmentReport(BaseModel):
    """Unit attachment at one vertex: coefficients of K_Y + C + Σ a_i E_i."""

    model_config = ConfigDict(frozen=True)

    vertex: str
    coefficients: dict[str, RatField]
    integral: bool
    passes: bool


class PointReport(BaseModel):
    """Per-point summary on a singular model."""

    model_config = ConfigDict(frozen=True)

    label: str
    curves: list[str] = Field(default_factory=list)
    carried: bool = False
    type: str | None = Field(default=None, description="Recognized type, if recognizable")
    du_val: bool = False
    cyclic: bool = False
    admissible_cyclic: bool = False
    index: int | None = None
    discrepancies: dict[str, RatField] = Field(default_factory=dict)


class ConstructionReport(CheckedReport):
    points: list[PointReport] = Field(default_factory=list)
    class_group: str = Field(default="", description="Cl(X) as a sum of cyclic groups")
    rho: int = 0
    r: int = 1
    k_squared: RatField = Fraction(0)


class SuiteReport(CheckedReport):
    """Every verification check, grouped under one report."""

    seed: int = 0
    samples: int = 0


class ExampleReport(CheckedReport):
    """Checks of one worked example plus the values it computed."""

    values: dict[str, str] = Field(default_factory=dict)


class FeCandidate(BaseModel):
    """M1 + M2 = -K on F_e with both classes passing the irreducibility constraint."""

    model_config = ConfigDict(frozen=True)

    m1: tuple[int, int] = Field(description="(a, b) of M1 = aC0 + bF")
    m2: tuple[int, int] = Field(description="(a, b) of M2 = aC0 + bF")
    generates: bool = Field(description="Whether M1, M2 form a basis of Pic")
    balanced: bool = Field(description="Both of the form C0 + mF with m >= e")


class FeVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    e: int
    no_generating_decomposition: bool
    candidates: list[FeCandidate] = Field(default_factory=list)


class CurveReport(BaseModel):
    """A tracked curve seen from the singular model."""

    model_config = ConfigDict(frozen=True)

    id: str
    pa: int = Field(description="Arithmetic genus of the strict transform")
    contracted: bool
    self_intersection: RatField | None = Field(
        default=None, description="(π*C)² on X; None for contracted curves"
    )
    canonical_degree: RatField | None = Field(default=None, description="K_X.C")


class SurfaceReport(BaseModel):
    """Everything run_script produces, for the CLI."""

    model_config = ConfigDict(frozen=True)

    label: str
    rank: int = Field(description="Rank of the ambient lattice")
    points: list[PointReport] = Field(default_factory=list)
    curves: list[CurveReport] = Field(default_factory=list)
    class_group: str | None = Field(default=None, description="None when not computable")
    anticanonical_generated: bool | None = None
    rho: int
    r: int
    kg: RatField
    k_squared: RatField
    noether_consistent: bool
