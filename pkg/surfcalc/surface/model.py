"""Lattice models of smooth rational surfaces with tracked curves.

A model stores the intersection form on a declared class lattice (basis
labels plus a symmetric rational gram matrix), the canonical class and the
curves whose classes and arithmetic genera are followed through blowups.
Singular points of the base surface that the lattice does not resolve are
carried alongside as dual graphs.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from surfcalc.dualgraph import Attachment, WeightedDualGraph, mumford_correction
from surfcalc.errors import DuplicateId, InconsistentModel, UnknownCurve
from surfcalc.exact import Number, as_rat, determinant, format_rat


@dataclass(frozen=True, slots=True)
class DivisorClass:
    """Rational vector over the basis of one specific model."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coefficients", tuple(as_rat(c) for c in self.coefficients)
        )

    @classmethod
    def of(cls, *values: Number) -> "DivisorClass":
        return cls(coefficients=tuple(values))

    @classmethod
    def zero(cls, size: int) -> "DivisorClass":
        return cls(coefficients=(Fraction(0),) * size)

    @classmethod
    def basis_vector(cls, index: int, size: int) -> "DivisorClass":
        return cls(coefficients=tuple(1 if i == index else 0 for i in range(size)))

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, index: int) -> Fraction:
        return self.coefficients[index]

    def _check_size(self, other: "DivisorClass") -> None:
        if len(other) != len(self):
            raise ValueError(
                f"classes live on different lattices ({len(self)} vs {len(other)})"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_size(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_size(other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coefficients))

    def __mul__(self, factor: Number) -> "DivisorClass":
        return DivisorClass(tuple(a * factor for a in self.coefficients))

    __rmul__ = __mul__

    def extended(self, size: int) -> "DivisorClass":
        """The same class after the basis grows to ``size`` (new coordinates zero)."""
        return DivisorClass(self.coefficients + (Fraction(0),) * (size - len(self)))

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"class {self.as_strings()} is not integral")
        return tuple(c.numerator for c in self.coefficients)

    def as_strings(self) -> list[str]:
        return [format_rat(c) for c in self.coefficients]


@dataclass(frozen=True, slots=True)
class TrackedCurve:
    """A curve followed through the construction.

    ``carried`` maps the label of a carried singular point to how the curve's
    strict transform on its minimal resolution meets that configuration.
    """

    id: str
    cls: DivisorClass
    pa: int
    carried: Mapping[str, Attachment] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "carried", dict(self.carried))


@dataclass(frozen=True, slots=True)
class CarriedPoint:
    """Singular point of the base surface kept outside the lattice (Du Val only)."""

    label: str
    graph: WeightedDualGraph


@dataclass(frozen=True, slots=True)
class BlowupStep:
    """Blow up a point given by the multiplicity of each tracked curve there.

    Infinitely near points are described by giving the previous exceptional
    curve multiplicity 1.
    """

    new_id: str
    center_mults: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "center_mults", dict(self.center_mults))


@dataclass(frozen=True, slots=True)
class SurfaceModel:
    """Smooth rational surface as a lattice with tracked curves."""

    basis: tuple[str, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    K: DivisorClass
    curves: tuple[TrackedCurve, ...] = ()
    carried: tuple[CarriedPoint, ...] = ()
    _curve_index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        basis = tuple(self.basis)
        gram = tuple(tuple(as_rat(v) for v in row) for row in self.gram)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "curves", tuple(self.curves))
        object.__setattr__(self, "carried", tuple(self.carried))

        n = len(basis)
        if len(set(basis)) != n:
            raise InconsistentModel(f"basis labels repeat: {list(basis)}")
        if len(gram) != n or any(len(row) != n for row in gram):
            raise InconsistentModel(f"gram must be {n}x{n}")
        if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(i + 1, n)):
            raise InconsistentModel("gram matrix is not symmetric")
        if determinant(gram) == 0:
            raise InconsistentModel("gram matrix is degenerate")
        if len(self.K) != n:
            raise InconsistentModel("canonical class has the wrong length")

        index: dict[str, int] = {}
        for position, curve in enumerate(self.curves):
            if curve.id in index:
                raise DuplicateId(curve.id, field="curves")
            if len(curve.cls) != n:
                raise InconsistentModel(f"class of '{curve.id}' has the wrong length")
            index[curve.id] = position
        object.__setattr__(self, "_curve_index", index)

        labels = {point.label for point in self.carried}
        for curve in self.curves:
            unknown = set(curve.carried) - labels
            if unknown:
                raise InconsistentModel(
                    f"curve '{curve.id}' meets unknown carried points {sorted(unknown)}"
                )
            defect = self.adjunction_defect(curve)
            if defect != 0:
                raise InconsistentModel(
                    f"adjunction fails for '{curve.id}' (off by {format_rat(defect)})"
                )

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def curve_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.curves)

    def dot(self, a: DivisorClass, b: DivisorClass) -> Fraction:
        """Intersection number of two classes under the gram form."""
        a._check_size(b)
        if len(a) != self.rank:
            raise ValueError(f"class has length {len(a)}, model has rank {self.rank}")
        return sum(
            (a[i] * self.gram[i][j] * b[j] for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )

    def vector(self, a: DivisorClass) -> list[Fraction]:
        """Gram row of a: the functional x ↦ a·x in basis coordinates."""
        return [
            sum((a[i] * self.gram[i][j] for i in range(self.rank)), Fraction(0))
            for j in range(self.rank)
        ]

    def has_curve(self, curve_id: str) -> bool:
        return curve_id in self._curve_index

    def curve(self, curve_id: str) -> TrackedCurve:
        position = self._curve_index.get(curve_id)
        if position is None:
            raise UnknownCurve(curve_id)
        return self.curves[position]

    def curves_named(self, ids: Iterable[str]) -> list[TrackedCurve]:
        return [self.curve(curve_id) for curve_id in ids]

    def carried_point(self, label: str) -> CarriedPoint:
        for point in self.carried:
            if point.label == label:
                return point
        raise KeyError(label)

    def carried_correction(self, a: TrackedCurve, b: TrackedCurve) -> Fraction:
        """Σ over carried points of the local Mumford term between a and b."""
        total = Fraction(0)
        for point in self.carried:
            attach_a, attach_b = a.carried.get(point.label), b.carried.get(point.label)
            if attach_a is None or attach_b is None:
                continue
            if attach_a.is_zero() or attach_b.is_zero():
                continue
            total += mumford_correction(point.graph, attach_a, attach_b)
        return total

    def resolution_product(self, a: TrackedCurve, b: TrackedCurve) -> Fraction:
        """a·b on the minimal resolution of the carried points."""
        return self.dot(a.cls, b.cls) - self.carried_correction(a, b)

    def adjunction_defect(self, curve: TrackedCurve) -> Fraction:
        """C² + K·C - (2pa - 2) on the minimal resolution; zero for a consistent model."""
        return (
            self.resolution_product(curve, curve)
            + self.dot(self.K, curve.cls)
            - (2 * curve.pa - 2)
        )

    def is_unimodular(self) -> bool:
        integral = all(v.denominator == 1 for row in self.gram for v in row)
        return integral and abs(determinant(self.gram)) == 1

    def class_of(self, coefficients: Mapping[str, Number]) -> DivisorClass:
        """Σ coefficient·(class of curve) over tracked curve ids."""
        total = DivisorClass.zero(self.rank)
        for curve_id, coefficient in coefficients.items():
            total = total + self.curve(curve_id).cls * coefficient
        return total
