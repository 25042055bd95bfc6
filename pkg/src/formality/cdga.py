"""Differentials, validation and degree-truncated cohomology of free CDGAs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from . import linalg
from .errors import OutOfRange
from .expr import parse_expression
from .grading import Element, GradedAlgebra, format_monomial_list


class FreeCDGA:
    """A (quotient of a) free graded-commutative algebra with a differential.

    ``diff`` maps generator names to their images; missing generators are
    closed.  ``faithful_degree`` is the degree through which cohomology and
    exactness answers are asserted to agree with the space being modelled
    (``None``: the algebra is the whole object).
    """

    def __init__(
        self,
        algebra: GradedAlgebra,
        diff: Optional[Mapping[str, Element]] = None,
        faithful_degree: Optional[int] = None,
        truncation_note: Optional[str] = None,
        name: Optional[str] = None,
    ):
        self.algebra = algebra
        self.name = name
        self.faithful_degree = faithful_degree
        self.truncation_note = truncation_note
        images = {}
        for gname, image in (diff or {}).items():
            if gname not in algebra.by_name:
                raise ValueError(f"differential given for undeclared generator {gname!r}")
            if not isinstance(image, Element):
                image = algebra.scalar(image)
            elif not image.algebra.same_as(algebra):
                raise ValueError(f"image of {gname!r} lives in another algebra")
            images[gname] = Element(algebra, image.terms)
        self.diff = {g.name: images.get(g.name, algebra.zero()) for g in algebra.generators}
        self._d_by_index = [self.diff[g.name] for g in algebra.generators]
        self._mono_cache = {}
        self._matrix_cache = {}
        self._image_cache = {}
        self._cohomology_cache = {}

    @classmethod
    def from_strings(
        cls,
        generators: Sequence,
        diff: Optional[Mapping[str, str]] = None,
        relations: Sequence[str] = (),
        top_degree: Optional[int] = None,
        max_weight: Optional[int] = None,
        **kwargs,
    ) -> "FreeCDGA":
        """Build from ``(name, degree[, weight])`` tuples and expression strings."""
        free = GradedAlgebra(generators)
        rels = [parse_expression(free, r) for r in relations]
        algebra = GradedAlgebra(generators, rels, top_degree, max_weight)
        images = {k: parse_expression(algebra, v) for k, v in (diff or {}).items()}
        return cls(algebra, images, **kwargs)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<FreeCDGA{label} {self.algebra!r}>"

    # -- convenience -------------------------------------------------------

    @property
    def generators(self):
        return self.algebra.generators

    def gen(self, name: str) -> Element:
        return self.algebra.gen(name)

    def parse(self, text: str) -> Element:
        return parse_expression(self.algebra, text)

    def top_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def is_faithful(self, d: int) -> bool:
        return self.faithful_degree is None or d <= self.faithful_degree

    def require_faithful(self, d: int, what: str = "answer") -> None:
        if not self.is_faithful(d):
            raise OutOfRange(
                f"{what} needs degree {d}, but the model is only faithful through degree "
                f"{self.faithful_degree}"
                + (f" ({self.truncation_note})" if self.truncation_note else "")
            )

    # -- differential ------------------------------------------------------

    def d_monomial(self, mono) -> Element:
        cached = self._mono_cache.get(mono)
        if cached is not None:
            return cached
        alg = self.algebra
        word = [i for i, e in mono for _ in range(e)]
        out = alg.zero()
        prefix_degree = 0
        for pos, i in enumerate(word):
            dg = self._d_by_index[i]
            if dg:
                left = alg.from_factors(word[:pos])
                right = alg.from_factors(word[pos + 1:])
                term = left * dg * right
                out = out - term if prefix_degree % 2 else out + term
            prefix_degree += alg.generators[i].degree
        self._mono_cache[mono] = out
        return out

    def d(self, x: Element) -> Element:
        out = {}
        for m, c in x.terms.items():
            for m2, c2 in self.d_monomial(m).terms.items():
                out[m2] = out.get(m2, 0) + c * c2
        return Element(self.algebra, out)

    def d_matrix(self, d: int) -> list:
        """Matrix of ``d: basis(d) -> basis(d+1)`` as a list of columns."""
        cols = self._matrix_cache.get(d)
        if cols is None:
            cols = [self.d_monomial(m).vector(d + 1) for m in self.algebra.basis(d)]
            self._matrix_cache[d] = cols
        return cols

    def d_rows(self, d: int) -> list:
        return linalg.transpose(self.d_matrix(d), len(self.algebra.basis(d + 1)))

    def image_span(self, d: int) -> linalg.Span:
        """Span of ``d(basis(d-1))`` inside degree ``d``."""
        span = self._image_cache.get(d)
        if span is None:
            dim = len(self.algebra.basis(d))
            cols = self.d_matrix(d - 1) if d >= 1 else []
            span = self._image_cache[d] = linalg.Span(cols, dim)
        return span

    def degree_cohomology(self, d: int) -> "DegreeCohomology":
        h = self._cohomology_cache.get(d)
        if h is None:
            h = self._cohomology_cache[d] = _degree_cohomology(self, d)
        return h

    def cohomology(self, max_degree: int) -> "CohomologyBasis":
        return cohomology(self, max_degree)


def apply_d(model: FreeCDGA, x: Element) -> Element:
    return model.d(x)


# -- validation ----------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    generator: str
    kind: str
    message: str


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    checked_minimality: bool = False

    @property
    def structural(self) -> list:
        return [v for v in self.violations if v.kind != "linear-part"]

    @property
    def ok(self) -> bool:
        return not self.structural

    @property
    def minimal(self) -> Optional[bool]:
        if not self.checked_minimality:
            return None
        return not any(v.kind == "linear-part" for v in self.violations)


def validate(model: FreeCDGA, minimal: bool = False) -> ValidationReport:
    alg = model.algebra
    report = ValidationReport(checked_minimality=minimal)
    for g in alg.generators:
        image = model.diff[g.name]
        degs = image.degrees()
        if degs and degs != {g.degree + 1}:
            report.violations.append(Violation(
                g.name, "degree",
                f"d{g.name} has degree(s) {sorted(degs)}, expected {g.degree + 1}"))
            continue
        dd = model.d(image)
        if dd:
            report.violations.append(Violation(g.name, "d-squared", f"d(d{g.name}) = {dd} != 0"))
        if alg.max_weight is not None:
            light = [m for m in image.terms if alg.weight(m) < g.weight]
            if light:
                report.violations.append(Violation(
                    g.name, "weight",
                    f"d{g.name} lowers weight below {g.weight}, so the weight truncation is not d-stable"))
        if minimal:
            linear = [m for m in image.terms if len(m) == 1 and m[0][1] == 1]
            if linear:
                names = format_monomial_list(alg, linear)
                report.violations.append(Violation(
                    g.name, "linear-part", f"d{g.name} has linear part in {names}"))
    for rel in alg.relations:
        word = [i for i, e in rel for _ in range(e)]
        out = alg.zero()
        prefix_degree = 0
        for pos, i in enumerate(word):
            dg = model._d_by_index[i]
            if dg:
                term = alg.from_factors(word[:pos]) * dg * alg.from_factors(word[pos + 1:])
                out = out - term if prefix_degree % 2 else out + term
            prefix_degree += alg.generators[i].degree
        if out:
            report.violations.append(Violation(
                alg.format_monomial(rel), "ideal",
                f"relation {alg.format_monomial(rel)} is not d-stable: d of it leaves {out}"))
    return report


# -- cohomology ----------------------------------------------------------------


@dataclass(frozen=True)
class CohomologyClass:
    degree: int
    coords: tuple
    representative: Element

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self) -> str:
        return f"[{self.representative}]"


@dataclass
class DegreeCohomology:
    degree: int
    monomials: list
    cocycles: list
    coboundaries: list
    representatives: list
    classifier: linalg.Span = field(repr=False)

    @property
    def betti(self) -> int:
        return len(self.representatives)

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def coordinates(self, vec: Sequence) -> Optional[list]:
        """Class coordinates of a cocycle vector; ``None`` if it is not closed."""
        coeffs = self.classifier.coordinates(vec)
        if coeffs is None:
            return None
        return coeffs[: self.betti]


def _degree_cohomology(model: FreeCDGA, d: int) -> DegreeCohomology:
    alg = model.algebra
    dim = len(alg.basis(d))
    next_dim = len(alg.basis(d + 1))
    rows = linalg.transpose(model.d_matrix(d), next_dim) if dim else []
    cocycles = linalg.nullspace(rows, dim) if dim else []
    bounds = model.image_span(d)
    ech = linalg.Echelon(dim, bounds.rows)
    reps = []
    for z in cocycles:
        z = bounds.reduce(z)
        if ech.add(z):
            reps.append(z)
    classifier = linalg.Span(reps + bounds.rows, dim)
    return DegreeCohomology(d, alg.basis(d), cocycles, bounds.basis(), reps, classifier)


class CohomologyBasis:
    """Per-degree cocycles, coboundaries and chosen class representatives."""

    def __init__(self, model: FreeCDGA, max_degree: int):
        if max_degree < 0:
            raise ValueError("max_degree must be nonnegative")
        self.model = model
        self.max_degree = max_degree
        self.degrees = {d: model.degree_cohomology(d) for d in range(max_degree + 1)}

    @property
    def faithful_degree(self) -> Optional[int]:
        return self.model.faithful_degree

    @property
    def faithful_through(self) -> int:
        f = self.model.faithful_degree
        return self.max_degree if f is None else min(f, self.max_degree)

    def __getitem__(self, d: int) -> DegreeCohomology:
        self._check(d)
        return self.degrees[d]

    def _check(self, d: int) -> None:
        if d < 0 or d > self.max_degree:
            raise OutOfRange(f"degree {d} outside the computed range 0..{self.max_degree}")

    def betti(self, d: int) -> int:
        if d < 0:
            return 0
        return self[d].betti

    def betti_numbers(self) -> dict:
        return {d: h.betti for d, h in self.degrees.items()}

    def classes(self, d: int) -> list:
        h = self[d]
        out = []
        for i, rep in enumerate(h.representatives):
            coords = tuple(Fraction(int(i == j)) for j in range(h.betti))
            out.append(CohomologyClass(d, coords, self.model.algebra.from_vector(d, rep)))
        return out

    def zero_class(self, d: int) -> CohomologyClass:
        return CohomologyClass(d, tuple(Fraction(0) for _ in range(self.betti(d))),
                               self.model.algebra.zero())

    def unit(self) -> CohomologyClass:
        return self.class_of(self.model.algebra.one(), 0)

    def from_coords(self, d: int, coords: Sequence) -> CohomologyClass:
        h = self[d]
        vec = linalg.combination(coords, h.representatives, h.dim)
        return CohomologyClass(d, tuple(linalg.as_fractions(coords)),
                               self.model.algebra.from_vector(d, vec))

    def class_of(self, x: Element, degree: Optional[int] = None) -> CohomologyClass:
        """Reduce a closed homogeneous element to its class (keeping ``x`` as representative)."""
        if degree is None:
            degree = x.degree
            if degree is None:
                raise ValueError("pass the degree explicitly for the zero element")
        h = self[degree]
        coords = h.coordinates(x.vector(degree))
        if coords is None:
            raise ValueError(f"{x} is not closed")
        return CohomologyClass(degree, tuple(coords), x)


def cohomology(model: FreeCDGA, max_degree: int) -> CohomologyBasis:
    return CohomologyBasis(model, max_degree)


def cup(basis: CohomologyBasis, u: CohomologyClass, v: CohomologyClass) -> CohomologyClass:
    total = u.degree + v.degree
    if total > basis.max_degree:
        raise OutOfRange(f"cup product lands in degree {total} > max_degree {basis.max_degree}")
    return basis.class_of(u.representative * v.representative, total)


@dataclass(frozen=True)
class Exactness:
    """Outcome of :func:`is_exact`: a primitive, or the nonzero class as certificate."""

    element: Element
    degree: int
    exact: bool
    primitive: Optional[Element]
    class_coords: Optional[tuple]


def is_exact(model: FreeCDGA, z: Element, degree: Optional[int] = None) -> Exactness:
    if degree is None:
        degree = z.degree
        if degree is None:
            return Exactness(z, 0, True, model.algebra.zero(), None)
    if model.d(z):
        raise ValueError(f"{z} is not closed")
    model.require_faithful(degree, "exactness test")
    vec = z.vector(degree)
    if degree == 0:
        coeffs = None if not linalg.is_zero(vec) else []
    else:
        coeffs = model.image_span(degree).coordinates(vec)
    if coeffs is not None:
        primitive = model.algebra.from_vector(degree - 1, coeffs) if degree else model.algebra.zero()
        return Exactness(z, degree, True, primitive, None)
    coords = model.degree_cohomology(degree).coordinates(vec)
    return Exactness(z, degree, False, None, tuple(coords))
