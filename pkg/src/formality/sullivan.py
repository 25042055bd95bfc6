"""Minimal models built degree by degree, and s-formality checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import linalg
from .cdga import FreeCDGA, is_exact, validate
from .errors import OutOfRange, PreconditionError
from .grading import Element, GradedAlgebra


@dataclass
class MinimalModelStage:
    """A minimal algebra with a morphism into ``target``.

    ``built_through = s`` means the morphism is an isomorphism on cohomology
    in degrees ``<= s`` and injective in degree ``s + 1``; ``None`` means
    in every degree.
    """

    model: FreeCDGA
    target: FreeCDGA
    morphism: dict
    built_through: Optional[int]
    notes: list = field(default_factory=list)

    def covers(self, s: int) -> bool:
        return self.built_through is None or s <= self.built_through

    def apply(self, x: Element) -> Element:
        return apply_morphism(self.model, self.target, self.morphism, x)

    def commutes(self) -> bool:
        gen = self.model.gen
        return all(
            self.apply(self.model.d(gen(g.name))) == self.target.d(self.morphism[g.name])
            for g in self.model.generators
        )


def apply_morphism(source: FreeCDGA, target: FreeCDGA, morphism: dict, x: Element) -> Element:
    images = [morphism[g.name] for g in source.generators]
    out = target.algebra.zero()
    for mono, c in x.terms.items():
        term = target.algebra.scalar(c)
        for i, e in mono:
            for _ in range(e):
                term = term * images[i]
        out = out + term
    return out


def identity_stage(model: FreeCDGA) -> MinimalModelStage:
    """Regard an algebra that is already minimal as its own minimal model."""
    report = validate(model, minimal=True)
    if not report.ok or not report.minimal or not model.algebra.is_free:
        raise PreconditionError(f"{model!r} is not a minimal free CDGA")
    morphism = {g.name: model.gen(g.name) for g in model.generators}
    return MinimalModelStage(model, model, morphism, model.faithful_degree,
                             ["identity stage on an already minimal model"])


def _induced_matrix(model: FreeCDGA, target: FreeCDGA, morphism: dict, d: int) -> list:
    """Columns: target class coordinates of f(rep) for each model class rep in degree d."""
    src = model.degree_cohomology(d)
    dst = target.degree_cohomology(d)
    cols = []
    for rep in src.representatives:
        image = apply_morphism(model, target, morphism, model.algebra.from_vector(d, rep))
        coords = dst.coordinates(image.vector(d))
        if coords is None:
            raise RuntimeError("morphism does not commute with differentials")
        cols.append(coords)
    return cols


class _Builder:
    def __init__(self, target: FreeCDGA):
        self.target = target
        self.specs = []  # (name, degree)
        self.diff_terms = {}
        self.morphism = {}
        self.counters = {}
        self.model = FreeCDGA(GradedAlgebra([]))

    def adjoin(self, degree: int, d_image: Optional[Element], f_image: Element) -> None:
        self.counters[degree] = self.counters.get(degree, 0) + 1
        name = f"v{degree}_{self.counters[degree]}"
        self.specs.append((name, degree))
        # appending generators keeps existing monomial indices valid
        self.diff_terms[name] = dict(d_image.terms) if d_image is not None else {}
        self.morphism[name] = f_image
        alg = GradedAlgebra(self.specs)
        diff = {k: Element(alg, v) for k, v in self.diff_terms.items()}
        self.model = FreeCDGA(alg, diff, name="minimal model")


def minimal_model(target: FreeCDGA, max_degree: int, max_rounds: int = 8) -> MinimalModelStage:
    """Build a minimal model of ``target`` through ``max_degree``.

    In each degree ``n``: adjoin closed generators for the cokernel of
    ``H^n``, then repeatedly adjoin degree-``n`` generators killing the kernel
    of ``H^(n+1)``.  With degree-1 generators the killing step need not
    terminate; after ``max_rounds`` the construction stops and reports the
    largest degree it can vouch for.
    """
    report = validate(target)
    if not report.ok:
        raise PreconditionError(f"target does not validate: {report.violations[0].message}")
    notes = []
    if target.degree_cohomology(0).betti != 1:
        raise PreconditionError("target is not connected (H^0 is not one-dimensional)")
    if target.faithful_degree is not None and max_degree > target.faithful_degree - 1:
        notes.append(f"max_degree lowered from {max_degree} to {target.faithful_degree - 1} "
                     "to stay inside the target's faithful range")
        max_degree = target.faithful_degree - 1
    b = _Builder(target)
    built = max_degree
    for n in range(1, max_degree + 1):
        # cokernel in degree n
        dst = target.degree_cohomology(n)
        ech = linalg.Echelon(dst.betti, _induced_matrix(b.model, target, b.morphism, n))
        for j in range(dst.betti):
            if ech.add(linalg.unit(dst.betti, j)):
                rep = target.algebra.from_vector(n, dst.representatives[j])
                b.adjoin(n, None, rep)
        # kernel in degree n+1
        for _ in range(max_rounds):
            cols = _induced_matrix(b.model, target, b.morphism, n + 1)
            src = b.model.degree_cohomology(n + 1)
            rows = linalg.transpose(cols, target.degree_cohomology(n + 1).betti)
            kernel = linalg.nullspace(rows, src.betti) if src.betti else []
            if not kernel:
                break
            for c in kernel:
                z_vec = linalg.combination(c, src.representatives, src.dim)
                z = b.model.algebra.from_vector(n + 1, z_vec)
                fz = apply_morphism(b.model, target, b.morphism, z)
                ex = is_exact(target, fz, n + 1)
                b.adjoin(n, z, ex.primitive)
        else:
            built = n - 1
            notes.append(f"kernel in degree {n + 1} not exhausted after {max_rounds} rounds; "
                         f"stopped with built_through = {built}")
            break
    # generators of degree <= built decide exactness one degree higher
    b.model.faithful_degree = max(built, 0) + 1
    b.model.truncation_note = f"minimal model built through degree {built}"
    return MinimalModelStage(b.model, target, dict(b.morphism), built, notes)


# -- s-formality ---------------------------------------------------------------


@dataclass
class CNDecomposition:
    """``V^i = C^i + N^i`` per degree, as elements of the model."""

    s: int
    closed: dict
    nonclosed: dict
    closed_coords: dict
    nonclosed_coords: dict

    def nonclosed_elements(self) -> list:
        return [x for i in sorted(self.nonclosed) for x in self.nonclosed[i]]


def cn_decompose(stage: MinimalModelStage, s: int) -> CNDecomposition:
    if not stage.covers(s):
        raise OutOfRange(f"s = {s} exceeds built_through = {stage.built_through}")
    model = stage.model
    alg = model.algebra
    closed, nonclosed, cc, nc = {}, {}, {}, {}
    for i in range(1, s + 1):
        gens = [g for g in alg.generators if g.degree == i]
        if not gens:
            continue
        n = len(gens)
        cols = [model.diff[g.name].vector(i + 1) for g in gens]
        rows = linalg.transpose(cols, len(alg.basis(i + 1)))
        kernel = linalg.nullspace(rows, n)
        _, pivots = linalg.rref(kernel, n)
        complement = [linalg.unit(n, j) for j in range(n) if j not in set(pivots)]

        def to_elem(v):
            return sum((alg.gen(g.name) * c for g, c in zip(gens, v) if c), alg.zero())

        cc[i] = kernel
        nc[i] = complement
        closed[i] = [to_elem(v) for v in kernel]
        nonclosed[i] = [to_elem(v) for v in complement]
    return CNDecomposition(s, closed, nonclosed, cc, nc)


@dataclass
class SFormalityReport:
    s: int
    decomposition: CNDecomposition
    passed: bool
    witness: Optional[Element]
    witness_degree: Optional[int]
    bound: Optional[int]
    semantics: str = "canonical echelon decomposition"

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def ideal_slice(model: FreeCDGA, generators: list, s: int, d: int) -> list:
    """Echelon basis (over ``basis(d)``) of ``I(generators)`` inside the generators-of-degree-<=s subalgebra."""
    alg = model.algebra
    dim = len(alg.basis(d))
    ech = linalg.Echelon(dim)
    for n in generators:
        q = n.degree
        if q > d:
            continue
        for m in alg.restricted_basis(d - q, s):
            prod = n * alg.monomial(m)
            if prod:
                ech.add(prod.vector(d))
    return ech.rows


def s_formality(stage: MinimalModelStage, s: int, search_bound: int) -> SFormalityReport:
    """Check condition 3 of s-formality degree by degree up to ``search_bound``.

    A pass is only a statement about degrees ``<= search_bound`` unless the
    ideal is zero, in which case ``bound`` is recorded as ``None``.
    """
    model = stage.model
    dec = cn_decompose(stage, s)
    nonclosed = dec.nonclosed_elements()
    if not nonclosed:
        return SFormalityReport(s, dec, True, None, None, None)
    model.require_faithful(search_bound, "s-formality search")
    alg = model.algebra
    for d in range(1, search_bound + 1):
        ideal = ideal_slice(model, nonclosed, s, d)
        if not ideal:
            continue
        next_dim = len(alg.basis(d + 1))
        images = [model.d(alg.from_vector(d, v)).vector(d + 1) for v in ideal]
        rows = linalg.transpose(images, next_dim)
        for c in linalg.nullspace(rows, len(ideal)):
            z = alg.from_vector(d, linalg.combination(c, ideal, len(alg.basis(d))))
            if not is_exact(model, z, d).exact:
                return SFormalityReport(s, dec, False, z, d, search_bound)
    return SFormalityReport(s, dec, True, None, None, search_bound)


@dataclass
class FormalityVerdict:
    formal: bool
    s: int
    manifold_dim: int
    report: SFormalityReport
    caveat: str = ("only meaningful when the model is that of a compact connected "
                   "orientable manifold of this dimension")

    @property
    def verdict(self) -> str:
        return "formal" if self.formal else "non-formal"


def formality_verdict(stage: MinimalModelStage, manifold_dim: int,
                      search_bound: Optional[int] = None) -> FormalityVerdict:
    """Formal iff the model is ``(ceil(dim/2) - 1)``-formal."""
    if manifold_dim < 1:
        raise ValueError("manifold dimension must be positive")
    s = (manifold_dim + 1) // 2 - 1
    if not stage.covers(s):
        raise OutOfRange(f"formality in dimension {manifold_dim} needs the stage through degree {s}, "
                         f"but it is built through {stage.built_through}")
    bound = manifold_dim + 1 if search_bound is None else search_bound
    faithful = stage.model.faithful_degree
    if faithful is not None and bound > faithful:
        report = s_formality(stage, s, faithful)
        if report.passed and report.bound is not None:
            raise OutOfRange(f"{s}-formality holds through degree {faithful}, but certifying it "
                             f"through {bound} exceeds the faithful range")
        return FormalityVerdict(report.passed, s, manifold_dim, report)
    report = s_formality(stage, s, bound)
    return FormalityVerdict(report.passed, s, manifold_dim, report)
