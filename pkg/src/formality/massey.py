"""Triple Massey products with their indeterminacy."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import linalg
from .cdga import CohomologyBasis, CohomologyClass, FreeCDGA, cup, is_exact
from .errors import OutOfRange
from .grading import Element

NONZERO = "nonzero"
VANISHES = "vanishes"
UNDEFINED = "undefined"


@dataclass(frozen=True)
class MasseyResult:
    classes: tuple
    degrees: tuple
    primitive_12: Optional[Element]  # d(primitive_12) = alpha1*alpha2
    primitive_23: Optional[Element]  # d(primitive_23) = alpha2*alpha3
    representative: Optional[Element]
    value: Optional[CohomologyClass]
    indeterminacy: tuple
    verdict: str

    @property
    def total_degree(self) -> int:
        return sum(self.degrees) - 1

    @property
    def nonformal(self) -> bool:
        """A nonzero Massey product obstructs formality."""
        return self.verdict == NONZERO


def indeterminacy(basis: CohomologyBasis, a1: CohomologyClass, a3: CohomologyClass,
                  total_degree: int) -> list:
    """Echelon basis (class coordinates) of ``a1*H^(total-p1) + H^(total-p3)*a3``."""
    if total_degree > basis.max_degree:
        raise OutOfRange(f"degree {total_degree} beyond computed range {basis.max_degree}")
    n = basis.betti(total_degree)
    ech = linalg.Echelon(n)
    q1 = total_degree - a1.degree
    if 0 <= q1:
        for w in basis.classes(q1):
            ech.add(cup(basis, a1, w).coords)
    q3 = total_degree - a3.degree
    if 0 <= q3:
        for w in basis.classes(q3):
            ech.add(cup(basis, w, a3).coords)
    return ech.rows


def triple_massey(
    model: FreeCDGA,
    basis: CohomologyBasis,
    a1: CohomologyClass,
    a2: CohomologyClass,
    a3: CohomologyClass,
    primitive_12: Optional[Element] = None,
    primitive_23: Optional[Element] = None,
) -> MasseyResult:
    """``<a1, a2, a3>`` computed on the classes' stored representatives.

    Explicit primitives may be supplied; they must satisfy the defining
    equations.  The default primitives are the deterministic echelon ones.
    """
    p1, p2, p3 = a1.degree, a2.degree, a3.degree
    total = p1 + p2 + p3 - 1
    model.require_faithful(total, "Massey product")
    if total > basis.max_degree:
        raise OutOfRange(f"Massey product lands in degree {total} > max_degree {basis.max_degree}")
    x1, x2, x3 = a1.representative, a2.representative, a3.representative
    degrees = (p1, p2, p3)
    classes = (a1, a2, a3)

    def undefined():
        return MasseyResult(classes, degrees, None, None, None, None, (), UNDEFINED)

    prod12 = x1 * x2
    prod23 = x2 * x3
    if primitive_12 is None:
        ex = is_exact(model, prod12, p1 + p2)
        if not ex.exact:
            return undefined()
        primitive_12 = ex.primitive
    elif model.d(primitive_12) != prod12:
        raise ValueError("supplied primitive_12 does not bound alpha1*alpha2")
    if primitive_23 is None:
        ex = is_exact(model, prod23, p2 + p3)
        if not ex.exact:
            return undefined()
        primitive_23 = ex.primitive
    elif model.d(primitive_23) != prod23:
        raise ValueError("supplied primitive_23 does not bound alpha2*alpha3")

    sign = -1 if (p1 + 1) % 2 else 1
    rep = x1 * primitive_23 + primitive_12 * x3 * sign
    value = basis.class_of(rep, total)
    indet = indeterminacy(basis, a1, a3, total)
    inside = linalg.Echelon(len(value.coords), indet).contains(value.coords)
    verdict = VANISHES if inside else NONZERO
    return MasseyResult(classes, degrees, primitive_12, primitive_23, rep, value,
                        tuple(tuple(r) for r in indet), verdict)


def defined(basis: CohomologyBasis, a1, a2, a3) -> bool:
    return cup(basis, a1, a2).is_zero and cup(basis, a2, a3).is_zero
