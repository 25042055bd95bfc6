"""Free graded-commutative algebras over the rationals.

A monomial is a tuple of ``(generator_index, exponent)`` pairs sorted by
index; odd generators carry exponent 1.  An :class:`Element` is a finite
mapping from monomials to nonzero :class:`~fractions.Fraction` coefficients.

An algebra may also be the quotient of the free one by a monomial ideal:
explicit monomial relations, a top degree, or a cap on the total weight of
monomials.  Monomials in the ideal are simply never stored, which keeps the
multiplication rule unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Mapping, Optional, Sequence

Monomial = tuple  # tuple[tuple[int, int], ...]
UNIT: Monomial = ()


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    index: int
    weight: int = 1

    @property
    def odd(self) -> bool:
        return self.degree % 2 == 1


class GradedAlgebra:
    """Free graded-commutative algebra on an ordered list of generators.

    ``generators`` is a sequence of ``(name, degree)`` or
    ``(name, degree, weight)`` tuples.
    """

    def __init__(
        self,
        generators: Sequence,
        relations: Iterable = (),
        top_degree: Optional[int] = None,
        max_weight: Optional[int] = None,
    ):
        gens = []
        seen = set()
        for i, spec in enumerate(generators):
            if isinstance(spec, Generator):
                name, degree, weight = spec.name, spec.degree, spec.weight
            else:
                name, degree, *rest = spec
                weight = rest[0] if rest else 1
            if not name or not isinstance(name, str):
                raise ValueError(f"generator name must be a nonempty string, got {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            if int(degree) != degree or degree < 1:
                raise ValueError(f"generator {name!r} must have positive integer degree, got {degree!r}")
            seen.add(name)
            gens.append(Generator(name, int(degree), i, int(weight)))
        self.generators = tuple(gens)
        self.by_name = {g.name: g for g in gens}
        self.top_degree = top_degree
        self.max_weight = max_weight
        rels = []
        for r in relations:
            if isinstance(r, Element):
                if len(r.terms) != 1:
                    raise ValueError("relations must be single monomials")
                (r,) = r.terms
            rels.append(tuple(r))
        self.relations = tuple(sorted(set(rels)))
        self._basis_cache = {}
        self._index_cache = {}

    # -- structure ---------------------------------------------------------

    @property
    def is_free(self) -> bool:
        return not self.relations and self.top_degree is None and self.max_weight is None

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        gens = ", ".join(f"{g.name}({g.degree})" for g in self.generators)
        return f"GradedAlgebra({gens})"

    def same_as(self, other: "GradedAlgebra") -> bool:
        return (
            self.generators == other.generators
            and self.relations == other.relations
            and self.top_degree == other.top_degree
            and self.max_weight == other.max_weight
        )

    def degree(self, mono: Monomial) -> int:
        return sum(self.generators[i].degree * e for i, e in mono)

    def weight(self, mono: Monomial) -> int:
        return sum(self.generators[i].weight * e for i, e in mono)

    def killed(self, mono: Monomial) -> bool:
        """True when ``mono`` lies in the defining monomial ideal."""
        if self.top_degree is not None and self.degree(mono) > self.top_degree:
            return True
        if self.max_weight is not None and self.weight(mono) > self.max_weight:
            return True
        if self.relations:
            exps = dict(mono)
            for rel in self.relations:
                if all(exps.get(i, 0) >= e for i, e in rel):
                    return True
        return False

    # -- elements ----------------------------------------------------------

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {UNIT: Fraction(1)})

    def scalar(self, c) -> "Element":
        return Element(self, {UNIT: Fraction(c)})

    def gen(self, name: str) -> "Element":
        g = self.by_name[name]
        return self.monomial(((g.index, 1),))

    def monomial(self, mono: Monomial, coeff=1) -> "Element":
        return Element(self, {tuple(mono): Fraction(coeff)})

    def element(self, terms: Mapping) -> "Element":
        return Element(self, terms)

    def from_vector(self, d: int, vec: Sequence) -> "Element":
        return Element(self, dict(zip(self.basis(d), vec)))

    def from_factors(self, indices: Sequence[int]) -> "Element":
        """Ordered product of generators given by index, in canonical form."""
        sign, mono = canonicalize(self, list(indices))
        if sign == 0:
            return self.zero()
        return self.monomial(mono, sign)

    # -- products ----------------------------------------------------------

    def monomial_product(self, m1: Monomial, m2: Monomial):
        """``(sign, monomial)`` with ``m1 * m2 = sign * monomial``; sign 0 if it vanishes."""
        if not m1:
            return (0, None) if self.killed(m2) else (1, m2)
        if not m2:
            return (0, None) if self.killed(m1) else (1, m1)
        gens = self.generators
        odd2 = [i for i, _ in m2 if gens[i].odd]
        sign = 1
        if odd2:
            for i, _ in m1:
                if gens[i].odd:
                    # every odd factor of m2 with smaller index jumps over this one
                    passes = sum(1 for j in odd2 if j < i)
                    if passes % 2:
                        sign = -sign
        exps = dict(m1)
        for i, e in m2:
            if i in exps and gens[i].odd:
                return 0, None
            exps[i] = exps.get(i, 0) + e
        mono = tuple(sorted(exps.items()))
        if self.killed(mono):
            return 0, None
        return sign, mono

    # -- bases -------------------------------------------------------------

    def basis(self, d: int) -> list:
        """Every canonical monomial of degree exactly ``d``, lexicographically sorted."""
        if int(d) != d or d < 0:
            raise ValueError(f"degree must be a nonnegative integer, got {d!r}")
        d = int(d)
        cached = self._basis_cache.get(d)
        if cached is None:
            cached = [m for m in self._raw_basis(d, 0) if not self.killed(m)]
            cached.sort()
            self._basis_cache[d] = cached
        return list(cached)

    def _raw_basis(self, d: int, start: int):
        if d == 0:
            yield UNIT
            return
        for i in range(start, len(self.generators)):
            g = self.generators[i]
            max_e = 1 if g.odd else d // g.degree
            for e in range(1, max_e + 1):
                rest = d - e * g.degree
                if rest < 0:
                    break
                for tail in self._raw_basis(rest, i + 1):
                    yield ((i, e),) + tail

    def basis_index(self, d: int) -> dict:
        index = self._index_cache.get(d)
        if index is None:
            index = self._index_cache[d] = {m: i for i, m in enumerate(self.basis(d))}
        return index

    def restricted_basis(self, d: int, max_gen_degree: int) -> list:
        """Monomials of degree ``d`` using only generators of degree at most ``max_gen_degree``."""
        return [
            m for m in self.basis(d)
            if all(self.generators[i].degree <= max_gen_degree for i, _ in m)
        ]

    # -- printing ----------------------------------------------------------

    def format_monomial(self, mono: Monomial) -> str:
        if not mono:
            return "1"
        parts = []
        for i, e in mono:
            name = self.generators[i].name
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)


def canonicalize(algebra: GradedAlgebra, indices: list):
    """Sort an ordered word of generator indices, tracking the Koszul sign."""
    gens = algebra.generators
    sign = 1
    word = list(indices)
    # insertion sort; each swap of two odd neighbours flips the sign
    for a in range(1, len(word)):
        b = a
        while b > 0 and word[b - 1] > word[b]:
            if gens[word[b - 1]].odd and gens[word[b]].odd:
                sign = -sign
            word[b - 1], word[b] = word[b], word[b - 1]
            b -= 1
    mono = []
    for i in word:
        if mono and mono[-1][0] == i:
            if gens[i].odd:
                return 0, None
            mono[-1] = (i, mono[-1][1] + 1)
        else:
            mono.append((i, 1))
    mono = tuple(mono)
    if algebra.killed(mono):
        return 0, None
    return sign, mono


class Element:
    """An exact rational linear combination of canonical monomials."""

    __slots__ = ("algebra", "terms", "_hash")

    def __init__(self, algebra: GradedAlgebra, terms: Mapping):
        self.algebra = algebra
        clean = {}
        for m, c in terms.items():
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c != 0:
                clean[tuple(m)] = c
        self.terms = clean
        self._hash = None

    # -- basic protocol ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Element({self})"

    def __str__(self) -> str:
        return format_element(self)

    def degrees(self) -> set:
        return {self.algebra.degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> Optional[int]:
        """Degree of a homogeneous element; ``None`` for zero."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"element {self} is not homogeneous (degrees {sorted(degs)})")
        return next(iter(degs))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def vector(self, d: int) -> list:
        """Coordinates over ``basis(d)``; raises if a term has another degree."""
        index = self.algebra.basis_index(d)
        v = [Fraction(0)] * len(index)
        for m, c in self.terms.items():
            try:
                v[index[m]] = c
            except KeyError:
                raise ValueError(f"term {self.algebra.format_monomial(m)} is not in degree {d}") from None
        return v

    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.algebra is not self.algebra and not other.algebra.same_as(self.algebra):
                raise ValueError("elements belong to different algebras")
            return other
        return self.algebra.scalar(other)

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Element(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Element":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Element":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Element":
        if not isinstance(other, Element):
            c = Fraction(other)
            return Element(self.algebra, {m: c * v for m, v in self.terms.items()})
        other = self._coerce(other)
        alg = self.algebra
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                sign, m = alg.monomial_product(m1, m2)
                if sign:
                    terms[m] = terms.get(m, 0) + sign * c1 * c2
        return Element(alg, terms)

    def __rmul__(self, other) -> "Element":
        return self * other

    def __pow__(self, n: int) -> "Element":
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out


def multiply(x: Element, y: Element) -> Element:
    return x * y


def basis(algebra: GradedAlgebra, d: int) -> list:
    return algebra.basis(d)


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_element(x: Element) -> str:
    if not x.terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(x.sorted_terms()):
        mono = x.algebra.format_monomial(m)
        mag = abs(c)
        if not m:
            body = format_coefficient(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_coefficient(mag)}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def brute_force_basis(algebra: GradedAlgebra, d: int) -> list:
    """Enumerate exponent vectors directly; used as an independent check on :meth:`basis`."""
    ranges = []
    for g in algebra.generators:
        top = 1 if g.odd else d // g.degree
        ranges.append(range(top + 1))
    out = []
    for exps in iproduct(*ranges):
        if sum(e * g.degree for e, g in zip(exps, algebra.generators)) == d:
            mono = tuple((i, e) for i, e in enumerate(exps) if e)
            if not algebra.killed(mono):
                out.append(mono)
    return sorted(out)


def format_monomial_list(algebra: GradedAlgebra, monos) -> str:
    return ", ".join(algebra.format_monomial(m) for m in monos)
