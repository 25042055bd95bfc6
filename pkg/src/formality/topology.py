"""The cone fixtures, boundary-manifold bookkeeping, and the geography oracle.

Nothing here is geometric: the boundary manifolds are handled only through
their Betti numbers, class labels, and the cup-product vanishing facts that
can be certified from the long exact sequence of the pair (W, Z).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import NamedTuple, Optional

from .cdga import FreeCDGA, cohomology, cup
from .massey import NONZERO, triple_massey

CAVEAT_K1 = ("k = 1: the model is an algebraic object only; whether it captures "
             "the homotopy type of the non-simply-connected space is not claimed")

PROV_COMPUTED = "computed-in-model"
PROV_DEGREE = "degree-reasons"
PROV_PULLBACK = "pulled-back-from-C"
PROV_DUALITY = "odd-class-duality"
PROVENANCE_ORDER = (PROV_COMPUTED, PROV_PULLBACK, PROV_DUALITY, PROV_DEGREE)


@dataclass(frozen=True)
class ZeroProduct:
    left: str
    right: str
    provenance: str


@dataclass(frozen=True)
class MasseyFlag:
    labels: tuple
    degrees: tuple
    value: str
    source: str


@dataclass
class BettiTable:
    """Labeled ranks of a space.  ``k`` records (k-1)-connectivity."""

    label: str
    dim: int
    k: int
    classes: dict
    manifold: bool = False
    zero_products: frozenset = frozenset()
    massey: Optional[MasseyFlag] = None
    caveats: tuple = ()
    representatives: dict = field(default_factory=dict)

    @classmethod
    def from_ranks(cls, label: str, dim: int, ranks: dict, k: Optional[int] = None,
                   manifold: bool = True, **kwargs) -> "BettiTable":
        classes = {}
        for i, r in sorted(ranks.items()):
            if r:
                if i == 0:
                    classes[0] = ("1",)
                elif manifold and i == dim:
                    classes[i] = (f"[{label}]",)
                else:
                    classes[i] = tuple(f"x{i}_{j + 1}" for j in range(r))
        if k is None:
            k = min((i for i in classes if i > 0), default=dim)
        return cls(label, dim, k, classes, manifold, **kwargs)

    def rank(self, i: int) -> int:
        return len(self.classes.get(i, ()))

    def ranks(self) -> dict:
        return {i: self.rank(i) for i in range(self.dim + 1)}

    @property
    def betti_k(self) -> int:
        return self.rank(self.k)

    def degree_of(self, label: str) -> int:
        for i, labels in self.classes.items():
            if label in labels:
                return i
        raise KeyError(label)

    def labels(self) -> list:
        return [x for i in sorted(self.classes) for x in self.classes[i]]

    def provenances(self, x: str, y: str) -> list:
        found = {z.provenance for z in self.zero_products if (z.left, z.right) in ((x, y), (y, x))}
        return [p for p in PROVENANCE_ORDER if p in found]

    def vanishes(self, x: str, y: str) -> Optional[str]:
        """Preferred provenance of a certified ``x * y = 0``, else ``None``."""
        found = self.provenances(x, y)
        return found[0] if found else None

    def problems(self) -> list:
        out = []
        if self.rank(0) != 1:
            out.append("rank in degree 0 is not 1")
        for i in range(1, self.k):
            if self.rank(i):
                out.append(f"nonzero rank in degree {i} < k = {self.k}")
        if self.manifold:
            for i in range(self.dim + 1):
                if self.rank(i) != self.rank(self.dim - i):
                    out.append(f"Poincare duality fails: b_{i} != b_{self.dim - i}")
                    break
        return out


class Fixture(NamedTuple):
    model: FreeCDGA
    table: BettiTable


# -- fixtures ------------------------------------------------------------------


def _fixture_table(label, model, dim, k, class_exprs, massey_labels):
    """Verify ``model`` against the expected classes and record product facts."""
    H = cohomology(model, dim)
    expected = {}
    for name, (deg, _) in class_exprs.items():
        expected.setdefault(deg, []).append(name)
    for i in range(1, dim + 1):
        if H.betti(i) != len(expected.get(i, [])):
            raise RuntimeError(f"{label}: b_{i} = {H.betti(i)} disagrees with the homology table")
    classes = {0: ("1",)}
    reps = {}
    cls = {}
    for name, (deg, expr) in class_exprs.items():
        classes.setdefault(deg, ())
        classes[deg] = classes[deg] + (name,)
        c = H.class_of(model.parse(expr), deg)
        if c.is_zero:
            raise RuntimeError(f"{label}: {expr} does not represent a nonzero class")
        reps[name] = expr
        cls[name] = c
    zeros = set()
    names = list(class_exprs)
    for i, x in enumerate(names):
        for y in names[i:]:
            total = cls[x].degree + cls[y].degree
            if total > dim:
                zeros.add(ZeroProduct(x, y, PROV_DEGREE))
            elif cup(H, cls[x], cls[y]).is_zero:
                zeros.add(ZeroProduct(x, y, PROV_COMPUTED))
    l1, l2, l3, value = massey_labels
    res = triple_massey(model, H, cls[l1], cls[l2], cls[l3])
    if res.verdict != NONZERO or res.value.coords != cls[value].coords:
        raise RuntimeError(f"{label}: Massey product <{l1},{l2},{l3}> is not {value}")
    flag = MasseyFlag((l1, l2, l3), res.degrees, value, PROV_COMPUTED)
    caveats = (CAVEAT_K1,) if k == 1 else ()
    return BettiTable(label, dim, k, classes, False, frozenset(zeros), flag, caveats, reps)


def build_Ck(k: int) -> Fixture:
    """Model of the cone on the iterated Whitehead product [a,[a,b]] in S^k v S^(k+1)."""
    if int(k) != k or k < 1:
        raise ValueError("k must be a positive integer")
    note = (f"generators of degree >= {3 * k} omitted; cohomology and exactness are "
            f"faithful through degree {3 * k}")
    if k == 1:
        model = FreeCDGA.from_strings([("a", 1), ("b", 2), ("e", 2)], {"e": "a*b"},
                                      faithful_degree=3, truncation_note=note, name="C_1")
        c = "a*e"
    elif k % 2:
        model = FreeCDGA.from_strings(
            [("a", k), ("b", k + 1), ("e", 2 * k), ("x", 2 * k + 1)],
            {"e": "a*b", "x": "b*b"}, faithful_degree=3 * k, truncation_note=note, name=f"C_{k}")
        c = "a*e"
    else:
        model = FreeCDGA.from_strings(
            [("a", k), ("b", k + 1), ("e", 2 * k - 1), ("x", 2 * k)],
            {"e": "a*a", "x": "a*b"}, faithful_degree=3 * k, truncation_note=note, name=f"C_{k}")
        c = "a*x + b*e"
    exprs = {"a": (k, "a"), "b": (k + 1, "b"), "c": (3 * k, c)}
    table = _fixture_table(f"C_{k}", model, 3 * k, k, exprs, ("a", "a", "b", "c"))
    return Fixture(model, table)


def build_Ckprime(k: int) -> Fixture:
    """Model of the cone on [a,[a,b]] in S^k v S^k.

    For ``k = 1`` the degree-1 part of the minimal model is infinite; the
    fixture keeps the generators of weight <= 3 (dual to the lower central
    series) and divides by all monomials of weight >= 4.
    """
    if int(k) != k or k < 1:
        raise ValueError("k must be a positive integer")
    # brackets of length four are omitted; they first matter in degree 3k
    top = 3 * k - 1
    note = f"truncated model, checked against the homology table through degree {top}"
    if k == 1:
        model = FreeCDGA.from_strings(
            [("a", 1, 1), ("b", 1, 1), ("e", 1, 2), ("r", 1, 3)],
            {"e": "a*b", "r": "b*e"}, max_weight=3, faithful_degree=top,
            truncation_note="weight <= 3 quotient of the degree-1 model; " + note, name="C'_1")
        c = "a*e"
    elif k % 2:
        model = FreeCDGA.from_strings(
            [("a", k), ("b", k), ("e", 2 * k - 1), ("r", 3 * k - 2)],
            {"e": "a*b", "r": "b*e"}, faithful_degree=top, truncation_note=note, name=f"C'_{k}")
        c = "a*e"
    else:
        model = FreeCDGA.from_strings(
            [("a", k), ("b", k), ("e1", 2 * k - 1), ("e2", 2 * k - 1), ("e3", 2 * k - 1),
             ("r", 3 * k - 2)],
            {"e1": "a*a", "e2": "a*b", "e3": "b*b", "r": "b*e2 - a*e3"},
            faithful_degree=top, truncation_note=note, name=f"C'_{k}")
        c = "a*e2 - b*e1"
    exprs = {"a": (k, "a"), "b": (k, "b"), "c": (3 * k - 1, c)}
    table = _fixture_table(f"C'_{k}", model, top, k, exprs, ("a", "a", "b", "c"))
    return Fixture(model, table)


def sphere(n: int) -> BettiTable:
    return BettiTable(f"S{n}", n, n, {0: ("1",), n: (f"[S{n}]",)}, True)


def sphere_product(p: int, q: int) -> BettiTable:
    n = p + q
    label = f"S{p}xS{q}"
    classes = {0: ("1",), n: (f"[{label}]",)}
    for deg, name in ((p, f"s{p}"), (q, f"s{q}'" if p == q else f"s{q}")):
        classes[deg] = classes.get(deg, ()) + (name,)
    return BettiTable(label, n, min(p, q), classes, True)


# -- boundary manifolds ----------------------------------------------------------


def check(x: str) -> str:
    return f"check({x})"


def hat(x: str) -> str:
    return "[Z]" if x == "1" else f"hat({x})"


def base_label(x: str) -> Optional[str]:
    if x.startswith("check(") and x.endswith(")"):
        return x[6:-1]
    return None


@dataclass(frozen=True)
class LESRow:
    degree: int
    checked: tuple
    hats: tuple
    jstar_in: int  # rank of H_{n+1-i}(C) -> H^i(C)
    jstar_out: int  # rank of H_{n-i}(C) -> H^{i+1}(C)


@dataclass
class LESCertificate:
    complex: BettiTable
    n: int
    z: BettiTable
    rows: list
    jstar: dict
    assumptions: list

    def rank_identity_holds(self) -> bool:
        C = self.complex
        return all(
            self.z.rank(r.degree) == C.rank(r.degree) - r.jstar_in + C.rank(self.n - r.degree) - r.jstar_out
            for r in self.rows
        )


def boundary_les(C: BettiTable, n: int, jstar: Optional[dict] = None) -> LESCertificate:
    """Cohomology of the boundary of a regular neighbourhood of C in R^(n+1).

    Uses ``... -> H_{n+1-i}(C) -> H^i(C) -> H^i(Z) -> H_{n-i}(C) -> ...``.
    ``jstar[i]`` overrides the rank of the map into ``H^i(C)``.
    """
    from .errors import PreconditionError

    if C.manifold:
        raise ValueError("boundary_les expects a complex, not a closed manifold")
    if n + 1 - C.dim < C.k + 2:
        raise PreconditionError(
            f"codimension {n + 1 - C.dim} of {C.label} in R^{n + 1} is below k + 2 = {C.k + 2}")
    jstar = dict(jstar or {})
    assumptions = []
    r = {}
    for i in range(n + 2):
        src, dst = C.rank(n + 1 - i), C.rank(i)
        if i in jstar:
            if not 0 <= jstar[i] <= min(src, dst):
                raise ValueError(f"j* rank {jstar[i]} impossible in degree {i}")
            r[i] = jstar[i]
            assumptions.append(f"j* into H^{i}(C) has rank {jstar[i]} (supplied)")
            continue
        r[i] = 0
        if src and dst:
            if 2 * i == n + 1 and src == dst == 1 and i % 2:
                assumptions.append(f"j* into H^{i}(C) is zero: antisymmetric map between rank-one spaces")
            else:
                assumptions.append(f"j* into H^{i}(C) is zero: it factors through H^{i}(R^{n + 1}) = 0")
    rows = []
    classes = {}
    for i in range(n + 1):
        checked = tuple(check(x) if x != "1" else "1" for x in C.classes.get(i, ()))
        checked = checked[: len(checked) - r[i]]
        hats = tuple(hat(x) for x in C.classes.get(n - i, ()))
        hats = hats[: len(hats) - r[i + 1]]
        rows.append(LESRow(i, checked, hats, r[i], r[i + 1]))
        if checked or hats:
            classes[i] = checked + hats
    z = BettiTable(f"Z({C.label},{n})", n, C.k, classes, True, caveats=C.caveats)
    deg = {x: i for i, labels in classes.items() for x in labels}
    zeros = set()
    for f in C.zero_products:
        a, b = check(f.left), check(f.right)
        if a in deg and b in deg:
            zeros.add(ZeroProduct(a, b, PROV_PULLBACK))
    positive = [x for x in z.labels() if deg[x] > 0]
    for a_i, x in enumerate(positive):
        for y in positive[a_i:]:
            total = deg[x] + deg[y]
            if total > n or not classes.get(total):
                zeros.add(ZeroProduct(x, y, PROV_DEGREE))
    known = {frozenset((f.left, f.right)) for f in zeros}

    def pairs_to_zero(u, w):
        return u == w and deg[u] % 2 == 1 or frozenset((u, w)) in known

    # x*h = 0 when it pairs to zero against every class of complementary degree
    for x in positive:
        for h in positive:
            if not h.startswith("hat(") or deg[h] % 2 == 0 or frozenset((x, h)) in known:
                continue
            total = deg[x] + deg[h]
            partners = classes.get(n - total, ())
            if total < n and all(pairs_to_zero(h, g) or pairs_to_zero(x, g) for g in partners):
                zeros.add(ZeroProduct(x, h, PROV_DUALITY))
    z.zero_products = frozenset(zeros)
    return LESCertificate(C, n, z, rows, r, assumptions)


@dataclass(frozen=True)
class SummandTrace:
    side: str
    product_class: str
    degree: int
    group: tuple
    rules: tuple  # one entry per generator of the group, or ("A",) for a zero group

    @property
    def certified(self) -> bool:
        return "not certified" not in self.rules


@dataclass
class ObstructionCertificate:
    certificate: LESCertificate
    degrees: tuple
    labels: tuple
    summands: tuple
    injective: bool

    @property
    def certified(self) -> bool:
        return self.injective and all(s.certified for s in self.summands)

    @property
    def rules_used(self) -> set:
        return {r for s in self.summands for r in s.rules if r in "ABC"}

    def z_table(self) -> BettiTable:
        """The boundary table, carrying the Massey flag when certified."""
        z = self.certificate.z
        if not self.certified:
            return z
        l1, l2, l3 = self.labels
        value = check(self.certificate.complex.massey.value)
        flag = MasseyFlag((check(l1), check(l2), check(l3)), self.degrees, value, "transfer_massey")
        return replace(z, massey=flag)


def transfer_massey(cert: LESCertificate, degrees: Optional[tuple] = None) -> ObstructionCertificate:
    """Try to show the pulled-back Massey product has zero indeterminacy on Z.

    Rules, tried per generator of each indeterminacy summand: (A) the group
    is zero; (B) the generator is pulled back from C and the product already
    vanishes in C; (C) the generator is an odd-degree hat class killed by the
    duality argument.
    """
    from .errors import PreconditionError

    C, z = cert.complex, cert.z
    if C.massey is None:
        raise PreconditionError(f"{C.label} carries no nonzero Massey product")
    l1, l2, l3 = C.massey.labels
    p1, p2, p3 = degrees if degrees is not None else C.massey.degrees
    if (p1, p2, p3) != tuple(C.degree_of(x) for x in (l1, l2, l3)):
        raise ValueError("degrees do not match the Massey classes of the complex")
    total = p1 + p2 + p3 - 1
    # injectivity of i^* on the classes involved
    involved = {p1, p2, p3, total}
    injective = all(cert.jstar.get(i, 0) == 0 for i in involved)
    summands = []
    for side, cls, q in (("a1*H", check(l1), total - p1), ("H*a3", check(l3), total - p3)):
        group = z.classes.get(q, ())
        if not group:
            summands.append(SummandTrace(side, cls, q, group, ("A",)))
            continue
        rules = []
        for g in group:
            b = base_label(g)
            if b is not None and C.vanishes(base_label(cls), b):
                rules.append("B")
            elif z.vanishes(cls, g) == PROV_DUALITY:
                rules.append("C")
            else:
                rules.append("not certified")
        summands.append(SummandTrace(side, cls, q, group, tuple(rules)))
    return ObstructionCertificate(cert, (p1, p2, p3), (l1, l2, l3), tuple(summands), injective)


# -- surgery arithmetic ------------------------------------------------------------


def _relabel(table: BettiTable, prefix: str) -> dict:
    mapping = {}
    for i, labels in table.classes.items():
        for x in labels:
            if i == 0 or i == table.dim:
                mapping[x] = x
            else:
                mapping[x] = f"{prefix}:{x}"
    return mapping


def connected_sum(M: BettiTable, N: BettiTable) -> BettiTable:
    if not (M.manifold and N.manifold):
        raise ValueError("connected sum needs two closed manifolds")
    if M.dim != N.dim:
        raise ValueError(f"dimension mismatch: {M.dim} vs {N.dim}")
    n = M.dim
    if n < 3:
        raise ValueError("connected sums are only tracked in dimension >= 3")
    label = f"{M.label}#{N.label}"
    mm, nm = _relabel(M, M.label), _relabel(N, N.label)
    classes = {0: ("1",), n: (f"[{label}]",)}
    for i in range(1, n):
        merged = tuple(mm[x] for x in M.classes.get(i, ())) + tuple(nm[x] for x in N.classes.get(i, ()))
        if merged:
            classes[i] = merged
    zeros = set()
    for T, mp in ((M, mm), (N, nm)):
        for f in T.zero_products:
            if f.left in mp and f.right in mp:
                zeros.add(ZeroProduct(mp[f.left], mp[f.right], f.provenance))
    massey = None
    for T, mp in ((M, mm), (N, nm)):
        if T.massey is not None:
            fl = T.massey
            massey = MasseyFlag(tuple(mp.get(x, x) for x in fl.labels), fl.degrees, mp.get(fl.value, fl.value),
                                f"connected sum with {fl.source}")
            break
    return BettiTable(label, n, min(M.k, N.k), classes, True, frozenset(zeros), massey,
                      tuple(dict.fromkeys(M.caveats + N.caveats)))


def s1_stabilize(M: BettiTable, massey_degrees: Optional[tuple] = None) -> BettiTable:
    """Ranks of ``(M x S^1) #_{S^1} S^(n+1)`` and persistence of the Massey flag."""
    from .errors import PreconditionError

    if not M.manifold:
        raise ValueError("stabilization needs a closed manifold")
    if M.massey is None:
        raise PreconditionError(f"{M.label} carries no nonzero Massey product")
    degrees = tuple(massey_degrees) if massey_degrees is not None else M.massey.degrees
    n = M.dim
    if sum(degrees) >= n:
        raise PreconditionError(f"needs p1+p2+p3 < n, got {sum(degrees)} >= {n}")

    def times_t(x):
        return "t" if x == "1" else f"{x}.t"

    classes = {}
    for j in range(n + 2):
        own = M.classes.get(j, ()) if j <= n - 1 else ()
        shifted = tuple(times_t(x) for x in M.classes.get(j - 1, ())) if j >= 2 else ()
        if own or shifted:
            classes[j] = tuple(own) + shifted
    label = f"({M.label}xS1)#S{n + 1}"
    zeros = frozenset(f for f in M.zero_products
                      if M.degree_of(f.left) < n and M.degree_of(f.right) < n)
    fl = M.massey
    massey = MasseyFlag(fl.labels, fl.degrees, fl.value, "S1-stabilization")
    return BettiTable(label, n + 1, M.k, classes, True, zeros, massey, M.caveats)


# -- geography -------------------------------------------------------------------

FORMAL_FORCED = "formal-forced"
NONFORMAL_EXISTS = "nonformal-exists"
UNKNOWN = "unknown"

FORMAL_LOW_DIMENSION = "formal: n <= 4k-2"
FORMAL_BK_ONE = "formal: b_k = 1 and n <= 4k"
FORMAL_BK_ZERO = "formal: b_k = 0 and n <= 4k+2"
FORMAL_K1_CITED = "formal: k = 1 and n <= max(2, 6-2b) (cited)"
FORMAL_BK_ONE_NEXT_ZERO = "formal: b_k = 1, b_(k+1) = 0 and n <= 4k+2"

RECIPE_SHIFT = "b_k=0: k-connected non-formal example (connectivity shifted to k+1)"
RECIPE_Z = "b_k=1: boundary Z(k,n) of a neighbourhood of C_k"
RECIPE_Z_STABILIZED = "b_k=1, n=5k: S1-stabilization of Z(k,5k-1)"
RECIPE_K1_N5 = "b_k=1, k=1, n=5: cited five-dimensional example"
RECIPE_SPHERE_BUNDLE = "b_k=2, n=4k-1: S^(2k-1)-bundle over S^k x S^k with Euler class 1 (cited)"
RECIPE_ZPRIME = "b_k=2, n>=4k: boundary Z'(k,n) of a neighbourhood of C'_k"
RECIPE_CONNECTED_SUM = "b_k>2: b_k=2 example # (b_k-2) copies of S^(k+1) x S^(n-k-1)"


@dataclass(frozen=True)
class GeographyAnswer:
    n: int
    k: int
    b: int
    verdict: str
    justification: str
    recipe: tuple = ()
    caveats: tuple = ()


def threshold(k: int, b: int) -> int:
    return max(4 * k - 1, 4 * k + 3 - 2 * b)


def _b2_recipe(n, k):
    if n == 4 * k - 1:
        return (RECIPE_SPHERE_BUNDLE,)
    return (RECIPE_ZPRIME, f"build_Ckprime({k})", f"boundary_les(n={n})", "transfer_massey")


def geography(n: int, k: int, b: int) -> GeographyAnswer:
    for name, v, lo in (("n", n, 1), ("k", k, 1), ("b", b, 0)):
        if int(v) != v or v < lo:
            raise ValueError(f"{name} must be an integer >= {lo}, got {v!r}")
    caveats = (CAVEAT_K1,) if k == 1 else ()
    if n < threshold(k, b):
        if n <= 4 * k - 2:
            why = FORMAL_LOW_DIMENSION
        elif b == 1 and k == 1:
            why = FORMAL_K1_CITED
        elif b == 1:
            why = FORMAL_BK_ONE
        else:
            why = FORMAL_BK_ZERO
        return GeographyAnswer(n, k, b, FORMAL_FORCED, why)
    if b == 0:
        recipe = (RECIPE_SHIFT,)
        why = "(a') b_k = 0 and n >= 4k+3"
    elif b == 1:
        why = "(b') b_k = 1 and n >= 4k+1"
        if n != 5 * k:
            recipe = (RECIPE_Z, f"build_Ck({k})", f"boundary_les(n={n})", "transfer_massey")
        elif k >= 2:
            recipe = (RECIPE_Z_STABILIZED, f"build_Ck({k})", f"boundary_les(n={5 * k - 1})",
                      "transfer_massey", "s1_stabilize")
        else:
            recipe = (RECIPE_K1_N5,)
    elif b == 2:
        why = "(c') b_k = 2 and n >= 4k-1"
        recipe = _b2_recipe(n, k)
    else:
        why = "(c') b_k > 2 and n >= 4k-1"
        recipe = _b2_recipe(n, k) + (RECIPE_CONNECTED_SUM, f"connected_sum x {b - 2}")
    return GeographyAnswer(n, k, b, NONFORMAL_EXISTS, why, recipe, caveats)


def case_list_verdict(n: int, k: int, b: int) -> str:
    """The explicit three-case formulation, kept separate from :func:`threshold`."""
    if (b == 0 and n >= 4 * k + 3) or (b == 1 and n >= 4 * k + 1) or (b >= 2 and n >= 4 * k - 1):
        return NONFORMAL_EXISTS
    return FORMAL_FORCED


@dataclass(frozen=True)
class ShortcutAnswer:
    verdict: str
    justification: Optional[str]


def formality_shortcut(n: int, k: int, b_k: int, b_k1: Optional[int] = None) -> ShortcutAnswer:
    """Formality forced by the low-dimension results, else unknown."""
    if n <= 4 * k - 2:
        return ShortcutAnswer(FORMAL_FORCED, FORMAL_LOW_DIMENSION)
    if b_k == 1 and n <= 4 * k and k > 1:
        return ShortcutAnswer(FORMAL_FORCED, FORMAL_BK_ONE)
    if b_k == 0 and n <= 4 * k + 2:
        return ShortcutAnswer(FORMAL_FORCED, FORMAL_BK_ZERO)
    if b_k == 1 and b_k1 == 0 and n <= 4 * k + 2:
        return ShortcutAnswer(FORMAL_FORCED, FORMAL_BK_ONE_NEXT_ZERO)
    return ShortcutAnswer(UNKNOWN, None)
