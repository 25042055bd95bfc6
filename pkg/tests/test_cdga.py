import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import all_fixtures, homogeneous, sphere_model
from formality import linalg
from formality.cdga import FreeCDGA, apply_d, cohomology, cup, is_exact, validate
from formality.errors import OutOfRange


def test_d_of_closed_product_vanishes(c3):
    assert apply_d(c3, c3.parse("a*e")) == 0


def test_d_of_unit(c3):
    assert apply_d(c3, c3.algebra.one()) == 0


def test_leibniz_sign_on_even_cone(c2):
    # d(b e) = d(b) e - b d(e) = -b a^2 since b has odd degree
    assert apply_d(c2, c2.parse("b*e")) == c2.parse("-a^2*b")


def test_validate_cone_is_minimal(c1):
    report = validate(c1, minimal=True)
    assert report.ok and report.minimal


def test_validate_flags_d_squared():
    m = FreeCDGA.from_strings([("a", 1), ("b", 2), ("e", 2), ("x", 1)], {"e": "a*b", "x": "e"})
    kinds = {(v.generator, v.kind) for v in validate(m).violations}
    assert ("x", "d-squared") in kinds


def test_validate_flags_linear_part():
    m = FreeCDGA.from_strings([("a", 3), ("e", 2)], {"e": "a"})
    report = validate(m, minimal=True)
    assert report.ok
    assert report.minimal is False
    assert [v.generator for v in report.violations] == ["e"]


def test_validate_flags_wrong_degree():
    alg_model = FreeCDGA.from_strings([("a", 2), ("e", 3)], {"e": "a"})
    assert [v.kind for v in validate(alg_model).violations] == ["degree"]


def test_cone_cohomology(c3):
    H = cohomology(c3, 9)
    assert {d: H.betti(d) for d in range(10) if H.betti(d)} == {0: 1, 3: 1, 4: 1, 9: 1}
    assert [str(c.representative) for c in H.classes(9)] == ["a*e"]


def test_even_sphere_cohomology():
    H = cohomology(sphere_model(), 4)
    assert [H.betti(d) for d in range(5)] == [1, 0, 1, 0, 0]


def test_zero_differential_cohomology_is_whole_algebra():
    m = FreeCDGA.from_strings([("a", 1), ("b", 2), ("c", 2)], {})
    H = cohomology(m, 8)
    assert all(H.betti(d) == len(m.algebra.basis(d)) for d in range(9))


def test_cup_products(c1, c3):
    H = cohomology(c1, 3)
    a, b = H.classes(1)[0], H.classes(2)[0]
    assert cup(H, a, b).is_zero
    assert cup(H, H.unit(), b) == b
    H3 = cohomology(c3, 9)
    beta = H3.classes(4)[0]
    assert cup(H3, beta, beta).is_zero


def test_cup_overflow_refused(c3):
    H = cohomology(c3, 6)
    a = H.classes(3)[0]
    with pytest.raises(OutOfRange):
        cup(H, a, H.classes(4)[0])


def test_is_exact_examples(c3):
    ex = is_exact(c3, c3.parse("b^2"))
    assert ex.exact and ex.primitive == c3.gen("x")
    assert is_exact(c3, c3.algebra.zero()).exact
    res = is_exact(c3, c3.parse("a*e"))
    assert not res.exact and any(res.class_coords)


def test_is_exact_rejects_open_elements(c3):
    with pytest.raises(ValueError):
        is_exact(c3, c3.gen("e"))


def test_faithful_range_refusal(c3):
    with pytest.raises(OutOfRange):
        is_exact(c3, c3.parse("a*x + b*e"))


@pytest.mark.parametrize("name,model", all_fixtures())
def test_betti_numbers_match_oracle(name, model):
    top = model.faithful_degree if model.faithful_degree is not None else 10
    H = cohomology(model, top)
    for d in range(top + 1):
        assert H.betti(d) == oracles.model_betti(model, d), (name, d)


@pytest.mark.parametrize("name,model", all_fixtures())
def test_rank_identities(name, model):
    top = model.faithful_degree or 10
    H = cohomology(model, top)
    for d in range(top + 1):
        h = H[d]
        assert len(h.cocycles) == h.betti + len(h.coboundaries)
        ker = linalg.Span(h.cocycles, h.dim)
        assert all(ker.contains(b) for b in h.coboundaries)


@pytest.mark.parametrize("name,model", all_fixtures())
def test_d_squared_and_leibniz(name, model):
    @settings(max_examples=60)
    @given(homogeneous(model.algebra, 12), homogeneous(model.algebra, 12))
    def check(x, y):
        assert model.d(model.d(x)) == 0
        sign = -1 if x.degree % 2 else 1
        assert model.d(x * y) == model.d(x) * y + x * model.d(y) * sign
        spec = oracles.Spec.of(model)
        assert oracles.from_element(model.d(x)) == oracles.d(spec, oracles.images_of(model),
                                                             oracles.from_element(x))

    check()


HEISENBERG = FreeCDGA.from_strings([("a", 1), ("b", 1), ("e", 1)], {"e": "a*b"})


@given(st.fractions(-4, 4, max_denominator=3))
def test_cup_is_independent_of_representative(s):
    H = cohomology(HEISENBERG, 3)
    for u in H.classes(2):
        for v in H.classes(1):
            shifted = u.representative + HEISENBERG.d(HEISENBERG.parse("e")) * s
            moved = H.class_of(shifted, 2)
            assert cup(H, moved, v).coords == cup(H, u, v).coords
