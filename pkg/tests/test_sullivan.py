import pytest

from conftest import sphere_model
from formality.cdga import FreeCDGA, cohomology, validate
from formality.errors import OutOfRange, PreconditionError
from formality.sullivan import (_induced_matrix, cn_decompose, formality_verdict, identity_stage,
                                minimal_model, s_formality)
from formality.topology import build_Ck, build_Ckprime
from formality import linalg


def _is_quasi_iso_through(stage, top):
    for d in range(top + 1):
        src = stage.model.degree_cohomology(d)
        dst = stage.target.degree_cohomology(d)
        if src.betti != dst.betti:
            return False
        cols = _induced_matrix(stage.model, stage.target, stage.morphism, d)
        if linalg.rank(cols, dst.betti) != dst.betti:
            return False
    return True


def test_minimal_input_reproduces_itself():
    stage = minimal_model(sphere_model(), 6)
    degrees = sorted(g.degree for g in stage.model.generators)
    assert degrees == [2, 3]
    assert stage.commutes()
    assert _is_quasi_iso_through(stage, 6)


def test_sphere_cohomology_ring_target():
    target = FreeCDGA.from_strings([("x", 2)], {}, top_degree=2)
    stage = minimal_model(target, 4)
    gens = [(g.name, g.degree, str(stage.model.diff[g.name])) for g in stage.model.generators]
    assert gens == [("v2_1", 2, "0"), ("v3_1", 3, "v2_1^2")]
    assert stage.built_through == 4
    assert _is_quasi_iso_through(stage, 4)
    report = validate(stage.model, minimal=True)
    assert report.ok and report.minimal


@pytest.mark.parametrize("rounds", [2, 3, 5])
def test_cone_cohomology_ring_target_is_honest_about_rounds(rounds):
    # H*(C_1) with zero differential: a, b, c in degrees 1, 2, 3, products zero.
    # Each killer v of a*v_prev creates a new closed a*v, so degree 2 never closes up.
    ring = FreeCDGA.from_strings([("a", 1), ("b", 2), ("c", 3)], {}, relations=["a*b"], top_degree=3)
    assert [cohomology(ring, 3).betti(d) for d in range(4)] == [1, 1, 1, 1]
    stage = minimal_model(ring, 3, max_rounds=rounds)
    assert stage.commutes()
    assert stage.built_through == 1
    assert "not exhausted" in stage.notes[0]
    assert _is_quasi_iso_through(stage, 1)
    deg2 = [g.name for g in stage.model.generators if g.degree == 2]
    assert len(deg2) == rounds + 1
    for prev, cur in zip(deg2[1:], deg2[2:]):
        assert str(stage.model.diff[cur]) == f"v1_1*{prev}"
    cone = build_Ck(1).model
    assert [cohomology(cone, 3).betti(d) for d in range(4)] == [1, 1, 1, 1]


def test_non_minimal_target():
    # the pair v -> u is contractible, leaving a polynomial algebra on a
    target = FreeCDGA.from_strings([("a", 2), ("u", 3), ("v", 2)], {"v": "u"})
    stage = minimal_model(target, 6)
    assert [g.degree for g in stage.model.generators] == [2]
    assert _is_quasi_iso_through(stage, 6)


def test_stage_soundness_on_fixtures():
    for model in (build_Ck(2).model, build_Ckprime(2).model):
        stage = minimal_model(model, model.faithful_degree)
        assert stage.commutes()
        assert _is_quasi_iso_through(stage, stage.built_through)
        assert validate(stage.model, minimal=True).minimal


def test_cn_decomposition(c3):
    stage = identity_stage(c3)
    dec = cn_decompose(stage, 5)
    assert [str(x) for x in dec.closed[3]] == ["a"]
    assert [str(x) for x in dec.closed[4]] == ["b"]
    assert dec.nonclosed_elements() == []
    dec6 = cn_decompose(stage, 6)
    assert [str(x) for x in dec6.nonclosed[6]] == ["e"]
    assert dec6.closed[6] == []


def test_cn_on_zero_differential():
    m = FreeCDGA.from_strings([("a", 1), ("b", 2)], {})
    assert cn_decompose(identity_stage(m), 4).nonclosed_elements() == []


def test_s_formality_on_odd_cone(c3):
    stage = identity_stage(c3)
    assert s_formality(stage, 5, 9).passed
    fail = s_formality(stage, 6, 9)
    assert not fail.passed
    assert str(fail.witness) == "a*e" and fail.witness_degree == 9
    assert c3.d(fail.witness) == 0


def test_s_formality_refuses_past_faithful(c3):
    with pytest.raises(OutOfRange):
        s_formality(identity_stage(c3), 6, 10)


def test_empty_ideal_passes_without_bound(c3):
    report = s_formality(identity_stage(c3), 5, 10)
    assert report.passed and report.bound is None


@pytest.mark.parametrize("s", range(0, 9))
def test_sphere_is_s_formal(s):
    assert s_formality(identity_stage(sphere_model()), s, 8).passed


def test_failure_is_monotone():
    for model in (build_Ck(2).model, build_Ck(3).model, build_Ckprime(2).model):
        stage = identity_stage(model)
        verdicts = [s_formality(stage, s, model.faithful_degree).passed
                    for s in range(0, model.faithful_degree + 1)]
        first_fail = verdicts.index(False) if False in verdicts else len(verdicts)
        assert all(not v for v in verdicts[first_fail:])


def test_formality_verdicts(c1, c3):
    assert formality_verdict(identity_stage(sphere_model()), 2).formal
    caution = formality_verdict(identity_stage(c1), 3)
    assert caution.formal and caution.s == 1
    assert "manifold" in caution.caveat
    v = formality_verdict(identity_stage(c3), 13)
    assert v.verdict == "non-formal" and v.s == 6


def test_identity_stage_needs_minimal_input():
    with pytest.raises(PreconditionError):
        identity_stage(FreeCDGA.from_strings([("a", 3), ("e", 2)], {"e": "a"}))


def test_minimal_model_rejects_invalid_target():
    bad = FreeCDGA.from_strings([("a", 1), ("b", 2), ("e", 2), ("x", 1)], {"e": "a*b", "x": "e"})
    with pytest.raises(PreconditionError):
        minimal_model(bad, 3)
