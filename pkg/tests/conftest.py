from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from formality.cdga import FreeCDGA
from formality.topology import build_Ck, build_Ckprime

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)


def homogeneous(algebra, max_degree: int = 12, min_degree: int = 0):
    """Strategy for homogeneous elements of degree <= max_degree."""
    degrees = [d for d in range(min_degree, max_degree + 1) if algebra.basis(d)]

    @st.composite
    def build(draw):
        d = draw(st.sampled_from(degrees))
        monos = algebra.basis(d)
        chosen = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=4, unique=True))
        return algebra.element({m: draw(coefficients) for m in chosen})

    return build()


def sphere_model() -> FreeCDGA:
    return FreeCDGA.from_strings([("x", 2), ("y", 3)], {"y": "x^2"}, name="even sphere")


def all_fixtures():
    out = [("sphere", sphere_model())]
    for k in (1, 2, 3):
        out.append((f"C_{k}", build_Ck(k).model))
        out.append((f"C'_{k}", build_Ckprime(k).model))
    return out


@pytest.fixture(scope="session")
def c3():
    return build_Ck(3).model


@pytest.fixture(scope="session")
def c2():
    return build_Ck(2).model


@pytest.fixture(scope="session")
def c1():
    return build_Ck(1).model
