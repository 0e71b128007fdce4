"""Shared fixtures: rings, the paper's example forms, and the test corpus."""

from __future__ import annotations

from fractions import Fraction

import pytest

from foliations.forms import (
    ProjectiveOneForm,
    exceptional_form,
    logarithmic_form,
    pullback_from_plane,
    validate,
)
from foliations.rings import PolyRing


@pytest.fixture(scope="session")
def R4() -> PolyRing:
    return PolyRing(4)


@pytest.fixture(scope="session")
def R3() -> PolyRing:
    return PolyRing(3)


@pytest.fixture(scope="session")
def pencil(R4) -> ProjectiveOneForm:
    z = R4.variables()
    return validate([z[1], -z[0], R4.zero(), R4.zero()])


@pytest.fixture(scope="session")
def l1111(R4) -> ProjectiveOneForm:
    return logarithmic_form(R4.variables(), [1, 1, 1, -3])


@pytest.fixture(scope="session")
def l1111_alt(R4) -> ProjectiveOneForm:
    return logarithmic_form(R4.variables(), [1, -1, 1, -1])


@pytest.fixture(scope="session")
def l112(R4) -> ProjectiveOneForm:
    z = R4.variables()
    quadric = z[0] ** 2 + z[1] ** 2 + z[2] ** 2 + z[3] ** 2
    return logarithmic_form([z[0], z[1], quadric], [1, 1, -1])


@pytest.fixture(scope="session")
def exceptional2() -> ProjectiveOneForm:
    return exceptional_form(2)


@pytest.fixture(scope="session")
def plane_deg1(R3) -> ProjectiveOneForm:
    return logarithmic_form(R3.variables(), [1, 1, -2])


@pytest.fixture(scope="session")
def plane_deg2(R3) -> ProjectiveOneForm:
    w = R3.variables()
    conic = w[0] ** 2 + w[1] ** 2 + w[2] ** 2
    return logarithmic_form([w[0], w[1], conic], [1, 1, -1])


@pytest.fixture(scope="session")
def pullback_d1(plane_deg1) -> ProjectiveOneForm:
    return pullback_from_plane(plane_deg1)


@pytest.fixture(scope="session")
def pullback_d2(plane_deg2) -> ProjectiveOneForm:
    return pullback_from_plane(plane_deg2)


def build_corpus() -> list[tuple[str, ProjectiveOneForm]]:
    """Named P^3 forms spanning degrees 0..3, split and non-split."""
    R = PolyRing(4)
    z = R.variables()
    P = PolyRing(3)
    w = P.variables()
    quadric = z[0] ** 2 + z[1] ** 2 + z[2] ** 2 + z[3] ** 2
    plane1 = logarithmic_form(w, [1, 1, -2])
    plane2 = logarithmic_form([w[0], w[1], w[0] ** 2 + w[1] ** 2 + w[2] ** 2], [1, 1, -1])
    plane3 = logarithmic_form(
        [w[0], w[1], w[2], w[0] + w[1] + w[2], w[0] - w[2]], [1, 1, 1, 1, -4]
    )
    return [
        ("pencil", validate([z[1], -z[0], R.zero(), R.zero()])),
        ("pencil-z0z3", validate([z[3], R.zero(), R.zero(), -z[0]])),
        ("pullback-d0", pullback_from_plane(validate([w[1], -w[0], P.zero()]))),
        ("pullback-d1", pullback_from_plane(plane1)),
        ("cone-L111", logarithmic_form([z[0], z[1], z[2]], [1, 1, -2])),
        ("L1111", logarithmic_form(z, [1, 1, 1, -3])),
        ("L1111-alt", logarithmic_form(z, [1, -1, 1, -1])),
        ("L1111-generic", logarithmic_form(z, [2, 3, 5, -10])),
        ("L112", logarithmic_form([z[0], z[1], quadric], [1, 1, -1])),
        ("pullback-d2", pullback_from_plane(plane2)),
        ("exceptional-d2", exceptional_form(2)),
        ("L1112", logarithmic_form([z[0], z[1], z[2], z[3] ** 2 + z[0] * z[1]], [1, 1, 2, -2])),
        ("pullback-d3", pullback_from_plane(plane3)),
    ]


@pytest.fixture(scope="session")
def corpus() -> list[tuple[str, ProjectiveOneForm]]:
    return build_corpus()


def random_rational(rng, small: bool = True) -> Fraction:
    num = rng.randint(-6, 6)
    den = rng.choice([1, 1, 1, 2, 3]) if small else rng.randint(1, 9)
    if num == 0:
        num = 1
    return Fraction(num, den)


def random_polynomial(rng, ring: PolyRing, max_degree: int = 3, max_terms: int = 4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        degree = rng.randint(0, max_degree)
        exp = [0] * ring.num_vars
        for _ in range(degree):
            exp[rng.randrange(ring.num_vars)] += 1
        terms[tuple(exp)] = random_rational(rng)
    return ring.from_dict(terms)


def random_homogeneous(rng, ring: PolyRing, degree: int, max_terms: int = 4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exp = [0] * ring.num_vars
        for _ in range(degree):
            exp[rng.randrange(ring.num_vars)] += 1
        terms[tuple(exp)] = random_rational(rng)
    return ring.from_dict(terms)
