"""Syzygy families, the integrability system, and determination verdicts."""

from fractions import Fraction

import pytest

from foliations.determine import (
    DistributionFamily,
    NoConstantSyzygy,
    SingularMatrix,
    SyzygyMatrix,
    constant_syzygy_space,
    distribution_family,
    distribution_from_matrix,
    integrability_system,
    integrable_members,
    is_determined_by_singular_scheme,
    linear_syzygy_space,
    pullback_structure,
)
from foliations.forms import (
    ProjectiveOneForm,
    apply_projectivity,
    exterior_derivative,
    integrability_check,
    logarithmic_form,
    pullback_from_plane,
    singular_ideal,
    wedge_1_2,
)
from foliations.groebner import ideal_equal
from foliations.linalg import mat_mul
from foliations.rings import PolyRing
from foliations.saturation import saturate

R = PolyRing(4)
Z = R.variables()


# -- syzygy <-> matrix correspondence ------------------------------------------


def test_euler_maps_to_identity(l1111):
    basis = linear_syzygy_space(l1111)
    assert basis[0].to_matrix().is_identity()


def test_syzygy_matrix_round_trip(l1111):
    for syz in linear_syzygy_space(l1111):
        again = syz.to_matrix().to_syzygy(R)
        assert again.entries == syz.entries


def test_linear_dimensions(l1111, exceptional2):
    assert len(linear_syzygy_space(l1111)) == 3
    assert len(linear_syzygy_space(exceptional2)) == 2


def test_constant_syzygies(l1111, exceptional2, pullback_d2):
    assert constant_syzygy_space(l1111) == []
    assert constant_syzygy_space(exceptional2) == []
    consts = constant_syzygy_space(pullback_d2)
    assert (Fraction(1), Fraction(0), Fraction(0), Fraction(0)) in [tuple(v) for v in consts]


# -- matrix action ---------------------------------------------------------------


def test_identity_matrix_returns_same_form(l1111):
    eye = SyzygyMatrix(tuple(tuple(Fraction(int(i == j)) for j in range(4)) for i in range(4)))
    assert distribution_from_matrix(l1111, eye) == l1111


def test_scalar_matrix_scales(l1111):
    lam = Fraction(5)
    m = SyzygyMatrix(tuple(tuple(lam if i == j else Fraction(0) for j in range(4)) for i in range(4)))
    out = distribution_from_matrix(l1111, m)
    assert out.is_proportional_to(l1111)


def test_singular_matrix_rejected(l1111):
    zero = SyzygyMatrix(tuple(tuple(Fraction(0) for _ in range(4)) for _ in range(4)))
    with pytest.raises(SingularMatrix):
        distribution_from_matrix(l1111, zero)


def test_family_members_share_singular_ideal(l1111):
    family = distribution_family(l1111)
    base_sat = saturate(singular_ideal(l1111))
    for alpha in [(1, 1, 0), (1, 0, 1), (2, 1, 1)]:
        member = family.member_form(alpha)
        assert ideal_equal(saturate(singular_ideal(member)), base_sat)


# -- families and the quadratic system --------------------------------------------


def test_exceptional_family(exceptional2):
    family = distribution_family(exceptional2)
    assert family.parameter_dim == 2
    # the non-Euler direction is the paper's second generator; acting on the
    # coefficients it produces a non-integrable distribution
    omega1 = family.member_tuples[1]
    fake = ProjectiveOneForm(R, omega1, exceptional2.degree)
    assert not wedge_1_2(omega1, exterior_derivative(fake)).is_zero()
    system = integrability_system(family)
    assert system
    outcome = integrable_members(family)
    assert outcome.kind == "finite" and outcome.complete
    assert len(outcome.members) == 1


def test_l1111_family_all_integrable(l1111):
    family = distribution_family(l1111)
    assert family.parameter_dim == 3
    assert integrability_system(family) == []
    outcome = integrable_members(family)
    assert outcome.kind == "positive"
    assert len(outcome.non_base_members(l1111)) >= 2


def test_single_parameter_family_is_trivial(l1111):
    # a one-dimensional sub-family {lambda * omega}: the system vanishes
    full = distribution_family(l1111)
    sub = DistributionFamily(
        base=full.base,
        syzygy_basis=full.syzygy_basis[:1],
        matrices=full.matrices[:1],
        parameter_ring=PolyRing(1),
        member_tuples=full.member_tuples[:1],
        degenerate_locus=PolyRing(1).variable(0) ** 4,
    )
    assert integrability_system(sub) == []
    outcome = integrable_members(sub)
    assert outcome.kind == "finite" and outcome.complete and len(outcome.members) == 1


def test_pullback_d1_family_positive_dimensional(pullback_d1):
    family = distribution_family(pullback_d1)
    outcome = integrable_members(family)
    assert outcome.kind == "positive"
    witnesses = outcome.non_base_members(pullback_d1)
    assert len(witnesses) >= 2 or (
        len(witnesses) >= 1 and len(outcome.members) >= 3
    )


# -- determination ------------------------------------------------------------------


def test_l1111_non_unique_with_explicit_witness(l1111, l1111_alt):
    verdict = is_determined_by_singular_scheme(l1111)
    assert verdict.kind == "non-unique"
    w = verdict.witness
    assert w is not None
    assert integrability_check(w)
    assert not w.is_proportional_to(l1111)
    assert ideal_equal(
        saturate(singular_ideal(w)), saturate(singular_ideal(l1111))
    )
    # the named second foliation: same linear forms, weights (1,-1,1,-1)
    assert ideal_equal(
        saturate(singular_ideal(l1111_alt)), saturate(singular_ideal(l1111))
    )
    assert not l1111_alt.is_proportional_to(l1111)


def test_exceptional_unique(exceptional2):
    verdict = is_determined_by_singular_scheme(exceptional2)
    assert verdict.kind == "unique"


def test_pullback_d2_unique(pullback_d2):
    verdict = is_determined_by_singular_scheme(pullback_d2)
    assert verdict.kind == "unique"
    assert "pull-back" in verdict.route


def test_pencil_unique(pencil):
    assert is_determined_by_singular_scheme(pencil).kind == "unique"


def test_pullback_d1_non_unique(pullback_d1):
    verdict = is_determined_by_singular_scheme(pullback_d1)
    assert verdict.kind == "non-unique"


def test_determination_requires_split(l112):
    with pytest.raises(ValueError):
        is_determined_by_singular_scheme(l112)


# -- pull-back recognition -------------------------------------------------------


def test_pullback_round_trip(plane_deg2, pullback_d2):
    st = pullback_structure(pullback_d2)
    assert st is not None
    assert st.plane_form.is_proportional_to(plane_deg2)


def test_pullback_detected_after_projectivity(plane_deg2, pullback_d2):
    A = [[1, 1, 0, 2], [0, 1, 1, 0], [1, 0, 1, 0], [0, 2, 0, 1]]
    moved = apply_projectivity(pullback_d2, A)
    st = pullback_structure(moved)
    assert st is not None
    # the recovered plane form is the original one moved by the induced
    # plane projectivity, namely the lower 3x3 block of A @ C
    M = mat_mul(A, [list(r) for r in st.matrix])
    B = [row[1:] for row in M[1:]]
    expected = apply_projectivity(plane_deg2, B)
    assert st.plane_form.is_proportional_to(expected)


def test_no_constant_syzygy(l1111):
    with pytest.raises(NoConstantSyzygy):
        pullback_structure(l1111)
