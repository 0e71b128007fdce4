"""Projective 1-forms: validation, exterior calculus, constructors."""

from fractions import Fraction
from random import Random

import pytest

from foliations.forms import (
    AffineOneForm,
    CodimTooSmall,
    EulerViolation,
    WeightConstraintViolation,
    ZeroForm,
    apply_projectivity,
    exceptional_form,
    exterior_derivative,
    integrability_check,
    logarithmic_form,
    projectivize,
    pullback_from_plane,
    radial_contraction,
    singular_ideal,
    strip_common_monomial,
    validate,
    wedge_1_2,
)
from foliations.groebner import Ideal, ideal_equal
from foliations.rings import PolyRing, apply_linear_change

R = PolyRing(4)
Z = R.variables()


# -- validation -----------------------------------------------------------------


def test_pencil_is_valid(pencil):
    assert pencil.degree == 0


def test_euler_violation():
    with pytest.raises(EulerViolation):
        validate([Z[0], R.zero(), R.zero(), R.zero()])


def test_zero_form_rejected():
    with pytest.raises(ZeroForm):
        validate([R.zero()] * 4)


def test_l1111_valid(l1111):
    assert l1111.degree == 2


def test_common_monomial_stripped():
    # z2 * pencil: the common factor must be stripped back off
    form = validate([Z[1] * Z[2], -Z[0] * Z[2], R.zero(), R.zero()])
    assert form.degree == 0
    assert [str(f) for f in form.coefficients] == ["z1", "-z0", "0", "0"]


# -- exterior calculus ------------------------------------------------------------


def test_exterior_derivative_sign():
    pencil = validate([Z[1], -Z[0], R.zero(), R.zero()])
    d = exterior_derivative(pencil)
    assert str(d.get(0, 1)) == "-2"
    assert str(d.get(1, 0)) == "2"


def test_d_squared_zero_on_affine_gradients():
    rng = Random(2)
    from .conftest import random_polynomial

    ring = PolyRing(3)
    for _ in range(20):
        f = random_polynomial(rng, ring, max_degree=4)
        omega = AffineOneForm(ring, tuple(f.partial_derivative(i) for i in range(3)))
        assert exterior_derivative(omega).is_zero()


def test_cartan_identity(pencil, l1111, exceptional2):
    for form in (pencil, l1111, exceptional2):
        contracted = radial_contraction(exterior_derivative(form))
        scale = form.degree + 2
        assert all(
            (a - b.scale(scale)).is_zero()
            for a, b in zip(contracted, form.coefficients)
        )


def test_radial_contraction_of_zero():
    from foliations.forms import HomogeneousTwoForm

    zero = HomogeneousTwoForm(R, {})
    assert all(p.is_zero() for p in radial_contraction(zero))


def test_wedge_antisymmetry_of_assembly():
    eta = exterior_derivative(validate([Z[1], -Z[0], R.zero(), R.zero()]))
    # swapping indices in eta flips the sign fed into the 3-form assembly
    assert eta.get(0, 1) == -eta.get(1, 0)


def test_integrability_examples(pencil, l1111):
    assert integrability_check(pencil)
    assert integrability_check(l1111)


def test_plane_forms_are_always_integrable(plane_deg1, plane_deg2):
    assert integrability_check(plane_deg1)
    assert integrability_check(plane_deg2)


def test_integrability_invariant_under_projectivity(l1111, l112):
    A = [[1, 2, 0, 0], [0, 1, 0, 1], [1, 0, 1, 0], [0, 0, 1, 1]]
    for form in (l1111, l112):
        assert integrability_check(form) == integrability_check(apply_projectivity(form, A))


# -- singular scheme ---------------------------------------------------------------


def test_pencil_singular_ideal(pencil):
    I = singular_ideal(pencil)
    assert ideal_equal(I, Ideal(R, [Z[0], Z[1]]))


def test_l1111_six_edges(l1111):
    I = singular_ideal(l1111)
    expected = []
    for i in range(4):
        p = R.one()
        for j in range(4):
            if j != i:
                p = p * Z[j]
        expected.append(p)
    assert ideal_equal(I, Ideal(R, expected))


def test_codim_too_small_detected():
    # all coefficients share the non-monomial factor (z0+z1): validation
    # cannot strip it, the singular ideal check must reject it
    common = Z[0] + Z[1]
    form = validate([Z[1] * common, -Z[0] * common, R.zero(), R.zero()])
    with pytest.raises(CodimTooSmall):
        singular_ideal(form)


def test_singular_ideal_transforms_by_substitution(l1111):
    A = [[1, 1, 0, 2], [0, 1, 1, 0], [1, 0, 1, 0], [0, 2, 0, 1]]
    moved = apply_projectivity(l1111, A)
    image = Ideal(R, [apply_linear_change(f, A) for f in l1111.coefficients])
    assert ideal_equal(singular_ideal(moved), image)


# -- projectivization ---------------------------------------------------------------


def test_projectivize_plane_pencil():
    ring = PolyRing(2)
    x, y = ring.variables()
    form = projectivize(AffineOneForm(ring, (y, -x)), new_var=2)
    assert form.degree == 0
    assert [str(f) for f in form.coefficients] == ["z1", "-z0", "0"]


def test_projectivize_constant_form():
    ring = PolyRing(2)
    one = ring.one()
    form = projectivize(AffineOneForm(ring, (one, ring.zero())), new_var=2)
    assert form.degree == 0
    assert [str(f) for f in form.coefficients] == ["z2", "0", "-z0"]


def test_projectivize_chart_restriction():
    # restricting to the chart z_new = 1 recovers the affine form up to the
    # stripped monomial factor (here: none)
    ring = PolyRing(3)
    z1, z2, z3 = ring.variables()
    affine = AffineOneForm(ring, (z2, -z1, z3 * z3))
    form = projectivize(affine, new_var=0)
    from foliations.rings import dehomogenize, map_to_ring

    chart = [dehomogenize(f, 0) for f in form.coefficients[1:]]
    back = [map_to_ring(p, ring, [0, 0, 1, 2]) for p in chart]
    assert back == list(affine.coefficients)


# -- constructors --------------------------------------------------------------------


def test_logarithmic_weight_constraint():
    with pytest.raises(WeightConstraintViolation):
        logarithmic_form(Z, [1, 1, 1, 1])
    with pytest.raises(WeightConstraintViolation):
        logarithmic_form(Z, [1, 0, 1, -2])
    with pytest.raises(WeightConstraintViolation):
        logarithmic_form([Z[0], Z[0] * Z[1]], [1, Fraction(-1, 2)])


def test_plane_logarithmic(plane_deg1):
    assert plane_deg1.degree == 1
    assert integrability_check(plane_deg1)


def test_l112_representative(l112):
    assert l112.degree == 2


def test_pullback_examples(plane_deg2):
    P = PolyRing(3)
    w = P.variables()
    pb = pullback_from_plane(validate([w[1], -w[0], P.zero()]))
    assert pb.degree == 0
    assert [str(f) for f in pb.coefficients] == ["0", "z2", "-z1", "0"]
    pb2 = pullback_from_plane(plane_deg2)
    assert pb2.degree == plane_deg2.degree
    assert pb2.coefficients[0].is_zero()


def test_exceptional_scalars():
    ring = PolyRing(3)
    z1, z2, z3 = ring.variables()
    form2 = exceptional_form(2)
    # scalar pattern 3, 7, 21 for d = 2, visible in the z0-multiplied slots
    assert form2.coefficients[1] == (PolyRing(4).variable(0) * _lift(z2 - z3 ** 3)).scale(3) + _zero_pad()
    # d = 3 follows the printed formula: 1+2d+2d^2+d^3 = 52
    form3 = exceptional_form(3)
    target = _lift(z2 ** 4 - z1 * z3 ** 3).scale(-52) * PolyRing(4).variable(0)
    assert form3.coefficients[3] == target


def _lift(p):
    from foliations.rings import homogenize, map_to_ring

    lifted = map_to_ring(p, PolyRing(4), [1, 2, 3])
    return homogenize(lifted, 0, p.degree())


def _zero_pad():
    return PolyRing(4).zero()


def test_exceptional_degree_and_integrability(exceptional2):
    # the minimal projective extension of the printed affine form has
    # coefficient degree d+2, hence computed degree d+1: this is recorded,
    # not hidden (the affine family parameter is d = 2)
    assert exceptional2.degree == 3
    assert integrability_check(exceptional2)
    assert exceptional_form(3).degree == 4


def test_apply_projectivity_identity(l1111):
    eye = [[int(i == j) for j in range(4)] for i in range(4)]
    assert apply_projectivity(l1111, eye) == l1111
