"""Ext modules: vanishing, finite length, and the Rao dual placement."""

from foliations.ext import ext_module
from foliations.groebner import Ideal
from foliations.resolutions import free_resolution
from foliations.rings import PolyRing

R = PolyRing(4)
Z = R.variables()


def test_complete_intersection_has_no_ext3():
    assert ext_module(Ideal(R, [Z[0], Z[1]]), 3).is_zero()


def test_two_skew_lines_rao_dual():
    I = Ideal(R, [Z[0] * Z[2], Z[0] * Z[3], Z[1] * Z[2], Z[1] * Z[3]])
    e3 = ext_module(I, 3)
    assert not e3.is_zero()
    assert e3.krull_dim == 0
    assert e3.finite_support() == {-4: 1}
    assert e3.total_dimension() == 1


def test_six_edges_ext3_vanishes():
    gens = []
    for i in range(4):
        p = R.one()
        for j in range(4):
            if j != i:
                p = p * Z[j]
        gens.append(p)
    assert ext_module(Ideal(R, gens), 3).is_zero()


def test_ext_beyond_resolution_length_is_zero():
    I = Ideal(R, [Z[0]])
    res = free_resolution(I)
    assert res.length == 1
    assert ext_module(I, 2, resolution=res).is_zero()
    assert ext_module(I, 3, resolution=res).is_zero()


def test_embedded_point_shows_in_ext4_not_ext3():
    I = Ideal(R, [Z[0] ** 2, Z[0] * Z[1], Z[0] * Z[2], Z[0] * Z[3]])
    assert ext_module(I, 3).is_zero()
    e4 = ext_module(I, 4)
    assert not e4.is_zero() and e4.krull_dim == 0


def test_isolated_point_union_line_has_ext3_of_positive_dimension():
    # a line union a disjoint point: a codim-3 associated prime makes the
    # Ext^3 support positive dimensional, which is what the curve test keys on
    from foliations.saturation import intersect

    line = Ideal(R, [Z[0], Z[1]])
    point = Ideal(R, [Z[0], Z[2], Z[3]])
    I = intersect(line, point)
    e3 = ext_module(I, 3)
    assert not e3.is_zero()
    assert e3.krull_dim == 1
