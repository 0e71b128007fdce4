"""Free resolutions: Betti tables, exactness certificates, minimality."""

from random import Random

from foliations.groebner import Ideal
from foliations.hilbert import hilbert_data
from foliations.resolutions import free_resolution
from foliations.rings import PolyRing
from foliations.saturation import saturate

R = PolyRing(4)
Z = R.variables()


def six_edges():
    gens = []
    for i in range(4):
        p = R.one()
        for j in range(4):
            if j != i:
                p = p * Z[j]
        gens.append(p)
    return Ideal(R, gens)


def test_koszul_resolution():
    res = free_resolution(Ideal(R, [Z[0], Z[1]]))
    assert res.length == 2
    assert res.betti() == {(0, 0): 1, (1, 1): 2, (2, 2): 1}


def test_twisted_cubic_resolution():
    I = Ideal(R, [Z[0] * Z[2] - Z[1] ** 2, Z[0] * Z[3] - Z[1] * Z[2], Z[1] * Z[3] - Z[2] ** 2])
    res = free_resolution(I)
    assert res.length == 2
    assert res.betti() == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert res.composites_are_zero()
    assert not res.has_unit_entry()


def test_two_skew_lines_length_three():
    I = Ideal(R, [Z[0] * Z[2], Z[0] * Z[3], Z[1] * Z[2], Z[1] * Z[3]])
    res = free_resolution(I)
    assert res.length == 3
    assert res.betti()[(3, 4)] == 1


def test_six_edges_is_acm():
    res = free_resolution(six_edges())
    assert res.length == 2
    assert res.betti() == {(0, 0): 1, (1, 3): 4, (2, 4): 3}


def test_hilbert_alternating_sum_identity():
    rng = Random(17)
    from .conftest import random_homogeneous

    samples = [
        Ideal(R, [Z[0], Z[1]]),
        six_edges(),
        Ideal(R, [Z[0] * Z[2], Z[0] * Z[3], Z[1] * Z[2], Z[1] * Z[3]]),
    ]
    for _ in range(4):
        gens = [random_homogeneous(rng, R, rng.randint(1, 3)) for _ in range(rng.randint(2, 3))]
        samples.append(Ideal(R, gens))
    for I in samples:
        res = free_resolution(I)
        assert res.composites_are_zero()
        assert not res.has_unit_entry()
        assert res.euler_numerator() == hilbert_data(I).numerator


def test_resolution_of_whole_ring():
    res = free_resolution(Ideal(R, []))
    assert res.length == 0 and res.twists == [(0,)]


def test_auslander_buchsbaum_bound_for_saturated_ideals():
    # saturated non-irrelevant ideals have depth >= 1, so length <= 3 here
    rng = Random(23)
    from .conftest import random_homogeneous

    count = 0
    while count < 5:
        gens = [random_homogeneous(rng, R, rng.randint(1, 2)) for _ in range(2)]
        I = Ideal(R, [g for g in gens if not g.is_zero()])
        if not I.generators:
            continue
        S = saturate(I)
        if [str(g) for g in S.generators] == ["1"]:
            continue
        res = free_resolution(S)
        assert res.length <= 3
        count += 1
