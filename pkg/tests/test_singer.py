import math

import numpy as np
import pytest

from twoweight import singer
from twoweight.errors import DegenerateTowerError, NotCoprimeError
from twoweight.singer import GroupRingElement
from twoweight.tower import build_field_tower


def test_group_ring_arithmetic():
    a = GroupRingElement(np.array([1, 2, 0, 1]))
    b = GroupRingElement(np.array([0, 1, 0, 0]))
    # multiplying by the generator rotates indices
    assert (a * b).coeffs.tolist() == [1, 1, 2, 0]
    assert (a + b).coeffs.tolist() == [1, 3, 0, 1]
    assert a.power_map(1) == a
    assert a.power_map(3).coeffs.tolist() == [1, 1, 0, 2]  # i -> 3i mod 4
    # non-coprime power map collapses
    assert a.power_map(2).coeffs.tolist() == [1, 0, 3, 0]
    assert a.translate(1).coeffs.tolist() == [1, 1, 2, 0]


def test_singer_set_sizes():
    for pmk, delta, size in [((3, 1, 2), 4, 3), ((2, 2, 2), 5, 4), ((3, 1, 3), 13, 9)]:
        t = build_field_tower(*pmk)
        D = singer.singer_set(t)
        assert t.delta == delta and len(D) == size


def test_singer_set_rejects_k1():
    with pytest.raises(DegenerateTowerError):
        singer.singer_set(build_field_tower(3, 2, 1))


def test_dd_identity():
    for pmk in [(3, 1, 2), (2, 2, 2), (2, 1, 4), (3, 1, 3), (2, 3, 2), (3, 2, 2)]:
        t = build_field_tower(*pmk)
        assert singer.verify_dd_identity(t)
        # coefficientwise: q^(k-2) at the identity, 0 elsewhere after
        # subtracting q^(k-2)(q-1) everywhere
        D = singer.singer_set(t).element()
        c = t.q ** (t.k - 2)
        F = D * D.power_map(-1) - GroupRingElement.all_ones(t.delta).scale(c * (t.q - 1))
        assert F.coeffs[0] == c and np.count_nonzero(F.coeffs) == 1


def test_character_values(t_q3k3):
    t = t_q3k3
    D = singer.singer_set(t).element()
    full = GroupRingElement.all_ones(t.delta)
    assert abs(singer.character_value_of_set(t, full, 3)) < 1e-9  # orthogonality
    assert abs(singer.character_value_of_set(t, D, 0) - 9) < 1e-9  # |D| = q^(k-1)
    for j in range(1, t.delta):
        assert singer.singer_character_matches_gauss(t, j)
        # D is invertible: no character value vanishes
        assert abs(singer.character_value_of_set(t, D, j)) > 1e-6


def test_multipliers_examples():
    assert singer.multipliers(build_field_tower(3, 1, 3)) == (1, 3, 9)
    assert singer.multipliers(build_field_tower(2, 2, 2)) == (1, 2, 3, 4)
    assert singer.multipliers(build_field_tower(2, 1, 4)) == (1, 2, 4, 8)
    for pmk in [(3, 1, 3), (2, 1, 4), (2, 2, 2), (2, 1, 5), (5, 1, 3)]:
        t = build_field_tower(*pmk)
        assert singer.multipliers(t) == singer.expected_multipliers(t)


def test_multipliers_k2_degeneracy():
    # for k = 2 the construction yields the complement of a single point in
    # Z_{q+1}, so every unit is a multiplier; the powers-of-p description
    # only matches when p generates Z_{q+1}* (see README)
    t = build_field_tower(7, 1, 2)
    mult = singer.multipliers(t)
    units = tuple(x for x in range(1, t.delta) if math.gcd(x, t.delta) == 1)
    assert mult == units == (1, 3, 5, 7)
    assert set(singer.expected_multipliers(t)) == {1, 7}
    D = singer.singer_set(t)
    assert len(D) == t.delta - 1


def test_lemma4_object(t_q3k3):
    t = t_q3k3
    F, cls = singer.lemma4_F_object(t, 1)
    assert cls == ("translate", 0)
    F, cls = singer.lemma4_F_object(t, 3)
    assert cls[0] == "translate"
    F, cls = singer.lemma4_F_object(t, 2)
    assert cls == ("not_translate", None)
    with pytest.raises(NotCoprimeError):
        singer.lemma4_F_object(t, 13)


def test_lemma4_translate_iff_multiplier():
    for pmk in [(3, 1, 3), (2, 2, 2), (2, 1, 4)]:
        t = build_field_tower(*pmk)
        mult = set(singer.multipliers(t))
        for w in range(1, t.delta):
            if math.gcd(w, t.delta) != 1:
                continue
            _, cls = singer.lemma4_F_object(t, w)
            assert (cls[0] == "translate") == (w in mult)
