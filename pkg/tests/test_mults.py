import random
from fractions import Fraction

import pytest

from qgcenter.mults import (
    MultTable,
    dominant_box,
    freudenthal,
    kostant_mult,
    kostant_partition_count,
    weyl_dim,
)
from qgcenter.roots import build_root_system


def test_trivial_module():
    for tag, rank in [("A", 1), ("B", 2), ("G", 2)]:
        rs = build_root_system(tag, rank)
        table = freudenthal(rs, rs.zero)
        assert table.dominant == {rs.zero.omega: 1}
        assert table.dimension() == 1


def test_sl2_ladder_oracle():
    # A1, lam = m*w1: weights m, m-2, ..., -m each with multiplicity 1
    rs = build_root_system("A", 1)
    for m in range(0, 7):
        lam = rs.fundamental[0].scale(m)
        lam = rs.weight_from_omega([m])
        table = freudenthal(rs, lam)
        assert table.dimension() == m + 1
        expected_doms = {(Fraction(k),): 1 for k in range(m, -1, -2)}
        assert table.dominant == expected_doms


def test_a2_adjoint():
    rs = build_root_system("A", 2)
    lam = rs.weight_from_omega([1, 1])
    table = freudenthal(rs, lam)
    assert table.mult(rs.zero) == 2
    assert table.dimension() == 8
    assert table.mult(lam) == 1


def test_rejects_non_dominant():
    rs = build_root_system("A", 2)
    with pytest.raises(ValueError):
        freudenthal(rs, -rs.fundamental[0])
    with pytest.raises(ValueError):
        freudenthal(rs, rs.weight_from_alpha([Fraction(1, 2), 0]))


def test_weyl_dim_examples():
    a2 = build_root_system("A", 2)
    assert weyl_dim(a2, a2.zero) == 1
    assert weyl_dim(a2, a2.fundamental[0]) == 3
    assert weyl_dim(a2, a2.weight_from_omega([1, 1])) == 8

    g2 = build_root_system("G", 2)
    assert weyl_dim(g2, g2.fundamental[0]) == 7
    assert weyl_dim(g2, g2.fundamental[1]) == 14

    b2 = build_root_system("B", 2)
    assert weyl_dim(b2, b2.fundamental[0]) == 5
    assert weyl_dim(b2, b2.fundamental[1]) == 4


def test_kostant_simple_cases():
    rs = build_root_system("A", 2)
    lam = rs.weight_from_omega([1, 1])
    assert kostant_mult(rs, lam, lam) == 1
    assert kostant_mult(rs, lam, rs.zero) == 2
    assert kostant_mult(rs, rs.fundamental[0], rs.fundamental[1]) == 0


def test_kostant_partition_count_a2():
    rs = build_root_system("A", 2)
    # a1 + a2 = {a1+a2} or {a1, a2}
    assert kostant_partition_count(rs, rs.weight_from_alpha([1, 1])) == 2
    # 2a1 + a2 = {a1,a1,a2}, {a1, a1+a2}
    assert kostant_partition_count(rs, rs.weight_from_alpha([2, 1])) == 2
    assert kostant_partition_count(rs, rs.weight_from_alpha([1, 0])) == 1
    assert kostant_partition_count(rs, rs.weight_from_alpha([-1, 1])) == 0
    assert kostant_partition_count(rs, rs.zero) == 1


def test_freudenthal_matches_kostant_small_boxes():
    for tag, rank in [("A", 1), ("A", 2), ("B", 2), ("G", 2)]:
        rs = build_root_system(tag, rank)
        for lam in dominant_box(rs, Fraction(4)):
            table = freudenthal(rs, lam)
            for key, m in table.dominant_items():
                mu = rs.weight_from_omega(key)
                assert kostant_mult(rs, lam, mu) == m, (tag, rank, lam, mu)


def test_total_dimension_matches_weyl_dim():
    for tag, rank in [("A", 1), ("A", 2), ("B", 2), ("G", 2)]:
        rs = build_root_system(tag, rank)
        for lam in dominant_box(rs, Fraction(5)):
            assert freudenthal(rs, lam).dimension() == weyl_dim(rs, lam)


def test_w_invariance_of_multiplicities():
    rng = random.Random(8)
    rs = build_root_system("B", 2)
    lam = rs.weight_from_omega([1, 2])
    table = freudenthal(rs, lam)
    for w, m in table.all_weights():
        for _ in range(3):
            i = rng.randint(1, 2)
            assert table.mult(rs.reflect(i, w)) == m


def test_json_roundtrip():
    rs = build_root_system("A", 2)
    table = freudenthal(rs, rs.weight_from_omega([2, 1]))
    back = MultTable.from_json(rs, table.to_json())
    assert back.dominant == table.dominant and back.lam == table.lam


def test_dominant_box_is_sorted_and_complete():
    rs = build_root_system("A", 2)
    box = dominant_box(rs, Fraction(2))
    keys = [tuple(int(c) for c in w.omega) for w in box]
    # height of a*w1 + b*w2 in A2 is a + b
    assert set(keys) == {(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (0, 2)}
    heights = [w.height() for w in box]
    assert heights == sorted(heights)
