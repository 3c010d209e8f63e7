from fractions import Fraction

import pytest

from qgcenter.errors import ConsistencyError
from qgcenter.euler import build_euler
from qgcenter.field import FieldElem
from qgcenter.hc import hc_image
from qgcenter.modules import (
    build_z,
    check_s2_twist,
    default_probes,
    hc_matches_z,
    predicted_scalar,
    relation_report,
    simple_quotient,
    theta_matrix,
    verify_central,
    verify_trace_identity,
    verma_truncate,
    xi_image,
    z_block,
)
from qgcenter.mults import freudenthal, kostant_partition_count, weyl_dim
from qgcenter.pairing import PairingEngine

ONE = FieldElem.one()


def setup(tag, rank):
    ed = build_euler(tag, rank)
    return ed, PairingEngine(ed)


def test_verma_dimensions_match_kostant():
    ed, eng = setup("A", 2)
    rs = ed.rs
    lam = rs.weight_from_omega([1, 1])
    M = verma_truncate(ed, lam, 3, engine=eng)
    for key in M.keys:
        beta = M.spaces[key]["beta"]
        assert M.dim(key) == kostant_partition_count(rs, beta)
    # highest weight vector is killed by every raising operator
    top = lam.omega
    for i in (1, 2):
        assert M.e_block(i, top) is None


def test_verma_rank_one_heights():
    ed, eng = setup("A", 1)
    rs = ed.rs
    lam = rs.weight_from_omega([2])
    M = verma_truncate(ed, lam, 4, engine=eng)
    assert all(M.dim(k) == 1 for k in M.keys)
    assert len(M.keys) == 5


def test_verma_relations_interior():
    for tag, rank, lam_coords, H in [("A", 1, [2], 4), ("A", 2, [1, 1], 3), ("B", 2, [1, 0], 3)]:
        ed, eng = setup(tag, rank)
        lam = ed.rs.weight_from_omega(lam_coords)
        M = verma_truncate(ed, lam, H, engine=eng)
        rep = relation_report(M)
        assert rep["x1"] and rep["x2"] and rep["x3"], rep["failures"][:3]


def test_simple_quotient_a1():
    ed, eng = setup("A", 1)
    rs = ed.rs
    L = simple_quotient(ed, rs.weight_from_omega([2]), engine=eng)
    assert L.total_dim() == 3
    assert sorted(w.omega for w in (L.weight(k) for k in L.keys)) == [
        (Fraction(-2),), (Fraction(0),), (Fraction(2),)
    ]
    L0 = simple_quotient(ed, rs.zero, engine=eng)
    assert L0.total_dim() == 1


def test_simple_quotient_a2_fundamental():
    ed, eng = setup("A", 2)
    L = simple_quotient(ed, ed.rs.fundamental[0], engine=eng)
    assert L.total_dim() == 3 == weyl_dim(ed.rs, ed.rs.fundamental[0])


def test_simple_quotient_dims_match_multiplicities():
    # heavier sweep lives in the acceptance suite; spot-check the adjoint here
    ed, eng = setup("A", 2)
    lam = ed.rs.weight_from_omega([1, 1])
    L = simple_quotient(ed, lam, engine=eng)
    table = freudenthal(ed.rs, lam)
    assert L.total_dim() == table.dimension() == 8
    for key in L.keys:
        assert L.dim(key) == table.mult(L.weight(key))


def test_simple_quotient_h_too_small():
    ed, eng = setup("A", 1)
    with pytest.raises(ValueError, match="too small"):
        simple_quotient(ed, ed.rs.weight_from_omega([3]), H=2, engine=eng)


def test_rank_guard():
    ed, eng = setup("A", 3)
    with pytest.raises(ValueError, match="allow_high_rank"):
        simple_quotient(ed, ed.rs.fundamental[0], engine=eng)


def test_theta_matrix_values():
    ed, eng = setup("A", 1)
    rs = ed.rs
    L = simple_quotient(ed, rs.weight_from_omega([2]), engine=eng)
    theta = theta_matrix(L)
    lam = rs.weight_from_omega([2])
    assert theta[lam.omega] == FieldElem.monomial(1, -1, 1)
    assert theta[rs.zero.omega] == ONE
    assert theta[(-lam).omega] == FieldElem.monomial(1, 1, -1)

    L0 = simple_quotient(ed, rs.zero, engine=eng)
    assert theta_matrix(L0) == {rs.zero.omega: ONE}


def test_s2_twist_on_modules():
    for tag, rank, coords in [("A", 1, [2]), ("A", 2, [1, 0]), ("A", 2, [1, 1]), ("B", 2, [0, 1])]:
        ed, eng = setup(tag, rank)
        L = simple_quotient(ed, ed.rs.weight_from_omega(coords), engine=eng)
        assert check_s2_twist(L)


def test_build_z_trivial():
    ed, eng = setup("A", 1)
    z = build_z(ed, ed.rs.zero, engine=eng)
    assert len(z.terms) == 1
    flat = z.torus_flat(ed.rs)
    assert flat.terms == {ed.rs.zero.omega: ONE}


def test_build_z_requires_root_lattice():
    ed, eng = setup("A", 2)
    with pytest.raises(ValueError, match="root"):
        build_z(ed, ed.rs.fundamental[0], engine=eng)
    build_z(ed, ed.rs.fundamental[0], engine=eng, form="weight")


def test_z_torus_part_is_twisted_hc_image():
    ed, eng = setup("A", 1)
    lam = ed.rs.weight_from_omega([2])
    z = build_z(ed, lam, engine=eng)
    assert hc_matches_z(ed, lam, z)
    assert xi_image(ed, z) == hc_image(ed.rs, lam).flat


def test_z_central_on_a1_grid():
    ed, eng = setup("A", 1)
    rs = ed.rs
    lam = rs.weight_from_omega([2])
    z = build_z(ed, lam, engine=eng)
    for m in range(0, 4):
        M = simple_quotient(ed, rs.weight_from_omega([m]), engine=eng)
        rep = verify_central(ed, z, M)
        assert rep["commutes"] and rep["is_scalar"] and rep["matches"], rep
        assert rep["scalar"] == predicted_scalar(ed, z, M.highest)


def test_z_central_on_a2_adjoint():
    ed, eng = setup("A", 2)
    rs = ed.rs
    lam = rs.weight_from_omega([1, 1])
    z = build_z(ed, lam, engine=eng)
    assert hc_matches_z(ed, lam, z)
    for coords in ([0, 0], [1, 0], [0, 1], [1, 1]):
        M = simple_quotient(ed, rs.weight_from_omega(coords), engine=eng)
        rep = verify_central(ed, z, M)
        assert rep["commutes"] and rep["is_scalar"] and rep["matches"], (coords, rep)


def test_z_block_is_scalar_block():
    ed, eng = setup("A", 1)
    rs = ed.rs
    lam = rs.weight_from_omega([2])
    z = build_z(ed, lam, engine=eng)
    L = simple_quotient(ed, lam, engine=eng)
    blk = z_block(L, z, rs.zero.omega)
    assert blk[0][0] == predicted_scalar(ed, z, lam)


def test_trace_identity():
    ed, eng = setup("A", 1)
    rs = ed.rs
    lam = rs.weight_from_omega([2])
    z = build_z(ed, lam, engine=eng)
    L = simple_quotient(ed, lam, engine=eng)
    probes = default_probes(ed, z)
    assert len(probes) >= 6
    out = verify_trace_identity(ed, z, probes, module=L, engine=eng)
    assert out["all_match"]
    # probe = 1: both sides equal the theta-weighted dimension sum
    lhs_probe = [((), rs.zero, rs.zero, ())]
    out1 = verify_trace_identity(ed, z, lhs_probe, module=L, engine=eng)
    assert out1["all_match"]


def test_trace_identity_degree_mismatch_probe():
    ed, eng = setup("A", 2)
    rs = ed.rs
    lam = rs.weight_from_omega([1, 1])
    z = build_z(ed, lam, engine=eng)
    L = simple_quotient(ed, lam, engine=eng)
    out = verify_trace_identity(
        ed, z, [((1,), rs.zero, rs.zero, (2,))], module=L, engine=eng
    )
    assert out["all_match"]  # both sides vanish
