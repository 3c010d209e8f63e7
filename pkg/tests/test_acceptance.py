"""Acceptance suite: one test per criterion, exact values, stated time budgets.

Each test prints a single PASS line (pytest -s) with its elapsed time; any
failure is an exact mismatch, never a tolerance issue, because nothing here is
floating point.
"""

import json
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from qgcenter.euler import build_euler
from qgcenter.field import FieldElem, LaurentRS
from qgcenter.hc import (
    expand_in_orbit_sums,
    express_orbit_sum_in_hc,
    grothendieck_product,
    hc_image,
    orbit_sum,
    poly_evaluate,
    poly_express,
)
from qgcenter.linalg import mat_mul
from qgcenter.modules import (
    build_z,
    check_s2_twist,
    default_probes,
    hc_matches_z,
    predicted_scalar,
    relation_report,
    simple_quotient,
    verify_central,
    verify_trace_identity,
)
from qgcenter.mults import dominant_box, freudenthal, kostant_mult, kostant_partition_count, weyl_dim
from qgcenter.pairing import PairingEngine, words_of_degree
from qgcenter.roots import build_root_system
from qgcenter.torus import invariance_witness, rho_eval, weyl_act_flat

DET_TABLE = {
    ("A", 1): 0, ("A", 2): 1, ("A", 3): 0, ("A", 4): 1, ("A", 5): 0,
    ("A", 6): 1, ("A", 7): 0, ("A", 8): 1,
    ("B", 2): 4, ("B", 3): 0, ("B", 4): 16, ("B", 5): 0, ("B", 6): 64,
    ("B", 7): 0, ("B", 8): 256,
    ("C", 2): 4, ("C", 3): 0, ("C", 4): 4, ("C", 5): 0, ("C", 6): 4,
    ("C", 7): 0, ("C", 8): 4,
    ("D", 4): 4, ("D", 5): 0, ("D", 6): 4, ("D", 7): 0, ("D", 8): 4,
    ("E", 6): 1, ("E", 7): 0, ("E", 8): 1,
    ("F", 4): 4,
    ("G", 2): 9,
}

_ENGINES = {}


def engine_for(tag, rank):
    key = (tag, rank)
    if key not in _ENGINES:
        _ENGINES[key] = PairingEngine(build_euler(tag, rank))
    return _ENGINES[key]


def report(n, label, t0, budget):
    dt = time.time() - t0
    assert dt < budget, f"criterion {n} took {dt:.1f}s, budget {budget}s"
    print(f"PASS  criterion {n}: {label} ({dt:.1f}s < {budget}s)")


def test_criterion_1_determinant_tables():
    t0 = time.time()
    for (tag, rank), expected in sorted(DET_TABLE.items()):
        ed = build_euler(tag, rank)
        det, kernel = ed.det_and_kernel("R_plus_S")
        assert det == expected, (tag, rank, det, expected)
        assert bool(kernel) == (expected == 0)
    report(1, "det(R+S) tables for all listed types", t0, 1.0)


def test_criterion_2_symmetrized_cartan_and_weyl_compatibility():
    t0 = time.time()
    for (tag, rank) in sorted(DET_TABLE):
        ed = build_euler(tag, rank)
        rs = ed.rs
        m = ed.combination("R_minus_S")
        assert m == [list(row) for row in rs.sym]
        for i in range(1, rank + 1):
            sig = rs.reflection_matrix_alpha(i)
            sig_t = [[sig[r][c] for r in range(rank)] for c in range(rank)]
            assert mat_mul(m, sig, 0) == mat_mul(sig_t, m, 0)
    report(2, "R-S = DC and (R-S)Sigma = Sigma^T(R-S) everywhere", t0, 1.0)


def test_criterion_3_a3_kernel_witness():
    t0 = time.time()
    ed = build_euler("A", 3)
    det, kernel = ed.det_and_kernel("R_plus_S")
    assert det == 0 and kernel == [[1, 0, 1]]
    m = ed.combination("R_plus_S")
    vec = kernel[0]
    # spans ker(R+S)^T: antisymmetric matrix, same kernel both sides
    assert all(sum(m[i][j] * vec[j] for j in range(3)) == 0 for i in range(3))
    assert all(sum(vec[i] * m[i][j] for i in range(3)) == 0 for j in range(3))
    eta = ed.rs.weight_from_alpha(vec)
    rng = random.Random(2024)
    for _ in range(20):
        lam = ed.rs.weight_from_omega([rng.randint(-6, 6) for _ in range(3)])
        assert rho_eval(ed, lam, eta, eta) == LaurentRS.one()
    report(3, "A3 kernel vector (1,0,1) trivializes rho on the diagonal", t0, 1.0)


def test_criterion_4_multiplicity_consistency():
    t0 = time.time()
    for tag, rank in [("A", 1), ("A", 2), ("B", 2), ("G", 2)]:
        rs = build_root_system(tag, rank)
        for lam in dominant_box(rs, Fraction(6)):
            table = freudenthal(rs, lam)
            for key, m in table.dominant_items():
                assert kostant_mult(rs, lam, rs.weight_from_omega(key)) == m
            assert table.dimension() == weyl_dim(rs, lam)
    report(4, "Freudenthal = Kostant and dimension sums, height <= 6 boxes", t0, 30.0)


def test_criterion_5_harish_chandra_suite():
    t0 = time.time()
    for tag, rank in [("A", 1), ("A", 2), ("B", 2), ("G", 2)]:
        rs = build_root_system(tag, rank)
        box = dominant_box(rs, Fraction(6))
        for lam in box:
            flat = hc_image(rs, lam).flat
            assert invariance_witness(rs, flat) is None
            # expand then re-sum
            expansion = expand_in_orbit_sums(rs, flat)
            total = None
            for key, c in sorted(expansion.items()):
                part = orbit_sum(rs, rs.weight_from_omega(key)).scale(c)
                total = part if total is None else total + part
            assert total == flat
            # express then re-sum
            coeffs = express_orbit_sum_in_hc(rs, lam)
            total2 = None
            for key, c in sorted(coeffs.items()):
                part = hc_image(rs, rs.weight_from_omega(key)).flat.scale(c)
                total2 = part if total2 is None else total2 + part
            assert total2 == orbit_sum(rs, lam)
            # polynomial in the fundamental images reproduces the image
            poly = poly_express(rs, lam)
            assert poly_evaluate(rs, poly) == flat

    a2 = build_root_system("A", 2)
    w1, w2 = a2.fundamental
    assert grothendieck_product(a2, w1, w2) == {
        (w1 + w2).omega: 1, a2.zero.omega: 1,
    }
    a1 = build_root_system("A", 1)
    f = a1.fundamental[0]
    assert grothendieck_product(a1, f, f) == {
        a1.weight_from_omega([2]).omega: 1, a1.zero.omega: 1,
    }
    rng = random.Random(5)
    for tag, rank in [("A", 2), ("B", 2), ("G", 2)]:
        rs = build_root_system(tag, rank)
        box = dominant_box(rs, Fraction(3))
        for _ in range(3):
            lam, mu = rng.choice(box), rng.choice(box)
            decomp = grothendieck_product(rs, lam, mu)
            assert all(isinstance(c, int) and c > 0 for c in decomp.values())
    report(5, "HC images W-invariant, round-trips, products, polynomials", t0, 60.0)


def test_criterion_6_pairing_engine():
    t0 = time.time()
    for tag, rank, max_h in [("A", 2, 4), ("B", 2, 4), ("G", 2, 5)]:
        eng = engine_for(tag, rank)
        eng.height_cutoff = max(eng.height_cutoff, max_h)
        rs = eng.ed.rs

        def all_degrees(limit, n=rank):
            coords = [0] * n
            out = []

            def rec(i, rem):
                if i == n:
                    if any(coords):
                        out.append(tuple(coords))
                    return
                for c in range(rem + 1):
                    coords[i] = c
                    rec(i + 1, rem - c)
                coords[i] = 0

            rec(0, limit)
            return sorted(out)

        for alpha in all_degrees(max_h):
            beta = rs.weight_from_alpha(alpha)
            data = eng.gram(beta)
            assert data.rank == kostant_partition_count(rs, beta), (tag, alpha)
            us, vs = eng.dual_bases(beta)
            for j, v in enumerate(vs):
                for i, u in enumerate(us):
                    expected = FieldElem.one() if i == j else FieldElem.zero()
                    assert eng.pair_combos(v, u) == expected
        for i in range(1, rank + 1):
            for j in range(1, rank + 1):
                if i != j:
                    assert eng.serre_in_radical(i, j), (tag, rank, i, j)
    report(6, "Gram ranks = Kostant counts, Serre radicals, dual bases", t0, 300.0)


def test_criterion_7_module_audit():
    t0 = time.time()
    for tag, rank in [("A", 1), ("A", 2), ("B", 2)]:
        eng = engine_for(tag, rank)
        ed = eng.ed
        rs = ed.rs
        for lam in dominant_box(rs, Fraction(4)):
            L = simple_quotient(ed, lam, engine=eng)
            table = freudenthal(rs, lam)
            assert L.total_dim() == table.dimension()
            for key in L.keys:
                assert L.dim(key) == table.mult(L.weight(key))
            rep = relation_report(L)
            assert rep["x1"] and rep["x2"] and rep["x3"], (tag, lam, rep["failures"][:2])
            assert check_s2_twist(L)
    report(7, "simple quotients match tables; X1-X3 and the S^2 twist hold", t0, 120.0)


def test_criterion_8_central_element_suite():
    t0 = time.time()
    cases = [("A", 1, [2]), ("A", 2, [1, 1])]
    for tag, rank, coords in cases:
        eng = engine_for(tag, rank)
        ed = eng.ed
        rs = ed.rs
        lam = rs.weight_from_omega(coords)
        assert lam.in_root_lattice()
        z = build_z(ed, lam, engine=eng, form="root")

        # (a) twisted torus part equals the multiplicity image exactly
        assert hc_matches_z(ed, lam, z)

        # (b) + (c): scalar action with the predicted Harish-Chandra value
        for nu in dominant_box(rs, Fraction(3)):
            M = simple_quotient(ed, nu, engine=eng)
            rep = verify_central(ed, z, M)
            assert rep["commutes"], (tag, coords, nu)
            assert rep["is_scalar"], (tag, coords, nu)
            assert rep["matches"] and rep["scalar"] == predicted_scalar(ed, z, nu)

        # (d) trace identity on >= 10 probes including the full torus support
        probes = default_probes(ed, z, min_count=10)
        assert len(probes) >= 10
        flat_keys = {key for key, _ in z.torus_flat(rs).items_sorted()}
        torus_probes = {
            p[1].omega for p in probes if not p[0] and not p[3] and p[1] == -p[2]
        }
        assert flat_keys <= torus_probes
        out = verify_trace_identity(ed, z, probes, engine=eng)
        assert out["all_match"]
    report(8, "central elements: HC bridge, scalar action, trace identity", t0, 600.0)


def test_criterion_9_determinism():
    t0 = time.time()
    env = dict(os.environ, PYTHONPATH=os.path.join(os.path.dirname(__file__), "..", "src"))
    env.pop("QGCENTER_CACHE", None)
    outputs = []
    for run in range(2):
        docs = []
        for cmd in (
            ["matrices", "--type", "D", "--rank", "4"],
            ["mults", "--type", "B", "--rank", "2", "--weight", "1,1"],
            ["product", "--type", "A", "--rank", "2", "--weight", "1,0", "--weight2", "1,1"],
            ["poly-express", "--type", "A", "--rank", "2", "--weight", "2,0"],
            ["pairing-gram", "--type", "G", "--rank", "2", "--beta", "2,1"],
            ["verify", "--suite", "dets", "--type", "A", "--rank", "2"],
            ["central-element", "--type", "A", "--rank", "1", "--weight", "2"],
        ):
            proc = subprocess.run(
                [sys.executable, "-m", "qgcenter.cli", *cmd],
                capture_output=True, text=True, env=env,
            )
            assert proc.returncode == 0, (cmd, proc.stderr)
            docs.append(proc.stdout)
        outputs.append("\n".join(docs))
    assert outputs[0] == outputs[1]
    report(9, "two cold runs produce byte-identical documents", t0, 600.0)
