from fractions import Fraction

import numpy as np
import pytest
import sympy

from hopfmackey.errors import AxiomViolation, IndexOutOfRange, MalformedTable, NoConvergence, RingMismatch
from hopfmackey.exact import RationalSubspace, eigenspace_exact, identity
from hopfmackey.io import load_fixture, load_ring, ring_from_document
from hopfmackey.ring_core import (FusionRing, element_matrix, fp_eigenvalue, left_mult_matrix, multiply,
                                  power_iteration, require_valid, right_mult_matrix, validate_ring)
from oracles import burnside_characters, fusion_rules, isomorphic_constants, ring_constants


def test_character_ring_fixtures_match_class_algebra_oracle(rings, groups):
    for gname, rname in [("group_s3", "rep_s3"), ("group_d4", "rep_d4"), ("group_q8", "rep_q8"),
                         ("group_a4", "rep_a4")]:
        G = groups[gname]
        chars = burnside_characters([list(r) for r in G.table])
        assert isomorphic_constants(fusion_rules(chars, G.order), ring_constants(rings[rname])), rname


def test_group_ring_fixtures_follow_the_table(rings, groups):
    for gname, rname in [("group_s3", "ks3"), ("group_d4", "kd4")]:
        G, R = groups[gname], rings[rname]
        assert R.total_dimension == G.order
        for g in G.elements:
            for h in G.elements:
                assert dict(R.product(g, h)) == {G.mul(g, h): 1}


@pytest.mark.parametrize("name", ["ks3", "kd4", "rep_s3", "rep_d4", "rep_q8", "rep_a4"])
def test_fixtures_validate(rings, name):
    rep = validate_ring(rings[name])
    assert rep.passed, rep.failures()
    assert [c.name for c in rep] == ["dual_involution", "unit_law", "duality_law", "associativity",
                                     "dimension_homomorphism"]


def test_broken_fixture_names_the_vv_entry():
    ring = ring_from_document(load_fixture("rep_s3_broken"), validate=False)
    rep = validate_ring(ring)
    bad = rep["dimension_homomorphism"]
    assert not bad and bad.witness == (ring.index("v"), ring.index("v"))
    with pytest.raises(AxiomViolation):
        require_valid(ring)


def test_missing_entry_is_malformed():
    with pytest.raises(MalformedTable):
        FusionRing("x", ["1", "g"], 0, [0, 1], [1, 1], {(0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)]})


def test_products_in_s3_character_ring(rings):
    R = rings["rep_s3"]
    v = R.basis_element(R.index("v"))
    assert multiply(R, v, v) == R.element({"1": 1, "s": 1, "v": 1})
    a = R.element({"1": Fraction(1, 2), "s": Fraction(1, 2)})
    assert a * v == v
    assert R.one() * a == a
    with pytest.raises(RingMismatch):
        multiply(R, v, rings["rep_d4"].one())


def test_multiplication_matrices(rings):
    R = rings["rep_s3"]
    v = R.index("v")
    L = left_mult_matrix(R, v)
    assert [row[v] for row in L] == [1, 1, 1]
    assert left_mult_matrix(R, R.unit) == [[int(i == j) for j in range(3)] for i in range(3)]
    D = rings["rep_d4"]
    assert [row[D.index("v")] for row in left_mult_matrix(D, D.index("v"))] == [1, 1, 1, 1, 0]
    with pytest.raises(IndexOutOfRange):
        left_mult_matrix(R, 7)
    K = rings["ks3"]
    g, h = K.index("(12)"), K.index("(123)")
    # left and right multiplication differ in a noncommutative ring
    assert left_mult_matrix(K, g) != right_mult_matrix(K, g)
    assert [row[h] for row in right_mult_matrix(K, g)] == [int(e == K.index(K.labels(K.product(h, g))[0]))
                                                          for e in range(6)]


@pytest.mark.parametrize("name", ["ks3", "kd4", "rep_s3", "rep_d4", "rep_q8", "rep_a4"])
def test_fp_eigenvalue_matches_dimension_and_numpy(rings, name):
    R = rings[name]
    for d in range(R.n):
        val = fp_eigenvalue(R, d)
        assert abs(val - R.dims[d]) < 1e-9
        ref = max(abs(np.linalg.eigvals(np.array(left_mult_matrix(R, d), dtype=float))))
        assert abs(ref - R.dims[d]) < 1e-9


def test_fp_examples(rings):
    assert fp_eigenvalue(rings["rep_s3"], 0) == 1.0
    assert abs(fp_eigenvalue(rings["rep_s3"], rings["rep_s3"].index("v")) - 2) < 1e-9
    assert abs(fp_eigenvalue(rings["rep_a4"], rings["rep_a4"].index("T")) - 3) < 1e-9


def test_power_iteration_handles_periodic_matrices():
    # eigenvalues +2 and -2: iteration with A alone oscillates from some starts
    A = [[0, 2], [2, 0]]
    assert abs(power_iteration(A) - 2) < 1e-9
    assert abs(power_iteration([[0, 1, 0], [0, 0, 1], [1, 0, 0]]) - 1) < 1e-9


def test_power_iteration_reports_non_convergence():
    with pytest.raises(NoConvergence):
        power_iteration([[1, 1], [0, 1]], tol=1e-15, max_iter=5)
    with pytest.raises(ValueError):
        power_iteration([[1]], tol=0)


def test_eigenspace_examples_against_sympy(rings):
    R = rings["rep_s3"]
    L = left_mult_matrix(R, R.index("v"))
    E = eigenspace_exact(L, 2)
    assert E.dim == 1 and E.contains([1, 1, 2])
    ref = (sympy.Matrix(L) - 2 * sympy.eye(3)).nullspace()
    assert E == RationalSubspace(3, [[Fraction(int(x.p), int(x.q)) for x in v] for v in ref])
    assert eigenspace_exact(identity(4), 1).dim == 4
    lam = R.element({"1": Fraction(1, 2), "s": Fraction(1, 2)})
    P = eigenspace_exact(element_matrix(R, lam, "left"), 1)
    assert P.dim == 2
    assert P.contains(lam.coeffs) and P.contains((R.basis_element(R.index("v")) * lam).coeffs)


def test_invalid_rings_are_rejected_on_load():
    doc = load_fixture("rep_s3")
    doc = dict(doc, dims=[1, 1, 3])
    with pytest.raises(AxiomViolation):
        ring_from_document(doc)


def test_index_lookup(rings):
    R = rings["rep_a4"]
    assert R.index("T") == 3 and R.index(2) == 2
    with pytest.raises(IndexOutOfRange):
        R.index("X")
    assert load_ring("rep_a4") == R
