from fractions import Fraction

import pytest

from hopfmackey.conjugacy import (check_cor32, check_orbit_law, check_prop28, check_prop34, check_prop67,
                                  check_remark30, check_remark39, check_theorem33_maximality, conjugate_subring,
                                  is_character_normal, is_mackey_pair, theorem4_inequality, theorem7_dimension_check,
                                  theorem7_sides)
from hopfmackey.cosets import product_support
from hopfmackey.errors import NotMackeyPair, NotNormal
from hopfmackey.subrings import enumerate_subrings, generate_subring, make_subring, subrings_of_invertibles

FIXTURES = ["ks3", "kd4", "rep_s3", "rep_d4", "rep_q8", "rep_a4"]

# (H, K) pairs where the dimension identity fails away from double-coset representatives
KNOWN_NOT_PAIRS = {
    ("rep_s3", ("1", "s", "v"), ("1",)),
    ("rep_s3", ("1", "s", "v"), ("1", "s")),
    ("rep_a4", ("1", "w", "wb", "T"), ("1",)),
    ("rep_a4", ("1", "w", "wb", "T"), ("1", "w", "wb")),
}


def _sub(R, *labels):
    return make_subring(R, [R.index(x) for x in labels])


def test_conjugate_subring_examples(rings):
    R = rings["rep_s3"]
    K = _sub(R, "1", "s")
    assert conjugate_subring(R, R.index("v"), K).members == K.members
    for S in enumerate_subrings(R):
        assert conjugate_subring(R, R.unit, S).members == S.members
    D = rings["rep_d4"]
    assert conjugate_subring(D, D.index("v"), _sub(D, "1", "a")).members == _sub(D, "1", "a", "b", "c").members


def test_conjugation_by_invertibles_examples(rings):
    K = rings["ks3"]
    T = _sub(K, "e", "(12)")
    assert check_prop28(K, K.index("(13)"), T)
    assert conjugate_subring(K, K.index("(13)"), T).members == _sub(K, "e", "(23)").members
    A3 = _sub(K, "e", "(123)", "(132)")
    assert conjugate_subring(K, K.index("(123)"), A3).members == A3.members
    assert check_prop28(K, K.unit, T)
    with pytest.raises(ValueError):
        check_prop28(rings["rep_s3"], rings["rep_s3"].index("v"), T)


@pytest.mark.parametrize("gname,rname", [("group_s3", "ks3"), ("group_d4", "kd4")])
def test_invertible_conjugation_is_group_conjugation(rings, groups, gname, rname):
    G, R = groups[gname], rings[rname]
    for M in G.subgroups():
        for g in G.elements:
            assert conjugate_subring(R, g, make_subring(R, M)).members == G.conjugate_subgroup(g, M)


def test_maximality_examples(rings):
    R = rings["rep_s3"]
    assert check_theorem33_maximality(R, R.index("v"), _sub(R, "1", "s"))
    D = rings["rep_d4"]
    assert check_theorem33_maximality(D, D.index("v"), _sub(D, "1", "a"))


@pytest.mark.parametrize("name", FIXTURES)
def test_conjugation_suite(rings, name):
    R = rings[name]
    subs = enumerate_subrings(R)
    for K in subs:
        assert check_prop34(R, K)
        if R.is_commutative():
            assert check_remark30(R, K)
        for c in range(R.n):
            cK = conjugate_subring(R, c, K)
            assert check_cor32(R, c, K) and check_theorem33_maximality(R, c, K)
            assert set(cK.members) <= product_support(R, [c], K.members, [R.dual[c]])
        for g in subrings_of_invertibles(R)[-1].members:
            assert check_prop28(R, g, K)


def test_mackey_examples(rings):
    R = rings["rep_s3"]
    K = _sub(R, "1", "s")
    cert = is_mackey_pair(R, K, K)
    assert cert.verdict == "pair"
    assert [(r.lhs, r.rhs) for r in cert.rows] == [(4, 4), (4, 4), (8, 8)]
    D = rings["rep_d4"]
    A = _sub(D, "1", "a")
    rows = {D.basis[r.c]: r for r in is_mackey_pair(D, A, A).rows}
    assert (rows["v"].lhs, rows["v"].rhs) == (8, 8)
    assert (rows["v"].dim_LCK, rows["v"].dim_meet, rows["v"].dim_CK) == (4, 2, 4)
    assert (rows["b"].dim_LCK, rows["b"].dim_meet) == (2, 2)
    for S in enumerate_subrings(D):
        assert is_mackey_pair(D, make_subring(D, [D.unit]), S)


def test_not_pair_list_is_complete(rings):
    found = set()
    for name in FIXTURES:
        R = rings[name]
        subs = enumerate_subrings(R)
        for L in subs:
            for K in subs:
                if not is_mackey_pair(R, L, K):
                    found.add((name, tuple(R.basis[x] for x in L.members), tuple(R.basis[x] for x in K.members)))
    assert found == KNOWN_NOT_PAIRS


def test_non_mackey_pairs_in_character_rings(rings):
    # the identity fails at non-representative elements of some double cosets
    R = rings["rep_s3"]
    H, unit = _sub(R, "1", "s", "v"), _sub(R, "1")
    cert = is_mackey_pair(R, H, unit)
    assert cert.verdict == "not-pair" and cert.first_failure == R.index("v")
    row = cert.rows[R.index("v")]
    assert (row.lhs, row.rhs) == (12, 24)
    assert conjugate_subring(R, R.index("v"), unit).members == _sub(R, "1", "s").members
    assert cert.holds_at_representatives
    assert theorem4_inequality(R, H, unit)
    A = rings["rep_a4"]
    cert = is_mackey_pair(A, _sub(A, "1", "w", "wb", "T"), _sub(A, "1"))
    assert not cert and cert.holds_at_representatives
    assert (cert.rows[A.index("T")].lhs, cert.rows[A.index("T")].rhs) == (36, 108)


@pytest.mark.parametrize("name", FIXTURES)
def test_invertible_pairs_and_dimension_bound(rings, name):
    R = rings[name]
    subs = enumerate_subrings(R)
    for L in subrings_of_invertibles(R):
        for K in subs:
            assert is_mackey_pair(R, L, K), (L, K)
            assert check_orbit_law(R, L, K)
    for L in subs:
        for K in subs:
            cert = is_mackey_pair(R, L, K)
            assert theorem4_inequality(R, L, K)
            if cert:
                assert all(r.lhs == r.rhs for r in cert.rows)
                assert check_remark39(R, L, K)
                for m in (1, 2, 3):
                    for n in (1, 2):
                        assert theorem7_dimension_check(R, L, K, m, n)


def test_commuting_supports_give_pairs_in_generated_subring(rings):
    # when L K and K L have the same support, (L, K) is a pair inside the ring they generate
    for name in FIXTURES:
        R = rings[name]
        subs = enumerate_subrings(R)
        for L in subs:
            for K in subs:
                if product_support(R, L.members, K.members) != product_support(R, K.members, L.members):
                    continue
                LK = generate_subring(R, set(L.members) | set(K.members))
                if set(LK.members) != product_support(R, L.members, K.members):
                    continue
                sub = _restrict_ring(R, LK)
                idx = {x: i for i, x in enumerate(LK.members)}
                Ls = make_subring(sub, [idx[x] for x in L.members])
                Ks = make_subring(sub, [idx[x] for x in K.members])
                cert = is_mackey_pair(sub, Ls, Ks)
                key = (name, tuple(R.basis[x] for x in L.members), tuple(R.basis[x] for x in K.members))
                if key in KNOWN_NOT_PAIRS:
                    assert not cert and cert.holds_at_representatives
                else:
                    assert cert, key


def _restrict_ring(R, S):
    from hopfmackey.ring_core import FusionRing
    idx = {x: i for i, x in enumerate(S.members)}
    table = {}
    for a in S.members:
        for b in S.members:
            table[(idx[a], idx[b])] = [(idx[z], R.N(a, b, z)) for z in sorted(R.support(a, b))]
    return FusionRing(f"{R.name}|sub", [R.basis[x] for x in S.members], idx[R.unit],
                      [idx[R.dual[x]] for x in S.members], [R.dims[x] for x in S.members], table)


def test_character_normality(rings):
    K = rings["ks3"]
    assert is_character_normal(K, _sub(K, "e", "(123)", "(132)"))
    bad = is_character_normal(K, _sub(K, "e", "(12)"))
    assert not bad
    with pytest.raises(NotNormal):
        check_prop67(K, _sub(K, "e", "(12)"))
    for name in ["rep_s3", "rep_d4", "rep_q8", "rep_a4"]:
        R = rings[name]
        for S in enumerate_subrings(R):
            assert is_character_normal(R, S) and check_prop67(R, S)
    assert check_prop67(K, _sub(K, "e", "(123)", "(132)"))
    assert check_prop67(K, _sub(K, "e"))


def test_induced_tensor_dimension_examples(rings):
    R = rings["rep_s3"]
    K = _sub(R, "1", "s")
    assert theorem7_sides(R, K, K, 1, 1) == (Fraction(9), Fraction(9))
    assert theorem7_sides(R, K, K, 0, 0) == (0, 0)
    G = rings["ks3"]
    A3 = _sub(G, "e", "(123)", "(132)")
    assert theorem7_sides(G, A3, A3, 1, 1) == (4, 4)
    with pytest.raises(NotMackeyPair):
        theorem7_dimension_check(R, _sub(R, "1", "s", "v"), _sub(R, "1"), 1, 1)
