import pytest

from hopfmackey.cosets import (check_cor15, check_double_union, check_partition, check_remark21,
                               check_support_saturation, check_theorem16, coset_rank, crosscheck_prop10,
                               double_cosets, product_support, right_cosets, support_partition)
from hopfmackey.errors import RingMismatch
from hopfmackey.subrings import enumerate_subrings, make_subring

FIXTURES = ["ks3", "kd4", "rep_s3", "rep_d4", "rep_q8", "rep_a4"]


def _sub(R, *labels):
    return make_subring(R, [R.index(x) for x in labels])


def test_right_coset_examples(rings):
    R = rings["rep_s3"]
    assert right_cosets(R, _sub(R, "1", "s")).labels() == [["1", "s"], ["v"]]
    assert len(right_cosets(R, _sub(R, "1", "s", "v"))) == 1
    K = rings["ks3"]
    part = right_cosets(K, _sub(K, "e", "(12)"))
    assert sorted(len(C) for C in part.classes) == [2, 2, 2]


def test_double_coset_examples(rings):
    D = rings["rep_d4"]
    A = _sub(D, "1", "a")
    assert double_cosets(D, A, A).labels() == [["1", "a"], ["b", "c"], ["v"]]
    K = rings["ks3"]
    T = _sub(K, "e", "(12)")
    assert sorted(len(C) for C in double_cosets(K, T, T).classes) == [2, 4]
    unit = make_subring(D, [D.unit])
    for S in enumerate_subrings(D):
        assert double_cosets(D, unit, S).classes == right_cosets(D, S).classes


@pytest.mark.parametrize("gname,rname", [("group_s3", "ks3"), ("group_d4", "kd4")])
def test_group_ring_cosets_match_group_cosets(rings, groups, gname, rname):
    G, R = groups[gname], rings[rname]
    for M in G.subgroups():
        KM = make_subring(R, M)
        assert sorted(right_cosets(R, KM).classes) == sorted(G.left_cosets(M))
        for N in G.subgroups():
            assert sorted(double_cosets(R, KM, make_subring(R, N)).classes) == sorted(G.double_cosets(M, N))


def test_product_support_examples(rings):
    R = rings["rep_s3"]
    v, s = R.index("v"), R.index("s")
    assert product_support(R, [v], [R.unit, s]) == {v}
    assert product_support(R, [R.unit], [s, v]) == {s, v}
    assert product_support(R, [v], [v]) == {0, 1, 2}


def test_coset_rank_examples(rings):
    R = rings["rep_s3"]
    part = right_cosets(R, _sub(R, "1", "s"))
    assert coset_rank(part, [R.index("v")]) == 2
    assert coset_rank(part, part.class_index(R.unit)) == 1
    K = rings["kd4"]
    for S in enumerate_subrings(K):
        p = right_cosets(K, S)
        assert all(coset_rank(p, k) == 1 for k in range(len(p)))
    with pytest.raises(ValueError):
        coset_rank(double_cosets(R, part.right, part.right), 0)


@pytest.mark.parametrize("name", FIXTURES)
def test_partitions_and_support_criterion(rings, name):
    R = rings[name]
    subs = enumerate_subrings(R)
    for K in subs:
        part = right_cosets(R, K)
        assert check_partition(R, part) and check_support_saturation(R, part)
        assert [coset_rank(part, k) for k in range(len(part))]
        for L in subs:
            dbl = double_cosets(R, L, K)
            assert check_partition(R, dbl) and check_double_union(R, dbl)
            assert crosscheck_prop10(R, L, K)


def test_support_classes_for_linear_subring(rings):
    D = rings["rep_d4"]
    A = _sub(D, "1", "a")
    assert support_partition(D, A, A) == ((0, 1), (2, 3), (4,))
    unit = make_subring(D, [D.unit])
    assert crosscheck_prop10(D, unit, unit)
    assert support_partition(D, unit, unit) == tuple((i,) for i in range(D.n))


@pytest.mark.parametrize("name", FIXTURES)
def test_eigenspace_identities(rings, name):
    R = rings[name]
    for K in enumerate_subrings(R):
        assert check_cor15(R, K), K
        assert check_remark21(R, K), K
    for d in range(R.n):
        assert check_theorem16(R, d), d


def test_mismatched_rings_are_rejected(rings):
    R, D = rings["rep_s3"], rings["rep_d4"]
    with pytest.raises(RingMismatch):
        right_cosets(R, make_subring(D, [0]))
