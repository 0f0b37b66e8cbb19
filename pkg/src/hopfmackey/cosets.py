"""Right cosets CK and double cosets LCK as partitions of the basis.

Two basis elements c, d lie in the same right coset of K iff
``eps(d) * c Lambda_K == eps(c) * d Lambda_K``; in the same double coset of
(L, K) iff ``eps(d) * Lambda_L c Lambda_K == eps(c) * Lambda_L d Lambda_K``.
Both criteria are tested pairwise in exact arithmetic; classes are then checked
to form a genuine partition rather than assuming transitivity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import FreenessViolation, IntransitiveRelation, RingMismatch
from .exact import column_space, eigenspace_exact, matmul
from .report import Check
from .ring_core import FusionRing, RingElement, element_matrix, left_mult_matrix, ring_memo
from .subrings import FusionSubring, generate_subring, integral


@dataclass(frozen=True)
class CosetPartition:
    kind: str                       # "right" or "double"
    left: FusionSubring | None
    right: FusionSubring
    classes: tuple[tuple[int, ...], ...]
    class_dims: tuple[int, ...]
    # double cosets only: indices into the right-coset partition making up each class
    constituents: tuple[tuple[int, ...], ...] = ()

    @property
    def ring(self) -> FusionRing:
        return self.right.parent

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    def class_of(self, c: int) -> tuple[int, ...]:
        for C in self.classes:
            if c in C:
                return C
        raise KeyError(c)

    def class_index(self, c: int) -> int:
        for k, C in enumerate(self.classes):
            if c in C:
                return k
        raise KeyError(c)

    def dim_of(self, c: int) -> int:
        return self.class_dims[self.class_index(c)]

    def __len__(self):
        return len(self.classes)

    def labels(self) -> list[list[str]]:
        return [[self.ring.basis[i] for i in C] for C in self.classes]


def _classes_from(ring: FusionRing, images: list[RingElement]) -> tuple[tuple[int, ...], ...]:
    """Classes of c ~ d iff eps(d) images[c] == eps(c) images[d]."""
    n = ring.n
    eps = ring.dims

    def rel(c, d):
        return images[c].scale(eps[d]) == images[d].scale(eps[c])

    assigned: dict[int, int] = {}
    classes: list[list[int]] = []
    for c in range(n):
        if c in assigned:
            continue
        cls = [d for d in range(n) if rel(c, d)]
        for d in cls:
            if d in assigned:
                raise IntransitiveRelation(f"{ring.basis[d]} relates to two different classes", witness=(c, d))
            assigned[d] = len(classes)
        classes.append(cls)
    for cls in classes:
        for x in cls:
            for y in cls:
                if not rel(x, y):
                    raise IntransitiveRelation("coset relation is not transitive", witness=(cls[0], x, y))
    return tuple(tuple(c) for c in classes)


def _class_dims(ring, classes):
    return tuple(sum(ring.dims[x] ** 2 for x in C) for C in classes)


@ring_memo
def right_cosets(ring: FusionRing, K: FusionSubring) -> CosetPartition:
    if K.parent != ring:
        raise RingMismatch("subring of a different ring")
    lam = integral(K).normalized
    images = [ring.basis_element(c) * lam for c in range(ring.n)]
    classes = _classes_from(ring, images)
    return CosetPartition("right", None, K, classes, _class_dims(ring, classes))


@ring_memo
def double_cosets(ring: FusionRing, L: FusionSubring, K: FusionSubring) -> CosetPartition:
    if K.parent != ring or L.parent != ring:
        raise RingMismatch("subrings of a different ring")
    lamL = integral(L).normalized
    lamK = integral(K).normalized
    images = [lamL * ring.basis_element(c) * lamK for c in range(ring.n)]
    classes = _classes_from(ring, images)
    right = right_cosets(ring, K)
    constituents = []
    for C in classes:
        idx = sorted({right.class_index(x) for x in C})
        constituents.append(tuple(idx))
    return CosetPartition("double", L, K, classes, _class_dims(ring, classes), tuple(constituents))


def product_support(ring: FusionRing, *sets: Iterable[int]) -> frozenset[int]:
    """Simple constituents of the product of the given basis subsets (left to right)."""
    sets = [frozenset(s) for s in sets]
    if not sets:
        return frozenset({ring.unit})
    acc = sets[0]
    for B in sets[1:]:
        nxt = set()
        for a in acc:
            for b in B:
                nxt |= ring.support(a, b)
        acc = frozenset(nxt)
    return acc


def coset_rank(partition: CosetPartition, cls: int | Iterable[int]) -> int:
    """Rank of CK as a free right K-module: dim CK / dim K.

    ``cls`` is either a class index or the class itself.
    """
    if partition.kind != "right":
        raise ValueError("coset_rank needs a right-coset partition")
    if isinstance(cls, int):
        d = partition.class_dims[cls]
    else:
        d = partition.class_dims[partition.classes.index(tuple(sorted(cls)))]
    q, r = divmod(d, partition.right.dim)
    if r:
        raise FreenessViolation(f"class dimension {d} is not a multiple of dim K = {partition.right.dim}",
                                witness=cls)
    return q


def support_partition(ring: FusionRing, L: FusionSubring, K: FusionSubring) -> tuple[tuple[int, ...], ...]:
    """Classes of c ~ d iff supp(L c K) == supp(L d K)."""
    groups: dict[frozenset[int], list[int]] = {}
    for c in range(ring.n):
        s = product_support(ring, L.members, [c], K.members)
        groups.setdefault(s, []).append(c)
    return tuple(sorted(tuple(v) for v in groups.values()))


def crosscheck_prop10(ring: FusionRing, L: FusionSubring, K: FusionSubring) -> Check:
    """Integral-criterion double cosets coincide with product-support classes."""
    a = double_cosets(ring, L, K).classes
    b = support_partition(ring, L, K)
    if tuple(sorted(a)) == b:
        return Check("prop10", True)
    for c in range(ring.n):
        for d in range(ring.n):
            same_a = any(c in C and d in C for C in a)
            same_b = any(c in C and d in C for C in b)
            if same_a != same_b:
                return Check("prop10", False, (c, d))
    return Check("prop10", False)


def check_partition(ring: FusionRing, part: CosetPartition) -> Check:
    """Totality, dimension sum, and identification of the unit class."""
    flat = sorted(x for C in part.classes for x in C)
    if flat != list(range(ring.n)):
        return Check("partition_totality", False, flat)
    if sum(part.class_dims) != ring.total_dimension:
        return Check("partition_dimension_sum", False, part.class_dims)
    if part.kind == "right":
        expect = tuple(part.right.members)
    else:
        expect = tuple(sorted(product_support(ring, part.left.members, part.right.members)))
    if part.class_of(ring.unit) != expect:
        return Check("unit_class", False, part.class_of(ring.unit))
    return Check("partition", True)


def check_support_saturation(ring: FusionRing, part: CosetPartition) -> Check:
    """supp(x k) stays inside the class of x for k in K (right cosets)."""
    for C in part.classes:
        Cs = set(C)
        for x in C:
            for k in part.right.members:
                if not ring.support(x, k) <= Cs:
                    return Check("support_saturation", False, (x, k))
    return Check("support_saturation", True)


def check_double_union(ring: FusionRing, part: CosetPartition) -> Check:
    """Each double coset is the disjoint union of its constituent right cosets."""
    right = right_cosets(ring, part.right)
    for C, S in zip(part.classes, part.constituents):
        union = sorted(x for k in S for x in right.classes[k])
        if union != list(C):
            return Check("double_union", False, C)
    return Check("double_union", True)


# -- eigenspaces of multiplication by integrals -----------------------------
def check_cor15(ring: FusionRing, K: FusionSubring) -> Check:
    """Eigenspace of L_{Lambda_K} at 1 is its image, of dimension #right cosets."""
    M = element_matrix(ring, integral(K).normalized, "left")
    eig = eigenspace_exact(M, 1)
    image = column_space(M)
    n_cosets = len(right_cosets(ring, K))
    ok = eig == image and eig.dim == n_cosets
    return Check("cor15", ok, None if ok else (K.members, eig.dim, image.dim, n_cosets))


def check_theorem16(ring: FusionRing, d: int) -> Check:
    """Eigenspace of L_d at eps(d) equals that of L_{Lambda_<d>} at 1."""
    a = eigenspace_exact(left_mult_matrix(ring, d), ring.dims[d])
    gen = generate_subring(ring, [d])
    b = eigenspace_exact(element_matrix(ring, integral(gen).normalized, "left"), 1)
    return Check("theorem16", a == b, None if a == b else (d, a.dim, b.dim))


def check_remark21(ring: FusionRing, K: FusionSubring) -> Check:
    """Right multiplication by the regular element: dominant eigenvalue dim K.

    The eigenspace at dim K has dimension #right cosets and contains c Lambda'_K
    for every coset representative c; no eigenvalue exceeds dim K in modulus
    (the operator is dim K times an idempotent).
    """
    reg = integral(K).regular
    M = element_matrix(ring, reg, "right")
    part = right_cosets(ring, K)
    eig = eigenspace_exact(M, K.dim)
    vecs = [list((ring.basis_element(c) * reg).coeffs) for c in part.representatives]
    # T^2 = dim K * T, so the spectrum lies in {0, dim K}
    MM = matmul(M, M)
    quadratic = all(MM[i][j] == K.dim * M[i][j] for i in range(ring.n) for j in range(ring.n))
    ok = quadratic and eig.dim == len(part) and all(eig.contains(v) for v in vecs)
    return Check("remark21", ok, None if ok else (K.members, eig.dim, len(part), quadratic))
