"""Independent reference computations used only by the tests.

Nothing here imports the character or cyclotomic code under test: the
character table comes from the class algebra (Burnside's method, numerically
via numpy), fusion rules from rounded complex inner products.
"""
from __future__ import annotations

from itertools import permutations

import numpy as np


def classes(table):
    n = len(table)
    inv = [row.index(0) for row in table]
    seen, out = set(), []
    for g in range(n):
        if g in seen:
            continue
        C = sorted({table[table[x][g]][inv[x]] for x in range(n)})
        seen.update(C)
        out.append(C)
    return out


def burnside_characters(table, seed=0):
    """Irreducible characters as complex arrays indexed by group element."""
    n = len(table)
    cls = classes(table)
    k = len(cls)
    where = {g: i for i, C in enumerate(cls) for g in C}
    # a[j][i][l] = #{(x, y) in C_j x C_i : x y = z_l}
    a = np.zeros((k, k, k))
    for j, Cj in enumerate(cls):
        for i, Ci in enumerate(cls):
            for x in Cj:
                for y in Ci:
                    a[j, i, where[table[x][y]]] += 1
    for l, Cl in enumerate(cls):
        a[:, :, l] /= len(Cl)
    rng = np.random.default_rng(seed)
    A = np.einsum("j,jil->il", rng.normal(size=k), a)
    _, vecs = np.linalg.eig(A)
    e = where[0]
    chars = []
    for v in vecs.T:
        w = v / v[e]
        sizes = np.array([len(C) for C in cls])
        deg = np.sqrt(n / np.sum(np.abs(w) ** 2 / sizes))
        vals = w * deg / sizes
        chars.append(np.array([vals[where[g]] for g in range(n)]))
    chars.sort(key=lambda c: (round(c[0].real), -round(float(np.sum(c.real)), 6)))
    return chars


def fusion_rules(chars, n):
    k = len(chars)
    N = np.zeros((k, k, k), dtype=int)
    for a in range(k):
        for b in range(k):
            for c in range(k):
                m = np.sum(chars[a] * chars[b] * np.conj(chars[c])) / n
                assert abs(m.imag) < 1e-8 and abs(m.real - round(m.real)) < 1e-8
                N[a, b, c] = round(m.real)
    return N


def ring_constants(ring):
    k = ring.n
    N = np.zeros((k, k, k), dtype=int)
    for a in range(k):
        for b in range(k):
            for c, m in ring.product(a, b).items():
                N[a, b, c] = m
    return N


def isomorphic_constants(N1, N2) -> bool:
    """Structure constants agree under some relabelling of the basis."""
    k = N1.shape[0]
    if N2.shape[0] != k:
        return False
    for p in permutations(range(k)):
        p = list(p)
        if np.array_equal(N1, N2[np.ix_(p, p, p)]):
            return True
    return False


def relabel_document(doc: dict, perm: list[int]) -> dict:
    """Ring document with basis element i moved to position perm[i]."""
    n = len(doc["basis"])
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    products = []
    for e in doc["products"]:
        products.append({"left": perm[e["left"]], "right": perm[e["right"]],
                         "terms": sorted([perm[t], m] for t, m in e["terms"])})
    return {"name": doc["name"] + "'", "basis": [doc["basis"][inv[i]] for i in range(n)],
            "unit": perm[doc["unit"]], "dual": [perm[doc["dual"][inv[i]]] for i in range(n)],
            "dims": [doc["dims"][inv[i]] for i in range(n)], "products": products}
