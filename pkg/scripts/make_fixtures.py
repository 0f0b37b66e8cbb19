"""Regenerate the shipped JSON fixtures under src/hopfmackey/data/.

Groups are built from permutations (S3, D4, A4) and unit quaternions (Q8);
character rings come from the verified character tables.
"""
from __future__ import annotations

import json
from itertools import permutations
from pathlib import Path

from hopfmackey.groups import CharacterTable, Cyclotomic, FiniteGroup, character_table
from hopfmackey.groups import character_fusion_ring, group_fusion_ring
from hopfmackey.io import canonical_json, digest, group_to_document, ring_to_document

OUT = Path(__file__).resolve().parents[1] / "src" / "hopfmackey" / "data"


def compose(p, q):
    """(p q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(q)))


def cycle_label(p):
    seen, cycles = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(str(j + 1))
            j = p[j]
        cycles.append("(" + "".join(c) + ")")
    return "".join(cycles) or "e"


def from_elements(elems, mul, name, labels):
    pos = {x: k for k, x in enumerate(elems)}
    table = [[pos[mul(a, b)] for b in elems] for a in elems]
    return FiniteGroup(table, name=name, labels=labels)


def fixpoint_char(perms):
    return [sum(p[i] == i for i in range(len(p))) - 1 for p in perms]


def s3():
    e = (0, 1, 2)
    trans = [(1, 0, 2), (2, 1, 0), (0, 2, 1)]
    cyc = [(1, 2, 0), (2, 0, 1)]
    elems = [e] + trans + cyc
    G = from_elements(elems, compose, "S3", [cycle_label(p) for p in elems])
    return FiniteGroup(G.table, G.name, G.labels, [fixpoint_char(elems)])


def d4():
    r = (1, 2, 3, 0)          # rotation of the square 1->2->3->4
    s = (0, 3, 2, 1)          # reflection fixing vertices 1 and 3
    e = (0, 1, 2, 3)
    rots = [e]
    for _ in range(3):
        rots.append(compose(r, rots[-1]))
    elems = rots + [compose(x, s) for x in rots]
    labels = ["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"]
    G = from_elements(elems, compose, "D4", labels)
    chi = [2 if k == 0 else -2 if k == 2 else 0 for k in range(8)]
    return FiniteGroup(G.table, G.name, G.labels, [chi])


def q8():
    def qmul(a, b):
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        return (a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0)
    units = [(1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, -1, 0, 0),
             (0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1)]
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    G = from_elements(units, qmul, "Q8", labels)
    chi = [2, -2, 0, 0, 0, 0, 0, 0]
    return FiniteGroup(G.table, G.name, G.labels, [chi])


def a4():
    def parity(p):
        return sum(p[i] > p[j] for i in range(4) for j in range(i + 1, 4)) % 2
    even = [p for p in permutations(range(4)) if parity(p) == 0]
    e = (0, 1, 2, 3)
    invol = sorted(p for p in even if p != e and compose(p, p) == e)
    threes = sorted(p for p in even if p != e and p not in invol)
    elems = [e] + invol + threes
    G = from_elements(elems, compose, "A4", [cycle_label(p) for p in elems])
    return FiniteGroup(G.table, G.name, G.labels, [fixpoint_char(elems)])


def ordered_table(G, key):
    T = character_table(G)
    irr = sorted(T.irreducibles, key=key)
    return CharacterTable(G, T.support, irr)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    docs = {}
    groups = {"s3": s3(), "d4": d4(), "q8": q8(), "a4": a4()}
    for k, G in groups.items():
        docs[f"group_{k}"] = group_to_document(G)

    def by_degree(chi):
        return (int(chi.degree.to_fraction()),)

    T = ordered_table(groups["s3"], by_degree)
    docs["rep_s3"] = ring_to_document(character_fusion_ring(T, ["1", "s", "v"], "rep_s3"))

    for k in ("d4", "q8"):
        G = groups[k]
        # linear characters ordered by their kernels' least non-identity element
        T = ordered_table(G, lambda chi: (int(chi.degree.to_fraction()),
                                          [c.coeffs for c in chi.values]) if chi.degree != 1 else
                          (1, tuple(g for g in G.elements if chi(g) != 1)))
        docs[f"rep_{k}"] = ring_to_document(character_fusion_ring(T, ["1", "a", "b", "c", "v"], f"rep_{k}"))

    G = groups["a4"]
    c123 = G.labels.index("(123)")
    w = Cyclotomic.zeta(G.exponent, G.exponent // 3)

    def a4_key(chi):
        d = int(chi.degree.to_fraction())
        if d > 1:
            return (3,)
        v = chi(c123)
        return (0,) if v == 1 else (1,) if v == w else (2,)
    T = ordered_table(G, a4_key)
    docs["rep_a4"] = ring_to_document(character_fusion_ring(T, ["1", "w", "wb", "T"], "rep_a4"))

    docs["ks3"] = ring_to_document(group_fusion_ring(groups["s3"], "ks3"))
    docs["kd4"] = ring_to_document(group_fusion_ring(groups["d4"], "kd4"))

    broken = json.loads(json.dumps(docs["rep_s3"]))
    broken["name"] = "rep_s3_broken"
    for entry in broken["products"]:
        if entry["left"] == 2 and entry["right"] == 2:
            entry["terms"] = [[0, 1], [1, 1]]
    docs["rep_s3_broken"] = broken

    man = {}
    for name, doc in sorted(docs.items()):
        (OUT / f"{name}.json").write_text(json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=1) + "\n",
                                          encoding="utf-8")
        man[name] = digest(doc)
    (OUT / "manifest.json").write_text(json.dumps(man, sort_keys=True, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {len(docs)} fixtures to {OUT}")


if __name__ == "__main__":
    main()
