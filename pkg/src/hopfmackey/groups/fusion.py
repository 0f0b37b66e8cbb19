"""Fusion rings built from groups: character rings and group rings."""
from __future__ import annotations

from typing import Sequence

from ..errors import NonIntegralFusion
from ..ring_core import FusionRing, require_valid
from .characters import CharacterTable, inner
from .finite_group import FiniteGroup


def character_fusion_ring(table: CharacterTable, labels: Sequence[str] | None = None, name: str = "") -> FusionRing:
    """Fusion coefficients N^k_ij = <chi_i chi_j, chi_k>."""
    irr = table.irreducibles
    n = len(irr)
    labels = list(labels) if labels is not None else [f"x{i}" for i in range(n)]
    products = {}
    for i in range(n):
        for j in range(n):
            prod = irr[i] * irr[j]
            terms = []
            for k in range(n):
                m = inner(prod, irr[k])
                if m.denominator != 1 or m < 0:
                    raise NonIntegralFusion(f"<chi_{i} chi_{j}, chi_{k}> = {m}", witness=(i, j, k))
                if m:
                    terms.append((k, int(m)))
            products[(i, j)] = terms
    dual = []
    for chi in irr:
        c = chi.conj()
        dual.append(next(k for k, psi in enumerate(irr) if psi == c))
    dims = [int(chi.degree.to_fraction()) for chi in irr]
    ring = FusionRing(name or f"rep({table.group.name})", labels, 0, dual, dims, products)
    return require_valid(ring)


def group_fusion_ring(G: FiniteGroup, name: str = "") -> FusionRing:
    """The group ring kG as a based ring: N^e_{g,h} = [gh = e]."""
    products = {(g, h): [(G.mul(g, h), 1)] for g in G.elements for h in G.elements}
    ring = FusionRing(name or f"k{G.name}", list(G.labels), 0, [G.inv(g) for g in G.elements],
                      [1] * G.order, products)
    return require_valid(ring)
