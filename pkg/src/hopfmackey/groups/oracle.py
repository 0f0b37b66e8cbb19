"""Classical character identities used as the independent group-theoretic oracle."""
from __future__ import annotations

from ..errors import NotASubgroup, NotNormal, UnsupportedSubgroup
from ..report import Check, Report
from .characters import ClassFunction, character_table, conjugate_char, induce, inner, restrict
from .finite_group import FiniteGroup, Subgroup


def mackey_sum(G: FiniteGroup, chi: ClassFunction, N: Subgroup, reps=None) -> ClassFunction:
    """sum over x in N\\G/M of Ind_{xMx^-1 cap N}^N (res of the conjugate x chi).

    ``reps`` overrides the least-element representatives of the double cosets N x M.
    """
    M = chi.support
    if reps is None:
        reps = [D[0] for D in G.double_cosets(N, M)]
    total = None
    for x in reps:
        xchi = conjugate_char(chi, x)
        meet = G.intersection(xchi.support, N)
        term = induce(restrict(xchi, meet), N)
        total = term if total is None else total + term
    return total


def check_classical_mackey(G: FiniteGroup, M: Subgroup, N: Subgroup, chi: ClassFunction) -> Check:
    """Res_N Ind_M^G chi equals the double-coset sum, as exact class functions."""
    M, N = G.check_subgroup(M), G.check_subgroup(N)
    if chi.support != M:
        raise NotASubgroup("chi must live on M")
    lhs = restrict(induce(chi), N)
    rhs = mackey_sum(G, chi, N)
    return Check("classical_mackey", lhs == rhs, None if lhs == rhs else (M, N, lhs.class_values(), rhs.class_values()))


def check_prop70(G: FiniteGroup, N: Subgroup, chi: ClassFunction) -> Check:
    """Restriction of induction from a normal subgroup, and the irreducibility criterion.

    (1) Res_N Ind_N^G chi = sum over coset reps g of the conjugates g chi.
    (2) Ind chi is irreducible iff <chi, x chi> = 0 for every coset rep x not in N.
    """
    N = G.check_subgroup(N)
    if not G.is_normal(N):
        raise NotNormal(f"subgroup of order {len(N)} is not normal")
    reps = [C[0] for C in G.left_cosets(N)]
    ind = induce(chi)
    lhs = restrict(ind, N)
    rhs = None
    for g in reps:
        t = conjugate_char(chi, g)
        rhs = t if rhs is None else rhs + t
    part1 = lhs == rhs
    irreducible = inner(ind, ind) == 1
    chi_irr = inner(chi, chi) == 1
    distinct = all(inner(chi, conjugate_char(chi, x)) == 0 for x in reps if x not in N)
    part2 = irreducible == (chi_irr and distinct)
    # the classical form: no conjugate by an element outside N is isomorphic to chi
    non_isomorphic = all(conjugate_char(chi, x) != chi for x in reps if x not in N)
    part3 = irreducible == (chi_irr and non_isomorphic)
    ok = part1 and part2 and part3
    return Check("prop70", ok, None if ok else {"restriction": part1, "irreducible": irreducible,
                                                "criterion": chi_irr and distinct,
                                                "classical_criterion": chi_irr and non_isomorphic})


def check_prop73(G: FiniteGroup, M: Subgroup, chi: ClassFunction, psi: ClassFunction) -> Check:
    """Ind(chi) * psi = Ind(chi * Res_M psi)."""
    M = G.check_subgroup(M)
    if psi.support != G.whole:
        raise NotASubgroup("psi must be a class function on the whole group")
    lhs = induce(chi) * psi
    rhs = induce(chi * restrict(psi, M))
    return Check("prop73", lhs == rhs, None if lhs == rhs else (lhs.class_values(), rhs.class_values()))


def check_theorem7_group(G: FiniteGroup, M: Subgroup, N: Subgroup, chi: ClassFunction, psi: ClassFunction) -> Check:
    """Ind(chi) Ind(psi) = sum_{x in N\\G/M} Ind_{xMx^-1 cap N}^G(res x chi * res psi)."""
    M, N = G.check_subgroup(M), G.check_subgroup(N)
    lhs = induce(chi) * induce(psi)
    rhs = None
    for D in G.double_cosets(N, M):
        xchi = conjugate_char(chi, D[0])
        meet = G.intersection(xchi.support, N)
        t = induce(restrict(xchi, meet) * restrict(psi, meet))
        rhs = t if rhs is None else rhs + t
    return Check("theorem7_group", lhs == rhs, None if lhs == rhs else (lhs.class_values(), rhs.class_values()))


def check_double_coset_size(G: FiniteGroup, M: Subgroup, N: Subgroup) -> Check:
    """|MxN| * |M cap xNx^-1| = |M||N| for every x."""
    for x in G.elements:
        size = len({G.prod(m, x, n) for m in M for n in N})
        meet = G.intersection(M, G.conjugate_subgroup(x, N))
        if size * len(meet) != len(M) * len(N):
            return Check("double_coset_size", False, (M, N, x))
    return Check("double_coset_size", True)


def _irreducibles(G: FiniteGroup) -> dict:
    """Irreducible characters of every subgroup whose table is computable."""
    out = {}
    for S in G.subgroups():
        try:
            out[S] = list(character_table(G, S).irreducibles)
        except UnsupportedSubgroup:
            pass
    return out


def _first_failure(name: str, checks) -> Check:
    count = 0
    for c in checks:
        count += 1
        if not c:
            return Check(name, False, c.witness, c.detail)
    return Check(name, True, None, f"{count} cases")


def exhaustive_oracle(G: FiniteGroup, families=("classical_mackey", "prop70", "prop73", "theorem7_group",
                                                "double_coset_size")) -> tuple[Report, dict[str, int]]:
    """Run the classical identities over every admissible subgroup and character tuple.

    Subgroups without a computable character table are skipped and counted.
    Returns the report (one check per family) and the number of cases per family.
    """
    irr = _irreducibles(G)
    subs = G.subgroups()
    whole = irr[G.whole]
    counts = {}
    report = Report()

    def run(name, gen):
        items = list(gen)
        counts[name] = len(items)
        report.add(_first_failure(name, iter(items)))

    if "classical_mackey" in families:
        run("classical_mackey", (check_classical_mackey(G, M, N, chi)
                                 for M in irr for N in subs for chi in irr[M]))
    if "prop70" in families:
        run("prop70", (check_prop70(G, N, chi) for N in irr if G.is_normal(N) for chi in irr[N]))
    if "prop73" in families:
        run("prop73", (check_prop73(G, M, chi, psi) for M in irr for chi in irr[M] for psi in whole))
    if "theorem7_group" in families:
        run("theorem7_group", (check_theorem7_group(G, M, N, chi, psi)
                               for M in irr for N in irr for chi in irr[M] for psi in irr[N]))
    if "double_coset_size" in families:
        run("double_coset_size", (check_double_coset_size(G, M, N) for M in subs for N in subs))
    counts["skipped_subgroups"] = len(subs) - len(irr)
    return report, counts
