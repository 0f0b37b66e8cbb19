"""Command-line interface: ``hopfmackey <command> INPUT [options]``.

Exit codes: 0 all checks passed, 1 a verification failed, 2 malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import __version__
from .config import DEFAULT, Settings
from .conjugacy import conjugate_subring, is_mackey_pair, theorem4_inequality
from .cosets import check_partition, coset_rank, double_cosets, right_cosets
from .errors import ClosureViolation, HopfMackeyError, InputError, VerificationError
from .grading import check_component_dims, check_prop56, check_theorem61, universal_grading
from .green import classical_instance, grading_instance, verify_green
from .groups.oracle import exhaustive_oracle
from .io import (RING_FIXTURES, certificate, datum_from_document, group_from_document, jsonable, read_document,
                 ring_from_document)
from .report import Check
from .ring_core import FusionRing, validate_ring
from .subrings import enumerate_subrings, generate_subring, integral, make_subring
from .suite import hopf_check


class Outcome:
    """What a command produced: checks for the certificate plus human-readable lines."""

    def __init__(self, checks: list[Check], summary=None, lines: list[str] | None = None, seed=None):
        self.checks = checks
        self.summary = summary
        self.lines = lines or []
        self.seed = seed

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


# -- argument helpers ---------------------------------------------------------
def _ring(ref: str, validate: bool = True) -> tuple[FusionRing, dict]:
    doc = read_document(ref)
    return ring_from_document(doc, validate=validate), doc


def _members(ring: FusionRing, text: str | None, what: str) -> frozenset[int]:
    if text is None:
        raise InputError(f"--{what} is required")
    items = [x.strip() for x in text.split(",") if x.strip()]
    return ring.indices(int(x) if x.isdigit() and x not in ring.basis else x for x in items)


def _subring(ring: FusionRing, text: str | None, what: str):
    try:
        return make_subring(ring, _members(ring, text, what))
    except ClosureViolation as exc:
        raise InputError(f"--{what}: {exc}") from None


def _elem(ring: FusionRing, label: str | None, what: str) -> int:
    if label is None:
        raise InputError(f"--{what} is required")
    return ring.index(int(label) if label.isdigit() and label not in ring.basis else label)


def _fmt(ring: FusionRing, idx) -> str:
    return "{" + ", ".join(ring.labels(idx)) + "}"


# -- commands -----------------------------------------------------------------
def cmd_validate(args, settings: Settings) -> tuple[Outcome, dict]:
    ring, doc = _ring(args.input, validate=False)
    rep = validate_ring(ring)
    # witnesses are reported by basis label
    checks = [c if c.passed else Check(c.name, False, [ring.basis[i] for i in c.witness], c.detail) for c in rep]
    lines = [f"{ring.name}: basis {list(ring.basis)}, total dimension {ring.total_dimension}"]
    for c in checks:
        lines.append(f"  {c.name}: {c.status}" + ("" if c.passed else f"  witness {c.witness}"))
    return Outcome(checks, lines=lines), doc


def cmd_subring(args, settings):
    ring, doc = _ring(args.input)
    if args.generators is not None:
        S = generate_subring(ring, _members(ring, args.generators, "generators"))
        lines = [f"generated subring {S!r}, dim {S.dim}"]
        return Outcome([Check("subring", True, S.members)], {"members": S.members, "dim": S.dim}, lines), doc
    subs = enumerate_subrings(ring, settings.max_basis)
    lines = [f"{len(subs)} subrings of {ring.name}:"] + [f"  {S!r}  dim {S.dim}" for S in subs]
    return Outcome([Check("enumerate", True, len(subs))], {"subrings": [S.members for S in subs]}, lines), doc


def cmd_integral(args, settings):
    ring, doc = _ring(args.input)
    K = _subring(ring, args.members, "members")
    e = integral(K)
    lines = [f"integral of {K!r}: {e.normalized!r}", f"regular element: {e.regular!r}"]
    return Outcome([Check("integral", True)], {"normalized": list(e.normalized.coeffs),
                                                "regular": list(e.regular.coeffs)}, lines), doc


def cmd_cosets(args, settings):
    ring, doc = _ring(args.input)
    K = _subring(ring, args.right, "right")
    if args.left is not None:
        L = _subring(ring, args.left, "left")
        part = double_cosets(ring, L, K)
        title = f"double cosets {L!r} C {K!r}"
    else:
        part = right_cosets(ring, K)
        title = f"right cosets C {K!r}"
    checks = [check_partition(ring, part)]
    lines = [f"{title}: {len(part)} classes"]
    for C, d in zip(part.classes, part.class_dims):
        rank = f", rank {coset_rank(part, C)}" if part.kind == "right" else ""
        lines.append(f"  {_fmt(ring, C)}  dim {d}{rank}")
    return Outcome(checks, {"classes": part.classes, "dims": part.class_dims}, lines), doc


def cmd_conjugate(args, settings):
    ring, doc = _ring(args.input)
    K = _subring(ring, args.subring, "subring")
    c = _elem(ring, args.at, "at")
    res = conjugate_subring(ring, c, K).result
    lines = [f"conjugate of {K!r} at {ring.basis[c]}: {res!r}"]
    return Outcome([Check("conjugate_closure", True, res.members)], {"members": res.members}, lines), doc


def cmd_mackey(args, settings):
    ring, doc = _ring(args.input)
    L = _subring(ring, args.left, "left")
    K = _subring(ring, args.right, "right")
    cert = is_mackey_pair(ring, L, K)
    rows = [r.as_dict() for r in cert.rows]
    lines = [f"({L!r}, {K!r}): {cert.verdict}"]
    for r in cert.rows:
        mark = "" if r.lhs == r.rhs else "   <-- differs"
        lines.append(f"  c={ring.basis[r.c]}: dim LCK*dim(L cap cK) = {r.lhs}, dim L*dim CK = {r.rhs}{mark}")
    checks = [Check("mackey_pair", cert.is_pair, None if cert.is_pair else cert.first_failure),
              theorem4_inequality(ring, L, K)]
    summary = {"verdict": cert.verdict, "rows": rows, "holds_at_representatives": cert.holds_at_representatives}
    return Outcome(checks, summary, lines), doc


def cmd_grading(args, settings):
    ring, doc = _ring(args.input)
    g = universal_grading(ring)
    U = g.group
    subs = U.subgroups(settings.max_group_order)
    t61, certs = check_theorem61(g)
    checks = [check_component_dims(g),
              Check("prop56", all(check_prop56(g, M, N) for M in subs for N in subs)),
              Check("theorem61", t61.passed, [c.witness for c in t61.failures()][:1] or None)]
    abelian = "abelian" if U.is_abelian() else "nonabelian"
    lines = [f"universal grading group of {ring.name}: order {U.order} ({abelian})"]
    for k, C in enumerate(g.components):
        lines.append(f"  component {U.labels[k]}: {_fmt(ring, C)}  dim {g.component_dim(k)}")
    pairs = sum(c.is_pair for c in certs.values())
    lines.append(f"  Mackey pairs among graded subrings: {pairs}/{len(certs)}")
    summary = {"order": U.order, "table": U.table, "components": g.components,
               "pairs": pairs, "subgroup_pairs": len(certs)}
    return Outcome(checks, summary, lines), doc


def cmd_hopf_check(args, settings):
    refs = list(RING_FIXTURES) if args.all else [args.input]
    if not refs or refs == [None]:
        raise InputError("give an input ring or --all")
    checks, summary, lines, docs = [], {}, [], {}
    for ref in refs:
        ring, doc = _ring(ref)
        docs[ref] = doc
        rep, summ = hopf_check(ring, settings)
        summary[ring.name] = summ
        prefix = f"{ring.name}:" if len(refs) > 1 else ""
        checks.extend(Check(prefix + c.name, c.passed, c.witness, c.detail) for c in rep)
        lines.append(f"{ring.name}: {rep.summary()}")
        lines.extend(f"  {c.name}: {c.status}" + ("" if c.passed else f"  witness {jsonable(c.witness)}")
                     for c in rep)
        if summ.get("not_pairs"):
            lines.append(f"  not Mackey pairs (informational): {', '.join(summ['not_pairs'])}")
    return Outcome(checks, summary, lines), docs


def cmd_group(args, settings):
    doc = read_document(args.input)
    G = group_from_document(doc)
    rep, counts = exhaustive_oracle(G)
    lines = [f"{G.name or 'group'} of order {G.order}, {len(G.subgroups(settings.max_group_order))} subgroups"]
    lines += [f"  {c.name}: {c.status} ({counts.get(c.name, 0)} cases)" for c in rep]
    return Outcome(list(rep), counts, lines), doc


def cmd_green(args, settings):
    doc = read_document(args.input)
    if "table" in doc:
        datum = classical_instance(group_from_document(doc))
    else:
        datum = datum_from_document(doc)
    if args.ring is not None:
        ring, rdoc = _ring(args.ring)
        datum = grading_instance(ring, datum)
        doc = {"datum": doc, "ring": rdoc}
    seed = args.seed if args.seed is not None else settings.seed
    rep = verify_green(datum, fail_fast=args.fail_fast)
    checks = list(rep)
    if seed is not None:
        rnd = verify_green(datum, seed=seed, axioms=(5,))
        checks.append(Check("axiom5_random_representatives", rnd.passed, rnd["axiom5"].witness))
    lines = [f"Green functor datum {datum.name} over {len(datum.subgroups)} subgroups"]
    lines += [f"  {c.name}: {c.status}" + ("" if c.passed else f"  witness {jsonable(c.witness)[:3]}")
              for c in checks]
    return Outcome(checks, {"subgroups": len(datum.subgroups)}, lines, seed=seed), doc


COMMANDS = {
    "validate": cmd_validate, "subring": cmd_subring, "integral": cmd_integral, "cosets": cmd_cosets,
    "conjugate": cmd_conjugate, "mackey": cmd_mackey, "grading": cmd_grading, "hopf-check": cmd_hopf_check,
    "group": cmd_group, "green": cmd_green,
}


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="print a JSON certificate")
    p.add_argument("--tol", type=float, default=d(DEFAULT.tol), help="power-iteration tolerance")
    p.add_argument("--max-iter", type=int, default=d(DEFAULT.max_iter), help="power-iteration step limit")
    p.add_argument("--seed", type=int, default=d(None), help="seed for randomized representatives")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfmackey", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    _global_flags(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, input_required=True):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", nargs=None if input_required else "?",
                        help="JSON file or shipped fixture name")
        _global_flags(sp, suppress=True)
        return sp

    add("validate", "check the based-ring axioms")
    sp = add("subring", "enumerate subrings, or generate one")
    sp.add_argument("--generators", help="comma-separated basis labels")
    sp = add("integral", "idempotent integral of a subring")
    sp.add_argument("--members", help="comma-separated basis labels of the subring")
    sp = add("cosets", "right cosets CK, or double cosets LCK with --left")
    sp.add_argument("--right", help="subring K")
    sp.add_argument("--left", help="subring L")
    sp = add("conjugate", "conjugate subring of K at a basis element")
    sp.add_argument("--subring", help="subring K")
    sp.add_argument("--at", help="basis element c")
    sp = add("mackey", "Mackey-pair certificate for (L, K)")
    sp.add_argument("--left", help="subring L")
    sp.add_argument("--right", help="subring K")
    add("grading", "universal grading and graded Mackey pairs")
    sp = add("hopf-check", "full invariant suite", input_required=False)
    sp.add_argument("--all", action="store_true", help="run on every shipped ring fixture")
    add("group", "classical character identities on a group table")
    sp = add("green", "verify Green functor axioms (group table or datum file)")
    sp.add_argument("--ring", help="assemble over the universal grading group of this ring")
    sp.add_argument("--fail-fast", action="store_true", help="stop at the first violated axiom")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = replace(DEFAULT, tol=args.tol, max_iter=args.max_iter, seed=args.seed)
    if settings.tol <= 0 or settings.max_iter <= 0:
        print("error: --tol and --max-iter must be positive", file=sys.stderr)
        return 2
    try:
        outcome, inputs = COMMANDS[args.command](args, settings)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        outcome = Outcome([Check(type(exc).__name__, False, exc.witness, str(exc))],
                          lines=[f"verification failed: {exc}"])
        inputs = {"command": args.command, "input": args.input}
    except HopfMackeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        cert = certificate(args.command, inputs, outcome.checks, outcome.summary, outcome.seed)
        print(json.dumps(cert, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print("\n".join(outcome.lines))
        verdict = "PASS" if outcome.passed else "FAIL"
        print(f"{verdict}: {sum(c.passed for c in outcome.checks)}/{len(outcome.checks)} checks")
    return 0 if outcome.passed else 1


if __name__ == "__main__":
    sys.exit(main())
