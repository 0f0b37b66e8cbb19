"""JSON documents for rings, groups, Green functor data and certificates.

All numbers in files are integers (rationals are written as ``[num, den]``),
so documents and certificates are exactly reproducible.
"""
from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from . import __version__
from .errors import MalformedDatum, MalformedTable, UnknownFixture
from .groups.finite_group import FiniteGroup, cyclic_group
from .report import Check
from .ring_core import FusionRing, require_valid

DATA = "data"


def canonical_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def digest(doc: Any) -> str:
    return hashlib.sha256(canonical_json(doc).encode("utf-8")).hexdigest()


# -- rings ---------------------------------------------------------------
def ring_to_document(ring: FusionRing) -> dict:
    products = []
    for c in range(ring.n):
        for d in range(ring.n):
            products.append({"left": c, "right": d,
                             "terms": [[e, m] for e, m in sorted(ring.product(c, d).items())]})
    return {"name": ring.name, "basis": list(ring.basis), "unit": ring.unit, "dual": list(ring.dual),
            "dims": list(ring.dims), "products": products}


def _require(doc: dict, key: str, kind):
    if not isinstance(doc, dict):
        raise MalformedTable("document must be a JSON object")
    if key not in doc:
        raise MalformedTable(f"missing field {key!r}")
    val = doc[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise MalformedTable(f"field {key!r} has the wrong type")
    return val


def ring_from_document(doc: dict, validate: bool = True) -> FusionRing:
    """Parse a ring document; with ``validate`` the ring axioms must hold."""
    name = doc.get("name", "ring") if isinstance(doc, dict) else "ring"
    basis = _require(doc, "basis", list)
    unit = _require(doc, "unit", int)
    dual = _require(doc, "dual", list)
    dims = _require(doc, "dims", list)
    prods = _require(doc, "products", list)
    table = {}
    for k, entry in enumerate(prods):
        if not isinstance(entry, dict):
            raise MalformedTable(f"products[{k}] must be an object")
        c, d = _require(entry, "left", int), _require(entry, "right", int)
        terms = _require(entry, "terms", list)
        if (c, d) in table:
            raise MalformedTable(f"duplicate product entry ({c}, {d})")
        parsed = []
        for t in terms:
            if not (isinstance(t, list) and len(t) == 2 and all(isinstance(x, int) for x in t)):
                raise MalformedTable(f"products[{k}].terms entries must be [index, multiplicity]")
            parsed.append((t[0], t[1]))
        table[(c, d)] = parsed
    ring = FusionRing(str(name), [str(b) for b in basis], unit, dual, dims, table)
    return require_valid(ring) if validate else ring


# -- groups --------------------------------------------------------------
def group_to_document(G: FiniteGroup) -> dict:
    doc = {"name": G.name, "order": G.order, "table": [list(r) for r in G.table], "labels": list(G.labels)}
    if G.nonlinear_characters:
        doc["characters"] = [list(v) for v in G.nonlinear_characters]
    return doc


def group_from_document(doc: dict) -> FiniteGroup:
    order = _require(doc, "order", int)
    table = _require(doc, "table", list)
    if len(table) != order:
        raise MalformedTable("table size differs from order")
    return FiniteGroup(table, name=str(doc.get("name", "")), labels=doc.get("labels"),
                       nonlinear_characters=doc.get("characters", ()))


# -- Green functor data --------------------------------------------------
def datum_to_document(d) -> dict:
    subs = list(d.subgroups)
    pos = {S: k for k, S in enumerate(subs)}
    return {
        "name": d.name,
        "group": group_to_document(d.group),
        "subgroups": [list(S) for S in subs],
        "rings": [ring_to_document(d.rings[S]) for S in subs],
        "induction": [{"from": pos[K], "to": pos[L], "matrix": [list(r) for r in M]}
                      for (K, L), M in sorted(d.induction.items(), key=lambda kv: (pos[kv[0][0]], pos[kv[0][1]]))],
        "restriction": [{"from": pos[L], "to": pos[K], "matrix": [list(r) for r in M]}
                        for (L, K), M in sorted(d.restriction.items(), key=lambda kv: (pos[kv[0][0]], pos[kv[0][1]]))],
        "conjugation": [{"element": g, "subgroup": pos[K], "matrix": [list(r) for r in M]}
                        for (g, K), M in sorted(d.conjugation.items(), key=lambda kv: (kv[0][0], pos[kv[0][1]]))],
    }


def datum_from_document(doc: dict):
    """Parse a Green functor datum; any structural problem is a MalformedDatum."""
    from .green import GreenFunctorDatum

    try:
        G = group_from_document(doc["group"])
        subs = tuple(tuple(S) for S in doc["subgroups"])
        ring_docs = doc["rings"]
        if len(ring_docs) != len(subs):
            raise MalformedDatum("one ring per subgroup required")
        rings = {S: ring_from_document(r) for S, r in zip(subs, ring_docs)}

        def sub(i):
            if not isinstance(i, int) or not 0 <= i < len(subs):
                raise MalformedDatum(f"subgroup index {i!r} out of range")
            return subs[i]

        def mat(e):
            return tuple(tuple(r) for r in e["matrix"])

        ind = {(sub(e["from"]), sub(e["to"])): mat(e) for e in doc["induction"]}
        res = {(sub(e["from"]), sub(e["to"])): mat(e) for e in doc["restriction"]}
        con = {(e["element"], sub(e["subgroup"])): mat(e) for e in doc["conjugation"]}
    except MalformedDatum:
        raise
    except (KeyError, TypeError, MalformedTable) as exc:
        raise MalformedDatum(f"malformed Green functor datum: {exc}") from None
    return GreenFunctorDatum(G, subs, rings, ind, res, con, name=str(doc.get("name", "")))


# -- fixtures ------------------------------------------------------------
def _data_dir():
    return resources.files("hopfmackey").joinpath(DATA)


def manifest() -> dict[str, str]:
    return json.loads(_data_dir().joinpath("manifest.json").read_text("utf-8"))


def fixture_names() -> list[str]:
    return sorted(manifest())


RING_FIXTURES = ("ks3", "kd4", "rep_s3", "rep_d4", "rep_q8", "rep_a4")
GROUP_FIXTURES = ("group_s3", "group_d4", "group_q8", "group_a4")


def load_fixture(name: str) -> dict:
    """Return a shipped (digest-checked) document; ``group_zN``/``kzN`` are built on the fly."""
    m = re.fullmatch(r"(group_z|kz)(\d+)", name)
    if m and 1 <= int(m.group(2)) <= 12:
        G = cyclic_group(int(m.group(2)))
        if m.group(1) == "group_z":
            return group_to_document(G)
        from .groups.fusion import group_fusion_ring
        return ring_to_document(group_fusion_ring(G, name=f"kZ{m.group(2)}"))
    man = manifest()
    if name not in man:
        raise UnknownFixture(f"unknown fixture {name!r}")
    doc = json.loads(_data_dir().joinpath(f"{name}.json").read_text("utf-8"))
    if digest(doc) != man[name]:
        raise MalformedTable(f"fixture {name!r} does not match its manifest digest")
    return doc


def load_ring(name: str) -> FusionRing:
    return ring_from_document(load_fixture(name))


def load_group(name: str) -> FiniteGroup:
    return group_from_document(load_fixture(name))


def read_document(ref: str) -> dict:
    """Load a JSON file, falling back to the shipped fixture named by the file stem."""
    p = Path(ref)
    if p.is_file():
        try:
            return json.loads(p.read_text("utf-8"))
        except json.JSONDecodeError as exc:
            raise MalformedTable(f"{ref}: invalid JSON ({exc})") from None
    return load_fixture(p.stem if p.suffix == ".json" else ref)


# -- certificates --------------------------------------------------------
def jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else [x.numerator, x.denominator]
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not allowed in certificates")
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in x]
        return sorted(items, key=canonical_json) if isinstance(x, (set, frozenset)) else items
    if hasattr(x, "members"):
        return list(x.members)
    return str(x)


def certificate(command: str, inputs: Any, checks: list[Check], summary: Any = None,
                seed: int | None = None) -> dict:
    rows = sorted(({"name": c.name, "status": c.status, "witness": jsonable(c.witness)} for c in checks),
                  key=lambda r: (r["name"], canonical_json(r["witness"])))
    cert = {"command": command, "inputs_digest": digest(inputs), "checks": rows,
            "summary": jsonable(summary) if summary is not None else
            {"passed": sum(r["status"] == "pass" for r in rows), "total": len(rows)},
            "tool_version": __version__}
    if seed is not None:
        cert["seed"] = seed
    return cert
