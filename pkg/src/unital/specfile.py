"""JSON input files describing complexes, crossed modules, and covers.

The format is versioned UTF-8 JSON.  Matrices are row-major integer arrays
(rows indexed by target generators).  A minimal 2-term complex:

    {"schema": "unital/1",
     "kind": "complex2",
     "groups": {"A": {"inv": [2]}, "B": {"inv": [4]}},
     "maps": {"lambda": [[2]]}}

Groups are given by invariant factors plus an optional free rank and must
already be in canonical form, since the matrices refer to their generators.
A cover may be attached under "nerve" (parts plus intersection table), or
supplied separately.  Errors carry the JSON path of the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .abelian import FgAbGroup, GroupHom
from .cech import Cover, cover_of_parts
from .complexes import Complex2, Complex3
from .crossed import CrossedModule, FiniteGroup

SCHEMA = "unital/1"
KINDS = ("complex2", "complex3", "crossed_module")


class SpecError(ValueError):
    """Input file rejected; the message starts with the JSON path."""


@dataclass(frozen=True)
class ComplexSpecFile:
    kind: str
    payload: object           # Complex2 | Complex3 | CrossedModule
    cover: Cover | None
    raw: dict                 # canonicalized source document

    def canonical_text(self):
        return json.dumps(self.raw, sort_keys=True, separators=(",", ":"))


def _need(doc, key, path, kind=None):
    if key not in doc:
        raise SpecError(f"{path}: missing required field {key!r}")
    val = doc[key]
    if kind is not None and not isinstance(val, kind):
        raise SpecError(f"{path}.{key}: expected {kind.__name__}")
    return val


def _parse_group(doc, path):
    if not isinstance(doc, dict):
        raise SpecError(f"{path}: expected an object with 'inv'/'free'")
    inv = doc.get("inv", [])
    free = doc.get("free", 0)
    if not isinstance(inv, list) or not all(isinstance(d, int) for d in inv):
        raise SpecError(f"{path}.inv: expected a list of integers")
    if not isinstance(free, int) or free < 0:
        raise SpecError(f"{path}.free: expected a nonnegative integer")
    try:
        return FgAbGroup(tuple(inv), free)
    except ValueError as exc:
        raise SpecError(f"{path}: {exc}") from None


def _parse_matrix(doc, path):
    if not isinstance(doc, list) or \
            not all(isinstance(r, list) and all(isinstance(x, int) for x in r)
                    for r in doc):
        raise SpecError(f"{path}: expected a row-major integer matrix")
    return doc


def _parse_hom(mat, src, tgt, path):
    rows = _parse_matrix(mat, path)
    if len(rows) != tgt.ngens or any(len(r) != src.ngens for r in rows):
        raise SpecError(f"{path}: matrix must be {tgt.ngens} x {src.ngens}")
    try:
        return GroupHom(src, tgt, rows)
    except ValueError as exc:
        raise SpecError(f"{path}: {exc}") from None


def _parse_cover(doc, path):
    parts = _need(doc, "parts", path, list)
    if not parts or not all(isinstance(p, str) for p in parts):
        raise SpecError(f"{path}.parts: expected a nonempty list of names")
    inters = []
    for k, entry in enumerate(doc.get("intersections", [])):
        epath = f"{path}.intersections[{k}]"
        names = _need(entry, "parts", epath, list)
        comps = entry.get("components", ["*"])
        for p in names:
            if p not in parts:
                raise SpecError(f"{epath}: unknown part {p!r}")
        inters.append((tuple(names), tuple(comps)))
    conts = []
    for k, entry in enumerate(doc.get("containments", [])):
        epath = f"{path}.containments[{k}]"
        conts.append((tuple(_need(entry, "parts", epath, list)),
                      _need(entry, "component", epath, str),
                      tuple(_need(entry, "sub_parts", epath, list)),
                      _need(entry, "sub_component", epath, str)))
    try:
        return cover_of_parts(parts, inters, conts)
    except ValueError as exc:
        raise SpecError(f"{path}: {exc}") from None


def _parse_finite_group(doc, path):
    table = _need(doc, "table", path, list)
    try:
        return FiniteGroup(table, doc.get("name", "G"))
    except ValueError as exc:
        raise SpecError(f"{path}: {exc}") from None


def parse_spec(text) -> ComplexSpecFile:
    """Parse and validate an input document; raises SpecError with the path
    of the first offending field."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"$: not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise SpecError("$: expected a JSON object")
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise SpecError(f"schema: unsupported version {schema!r}")
    kind = _need(doc, "kind", "$", str)
    if kind not in KINDS:
        raise SpecError(f"kind: expected one of {KINDS}")

    cover = _parse_cover(doc["nerve"], "nerve") if "nerve" in doc else None

    if kind in ("complex2", "complex3"):
        groups_doc = doc.get("groups", {})
        maps_doc = doc.get("maps", {})
        names = ("A", "B") if kind == "complex2" else ("A", "B", "C")
        groups = {n: _parse_group(groups_doc.get(n, {}), f"groups.{n}")
                  for n in names}
        if kind == "complex2":
            lam = _parse_hom(maps_doc.get("lambda", _zero(groups["A"],
                                                          groups["B"])),
                             groups["A"], groups["B"], "maps.lambda")
            payload = Complex2(groups["A"], groups["B"], lam)
        else:
            delta = _parse_hom(maps_doc.get("delta", _zero(groups["A"],
                                                           groups["B"])),
                               groups["A"], groups["B"], "maps.delta")
            lam = _parse_hom(maps_doc.get("lambda", _zero(groups["B"],
                                                          groups["C"])),
                             groups["B"], groups["C"], "maps.lambda")
            composite = lam.compose(delta)
            for j in range(groups["A"].ngens):
                col = groups["C"].reduce(row[j] for row in composite.matrix)
                if any(col):
                    raise SpecError(
                        f"maps: composite nonzero at generator {j}")
            payload = Complex3(groups["A"], groups["B"], groups["C"],
                               delta, lam)
    else:
        G = _parse_finite_group(_need(doc, "G", "$", dict), "G")
        H = _parse_finite_group(_need(doc, "H", "$", dict), "H")
        boundary = _need(doc, "boundary", "$", list)
        action = _parse_matrix(_need(doc, "action", "$", list), "action")
        try:
            payload = CrossedModule(G, H, boundary, action)
        except ValueError as exc:
            raise SpecError(f"$: {exc}") from None

    return ComplexSpecFile(kind, payload, cover, _canonical_doc(doc))


def _zero(src, tgt):
    return [[0] * src.ngens for _ in range(tgt.ngens)]


def _canonical_doc(doc):
    out = {"schema": SCHEMA}
    for key in sorted(doc):
        if key != "schema":
            out[key] = doc[key]
    return out


def print_spec(spec: ComplexSpecFile) -> str:
    """Serialize back to canonical JSON; parse(print(s)) == s."""
    return json.dumps(spec.raw, sort_keys=True, indent=2)
