"""Declarative JSON workspaces: a quiver, relations, named modules and pairs.

One JSON document describes everything a session needs:

    {
      "quiver": {"vertices": 3,
                 "arrows": [{"name": "a", "source": 1, "target": 2}, ...]},
      "relations": [["a", "b"], {"terms": [{"coeff": "1", "path": ["a", "b"]}]}],
      "modules": {"X1": "S2",
                  "X2": {"dims": [1, 1, 0], "maps": {"a": [["1"]], "c": []}}},
      "pairs": {"left": {"T": ["X1", "X2"], "P": ["X3"]}}
    }

Relation paths are written in application order (first-applied first); a bare
array is shorthand for a single monomial relation.  Module values are either
the shorthand strings P<i>, I<i>, S<i> or explicit dimension vectors with
per-arrow matrices whose entries are exact rationals written as strings
("1", "-2/3"; plain integers are also accepted).  Matrices have target-dim
rows and source-dim columns; missing arrows act as zero, and [] is the empty
matrix when either side has dimension zero.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg as la
from .algebra import AlgebraError, BoundQuiverAlgebra, Quiver, Relation, build_algebra
from .reps import Representation, RepresentationError, injective, projective, simple
from .tau import SupportPair


class WorkspaceError(Exception):
    """A parse or resolution problem, annotated with its position."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


@dataclass
class WorkspaceSpec:
    algebra: BoundQuiverAlgebra
    modules: dict[str, Representation]
    pairs: dict[str, SupportPair]


_SHORTHAND = re.compile(r"^([PIS])([0-9]+)$")


def _expect(cond: bool, where: str, message: str):
    if not cond:
        raise WorkspaceError(where, message)


def _parse_scalar(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise WorkspaceError(where, f"entry {value!r} is not an exact rational; "
                                    "write it as a string like \"1/2\"")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise WorkspaceError(where, f"bad rational {value!r}: {exc}") from None
    raise WorkspaceError(where, f"entry {value!r} is not a rational")


def _parse_matrix(value, rows: int, cols: int, where: str):
    _expect(isinstance(value, list), where, "matrix must be an array of rows")
    if value == [] and (rows == 0 or cols == 0):
        return la.zeros(rows, cols)
    _expect(len(value) == rows, where, f"expected {rows} rows, got {len(value)}")
    out = la.zeros(rows, cols)
    for i, row in enumerate(value):
        _expect(isinstance(row, list) and len(row) == cols, f"{where}[{i}]",
                f"expected {cols} entries")
        for j, entry in enumerate(row):
            out[i, j] = _parse_scalar(entry, f"{where}[{i}][{j}]")
    return out


def _parse_quiver(doc, where: str) -> Quiver:
    _expect(isinstance(doc, dict), where, "quiver must be an object")
    _expect(isinstance(doc.get("vertices"), int) and doc["vertices"] > 0,
            f"{where}.vertices", "a positive vertex count is required")
    arrows = doc.get("arrows", [])
    _expect(isinstance(arrows, list), f"{where}.arrows", "arrows must be an array")
    parsed = []
    for k, a in enumerate(arrows):
        loc = f"{where}.arrows[{k}]"
        _expect(isinstance(a, dict), loc, "arrow must be an object")
        for key in ("name", "source", "target"):
            _expect(key in a, loc, f"missing {key!r}")
        parsed.append((a["name"], a["source"], a["target"]))
    try:
        return Quiver(doc["vertices"], parsed)
    except (ValueError, KeyError) as exc:
        raise WorkspaceError(where, str(exc)) from None


def _parse_relation(doc, quiver: Quiver, where: str) -> Relation:
    if isinstance(doc, list):
        doc = {"terms": [{"coeff": 1, "path": doc}]}
    _expect(isinstance(doc, dict) and "terms" in doc, where,
            "relation must be a path array or an object with terms")
    terms = []
    for k, term in enumerate(doc["terms"]):
        loc = f"{where}.terms[{k}]"
        _expect(isinstance(term, dict) and "path" in term, loc, "term needs a path")
        path = term["path"]
        _expect(isinstance(path, list) and all(isinstance(x, str) for x in path),
                f"{loc}.path", "path must be an array of arrow names")
        for name in path:
            _expect(name in {a.name for a in quiver.arrows}, f"{loc}.path",
                    f"unknown arrow {name!r}")
        coeff = _parse_scalar(term.get("coeff", 1), f"{loc}.coeff")
        terms.append((coeff, tuple(path)))
    return Relation(terms)


def _parse_module(name: str, doc, alg: BoundQuiverAlgebra, where: str) -> Representation:
    if isinstance(doc, str):
        match = _SHORTHAND.match(doc)
        _expect(match is not None, where,
                f"unknown shorthand {doc!r}; use P<i>, I<i>, S<i> or an explicit module")
        kind, vertex = match.group(1), int(match.group(2))
        _expect(1 <= vertex <= alg.n, where, f"vertex {vertex} outside 1..{alg.n}")
        return {"P": projective, "I": injective, "S": simple}[kind](alg, vertex)
    _expect(isinstance(doc, dict) and "dims" in doc, where,
            "module must be a shorthand string or an object with dims")
    dims = doc["dims"]
    _expect(isinstance(dims, list) and len(dims) == alg.n
            and all(isinstance(d, int) and d >= 0 for d in dims),
            f"{where}.dims", f"dims must be {alg.n} nonnegative integers")
    maps = {}
    for arrow_name, matrix in doc.get("maps", {}).items():
        loc = f"{where}.maps.{arrow_name}"
        try:
            arrow = alg.quiver.arrow(arrow_name)
        except KeyError:
            raise WorkspaceError(loc, f"unknown arrow {arrow_name!r}") from None
        if matrix is None:
            continue
        maps[arrow_name] = _parse_matrix(matrix, dims[arrow.target - 1],
                                         dims[arrow.source - 1], loc)
    try:
        return Representation(alg, dims, maps)
    except RepresentationError as exc:
        raise WorkspaceError(where, str(exc)) from None


def parse_workspace(path: str, max_path_length: Optional[int] = None) -> WorkspaceSpec:
    """Load and fully resolve a workspace file.

    Raises :class:`WorkspaceError` with a position annotation on any problem:
    malformed JSON, unknown arrow names, matrix shape mismatches, dangling
    module names in pairs.
    """
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise WorkspaceError(path, str(exc)) from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WorkspaceError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None
    _expect(isinstance(doc, dict), path, "workspace must be a JSON object")
    _expect("quiver" in doc, path, "missing quiver section")

    quiver = _parse_quiver(doc["quiver"], "quiver")
    relations = [_parse_relation(r, quiver, f"relations[{k}]")
                 for k, r in enumerate(doc.get("relations", []))]
    kwargs = {}
    if max_path_length is not None:
        kwargs["max_path_length"] = max_path_length
    try:
        alg = build_algebra(quiver, relations, **kwargs)
    except AlgebraError as exc:
        raise WorkspaceError("relations", str(exc)) from None

    modules = {}
    module_docs = doc.get("modules", {})
    _expect(isinstance(module_docs, dict), "modules", "modules must be an object")
    for name, mdoc in module_docs.items():
        modules[name] = _parse_module(name, mdoc, alg, f"modules.{name}")

    pairs = {}
    pair_docs = doc.get("pairs", {})
    _expect(isinstance(pair_docs, dict), "pairs", "pairs must be an object")
    for name, pdoc in pair_docs.items():
        loc = f"pairs.{name}"
        _expect(isinstance(pdoc, dict), loc, "pair must be an object")
        lists = {}
        for side in ("T", "P"):
            entries = pdoc.get(side, [])
            _expect(isinstance(entries, list), f"{loc}.{side}", "must be an array of names")
            resolved = []
            for label in entries:
                _expect(label in modules, f"{loc}.{side}",
                        f"dangling module name {label!r}")
                resolved.append(modules[label])
            lists[side] = (list(entries), resolved)
        pairs[name] = SupportPair(alg, lists["T"][1], lists["P"][1], name,
                                  summand_names=lists["T"][0] + lists["P"][0])
    return WorkspaceSpec(alg, modules, pairs)
