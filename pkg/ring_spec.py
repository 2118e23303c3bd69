# ring_spec.py
"""
Declarative ring specifications (JSON).

A document is either a ring node or {"defs": {name: node}, "ring": node}, where
any node may be {"ref": name}. Ring nodes carry a "type":

    cyclic              {"n": 6}
    product             {"factors": [node, ...]}
    monomial_quotient   {"modulus": 2, "variables": ["x"], "relations": ["x^3"]}
    table               {"add": [[..]], "mul": [[..]], "zero": 0, "one": 1}
    triangular          {"base": node, "n": 3, "side": "upper"} or {"base": node, "pattern": [[..]]}
    matrix              {"base": node, "n": 2}
    quotient            {"base": node, "ideal": [element, ...]}
    gmr                 ambient form:  {"ambient": node, "entries": [[entry, ..], ..],
                                        "thetas": {"1,2,1": "ambient" | "zero", ...}}
                        explicit form: {"diagonal": [node, ..],
                                        "bimodules": {"1,2": {"type": "tables", "group": node,
                                                              "left": [[..]], "right": [[..]]}},
                                        "thetas": {"1,2,1": "zero" | {"type": "tables",
                                                                     "table": [[..]]}}}

Entries of the ambient form are "ring", "zero" or {"ideal" | "subring" |
"quotient": [element, ...]}. Elements are JSON encodings (lists for tuples) or
strings such as "x^2" or "1+x" for monomial quotients. Table entries are
indices into element_list of the carriers involved. Refs are inlined when the
document is parsed, so rendering a parsed spec gives a self-contained document.
"""

import itertools
import json
import logging
import os
import re
from dataclasses import dataclass, field
from functools import lru_cache

import jsonschema

from errors import RingError, SpecError
from gmr import (ZERO_PAIRING, Bimodule, Entry, GmrRing, Pairing, matrix_ring, pattern_ring,
                 theta_from_ambient, triangular_ring)
from ring_core import (MonomialQuotientRing, ideal_generated, make_cyclic,
                       make_monomial_quotient, make_product, make_table_ring, parse_monomial,
                       quotient_ring)

logger = logging.getLogger(__name__)

KINDS = ("cyclic", "product", "monomial_quotient", "table", "triangular", "matrix",
         "quotient", "gmr")
ENTRY_KINDS = ("ideal", "subring", "quotient")
_SYMBOLIC_UNITS = re.compile(r"^E\d\d(\+E\d\d)*$")
SCHEMA_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data",
                           "ring_spec.schema.json")


@dataclass
class RingSpec:
    kind: str
    fields: dict
    path: str = field(default="$", compare=False)

    @property
    def label(self):
        return self.fields.get("label")


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def _require(node, key, path):
    if key not in node:
        raise SpecError(f"missing field {key!r}", path=path)
    return node[key]


def _integer(value, path, minimum=None):
    if not isinstance(value, int) or isinstance(value, bool):
        raise SpecError(f"expected an integer, got {value!r}", path=path)
    if minimum is not None and value < minimum:
        raise SpecError(f"must be at least {minimum}, got {value}", path=path)
    return value


def _matrix(value, path, rows=None, cols=None):
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise SpecError("expected a list of rows", path=path)
    if rows is not None and len(value) != rows:
        raise SpecError(f"expected {rows} rows, got {len(value)}", path=path)
    for i, row in enumerate(value):
        if cols is not None and len(row) != cols:
            raise SpecError(f"expected {cols} columns, got {len(row)}", path=f"{path}[{i}]")
        for j, v in enumerate(row):
            _integer(v, f"{path}[{i}][{j}]", minimum=0)
    return value


def _triples(n):
    return [(i, j, k) for i, j, k in itertools.product(range(1, n + 1), repeat=3)
            if i != j and j != k]


def _pairs(n):
    return list(itertools.permutations(range(1, n + 1), 2))


def _key(*indices):
    return ",".join(str(i) for i in indices)


def _parse_key(text, size, path):
    try:
        parts = tuple(int(p) for p in str(text).replace(" ", "").strip("()").split(","))
    except ValueError:
        raise SpecError(f"bad index key {text!r}", path=path) from None
    if len(parts) != size:
        raise SpecError(f"key {text!r} needs {size} indices", path=path)
    return parts


def parse_ring_spec(document):
    """Validate a spec document and return the RingSpec it describes."""
    if isinstance(document, dict) and "ring" in document and "type" not in document:
        defs = document.get("defs", {})
        if not isinstance(defs, dict):
            raise SpecError("defs must be an object", path="$.defs")
        return _parse(document["ring"], "$.ring", defs, ())
    return _parse(document, "$", {}, ())


def _parse(node, path, defs, resolving):
    if isinstance(node, dict) and set(node) == {"ref"}:
        name = node["ref"]
        if name in resolving:
            raise SpecError(f"reference cycle through {' -> '.join(resolving + (name,))}",
                            path=path)
        if name not in defs:
            raise SpecError(f"unresolved reference {name!r}", path=path)
        return _parse(defs[name], f"$.defs.{name}", defs, resolving + (name,))
    if not isinstance(node, dict):
        raise SpecError("expected an object", path=path)
    kind = _require(node, "type", path)
    if kind not in KINDS:
        raise SpecError(f"unknown ring type {kind!r}", path=f"{path}.type")
    parser = _PARSERS[kind]
    fields = parser(node, path, lambda sub, p: _parse(sub, p, defs, resolving))
    if "label" in node:
        fields["label"] = str(node["label"])
    return RingSpec(kind, fields, path)


def _parse_cyclic(node, path, sub):
    return {"n": _integer(_require(node, "n", path), f"{path}.n", minimum=1)}


def _parse_product(node, path, sub):
    factors = _require(node, "factors", path)
    if not isinstance(factors, list) or not factors:
        raise SpecError("factors must be a nonempty list", path=f"{path}.factors")
    return {"factors": [sub(f, f"{path}.factors[{i}]") for i, f in enumerate(factors)]}


def _parse_monomial(node, path, sub):
    modulus = _integer(_require(node, "modulus", path), f"{path}.modulus", minimum=2)
    variables = _require(node, "variables", path)
    relations = _require(node, "relations", path)
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise SpecError("variables must be a list of names", path=f"{path}.variables")
    if not isinstance(relations, list):
        raise SpecError("relations must be a list of monomials", path=f"{path}.relations")
    exps = []
    for i, r in enumerate(relations):
        try:
            exps.append(parse_monomial(r, variables))
        except RingError as exc:
            raise SpecError(str(exc), path=f"{path}.relations[{i}]") from None
    for v, name in enumerate(variables):
        if not any(e[v] > 0 and all(x == 0 for w, x in enumerate(e) if w != v) for e in exps):
            raise SpecError(f"variable {name} has no power relation, so the ring is infinite",
                            path=f"{path}.relations")
    return {"modulus": modulus, "variables": list(variables), "relations": list(relations)}


def _parse_table(node, path, sub):
    add = _require(node, "add", path)
    size = len(add) if isinstance(add, list) else 0
    fields = {"add": _matrix(add, f"{path}.add", cols=size),
              "mul": _matrix(_require(node, "mul", path), f"{path}.mul", size, size),
              "zero": _integer(_require(node, "zero", path), f"{path}.zero", minimum=0),
              "one": _integer(_require(node, "one", path), f"{path}.one", minimum=0)}
    return fields


def _parse_pattern(value, path):
    pattern = _matrix(value, path, rows=len(value) if isinstance(value, list) else None,
                      cols=len(value) if isinstance(value, list) else None)
    if any(v not in (0, 1) for row in pattern for v in row):
        raise SpecError("pattern entries must be 0 or 1", path=path)
    return pattern


def _parse_triangular(node, path, sub):
    fields = {"base": sub(_require(node, "base", path), f"{path}.base")}
    if "pattern" in node:
        fields["pattern"] = _parse_pattern(node["pattern"], f"{path}.pattern")
        if "n" in node and node["n"] != len(fields["pattern"]):
            raise SpecError("n does not match the pattern", path=f"{path}.n")
        return fields
    fields["n"] = _integer(_require(node, "n", path), f"{path}.n", minimum=1)
    side = node.get("side", "upper")
    if side not in ("upper", "lower"):
        raise SpecError(f"side must be 'upper' or 'lower', got {side!r}", path=f"{path}.side")
    fields["side"] = side
    return fields


def _parse_matrix(node, path, sub):
    return {"base": sub(_require(node, "base", path), f"{path}.base"),
            "n": _integer(_require(node, "n", path), f"{path}.n", minimum=1)}


def _parse_quotient(node, path, sub):
    gens = _require(node, "ideal", path)
    if not isinstance(gens, list):
        raise SpecError("ideal must be a list of elements", path=f"{path}.ideal")
    return {"base": sub(_require(node, "base", path), f"{path}.base"), "ideal": gens}


def _parse_entry(value, path):
    if value in ("ring", "zero"):
        return value
    if isinstance(value, dict) and len(value) == 1:
        (kind, gens), = value.items()
        if kind in ENTRY_KINDS and isinstance(gens, list):
            return {kind: gens}
    raise SpecError("entry must be 'ring', 'zero' or {ideal|subring|quotient: [elements]}",
                    path=path)


def _parse_thetas(node, path, n, allowed, required):
    thetas = node.get("thetas")
    if thetas is None:
        if required:
            first = _key(*_triples(n)[0])
            raise SpecError(f"missing theta for ({first})", path=f"{path}.thetas")
        return None
    if not isinstance(thetas, dict):
        raise SpecError("thetas must be an object keyed by 'i,j,k'", path=f"{path}.thetas")
    parsed = {}
    for key, value in thetas.items():
        triple = _parse_key(key, 3, f"{path}.thetas")
        if triple not in _triples(n):
            raise SpecError(f"{triple} is not a theta position for n = {n}",
                            path=f"{path}.thetas")
        where = f"{path}.thetas.{_key(*triple)}"
        if isinstance(value, str):
            if value not in allowed:
                raise SpecError(f"theta must be one of {allowed}, got {value!r}", path=where)
        elif isinstance(value, dict) and value.get("type") == "tables" and "tables" in allowed:
            value = {"type": "tables", "table": _matrix(_require(value, "table", where),
                                                        f"{where}.table")}
        else:
            raise SpecError(f"theta must be one of {allowed}", path=where)
        parsed[_key(*triple)] = value
    for triple in _triples(n):
        if _key(*triple) not in parsed:
            raise SpecError(f"missing theta for ({_key(*triple)})", path=f"{path}.thetas",
                            triple=f"({_key(*triple)})")
    return parsed


def _parse_gmr(node, path, sub):
    if "ambient" in node:
        entries = _require(node, "entries", path)
        n = len(entries) if isinstance(entries, list) else 0
        if n < 1 or not all(isinstance(row, list) and len(row) == n for row in entries):
            raise SpecError("entries must form a square grid", path=f"{path}.entries")
        if "n" in node and node["n"] != n:
            raise SpecError(f"n = {node['n']} but the grid is {n} x {n}", path=f"{path}.n")
        grid = [[_parse_entry(entries[i][j], f"{path}.entries[{i}][{j}]") for j in range(n)]
                for i in range(n)]
        for i in range(n):
            if grid[i][i] == "zero":
                raise SpecError("diagonal entries must be rings", path=f"{path}.entries[{i}][{i}]")
        fields = {"n": n, "ambient": sub(node["ambient"], f"{path}.ambient"), "entries": grid}
        thetas = _parse_thetas(node, path, n, ("ambient", "zero"), required=False)
        if thetas is not None:
            fields["thetas"] = thetas
        return fields
    diagonal = _require(node, "diagonal", path)
    if not isinstance(diagonal, list) or not diagonal:
        raise SpecError("diagonal must be a nonempty list of rings", path=f"{path}.diagonal")
    n = len(diagonal)
    if "n" in node and node["n"] != n:
        raise SpecError(f"n = {node['n']} but {n} diagonal rings are given", path=f"{path}.n")
    bimodules = _require(node, "bimodules", path)
    if not isinstance(bimodules, dict):
        raise SpecError("bimodules must be an object keyed by 'i,j'", path=f"{path}.bimodules")
    parsed = {}
    for key, value in bimodules.items():
        pair = _parse_key(key, 2, f"{path}.bimodules")
        where = f"{path}.bimodules.{_key(*pair)}"
        if pair not in _pairs(n):
            raise SpecError(f"{pair} is not an off-diagonal position", path=where)
        if not isinstance(value, dict) or value.get("type") != "tables":
            raise SpecError("explicit bimodules must be {type: tables, group, left, right}",
                            path=where)
        parsed[_key(*pair)] = {"type": "tables",
                               "group": sub(_require(value, "group", where), f"{where}.group"),
                               "left": _matrix(_require(value, "left", where), f"{where}.left"),
                               "right": _matrix(_require(value, "right", where),
                                                f"{where}.right")}
    for pair in _pairs(n):
        if _key(*pair) not in parsed:
            raise SpecError(f"missing bimodule for ({_key(*pair)})", path=f"{path}.bimodules")
    return {"n": n,
            "diagonal": [sub(d, f"{path}.diagonal[{i}]") for i, d in enumerate(diagonal)],
            "bimodules": parsed,
            "thetas": _parse_thetas(node, path, n, ("zero", "tables"), required=True)}


_PARSERS = {
    "cyclic": _parse_cyclic,
    "product": _parse_product,
    "monomial_quotient": _parse_monomial,
    "table": _parse_table,
    "triangular": _parse_triangular,
    "matrix": _parse_matrix,
    "quotient": _parse_quotient,
    "gmr": _parse_gmr,
}


def load_spec(path):
    """Read and parse a spec file."""
    try:
        with open(path, encoding="utf-8") as handle:
            document = json.load(handle)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path} is not JSON: {exc.msg} at line {exc.lineno}") from None
    validate_document(document)
    return parse_ring_spec(document)


@lru_cache(maxsize=1)
def _schema():
    with open(SCHEMA_PATH, encoding="utf-8") as handle:
        return json.load(handle)


def _json_path(parts):
    return "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in parts)


def validate_document(document):
    """Check a spec document against data/ring_spec.schema.json."""
    try:
        jsonschema.validate(instance=document, schema=_schema())
    except jsonschema.ValidationError as exc:
        raise SpecError(f"does not match the ring spec schema: {exc.message}",
                        path=_json_path(exc.absolute_path)) from None


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def render_ring_spec(spec):
    """The canonical JSON document for a parsed spec."""
    document = {"type": spec.kind}
    for key, value in spec.fields.items():
        document[key] = _render_value(value)
    return document


def _render_value(value):
    if isinstance(value, RingSpec):
        return render_ring_spec(value)
    if isinstance(value, dict):
        return {k: _render_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_render_value(v) for v in value]
    return value


def dump_spec(spec):
    return json.dumps(render_ring_spec(spec), indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# Building
# ---------------------------------------------------------------------------

def _encoding(value):
    if isinstance(value, list):
        return tuple(_encoding(v) for v in value)
    return value


def parse_element(ring, value, path="$"):
    """A ring element from a JSON value or its text form."""
    if isinstance(value, str):
        text = value.replace(" ", "")
        if isinstance(ring, GmrRing) and _SYMBOLIC_UNITS.match(text):
            return _matrix_units(ring, text, path)
        if isinstance(ring, MonomialQuotientRing) and not text.startswith(("[", "(")):
            return _polynomial(ring, text, path)
        try:
            value = json.loads(text.replace("(", "[").replace(")", "]"))
        except json.JSONDecodeError:
            raise SpecError(f"cannot read element {value!r}", path=path) from None
    x = _encoding(value)
    if not ring.contains(x):
        raise SpecError(f"{value!r} is not an element of {ring.label}", path=path)
    return x


def _matrix_units(ring, text, path):
    total = ring.zero
    for term in text.split("+"):
        i, j = int(term[1]) - 1, int(term[2]) - 1
        if not (0 <= i < ring.n and 0 <= j < ring.n):
            raise SpecError(f"{term} is outside a {ring.n} x {ring.n} ring", path=path)
        one = ring.diagonal[i].one
        if not ring.carriers[i][j].contains(one):
            raise SpecError(f"{term}: position ({i + 1},{j + 1}) does not contain 1", path=path)
        total = ring.add(total, ring.single(i, j, one))
    return total


def _polynomial(ring, text, path):
    total = ring.zero
    for term in text.split("+"):
        coefficient, _, monomial = term.partition("*") if term[:1].isdigit() else ("1", "", term)
        try:
            if monomial in ("", "1"):
                value = ring.one
            else:
                value = ring.monomial(monomial)
            total = ring.add(total, ring.multiple(value, int(coefficient) % ring.modulus))
        except (RingError, ValueError):
            raise SpecError(f"cannot read polynomial term {term!r}", path=path) from None
    return total


def parse_idempotents(ring, text):
    """'diagonal', a JSON list of encodings, or comma separated E-sums."""
    text = text.strip()
    if text == "diagonal":
        if not isinstance(ring, GmrRing):
            raise SpecError("'diagonal' needs a generalized matrix ring", path="--set")
        return ring.diagonal_units()
    if text.startswith("["):
        try:
            values = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(f"bad idempotent list: {exc.msg}", path="--set") from None
        return [parse_element(ring, v, path=f"--set[{i}]") for i, v in enumerate(values)]
    return [parse_element(ring, part, path=f"--set[{i}]")
            for i, part in enumerate(text.split(","))]


def build_ring(spec):
    """Construct the ring a spec describes; construction errors keep the spec path."""
    try:
        ring = _BUILDERS[spec.kind](spec)
    except SpecError:
        raise
    except RingError as exc:
        raise SpecError(str(exc), path=spec.path, **exc.details) from None
    if spec.label:
        ring.label = spec.label
    logger.info("built %s with %d elements", ring.label, ring.size)
    return ring


def _build_cyclic(spec):
    return make_cyclic(spec.fields["n"])


def _build_product(spec):
    return make_product([build_ring(f) for f in spec.fields["factors"]])


def _build_monomial(spec):
    f = spec.fields
    return make_monomial_quotient(f["modulus"], f["variables"], f["relations"])


def _build_table(spec):
    f = spec.fields
    return make_table_ring(f["add"], f["mul"], f["zero"], f["one"], label=f.get("label"))


def _build_triangular(spec):
    f = spec.fields
    base = build_ring(f["base"])
    if "pattern" in f:
        return pattern_ring(base, f["pattern"], label=f.get("label"))
    return triangular_ring(base, f["n"], f["side"])


def _build_matrix(spec):
    return matrix_ring(build_ring(spec.fields["base"]), spec.fields["n"])


def _build_quotient(spec):
    base = build_ring(spec.fields["base"])
    gens = [parse_element(base, g, f"{spec.path}.ideal[{i}]")
            for i, g in enumerate(spec.fields["ideal"])]
    return quotient_ring(base, ideal_generated(base, gens))


def _build_entry(ambient, entry, path):
    if entry == "ring":
        return Entry("ring")
    if entry == "zero":
        return Entry("zero")
    (kind, gens), = entry.items()
    return Entry(kind, tuple(parse_element(ambient, g, f"{path}.{kind}[{i}]")
                             for i, g in enumerate(gens)))


def _build_gmr(spec):
    f = spec.fields
    if "ambient" in f:
        ambient = build_ring(f["ambient"])
        n = f["n"]
        entries = [[_build_entry(ambient, f["entries"][i][j], f"{spec.path}.entries[{i}][{j}]")
                    for j in range(n)] for i in range(n)]
        thetas = f.get("thetas", {})
        zero = [_parse_key(key, 3, spec.path) for key, value in thetas.items()
                if value == "zero"]
        return theta_from_ambient(ambient, entries, zero_thetas=zero, label=f.get("label"))
    return _build_explicit_gmr(spec)


def _lookup(table, rows, cols, target, path):
    if len(table) != len(rows) or any(len(r) != len(cols) for r in table):
        raise SpecError(f"table must be {len(rows)} x {len(cols)}", path=path)
    if any(v >= len(target) for r in table for v in r):
        raise SpecError(f"table entries must be below {len(target)}", path=path)
    row_pos = {x: p for p, x in enumerate(rows)}
    col_pos = {x: p for p, x in enumerate(cols)}
    return lambda a, b: target[table[row_pos[a]][col_pos[b]]]


def _build_explicit_gmr(spec):
    f = spec.fields
    n = f["n"]
    diagonal = [build_ring(d) for d in f["diagonal"]]
    carriers, bimodules = {}, {}
    for (i, j) in _pairs(n):
        node = f["bimodules"][_key(i, j)]
        carriers[(i, j)] = build_ring(node["group"])
    for (i, j) in _pairs(n):
        node = f["bimodules"][_key(i, j)]
        where = f"{spec.path}.bimodules.{_key(i, j)}"
        M = carriers[(i, j)]
        R, S = diagonal[i - 1], diagonal[j - 1]
        left = _lookup(node["left"], R.element_list, M.element_list, M.element_list,
                       f"{where}.left")
        right = _lookup(node["right"], M.element_list, S.element_list, M.element_list,
                        f"{where}.right")
        bimodules[(i - 1, j - 1)] = Bimodule(M, left, right, M.label)
    pairings = {}
    for (i, j, k) in _triples(n):
        value = f["thetas"][_key(i, j, k)]
        if value == "zero":
            pairings[(i - 1, j - 1, k - 1)] = ZERO_PAIRING
            continue
        target = diagonal[i - 1] if i == k else carriers[(i, k)]
        func = _lookup(value["table"], carriers[(i, j)].element_list,
                       carriers[(j, k)].element_list, target.element_list,
                       f"{spec.path}.thetas.{_key(i, j, k)}.table")
        pairings[(i - 1, j - 1, k - 1)] = Pairing(func, "tables")
    return GmrRing(diagonal, bimodules, pairings, label=f.get("label"))


_BUILDERS = {
    "cyclic": _build_cyclic,
    "product": _build_product,
    "monomial_quotient": _build_monomial,
    "table": _build_table,
    "triangular": _build_triangular,
    "matrix": _build_matrix,
    "quotient": _build_quotient,
    "gmr": _build_gmr,
}
