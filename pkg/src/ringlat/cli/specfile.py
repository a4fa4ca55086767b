"""JSON ring spec files: parsing with line positions, and serialization.

A spec is one JSON object::

    {
      "name": "diag-F2-3",
      "base_modulus": 2,
      "rank": 3,
      "unit": [1, 1, 1],
      "mul": [[[1,0,0]], [[0,0,0],[0,1,0]], [[0,0,0],[0,0,0],[0,0,1]]],
      "subring_generators": [],
      "expected": {"node_count": 5, "delta": true}
    }

``mul`` is either the full rank x rank table of product vectors or its
lower triangle (row i lists e_i e_0 .. e_i e_i). Only integers are allowed.
"""
import json
import re
from dataclasses import dataclass, field

from ..errors import RingLatError, ValidationError
from ..finring import Extension, span_closure, validate

REQUIRED = ("base_modulus", "unit", "mul")
KNOWN = set(REQUIRED) | {"name", "rank", "subring_generators", "expected"}


class SpecError(RingLatError):
    """Unreadable or invalid spec, with a 1-based line and column when known."""

    def __init__(self, message, source="<spec>", line=None, column=None):
        where = source if line is None else f"{source}:{line}:{column or 1}"
        super().__init__(f"{where}: {message}")
        self.message = message
        self.source = source
        self.line = line
        self.column = column


@dataclass
class RingSpec:
    name: str | None
    base_modulus: int
    unit: list
    mul: list
    subring_generators: list = field(default_factory=list)
    expected: dict = field(default_factory=dict)

    @property
    def rank(self):
        return len(self.unit)

    def ring(self):
        return validate(self.base_modulus, self.mul, self.unit, name=self.name)

    def extension(self):
        S = self.ring()
        R = span_closure(S, [tuple(v) for v in self.subring_generators])
        return Extension(S, R, name=self.name)


def _locate(text, key):
    m = re.search(r'"%s"\s*:' % re.escape(key), text)
    if not m:
        return None, None
    line = text.count("\n", 0, m.start()) + 1
    col = m.start() - (text.rfind("\n", 0, m.start()) + 1) + 1
    return line, col


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def _int_tree(value, depth):
    """True when value is a nested list of integers exactly ``depth`` levels deep."""
    if depth == 0:
        return _is_int(value)
    return isinstance(value, list) and all(_int_tree(v, depth - 1) for v in value)


def parse_spec(text, source="<spec>"):
    """Parse and validate spec text; raises SpecError with a position."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc.msg}", source, exc.lineno, exc.colno) from None

    def fail(message, key=None):
        line, col = _locate(text, key) if key else (None, None)
        raise SpecError(message, source, line, col)

    if not isinstance(data, dict):
        fail("top level must be a JSON object")
    for key in REQUIRED:
        if key not in data:
            fail(f"missing field {key!r}")
    for key in data:
        if key not in KNOWN:
            fail(f"unknown field {key!r}", key)
    n = data["base_modulus"]
    if not _is_int(n) or n < 2:
        fail("base_modulus must be an integer >= 2", "base_modulus")
    if not _int_tree(data["unit"], 1) or not data["unit"]:
        fail("unit must be a nonempty list of integers", "unit")
    d = len(data["unit"])
    if "rank" in data and (not _is_int(data["rank"]) or data["rank"] != d):
        fail(f"rank {data['rank']!r} does not match the unit length {d}", "rank")
    if not _int_tree(data["mul"], 3):
        fail("mul must be a list of rows of integer vectors", "mul")
    gens = data.get("subring_generators", [])
    if not _int_tree(gens, 2) or any(len(g) != d for g in gens):
        fail(f"subring_generators must be integer vectors of length {d}", "subring_generators")
    expected = data.get("expected", {})
    if not isinstance(expected, dict):
        fail("expected must be an object", "expected")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        fail("name must be a string", "name")
    spec = RingSpec(name, n, data["unit"], data["mul"], gens, expected)
    try:
        spec.ring()
    except ValidationError as exc:
        key = "unit" if "unit" in str(exc) else "mul"
        fail(str(exc), key)
    except RingLatError as exc:
        fail(str(exc), "unit")
    return spec


def read_spec(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecError(f"cannot read file: {exc.strerror}", str(path)) from None
    return parse_spec(text, source=str(path))


def spec_from_extension(E, expected=None):
    """A RingSpec describing E; R is given by its Howell basis rows."""
    S = E.S
    mul = [[list(S.mul_table[i][j]) for j in range(i + 1)] for i in range(S.d)]
    gens = [list(row) for row in E.R.basis]
    return RingSpec(E.name, S.n, list(S.unit), mul, gens, dict(expected or {}))


def dump_spec(spec):
    """Serialize with one mul row per line; stable for fixed input."""
    lines = ["{"]
    if spec.name is not None:
        lines.append(f'  "name": {json.dumps(spec.name)},')
    lines.append(f'  "base_modulus": {spec.base_modulus},')
    lines.append(f'  "rank": {spec.rank},')
    lines.append(f'  "unit": {json.dumps(list(spec.unit))},')
    rows = [json.dumps([list(v) for v in row]) for row in spec.mul]
    lines.append('  "mul": [\n    ' + ",\n    ".join(rows) + "\n  ],")
    lines.append(f'  "subring_generators": {json.dumps([list(g) for g in spec.subring_generators])},')
    lines.append(f'  "expected": {json.dumps(spec.expected, sort_keys=True)}')
    lines.append("}")
    return "\n".join(lines) + "\n"
