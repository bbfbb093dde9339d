"""Design constructions and the design file format.

The affine-geometry construction yields, for any prime power q and dimension
m >= 2, a resolvable design on the q^m vectors of GF(q)^m whose parallel
classes are the level sets of normalized nonzero linear functionals: blocks
from distinct classes always meet in exactly q^(m-2) points, so the design
is cross resolvable with mu_2 = q^(m-2).

Design files come in two accepted forms, a JSON document and a plain
whitespace-delimited form; see `parse_design` for the grammar.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import NamedTuple

from crosscache.designs import DesignError, ResolvableDesign, validate
from crosscache.fields import FieldError, build_field, prime_power


class ParseError(ValueError):
    """A design document is syntactically or semantically invalid."""


@dataclass(frozen=True)
class AffineParams:
    """Parameters (q, m) of the affine-geometry construction."""

    q: int
    m: int

    def __post_init__(self):
        if prime_power(self.q) is None:
            raise FieldError(f"q = {self.q} is not a prime power")
        if self.m < 2:
            raise DesignError(f"affine dimension must be >= 2, got {self.m}")


class AffineCounts(NamedTuple):
    v: int
    k: int
    b: int
    r: int
    b_r: int
    mu2: int


def affine_parameters(q: int, m: int) -> AffineCounts:
    """Closed-form counts of the affine construction (no field tables needed)."""
    if prime_power(q) is None:
        raise FieldError(f"q = {q} is not a prime power")
    if m < 2:
        raise DesignError(f"affine dimension must be >= 2, got {m}")
    v = q ** m
    r = (q ** m - 1) // (q - 1)
    return AffineCounts(v=v, k=q ** (m - 1), b=q * r, r=r, b_r=q, mu2=q ** (m - 2))


def affine_resolvable(params: AffineParams) -> ResolvableDesign:
    """Build the affine-geometry design for (q, m).

    Points are the vectors of GF(q)^m in mixed-radix order (first coordinate
    most significant), labeled 1..q^m. One parallel class per nonzero linear
    functional normalized to leading coefficient 1, in the same mixed-radix
    order; block c of a class collects the points where the functional
    evaluates to c, for c = 0..q-1 in field label order.
    """
    q, m = params.q, params.m
    field = build_field(q)

    vectors = list(itertools.product(range(q), repeat=m))
    label = {vec: i + 1 for i, vec in enumerate(vectors)}

    classes = []
    for a in vectors[1:]:
        first_nonzero = next(x for x in a if x != 0)
        if first_nonzero != 1:
            continue
        levels: list[list[int]] = [[] for _ in range(q)]
        for vec in vectors:
            levels[field.dot(a, vec)].append(label[vec])
        classes.append(tuple(frozenset(blk) for blk in levels))

    design = ResolvableDesign(q ** m, tuple(classes))
    expected = affine_parameters(q, m)
    if (design.r, design.b, design.k) != (expected.r, expected.b, expected.k):
        raise DesignError("affine construction produced unexpected counts")
    return design


def serialize_design(design: ResolvableDesign, form: str = "json") -> str:
    """Canonical text for a design: points sorted within blocks, order preserved."""
    classes = [[sorted(blk) for blk in cls] for cls in design.classes]
    if form == "json":
        return json.dumps({"v": design.v, "classes": classes}, separators=(",", ":")) + "\n"
    if form == "plain":
        lines = [f"v {design.v}"]
        for cls in classes:
            lines.append("class")
            lines.extend(" ".join(str(p) for p in blk) for blk in cls)
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown form {form!r}; expected 'json' or 'plain'")


def parse_design(text: str) -> ResolvableDesign:
    """Parse a design document (JSON or plain form) and validate it.

    JSON form: {"v": <int>, "classes": [[[point, ...], ...], ...]}.
    Plain form: a `v <int>` header, then for each class a line reading
    `class` followed by one line per block of whitespace-separated point
    labels; blank lines and `#` comments are ignored.
    """
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty design document")
    if stripped.startswith("{"):
        design = _parse_json(text)
    else:
        design = _parse_plain(text)

    violations = validate(design)
    if violations:
        raise ParseError("invalid design: " + "; ".join(violations))
    return design


def _parse_json(text: str) -> ResolvableDesign:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"JSON syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or "v" not in doc or "classes" not in doc:
        raise ParseError("design document must be an object with 'v' and 'classes'")
    v, classes = doc["v"], doc["classes"]
    if not isinstance(v, int):
        raise ParseError("'v' must be an integer")
    if (not isinstance(classes, list)
            or not all(isinstance(c, list) for c in classes)
            or not all(isinstance(b, list) for c in classes for b in c)
            or not all(isinstance(p, int) for c in classes for b in c for p in b)):
        raise ParseError("'classes' must be a list of classes of blocks of integer points")
    try:
        return ResolvableDesign.from_classes(v, classes)
    except DesignError as exc:
        raise ParseError(str(exc)) from None


def _parse_plain(text: str) -> ResolvableDesign:
    v: int | None = None
    classes: list[list[list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if v is None:
            if tokens[0] != "v" or len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(f"line {lineno}: expected header 'v <count>', got {line!r}")
            v = int(tokens[1])
        elif tokens == ["class"]:
            classes.append([])
        else:
            if not classes:
                raise ParseError(f"line {lineno}: block before any 'class' marker")
            try:
                block = [int(tok) for tok in tokens]
            except ValueError:
                raise ParseError(f"line {lineno}: block must be integer points, got {line!r}") from None
            classes[-1].append(block)
    if v is None:
        raise ParseError("missing 'v <count>' header")
    try:
        return ResolvableDesign.from_classes(v, classes)
    except DesignError as exc:
        raise ParseError(str(exc)) from None
