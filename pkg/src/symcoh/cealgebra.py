"""Nilpotent Lie (co)algebra layer.

A ``LieAlgebraSpec`` records, for each generator ``e_i`` of a 2n-dimensional
dual space, its exterior derivative as a 2-form.  ``d`` extends to the whole
exterior algebra as an anti-derivation.  Construction validates that d is a
differential (d o d = 0 on every generator, i.e. the Jacobi identity) and
that the algebra is unimodular (no (2n-1)-form has an exact top-degree part),
so that top-coefficient extraction behaves like integration over a compact
quotient.

Nilpotency itself is deliberately not checked: the engine is correct for any
unimodular Lie algebra.

Input grammars:

* compact tuple notation, e.g. ``(0,0,0,12,14,15+23+24)``: one entry per
  generator, each ``0`` or a +/- separated sum of terms ``[c*]ab`` with
  single-character indices and optional integer coefficient;
* a JSON object ``{"dim": 6, "d": {"4": [[1,2,1]], ...}}`` listing triples
  ``[a, b, c]`` meaning d(e_i) += c * e_a ^ e_b (the general escape hatch).
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exterior import (
    Form,
    FormParseError,
    blade_from_indices,
    blade_indices,
    blades,
    _CHAR_TO_INDEX,
)


class AlgebraValidationError(ValueError):
    """The structure constants do not define a unimodular differential."""


class LieAlgebraSpec:
    """Dimension 2n plus the differential of each generator as a 2-form."""

    __slots__ = ("dim", "differentials", "_d_blade")

    def __init__(self, differentials: list[Form]):
        dim = len(differentials)
        if dim == 0 or dim % 2:
            raise AlgebraValidationError(f"dimension must be even and positive, got {dim}")
        for i, f in enumerate(differentials, start=1):
            if f.dim != dim:
                raise AlgebraValidationError(
                    f"d(e_{i}) has ambient dimension {f.dim}, expected {dim}")
            if f and f.degrees() != {2}:
                raise AlgebraValidationError(f"d(e_{i}) must be a 2-form, got {f}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "differentials", tuple(differentials))
        object.__setattr__(self, "_d_blade", {})
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebraSpec is immutable")

    def _validate(self):
        for i in range(1, self.dim + 1):
            dd = self.d(self.differentials[i - 1])
            if dd:
                raise AlgebraValidationError(
                    f"d(d(e_{i})) = {dd} != 0: structure constants violate the Jacobi identity")
        top = (1 << self.dim) - 1
        for beta in blades(self.dim, self.dim - 1):
            c = self.d(Form(self.dim, {beta: 1})).coeff(top)
            if c:
                raise AlgebraValidationError(
                    "algebra is not unimodular: d of a codimension-one form has "
                    f"a top-degree part ({Form(self.dim, {beta: 1})})")

    # -- the differential ----------------------------------------------

    def _d_of_blade(self, mask: int) -> Form:
        cached = self._d_blade.get(mask)
        if cached is not None:
            return cached
        out = Form.zero(self.dim)
        sign = 1
        for t, i in enumerate(blade_indices(mask)):
            rest = mask ^ (1 << (i - 1))
            prefix = rest & ((1 << (i - 1)) - 1)
            suffix = rest ^ prefix
            term = Form(self.dim, {prefix: sign})
            term = term.wedge(self.differentials[i - 1])
            term = term.wedge(Form(self.dim, {suffix: 1}))
            out = out + term
            sign = -sign
        self._d_blade[mask] = out
        return out

    def d(self, a: Form) -> Form:
        """Exterior derivative, extended as an anti-derivation."""
        if a.dim != self.dim:
            raise ValueError(f"form has dimension {a.dim}, algebra has {self.dim}")
        out = Form.zero(self.dim)
        for mask, c in a.items():
            if mask:
                out = out + self._d_of_blade(mask) * c
        return out

    def integrate(self, a: Form):
        """Coefficient of e_{1..2n}; the volume class is normalized to 1."""
        if a.dim != self.dim:
            raise ValueError(f"form has dimension {a.dim}, algebra has {self.dim}")
        return a.coeff((1 << self.dim) - 1)

    def is_abelian(self) -> bool:
        return all(f.is_zero() for f in self.differentials)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebraSpec):
            return NotImplemented
        return self.differentials == other.differentials

    def __repr__(self):
        return f"LieAlgebraSpec(dim={self.dim})"


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _parse_structure_entry(entry: str, dim: int, text: str, offset: int) -> Form:
    s = entry.strip()
    if s == "0":
        return Form.zero(dim)
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            if s[pos] == "-":
                sign = -1
            pos += 1
        elif not first:
            raise FormParseError("expected '+' or '-' between terms", text, offset + pos)
        while pos < len(s) and s[pos] == " ":
            pos += 1
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        coeff = 1
        if pos < len(s) and s[pos] == "*":
            if pos == start:
                raise FormParseError("expected a coefficient before '*'", text, offset + pos)
            coeff = int(s[start:pos])
            pos += 1
            start = pos
        else:
            pos = start
        while pos < len(s) and s[pos] in _CHAR_TO_INDEX:
            pos += 1
        if pos - start != 2:
            raise FormParseError("expected a two-index term like '12'", text, offset + start)
        a, b = _CHAR_TO_INDEX[s[start]], _CHAR_TO_INDEX[s[start + 1]]
        if a >= b:
            raise FormParseError("term indices must be increasing", text, offset + start)
        if b > dim:
            raise FormParseError(f"index out of range for dimension {dim}", text, offset + start)
        mask = blade_from_indices((a, b))
        coeffs[mask] = coeffs.get(mask, Fraction(0)) + sign * coeff
        while pos < len(s) and s[pos] == " ":
            pos += 1
        first = False
    if first:
        raise FormParseError("empty structure entry", text, offset)
    return Form(dim, coeffs)


def parse_salamon(text: str) -> LieAlgebraSpec:
    """Parse compact tuple notation such as ``(0,0,0,12,14,15+23+24)``."""
    s = text.strip()
    body = s
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    entries = body.split(",")
    dim = len(entries)
    if dim % 2 or dim == 0 or not body.strip():
        raise AlgebraValidationError(
            f"dimension must be even and positive, got {dim} entries in {text!r}")
    if dim > 15:
        raise AlgebraValidationError("at most 15 generators are supported")
    diffs = []
    offset = 1 if s.startswith("(") else 0
    for entry in entries:
        diffs.append(_parse_structure_entry(entry, dim, text, offset))
        offset += len(entry) + 1
    return LieAlgebraSpec(diffs)


def parse_algebra_json(text: str) -> LieAlgebraSpec:
    """Parse the JSON structure-constant format (see module docstring)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraValidationError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "dim" not in data:
        raise AlgebraValidationError('JSON algebra needs a "dim" field')
    dim = data["dim"]
    if not isinstance(dim, int) or dim <= 0 or dim % 2 or dim > 15:
        raise AlgebraValidationError(f'"dim" must be a positive even integer <= 15, got {dim!r}')
    table = data.get("d", {})
    if not isinstance(table, dict):
        raise AlgebraValidationError('"d" must map generator indices to term lists')
    diffs = [Form.zero(dim) for _ in range(dim)]
    for key, terms in table.items():
        try:
            gen = int(key)
        except (TypeError, ValueError):
            raise AlgebraValidationError(f"bad generator index {key!r}") from None
        if not 1 <= gen <= dim:
            raise AlgebraValidationError(f"generator index {gen} out of range 1..{dim}")
        coeffs: dict[int, Fraction] = {}
        for term in terms:
            if not (isinstance(term, (list, tuple)) and len(term) == 3):
                raise AlgebraValidationError(f"term {term!r} is not a [a, b, c] triple")
            a, b, c = term
            if not (isinstance(a, int) and isinstance(b, int)):
                raise AlgebraValidationError(f"term indices must be integers: {term!r}")
            if isinstance(c, str):
                c = Fraction(c)
            elif isinstance(c, int):
                c = Fraction(c)
            else:
                raise AlgebraValidationError(f"coefficient must be an integer or 'p/q': {term!r}")
            if a == b or not (1 <= a <= dim and 1 <= b <= dim):
                raise AlgebraValidationError(f"bad indices in term {term!r}")
            if a > b:
                a, b, c = b, a, -c
            mask = blade_from_indices((a, b))
            coeffs[mask] = coeffs.get(mask, Fraction(0)) + c
        diffs[gen - 1] = Form(dim, coeffs)
    return LieAlgebraSpec(diffs)


def parse_algebra(source: str) -> LieAlgebraSpec:
    """Dispatch between the tuple notation and the JSON format."""
    if source.lstrip().startswith("{"):
        return parse_algebra_json(source)
    return parse_salamon(source)
