"""Presentations and exact arithmetic for torsion-free class-2 nilpotent groups.

A group is given in normal-form coordinates: degree-1 generators
x_1, ..., x_n spanning the torsion-free abelianisation layer, central
generators y_1, ..., y_m spanning the isolated commutator layer, and
commutators [x_i, x_j] = y^bracket(i, j) for i < j. Every element is the
word x_1^{a_1} ... x_n^{a_n} y_1^{b_1} ... y_m^{b_m}, stored as the pair
of exponent vectors (a, b). The multiplication below is the collected
form of concatenating two such words, with [g, h] = g h g^-1 h^-1 as the
commutator convention.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from types import MappingProxyType

from .exactlinalg import IntMatrix, smith_normal_form


class PresentationFormatError(ValueError):
    """A presentation document does not match the expected schema."""


class InvalidPresentationError(ValueError):
    """An operation was given a presentation that fails validation."""

    def __init__(self, report):
        super().__init__("; ".join(report.failures) or "invalid presentation")
        self.report = report


@dataclass(frozen=True)
class GroupPresentation:
    """Structure constants of a class-2 group.

    ``bracket`` maps pairs (i, j) with i < j (0-based) to the exponent
    vector of [x_i, x_j] in the central generators; absent pairs commute.
    Range checks are deferred to validate() so that deliberately broken
    presentations can still be constructed in negative tests.
    """

    n: int
    m: int
    bracket: object = None

    def __post_init__(self):
        data = {}
        for key, vec in dict(self.bracket or {}).items():
            i, j = key
            data[(int(i), int(j))] = tuple(int(x) for x in vec)
        object.__setattr__(self, "bracket", MappingProxyType(data))

    def bracket_vector(self, i, j):
        """Exponents of [x_i, x_j], extended antisymmetrically to all i, j."""
        if i == j:
            return (0,) * self.m
        if i < j:
            return self.bracket.get((i, j), (0,) * self.m)
        vec = self.bracket.get((j, i))
        return tuple(-x for x in vec) if vec else (0,) * self.m


@dataclass(frozen=True)
class GroupElement:
    """Exponent vectors (a, b) of a normal-form word."""

    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple = ()


def _bracket_matrix(P):
    """m x C(n,2) matrix whose column at pair (i, j) is bracket(i, j)."""
    cols = []
    for i in range(P.n):
        for j in range(i + 1, P.n):
            cols.append(P.bracket.get((i, j), (0,) * P.m))
    return IntMatrix.from_cols(cols, rows=P.m)


def validate(P):
    """Check that P presents a group of the intended kind.

    Accepts iff all bracket indices are in range with vectors of length m
    and the bracket matrix has rank m, i.e. the central layer is exactly
    the isolator of the commutator subgroup and the group is torsion-free
    class 2 (class 1 when m = 0).
    """
    failures = []
    if P.n < 0 or P.m < 0:
        failures.append("generator counts must be nonnegative")
    for (i, j), vec in sorted(P.bracket.items()):
        if not (0 <= i < j < P.n):
            failures.append("bracket pair (%d,%d) out of range" % (i + 1, j + 1))
        if len(vec) != P.m:
            failures.append("bracket pair (%d,%d) has vector of length %d, expected m = %d"
                            % (i + 1, j + 1, len(vec), P.m))
    if not failures:
        r = len(smith_normal_form(_bracket_matrix(P)).invariants)
        if r < P.m:
            failures.append("rank(c) = %d < m = %d" % (r, P.m))
    return ValidationReport(ok=not failures, failures=tuple(failures))


def identity(P):
    return GroupElement((0,) * P.n, (0,) * P.m)


def _check_element(P, g):
    if len(g.a) != P.n or len(g.b) != P.m:
        raise ValueError("dimension mismatch: element (%d,%d) vs presentation (%d,%d)"
                         % (len(g.a), len(g.b), P.n, P.m))


def multiply(P, g, h):
    """Collected product of two normal-form words."""
    _check_element(P, g)
    _check_element(P, h)
    a = tuple(x + y for x, y in zip(g.a, h.a))
    corr = [0] * P.m
    for (i, j), vec in P.bracket.items():
        coef = g.a[j] * h.a[i]
        if coef:
            for l in range(P.m):
                corr[l] += coef * vec[l]
    b = tuple(g.b[l] + h.b[l] - corr[l] for l in range(P.m))
    return GroupElement(a, b)


def inverse(P, g):
    _check_element(P, g)
    corr = [0] * P.m
    for (i, j), vec in P.bracket.items():
        coef = g.a[i] * g.a[j]
        if coef:
            for l in range(P.m):
                corr[l] += coef * vec[l]
    return GroupElement(tuple(-x for x in g.a),
                        tuple(-g.b[l] - corr[l] for l in range(P.m)))


def commutator(P, g, h):
    """[g, h] = g h g^-1 h^-1; always central, with bilinear exponents."""
    _check_element(P, g)
    _check_element(P, h)
    out = [0] * P.m
    for (i, j), vec in P.bracket.items():
        coef = g.a[i] * h.a[j] - g.a[j] * h.a[i]
        if coef:
            for l in range(P.m):
                out[l] += coef * vec[l]
    return GroupElement((0,) * P.n, tuple(out))


def random_element(P, bound, seed):
    """Element with exponents uniform in [-bound, bound], deterministic in seed."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return draw_element(P, bound, rng)


def draw_element(P, bound, rng):
    a = tuple(rng.randint(-bound, bound) for _ in range(P.n))
    b = tuple(rng.randint(-bound, bound) for _ in range(P.m))
    return GroupElement(a, b)


def presentation_to_json(P):
    """JSON document for P; bracket entries sorted by (i, j), 1-based."""
    brackets = [{"i": i + 1, "j": j + 1, "y": list(vec)}
                for (i, j), vec in sorted(P.bracket.items())]
    return {"n": P.n, "m": P.m, "brackets": brackets}


def presentation_from_json(data):
    """Parse a presentation document, rejecting schema violations.

    Missing pairs denote zero brackets; duplicate (i, j) entries are an
    error. Semantic checks (index ranges vs n, the rank condition) are
    validate()'s job, not the parser's.
    """
    if not isinstance(data, dict):
        raise PresentationFormatError("presentation must be a JSON object")
    for field in ("n", "m"):
        if field not in data:
            raise PresentationFormatError("missing field '%s'" % field)
        if not isinstance(data[field], int) or isinstance(data[field], bool) or data[field] < 0:
            raise PresentationFormatError("field '%s' must be a nonnegative integer" % field)
    m = data["m"]
    entries = data.get("brackets", [])
    if not isinstance(entries, list):
        raise PresentationFormatError("field 'brackets' must be a list")
    bracket = {}
    for pos, item in enumerate(entries):
        if not isinstance(item, dict):
            raise PresentationFormatError("brackets[%d] must be an object" % pos)
        for field in ("i", "j", "y"):
            if field not in item:
                raise PresentationFormatError("brackets[%d] missing field '%s'" % (pos, field))
        i, j, y = item["i"], item["j"], item["y"]
        if not isinstance(i, int) or isinstance(i, bool) or i < 1:
            raise PresentationFormatError("brackets[%d] field 'i' must be a positive integer" % pos)
        if not isinstance(j, int) or isinstance(j, bool) or j <= i:
            raise PresentationFormatError("brackets[%d] field 'j' must be an integer > i" % pos)
        if not isinstance(y, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in y):
            raise PresentationFormatError("brackets[%d] field 'y' must be a list of integers" % pos)
        if len(y) != m:
            raise PresentationFormatError("brackets[%d] field 'y' has length %d, expected m = %d"
                                          % (pos, len(y), m))
        key = (i - 1, j - 1)
        if key in bracket:
            raise PresentationFormatError("duplicate bracket pair (%d,%d)" % (i, j))
        bracket[key] = tuple(y)
    return GroupPresentation(data["n"], m, bracket)


def load_presentation(text):
    """Parse a presentation from JSON text."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationFormatError("malformed JSON: %s" % exc) from exc
    return presentation_from_json(data)
