"""Genus one models of degree 1 to 5 and their defining equations.

A genus one model is the coefficient data cutting out a genus one curve:

* degree 1 -- a Weierstrass equation (a1, a2, a3, a4, a6),
* degree 2 -- a pair (p, q) of binary forms of degree 2 and 4 in x, z,
  for the curve y^2 + p(x,z) y = q(x,z)  (the cross terms p are kept so
  that nothing breaks in characteristic 2),
* degree 3 -- a ternary cubic in x, y, z,
* degree 4 -- a pair of quadrics in x1..x4,
* degree 5 -- a 5x5 alternating matrix of linear forms in x1..x5, whose
  4x4 Pfaffians cut out the curve.

Degree-5 models are stored by their upper triangle only; alternation is
structural, not data.  All model classes are frozen dataclasses; the
polynomial rings are the fixed module-level tuples below.

This module also provides the Weierstrass-family embeddings pi_n sending
a degree-1 model to an equivalent model of degree n = 2..5, projection of
a degree-5 model away from a rational point (down to degree 4), and the
JSON file format the CLI reads and writes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateModelError, InputError
from .linalg import (alternating_from_upper, kernel_basis, pfaffian4,
                     scalar_rank)
from .poly import Poly, Scalar, as_scalar, format_scalar, generators, monomials

DEG1_RING = ("x", "y", "z")
DEG2_RING = ("x", "z")
DEG2_CURVE_RING = ("x", "z", "y")
DEG3_RING = ("x", "y", "z")
DEG4_RING = ("x1", "x2", "x3", "x4")
DEG5_RING = ("x1", "x2", "x3", "x4", "x5")

# Upper-triangle positions of a 5x5 alternating matrix, row-major.
DEG5_PAIRS = [(i, j) for i in range(5) for j in range(i + 1, 5)]

QUADRIC_MONOMIALS_DEG4 = monomials(DEG4_RING, 2)


def _check_form(p: Poly, ring, degree: int, what: str) -> Poly:
    if p.variables != ring:
        raise InputError(f"{what} must live in the ring {ring}")
    if not p.is_homogeneous(degree) and p:
        raise InputError(f"{what} must be homogeneous of degree {degree} (or zero)")
    return p


@dataclass(frozen=True)
class Deg1Model:
    """Weierstrass equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Scalar
    a2: Scalar
    a3: Scalar
    a4: Scalar
    a6: Scalar

    degree = 1

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def equation(self) -> Poly:
        x, y, z = generators(DEG1_RING)
        a1, a2, a3, a4, a6 = self.coefficients()
        return (y * y * z + a1 * x * y * z + a3 * y * z * z
                - x ** 3 - a2 * x * x * z - a4 * x * z * z - a6 * z ** 3)


@dataclass(frozen=True)
class Deg2Model:
    """Generalised binary quartic: y^2 + p(x,z) y = q(x,z)."""

    p: Poly
    q: Poly

    degree = 2

    def __post_init__(self):
        _check_form(self.p, DEG2_RING, 2, "p")
        _check_form(self.q, DEG2_RING, 4, "q")

    @classmethod
    def from_coefficients(cls, p_coeffs: Sequence, q_coeffs: Sequence) -> "Deg2Model":
        """p as [alpha0, alpha1, alpha2] on x^2, xz, z^2; q as [a..e] on x^4..z^4."""
        if len(p_coeffs) != 3 or len(q_coeffs) != 5:
            raise InputError("degree-2 model needs 3 coefficients for p and 5 for q")
        p = Poly(DEG2_RING, {(2 - i, i): as_scalar(c) for i, c in enumerate(p_coeffs)})
        q = Poly(DEG2_RING, {(4 - i, i): as_scalar(c) for i, c in enumerate(q_coeffs)})
        return cls(p, q)

    def coefficients(self):
        p = tuple(self.p.coefficient((2 - i, i)) for i in range(3))
        q = tuple(self.q.coefficient((4 - i, i)) for i in range(5))
        return p, q

    def equation(self) -> Poly:
        """The full curve equation y^2 + p y - q in the ring (x, z, y)."""
        y = Poly.variable(DEG2_CURVE_RING, "y")
        p = self.p.lift(DEG2_CURVE_RING)
        q = self.q.lift(DEG2_CURVE_RING)
        return y * y + p * y - q


@dataclass(frozen=True)
class Deg3Model:
    """Ternary cubic in x, y, z."""

    cubic: Poly

    degree = 3

    # Coefficient order of the JSON format: monomials of the cubic written
    # a x^3 + b y^3 + c z^3 + a2 x^2 y + a3 x^2 z + b1 x y^2 + b3 y^2 z
    #   + c1 x z^2 + c2 y z^2 + m xyz.
    MONOMIALS = [(3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (2, 0, 1),
                 (1, 2, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2), (1, 1, 1)]

    def __post_init__(self):
        _check_form(self.cubic, DEG3_RING, 3, "cubic")

    @classmethod
    def from_coefficients(cls, coeffs: Sequence) -> "Deg3Model":
        if len(coeffs) != 10:
            raise InputError("degree-3 model needs 10 coefficients")
        terms = {e: as_scalar(c) for e, c in zip(cls.MONOMIALS, coeffs)}
        return cls(Poly(DEG3_RING, terms))

    def coefficients(self):
        return tuple(self.cubic.coefficient(e) for e in self.MONOMIALS)

    def equation(self) -> Poly:
        return self.cubic


@dataclass(frozen=True)
class Deg4Model:
    """Pair of quadrics in x1..x4."""

    q1: Poly
    q2: Poly

    degree = 4

    def __post_init__(self):
        _check_form(self.q1, DEG4_RING, 2, "q1")
        _check_form(self.q2, DEG4_RING, 2, "q2")

    @classmethod
    def from_coefficients(cls, q1_coeffs: Sequence, q2_coeffs: Sequence) -> "Deg4Model":
        """Each quadric as 10 coefficients in graded-lex monomial order."""
        if len(q1_coeffs) != 10 or len(q2_coeffs) != 10:
            raise InputError("degree-4 model needs 10 coefficients per quadric")
        polys = []
        for coeffs in (q1_coeffs, q2_coeffs):
            terms = {e: as_scalar(c) for e, c in zip(QUADRIC_MONOMIALS_DEG4, coeffs)}
            polys.append(Poly(DEG4_RING, terms))
        return cls(*polys)

    def coefficients(self):
        return (tuple(self.q1.coefficient(e) for e in QUADRIC_MONOMIALS_DEG4),
                tuple(self.q2.coefficient(e) for e in QUADRIC_MONOMIALS_DEG4))

    def equations(self) -> list[Poly]:
        return [self.q1, self.q2]


@dataclass(frozen=True)
class Deg5Model:
    """5x5 alternating matrix of linear forms, stored as its upper triangle."""

    upper: tuple

    degree = 5

    def __post_init__(self):
        if len(self.upper) != 10:
            raise InputError("degree-5 model needs 10 upper-triangle entries")
        object.__setattr__(self, "upper", tuple(self.upper))
        for entry in self.upper:
            _check_form(entry, DEG5_RING, 1, "matrix entry")

    @classmethod
    def from_matrix(cls, rows) -> "Deg5Model":
        n = len(rows)
        if n != 5 or any(len(r) != 5 for r in rows):
            raise InputError("degree-5 model matrix must be 5x5")
        for i in range(5):
            if rows[i][i]:
                raise InputError("degree-5 model matrix must be alternating")
            for j in range(i + 1, 5):
                if rows[j][i] != -rows[i][j]:
                    raise InputError("degree-5 model matrix must be alternating")
        return cls(tuple(rows[i][j] for i, j in DEG5_PAIRS))

    @classmethod
    def from_coefficients(cls, entries: Sequence[Sequence]) -> "Deg5Model":
        """Ten upper-triangle entries, each as 5 coefficients of x1..x5."""
        if len(entries) != 10:
            raise InputError("degree-5 model needs 10 upper-triangle entries")
        upper = []
        for coeffs in entries:
            if len(coeffs) != 5:
                raise InputError("each matrix entry needs 5 coefficients")
            terms = {}
            for i, c in enumerate(coeffs):
                e = [0] * 5
                e[i] = 1
                terms[tuple(e)] = as_scalar(c)
            upper.append(Poly(DEG5_RING, terms))
        return cls(tuple(upper))

    def coefficients(self):
        unit = [tuple(int(i == k) for i in range(5)) for k in range(5)]
        return tuple(tuple(entry.coefficient(e) for e in unit) for entry in self.upper)

    def matrix(self) -> list[list[Poly]]:
        return alternating_from_upper(DEG5_RING, self.upper, 5)

    def pfaffians(self) -> list[Poly]:
        """Submaximal Pfaffians p_i = (-1)^(i+1) pf(matrix with row/col i deleted)."""
        rows = self.matrix()
        out = []
        for i in range(5):
            keep = [k for k in range(5) if k != i]
            sub = [[rows[r][c] for c in keep] for r in keep]
            p = pfaffian4(sub)
            out.append(p if i % 2 == 0 else -p)
        return out


GenusOneModel = Deg1Model | Deg2Model | Deg3Model | Deg4Model | Deg5Model


def equations(model: GenusOneModel) -> list[Poly]:
    """The defining polynomial(s) of the model's curve."""
    if isinstance(model, Deg1Model):
        return [model.equation()]
    if isinstance(model, Deg2Model):
        return [model.equation()]
    if isinstance(model, Deg3Model):
        return [model.cubic]
    if isinstance(model, Deg4Model):
        return [model.q1, model.q2]
    if isinstance(model, Deg5Model):
        return model.pfaffians()
    raise InputError(f"not a genus one model: {model!r}")


# ----------------------------------------------------------------------
# the Weierstrass family pi_n : degree-1 models -> degree-n models
# ----------------------------------------------------------------------

def weierstrass_model(w: Deg1Model, degree: int) -> GenusOneModel:
    """The degree-n model of the curve embedded by |n.0|, for n = 2..5.

    The images are the standard ones: (x:1), (1:x:y), (1:x:y:x^2) and
    (1:x:y:x^2:xy) respectively; restriction to this family is what
    normalises all the invariants.
    """
    a1, a2, a3, a4, a6 = w.coefficients()
    if degree == 2:
        return Deg2Model.from_coefficients((0, a1, a3), (0, 1, a2, a4, a6))
    if degree == 3:
        x, y, z = generators(DEG3_RING)
        cubic = (y * y * z + a1 * x * y * z + a3 * y * z * z
                 - x ** 3 - a2 * x * x * z - a4 * x * z * z - a6 * z ** 3)
        return Deg3Model(cubic)
    if degree == 4:
        x1, x2, x3, x4 = generators(DEG4_RING)
        q1 = x1 * x4 - x2 * x2
        q2 = (x3 * x3 + a1 * x2 * x3 + a3 * x1 * x3
              - x2 * x4 - a2 * x2 * x2 - a4 * x1 * x2 - a6 * x1 * x1)
        return Deg4Model(q1, q2)
    if degree == 5:
        x1, x2, x3, x4, x5 = generators(DEG5_RING)
        ell = a1 * x5 - a2 * x4 + a3 * x3 - a4 * x2 - a6 * x1
        zero = Poly.zero(DEG5_RING)
        upper = (ell, x5, x4, x3,   # (1,2) (1,3) (1,4) (1,5)
                 x4, x3, x2,        # (2,3) (2,4) (2,5)
                 -x2, zero,         # (3,4) (3,5)
                 x1)                # (4,5)
        return Deg5Model(upper)
    raise InputError(f"no Weierstrass model of degree {degree} (expected 2..5)")


# ----------------------------------------------------------------------
# projection away from a rational point: degree 5 -> degree 4
# ----------------------------------------------------------------------

def project_from_point(model: Deg5Model, point: Sequence) -> Deg4Model:
    """Project a degree-5 model away from a smooth rational point on it.

    The point (given by 5 homogeneous coordinates) must lie on the curve
    and be smooth there (the Jacobian of the Pfaffians has rank 3).  We
    change coordinates so the point is (0:0:0:0:1) with tangent line
    x1 = x2 = x3 = 0, then keep the quadrics not involving x5; these cut
    out the projected curve in P^3.  The projected model defines the same
    curve up to isomorphism, so in particular has the same j-invariant.

    All choices (kernel basis, basis completion) are the canonical
    row-reduction ones, so the output is deterministic.
    """
    if not isinstance(model, Deg5Model):
        raise InputError("projection is implemented for degree-5 models only")
    point = [as_scalar(c) for c in point]
    if len(point) != 5 or not any(point):
        raise InputError("the point must have 5 homogeneous coordinates, not all zero")

    pfaffians = model.pfaffians()
    if any(p.evaluate(point) != 0 for p in pfaffians):
        raise InputError("the point does not lie on the curve")
    jac = [[p.derivative(v).evaluate(point) for v in DEG5_RING] for p in pfaffians]
    if scalar_rank(jac) != 3:
        raise DegenerateModelError("the point is a singular point of the model")

    # Rows of the substitution matrix are the new basis vectors: three
    # standard vectors completing the tangent plane, then a second kernel
    # vector, then the point itself.
    kernel = kernel_basis(jac)  # 2-dimensional, contains the point
    second = next(k for k in kernel if scalar_rank([k, point]) == 2)
    new_basis = [second, point]
    completion = []
    for i in range(5):
        e = [int(j == i) for j in range(5)]
        if scalar_rank(completion + [e] + new_basis) == len(completion) + 3:
            completion.append(e)
        if len(completion) == 3:
            break
    rows = completion + new_basis

    # Substitute x_j -> sum_i B_ij x_i' with B rows the new basis vectors.
    gens = generators(DEG5_RING)
    images = {
        v: sum((rows[i][j] * gens[i] for i in range(5)), Poly.zero(DEG5_RING))
        for j, v in enumerate(DEG5_RING)
    }
    moved = [p.substitute(images) for p in pfaffians]

    quad_monos = monomials(DEG5_RING, 2)
    coeff_matrix = [[q.coefficient(e) for e in quad_monos] for q in moved]
    if scalar_rank(coeff_matrix) != 5:
        raise DegenerateModelError("the Pfaffian quadrics are linearly dependent")

    # Combinations of the quadrics free of x5: the left kernel of their
    # coefficients on the x5-involving monomials.
    x5_cols = [e for e in quad_monos if e[4] > 0]
    restriction = [[q.coefficient(e) for q in moved] for e in x5_cols]
    combos = kernel_basis(restriction)
    if len(combos) != 2:
        raise DegenerateModelError(
            "projection does not yield exactly 2 independent quadrics without x5")

    out = []
    for combo in combos:
        quad = sum((c * q for c, q in zip(combo, moved)), Poly.zero(DEG5_RING))
        terms = {e[:4]: c for e, c in quad.terms.items()}
        out.append(Poly(DEG4_RING, terms))
    return Deg4Model(out[0], out[1])


# ----------------------------------------------------------------------
# JSON model files
# ----------------------------------------------------------------------

def _fmt(values):
    return [format_scalar(v) for v in values]


def model_to_dict(model: GenusOneModel) -> dict:
    if isinstance(model, Deg1Model):
        return {"degree": 1, "coefficients": _fmt(model.coefficients())}
    if isinstance(model, Deg2Model):
        p, q = model.coefficients()
        return {"degree": 2, "coefficients": {"p": _fmt(p), "q": _fmt(q)}}
    if isinstance(model, Deg3Model):
        return {"degree": 3, "coefficients": _fmt(model.coefficients())}
    if isinstance(model, Deg4Model):
        q1, q2 = model.coefficients()
        return {"degree": 4, "coefficients": {"q1": _fmt(q1), "q2": _fmt(q2)}}
    if isinstance(model, Deg5Model):
        entries = [_fmt(e) for e in model.coefficients()]
        return {"degree": 5, "coefficients": {"matrix": entries}}
    raise InputError(f"not a genus one model: {model!r}")


def model_from_dict(data) -> GenusOneModel:
    try:
        degree = data["degree"]
        coeffs = data["coefficients"]
        if degree == 1:
            return Deg1Model(*[as_scalar(c) for c in coeffs])
        if degree == 2:
            return Deg2Model.from_coefficients(coeffs["p"], coeffs["q"])
        if degree == 3:
            return Deg3Model.from_coefficients(coeffs)
        if degree == 4:
            return Deg4Model.from_coefficients(coeffs["q1"], coeffs["q2"])
        if degree == 5:
            return Deg5Model.from_coefficients(coeffs["matrix"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed model data: {exc}") from exc
    raise InputError(f"unsupported model degree: {degree!r}")


def dumps_model(model: GenusOneModel) -> str:
    return json.dumps(model_to_dict(model), indent=2) + "\n"


def loads_model(text: str) -> GenusOneModel:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return model_from_dict(data)
