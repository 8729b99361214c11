"""The transformation groups acting on genus one models.

Each degree has its own group of coordinate changes:

* degree 1 -- [u; r, s, t]:  x = u^2 x' + r,  y = u^3 y' + u^2 s x' + t,
  and the equation is rescaled by u^-6;
* degree 2 -- [mu, r, B]:  (x, z) replaced via the 2x2 matrix B,
  y = mu^-1 y' + r0 x'^2 + r1 x'z' + r2 z'^2, equation rescaled by mu^2;
* degree 3 -- [mu, B]:  cubic rescaled by mu, variables via B (3x3);
* degree 4 -- [A, B]:  quadric pair mixed by A (2x2), variables via B (4x4);
* degree 5 -- [A, B]:  matrix phi -> A phi A^T, variables via B (5x5).

Variables always substitute as x_j = sum_i B_ij x_i'.  Each group carries
the multiplicative character ``det_character`` (u^-1, mu det B, mu det B,
det A det B, (det A)^2 det B); the invariants of weight k rescale by its
k-th power under the action.

``gamma`` is the embedding of the degree-1 group into the degree-n group
compatible with the Weierstrass family: applying gamma(g) to a Weierstrass
model is the same as pushing g through the family map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .errors import InputError, InternalCheckError
from .linalg import mat_mul, scalar_det
from .models import (DEG1_RING, DEG2_RING, DEG3_RING, DEG4_RING, DEG5_RING,
                     Deg1Model, Deg2Model, Deg3Model, Deg4Model, Deg5Model,
                     GenusOneModel)
from .poly import Poly, Scalar, as_scalar, format_scalar, generators


def _upow(base: Scalar, k: int) -> Scalar:
    """base**k for possibly negative k, staying exact."""
    value = Fraction(base) ** k
    return int(value) if value.denominator == 1 else value


def _matrix(data, n: int, what: str):
    rows = tuple(tuple(as_scalar(x) for x in row) for row in data)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InputError(f"{what} must be a {n}x{n} matrix")
    return rows


@dataclass(frozen=True)
class Deg1Transform:
    u: Scalar
    r: Scalar
    s: Scalar
    t: Scalar

    degree = 1

    def __post_init__(self):
        for name in "urst":
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if self.u == 0:
            raise InputError("degree-1 transformation needs u != 0")


@dataclass(frozen=True)
class Deg2Transform:
    mu: Scalar
    r: tuple
    B: tuple

    degree = 2

    def __post_init__(self):
        object.__setattr__(self, "mu", as_scalar(self.mu))
        r = tuple(as_scalar(x) for x in self.r)
        if len(r) != 3:
            raise InputError("degree-2 transformation needs r = (r0, r1, r2)")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "B", _matrix(self.B, 2, "B"))
        if self.mu * scalar_det(self.B) == 0:
            raise InputError("degree-2 transformation needs mu det B != 0")


@dataclass(frozen=True)
class Deg3Transform:
    mu: Scalar
    B: tuple

    degree = 3

    def __post_init__(self):
        object.__setattr__(self, "mu", as_scalar(self.mu))
        object.__setattr__(self, "B", _matrix(self.B, 3, "B"))
        if self.mu * scalar_det(self.B) == 0:
            raise InputError("degree-3 transformation needs mu det B != 0")


@dataclass(frozen=True)
class Deg4Transform:
    A: tuple
    B: tuple

    degree = 4

    def __post_init__(self):
        object.__setattr__(self, "A", _matrix(self.A, 2, "A"))
        object.__setattr__(self, "B", _matrix(self.B, 4, "B"))
        if scalar_det(self.A) * scalar_det(self.B) == 0:
            raise InputError("degree-4 transformation needs det A det B != 0")


@dataclass(frozen=True)
class Deg5Transform:
    A: tuple
    B: tuple

    degree = 5

    def __post_init__(self):
        object.__setattr__(self, "A", _matrix(self.A, 5, "A"))
        object.__setattr__(self, "B", _matrix(self.B, 5, "B"))
        if scalar_det(self.A) * scalar_det(self.B) == 0:
            raise InputError("degree-5 transformation needs det A det B != 0")


Transformation = (Deg1Transform | Deg2Transform | Deg3Transform
                  | Deg4Transform | Deg5Transform)


def identity_transform(degree: int) -> Transformation:
    eye = lambda n: tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    if degree == 1:
        return Deg1Transform(1, 0, 0, 0)
    if degree == 2:
        return Deg2Transform(1, (0, 0, 0), eye(2))
    if degree == 3:
        return Deg3Transform(1, eye(3))
    if degree == 4:
        return Deg4Transform(eye(2), eye(4))
    if degree == 5:
        return Deg5Transform(eye(5), eye(5))
    raise InputError(f"no transformation group of degree {degree}")


def det_character(g: Transformation) -> Scalar:
    """The multiplicative character by whose powers invariants rescale."""
    if isinstance(g, Deg1Transform):
        return _upow(g.u, -1)
    if isinstance(g, (Deg2Transform, Deg3Transform)):
        return g.mu * scalar_det(g.B)
    if isinstance(g, Deg4Transform):
        return scalar_det(g.A) * scalar_det(g.B)
    if isinstance(g, Deg5Transform):
        det_a = scalar_det(g.A)
        return det_a * det_a * scalar_det(g.B)
    raise InputError(f"not a transformation: {g!r}")


# ----------------------------------------------------------------------
# the action on models
# ----------------------------------------------------------------------

def _substitution(ring, B) -> dict:
    """Images of the substitution x_j = sum_i B_ij x_i'."""
    gens = generators(ring)
    n = len(ring)
    return {
        ring[j]: sum((B[i][j] * gens[i] for i in range(n)), Poly.zero(ring))
        for j in range(n)
    }


def _apply_deg1(g: Deg1Transform, m: Deg1Model) -> Deg1Model:
    x, y, z = generators(DEG1_RING)
    u, r, s, t = g.u, g.r, g.s, g.t
    images = {
        "x": u * u * x + r * z,
        "y": u ** 3 * y + u * u * s * x + t * z,
        "z": z,
    }
    scaled = m.equation().substitute(images) * _upow(u, -6)
    new = Deg1Model(
        scaled.coefficient((1, 1, 1)),
        -scaled.coefficient((2, 0, 1)),
        scaled.coefficient((0, 1, 2)),
        -scaled.coefficient((1, 0, 2)),
        -scaled.coefficient((0, 0, 3)),
    )
    if new.equation() != scaled:
        raise InternalCheckError("degree-1 substitution left a non-Weierstrass polynomial")
    return new


def _rho(r) -> Poly:
    return Poly(DEG2_RING, {(2, 0): r[0], (1, 1): r[1], (0, 2): r[2]})


def _apply_deg2(g: Deg2Transform, m: Deg2Model) -> Deg2Model:
    sub = _substitution(DEG2_RING, g.B)
    p_b = m.p.substitute(sub)
    q_b = m.q.substitute(sub)
    rho = _rho(g.r)
    new_p = g.mu * (p_b + 2 * rho)
    new_q = g.mu * g.mu * (q_b - p_b * rho - rho * rho)
    return Deg2Model(new_p, new_q)


def apply(g: Transformation, m: GenusOneModel) -> GenusOneModel:
    """The transformed model g . m (degrees of g and m must agree)."""
    if g.degree != m.degree:
        raise InputError(f"transformation degree {g.degree} != model degree {m.degree}")
    if isinstance(g, Deg1Transform):
        return _apply_deg1(g, m)
    if isinstance(g, Deg2Transform):
        return _apply_deg2(g, m)
    if isinstance(g, Deg3Transform):
        return Deg3Model(g.mu * m.cubic.substitute(_substitution(DEG3_RING, g.B)))
    if isinstance(g, Deg4Transform):
        sub = _substitution(DEG4_RING, g.B)
        q1 = m.q1.substitute(sub)
        q2 = m.q2.substitute(sub)
        return Deg4Model(g.A[0][0] * q1 + g.A[0][1] * q2,
                         g.A[1][0] * q1 + g.A[1][1] * q2)
    if isinstance(g, Deg5Transform):
        sub = _substitution(DEG5_RING, g.B)
        phi = [[entry.substitute(sub) for entry in row] for row in m.matrix()]
        a = g.A
        zero = Poly.zero(DEG5_RING)
        rows = [
            [
                sum((a[i][k] * phi[k][l] * a[j][l] for k in range(5) for l in range(5)
                     if a[i][k] and a[j][l] and phi[k][l]), zero)
                for j in range(5)
            ]
            for i in range(5)
        ]
        return Deg5Model.from_matrix(rows)
    raise InputError(f"not a transformation: {g!r}")


def compose(g1: Transformation, g2: Transformation) -> Transformation:
    """The transformation with apply(g1, apply(g2, m)) == apply(compose(g1, g2), m)."""
    if g1.degree != g2.degree:
        raise InputError("cannot compose transformations of different degrees")
    if isinstance(g1, Deg1Transform):
        u1, r1, s1, t1 = g1.u, g1.r, g1.s, g1.t
        u2, r2, s2, t2 = g2.u, g2.r, g2.s, g2.t
        return Deg1Transform(
            u1 * u2,
            u2 * u2 * r1 + r2,
            u2 * s1 + s2,
            u2 ** 3 * t1 + u2 * u2 * s2 * r1 + t2,
        )
    if isinstance(g1, Deg2Transform):
        inv_mu2 = _upow(g2.mu, -1)
        rho = inv_mu2 * _rho(g1.r) + _rho(g2.r).substitute(_substitution(DEG2_RING, g1.B))
        r = (rho.coefficient((2, 0)), rho.coefficient((1, 1)), rho.coefficient((0, 2)))
        return Deg2Transform(g1.mu * g2.mu, r, mat_mul(g1.B, g2.B))
    if isinstance(g1, Deg3Transform):
        return Deg3Transform(g1.mu * g2.mu, mat_mul(g1.B, g2.B))
    if isinstance(g1, Deg4Transform):
        return Deg4Transform(mat_mul(g1.A, g2.A), mat_mul(g1.B, g2.B))
    if isinstance(g1, Deg5Transform):
        return Deg5Transform(mat_mul(g1.A, g2.A), mat_mul(g1.B, g2.B))
    raise InputError(f"not a transformation: {g1!r}")


# ----------------------------------------------------------------------
# gamma_n : degree-1 transformations -> degree-n transformations
# ----------------------------------------------------------------------

def gamma(g: Deg1Transform, degree: int) -> Transformation:
    """Embed [u; r, s, t] into the degree-n group, compatibly with the
    Weierstrass family: apply(gamma(g), pi_n(w)) == pi_n(apply(g, w)), and
    the det character is preserved."""
    if not isinstance(g, Deg1Transform):
        raise InputError("gamma expects a degree-1 transformation")
    u, r, s, t = g.u, g.r, g.s, g.t
    u2, u3, u4, u5 = u * u, u ** 3, u ** 4, u ** 5
    if degree == 2:
        return Deg2Transform(_upow(u, -3), (0, u2 * s, t), ((u2, 0), (r, 1)))
    if degree == 3:
        # x = u^2 x' + r z',  y = u^2 s x' + u^3 y' + t z',  z = z'
        # (the matrix in ring order x, y, z; the cubic rescales by u^-6).
        return Deg3Transform(_upow(u, -6), ((u2, u2 * s, 0), (0, u3, 0), (r, t, 1)))
    if degree == 4:
        a = ((_upow(u, -4), 0), (_upow(u, -6) * r, _upow(u, -6)))
        b = ((1, r, t, r * r),
             (0, u2, u2 * s, 2 * u2 * r),
             (0, 0, u3, 0),
             (0, 0, 0, u4))
        return Deg4Transform(a, b)
    if degree == 5:
        iu2 = _upow(u, -2)
        iu3 = _upow(u, -3)
        a = ((iu2 * 1, iu2 * -s, iu2 * (2 * r - s * s), iu2 * (r * s - t),
              iu2 * (-r * r + r * s * s - s * t)),
             (0, iu2 * u, iu2 * 2 * u * s, iu2 * -u * r, iu2 * u * (-2 * r * s + t)),
             (0, 0, iu2 * u2, 0, iu2 * -u2 * r),
             (0, 0, 0, iu2 * u3, iu2 * u3 * s),
             (0, 0, 0, 0, iu2 * u4))
        b = ((iu3 * 1, iu3 * r, iu3 * t, iu3 * r * r, iu3 * r * t),
             (0, iu3 * u2, iu3 * u2 * s, iu3 * 2 * u2 * r, iu3 * u2 * (r * s + t)),
             (0, 0, iu3 * u3, 0, iu3 * u3 * r),
             (0, 0, 0, iu3 * u4, iu3 * u4 * s),
             (0, 0, 0, 0, iu3 * u5))
        return Deg5Transform(a, b)
    raise InputError(f"gamma has no target of degree {degree} (expected 2..5)")


# ----------------------------------------------------------------------
# JSON encoding (same scalar conventions as model files)
# ----------------------------------------------------------------------

def transformation_to_dict(g: Transformation) -> dict:
    fmt = format_scalar
    rows = lambda m: [[fmt(x) for x in row] for row in m]
    if isinstance(g, Deg1Transform):
        return {"degree": 1, "u": fmt(g.u), "r": fmt(g.r), "s": fmt(g.s), "t": fmt(g.t)}
    if isinstance(g, Deg2Transform):
        return {"degree": 2, "mu": fmt(g.mu), "r": [fmt(x) for x in g.r], "B": rows(g.B)}
    if isinstance(g, Deg3Transform):
        return {"degree": 3, "mu": fmt(g.mu), "B": rows(g.B)}
    if isinstance(g, Deg4Transform):
        return {"degree": 4, "A": rows(g.A), "B": rows(g.B)}
    if isinstance(g, Deg5Transform):
        return {"degree": 5, "A": rows(g.A), "B": rows(g.B)}
    raise InputError(f"not a transformation: {g!r}")


def transformation_from_dict(data) -> Transformation:
    try:
        degree = data["degree"]
        if degree == 1:
            return Deg1Transform(data["u"], data["r"], data["s"], data["t"])
        if degree == 2:
            return Deg2Transform(data["mu"], data["r"], data["B"])
        if degree == 3:
            return Deg3Transform(data["mu"], data["B"])
        if degree == 4:
            return Deg4Transform(data["A"], data["B"])
        if degree == 5:
            return Deg5Transform(data["A"], data["B"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed transformation data: {exc}") from exc
    raise InputError(f"unsupported transformation degree: {degree!r}")
