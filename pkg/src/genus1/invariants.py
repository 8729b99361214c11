"""Invariants c4, c6 and the discriminant of genus one models.

For every degree the invariants are scaled so that restriction to the
Weierstrass family gives the classical Tate values: a degree-1 model
(a1,..,a6) has

    b2 = a1^2 + 4 a2            c4 = b2^2 - 24 b4
    b4 = 2 a4 + a1 a3           c6 = -b2^3 + 36 b2 b4 - 216 b6
    b6 = a3^2 + 4 a6            Delta = (c4^3 - c6^2) / 1728
    b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2

and pushing the model through the family map to degree n = 2..5 must
reproduce exactly the same triple.  Under a transformation g the triple
rescales by the 4th, 6th and 12th powers of its det character.  A model
defines a smooth curve of genus one precisely when Delta != 0, and then
its Jacobian is the elliptic curve y^2 = x^3 - 27 c4 x - 54 c6.

Degrees 2, 3, 4 use the classical closed formulas (binary quartic
invariants, the Hessian syzygy of a ternary cubic, det(sA + tB)).  For
degree 5 no explicit polynomial formula is feasible (c4 alone has degree
20 in 50 variables); instead the invariants are evaluated through the
covariants of the model: the Pfaffian quadrics, the secant quintic, the
auxiliary quadrics expressing its gradient in the Pfaffians, and a pair
of quintic forms in dual spaces whose contraction lays out 40 c4 lambda
- 320 c6 lambda^3 + 128 c4^2 lambda^5.

Each of the degrees 3, 4, 5 also has an independent determinant formula
for the discriminant alone (6x6, 10x10 and 15x15 coefficient matrices,
equal to +-1728, +-16 and +-32 times Delta); these provide a fast path
and a strong cross-check on the main formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import NamedTuple

from .errors import (DegenerateModelError, InputError, InternalCheckError,
                     SingularModelError)
from .linalg import (adjugate, determinant, perm_sign, scalar_det,
                     scalar_rank, solve_linear)
from .models import (DEG3_RING, DEG4_RING, DEG5_RING,
                     QUADRIC_MONOMIALS_DEG4, Deg1Model, Deg2Model, Deg3Model,
                     Deg4Model, Deg5Model, GenusOneModel)
from .poly import Poly, Scalar, as_scalar, exact_divide, generators, monomials

V_RING = ("v1", "v2", "v3", "v4", "v5")
PENCIL_RING = ("lam",) + V_RING

# (i, j) index pairs, i <= j, of the 15 products p_i p_j.
_PAIRS15 = [(i, j) for i in range(5) for j in range(i, 5)]

# Fixed sign of each determinant-based discriminant (depends only on the
# row/column orderings chosen below; fixed once against the formula path
# and asserted by the test suite on random models).
DISC_MATRIX_FACTOR = {3: 1728, 4: 16, 5: 32}
DISC_MATRIX_SIGN = {3: 1, 4: -1, 5: 1}

# Scale folded into the quintic contraction so that the Weierstrass models
# y^2 = x^3 + Ax + B come out with c4 = -48A, c6 = -864B (see
# contract_quintics below; calibrated on A=-1,B=0 and A=0,B=1).
PAIRING_SCALE = Fraction(1)


class TateQuantities(NamedTuple):
    b2: Scalar
    b4: Scalar
    b6: Scalar
    b8: Scalar


class InvariantTriple(NamedTuple):
    c4: Scalar
    c6: Scalar
    delta: Scalar


def _triple(c4: Scalar, c6: Scalar) -> InvariantTriple:
    delta = (Fraction(c4) ** 3 - Fraction(c6) ** 2) / 1728
    return InvariantTriple(as_scalar(c4), as_scalar(c6), as_scalar(delta))


# ----------------------------------------------------------------------
# degree 1
# ----------------------------------------------------------------------

def tate_quantities(m: Deg1Model) -> TateQuantities:
    a1, a2, a3, a4, a6 = m.coefficients()
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return TateQuantities(b2, b4, b6, b8)


def invariants_deg1(m: Deg1Model) -> InvariantTriple:
    b2, b4, b6, b8 = tate_quantities(m)
    c4 = b2 * b2 - 24 * b4
    c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
    delta = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    triple = InvariantTriple(as_scalar(c4), as_scalar(c6), as_scalar(delta))
    if _triple(c4, c6).delta != triple.delta:
        raise InternalCheckError("c4^3 - c6^2 != 1728 Delta for a degree-1 model")
    return triple


# ----------------------------------------------------------------------
# degree 2
# ----------------------------------------------------------------------

def invariants_deg2(m: Deg2Model) -> InvariantTriple:
    # Complete the square: y^2 + py = q becomes y^2 = q + p^2/4.
    quartic = m.q + m.p * m.p * Fraction(1, 4)
    a, b, c, d, e = (quartic.coefficient((4 - i, i)) for i in range(5))
    c4 = 16 * (12 * a * e - 3 * b * d + c * c)
    c6 = 32 * (72 * a * c * e - 27 * a * d * d - 27 * b * b * e + 9 * b * c * d - 2 * c ** 3)
    return _triple(as_scalar(c4), as_scalar(c6))


# ----------------------------------------------------------------------
# degree 3
# ----------------------------------------------------------------------

def hessian(cubic: Poly, variables=("x", "y", "z")) -> Poly:
    """Hessian covariant -(1/2) det(d^2 U / dx_i dx_j) of a ternary cubic."""
    grads = [cubic.derivative(v) for v in variables]
    rows = [[g.derivative(v) for v in variables] for g in grads]
    return determinant(rows) * Fraction(-1, 2)


def invariants_deg3(m: Deg3Model) -> InvariantTriple:
    """Invariants of a ternary cubic U via the Hessian syzygy.

    With H = H(U), the cubic H(U + mu H) expands as

        (1 - 3 c4 mu^2 - 2 c6 mu^3) H + 3 (c4 mu + 2 c6 mu^2 + c4^2 mu^3) U

    so c4 and c6 fall out of the mu and mu^2 coefficients by exact
    division; both divisions succeed identically in the coefficients of U.
    """
    cubic = m.cubic
    if not cubic:
        return InvariantTriple(0, 0, 0)
    ring = DEG3_RING + ("mu",)
    lifted = cubic.lift(ring)
    hess = hessian(cubic).lift(ring)
    mu = Poly.variable(ring, "mu")
    expanded = hessian(lifted + mu * hess, DEG3_RING)

    quotient = exact_divide(expanded.coefficient_of("mu", 1), 3 * lifted)
    if quotient is None:
        raise InternalCheckError("mu coefficient of the Hessian syzygy is not 3 c4 U")
    c4 = quotient.constant_value()
    quotient = exact_divide(expanded.coefficient_of("mu", 2) + 3 * c4 * hess, 6 * lifted)
    if quotient is None:
        raise InternalCheckError("mu^2 coefficient of the Hessian syzygy is not 6 c6 U - 3 c4 H")
    c6 = quotient.constant_value()
    return _triple(c4, c6)


def discriminant_deg3_matrix(m: Deg3Model) -> Scalar:
    """Determinant of the 6x6 coefficient matrix of the partials of U and H.

    Equal to DISC_MATRIX_SIGN[3] * 1728 * Delta for every ternary cubic.
    """
    cubic = m.cubic
    hess = hessian(cubic)
    quadrics = ([cubic.derivative(v) for v in DEG3_RING]
                + [hess.derivative(v) for v in DEG3_RING])
    cols = monomials(DEG3_RING, 2)
    return scalar_det([[q.coefficient(e) for e in cols] for q in quadrics])


# ----------------------------------------------------------------------
# degree 4
# ----------------------------------------------------------------------

def _symmetric_matrix(q: Poly):
    """The symmetric matrix M with q = (1/2) x^T M x."""
    n = len(DEG4_RING)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            e = [0] * n
            e[i] += 1
            e[j] += 1
            c = q.coefficient(tuple(e))
            row.append(2 * c if i == j else c)
        out.append(row)
    return out


def _quadric_from_matrix(mat, ring) -> Poly:
    n = len(ring)
    terms = {}
    for i in range(n):
        for j in range(i, n):
            e = [0] * n
            e[i] += 1
            e[j] += 1
            c = Fraction(mat[i][j]) / 2 if i == j else mat[i][j]
            if c:
                terms[tuple(e)] = as_scalar(c)
    return Poly(ring, terms)


def invariants_deg4(m: Deg4Model) -> InvariantTriple:
    """Invariants of a quadric pair via the binary quartic det(sA + tB)."""
    mat_a = _symmetric_matrix(m.q1)
    mat_b = _symmetric_matrix(m.q2)
    ring = ("s", "t")
    s, t = generators(ring)
    pencil = [[mat_a[i][j] * s + mat_b[i][j] * t for j in range(4)] for i in range(4)]
    quartic = determinant(pencil)
    a, b, c, d, e = (quartic.coefficient((4 - i, i)) for i in range(5))
    c4 = 12 * a * e - 3 * b * d + c * c
    c6 = Fraction(72 * a * c * e - 27 * a * d * d - 27 * b * b * e + 9 * b * c * d - 2 * c ** 3) / 2
    return _triple(as_scalar(c4), as_scalar(c6))


def deg4_auxiliary_quadrics(m: Deg4Model):
    """The quadrics of the symmetric matrices T1, T2 defined by

        adj(s adj A + t adj B) = a^2 A s^3 + a T1 s^2 t + e T2 s t^2 + e^2 B t^3

    where a = det A, e = det B.  T1 and T2 are polynomial in the model, so
    they are computed under a perturbation A + eps, B + eps (which makes
    both determinants nonzero in Q[eps]), divided out exactly, and then
    evaluated at eps = 0.  This keeps degenerate pencils (det A = 0 or
    det B = 0) on the same code path.
    """
    mat_a = _symmetric_matrix(m.q1)
    mat_b = _symmetric_matrix(m.q2)
    ring = ("s", "t", "eps")
    s, t, eps = generators(ring)
    zero = Poly.zero(ring)
    a_eps = [[Poly.constant(ring, mat_a[i][j]) + (eps if i == j else zero)
              for j in range(4)] for i in range(4)]
    b_eps = [[Poly.constant(ring, mat_b[i][j]) + (eps if i == j else zero)
              for j in range(4)] for i in range(4)]
    adj_a = adjugate(a_eps)
    adj_b = adjugate(b_eps)
    det_a = determinant(a_eps)
    det_b = determinant(b_eps)
    pencil = [[s * adj_a[i][j] + t * adj_b[i][j] for j in range(4)] for i in range(4)]
    mixed = adjugate(pencil)

    t1 = [[None] * 4 for _ in range(4)]
    t2 = [[None] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            entry = mixed[i][j]
            part = exact_divide(entry.coefficient_of("s", 2).coefficient_of("t", 1), det_a)
            if part is None:
                raise InternalCheckError("s^2 t part of the mixed adjugate is not divisible by det A")
            t1[i][j] = part.evaluate((0, 0, 0))
            part = exact_divide(entry.coefficient_of("s", 1).coefficient_of("t", 2), det_b)
            if part is None:
                raise InternalCheckError("s t^2 part of the mixed adjugate is not divisible by det B")
            t2[i][j] = part.evaluate((0, 0, 0))
    return _quadric_from_matrix(t1, DEG4_RING), _quadric_from_matrix(t2, DEG4_RING)


def deg4_omega_quadric(m: Deg4Model, r: int, s: int) -> Poly:
    """The quadric Omega_{r,s} (indices 1-based, r != s): complete (r, s)
    to a permutation with ascending tail and form the signed 2x2 minor of
    the gradients of q1, q2 on the remaining variables.  Antisymmetric
    under swapping r and s."""
    if r == s or not {r, s} <= {1, 2, 3, 4}:
        raise InputError("omega quadrics need two distinct indices in 1..4")
    u, v = (k for k in range(4) if k not in (r - 1, s - 1))
    sign = perm_sign((r - 1, s - 1, u, v))
    xu, xv = DEG4_RING[u], DEG4_RING[v]
    omega = (m.q1.derivative(xu) * m.q2.derivative(xv)
             - m.q1.derivative(xv) * m.q2.derivative(xu))
    return omega if sign > 0 else -omega


def discriminant_deg4_matrix(m: Deg4Model) -> Scalar:
    """Determinant of the 10x10 coefficient matrix of q1, q2, q1', q2' and
    the six quadrics Omega_{r,s}; equal to DISC_MATRIX_SIGN[4] * 16 * Delta."""
    q1p, q2p = deg4_auxiliary_quadrics(m)
    quadrics = [m.q1, m.q2, q1p, q2p]
    quadrics += [deg4_omega_quadric(m, r, s)
                 for r in range(1, 5) for s in range(r + 1, 5)]
    return scalar_det([[q.coefficient(e) for e in QUADRIC_MONOMIALS_DEG4]
                       for q in quadrics])


# ----------------------------------------------------------------------
# degree 5
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Deg5Covariants:
    """Intermediate covariants of the degree-5 evaluation algorithm."""

    pfaffians: tuple       # p1..p5, quadrics in x1..x5
    secant_quintic: Poly   # det of the Pfaffian Jacobian; cuts out the secant variety
    aux_quadrics: tuple    # q1..q5 in v1..v5, with dS/dx_i = q_i(p1..p5)
    dual_quintic: Poly     # det(sum_k d^2 p_k/dx_i dx_j v_k), in dual coordinates
    pencil_quintic: Poly   # det(lam dq_i/dv_j + sum_k dphi_jk/dx_i v_k)


def deg5_covariants(model: Deg5Model) -> Deg5Covariants:
    """Build the covariants of the degree-5 evaluation algorithm; raises
    DegenerateModelError when the products p_i p_j are linearly dependent
    (in which case all the invariants vanish)."""
    pf = model.pfaffians()

    mono4 = monomials(DEG5_RING, 4)
    quartics = [pf[i] * pf[j] for i, j in _PAIRS15]
    product_rows = [[q.coefficient(e) for e in mono4] for q in quartics]
    if scalar_rank(product_rows) != 15:
        raise DegenerateModelError("the quartics p_i p_j are linearly dependent")

    jac = [[p.derivative(v) for v in DEG5_RING] for p in pf]
    secant = determinant(jac)

    # dS/dx_i is a quadric in the Pfaffians; 70 equations, 15 unknowns.
    system = [[product_rows[k][mi] for k in range(15)] for mi in range(len(mono4))]
    aux = []
    for xi in DEG5_RING:
        gradient = secant.derivative(xi)
        rhs = [gradient.coefficient(e) for e in mono4]
        sol = solve_linear(system, rhs)
        if sol is None:
            raise InternalCheckError(f"no quadric expresses dS/d{xi} in the Pfaffians")
        terms = {}
        for c, (j, k) in zip(sol, _PAIRS15):
            if c:
                e = [0] * 5
                e[j] += 1
                e[k] += 1
                terms[tuple(e)] = c
        aux.append(Poly(V_RING, terms))

    v_gens = generators(V_RING)
    zero_v = Poly.zero(V_RING)
    dual_rows = []
    for i, xi in enumerate(DEG5_RING):
        row = []
        for xj in DEG5_RING:
            entry = zero_v
            for k in range(5):
                c = pf[k].derivative(xi).derivative(xj).constant_value()
                if c:
                    entry = entry + c * v_gens[k]
            row.append(entry)
        dual_rows.append(row)
    dual_quintic = determinant(dual_rows)

    lam = Poly.variable(PENCIL_RING, "lam")
    pencil_gens = generators(PENCIL_RING)
    phi = model.matrix()
    unit = [tuple(int(a == i) for a in range(5)) for i in range(5)]
    zero_n = Poly.zero(PENCIL_RING)
    pencil_rows = []
    for i in range(5):
        row = []
        for j in range(5):
            entry = lam * aux[i].derivative(V_RING[j]).lift(PENCIL_RING)
            for k in range(5):
                c = phi[j][k].coefficient(unit[i])
                if c:
                    entry = entry + c * pencil_gens[k + 1]
            row.append(entry)
        pencil_rows.append(row)
    pencil_quintic = determinant(pencil_rows)

    return Deg5Covariants(tuple(pf), secant, tuple(aux), dual_quintic, pencil_quintic)


_FACTORIALS = (1, 1, 2, 6, 24, 120)


def contract_quintics(dual_quintic: Poly, pencil_quintic: Poly) -> dict:
    """Pair a quintic in dual coordinates against one in the v_i, per power
    of lam: <v*^alpha, v^beta> = alpha! delta_{alpha beta}, times the fixed
    PAIRING_SCALE.  Returns {lam power: scalar}, zero entries omitted."""
    out: dict[int, Scalar] = {}
    for exps, coeff in pencil_quintic.terms.items():
        k = exps[0]
        alpha = exps[1:]
        dual_coeff = dual_quintic.terms.get(alpha)
        if dual_coeff:
            weight = 1
            for a in alpha:
                weight *= _FACTORIALS[a]
            out[k] = out.get(k, 0) + coeff * dual_coeff * weight
    return {k: as_scalar(v * PAIRING_SCALE) for k, v in out.items() if v}


def invariants_deg5(m: Deg5Model) -> InvariantTriple:
    """Evaluate c4, c6, Delta of a 5x5 alternating matrix of linear forms.

    Degenerate models failing the linear-independence check have all
    invariants zero.  Internal consistency of the contraction (only odd
    powers of lam, and the lam^5 coefficient giving exactly c4^2) is
    asserted; a failure indicates a bug, not bad input.
    """
    try:
        cov = deg5_covariants(m)
    except DegenerateModelError:
        return InvariantTriple(0, 0, 0)
    pairing = contract_quintics(cov.dual_quintic, cov.pencil_quintic)
    if any(k % 2 == 0 for k in pairing):
        raise InternalCheckError("even powers of lam survive the quintic contraction")
    c4 = as_scalar(Fraction(pairing.get(1, 0)) / 40)
    c6 = as_scalar(Fraction(pairing.get(3, 0)) / -320)
    c8 = as_scalar(Fraction(pairing.get(5, 0)) / 128)
    if c8 != c4 * c4:
        raise InternalCheckError("the lam^5 coefficient of the contraction is not 128 c4^2")
    return _triple(c4, c6)


def deg5_omega_quadric(m: Deg5Model, r: int, s: int) -> Poly:
    """The quadric Omega_{r,s} (indices 1-based, r != s): complete (r, s)
    to a permutation with ascending tail (t3, t4, t5) and form

        sign(perm) * sum_{i,j} dp_i/dx_t3 * dphi_ij/dx_t4 * dp_j/dx_t5.

    Antisymmetric under swapping r and s, and only well defined modulo
    the span of the Pfaffians."""
    if r == s or not {r, s} <= {1, 2, 3, 4, 5}:
        raise InputError("omega quadrics need two distinct indices in 1..5")
    pf = m.pfaffians()
    phi = m.matrix()
    rest = [k for k in range(5) if k not in (r - 1, s - 1)]
    sign = perm_sign((r - 1, s - 1, *rest))
    unit = [tuple(int(a == i) for a in range(5)) for i in range(5)]
    left = [p.derivative(DEG5_RING[rest[0]]) for p in pf]
    right = [p.derivative(DEG5_RING[rest[2]]) for p in pf]
    omega = Poly.zero(DEG5_RING)
    for i in range(5):
        if not left[i]:
            continue
        for j in range(5):
            c = phi[i][j].coefficient(unit[rest[1]])
            if c:
                omega = omega + c * left[i] * right[j]
    return omega if sign > 0 else -omega


def discriminant_deg5_matrix(m: Deg5Model) -> Scalar:
    """Determinant of the 15x15 coefficient matrix of p1..p5 and the ten
    quadrics Omega_{r,s}; equal to DISC_MATRIX_SIGN[5] * 32 * Delta.

    Omega_{r,s} is only defined modulo the span of the Pfaffians, but the
    determinant is insensitive to that since the p-rows span that space.
    """
    quadrics = m.pfaffians()
    quadrics += [deg5_omega_quadric(m, r, s)
                 for r in range(1, 6) for s in range(r + 1, 6)]
    cols = monomials(DEG5_RING, 2)
    return scalar_det([[q.coefficient(e) for e in cols] for q in quadrics])


# ----------------------------------------------------------------------
# dispatch and derived quantities
# ----------------------------------------------------------------------

def invariants(m: GenusOneModel) -> InvariantTriple:
    """c4, c6, Delta of a model of any degree."""
    if isinstance(m, Deg1Model):
        return invariants_deg1(m)
    if isinstance(m, Deg2Model):
        return invariants_deg2(m)
    if isinstance(m, Deg3Model):
        return invariants_deg3(m)
    if isinstance(m, Deg4Model):
        return invariants_deg4(m)
    if isinstance(m, Deg5Model):
        return invariants_deg5(m)
    raise InputError(f"not a genus one model: {m!r}")


def jacobian(m: GenusOneModel) -> Deg1Model:
    """The Jacobian elliptic curve y^2 = x^3 - 27 c4 x - 54 c6."""
    c4, c6, delta = invariants(m)
    if delta == 0:
        raise SingularModelError("a singular model has no Jacobian")
    return Deg1Model(0, 0, 0, -27 * c4, -54 * c6)


def j_invariant(m: GenusOneModel) -> Scalar:
    """j = c4^3 / Delta (requires Delta != 0)."""
    c4, _, delta = invariants(m)
    if delta == 0:
        raise SingularModelError("the j-invariant needs Delta != 0")
    return as_scalar(Fraction(c4) ** 3 / Fraction(delta))


# ----------------------------------------------------------------------
# the weight-1 invariant in characteristic 2
# ----------------------------------------------------------------------

def _as_int(value, what: str) -> int:
    value = as_scalar(value)
    if not isinstance(value, int):
        raise InputError(f"{what} must have integer coefficients")
    return value


def _compose_perm(a, b):
    return tuple(a[b[i] - 1] for i in range(5))


@lru_cache(maxsize=1)
def _coset_reps():
    """Lexicographically least representatives of the left cosets of
    D5 = <(12345), (25)(34)> in S5 (twelve of them)."""
    rotation = (2, 3, 4, 5, 1)
    reflection = (1, 5, 4, 3, 2)
    group = {(1, 2, 3, 4, 5)}
    frontier = [(1, 2, 3, 4, 5)]
    while frontier:
        g = frontier.pop()
        for h in (rotation, reflection):
            new = _compose_perm(g, h)
            if new not in group:
                group.add(new)
                frontier.append(new)
    if len(group) != 10:
        raise InternalCheckError("the dihedral subgroup of S5 has the wrong order")
    reps = []
    seen = set()
    for sigma in permutations((1, 2, 3, 4, 5)):
        if sigma in seen:
            continue
        reps.append(sigma)
        seen.update(_compose_perm(sigma, d) for d in group)
    if len(reps) != 12:
        raise InternalCheckError("expected 12 cosets of D5 in S5")
    return tuple(reps)


def a1_char2(m: GenusOneModel) -> int:
    """The weight-1 invariant of an integer model reduced mod 2.

    This is the reduction of the Weierstrass coefficient a1: the xz
    coefficient of p (degree 2), the xyz coefficient of the cubic
    (degree 3), the six-term pairing of off-diagonal coefficients
    (degree 4), or the x1..x5 coefficient of a sum of entry products over
    coset representatives of the dihedral group (degree 5).
    """
    if isinstance(m, Deg2Model):
        for c in (*m.coefficients()[0], *m.coefficients()[1]):
            _as_int(c, "degree-2 model")
        return _as_int(m.p.coefficient((1, 1)), "degree-2 model") % 2
    if isinstance(m, Deg3Model):
        for c in m.coefficients():
            _as_int(c, "degree-3 model")
        return _as_int(m.cubic.coefficient((1, 1, 1)), "degree-3 model") % 2
    if isinstance(m, Deg4Model):
        q1c, q2c = m.coefficients()
        for c in (*q1c, *q2c):
            _as_int(c, "degree-4 model")

        def off(q, i, j):
            e = [0] * 4
            e[i] += 1
            e[j] += 1
            return _as_int(q.coefficient(tuple(e)), "degree-4 model")

        pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        total = 0
        for i, j in pairs:
            k, l = (a for a in range(4) if a not in (i, j))
            total += off(m.q1, i, j) * off(m.q2, k, l)
        return total % 2
    if isinstance(m, Deg5Model):
        for entry in m.coefficients():
            for c in entry:
                _as_int(c, "degree-5 model")
        phi = m.matrix()
        total = 0
        for sigma in _coset_reps():
            product = Poly.constant(DEG5_RING, 1)
            for i in range(5):
                product = product * phi[sigma[i] - 1][sigma[(i + 1) % 5] - 1]
                if not product:
                    break
            total += product.coefficient((1, 1, 1, 1, 1))
        return int(total) % 2
    raise InputError("the characteristic-2 invariant is defined for degrees 2..5")
