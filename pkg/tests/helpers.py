"""Shared test fixtures: random models and transformations, golden data."""

from fractions import Fraction

from genus1 import (Deg1Model, Deg1Transform, Deg2Model, Deg2Transform,
                    Deg3Model, Deg3Transform, Deg4Model, Deg4Transform,
                    Deg5Model, Deg5Transform, scalar_det)

# Upper triangle of the 5x5 matrix of the order-5 Tate-Shafarevich element
# (the quintic with c4 = 2^44 * 151009 and c6 = -2^66 * 34871057); each row
# lists the coefficients of x1..x5 of one entry, in the order
# (1,2), (1,3), (1,4), (1,5), (2,3), (2,4), (2,5), (3,4), (3,5), (4,5).
WUTHRICH_ENTRIES = [
    [310, 3, 0, 0, 162],
    [-34, -5, 0, 0, -14],
    [10, 0, 0, 28, 16],
    [80, 0, 0, -32, 0],
    [6, 3, 0, 0, 2],
    [-6, 0, 7, -4, 0],
    [0, -14, -8, 0, 0],
    [0, 0, -1, 0, 0],
    [0, 2, 0, 0, 0],
    [-4, 0, 0, 0, 0],
]

WUTHRICH_C4 = 2 ** 44 * 151009
WUTHRICH_C6 = -(2 ** 66) * 34871057

# The five quadrics published for the same curve; the Pfaffians of the
# matrix above span the same space (each is -8 times the published one).
WUTHRICH_QUADRIC_COEFFS = {
    "p1": {(2, 0, 0, 0, 0): 3, (1, 0, 0, 0, 1): 1, (0, 1, 0, 1, 0): -1,
           (0, 0, 2, 0, 0): -1},
    "p2": {(2, 0, 0, 0, 0): 17, (1, 0, 1, 0, 0): -10, (1, 0, 0, 0, 1): 7,
           (0, 1, 0, 1, 0): -7, (0, 1, 0, 0, 1): -4, (0, 0, 1, 1, 0): 4},
}


def wuthrich_model() -> Deg5Model:
    return Deg5Model.from_coefficients(WUTHRICH_ENTRIES)


def random_matrix(rng, n, lo=-3, hi=3):
    """A random integer matrix with nonzero determinant."""
    while True:
        m = tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(n))
        if scalar_det(m) != 0:
            return m


def random_model(rng, degree, lo=-3, hi=3):
    coeff = lambda: rng.randint(lo, hi)
    if degree == 1:
        return Deg1Model(coeff(), coeff(), coeff(), coeff(), coeff())
    if degree == 2:
        return Deg2Model.from_coefficients([coeff() for _ in range(3)],
                                           [coeff() for _ in range(5)])
    if degree == 3:
        return Deg3Model.from_coefficients([coeff() for _ in range(10)])
    if degree == 4:
        return Deg4Model.from_coefficients([coeff() for _ in range(10)],
                                           [coeff() for _ in range(10)])
    if degree == 5:
        return Deg5Model.from_coefficients(
            [[rng.randint(-2, 2) for _ in range(5)] for _ in range(10)])
    raise ValueError(degree)


def random_transformation(rng, degree):
    unit = lambda: rng.choice([1, -1, 2, 3, Fraction(1, 2)])
    small = lambda: rng.randint(-2, 2)
    if degree == 1:
        return Deg1Transform(unit(), small(), small(), small())
    if degree == 2:
        return Deg2Transform(unit(), (small(), small(), small()),
                             random_matrix(rng, 2))
    if degree == 3:
        return Deg3Transform(unit(), random_matrix(rng, 3))
    if degree == 4:
        return Deg4Transform(random_matrix(rng, 2), random_matrix(rng, 4))
    if degree == 5:
        return Deg5Transform(random_matrix(rng, 5, -2, 2),
                             random_matrix(rng, 5, -2, 2))
    raise ValueError(degree)


def random_smooth_model(rng, degree, invariants_fn, lo=-3, hi=3):
    """A random model with nonzero discriminant."""
    while True:
        m = random_model(rng, degree, lo, hi)
        if invariants_fn(m).delta != 0:
            return m
