"""Group structure, characters, the action on models, and gamma."""

import random
from fractions import Fraction

import pytest

from genus1 import (Deg1Model, Deg1Transform, Deg4Transform, Deg5Transform,
                    InputError, apply, compose, det_character, gamma,
                    identity_transform, transformation_from_dict,
                    transformation_to_dict, weierstrass_model)
from genus1.linalg import identity_matrix

from helpers import random_model, random_transformation


class TestDetCharacter:
    def test_degree5_identity(self):
        g = Deg5Transform(identity_matrix(5), identity_matrix(5))
        assert det_character(g) == 1

    def test_degree1_inverse_u(self):
        assert det_character(Deg1Transform(2, 0, 0, 0)) == Fraction(1, 2)

    def test_degree4_product(self):
        g = Deg4Transform(((2, 0), (0, 1)), identity_matrix(4))
        assert det_character(g) == 2

    def test_multiplicative(self):
        rng = random.Random(3)
        for degree in (1, 2, 3, 4, 5):
            for _ in range(3):
                g1 = random_transformation(rng, degree)
                g2 = random_transformation(rng, degree)
                assert (det_character(compose(g1, g2))
                        == det_character(g1) * det_character(g2))


class TestAction:
    def test_identity_fixes_models(self):
        rng = random.Random(4)
        for degree in (1, 2, 3, 4, 5):
            m = random_model(rng, degree)
            assert apply(identity_transform(degree), m) == m

    def test_degree_mismatch(self):
        with pytest.raises(InputError):
            apply(identity_transform(2), Deg1Model(0, 0, 0, 0, 0))

    def test_degree5_diagonal_scaling(self):
        m = weierstrass_model(Deg1Model(0, 0, 0, 0, 0), 5)
        a = ((2, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0),
             (0, 0, 0, 1, 0), (0, 0, 0, 0, 1))
        moved = apply(Deg5Transform(a, identity_matrix(5)), m)
        original = m.matrix()
        got = moved.matrix()
        for i in range(5):
            for j in range(5):
                factor = (2 if i == 0 else 1) * (2 if j == 0 else 1)
                assert got[i][j] == factor * original[i][j]

    def test_group_law(self):
        rng = random.Random(6)
        for degree in (1, 2, 3, 4, 5):
            for _ in range(3):
                m = random_model(rng, degree)
                g1 = random_transformation(rng, degree)
                g2 = random_transformation(rng, degree)
                assert apply(g1, apply(g2, m)) == apply(compose(g1, g2), m)


class TestGamma:
    def test_identity_maps_to_identity(self):
        for degree in (2, 3, 4, 5):
            assert gamma(Deg1Transform(1, 0, 0, 0), degree) == identity_transform(degree)

    def test_gamma2_scaling(self):
        g = gamma(Deg1Transform(2, 0, 0, 0), 2)
        assert g.mu == Fraction(1, 8)
        assert g.r == (0, 0, 0)
        assert g.B == ((4, 0), (0, 1))

    def test_gamma3_character(self):
        assert det_character(gamma(Deg1Transform(2, 0, 0, 0), 3)) == Fraction(1, 2)

    def test_homomorphism(self):
        rng = random.Random(8)
        for _ in range(4):
            g1 = random_transformation(rng, 1)
            g2 = random_transformation(rng, 1)
            for degree in (2, 3, 4, 5):
                assert (gamma(compose(g1, g2), degree)
                        == compose(gamma(g1, degree), gamma(g2, degree)))

    def test_equivariance(self):
        rng = random.Random(9)
        for _ in range(5):
            w = random_model(rng, 1)
            g = random_transformation(rng, 1)
            for degree in (2, 3, 4, 5):
                lhs = apply(gamma(g, degree), weierstrass_model(w, degree))
                rhs = weierstrass_model(apply(g, w), degree)
                assert lhs == rhs

    def test_character_preserved(self):
        rng = random.Random(10)
        for _ in range(5):
            g = random_transformation(rng, 1)
            for degree in (2, 3, 4, 5):
                assert det_character(gamma(g, degree)) == det_character(g)


class TestSerialization:
    def test_round_trip(self):
        rng = random.Random(12)
        for degree in (1, 2, 3, 4, 5):
            g = random_transformation(rng, degree)
            assert transformation_from_dict(transformation_to_dict(g)) == g

    def test_degenerate_rejected(self):
        with pytest.raises(InputError):
            Deg1Transform(0, 1, 1, 1)
        with pytest.raises(InputError):
            Deg4Transform(((1, 1), (1, 1)), identity_matrix(4))
        with pytest.raises(InputError):
            transformation_from_dict({"degree": 3, "mu": "0", "B": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})
