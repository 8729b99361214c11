"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
All comparisons are exact (integer / rational equality, zero tolerance).
"""

import random
import time
from fractions import Fraction

from genus1 import (DISC_MATRIX_FACTOR, DISC_MATRIX_SIGN, Deg1Model,
                    DegenerateModelError, Poly, a1_char2, apply,
                    contract_quintics, deg5_covariants, det_character,
                    discriminant_deg3_matrix, discriminant_deg4_matrix,
                    discriminant_deg5_matrix, invariants, invariants_deg1,
                    j_invariant, project_from_point, weierstrass_model)

from helpers import (WUTHRICH_C4, WUTHRICH_C6, random_model,
                     random_smooth_model, random_transformation,
                     wuthrich_model)

MATRIX_DISCRIMINANTS = {3: discriminant_deg3_matrix,
                        4: discriminant_deg4_matrix,
                        5: discriminant_deg5_matrix}


def _report(number, description, fn):
    try:
        fn()
    except BaseException:
        print(f"ACCEPTANCE {number}: FAIL - {description}")
        raise
    print(f"ACCEPTANCE {number}: PASS - {description}")


def test_criterion_01_golden_quintic():
    def check():
        start = time.monotonic()
        c4, c6, delta = invariants(wuthrich_model())
        elapsed = time.monotonic() - start
        assert c4 == WUTHRICH_C4
        assert c6 == WUTHRICH_C6
        assert delta == (WUTHRICH_C4 ** 3 - WUTHRICH_C6 ** 2) // 1728
        assert elapsed < 60.0, f"took {elapsed:.1f}s"
    _report(1, "golden degree-5 model: exact c4, c6, Delta within 60s", check)


def test_criterion_02_weierstrass_restriction():
    def check():
        rng = random.Random(1002)
        for _ in range(50):
            w = Deg1Model(*[rng.randint(-5, 5) for _ in range(5)])
            expected = invariants_deg1(w)
            for degree in (2, 3, 4, 5):
                assert invariants(weierstrass_model(w, degree)) == expected
    _report(2, "invariants of pi_n(w) equal the degree-1 invariants, 50 tuples", check)


def test_criterion_03_weight_covariance():
    def check():
        rng = random.Random(1003)
        for degree in (1, 2, 3, 4, 5):
            for _ in range(20):
                m = random_model(rng, degree)
                g = random_transformation(rng, degree)
                d = Fraction(det_character(g))
                base = invariants(m)
                moved = invariants(apply(g, m))
                assert Fraction(moved.c4) == d ** 4 * base.c4
                assert Fraction(moved.c6) == d ** 6 * base.c6
                assert Fraction(moved.delta) == d ** 12 * base.delta
    _report(3, "c4, c6, Delta scale by the 4th, 6th, 12th character powers", check)


def test_criterion_04_hessian_syzygy():
    def check():
        from genus1 import hessian, invariants_deg3
        from genus1.models import DEG3_RING
        rng = random.Random(1004)
        ring = DEG3_RING + ("lam", "mu")
        lam = Poly.variable(ring, "lam")
        mu = Poly.variable(ring, "mu")
        for _ in range(20):
            m = random_model(rng, 3, lo=-5, hi=5)
            c4, c6, _ = invariants_deg3(m)
            cubic = m.cubic.lift(ring)
            hess = hessian(m.cubic).lift(ring)
            lhs = hessian(lam * cubic + mu * hess, DEG3_RING)
            rhs = (3 * (c4 * lam ** 2 * mu + 2 * c6 * lam * mu ** 2 + c4 ** 2 * mu ** 3) * cubic
                   + (lam ** 3 - 3 * c4 * lam * mu ** 2 - 2 * c6 * mu ** 3) * hess)
            assert lhs == rhs
    _report(4, "H(lam U + mu H) syzygy holds exactly for 20 random cubics", check)


def test_criterion_05_cross_method_discriminants():
    def check():
        rng = random.Random(1005)
        for degree in (3, 4, 5):
            kappa = DISC_MATRIX_FACTOR[degree]
            sign = DISC_MATRIX_SIGN[degree]
            for _ in range(20):
                m = random_smooth_model(rng, degree, invariants)
                delta = invariants(m).delta
                assert MATRIX_DISCRIMINANTS[degree](m) == sign * kappa * delta
    _report(5, "determinant discriminants equal eps_n * kappa_n * Delta", check)


def test_criterion_06_degree5_internal_checks():
    def check():
        rng = random.Random(1006)
        models = [wuthrich_model(),
                  weierstrass_model(Deg1Model(0, 0, 0, -1, 0), 5),
                  weierstrass_model(Deg1Model(1, -2, 3, 0, 2), 5)]
        models += [random_model(rng, 5) for _ in range(10)]
        for m in models:
            try:
                cov = deg5_covariants(m)
            except DegenerateModelError:
                continue  # failed step 2: nothing to check
            pairing = contract_quintics(cov.dual_quintic, cov.pencil_quintic)
            assert all(k % 2 == 1 for k in pairing), "even lambda power survived"
            c4 = Fraction(pairing.get(1, 0)) / 40
            c8 = Fraction(pairing.get(5, 0)) / 128
            assert c8 == c4 ** 2
    _report(6, "even lambda coefficients vanish and c8 = c4^2 on all step-2 passes", check)


def test_criterion_07_smoothness_criterion():
    def check():
        nodal = Deg1Model(0, 0, 0, -3, 2)
        smooth = Deg1Model(0, 0, 0, -1, 0)
        assert invariants_deg1(nodal).delta == 0
        assert invariants_deg1(smooth).delta == 64
        for degree in (2, 3, 4, 5):
            assert invariants(weierstrass_model(nodal, degree)).delta == 0
            assert invariants(weierstrass_model(smooth, degree)).delta == 64
    _report(7, "Delta = 0 exactly for the nodal family, 64 for the smooth one", check)


def test_criterion_08_projection_preserves_j():
    def check():
        rng = random.Random(1008)
        done = 0
        while done < 10:
            a, b = rng.randint(-6, 6), rng.randint(-6, 6)
            w = Deg1Model(0, 0, 0, a, b)
            c4, _, delta = invariants_deg1(w)
            if delta == 0:
                continue
            projected = project_from_point(weierstrass_model(w, 5), (0, 0, 0, 0, 1))
            assert projected.degree == 4
            assert j_invariant(projected) == Fraction(c4) ** 3 / delta
            done += 1
    _report(8, "projection from (0:0:0:0:1) preserves the j-invariant, 10 models", check)


def test_criterion_09_char2_invariant():
    def check():
        rng = random.Random(1009)
        for _ in range(20):
            w = Deg1Model(*[rng.randint(-9, 9) for _ in range(5)])
            for degree in (2, 3, 4, 5):
                assert a1_char2(weierstrass_model(w, degree)) == w.a1 % 2
    _report(9, "a1_char2(pi_n(w)) = a1 mod 2 for 20 random integer tuples", check)


def test_criterion_10_integrality():
    def check():
        rng = random.Random(1010)
        for degree in (1, 2, 3, 4, 5):
            for _ in range(10):
                c4, c6, delta = invariants(random_model(rng, degree, lo=-5, hi=5))
                assert isinstance(c4, int)
                assert isinstance(c6, int)
                assert isinstance(delta, int)
    _report(10, "integer models give integer c4, c6, Delta (50 models)", check)
