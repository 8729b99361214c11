"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is stored as a dictionary mapping exponent tuples (one
non-negative integer per variable) to nonzero coefficients.  Coefficients
are plain Python ints or ``fractions.Fraction`` values, so every operation
is exact; no floating point is ever involved.  Integer coefficients are
kept as ints (big-int arithmetic is much faster than Fraction arithmetic)
and Fractions only appear when a division forces them.

Every polynomial carries the ordered tuple of variable names of its ring.
Arithmetic between polynomials requires identical variable tuples; this is
deliberate, so that a degree-5 model polynomial in x1..x5 can never be
silently combined with an auxiliary quadric in v1..v5.

The monomial order used for printing, leading terms and exact division is
graded lexicographic: higher total degree first, ties broken by the
exponent tuple (so the first variable in the ring is the biggest).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from operator import add
from typing import Mapping, Sequence, Union

Scalar = Union[int, Fraction]


def as_scalar(value) -> Scalar:
    """Coerce ``value`` to an exact scalar.

    Accepts ints, Fractions and strings like ``"5"`` or ``"-3/4"``.
    Floats are rejected: they would silently break exactness.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        return as_scalar(Fraction(value.strip()))
    raise TypeError(f"not an exact scalar: {value!r}")


def format_scalar(value: Scalar) -> str:
    """Render a scalar as ``"n"`` or ``"n/d"`` (the CLI output format)."""
    return str(as_scalar(value))


def _norm_coeff(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """Immutable sparse polynomial over an ordered tuple of variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Scalar] | None = None):
        variables = tuple(variables)
        clean: dict[tuple, Scalar] = {}
        if terms:
            nvars = len(variables)
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent tuple {exps} does not match variables {variables}")
                if any(e < 0 or not isinstance(e, int) for e in exps):
                    raise ValueError(f"bad exponent tuple {exps}")
                coeff = as_scalar(coeff)
                if coeff:
                    clean[exps] = coeff
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _make(cls, variables: tuple, terms: dict) -> "Poly":
        # Internal fast path: terms are already canonical (no zeros).
        self = object.__new__(cls)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", terms)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Poly":
        return cls._make(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Sequence[str], value) -> "Poly":
        value = as_scalar(value)
        variables = tuple(variables)
        if not value:
            return cls._make(variables, {})
        return cls._make(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "Poly":
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r} in ring {variables}")
        exps = tuple(int(v == name) for v in variables)
        return cls._make(variables, {exps: 1})

    # -- ring bookkeeping --------------------------------------------------

    def _same_ring(self, other: "Poly"):
        if self.variables != other.variables:
            raise ValueError(f"polynomial rings differ: {self.variables} vs {other.variables}")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._same_ring(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.variables, other)
        if isinstance(other, float):
            raise TypeError("float coefficients are not allowed (exact arithmetic only)")
        return NotImplemented

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            s = out.get(exps, 0) + coeff
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return Poly._make(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._make(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = as_scalar(other)
            if not other:
                return Poly._make(self.variables, {})
            return Poly._make(self.variables, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(add, e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly._make(self.variables, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if scalar == 0:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        return self * (Fraction(1) / scalar)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Poly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.variables, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset((e, Fraction(c)) for e, c in self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection --------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        """True if all terms share one total degree (zero counts for any)."""
        degrees = {sum(e) for e in self.terms}
        if not degrees:
            return True
        if degree is None:
            return len(degrees) == 1
        return degrees == {degree}

    def coefficient(self, exponents: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(exponents), 0)

    def coefficient_of(self, var: str, power: int) -> "Poly":
        """Collect terms with ``var`` raised exactly to ``power``.

        The result lives in the same ring with the exponent of ``var``
        reset to zero, i.e. this is the coefficient of var**power when the
        polynomial is read as a polynomial in ``var``.
        """
        idx = self._var_index(var)
        out = {}
        for exps, coeff in self.terms.items():
            if exps[idx] == power:
                e = exps[:idx] + (0,) + exps[idx + 1:]
                out[e] = out.get(e, 0) + coeff
        return Poly(self.variables, out)

    def constant_value(self) -> Scalar:
        """The value of a constant polynomial (raises if non-constant)."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            (exps, coeff), = self.terms.items()
            if not any(exps):
                return coeff
        raise ValueError(f"polynomial is not constant: {self}")

    def _var_index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise ValueError(f"unknown variable {var!r} in ring {self.variables}") from None

    # -- calculus and maps -------------------------------------------------

    def derivative(self, var: str) -> "Poly":
        """Exact partial derivative with respect to ``var``."""
        idx = self._var_index(var)
        out = {}
        for exps, coeff in self.terms.items():
            k = exps[idx]
            if k:
                e = exps[:idx] + (k - 1,) + exps[idx + 1:]
                out[e] = out.get(e, 0) + k * coeff
        return Poly._make(self.variables, {e: c for e, c in out.items() if c})

    def evaluate(self, values: Sequence) -> Scalar:
        """Evaluate at a point given as one scalar per ring variable."""
        if len(values) != len(self.variables):
            raise ValueError("wrong number of values")
        values = [as_scalar(v) for v in values]
        total: Scalar = 0
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term *= v ** e
            total += term
        return _norm_coeff(total)

    def substitute(self, images: Mapping[str, "Poly"]) -> "Poly":
        """Substitute a polynomial for every variable of this ring.

        ``images`` must provide one Poly per variable, all in a common
        target ring (which may differ from this one).
        """
        missing = [v for v in self.variables if v not in images]
        if missing:
            raise ValueError(f"no image given for variables {missing}")
        target = None
        for v in self.variables:
            img = images[v]
            if target is None:
                target = img.variables
            elif img.variables != target:
                raise ValueError("substitution images live in different rings")
        result = Poly.zero(target)
        powers: dict[tuple, Poly] = {}

        def power(vi: int, e: int) -> Poly:
            key = (vi, e)
            if key not in powers:
                powers[key] = images[self.variables[vi]] ** e
            return powers[key]

        for exps, coeff in self.terms.items():
            term = Poly.constant(target, coeff)
            for vi, e in enumerate(exps):
                if e:
                    term = term * power(vi, e)
            result = result + term
        return result

    def lift(self, variables: Sequence[str]) -> "Poly":
        """Reinterpret in a larger ring containing all current variables."""
        variables = tuple(variables)
        positions = []
        for v in self.variables:
            if v not in variables:
                raise ValueError(f"target ring {variables} does not contain {v!r}")
            positions.append(variables.index(v))
        out = {}
        for exps, coeff in self.terms.items():
            e = [0] * len(variables)
            for pos, k in zip(positions, exps):
                e[pos] = k
            out[tuple(e)] = coeff
        return Poly._make(variables, out)

    # -- printing ----------------------------------------------------------

    def _ordered_terms(self):
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for exps, coeff in self._ordered_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exps) if e
            )
            c = as_scalar(coeff)
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if not mono:
                body = format_scalar(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_scalar(mag)}*{mono}"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({self.variables}, {self})"


def generators(variables: Sequence[str]) -> tuple:
    """The variables of a ring as polynomials, in ring order."""
    variables = tuple(variables)
    return tuple(Poly.variable(variables, v) for v in variables)


def monomials(variables: Sequence[str], degree: int) -> list:
    """Exponent tuples of all monomials of a total degree, descending graded-lex."""
    n = len(variables)
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def leading_term(p: Poly) -> tuple:
    """(exponents, coefficient) of the graded-lex leading term."""
    if not p.terms:
        raise ValueError("zero polynomial has no leading term")
    exps = max(p.terms, key=lambda e: (sum(e), e))
    return exps, p.terms[exps]


def exact_divide(num: Poly, den: Poly):
    """Return ``q`` with ``num == q * den`` if it exists, else None.

    Division by leading-term reduction under graded lex.  Because leading
    terms are multiplicative, the first non-divisible leading term proves
    that no exact quotient exists.
    """
    num._same_ring(den)
    if not den:
        raise ZeroDivisionError("exact division by the zero polynomial")
    den_exps, den_coeff = leading_term(den)
    quotient: dict[tuple, Scalar] = {}
    rest = num
    while rest:
        exps, coeff = leading_term(rest)
        diff = tuple(map(lambda a, b: a - b, exps, den_exps))
        if any(e < 0 for e in diff):
            return None
        c = _norm_coeff(Fraction(coeff) / Fraction(den_coeff))
        quotient[diff] = c
        rest = rest - Poly._make(num.variables, {diff: c}) * den
    return Poly(num.variables, quotient)
