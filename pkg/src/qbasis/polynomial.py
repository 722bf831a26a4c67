"""Sparse multivariate polynomials with rational coefficients."""

from fractions import Fraction

from .errors import DimensionMismatch, ZeroPolynomial


def _check_exp(exp, d):
    exp = tuple(int(e) for e in exp)
    if len(exp) != d:
        raise DimensionMismatch("exponent %r has arity %d, expected %d" % (exp, len(exp), d))
    if any(e < 0 for e in exp):
        raise ValueError("negative exponent in %r" % (exp,))
    return exp


class Polynomial:
    """Immutable map from exponent tuples to nonzero :class:`Fraction` coefficients.

    Terms are kept in lexicographic exponent order, which is also the
    serialization order.
    """

    __slots__ = ("dimension", "_terms", "_hash")

    def __init__(self, dimension, terms=None):
        if dimension < 1:
            raise ValueError("dimension must be >= 1")
        acc = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for exp, coef in items:
            exp = _check_exp(exp, dimension)
            acc[exp] = acc.get(exp, 0) + Fraction(coef)
        self.dimension = dimension
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    @classmethod
    def constant(cls, d, c):
        return cls(d, {(0,) * d: c})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def variable(cls, d, i):
        """The variable ``x_i`` (1-based)."""
        return cls.monomial(tuple(1 if j == i - 1 else 0 for j in range(d)))

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def support(self):
        return [e for e, _ in self._terms]

    def coefficient(self, exp):
        return dict(self._terms).get(tuple(exp), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.dimension == other.dimension and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.dimension, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dimension, self._terms))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.dimension != self.dimension:
                raise DimensionMismatch("polynomials of arity %d and %d" % (self.dimension, other.dimension))
            return other
        return Polynomial.constant(self.dimension, other)

    def __add__(self, other):
        other = self._coerce(other)
        return Polynomial(self.dimension, list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.dimension, [(e, -c) for e, c in self._terms])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.dimension, [(e, c * other) for e, c in self._terms])
        other = self._coerce(other)
        acc = {}
        for ea, ca in self._terms:
            for eb, cb in other._terms:
                e = tuple(x + y for x, y in zip(ea, eb))
                acc[e] = acc.get(e, 0) + ca * cb
        return Polynomial(self.dimension, acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Polynomial.constant(self.dimension, 1)
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, point):
        """Evaluate at a point."""
        total = Fraction(0)
        for exp, c in self._terms:
            term = c
            for x, e in zip(point, exp):
                term *= Fraction(x) ** e
            total += term
        return total

    def leading_monomial(self, order):
        return leading_monomial(order, self)

    def leading_coefficient(self, order):
        return dict(self._terms)[leading_monomial(order, self)]

    def monic(self, order):
        return self * (1 / self.leading_coefficient(order))

    def __repr__(self):
        return "Polynomial(%d, %r)" % (self.dimension, {e: str(c) for e, c in self._terms})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp, c in reversed(self._terms):
            mono = "*".join(
                "x%d" % (i + 1) if e == 1 else "x%d^%d" % (i + 1, e) for i, e in enumerate(exp) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (c, mono))
        return " + ".join(parts).replace("+ -", "- ")


def leading_monomial(order, f):
    """The greatest exponent of ``f`` under ``order``."""
    if f.dimension != order.dimension:
        raise DimensionMismatch("polynomial arity %d, order arity %d" % (f.dimension, order.dimension))
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no leading monomial")
    return max(f.support(), key=order.key)
