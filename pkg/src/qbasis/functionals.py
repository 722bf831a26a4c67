"""Interpolation conditions: point evaluations composed with partial derivatives.

A :class:`FunctionalSet` holds sites ``(xi_k, A_k)`` where ``A_k`` is a lower
set of derivative multi-indices; it stands for the functionals
``f -> (d^alpha f)(xi_k)`` for every ``alpha`` in ``A_k``. Derivatives are
unnormalized (no division by ``alpha!``).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, DuplicatePoints, EmptyInput
from .ideals import OrderIdeal


def to_point(coords):
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class PointSet:
    dimension: int
    points: tuple

    def __post_init__(self):
        pts = tuple(to_point(p) for p in self.points)
        if any(len(p) != self.dimension for p in pts):
            raise DimensionMismatch("point arity differs from dimension %d" % self.dimension)
        if len(set(pts)) != len(pts):
            raise DuplicatePoints("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, points):
        points = [to_point(p) for p in points]
        if not points:
            raise EmptyInput("dimension needed for an empty point set")
        return cls(len(points[0]), tuple(points))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def as_set(self):
        return frozenset(self.points)


@dataclass(frozen=True)
class Functional:
    point: tuple
    derivative: tuple

    def __post_init__(self):
        object.__setattr__(self, "point", to_point(self.point))
        object.__setattr__(self, "derivative", tuple(int(a) for a in self.derivative))
        if len(self.point) != len(self.derivative):
            raise DimensionMismatch("point and derivative arity differ")

    def __call__(self, f):
        return evaluate(self, f)


def _falling(b, a):
    r = 1
    for k in range(a):
        r *= b - k
    return r


def evaluate_monomial(theta, beta):
    """``theta`` applied to ``x^beta``."""
    alpha = theta.derivative
    if len(beta) != len(alpha):
        raise DimensionMismatch("monomial arity %d, functional arity %d" % (len(beta), len(alpha)))
    value = Fraction(1)
    for b, a, x in zip(beta, alpha, theta.point):
        if a > b:
            return Fraction(0)
        value *= _falling(b, a) * x ** (b - a)
    return value


def evaluate(theta, f):
    """Apply the functional to a polynomial: ``(d^alpha f)(xi)``."""
    if f.dimension != len(theta.derivative):
        raise DimensionMismatch("polynomial arity %d, functional arity %d" % (f.dimension, len(theta.derivative)))
    return sum((c * evaluate_monomial(theta, e) for e, c in f.items()), Fraction(0))


@dataclass(frozen=True)
class FunctionalSet:
    dimension: int
    sites: tuple  # of (point, OrderIdeal)

    def __post_init__(self):
        sites = []
        for point, derivs in self.sites:
            point = to_point(point)
            if len(point) != self.dimension:
                raise DimensionMismatch("point %r has arity %d" % (point, len(point)))
            if not isinstance(derivs, OrderIdeal):
                derivs = OrderIdeal(self.dimension, frozenset(tuple(a) for a in derivs))
            if derivs.dimension != self.dimension:
                raise DimensionMismatch("derivative set arity differs")
            if not len(derivs):
                raise EmptyInput("site %r has an empty derivative set" % (point,))
            sites.append((point, derivs))
        if not sites:
            raise EmptyInput("a functional set needs at least one condition")
        if len({p for p, _ in sites}) != len(sites):
            raise DuplicatePoints("site points must be pairwise distinct")
        object.__setattr__(self, "sites", tuple(sites))

    @property
    def points(self):
        return [p for p, _ in self.sites]

    def functionals(self):
        """Flattened conditions: sites in order, derivatives lexicographically."""
        return [Functional(p, a) for p, derivs in self.sites for a in derivs.sorted()]

    def __len__(self):
        return sum(len(derivs) for _, derivs in self.sites)

    def annihilates(self, f):
        return all(evaluate(theta, f) == 0 for theta in self.functionals())


def from_points(points):
    """Lagrange conditions: one pure evaluation per point."""
    if not isinstance(points, PointSet):
        points = PointSet.of(points)
    if not len(points):
        raise EmptyInput("an ideal needs at least one condition")
    zero = OrderIdeal(points.dimension, frozenset({(0,) * points.dimension}))
    return FunctionalSet(points.dimension, tuple((p, zero) for p in points))


def evaluation_matrix(theta, monomials):
    """Rows are the flattened functionals, columns the given monomials."""
    funcs = theta.functionals() if isinstance(theta, FunctionalSet) else list(theta)
    monomials = [tuple(t) for t in monomials]
    return [[evaluate_monomial(f, t) for t in monomials] for f in funcs]


def evaluation_vector(theta, monomial):
    return [evaluate_monomial(f, monomial) for f in theta.functionals()]
