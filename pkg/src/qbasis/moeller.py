"""Gröbner éscalier and reduced Gröbner basis of ``ker Theta``.

Monomials are visited in increasing order. Each candidate's evaluation
vector is reduced against those of the accepted monomials; independent
candidates join the éscalier, dependent ones yield a reduced basis element
from the dependence relation.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateFunctionalSet, DimensionMismatch
from .functionals import evaluate_monomial, evaluation_matrix
from .ideals import OrderIdeal, corner, divides
from .linalg import Echelon, rank
from .polynomial import Polynomial


@dataclass(frozen=True)
class EscalierResult:
    escalier: OrderIdeal
    corners: tuple
    groebner: tuple
    order: object

    @property
    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.groebner]


def _check(theta, order):
    if theta.dimension != order.dimension:
        raise DimensionMismatch("functional set arity %d, order arity %d" % (theta.dimension, order.dimension))


def escalier(theta, order):
    """Compute the éscalier, its corners and the reduced Gröbner basis of ``ker theta``."""
    _check(theta, order)
    d = theta.dimension
    funcs = theta.functionals()
    n = len(funcs)
    key = order.key

    echelon = Echelon(n)
    accepted = []
    leading = []
    basis = []
    frontier = {(0,) * d}
    while frontier:
        t = min(frontier, key=key)
        frontier.discard(t)
        if any(divides(lm, t) for lm in leading):
            continue
        vector = [evaluate_monomial(f, t) for f in funcs]
        residual, combo = echelon.reduce(vector)
        if any(residual):
            echelon.insert(t, vector)
            accepted.append(t)
            for i in range(d):
                frontier.add(t[:i] + (t[i] + 1,) + t[i + 1:])
        else:
            terms = {t: Fraction(1)}
            for u, c in combo.items():
                terms[u] = -c
            leading.append(t)
            basis.append(Polynomial(d, terms))
            frontier = {s for s in frontier if not divides(t, s)}

    if len(accepted) != n:
        raise DegenerateFunctionalSet(
            "degenerate functional set: conditions have rank %d, expected %d" % (len(accepted), n)
        )
    ideal = OrderIdeal(d, frozenset(accepted))
    basis.sort(key=lambda g: g.leading_monomial(order))
    return EscalierResult(ideal, tuple(corner(ideal)), tuple(basis), order)


def is_independent_mod_ideal(theta, monomials):
    """True iff the monomials are linearly independent modulo ``ker theta``."""
    monomials = [tuple(t) for t in monomials]
    if any(len(t) != theta.dimension for t in monomials):
        raise DimensionMismatch("monomial arity differs from %d" % theta.dimension)
    if len(set(monomials)) != len(monomials):
        return False
    if not monomials:
        return True
    return rank(evaluation_matrix(theta, monomials)) == len(monomials)


def normal_form(result, f):
    """Reduce ``f`` by the reduced Gröbner basis of ``result``.

    The remainder is supported on the éscalier and differs from ``f`` by an
    element of the ideal.
    """
    order = result.order
    if f.dimension != order.dimension:
        raise DimensionMismatch("polynomial arity %d, result arity %d" % (f.dimension, order.dimension))
    by_lm = [(g.leading_monomial(order), g) for g in result.groebner]
    inside = result.escalier.exponents
    terms = dict(f.terms)
    while True:
        outside = [e for e, c in terms.items() if c and e not in inside]
        if not outside:
            break
        t = max(outside, key=order.key)
        lm, g = next((lm, g) for lm, g in by_lm if divides(lm, t))
        shift = tuple(a - b for a, b in zip(t, lm))
        c = terms[t]
        for e, gc in g.items():
            s = tuple(a + b for a, b in zip(e, shift))
            terms[s] = terms.get(s, 0) - c * gc
    return Polynomial(f.dimension, terms)
