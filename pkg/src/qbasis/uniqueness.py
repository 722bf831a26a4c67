"""Deciding whether ``ker Theta`` has a unique monomial order quotient basis."""

import os
from dataclasses import dataclass
from typing import Optional

from .errors import NotQuotientBasis, OracleTooLarge
from .ideals import OrderIdeal, corner, divisor_box
from .linalg import Echelon
from .functionals import evaluate_monomial
from .moeller import escalier, is_independent_mod_ideal
from .orders import lex_i

DEFAULT_ORACLE_SIZE = 10
DEFAULT_ORACLE_DIM = 4


@dataclass(frozen=True)
class Witness:
    order_a: str
    order_b: str
    escalier_a: OrderIdeal
    escalier_b: OrderIdeal


@dataclass(frozen=True)
class UniquenessVerdict:
    unique: bool
    basis: Optional[OrderIdeal] = None
    witness: Optional[Witness] = None
    universal_gb: Optional[tuple] = None


def unique_quotient_basis(theta):
    """Compare the éscaliers under the elimination orders ``lex(1..d)``.

    They all coincide exactly when the quotient basis is unique; the shared
    reduced Gröbner basis is then universal.
    """
    d = theta.dimension
    results = [escalier(theta, lex_i(d, i)) for i in range(1, d + 1)]
    first = results[0]
    for other in results[1:]:
        if other.escalier != first.escalier:
            return UniquenessVerdict(
                False,
                witness=Witness(first.order.name, other.order.name, first.escalier, other.escalier),
            )
    return UniquenessVerdict(True, basis=first.escalier, universal_gb=first.groebner)


def universal_groebner_basis(theta):
    """The order-independent reduced Gröbner basis, or None if there is none."""
    return unique_quotient_basis(theta).universal_gb


def corner_dependence_unique(theta, O):
    """Uniqueness test for a known quotient basis ``O``.

    ``O`` is the unique quotient basis iff for every corner ``alpha`` the
    divisor box ``{beta <= alpha}`` is dependent modulo the ideal.
    """
    if not isinstance(O, OrderIdeal):
        O = OrderIdeal(theta.dimension, frozenset(tuple(e) for e in O))
    if len(O) != len(theta) or not is_independent_mod_ideal(theta, O.sorted()):
        raise NotQuotientBasis("O is not a quotient basis")
    return all(not is_independent_mod_ideal(theta, divisor_box(alpha)) for alpha in corner(O))


def oracle_limit():
    """Maximum ``#Theta`` for the enumeration oracle (env ``QB_ORACLE_LIMIT``)."""
    value = os.environ.get("QB_ORACLE_LIMIT")
    return int(value) if value else DEFAULT_ORACLE_SIZE


def enumerate_quotient_bases(theta, max_results=None, max_size=None, max_dim=None):
    """Every order ideal of size ``#Theta`` that is independent modulo ``ker Theta``.

    Lower sets are grown one corner at a time, breadth first. Since every
    subset of an independent set is independent, dependent partial ideals
    are dropped as soon as they appear. Results are sorted canonically.
    """
    n = len(theta)
    d = theta.dimension
    max_size = oracle_limit() if max_size is None else max_size
    max_dim = DEFAULT_ORACLE_DIM if max_dim is None else max_dim
    if n > max_size or d > max_dim:
        raise OracleTooLarge(
            "instance too large for oracle: #Theta=%d (limit %d), d=%d (limit %d)" % (n, max_size, d, max_dim)
        )
    funcs = theta.functionals()

    def vec(t):
        return [evaluate_monomial(f, t) for f in funcs]

    # each level: canonical key -> (order ideal exponents, echelon of their vectors)
    root = Echelon(n)
    root.insert((0,) * d, vec((0,) * d))
    level = {((0,) * d,): (frozenset({(0,) * d}), root)}
    cache = {}
    for _ in range(n - 1):
        nxt = {}
        for members, ech in level.values():
            ideal = OrderIdeal(d, members)
            for t in corner(ideal):
                key = tuple(sorted(members | {t}))
                if key in nxt:
                    continue
                if t not in cache:
                    cache[t] = vec(t)
                grown = ech.copy()
                if grown.insert(t, cache[t]):
                    nxt[key] = (members | {t}, grown)
        level = nxt
    bases = [OrderIdeal(d, members) for key, (members, _) in sorted(level.items())]
    if max_results is not None:
        bases = bases[:max_results]
    return bases

