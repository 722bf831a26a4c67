"""Monomial orders as integer weight matrices.

An order on exponents of arity ``d`` is given by a ``d x d`` integer matrix
``M`` of rank ``d``: ``a < b`` iff ``M a`` is lexicographically smaller than
``M b``. Variables are numbered ``1..d`` in all public constructors.
"""

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionMismatch, InvalidOrder
from .linalg import rank

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class MonomialOrder:
    dimension: int
    matrix: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        d = self.dimension
        matrix = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", matrix)
        if d < 1:
            raise InvalidOrder("dimension must be >= 1")
        if any(len(row) != d for row in matrix):
            raise InvalidOrder("every matrix row must have length %d" % d)
        if rank([[Fraction(x) for x in row] for row in matrix]) != d:
            raise InvalidOrder("matrix must have rank %d" % d)
        for j in range(d):
            top = next(row[j] for row in matrix if row[j] != 0)
            if top < 0:
                raise InvalidOrder("topmost nonzero entry of column %d is negative" % (j + 1))
        if not self.name:
            object.__setattr__(self, "name", "matrix:" + json.dumps([list(r) for r in matrix], separators=(",", ":")))

    def key(self, exponent):
        """Sort key: ``a < b`` in this order iff ``key(a) < key(b)``."""
        if len(exponent) != self.dimension:
            raise DimensionMismatch("exponent %r has arity %d, order has %d" % (tuple(exponent), len(exponent), self.dimension))
        return tuple(sum(m * e for m, e in zip(row, exponent)) for row in self.matrix)

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self):
        return self.name


def compare(order, a, b):
    """Return LESS, EQUAL or GREATER for exponents ``a`` and ``b``."""
    if len(a) != len(b):
        raise DimensionMismatch("exponents of different arity")
    return order.compare(a, b)


def _unit(d, i):
    return tuple(1 if j == i else 0 for j in range(d))


def _check_perm(perm, d):
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(1, d + 1)):
        raise InvalidOrder("%r is not a permutation of 1..%d" % (perm, d))
    return perm


def lex(d, perm=None):
    """Lex order with ``x_perm[0] > x_perm[1] > ...`` (default ``x1 > ... > xd``)."""
    perm = _check_perm(perm or range(1, d + 1), d)
    return MonomialOrder(d, tuple(_unit(d, p - 1) for p in perm), "lex:" + ",".join(map(str, perm)))


def grlex(d, perm=None):
    """Total degree first, ties broken by lex in ``perm``."""
    perm = _check_perm(perm or range(1, d + 1), d)
    rows = ((1,) * d,) + tuple(_unit(d, p - 1) for p in perm[:-1])
    return MonomialOrder(d, rows, "grlex:" + ",".join(map(str, perm)))


def grevlex(d):
    rows = ((1,) * d,) + tuple(tuple(-x for x in _unit(d, j)) for j in range(d - 1, 0, -1))
    return MonomialOrder(d, rows, "grevlex")


def lex_i(d, i):
    """The lex order ``x_i > x_{i+1} > ... > x_d > x_1 > ... > x_{i-1}``."""
    if not 1 <= i <= d:
        raise InvalidOrder("variable index %d out of range 1..%d" % (i, d))
    return lex(d, list(range(i, d + 1)) + list(range(1, i)))


def elim(d, i):
    """Canonical elimination order for ``x_i``."""
    order = lex_i(d, i)
    return MonomialOrder(d, order.matrix, "elim:%d" % i)


def named_order(kind, d):
    """Build an order from a spec string.

    Accepted forms: ``lex``, ``lex:2,3,1``, ``grlex[:perm]``, ``grevlex``,
    ``elim:i`` and ``matrix:[[...],...]``.
    """
    head, _, arg = kind.strip().partition(":")
    head = head.lower()
    try:
        if head == "matrix":
            return MonomialOrder(d, tuple(tuple(r) for r in json.loads(arg)))
        perm = [int(p) for p in arg.split(",")] if arg else None
    except (ValueError, TypeError) as exc:
        raise InvalidOrder("cannot parse order %r: %s" % (kind, exc)) from None
    if head == "lex":
        return lex(d, perm)
    if head == "grlex":
        return grlex(d, perm)
    if head == "grevlex":
        if arg:
            raise InvalidOrder("grevlex takes no argument")
        return grevlex(d)
    if head == "elim":
        if not perm or len(perm) != 1:
            raise InvalidOrder("elim needs a single variable index")
        return elim(d, perm[0])
    raise InvalidOrder("unknown order kind %r" % head)


def random_order(d, rng=None, max_entry=4):
    """A random valid matrix order.

    The first row is a nonnegative weight vector; draws are repeated until
    the matrix passes the validity check.
    """
    rng = rng or random.Random()
    while True:
        rows = [tuple(rng.randint(0, max_entry) for _ in range(d))]
        rows += [tuple(rng.randint(-max_entry, max_entry) for _ in range(d)) for _ in range(d - 1)]
        try:
            return MonomialOrder(d, tuple(rows))
        except InvalidOrder:
            continue
