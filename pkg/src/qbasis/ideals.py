"""Lower sets of exponents (order ideals of monomials) and their corners."""

from dataclasses import dataclass
from itertools import product

from .errors import DimensionMismatch, NotLowerSet


def _arity(exponents):
    arities = {len(e) for e in exponents}
    if len(arities) > 1:
        raise DimensionMismatch("exponents of mixed arity: %s" % sorted(arities))
    return arities.pop() if arities else None


def is_lower_set(exponents):
    """True iff every exponent's componentwise predecessors are all present."""
    A = {tuple(e) for e in exponents}
    _arity(A)
    for a in A:
        for i, ai in enumerate(a):
            if ai and a[:i] + (ai - 1,) + a[i + 1:] not in A:
                return False
    return True


def divisor_box(alpha):
    """All ``beta`` with ``0 <= beta <= alpha``, in lex order."""
    return [tuple(b) for b in product(*(range(a + 1) for a in alpha))]


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class OrderIdeal:
    dimension: int
    exponents: frozenset

    def __post_init__(self):
        exps = frozenset(tuple(int(x) for x in e) for e in self.exponents)
        if any(len(e) != self.dimension for e in exps):
            raise DimensionMismatch("exponent arity differs from dimension %d" % self.dimension)
        if any(x < 0 for e in exps for x in e):
            raise ValueError("negative exponent")
        if not is_lower_set(exps):
            raise NotLowerSet("set is not divisor-closed: %s" % sorted(exps))
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, exponents, dimension=None):
        exponents = [tuple(e) for e in exponents]
        if dimension is None:
            dimension = _arity(exponents)
            if dimension is None:
                raise ValueError("dimension needed for an empty order ideal")
        return cls(dimension, frozenset(exponents))

    def __len__(self):
        return len(self.exponents)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, exp):
        return tuple(exp) in self.exponents

    def sorted(self):
        return sorted(self.exponents)

    def corners(self):
        return corner(self)


def corner(O):
    """Minimal exponents outside ``O``: ``t`` not in ``O`` with ``t - e_i`` in ``O`` whenever ``t_i > 0``."""
    d = O.dimension
    if not O.exponents:
        return [(0,) * d]
    found = set()
    for a in O.exponents:
        for i in range(d):
            t = a[:i] + (a[i] + 1,) + a[i + 1:]
            if t in O.exponents or t in found:
                continue
            if all(not t[j] or t[:j] + (t[j] - 1,) + t[j + 1:] in O.exponents for j in range(d)):
                found.add(t)
    return sorted(found)
