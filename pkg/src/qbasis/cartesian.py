"""Cartesian point sets: construction, recognition by nested slices, and the
non-Cartesian family with a unique quotient basis.

Axes are numbered ``1..d``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, EmptyInput, InvalidDescription, QBasisError
from .functionals import PointSet, to_point
from .ideals import OrderIdeal


@dataclass(frozen=True)
class CartesianDescription:
    """A lower set ``A`` and, per axis, the node values ``y_i(0), y_i(1), ...``.

    The described point set is ``{(y_1(a_1), ..., y_d(a_d)) : a in A}``.
    """

    lower_set: OrderIdeal
    node_values: tuple

    def __post_init__(self):
        A = self.lower_set
        if not isinstance(A, OrderIdeal):
            raise InvalidDescription("lower_set must be an OrderIdeal")
        if not len(A):
            raise InvalidDescription("lower set is empty")
        nodes = tuple(tuple(Fraction(v) for v in axis) for axis in self.node_values)
        if len(nodes) != A.dimension:
            raise InvalidDescription("need node values for each of the %d axes" % A.dimension)
        for i, axis in enumerate(nodes):
            needed = 1 + max(a[i] for a in A.exponents)
            if len(axis) != needed:
                raise InvalidDescription("axis %d has %d node values, expected %d" % (i + 1, len(axis), needed))
            if len(set(axis)) != len(axis):
                raise InvalidDescription("node values on axis %d are not distinct" % (i + 1))
        object.__setattr__(self, "node_values", nodes)

    @property
    def dimension(self):
        return self.lower_set.dimension


@dataclass(frozen=True)
class Slice:
    value: Fraction
    projection: PointSet


@dataclass(frozen=True)
class SliceFamily:
    axis: int
    slices: tuple

    def values(self):
        return [s.value for s in self.slices]

    def projections(self):
        return [s.projection.as_set() for s in self.slices]


def build_cartesian(desc):
    y = desc.node_values
    pts = tuple(tuple(y[i][a[i]] for i in range(len(a))) for a in desc.lower_set.sorted())
    return PointSet(desc.dimension, pts)


def _as_pointset(points):
    return points if isinstance(points, PointSet) else PointSet.of(points)


def slices(points, axis):
    """Group points by coordinate ``axis`` and drop that coordinate.

    Sorted by decreasing slice size, ties by increasing coordinate value.
    """
    Xi = _as_pointset(points)
    d = Xi.dimension
    if d < 2:
        raise QBasisError("no slices in dimension 1")
    if not 1 <= axis <= d:
        raise DimensionMismatch("axis %d out of range 1..%d" % (axis, d))
    if not len(Xi):
        raise EmptyInput("empty point set")
    k = axis - 1
    groups = {}
    for p in Xi:
        groups.setdefault(p[k], []).append(p[:k] + p[k + 1:])
    ordered = sorted(groups.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    return SliceFamily(axis, tuple(Slice(v, PointSet(d - 1, tuple(sorted(ps)))) for v, ps in ordered))


def _nested(family):
    projections = family.projections()
    return all(b <= a for a, b in zip(projections, projections[1:]))


def failing_axis(points):
    """First axis whose slices are not a chain under inclusion, or None."""
    Xi = _as_pointset(points)
    if Xi.dimension < 2:
        return None
    for axis in range(1, Xi.dimension + 1):
        if not _nested(slices(Xi, axis)):
            return axis
    return None


def is_cartesian(points):
    """Return a :class:`CartesianDescription` of the point set, or None.

    Coordinate values on each axis are indexed by the rank of their slice,
    which makes the recovered index set lower whenever slices are nested.
    """
    Xi = _as_pointset(points)
    if not len(Xi):
        raise EmptyInput("empty point set")
    d = Xi.dimension
    if d == 1:
        values = sorted(p[0] for p in Xi)
        return CartesianDescription(OrderIdeal(1, frozenset((j,) for j in range(len(values)))), (tuple(values),))
    families = [slices(Xi, axis) for axis in range(1, d + 1)]
    if not all(_nested(f) for f in families):
        return None
    nodes = tuple(tuple(f.values()) for f in families)
    index = [{v: j for j, v in enumerate(axis)} for axis in nodes]
    A = frozenset(tuple(index[i][p[i]] for i in range(d)) for p in Xi)
    return CartesianDescription(OrderIdeal(d, A), nodes)


def slice_lower_sets(desc, axis):
    """The lower sets ``A_{axis,j}`` for ``j = 0..m``: members of ``A`` with coordinate ``j`` on ``axis``, that coordinate dropped."""
    d = desc.dimension
    if d < 2:
        raise QBasisError("no slices in dimension 1")
    if not 1 <= axis <= d:
        raise DimensionMismatch("axis %d out of range 1..%d" % (axis, d))
    k = axis - 1
    m = len(desc.node_values[k])
    out = []
    for j in range(m):
        members = frozenset(a[:k] + a[k + 1:] for a in desc.lower_set.exponents if a[k] == j)
        out.append(OrderIdeal(d - 1, members))
    return out


def lift(ideal, axis, j):
    """Insert coordinate ``j`` at position ``axis`` in every exponent of ``ideal``."""
    k = axis - 1
    return {a[:k] + (j,) + a[k:] for a in ideal.exponents}


def xi_family(d):
    """Four points in dimension ``d >= 3``: non-Cartesian, yet with a unique quotient basis."""
    if d < 3:
        raise QBasisError("xi_family needs d >= 3")
    tail = (0,) * (d - 3)
    base = [(0, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1)]
    return PointSet(d, tuple(to_point(p + tail) for p in base))
