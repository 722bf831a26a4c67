"""JSON encoding of the library's values.

Rationals are strings ``"p/q"`` (``"p"`` when ``q == 1``); decimal strings
such as ``"2.3"`` are accepted on input and parsed exactly.
"""

import json
from fractions import Fraction

from .cartesian import CartesianDescription
from .errors import SchemaError
from .functionals import FunctionalSet, PointSet, from_points
from .ideals import OrderIdeal
from .polynomial import Polynomial


def parse_rational(value):
    if isinstance(value, bool):
        raise SchemaError("expected a rational, got %r" % (value,))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise SchemaError("cannot parse rational %r" % (value,))


def format_rational(q):
    return str(Fraction(q))


def _exponent(value, d=None):
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in value):
        raise SchemaError("exponent must be a list of nonnegative integers, got %r" % (value,))
    if d is not None and len(value) != d:
        raise SchemaError("exponent %r has arity %d, expected %d" % (value, len(value), d))
    return tuple(value)


def _require(obj, key, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError("missing field %r" % key)
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise SchemaError("field %r has the wrong type" % key)
    return value


def _dimension(obj):
    d = _require(obj, "dimension", int)
    if isinstance(d, bool) or d < 1:
        raise SchemaError("dimension must be a positive integer")
    return d


def exponents_to_json(exps):
    return [list(e) for e in sorted(exps)]


# polynomials

def polynomial_to_json(f):
    return [{"exp": list(e), "coef": format_rational(c)} for e, c in f.items()]


def polynomial_from_json(obj, d=None):
    if isinstance(obj, dict) and "terms" in obj:
        d = obj.get("dimension", d)
        obj = obj["terms"]
    if not isinstance(obj, list):
        raise SchemaError("polynomial must be a list of terms")
    terms = [(_exponent(_require(t, "exp"), d), parse_rational(_require(t, "coef"))) for t in obj]
    if d is None:
        if not terms:
            raise SchemaError("dimension needed for the zero polynomial")
        d = len(terms[0][0])
    if any(len(e) != d for e, _ in terms):
        raise SchemaError("polynomial terms of mixed arity")
    return Polynomial(d, terms)


# order ideals

def order_ideal_to_json(O):
    return {"dimension": O.dimension, "exponents": exponents_to_json(O.exponents)}


def order_ideal_from_json(obj):
    if isinstance(obj, list):
        exps = [_exponent(e) for e in obj]
        if not exps:
            raise SchemaError("dimension needed for an empty order ideal")
        return OrderIdeal.of(exps)
    d = _dimension(obj)
    return OrderIdeal(d, frozenset(_exponent(e, d) for e in _require(obj, "exponents", list)))


# points and functionals

def point_to_json(p):
    return [format_rational(x) for x in p]


def pointset_to_json(Xi):
    return {"dimension": Xi.dimension, "points": [point_to_json(p) for p in Xi]}


def _point(value, d):
    if not isinstance(value, list) or len(value) != d:
        raise SchemaError("point %r must be a list of %d rationals" % (value, d))
    return tuple(parse_rational(x) for x in value)


def pointset_from_json(obj):
    d = _dimension(obj)
    return PointSet(d, tuple(_point(p, d) for p in _require(obj, "points", list)))


def functional_set_to_json(theta):
    return {
        "dimension": theta.dimension,
        "sites": [
            {"point": point_to_json(p), "derivatives": exponents_to_json(A.exponents)} for p, A in theta.sites
        ],
    }


def functional_set_from_json(obj):
    """Accepts either a functional-set document or a point-set document."""
    if isinstance(obj, dict) and "points" in obj and "sites" not in obj:
        return from_points(pointset_from_json(obj))
    d = _dimension(obj)
    sites = []
    for site in _require(obj, "sites", list):
        point = _point(_require(site, "point"), d)
        derivs = site.get("derivatives", [[0] * d]) if isinstance(site, dict) else None
        if not isinstance(derivs, list):
            raise SchemaError("derivatives must be a list of exponents")
        sites.append((point, frozenset(_exponent(a, d) for a in derivs)))
    return FunctionalSet(d, tuple(sites))


# results

def escalier_to_json(result):
    return {
        "order": result.order.name,
        "escalier": exponents_to_json(result.escalier.exponents),
        "corners": exponents_to_json(result.corners),
        "groebner": [polynomial_to_json(g) for g in result.groebner],
    }


def verdict_to_json(verdict):
    out = {"unique": verdict.unique}
    if verdict.unique:
        out["basis"] = exponents_to_json(verdict.basis.exponents)
        out["universal_gb"] = [polynomial_to_json(g) for g in verdict.universal_gb]
    else:
        w = verdict.witness
        out["witness"] = {
            "order_a": w.order_a,
            "order_b": w.order_b,
            "escalier_a": exponents_to_json(w.escalier_a.exponents),
            "escalier_b": exponents_to_json(w.escalier_b.exponents),
        }
    return out


def description_to_json(desc):
    return {
        "lower_set": exponents_to_json(desc.lower_set.exponents),
        "node_values": [[format_rational(v) for v in axis] for axis in desc.node_values],
    }


def description_from_json(obj):
    exps = [_exponent(e) for e in _require(obj, "lower_set", list)]
    if not exps:
        raise SchemaError("lower_set must be nonempty")
    nodes = _require(obj, "node_values", list)
    if not all(isinstance(axis, list) for axis in nodes):
        raise SchemaError("node_values must be a list of lists")
    return CartesianDescription(OrderIdeal.of(exps), tuple(tuple(parse_rational(v) for v in axis) for axis in nodes))


def slice_family_to_json(family):
    return {
        "axis": family.axis,
        "slices": [{"value": format_rational(s.value), "points": [point_to_json(p) for p in s.projection]} for s in family.slices],
    }


def dumps(obj, pretty=False):
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)

