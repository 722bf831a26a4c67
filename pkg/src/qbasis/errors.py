"""Exception types raised by qbasis."""


class QBasisError(ValueError):
    """Base class for domain errors. ``code`` is a stable machine-readable tag."""

    code = "domain_error"

    def __init__(self, detail=""):
        super().__init__(detail)
        self.detail = detail


class DimensionMismatch(QBasisError):
    code = "dimension_mismatch"


class InvalidOrder(QBasisError):
    code = "invalid_order"


class NotLowerSet(QBasisError):
    code = "not_lower_set"


class DuplicatePoints(QBasisError):
    code = "duplicate_points"


class EmptyInput(QBasisError):
    code = "empty_input"


class ZeroPolynomial(QBasisError):
    code = "zero_polynomial"


class DegenerateFunctionalSet(QBasisError):
    code = "degenerate_functional_set"


class NotQuotientBasis(QBasisError):
    code = "not_quotient_basis"


class OracleTooLarge(QBasisError):
    code = "instance_too_large_for_oracle"


class InvalidDescription(QBasisError):
    code = "invalid_cartesian_description"


class SchemaError(Exception):
    """Input JSON does not match the expected schema."""

    code = "parse_error"
