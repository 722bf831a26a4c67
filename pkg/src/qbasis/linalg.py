"""Exact linear algebra over the rationals.

Matrices are plain lists of rows of :class:`fractions.Fraction`.
"""

from fractions import Fraction


def rank(matrix):
    """Rank of a rational matrix by Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                f /= p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` for a square nonsingular matrix."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        p = aug[c][c]
        aug[c] = [a / p for a in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n] for row in aug]


class Echelon:
    """Incrementally grown row echelon form with provenance tracking.

    Each inserted vector carries a label. ``reduce`` expresses a vector as
    a combination of the labelled vectors inserted so far plus a residual;
    the residual is zero exactly when the vector lies in their span.
    """

    def __init__(self, length):
        self.length = length
        # pivot column -> (row with 1 at pivot, combination {label: coef})
        self._rows = {}

    def __len__(self):
        return len(self._rows)

    def copy(self):
        # rows are replaced, never mutated, so a shallow copy is independent
        clone = Echelon(self.length)
        clone._rows = dict(self._rows)
        return clone

    def reduce(self, vector):
        """Return ``(residual, combo)`` with ``vector = residual + sum combo[l] * v_l``."""
        v = [Fraction(x) for x in vector]
        if len(v) != self.length:
            raise ValueError("vector length %d, expected %d" % (len(v), self.length))
        combo = {}
        for col in sorted(self._rows):
            f = v[col]
            if not f:
                continue
            row, row_combo = self._rows[col]
            v = [a - f * b for a, b in zip(v, row)]
            for label, c in row_combo.items():
                combo[label] = combo.get(label, 0) + f * c
        return v, {k: c for k, c in combo.items() if c}

    def insert(self, label, vector):
        """Add ``vector`` under ``label``; returns False if it is dependent."""
        residual, combo = self.reduce(vector)
        col = next((i for i, x in enumerate(residual) if x), None)
        if col is None:
            return False
        p = residual[col]
        row = [x / p for x in residual]
        # residual = vector - sum combo * v  =>  row = (v_label - sum combo * v) / p
        row_combo = {k: -c / p for k, c in combo.items()}
        row_combo[label] = Fraction(1) / p
        # keep rows fully reduced at existing pivots so reduce() is order independent
        for other_col, (other, other_combo) in list(self._rows.items()):
            f = other[col]
            if f:
                other = [a - f * b for a, b in zip(other, row)]
                merged = dict(other_combo)
                for k, c in row_combo.items():
                    merged[k] = merged.get(k, 0) - f * c
                self._rows[other_col] = (other, {k: c for k, c in merged.items() if c})
        self._rows[col] = (row, row_combo)
        return True
