import math
from fractions import Fraction

import numpy as np

GLUING_DETERMINANT = -1


class GluingMatrixError(ValueError):
    pass


class GluingMatrix:
    """
    Integer matrix ``(alpha, beta; gamma, delta)`` that glues the admissible bases of the two
    boundary tori of an edge: ``lambda' = alpha lambda + beta mu`` and
    ``mu' = gamma lambda + delta mu``. Gluings reverse orientation.

    Args:
        rows: Nested sequence ``[[alpha, beta], [gamma, delta]]`` of integers

    Raises:
        GluingMatrixError: If an entry is not an integer, the shape is wrong or the determinant
            is not -1
    """

    def __init__(self, rows):
        try:
            (alpha, beta), (gamma, delta) = rows
        except (TypeError, ValueError):
            raise GluingMatrixError("Expected a 2x2 matrix, got {!r}".format(rows))
        entries = (alpha, beta, gamma, delta)
        if not all(isinstance(e, (int, np.integer)) and not isinstance(e, bool)
                   for e in entries):
            raise GluingMatrixError("Gluing matrix entries must be integers, got {!r}".format(rows))
        self.alpha, self.beta, self.gamma, self.delta = (int(e) for e in entries)
        if self.determinant != GLUING_DETERMINANT:
            raise GluingMatrixError("Gluing matrix {} has determinant {}, expected {}".format(
                self.to_list(), self.determinant, GLUING_DETERMINANT))

    @property
    def determinant(self):
        return self.alpha * self.delta - self.beta * self.gamma

    @property
    def marks(self):
        return marks_from_gluing(self)

    def to_list(self):
        return [[self.alpha, self.beta], [self.gamma, self.delta]]

    def to_array(self):
        return np.array(self.to_list(), dtype=np.int64)

    def __eq__(self, other):
        return isinstance(other, GluingMatrix) and self.to_list() == other.to_list()

    def __hash__(self):
        return hash((self.alpha, self.beta, self.gamma, self.delta))

    def __repr__(self):
        return "GluingMatrix({})".format(self.to_list())


def _sign(value):
    return 1 if value > 0 else -1


def marks_from_gluing(matrix):
    """
    Marks ``r`` and ``epsilon`` of an edge.

    Args:
        matrix: ``GluingMatrix`` or nested list of integers

    Returns:
        A tuple ``(r, epsilon)``: ``r`` is ``alpha / beta mod 1`` as a ``Fraction`` or
        ``math.inf`` when ``beta = 0``; ``epsilon`` is the sign of ``beta``, or of ``alpha``
        when ``beta = 0``

    Raises:
        GluingMatrixError: If the determinant is not -1
    """
    if not isinstance(matrix, GluingMatrix):
        matrix = GluingMatrix(matrix)
    if matrix.beta == 0:
        return math.inf, _sign(matrix.alpha)
    return Fraction(matrix.alpha, matrix.beta) % 1, _sign(matrix.beta)


def format_r(r):
    """``r`` as it is written in molecule reports and graph attributes, e.g. ``1/3`` or ``inf``."""
    return "inf" if r == math.inf else str(r)


def admissible_change(matrix, k):
    """
    Gluing matrix after the admissible change ``mu -> mu + k lambda`` of the basis on the
    first torus, i.e. right multiplication by ``(1, 0; k, 1)``. Leaves ``r`` and ``epsilon``
    unchanged.
    """
    if not isinstance(matrix, GluingMatrix):
        matrix = GluingMatrix(matrix)
    change = np.array([[1, 0], [int(k), 1]], dtype=np.int64)
    return GluingMatrix((matrix.to_array() @ change).tolist())


def gluing_from_cycles(first, second):
    """
    Matrix expressing the basis ``second`` in terms of the basis ``first`` when both are
    written with the same two cycles. Each basis is a pair ``(lambda, mu)`` of signed cycles
    ``(name, sign)``.

    Returns:
        An integer array of shape [2, 2]; orientation-reversing gluings have determinant -1

    Raises:
        ValueError: If the bases are not spanned by the same two cycles
    """
    first_names = [name for name, _ in first]
    if len(set(first_names)) != 2:
        raise ValueError("Basis {} does not consist of two distinct cycles".format(first))
    matrix = np.zeros((2, 2), dtype=np.int64)
    for row, (name, sign) in enumerate(second):
        if name not in first_names:
            raise ValueError("Cycle {} of {} is not in the basis {}".format(name, second, first))
        column = first_names.index(name)
        matrix[row, column] = sign * first[column][1]
    if int(round(np.linalg.det(matrix))) == 0:
        raise ValueError("Bases {} and {} do not share both cycles".format(first, second))
    return matrix
