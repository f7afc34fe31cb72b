import collections

import numpy as np

from libkovalevskaya.algebra_kind import AlgebraKind, infer_algebra_kind


class NonFinitePointError(ValueError):
    pass


class PhasePoint(collections.namedtuple('PhasePoint', ['J', 'x'])):
    """
    A point ``(J, x)`` of the six-dimensional Poisson manifold. When a point is read in e(3)
    coordinates, the second triple plays the role of ``y``.

    Args:
        J: Angular momentum, three components
        x: Position-like variable, three components

    Raises:
        NonFinitePointError: If any of the six components is not finite
    """
    __slots__ = ()

    def __new__(cls, J, x):
        J = tuple(float(v) for v in J)
        x = tuple(float(v) for v in x)
        if len(J) != 3 or len(x) != 3:
            raise ValueError("J and x must have three components each, got {} and {}".format(
                len(J), len(x)))
        if not np.all(np.isfinite(J + x)):
            raise NonFinitePointError("Phase point has non-finite components: J={}, x={}".format(
                J, x))
        return super(PhasePoint, cls).__new__(cls, J, x)

    @classmethod
    def from_coords(cls, coords):
        coords = np.asarray(coords, dtype=np.float64).reshape(6)
        return cls(coords[:3], coords[3:])

    @property
    def y(self):
        return self.x

    @property
    def coords(self):
        return np.array(self.J + self.x, dtype=np.float64)

    def __array__(self, dtype=None):
        return self.coords if dtype is None else self.coords.astype(dtype)


class PencilSpec(collections.namedtuple(
        'PencilSpec', ['kappa', 'c1', 'c2', 'c3'], defaults=(-1.0, 1.0, 0.0, 0.0))):
    """
    Pencil parameter and Hamiltonian constants. ``kappa < 0`` selects so(3,1), ``kappa == 0``
    selects e(3) and ``kappa > 0`` selects so(4).
    """
    __slots__ = ()

    @property
    def kind(self):
        return infer_algebra_kind(self.kappa)

    @property
    def a0(self):
        """Quarter of the outer breakpoint ``4 a0 = kappa^2 c1^2`` on the axis ``b = 0``."""
        return self.kappa ** 2 * self.c1 ** 2 / 4.0

    def get_config(self):
        return dict(self._asdict())


class OrbitSpec(collections.namedtuple(
        'OrbitSpec', ['a', 'b', 'algebra'], defaults=(AlgebraKind.SO31,))):
    """
    Casimir values ``(a, b)`` selecting a symplectic leaf. ``algebra`` tells which bracket the
    pair refers to: ``(f1, f2)`` for so(3,1) or so(4), ``(g1, g2)`` for e(3).
    """
    __slots__ = ()

    def get_config(self):
        return dict(self._asdict())


class IntegralPair(collections.namedtuple('IntegralPair', ['h', 'k'])):
    """Values of the Hamiltonian and of the first integral ``K``."""
    __slots__ = ()


def as_coords(points):
    """
    Converts a ``PhasePoint``, a sequence of them or an array-like of shape [..., 6] to a
    ``float64`` array of shape [..., 6].
    """
    if isinstance(points, PhasePoint):
        return points.coords
    if isinstance(points, (list, tuple)) and len(points) > 0 and isinstance(points[0], PhasePoint):
        return np.stack([p.coords for p in points])
    coords = np.asarray(points, dtype=np.float64)
    if coords.shape[-1:] != (6,):
        raise ValueError("Expected points with 6 coordinates on the last axis, got shape {}".format(
            coords.shape))
    return coords


def scalar_or_array(values):
    values = np.asarray(values)
    return float(values) if values.ndim == 0 else values
