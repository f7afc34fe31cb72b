import collections
import logging

import numpy as np
import tensorflow as tf
from matplotlib.path import Path

from libkovalevskaya.algebra_kind import AlgebraKind
from libkovalevskaya.fields import CasimirF1, CasimirF2
from libkovalevskaya.math import poisson_tensor_from_coords
from libkovalevskaya.phase_point import PhasePoint, PencilSpec, OrbitSpec, as_coords, \
    scalar_or_array

logger = logging.getLogger('libkovalevskaya')


class ChartDomainError(ValueError):
    pass


class SeparatingValueError(ValueError):
    pass


class IntervalLabel:
    """
    Labels of the six intervals of the axis ``b = 0`` (``XII`` to ``XVII``, in increasing ``a``)
    and of the eleven regions ``I`` to ``XI`` of orbits with ``b != 0``.
    """

    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"
    VII = "VII"
    VIII = "VIII"
    IX = "IX"
    X = "X"
    XI = "XI"
    XII = "XII"
    XIII = "XIII"
    XIV = "XIV"
    XV = "XV"
    XVI = "XVI"
    XVII = "XVII"


AXIS_INTERVALS = (
    IntervalLabel.XII, IntervalLabel.XIII, IntervalLabel.XIV,
    IntervalLabel.XV, IntervalLabel.XVI, IntervalLabel.XVII
)

REGIONS = (
    IntervalLabel.I, IntervalLabel.II, IntervalLabel.III, IntervalLabel.IV, IntervalLabel.V,
    IntervalLabel.VI, IntervalLabel.VII, IntervalLabel.VIII, IntervalLabel.IX, IntervalLabel.X,
    IntervalLabel.XI
)

# Breakpoints of the axis b = 0 in units of a0, where 4 a0 = kappa^2 c1^2
_AXIS_BREAKPOINTS = (-4.0, -1.0, 0.0, 1.0, 4.0)

RegionParams = collections.namedtuple('RegionParams', ['l_star', 'zeta_star'])

SeparatingCurve = collections.namedtuple(
    'SeparatingCurve', ['theta', 'name', 'axis_points'])

_SEPARATING_CURVES = {
    1: SeparatingCurve(1, 'f_k', (-1.0,)),
    2: SeparatingCurve(2, "f_t'", (-4.0,)),
    3: SeparatingCurve(3, "f_t''", (-4.0, 1.0)),
    4: SeparatingCurve(4, 'f_r', (0.0,)),
    5: SeparatingCurve(5, 'f_m', (4.0,)),
}


def _check_chart_parameters(alpha, kappa):
    if kappa >= 0:
        raise ChartDomainError(
            "The chart targets so(3,1) and needs kappa < 0, got {}".format(kappa))
    if alpha == 0:
        raise ChartDomainError("The chart needs alpha != 0")


def chart_tensor(coords, alpha, kappa):
    """``(J, y) -> (J, alpha y + sqrt(-kappa / |y|^2) y x J)`` on a ``Tensor`` of points."""
    coords = tf.convert_to_tensor(coords, dtype=tf.float64)
    j = coords[..., :3]
    y = coords[..., 3:]
    g = tf.reduce_sum(y ** 2, axis=-1, keepdims=True)
    scale = tf.sqrt(-kappa / g)
    x = alpha * y + scale * tf.linalg.cross(y, j)
    return tf.concat([j, x], axis=-1)


def e3_to_so31(p, alpha, kappa):
    """
    Poisson diffeomorphism from e(3)* to so(3,1)* on the complement of ``{y = 0}``:
    ``x = alpha y + sqrt(-kappa / |y|^2) (y x J)`` with ``J`` unchanged.

    Args:
        p: Point ``(J, y)`` as a ``PhasePoint`` or an array of shape [..., 6]
        alpha: Nonzero scale of ``y``
        kappa: Negative pencil parameter of the target

    Returns:
        The image ``(J, x)``, as a ``PhasePoint`` for a ``PhasePoint`` input.

    Raises:
        ChartDomainError: For ``kappa >= 0``, ``alpha == 0`` or a point with ``y = 0``
    """
    _check_chart_parameters(alpha, kappa)
    coords = as_coords(p)
    if np.any(np.sum(coords[..., 3:] ** 2, axis=-1) == 0):
        raise ChartDomainError("The chart is undefined on the locus y = 0")
    image = chart_tensor(tf.constant(coords), alpha, kappa).numpy()
    return PhasePoint.from_coords(image) if isinstance(p, PhasePoint) else image


def so31_to_e3(q, alpha, kappa, num_newton_iterations=3):
    """
    Inverse of ``e3_to_so31``. The e(3) Casimir ``g1 = |y|^2`` is recovered from the so(3,1)
    Casimirs of ``q``, which turns the chart into a linear system for ``y``; a few Newton steps
    on the forward chart then polish the solution.

    Raises:
        ChartDomainError: For ``kappa >= 0``, ``alpha == 0`` or points with ``f1 <= 0, f2 = 0``
    """
    _check_chart_parameters(alpha, kappa)
    coords = np.atleast_2d(as_coords(q))
    j = coords[:, :3]
    x = coords[:, 3:]
    f1 = np.sum(x ** 2, axis=-1) + kappa * np.sum(j ** 2, axis=-1)
    ell = np.sum(x * j, axis=-1) / alpha
    g = (f1 + np.sqrt(f1 ** 2 - 4.0 * alpha ** 2 * kappa * ell ** 2)) / (2.0 * alpha ** 2)
    if np.any(g <= 0):
        raise ChartDomainError("Points on the excluded locus f1 <= 0, f2 = 0 have no preimage")
    scale = np.sqrt(-kappa / g)

    cross = np.zeros((len(coords), 3, 3))
    cross[:, 0, 1], cross[:, 0, 2] = -j[:, 2], j[:, 1]
    cross[:, 1, 0], cross[:, 1, 2] = j[:, 2], -j[:, 0]
    cross[:, 2, 0], cross[:, 2, 1] = -j[:, 1], j[:, 0]
    # y x J = -[J]_x y
    system = alpha * np.eye(3)[np.newaxis] - scale[:, np.newaxis, np.newaxis] * cross
    y = np.linalg.solve(system, x[..., np.newaxis])[..., 0]

    j_tensor = tf.constant(j)
    target = tf.constant(x)
    y = tf.constant(y)
    for _ in range(num_newton_iterations):
        with tf.GradientTape() as tape:
            tape.watch(y)
            residual = chart_tensor(tf.concat([j_tensor, y], axis=-1), alpha, kappa)[:, 3:] - target
        jacobian = tape.batch_jacobian(residual, y)
        y = y - tf.linalg.solve(jacobian, residual[..., tf.newaxis])[..., 0]

    result = np.concatenate([j, y.numpy()], axis=-1)
    if isinstance(q, PhasePoint):
        return PhasePoint.from_coords(result[0])
    return result.reshape(np.shape(as_coords(q)))


def casimirs_e3(p):
    """
    Returns:
        The e(3) Casimirs ``(g1, g2) = (|y|^2, y . J)``
    """
    coords = tf.constant(as_coords(p))
    e3 = PencilSpec(kappa=0.0)
    return (scalar_or_array(CasimirF1()(coords, e3).numpy()),
            scalar_or_array(CasimirF2()(coords, e3).numpy()))


def orbit_image(src, alpha, kappa):
    """
    Orbit of so(3,1)* onto which the chart maps the e(3) orbit ``src``.

    Args:
        src: ``OrbitSpec`` with ``a = g1 > 0`` and ``b = g2``
        alpha: Nonzero scale of ``y``
        kappa: Negative pencil parameter

    Returns:
        ``OrbitSpec(alpha^2 a + kappa b^2 / a, alpha b)`` tagged as so(3,1)

    Raises:
        ChartDomainError: If ``src.a <= 0``
    """
    _check_chart_parameters(alpha, kappa)
    if src.a <= 0:
        raise ChartDomainError("Source orbit must have a = |y|^2 > 0, got a={}".format(src.a))
    return OrbitSpec(
        a=alpha ** 2 * src.a + kappa * src.b ** 2 / src.a,
        b=alpha * src.b,
        algebra=AlgebraKind.SO31)


def sokolov_spec(alpha, kappa, g1, spec):
    """
    Constants of the Kovalevskaya-Sokolov fields that reproduce the so(3,1) pair on the e(3)
    orbit ``|y|^2 = g1``: ``H o chart == ks_hamiltonian`` and ``K o chart == ks_integral``.

    Returns:
        A ``PencilSpec`` with ``kappa = 0``, ``c1 = alpha c1`` and ``c2 = c1 sqrt(-kappa / g1)``
    """
    _check_chart_parameters(alpha, kappa)
    if g1 <= 0:
        raise ChartDomainError("Need g1 > 0, got {}".format(g1))
    return PencilSpec(kappa=0.0, c1=alpha * spec.c1, c2=spec.c1 * np.sqrt(-kappa / g1), c3=0.0)


def pushforward_residual(p, alpha, kappa):
    """
    Largest entry of ``|DF P_e3 DF^T - P_kappa(F)|`` at ``p``, where ``F`` is the chart. Zero up
    to rounding because the chart is a Poisson map.
    """
    _check_chart_parameters(alpha, kappa)
    coords = tf.constant(np.atleast_2d(as_coords(p)))
    with tf.GradientTape() as tape:
        tape.watch(coords)
        image = chart_tensor(coords, alpha, kappa)
    jacobian = tape.batch_jacobian(image, coords)
    source = poisson_tensor_from_coords(coords, 0.0)
    pushed = tf.matmul(tf.matmul(jacobian, source), jacobian, transpose_b=True)
    target = poisson_tensor_from_coords(image, kappa)
    residual = tf.reduce_max(tf.abs(pushed - target), axis=[-2, -1]).numpy()
    return scalar_or_array(residual[0] if np.ndim(as_coords(p)) == 1 else residual)


def axis_breakpoints(spec):
    """
    Breakpoints ``-4 a0, -a0, 0, a0, 4 a0`` of the axis ``b = 0``.
    """
    return tuple(v * spec.a0 for v in _AXIS_BREAKPOINTS)


def interval_of_a(a, spec):
    """
    Classifies an orbit ``(a, 0)`` into one of the intervals ``XII`` to ``XVII``.

    Raises:
        SeparatingValueError: If ``a`` is one of the separating values
    """
    if spec.a0 == 0:
        raise ValueError("Interval structure needs kappa c1 != 0")
    breakpoints = axis_breakpoints(spec)
    for value in breakpoints:
        if abs(a - value) <= 1e-12 * max(1.0, abs(value)):
            raise SeparatingValueError(
                "a={} is the separating value {} of the axis b = 0".format(a, value))
    return AXIS_INTERVALS[int(np.searchsorted(breakpoints, a))]


def region_params(a_hat, l, eps0, eps1):
    """
    Region coordinates ``l*^3 = 2 l^2 / (eps0 a_hat^3)`` and ``zeta* = a_hat eps1^2 / eps0`` of the
    Kovalevskaya-Sokolov orbit parameters.

    Raises:
        ValueError: If ``eps0 <= 0`` or ``a_hat <= 0``
    """
    if eps0 <= 0:
        raise ValueError("eps0 must be positive, got {}".format(eps0))
    if a_hat <= 0:
        raise ValueError("a_hat must be positive, got {}".format(a_hat))
    return RegionParams(
        l_star=float(np.cbrt(2.0 * l ** 2 / (eps0 * a_hat ** 3))),
        zeta_star=float(a_hat * eps1 ** 2 / eps0))


def separating_curve_name(theta_index):
    """
    Name of the so(3,1) separating curve corresponding to the Kovalevskaya-Sokolov curve
    ``theta_index`` together with the points where it meets the axis ``b = 0`` (in units of
    ``a0``).

    Raises:
        ValueError: If the index is outside ``1..5``
    """
    if theta_index not in _SEPARATING_CURVES:
        raise ValueError("Separating curve index must be in 1..5, got {}".format(theta_index))
    return _SEPARATING_CURVES[theta_index]


def separating_axis_values(theta_index, spec):
    return tuple(v * spec.a0 for v in separating_curve_name(theta_index).axis_points)


class RegionAtlas:
    """
    Resolves the region label ``I`` to ``XI`` of an orbit with ``b != 0``. Region boundaries are
    not available in closed form, so the atlas is filled with user-supplied polygons on the
    ``(zeta*, l*)`` plane and with diagram fingerprints registered for known regions.

    Args:
        polygons: Optional mapping from region label to a sequence of ``(zeta*, l*)`` vertices
    """

    def __init__(self, polygons=None):
        self._polygons = collections.OrderedDict()
        self._fingerprints = {}
        for label, vertices in (polygons or {}).items():
            self.add_region(label, vertices)

    def add_region(self, label, vertices):
        if label not in REGIONS:
            raise ValueError("Unknown region label {}".format(label))
        vertices = np.asarray(vertices, dtype=np.float64)
        if vertices.ndim != 2 or vertices.shape[1] != 2 or len(vertices) < 3:
            raise ValueError("Region {} needs at least three (zeta*, l*) vertices".format(label))
        self._polygons[label] = Path(vertices, closed=False)

    def register_fingerprint(self, label, fingerprint):
        known = self._fingerprints.get(fingerprint)
        if known is not None and known != label:
            raise ValueError("Fingerprint already registered for region {}".format(known))
        self._fingerprints[fingerprint] = label

    def locate(self, params):
        """
        Returns:
            The label of the first polygon containing ``params``, or ``None``
        """
        point = (params.zeta_star, params.l_star)
        for label, path in self._polygons.items():
            if path.contains_point(point):
                return label
        return None

    def identify(self, fingerprint):
        return self._fingerprints.get(fingerprint)

    @property
    def labels(self):
        return list(self._polygons.keys())


def classify_orbit(orbit, spec, atlas=None, params=None, fingerprint=None):
    """
    Interval label for orbits on the axis ``b = 0``; otherwise the region label resolved by
    ``atlas`` from region coordinates or from a diagram fingerprint.

    Returns:
        A label from ``IntervalLabel`` or ``None`` when the atlas cannot resolve the orbit
    """
    if orbit.b == 0:
        return interval_of_a(orbit.a, spec)
    if atlas is None:
        raise ValueError("Orbits with b != 0 need a RegionAtlas")
    label = None
    if params is not None:
        label = atlas.locate(params)
    if label is None and fingerprint is not None:
        label = atlas.identify(fingerprint)
    if label is None:
        logger.warning("Region of orbit (a={}, b={}) is not resolved by the atlas".format(
            orbit.a, orbit.b))
    return label
