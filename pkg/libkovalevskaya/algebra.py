import logging

import numpy as np
import tensorflow as tf
import tensorflow_probability as tfp

from libkovalevskaya.fields import as_field, CasimirF1, CasimirF2
from libkovalevskaya.math import poisson_tensor_from_coords, jacobi_sum
from libkovalevskaya.phase_point import PhasePoint, as_coords, scalar_or_array

logger = logging.getLogger('libkovalevskaya')


class IntegrationError(RuntimeError):
    pass


def poisson_tensor(p, spec):
    """
    Poisson tensor of the pencil bracket. Entries are ``{J_i, J_j} = eps_ijk J_k``,
    ``{J_i, x_j} = eps_ijk x_k`` and ``{x_i, x_j} = kappa eps_ijk J_k``. The tensor is assembled
    from antisymmetric structure constants, so ``P + P^T == 0`` holds exactly.

    Args:
        p: A ``PhasePoint`` or an array of shape [..., 6]
        spec: ``PencilSpec``

    Returns:
        An array of shape [..., 6, 6]
    """
    coords = tf.constant(as_coords(p))
    return poisson_tensor_from_coords(coords, spec.kappa).numpy()


def sgrad_tensor(field, coords, spec):
    """Hamiltonian vector field ``P grad f`` on a ``Tensor`` of points."""
    coords = tf.convert_to_tensor(coords, dtype=tf.float64)
    grad = field.gradient(coords, spec)
    return tf.linalg.matvec(poisson_tensor_from_coords(coords, spec.kappa), grad)


def bracket_tensor(f, g, coords, spec):
    coords = tf.convert_to_tensor(coords, dtype=tf.float64)
    grad_f = f.gradient(coords, spec)
    grad_g = g.gradient(coords, spec)
    tensor = poisson_tensor_from_coords(coords, spec.kappa)
    return tf.reduce_sum(grad_f * tf.linalg.matvec(tensor, grad_g), axis=-1)


def bracket(f, g, p, spec):
    """
    Poisson bracket ``{f, g} = grad f . P . grad g``.

    Args:
        f: A ``ScalarField`` or a callable ``fn(coords, spec)``
        g: A ``ScalarField`` or a callable ``fn(coords, spec)``
        p: A ``PhasePoint`` or an array of shape [..., 6]
        spec: ``PencilSpec``

    Returns:
        A float for a single point, otherwise an array of shape [...]
    """
    values = bracket_tensor(as_field(f), as_field(g), tf.constant(as_coords(p)), spec)
    return scalar_or_array(values.numpy())


def casimirs(p, spec):
    """
    Returns:
        The pair ``(f1, f2)`` with ``f1 = |x|^2 + kappa |J|^2`` and ``f2 = x . J``
    """
    coords = tf.constant(as_coords(p))
    return (scalar_or_array(CasimirF1()(coords, spec).numpy()),
            scalar_or_array(CasimirF2()(coords, spec).numpy()))


def sgrad(f, p, spec):
    """
    Skew gradient ``P grad f``, the Hamiltonian vector field of ``f``. It is tangent to the
    symplectic leaves, so both Casimir differentials annihilate it.

    Returns:
        An array of shape [..., 6]
    """
    return sgrad_tensor(as_field(f), tf.constant(as_coords(p)), spec).numpy()


def jacobi_residual(p, spec):
    """
    Largest absolute cyclic Jacobi sum over all coordinate triples.
    """
    sums = jacobi_sum(tf.constant(as_coords(p)), spec.kappa)
    return scalar_or_array(tf.reduce_max(tf.abs(sums), axis=[-3, -2, -1]).numpy())


def random_points(num_points, seed, box=2.0):
    """
    Points drawn uniformly from ``[-box, box]^6`` with a seeded generator.
    """
    return np.random.default_rng(seed).uniform(-box, box, size=(num_points, 6))


class Trajectory:
    """
    Output of ``flow``: sample times and the corresponding points.

    Args:
        times: Array of shape [num_samples]
        points: Array of shape [num_samples, 6]
    """

    def __init__(self, times, points):
        self.times = np.asarray(times, dtype=np.float64)
        self.points = np.asarray(points, dtype=np.float64)

    def __len__(self):
        return len(self.times)

    def __getitem__(self, index):
        return PhasePoint.from_coords(self.points[index])

    def drift(self, f, spec):
        """Largest deviation of ``f`` along the trajectory from its initial value."""
        values = as_field(f)(self.points, spec).numpy()
        return float(np.max(np.abs(values - values[0])))

    def __repr__(self):
        return "Trajectory(num_samples={}, t_end={})".format(len(self), self.times[-1])


def flow(p0, f, spec, t, dt, rtol=1e-10, atol=1e-12, max_num_steps=None):
    """
    Integrates ``sgrad f`` from ``p0`` with an adaptive Dormand-Prince pair (order 5).

    Args:
        p0: Initial ``PhasePoint``
        f: A ``ScalarField`` or a callable ``fn(coords, spec)``
        spec: ``PencilSpec``
        t: Duration
        dt: Spacing of the reported samples; the integrator chooses its own internal steps
        rtol: Relative tolerance of the adaptive error control
        atol: Absolute tolerance of the adaptive error control
        max_num_steps: Optional cap on the number of internal steps

    Returns:
        A ``Trajectory``. For ``t == 0`` it holds the single point ``p0``.

    Raises:
        IntegrationError: If the error control cannot meet the tolerance
    """
    if dt <= 0:
        raise ValueError("Sample spacing must be positive, got {}".format(dt))
    if t < 0:
        raise ValueError("Duration must be nonnegative, got {}".format(t))
    y0 = as_coords(p0).reshape(6)
    if t == 0:
        return Trajectory([0.0], y0[np.newaxis])

    times = np.arange(0.0, t, dt)
    if times[-1] < t:
        times = np.append(times, t)

    field = as_field(f)
    solver = tfp.math.ode.DormandPrince(rtol=rtol, atol=atol, max_num_steps=max_num_steps)

    @tf.function
    def solve():
        return solver.solve(
            lambda _, y: sgrad_tensor(field, y, spec),
            initial_time=tf.constant(0.0, dtype=tf.float64),
            initial_state=tf.constant(y0),
            solution_times=tf.constant(times))

    results = solve()
    status = int(results.diagnostics.status)
    if status != 0:
        raise IntegrationError(
            "Adaptive error control failed with status {} (rtol={}, atol={})".format(
                status, rtol, atol))
    logger.debug("Integrated {} over t={} with {} function evaluations".format(
        field, t, int(results.diagnostics.num_ode_fn_evaluations)))
    return Trajectory(results.times.numpy(), results.states.numpy())
