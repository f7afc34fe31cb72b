import collections
import logging

import numpy as np
import scipy.sparse
import tensorflow as tf
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree

from libkovalevskaya.algebra import sgrad_tensor
from libkovalevskaya.bifurcation.equilibrium_type import EquilibriumType, Rank1Type
from libkovalevskaya.bifurcation.families import equilibrium_families
from libkovalevskaya.fields import CasimirF1, CasimirF2, KovalevskayaHamiltonian, \
    KovalevskayaIntegral, LambdaField
from libkovalevskaya.fiber.level import sampling_radius
from libkovalevskaya.math import gauss_newton, orbit_tangent_basis, sgrad_jacobian
from libkovalevskaya.phase_point import PhasePoint, IntegralPair, as_coords

logger = logging.getLogger('libkovalevskaya')

Equilibrium = collections.namedtuple('Equilibrium', ['point', 'type', 'image'])

ZERO_EIGENVALUE_TOLERANCE = 1e-5
SIGNATURE_TOLERANCE = 1e-7

_H = KovalevskayaHamiltonian()
_K = KovalevskayaIntegral()


def restricted_linearization(p, field, spec):
    """
    Linearization of ``sgrad field`` at ``p`` restricted to the tangent space of the orbit,
    as a 4x4 matrix in an orthonormal basis of that space.
    """
    coords = tf.constant(as_coords(p).reshape(1, 6))
    casimir_gradients = tf.stack([
        CasimirF1().gradient(coords, spec), CasimirF2().gradient(coords, spec)], axis=-2)
    basis = orbit_tangent_basis(casimir_gradients)
    linearization = sgrad_jacobian(lambda z: sgrad_tensor(field, z, spec), coords)
    restricted = tf.matmul(tf.matmul(basis, linearization, transpose_a=True), basis)
    return restricted.numpy()[0]


def _split_spectrum(eigenvalues):
    radius = np.max(np.abs(eigenvalues))
    if radius == 0:
        return None
    zero = np.abs(eigenvalues) < ZERO_EIGENVALUE_TOLERANCE * radius
    real = ~zero & (np.abs(eigenvalues.imag) < SIGNATURE_TOLERANCE * radius)
    imaginary = ~zero & (np.abs(eigenvalues.real) < SIGNATURE_TOLERANCE * radius)
    return zero, real, imaginary


def classify_equilibrium(e, orbit, spec):
    """
    Type of a rank-zero point from the eigenvalues of the linearization of ``sgrad H`` on the
    orbit tangent space. Pairs ``+-i w`` are centers and pairs ``+-w`` saddles; zero eigenvalues
    and complex quadruples are reported as degenerate.

    Args:
        e: Rank-zero point
        orbit: ``OrbitSpec`` through ``e``
        spec: ``PencilSpec``

    Returns:
        An ``EquilibriumType``
    """
    eigenvalues = np.linalg.eigvals(restricted_linearization(e, _H, spec))
    split = _split_spectrum(eigenvalues)
    if split is None:
        return EquilibriumType.DEGENERATE
    zero, real, imaginary = split
    if np.any(zero) or np.sum(real) + np.sum(imaginary) != 4:
        return EquilibriumType.DEGENERATE
    num_centers = int(np.sum(imaginary)) // 2
    return (EquilibriumType.SADDLE_SADDLE, EquilibriumType.CENTER_SADDLE,
            EquilibriumType.CENTER_CENTER)[num_centers]


def classify_rank1(p, spec):
    """
    Type of a rank-one point. The combination ``F = K - mu H`` whose Hamiltonian vector field
    vanishes at ``p`` is linearized on the orbit tangent space; its spectrum is ``0, 0, +-w``
    with ``w`` imaginary for elliptic and real for hyperbolic points.

    Returns:
        A ``Rank1Type``
    """
    coords = tf.constant(as_coords(p).reshape(1, 6))
    sgrad_h = sgrad_tensor(_H, coords, spec).numpy()[0]
    sgrad_k = sgrad_tensor(_K, coords, spec).numpy()[0]
    norm_h = np.dot(sgrad_h, sgrad_h)
    if norm_h < 1e-24:
        field = _H
    else:
        mu = np.dot(sgrad_k, sgrad_h) / norm_h
        field = LambdaField(
            lambda z, s: _K.call(z, s) - mu * _H.call(z, s),
            gradient_fn=lambda z, s: _K.gradient(z, s) - mu * _H.gradient(z, s),
            name='K - {:.6g} H'.format(mu))
    eigenvalues = np.linalg.eigvals(restricted_linearization(p, field, spec))
    split = _split_spectrum(eigenvalues)
    if split is None:
        return Rank1Type.DEGENERATE
    zero, real, imaginary = split
    if np.sum(zero) != 2:
        return Rank1Type.DEGENERATE
    if np.sum(imaginary) == 2:
        return Rank1Type.ELLIPTIC
    if np.sum(real) == 2:
        return Rank1Type.HYPERBOLIC
    return Rank1Type.DEGENERATE


def equilibrium_residuals(coords, orbit, spec):
    """Residuals ``(sgrad H, sgrad K, f1 - a, f2 - b)`` of shape [N, 14]."""
    return tf.concat([
        sgrad_tensor(_H, coords, spec),
        sgrad_tensor(_K, coords, spec),
        tf.stack([CasimirF1()(coords, spec) - orbit.a,
                  CasimirF2()(coords, spec) - orbit.b], axis=-1)], axis=-1)


def deduplicate(points, radius):
    """One point per cluster of points closer than ``radius``."""
    if len(points) == 0:
        return points
    pairs = cKDTree(points).query_pairs(radius, output_type='ndarray').reshape(-1, 2)
    adjacency = scipy.sparse.coo_matrix(
        (np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])), shape=(len(points), len(points)))
    num_clusters, labels = connected_components(adjacency.tocsr(), directed=False)
    return np.stack([points[np.argmax(labels == label)] for label in range(num_clusters)])


def _multistart(orbit, spec, seeds, tolerance):
    x, residuals = gauss_newton(
        lambda z: equilibrium_residuals(z, orbit, spec), seeds, max_iterations=80,
        tolerance=1e-13, max_step=sampling_radius(orbit, 0.0) / 8.0)
    x, residuals = x.numpy(), residuals.numpy()
    converged = np.all(np.isfinite(x), axis=-1) & np.all(np.abs(residuals) < tolerance, axis=-1)
    return x[converged]


def find_equilibria(orbit, spec, num_seeds=512, seed=0, dedup_radius=1e-6, num_batches=2,
                    tolerance=1e-10):
    """
    Rank-zero points of the momentum map on an orbit, found by multistart Gauss-Newton on
    ``sgrad H = sgrad K = 0`` with the Casimir constraints. Seeds are the closed-form families
    of ``equilibrium_families`` plus uniform random points; every batch is solved independently
    and a warning is logged if the batches disagree on the number of equilibria.

    Args:
        orbit: ``OrbitSpec``
        spec: ``PencilSpec`` with ``kappa < 0``
        num_seeds: Random seeds per batch
        seed: Seed of the random generator
        dedup_radius: Points closer than this are identified
        num_batches: Number of independent batches
        tolerance: Largest residual of a converged point

    Returns:
        A list of ``Equilibrium`` sorted by image and coordinates

    Raises:
        ValueError: If ``kappa >= 0``
    """
    if spec.kappa >= 0:
        raise ValueError("Equilibrium search needs kappa < 0, got {}".format(spec.kappa))
    radius = sampling_radius(orbit, 0.0) + 2.0 * abs(spec.kappa * spec.c1)
    rng = np.random.default_rng(seed)
    analytic = [f.points for f in equilibrium_families(orbit, spec)]
    analytic = np.concatenate(analytic) if analytic else np.zeros((0, 6))

    batches = []
    for _ in range(num_batches):
        seeds = np.concatenate([analytic, rng.uniform(-radius, radius, size=(num_seeds, 6))])
        batches.append(deduplicate(_multistart(orbit, spec, seeds, tolerance), dedup_radius))
    counts = [len(b) for b in batches]
    if len(set(counts)) > 1:
        logger.warning("Equilibrium count is unstable across multistart batches: {}".format(
            counts))
    points = deduplicate(np.concatenate(batches), dedup_radius)

    images = np.stack([_H(points, spec).numpy(), _K(points, spec).numpy()], axis=-1) \
        if len(points) else np.zeros((0, 2))
    order = np.lexsort(np.concatenate([points, images[:, ::-1]], axis=-1).T) if len(points) else []
    equilibria = [
        Equilibrium(PhasePoint.from_coords(points[i]),
                    classify_equilibrium(points[i], orbit, spec),
                    IntegralPair(float(images[i, 0]), float(images[i, 1])))
        for i in order]
    logger.info("Found {} equilibria on the orbit a={}, b={}".format(
        len(equilibria), orbit.a, orbit.b))
    return equilibria
