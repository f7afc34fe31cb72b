import collections
import logging

import numpy as np
import scipy.sparse
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree

from libkovalevskaya.algebra import casimirs
from libkovalevskaya.fiber.level import FiberLevel, sampling_radius
from libkovalevskaya.fiber.sampling import FiberSample, sample_fiber, DEFAULT_BUDGET, \
    DEFAULT_STEP_FRACTION
from libkovalevskaya.integrals import hamiltonian, integral_k
from libkovalevskaya.phase_point import PhasePoint, as_coords

logger = logging.getLogger('libkovalevskaya')


class InconclusiveCountError(RuntimeError):
    pass


# Growth steps between linked samples; growth keeps neighbours within two steps
LINK_FACTOR = 2.5


class FiberSummary(collections.namedtuple(
        'FiberSummary', ['component_count', 'representatives', 'residual_max'])):
    """
    Number of connected components of a sampled fiber with one representative ``PhasePoint``
    per component and the worst constraint violation among the samples.
    """
    __slots__ = ()


def neighbour_radius(points, num_neighbours=4, factor=3.0):
    """``factor`` times the median distance to the ``num_neighbours``-th nearest neighbour."""
    k = min(num_neighbours + 1, len(points))
    distances, _ = cKDTree(points).query(points, k=k)
    return factor * float(np.median(distances[:, -1]))


def label_components(points, extra_edges=None, epsilon=None):
    """
    Connected components of the ε-neighbour graph of ``points``, with ``extra_edges`` (pairs of
    indices) added to the graph.

    Args:
        points: Array of shape [N, 6]
        extra_edges: Optional pairs of indices joined regardless of distance
        epsilon: Link radius; ``neighbour_radius(points)`` when omitted

    Returns:
        A tuple ``(num_components, labels)``
    """
    num_points = len(points)
    if num_points == 0:
        return 0, np.zeros(0, dtype=np.int64)
    if num_points == 1:
        return 1, np.zeros(1, dtype=np.int64)
    if epsilon is None:
        epsilon = neighbour_radius(points)
    pairs = cKDTree(points).query_pairs(epsilon, output_type='ndarray').reshape(-1, 2)
    if extra_edges is not None and len(extra_edges) > 0:
        pairs = np.concatenate([pairs, np.asarray(extra_edges).reshape(-1, 2)])
    adjacency = scipy.sparse.coo_matrix(
        (np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])), shape=(num_points, num_points))
    return connected_components(adjacency.tocsr(), directed=False)


def component_count(samples, orbit, spec):
    """
    Counts the Liouville tori on a sampled fiber as the connected components of the
    ε-neighbour graph. A ``FiberSample`` links points closer than ``LINK_FACTOR`` growth steps.
    Bare points fall back to three times the median distance to the fourth nearest neighbour.

    Args:
        samples: A ``FiberSample``, a sequence of ``PhasePoint`` or an array of shape [N, 6]
            taken from a single fiber
        orbit: ``OrbitSpec`` of the fiber
        spec: ``PencilSpec``

    Returns:
        A ``FiberSummary``. An empty sample gives a count of zero.
    """
    if isinstance(samples, FiberSample):
        points, worst = samples.points, samples.residual_max
        epsilon = LINK_FACTOR * samples.spacing
    else:
        points = as_coords(samples).reshape(-1, 6) if len(samples) > 0 else np.zeros((0, 6))
        epsilon = None
        worst = 0.0
        if len(points) > 0:
            f1, f2 = casimirs(points, spec)
            worst = float(max(np.max(np.abs(f1 - orbit.a)), np.max(np.abs(f2 - orbit.b))))

    num_components, labels = label_components(points, epsilon=epsilon)
    representatives = [
        PhasePoint.from_coords(points[np.argmax(labels == label)])
        for label in range(num_components)]
    return FiberSummary(num_components, representatives, worst)


def count_tori(orbit, h, k, spec, budget=DEFAULT_BUDGET, seed=0, step=None):
    """
    Counts tori on the fiber ``(h, k)`` twice: with ``budget`` seeds grown at ``step``, and with
    twice the seeds grown at ``step / sqrt(2)``. Both the coverage and the link radius change
    between the two samples, so an agreeing count does not hinge on either.

    Args:
        orbit: ``OrbitSpec``
        h: Value of the Hamiltonian
        k: Value of the integral ``K``
        spec: ``PencilSpec``
        budget: Number of seeds of the coarse sample
        seed: Seed of the random generator
        step: Growth step of the coarse sample; ``R / 32`` by default

    Returns:
        The ``FiberSummary`` of the finer sample

    Raises:
        InconclusiveCountError: If the two counts differ
    """
    if step is None:
        step = sampling_radius(orbit, h) * DEFAULT_STEP_FRACTION
    coarse = component_count(
        sample_fiber(orbit, h, k, spec, budget, seed, step=step), orbit, spec)
    fine = component_count(
        sample_fiber(orbit, h, k, spec, 2 * budget, seed + 1, step=step / np.sqrt(2.0)),
        orbit, spec)
    if coarse.component_count != fine.component_count:
        raise InconclusiveCountError(
            "Component count at h={}, k={} changed from {} to {} when the budget doubled to {} "
            "and the step shrank to {:.3g}".format(
                h, k, coarse.component_count, fine.component_count, 2 * budget,
                step / np.sqrt(2.0)))
    logger.debug("Counted {} tori at h={}, k={}".format(fine.component_count, h, k))
    return fine


def level_of(p, spec):
    """Returns the ``FiberLevel`` through a point."""
    coords = as_coords(p).reshape(-1, 6)[0]
    f1, f2 = casimirs(coords, spec)
    return FiberLevel(f1, f2, hamiltonian(coords, spec), integral_k(coords, spec))
