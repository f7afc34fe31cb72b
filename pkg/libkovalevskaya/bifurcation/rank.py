import collections
import logging

import numpy as np
import tensorflow as tf

from libkovalevskaya.algebra import sgrad_tensor
from libkovalevskaya.fields import KovalevskayaHamiltonian, KovalevskayaIntegral
from libkovalevskaya.phase_point import as_coords

logger = logging.getLogger('libkovalevskaya')

RANK_THRESHOLD = 1e-8

RankDetails = collections.namedtuple(
    'RankDetails', ['rank', 'singular_values', 'near_threshold'])


def momentum_frame(coords, spec):
    """Matrix ``[sgrad H, sgrad K]`` of shape [..., 6, 2]."""
    coords = tf.constant(coords)
    return tf.stack([
        sgrad_tensor(KovalevskayaHamiltonian(), coords, spec),
        sgrad_tensor(KovalevskayaIntegral(), coords, spec)], axis=-1).numpy()


def momentum_rank(p, spec, threshold=RANK_THRESHOLD, return_details=False):
    """
    Rank of the momentum map ``(H, K)`` restricted to the orbit through ``p``: the number of
    singular values of ``[sgrad H, sgrad K]`` above ``threshold``.

    Args:
        p: A ``PhasePoint`` or an array of 6 coordinates
        spec: ``PencilSpec``
        threshold: Cutoff on singular values
        return_details: Whether to return a ``RankDetails`` instead of the bare rank

    Returns:
        0, 1 or 2, or a ``RankDetails`` whose ``near_threshold`` flag is set when the smallest
        retained singular value is within a factor 10 of the cutoff
    """
    frame = momentum_frame(as_coords(p).reshape(6), spec)
    singular_values = np.linalg.svd(frame, compute_uv=False)
    retained = singular_values[singular_values > threshold]
    rank = len(retained)
    near_threshold = bool(rank > 0 and retained.min() < 10.0 * threshold)
    if near_threshold:
        logger.warning("Rank {} at {} is near the threshold: smallest retained singular value "
                       "{:.3e}".format(rank, as_coords(p).reshape(6), retained.min()))
    if return_details:
        return RankDetails(rank, singular_values, near_threshold)
    return rank
