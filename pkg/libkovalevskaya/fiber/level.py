import collections

import numpy as np
import tensorflow as tf

from libkovalevskaya.fields import CasimirF1, CasimirF2, KovalevskayaHamiltonian, \
    KovalevskayaIntegral

FiberLevel = collections.namedtuple('FiberLevel', ['a', 'b', 'h', 'k'])

_FIELDS = (CasimirF1(), CasimirF2(), KovalevskayaHamiltonian(), KovalevskayaIntegral())


def sampling_radius(orbit, h):
    """Half-width ``R = 2 + 2 max(|a|, |b|, |h|)^(1/2)`` of the sampling box."""
    return 2.0 + 2.0 * np.sqrt(max(abs(orbit.a), abs(orbit.b), abs(h)))


def level_residuals(coords, level, spec, num_constraints=4):
    """
    Residuals ``(f1 - a, f2 - b, H - h, K - k)`` of a batch of points, truncated to the first
    ``num_constraints`` entries.
    """
    targets = tf.constant(level[:num_constraints], dtype=tf.float64)
    values = tf.stack([f(coords, spec) for f in _FIELDS[:num_constraints]], axis=-1)
    return values - targets


def level_jacobian(coords, spec, num_constraints=4):
    return tf.stack([f.gradient(coords, spec) for f in _FIELDS[:num_constraints]], axis=-2)


def residual_max(coords, level, spec):
    if len(coords) == 0:
        return 0.0
    residuals = level_residuals(tf.constant(coords), level, spec)
    return float(tf.reduce_max(tf.abs(residuals)))
