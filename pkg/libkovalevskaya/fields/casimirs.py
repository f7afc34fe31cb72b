import tensorflow as tf

from libkovalevskaya.fields.base_field import ScalarField, unstack_coords


class CasimirF1(ScalarField):
    """
    First Casimir ``f1 = |x|^2 + kappa |J|^2`` of the pencil bracket. For ``kappa == 0`` this is
    ``g1 = |y|^2`` of e(3).
    """

    def call(self, coords, spec):
        j = coords[..., :3]
        x = coords[..., 3:]
        return tf.reduce_sum(x ** 2, axis=-1) + spec.kappa * tf.reduce_sum(j ** 2, axis=-1)

    def gradient(self, coords, spec):
        coords = tf.convert_to_tensor(coords, dtype=tf.float64)
        return tf.concat([2.0 * spec.kappa * coords[..., :3], 2.0 * coords[..., 3:]], axis=-1)


class CasimirF2(ScalarField):
    """Second Casimir ``f2 = x . J``, the same for every member of the pencil."""

    def call(self, coords, spec):
        j1, j2, j3, x1, x2, x3 = unstack_coords(coords)
        return x1 * j1 + x2 * j2 + x3 * j3

    def gradient(self, coords, spec):
        coords = tf.convert_to_tensor(coords, dtype=tf.float64)
        return tf.concat([coords[..., 3:], coords[..., :3]], axis=-1)
