import tensorflow as tf

from libkovalevskaya.fields.base_field import ScalarField, unstack_coords


class KovalevskayaHamiltonian(ScalarField):
    """``H = J1^2 + J2^2 + 2 J3^2 + 2 c1 x1``."""

    def call(self, coords, spec):
        j1, j2, j3, x1, _, _ = unstack_coords(coords)
        return j1 ** 2 + j2 ** 2 + 2.0 * j3 ** 2 + 2.0 * spec.c1 * x1

    def gradient(self, coords, spec):
        j1, j2, j3, _, _, _ = unstack_coords(coords)
        zero = tf.zeros_like(j1)
        return tf.stack([2.0 * j1, 2.0 * j2, 4.0 * j3, zero + 2.0 * spec.c1, zero, zero], axis=-1)


class KovalevskayaIntegral(ScalarField):
    """
    First integral ``K = A^2 + B^2`` with ``A = J1^2 - J2^2 - 2 c1 x1 + kappa c1^2`` and
    ``B = 2 J1 J2 - 2 c1 x2``. Nonnegative everywhere.
    """

    def call(self, coords, spec):
        a, b = self.components(coords, spec)
        return a ** 2 + b ** 2

    @staticmethod
    def components(coords, spec):
        j1, j2, _, x1, x2, _ = unstack_coords(coords)
        a = j1 ** 2 - j2 ** 2 - 2.0 * spec.c1 * x1 + spec.kappa * spec.c1 ** 2
        b = 2.0 * j1 * j2 - 2.0 * spec.c1 * x2
        return a, b

    def gradient(self, coords, spec):
        j1, j2, _, x1, x2, _ = unstack_coords(coords)
        a, b = self.components(coords, spec)
        zero = tf.zeros_like(j1)
        grad_a = tf.stack([2.0 * j1, -2.0 * j2, zero, zero - 2.0 * spec.c1, zero, zero], axis=-1)
        grad_b = tf.stack([2.0 * j2, 2.0 * j1, zero, zero, zero - 2.0 * spec.c1, zero], axis=-1)
        return 2.0 * a[..., tf.newaxis] * grad_a + 2.0 * b[..., tf.newaxis] * grad_b
