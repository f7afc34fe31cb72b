import tensorflow as tf

from libkovalevskaya.fields.base_field import ScalarField, unstack_coords


def _cross_terms(coords):
    j1, j2, j3, y1, y2, y3 = unstack_coords(coords)
    p1 = y2 * j3 - y3 * j2
    p2 = y3 * j1 - y1 * j3
    return p1, p2


class KSHamiltonian(ScalarField):
    """
    Kovalevskaya-Sokolov Hamiltonian on e(3),
    ``J1^2 + J2^2 + 2 J3^2 + 2 c1 y1 + 2 c2 (y2 J3 - y3 J2)``.
    The second triple of the coordinates is read as ``y``.
    """

    def call(self, coords, spec):
        j1, j2, j3, y1, y2, y3 = unstack_coords(coords)
        return j1 ** 2 + j2 ** 2 + 2.0 * j3 ** 2 + 2.0 * spec.c1 * y1 \
            + 2.0 * spec.c2 * (y2 * j3 - y3 * j2)

    def gradient(self, coords, spec):
        j1, j2, j3, y1, y2, y3 = unstack_coords(coords)
        c1, c2 = spec.c1, spec.c2
        return tf.stack([
            2.0 * j1,
            2.0 * j2 - 2.0 * c2 * y3,
            4.0 * j3 + 2.0 * c2 * y2,
            tf.zeros_like(y1) + 2.0 * c1,
            2.0 * c2 * j3,
            -2.0 * c2 * j2
        ], axis=-1)


class KSGeneralHamiltonian(ScalarField):
    """
    The three-constant family
    ``J1^2 + J2^2 + 2 J3^2 + 2 c1 y1 - 2 c2 J3 y2 - c2^2 y3^2 + 2 c3 (J3 + c2 y2)``.
    With ``c2 = c3 = 0`` it is the classical Kovalevskaya Hamiltonian; with ``c2 = 0`` it is the
    Kovalevskaya-Yehia Hamiltonian.
    """

    def call(self, coords, spec):
        j1, j2, j3, y1, y2, y3 = unstack_coords(coords)
        c1, c2, c3 = spec.c1, spec.c2, spec.c3
        return j1 ** 2 + j2 ** 2 + 2.0 * j3 ** 2 + 2.0 * c1 * y1 - 2.0 * c2 * j3 * y2 \
            - c2 ** 2 * y3 ** 2 + 2.0 * c3 * (j3 + c2 * y2)

    def gradient(self, coords, spec):
        j1, j2, j3, y1, y2, y3 = unstack_coords(coords)
        c1, c2, c3 = spec.c1, spec.c2, spec.c3
        return tf.stack([
            2.0 * j1,
            2.0 * j2,
            4.0 * j3 - 2.0 * c2 * y2 + 2.0 * c3,
            tf.zeros_like(y1) + 2.0 * c1,
            -2.0 * c2 * j3 + 2.0 * c3 * c2,
            -2.0 * c2 ** 2 * y3
        ], axis=-1)


class KSIntegral(ScalarField):
    """
    First integral of ``KSHamiltonian``, obtained by pulling ``K`` back along the chart
    e(3) -> so(3,1):

    ``(J1^2 - J2^2 - 2 c1 y1 - 2 c2 P1 - c2^2 |y|^2)^2 + (2 J1 J2 - 2 c1 y2 - 2 c2 P2)^2``

    where ``P = y x J``. On every orbit ``|y|^2 = g`` it commutes with ``KSHamiltonian`` for the
    e(3) bracket.
    """

    def call(self, coords, spec):
        a, b = self.components(coords, spec)
        return a ** 2 + b ** 2

    @staticmethod
    def components(coords, spec):
        j1, j2, _, y1, y2, y3 = unstack_coords(coords)
        p1, p2 = _cross_terms(coords)
        g = y1 ** 2 + y2 ** 2 + y3 ** 2
        c1, c2 = spec.c1, spec.c2
        a = j1 ** 2 - j2 ** 2 - 2.0 * c1 * y1 - 2.0 * c2 * p1 - c2 ** 2 * g
        b = 2.0 * j1 * j2 - 2.0 * c1 * y2 - 2.0 * c2 * p2
        return a, b

    def gradient(self, coords, spec):
        j1, j2, j3, y1, y2, y3 = unstack_coords(coords)
        c1, c2 = spec.c1, spec.c2
        a, b = self.components(coords, spec)
        grad_a = tf.stack([
            2.0 * j1,
            -2.0 * j2 + 2.0 * c2 * y3,
            -2.0 * c2 * y2,
            -2.0 * c1 - 2.0 * c2 ** 2 * y1,
            -2.0 * c2 * j3 - 2.0 * c2 ** 2 * y2,
            2.0 * c2 * j2 - 2.0 * c2 ** 2 * y3
        ], axis=-1)
        grad_b = tf.stack([
            2.0 * j2 - 2.0 * c2 * y3,
            2.0 * j1,
            2.0 * c2 * y1,
            2.0 * c2 * j3,
            tf.zeros_like(y2) - 2.0 * c1,
            -2.0 * c2 * j1
        ], axis=-1)
        return 2.0 * a[..., tf.newaxis] * grad_a + 2.0 * b[..., tf.newaxis] * grad_b


class SokolovIntegral(ScalarField):
    """
    Integral ``K_s`` of the Sokolov sub-case ``c1 = 0``, written as an expanded polynomial in
    ``T = J1^2 + J2^2 + 2 J3^2``, ``u = J1^2 - J2^2``, ``v = 2 J1 J2``, ``P = y x J``,
    ``g = |y|^2`` and ``l = J . y``. Only ``spec.c2`` enters.
    """

    def call(self, coords, spec):
        j1, j2, j3, y1, y2, y3 = unstack_coords(coords)
        c = spec.c2
        p1, p2 = _cross_terms(coords)
        t = j1 ** 2 + j2 ** 2 + 2.0 * j3 ** 2
        u = j1 ** 2 - j2 ** 2
        v = 2.0 * j1 * j2
        g = y1 ** 2 + y2 ** 2 + y3 ** 2
        ell = j1 * y1 + j2 * y2 + j3 * y3
        return t ** 2 - 4.0 * (j1 ** 2 + j2 ** 2) ** 2 \
            + c * (4.0 * t * p1 + 16.0 * u * p1 + 16.0 * v * p2) \
            + c ** 2 * (-12.0 * p1 ** 2 - 16.0 * p2 ** 2 - g * t + 8.0 * g * u - ell ** 2) \
            - 18.0 * c ** 3 * g * p1 \
            - 3.75 * c ** 4 * g ** 2

    def gradient(self, coords, spec):
        # K_s = -4 Kt + (2 H_s - c^2 g)^2 / 4 - c^2 l^2 with Kt, H_s taken at c1 = 0
        coords = tf.convert_to_tensor(coords, dtype=tf.float64)
        sokolov = spec._replace(c1=0.0)
        c = spec.c2
        j = coords[..., :3]
        y = coords[..., 3:]
        g = tf.reduce_sum(y ** 2, axis=-1)
        ell = tf.reduce_sum(j * y, axis=-1)
        hamiltonian = KSHamiltonian()
        q = 2.0 * hamiltonian.call(coords, sokolov) - c ** 2 * g
        grad_g = tf.concat([tf.zeros_like(j), 2.0 * y], axis=-1)
        grad_ell = tf.concat([y, j], axis=-1)
        grad_q = 2.0 * hamiltonian.gradient(coords, sokolov) - c ** 2 * grad_g
        return -4.0 * KSIntegral().gradient(coords, sokolov) \
            + 0.5 * q[..., tf.newaxis] * grad_q \
            - 2.0 * c ** 2 * ell[..., tf.newaxis] * grad_ell
