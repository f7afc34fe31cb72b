import tensorflow as tf


class ScalarField:
    """
    A scalar function on the six-dimensional phase space, evaluated on batches of points of
    shape [..., 6] in coordinate order (J1, J2, J3, x1, x2, x3). Subclasses implement ``call``
    and, when a closed form is available, ``gradient``. The default gradient is taken with a
    ``tf.GradientTape``.
    """

    def __call__(self, coords, spec):
        return self.call(tf.convert_to_tensor(coords, dtype=tf.float64), spec)

    def call(self, coords, spec):
        raise NotImplementedError("Implement in subclass")

    def gradient(self, coords, spec):
        coords = tf.convert_to_tensor(coords, dtype=tf.float64)
        with tf.GradientTape() as tape:
            tape.watch(coords)
            value = self.call(coords, spec)
        return tape.gradient(value, coords)

    def get_config(self):
        return {}

    def __repr__(self):
        config = self.get_config()
        return "{}({})".format(
            type(self).__name__, ", ".join("{}={}".format(k, v) for k, v in config.items()))


def unstack_coords(coords):
    return tf.unstack(tf.convert_to_tensor(coords, dtype=tf.float64), num=6, axis=-1)
