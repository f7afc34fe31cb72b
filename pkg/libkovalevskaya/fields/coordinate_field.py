import tensorflow as tf

from libkovalevskaya.fields.base_field import ScalarField

COORDINATE_NAMES = ('J1', 'J2', 'J3', 'x1', 'x2', 'x3')


class CoordinateField(ScalarField):
    """
    One of the six coordinate functions.

    Args:
        index: Position in the order (J1, J2, J3, x1, x2, x3)
    """

    def __init__(self, index):
        if not 0 <= index < 6:
            raise ValueError("Coordinate index must be in 0..5, got {}".format(index))
        self.index = index

    def call(self, coords, spec):
        return coords[..., self.index]

    def gradient(self, coords, spec):
        coords = tf.convert_to_tensor(coords, dtype=tf.float64)
        return tf.broadcast_to(tf.one_hot(self.index, 6, dtype=tf.float64), tf.shape(coords))

    @property
    def name(self):
        return COORDINATE_NAMES[self.index]

    def get_config(self):
        return dict(index=self.index)


def coordinate_fields():
    return [CoordinateField(i) for i in range(6)]
