import tensorflow as tf


def orbit_tangent_basis(casimir_gradients):
    """
    Orthonormal basis of the common kernel of the Casimir differentials.

    Args:
        casimir_gradients: ``Tensor`` of shape [batch, 2, 6] holding the gradients of the
            two Casimir functions

    Returns:
        A ``Tensor`` of shape [batch, 6, 4] whose columns span the tangent space of the
        symplectic leaf at regular points.
    """
    _, _, v = tf.linalg.svd(casimir_gradients, full_matrices=True)
    return v[..., 2:]


def sgrad_jacobian(sgrad_fn, coords):
    """
    Linearization of a Hamiltonian vector field on a batch of points.

    Args:
        sgrad_fn: Maps a ``Tensor`` of shape [batch, 6] to vectors of shape [batch, 6]
        coords: Points of shape [batch, 6]

    Returns:
        A ``Tensor`` of shape [batch, 6, 6]
    """
    coords = tf.convert_to_tensor(coords, dtype=tf.float64)
    with tf.GradientTape() as tape:
        tape.watch(coords)
        vectors = sgrad_fn(coords)
    return tape.batch_jacobian(vectors, coords)
