import numpy as np
import tensorflow as tf


def levi_civita():
    """
    Returns the totally antisymmetric symbol on three indices as a ``[3, 3, 3]`` array.
    """
    eps = np.zeros((3, 3, 3))
    eps[0, 1, 2] = eps[1, 2, 0] = eps[2, 0, 1] = 1.0
    eps[0, 2, 1] = eps[2, 1, 0] = eps[1, 0, 2] = -1.0
    return eps


def structure_constants(kappa):
    """
    Structure constants ``C`` of the pencil bracket in coordinate order (J1, J2, J3, x1, x2, x3),
    such that the Poisson tensor at ``p`` is ``P_ab = C_abc p_c``.

    Args:
        kappa: Pencil parameter

    Returns:
        A ``[6, 6, 6]`` array, antisymmetric in its first two indices.
    """
    eps = levi_civita()
    c = np.zeros((6, 6, 6))
    c[:3, :3, :3] = eps
    c[:3, 3:, 3:] = eps
    c[3:, :3, 3:] = eps
    c[3:, 3:, :3] = kappa * eps
    return c


def poisson_tensor_from_coords(coords, kappa):
    """
    Poisson tensor of the pencil bracket on a batch of points.

    Args:
        coords: ``Tensor`` of shape [..., 6]
        kappa: Pencil parameter

    Returns:
        A ``Tensor`` of shape [..., 6, 6]
    """
    c = tf.constant(structure_constants(kappa), dtype=tf.float64)
    return tf.einsum('abc,...c->...ab', c, coords)


def jacobi_sum(coords, kappa):
    """
    Cyclic Jacobi sums ``{p_i, {p_j, p_k}} + cyclic`` for all index triples. The structure
    functions are linear, so ``d_l P_jk = C_jkl`` exactly.

    Returns:
        A ``Tensor`` of shape [..., 6, 6, 6]
    """
    c = tf.constant(structure_constants(kappa), dtype=tf.float64)
    p = tf.einsum('abc,...c->...ab', c, coords)
    return tf.einsum('...il,jkl->...ijk', p, c) \
        + tf.einsum('...jl,kil->...ijk', p, c) \
        + tf.einsum('...kl,ijl->...ijk', p, c)
