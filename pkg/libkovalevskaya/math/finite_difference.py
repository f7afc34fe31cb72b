import numpy as np


def finite_difference_gradient(fn, coords, rel_step=1e-6):
    """
    Central finite-difference gradient with step ``rel_step * (1 + |p|)``. Used as a test
    oracle for the analytic gradients.

    Args:
        fn: Callable mapping an array of shape [..., 6] to values of shape [...]
        coords: Points of shape [..., 6]
        rel_step: Relative step size

    Returns:
        An array of shape [..., 6]
    """
    coords = np.asarray(coords, dtype=np.float64)
    step = rel_step * (1.0 + np.linalg.norm(coords, axis=-1, keepdims=True))
    grads = []
    for i in range(coords.shape[-1]):
        offset = np.zeros(coords.shape[-1])
        offset[i] = 1.0
        upper = np.asarray(fn(coords + step * offset))
        lower = np.asarray(fn(coords - step * offset))
        grads.append((upper - lower) / (2.0 * step[..., 0]))
    return np.stack(grads, axis=-1)


def finite_difference_bracket(f, g, coords, poisson_tensor, rel_step=1e-6):
    """
    Bracket oracle ``grad f . P . grad g`` with finite-difference gradients.

    Args:
        f: Callable mapping points of shape [..., 6] to values
        g: Callable mapping points of shape [..., 6] to values
        coords: Points of shape [..., 6]
        poisson_tensor: Array of shape [..., 6, 6] at ``coords``
    """
    grad_f = finite_difference_gradient(f, coords, rel_step)
    grad_g = finite_difference_gradient(g, coords, rel_step)
    return np.einsum('...a,...ab,...b->...', grad_f, poisson_tensor, grad_g)
