import tensorflow as tf


def damped_least_squares_step(residuals, jacobian, damping=1e-12):
    """
    Damped Gauss-Newton (Levenberg-Marquardt) step for a batch of nonlinear systems.

    Args:
        residuals: ``Tensor`` of shape [batch, num_equations]
        jacobian: ``Tensor`` of shape [batch, num_equations, num_unknowns]
        damping: Damping relative to the mean diagonal of the normal matrix

    Returns:
        A step of shape [batch, num_unknowns]. For underdetermined systems this is the
        minimum-norm step, which projects onto the solution set along its normal space.
    """
    num_equations, num_unknowns = jacobian.shape[-2], jacobian.shape[-1]
    if num_equations <= num_unknowns:
        normal = tf.matmul(jacobian, jacobian, transpose_b=True)
        size = num_equations
    else:
        normal = tf.matmul(jacobian, jacobian, transpose_a=True)
        size = num_unknowns
    scale = tf.linalg.trace(normal) / size
    mu = damping * scale + 1e-300
    normal = normal + mu[:, tf.newaxis, tf.newaxis] * tf.eye(size, dtype=normal.dtype)

    if num_equations <= num_unknowns:
        y = tf.linalg.solve(normal, residuals[..., tf.newaxis])
        step = tf.matmul(jacobian, y, transpose_a=True)
    else:
        rhs = tf.matmul(jacobian, residuals[..., tf.newaxis], transpose_a=True)
        step = tf.linalg.solve(normal, rhs)
    return -tf.squeeze(step, axis=-1)


def clip_step(step, max_norm):
    norm = tf.norm(step, axis=-1, keepdims=True)
    return step * tf.minimum(1.0, max_norm / tf.maximum(norm, 1e-300))


def gauss_newton(residual_fn, x0, jacobian_fn=None, max_iterations=50, tolerance=1e-11,
                 damping=1e-12, max_step=None):
    """
    Batched damped Gauss-Newton iteration.

    Args:
        residual_fn: Maps a ``Tensor`` of shape [batch, n] to residuals of shape [batch, m]
        x0: Starting points of shape [batch, n]
        jacobian_fn: Optional analytic jacobian with the signature of ``residual_fn``. When
            omitted, the jacobian is taken with a ``tf.GradientTape``.
        max_iterations: Maximum number of iterations
        tolerance: Iteration stops once the largest absolute residual in the batch is below
            this value
        damping: Relative damping of the normal equations
        max_step: Optional bound on the Euclidean norm of every step

    Returns:
        A tuple ``(x, residuals)`` of the final iterates and their residuals.
    """
    x = tf.convert_to_tensor(x0, dtype=tf.float64)
    for _ in range(max_iterations):
        residuals, jacobian = _residuals_and_jacobian(residual_fn, jacobian_fn, x)
        worst = tf.reduce_max(tf.abs(residuals))
        if not tf.math.is_finite(worst):
            residuals = tf.where(tf.math.is_finite(residuals), residuals, tf.zeros_like(residuals))
            jacobian = tf.where(tf.math.is_finite(jacobian), jacobian, tf.zeros_like(jacobian))
        elif worst < tolerance:
            break
        step = damped_least_squares_step(residuals, jacobian, damping=damping)
        if max_step is not None:
            step = clip_step(step, max_step)
        x = x + step
    return x, residual_fn(x)


def _residuals_and_jacobian(residual_fn, jacobian_fn, x):
    if jacobian_fn is not None:
        return residual_fn(x), jacobian_fn(x)
    with tf.GradientTape() as tape:
        tape.watch(x)
        residuals = residual_fn(x)
    return residuals, tape.batch_jacobian(residuals, x)
