import numpy as np
import tensorflow as tf

from libkovalevskaya.algebra import bracket_tensor
from libkovalevskaya.fields import (
    KovalevskayaHamiltonian, KovalevskayaIntegral, KSHamiltonian, KSGeneralHamiltonian,
    KSIntegral, SokolovIntegral, CasimirF1, CasimirF2, LambdaField
)
from libkovalevskaya.phase_point import PhasePoint, as_coords, scalar_or_array


class SokolovCaseError(ValueError):
    pass


def _evaluate(field, p, spec):
    return scalar_or_array(field(as_coords(p), spec).numpy())


def hamiltonian(p, spec):
    """``H = J1^2 + J2^2 + 2 J3^2 + 2 c1 x1``."""
    return _evaluate(KovalevskayaHamiltonian(), p, spec)


def integral_k(p, spec):
    """``K = (J1^2 - J2^2 - 2 c1 x1 + kappa c1^2)^2 + (2 J1 J2 - 2 c1 x2)^2``, never negative."""
    return _evaluate(KovalevskayaIntegral(), p, spec)


def ks_hamiltonian(p, spec):
    """
    Kovalevskaya-Sokolov Hamiltonian with the second triple of ``p`` read as ``y``:
    ``J1^2 + J2^2 + 2 J3^2 + 2 c1 y1 + 2 c2 (y2 J3 - y3 J2)``.
    """
    return _evaluate(KSHamiltonian(), p, spec)


def ks_general(p, spec):
    """
    ``J1^2 + J2^2 + 2 J3^2 + 2 c1 y1 - 2 c2 J3 y2 - c2^2 y3^2 + 2 c3 (J3 + c2 y2)``.

    After ``shift_coords`` it agrees with ``ks_hamiltonian`` up to the ``c3`` terms:
    ``ks_general(shift_coords(p)) == ks_hamiltonian(p) + 2 c3 (J3 + 2 c2 y2)``.
    """
    return _evaluate(KSGeneralHamiltonian(), p, spec)


def ks_integral(p, spec):
    """First integral of ``ks_hamiltonian`` for arbitrary ``c1`` and ``c2``."""
    return _evaluate(KSIntegral(), p, spec)


def shift_coords(p, spec):
    """
    Change of variables ``J2 -> J2 - c2 y3``, ``J3 -> J3 + c2 y2`` with ``y`` unchanged. Applying
    it with ``c2`` and then with ``-c2`` recovers ``p``.

    Returns:
        A ``PhasePoint`` for a ``PhasePoint`` input, otherwise an array of shape [..., 6]
    """
    coords = as_coords(p)
    shifted = coords.copy()
    shifted[..., 1] = coords[..., 1] - spec.c2 * coords[..., 5]
    shifted[..., 2] = coords[..., 2] + spec.c2 * coords[..., 4]
    if isinstance(p, PhasePoint):
        return PhasePoint.from_coords(shifted)
    return shifted


def sokolov_integral(p, spec):
    """
    Integral ``K_s`` of the Sokolov sub-case as an expanded polynomial.

    Raises:
        SokolovCaseError: If ``spec.c1 != 0``
    """
    _check_sokolov(spec)
    return _evaluate(SokolovIntegral(), p, spec)


def sokolov_integral_tilde(p, spec):
    """``ks_integral`` in the Sokolov sub-case ``c1 = 0``."""
    _check_sokolov(spec)
    return _evaluate(KSIntegral(), p, spec)


def sokolov_identity_residual(p, spec):
    """
    Residual of ``K_s = -4 Kt_s + (2 H_s - c2^2 g1)^2 / 4 - c2^2 g2^2``, where ``Kt_s`` is the
    pulled-back integral, ``H_s`` the Kovalevskaya-Sokolov Hamiltonian and ``(g1, g2)`` the e(3)
    Casimirs. ``K_s`` itself is evaluated from its expanded polynomial.

    Raises:
        SokolovCaseError: If ``spec.c1 != 0``
    """
    _check_sokolov(spec)
    coords = tf.constant(as_coords(p))
    e3 = spec._replace(kappa=0.0)
    k_s = SokolovIntegral()(coords, spec)
    k_tilde = KSIntegral()(coords, spec)
    h_s = KSHamiltonian()(coords, spec)
    g1 = CasimirF1()(coords, e3)
    g2 = CasimirF2()(coords, e3)
    c2 = spec.c2
    composed = -4.0 * k_tilde + (2.0 * h_s - c2 ** 2 * g1) ** 2 / 4.0 - c2 ** 2 * g2 ** 2
    return scalar_or_array(np.abs((k_s - composed).numpy()))


def involution_residual(p, spec, k_spec=None):
    """
    ``|{H, K}|`` for the Kovalevskaya pair.

    Args:
        p: A ``PhasePoint`` or an array of shape [..., 6]
        spec: ``PencilSpec`` used for the bracket and ``H``
        k_spec: Optional separate ``PencilSpec`` for ``K``; a mismatch in ``c1`` breaks
            involution
    """
    k_spec = k_spec or spec
    integral_field = KovalevskayaIntegral()
    pinned = LambdaField(
        lambda coords, _: integral_field.call(coords, k_spec),
        gradient_fn=lambda coords, _: integral_field.gradient(coords, k_spec), name='K')
    values = bracket_tensor(
        KovalevskayaHamiltonian(), pinned, tf.constant(as_coords(p)), spec)
    return scalar_or_array(np.abs(values.numpy()))


def _check_sokolov(spec):
    if spec.c1 != 0:
        raise SokolovCaseError("The Sokolov sub-case requires c1 = 0, got c1={}".format(spec.c1))
