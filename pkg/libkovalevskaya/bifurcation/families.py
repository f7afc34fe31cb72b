import collections
import itertools

import numpy as np

from libkovalevskaya.phase_point import IntegralPair

EquilibriumFamily = collections.namedtuple('EquilibriumFamily', ['name', 'points', 'image'])


def equilibrium_families(orbit, spec):
    """
    Closed-form rank-zero points on an orbit ``(a, 0)``, grouped by family. A family exists only
    for the values of ``a`` where its points are real and distinct.

    - ``E1+``, ``E1-``: ``J = 0``, ``x = (+-sqrt(a), 0, 0)``
    - ``E2``: ``x = 0``, ``J = (+-sqrt(a / kappa), 0, 0)``
    - ``E3``: ``x = (kappa c1, 0, 0)``, ``J = (0, +-j, 0)``
    - ``E4``: ``x = (kappa c1 / 2, 0, 0)``, ``J = (0, 0, +-j)``
    - ``E5``: ``J = (+-sqrt(s), 0, +-sqrt(t))`` with ``s = kappa c1^2 + 2 |c1| sqrt(-a)`` and
      ``t = -(s + kappa c1^2) / 2``

    Returns:
        A list of ``EquilibriumFamily``; empty for ``b != 0``
    """
    if orbit.b != 0:
        return []
    a, kappa, c1 = orbit.a, spec.kappa, spec.c1
    families = []

    def add(name, points, h, k):
        families.append(EquilibriumFamily(name, np.array(points, dtype=np.float64),
                                          IntegralPair(float(h), float(k))))

    if a > 0:
        for name, x1 in (('E1+', np.sqrt(a)), ('E1-', -np.sqrt(a))):
            add(name, [[0.0, 0.0, 0.0, x1, 0.0, 0.0]], 2.0 * c1 * x1,
                (kappa * c1 ** 2 - 2.0 * c1 * x1) ** 2)
    if kappa != 0 and a / kappa > 0:
        j = np.sqrt(a / kappa)
        add('E2', [[j, 0.0, 0.0, 0.0, 0.0, 0.0], [-j, 0.0, 0.0, 0.0, 0.0, 0.0]],
            a / kappa, (a / kappa + kappa * c1 ** 2) ** 2)
    if kappa != 0 and (a - kappa ** 2 * c1 ** 2) / kappa > 0:
        j2 = (a - kappa ** 2 * c1 ** 2) / kappa
        j = np.sqrt(j2)
        add('E3', [[0.0, j, 0.0, kappa * c1, 0.0, 0.0], [0.0, -j, 0.0, kappa * c1, 0.0, 0.0]],
            j2 + 2.0 * kappa * c1 ** 2, (j2 + kappa * c1 ** 2) ** 2)
    if kappa != 0 and (a - kappa ** 2 * c1 ** 2 / 4.0) / kappa > 0:
        j2 = (a - kappa ** 2 * c1 ** 2 / 4.0) / kappa
        j = np.sqrt(j2)
        x1 = kappa * c1 / 2.0
        add('E4', [[0.0, 0.0, j, x1, 0.0, 0.0], [0.0, 0.0, -j, x1, 0.0, 0.0]],
            2.0 * j2 + kappa * c1 ** 2, 0.0)
    if c1 != 0 and a < 0:
        s = kappa * c1 ** 2 + 2.0 * abs(c1) * np.sqrt(-a)
        t = -(s + kappa * c1 ** 2) / 2.0
        if s > 0 and t > 0:
            points = []
            for j1, j3 in itertools.product((np.sqrt(s), -np.sqrt(s)), (np.sqrt(t), -np.sqrt(t))):
                points.append([j1, 0.0, j3, (s + kappa * c1 ** 2) / (2.0 * c1), 0.0, j1 * j3 / c1])
            add('E5', points, s, 0.0)
    return families
