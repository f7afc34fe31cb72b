import logging

from libkovalevskaya.fiber import isoenergy_critical_values, count_tori
from libkovalevskaya.molecule.atom import AtomLabel, atom_label
from libkovalevskaya.phase_point import OrbitSpec

logger = logging.getLogger('libkovalevskaya')

PROBE_OFFSET = 0.05


class AmbiguousAtomError(RuntimeError):
    pass


def atom_from_counts(count_above, count_below):
    """
    Atom of an arc from the numbers of tori on both sides. ``(n, 0)`` gives ``nA``,
    ``(m, 2m)`` gives ``mB`` and ``(m, 3m)`` gives ``mD1``, in either order.

    Returns:
        The label, or ``None`` for ``(2m, 2m)`` where ``mC2`` and ``mD2`` need a probe

    Raises:
        AmbiguousAtomError: If no atom has these boundary counts
    """
    low, high = sorted((count_above, count_below))
    if low == 0 and high > 0:
        return atom_label(AtomLabel.A, high)
    if low > 0 and high == 2 * low:
        return atom_label(AtomLabel.B, low)
    if low > 0 and high == 3 * low:
        return atom_label(AtomLabel.D1, low)
    if low > 0 and low == high and low % 2 == 0:
        return None
    raise AmbiguousAtomError("No atom with {} tori above and {} below".format(
        count_above, count_below))


def probe_split_level(orbit, h, k, spec, offset=PROBE_OFFSET, half_width=None, budget=512,
                      probe_budget=512, seed=0):
    """
    Moves off the axis to the orbit ``(a, offset)``, where an arc of ``C2`` or ``D2`` atoms
    splits into two nearby arcs, and counts tori between them.

    Returns:
        A tuple ``(count_between, (k_lower, k_upper))``

    Raises:
        AmbiguousAtomError: If two split levels are not found near ``k``
    """
    probe = OrbitSpec(orbit.a, orbit.b + offset, orbit.algebra)
    half_width = half_width if half_width is not None else 0.1 * (1.0 + abs(k))
    levels = isoenergy_critical_values(
        probe, h, spec, budget=probe_budget, seed=seed, k_range=(k - half_width, k + half_width))
    if len(levels) < 2:
        raise AmbiguousAtomError(
            "Probe at b={} found {} critical levels near k={}, need two".format(
                probe.b, len(levels), k))
    nearest = sorted(levels, key=lambda level: abs(level.k - k))[:2]
    k_lower, k_upper = sorted(level.k for level in nearest)
    between = count_tori(probe, h, 0.5 * (k_lower + k_upper), spec, budget=budget, seed=seed)
    return between.component_count, (k_lower, k_upper)


def atom_of_arc(diagram, arc_id, spec, budget=512, probe_budget=512, seed=0):
    """
    Resolves the atom of an arc from the torus counts on both sides. For ``(2m, 2m)`` arcs the
    level between the two arcs it splits into on a nearby orbit off the axis decides: ``m``
    tori for ``mC2``, ``3m`` for ``mD2``.

    Args:
        diagram: ``BifDiagram``
        arc_id: Identifier of the arc
        spec: ``PencilSpec``
        budget: Seeds per fiber of the probe count
        probe_budget: Seeds of the critical value search on the probe orbit
        seed: Seed of the random generator

    Returns:
        An atom label such as ``2A`` or ``C2``

    Raises:
        AmbiguousAtomError: If the counts match no atom or the probe is inconclusive
    """
    arc = diagram.arc(arc_id)
    label = atom_from_counts(arc.count_above, arc.count_below)
    if label is not None:
        return label
    multiplicity = arc.count_above // 2
    h, k = arc.midpoint
    between, split = probe_split_level(
        diagram.orbit, h, k, spec, budget=budget, probe_budget=probe_budget, seed=seed,
        half_width=0.1 * max(diagram.window.k_span, 1.0))
    logger.info("Probe of arc {} at h={:.4g}: {} tori between k={:.6g} and k={:.6g}".format(
        arc_id, h, between, *split))
    if between == multiplicity:
        return atom_label(AtomLabel.C2, multiplicity)
    if between == 3 * multiplicity:
        return atom_label(AtomLabel.D2, multiplicity)
    raise AmbiguousAtomError(
        "Probe of arc {} found {} tori between the split levels, expected {} or {}".format(
            arc_id, between, multiplicity, 3 * multiplicity))
