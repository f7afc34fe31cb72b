import collections

import numpy as np

LoopMolecule = collections.namedtuple('LoopMolecule', ['vertex', 'atoms', 'arcs', 'angles'])


class LoopRadiusError(ValueError):
    pass


def _segment_circle_crossings(p0, p1, center, radius):
    """Parameters ``t`` in ``[0, 1)`` where the segment ``p0 -> p1`` meets the circle."""
    d = p1 - p0
    f = p0 - center
    a = np.dot(d, d)
    if a == 0:
        return []
    b = 2.0 * np.dot(f, d)
    c = np.dot(f, f) - radius ** 2
    disc = b ** 2 - 4.0 * a * c
    if disc < 0:
        return []
    root = np.sqrt(disc)
    return [t for t in ((-b - root) / (2.0 * a), (-b + root) / (2.0 * a)) if 0.0 <= t < 1.0]


def _canonical_rotation(sequence):
    if not sequence:
        return tuple(sequence)
    rotations = [tuple(sequence[i:] + sequence[:i]) for i in range(len(sequence))]
    return min(rotations)


def loop_molecule(diagram, vertex, radius):
    """
    Atoms met by a small circle around a vertex of the diagram, in counterclockwise order.
    The cyclic sequence is rotated to its lexicographically smallest form.

    Args:
        diagram: ``BifDiagram``
        vertex: Vertex id or name, e.g. ``w6``
        radius: Radius of the circle in the ``(h, k)`` plane

    Returns:
        A ``LoopMolecule`` with the atom sequence, the ids of the crossed arcs and the crossing
        angles

    Raises:
        LoopRadiusError: If the circle meets an arc not incident to the vertex
    """
    if radius <= 0:
        raise ValueError("Loop radius must be positive, got {}".format(radius))
    target = diagram.vertex(vertex)
    center = np.asarray(target.image, dtype=np.float64)
    crossings = []
    for arc in diagram.arcs:
        incident = target.vertex_id in (arc.start, arc.end)
        for p0, p1 in zip(arc.points[:-1], arc.points[1:]):
            for t in _segment_circle_crossings(p0, p1, center, radius):
                if not incident:
                    raise LoopRadiusError(
                        "Circle of radius {} around {} crosses arc {}, which does not end "
                        "there".format(radius, vertex, arc.arc_id))
                point = p0 + t * (p1 - p0)
                angle = np.arctan2(point[1] - center[1], point[0] - center[0]) % (2.0 * np.pi)
                crossings.append((angle, arc.arc_id, arc.atom))
    crossings.sort()
    atoms = [atom for _, _, atom in crossings]
    rotated = _canonical_rotation(atoms)
    shift = next(i for i in range(len(atoms)) if tuple(atoms[i:] + atoms[:i]) == rotated) \
        if atoms else 0
    ordered = crossings[shift:] + crossings[:shift]
    return LoopMolecule(
        vertex=target.name or target.vertex_id, atoms=rotated,
        arcs=tuple(arc_id for _, arc_id, _ in ordered),
        angles=tuple(angle for angle, _, _ in ordered))
