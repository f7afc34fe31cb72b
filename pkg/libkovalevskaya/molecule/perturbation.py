import logging

from libkovalevskaya.molecule.atom import AtomLabel
from libkovalevskaya.molecule.gluing import GluingMatrix
from libkovalevskaya.molecule.marked_molecule import MarkedMolecule, MoleculeAtom, MoleculeEdge

logger = logging.getLogger('libkovalevskaya')

# r = inf, epsilon = 1
PERTURBATION_GLUING = GluingMatrix([[1, 0], [0, -1]])


class PerturbationError(ValueError):
    pass


def perturb_c2(molecule, target, name=None):
    """
    Typical perturbation of an atom ``C2``: it splits into two atoms ``B`` joined by an edge with
    marks ``r = inf, epsilon = 1``. The lower ``B``, with id ``<target>_1``, takes the two edges
    that enter the ``C2`` and the upper ``B``, with id ``<target>_2``, the two that leave it.
    Edges elsewhere are kept as they are.

    Args:
        molecule: ``MarkedMolecule``
        target: Id of the ``C2`` atom
        name: Optional name of the new molecule

    Returns:
        A new ``MarkedMolecule`` with one atom more

    Raises:
        PerturbationError: If the target is not a ``C2`` atom with two edges entering and two
            leaving it
    """
    try:
        atom = molecule.atom(target)
    except KeyError:
        raise PerturbationError("No atom {!r} in {}".format(target, molecule))
    if atom.label != AtomLabel.C2:
        raise PerturbationError("Atom {} is {}, not {}".format(target, atom.label, AtomLabel.C2))
    incoming = [e for e in molecule.edges if e.target == target]
    outgoing = [e for e in molecule.edges if e.source == target]
    if len(incoming) != 2 or len(outgoing) != 2 or set(incoming) & set(outgoing):
        raise PerturbationError(
            "Atom {} has {} edges entering and {} leaving it, expected two and two".format(
                target, len(incoming), len(outgoing)))

    lower, upper = "{}_1".format(target), "{}_2".format(target)
    existing = {a.atom_id for a in molecule.atoms}
    if lower in existing or upper in existing:
        raise PerturbationError("Ids {} or {} are already taken".format(lower, upper))

    atoms = []
    for a in molecule.atoms:
        if a.atom_id == target:
            atoms.extend([MoleculeAtom(lower, AtomLabel.B), MoleculeAtom(upper, AtomLabel.B)])
        else:
            atoms.append(a)
    edges = []
    for e in molecule.edges:
        if e.target == target:
            edges.append(e._replace(target=lower))
        elif e.source == target:
            edges.append(e._replace(source=upper))
        else:
            edges.append(e)
    edges.append(MoleculeEdge(lower, upper, PERTURBATION_GLUING))
    logger.debug("Perturbed {} of {} into {} and {}".format(target, molecule, lower, upper))
    return MarkedMolecule(atoms, edges, name=name or molecule.name,
                          provenance=molecule.provenance)
