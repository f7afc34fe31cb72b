import json

from libkovalevskaya.molecule.atom import AtomLabelError
from libkovalevskaya.molecule.gluing import GluingMatrix, GluingMatrixError
from libkovalevskaya.molecule.marked_molecule import MarkedMolecule, MoleculeStructureError


class MoleculeSchemaError(ValueError):
    """
    Invalid molecule file.

    Args:
        path: Location of the offending value, e.g. ``$.edges[2].matrix``
        message: What is wrong there
    """

    def __init__(self, path, message):
        super(MoleculeSchemaError, self).__init__("{}: {}".format(path, message))
        self.path = path
        self.message = message


def _require(obj, key, kind, path):
    if not isinstance(obj, dict) or key not in obj:
        raise MoleculeSchemaError(path, "missing key {!r}".format(key))
    value = obj[key]
    if not isinstance(value, kind):
        raise MoleculeSchemaError("{}.{}".format(path, key), "expected {}, got {!r}".format(
            kind.__name__, value))
    return value


def molecule_from_dict(data, path='$'):
    """
    Builds a molecule from its decoded file contents. Stored families are checked against the
    families derived from the graph, including their marks ``n``.

    Raises:
        MoleculeSchemaError: If the contents do not describe a valid molecule
    """
    if not isinstance(data, dict):
        raise MoleculeSchemaError(path, "expected an object")
    atoms = []
    for i, atom in enumerate(_require(data, 'atoms', list, path)):
        atom_path = "{}.atoms[{}]".format(path, i)
        atoms.append((_require(atom, 'id', str, atom_path),
                      _require(atom, 'label', str, atom_path)))
    edges = []
    for i, edge in enumerate(_require(data, 'edges', list, path)):
        edge_path = "{}.edges[{}]".format(path, i)
        matrix = _require(edge, 'matrix', list, edge_path)
        try:
            gluing = GluingMatrix(matrix)
        except GluingMatrixError as e:
            raise MoleculeSchemaError(edge_path + ".matrix", str(e))
        edges.append((_require(edge, 'from', str, edge_path),
                      _require(edge, 'to', str, edge_path),
                      gluing))
    try:
        molecule = MarkedMolecule(atoms, edges, name=data.get('name'),
                                  provenance=data.get('provenance'))
        derived = {family.atom_ids: family.n for family in molecule.families()}
    except (MoleculeStructureError, AtomLabelError) as e:
        raise MoleculeSchemaError(path, str(e))

    if 'families' in data:
        stored = {}
        for i, family in enumerate(_require(data, 'families', list, path)):
            family_path = "{}.families[{}]".format(path, i)
            atom_ids = tuple(sorted(_require(family, 'atom_ids', list, family_path)))
            n = _require(family, 'n', int, family_path)
            if atom_ids not in derived:
                raise MoleculeSchemaError(family_path + ".atom_ids",
                                          "{} is not a family".format(list(atom_ids)))
            if derived[atom_ids] != n:
                raise MoleculeSchemaError(family_path + ".n", "stored n={}, derived n={}".format(
                    n, derived[atom_ids]))
            stored[atom_ids] = n
        if set(stored) != set(derived):
            raise MoleculeSchemaError(path + ".families", "expected families {}, got {}".format(
                sorted(derived), sorted(stored)))
    return molecule


def molecule_to_dict(molecule):
    data = {}
    if molecule.name is not None:
        data['name'] = molecule.name
    if molecule.provenance is not None:
        data['provenance'] = molecule.provenance
    data['atoms'] = [{'id': atom.atom_id, 'label': atom.label} for atom in molecule.atoms]
    data['edges'] = [{'from': edge.source, 'to': edge.target, 'matrix': edge.gluing.to_list()}
                     for edge in molecule.edges]
    data['families'] = [{'atom_ids': list(family.atom_ids), 'n': family.n}
                        for family in molecule.families()]
    return data


def load_molecule(text):
    """
    Parses a molecule file.

    Raises:
        MoleculeSchemaError: If the text is not valid JSON or not a valid molecule
    """
    try:
        data = json.loads(text)
    except ValueError as e:
        raise MoleculeSchemaError('$', "invalid JSON: {}".format(e))
    return molecule_from_dict(data)


def store_molecule(molecule):
    """Molecule file contents; the marks are left out since they follow from the matrices."""
    return json.dumps(molecule_to_dict(molecule), indent=2, ensure_ascii=False) + "\n"
