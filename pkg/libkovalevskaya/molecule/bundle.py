import collections
import os

from libkovalevskaya.molecule.admissible import DATA_DIR
from libkovalevskaya.molecule.io import load_molecule, MoleculeSchemaError


class Bundle:
    """
    Molecule classes shipped with the library. Choose amongst:
        - ``Bundle.SOKOLOV``: classes A-I of the Sokolov case
        - ``Bundle.KOVALEVSKAYA_E3``: classes A-J of the Kovalevskaya case on e(3)
        - ``Bundle.KOVALEVSKAYA_SO31``: the 25 classes of the Kovalevskaya case on so(3, 1)
          for ``b != 0``
    """

    SOKOLOV = "sokolov"
    KOVALEVSKAYA_E3 = "kovalevskaya_e3"
    KOVALEVSKAYA_SO31 = "kovalevskaya_so31"


BUNDLES = (Bundle.SOKOLOV, Bundle.KOVALEVSKAYA_E3, Bundle.KOVALEVSKAYA_SO31)


def bundle_path(bundle, name=None):
    if bundle not in BUNDLES:
        raise ValueError("Unknown bundle {!r}, choose one of {}".format(bundle, BUNDLES))
    directory = os.path.join(DATA_DIR, bundle)
    return directory if name is None else os.path.join(directory, name + '.json')


def bundle_names(bundle):
    """Class names of a bundle in sorted order."""
    return sorted(os.path.splitext(f)[0] for f in os.listdir(bundle_path(bundle))
                  if f.endswith('.json'))


def read_bundled(bundle, name):
    """Text of a bundled molecule file."""
    path = bundle_path(bundle, name)
    if not os.path.exists(path):
        raise KeyError("Bundle {} has no class {!r}".format(bundle, name))
    with open(path, encoding='utf-8') as f:
        return f.read()


def load_bundle(bundle):
    """
    Loads all molecules of a bundle.

    Returns:
        An ``OrderedDict`` from class name to ``MarkedMolecule``

    Raises:
        MoleculeSchemaError: If a bundled file is invalid; the path names the file
    """
    molecules = collections.OrderedDict()
    for name in bundle_names(bundle):
        try:
            molecules[name] = load_molecule(read_bundled(bundle, name))
        except MoleculeSchemaError as e:
            raise MoleculeSchemaError("{}/{}.json:{}".format(bundle, name, e.path), e.message)
    return molecules
