from libkovalevskaya.molecule.atom import AtomLabel, AtomLabelError, BASE_ATOMS, BASE_VALENCE
from libkovalevskaya.molecule.atom import parse_atom_label, atom_label, valence, is_saddle
from libkovalevskaya.molecule.gluing import GluingMatrix, GluingMatrixError, marks_from_gluing
from libkovalevskaya.molecule.gluing import admissible_change, gluing_from_cycles, format_r
from libkovalevskaya.molecule.marked_molecule import MarkedMolecule, MoleculeAtom, MoleculeEdge
from libkovalevskaya.molecule.marked_molecule import Family, MoleculeStructureError
from libkovalevskaya.molecule.marked_molecule import FamilyMarkError, n_mark, molecule_equiv
from libkovalevskaya.molecule.perturbation import perturb_c2, PerturbationError
from libkovalevskaya.molecule.io import load_molecule, store_molecule, MoleculeSchemaError
from libkovalevskaya.molecule.admissible import admissible_coordinates, gluing_between, Side
from libkovalevskaya.molecule.admissible import AdmissibleBasis, AdmissibleCoordinates
from libkovalevskaya.molecule.bundle import Bundle, BUNDLES, load_bundle, bundle_names
from libkovalevskaya.molecule.bundle import read_bundled

__all__ = [
    'AtomLabel',
    'AtomLabelError',
    'BASE_ATOMS',
    'BASE_VALENCE',
    'parse_atom_label',
    'atom_label',
    'valence',
    'is_saddle',
    'GluingMatrix',
    'GluingMatrixError',
    'marks_from_gluing',
    'admissible_change',
    'gluing_from_cycles',
    'format_r',
    'MarkedMolecule',
    'MoleculeAtom',
    'MoleculeEdge',
    'Family',
    'MoleculeStructureError',
    'FamilyMarkError',
    'n_mark',
    'molecule_equiv',
    'perturb_c2',
    'PerturbationError',
    'load_molecule',
    'store_molecule',
    'MoleculeSchemaError',
    'admissible_coordinates',
    'gluing_between',
    'Side',
    'AdmissibleBasis',
    'AdmissibleCoordinates',
    'Bundle',
    'BUNDLES',
    'load_bundle',
    'bundle_names',
    'read_bundled',
]
