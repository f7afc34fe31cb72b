import itertools
import json
import math
from fractions import Fraction

import numpy as np
import pytest

from libkovalevskaya.molecule import BUNDLES, Bundle, GluingMatrix, GluingMatrixError, \
    MarkedMolecule, MoleculeSchemaError, MoleculeStructureError, PerturbationError, \
    admissible_change, admissible_coordinates, bundle_names, gluing_between, \
    gluing_from_cycles, load_bundle, load_molecule, marks_from_gluing, molecule_equiv, n_mark, \
    perturb_c2, read_bundled, store_molecule, valence, Side
from libkovalevskaya.molecule.io import molecule_to_dict

M0 = [[0, 1], [1, 0]]
M_HALF = [[1, 2], [1, 1]]


@pytest.mark.parametrize('rows, marks', [
    ([[0, 1], [1, 0]], (Fraction(0), 1)),
    ([[0, -1], [-1, 0]], (Fraction(0), -1)),
    ([[1, 2], [1, 1]], (Fraction(1, 2), 1)),
    ([[1, 3], [1, 2]], (Fraction(1, 3), 1)),
    ([[-1, -2], [0, 1]], (Fraction(1, 2), -1)),
    ([[2, 3], [1, 1]], (Fraction(2, 3), 1)),
    ([[1, 0], [0, -1]], (math.inf, 1)),
    ([[-1, 0], [0, 1]], (math.inf, -1)),
])
def test_marks_from_gluing(rows, marks):
    assert marks_from_gluing(rows) == marks
    assert GluingMatrix(rows).marks == marks


ORIENTATION_REVERSING = [
    [[alpha, beta], [gamma, delta]]
    for alpha, beta, gamma, delta in itertools.product(range(-3, 4), repeat=4)
    if alpha * delta - beta * gamma == -1][:50]


def _marks_by_hand(alpha, beta):
    if beta == 0:
        return math.inf, 1 if alpha > 0 else -1
    sign = 1 if beta > 0 else -1
    return Fraction((alpha * sign) % abs(beta), abs(beta)), sign


@pytest.mark.parametrize('rows', ORIENTATION_REVERSING)
def test_marks_of_enumerated_gluings(rows):
    (alpha, beta), _ = rows
    assert marks_from_gluing(rows) == _marks_by_hand(alpha, beta)


def test_enumerated_gluings_are_distinct():
    assert len({str(rows) for rows in ORIENTATION_REVERSING}) == 50


@pytest.mark.parametrize('rows', [
    [[1, 0], [0, 1]],
    [[2, 0], [0, 1]],
    [[1.0, 0], [0, -1]],
    [[True, 0], [0, -1]],
    [[1, 0, 0], [0, -1]],
    'matrix',
])
def test_invalid_gluing_matrices(rows):
    with pytest.raises(GluingMatrixError):
        GluingMatrix(rows)


def test_marks_are_invariant_under_admissible_changes():
    entries = range(-3, 4)
    num_checked = 0
    for alpha, beta, gamma, delta in itertools.product(entries, repeat=4):
        if alpha * delta - beta * gamma != -1:
            continue
        matrix = GluingMatrix([[alpha, beta], [gamma, delta]])
        r, epsilon = matrix.marks
        assert epsilon in (-1, 1)
        assert r == math.inf or 0 <= r < 1
        for k in range(-5, 6):
            assert admissible_change(matrix, k).marks == (r, epsilon)
        num_checked += 1
    assert num_checked > 0


def test_admissible_change_multiplies_on_the_right():
    assert admissible_change(M_HALF, 2) == GluingMatrix([[5, 2], [3, 1]])


def test_gluing_from_cycles():
    first = (('beta4', 1), ('gamma9', 1))
    second = (('gamma9', 1), ('beta4', -1))
    np.testing.assert_array_equal(gluing_from_cycles(first, second), [[0, 1], [-1, 0]])
    with pytest.raises(ValueError):
        gluing_from_cycles(first, (('gamma9', 1), ('delta3', 1)))


def test_admissible_coordinates():
    coordinates = admissible_coordinates()
    assert 'beta4' in coordinates
    assert coordinates['alpha3'].upper is None
    assert coordinates['beta4'].upper.side == Side.UPPER
    assert coordinates['beta4'].upper.families == (7,)


def test_gluing_between_admissible_bases():
    gluing = gluing_between('beta4', 'gamma9')
    assert gluing == GluingMatrix(M0)
    assert gluing.marks == (Fraction(0), 1)


@pytest.mark.parametrize('lower_arc, upper_arc', [
    ('alpha3', 'beta4'),
    ('beta4', 'gamma8'),
    ('xi6', 'alpha3'),
])
def test_gluing_between_unrelated_arcs(lower_arc, upper_arc):
    with pytest.raises(ValueError):
        gluing_between(lower_arc, upper_arc)
    with pytest.raises(KeyError):
        gluing_between('beta4', 'omega1')


def _two_saddles(matrix):
    return MarkedMolecule(
        [('a1', 'A'), ('b1', 'B'), ('b2', 'B'), ('a2', 'A')],
        [('a1', 'b1', M0), ('b1', 'b2', matrix), ('b1', 'b2', matrix), ('b2', 'a2', M0)])


def test_n_mark_counts_inner_edges_both_ways():
    molecule = _two_saddles(M_HALF)
    assert n_mark(molecule, {'b1'}) == 0
    assert n_mark(molecule, {'b2'}) == -2
    assert n_mark(molecule, {'b1', 'b2'}) == -2
    assert [(f.atom_ids, f.n) for f in molecule.families()] == [(('b1',), 0), (('b2',), -2)]


def test_infinite_edges_join_families():
    molecule = load_bundle(Bundle.KOVALEVSKAYA_SO31)['D1']
    assert [(f.atom_ids, f.n) for f in molecule.families()] == [(('b1', 'b2'), 0)]
    assert molecule.family_of()['a1'] is None


@pytest.mark.parametrize('bundle, name, families', [
    (Bundle.SOKOLOV, 'D', [(('c',), -1)]),
    (Bundle.SOKOLOV, 'G', [(('b',), 0), (('c',), 0)]),
    (Bundle.KOVALEVSKAYA_SO31, 'B2', [(('b',), -1)]),
    (Bundle.KOVALEVSKAYA_SO31, 'F2', [(('c_1', 'c_2'), -1)]),
    (Bundle.KOVALEVSKAYA_SO31, 'A1', []),
])
def test_bundled_families(bundle, name, families):
    molecule = load_bundle(bundle)[name]
    assert [(f.atom_ids, f.n) for f in molecule.families()] == families


def test_molecule_structure_is_validated():
    with pytest.raises(MoleculeStructureError):
        MarkedMolecule([('a1', 'A'), ('a1', 'A')], [('a1', 'a1', M0)])
    with pytest.raises(MoleculeStructureError):
        MarkedMolecule([('a1', 'A'), ('a2', 'A')], [('a1', 'a3', M0)])
    with pytest.raises(MoleculeStructureError):
        MarkedMolecule([('a1', 'A'), ('b', 'B')], [('a1', 'b', M0)])


def test_valence_and_boundary_tori():
    assert valence('2C2') == 8
    molecule = load_bundle(Bundle.SOKOLOV)['G']
    assert molecule.num_boundary_tori == 5
    graph = molecule.to_graph()
    assert graph.nodes['c']['label'] == 'C2'
    assert graph.nodes['a1']['n'] is None
    assert graph.number_of_edges() == 6


def _relabelled(molecule, prefix):
    rename = {atom.atom_id: prefix + atom.atom_id for atom in molecule.atoms}
    return MarkedMolecule(
        [(rename[atom.atom_id], atom.label) for atom in reversed(molecule.atoms)],
        [(rename[e.source], rename[e.target], e.gluing) for e in reversed(molecule.edges)])


@pytest.mark.parametrize('bundle', BUNDLES)
def test_equivalence_ignores_atom_ids_and_order(bundle):
    for molecule in load_bundle(bundle).values():
        assert molecule_equiv(molecule, _relabelled(molecule, 'x_'))


def test_equivalence_sees_marks():
    assert not molecule_equiv(_two_saddles(M_HALF), _two_saddles(M0))
    sokolov = load_bundle(Bundle.SOKOLOV)
    assert not molecule_equiv(sokolov['A'], sokolov['B'])
    assert not molecule_equiv(sokolov['D'], sokolov['E'])


@pytest.mark.parametrize('bundle, size', [
    (Bundle.SOKOLOV, 9),
    (Bundle.KOVALEVSKAYA_E3, 10),
    (Bundle.KOVALEVSKAYA_SO31, 25),
])
def test_bundled_classes_are_pairwise_distinct(bundle, size):
    molecules = load_bundle(bundle)
    assert len(molecules) == size
    for (first, m1), (second, m2) in itertools.combinations(molecules.items(), 2):
        assert not molecule_equiv(m1, m2), (first, second)


def test_so31_classes_shared_with_sokolov_case():
    so31 = load_bundle(Bundle.KOVALEVSKAYA_SO31)
    sokolov = load_bundle(Bundle.SOKOLOV)
    for first, second in (('E1', 'A'), ('E2', 'B'), ('F1', 'C')):
        assert molecule_equiv(so31[first], sokolov[second])


@pytest.mark.parametrize('so31_name, e3_name', [
    ('A1', 'A'), ('A2', 'B'), ('A3', 'C'), ('A4', 'J'), ('B1', 'D'),
    ('B2', 'E'), ('B3', 'H'), ('C1', 'F'), ('C2', 'G'), ('D1', 'I'),
])
def test_so31_classes_shared_with_e3_case(so31_name, e3_name):
    so31 = load_bundle(Bundle.KOVALEVSKAYA_SO31)
    e3 = load_bundle(Bundle.KOVALEVSKAYA_E3)
    assert 'e(3) class {};'.format(e3_name) in read_bundled(Bundle.KOVALEVSKAYA_SO31, so31_name)
    assert molecule_equiv(so31[so31_name], e3[e3_name])
    others = [name for name in e3 if name != e3_name]
    assert not any(molecule_equiv(so31[so31_name], e3[name]) for name in others)


def _structure(molecule):
    data = molecule_to_dict(molecule)
    return data['atoms'], data['edges'], data['families']


@pytest.mark.parametrize('source, target', [
    ('E', 'B4'), ('F', 'B5'), ('I', 'C3'), ('H', 'C4'), ('D', 'F2'), ('G', 'G'),
])
def test_perturbed_sokolov_classes(source, target):
    perturbed = perturb_c2(load_bundle(Bundle.SOKOLOV)[source], 'c', name=target)
    expected = load_bundle(Bundle.KOVALEVSKAYA_SO31)[target]
    assert perturbed.name == target
    assert _structure(perturbed) == _structure(expected)
    assert molecule_equiv(perturbed, expected)


def test_perturbation_adds_an_infinite_edge():
    molecule = load_bundle(Bundle.SOKOLOV)['D']
    perturbed = perturb_c2(molecule, 'c')
    assert len(perturbed.atoms) == len(molecule.atoms) + 1
    assert perturbed.edges[-1].source == 'c_1'
    assert perturbed.edges[-1].gluing.marks == (math.inf, 1)
    assert perturbed.atom('c_1').label == perturbed.atom('c_2').label == 'B'
    assert perturbed.provenance == molecule.provenance


def test_perturbing_two_saddles_commutes():
    molecule = MarkedMolecule(
        [('a1', 'A'), ('a2', 'A'), ('c1', 'C2'), ('c2', 'C2'), ('a3', 'A'), ('a4', 'A')],
        [('a1', 'c1', M0), ('a2', 'c1', M0), ('c1', 'c2', M0), ('c1', 'c2', M0),
         ('c2', 'a3', M0), ('c2', 'a4', M0)])
    first = perturb_c2(perturb_c2(molecule, 'c1'), 'c2')
    second = perturb_c2(perturb_c2(molecule, 'c2'), 'c1')
    assert len(first.atoms) == 8
    assert [f.atom_ids for f in first.families()] == [('c1_1', 'c1_2'), ('c2_1', 'c2_2')]
    assert molecule_equiv(first, second)


@pytest.mark.parametrize('target', ['a1', 'c_1', 'missing'])
def test_perturbation_needs_a_c2_atom(target):
    perturbed = perturb_c2(load_bundle(Bundle.SOKOLOV)['D'], 'c')
    with pytest.raises(PerturbationError):
        perturb_c2(perturbed, target)


@pytest.mark.parametrize('bundle', BUNDLES)
def test_bundled_files_round_trip(bundle):
    for name in bundle_names(bundle):
        text = read_bundled(bundle, name)
        molecule = load_molecule(text)
        assert molecule_to_dict(molecule) == json.loads(text)
        stored = store_molecule(molecule)
        assert store_molecule(load_molecule(stored)) == stored


def _document(**changes):
    data = {
        'atoms': [{'id': 'a1', 'label': 'A'}, {'id': 'a2', 'label': 'A'}],
        'edges': [{'from': 'a1', 'to': 'a2', 'matrix': [[1, 2], [1, 1]]}],
        'families': [],
    }
    data.update(changes)
    return json.dumps(data)


@pytest.mark.parametrize('text, path', [
    (_document(edges=[{'from': 'a1', 'to': 'a2', 'matrix': [[1, 0], [0, 1]]}]),
     '$.edges[0].matrix'),
    (_document(atoms=[{'id': 'a1', 'label': 7}, {'id': 'a2', 'label': 'A'}]),
     '$.atoms[0].label'),
    (_document(edges=[{'from': 'a1', 'matrix': [[1, 2], [1, 1]]}]), '$.edges[0]'),
    (_document(atoms=[{'id': 'a1', 'label': 'A'}, {'id': 'a2', 'label': 'Q'}]), '$'),
    (_document(families=[{'atom_ids': ['a1'], 'n': 0}]), '$.families[0].atom_ids'),
    ('{"atoms": []', '$'),
    ('[]', '$'),
])
def test_schema_errors_name_the_offending_value(text, path):
    with pytest.raises(MoleculeSchemaError) as info:
        load_molecule(text)
    assert info.value.path == path


def test_stored_n_must_match():
    text = read_bundled(Bundle.SOKOLOV, 'D').replace('"n": -1', '"n": 3')
    with pytest.raises(MoleculeSchemaError) as info:
        load_molecule(text)
    assert info.value.path == '$.families[0].n'


def test_bundle_lookup():
    assert bundle_names(Bundle.SOKOLOV) == list('ABCDEFGHI')
    with pytest.raises(KeyError):
        read_bundled(Bundle.SOKOLOV, 'Z')
    with pytest.raises(ValueError):
        bundle_names('unknown')
