import numpy as np

from libkovalevskaya import OrbitSpec, PencilSpec, diagram_figure, molecule_figure
from libkovalevskaya.bifurcation import Arc, BifDiagram, Vertex, Window
from libkovalevskaya.molecule import Bundle, load_bundle


def test_diagram_figure_clamps_k():
    diagram = BifDiagram(
        OrbitSpec(-2.0, 0.0), PencilSpec(), Window(-1.0, 2.0, -0.5, 2.0),
        [Arc('a0', np.array([[0.0, -0.1], [1.0, 1.0]]), '2A', 2, 0, None, 'v0')],
        [Vertex('v0', (1.0, 1.0), 'w2', 0, 2)])
    fig = diagram_figure(diagram)
    assert len(fig.data) == 2
    assert fig.data[0].name == 'a0 2A'
    assert min(fig.data[0].y) == 0.0
    assert list(fig.data[1].text) == ['w2']
    assert fig.layout.yaxis.range == (0.0, 2.0)


def test_molecule_figure_marks_families():
    molecule = load_bundle(Bundle.KOVALEVSKAYA_SO31)['F2']
    fig = molecule_figure(molecule)
    edges, marks, atoms = fig.data
    assert len(marks.text) == len(molecule.edges)
    assert 'r=inf, e=+1' in marks.text
    assert 'B (n=-1)' in atoms.text
    assert len(atoms.x) == len(molecule.atoms)
