import collections

import networkx as nx
from networkx.algorithms.isomorphism import categorical_node_match, \
    categorical_multiedge_match

from libkovalevskaya.molecule.atom import parse_atom_label, valence, is_saddle, AtomLabel
from libkovalevskaya.molecule.gluing import GluingMatrix, format_r

MoleculeAtom = collections.namedtuple('MoleculeAtom', ['atom_id', 'label'])
MoleculeEdge = collections.namedtuple('MoleculeEdge', ['source', 'target', 'gluing'])
Family = collections.namedtuple('Family', ['atom_ids', 'n'])


class MoleculeStructureError(ValueError):
    pass


class FamilyMarkError(MoleculeStructureError):
    pass


class MarkedMolecule:
    """
    Fomenko-Zieschang invariant of an isoenergy surface: atoms joined by edges that carry gluing
    matrices. Edges are directed by increasing ``K``. The marks ``r`` and ``epsilon`` are derived
    from the gluing matrices and the mark ``n`` from the families, so they are never stored.

    Args:
        atoms: Sequence of ``MoleculeAtom`` or ``(atom_id, label)`` pairs
        edges: Sequence of ``MoleculeEdge`` or ``(source, target, matrix)`` triples
        name: Optional name of the class, e.g. ``B4``
        provenance: Optional note on where the molecule comes from

    Raises:
        MoleculeStructureError: If atom ids repeat, an edge refers to an unknown atom or an
            atom has a different number of edges than its valence
    """

    def __init__(self, atoms, edges, name=None, provenance=None):
        self.atoms = tuple(MoleculeAtom(atom_id, label) for atom_id, label in atoms)
        self.edges = tuple(
            MoleculeEdge(source, target, gluing if isinstance(gluing, GluingMatrix)
                         else GluingMatrix(gluing))
            for source, target, gluing in edges)
        self.name = name
        self.provenance = provenance
        self._validate()

    def _validate(self):
        ids = [atom.atom_id for atom in self.atoms]
        if len(set(ids)) != len(ids):
            raise MoleculeStructureError("Atom ids are not unique: {}".format(ids))
        for atom in self.atoms:
            parse_atom_label(atom.label)
        degree = collections.Counter()
        for index, edge in enumerate(self.edges):
            for end in (edge.source, edge.target):
                if end not in ids:
                    raise MoleculeStructureError(
                        "Edge {} refers to unknown atom {!r}".format(index, end))
                degree[end] += 1
        for atom in self.atoms:
            if degree[atom.atom_id] != valence(atom.label):
                raise MoleculeStructureError(
                    "Atom {} ({}) has {} edges, its valence is {}".format(
                        atom.atom_id, atom.label, degree[atom.atom_id], valence(atom.label)))

    def atom(self, atom_id):
        for atom in self.atoms:
            if atom.atom_id == atom_id:
                return atom
        raise KeyError("No atom {!r} in {}".format(atom_id, self))

    @property
    def num_boundary_tori(self):
        """Number of edges ending in an atom ``A``."""
        return sum(1 for edge in self.edges if any(
            parse_atom_label(self.atom(end).label)[1] == AtomLabel.A
            for end in (edge.source, edge.target)))

    def marks(self):
        """Marks ``(r, epsilon)`` of every edge, in edge order."""
        return [edge.gluing.marks for edge in self.edges]

    def families(self):
        """
        Families of the molecule: connected pieces of the graph cut along all edges with finite
        ``r`` that contain no atom ``A``, each with its mark ``n``.

        Returns:
            A list of ``Family`` sorted by atom ids

        Raises:
            FamilyMarkError: If an edge inside a family has ``alpha = 0``
        """
        infinite = nx.Graph()
        infinite.add_nodes_from(atom.atom_id for atom in self.atoms)
        infinite.add_edges_from(
            (edge.source, edge.target) for edge in self.edges if edge.gluing.beta == 0)
        families = []
        for component in nx.connected_components(infinite):
            if not all(is_saddle(self.atom(atom_id).label) for atom_id in component):
                continue
            families.append(Family(tuple(sorted(component)), n_mark(self, component)))
        return sorted(families)

    def family_of(self):
        """Map from atom id to the ``n`` mark of its family, ``None`` outside families."""
        marks = {atom.atom_id: None for atom in self.atoms}
        for family in self.families():
            for atom_id in family.atom_ids:
                marks[atom_id] = family.n
        return marks

    def to_graph(self):
        """
        Directed multigraph of the molecule. Nodes carry ``label`` and ``n``, edges carry the
        marks ``r`` (as text) and ``epsilon``.
        """
        graph = nx.MultiDiGraph(name=self.name)
        for atom_id, n in self.family_of().items():
            graph.add_node(atom_id, label=self.atom(atom_id).label, n=n)
        for edge in self.edges:
            r, epsilon = edge.gluing.marks
            graph.add_edge(edge.source, edge.target, r=format_r(r), epsilon=epsilon)
        return graph

    def __repr__(self):
        return "MarkedMolecule({}: {} atoms, {} edges)".format(
            self.name or "unnamed", len(self.atoms), len(self.edges))


def n_mark(molecule, atom_ids):
    """
    Mark ``n`` of a family, the sum of ``floor(alpha / beta)`` over the edges leaving it,
    ``floor(-delta / beta)`` over the edges entering it and ``-gamma / alpha`` over the edges
    with ``r = inf`` inside it. An edge with finite ``r`` between two atoms of the family counts
    as leaving and as entering.

    Raises:
        FamilyMarkError: If an edge inside the family has ``alpha = 0``
    """
    atom_ids = set(atom_ids)
    n = 0
    for edge in molecule.edges:
        m = edge.gluing
        leaves, enters = edge.source in atom_ids, edge.target in atom_ids
        if m.beta == 0:
            if not (leaves and enters):
                continue
            if m.alpha == 0:
                raise FamilyMarkError("Edge {} -> {} inside a family has alpha = 0".format(
                    edge.source, edge.target))
            n += -m.gamma // m.alpha
            continue
        if leaves:
            n += m.alpha // m.beta
        if enters:
            n += -m.delta // m.beta
    return n


def molecule_equiv(first, second):
    """
    Whether two molecules are the same invariant: an isomorphism of directed multigraphs that
    matches atom labels, family marks ``n`` and the marks ``(r, epsilon)`` of the edges.
    """
    if len(first.atoms) != len(second.atoms) or len(first.edges) != len(second.edges):
        return False
    return nx.is_isomorphic(
        first.to_graph(), second.to_graph(),
        node_match=categorical_node_match(['label', 'n'], [None, None]),
        edge_match=categorical_multiedge_match(['r', 'epsilon'], [None, None]))
