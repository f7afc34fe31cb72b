import collections

import networkx as nx
import numpy as np

from libkovalevskaya.bifurcation.census import census_signature


class Window(collections.namedtuple('Window', ['h_min', 'h_max', 'k_min', 'k_max'])):
    """Rectangle of the ``(h, k)`` plane scanned by ``scan_diagram``."""
    __slots__ = ()

    @property
    def h_span(self):
        return self.h_max - self.h_min

    @property
    def k_span(self):
        return self.k_max - self.k_min

    def contains(self, h, k):
        return self.h_min <= h <= self.h_max and self.k_min <= k <= self.k_max


class Arc(collections.namedtuple(
        'Arc', ['arc_id', 'points', 'atom', 'count_above', 'count_below', 'start', 'end'])):
    """
    A smooth piece of the bifurcation diagram.

    Args:
        arc_id: Identifier such as ``a3``
        points: Polyline of shape [N, 2] in ``(h, k)``, ordered by ``h``
        atom: Atom label, ``None`` until resolved
        count_above: Number of tori just above the arc
        count_below: Number of tori just below the arc
        start: Vertex id at the left end, ``None`` on the window boundary
        end: Vertex id at the right end, ``None`` on the window boundary
    """
    __slots__ = ()

    @property
    def tag(self):
        return self.atom, self.count_above, self.count_below

    @property
    def midpoint(self):
        return self.points[len(self.points) // 2]

    def __repr__(self):
        return "Arc({}, atom={}, above={}, below={}, {} -> {})".format(
            self.arc_id, self.atom, self.count_above, self.count_below, self.start, self.end)


class Vertex(collections.namedtuple(
        'Vertex', ['vertex_id', 'image', 'name', 'rank', 'count'])):
    """
    A singular point of the diagram. Rank-zero vertices are equilibrium images and carry their
    census name (``w1`` to ``w10``, ``old`` or ``None`` off the axis) and number of preimages.
    """
    __slots__ = ()

    @property
    def label(self):
        if self.name is not None:
            return self.name
        return 'rank{}'.format(self.rank)


class BifDiagram:
    """
    Reconstructed bifurcation diagram of an orbit: arcs tagged with atoms and torus counts,
    and the vertices where they meet.

    Args:
        orbit: ``OrbitSpec``
        spec: ``PencilSpec``
        window: ``Window`` that was scanned
        arcs: List of ``Arc``
        vertices: List of ``Vertex``
        census: Equilibrium census of the orbit
    """

    def __init__(self, orbit, spec, window, arcs, vertices, census=()):
        self.orbit = orbit
        self.spec = spec
        self.window = window
        self.arcs = list(arcs)
        self.vertices = list(vertices)
        self.census = list(census)

    def arc(self, arc_id):
        for arc in self.arcs:
            if arc.arc_id == arc_id:
                return arc
        raise KeyError("No arc {}".format(arc_id))

    def vertex(self, key):
        """Looks a vertex up by id or by name."""
        for vertex in self.vertices:
            if key in (vertex.vertex_id, vertex.name):
                return vertex
        raise KeyError("No vertex {}".format(key))

    def incident_arcs(self, vertex_id):
        return [arc for arc in self.arcs if vertex_id in (arc.start, arc.end)]

    def replace_arc(self, arc):
        self.arcs = [arc if a.arc_id == arc.arc_id else a for a in self.arcs]

    def adjacency_graph(self):
        """
        Multigraph with one node per vertex, one node per arc end on the window boundary and one
        edge per arc, labelled with the arc tag.
        """
        graph = nx.MultiGraph()
        for vertex in self.vertices:
            graph.add_node(vertex.vertex_id, label=vertex.label)
        for arc in self.arcs:
            ends = []
            for side, end in (('start', arc.start), ('end', arc.end)):
                if end is None:
                    end = '{}-{}'.format(arc.arc_id, side)
                    graph.add_node(end, label='boundary')
                ends.append(end)
            graph.add_edge(*ends, label='{}/{}/{}'.format(*arc.tag))
        return graph

    @property
    def fingerprint(self):
        """
        Structural signature of the diagram: the sorted multiset of arc tags, the census
        signature and a Weisfeiler-Lehman hash of the vertex adjacency multigraph.
        """
        graph = nx.Graph()
        multigraph = self.adjacency_graph()
        graph.add_nodes_from(multigraph.nodes(data=True))
        labels = collections.defaultdict(list)
        for u, v, data in multigraph.edges(data=True):
            labels[frozenset((u, v))].append(data['label'])
        for key, edge_labels in labels.items():
            ends = tuple(key) if len(key) == 2 else tuple(key) * 2
            graph.add_edge(ends[0], ends[1], label='+'.join(sorted(edge_labels)))
        wl_hash = nx.weisfeiler_lehman_graph_hash(graph, edge_attr='label', node_attr='label')
        arc_tags = tuple(sorted(tuple(str(t) for t in arc.tag) for arc in self.arcs))
        return arc_tags, census_signature(self.census), wl_hash

    def to_rows(self):
        """Rows of the diagram CSV: one per arc polyline point and one per vertex."""
        rows = []
        for arc in self.arcs:
            for h, k in arc.points:
                rows.append(dict(kind='arc', arc_or_vertex_id=arc.arc_id, h=h, k=k,
                                 atom=arc.atom, count_above=arc.count_above,
                                 count_below=arc.count_below))
        for vertex in self.vertices:
            rows.append(dict(kind='vertex', arc_or_vertex_id=vertex.name or vertex.vertex_id,
                             h=vertex.image[0], k=vertex.image[1], atom='', count_above='',
                             count_below=''))
        return rows

    def get_config(self):
        return dict(orbit=self.orbit.get_config(), spec=self.spec.get_config(),
                    window=dict(self.window._asdict()))

    def __repr__(self):
        return "BifDiagram(a={}, b={}, arcs={}, vertices={})".format(
            self.orbit.a, self.orbit.b, len(self.arcs), len(self.vertices))


def arcs_min_k(diagram):
    if not diagram.arcs:
        return np.inf
    return float(min(np.min(arc.points[:, 1]) for arc in diagram.arcs))
