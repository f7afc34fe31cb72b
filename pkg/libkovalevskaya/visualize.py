import functools
import itertools
import operator

import colorlover as cl
import networkx as nx
import numpy as np
import plotly.graph_objects as go

from libkovalevskaya.molecule.atom import is_saddle
from libkovalevskaya.molecule.gluing import format_r


def _blank_figure(transparent=False, **axes):
    fig = go.Figure(
        layout=go.Layout(
            plot_bgcolor='rgb(255,255,255,0)',
            legend=dict(font=dict(size=14)),
            **axes
        ))
    if transparent:
        fig.layout.paper_bgcolor = 'rgb(255,255,255,0)'
    return fig


def diagram_figure(diagram, show_legend=True, show_vertex_names=True, transparent=False,
                   vertex_size=10):
    """
    Plot a bifurcation diagram: one polyline per arc, coloured and named by its atom, and the
    vertices as markers. The ``k`` axis is clamped to ``k >= 0``.

    Args:
        diagram: A ``BifDiagram``
        show_legend: Whether to show the arcs on the right
        show_vertex_names: Whether to print vertex names next to the markers
        transparent: Whether the background is transparent
        vertex_size: Size of the vertex markers

    Returns:
        A ``plotly.graph_objects.Figure`` instance. Use ``.show()`` to render it or
        ``write_svg`` to save it.
    """
    window = diagram.window
    fig = _blank_figure(
        transparent,
        xaxis=go.layout.XAxis(title='h', range=[window.h_min, window.h_max]),
        yaxis=go.layout.YAxis(title='k', range=[max(window.k_min, 0.0), window.k_max]),
        title='a = {:g}, b = {:g}'.format(diagram.orbit.a, diagram.orbit.b))

    atoms = sorted({str(arc.atom) for arc in diagram.arcs})
    palette = dict(zip(atoms, itertools.cycle(cl.scales['12']['qual']['Set3'])))
    for arc in sorted(diagram.arcs, key=lambda a: a.arc_id):
        fig.add_trace(
            go.Scatter(
                mode='lines',
                x=arc.points[:, 0],
                y=np.maximum(arc.points[:, 1], 0.0),
                line=dict(color=palette[str(arc.atom)], width=2),
                hovertext='{} {} ({}/{})'.format(
                    arc.arc_id, arc.atom, arc.count_above, arc.count_below),
                hoverinfo='text',
                name='{} {}'.format(arc.arc_id, arc.atom),
                showlegend=show_legend
            )
        )

    if diagram.vertices:
        h, k = zip(*(vertex.image for vertex in diagram.vertices))
        fig.add_trace(
            go.Scatter(
                mode='markers+text' if show_vertex_names else 'markers',
                x=h,
                y=np.maximum(k, 0.0),
                text=[vertex.label for vertex in diagram.vertices],
                textposition='top center',
                marker=dict(color='black', size=vertex_size,
                            symbol=['circle' if v.rank == 0 else 'circle-open'
                                    for v in diagram.vertices]),
                showlegend=False
            )
        )
    return fig


def _molecule_layout(molecule):
    """Atoms on levels of increasing ``K``, spread evenly within each level."""
    graph = nx.DiGraph()
    graph.add_nodes_from(atom.atom_id for atom in molecule.atoms)
    graph.add_edges_from((edge.source, edge.target) for edge in molecule.edges)
    positions = {}
    for level, generation in enumerate(nx.topological_generations(graph)):
        generation = sorted(generation)
        xs = np.linspace(-len(generation) / 2 + 0.5, len(generation) / 2 - 0.5,
                         num=len(generation)) if len(generation) != 1 else [0.0]
        for atom_id, x in zip(generation, xs):
            positions[atom_id] = (float(x), float(level))
    return positions


def molecule_figure(molecule, show_marks=True, transparent=False, node_size=30):
    """
    Plot a marked molecule with ``K`` increasing upwards. Edges are labelled with their marks
    ``r, epsilon``; atoms of a family are coloured alike and carry the family mark ``n``.

    Args:
        molecule: A ``MarkedMolecule``
        show_marks: Whether to print the marks on the edges
        transparent: Whether the background is transparent
        node_size: Size of the atoms drawn in the graph

    Returns:
        A ``plotly.graph_objects.Figure`` instance
    """
    positions = _molecule_layout(molecule)
    fig = _blank_figure(
        transparent,
        xaxis=go.layout.XAxis(ticks="", tickvals=[], zeroline=False),
        yaxis=go.layout.YAxis(ticks="", tickvals=[], zeroline=False),
        title=molecule.name or '')

    if molecule.edges:
        x_e = [[positions[e.source][0], positions[e.target][0]] for e in molecule.edges]
        y_e = [[positions[e.source][1], positions[e.target][1]] for e in molecule.edges]
        fig.add_trace(
            go.Scatter(
                mode='lines',
                x=functools.reduce(operator.concat, [xi + [None] for xi in x_e]),
                y=functools.reduce(operator.concat, [yi + [None] for yi in y_e]),
                showlegend=False,
                line=dict(color='gray')
            )
        )
        if show_marks:
            r_eps = [edge.gluing.marks for edge in molecule.edges]
            fig.add_trace(
                go.Scatter(
                    mode='text',
                    x=[np.mean(xi) for xi in x_e],
                    y=[np.mean(yi) for yi in y_e],
                    text=['r={}, e={:+d}'.format(format_r(r), eps) for r, eps in r_eps],
                    showlegend=False
                )
            )

    color_palette = itertools.cycle(cl.scales['12']['qual']['Set3'])
    family_color = {family.atom_ids: next(color_palette) for family in molecule.families()}
    n_marks = molecule.family_of()
    colors, text = [], []
    for atom in molecule.atoms:
        family = next((ids for ids in family_color if atom.atom_id in ids), None)
        colors.append(family_color[family] if family is not None else 'white')
        n = n_marks[atom.atom_id]
        text.append(atom.label if n is None else '{} (n={})'.format(atom.label, n))
    fig.add_trace(
        go.Scatter(
            mode='markers+text',
            x=[positions[atom.atom_id][0] for atom in molecule.atoms],
            y=[positions[atom.atom_id][1] for atom in molecule.atoms],
            text=text,
            textposition='middle right',
            hovertext=[atom.atom_id for atom in molecule.atoms],
            hoverinfo='text',
            marker=dict(
                color=colors,
                size=node_size,
                symbol=['circle-x' if is_saddle(atom.label) else 'circle'
                        for atom in molecule.atoms],
                line=dict(width=2)
            ),
            showlegend=False
        )
    )
    return fig


def write_svg(fig, path, width=800, height=600):
    """Writes a static SVG of a figure; needs ``kaleido``."""
    fig.write_image(path, format='svg', width=width, height=height)
    return path
