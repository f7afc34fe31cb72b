import collections
import logging

import numpy as np
from scipy.optimize import linear_sum_assignment

from libkovalevskaya.bifurcation.atoms import atom_of_arc
from libkovalevskaya.bifurcation.census import equilibrium_census
from libkovalevskaya.bifurcation.diagram import Arc, Vertex, BifDiagram
from libkovalevskaya.fiber import isoenergy_critical_values, count_tori
from libkovalevskaya.fiber.isoenergy import solve_critical_points
from libkovalevskaya.fields import KovalevskayaIntegral

logger = logging.getLogger('libkovalevskaya')

REFINEMENT_DEPTH = 20

ColumnPoint = collections.namedtuple(
    'ColumnPoint', ['h', 'k', 'count_above', 'count_below', 'seeds'])


class UnresolvedCellError(RuntimeError):
    pass


class _ArcTrace:
    """Mutable record of an arc while columns are linked."""

    def __init__(self, point):
        self.tag = (point.count_above, point.count_below)
        self.points = [(point.h, point.k)]
        self.first_seeds = point.seeds
        self.last_seeds = point.seeds
        self.start = None
        self.end = None

    def extend(self, point):
        self.points.append((point.h, point.k))
        self.last_seeds = point.seeds

    def predict(self, h):
        if len(self.points) == 1:
            return self.points[-1][1]
        (h0, k0), (h1, k1) = self.points[-2:]
        return k1 + (k1 - k0) * (h - h1) / (h1 - h0)

    def predict_left(self, h):
        if len(self.points) == 1:
            return self.points[0][1]
        (h0, k0), (h1, k1) = self.points[:2]
        return k0 + (k1 - k0) * (h - h0) / (h1 - h0)


def _seed_subset(level, max_seeds=32):
    seeds = np.concatenate([level.points, level.phases[:, np.newaxis]], axis=-1)
    return seeds[np.linspace(0, len(seeds) - 1, min(max_seeds, len(seeds))).astype(int)]


def scan_column(orbit, h, spec, window, budget, probe_budget, seed=0):
    """
    Critical values of ``K`` on the vertical line through ``h`` inside ``window``, each tagged
    with the torus counts just above and just below it.

    Returns:
        A list of ``ColumnPoint`` sorted by ``k``

    Raises:
        UnresolvedCellError: If the counts on both sides of a critical value fit no atom
    """
    levels = isoenergy_critical_values(
        orbit, h, spec, budget=probe_budget, seed=seed, k_range=(window.k_min, window.k_max))
    if not levels:
        return []
    ks = [level.k for level in levels]
    lower = max(window.k_min, 0.0)
    probes = [0.5 * (left + right) for left, right in zip([lower] + ks, ks + [window.k_max])]
    counts = []
    for i, k in enumerate(probes):
        if i == 0 and ks[0] <= 1e-9 * (1.0 + window.k_span):
            counts.append(0)
        else:
            counts.append(count_tori(orbit, h, k, spec, budget=budget, seed=seed).component_count)

    points = []
    for i, level in enumerate(levels):
        above, below = counts[i + 1], counts[i]
        if above == below and (above == 0 or above % 2 == 1):
            raise UnresolvedCellError(
                "Critical value k={:.6g} at h={:.6g} separates {} tori from {}: nearby "
                "transitions were not separated".format(level.k, h, below, above))
        points.append(ColumnPoint(h, level.k, above, below, _seed_subset(level)))
    logger.debug("Column h={:.5g}: critical values {}, counts {}".format(
        h, ["{:.5g}".format(k) for k in ks], counts))
    return points


def _link(traces, column, jump):
    """Matches the open arcs to the points of the next column; returns the unmatched points."""
    if not traces or not column:
        return list(column), list(traces)
    h = column[0].h
    cost = np.full((len(traces), len(column)), 1e12)
    for i, trace in enumerate(traces):
        for j, point in enumerate(column):
            if trace.tag == (point.count_above, point.count_below):
                cost[i, j] = abs(trace.predict(h) - point.k)
    rows, cols = linear_sum_assignment(cost)
    matched_traces, matched_points = set(), set()
    for i, j in zip(rows, cols):
        if cost[i, j] <= jump:
            traces[i].extend(column[j])
            matched_traces.add(i)
            matched_points.add(j)
    unmatched_points = [p for j, p in enumerate(column) if j not in matched_points]
    closed = [t for i, t in enumerate(traces) if i not in matched_traces]
    return unmatched_points, closed


def _bisect_end(orbit, spec, h_known, h_missing, seeds, predict, tolerance, depth):
    """
    Locates where an arc stops between a column that has it and one that does not, by
    continuation from the critical points of the known column.
    """
    field = KovalevskayaIntegral()
    best = None
    for _ in range(depth):
        h = 0.5 * (h_known + h_missing)
        solutions = solve_critical_points(seeds, orbit, h, spec, max_iterations=30)
        found = False
        if len(solutions) > 0:
            ks = field(solutions[:, :6], spec).numpy()
            close = np.abs(ks - predict(h)) <= tolerance
            if np.any(close):
                found = True
                seeds = solutions[close]
                best = (h, float(np.median(ks[close])))
        if found:
            h_known = h
        else:
            h_missing = h
    return best


def _column_positions(window, grid, census):
    columns = np.linspace(window.h_min, window.h_max, grid)
    step = columns[1] - columns[0]
    for entry in census:
        h = entry.image[0]
        near = np.abs(columns - h) < 0.25 * step
        columns[near] = h + np.where(columns[near] >= h, 0.3, -0.3) * step
    return np.clip(columns, window.h_min, window.h_max)


def scan_diagram(orbit, spec, window, grid=24, budget=512, probe_budget=512, seed=0,
                 refine_depth=REFINEMENT_DEPTH, equilibria=None, resolve_atoms=True):
    """
    Reconstructs the bifurcation diagram of an orbit inside ``window``. On every column
    ``h = const`` the critical values of ``K`` are found and tagged with the torus counts on
    both sides; points with equal tags are linked across columns into arcs, arc ends are
    refined by bisection in ``h`` and attached to vertices. Vertices are the images of
    equilibria plus the points where arcs end; arcs running through a vertex are split there
    and unnamed junctions between two halves of one arc are healed.

    Args:
        orbit: ``OrbitSpec``
        spec: ``PencilSpec``
        window: ``Window`` covering all equilibrium images plus a margin
        grid: Number of columns
        budget: Seeds per fiber count
        probe_budget: Seeds of each critical value search
        seed: Seed of the random generators
        refine_depth: Bisection depth of the arc ends
        equilibria: Optional output of ``find_equilibria``
        resolve_atoms: Whether to resolve atoms, including the probes of ``(2m, 2m)`` arcs

    Returns:
        A ``BifDiagram``

    Raises:
        UnresolvedCellError: If a column has a critical value that fits no atom
    """
    census = equilibrium_census(orbit, spec, equilibria=equilibria)
    census = [entry for entry in census if window.contains(*entry.image)]
    columns = _column_positions(window, grid, census)
    step = float(np.max(np.diff(columns)))
    jump = max(0.08 * window.k_span, 12.0 * step)
    snap = 0.02 * max(window.h_span, window.k_span)

    open_traces, traces = [], []
    previous_h = None
    for index, h in enumerate(columns):
        column = scan_column(orbit, h, spec, window, budget, probe_budget, seed=seed + index)
        fresh, closed = _link(open_traces, column, jump)
        for trace in closed:
            trace.end = (previous_h, h)
        open_traces = [t for t in open_traces if t not in closed]
        for point in fresh:
            trace = _ArcTrace(point)
            trace.start = (previous_h, h) if previous_h is not None else None
            open_traces.append(trace)
            traces.append(trace)
        previous_h = h

    vertices = [Vertex('v{}'.format(i), entry.image, entry.name, 0, entry.count)
                for i, entry in enumerate(census)]
    arcs = []
    for number, trace in enumerate(traces):
        points = list(trace.points)
        start = end = None
        if trace.start is not None:
            h_missing, h_known = trace.start
            refined = _bisect_end(orbit, spec, h_known, h_missing, trace.first_seeds,
                                  trace.predict_left, 0.25 * jump, refine_depth)
            start = _attach(vertices, refined or points[0], snap, window)
            if refined is not None:
                points.insert(0, refined)
        if trace.end is not None:
            h_known, h_missing = trace.end
            refined = _bisect_end(orbit, spec, h_known, h_missing, trace.last_seeds,
                                  trace.predict, 0.25 * jump, refine_depth)
            end = _attach(vertices, refined or points[-1], snap, window)
            if refined is not None:
                points.append(refined)
        points = _with_vertex_ends(np.array(points), start, end, vertices)
        arcs.append(Arc('a{}'.format(number), points, None, trace.tag[0], trace.tag[1],
                        start, end))

    diagram = BifDiagram(orbit, spec, window, arcs, vertices, census)
    _split_at_vertices(diagram, snap)
    _heal(diagram)
    if resolve_atoms:
        for arc in list(diagram.arcs):
            diagram.replace_arc(arc._replace(atom=atom_of_arc(
                diagram, arc.arc_id, spec, budget=budget, probe_budget=probe_budget, seed=seed)))
    logger.info("Scanned {}".format(diagram))
    return diagram


def _attach(vertices, point, snap, window):
    """Vertex id for an arc end; new rank-one vertices are created for unmatched ends."""
    h, k = point
    if k >= window.k_max - snap or h <= window.h_min + snap or h >= window.h_max - snap:
        return None
    distances = [np.hypot(v.image[0] - h, v.image[1] - k) for v in vertices]
    if distances and min(distances) <= snap:
        return vertices[int(np.argmin(distances))].vertex_id
    vertex = Vertex('v{}'.format(len(vertices)), (float(h), float(k)), None, 1, 0)
    vertices.append(vertex)
    return vertex.vertex_id


def _with_vertex_ends(points, start, end, vertices):
    by_id = {v.vertex_id: v for v in vertices}
    if start is not None:
        points = np.concatenate([[by_id[start].image], points])
    if end is not None:
        points = np.concatenate([points, [by_id[end].image]])
    return np.asarray(points, dtype=np.float64)


def _split_at_vertices(diagram, snap):
    """Splits arcs that run through a rank-zero vertex into two arcs ending there."""
    for vertex in diagram.vertices:
        if vertex.rank != 0:
            continue
        h, k = vertex.image
        for arc in list(diagram.arcs):
            if vertex.vertex_id in (arc.start, arc.end):
                continue
            hs = arc.points[:, 0]
            if not hs[0] + snap < h < hs[-1] - snap:
                continue
            if abs(np.interp(h, hs, arc.points[:, 1]) - k) > snap:
                continue
            left = np.concatenate([arc.points[:np.searchsorted(hs, h, side='left')],
                                   [vertex.image]])
            right = np.concatenate([[vertex.image],
                                    arc.points[np.searchsorted(hs, h, side='right'):]])
            diagram.arcs.remove(arc)
            diagram.arcs.append(arc._replace(arc_id=arc.arc_id + 'l', points=left,
                                             end=vertex.vertex_id))
            diagram.arcs.append(arc._replace(arc_id=arc.arc_id + 'r', points=right,
                                             start=vertex.vertex_id))


def _heal(diagram):
    """Joins the two arcs at a rank-one vertex of degree two when their tags agree."""
    for vertex in list(diagram.vertices):
        if vertex.rank == 0:
            continue
        incident = diagram.incident_arcs(vertex.vertex_id)
        if len(incident) == 0:
            diagram.vertices.remove(vertex)
            continue
        if len(incident) != 2:
            continue
        left, right = sorted(incident, key=lambda arc: arc.points[0, 0])
        if left.tag != right.tag or left.end != vertex.vertex_id \
                or right.start != vertex.vertex_id:
            continue
        merged = left._replace(points=np.concatenate([left.points, right.points[1:]]),
                               end=right.end)
        diagram.arcs.remove(left)
        diagram.arcs.remove(right)
        diagram.arcs.append(merged)
        diagram.vertices.remove(vertex)
