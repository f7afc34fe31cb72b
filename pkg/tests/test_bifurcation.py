import numpy as np
import pytest

from libkovalevskaya import IntervalLabel, OrbitSpec, PencilSpec, PhasePoint
from libkovalevskaya.bifurcation import AmbiguousAtomError, Arc, BifDiagram, CensusEntry, \
    Equilibrium, EquilibriumType, LoopRadiusError, NEW_ARCS, OLD_POINT, SINGULAR_POINTS, \
    Vertex, Window, atom_from_counts, atom_of_arc, census_signature, classify_equilibrium, \
    equilibrium_census, equilibrium_families, expected_counts, find_equilibria, loop_molecule, \
    momentum_rank, scan_column, scan_diagram, type_from_loop_molecule
from libkovalevskaya.bifurcation.atoms import probe_split_level
from libkovalevskaya.bifurcation.census import predicted_name
from libkovalevskaya.cli import default_window
from libkovalevskaya.fiber import fiber_flood_oracle
from libkovalevskaya.molecule import AtomLabel
from libkovalevskaya.bifurcation.scan import _column_positions, _heal, _split_at_vertices
from libkovalevskaya.phase_point import IntegralPair

ORBIT = OrbitSpec(-2.0, 0.0)


def _families(spec):
    return {family.name: family for family in equilibrium_families(ORBIT, spec)}


def test_closed_form_families(spec):
    families = _families(spec)
    assert sorted(families) == ['E2', 'E3', 'E4']
    assert families['E2'].image == pytest.approx((2.0, 1.0))
    assert families['E3'].image == pytest.approx((1.0, 4.0))
    assert families['E4'].image == pytest.approx((3.5, 0.0))
    np.testing.assert_allclose(families['E3'].points[0], [0.0, np.sqrt(3.0), 0.0, -1.0, 0, 0])


def test_no_closed_form_families_off_the_axis(spec):
    assert equilibrium_families(OrbitSpec(-2.0, 0.5), spec) == []


def test_closed_form_points_have_rank_zero(spec):
    for family in _families(spec).values():
        for coords in family.points:
            assert momentum_rank(coords, spec) == 0


def test_closed_form_w2_points_are_center_center(spec):
    expected = type_from_loop_molecule(SINGULAR_POINTS['w2'].loop_molecule)
    for coords in _families(spec)['E3'].points:
        assert classify_equilibrium(PhasePoint.from_coords(coords), ORBIT, spec) == expected
    assert expected == EquilibriumType.CENTER_CENTER


def test_generic_point_has_rank_two(spec):
    details = momentum_rank(PhasePoint((0.5, -0.3, 0.4), (1.0, 0.8, -0.6)), spec,
                            return_details=True)
    assert details.rank == 2
    assert len(details.singular_values) == 2
    assert not details.near_threshold


@pytest.mark.parametrize('label, expected', [
    ('2 AxA', EquilibriumType.CENTER_CENTER),
    ('AxB', EquilibriumType.CENTER_SADDLE),
    ('2 AxC2', EquilibriumType.CENTER_SADDLE),
    ('BxB', EquilibriumType.SADDLE_SADDLE),
    ('BxC2', EquilibriumType.SADDLE_SADDLE),
])
def test_type_from_loop_molecule(label, expected):
    assert type_from_loop_molecule(label) == expected


def test_singular_point_records():
    assert list(SINGULAR_POINTS) == ['w{}'.format(i) for i in range(1, 11)]
    assert sum(record.rank == 0 for record in SINGULAR_POINTS.values()) == 7
    assert NEW_ARCS['beta4'].atom == '2B'
    assert NEW_ARCS['gamma10'].intervals == (IntervalLabel.XIII, IntervalLabel.XIV)


@pytest.mark.parametrize('interval, expected', [
    (IntervalLabel.XII, {'w2': 2, 'w10': 2}),
    (IntervalLabel.XIII, {'w2': 2, 'w7': 2, 'w9': 4}),
    (IntervalLabel.XV, {'w2': 2, 'w5': 2, 'w6': 1}),
    (IntervalLabel.XVII, {}),
])
def test_expected_counts(interval, expected):
    assert expected_counts(interval) == expected


def test_predicted_names():
    assert predicted_name('E3', IntervalLabel.XII) == 'w2'
    assert predicted_name('E2', IntervalLabel.XIII) == 'w7'
    assert predicted_name('E4', IntervalLabel.XII) == OLD_POINT
    assert predicted_name('E9', IntervalLabel.XII) == OLD_POINT


def test_census_of_closed_form_equilibria(spec):
    equilibria = [
        Equilibrium(PhasePoint.from_coords(coords), EquilibriumType.CENTER_CENTER, family.image)
        for family in _families(spec).values() for coords in family.points]
    census = equilibrium_census(ORBIT, spec, equilibria=equilibria)
    assert [(entry.name, entry.family, entry.count) for entry in census] == [
        ('w2', 'E3', 2), ('w10', 'E2', 2), (OLD_POINT, 'E4', 2)]
    named = {entry.name: entry.count for entry in census if entry.name != OLD_POINT}
    assert named == expected_counts(IntervalLabel.XII)
    assert census_signature(census) == census_signature(list(reversed(census)))


def test_find_equilibria_needs_so31():
    with pytest.raises(ValueError):
        find_equilibria(ORBIT, PencilSpec(kappa=0.0))


@pytest.mark.slow
def test_found_equilibria_match_census(spec):
    census = equilibrium_census(ORBIT, spec, equilibria=find_equilibria(ORBIT, spec,
                                                                        num_seeds=128))
    counts = {entry.name: entry.count for entry in census}
    for name, count in expected_counts(IntervalLabel.XII).items():
        assert counts[name] == count


@pytest.mark.parametrize('above, below, label', [
    (1, 0, 'A'),
    (0, 2, '2A'),
    (1, 2, 'B'),
    (4, 2, '2B'),
    (1, 3, 'D1'),
    (2, 2, None),
    (4, 4, None),
])
def test_atom_from_counts(above, below, label):
    assert atom_from_counts(above, below) == label


@pytest.mark.parametrize('above, below', [(1, 1), (0, 0), (2, 5)])
def test_atom_from_counts_rejects_impossible_counts(above, below):
    with pytest.raises(AmbiguousAtomError):
        atom_from_counts(above, below)


def _star_diagram(spec):
    vertex = Vertex('v0', (0.0, 0.0), 'w6', 0, 1)
    arcs = [
        Arc('a', np.array([[0.0, 0.0], [0.5, 0.0], [1.0, 0.0]]), 'A', 1, 0, 'v0', None),
        Arc('b', np.array([[0.0, 0.0], [0.0, 0.5], [0.0, 1.0]]), 'B', 2, 1, 'v0', None),
        Arc('c', np.array([[-1.0, 0.0], [-0.5, 0.0], [0.0, 0.0]]), '2A', 2, 0, None, 'v0'),
    ]
    return BifDiagram(ORBIT, spec, Window(-1.0, 1.0, 0.0, 1.0), arcs, [vertex])


def test_loop_molecule_is_counterclockwise_and_canonical(spec):
    loop = loop_molecule(_star_diagram(spec), 'w6', radius=0.25)
    assert loop.vertex == 'w6'
    assert loop.atoms == ('2A', 'A', 'B')
    assert loop.arcs == ('c', 'a', 'b')
    assert loop.angles[0] == pytest.approx(np.pi)


def test_atom_of_arc_reads_unambiguous_counts(spec):
    diagram = _star_diagram(spec)
    assert [atom_of_arc(diagram, arc_id, spec) for arc_id in ('a', 'b', 'c')] == \
        ['A', 'B', '2A']


def test_loop_radius_must_isolate_the_vertex(spec):
    diagram = _star_diagram(spec)
    diagram.arcs.append(Arc('d', np.array([[0.1, -0.5], [0.1, 0.5]]), 'B', 2, 1, None, None))
    with pytest.raises(LoopRadiusError):
        loop_molecule(diagram, 'v0', radius=0.25)
    with pytest.raises(ValueError):
        loop_molecule(_star_diagram(spec), 'v0', radius=0.0)


def test_fingerprint_ignores_identifiers(spec):
    first = _star_diagram(spec)
    second = _star_diagram(spec)
    second.vertices = [second.vertices[0]._replace(vertex_id='x')]
    second.arcs = [arc._replace(arc_id=arc.arc_id.upper(),
                                start='x' if arc.start else None,
                                end='x' if arc.end else None) for arc in second.arcs]
    assert first.fingerprint == second.fingerprint
    third = _star_diagram(spec)
    third.replace_arc(third.arc('b')._replace(atom='2B'))
    assert third.fingerprint != first.fingerprint


def test_diagram_rows(spec):
    rows = _star_diagram(spec).to_rows()
    assert len(rows) == 10
    assert rows[-1]['kind'] == 'vertex'
    assert rows[-1]['arc_or_vertex_id'] == 'w6'


def test_arcs_are_split_at_rank_zero_vertices_and_healed_at_rank_one(spec):
    points = np.array([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0], [3.0, 3.0]])
    diagram = BifDiagram(ORBIT, spec, Window(0.0, 3.0, 0.0, 3.0),
                         [Arc('a0', points, None, 1, 0, None, None)],
                         [Vertex('v0', (1.5, 1.5), 'w2', 0, 2)])
    _split_at_vertices(diagram, snap=0.1)
    left, right = diagram.arc('a0l'), diagram.arc('a0r')
    np.testing.assert_allclose(left.points, [[0, 0], [1, 1], [1.5, 1.5]])
    np.testing.assert_allclose(right.points, [[1.5, 1.5], [2, 2], [3, 3]])
    assert left.end == right.start == 'v0'

    diagram.vertices[0] = diagram.vertices[0]._replace(rank=1, name=None)
    _heal(diagram)
    assert [arc.arc_id for arc in diagram.arcs] == ['a0l']
    assert diagram.arcs[0].end is None
    assert diagram.vertices == []


def test_columns_avoid_equilibrium_images():
    census = [CensusEntry('w2', 'E3', IntegralPair(0.5, 0.2), 2, (), np.zeros((2, 6)))]
    columns = _column_positions(Window(0.0, 1.0, 0.0, 1.0), 11, census)
    assert len(columns) == 11
    assert np.min(np.abs(columns - 0.5)) == pytest.approx(0.03)


@pytest.mark.slow
def test_scanned_diagram_has_the_named_equilibria(spec):
    diagram = scan_diagram(ORBIT, spec, Window(0.0, 4.5, 0.0, 5.0), grid=16, budget=256,
                           probe_budget=256)
    names = {vertex.name for vertex in diagram.vertices if vertex.rank == 0}
    assert {'w2', 'w10'} <= names
    assert diagram.arcs
    for arc in diagram.arcs:
        assert arc.atom == atom_from_counts(arc.count_above, arc.count_below) or \
            arc.count_above == arc.count_below


def _family_image(orbit, name, spec):
    return {family.name: family.image for family in equilibrium_families(orbit, spec)}[name]


def _crossings_near(orbit, image, spec, offset=0.1, half_height=0.5):
    """
    Critical values on the two vertical lines next to a vertex, each with the midpoints of
    the chambers just below and just above it.
    """
    h_vertex, k_vertex = image
    crossings = []
    for h in (h_vertex - offset, h_vertex + offset):
        window = Window(h - offset, h + offset, max(k_vertex - half_height, 0.0),
                        k_vertex + half_height)
        column = scan_column(orbit, h, spec, window, budget=512, probe_budget=512)
        ks = [window.k_min] + [point.k for point in column] + [window.k_max]
        for i, point in enumerate(column):
            crossings.append((point, 0.5 * (ks[i] + ks[i + 1]), 0.5 * (ks[i + 1] + ks[i + 2])))
    return crossings


def _crossing_with_tag(orbit, image, spec, tag):
    for point, k_below, k_above in _crossings_near(orbit, image, spec):
        if (point.count_above, point.count_below) == tag:
            return point, k_below, k_above
    pytest.fail("No critical value with counts {} next to {}".format(tag, image))


@pytest.mark.slow
@pytest.mark.parametrize('arc_name, a, family', [
    ('xi6', -2.0, 'E3'),
    ('alpha3', -2.0, 'E3'),
    ('gamma10', -2.0, 'E2'),
    ('beta4', -0.5, 'E2'),
    ('gamma9', -0.1, 'E4'),
    ('gamma8', 0.5, 'E1-'),
])
def test_new_arc_torus_counts(arc_name, a, family, spec):
    record = NEW_ARCS[arc_name]
    orbit = OrbitSpec(a, 0.0)
    point, k_below, k_above = _crossing_with_tag(
        orbit, _family_image(orbit, family, spec), spec, (record.higher, record.lower))
    assert fiber_flood_oracle(orbit, point.h, k_above, spec) == record.higher
    assert fiber_flood_oracle(orbit, point.h, k_below, spec) == record.lower


@pytest.mark.slow
def test_c2_arc_leaves_one_torus_between_its_split_levels(spec):
    orbit = OrbitSpec(-2.0, 0.0)
    point, _, _ = _crossing_with_tag(orbit, _family_image(orbit, 'E2', spec), spec, (2, 2))
    between, (k_lower, k_upper) = probe_split_level(orbit, point.h, point.k, spec,
                                                    half_width=0.2)
    assert between == 1
    assert k_lower < k_upper
    arc = Arc('c', np.array([[point.h, point.k]] * 3), None, 2, 2, None, None)
    diagram = BifDiagram(orbit, spec, Window(point.h - 0.5, point.h + 0.5, point.k - 1.0,
                                             point.k + 1.0), [arc], [])
    assert atom_of_arc(diagram, 'c', spec) == AtomLabel.C2


@pytest.mark.slow
@pytest.mark.parametrize('a, interval', [
    (-0.5, IntervalLabel.XIII),
    (-0.1, IntervalLabel.XIV),
    (0.1, IntervalLabel.XV),
    (0.5, IntervalLabel.XVI),
])
def test_found_equilibria_match_census_on_every_interval(a, interval, spec):
    orbit = OrbitSpec(a, 0.0)
    census = equilibrium_census(orbit, spec, equilibria=find_equilibria(orbit, spec))
    named = {entry.name: entry for entry in census if entry.name not in (None, OLD_POINT)}
    assert {name: entry.count for name, entry in named.items()} == expected_counts(interval)
    for name, entry in named.items():
        expected = type_from_loop_molecule(SINGULAR_POINTS[name].loop_molecule)
        assert set(entry.types) == {expected}


_SCANS = {}


def _scanned(a, spec):
    if a not in _SCANS:
        orbit = OrbitSpec(a, 0.0)
        equilibria = find_equilibria(orbit, spec)
        window = default_window(equilibrium_census(orbit, spec, equilibria=equilibria))
        _SCANS[a] = scan_diagram(orbit, spec, window, grid=16, budget=256, probe_budget=256,
                                 equilibria=equilibria)
    return _SCANS[a]


@pytest.mark.slow
def test_fingerprints_tell_the_intervals_apart(spec):
    orbits = [(-2.0, -3.0, -1.5), (-0.5, -0.7, -0.4), (-0.1, -0.15, -0.05),
              (0.1, 0.15, 0.05), (0.5, 0.7, 0.4), (2.0, 3.0, 1.5)]
    fingerprints = []
    for values in orbits:
        within = {_scanned(a, spec).fingerprint for a in values}
        assert len(within) == 1
        fingerprints.append(within.pop())
    assert len(set(fingerprints)) == len(orbits)


def _atom_kind(label):
    return label.lstrip('0123456789')


@pytest.mark.slow
@pytest.mark.parametrize('a, vertex, kinds', [
    (-2.0, 'w2', ['A', 'A']),
    (0.1, 'w6', ['B', 'B', 'B', 'B']),
    (-0.5, 'w7', ['B', 'B', 'C2', 'C2']),
])
def test_loop_molecules_of_named_points(a, vertex, kinds, spec):
    diagram = _scanned(a, spec)
    radius = 0.04 * max(diagram.window.h_span, diagram.window.k_span)
    loop = loop_molecule(diagram, vertex, radius=radius)
    assert loop.vertex == vertex
    assert sorted(_atom_kind(atom) for atom in loop.atoms) == kinds
    if vertex == 'w2':
        assert loop.atoms == ('2A', '2A')
