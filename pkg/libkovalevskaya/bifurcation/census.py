import collections
import logging

import numpy as np

from libkovalevskaya.bifurcation.equilibria import find_equilibria
from libkovalevskaya.bifurcation.families import equilibrium_families
from libkovalevskaya.chart import interval_of_a, IntervalLabel as I
from libkovalevskaya.molecule.atom import AtomLabel

logger = logging.getLogger('libkovalevskaya')

SingularPointRecord = collections.namedtuple(
    'SingularPointRecord', ['name', 'rank', 'orbit_count', 'loop_molecule', 'regions',
                            'intervals'])

ArcRecord = collections.namedtuple(
    'ArcRecord', ['name', 'atom', 'higher', 'lower', 'endpoints', 'regions', 'intervals'])

CensusEntry = collections.namedtuple(
    'CensusEntry', ['name', 'family', 'image', 'count', 'types', 'points'])


def _span(first, last, labels):
    return tuple(labels[labels.index(first):labels.index(last) + 1])


_AXIS = (I.XII, I.XIII, I.XIV, I.XV, I.XVI, I.XVII)
_REGIONS = (I.I, I.II, I.III, I.IV, I.V, I.VI, I.VII, I.VIII, I.IX, I.X, I.XI)

# w2 is recorded on XII-XVI: XI is a region label, not an interval of the axis.
SINGULAR_POINTS = collections.OrderedDict((r.name, r) for r in (
    SingularPointRecord('w1', 1, 1, 'elliptic pitchfork', _span(I.V, I.XI, _REGIONS),
                        _span(I.XV, I.XVI, _AXIS)),
    SingularPointRecord('w2', 0, 2, '2 AxA', _span(I.V, I.XI, _REGIONS),
                        _span(I.XII, I.XVI, _AXIS)),
    SingularPointRecord('w3', 0, 1, 'AxB', _span(I.V, I.VIII, _REGIONS), (I.XVI,)),
    SingularPointRecord('w4', 1, 2, '2 elliptic pitchfork', _span(I.IX, I.XI, _REGIONS),
                        _span(I.XIII, I.XV, _AXIS)),
    SingularPointRecord('w5', 0, 2, '2 AxB', _span(I.IX, I.XI, _REGIONS),
                        _span(I.XIV, I.XV, _AXIS)),
    SingularPointRecord('w6', 0, 1, 'BxB', _span(I.IX, I.XI, _REGIONS), (I.XV,)),
    SingularPointRecord('w7', 0, 2, 'BxC2', (), _span(I.XIII, I.XIV, _AXIS)),
    SingularPointRecord('w8', 1, 2, '2 hyperbolic pitchfork', (), (I.XIV,)),
    SingularPointRecord('w9', 0, 4, '2 AxC2', (), (I.XIII,)),
    SingularPointRecord('w10', 0, 2, 'AxC2', (), (I.XII,)),
))

NEW_ARCS = collections.OrderedDict((r.name, r) for r in (
    ArcRecord('xi6', '2' + AtomLabel.A, 2, 0, (('w2',), ('w1', 'inf')),
              _span(I.V, I.XI, _REGIONS), _span(I.XII, I.XVI, _AXIS)),
    ArcRecord('alpha3', '2' + AtomLabel.A, 0, 2, (('w2',), ('w3', 'w4', 'w10')),
              _span(I.V, I.XI, _REGIONS), _span(I.XII, I.XVI, _AXIS)),
    ArcRecord('beta4', '2' + AtomLabel.B, 4, 2, (('w4',), ('w6', 'w7')),
              _span(I.IX, I.XI, _REGIONS), _span(I.XIII, I.XV, _AXIS)),
    ArcRecord('delta3', '4' + AtomLabel.A, 0, 4, (('w4',), ('w5', 'w9')),
              _span(I.IX, I.XI, _REGIONS), _span(I.XIII, I.XV, _AXIS)),
    ArcRecord('gamma8', AtomLabel.B, 1, 2, (('w1',), ('w3', 'w6')),
              _span(I.V, I.XI, _REGIONS), _span(I.XV, I.XVI, _AXIS)),
    ArcRecord('gamma9', '2' + AtomLabel.B, 4, 2, (('w5',), ('w6', 'w8')),
              _span(I.IX, I.XI, _REGIONS), _span(I.XIV, I.XV, _AXIS)),
    ArcRecord('gamma10', AtomLabel.C2, 2, 2, (('w10', 'w7'), ('inf',)),
              (), _span(I.XIII, I.XIV, _AXIS)),
    ArcRecord('gamma11', '2' + AtomLabel.C2, 4, 4, (('w8',), ('w7',)),
              (), _span(I.XIII, I.XIV, _AXIS)),
))

# Closed-form family of each named singular point, per interval of the axis b = 0
_FAMILY_NAMES = {
    'E3': {I.XII: 'w2', I.XIII: 'w2', I.XIV: 'w2', I.XV: 'w2', I.XVI: 'w2'},
    'E2': {I.XII: 'w10', I.XIII: 'w7', I.XIV: 'w7'},
    'E5': {I.XIII: 'w9'},
    'E4': {I.XIV: 'w5', I.XV: 'w5'},
    'E1-': {I.XV: 'w6', I.XVI: 'w3'},
}

OLD_POINT = 'old'


def predicted_name(family, interval):
    """Name of a closed-form family on an interval, or ``'old'`` for classical points."""
    return _FAMILY_NAMES.get(family, {}).get(interval, OLD_POINT)


def _same_image(left, right, tolerance):
    scale = 1.0 + max(abs(left[0]), abs(left[1]))
    return abs(left[0] - right[0]) <= tolerance * scale \
        and abs(left[1] - right[1]) <= tolerance * scale


def equilibrium_census(orbit, spec, equilibria=None, tolerance=1e-6):
    """
    Groups equilibria by their image in the ``(h, k)`` plane and names every group. On the axis
    ``b = 0`` a group is named after the singular point whose closed-form family predicts its
    image; groups with a classical preimage are named ``'old'``. Off the axis names are ``None``.

    Args:
        orbit: ``OrbitSpec``
        spec: ``PencilSpec``
        equilibria: Optional output of ``find_equilibria``; computed when omitted
        tolerance: Relative tolerance for equal images

    Returns:
        A list of ``CensusEntry`` sorted by image
    """
    if equilibria is None:
        equilibria = find_equilibria(orbit, spec)
    groups = []
    for equilibrium in equilibria:
        for group in groups:
            if _same_image(group[0].image, equilibrium.image, tolerance):
                group.append(equilibrium)
                break
        else:
            groups.append([equilibrium])

    interval = interval_of_a(orbit.a, spec) if orbit.b == 0 else None
    families = equilibrium_families(orbit, spec)
    census = []
    for group in groups:
        image = group[0].image
        family = next(
            (f.name for f in families if _same_image(f.image, image, tolerance)), None)
        name = predicted_name(family, interval) if family is not None else None
        census.append(CensusEntry(
            name=name, family=family, image=image, count=len(group),
            types=tuple(sorted(e.type for e in group)),
            points=np.stack([e.point.coords for e in group])))
    census.sort(key=lambda entry: tuple(entry.image))
    logger.debug("Census on a={}, b={}: {}".format(
        orbit.a, orbit.b, [(entry.name, entry.count) for entry in census]))
    return census


def census_signature(census):
    """Order-independent encoding of a census: names, counts and types of all groups."""
    return tuple(sorted(
        (entry.name or '?', entry.family or '?', entry.count, entry.types) for entry in census))


def expected_counts(interval):
    """Expected number of preimages of every rank-zero singular point present on ``interval``."""
    return {record.name: record.orbit_count for record in SINGULAR_POINTS.values()
            if record.rank == 0 and interval in record.intervals}
