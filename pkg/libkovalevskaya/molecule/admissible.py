import collections
import functools
import json
import os

from libkovalevskaya.molecule.gluing import GluingMatrix, gluing_from_cycles

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')

AdmissibleBasis = collections.namedtuple('AdmissibleBasis', ['arc', 'side', 'families', 'basis'])
AdmissibleCoordinates = collections.namedtuple('AdmissibleCoordinates', ['lower', 'upper'])


class Side:
    """
    Side of an arc of the bifurcation diagram. Choose amongst:
        - ``Side.LOWER``: tori with smaller ``K``
        - ``Side.UPPER``: tori with larger ``K``
    """

    LOWER = "lower"
    UPPER = "upper"


def _basis(arc, side, entry):
    if entry is None:
        return None
    return AdmissibleBasis(arc, side, tuple(entry['families']),
                           tuple((name, int(sign)) for name, sign in entry['basis']))


@functools.lru_cache(maxsize=None)
def admissible_coordinates():
    """
    Admissible coordinate systems on both sides of the arcs that are new for the
    Kovalevskaya case on so(3, 1), each a pair ``(lambda, mu)`` of signed lambda-cycles named
    after the arcs they vanish on. A side without tori is ``None``.

    Returns:
        An ``OrderedDict`` from arc name to ``AdmissibleCoordinates``
    """
    with open(os.path.join(DATA_DIR, 'admissible_coordinates.json'), encoding='utf-8') as f:
        data = json.load(f, object_pairs_hook=collections.OrderedDict)
    return collections.OrderedDict(
        (arc, AdmissibleCoordinates(_basis(arc, Side.LOWER, sides[Side.LOWER]),
                                    _basis(arc, Side.UPPER, sides[Side.UPPER])))
        for arc, sides in data['arcs'].items())


def gluing_between(lower_arc, upper_arc):
    """
    Gluing matrix of the edge from the atom of ``lower_arc`` to the atom of ``upper_arc``,
    from the bases on the upper side of the first and the lower side of the second.

    Raises:
        KeyError: If an arc has no admissible coordinates
        ValueError: If the sides carry no tori, lie on different families of tori or the bases
            share no cycles
        GluingMatrixError: If the bases do not glue with determinant -1
    """
    coordinates = admissible_coordinates()
    first, second = coordinates[lower_arc].upper, coordinates[upper_arc].lower
    if first is None or second is None:
        raise ValueError("No tori between {} and {}".format(lower_arc, upper_arc))
    if not set(first.families) & set(second.families):
        raise ValueError("Arcs {} and {} bound different families of tori: {} and {}".format(
            lower_arc, upper_arc, first.families, second.families))
    return GluingMatrix(gluing_from_cycles(first.basis, second.basis).tolist())
