import re


class AtomLabel:
    """
    Base atoms of the molecules. Labels with a multiplicity are written with a leading integer,
    e.g. ``2A`` or ``2C2``. Choose amongst:
        - ``AtomLabel.A``
        - ``AtomLabel.B``
        - ``AtomLabel.C2``
        - ``AtomLabel.D1``
        - ``AtomLabel.D2``
    """

    A = "A"
    B = "B"
    C2 = "C2"
    D1 = "D1"
    D2 = "D2"


BASE_ATOMS = (AtomLabel.A, AtomLabel.B, AtomLabel.C2, AtomLabel.D1, AtomLabel.D2)

BASE_VALENCE = {
    AtomLabel.A: 1,
    AtomLabel.B: 3,
    AtomLabel.C2: 4,
    AtomLabel.D1: 4,
    AtomLabel.D2: 4,
}

_LABEL_PATTERN = re.compile(r'^([1-9][0-9]*)?(A|B|C2|D1|D2)$')


class AtomLabelError(ValueError):
    pass


def parse_atom_label(label):
    """
    Splits a label such as ``2C2`` into its multiplicity and base atom.

    Returns:
        A tuple ``(multiplicity, base)``

    Raises:
        AtomLabelError: If the label is not a known atom
    """
    match = _LABEL_PATTERN.match(str(label))
    if match is None:
        raise AtomLabelError("Unknown atom label {!r}".format(label))
    multiplicity, base = match.groups()
    return int(multiplicity or 1), base


def atom_label(base, multiplicity=1):
    if base not in BASE_VALENCE:
        raise AtomLabelError("Unknown base atom {!r}".format(base))
    if multiplicity < 1:
        raise AtomLabelError("Multiplicity must be positive, got {}".format(multiplicity))
    return base if multiplicity == 1 else "{}{}".format(multiplicity, base)


def valence(label):
    """Number of boundary tori of an atom; a multiple atom has that many disjoint copies."""
    multiplicity, base = parse_atom_label(label)
    return multiplicity * BASE_VALENCE[base]


def is_saddle(label):
    return parse_atom_label(label)[1] != AtomLabel.A
