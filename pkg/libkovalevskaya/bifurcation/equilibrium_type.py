class EquilibriumType:
    """
    Type of a rank-zero singular point. Choose amongst:
        - ``EquilibriumType.CENTER_CENTER``
        - ``EquilibriumType.CENTER_SADDLE``
        - ``EquilibriumType.SADDLE_SADDLE``
        - ``EquilibriumType.DEGENERATE``
    """

    CENTER_CENTER = "center-center"
    CENTER_SADDLE = "center-saddle"
    SADDLE_SADDLE = "saddle-saddle"
    DEGENERATE = "degenerate"


class Rank1Type:
    """
    Type of a rank-one singular point. Choose amongst:
        - ``Rank1Type.ELLIPTIC``
        - ``Rank1Type.HYPERBOLIC``
        - ``Rank1Type.DEGENERATE``
    """

    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"
    DEGENERATE = "degenerate"


def type_from_loop_molecule(loop_molecule):
    """
    Type of a rank-zero point read off its loop molecule label, e.g. ``"2 A x B"``: two
    ``A`` factors give center-center, one gives center-saddle, none gives saddle-saddle.
    """
    factors = loop_molecule.split(' ')[-1].split('x')
    num_centers = sum(factor.strip() == 'A' for factor in factors)
    return (EquilibriumType.SADDLE_SADDLE, EquilibriumType.CENTER_SADDLE,
            EquilibriumType.CENTER_CENTER)[num_centers]
