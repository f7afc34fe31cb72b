class AlgebraKind:
    """
    Member of the Lie algebra pencil selected by the pencil parameter. Choose amongst:
        - ``AlgebraKind.SO4`` (``kappa > 0``)
        - ``AlgebraKind.E3`` (``kappa == 0``)
        - ``AlgebraKind.SO31`` (``kappa < 0``)
    """

    SO4 = "so4"
    E3 = "e3"
    SO31 = "so31"


def infer_algebra_kind(kappa):
    if kappa > 0:
        return AlgebraKind.SO4
    if kappa < 0:
        return AlgebraKind.SO31
    return AlgebraKind.E3
