from ..errors import DomainError
from .base import BaseTriangle
from .eulerian import Eulerian2Triangle, eulerian2
from .g_numbers import (
    GTriangle,
    connection_series,
    g_difference,
    g_egyptian,
    g_genfunc,
    g_hypercube,
    g_rec,
    gen_bernoulli_neg,
    virtual_stirling,
)
from .h_numbers import HTriangle, h_from_g, h_rec
from .identities import (
    verify_a_recurrence,
    verify_eq5,
    verify_eq6,
    verify_eq7,
    verify_eq8,
    verify_g_formulas,
    verify_h_diagonal,
    verify_numerators,
)
from .numerators import NumeratorTriangle, numerator_N, numerator_N_genfunc
from .stirling import AssociatedStirlingTriangle, stirling2_assoc


TRIANGLES = dict(
    eulerian2=Eulerian2Triangle,
    stirling2assoc=AssociatedStirlingTriangle,
    g=GTriangle,
    h=HTriangle,
    N=NumeratorTriangle,
)


def get_triangle(name: str) -> BaseTriangle:
    if name not in TRIANGLES:
        raise DomainError(f"unknown triangle {name!r}, expected one of {', '.join(TRIANGLES)}")
    return TRIANGLES[name]()
