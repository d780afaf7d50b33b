"""Genera of the covering curves and numerical invariants of the surface."""

from dataclasses import asdict, dataclass
from fractions import Fraction

from .errors import InconsistentDatumError, UsageError
from .presentation import disjoint, validate_vector


@dataclass(frozen=True)
class SurfaceInvariants:
    g1: int
    g2: int
    q: int
    p_g: int
    chi: int
    Ksq: int
    e: int

    def as_dict(self):
        return asdict(self)


def curve_genus(V):
    """Genus of the Galois cover described by ``V`` (Riemann-Hurwitz)."""
    n = V.group.order
    rhs = n * (2 * V.base_genus - 2 + sum(Fraction(m - 1, m) for m in V.orders))
    if rhs.denominator != 1 or rhs.numerator % 2:
        raise InconsistentDatumError(f"2g - 2 = {rhs} is not an even integer")
    g = (rhs.numerator + 2) // 2
    if g < 0:
        raise InconsistentDatumError(f"negative genus {g}")
    return g


def surface_invariants(G, V1, V2):
    if V1.group is not G or V2.group is not G:
        raise UsageError("vectors must live in the given group")
    for V in (V1, V2):
        report = validate_vector(V)
        if not report:
            raise UsageError("invalid generating vector: " + "; ".join(report.failures))
    if not disjoint(V1, V2):
        raise UsageError("stabilizer sets meet outside the identity; action is not free")
    g1, g2 = curve_genus(V1), curve_genus(V2)
    if min(g1, g2) < 2:
        raise InconsistentDatumError(f"curve genera ({g1}, {g2}) must both be >= 2")
    num = (g1 - 1) * (g2 - 1)
    if num % G.order:
        raise InconsistentDatumError(f"chi = {num}/{G.order} is not an integer")
    chi = num // G.order
    if chi <= 0:
        raise InconsistentDatumError(f"chi = {chi} is not positive")
    q = V1.base_genus + V2.base_genus
    return SurfaceInvariants(g1=g1, g2=g2, q=q, p_g=chi - 1 + q, chi=chi, Ksq=8 * chi, e=4 * chi)
