"""Combinatorial bounds on numerically trivial automorphisms.

For ``S = (C1 x C2)/G`` with ``q(S) = 0`` the group ``Aut*(S)`` sits in

    1 -> (Cent1 x Cent2)/Z(G) -> Aut*(S) -> H/Inn(G) -> 1

where ``Cent_j`` is the centralizer of ``G`` in ``Aut(C_j)`` and ``H`` the
automorphisms of ``G`` compatible with both coverings.  This module computes
what can be decided from the generating vectors alone: the automorphisms
preserving both Nielsen classes, when ``Cent_j = Z(G)`` is forced, bounds on
the group ``N'_j`` of induced automorphisms of ``P^1`` from its orbit
structure, and the three special patterns where an automorphism can act
trivially on cohomology without fixing the branch points.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .errors import UsageError
from .group import automorphisms, center, extend_to_homomorphism, GroupHom


# -- Nielsen classes ----------------------------------------------------------


@dataclass(frozen=True)
class NielsenClass:
    """Sorted multiset of ``(class representative, order)`` over the branch
    entries; representatives are minimal element indices."""

    classes: tuple

    @classmethod
    def of(cls, V):
        G = V.group
        return cls(tuple(sorted((G.class_of(c), G.element_order(c)) for c in V.branch)))

    def image(self, G, phi, V):
        """Nielsen class of ``phi(V)``."""
        return NielsenClass(
            tuple(sorted((G.class_of(phi(c)), G.element_order(c)) for c in V.branch))
        )


def nielsen_preserving_automorphisms(G, V1, V2, auts=None):
    """Automorphisms of ``G`` mapping each vector's Nielsen class to itself."""
    if auts is None:
        auts = automorphisms(G)
    n1, n2 = NielsenClass.of(V1), NielsenClass.of(V2)
    return [
        phi for phi in auts
        if n1.image(G, phi, V1) == n1 and n2.image(G, phi, V2) == n2
    ]


# -- centralizers -------------------------------------------------------------


def _unrepeated(V):
    counts = Counter(V.branch)
    return [c for c in V.branch if counts[c] == 1]


def centralizer_is_center(V):
    """True when at least three branch entries differ from all the others.

    A centralizing automorphism then fixes three points of a base of genus
    <= 1 and is trivial.  Returns None (not applicable) for base genus >= 2.
    """
    if V.base_genus >= 2:
        return None
    return len(_unrepeated(V)) >= 3


def centralizer_cap_applies(V):
    """``|Cent/Z(G)| <= 2`` for a rational base with exactly two unrepeated
    entries and every other value occurring exactly twice."""
    if V.base_genus != 0:
        return False
    counts = Counter(V.branch)
    singles = sum(1 for k in counts.values() if k == 1)
    return singles == 2 and all(k in (1, 2) for k in counts.values())


# -- finite subgroups of PGL(2) -----------------------------------------------


def _orbit_types(r):
    """``(kind, order, special orbit sizes, generic orbit size)`` for every
    finite subgroup of PGL(2, C) that could act on ``r`` points."""
    out = [("cyclic", n, (1, 1), n) for n in range(1, r + 1)]
    out += [("dihedral", 2 * n, (n, n, 2), 2 * n) for n in range(2, r + 1)]
    out += [
        ("A4", 12, (6, 4, 4), 12),
        ("S4", 24, (12, 8, 6), 24),
        ("A5", 60, (30, 20, 12), 60),
    ]
    return out


def _is_union_of_orbits(counts, specials, generic):
    """Can the points, grouped by branching order, be split into orbits that
    each carry one order, using each special orbit at most once?"""
    values = list(counts)
    for choice in product(range(len(values) + 1), repeat=len(specials)):
        used = Counter()
        for size, slot in zip(specials, choice):
            if slot < len(values):
                used[values[slot]] += size
        if all(
            counts[v] >= used[v] and (counts[v] - used[v]) % generic == 0 for v in values
        ):
            return True
    return False


def pgl2_orbit_bound(V):
    """Largest order of a finite subgroup of PGL(2, C) that can preserve the
    branch set with its branching orders."""
    if V.base_genus != 0:
        raise UsageError("orbit bound needs a rational base curve")
    orders = V.orders
    r = len(orders)
    if r < 3:
        raise UsageError("orbit bound needs at least three branch points")
    counts = Counter(orders)
    equal = len(counts) == 1
    caps = {"cyclic": r if equal else r - 1, "dihedral": 2 * r if equal else 2 * r - 4}
    best = 1
    for kind, n, specials, generic in _orbit_types(r):
        if n <= best or n > caps.get(kind, n):
            continue
        if _is_union_of_orbits(counts, specials, generic):
            best = n
    return best


# -- the report ---------------------------------------------------------------


@dataclass
class AutBoundReport:
    """What the generating vectors decide about ``Aut*(S)``.

    ``centralizer_orders[j]`` is ``|Z(G)|`` when certified, ``2|Z(G)|`` when
    only the cap applies, None when undetermined.  ``upper`` is None when
    no side gives a determined bound.
    """

    group_order: int
    h_order: int
    inn_order: int
    center_order: int
    abelian: bool
    centralizer_certified: tuple
    centralizer_orders: tuple
    n_prime_bounds: tuple
    lower: int
    upper: object
    established: bool
    h_exact: bool
    notes: list = field(default_factory=list)

    def as_dict(self):
        c1, c2 = self.centralizer_certified
        return {
            "group_order": self.group_order,
            "h_order": {"value": self.h_order, "certified": self.h_exact},
            "inn_order": self.inn_order,
            "center_order": self.center_order,
            "centralizers": [
                {"certified": c, "bound": b}
                for c, b in zip(self.centralizer_certified, self.centralizer_orders)
            ],
            "n_prime_bounds": list(self.n_prime_bounds),
            "lower": {"value": self.lower, "established": self.established},
            "upper": {"value": self.upper, "determined": self.upper is not None},
            "notes": list(self.notes),
            "both_centralizers_certified": bool(c1 and c2),
        }


def aut_q_bound(G, V1, V2, auts=None):
    """Bounds on ``|Aut*(S)|`` for a surface with ``q = 0``.

    For abelian ``G`` the lower bound is ``|G| |H|`` and it is established
    when both centralizers are certified.  For non-abelian ``G`` only the
    centre is known to act, so the lower bound is ``|Z(G)|``.  The upper
    bound is ``min |N'_j| |Cent_{3-j}|`` over the sides where the
    centralizer order is determined.
    """
    if V1.base_genus or V2.base_genus:
        raise UsageError("bounds are only available for q(S) = 0")
    if V1.group is not G or V2.group is not G:
        raise UsageError("vectors must live in the given group")
    Z = center(G)
    z = len(Z)
    abelian = z == G.order
    H = nielsen_preserving_automorphisms(G, V1, V2, auts)
    inn = G.order // z
    if len(H) % inn:
        raise AssertionError("H does not contain Inn(G)")
    certified = (centralizer_is_center(V1), centralizer_is_center(V2))
    cent = []
    for V, ok in zip((V1, V2), certified):
        if ok:
            cent.append(z)
        elif centralizer_cap_applies(V):
            cent.append(2 * z)
        else:
            cent.append(None)
    nb = (pgl2_orbit_bound(V1), pgl2_orbit_bound(V2))
    terms = [nb[j] * cent[1 - j] for j in (0, 1) if cent[1 - j] is not None]
    upper = min(terms) if terms else None
    notes = []
    if abelian:
        lower = G.order * len(H)
        established = all(certified)
        if not established:
            notes.append("centralizer not certified on both sides; lower bound only")
    else:
        lower = z
        established = False
        notes.append(f"combinatorial |H|/|Inn(G)| = {len(H) // inn} not certified to lift")
    if upper is not None and lower > upper:
        raise AssertionError(f"lower bound {lower} exceeds upper bound {upper}")
    return AutBoundReport(
        group_order=G.order,
        h_order=len(H),
        inn_order=inn,
        center_order=z,
        abelian=abelian,
        centralizer_certified=certified,
        centralizer_orders=tuple(cent),
        n_prime_bounds=nb,
        lower=lower,
        upper=upper,
        established=established,
        h_exact=abelian,
        notes=notes,
    )


# -- exceptional patterns -----------------------------------------------------


@dataclass
class ExceptionReport:
    kind: object  # "I", "II", "III" or None
    searched: bool
    witness: object = None  # GroupHom or None

    @property
    def found(self):
        return self.witness is not None

    def as_dict(self):
        return {
            "pattern": self.kind,
            "searched": self.searched,
            "witness": None if self.witness is None else list(self.witness.images),
        }


def exception_pattern(V):
    """Which of the three special signatures ``V`` has, if any."""
    if V.base_genus >= 2:
        raise UsageError("exceptions concern base genus <= 1")
    o = V.orders
    if V.base_genus == 1:
        return "I" if o == (2, 2) else None
    if len(o) == 3 and o[:2] == (2, 2) and o[2] % 2:
        return "II"
    if len(o) == 4 and o[:2] == (2, 2) and o[2] % 2 and o[3] % 2:
        return "III"
    return None


def detect_exceptions(V, search=True):
    """Match the special signatures and optionally look for the automorphism
    fixing the other entries and sending ``c1 -> c2 -> c2^-1 c1 c2``."""
    kind = exception_pattern(V)
    if kind is None or not search:
        return ExceptionReport(kind, False)
    G = V.group
    h = len(V.hyperbolic)
    c1, c2 = V.branch[0], V.branch[1]
    sources = list(V.entries)
    images = list(V.entries)
    images[h] = c2
    images[h + 1] = G.product(G.inv[c2], c1, c2)
    m = extend_to_homomorphism(G, sources, images, bijective=True)
    if m is None:
        return ExceptionReport(kind, True)
    return ExceptionReport(kind, True, GroupHom(G, G, [m[g] for g in G.generators], m))
