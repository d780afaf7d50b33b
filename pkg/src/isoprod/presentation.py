"""Hurwitz generating vectors and the presentations built from them."""

from dataclasses import dataclass, field

from .errors import UsageError
from .group import GroupHom
from .words import Presentation, commutator, letter, power, shift
from .words import default_names

__all__ = [
    "GeneratingVector",
    "Presentation",
    "ValidationReport",
    "validate_vector",
    "stabilizer_set",
    "disjoint",
    "orbifold_presentation",
    "direct_product_presentation",
    "long_relation",
]


@dataclass(frozen=True)
class GeneratingVector:
    """``(a1, b1, ..., a_g, b_g; c1, ..., c_r)`` over a finite group.

    ``hyperbolic`` holds the ``2*base_genus`` global monodromies in order
    ``a1, b1, a2, b2, ...``; ``branch`` holds the local monodromies.
    """

    group: object
    base_genus: int
    hyperbolic: tuple = ()
    branch: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "hyperbolic", tuple(self.hyperbolic))
        object.__setattr__(self, "branch", tuple(self.branch))
        if self.base_genus < 0:
            raise UsageError("base genus must be >= 0")
        if len(self.hyperbolic) != 2 * self.base_genus:
            raise UsageError("need 2*base_genus hyperbolic entries")
        for x in self.entries:
            if not 0 <= x < self.group.order:
                raise UsageError(f"element {x} not in group")

    @property
    def entries(self):
        return self.hyperbolic + self.branch

    @property
    def orders(self):
        return tuple(self.group.element_order(c) for c in self.branch)

    @property
    def signature(self):
        return (self.base_genus,) + self.orders

    def __repr__(self):
        G = self.group
        names = ", ".join(G.element_name(x) for x in self.entries)
        return f"GeneratingVector(g'={self.base_genus}; [{names}])"


def long_relation(V):
    """``prod [a_i, b_i] * c_1 ... c_r`` with ``[a, b] = a b a^-1 b^-1``."""
    G = V.group
    x = 0
    h = V.hyperbolic
    for i in range(V.base_genus):
        a, b = h[2 * i], h[2 * i + 1]
        x = G.product(x, a, b, G.inv[a], G.inv[b])
    for c in V.branch:
        x = G.mul[x][c]
    return x


@dataclass
class ValidationReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def __bool__(self):
        return self.ok


def validate_vector(V):
    G = V.group
    report = ValidationReport()
    if len(G.closure(V.entries)) != G.order:
        report.failures.append("does not generate the group")
    if long_relation(V) != 0:
        report.failures.append("long relation fails")
    for i, c in enumerate(V.branch):
        if G.element_order(c) < 2:
            report.failures.append(f"branch entry {i + 1} has order 1")
    return report


def stabilizer_set(V):
    """All conjugates of all powers of the branch entries (identity included)."""
    G = V.group
    powers = set()
    for c in V.branch:
        x = c
        while True:
            powers.add(x)
            if x == 0:
                break
            x = G.mul[x][c]
    if not V.branch:
        powers.add(0)
    return {G.conj(h, x) for x in powers for h in range(G.order)}


def disjoint(V1, V2):
    if V1.group is not V2.group:
        raise UsageError("vectors live in different groups")
    return stabilizer_set(V1) & stabilizer_set(V2) == {0}


def orbifold_presentation(V):
    """Orbifold group of ``V`` together with its monodromy map onto ``G``.

    Generators follow the entries of ``V``.  Relators are ``c_i^{m_i}`` for
    the branch generators followed by the long relator, built from
    ``a b a^-1 b^-1`` blocks and the branch generators.
    """
    h = V.base_genus
    n = 2 * h + len(V.branch)
    rels = []
    long_rel = ()
    for i in range(h):
        long_rel += commutator(letter(2 * i), letter(2 * i + 1))
    for k, c in enumerate(V.branch):
        i = 2 * h + k
        long_rel += letter(i)
        rels.append(power(i, V.group.element_order(c)))
    if n:
        rels.append(long_rel)
    names = []
    for i in range(h):
        names += [f"a{i + 1}", f"b{i + 1}"]
    names += [f"c{k + 1}" for k in range(len(V.branch))]
    P = Presentation(n, rels, names)
    return P, GroupHom(P, V.group, V.entries)


def direct_product_presentation(P1, P2):
    """Presentation of ``P1 x P2``.

    Returns ``(P, inc1, inc2)`` where ``inc_j`` lists the generator indices
    of the ``j``-th factor inside ``P``.
    """
    n1, n2 = P1.ngens, P2.ngens
    rels = list(P1.relators) + [shift(r, n1) for r in P2.relators]
    for i in range(n1):
        for j in range(n2):
            rels.append(commutator(letter(i), letter(n1 + j)))
    names = list(P1.gen_names) + list(P2.gen_names)
    if len(set(names)) != len(names):
        names = [f"{nm}_1" for nm in P1.gen_names] + [f"{nm}_2" for nm in P2.gen_names]
    P = Presentation(n1 + n2, rels, names or default_names(0))
    return P, list(range(n1)), list(range(n1, n1 + n2))
