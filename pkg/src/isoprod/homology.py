"""First homology of ``S = (C1 x C2)/G`` and the action of central elements.

The fundamental group of ``S`` is the preimage of the diagonal of ``G x G``
under the product monodromy ``T1 x T2 -> G x G``.  Its cosets are labelled
by elements of ``G`` (``(g1, g2) -> g1^-1 g2``), a Schreier transversal is
grown by BFS, and the abelianised Reidemeister-Schreier relations are
reduced to Smith normal form.
"""

from dataclasses import dataclass

from .errors import UsageError
from .group import center, word_for_element
from .presentation import (
    direct_product_presentation,
    disjoint,
    orbifold_presentation,
    validate_vector,
)
from .snf import IntegerMatrix, abelian_invariants
from .words import inverse


@dataclass
class CosetAction:
    """Right action of presentation generators on ``0..index-1``.

    ``tables[t][k]`` is the coset ``k . t``; ``inverse_tables`` the action of
    ``t^-1``.
    """

    index: int
    tables: list
    inverse_tables: list
    base: int = 0

    def trace(self, word, start=None):
        k = self.base if start is None else start
        for t, s in word:
            k = self.tables[t][k] if s > 0 else self.inverse_tables[t][k]
        return k

    def is_transitive(self):
        seen = {self.base}
        stack = [self.base]
        while stack:
            k = stack.pop()
            for tab in self.tables:
                if tab[k] not in seen:
                    seen.add(tab[k])
                    stack.append(tab[k])
        return len(seen) == self.index


def diagonal_coset_action(P, G, images):
    """Action of ``P``'s generators on the cosets of the preimage of the
    diagonal.

    ``images[t] = (a, b)`` is the image of generator ``t`` in ``G x G``.
    The coset of ``(g1, g2)`` is labelled ``g1^-1 g2`` and ``t`` acts by
    ``g -> a^-1 g b``.
    """
    if len(images) != P.ngens:
        raise UsageError("need one image pair per generator")
    left = G.closure([a for a, _ in images])
    right = G.closure([b for _, b in images])
    if len(left) != G.order or len(right) != G.order:
        raise UsageError("monodromy is not surjective onto G in each factor")
    mul, inv = G.mul, G.inv
    tables = []
    inverse_tables = []
    for a, b in images:
        ai = inv[a]
        tab = [mul[ai][mul[g][b]] for g in range(G.order)]
        itab = [0] * G.order
        for g, h in enumerate(tab):
            itab[h] = g
        tables.append(tab)
        inverse_tables.append(itab)
    return CosetAction(G.order, tables, inverse_tables)


class SchreierData:
    """Schreier transversal and subgroup generators for a transitive action.

    The transversal is a BFS spanning tree from the base coset, using
    positive letters and generators in index order.  Every non-tree edge
    ``(k, t)`` gives the Schreier generator ``rep_k t rep_{k.t}^-1``.
    """

    def __init__(self, ngens, action):
        if not action.is_transitive():
            raise UsageError("coset action is not transitive")
        self.action = action
        self.ngens = ngens
        n = action.index
        reps = [None] * n
        reps[action.base] = ()
        tree = set()
        queue = [action.base]
        i = 0
        while i < len(queue):
            k = queue[i]
            i += 1
            for t in range(ngens):
                kt = action.tables[t][k]
                if reps[kt] is None:
                    reps[kt] = reps[k] + ((t, 1),)
                    tree.add((k, t))
                    queue.append(kt)
        self.transversal = reps
        self.tree = tree
        self.generators = [(k, t) for k in range(n) for t in range(ngens) if (k, t) not in tree]
        self.index_of = {e: i for i, e in enumerate(self.generators)}

    def __len__(self):
        return len(self.generators)

    def generator_word(self, i):
        k, t = self.generators[i]
        kt = self.action.tables[t][k]
        return self.transversal[k] + ((t, 1),) + inverse(self.transversal[kt])

    def rewrite(self, word, start=None):
        """Exponent sums of ``word`` over the Schreier generators, traced
        from ``start``; returns ``(vector, end_coset)``."""
        act = self.action
        k = act.base if start is None else start
        vec = {}
        index_of = self.index_of
        for t, s in word:
            if s > 0:
                idx = index_of.get((k, t))
                k = act.tables[t][k]
            else:
                k = act.inverse_tables[t][k]
                idx = index_of.get((k, t))
            if idx is not None:
                v = vec.get(idx, 0) - (1 if s < 0 else -1)
                if v:
                    vec[idx] = v
                else:
                    del vec[idx]
        return vec, k

    def rewrite_subgroup_word(self, word):
        vec, end = self.rewrite(word)
        if end != self.action.base:
            raise UsageError("word does not lie in the subgroup")
        return vec


def schreier_rewrite(P, action):
    """Schreier data plus the abelianised relation matrix.

    One row per (coset, relator) pair: the exponent sums of the rewritten
    conjugate ``rep_k r rep_k^-1``.  Zero rows and exact duplicates are
    dropped.
    """
    data = SchreierData(P.ngens, action)
    n = len(data)
    seen = {}
    for k in range(action.index):
        for r in P.relators:
            vec, end = data.rewrite(r, start=k)
            if end != k:
                raise UsageError("relator does not act trivially on cosets")
            if not vec:
                continue
            key = tuple(sorted(vec.items()))
            seen.setdefault(key, None)
    rows = []
    for key in seen:
        row = [0] * n
        for j, v in key:
            row[j] = v
        rows.append(row)
    return data, IntegerMatrix(rows, n)


class SurfaceHomology:
    """Everything needed for H1(S, Z) of the surface defined by ``(V1, V2)``."""

    def __init__(self, G, V1, V2):
        for V in (V1, V2):
            if V.group is not G:
                raise UsageError("vectors must live in the given group")
            report = validate_vector(V)
            if not report:
                raise UsageError("invalid generating vector: " + "; ".join(report.failures))
        if not disjoint(V1, V2):
            raise UsageError("generating vectors are not disjoint")
        self.group = G
        self.vectors = (V1, V2)
        T1, f1 = orbifold_presentation(V1)
        T2, f2 = orbifold_presentation(V2)
        self.factors = (T1, T2)
        self.presentation, self.block1, self.block2 = direct_product_presentation(T1, T2)
        images = [(x, 0) for x in V1.entries] + [(0, y) for y in V2.entries]
        self.action = diagonal_coset_action(self.presentation, G, images)
        self.schreier, self.relations = schreier_rewrite(self.presentation, self.action)
        self.h1 = abelian_invariants(self.relations.rows, len(self.schreier))
        self._gen_coords = None

    def generator_coordinates(self):
        if self._gen_coords is None:
            self._gen_coords = [self.h1.coordinates({i: 1}) for i in range(len(self.schreier))]
        return self._gen_coords

    def lift(self, z):
        return lift_central_element(z, self.group, self.vectors[0])

    def acts_trivially(self, z, lift=None):
        """Does ``(z, 1)`` act trivially on H1?  ``lift`` overrides the
        default shortest lift."""
        z1 = self.lift(z) if lift is None else tuple(lift)
        if not z1:
            return True
        z1i = inverse(z1)
        coords = self.generator_coordinates()
        for i in range(len(self.schreier)):
            w = z1 + self.schreier.generator_word(i) + z1i
            vec = self.schreier.rewrite_subgroup_word(w)
            if self.h1.coordinates(vec) != coords[i]:
                return False
        return True

    def trivial_central_set(self):
        return [z for z in center(self.group) if self.acts_trivially(z)]


def homology_h1(G, V1, V2):
    return SurfaceHomology(G, V1, V2).h1


def lift_central_element(z, G, V1):
    """Shortest word in the first-factor orbifold generators mapping to ``z``.

    Letter ``i`` stands for the ``i``-th entry of ``V1``; since the first
    factor's generators come first in the product presentation, the word is
    valid there unchanged.
    """
    if any(G.mul[z][x] != G.mul[x][z] for x in range(G.order)):
        raise UsageError("element is not central")
    return word_for_element(G, z, V1.entries)


def central_action_trivial_set(G, V1, V2):
    """Central elements ``z`` for which ``(z, 1)`` acts trivially on H1(S, Z)."""
    return SurfaceHomology(G, V1, V2).trivial_central_set()
