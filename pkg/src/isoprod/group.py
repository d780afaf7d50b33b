"""Concrete finite groups.

Elements of a :class:`FiniteGroup` are the integers ``0..order-1`` with
``0`` the identity; the full multiplication table is stored.  Groups can be
built from permutations, from abelian invariants, or from a finite
presentation by coset enumeration.

Permutations compose right to left: ``(p*q)(i) = p(q(i))``.
"""

import os
import re
from collections import deque
from itertools import product

from . import _kernels
from .errors import ResourceError, UsageError
from .words import Presentation, default_names, word_to_string

DEFAULT_ELEMENT_CAP = 10_000
DEFAULT_COSET_CAP = 100_000
DEFAULT_AUT_CAP = 64


def _env_cap(name, default):
    value = os.environ.get(name)
    return int(value) if value else default


class FiniteGroup:
    """A finite group given by its multiplication table.

    Parameters
    ----------
    mul : sequence of sequences
        ``mul[a][b]`` is the index of ``a*b``.  Index 0 must be the identity.
    generators : sequence of int
        Elements that generate the group, in display order.
    gen_names : sequence of str, optional
    labels : sequence of str, optional
        Display name of each element.  When absent, elements are named by
        their shortest word in the generators.
    """

    def __init__(self, mul, generators, gen_names=None, labels=None, name=None, check=True):
        self.mul = tuple(tuple(row) for row in mul)
        self.order = len(self.mul)
        self.identity = 0
        self.generators = tuple(generators)
        if gen_names is None:
            gen_names = default_names(len(self.generators), "g")
        self.gen_names = tuple(gen_names)
        self.labels = tuple(labels) if labels is not None else None
        self.name = name
        n = self.order
        inv = [None] * n
        for a in range(n):
            row = self.mul[a]
            for b in range(n):
                if row[b] == 0:
                    inv[a] = b
                    break
        self.inv = tuple(inv)
        self._words = {}
        self._orders = None
        self._classes = None
        if check:
            self.check_axioms()

    def __repr__(self):
        label = self.name or "FiniteGroup"
        return f"<{label} of order {self.order}>"

    def __len__(self):
        return self.order

    # -- axioms ------------------------------------------------------------

    def check_axioms(self, samples=20000):
        n = self.order
        mul = self.mul
        if n == 0:
            raise UsageError("group must be nonempty")
        for row in mul:
            if len(row) != n:
                raise UsageError("multiplication table must be square")
        for a in range(n):
            if mul[0][a] != a or mul[a][0] != a:
                raise UsageError("element 0 is not a two-sided identity")
            if self.inv[a] is None or mul[self.inv[a]][a] != 0:
                raise UsageError(f"element {a} has no inverse")
        if n <= 64:
            for a in range(n):
                ma = mul[a]
                for b in range(n):
                    ab = ma[b]
                    mb = mul[b]
                    mab = mul[ab]
                    for c in range(n):
                        if mab[c] != ma[mb[c]]:
                            raise UsageError("multiplication is not associative")
        else:
            import random

            rng = random.Random(0)
            for _ in range(samples):
                a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise UsageError("multiplication is not associative")
        for g in self.generators:
            if not 0 <= g < n:
                raise UsageError(f"generator {g} out of range")
        if len(self.closure(self.generators)) != n:
            raise UsageError("generators do not generate the group")

    # -- arithmetic --------------------------------------------------------

    def product(self, *elements):
        x = 0
        for e in elements:
            x = self.mul[x][e]
        return x

    def pow(self, x, k):
        if k < 0:
            x, k = self.inv[x], -k
        r = 0
        for _ in range(k):
            r = self.mul[r][x]
        return r

    def conj(self, h, x):
        """``h x h^-1``."""
        return self.mul[self.mul[h][x]][self.inv[h]]

    def element_order(self, x):
        if self._orders is None:
            orders = []
            for y in range(self.order):
                k, z = 1, y
                while z != 0:
                    z = self.mul[z][y]
                    k += 1
                orders.append(k)
            self._orders = tuple(orders)
        return self._orders[x]

    def evaluate(self, word, images=None):
        """Evaluate a word whose letters index ``images`` (default: the
        stored generators)."""
        if images is None:
            images = self.generators
        mul, inv = self.mul, self.inv
        x = 0
        for g, s in word:
            y = images[g]
            x = mul[x][y if s > 0 else inv[y]]
        return x

    def closure(self, elements):
        """The subgroup generated by ``elements`` as a set."""
        seen = {0}
        queue = deque([0])
        gens = [g for g in set(elements)]
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.mul[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def is_abelian(self):
        gens = self.generators
        return all(self.mul[a][b] == self.mul[b][a] for a in gens for b in gens)

    def class_of(self, x):
        """Smallest index in the conjugacy class of ``x``."""
        if self._classes is None:
            rep = [None] * self.order
            for y in range(self.order):
                if rep[y] is not None:
                    continue
                orbit = {self.conj(h, y) for h in range(self.order)}
                m = min(orbit)
                for z in orbit:
                    rep[z] = m
            self._classes = tuple(rep)
        return self._classes[x]

    # -- words and names ---------------------------------------------------

    def word_table(self, gens=None):
        """Shortest words (BFS, inverse letters allowed) for every element.

        Letters index ``gens``; ties are broken by generator order with the
        positive letter first.
        """
        gens = tuple(self.generators if gens is None else gens)
        table = self._words.get(gens)
        if table is None:
            table = {0: ()}
            queue = deque([0])
            while queue:
                x = queue.popleft()
                wx = table[x]
                for a, g in enumerate(gens):
                    for s, y in ((1, g), (-1, self.inv[g])):
                        z = self.mul[x][y]
                        if z not in table:
                            table[z] = wx + ((a, s),)
                            queue.append(z)
            self._words[gens] = table
        return table

    def element_name(self, x):
        if self.labels is not None:
            return self.labels[x]
        return word_to_string(self.word_table()[x], self.gen_names)

    def element_names(self):
        return [self.element_name(x) for x in range(self.order)]

    def index_of_name(self, name):
        for x in range(self.order):
            if self.element_name(x) == name:
                return x
        raise KeyError(name)


# -- construction helpers ---------------------------------------------------


def _table_from_actions(n, actions):
    """Multiplication table of the group whose right-regular action is given
    by ``actions[a][x] = x * gen_a`` on ``0..n-1`` (0 the identity)."""
    parent = [None] * n
    via = [None] * n
    order = [0]
    seen = [False] * n
    seen[0] = True
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for a, act in enumerate(actions):
            y = act[x]
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                via[y] = a
                order.append(y)
    if len(order) != n:
        raise UsageError("generators do not act transitively")
    cols = [None] * n
    cols[0] = list(range(n))
    for b in order[1:]:
        pc = cols[parent[b]]
        act = actions[via[b]]
        cols[b] = [act[v] for v in pc]
    return [[cols[b][a] for b in range(n)] for a in range(n)]


def parse_cycles(text, degree=None):
    """Parse cycle notation into a list of 1-based cycles.

    Accepts ``(1 2 3)(4 5)``, ``(1,2,3)`` and the compact ``(123)`` form
    (single-digit points only).
    """
    text = text.strip()
    if text in ("", "()", "id", "1"):
        return []
    if not re.fullmatch(r"(\([\d\s,]*\))+", text):
        raise UsageError(f"bad cycle notation: {text!r}")
    cycles = []
    for body in re.findall(r"\(([^)]*)\)", text):
        body = body.strip()
        if not body:
            continue
        if re.search(r"[\s,]", body):
            pts = [int(t) for t in re.split(r"[\s,]+", body) if t]
        else:
            pts = [int(ch) for ch in body]
        cycles.append(tuple(pts))
    return cycles


def _perm_from_cycles(cycles, degree):
    p = list(range(degree))
    seen = set()
    for cyc in cycles:
        for pt in cyc:
            if not 1 <= pt <= degree:
                raise UsageError(f"point {pt} outside 1..{degree}")
            if pt in seen:
                raise UsageError(f"point {pt} repeated in cycle notation")
            seen.add(pt)
        for i, pt in enumerate(cyc):
            p[pt - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(p)


def cycle_string(perm):
    seen = set()
    parts = []
    compact = len(perm) < 10
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = perm[j]
        parts.append("(" + ("" if compact else " ").join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def as_permutation(value, degree):
    """A permutation from cycle text, a list of 1-based cycles, or a 0-based
    image tuple."""
    if isinstance(value, str):
        return _perm_from_cycles(parse_cycles(value), degree)
    value = list(value)
    if value and all(isinstance(c, (tuple, list)) for c in value):
        return _perm_from_cycles([tuple(c) for c in value], degree)
    if not value:
        return tuple(range(degree))
    if all(isinstance(v, int) for v in value) and sorted(value) == list(range(degree)):
        return tuple(value)  # 0-based image tuple
    raise UsageError(f"cannot read permutation {value!r}")


def group_from_permutations(degree, gens, names=None, cap=None, name=None):
    """Closure of permutations of ``{1..degree}`` under composition."""
    if degree < 1:
        raise UsageError("degree must be positive")
    cap = _env_cap("ISOPROD_ELEMENT_CAP", DEFAULT_ELEMENT_CAP) if cap is None else cap
    perms = [as_permutation(g, degree) for g in gens]
    for p in perms:
        if sorted(p) != list(range(degree)):
            raise UsageError("not a bijection")
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    actions = [[] for _ in perms]
    i = 0
    while i < len(elements):
        x = elements[i]
        for a, g in enumerate(perms):
            y = tuple(x[g[k]] for k in range(degree))
            j = index.get(y)
            if j is None:
                if len(elements) >= cap:
                    raise ResourceError(f"permutation group larger than cap {cap}")
                j = len(elements)
                index[y] = j
                elements.append(y)
            actions[a].append(j)
        i += 1
    mul = _table_from_actions(len(elements), actions)
    gen_idx = [index[p] for p in perms]
    if names is None:
        names = [cycle_string(p) for p in perms]
    labels = [cycle_string(p) for p in elements]
    G = FiniteGroup(mul, gen_idx, names, labels, name=name, check=len(elements) <= 64)
    G.permutations = tuple(elements)
    G.degree = degree
    return G


def group_from_abelian_invariants(factors, cap=None, names=None, name=None):
    """``Z/d1 x Z/d2 x ...`` with the unit vectors as generators."""
    cap = _env_cap("ISOPROD_ELEMENT_CAP", DEFAULT_ELEMENT_CAP) if cap is None else cap
    factors = [int(d) for d in factors]
    for d in factors:
        if d < 2:
            raise UsageError("abelian factors must be >= 2")
    n = 1
    for d in factors:
        n *= d
        if n > cap:
            raise ResourceError(f"abelian group larger than cap {cap}")
    elements = list(product(*[range(d) for d in factors]))
    index = {e: i for i, e in enumerate(elements)}
    mul = [
        [index[tuple((u + v) % d for u, v, d in zip(a, b, factors))] for b in elements]
        for a in elements
    ]
    gens = []
    for k in range(len(factors)):
        e = [0] * len(factors)
        e[k] = 1
        gens.append(index[tuple(e)])
    if names is None:
        names = default_names(len(factors), "e")
    if len(factors) == 1:
        labels = [str(e[0]) for e in elements]
    else:
        labels = ["(" + ",".join(map(str, e)) + ")" for e in elements]
    G = FiniteGroup(mul, gens, names, labels, name=name, check=n <= 64)
    G.tuples = tuple(elements)
    G.factors = tuple(factors)
    return G


def direct_product(G, H, name=None):
    """``G x H`` with element ``(g, h)`` stored at index ``g*|H| + h``."""
    m = H.order
    n = G.order * m
    mul = [None] * n
    for g1 in range(G.order):
        for h1 in range(m):
            row = []
            gm, hm = G.mul[g1], H.mul[h1]
            for g2 in range(G.order):
                base = gm[g2] * m
                row.extend(base + hm[h2] for h2 in range(m))
            mul[g1 * m + h1] = row
    gens = [g * m for g in G.generators] + list(H.generators)
    names = list(G.gen_names) + list(H.gen_names)
    labels = [f"({G.element_name(g)},{H.element_name(h)})" for g in range(G.order) for h in range(m)]
    P = FiniteGroup(mul, gens, names, labels, name=name, check=n <= 64)
    P.factors_groups = (G, H)
    return P


def pair(P, g, h):
    """Index of ``(g, h)`` in a group built by :func:`direct_product`."""
    G, H = P.factors_groups
    return g * H.order + h


# -- Todd-Coxeter -------------------------------------------------------------


class _CosetTable:
    """HLT coset enumeration over the trivial subgroup."""

    def __init__(self, ngens, relators, cap):
        self.ncols = 2 * ngens
        self.rels = [[2 * g + (0 if s > 0 else 1) for g, s in r] for r in relators]
        self.cap = cap
        self.table = [[None] * self.ncols]
        self.parent = [0]

    def rep(self, c):
        p = self.parent
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def live(self, c):
        return self.parent[c] == c

    def define(self, a, x):
        if len(self.table) >= self.cap:
            raise ResourceError(
                f"coset enumeration exceeded {self.cap} cosets (group may be infinite)"
            )
        b = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(b)
        self.table[a][x] = b
        self.table[b][x ^ 1] = a

    def merge(self, k, l, queue):
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        lo, hi = min(k, l), max(k, l)
        self.parent[hi] = lo
        queue.append(hi)

    def coincidence(self, a, b):
        table = self.table
        queue = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = table[e][x]
                if f is None:
                    continue
                table[f][x ^ 1] = None
                e1, f1 = self.rep(e), self.rep(f)
                if table[e1][x] is not None:
                    self.merge(f1, table[e1][x], queue)
                elif table[f1][x ^ 1] is not None:
                    self.merge(e1, table[f1][x ^ 1], queue)
                else:
                    table[e1][x] = f1
                    table[f1][x ^ 1] = e1

    def scan_and_fill(self, a, w):
        table = self.table
        f, b = a, a
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] is not None:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] is not None:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])

    def run(self):
        a = 0
        while a < len(self.table):
            for w in self.rels:
                if not self.live(a):
                    break
                self.scan_and_fill(a, w)
            if self.live(a):
                for x in range(self.ncols):
                    if self.table[a][x] is None:
                        self.define(a, x)
            a += 1
        return self.standardized()

    def standardized(self):
        """Live cosets renumbered in BFS order from coset 0."""
        table = self.table
        order = [0]
        num = {0: 0}
        i = 0
        while i < len(order):
            c = order[i]
            i += 1
            for x in range(self.ncols):
                d = self.rep(table[c][x])
                if d not in num:
                    num[d] = len(order)
                    order.append(d)
        return [[num[self.rep(table[c][x])] for x in range(self.ncols)] for c in order]


def coset_enumeration(P, cap=None):
    """Coset table of the trivial subgroup of ``P`` (rows: cosets; columns:
    ``g0, g0^-1, g1, g1^-1, ...``)."""
    cap = _env_cap("ISOPROD_COSET_CAP", DEFAULT_COSET_CAP) if cap is None else cap
    return _CosetTable(P.ngens, P.relators, cap).run()


def realize_presentation(P, cap=None, name=None):
    """Realize a finite presentation as a concrete group.

    Returns ``(G, hom)`` where ``hom`` maps presentation generator ``i`` to
    ``G.generators[i]`` and is an isomorphism.
    """
    table = coset_enumeration(P, cap)
    n = len(table)
    actions = [[table[c][2 * g] for c in range(n)] for g in range(P.ngens)]
    if P.ngens == 0:
        mul = [[0]]
    else:
        mul = _table_from_actions(n, actions)
    gens = [table[0][2 * g] for g in range(P.ngens)]
    G = FiniteGroup(mul, gens, P.gen_names, name=name, check=n <= 64)
    G.presentation = P
    hom = GroupHom(P, G, gens)
    return G, hom


# -- homomorphisms ------------------------------------------------------------


def bfs_tree(G, gens):
    """``(element, parent, gen_pos)`` triples covering ``<gens>`` in BFS order
    using positive letters only."""
    seen = {0}
    order = [0]
    tree = []
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for a, g in enumerate(gens):
            y = G.mul[x][g]
            if y not in seen:
                seen.add(y)
                order.append(y)
                tree.append((y, x, a))
    return tree


def extend_to_homomorphism(G, sources, images, target=None, bijective=False):
    """The homomorphism ``<sources> = G -> target`` sending ``sources[i]`` to
    ``images[i]``, as a full image tuple, or None if no such map exists."""
    target = G if target is None else target
    if target is not G:
        raise UsageError("only endomorphisms are supported")
    sources = list(sources)
    tree = bfs_tree(G, sources)
    if len(tree) + 1 != G.order:
        raise UsageError("sources do not generate the group")
    found = _kernels.search_endomorphisms(
        G.mul, sources, tree, [[im] for im in images], bijective
    )
    return found[0] if found else None


class GroupHom:
    """A homomorphism from a presentation or finite group into a finite group.

    ``images[i]`` is the image of source generator ``i``.  Construction checks
    that every relator (presentation source) maps to the identity, or that
    the assignment extends to a homomorphism (finite source).
    """

    def __init__(self, source, target, images, mapping=None):
        self.source = source
        self.target = target
        self.images = tuple(images)
        if isinstance(source, Presentation):
            if len(self.images) != source.ngens:
                raise UsageError("need one image per generator")
            for r in source.relators:
                if target.evaluate(r, self.images) != 0:
                    raise UsageError("relator does not map to the identity")
            self.mapping = None
        else:
            if len(self.images) != len(source.generators):
                raise UsageError("need one image per generator")
            if mapping is None:
                if source is not target:
                    raise UsageError("finite-source homomorphisms must be endomorphisms")
                mapping = extend_to_homomorphism(source, source.generators, self.images)
                if mapping is None:
                    raise UsageError("images do not define a homomorphism")
            self.mapping = tuple(mapping)

    def __call__(self, x):
        if self.mapping is None:
            return self.target.evaluate(x, self.images)
        return self.mapping[x]

    def evaluate(self, word):
        return self.target.evaluate(word, self.images)

    def compose(self, other):
        """``self o other`` for endomorphisms of one finite group."""
        m = tuple(self.mapping[other.mapping[x]] for x in range(len(other.mapping)))
        return GroupHom(other.source, self.target, [m[g] for g in other.source.generators], m)

    def __eq__(self, other):
        return isinstance(other, GroupHom) and self.mapping == other.mapping and \
            self.images == other.images

    def __hash__(self):
        return hash((self.images, self.mapping))


# -- structure ----------------------------------------------------------------


def center(G):
    mul = G.mul
    return [x for x in range(G.order) if all(mul[x][y] == mul[y][x] for y in range(G.order))]


def irredundant_generators(G):
    """Greedy subsequence of ``G.generators`` that still generates ``G``."""
    chosen = []
    current = {0}
    for g in G.generators:
        if g not in current:
            chosen.append(g)
            current = G.closure(chosen)
    return chosen


def automorphisms(G, cap=None):
    """All automorphisms of ``G`` by brute force over generator images.

    Candidate images of each generator are restricted to elements of the same
    order; each candidate tuple is extended along a Cayley-graph spanning tree
    and checked for multiplicativity and bijectivity.
    """
    cap = _env_cap("ISOPROD_AUT_CAP", DEFAULT_AUT_CAP) if cap is None else cap
    if G.order > cap:
        raise ResourceError(f"automorphism enumeration limited to order <= {cap}")
    gens = irredundant_generators(G)
    tree = bfs_tree(G, gens)
    cands = [
        [y for y in range(G.order) if G.element_order(y) == G.element_order(g)] for g in gens
    ]
    maps = _kernels.search_endomorphisms(G.mul, gens, tree, cands, True)
    return [GroupHom(G, G, [m[g] for g in G.generators], m) for m in maps]


def inner_automorphism(G, h):
    m = tuple(G.conj(h, x) for x in range(G.order))
    return GroupHom(G, G, [m[g] for g in G.generators], m)


def word_for_element(G, target, gens=None):
    """A shortest word (inverse letters allowed) evaluating to ``target``."""
    return G.word_table(gens)[target]
