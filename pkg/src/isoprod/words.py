"""Words over a generating set and abstract presentations.

A word is a tuple of ``(generator_index, sign)`` pairs with ``sign`` in
``{+1, -1}``.  Plain tuples keep words hashable and cheap to concatenate.
"""

from dataclasses import dataclass, field

from .errors import UsageError


def letter(gen, sign=1):
    return ((gen, sign),)


def power(gen, k):
    """The word ``gen^k``."""
    s = 1 if k >= 0 else -1
    return ((gen, s),) * abs(k)


def inverse(word):
    return tuple((g, -s) for g, s in reversed(word))


def commutator(a, b):
    """``a b a^-1 b^-1`` for words ``a`` and ``b``."""
    return a + b + inverse(a) + inverse(b)


def free_reduce(word):
    out = []
    for g, s in word:
        if out and out[-1] == (g, -s):
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def shift(word, offset):
    return tuple((g + offset, s) for g, s in word)


def exponent_sums(word, ngens):
    v = [0] * ngens
    for g, s in word:
        v[g] += s
    return v


def word_to_string(word, names):
    """Render with powers collapsed, e.g. ``x^2*y^-1``.

    Single-character names are juxtaposed (``x^2y``), longer ones joined by
    ``*``.
    """
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        g, s = word[i]
        j = i
        while j < len(word) and word[j] == (g, s):
            j += 1
        k = (j - i) * s
        parts.append(names[g] if k == 1 else f"{names[g]}^{k}")
        i = j
    sep = "" if all(len(n) == 1 for n in names) else "*"
    return sep.join(parts)


def default_names(n, stem="x"):
    return [f"{stem}{i + 1}" for i in range(n)]


@dataclass(frozen=True)
class Presentation:
    """Generators ``0..ngens-1`` and relator words."""

    ngens: int
    relators: tuple = ()
    gen_names: tuple = field(default=None)

    def __post_init__(self):
        rels = tuple(tuple((int(g), int(s)) for g, s in r) for r in self.relators)
        for r in rels:
            for g, s in r:
                if not 0 <= g < self.ngens or s not in (1, -1):
                    raise UsageError(f"relator letter {(g, s)} out of range")
        object.__setattr__(self, "relators", rels)
        names = self.gen_names
        if names is None:
            names = default_names(self.ngens)
        names = tuple(names)
        if len(names) != self.ngens:
            raise UsageError("need one name per generator")
        object.__setattr__(self, "gen_names", names)

    def relator_strings(self):
        return [word_to_string(r, self.gen_names) for r in self.relators]
