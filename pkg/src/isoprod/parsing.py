"""Text input: group elements, words, and datum files.

A datum file has three sections::

    # comments start with '#'
    [group]
    fp 3 x y z          # or: perm <degree> / abelian d1 d2 ...
    x^4
    y^2
    z^2
    [x,y]
    [y,z]
    [z,x]y

    [vector1]
    genus 0             # optional, default 0; then 2*genus hyperbolic entries
    z
    z
    x
    x^-1

    [vector2]
    ...

For ``perm <degree>`` the lines after the header are generators in cycle
notation; for ``fp`` they are relators.  ``abelian`` takes no further lines.
Vector entries are one per line, written as cycles (``(1 2 3)(4 5)``),
tuples (``(1,0)``) or words in the generator names (``x^2y``, ``(xy)^-1``,
``[x,y]`` meaning ``x y x^-1 y^-1``).
"""

import re
from dataclasses import dataclass

from .errors import ParseError, UsageError
from .group import (
    as_permutation,
    group_from_abelian_invariants,
    group_from_permutations,
    realize_presentation,
)
from .presentation import GeneratingVector
from .words import Presentation, commutator, default_names, inverse

_NUM = re.compile(r"-?\d+")


@dataclass
class Datum:
    """A group with two generating vectors, ready for the computations."""

    group: object
    V1: GeneratingVector
    V2: GeneratingVector
    name: str = ""


# -- words --------------------------------------------------------------------


class _WordParser:
    def __init__(self, text, names, line=None, col0=1):
        self.text = text
        self.names = sorted(((n, i) for i, n in enumerate(names)), key=lambda p: -len(p[0]))
        self.pos = 0
        self.line = line
        self.col0 = col0

    def error(self, msg):
        raise ParseError(msg, self.line, self.col0 + self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t*":
            self.pos += 1

    def parse(self):
        w = self.sequence()
        self.skip()
        if self.pos != len(self.text):
            self.error(f"unexpected {self.text[self.pos]!r}")
        return w

    def sequence(self):
        word = ()
        while True:
            self.skip()
            if self.pos >= len(self.text) or self.text[self.pos] in ")],":
                return word
            word += self.factor()

    def factor(self):
        t = self.text
        c = t[self.pos]
        if c == "(":
            self.pos += 1
            w = self.sequence()
            self.expect(")")
        elif c == "[":
            self.pos += 1
            a = self.sequence()
            self.expect(",")
            b = self.sequence()
            self.expect("]")
            w = commutator(a, b)
        else:
            for name, i in self.names:
                if t.startswith(name, self.pos):
                    self.pos += len(name)
                    w = ((i, 1),)
                    break
            else:
                if c == "1":
                    self.pos += 1
                    w = ()
                else:
                    self.error(f"unknown generator at {t[self.pos:]!r}")
        if self.pos < len(t) and t[self.pos] == "^":
            self.pos += 1
            m = _NUM.match(t, self.pos)
            if not m:
                self.error("expected an integer exponent")
            self.pos = m.end()
            k = int(m.group())
            w = (inverse(w) if k < 0 else w) * abs(k)
        return w

    def expect(self, ch):
        self.skip()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1


def parse_word(text, names, line=None, column=1):
    """Parse a word over ``names`` into a tuple of ``(index, sign)`` letters."""
    return _WordParser(text.strip(), names, line, column).parse()


# -- elements -----------------------------------------------------------------


def _split_top(text):
    """Split ``text`` at commas not nested in brackets."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def parse_element(G, text, line=None, column=1):
    """Element of ``G`` written in the notation natural for how ``G`` was built."""
    text = text.strip()
    if not text:
        raise ParseError("empty element", line, column)
    try:
        if hasattr(G, "permutations"):
            if not hasattr(G, "_perm_index"):
                G._perm_index = {p: i for i, p in enumerate(G.permutations)}
            if text in ("1", "()"):
                return 0
            perm = as_permutation(text, G.degree)
            if perm not in G._perm_index:
                raise ParseError(f"{text} is not in the group", line, column)
            return G._perm_index[perm]
        if hasattr(G, "tuples"):
            inner = text[1:-1] if text.startswith("(") and text.endswith(")") else text
            if re.fullmatch(r"[\s\d,-]+", inner):
                values = [int(v) for v in inner.split(",")]
                if len(values) != len(G.factors):
                    if text == "1":
                        return 0
                    raise ParseError(f"expected {len(G.factors)} coordinates", line, column)
                return G.tuples.index(tuple(v % d for v, d in zip(values, G.factors)))
        if hasattr(G, "factors_groups"):
            if text.startswith("(") and text.endswith(")"):
                parts = _split_top(text[1:-1])
                if len(parts) == 2:
                    A, B = G.factors_groups
                    a = parse_element(A, parts[0], line, column)
                    b = parse_element(B, parts[1], line, column)
                    return a * B.order + b
    except UsageError as exc:
        raise ParseError(str(exc), line, column) from exc
    return G.evaluate(parse_word(text, G.gen_names, line, column))


# -- datum files ----------------------------------------------------------------


def _strip_comment(line):
    i = line.find("#")
    return line if i < 0 else line[:i]


def _sections(text):
    sections = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).rstrip()
        col = len(line) - len(line.lstrip()) + 1
        line = line.strip()
        if not line:
            continue
        m = re.fullmatch(r"\[(\w+)\]", line)
        if m:
            current = m.group(1).lower()
            if current not in ("group", "vector1", "vector2"):
                raise ParseError(f"unknown section [{current}]", lineno, col)
            if current in sections:
                raise ParseError(f"duplicate section [{current}]", lineno, col)
            sections[current] = []
            continue
        if current is None:
            raise ParseError("content before the first section", lineno, col)
        sections[current].append((lineno, col, line))
    for s in ("group", "vector1", "vector2"):
        if s not in sections:
            raise ParseError(f"missing section [{s}]")
    return sections


def parse_group(lines, cap=None):
    """Build a group from the ``[group]`` section lines ``(lineno, col, text)``."""
    if not lines:
        raise ParseError("empty [group] section")
    lineno, col, head = lines[0]
    fields = head.split()
    kind, args = fields[0].lower(), fields[1:]
    try:
        if kind == "perm":
            if len(args) != 1 or not args[0].isdigit():
                raise ParseError("usage: perm <degree>", lineno, col)
            degree = int(args[0])
            gens = []
            for ln, c, text in lines[1:]:
                try:
                    gens.append(as_permutation(text, degree))
                except UsageError as exc:
                    raise ParseError(str(exc), ln, c) from exc
            if not gens:
                gens = [tuple(range(degree))]
            return group_from_permutations(degree, gens, cap=cap)
        if kind == "abelian":
            if len(lines) > 1:
                raise ParseError("abelian takes no further lines", lines[1][0], lines[1][1])
            if not all(a.isdigit() and int(a) > 0 for a in args):
                raise ParseError("usage: abelian d1 d2 ... (positive integers)", lineno, col)
            # Z/1 factors are dropped; no factors at all is the trivial group
            return group_from_abelian_invariants([int(a) for a in args if int(a) > 1], cap=cap)
        if kind == "fp":
            if not args or not args[0].isdigit():
                raise ParseError("usage: fp <ngens> [names ...]", lineno, col)
            n = int(args[0])
            names = args[1:] or default_names(n, "x")
            if len(names) != n:
                raise ParseError(f"expected {n} generator names", lineno, col)
            rels = []
            for ln, c, text in lines[1:]:
                for part in _split_top(text):
                    if part:
                        rels.append(parse_word(part, names, ln, c))
            G, _ = realize_presentation(Presentation(n, rels, names), cap=cap)
            return G
    except UsageError as exc:
        raise ParseError(str(exc), lineno, col) from exc
    raise ParseError(f"unknown group kind {kind!r} (perm, abelian, fp)", lineno, col)


def parse_vector(G, lines):
    genus = 0
    entries = []
    for lineno, col, text in lines:
        m = re.fullmatch(r"genus\s+(\S+)", text)
        if m:
            if entries:
                raise ParseError("genus must precede the entries", lineno, col)
            if not m.group(1).isdigit():
                raise ParseError("genus must be a non-negative integer", lineno, col)
            genus = int(m.group(1))
            continue
        entries.append(parse_element(G, text, lineno, col))
    h = 2 * genus
    if len(entries) < h:
        raise ParseError(f"genus {genus} needs {h} hyperbolic entries")
    return GeneratingVector(G, genus, entries[:h], entries[h:])


def parse_datum(text, name=""):
    sections = _sections(text)
    G = parse_group(sections["group"])
    V1 = parse_vector(G, sections["vector1"])
    V2 = parse_vector(G, sections["vector2"])
    return Datum(G, V1, V2, name)


def load_datum(path):
    with open(path, encoding="utf-8") as fh:
        return parse_datum(fh.read(), name=str(path))
