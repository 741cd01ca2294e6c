"""Closure of string relations under composition, tables, and the order.

Words are read left to right ("CF" = C first, then F). Two words are equated
when their relation matrices coincide, and each distinct matrix is named by
the lexicographically first shortest word that produces it: candidates are
enumerated by length and, within a length, by generator position, so the
first word to hit a new image is that image's representative.
"""

import os

import numpy as np

from .errors import ClosureTooLargeError, ValidationError
from .netcore import RelationMatrix, permutation_order

DEFAULT_MAX_CLOSURE = 100_000


def _closure_cap(max_elements):
    if max_elements is not None:
        return int(max_elements)
    env = os.environ.get("RELALG_MAX_CLOSURE")
    return int(env) if env else DEFAULT_MAX_CLOSURE


def _bool_compose(a, b):
    return (a.astype(np.uint8) @ b.astype(np.uint8)) > 0


def _alphabet(net, include_transposes):
    letters = [(s.name, np.asarray(s.cells, dtype=bool)) for s in net.slices]
    if include_transposes:
        letters += [("t" + s.name, np.asarray(s.cells.T, dtype=bool)) for s in net.slices]
    return letters


class StringSet:
    """The distinct string relations of a network, closed under composition."""

    def __init__(self, actors, alphabet, words, images, generator_elements=None):
        self.actors = tuple(actors)
        self.alphabet = tuple(alphabet)          # letter labels, in lex order
        self.words = tuple(tuple(w) for w in words)
        self.images = tuple(images)              # one boolean matrix per word
        self.st = tuple("".join(w) for w in self.words)
        if generator_elements is None:
            pos = {w: i for i, w in enumerate(self.words)}
            generator_elements = [(lbl, pos.get((lbl,))) for lbl in self.alphabet]
        self.generator_elements = tuple(generator_elements)

    @property
    def order(self):
        return len(self.st)

    def word_tables(self):
        """Images wrapped as labeled relations (one per representative)."""
        return [
            RelationMatrix(label, self.actors, img)
            for label, img in zip(self.st, self.images)
        ]


def generate_strings(net, include_transposes=False, max_elements=None):
    """Breadth-first closure of the generator slices under composition.

    Seeds with the generators (and their transposes when asked), then
    right-multiplies every known representative by every generator. A word
    becomes a representative iff its image matrix was not seen before.
    """
    cap = _closure_cap(max_elements)
    letters = _alphabet(net, include_transposes)
    words = []
    images = []
    seen = {}
    gen_elements = []
    for name, cells in letters:
        key = cells.tobytes()
        if key not in seen:
            seen[key] = len(words)
            words.append((name,))
            images.append(cells)
        gen_elements.append((name, seen[key]))
    frontier = list(range(len(words)))
    while frontier:
        nxt = []
        for i in frontier:
            for name, cells in letters:
                img = _bool_compose(images[i], cells)
                key = img.tobytes()
                if key in seen:
                    continue
                if len(words) >= cap:
                    raise ClosureTooLargeError(len(words) + 1, cap)
                seen[key] = len(words)
                nxt.append(len(words))
                words.append(words[i] + (name,))
                images.append(img)
        frontier = nxt
    return StringSet(
        net.actors, [name for name, _ in letters], words, images, gen_elements
    )


class Semigroup:
    """A closed string set with its multiplication table.

    The numerical format indexes elements 1-based in st order; the symbolic
    format uses the representative labels. Both render the same underlying
    0-based index table.
    """

    def __init__(self, strings, table_idx, fmt):
        self.strings = strings
        self._idx = np.asarray(table_idx, dtype=int)
        self._idx.setflags(write=False)
        if fmt not in ("numerical", "symbolic"):
            raise ValidationError(f"unknown table format {fmt!r}")
        self.format = fmt

    @property
    def st(self):
        return self.strings.st

    @property
    def order(self):
        return len(self.st)

    @property
    def table(self):
        if self.format == "numerical":
            return [[int(x) + 1 for x in row] for row in self._idx]
        return [[self.st[x] for x in row] for row in self._idx]

    def index_table(self):
        """The 0-based index table (a copy safe to mutate)."""
        return [[int(x) for x in row] for row in self._idx]

    def product(self, i, j):
        """0-based index of element i composed with element j."""
        return int(self._idx[i, j])

    def generator_elements(self):
        """(letter, 0-based element index) for each generator letter."""
        return list(self.strings.generator_elements)

    def to_dict(self):
        return {
            "st": list(self.st),
            "table": self.table,
            "order": self.order,
            "generators": [[lbl, i + 1] for lbl, i in self.generator_elements()],
        }


def build_semigroup(strings, fmt="numerical"):
    """Multiplication table over a closed string set."""
    by_key = {img.tobytes(): i for i, img in enumerate(strings.images)}
    n = strings.order
    idx = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(n):
            key = _bool_compose(strings.images[i], strings.images[j]).tobytes()
            try:
                idx[i, j] = by_key[key]
            except KeyError:
                raise ValidationError(
                    f"product {strings.st[i]}*{strings.st[j]} left the string set; "
                    "input was not a closed StringSet"
                ) from None
    return Semigroup(strings, idx, fmt)


def semigroup_from_dict(data):
    """Rebuild a table-only semigroup from its JSON export.

    The word tables are gone at this point, so the result supports table
    algebra (congruences, quotients, Cayley graphs) but not matrix queries.
    """
    try:
        st = [str(x) for x in data["st"]]
        table = data["table"]
    except (KeyError, TypeError) as exc:
        raise ValidationError('semigroup JSON needs "st" and "table"') from exc
    n = len(st)
    if len(table) != n or any(len(row) != n for row in table):
        raise ValidationError("semigroup table must be square over st")
    pos = {lbl: i for i, lbl in enumerate(st)}
    idx = np.zeros((n, n), dtype=int)
    fmt = "numerical"
    for i, row in enumerate(table):
        for j, cell in enumerate(row):
            if isinstance(cell, str):
                fmt = "symbolic"
                if cell not in pos:
                    raise ValidationError(f"table cell {cell!r} is not in st")
                idx[i, j] = pos[cell]
            else:
                if not 1 <= int(cell) <= n:
                    raise ValidationError(f"table index {cell} out of range")
                idx[i, j] = int(cell) - 1
    gens = [(str(lbl), int(i) - 1) for lbl, i in data.get("generators", [])]
    alphabet = [lbl for lbl, _ in gens]
    words = [(lbl,) for lbl in st]
    strings = StringSet([], alphabet, words, [None] * n, gens or None)
    return Semigroup(strings, idx, fmt)


def equations(net, k, include_transposes=False):
    """Words of length <= k grouped by image; singleton groups are omitted.

    Keys are the representative labels (first word of each group, which by
    the enumeration order is the lexicographically first shortest one).
    """
    if k < 1:
        raise ValidationError("k must be at least 1")
    letters = _alphabet(net, include_transposes)
    groups = {}
    level = [((name,), cells) for name, cells in letters]
    for _ in range(k):
        for word, img in level:
            groups.setdefault(img.tobytes(), []).append("".join(word))
        level = [
            (word + (name,), _bool_compose(img, cells))
            for word, img in level
            for name, cells in letters
        ]
    return {
        members[0]: members for members in groups.values() if len(members) > 1
    }


class Poset:
    """Labels with a boolean order matrix; M[i][j] = 1 iff i <= j."""

    def __init__(self, labels, matrix):
        self.labels = tuple(str(x) for x in labels)
        self.matrix = np.asarray(matrix, dtype=bool)
        self.matrix.setflags(write=False)
        n = len(self.labels)
        if self.matrix.shape != (n, n):
            raise ValidationError("order matrix must be square over the labels")

    @property
    def n(self):
        return len(self.labels)

    def leq(self, a, b):
        return bool(self.matrix[self._at(a), self._at(b)])

    def _at(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown element {label!r}") from None

    def is_reflexive(self):
        return bool(self.matrix.diagonal().all())

    def is_transitive(self):
        return not (_reach_step(self.matrix) & ~self.matrix).any()

    def antisymmetry_violations(self):
        """Mutual pairs of distinct elements (empty for a true poset)."""
        both = self.matrix & self.matrix.T
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if both[i, j]:
                    out.append((self.labels[i], self.labels[j]))
        return out

    def is_antisymmetric(self):
        return not self.antisymmetry_violations()

    def check(self):
        """Raise unless reflexive, antisymmetric, and transitive."""
        problems = []
        if not self.is_reflexive():
            problems.append("not reflexive")
        if not self.is_antisymmetric():
            problems.append(f"mutual pairs: {self.antisymmetry_violations()}")
        if not self.is_transitive():
            problems.append("not transitive")
        if problems:
            raise ValidationError("not a poset: " + "; ".join(problems))
        return self

    def upset(self, label):
        """Indices of every element >= the given one (itself included)."""
        return [int(j) for j in np.nonzero(self.matrix[self._at(label)])[0]]

    def downset(self, label):
        return [int(i) for i in np.nonzero(self.matrix[:, self._at(label)])[0]]

    def permuted(self, clustering):
        order = permutation_order(self.labels, clustering)
        idx = np.asarray(order, dtype=int)
        return Poset([self.labels[i] for i in order], self.matrix[np.ix_(idx, idx)])

    def to_dict(self):
        return {
            "labels": list(self.labels),
            "matrix": [[int(x) for x in row] for row in self.matrix],
        }

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(data["labels"], data["matrix"])
        except (KeyError, TypeError) as exc:
            raise ValidationError('poset JSON needs "labels" and "matrix"') from exc


def _reach_step(m):
    return (m.astype(np.uint8) @ m.astype(np.uint8)) > 0


def transitive_closure(matrix):
    """Boolean reflexive-transitive closure by repeated squaring."""
    m = np.asarray(matrix, dtype=bool).copy()
    np.fill_diagonal(m, True)
    while True:
        nxt = m | _reach_step(m)
        if np.array_equal(nxt, m):
            return m
        m = nxt


def string_partial_order(strings):
    """Containment order among the representative images."""
    n = strings.order
    m = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            m[i, j] = not (strings.images[i] & ~strings.images[j]).any()
    return Poset(strings.st, m)
