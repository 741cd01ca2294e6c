"""Congruences, compatible quasi-orders, and quotient reductions.

A congruence partitions the elements of a multiplication table so that
products respect the classes; factoring by one yields a smaller table that
preserves the algebra of the original. When the elements also carry a
partial order, the compatible quasi-orders extending it play the same role
for ordered structures: their minimal nontrivial members (atoms) and the
maximal ones avoiding each atom (meet complements) mark the natural seams
along which the structure decomposes.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .semigroup import Poset


def _canonical(assign):
    """Renumber class ids 1.. by first occurrence."""
    seen = {}
    out = []
    for a in assign:
        if a not in seen:
            seen[a] = len(seen) + 1
        out.append(seen[a])
    return tuple(out)


@dataclass(frozen=True)
class Congruence:
    """A class vector over the elements of a table, 1-based, canonical."""

    labels: tuple
    vector: tuple
    kind: str = "cc"

    @property
    def n_classes(self):
        return max(self.vector)

    def classes(self):
        out = {}
        for lbl, c in zip(self.labels, self.vector):
            out.setdefault(c, []).append(lbl)
        return out

    def as_dict(self):
        return dict(zip(self.labels, self.vector))


def _substitution_closure(table, assign):
    """Coarsen until x ~ y forces xg ~ yg and gx ~ gy for every g."""
    n = len(table)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
            return True
        return False

    for i in range(n):
        union(i, assign[i])
    changed = True
    while changed:
        changed = False
        for x in range(n):
            for y in range(x + 1, n):
                if find(x) != find(y):
                    continue
                for g in range(n):
                    if union(table[x][g], table[y][g]):
                        changed = True
                    if union(table[g][x], table[g][y]):
                        changed = True
    return [find(i) for i in range(n)]


def _quotient_merge(table, assign):
    """Merge classes whose quotient rows and columns are identical."""
    n = len(table)
    classes = sorted(set(assign))
    cix = {c: i for i, c in enumerate(classes)}
    q = [[cix[assign[table[x][y]]] for y in _reps(assign, classes)] for x in _reps(assign, classes)]
    m = len(classes)
    merged = dict(enumerate(range(m)))
    did = False
    for u in range(m):
        for v in range(u + 1, m):
            same_rows = all(q[u][w] == q[v][w] for w in range(m))
            same_cols = all(q[w][u] == q[w][v] for w in range(m))
            if same_rows and same_cols:
                merged[v] = merged[u]
                did = True
    if not did:
        return assign, False
    return [classes[merged[cix[assign[x]]]] for x in range(n)], True


def _reps(assign, classes):
    firsts = []
    for c in classes:
        firsts.append(assign.index(c))
    return firsts


def _pair_congruence(table, a, b):
    n = len(table)
    assign = list(range(n))
    assign[b] = a
    while True:
        assign = _substitution_closure(table, assign)
        assign, again = _quotient_merge(table, assign)
        if not again:
            break
    return _canonical(assign)


def find_congruences(sg, unique=True):
    """Congruences found by collapsing each pair of elements in turn.

    Every unordered pair of distinct elements seeds a search that alternates
    substitution closure with merging of classes the quotient table can no
    longer tell apart, until stable. Results are sorted coarsest first
    (fewer classes last within equal coarseness, ties by class vector).
    """
    table = sg.index_table()
    n = len(table)
    found = []
    for a in range(n):
        for b in range(a + 1, n):
            found.append(_pair_congruence(table, a, b))
    if unique:
        out = []
        for v in found:
            if v not in out:
                out.append(v)
        found = out
    found.sort(key=lambda v: (-max(v), v))
    return [Congruence(sg.st, v) for v in found]


def is_congruence(sg, vector):
    """Does the class vector satisfy the substitution property?"""
    table = sg.index_table()
    n = len(table)
    if len(vector) != n:
        raise ValidationError("class vector length must match the table")
    for x in range(n):
        for y in range(n):
            if vector[x] != vector[y]:
                continue
            for g in range(n):
                if vector[table[x][g]] != vector[table[y][g]]:
                    return False
                if vector[table[g][x]] != vector[table[g][y]]:
                    return False
    return True


# ---------------------------------------------------------------- quasi-orders


class PiRelation:
    """A quasi-order over table elements, compatible with multiplication."""

    def __init__(self, labels, matrix, seed=None):
        self.labels = tuple(labels)
        self.matrix = np.asarray(matrix, dtype=bool)
        self.matrix.setflags(write=False)
        self.seed = seed            # the (x, y) pair whose closure this is

    @property
    def size(self):
        return int(self.matrix.sum())

    def contains(self, other):
        return bool((other.matrix <= self.matrix).all())

    def key(self):
        return self.matrix.tobytes()

    def partition(self):
        """Classes of mutually related elements, canonically numbered."""
        mutual = self.matrix & self.matrix.T
        n = len(self.labels)
        assign = list(range(n))
        for i in range(n):
            for j in range(i):
                if mutual[i, j]:
                    assign[i] = assign[j]
                    break
        return _canonical(assign)


def _pi_close(table, base):
    """Transitive + two-sided multiplicative closure of a relation."""
    n = len(table)
    m = base.copy()
    np.fill_diagonal(m, True)
    while True:
        nxt = m | ((m.astype(np.uint8) @ m.astype(np.uint8)) > 0)
        rows, cols = np.nonzero(nxt)
        add = []
        for x, y in zip(rows, cols):
            for s in range(n):
                if not nxt[table[x][s]][table[y][s]]:
                    add.append((table[x][s], table[y][s]))
                if not nxt[table[s][x]][table[s][y]]:
                    add.append((table[s][x], table[s][y]))
        for x, y in add:
            nxt[x, y] = True
        if np.array_equal(nxt, m):
            return m
        m = nxt


class PiLattice:
    """The distinct principal compatible quasi-orders over a table + order."""

    def __init__(self, labels, base, members):
        self.labels = tuple(labels)
        self.base = base                      # the underlying partial order
        self.members = tuple(members)

    def atoms(self):
        """Inclusion-minimal members strictly above the base order."""
        out = []
        for m in self.members:
            if np.array_equal(m.matrix, self.base):
                continue
            minimal = True
            for other in self.members:
                if other is m or np.array_equal(other.matrix, self.base):
                    continue
                if m.contains(other) and not other.contains(m):
                    minimal = False
                    break
            if minimal:
                out.append(m)
        return out

    def meet_complements(self, atom):
        """Maximal members that do not contain the given atom."""
        non = [m for m in self.members if not m.contains(atom)]
        out = []
        for m in non:
            if not any(o is not m and o.contains(m) and not m.contains(o) for o in non):
                out.append(m)
        return out

    def designated_complement(self, atom):
        """The largest meet complement (ties broken by cell pattern)."""
        mcs = self.meet_complements(atom)
        if not mcs:
            return None
        return sorted(mcs, key=lambda m: (-m.size, m.key()))[0]


def factorize(sg, po):
    """All principal compatible quasi-orders extending the element order.

    For each ordered pair not already comparable, the pair is adjoined and
    closed; the distinct results, together with the order itself, form the
    lattice searched for atoms and their complements.
    """
    if tuple(po.labels) != tuple(sg.st):
        raise ValidationError("order and table must share their element labels")
    table = sg.index_table()
    n = len(table)
    base = np.asarray(po.matrix, dtype=bool)
    members = [PiRelation(sg.st, base, seed=None)]
    seen = {base.tobytes()}
    for x in range(n):
        for y in range(n):
            if x == y or base[x, y]:
                continue
            seeded = base.copy()
            seeded[x, y] = True
            q = _pi_close(table, seeded)
            key = q.tobytes()
            if key not in seen:
                seen.add(key)
                members.append(PiRelation(sg.st, q, seed=(sg.st[x], sg.st[y])))
    return PiLattice(sg.st, base, members)


# ----------------------------------------------------------------- reductions


@dataclass
class Reduction:
    """One factor of a decomposition: classes plus the quotient algebra."""

    labels: tuple
    vector: tuple
    table: list
    order: Poset = None
    kind: str = "cc"

    def as_dict(self):
        out = {
            "classes": dict(zip(self.labels, self.vector)),
            "table": self.table,
        }
        if self.order is not None:
            out["order"] = self.order.to_dict()
        return out


def _quotient(sg, vector, q=None, kind="cc"):
    table = sg.index_table()
    n = len(table)
    firsts = []
    for c in range(1, max(vector) + 1):
        firsts.append(vector.index(c))
    reps = [sg.st[i] for i in firsts]
    qt = []
    for x in firsts:
        row = []
        for y in firsts:
            row.append(reps[vector[table[x][y]] - 1])
        qt.append(row)
    for x in range(n):
        for y in range(n):
            if vector[table[x][y]] != vector[table[firsts[vector[x] - 1]][firsts[vector[y] - 1]]]:
                raise ValidationError("partition is not a congruence of the table")
    order = None
    if q is not None:
        m = np.zeros((len(firsts), len(firsts)), dtype=bool)
        for i, x in enumerate(firsts):
            for j, y in enumerate(firsts):
                m[i, j] = q[x, y]
        order = Poset(reps, m)
    return Reduction(tuple(sg.st), tuple(vector), qt, order, kind)


def decompose(sg, parts, mode="cc"):
    """Quotient the table by congruences or by a lattice's atoms.

    mode "cc" takes an iterable of Congruence objects; "atoms" quotients by
    each atom's mutual-pair partition; "mca" does the same through each
    atom's designated meet complement, whose coarser classes give the
    strongest reduction that still separates the atom.
    """
    if mode == "cc":
        return [_quotient(sg, c.vector, kind="cc") for c in parts]
    if mode not in ("atoms", "mca"):
        raise ValidationError(f"unknown decomposition mode {mode!r}")
    if not isinstance(parts, PiLattice):
        raise ValidationError("atoms/mca modes need the factorize() result")
    out = []
    for atom in parts.atoms():
        source = atom if mode == "atoms" else parts.designated_complement(atom)
        if source is None:
            continue
        out.append(
            _quotient(sg, source.partition(), q=source.matrix, kind=mode)
        )
    return out
