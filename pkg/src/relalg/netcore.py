"""Labeled boolean relations and multiplex stacks.

A relation is a square boolean matrix over an ordered actor set; a multiplex
network is a stack of such matrices sharing one actor set. Everything is
treated as immutable after construction and every operation returns new
values, so results can be shared freely across threads.
"""

from collections import deque

import numpy as np

from .errors import DimensionError, ValidationError


def _freeze(cells):
    arr = np.asarray(cells, dtype=bool)
    arr.setflags(write=False)
    return arr


def _check_labels(labels):
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != len(labels):
        raise ValidationError("actor labels must be unique")
    return labels


# A single named relation over an ordered actor set.
class RelationMatrix:
    def __init__(self, name, actors, cells):
        self.name = str(name)
        self.actors = _check_labels(actors)
        self.cells = _freeze(cells)
        n = len(self.actors)
        if self.cells.shape != (n, n):
            raise DimensionError(
                f"relation {self.name!r}: cells are {self.cells.shape}, "
                f"expected {(n, n)}"
            )

    @classmethod
    def from_ties(cls, name, actors, ties):
        actors = _check_labels(actors)
        index = {a: i for i, a in enumerate(actors)}
        cells = np.zeros((len(actors), len(actors)), dtype=bool)
        for i, j in ties:
            if i not in index or j not in index:
                raise ValidationError(f"tie ({i!r}, {j!r}) names an unknown actor")
            cells[index[i], index[j]] = True
        return cls(name, actors, cells)

    @property
    def n(self):
        return len(self.actors)

    def ties(self):
        """Ordered (source, target) label pairs for every set cell."""
        rows, cols = np.nonzero(self.cells)
        return [(self.actors[i], self.actors[j]) for i, j in zip(rows, cols)]

    def __eq__(self, other):
        # Name is presentation only; two relations are the same relation
        # when they connect the same actors the same way.
        if not isinstance(other, RelationMatrix):
            return NotImplemented
        return self.actors == other.actors and np.array_equal(self.cells, other.cells)

    def __hash__(self):
        return hash((self.actors, self.cells.tobytes()))

    def __repr__(self):
        return f"RelationMatrix({self.name!r}, n={self.n}, ties={int(self.cells.sum())})"


class MultiplexNetwork:
    """An ordered stack of relations over one shared actor set."""

    def __init__(self, actors, slices):
        self.actors = _check_labels(actors)
        self.slices = tuple(slices)
        if not self.slices:
            raise ValidationError("a network needs at least one relation slice")
        names = [s.name for s in self.slices]
        if len(set(names)) != len(names):
            raise ValidationError("slice names must be unique")
        for s in self.slices:
            if s.actors != self.actors:
                raise DimensionError(
                    f"slice {s.name!r} has a different actor set than the network"
                )

    @property
    def n(self):
        return len(self.actors)

    @property
    def slice_names(self):
        return tuple(s.name for s in self.slices)

    def slice(self, name):
        for s in self.slices:
            if s.name == name:
                return s
        raise ValidationError(f"no slice named {name!r}")

    def __repr__(self):
        return f"MultiplexNetwork(n={self.n}, slices={list(self.slice_names)})"


def compose(a, b):
    """Relational composition: a first, then b.

    (i, j) is set iff some k has a(i, k) and b(k, j). The word "CF" therefore
    reads "a C-tie followed by an F-tie".
    """
    if a.actors != b.actors:
        raise DimensionError("compose: operands have different actor sets")
    cells = (a.cells.astype(np.uint8) @ b.cells.astype(np.uint8)) > 0
    return RelationMatrix(a.name + b.name, a.actors, cells)


def transpose(a):
    return RelationMatrix("t" + a.name, a.actors, a.cells.T)


def components(net):
    """Weak components of the union of all slices, plus isolates.

    Direction is ignored. Any tie at all makes its endpoints part of a
    component, so a lone reciprocal or asymmetric dyad is a two-actor
    component, never a pair of isolates. Components are listed by their
    first actor's position; membership follows actor order.
    """
    union = np.zeros((net.n, net.n), dtype=bool)
    for s in net.slices:
        union |= s.cells
    union |= union.T
    np.fill_diagonal(union, False)

    degree = union.any(axis=0)
    seen = [False] * net.n
    comps = []
    isolates = []
    for start in range(net.n):
        if seen[start]:
            continue
        seen[start] = True
        if not degree[start]:
            isolates.append(net.actors[start])
            continue
        queue = deque([start])
        members = {start}
        while queue:
            cur = queue.popleft()
            for nxt in np.nonzero(union[cur])[0]:
                if not seen[nxt]:
                    seen[nxt] = True
                    members.add(int(nxt))
                    queue.append(int(nxt))
        comps.append([net.actors[i] for i in sorted(members)])
    return comps, isolates


def remove_isolates(net):
    """Drop every actor with zero degree across all slices."""
    _, isolates = components(net)
    keep = [a for a in net.actors if a not in set(isolates)]
    return select_subnetwork(net, keep)


def select_subnetwork(net, labels):
    """Induced sub-tensor on the given actors, all slices, order preserved."""
    wanted = set(labels)
    unknown = wanted - set(net.actors)
    if unknown:
        raise ValidationError(f"unknown actors: {sorted(unknown)}")
    keep = [i for i, a in enumerate(net.actors) if a in wanted]
    actors = [net.actors[i] for i in keep]
    idx = np.asarray(keep, dtype=int)
    slices = [
        RelationMatrix(s.name, actors, s.cells[np.ix_(idx, idx)]) for s in net.slices
    ]
    return MultiplexNetwork(actors, slices)


def permutation_order(labels, clustering):
    """Row order sorted by ascending class id, stable within class.

    clustering maps every label to a sortable class id; a missing label is
    an error.
    """
    missing = [a for a in labels if a not in clustering]
    if missing:
        raise ValidationError(f"clustering misses labels: {missing}")
    return sorted(range(len(labels)), key=lambda i: (clustering[labels[i]], i))


def permute(matrix, clustering):
    """Reorder a labeled square matrix by class id (rows and columns alike)."""
    order = permutation_order(matrix.actors, clustering)
    idx = np.asarray(order, dtype=int)
    actors = [matrix.actors[i] for i in order]
    return RelationMatrix(matrix.name, actors, matrix.cells[np.ix_(idx, idx)])


# ---------------------------------------------------------------------------
# JSON interchange

def network_from_dict(data):
    try:
        actors = data["actors"]
        relations = data["relations"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(
            'network JSON needs "actors" and "relations" keys'
        ) from exc
    if not isinstance(relations, list) or not relations:
        raise ValidationError('"relations" must be a nonempty list')
    slices = []
    for rel in relations:
        try:
            name, ties = rel["name"], rel["ties"]
        except (KeyError, TypeError) as exc:
            raise ValidationError('each relation needs "name" and "ties"') from exc
        slices.append(RelationMatrix.from_ties(name, actors, ties))
    return MultiplexNetwork(actors, slices)


def network_to_dict(net):
    return {
        "actors": list(net.actors),
        "relations": [{"name": s.name, "ties": [list(t) for t in s.ties()]} for s in net.slices],
    }
