"""Formal contexts, concepts, the concept lattice, and its filters.

A concept pairs a set of objects with the set of attributes they share,
each maximal against the other. Concepts are enumerated from the attribute
columns: the column extents come first (duplicates dropped), then their
pairwise-and-beyond intersections in discovery order, and the full object
set closes the list. Labels can be reduced so that every object and every
attribute tags exactly one concept.
"""

import csv
import io

import numpy as np

from .errors import ValidationError
from .semigroup import Poset


class FormalContext:
    """Objects x attributes with a boolean incidence table."""

    def __init__(self, objects, attributes, incidence):
        self.objects = tuple(str(g) for g in objects)
        self.attributes = tuple(str(m) for m in attributes)
        if len(set(self.objects)) != len(self.objects):
            raise ValidationError("object labels must be unique")
        if len(set(self.attributes)) != len(self.attributes):
            raise ValidationError("attribute labels must be unique")
        arr = np.asarray(incidence, dtype=bool)
        if arr.shape != (len(self.objects), len(self.attributes)):
            raise ValidationError("incidence shape must be objects x attributes")
        arr.setflags(write=False)
        self.incidence = arr

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(data["objects"], data["attributes"], data["incidence"])
        except (KeyError, TypeError) as exc:
            raise ValidationError(
                'context JSON needs "objects", "attributes", "incidence"'
            ) from exc

    @classmethod
    def from_csv(cls, text):
        """Cross-table: header row of attributes, first column of objects."""
        rows = list(csv.reader(io.StringIO(text)))
        if len(rows) < 2 or len(rows[0]) < 2:
            raise ValidationError("cross-table needs a header and one object row")
        attributes = [h.strip() for h in rows[0][1:]]
        objects = []
        incidence = []
        for row in rows[1:]:
            if not row or not row[0].strip():
                continue
            objects.append(row[0].strip())
            vals = [v.strip() for v in row[1:]]
            if len(vals) != len(attributes):
                raise ValidationError(f"row {row[0]!r} has {len(vals)} cells, expected {len(attributes)}")
            incidence.append([v not in ("", "0") for v in vals])
        return cls(objects, attributes, incidence)

    def to_dict(self):
        return {
            "objects": list(self.objects),
            "attributes": list(self.attributes),
            "incidence": [[int(x) for x in row] for row in self.incidence],
        }

    def _object_indices(self, labels):
        out = []
        for g in labels:
            try:
                out.append(self.objects.index(g))
            except ValueError:
                raise ValidationError(f"unknown object {g!r}") from None
        return out

    def _attribute_indices(self, labels):
        out = []
        for m in labels:
            try:
                out.append(self.attributes.index(m))
            except ValueError:
                raise ValidationError(f"unknown attribute {m!r}") from None
        return out


def derive(ctx, objects):
    """Attributes shared by every given object (all of them for none)."""
    idx = ctx._object_indices(objects)
    mask = np.ones(len(ctx.attributes), dtype=bool)
    for i in idx:
        mask &= ctx.incidence[i]
    return frozenset(ctx.attributes[j] for j in np.nonzero(mask)[0])


def extent(ctx, attributes):
    """Objects carrying every given attribute (all of them for none)."""
    idx = ctx._attribute_indices(attributes)
    mask = np.ones(len(ctx.objects), dtype=bool)
    for j in idx:
        mask &= ctx.incidence[:, j]
    return frozenset(ctx.objects[i] for i in np.nonzero(mask)[0])


class Concept:
    """An extent/intent pair; index is its 1-based position in the listing."""

    def __init__(self, index, extent_labels, intent_labels):
        self.index = index
        self.extent = frozenset(extent_labels)
        self.intent = frozenset(intent_labels)
        self.reduced_objects = ()
        self.reduced_attributes = ()

    def label(self, reduced=True):
        """Printable "{attributes} {objects}" tag; bare index if both empty."""
        attrs = sorted(self.reduced_attributes if reduced else self.intent)
        objs = sorted(self.reduced_objects if reduced else self.extent)
        if not attrs and not objs:
            return str(self.index)
        return "{%s} {%s}" % (", ".join(attrs), ", ".join(objs))


class Concepts:
    """The full concept listing of a context, in canonical order."""

    def __init__(self, ctx, members):
        self.context = ctx
        self.members = tuple(members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def by_extent(self, labels):
        want = frozenset(labels)
        for c in self.members:
            if c.extent == want:
                return c
        return None

    def to_dict(self):
        out = []
        for c in self.members:
            out.append(
                {
                    "index": c.index,
                    "extent": sorted(c.extent),
                    "intent": sorted(c.intent),
                    "reduced_objects": sorted(c.reduced_objects),
                    "reduced_attributes": sorted(c.reduced_attributes),
                }
            )
        return out


def concepts(ctx):
    """Enumerate every concept of the context.

    Attribute column extents seed the list in column order; intersections
    of listed extents with the columns follow, in discovery order; the full
    object set is appended last if still missing. Reduced labels are then
    assigned: each object to the smallest concept containing it, each
    attribute to its own column concept.
    """
    cols = []
    for j, m in enumerate(ctx.attributes):
        cols.append(frozenset(ctx.objects[i] for i in np.nonzero(ctx.incidence[:, j])[0]))
    extents = []
    for e in cols:
        if e not in extents:
            extents.append(e)
    i = 0
    while i < len(extents):
        for e in cols:
            inter = extents[i] & e
            if inter not in extents:
                extents.append(inter)
        i += 1
    full = frozenset(ctx.objects)
    if full not in extents:
        extents.append(full)
    members = [
        Concept(i + 1, e, derive(ctx, e)) for i, e in enumerate(extents)
    ]
    by_extent = {c.extent: c for c in members}
    for g in ctx.objects:
        closure = extent(ctx, derive(ctx, [g]))
        c = by_extent[closure]
        c.reduced_objects = c.reduced_objects + (g,)
    for m, e in zip(ctx.attributes, cols):
        c = by_extent[e]
        c.reduced_attributes = c.reduced_attributes + (m,)
    return Concepts(ctx, members)


class ConceptOrder(Poset):
    """Subconcept order: c <= d when the extent of c sits inside d's."""

    def __init__(self, cs, labels=None):
        if labels is None:
            labels = [f"c{c.index}" for c in cs]
        elif len(labels) != len(cs):
            raise ValidationError("need one label per concept")
        n = len(cs)
        m = np.zeros((n, n), dtype=bool)
        for i, a in enumerate(cs):
            for j, b in enumerate(cs):
                m[i, j] = a.extent <= b.extent
        super().__init__(labels, m)
        self.concepts = cs

    def meet(self, i, j):
        """The concept whose extent is the intersection of two extents."""
        want = self.concepts[i].extent & self.concepts[j].extent
        c = self.concepts.by_extent(want)
        if c is None:
            raise ValidationError("extent intersection is not a concept")
        return c

    def join(self, i, j):
        """The concept whose intent is the intersection of two intents."""
        want = self.concepts[i].intent & self.concepts[j].intent
        for c in self.concepts:
            if c.intent == want:
                return c
        raise ValidationError("intent intersection is not a concept")


def concept_order(cs, labels=None):
    return ConceptOrder(cs, labels)


def _resolve(co, selector):
    """Map an index or a reduced label to exactly one concept position."""
    cs = co.concepts
    if isinstance(selector, int) or (isinstance(selector, str) and selector.isdigit()):
        idx = int(selector)
        if not 1 <= idx <= len(cs):
            raise ValidationError(f"concept index {idx} out of range 1..{len(cs)}")
        return idx - 1
    hits = [
        k
        for k, c in enumerate(cs)
        if selector in c.reduced_objects or selector in c.reduced_attributes
    ]
    if not hits:
        raise ValidationError(f"{selector!r} labels no concept")
    if len(hits) > 1:
        raise ValidationError(f"{selector!r} labels several concepts: {hits}")
    return hits[0]


def filter_ideal(co, of, ideal=False):
    """Union of principal filters (or ideals) of the chosen concepts.

    Returns {concept index: reduced label string}, ascending by index.
    """
    if isinstance(of, (int, str)):
        of = [of]
    if not of:
        raise ValidationError("need at least one concept selector")
    chosen = set()
    for sel in of:
        k = _resolve(co, sel)
        positions = co.downset(co.labels[k]) if ideal else co.upset(co.labels[k])
        chosen.update(positions)
    return {
        co.concepts[k].index: co.concepts[k].label() for k in sorted(chosen)
    }
