"""Dyadic bundle patterns: classification, census, bond systems, statistics.

A bundle is the joint pattern of every tie type between one unordered pair
of actors. Seven classes cover all possibilities; the reciprocal-flavored
ones (reciprocal, exchange, mixed, full) are "strong" bonds, the one-way
ones (asymmetric, entrainment) are "weak" bonds.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import UndefinedStatisticError, ValidationError
from .netcore import MultiplexNetwork, RelationMatrix

NULL = "null"
ASYM = "asym"
RECP = "recp"
TENT = "tent"
TXCH = "txch"
MIXD = "mixd"
FULL = "full"

CLASSES = (NULL, ASYM, RECP, TENT, TXCH, MIXD, FULL)
STRONG = frozenset({RECP, TXCH, MIXD, FULL})
WEAK = frozenset({ASYM, TENT})

# Printed census header order with display names.
_HEADER = (
    (NULL, "NULL"),
    (ASYM, "ASYMM"),
    (RECP, "RECIP"),
    (TENT, "T.ENTR"),
    (TXCH, "T.EXCH"),
    (MIXD, "MIXED"),
    (FULL, "FULL"),
)


@dataclass(frozen=True)
class DyadPattern:
    """One unordered pair with its two directed slice-name sets."""

    pair: tuple
    forward: frozenset
    backward: frozenset


def classify_dyad(pattern, nslices):
    """Assign one of the seven bundle classes to a dyad pattern.

    Null: no tie either way. Asymmetric: a single slice one way only.
    Tie entrainment: several slices one way only. Reciprocal: the same
    single slice both ways. Full: every slice both ways. Tie exchange:
    both ways present with disjoint slice sets. Everything else mixes
    one-way and mutual levels and lands in Mixed.
    """
    fwd, bwd = frozenset(pattern.forward), frozenset(pattern.backward)
    if not fwd and not bwd:
        return NULL
    if not fwd or not bwd:
        return ASYM if len(fwd | bwd) == 1 else TENT
    if len(fwd) == nslices and len(bwd) == nslices:
        return FULL
    if fwd == bwd and len(fwd) == 1:
        return RECP
    if not (fwd & bwd):
        return TXCH
    return MIXD


@dataclass(frozen=True)
class BundleCensus:
    n: int
    counts: dict  # class -> count

    @property
    def total(self):
        """Non-null bundle count (the printed BUNDLES column)."""
        return sum(v for k, v in self.counts.items() if k != NULL)

    @property
    def strong(self):
        return sum(self.counts[k] for k in STRONG)

    @property
    def weak(self):
        return sum(self.counts[k] for k in WEAK)

    def table(self):
        """Render in the census column order."""
        head = "      BUNDLES " + " ".join(disp for _, disp in _HEADER)
        row = "TOTAL " + f"{self.total:>7} " + " ".join(
            f"{self.counts[key]:>{len(disp)}}" for key, disp in _HEADER
        )
        return head + "\n" + row


def _dyad_patterns(net):
    names = net.slice_names
    stack = np.stack([s.cells for s in net.slices])
    for i, j in itertools.combinations(range(net.n), 2):
        fwd = frozenset(names[s] for s in range(len(names)) if stack[s, i, j])
        bwd = frozenset(names[s] for s in range(len(names)) if stack[s, j, i])
        yield DyadPattern((net.actors[i], net.actors[j]), fwd, bwd)


def bundle_census(net):
    """Count every unordered pair's bundle class. Diagonals are ignored."""
    counts = {c: 0 for c in CLASSES}
    r = len(net.slices)
    for pattern in _dyad_patterns(net):
        counts[classify_dyad(pattern, r)] += 1
    return BundleCensus(n=net.n, counts=counts)


def _expand_bonds(bonds):
    out = set()
    for b in bonds:
        if b == "strong":
            out |= STRONG
        elif b == "weak":
            out |= WEAK
        elif b in CLASSES and b != NULL:
            out.add(b)
        else:
            raise ValidationError(f"unknown bond selector {b!r}")
    return out


def relational_system(net, bonds):
    """Keep only ties on dyads whose bundle class matches the selection.

    Returns the induced network over the actors that keep at least one tie
    (all slice names retained, possibly empty). Use pair_lists for the
    per-slice listing view of the same tie set.
    """
    if not bonds:
        raise ValidationError("bond selection must not be empty")
    wanted = _expand_bonds(bonds)
    r = len(net.slices)
    index = {a: i for i, a in enumerate(net.actors)}
    keep = {s.name: np.zeros((net.n, net.n), dtype=bool) for s in net.slices}
    involved = set()
    for pattern in _dyad_patterns(net):
        if classify_dyad(pattern, r) not in wanted:
            continue
        i, j = (index[a] for a in pattern.pair)
        for name in pattern.forward:
            keep[name][i, j] = True
        for name in pattern.backward:
            keep[name][j, i] = True
        involved.update(pattern.pair)
    actors = [a for a in net.actors if a in involved]
    idx = np.asarray([index[a] for a in actors], dtype=int)
    slices = []
    for s in net.slices:
        sub = keep[s.name][np.ix_(idx, idx)] if len(idx) else np.zeros((0, 0), bool)
        slices.append(RelationMatrix(s.name, actors, sub))
    return MultiplexNetwork(actors, slices)


def pair_lists(system):
    """Per-slice "i, j" tie listings of a relational system."""
    return {s.name: [f"{i}, {j}" for i, j in s.ties()] for s in system.slices}


@dataclass(frozen=True)
class BundleStatistics:
    strong: int
    weak: int
    null: int
    cohesion: float
    reciprocity: float


def cohesion_reciprocity(census):
    """Group cohesion and the log-odds reciprocity level.

    cohesion = weak / (2 * null); reciprocity = ln((2*strong/weak)/cohesion).
    Natural logarithm. Undefined when there are no weak bonds or no null
    dyads, and the error names the zero term.
    """
    strong, weak = census.strong, census.weak
    null = census.counts[NULL]
    if strong == 0:
        raise UndefinedStatisticError("strong bond")
    if weak == 0:
        raise UndefinedStatisticError("weak bond")
    if null == 0:
        raise UndefinedStatisticError("null dyad")
    cohesion = weak / (2.0 * null)
    coherence = 2.0 * strong / weak
    reciprocity = math.log(coherence / cohesion)
    return BundleStatistics(
        strong=strong, weak=weak, null=null, cohesion=cohesion, reciprocity=reciprocity
    )


def census_from_counts(n, null=0, asym=0, recp=0, tent=0, txch=0, mixd=0, full=0):
    """Build a census from bare counts (for published tables without raw data)."""
    counts = {
        NULL: null, ASYM: asym, RECP: recp, TENT: tent,
        TXCH: txch, MIXD: mixd, FULL: full,
    }
    if sum(counts.values()) != math.comb(n, 2):
        raise ValidationError(
            f"counts sum to {sum(counts.values())}, expected C({n},2) = {math.comb(n, 2)}"
        )
    return BundleCensus(n=n, counts=counts)
