"""Signed matrices and structural balance over valence semirings.

Ties carry one of five letters: p (positive), n (negative), o (absent),
a (ambivalent), and, in cluster mode only, q for the product of two
negatives. Walk accumulation is ordinary matrix algebra with the semiring's
tables in place of + and *, so revisiting nodes is allowed; products fold
left to right along a walk.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ComputationError, NonConvergenceError, ValidationError

VALENCES = ("p", "o", "n", "a", "q")


class SignedMatrix:
    """Actor-by-actor valence letters plus the ordered set of letters used."""

    def __init__(self, actors, cells):
        self.actors = tuple(str(a) for a in actors)
        arr = np.array(cells, dtype="<U1")
        n = len(self.actors)
        if arr.shape != (n, n):
            raise ValidationError("signed matrix must be square over the actors")
        bad = sorted(set(arr.ravel()) - set(VALENCES))
        if bad:
            raise ValidationError(f"unknown valence letters: {bad}")
        arr.setflags(write=False)
        self.cells = arr

    @property
    def n(self):
        return len(self.actors)

    @property
    def val(self):
        present = set(self.cells.ravel())
        return [v for v in VALENCES if v in present]

    def __eq__(self, other):
        if not isinstance(other, SignedMatrix):
            return NotImplemented
        return self.actors == other.actors and bool((self.cells == other.cells).all())

    def __hash__(self):
        return hash((self.actors, self.cells.tobytes()))

    def to_dict(self):
        return {
            "actors": list(self.actors),
            "val": self.val,
            "cells": [list(row) for row in self.cells],
        }


def make_signed(positive, negative):
    """Combine a positive and a negative tie matrix into one letter matrix."""
    if positive.actors != negative.actors:
        raise ValidationError("positive and negative parts must share actors")
    pos = np.asarray(positive.cells, dtype=bool)
    neg = np.asarray(negative.cells, dtype=bool)
    out = np.full(pos.shape, "o", dtype="<U1")
    out[pos & ~neg] = "p"
    out[neg & ~pos] = "n"
    out[pos & neg] = "a"
    return SignedMatrix(positive.actors, out)


@dataclass(frozen=True)
class SemiringSpec:
    """Addition and multiplication tables over a valence carrier."""

    mode: str
    carrier: tuple
    add_table: dict
    mul_table: dict
    zero: str = "o"
    one: str = "p"

    def add(self, x, y):
        return self.add_table[(x, y)]

    def mul(self, x, y):
        return self.mul_table[(x, y)]


def _build(carrier, rules):
    """Fill a full carrier x carrier table from sparse symmetric rules."""
    table = {}
    for x in carrier:
        for y in carrier:
            if (x, y) in rules:
                table[(x, y)] = rules[(x, y)]
            elif (y, x) in rules:
                table[(x, y)] = rules[(y, x)]
            else:
                raise ValueError(f"no rule for {(x, y)}")
    return table


def _balance_tables():
    carrier = ("p", "o", "n", "a")
    add = {}
    mul = {}
    for x in carrier:
        add[("o", x)] = x                   # absent is neutral in addition
        add[(x, x)] = x
        mul[("o", x)] = "o"                 # absent absorbs products
        mul[("p", x)] = x                   # positive is the multiplicative unit
        add[("a", x)] = "a"                 # ambivalence absorbs sums
    add[("p", "n")] = "a"
    mul[("n", "n")] = "p"
    mul[("n", "a")] = "a"
    mul[("a", "a")] = "a"
    return carrier, _build(carrier, add), _build(carrier, mul)


def _cluster_tables():
    carrier = ("p", "o", "n", "a", "q")
    add = {}
    mul = {}
    for x in carrier:
        add[("o", x)] = x
        add[(x, x)] = x
        mul[("o", x)] = "o"
        mul[("p", x)] = x
        add[("a", x)] = "a"
    add[("p", "n")] = "a"
    # p+q merges into q: a pair of antagonists and a friend of both can
    # coexist in a clustering, so the double-negative verdict prevails
    # rather than collapsing to ambivalence (keeps + distributive with *)
    add[("p", "q")] = "q"
    add[("n", "q")] = "a"
    mul[("n", "n")] = "q"
    mul[("n", "q")] = "n"
    mul[("q", "q")] = "q"
    mul[("n", "a")] = "a"
    mul[("q", "a")] = "a"
    mul[("a", "a")] = "a"
    return carrier, _build(carrier, add), _build(carrier, mul)


def _make_spec(mode):
    builder = _balance_tables if mode == "balance" else _cluster_tables
    carrier, add, mul = builder()
    return SemiringSpec(mode, carrier, add, mul)


BALANCE = _make_spec("balance")
CLUSTER = _make_spec("cluster")


def verify_semiring(spec):
    """Exhaustively assert the semiring laws; raises on any failure."""
    c = spec.carrier
    problems = []
    for x in c:
        if spec.add(spec.zero, x) != x or spec.add(x, spec.zero) != x:
            problems.append(f"o not neutral in + at {x}")
        if spec.mul(spec.zero, x) != spec.zero or spec.mul(x, spec.zero) != spec.zero:
            problems.append(f"o not absorbing in * at {x}")
        if spec.mul(spec.one, x) != x or spec.mul(x, spec.one) != x:
            problems.append(f"p not neutral in * at {x}")
        if x != spec.zero and (spec.add("a", x) != "a" or spec.add(x, "a") != "a"):
            problems.append(f"a not absorbing in + at {x}")
    for x in c:
        for y in c:
            if spec.add(x, y) != spec.add(y, x):
                problems.append(f"+ not commutative at {x},{y}")
            for z in c:
                if spec.add(spec.add(x, y), z) != spec.add(x, spec.add(y, z)):
                    problems.append(f"+ not associative at {x},{y},{z}")
                if spec.mul(spec.mul(x, y), z) != spec.mul(x, spec.mul(y, z)):
                    problems.append(f"* not associative at {x},{y},{z}")
                if spec.mul(x, spec.add(y, z)) != spec.add(spec.mul(x, y), spec.mul(x, z)):
                    problems.append(f"left distributivity fails at {x},{y},{z}")
                if spec.mul(spec.add(x, y), z) != spec.add(spec.mul(x, z), spec.mul(y, z)):
                    problems.append(f"right distributivity fails at {x},{y},{z}")
    if problems:
        raise AssertionError("; ".join(sorted(set(problems))))
    return True


_FUSE = {
    ("p", "n"): "a",
    ("p", "a"): "p",
    ("n", "a"): "n",
    ("p", "q"): "a",
    ("n", "q"): "a",
    ("a", "q"): "a",
}


def _fuse(x, y):
    if x == y:
        return x
    if x == "o":
        return y
    if y == "o":
        return x
    return _FUSE.get((x, y)) or _FUSE[(y, x)]


def symmetric_closure(s):
    """Fuse each dyad's two directions into one symmetric valence.

    Any letter beats absence; a pure sign beats ambivalence; opposite pure
    signs fuse to ambivalence.
    """
    n = s.n
    out = np.full((n, n), "o", dtype="<U1")
    for i in range(n):
        for j in range(n):
            out[i, j] = _fuse(s.cells[i, j], s.cells[j, i])
    return SignedMatrix(s.actors, out)


def _check_carrier(s, spec):
    extra = set(s.cells.ravel()) - set(spec.carrier)
    if extra:
        raise ComputationError(
            f"letters {sorted(extra)} are outside the {spec.mode} carrier"
        )


def _matmul(a, b, spec):
    n = a.shape[0]
    out = np.full((n, n), spec.zero, dtype="<U1")
    for i in range(n):
        for j in range(n):
            acc = spec.zero
            for l in range(n):
                acc = spec.add(acc, spec.mul(a[i, l], b[l, j]))
            out[i, j] = acc
    return out


def _cellwise_add(a, b, spec):
    n = a.shape[0]
    out = np.empty((n, n), dtype="<U1")
    for i in range(n):
        for j in range(n):
            out[i, j] = spec.add(a[i, j], b[i, j])
    return out


def semiring_powers(s, spec=BALANCE, k=2, semipaths=True):
    """Accumulate walks of length 1..k under the semiring.

    With semipaths the matrix is symmetrized first, so tie direction is
    ignored; k=1 then returns the symmetric closure itself.
    """
    if k < 1:
        raise ValidationError("k must be at least 1")
    _check_carrier(s, spec)
    m = symmetric_closure(s).cells if semipaths else s.cells
    q = m.copy()
    p = m
    for _ in range(1, k):
        p = _matmul(p, m, spec)
        q = _cellwise_add(q, p, spec)
    return SignedMatrix(s.actors, q)


def balance_closure(s, spec=BALANCE, semipaths=True):
    """Accumulate walk valences until the matrix stops changing."""
    _check_carrier(s, spec)
    m = symmetric_closure(s).cells if semipaths else s.cells
    q = m
    limit = max(1, s.n * len(spec.carrier))
    for _ in range(limit):
        nxt = _cellwise_add(q, _matmul(q, m, spec), spec)
        if (nxt == q).all():
            return SignedMatrix(s.actors, q)
        q = nxt
    raise NonConvergenceError(
        f"no stable matrix within {limit} accumulation steps"
    )


@dataclass(frozen=True)
class BalanceVerdict:
    verdict: str                 # balanced | clusterable-only | imbalanced
    witness: str = None          # an actor whose diagonal breaks the rule
    groups: tuple = ()           # plus-set partition when one exists

    def __bool__(self):
        return self.verdict == "balanced"


def _plus_groups(q):
    n = q.n
    seen = [False] * n
    groups = []
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if not seen[j] and (q.cells[i, j] == "p" or q.cells[j, i] == "p"):
                    seen[j] = True
                    comp.append(j)
                    queue.append(j)
        groups.append(tuple(q.actors[i] for i in sorted(comp)))
    return tuple(groups)


def is_balanced(q):
    """Read the verdict off the diagonal of a closure matrix.

    All-positive-or-absent diagonals mean balance; a q diagonal can still be
    clustered into more than two antagonistic camps; n or a on the diagonal
    certifies imbalance. Groups are the components tied by positive cells.
    """
    diag = [q.cells[i, i] for i in range(q.n)]
    bad = next((i for i, v in enumerate(diag) if v in ("n", "a")), None)
    if bad is not None:
        return BalanceVerdict("imbalanced", q.actors[bad])
    groups = _plus_groups(q)
    dn = next((i for i, v in enumerate(diag) if v == "q"), None)
    if dn is not None:
        return BalanceVerdict("clusterable-only", q.actors[dn], groups)
    return BalanceVerdict("balanced", None, groups)
