"""Command-line front end.

Networks, semigroups, posets, and contexts travel as JSON files (contexts
also as CSV cross-tables). Tables print in the same row and column order
the library uses internally: actor input order, string set order, and
concept index order. Input problems exit with status 2, computational
limits with status 3.
"""

import functools
import json
import sys

import click

from . import dot as dotmod
from .bundles import bundle_census, cohesion_reciprocity, pair_lists, relational_system
from .decomp import decompose, factorize, find_congruences
from .errors import ComputationError, ValidationError
from .fca import FormalContext, concept_order, concepts, filter_ideal
from .netcore import network_from_dict
from .positional import build_relation_box, cumulated_hierarchy, reduce_network
from .semigroup import (
    Poset,
    build_semigroup,
    equations as word_equations,
    generate_strings,
    semigroup_from_dict,
    string_partial_order,
)
from .signed import BALANCE, CLUSTER, balance_closure, is_balanced, make_signed, semiring_powers


def _guard(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ValidationError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except ComputationError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)

    return wrapper


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc


def _load_network(path):
    return network_from_dict(_read_json(path))


def _load_context(path):
    if str(path).lower().endswith(".csv"):
        try:
            with open(path, encoding="utf-8") as fh:
                return FormalContext.from_csv(fh.read())
        except OSError as exc:
            raise ValidationError(f"cannot read {path}: {exc}") from exc
    return FormalContext.from_dict(_read_json(path))


def _print_matrix(row_labels, col_labels, rows):
    cells = [[str(x) for x in row] for row in rows]
    widths = [
        max([len(str(col_labels[j]))] + [len(r[j]) for r in cells])
        for j in range(len(col_labels))
    ]
    head = max((len(str(l)) for l in row_labels), default=0)
    click.echo(
        " " * head + "  " + " ".join(str(c).rjust(w) for c, w in zip(col_labels, widths))
    )
    for lbl, row in zip(row_labels, cells):
        click.echo(str(lbl).rjust(head) + "  " + " ".join(c.rjust(w) for c, w in zip(row, widths)))


def _write_or_echo(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        click.echo(f"wrote {out}")
    else:
        click.echo(text, nl=False)


@click.group()
@click.version_option(package_name="artifact", prog_name="relalg")
def main():
    """Algebraic analysis of multiplex, signed, and two-mode networks."""


@main.command()
@click.argument("network", type=click.Path())
@click.option("--stats", is_flag=True, help="Also print cohesion and reciprocity.")
@_guard
def census(network, stats):
    """Count dyad bundle classes of a network."""
    net = _load_network(network)
    result = bundle_census(net)
    click.echo(result.table())
    if stats:
        s = cohesion_reciprocity(result)
        click.echo(f"cohesion: {s.cohesion:.7f}")
        click.echo(f"reciprocity: {s.reciprocity:.5f}")


@main.command()
@click.argument("network", type=click.Path())
@click.option("--bonds", required=True, help="strong, weak, or class names (comma-separated).")
@click.option(
    "--format", "fmt", type=click.Choice(["tensor", "pairs"]), default="tensor",
    show_default=True, help="Print slice matrices or tie pair lists.",
)
@_guard
def relsys(network, bonds, fmt):
    """Extract the subnetwork spanned by chosen bundle classes."""
    net = _load_network(network)
    system = relational_system(net, [b.strip() for b in bonds.split(",") if b.strip()])
    if fmt == "pairs":
        for name, pairs in pair_lists(system).items():
            click.echo(f"${name}")
            for p in pairs:
                click.echo(f"  {p}")
    else:
        for s in system.slices:
            click.echo(f"${s.name}")
            _print_matrix(system.actors, system.actors, s.cells.astype(int))


def _strings(net, transposes, cap=None):
    return generate_strings(net, include_transposes=transposes, max_elements=cap)


@main.command()
@click.argument("network", type=click.Path())
@click.option("--symbolic", is_flag=True, help="Label table cells by words, not indices.")
@click.option("--transposes", is_flag=True, help="Include transposed generators.")
@click.option("--max-elements", type=int, default=None, help="Closure size cap.")
@click.option("--out", type=click.Path(), default=None, help="Write the result as JSON.")
@_guard
def semigroup(network, symbolic, transposes, max_elements, out):
    """Close the network relations under composition and print the table."""
    net = _load_network(network)
    sg = build_semigroup(
        _strings(net, transposes, max_elements),
        "symbolic" if symbolic else "numerical",
    )
    click.echo(f"order: {sg.order}")
    click.echo("st: " + " ".join(sg.st))
    _print_matrix(sg.st, sg.st, sg.table)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            json.dump(sg.to_dict(), fh, indent=1)
        click.echo(f"wrote {out}")


@main.command()
@click.argument("network", type=click.Path())
@click.option("--k", default=3, show_default=True, help="Maximum word length.")
@click.option("--transposes", is_flag=True)
@_guard
def equations(network, k, transposes):
    """Group words of bounded length that share an image."""
    net = _load_network(network)
    for label, members in word_equations(net, k, include_transposes=transposes).items():
        click.echo(f"{label}: " + " ".join(members))


@main.command()
@click.argument("network", type=click.Path())
@click.option("--transposes", is_flag=True)
@_guard
def order(network, transposes):
    """Containment order among the distinct string relations."""
    net = _load_network(network)
    po = string_partial_order(_strings(net, transposes))
    _print_matrix(po.labels, po.labels, po.matrix.astype(int))


@main.command()
@click.argument("network", type=click.Path())
@click.option("--k", default=3, show_default=True)
@click.option("--transposes", is_flag=True)
@click.option("--out", type=click.Path(), default=None, help="Write the box as JSON.")
@_guard
def rbox(network, k, transposes, out):
    """Stack all word images up to length k (duplicates kept)."""
    net = _load_network(network)
    box = build_relation_box(net, k=k, include_transposes=transposes)
    click.echo(f"actors: {len(box.actors)}  words: {box.depth}  k: {box.k}")
    click.echo(" ".join(box.word_labels))
    if out:
        data = {
            "actors": list(box.actors),
            "labels": list(box.word_labels),
            "slices": [[[int(x) for x in row] for row in s] for s in box.slices],
        }
        with open(out, "w", encoding="utf-8") as fh:
            json.dump(data, fh)
        click.echo(f"wrote {out}")


@main.command()
@click.argument("network", type=click.Path())
@click.option("--k", default=3, show_default=True)
@click.option("--transposes", is_flag=True)
@_guard
def cph(network, k, transposes):
    """Cumulated actor hierarchy over the relation box."""
    net = _load_network(network)
    po = cumulated_hierarchy(build_relation_box(net, k=k, include_transposes=transposes))
    _print_matrix(po.labels, po.labels, po.matrix.astype(int))


def _parse_classes(spec):
    if "=" in spec:
        out = {}
        for part in spec.split(","):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise ValidationError(f"bad class assignment {part!r}")
            actor, cls = part.split("=", 1)
            out[actor.strip()] = cls.strip()
        return out
    data = _read_json(spec)
    if not isinstance(data, dict):
        raise ValidationError("class file must map actors to classes")
    return data


@main.command()
@click.argument("network", type=click.Path())
@click.option(
    "--classes", required=True,
    help='Inline "actor=class,..." or a JSON file mapping actors to classes.',
)
@_guard
def reduce(network, classes):
    """Collapse actors into classes and print the blocked image matrices."""
    net = _load_network(network)
    system = reduce_network(net, _parse_classes(classes))
    click.echo("classes: " + " ".join(system.class_labels))
    for img in system.images:
        click.echo(f"${img.name}")
        _print_matrix(system.class_labels, system.class_labels, img.cells.astype(int))


@main.command()
@click.argument("semigroup_file", type=click.Path())
@click.option("--poset", "poset_file", type=click.Path(), default=None)
@click.option(
    "--mode", type=click.Choice(["cc", "mca"]), default="cc", show_default=True,
    help="Pair-collapse congruences, or quotients by meet complements of atoms.",
)
@_guard
def decomp(semigroup_file, poset_file, mode):
    """Class vectors (and quotients) that decompose a multiplication table."""
    sg = semigroup_from_dict(_read_json(semigroup_file))
    click.echo("elements: " + " ".join(sg.st))
    if mode == "cc":
        for i, c in enumerate(find_congruences(sg), start=1):
            click.echo(f"[{i}] " + " ".join(str(x) for x in c.vector))
        return
    if not poset_file:
        raise ValidationError("mca mode needs --poset")
    lattice = factorize(sg, Poset.from_dict(_read_json(poset_file)))
    for i, red in enumerate(decompose(sg, lattice, mode="mca"), start=1):
        click.echo(f"[{i}] " + " ".join(str(x) for x in red.vector))
        reps = red.order.labels
        _print_matrix(reps, reps, red.table)


@main.command()
@click.argument("network", type=click.Path())
@click.option("--positive", required=True, help="Slice holding the positive ties.")
@click.option("--negative", required=True, help="Slice holding the negative ties.")
@_guard
def signed(network, positive, negative):
    """Fold two tie matrices into one p/n/a/o letter matrix."""
    net = _load_network(network)
    s = make_signed(net.slice(positive), net.slice(negative))
    click.echo("val: " + " ".join(s.val))
    _print_matrix(s.actors, s.actors, s.cells)


@main.command()
@click.argument("network", type=click.Path())
@click.option("--positive", required=True)
@click.option("--negative", required=True)
@click.option("--cluster", is_flag=True, help="Use the five-letter cluster semiring.")
@click.option("--paths", is_flag=True, help="Respect tie direction (no symmetrizing).")
@click.option("--k", default=2, show_default=True, help="Walk length to accumulate.")
@click.option("--closure", is_flag=True, help="Iterate to the stable matrix instead.")
@_guard
def semiring(network, positive, negative, cluster, paths, k, closure):
    """Accumulate walk valences and judge balance or clusterability."""
    net = _load_network(network)
    s = make_signed(net.slice(positive), net.slice(negative))
    spec = CLUSTER if cluster else BALANCE
    if closure:
        q = balance_closure(s, spec, semipaths=not paths)
    else:
        q = semiring_powers(s, spec, k=k, semipaths=not paths)
    click.echo("val: " + " ".join(q.val))
    _print_matrix(q.actors, q.actors, q.cells)
    if closure:
        verdict = is_balanced(q)
        click.echo(f"verdict: {verdict.verdict}")
        if verdict.witness:
            click.echo(f"witness: {verdict.witness}")
        for grp in verdict.groups:
            click.echo("group: " + " ".join(grp))


@main.command()
@click.argument("context", type=click.Path())
@click.option("--reduced", is_flag=True, help="Print reduced instead of full labels.")
@click.option("--order", "show_order", is_flag=True, help="Also print the concept order.")
@click.option("--filter", "filter_of", default=None, help="Concepts whose filter to take.")
@click.option("--ideal", is_flag=True, help="Take ideals instead of filters.")
@_guard
def galois(context, reduced, show_order, filter_of, ideal):
    """List the concepts of a context, with order and filters on request."""
    ctx = _load_context(context)
    cs = concepts(ctx)
    click.echo(f"concepts: {len(cs)}")
    for c in cs:
        if reduced:
            click.echo(f"c{c.index}: {c.label(reduced=True)}")
        else:
            intent = ", ".join(sorted(c.intent))
            ext = ", ".join(sorted(c.extent))
            click.echo(f"c{c.index}: {{{intent}}} {{{ext}}}")
    if show_order or filter_of:
        co = concept_order(cs)
        if show_order:
            _print_matrix(co.labels, co.labels, co.matrix.astype(int))
        if filter_of:
            selectors = [x.strip() for x in filter_of.split(",") if x.strip()]
            for idx, lbl in filter_ideal(co, selectors, ideal=ideal).items():
                click.echo(f"{idx}: {lbl}")


@main.command("filter")
@click.argument("context", type=click.Path())
@click.option("--of", required=True, help="Concept indices or reduced labels, comma-separated.")
@click.option("--ideal", is_flag=True)
@_guard
def filter_cmd(context, of, ideal):
    """Order filter (or ideal) generated by chosen concepts."""
    ctx = _load_context(context)
    co = concept_order(concepts(ctx))
    selectors = [x.strip() for x in of.split(",") if x.strip()]
    for idx, lbl in filter_ideal(co, selectors, ideal=ideal).items():
        click.echo(f"{idx}: {lbl}")


@main.command("dot")
@click.argument("kind", type=click.Choice(["hasse", "cayley", "multigraph", "bipartite"]))
@click.argument("input_file", type=click.Path())
@click.option("--out", type=click.Path(), default=None)
@click.option("--drop-incomparable", is_flag=True, help="hasse: omit isolated elements.")
@_guard
def dot_cmd(kind, input_file, out, drop_incomparable):
    """Emit a DOT drawing of a poset, table, network, or context."""
    if kind == "hasse":
        doc = dotmod.hasse_dot(
            Poset.from_dict(_read_json(input_file)), drop_incomparable=drop_incomparable
        )
    elif kind == "cayley":
        doc = dotmod.cayley_dot(semigroup_from_dict(_read_json(input_file)))
    elif kind == "multigraph":
        doc = dotmod.multigraph_dot(_load_network(input_file))
    else:
        doc = dotmod.bipartite_dot(_load_context(input_file))
    _write_or_echo(doc.text, out)


if __name__ == "__main__":
    main()
