"""Command line interface: inspect blocks, classify, and cross-verify.

The ``atlas`` entry point reads a block description from a JSON file (tree,
rotation, optional sign anchor, optional Dade exponent bits) and prints
classification reports, the liftable catalogue, boundary data, or Graphviz
renderings.  ``atlas verify`` replays the closed-form/oracle cross-checks
over a deterministic corpus.

Exit codes: 0 on success, 2 on any input problem, 3 when an internal
consistency check fails.  All output is deterministic: fixed column layout,
sorted JSON keys, no timestamps.
"""

from __future__ import annotations

import functools
import itertools
import json
import os
import sys
from typing import Optional

import click

from . import treegen
from .brauer_tree import BrauerTree, BrauerTreeError, Hook
from .classifier import (
    ConsistencyError,
    JanuszDescriptor,
    NotLiftable,
    ShapeType,
    classify_trivial_source,
    distance_to_hook,
    dplus_trivial_source,
    hook_is_trivial_source,
    lift_character,
    liftable_by_distance,
    liftable_catalog,
    position_of,
)
from .cyclic_modules import (
    CyclicGroupParams,
    oracle_build_wd,
    oracle_u_q,
    restricted_action,
    u_q,
)
from .dade import DadeElement, ParamMismatch, enumerate_sources
from .field_linalg import decompose_unipotent, is_prime

EXIT_INPUT = 2
EXIT_CONSISTENCY = 3


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ConsistencyError as exc:
            click.echo(f"consistency failure: {exc}", err=True)
            sys.exit(EXIT_CONSISTENCY)
        except BrokenPipeError:
            os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
            sys.exit(0)
        except (
            BrauerTreeError,
            ParamMismatch,
            NotLiftable,
            ValueError,
            OSError,
            json.JSONDecodeError,
        ) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INPUT)

    return wrapper


def _load_block(path: str) -> tuple[BrauerTree, DadeElement]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    tree = BrauerTree.from_dict(data)
    tail = data.get("dade", [0] * (tree.n - 1))
    dade = DadeElement.from_input_bits(tree.params, tail)
    return tree, dade


def _render_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(headers[i]), *(len(r[i]) for r in rows)) if rows else len(headers[i])
        for i in range(len(headers))
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def _direction_str(direction: tuple[int, int]) -> str:
    return "".join("+" if d > 0 else "-" for d in direction)


def _hook_str(h: Optional[Hook]) -> str:
    if h is None:
        return "-"
    sign = "+" if h.sign > 0 else "-"
    return f"{h.top_edge}@{h.body_vertex}({sign})"


def _character_str(tree: BrauerTree, desc: JanuszDescriptor) -> str:
    if desc.type_tag == ShapeType.PROJECTIVE:
        a, b = sorted(tree.endpoints(desc.path[0]))
        return f"{a}+{b}"
    ch = lift_character(tree, desc)
    parts = list(ch.nonexceptional_constituents)
    if ch.exceptional_count:
        parts.append(f"{ch.exceptional_count}*exc")
    return "+".join(parts) if parts else "0"


def _descriptor_dict(tree: BrauerTree, desc: JanuszDescriptor) -> dict:
    payload = {
        "type": desc.type_tag.value,
        "vertex": desc.vertex,
        "path": list(desc.path),
        "direction": list(desc.direction),
        "multiplicity": desc.multiplicity,
        "interior": desc.interior,
    }
    if desc.type_tag != ShapeType.PROJECTIVE:
        dist, ref = distance_to_hook(tree, desc)
        pos = position_of(tree, desc)
        payload["reference_distance"] = dist
        payload["reference_hook"] = {
            "top_edge": ref.top_edge,
            "body_vertex": ref.body_vertex,
            "sign": ref.sign,
        }
        payload["dplus"] = pos.dplus
        payload["dminus"] = pos.dminus
    return payload


@click.group()
def main() -> None:
    """Exact combinatorics of blocks with cyclic defect groups."""


@main.command()
@click.option("--tree", "tree_file", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Block description JSON file.")
@click.option("--vertex-index", "-i", type=int, default=None,
              help="Vertex subgroup index i (default: n, the full defect group).")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]),
              default="table", show_default=True)
@_guarded
def classify(tree_file: str, vertex_index: Optional[int], fmt: str) -> None:
    """Classify the trivial source modules with vertex D_i."""
    tree, dade = _load_block(tree_file)
    i = tree.n if vertex_index is None else vertex_index
    report = classify_trivial_source(tree, dade, i)
    if fmt == "json":
        payload = {
            "block": {"p": tree.p, "n": tree.n, "e": tree.e, "m": tree.m},
            "dade_bits": list(dade.bits),
            "vertex_index": report.vertex_index,
            "ell": report.ell,
            "dplus": report.dplus.dplus,
            "dminus": report.dplus.dminus,
            "divisibility_case": report.divisibility_case,
            "descriptors": [_descriptor_dict(tree, d) for d in report.descriptors],
        }
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
        return
    click.echo(f"block: p={tree.p} n={tree.n} e={tree.e} m={tree.m}")
    click.echo(f"source bits: {list(dade.bits)}")
    case = report.divisibility_case or "n/a"
    click.echo(
        f"vertex D_{report.vertex_index}: ell={report.ell} "
        f"d+={report.dplus.dplus} d-={report.dplus.dminus} case={case}"
    )
    rows = []
    for desc in report.descriptors:
        dist, ref = distance_to_hook(tree, desc)
        rows.append([
            desc.type_tag.value,
            desc.vertex,
            str(desc.multiplicity),
            "-" if desc.interior is None else str(desc.interior),
            _direction_str(desc.direction),
            ",".join(desc.path),
            str(dist),
            _hook_str(ref),
        ])
    click.echo(_render_table(
        ["type", "vertex", "mu", "l", "dir", "path", "d(ref)", "reference"],
        rows,
    ))


@main.command()
@click.option("--tree", "tree_file", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["table", "json"]),
              default="table", show_default=True)
@_guarded
def liftable(tree_file: str, fmt: str) -> None:
    """List the catalogue of liftable modules with boundary distances."""
    tree, _ = _load_block(tree_file)
    entries = liftable_catalog(tree)
    rim = tree.e * tree.m - 1
    if fmt == "json":
        payload = {
            "block": {"p": tree.p, "n": tree.n, "e": tree.e, "m": tree.m},
            "entries": [],
            "total": len(entries),
        }
        for entry in entries:
            item = _descriptor_dict(tree, entry.descriptor)
            item["character"] = _character_str(tree, entry.descriptor)
            payload["entries"].append(item)
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
        return
    rows = []
    projective = 0
    for entry in entries:
        desc = entry.descriptor
        if desc.type_tag == ShapeType.PROJECTIVE:
            projective += 1
            rows.append([
                desc.type_tag.value, desc.vertex, str(desc.multiplicity),
                ",".join(desc.path), "-", "-", "-",
                _character_str(tree, desc),
            ])
            continue
        d_min = min(entry.distance, rim - entry.distance)
        rows.append([
            desc.type_tag.value,
            desc.vertex,
            str(desc.multiplicity),
            ",".join(desc.path),
            str(entry.distance),
            _hook_str(entry.reference_hook),
            str(d_min),
            _character_str(tree, desc),
        ])
    click.echo(_render_table(
        ["type", "vertex", "mu", "path", "d(ref)", "reference", "d_min", "character"],
        rows,
    ))
    click.echo(
        f"total {len(entries)} entries: {projective} projective, "
        f"{len(entries) - projective} non-projective"
    )


@main.command()
@click.option("--tree", "tree_file", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["table", "json"]),
              default="table", show_default=True)
@_guarded
def hooks(tree_file: str, fmt: str) -> None:
    """List the 2e boundary modules (hooks) with their composition series."""
    tree, dade = _load_block(tree_file)
    all_hooks = tree.hooks()
    if fmt == "json":
        payload = []
        for h in all_hooks:
            payload.append({
                "top_edge": h.top_edge,
                "body_vertex": h.body_vertex,
                "character": h.character,
                "sign": h.sign,
                "composition": list(h.composition),
                "trivial_source": hook_is_trivial_source(tree, dade, h),
            })
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
        return
    rows = []
    for h in all_hooks:
        rows.append([
            h.top_edge,
            h.body_vertex,
            "+" if h.sign > 0 else "-",
            str(len(h.composition)),
            ",".join(h.composition),
            "yes" if hook_is_trivial_source(tree, dade, h) else "no",
        ])
    click.echo(_render_table(
        ["top", "body", "sign", "length", "composition", "trivial source"],
        rows,
    ))


@main.command()
@click.option("--tree", "tree_file", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["table", "json"]),
              default="table", show_default=True)
@_guarded
def walk(tree_file: str, fmt: str) -> None:
    """Print the syzygy walk around the boundary of the stable component."""
    tree, _ = _load_block(tree_file)
    sequence = tree.greens_walk()
    if fmt == "json":
        payload = [
            {
                "step": idx,
                "top_edge": h.top_edge,
                "body_vertex": h.body_vertex,
                "sign": h.sign,
                "length": len(h.composition),
            }
            for idx, h in enumerate(sequence)
        ]
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
        return
    rows = [
        [str(idx), h.top_edge, h.body_vertex,
         "+" if h.sign > 0 else "-", str(len(h.composition))]
        for idx, h in enumerate(sequence)
    ]
    click.echo(_render_table(["step", "top", "body", "sign", "length"], rows))


@main.command()
@click.option("--tree", "tree_file", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["table", "json"]),
              default="table", show_default=True)
@_guarded
def pims(tree_file: str, fmt: str) -> None:
    """Print the Loewy structure of the projective indecomposables."""
    tree, _ = _load_block(tree_file)
    structures = [tree.pim(edge) for edge in sorted(tree.edge_labels)]
    if fmt == "json":
        payload = [
            {
                "edge": s.edge,
                "q_a": list(s.q_a),
                "q_b": list(s.q_b),
                "character": list(s.projective_character),
            }
            for s in structures
        ]
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
        return
    rows = [
        [s.edge,
         "+".join(s.projective_character),
         ",".join(s.q_a) if s.q_a else "-",
         ",".join(s.q_b) if s.q_b else "-"]
        for s in structures
    ]
    click.echo(_render_table(["edge", "character", "heart (a)", "heart (b)"], rows))


@main.command(name="emit-dot")
@click.option("--tree", "tree_file", required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option("--what", type=click.Choice(["tree", "tube"]), default="tree",
              show_default=True)
@_guarded
def emit_dot(tree_file: str, what: str) -> None:
    """Emit a Graphviz rendering of the tree or of the stable component."""
    tree, dade = _load_block(tree_file)
    if what == "tree":
        click.echo(_dot_tree(tree))
    else:
        click.echo(_dot_tube(tree, dade))


def _dot_tree(tree: BrauerTree) -> str:
    lines = ["graph block_tree {", '  node [shape=circle fontname="Helvetica"];']
    for v in tree.vertex_labels:
        sign = "+" if tree.sign(v) > 0 else "-"
        attrs = [f'label="{v}\\n({sign})"']
        if tree.is_exceptional(v):
            attrs.append("shape=doublecircle")
            attrs.append("style=filled")
            attrs.append("fillcolor=lightgrey")
        lines.append(f'  "{v}" [{" ".join(attrs)}];')
    for v in tree.vertex_labels:
        lines.append(f"  // rotation at {v}: {' '.join(tree.rotation_at(v))}")
    seen = set()
    for v in tree.vertex_labels:
        for edge in tree.rotation_at(v):
            if edge in seen:
                continue
            seen.add(edge)
            a, b = tree.endpoints(edge)
            lines.append(f'  "{a}" -- "{b}" [label="{edge}"];')
    lines.append("}")
    return "\n".join(lines)


def _dot_tube(tree: BrauerTree, dade: DadeElement) -> str:
    e, m = tree.e, tree.m
    rows = e * m  # d+ values 0 .. em-1
    highlight: dict[int, list[int]] = {}
    for i in range(1, tree.n + 1):
        pos = dplus_trivial_source(tree.params, dade, i)
        highlight.setdefault(pos.dplus, []).append(i)
    lines = [
        "digraph stable_tube {",
        "  rankdir=BT;",
        '  node [shape=box fontname="Helvetica"];',
        f'  label="stable component: {e} columns, {rows} rows '
        f'(d+ from 0 to {rows - 1}); source bits {list(dade.bits)}";',
    ]
    for r in range(rows):
        marks = "".join(f" D_{i}" for i in highlight.get(r, []))
        for c in range(e):
            attrs = [f'label="c{c} d+={r}{marks}"']
            if r in highlight:
                attrs.append("style=filled fillcolor=lightblue")
            elif r == 0 or r == rows - 1:
                attrs.append("style=filled fillcolor=lightyellow")
            lines.append(f'  n{c}_{r} [{" ".join(attrs)}];')
    for r in range(rows):
        for c in range(e):
            if r + 1 < rows:
                lines.append(f"  n{c}_{r} -> n{c}_{r + 1};")
            nc = (c + 1) % e
            style = " [style=dashed]" if nc != c + 1 else ""
            if e > 1:
                lines.append(f"  n{c}_{r} -> n{nc}_{r}{style};")
    lines.append("}")
    return "\n".join(lines)


# -- verification sweep -------------------------------------------------------


def _prime_powers(max_pn: int):
    for p in range(2, max_pn + 1):
        if not is_prime(p):
            continue
        n = 1
        while p**n <= max_pn:
            yield p, n
            n += 1


def _all_elements(params: CyclicGroupParams) -> list[DadeElement]:
    seen = set()
    out = []
    for bits in itertools.product((0, 1), repeat=params.n):
        element = DadeElement(params, bits)
        if element.bits in seen:
            continue
        seen.add(element.bits)
        out.append(element)
    return out


@main.command()
@click.option("--max-pn", type=int, default=128, show_default=True,
              help="Oracle sweep bound on the defect group order (>= 4).")
@click.option("--seed", type=int, default=treegen.DEFAULT_SEED, show_default=True,
              help="Seed for the randomized part of the tree corpus.")
@_guarded
def verify(max_pn: int, seed: int) -> None:
    """Cross-check the closed forms against the matrix oracle and replay the
    classification invariants over the standard tree corpus."""
    if max_pn < 4:
        raise ValueError("--max-pn must be at least 4")
    checks = 0

    for p, n in _prime_powers(max_pn):
        params = CyclicGroupParams(p, n)
        for element in _all_elements(params):
            action = oracle_build_wd(params, element)
            decomp = decompose_unipotent(action)
            if not decomp.is_indecomposable or action.rows != element.dimension():
                _fail_verify(
                    "dade-dimension",
                    f"p={p} n={n} bits={list(element.bits)}: oracle dimension "
                    f"{action.rows}, closed form {element.dimension()}",
                )
            checks += 1
            for i in range(1, n + 1):
                res = decompose_unipotent(restricted_action(params, action, i))
                caps = [c for c, _ in res.parts if c % p != 0]
                if not caps or caps[0] != element.ell(i):
                    _fail_verify(
                        "cap-dimension",
                        f"p={p} n={n} bits={list(element.bits)} i={i}: oracle cap "
                        f"{caps[:1]}, closed form {element.ell(i)}",
                    )
                induced = oracle_u_q(params, element, i, action=action)
                if induced != u_q(params, element, i):
                    _fail_verify(
                        "induced-cap",
                        f"p={p} n={n} bits={list(element.bits)} i={i}: oracle "
                        f"{induced}, closed form {u_q(params, element, i)}",
                    )
                checks += 2

    for tree in treegen.standard_corpus(seed):
        checks += _verify_tree(tree)

    click.echo(f"ok: {checks} checks passed")


def _fail_verify(label: str, detail: str, tree: Optional[BrauerTree] = None) -> None:
    click.echo(f"verify failed [{label}]: {detail}", err=True)
    if tree is not None:
        click.echo("reproducer tree:", err=True)
        click.echo(json.dumps(tree.to_dict(), indent=2, sort_keys=True), err=True)
    sys.exit(EXIT_CONSISTENCY)


def _verify_tree(tree: BrauerTree) -> int:
    checks = 0
    params = tree.params
    rim = params.order - 2

    sequence = tree.greens_walk()
    if len(sequence) != 2 * tree.e:
        _fail_verify("walk-length", f"{len(sequence)} != {2 * tree.e}", tree)
    if tree.omega_on_boundary(sequence[-1]) != sequence[0]:
        _fail_verify("walk-closure", "syzygy orbit did not close", tree)
    signs = [h.sign for h in sequence]
    if any(signs[k] == signs[(k + 1) % len(signs)] for k in range(len(signs))):
        _fail_verify("walk-signs", "signs do not alternate", tree)
    tops = sorted(h.top_edge for h in sequence)
    if tops != sorted(list(tree.edge_labels) * 2):
        _fail_verify("walk-tops", "each edge must occur exactly twice", tree)
    checks += 4

    entries = liftable_catalog(tree)
    e, m = tree.e, tree.m
    expected_total = m + 1 if e == 1 else e * (2 * m + 1)
    expected_projective = 1 if e == 1 else e
    projective = sum(
        1 for x in entries if x.descriptor.type_tag == ShapeType.PROJECTIVE
    )
    if len(entries) != expected_total or projective != expected_projective:
        _fail_verify(
            "catalogue-count",
            f"{len(entries)} entries ({projective} projective), expected "
            f"{expected_total} ({expected_projective})",
            tree,
        )
    realized = set()
    for entry in entries:
        if entry.distance is None:
            continue
        d_min = min(entry.distance, rim - entry.distance)
        realized.add(d_min)
        if not liftable_by_distance(e, m, d_min):
            _fail_verify(
                "catalogue-distance",
                f"{entry.descriptor.type_tag.value} at minimal distance {d_min}",
                tree,
            )
    admissible = {
        d for d in range(rim // 2 + 1) if liftable_by_distance(e, m, d)
    }
    if realized != admissible:
        _fail_verify(
            "distance-realization",
            f"realized {sorted(realized)} != admissible {sorted(admissible)}",
            tree,
        )
    checks += 2 + len(entries)

    for source in enumerate_sources(params):
        for i in range(1, params.n + 1):
            report = classify_trivial_source(tree, source, i)
            expected = source.ell(i) * params.quotient_order(i) - 1
            if report.dplus.dplus != expected:
                _fail_verify(
                    "row-position",
                    f"bits={list(source.bits)} i={i}: d+={report.dplus.dplus}, "
                    f"expected {expected}",
                    tree,
                )
            if report.dplus.dplus + report.dplus.dminus != rim:
                _fail_verify(
                    "rim-identity",
                    f"bits={list(source.bits)} i={i}",
                    tree,
                )
            checks += 1 + len(report.descriptors)
    return checks


if __name__ == "__main__":  # pragma: no cover
    main()
