"""Deterministic generation of block-tree corpora.

Provides exhaustive enumeration of small planar trees (all labeled trees via
the Prufer bijection, crossed with all rotation systems up to a size bound)
and seeded random sampling beyond it.  The standard corpus pairs each tree
size e with block parameters (p, n) satisfying e | p - 1 and sweeps
exceptional vertex placements and both sign-anchor polarities.  Tests and
the ``verify`` command share this corpus so failures reproduce exactly.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .brauer_tree import BrauerTree

#: Block parameters exercised per tree size; every pair satisfies e | p - 1.
PARAMS_BY_E: dict[int, tuple[tuple[int, int], ...]] = {
    1: ((2, 1), (3, 1), (2, 2), (3, 2)),
    2: ((3, 1), (5, 1), (3, 2)),
    3: ((7, 1), (7, 2)),
    4: ((5, 1), (5, 2)),
    5: ((11, 1), (11, 2)),
    6: ((7, 2), (13, 1)),
}

#: Exhaustive rotation-system enumeration is used up to this many edges.
EXHAUSTIVE_LIMIT = 4

#: Seeded sample count per (e, params) pair beyond the exhaustive range.
RANDOM_SAMPLES = 120

DEFAULT_SEED = 20260819


def prufer_to_edges(seq: Sequence[int], num_vertices: int) -> list[tuple[int, int]]:
    """Decode a Prufer sequence into the edge list of a labeled tree."""
    degree = [1] * num_vertices
    for v in seq:
        degree[v] += 1
    edges = []
    seq = list(seq)
    leaves = sorted(v for v in range(num_vertices) if degree[v] == 1)
    for v in seq:
        leaf = leaves.pop(0)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[leaf] -= 1
        degree[v] -= 1
        if degree[v] == 1:
            # Insert keeping the candidate list sorted.
            lo, hi = 0, len(leaves)
            while lo < hi:
                mid = (lo + hi) // 2
                if leaves[mid] < v:
                    lo = mid + 1
                else:
                    hi = mid
            leaves.insert(lo, v)
    last = [v for v in range(num_vertices) if degree[v] == 1]
    edges.append((min(last), max(last)))
    return edges


def all_labeled_trees(num_vertices: int) -> Iterator[list[tuple[int, int]]]:
    """All labeled trees on the given vertex set, via Prufer sequences."""
    if num_vertices < 2:
        raise ValueError("a tree needs at least two vertices")
    if num_vertices == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(num_vertices), repeat=num_vertices - 2):
        yield prufer_to_edges(seq, num_vertices)


def random_labeled_tree(rng: random.Random, num_vertices: int) -> list[tuple[int, int]]:
    if num_vertices == 2:
        return [(0, 1)]
    seq = [rng.randrange(num_vertices) for _ in range(num_vertices - 2)]
    return prufer_to_edges(seq, num_vertices)


def _incidence(edges: Sequence[tuple[int, int]], num_vertices: int) -> list[list[int]]:
    inc: list[list[int]] = [[] for _ in range(num_vertices)]
    for idx, (a, b) in enumerate(edges):
        inc[a].append(idx)
        inc[b].append(idx)
    return inc


def all_rotation_systems(
    edges: Sequence[tuple[int, int]], num_vertices: int
) -> Iterator[list[tuple[int, ...]]]:
    """All distinct rotation systems: cyclic edge orders at every vertex.

    Cyclic orders are normalised by fixing each vertex's first incident edge
    and permuting the rest, giving prod (deg - 1)! systems.
    """
    inc = _incidence(edges, num_vertices)
    per_vertex = []
    for v in range(num_vertices):
        first, rest = inc[v][0], inc[v][1:]
        options = [
            (first,) + perm for perm in itertools.permutations(rest)
        ]
        per_vertex.append(options)
    for combo in itertools.product(*per_vertex):
        yield list(combo)


def random_rotation_system(
    rng: random.Random, edges: Sequence[tuple[int, int]], num_vertices: int
) -> list[tuple[int, ...]]:
    inc = _incidence(edges, num_vertices)
    rotation = []
    for v in range(num_vertices):
        order = inc[v][:]
        rng.shuffle(order)
        # Normalise the cyclic order to start at the smallest edge index.
        pivot = order.index(min(order))
        rotation.append(tuple(order[pivot:] + order[:pivot]))
    return rotation


def make_tree(
    p: int,
    n: int,
    edges: Sequence[tuple[int, int]],
    rotation: Sequence[Sequence[int]],
    exceptional: Optional[int],
    anchor: Optional[int],
) -> BrauerTree:
    """Assemble a BrauerTree from index-level data with standard labels."""
    num_vertices = len(edges) + 1
    vertices = [(f"v{i}", i == exceptional) for i in range(num_vertices)]
    edge_items = [
        (f"E{k}", (f"v{a}", f"v{b}")) for k, (a, b) in enumerate(edges)
    ]
    rot = {
        f"v{i}": [f"E{k}" for k in rotation[i]] for i in range(num_vertices)
    }
    return BrauerTree(
        p=p,
        n=n,
        vertices=vertices,
        edges=edge_items,
        rotation=rot,
        positive_vertex=None if anchor is None else f"v{anchor}",
    )


def _flip_anchor(
    edges: Sequence[tuple[int, int]], tree: BrauerTree
) -> int:
    """A vertex index in the opposite sign class of the default anchor."""
    default = tree.positive_vertex
    neighbour = tree.other_endpoint(tree.rotation_at(default)[0], default)
    return int(neighbour[1:])


def _trees_for_shape(
    p: int,
    n: int,
    e: int,
    edges: Sequence[tuple[int, int]],
    rotation: Sequence[Sequence[int]],
) -> Iterator[BrauerTree]:
    """All exceptional placements and both anchor polarities for one shape."""
    m = (p**n - 1) // e
    placements: list[Optional[int]] = (
        list(range(e + 1)) if m > 1 else [None]
    )
    for exc in placements:
        base = make_tree(p, n, edges, rotation, exc, None)
        yield base
        yield make_tree(p, n, edges, rotation, exc, _flip_anchor(edges, base))


def corpus_for(
    e: int,
    params_list: Optional[Sequence[tuple[int, int]]] = None,
    seed: int = DEFAULT_SEED,
    samples: int = RANDOM_SAMPLES,
) -> list[BrauerTree]:
    """The corpus slice for one tree size.

    Exhaustive over labeled trees and rotation systems for e <= 4; seeded
    random (tree, rotation, placement, anchor) samples beyond that.
    """
    if params_list is None:
        params_list = PARAMS_BY_E[e]
    out: list[BrauerTree] = []
    num_vertices = e + 1
    if e <= EXHAUSTIVE_LIMIT:
        for edges in all_labeled_trees(num_vertices):
            for rotation in all_rotation_systems(edges, num_vertices):
                for p, n in params_list:
                    out.extend(_trees_for_shape(p, n, e, edges, rotation))
    else:
        for p, n in params_list:
            rng = random.Random(seed * 1000003 + e * 10007 + p * 101 + n)
            m = (p**n - 1) // e
            for _ in range(samples):
                edges = random_labeled_tree(rng, num_vertices)
                rotation = random_rotation_system(rng, edges, num_vertices)
                exc = rng.randrange(num_vertices) if m > 1 else None
                base = make_tree(p, n, edges, rotation, exc, None)
                if rng.random() < 0.5:
                    out.append(base)
                else:
                    out.append(
                        make_tree(p, n, edges, rotation, exc, _flip_anchor(edges, base))
                    )
    return out


@lru_cache(maxsize=None)
def standard_corpus(seed: int = DEFAULT_SEED) -> tuple[BrauerTree, ...]:
    """The full deterministic corpus across all tree sizes (cached)."""
    out: list[BrauerTree] = []
    for e in sorted(PARAMS_BY_E):
        out.extend(corpus_for(e, seed=seed))
    return tuple(out)
