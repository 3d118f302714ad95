"""Planar-embedded Brauer trees and their boundary combinatorics.

A block with cyclic defect group of order p^n and inertial index e is
described by a tree with e edges (the simple modules) and e+1 vertices (the
ordinary characters), equipped with a planar embedding: for every vertex, a
cyclic counter-clockwise ordering of the edges incident to it.  When the
multiplicity m = (p^n - 1)/e exceeds 1, exactly one vertex is exceptional
and stands for m characters at once.  The two endpoint classes of the
bipartite tree carry opposite signs; the sign function is part of the input
(an anchor vertex declared positive), with a deterministic default.

This module validates such trees and implements the walk combinatorics the
classification rests on: hooks and cohooks (the boundary modules of the
stable Auslander-Reiten component), projective Loewy structure, the action
of the syzygy operator on the boundary (Green's walk around the tree), and
unique paths to the exceptional vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .cyclic_modules import CyclicGroupParams
from .field_linalg import is_prime


class BrauerTreeError(ValueError):
    """Base class for Brauer tree validation and query errors."""


class NotATree(BrauerTreeError):
    """The underlying graph is not a tree (or is structurally malformed)."""


class BadRotation(BrauerTreeError):
    """The rotation system does not list each vertex's incident edges once."""


class ExceptionalCount(BrauerTreeError):
    """Wrong number of exceptional vertices for the multiplicity."""


class DivisibilityViolation(BrauerTreeError):
    """The inertial index does not divide p - 1."""


class SignConflict(BrauerTreeError):
    """The requested sign anchor does not name a vertex of the tree."""


class EdgeCountMismatch(BrauerTreeError):
    """A declared inertial index disagrees with the number of edges."""


class NotIncident(BrauerTreeError):
    """The given vertex is not an endpoint of the given edge."""


class NoExceptionalVertex(BrauerTreeError):
    """The operation needs an exceptional vertex but multiplicity is 1."""


class NoNonExceptionalLeaf(BrauerTreeError):
    """The chosen edge has no non-exceptional leaf endpoint."""


@dataclass(frozen=True)
class Hook:
    """A boundary module of the stable component, presented as a hook or cohook.

    ``composition`` lists the composition factors (edge labels) from top to
    socle: a hook is the simple top followed by the uniserial walk around the
    body vertex, a cohook the same factors with the walk on top.  The module
    affords the character of the body vertex, whose sign it inherits.
    """

    top_edge: str
    body_vertex: str
    kind: str
    composition: tuple[str, ...]
    character: str
    sign: int

    def __post_init__(self) -> None:
        if self.kind not in ("hook", "cohook"):
            raise ValueError(f"unknown hook kind {self.kind!r}")
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 or -1")


@dataclass(frozen=True)
class PimStructure:
    """Loewy structure of a projective indecomposable: simple top and socle
    equal to the edge's simple, heart the direct sum of the two walks around
    the endpoints, ordinary character the sum over the endpoint pair."""

    edge: str
    q_a: tuple[str, ...]
    q_b: tuple[str, ...]
    projective_character: tuple[str, str]


class BrauerTree:
    """A validated planar-embedded Brauer tree with sign function.

    Construction performs full validation and raises the typed errors above.
    Vertex and edge labels are opaque strings; all deterministic orderings
    are lexicographic on labels.
    """

    def __init__(
        self,
        p: int,
        n: int,
        vertices: Sequence[tuple[str, bool]],
        edges: Sequence[tuple[str, tuple[str, str]]],
        rotation: Mapping[str, Sequence[str]],
        e: Optional[int] = None,
        positive_vertex: Optional[str] = None,
    ):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if n < 1:
            raise ValueError("n must be at least 1")
        self.p = int(p)
        self.n = int(n)

        vertex_list = [(str(lbl), bool(exc)) for lbl, exc in vertices]
        labels = [lbl for lbl, _ in vertex_list]
        if not labels:
            raise NotATree("a tree needs at least one vertex")
        if len(set(labels)) != len(labels):
            raise NotATree("duplicate vertex labels")
        self.vertex_labels: tuple[str, ...] = tuple(labels)
        self._vertex_set = set(labels)

        edge_list = [(str(lbl), (str(a), str(b))) for lbl, (a, b) in edges]
        edge_labels = [lbl for lbl, _ in edge_list]
        if len(set(edge_labels)) != len(edge_labels):
            raise NotATree("duplicate edge labels")
        for lbl, (a, b) in edge_list:
            if a not in self._vertex_set or b not in self._vertex_set:
                raise NotATree(f"edge {lbl!r} has an unknown endpoint")
            if a == b:
                raise NotATree(f"edge {lbl!r} is a loop")
        self.edge_labels: tuple[str, ...] = tuple(edge_labels)
        self._endpoints = {lbl: ab for lbl, ab in edge_list}

        if e is not None and e != len(edge_list):
            raise EdgeCountMismatch(
                f"declared inertial index {e} but the tree has {len(edge_list)} edges"
            )
        self.e = len(edge_list)
        if self.e < 1:
            raise NotATree("a block tree has at least one edge")
        if len(vertex_list) != self.e + 1:
            raise NotATree(
                f"a tree with {self.e} edges must have {self.e + 1} vertices"
            )
        self._check_connected()

        if (self.p - 1) % self.e != 0:
            raise DivisibilityViolation(
                f"inertial index {self.e} does not divide p - 1 = {self.p - 1}"
            )
        self.m = (self.p**self.n - 1) // self.e

        exceptional = [lbl for lbl, exc in vertex_list if exc]
        if self.m > 1:
            if len(exceptional) != 1:
                raise ExceptionalCount(
                    f"multiplicity {self.m} needs exactly one exceptional vertex, "
                    f"got {len(exceptional)}"
                )
            self.exceptional_vertex: Optional[str] = exceptional[0]
        else:
            if exceptional:
                raise ExceptionalCount(
                    "multiplicity 1 admits no exceptional vertex"
                )
            self.exceptional_vertex = None

        incident: dict[str, list[str]] = {lbl: [] for lbl in labels}
        for lbl, (a, b) in edge_list:
            incident[a].append(lbl)
            incident[b].append(lbl)
        rot: dict[str, tuple[str, ...]] = {}
        if set(rotation.keys()) != self._vertex_set:
            raise BadRotation("rotation must list every vertex exactly once")
        for v in labels:
            seq = tuple(str(x) for x in rotation[v])
            if sorted(seq) != sorted(incident[v]):
                raise BadRotation(
                    f"rotation at {v!r} is not a permutation of its incident edges"
                )
            rot[v] = seq
        self._rotation = rot

        anchor = positive_vertex
        if anchor is not None:
            anchor = str(anchor)
            if anchor not in self._vertex_set:
                raise SignConflict(f"anchor vertex {anchor!r} is not in the tree")
        else:
            candidates = sorted(self.non_exceptional_leaves())
            anchor = candidates[0]
        self.positive_vertex = anchor
        self._sign = self._propagate_signs(anchor)

    # -- validation helpers ----------------------------------------------------

    def _check_connected(self) -> None:
        seen = {self.vertex_labels[0]}
        frontier = [self.vertex_labels[0]]
        adjacency: dict[str, list[str]] = {v: [] for v in self.vertex_labels}
        for _, (a, b) in self._endpoints.items():
            adjacency[a].append(b)
            adjacency[b].append(a)
        while frontier:
            v = frontier.pop()
            for w in adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        if len(seen) != len(self.vertex_labels):
            raise NotATree("the graph is not connected")
        # |E| = |V| - 1 together with connectivity makes it a tree.

    def _propagate_signs(self, anchor: str) -> dict[str, int]:
        sign = {anchor: 1}
        frontier = [anchor]
        while frontier:
            v = frontier.pop()
            for edge in self._rotation[v]:
                w = self.other_endpoint(edge, v)
                if w not in sign:
                    sign[w] = -sign[v]
                    frontier.append(w)
        return sign

    # -- JSON interchange ----------------------------------------------------

    @classmethod
    def from_dict(cls, data: Mapping) -> "BrauerTree":
        """Build a tree from the interchange dictionary shape.

        Expected keys: p, n, optional e, vertices (list of {label,
        exceptional?}), edges (list of {label, endpoints}), rotation
        (vertex -> edge list), optional positive_vertex.  Extra keys (such
        as a Dade vector consumed elsewhere) are ignored.
        """
        try:
            p = int(data["p"])
            n = int(data["n"])
            raw_vertices = data["vertices"]
            raw_edges = data["edges"]
            raw_rotation = data["rotation"]
        except (KeyError, TypeError, ValueError) as exc:
            raise NotATree(f"malformed tree description: {exc}") from exc
        vertices = []
        for item in raw_vertices:
            vertices.append((item["label"], bool(item.get("exceptional", False))))
        edges = []
        for item in raw_edges:
            a, b = item["endpoints"]
            edges.append((item["label"], (a, b)))
        return cls(
            p=p,
            n=n,
            vertices=vertices,
            edges=edges,
            rotation=raw_rotation,
            e=int(data["e"]) if "e" in data else None,
            positive_vertex=data.get("positive_vertex"),
        )

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "e": self.e,
            "vertices": [
                {"label": v, "exceptional": v == self.exceptional_vertex}
                for v in self.vertex_labels
            ],
            "edges": [
                {"label": lbl, "endpoints": list(self._endpoints[lbl])}
                for lbl in self.edge_labels
            ],
            "rotation": {v: list(self._rotation[v]) for v in self.vertex_labels},
            "positive_vertex": self.positive_vertex,
        }

    # -- basic accessors ----------------------------------------------------

    @property
    def params(self) -> CyclicGroupParams:
        return CyclicGroupParams(self.p, self.n)

    def endpoints(self, edge: str) -> tuple[str, str]:
        return self._endpoints[edge]

    def other_endpoint(self, edge: str, vertex: str) -> str:
        a, b = self._endpoints[edge]
        if vertex == a:
            return b
        if vertex == b:
            return a
        raise NotIncident(f"vertex {vertex!r} is not an endpoint of edge {edge!r}")

    def rotation_at(self, vertex: str) -> tuple[str, ...]:
        return self._rotation[vertex]

    def degree(self, vertex: str) -> int:
        return len(self._rotation[vertex])

    def is_leaf(self, vertex: str) -> bool:
        return self.degree(vertex) == 1

    def is_exceptional(self, vertex: str) -> bool:
        return vertex == self.exceptional_vertex

    def multiplicity_at(self, vertex: str) -> int:
        return self.m if self.is_exceptional(vertex) else 1

    def leaves(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertex_labels if self.is_leaf(v))

    def non_exceptional_leaves(self) -> tuple[str, ...]:
        return tuple(
            v for v in self.leaves() if not self.is_exceptional(v)
        )

    def sign(self, vertex: str) -> int:
        return self._sign[vertex]

    def successor(self, edge: str, vertex: str) -> str:
        """Next edge counter-clockwise after ``edge`` around ``vertex``."""
        seq = self._rotation[vertex]
        if edge not in seq:
            raise NotIncident(
                f"vertex {vertex!r} is not an endpoint of edge {edge!r}"
            )
        idx = seq.index(edge)
        return seq[(idx + 1) % len(seq)]

    def predecessor(self, edge: str, vertex: str) -> str:
        """Previous edge counter-clockwise (i.e. next clockwise) around ``vertex``."""
        seq = self._rotation[vertex]
        if edge not in seq:
            raise NotIncident(
                f"vertex {vertex!r} is not an endpoint of edge {edge!r}"
            )
        idx = seq.index(edge)
        return seq[(idx - 1) % len(seq)]

    # -- walks, hooks, projectives -------------------------------------------

    def walk_around(self, edge: str, vertex: str) -> tuple[str, ...]:
        """Composition factors of the uniserial walk around ``vertex`` that a
        projective with top ``edge`` wraps between its top and socle.

        For a non-exceptional vertex of degree d this is the d-1 other
        incident edges in successor order.  For the exceptional vertex the
        walk goes around m times, passing through ``edge`` itself m-1 times
        in between.
        """
        base: list[str] = []
        current = edge
        for _ in range(self.degree(vertex) - 1):
            current = self.successor(current, vertex)
            base.append(current)
        mult = self.multiplicity_at(vertex)
        factors: list[str] = []
        for rep in range(mult):
            factors.extend(base)
            if rep < mult - 1:
                factors.append(edge)
        return tuple(factors)

    def hook(self, edge: str, vertex: str) -> Hook:
        """The boundary module with simple top ``edge`` and body the walk
        around ``vertex``; it affords the character of ``vertex``."""
        walk = self.walk_around(edge, vertex)  # raises NotIncident if needed
        return Hook(
            top_edge=edge,
            body_vertex=vertex,
            kind="hook",
            composition=(edge,) + walk,
            character=vertex,
            sign=self.sign(vertex),
        )

    def cohook(self, edge: str, vertex: str) -> Hook:
        """The same boundary modules presented with the walk on top."""
        walk = self.walk_around(edge, vertex)
        return Hook(
            top_edge=edge,
            body_vertex=vertex,
            kind="cohook",
            composition=walk + (edge,),
            character=vertex,
            sign=self.sign(vertex),
        )

    def hooks(self) -> tuple[Hook, ...]:
        """All 2e hooks, sorted by (top edge, body vertex)."""
        pairs = []
        for edge in self.edge_labels:
            a, b = self._endpoints[edge]
            pairs.append((edge, a))
            pairs.append((edge, b))
        pairs.sort()
        return tuple(self.hook(edge, v) for edge, v in pairs)

    def pim(self, edge: str) -> PimStructure:
        """Loewy structure of the projective indecomposable for ``edge``."""
        a, b = sorted(self._endpoints[edge])
        return PimStructure(
            edge=edge,
            q_a=self.walk_around(edge, a),
            q_b=self.walk_around(edge, b),
            projective_character=(a, b),
        )

    def omega_on_boundary(self, h: Hook) -> Hook:
        """Syzygy of a boundary module, presented as a hook again.

        The syzygy of the hook at (edge, vertex) is the cohook at the other
        endpoint, whose hook presentation advances the edge one rotation
        step around that endpoint; signs alternate.
        """
        if h.kind != "hook":
            raise ValueError("omega_on_boundary expects the hook presentation")
        other = self.other_endpoint(h.top_edge, h.body_vertex)
        new_edge = self.successor(h.top_edge, other)
        return self.hook(new_edge, other)

    def greens_walk(self, start_edge: Optional[str] = None) -> tuple[Hook, ...]:
        """The syzygy orbit of a simple boundary module: 2e hooks in order.

        Starts by default at the edge of the lexicographically least
        non-exceptional leaf; a supplied start edge must have a
        non-exceptional leaf endpoint (its simple module is then a hook).
        Signs alternate along the walk and every edge occurs exactly twice
        as a top.  When p^n = 2 the two formal hooks share the same
        one-dimensional module, so the walk lists that module twice.
        """
        if start_edge is None:
            leaf = sorted(self.non_exceptional_leaves())[0]
            start_edge = self._rotation[leaf][0]
        else:
            if start_edge not in self._endpoints:
                raise NotIncident(f"unknown edge {start_edge!r}")
            leaf_ends = [
                v
                for v in self._endpoints[start_edge]
                if self.is_leaf(v) and not self.is_exceptional(v)
            ]
            if not leaf_ends:
                raise NoNonExceptionalLeaf(
                    f"edge {start_edge!r} has no non-exceptional leaf endpoint"
                )
            leaf = sorted(leaf_ends)[0]
        walk = [self.hook(start_edge, leaf)]
        for _ in range(2 * self.e - 1):
            walk.append(self.omega_on_boundary(walk[-1]))
        if self.omega_on_boundary(walk[-1]) != walk[0]:
            raise AssertionError("boundary walk failed to close up")
        return tuple(walk)

    def path_to_exceptional(self, vertex: str) -> tuple[str, ...]:
        """Alternating label sequence (chi_0, E_1, chi_1, ..., E_{l+1}, chi_L)
        along the unique path from ``vertex`` to the exceptional vertex.

        Querying the exceptional vertex itself returns the degenerate
        single-vertex sequence.  Raises NoExceptionalVertex when m = 1.
        """
        if self.exceptional_vertex is None:
            raise NoExceptionalVertex("multiplicity 1: the tree has no exceptional vertex")
        if vertex not in self._vertex_set:
            raise NotIncident(f"unknown vertex {vertex!r}")
        target = self.exceptional_vertex
        # Depth-first parent search from the target so we can read the path
        # off by walking parents from ``vertex``.
        parent: dict[str, tuple[str, str]] = {}
        seen = {target}
        frontier = [target]
        while frontier:
            v = frontier.pop()
            for edge in self._rotation[v]:
                w = self.other_endpoint(edge, v)
                if w not in seen:
                    seen.add(w)
                    parent[w] = (edge, v)
                    frontier.append(w)
        path: list[str] = [vertex]
        current = vertex
        while current != target:
            edge, nxt = parent[current]
            path.append(edge)
            path.append(nxt)
            current = nxt
        return tuple(path)
