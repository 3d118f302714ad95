"""Classification of trivial source modules in a block with cyclic defect.

Given the block's planar tree, a source element of the Dade group of the
defect group D = C_{p^n}, and a non-trivial subgroup D_i as vertex, there are
exactly e indecomposable trivial source modules with that vertex and source
in the stable Auslander-Reiten component: one full row of the tube, at
distance ell_i * p^(n-i) - 1 from the positive boundary, where ell_i is the
dimension of the cap of the restricted source.  This module computes that
location, identifies each of the e modules by its diagram shape (a Janusz
path descriptor relative to the tree), derives the catalogue of liftable
modules with their distances to reference boundary modules, and answers
lift-character and cotriviality questions.

Everything is exact integer and tree combinatorics; the tube positions
asserted here are cross-checked elsewhere against the explicit-matrix oracle
of :mod:`blockatlas.cyclic_modules`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .brauer_tree import BrauerTree, Hook
from .cyclic_modules import CyclicGroupParams
from .dade import DadeElement, ParamMismatch

#: Divisibility dichotomy labels: which congruence ell_i * p^(n-i) satisfies
#: modulo e determines the sign of the characters at the reference vertices.
POSITIVE = "positive"
NEGATIVE = "negative"


class ShapeType(str, Enum):
    """Diagram shapes of (liftable or trivial source) stable modules.

    The path-shaped entries are uniserial or biserial diagrams supported on
    the tree path from a reference vertex to the exceptional vertex; the
    Extended/Doubled variants append one extra edge at one or both ends.
    """

    PROJECTIVE = "Projective"
    HOOK = "Hook"
    SIMPLE_EXCEPTIONAL_LEAF = "SimpleExceptionalLeaf"
    PATH_LEAF_TO_EXCEPTIONAL = "PathLeafToExceptional"
    PATH_EXCEPTIONAL_LEAF = "PathExceptionalLeaf"
    EXTENDED_PATH_A = "ExtendedPathA"
    EXTENDED_PATH_B = "ExtendedPathB"
    DOUBLED_PATH = "DoubledPath"
    DOUBLED_EXCEPTIONAL_LEAF = "DoubledExceptionalLeaf"


#: Fixed diagram orientation pair (epsilon_1, epsilon_s) per shape.
_DIRECTIONS = {
    ShapeType.PROJECTIVE: (1, -1),
    ShapeType.HOOK: (1, -1),
    ShapeType.SIMPLE_EXCEPTIONAL_LEAF: (1, -1),
    ShapeType.PATH_LEAF_TO_EXCEPTIONAL: (1, -1),
    ShapeType.PATH_EXCEPTIONAL_LEAF: (1, -1),
    ShapeType.EXTENDED_PATH_A: (1, 1),
    ShapeType.EXTENDED_PATH_B: (-1, -1),
    ShapeType.DOUBLED_PATH: (-1, 1),
    ShapeType.DOUBLED_EXCEPTIONAL_LEAF: (-1, 1),
}

_NEEDS_INTERIOR = {
    ShapeType.PATH_LEAF_TO_EXCEPTIONAL,
    ShapeType.EXTENDED_PATH_A,
    ShapeType.EXTENDED_PATH_B,
    ShapeType.DOUBLED_PATH,
}


class ConsistencyError(RuntimeError):
    """An internal invariant of the classification failed."""


class CountMismatch(ConsistencyError):
    """The classification did not produce exactly e descriptors."""


class DichotomyViolation(ConsistencyError):
    """Neither (or both) of the two divisibility cases held."""


class OutOfTube(ValueError):
    """A requested tube position falls outside the stable component."""


class UnknownShape(ValueError):
    """The descriptor does not match any distance clause."""


class NotLiftable(ValueError):
    """Lift data was requested for a descriptor without a modelled lift."""


@dataclass(frozen=True)
class TubePosition:
    """Position of a stable module by its distances to the two boundaries.

    ``dplus`` is the distance to the boundary of positive hooks, ``dminus``
    to the negative one; they always sum to em - 1 = p^n - 2.
    """

    dplus: int
    dminus: int

    def __post_init__(self) -> None:
        if self.dplus < 0 or self.dminus < 0:
            raise OutOfTube(
                f"distances ({self.dplus}, {self.dminus}) leave the component"
            )

    @property
    def rim(self) -> int:
        return self.dplus + self.dminus


@dataclass(frozen=True)
class JanuszDescriptor:
    """Shape descriptor of a stable module relative to the tree.

    ``path`` lists edge labels of the diagram spine top-to-bottom (for
    hook/projective shapes, just the defining edge); ``vertex`` is the
    reference vertex the shape is anchored at (the body vertex for hooks,
    the starting character chi_0 for path shapes, the exceptional vertex for
    the exceptional-leaf shapes); ``direction`` is the orientation pair
    (epsilon_1, epsilon_s); ``multiplicity`` counts composition factors
    adjacent to the exceptional vertex (0 whenever m = 1); ``interior`` is
    the number of interior vertices of the tree path for the four path
    shapes that have one, None otherwise.
    """

    type_tag: ShapeType
    path: tuple[str, ...]
    direction: tuple[int, int]
    multiplicity: int
    vertex: str
    interior: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.path:
            raise ValueError("descriptor path must be non-empty")
        if self.direction != _DIRECTIONS[self.type_tag]:
            raise ValueError(
                f"{self.type_tag.value} descriptors have direction "
                f"{_DIRECTIONS[self.type_tag]}, got {self.direction}"
            )
        if self.multiplicity < 0:
            raise ValueError("multiplicity must be non-negative")
        if self.type_tag in _NEEDS_INTERIOR:
            if self.interior is None or self.interior < 0:
                raise ValueError(
                    f"{self.type_tag.value} descriptors need an interior count"
                )
            expected = {
                ShapeType.PATH_LEAF_TO_EXCEPTIONAL: 2 * self.interior + 2,
                ShapeType.EXTENDED_PATH_A: 2 * self.interior + 3,
                ShapeType.EXTENDED_PATH_B: 2 * self.interior + 3,
                ShapeType.DOUBLED_PATH: 2 * self.interior + 4,
            }[self.type_tag]
            if len(self.path) != expected:
                raise ValueError(
                    f"{self.type_tag.value} path has {len(self.path)} entries, "
                    f"expected {expected}"
                )
        else:
            if self.interior is not None:
                raise ValueError(
                    f"{self.type_tag.value} descriptors carry no interior count"
                )
            expected_len = {
                ShapeType.PROJECTIVE: 1,
                ShapeType.HOOK: 1,
                ShapeType.SIMPLE_EXCEPTIONAL_LEAF: 1,
                ShapeType.PATH_EXCEPTIONAL_LEAF: 2,
                ShapeType.DOUBLED_EXCEPTIONAL_LEAF: 2,
            }[self.type_tag]
            if len(self.path) != expected_len:
                raise ValueError(
                    f"{self.type_tag.value} path has {len(self.path)} entries, "
                    f"expected {expected_len}"
                )

    def sort_key(self) -> tuple:
        return (self.type_tag.value, self.vertex, self.path, self.multiplicity)

    def validate_against(self, tree: BrauerTree) -> None:
        """Check the multiplicity against the tree's clause ranges."""
        m = tree.m
        if m == 1:
            if self.multiplicity != 0:
                raise ValueError("multiplicity must be 0 when m = 1")
            return
        mu = self.multiplicity
        tag = self.type_tag
        if tag == ShapeType.PROJECTIVE:
            ok = mu == 0
        elif tag == ShapeType.HOOK:
            ok = mu == _hook_multiplicity(tree, self.path[0], self.vertex)
        elif tag == ShapeType.SIMPLE_EXCEPTIONAL_LEAF:
            ok = mu == 1
        elif tag == ShapeType.PATH_LEAF_TO_EXCEPTIONAL:
            ok = 2 <= mu <= m
        elif tag == ShapeType.PATH_EXCEPTIONAL_LEAF:
            ok = 2 <= mu <= m - 1
        elif tag in (
            ShapeType.EXTENDED_PATH_A,
            ShapeType.EXTENDED_PATH_B,
            ShapeType.DOUBLED_PATH,
        ):
            ok = 2 <= mu <= m
        else:  # DOUBLED_EXCEPTIONAL_LEAF
            ok = 1 <= mu <= m - 1
        if not ok:
            raise ValueError(
                f"multiplicity {mu} out of range for {tag.value} with m = {m}"
            )


@dataclass(frozen=True)
class TrivialSourceReport:
    """Result of classifying the trivial source modules with vertex D_i."""

    vertex_index: int
    ell: int
    dplus: TubePosition
    divisibility_case: Optional[str]
    descriptors: tuple[JanuszDescriptor, ...]


@dataclass(frozen=True)
class LiftCharacter:
    """Ordinary character of a lift: the distinct non-exceptional
    constituents (vertex labels) plus the number of distinct exceptional
    constituents."""

    nonexceptional_constituents: tuple[str, ...]
    exceptional_count: int

    def __post_init__(self) -> None:
        if self.exceptional_count < 0:
            raise ValueError("exceptional count must be non-negative")
        object.__setattr__(
            self,
            "nonexceptional_constituents",
            tuple(sorted(self.nonexceptional_constituents)),
        )


@dataclass(frozen=True)
class LiftableEntry:
    """A liftable module: its shape, its distance to a reference boundary
    module, and that reference hook (None for projectives, which live
    outside the stable component)."""

    descriptor: JanuszDescriptor
    distance: Optional[int]
    reference_hook: Optional[Hook]


# -- positions -----------------------------------------------------------------


def _rim(params: CyclicGroupParams) -> int:
    return params.order - 2


def _tube_position(params: CyclicGroupParams, dplus: int) -> TubePosition:
    rim = _rim(params)
    if not 0 <= dplus <= rim:
        raise OutOfTube(f"d+ = {dplus} outside 0..{rim}")
    return TubePosition(dplus, rim - dplus)


def _check_source(dade: DadeElement) -> None:
    if not dade.is_source:
        raise ValueError("the Dade element has a_0 = 1 and cannot be a source")


def dplus_trivial_source(
    params: CyclicGroupParams, dade: DadeElement, i: int
) -> TubePosition:
    """Tube position of the trivial source modules with vertex D_i and the
    given source: distance ell_i * p^(n-i) - 1 to the positive boundary."""
    if dade.params != params:
        raise ParamMismatch("Dade element belongs to a different group")
    _check_source(dade)
    if not 1 <= i <= params.n:
        raise ValueError(f"vertex index {i} out of range 1..{params.n}")
    length = dade.ell(i) * params.quotient_order(i)
    return _tube_position(params, length - 1)


def divisibility_case(
    params: CyclicGroupParams, dade: DadeElement, i: int, e: int
) -> str:
    """Which of e | (L - 1) (positive) or e | ell_i (negative) holds, with
    L = ell_i * p^(n-i).  Exactly one does whenever e > 1 and e | p - 1."""
    if e < 2:
        raise ValueError("the divisibility dichotomy needs e > 1")
    if (params.p - 1) % e != 0:
        raise ValueError(f"e = {e} does not divide p - 1 = {params.p - 1}")
    if dade.params != params:
        raise ParamMismatch("Dade element belongs to a different group")
    if not 1 <= i <= params.n:
        raise ValueError(f"vertex index {i} out of range 1..{params.n}")
    ell = dade.ell(i)
    length = ell * params.quotient_order(i)
    positive = (length - 1) % e == 0
    negative = ell % e == 0
    if positive == negative:
        raise DichotomyViolation(
            f"L = {length}, e = {e}: positive={positive}, negative={negative}"
        )
    return POSITIVE if positive else NEGATIVE


def cotrivial_source_dplus(
    params: CyclicGroupParams, dade: DadeElement, i: int
) -> TubePosition:
    """Tube position of the modules with vertex D_i whose source is the
    syzygy of the given source: the boundary-swapped trivial source row, at
    d+ = p^n - 1 - ell_i * p^(n-i)."""
    trivial = dplus_trivial_source(params, dade, i)
    return TubePosition(trivial.dminus, trivial.dplus)


# -- shape factories ---------------------------------------------------------


def _hook_multiplicity(tree: BrauerTree, edge: str, vertex: str) -> int:
    """Number of composition factors of the hook adjacent to the exceptional
    vertex (0 when m = 1)."""
    if tree.exceptional_vertex is None:
        return 0
    exc = tree.exceptional_vertex
    composition = tree.hook(edge, vertex).composition
    return sum(1 for f in composition if exc in tree.endpoints(f))


def _hook_descriptor(tree: BrauerTree, edge: str, vertex: str) -> JanuszDescriptor:
    return JanuszDescriptor(
        type_tag=ShapeType.HOOK,
        path=(edge,),
        direction=_DIRECTIONS[ShapeType.HOOK],
        multiplicity=_hook_multiplicity(tree, edge, vertex),
        vertex=vertex,
    )


def _projective_descriptor(tree: BrauerTree, edge: str) -> JanuszDescriptor:
    anchor = min(tree.endpoints(edge))
    return JanuszDescriptor(
        type_tag=ShapeType.PROJECTIVE,
        path=(edge,),
        direction=_DIRECTIONS[ShapeType.PROJECTIVE],
        multiplicity=0,
        vertex=anchor,
    )


def _path_data(tree: BrauerTree, vertex: str) -> tuple[tuple[str, ...], int]:
    """Edges of the tree path from ``vertex`` to the exceptional vertex and
    the number of interior vertices."""
    seq = tree.path_to_exceptional(vertex)
    edges = tuple(seq[1::2])
    interior = (len(seq) - 3) // 2
    return edges, interior


def _leaf_path_descriptor(
    tree: BrauerTree, vertex: str, mu: int
) -> JanuszDescriptor:
    edges, interior = _path_data(tree, vertex)
    return JanuszDescriptor(
        type_tag=ShapeType.PATH_LEAF_TO_EXCEPTIONAL,
        path=edges + tuple(reversed(edges)),
        direction=_DIRECTIONS[ShapeType.PATH_LEAF_TO_EXCEPTIONAL],
        multiplicity=mu,
        vertex=vertex,
        interior=interior,
    )


def _extended_a_descriptor(
    tree: BrauerTree, vertex: str, mu: int
) -> JanuszDescriptor:
    edges, interior = _path_data(tree, vertex)
    extra = tree.successor(edges[0], vertex)
    return JanuszDescriptor(
        type_tag=ShapeType.EXTENDED_PATH_A,
        path=edges + tuple(reversed(edges)) + (extra,),
        direction=_DIRECTIONS[ShapeType.EXTENDED_PATH_A],
        multiplicity=mu,
        vertex=vertex,
        interior=interior,
    )


def _extended_b_descriptor(
    tree: BrauerTree, vertex: str, mu: int
) -> JanuszDescriptor:
    edges, interior = _path_data(tree, vertex)
    extra = tree.predecessor(edges[0], vertex)
    return JanuszDescriptor(
        type_tag=ShapeType.EXTENDED_PATH_B,
        path=(extra,) + edges + tuple(reversed(edges)),
        direction=_DIRECTIONS[ShapeType.EXTENDED_PATH_B],
        multiplicity=mu,
        vertex=vertex,
        interior=interior,
    )


def _doubled_path_descriptor(
    tree: BrauerTree, vertex: str, first: str, mu: int
) -> JanuszDescriptor:
    edges, interior = _path_data(tree, vertex)
    last = tree.successor(first, vertex)
    return JanuszDescriptor(
        type_tag=ShapeType.DOUBLED_PATH,
        path=(first,) + edges + tuple(reversed(edges)) + (last,),
        direction=_DIRECTIONS[ShapeType.DOUBLED_PATH],
        multiplicity=mu,
        vertex=vertex,
        interior=interior,
    )


def _exceptional_leaf_edge(tree: BrauerTree) -> str:
    return tree.rotation_at(tree.exceptional_vertex)[0]


def _simple_exceptional_descriptor(tree: BrauerTree) -> JanuszDescriptor:
    return JanuszDescriptor(
        type_tag=ShapeType.SIMPLE_EXCEPTIONAL_LEAF,
        path=(_exceptional_leaf_edge(tree),),
        direction=_DIRECTIONS[ShapeType.SIMPLE_EXCEPTIONAL_LEAF],
        multiplicity=1,
        vertex=tree.exceptional_vertex,
    )


def _exceptional_leaf_descriptor(tree: BrauerTree, mu: int) -> JanuszDescriptor:
    edge = _exceptional_leaf_edge(tree)
    return JanuszDescriptor(
        type_tag=ShapeType.PATH_EXCEPTIONAL_LEAF,
        path=(edge, edge),
        direction=_DIRECTIONS[ShapeType.PATH_EXCEPTIONAL_LEAF],
        multiplicity=mu,
        vertex=tree.exceptional_vertex,
    )


def _doubled_exceptional_descriptor(
    tree: BrauerTree, first: str, mu: int
) -> JanuszDescriptor:
    exc = tree.exceptional_vertex
    second = tree.successor(first, exc)
    return JanuszDescriptor(
        type_tag=ShapeType.DOUBLED_EXCEPTIONAL_LEAF,
        path=(first, second),
        direction=_DIRECTIONS[ShapeType.DOUBLED_EXCEPTIONAL_LEAF],
        multiplicity=mu,
        vertex=exc,
    )


# -- distances --------------------------------------------------------------


def distance_to_hook(
    tree: BrauerTree, desc: JanuszDescriptor
) -> tuple[int, Hook]:
    """Distance along the boundary direction from the module to its
    reference boundary module, and that hook.

    The reference hook always carries the character of the descriptor's
    reference vertex, so the module's distance to the *positive* boundary is
    the returned distance when the hook's sign is positive and
    em - 1 - distance otherwise.
    """
    e, m = tree.e, tree.m
    tag = desc.type_tag
    mu = desc.multiplicity
    if tag == ShapeType.HOOK:
        return 0, tree.hook(desc.path[0], desc.vertex)
    if tag == ShapeType.SIMPLE_EXCEPTIONAL_LEAF:
        return e * (m - 1), tree.hook(desc.path[0], tree.exceptional_vertex)
    if tag == ShapeType.PATH_EXCEPTIONAL_LEAF:
        return e * (m - mu), tree.hook(desc.path[0], tree.exceptional_vertex)
    if tag == ShapeType.DOUBLED_EXCEPTIONAL_LEAF:
        return e * (m - mu), tree.hook(desc.path[1], tree.exceptional_vertex)
    if tag in (
        ShapeType.PATH_LEAF_TO_EXCEPTIONAL,
        ShapeType.EXTENDED_PATH_A,
        ShapeType.EXTENDED_PATH_B,
        ShapeType.DOUBLED_PATH,
    ):
        if desc.interior is None:
            raise UnknownShape("path descriptor without interior count")
        if desc.interior % 2 == 1:
            dist = e * (m - mu + 1)
        else:
            dist = e * (mu - 1)
        if tag == ShapeType.PATH_LEAF_TO_EXCEPTIONAL:
            ref = tree.hook(desc.path[0], desc.vertex)
        elif tag == ShapeType.EXTENDED_PATH_A:
            ref = tree.hook(desc.path[-1], desc.vertex)
        elif tag == ShapeType.EXTENDED_PATH_B:
            ref = tree.hook(desc.path[1], desc.vertex)
        else:  # DOUBLED_PATH
            ref = tree.hook(desc.path[-1], desc.vertex)
        return dist, ref
    raise UnknownShape(f"no distance clause for {tag.value}")


def position_of(tree: BrauerTree, desc: JanuszDescriptor) -> TubePosition:
    """Tube position of a non-projective descriptor's module."""
    dist, ref = distance_to_hook(tree, desc)
    rim = _rim(tree.params)
    dplus = dist if ref.sign > 0 else rim - dist
    return _tube_position(tree.params, dplus)


# -- classification ------------------------------------------------------------


def classify_trivial_source(
    tree: BrauerTree, dade: DadeElement, i: int
) -> TrivialSourceReport:
    """The e trivial source modules with vertex D_i and the given source.

    Enumerates shape candidates at every vertex whose character sign matches
    the divisibility case and checks each one's tube position against the
    required row; the result is always exactly e descriptors (one for e = 1),
    sorted deterministically.
    """
    params = tree.params
    if dade.params != params:
        raise ParamMismatch("Dade element belongs to a different group")
    _check_source(dade)
    if not 1 <= i <= params.n:
        raise ValueError(f"vertex index {i} out of range 1..{params.n}")

    ell = dade.ell(i)
    length = ell * params.quotient_order(i)
    pos = dplus_trivial_source(params, dade, i)
    e, m = tree.e, tree.m

    if e == 1:
        case = None
        descriptors = [_classify_single_edge(tree, length)]
    else:
        case = divisibility_case(params, dade, i, e)
        if length == 1:
            # Vertex D_n with trivial source: the e positive hooks.
            descriptors = []
            for edge in tree.edge_labels:
                a, b = tree.endpoints(edge)
                body = a if tree.sign(a) > 0 else b
                descriptors.append(_hook_descriptor(tree, edge, body))
        else:
            descriptors = _classify_general(tree, case, length)

    if len(descriptors) != (1 if e == 1 else e):
        raise CountMismatch(
            f"expected {1 if e == 1 else e} descriptors, got {len(descriptors)}"
        )
    for desc in descriptors:
        desc.validate_against(tree)
        found = position_of(tree, desc)
        if found != pos:
            raise ConsistencyError(
                f"{desc.type_tag.value} descriptor sits at {found}, expected {pos}"
            )
    descriptors.sort(key=JanuszDescriptor.sort_key)
    return TrivialSourceReport(
        vertex_index=i,
        ell=ell,
        dplus=pos,
        divisibility_case=case,
        descriptors=tuple(descriptors),
    )


def _classify_single_edge(tree: BrauerTree, length: int) -> JanuszDescriptor:
    """The unique descriptor for e = 1: a uniserial of known length."""
    edge = tree.edge_labels[0]
    a, b = tree.endpoints(edge)
    if tree.m == 1:
        # p^n = 2; the only non-projective module is the simple one.
        body = a if tree.sign(a) > 0 else b
        return _hook_descriptor(tree, edge, body)
    exc = tree.exceptional_vertex
    plain = b if a == exc else a
    lam = length if tree.sign(plain) > 0 else tree.params.order - length
    if lam == 1:
        return _hook_descriptor(tree, edge, plain)
    if lam == tree.m:
        return _hook_descriptor(tree, edge, exc)
    return _leaf_path_descriptor(tree, plain, lam)


def _classify_general(
    tree: BrauerTree, case: str, length: int
) -> list[JanuszDescriptor]:
    """Shape candidates for e > 1, L > 1 (so m > 1 and chi_Lambda exists)."""
    e, m = tree.e, tree.m
    sigma = 1 if case == POSITIVE else -1
    exc = tree.exceptional_vertex
    if exc is None:
        # m = 1 forces n = 1 and L = 1, handled by the hook branch.
        raise ConsistencyError("multiplicity 1 cannot reach the general branch")
    if case == POSITIVE:
        k = (length - 1) // e
        mu_path_odd = m + 1 - k
        mu_path_even = k + 1
        mu_exceptional = m - k
    else:
        j = length // e
        mu_path_odd = j + 1
        mu_path_even = m + 1 - j
        mu_exceptional = j

    out: list[JanuszDescriptor] = []
    for v in sorted(tree.vertex_labels):
        if tree.sign(v) != sigma:
            continue
        if v == exc:
            if tree.is_leaf(v):
                if mu_exceptional == 1:
                    out.append(_simple_exceptional_descriptor(tree))
                elif 2 <= mu_exceptional <= m - 1:
                    out.append(_exceptional_leaf_descriptor(tree, mu_exceptional))
                else:
                    raise ConsistencyError(
                        f"exceptional-leaf multiplicity {mu_exceptional} "
                        f"out of range with m = {m}"
                    )
            else:
                for first in tree.rotation_at(v):
                    out.append(
                        _doubled_exceptional_descriptor(tree, first, mu_exceptional)
                    )
            continue
        _, interior = _path_data(tree, v)
        mu = mu_path_odd if interior % 2 == 1 else mu_path_even
        if tree.is_leaf(v):
            out.append(_leaf_path_descriptor(tree, v, mu))
        else:
            path_first = tree.path_to_exceptional(v)[1]
            excluded = {path_first, tree.predecessor(path_first, v)}
            out.append(_extended_a_descriptor(tree, v, mu))
            out.append(_extended_b_descriptor(tree, v, mu))
            for first in tree.rotation_at(v):
                if first not in excluded:
                    out.append(_doubled_path_descriptor(tree, v, first, mu))
    return out


# -- liftable catalogue ----------------------------------------------------


def liftable_catalog(tree: BrauerTree) -> list[LiftableEntry]:
    """All liftable indecomposable modules of the block, with distances.

    The catalogue has e(2m+1) entries for e > 1 and m+1 for e = 1, of which
    e (resp. 1) are projective; the non-projective entries carry their
    distance to a reference boundary module and that hook.
    """
    entries: list[LiftableEntry] = []
    for edge in tree.edge_labels:
        entries.append(LiftableEntry(_projective_descriptor(tree, edge), None, None))

    e, m = tree.e, tree.m
    if e == 1:
        edge = tree.edge_labels[0]
        a, b = tree.endpoints(edge)
        if m == 1:
            body = a if tree.sign(a) > 0 else b
            hooks = [_hook_descriptor(tree, edge, body)]
        else:
            hooks = [_hook_descriptor(tree, edge, a), _hook_descriptor(tree, edge, b)]
        for desc in hooks:
            dist, ref = distance_to_hook(tree, desc)
            entries.append(LiftableEntry(desc, dist, ref))
        exc = tree.exceptional_vertex
        if exc is not None:
            plain = b if a == exc else a
            for mu in range(2, m):
                desc = _leaf_path_descriptor(tree, plain, mu)
                dist, ref = distance_to_hook(tree, desc)
                entries.append(LiftableEntry(desc, dist, ref))
        return _sorted_entries(entries)

    for edge in tree.edge_labels:
        for v in tree.endpoints(edge):
            desc = _hook_descriptor(tree, edge, v)
            dist, ref = distance_to_hook(tree, desc)
            entries.append(LiftableEntry(desc, dist, ref))

    if m > 1:
        exc = tree.exceptional_vertex
        if tree.is_leaf(exc):
            desc = _simple_exceptional_descriptor(tree)
            dist, ref = distance_to_hook(tree, desc)
            entries.append(LiftableEntry(desc, dist, ref))
            for mu in range(2, m):
                desc = _exceptional_leaf_descriptor(tree, mu)
                dist, ref = distance_to_hook(tree, desc)
                entries.append(LiftableEntry(desc, dist, ref))
        else:
            for first in tree.rotation_at(exc):
                for mu in range(1, m):
                    desc = _doubled_exceptional_descriptor(tree, first, mu)
                    dist, ref = distance_to_hook(tree, desc)
                    entries.append(LiftableEntry(desc, dist, ref))
        for v in sorted(tree.vertex_labels):
            if v == exc:
                continue
            if tree.is_leaf(v):
                for mu in range(2, m + 1):
                    desc = _leaf_path_descriptor(tree, v, mu)
                    dist, ref = distance_to_hook(tree, desc)
                    entries.append(LiftableEntry(desc, dist, ref))
            else:
                path_first = tree.path_to_exceptional(v)[1]
                excluded = {path_first, tree.predecessor(path_first, v)}
                for mu in range(2, m + 1):
                    for desc in (
                        _extended_a_descriptor(tree, v, mu),
                        _extended_b_descriptor(tree, v, mu),
                    ):
                        dist, ref = distance_to_hook(tree, desc)
                        entries.append(LiftableEntry(desc, dist, ref))
                for first in tree.rotation_at(v):
                    if first in excluded:
                        continue
                    for mu in range(2, m + 1):
                        desc = _doubled_path_descriptor(tree, v, first, mu)
                        dist, ref = distance_to_hook(tree, desc)
                        entries.append(LiftableEntry(desc, dist, ref))
    return _sorted_entries(entries)


def _sorted_entries(entries: list[LiftableEntry]) -> list[LiftableEntry]:
    entries.sort(key=lambda entry: entry.descriptor.sort_key())
    return entries


def liftable_by_distance(e: int, m: int, d_min: int) -> bool:
    """Whether a stable module whose minimal boundary distance is d_min can
    be liftable: d_min must be e*t (t <= (m-1)/2) or e*t - 1 (t <= m/2)."""
    if e < 1 or m < 1:
        raise ValueError("e and m must be positive")
    half = (e * m - 1) // 2
    if not 0 <= d_min <= half:
        raise ValueError(f"minimal distance {d_min} out of range 0..{half}")
    if d_min % e == 0 and d_min // e <= (m - 1) // 2:
        return True
    if (d_min + 1) % e == 0 and (d_min + 1) // e <= m // 2:
        return True
    return False


def lift_character(tree: BrauerTree, desc: JanuszDescriptor) -> LiftCharacter:
    """Ordinary character of a lift of the (non-projective) liftable module.

    Path shapes afford the characters of their tree-path vertices plus
    mu - 1 distinct exceptional characters; the exceptional-leaf shapes
    afford mu (resp. one) exceptional characters only; a hook affords the
    single character of its body vertex, counted as m exceptional
    constituents when the body is the exceptional vertex.
    """
    tag = desc.type_tag
    if tag == ShapeType.PROJECTIVE:
        raise NotLiftable(
            "projective modules lift with character the endpoint pair; "
            "see the projective structure instead"
        )
    m = tree.m
    if tag == ShapeType.HOOK:
        if tree.is_exceptional(desc.vertex):
            return LiftCharacter((), m)
        return LiftCharacter((desc.vertex,), 0)
    if tag == ShapeType.SIMPLE_EXCEPTIONAL_LEAF:
        return LiftCharacter((), 1)
    if tag in (ShapeType.PATH_EXCEPTIONAL_LEAF, ShapeType.DOUBLED_EXCEPTIONAL_LEAF):
        return LiftCharacter((), desc.multiplicity)
    if tag in (
        ShapeType.PATH_LEAF_TO_EXCEPTIONAL,
        ShapeType.EXTENDED_PATH_A,
        ShapeType.EXTENDED_PATH_B,
        ShapeType.DOUBLED_PATH,
    ):
        down = _down_edges(desc)
        verts = [desc.vertex]
        current = desc.vertex
        for edge in down[:-1]:
            current = tree.other_endpoint(edge, current)
            verts.append(current)
        count = desc.multiplicity - 1
        if count > m:
            raise ValueError("exceptional constituent count exceeds m")
        return LiftCharacter(tuple(verts), count)
    raise UnknownShape(f"no lift character clause for {tag.value}")


def _down_edges(desc: JanuszDescriptor) -> tuple[str, ...]:
    """The descending half of a path descriptor's spine."""
    l = desc.interior
    if desc.type_tag == ShapeType.PATH_LEAF_TO_EXCEPTIONAL:
        return desc.path[: l + 1]
    if desc.type_tag == ShapeType.EXTENDED_PATH_A:
        return desc.path[: l + 1]
    # EXTENDED_PATH_B and DOUBLED_PATH prepend an auxiliary edge.
    return desc.path[1 : l + 2]


def hook_is_trivial_source(
    tree: BrauerTree, dade: DadeElement, h: Hook
) -> bool:
    """A boundary module is trivial source exactly when the source is
    trivial and the hook's character is positive."""
    if dade.params != tree.params:
        raise ParamMismatch("Dade element belongs to a different group")
    _check_source(dade)
    return dade.is_zero and h.sign > 0


def c2_block(
    params: CyclicGroupParams, tree: Optional[BrauerTree] = None
) -> TrivialSourceReport:
    """The degenerate block with defect group C_2: one simple module which
    is its own syzygy row, plus a projective.  Returns the classification at
    the full vertex."""
    if (params.p, params.n) != (2, 1):
        raise ValueError("this shortcut is only for p = 2, n = 1")
    if tree is None:
        tree = BrauerTree(
            p=2,
            n=1,
            vertices=[("chi_1", False), ("chi_2", False)],
            edges=[("S_1", ("chi_1", "chi_2"))],
            rotation={"chi_1": ["S_1"], "chi_2": ["S_1"]},
        )
    if (tree.p, tree.n) != (2, 1):
        raise ValueError("the supplied tree is not a C_2 block tree")
    return classify_trivial_source(tree, DadeElement.zero(params), 1)
