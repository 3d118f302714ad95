"""Indecomposable modules over a cyclic p-group and the operations on them.

Over k[C_{p^n}] (k of characteristic p) there are exactly p^n indecomposable
modules up to isomorphism, one of each dimension b in 1..p^n, and M_b is the
quotient of the regular module by the image of (g-1)^b.  Every operation of
interest -- restriction to a subgroup, induction, inflation from a quotient,
ordinary and relative Heller translates, vertices, caps -- therefore has a
closed combinatorial form in terms of dimensions alone.  Those closed forms
are the public API of this module and are what the rest of the package
builds on.

The second half of the file is an oracle layer that redoes the same
operations on explicit unipotent matrices via :mod:`blockatlas.field_linalg`
(Jordan profiles of restricted actions, kernels of relative projective
covers, induced actions assembled block by block).  The oracle is
deliberately independent of the closed forms -- it never consults them -- and
exists so the test suite and ``atlas verify`` can cross-check every formula
on concrete representations.

Subgroup indexing: D_i denotes the subgroup of order p^i of the cyclic group
D of order p^n, so D_0 = 1 and D_n = D.  A Dade group element is encoded by
its exponent bit vector (a_0, ..., a_{n-1}) where index j corresponds to the
relative syzygy with respect to the quotient D/D_j; see
:mod:`blockatlas.dade`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Sequence, Union

import numpy as np

from .field_linalg import (
    ModuleDecomp,
    PrimeFieldMatrix,
    decompose_unipotent,
    is_prime,
    nullspace,
    rank,
    solve_exact,
    _rref,
)

if TYPE_CHECKING:  # pragma: no cover - import cycle guard, annotation only
    from .dade import DadeElement

#: Dimension of an indecomposable k[C_{p^n}]-module: an int in 1..p^n.
IndecDim = int

#: Anything that yields an exponent bit vector: a DadeElement or a raw
#: sequence of n bits.
BitsLike = Union["DadeElement", Sequence[int]]


class ProjectiveInput(ValueError):
    """A Heller translate was requested of a (relatively) projective module."""


class NotInflatable(ValueError):
    """The module does not arise by inflation from the required quotient."""


class DimensionTooLarge(ValueError):
    """A quotient-group module dimension exceeds the quotient group order."""


class NotCapped(ValueError):
    """No summand of the restriction has full vertex."""


@dataclass(frozen=True)
class CyclicGroupParams:
    """The cyclic p-group C_{p^n}: a prime p and an exponent n >= 1."""

    p: int
    n: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.n < 1:
            raise ValueError("n must be at least 1")

    @property
    def order(self) -> int:
        return self.p**self.n

    def subgroup_order(self, i: int) -> int:
        """Order of D_i (requires 0 <= i <= n)."""
        self.check_subgroup_index(i)
        return self.p**i

    def quotient_order(self, i: int) -> int:
        """Order of D/D_i (requires 0 <= i <= n)."""
        self.check_subgroup_index(i)
        return self.p ** (self.n - i)

    def check_subgroup_index(self, i: int) -> None:
        if not 0 <= i <= self.n:
            raise ValueError(f"subgroup index {i} out of range 0..{self.n}")

    def check_dim(self, b: int) -> None:
        if not 1 <= b <= self.order:
            raise ValueError(
                f"indecomposable dimension {b} out of range 1..{self.order}"
            )


def _bits_of(params: CyclicGroupParams, dade: BitsLike) -> tuple[int, ...]:
    bits = tuple(int(x) for x in getattr(dade, "bits", dade))
    if len(bits) != params.n:
        raise ValueError(f"expected {params.n} exponent bits, got {len(bits)}")
    if any(x not in (0, 1) for x in bits):
        raise ValueError("exponent bits must be 0 or 1")
    return bits


# -- closed-form operations ---------------------------------------------------


def restrict(params: CyclicGroupParams, b: IndecDim, i: int) -> ModuleDecomp:
    """Restriction of M_b from C_{p^n} to the subgroup D_i.

    Writing b = q * p^(n-i) + r with 0 <= r < p^(n-i), the restriction is
    r copies of M_{q+1} and p^(n-i) - r copies of M_q (dropping zero parts).
    """
    params.check_dim(b)
    unit = params.quotient_order(i)
    q, r = divmod(b, unit)
    counts: dict[int, int] = {}
    if r:
        counts[q + 1] = r
    if q and unit - r:
        counts[q] = counts.get(q, 0) + (unit - r)
    return ModuleDecomp.from_counts(counts)


def induce(params: CyclicGroupParams, c: int, i: int) -> IndecDim:
    """Induction of the D_i-module M_c up to the full group.

    Induction from a subgroup of a cyclic p-group sends indecomposables to
    indecomposables: the result is M_{c * p^(n-i)}.
    """
    params.check_subgroup_index(i)
    if not 1 <= c <= params.subgroup_order(i):
        raise ValueError(
            f"dimension {c} out of range 1..{params.subgroup_order(i)} for D_{i}"
        )
    return c * params.quotient_order(i)


def inflate(params: CyclicGroupParams, c: int, i: int) -> IndecDim:
    """Inflation of the D/D_i-module M_c to the full group (same dimension)."""
    params.check_subgroup_index(i)
    if c < 1:
        raise ValueError("dimension must be positive")
    if c > params.quotient_order(i):
        raise DimensionTooLarge(
            f"dimension {c} exceeds |D/D_{i}| = {params.quotient_order(i)}"
        )
    return c


def heller(params: CyclicGroupParams, b: IndecDim) -> IndecDim:
    """Ordinary Heller translate: Omega(M_b) = M_{p^n - b}."""
    params.check_dim(b)
    if b == params.order:
        raise ProjectiveInput("the free module has no Heller translate")
    return params.order - b


def relative_heller(params: CyclicGroupParams, i: int, b: IndecDim) -> IndecDim:
    """Relative syzygy with respect to D/D_i: M_b -> M_{p^(n-i) - b}.

    Requires M_b to be inflated from D/D_i, i.e. b <= p^(n-i); the relatively
    projective case b = p^(n-i) is rejected separately.
    """
    params.check_subgroup_index(i)
    if b < 1:
        raise ValueError("dimension must be positive")
    unit = params.quotient_order(i)
    if b > unit:
        raise NotInflatable(f"M_{b} is not inflated from D/D_{i} (need b <= {unit})")
    if b == unit:
        raise ProjectiveInput(f"M_{b} is projective relative to D_{i}")
    return unit - b


def vertex(params: CyclicGroupParams, b: IndecDim) -> int:
    """Vertex index of M_b: the i with vertex D_i, namely n - v_p(b)."""
    params.check_dim(b)
    v = 0
    bb = b
    while bb % params.p == 0 and v < params.n:
        bb //= params.p
        v += 1
    return params.n - v


def cap_of_restriction(params: CyclicGroupParams, b: IndecDim, i: int) -> int:
    """Largest summand dimension of restrict(b, i) with full vertex D_i.

    A summand M_c of a module over D_i has full vertex exactly when p does
    not divide c.  Raises NotCapped when every summand has smaller vertex.
    """
    decomp = restrict(params, b, i)
    for c, _mult in decomp.parts:  # parts are sorted by decreasing dimension
        if c % params.p != 0:
            return c
    raise NotCapped(f"no summand of M_{b} restricted to D_{i} has full vertex")


def build_wd(params: CyclicGroupParams, dade: BitsLike) -> IndecDim:
    """Dimension of the endotrivial module W with exponent bits (a_0..a_{n-1}).

    The bits are applied right to left (index n-1 first, index 0 last),
    starting from the trivial module and taking the relative syzygy with
    respect to D/D_j wherever a_j = 1.  Each intermediate stage is inflated
    from the relevant quotient, so the relative syzygy is always defined;
    a violation would be an internal error and raises NotInflatable.
    """
    bits = _bits_of(params, dade)
    dim = 1
    for j in range(params.n - 1, -1, -1):
        if not bits[j]:
            continue
        unit = params.quotient_order(j)
        if dim > unit:
            raise NotInflatable(
                f"stage dimension {dim} is not inflated from D/D_{j}"
            )
        # dim == unit cannot occur: previous stages keep dim < p^(n-j).
        dim = unit - dim
    return dim


def u_q(params: CyclicGroupParams, dade: BitsLike, i: int) -> IndecDim:
    """Induced cap: Ind from D_i of the cap of the restriction of W to D_i.

    This is the indecomposable trivial source module attached to W and the
    subgroup D_i; its dimension is cap * p^(n-i).
    """
    if not 1 <= i <= params.n:
        raise ValueError(f"subgroup index {i} out of range 1..{params.n}")
    w = build_wd(params, dade)
    cap = cap_of_restriction(params, w, i)
    return induce(params, cap, i)


# -- oracle layer: the same operations on explicit matrices -------------------


def generator_action(params: CyclicGroupParams, b: IndecDim) -> PrimeFieldMatrix:
    """Unipotent Jordan block: the action of a fixed generator of C_{p^n} on M_b."""
    params.check_dim(b)
    return PrimeFieldMatrix.unipotent_jordan(params.p, b)


def restricted_action(
    params: CyclicGroupParams, u: PrimeFieldMatrix, i: int
) -> PrimeFieldMatrix:
    """Action of the generator g^(p^(n-i)) of D_i on the same space."""
    params.check_subgroup_index(i)
    return u.power(params.quotient_order(i))


def induced_action(
    params: CyclicGroupParams, u_sub: PrimeFieldMatrix, i: int
) -> PrimeFieldMatrix:
    """Generator action on the module induced from D_i to the full group.

    u_sub is the action of the D_i-generator on a module of dimension c.
    The induced module has basis (t, s) for 0 <= t < p^(n-i), 0 <= s < c;
    the full-group generator shifts t and applies u_sub on wrap-around.
    """
    params.check_subgroup_index(i)
    c = u_sub.rows
    if u_sub.cols != c:
        raise ValueError("subgroup action must be square")
    ell = params.quotient_order(i)
    p = params.p
    if u_sub.p != p:
        raise ValueError("field mismatch between action and group parameters")
    a = np.zeros((ell * c, ell * c), dtype=np.int64)
    for t in range(ell - 1):
        for s in range(c):
            a[(t + 1) * c + s, t * c + s] = 1
    sub = u_sub.array()
    for s in range(c):
        for k in range(c):
            if sub[k, s]:
                a[k, (ell - 1) * c + s] = sub[k, s]
    return PrimeFieldMatrix.from_integers(p, a)


def _top_basis_columns(n_mat: PrimeFieldMatrix) -> PrimeFieldMatrix:
    """Standard basis vectors spanning a complement of the column space of n_mat.

    The returned columns lift a basis of M / (g-1)M, so by Nakayama they
    generate the module whose radical is the column space of n_mat.
    """
    p = n_mat.p
    d = n_mat.rows
    image_rank = rank(n_mat)
    aug = np.hstack([n_mat.array(), np.eye(d, dtype=np.int64)])
    _, pivots = _rref(aug, p)
    chosen = [pv - n_mat.cols for pv in pivots if pv >= n_mat.cols]
    basis = np.zeros((d, len(chosen)), dtype=np.int64)
    for k, idx in enumerate(chosen):
        basis[idx, k] = 1
    if len(chosen) != d - image_rank:
        raise AssertionError("complement construction failed")
    return PrimeFieldMatrix.from_integers(p, basis)


def relative_heller_action(u: PrimeFieldMatrix, q: int) -> PrimeFieldMatrix:
    """Generator action on the relative syzygy, computed from an explicit cover.

    u is the action of a generator of a cyclic group Q of order q (a power of
    the field characteristic) on a module M; u^q must be the identity.  The
    projective cover of M over kQ is free of rank dim M/rad M; its kernel is
    the syzygy, and the returned matrix is the action induced on a basis of
    that kernel.
    """
    p = u.p
    d = u.rows
    if u.cols != d:
        raise ValueError("generator action must be square")
    qq = q
    while qq > 1 and qq % p == 0:
        qq //= p
    if q < p or qq != 1:
        raise ValueError(f"q = {q} is not a positive power of p = {p}")
    if not u.power(q).is_identity():
        raise ValueError("u^q is not the identity; module is not over a group of order q")

    n_mat = u.minus_identity()
    tops = _top_basis_columns(n_mat)
    r = tops.cols

    # Cover map from the free module (kQ)^r: column (i, t) maps to u^t w_i.
    phi = np.zeros((d, r * q), dtype=np.int64)
    w = tops.array()
    current = w.copy()
    for t in range(q):
        for i in range(r):
            phi[:, i * q + t] = current[:, i]
        current = (u.array() @ current) % p
    phi_m = PrimeFieldMatrix.from_integers(p, phi)
    if rank(phi_m) != d:
        raise AssertionError("projective cover is not surjective")

    # Generator action on the free module: block diagonal cycle shifts.
    g_free = np.zeros((r * q, r * q), dtype=np.int64)
    for i in range(r):
        for t in range(q):
            g_free[i * q + (t + 1) % q, i * q + t] = 1
    g_free_m = PrimeFieldMatrix.from_integers(p, g_free)

    kernel = nullspace(phi_m)
    if kernel.cols != r * q - d:
        raise AssertionError("kernel of the cover has unexpected dimension")
    return solve_exact(kernel, g_free_m @ kernel)


def oracle_build_wd(params: CyclicGroupParams, dade: BitsLike) -> PrimeFieldMatrix:
    """Explicit generator action of the module W with the given exponent bits.

    Applies the relative syzygies right to left on concrete matrices,
    verifying at each stage that the current module is inflated from the
    required quotient (its generator action has the right order).
    """
    bits = _bits_of(params, dade)
    u = PrimeFieldMatrix.identity(params.p, 1)
    for j in range(params.n - 1, -1, -1):
        if not bits[j]:
            continue
        q = params.quotient_order(j)
        u = relative_heller_action(u, q)
    return u


def oracle_u_q(
    params: CyclicGroupParams,
    dade: BitsLike,
    i: int,
    action: Optional[PrimeFieldMatrix] = None,
) -> IndecDim:
    """Dimension of Ind(cap(Res W)) computed entirely on explicit matrices.

    Restricts the explicit W action to D_i, reads the cap off the Jordan
    profile, rebuilds the cap as a Jordan block (legitimate up to isomorphism),
    induces it back up, and checks the result is indecomposable.  Pass a
    precomputed ``action`` (the generator action of W) to skip rebuilding it.
    """
    if not 1 <= i <= params.n:
        raise ValueError(f"subgroup index {i} out of range 1..{params.n}")
    u = oracle_build_wd(params, dade) if action is None else action
    res = restricted_action(params, u, i)
    decomp = decompose_unipotent(res)
    cap = None
    for c, _mult in decomp.parts:
        if c % params.p != 0:
            cap = c
            break
    if cap is None:
        raise NotCapped(f"restriction to D_{i} has no full-vertex summand")
    induced = induced_action(
        params, PrimeFieldMatrix.unipotent_jordan(params.p, cap), i
    )
    result = decompose_unipotent(induced)
    if not result.is_indecomposable:
        raise AssertionError("induced cap failed to be indecomposable")
    return result.parts[0][0]
