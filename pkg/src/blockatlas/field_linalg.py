"""Exact dense linear algebra over prime fields.

Everything in this module works with integer matrices reduced modulo a prime
p and performs row reduction with explicit pivot selection and modular
inverses.  No floating point arithmetic is used anywhere, so ranks, kernels
and Jordan profiles are exact for any prime that fits in an int64 product
without overflow (p < 2**20 is comfortably safe for the sizes used here).

The module also hosts the two small value types shared with the rest of the
package: :class:`JordanProfile` (the multiset of Jordan block sizes of a
nilpotent matrix) and :class:`ModuleDecomp` (a multiset of indecomposable
summand dimensions, used for modules over cyclic p-groups where a module is
determined by the Jordan profile of its generator action).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np


class ModulusMismatch(ValueError):
    """Two matrices over different prime fields were combined."""


class NotNilpotent(ValueError):
    """A Jordan profile was requested for a matrix that is not nilpotent."""


class NotUnipotent(ValueError):
    """A unipotent decomposition was requested for a matrix g such that
    g - 1 is not nilpotent."""


def is_prime(k: int) -> bool:
    """Deterministic trial-division primality test (adequate for small k)."""
    if k < 2:
        return False
    if k < 4:
        return True
    if k % 2 == 0:
        return False
    f = 3
    while f * f <= k:
        if k % f == 0:
            return False
        f += 2
    return True


class PrimeFieldMatrix:
    """A dense matrix over F_p with exact modular arithmetic.

    Entries must already lie in ``[0, p)``; use :meth:`from_integers` to
    reduce arbitrary integer data.  Instances are immutable (the backing
    array is marked read-only).
    """

    __slots__ = ("p", "_a")

    def __init__(self, p: int, rows: Iterable[Iterable[int]]):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        a = np.array(list(list(r) for r in rows), dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("matrix data must be rectangular and two-dimensional")
        if a.size and (a.min() < 0 or a.max() >= p):
            raise ValueError(f"entries must lie in [0, {p})")
        a.setflags(write=False)
        self.p = p
        self._a = a

    # -- constructors -----------------------------------------------------

    @classmethod
    def _wrap(cls, p: int, a: np.ndarray) -> "PrimeFieldMatrix":
        m = object.__new__(cls)
        a = np.ascontiguousarray(a, dtype=np.int64)
        a.setflags(write=False)
        object.__setattr__(m, "p", p)
        object.__setattr__(m, "_a", a)
        return m

    @classmethod
    def from_integers(cls, p: int, rows: Iterable[Iterable[int]]) -> "PrimeFieldMatrix":
        """Build a matrix from arbitrary integers, reducing them mod p."""
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        a = np.array(list(list(r) for r in rows), dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("matrix data must be rectangular and two-dimensional")
        return cls._wrap(p, np.mod(a, p))

    @classmethod
    def identity(cls, p: int, size: int) -> "PrimeFieldMatrix":
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        return cls._wrap(p, np.eye(size, dtype=np.int64))

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "PrimeFieldMatrix":
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        return cls._wrap(p, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def unipotent_jordan(cls, p: int, size: int) -> "PrimeFieldMatrix":
        """The size x size Jordan block with eigenvalue 1."""
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        a = np.eye(size, dtype=np.int64)
        for i in range(size - 1):
            a[i, i + 1] = 1
        return cls._wrap(p, a)

    @classmethod
    def nilpotent_jordan(cls, p: int, size: int) -> "PrimeFieldMatrix":
        """The size x size Jordan block with eigenvalue 0."""
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        a = np.zeros((size, size), dtype=np.int64)
        for i in range(size - 1):
            a[i, i + 1] = 1
        return cls._wrap(p, a)

    @classmethod
    def cycle_permutation(cls, p: int, size: int) -> "PrimeFieldMatrix":
        """Permutation matrix of the cycle e_0 -> e_1 -> ... -> e_{size-1} -> e_0."""
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        a = np.zeros((size, size), dtype=np.int64)
        for i in range(size):
            a[(i + 1) % size, i] = 1
        return cls._wrap(p, a)

    # -- basic accessors ---------------------------------------------------

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def entries(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(x) for x in row) for row in self._a)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self._a[:, j])

    def array(self) -> np.ndarray:
        """Read-only view of the backing int64 array."""
        return self._a

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"PrimeFieldMatrix(p={self.p}, shape={self._a.shape})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrimeFieldMatrix):
            return NotImplemented
        return (
            self.p == other.p
            and self._a.shape == other._a.shape
            and bool(np.array_equal(self._a, other._a))
        )

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic ---------------------------------------------------------

    def _check_same_field(self, other: "PrimeFieldMatrix") -> None:
        if self.p != other.p:
            raise ModulusMismatch(f"mixed moduli {self.p} and {other.p}")

    def __matmul__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        self._check_same_field(other)
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        return PrimeFieldMatrix._wrap(self.p, (self._a @ other._a) % self.p)

    def __add__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        self._check_same_field(other)
        return PrimeFieldMatrix._wrap(self.p, (self._a + other._a) % self.p)

    def __sub__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        self._check_same_field(other)
        return PrimeFieldMatrix._wrap(self.p, (self._a - other._a) % self.p)

    def power(self, k: int) -> "PrimeFieldMatrix":
        """Exact k-th power by repeated squaring (k >= 0, square matrix)."""
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = np.eye(self.rows, dtype=np.int64)
        base = self._a.copy()
        while k:
            if k & 1:
                result = (result @ base) % self.p
            base = (base @ base) % self.p
            k >>= 1
        return PrimeFieldMatrix._wrap(self.p, result)

    def minus_identity(self) -> "PrimeFieldMatrix":
        if self.rows != self.cols:
            raise ValueError("matrix is not square")
        return PrimeFieldMatrix._wrap(
            self.p, (self._a - np.eye(self.rows, dtype=np.int64)) % self.p
        )

    def hstack(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        self._check_same_field(other)
        return PrimeFieldMatrix._wrap(self.p, np.hstack([self._a, other._a]))

    def is_zero(self) -> bool:
        return not self._a.any()

    def is_identity(self) -> bool:
        return self.rows == self.cols and bool(
            np.array_equal(self._a, np.eye(self.rows, dtype=np.int64))
        )


# -- row reduction ----------------------------------------------------------


def _rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p; returns (rref, pivot column list)."""
    a = np.array(a, dtype=np.int64)
    n_rows, n_cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = None
        for rr in range(r, n_rows):
            if a[rr, c]:
                pivot_row = rr
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            a[[r, pivot_row]] = a[[pivot_row, r]]
        inv = pow(int(a[r, c]) % p, -1, p)
        a[r] = (a[r] * inv) % p
        hits = np.flatnonzero(a[:, c])
        hits = hits[hits != r]
        if hits.size:
            a[hits] = (a[hits] - np.outer(a[hits, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: PrimeFieldMatrix) -> int:
    """Exact rank over F_p."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = _rref(m.array(), m.p)
    return len(pivots)


def nullspace(m: PrimeFieldMatrix) -> PrimeFieldMatrix:
    """Matrix whose columns form a basis of the right kernel of m."""
    reduced, pivots = _rref(m.array(), m.p)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = np.zeros((m.cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-int(reduced[i, fc])) % m.p
    return PrimeFieldMatrix._wrap(m.p, basis)


def solve_exact(a: PrimeFieldMatrix, b: PrimeFieldMatrix) -> PrimeFieldMatrix:
    """Solve a @ x = b where a has full column rank and the system is consistent.

    Raises ValueError otherwise.  Used to express the action induced on an
    invariant subspace in terms of a chosen basis.
    """
    a._check_same_field(b)
    if a.rows != b.rows:
        raise ValueError("row counts do not match")
    aug = np.hstack([a.array(), b.array()])
    reduced, pivots = _rref(aug, a.p)
    if any(pv >= a.cols for pv in pivots):
        raise ValueError("inconsistent linear system")
    if len(pivots) != a.cols:
        raise ValueError("coefficient matrix does not have full column rank")
    return PrimeFieldMatrix._wrap(a.p, reduced[: a.cols, a.cols :].copy())


# -- Jordan profiles ----------------------------------------------------------


@dataclass(frozen=True)
class JordanProfile:
    """Multiset of Jordan block sizes of a nilpotent matrix.

    ``block_sizes`` is stored sorted in non-increasing order; the profile of
    the 0x0 matrix is the empty tuple.
    """

    block_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.block_sizes)
        if any(s < 1 for s in sizes):
            raise ValueError("block sizes must be positive")
        if list(sizes) != sorted(sizes, reverse=True):
            raise ValueError("block sizes must be sorted in non-increasing order")
        object.__setattr__(self, "block_sizes", sizes)

    @property
    def dimension(self) -> int:
        return sum(self.block_sizes)

    def as_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for s in self.block_sizes:
            counts[s] = counts.get(s, 0) + 1
        return counts


@dataclass(frozen=True)
class ModuleDecomp:
    """Multiset of indecomposable summand dimensions of a module over a
    cyclic p-group, recorded as ``(dimension, multiplicity)`` pairs sorted by
    decreasing dimension."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        parts = tuple((int(d), int(m)) for d, m in self.parts)
        if any(d < 1 or m < 1 for d, m in parts):
            raise ValueError("dimensions and multiplicities must be positive")
        dims = [d for d, _ in parts]
        if dims != sorted(dims, reverse=True) or len(set(dims)) != len(dims):
            raise ValueError("parts must have distinct dimensions in decreasing order")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "ModuleDecomp":
        parts = tuple(
            (d, counts[d]) for d in sorted(counts, reverse=True) if counts[d]
        )
        return cls(parts)

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> "ModuleDecomp":
        counts: dict[int, int] = {}
        for s in sizes:
            counts[s] = counts.get(s, 0) + 1
        return cls.from_counts(counts)

    def as_counts(self) -> dict[int, int]:
        return {d: m for d, m in self.parts}

    @property
    def total_dimension(self) -> int:
        return sum(d * m for d, m in self.parts)

    @property
    def summand_count(self) -> int:
        return sum(m for _, m in self.parts)

    @property
    def is_indecomposable(self) -> bool:
        return self.parts != () and self.summand_count == 1

    def __iter__(self):
        return iter(self.parts)


def _check_nilpotent(n: PrimeFieldMatrix) -> None:
    """Verify nilpotency eagerly by repeated squaring up to the dimension."""
    if n.rows != n.cols:
        raise ValueError("matrix is not square")
    power = n
    k = 1
    while k < n.rows:
        power = power @ power
        k *= 2
    if not power.is_zero():
        raise NotNilpotent("matrix is not nilpotent")


def jordan_profile(n: PrimeFieldMatrix) -> JordanProfile:
    """Jordan block sizes of a nilpotent matrix over F_p.

    The number of blocks of size >= k is rank(n^(k-1)) - rank(n^k), which
    pins the whole multiset from the rank sequence of the powers.
    """
    _check_nilpotent(n)
    dim = n.rows
    if dim == 0:
        return JordanProfile(())
    ranks = [dim]
    power = PrimeFieldMatrix.identity(n.p, dim)
    while ranks[-1] > 0:
        power = power @ n
        ranks.append(rank(power))
    counts: dict[int, int] = {}
    max_size = len(ranks) - 1
    for size in range(1, max_size + 1):
        at_least = ranks[size - 1] - ranks[size]
        above = ranks[size] - ranks[size + 1] if size < max_size else 0
        c = at_least - above
        if c:
            counts[size] = c
    return JordanProfile(tuple(sorted(
        (s for s, c in counts.items() for _ in range(c)), reverse=True
    )))


def decompose_unipotent(g: PrimeFieldMatrix) -> ModuleDecomp:
    """Decompose the module given by a unipotent generator action.

    Over a cyclic p-group a module is determined by the Jordan profile of
    g - 1, so the summand multiset is exactly that profile.
    """
    try:
        profile = jordan_profile(g.minus_identity())
    except NotNilpotent as exc:
        raise NotUnipotent("generator action is not unipotent") from exc
    return ModuleDecomp.from_sizes(profile.block_sizes)


def kronecker(a: PrimeFieldMatrix, b: PrimeFieldMatrix) -> PrimeFieldMatrix:
    """Kronecker (tensor) product over a common prime field."""
    if a.p != b.p:
        raise ModulusMismatch(f"mixed moduli {a.p} and {b.p}")
    return PrimeFieldMatrix._wrap(a.p, np.kron(a.array(), b.array()) % a.p)
