"""Elements of the Dade group of a cyclic p-group, in exponent coordinates.

An endotrivial module over C_{p^n} that can serve as a source is, up to
isomorphism, a product of relative syzygies of the trivial module: one
exponent bit a_j in {0, 1} per quotient D/D_j, j = 0..n-1, applied right to
left.  The group operation is bitwise XOR.  For p = 2 the rightmost syzygy
is the identity (the quotient has order 2), so bit n-1 carries no
information and is stored canonically as 0, with a flag recording whether
the input had it set.

Everything here is exact integer combinatorics: dimensions come from the
alternating closed form over the set bit positions, and restriction to a
subgroup D_i followed by taking the cap simply truncates the bit vector to
its first i entries.  The matrix-level counterparts used for cross-checking
live in :mod:`blockatlas.cyclic_modules`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .cyclic_modules import CyclicGroupParams


class ParamMismatch(ValueError):
    """Dade group elements over different cyclic groups were combined."""


@dataclass(frozen=True)
class DadeElement:
    """A Dade group element of C_{p^n} given by exponent bits (a_0..a_{n-1}).

    Bit a_j multiplies in the relative syzygy with respect to D/D_j.  The
    stored form is canonical: for p = 2 the final bit is forced to 0 (the
    corresponding syzygy is trivial) and ``canonicalized`` records whether
    the constructor had to clear it.
    """

    params: CyclicGroupParams
    bits: tuple[int, ...]
    canonicalized: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        bits = tuple(int(x) for x in self.bits)
        if len(bits) != self.params.n:
            raise ValueError(
                f"expected {self.params.n} exponent bits, got {len(bits)}"
            )
        if any(x not in (0, 1) for x in bits):
            raise ValueError("exponent bits must be 0 or 1")
        flag = False
        if self.params.p == 2 and bits[-1] == 1:
            bits = bits[:-1] + (0,)
            flag = True
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "canonicalized", flag)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, params: CyclicGroupParams) -> "DadeElement":
        return cls(params, (0,) * params.n)

    @classmethod
    def from_input_bits(
        cls, params: CyclicGroupParams, tail: Sequence[int]
    ) -> "DadeElement":
        """Build a source element from its serialized form (a_1..a_{n-1}).

        Sources have a_0 = 0, so interchange formats carry only the tail.
        """
        tail_t = tuple(int(x) for x in tail)
        if len(tail_t) != params.n - 1:
            raise ValueError(
                f"expected {params.n - 1} serialized bits, got {len(tail_t)}"
            )
        return cls(params, (0,) + tail_t)

    # -- structure ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.bits)

    @property
    def is_source(self) -> bool:
        """Whether the element can be the source of a trivial source lift
        over the full group (equivalently a_0 = 0)."""
        return self.bits[0] == 0

    @property
    def set_bit_indices(self) -> tuple[int, ...]:
        return tuple(j for j, b in enumerate(self.bits) if b)

    def input_bits(self) -> list[int]:
        """Serialized form: the tail (a_1..a_{n-1}) as a plain list."""
        return list(self.bits[1:])

    # -- group law --------------------------------------------------------------

    def add(self, other: "DadeElement") -> "DadeElement":
        if self.params != other.params:
            raise ParamMismatch(
                f"cannot add elements over {self.params} and {other.params}"
            )
        return DadeElement(
            self.params, tuple(a ^ b for a, b in zip(self.bits, other.bits))
        )

    __add__ = add

    # -- restriction and dimensions ---------------------------------------------

    def restrict_to(self, i: int) -> "DadeElement":
        """Cap of the restriction to D_i, as a Dade group element of C_{p^i}.

        Restriction followed by taking the cap truncates the exponent vector
        to its first i bits (1 <= i <= n).
        """
        if not 1 <= i <= self.params.n:
            raise ValueError(f"subgroup index {i} out of range 1..{self.params.n}")
        return DadeElement(CyclicGroupParams(self.params.p, i), self.bits[:i])

    def dimension(self) -> int:
        """Dimension of the endotrivial module with these exponent bits.

        With set bit positions i_0 < ... < i_s this is the alternating sum
        of p^(n - i_j) with a trailing (-1)^(s+1); the zero element has
        dimension 1.
        """
        positions = self.set_bit_indices
        if not positions:
            return 1
        p, n = self.params.p, self.params.n
        total = 0
        for j, pos in enumerate(positions):
            total += (-1) ** j * p ** (n - pos)
        total += (-1) ** len(positions)
        return total

    def ell(self, i: int) -> int:
        """Dimension of the cap of the restriction to D_i (1 <= i <= n)."""
        return self.restrict_to(i).dimension()


def enumerate_sources(params: CyclicGroupParams) -> list[DadeElement]:
    """All canonical source elements (a_0 = 0), in lexicographic bit order.

    There are 2^(n-1) of them, halved to 2^(n-2) for p = 2 (n >= 2) by the
    canonicalization of the final bit; for p = 2, n = 1 only the zero
    element remains.
    """
    free = list(range(1, params.n))
    if params.p == 2 and params.n >= 2:
        free = free[:-1]
    sources = []
    for combo in itertools.product((0, 1), repeat=len(free)):
        bits = [0] * params.n
        for idx, val in zip(free, combo):
            bits[idx] = val
        sources.append(DadeElement(params, tuple(bits)))
    sources.sort(key=lambda d: d.bits)
    return sources
