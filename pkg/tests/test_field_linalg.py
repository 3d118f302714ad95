import numpy as np
import pytest
from hypothesis import given, assume
from hypothesis import strategies as st

from blockatlas.field_linalg import (
    JordanProfile,
    ModuleDecomp,
    ModulusMismatch,
    NotNilpotent,
    NotUnipotent,
    PrimeFieldMatrix,
    decompose_unipotent,
    is_prime,
    jordan_profile,
    kronecker,
    nullspace,
    rank,
    solve_exact,
)

PRIMES = (2, 3, 5, 7)


def random_invertible(rng, p, size):
    while True:
        a = PrimeFieldMatrix.from_integers(
            p, rng.integers(0, p, size=(size, size)).tolist()
        )
        if rank(a) == size:
            return a


def test_is_prime():
    assert [k for k in range(2, 30) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)
    assert not is_prime(0)


def test_constructor_rejects_composite_modulus():
    with pytest.raises(ValueError):
        PrimeFieldMatrix(4, [[0]])


def test_constructor_rejects_out_of_range_entries():
    with pytest.raises(ValueError):
        PrimeFieldMatrix(3, [[0, 3]])


def test_from_integers_reduces():
    m = PrimeFieldMatrix.from_integers(5, [[7, -1], [10, 3]])
    assert m.entries == ((2, 4), (0, 3))


def test_rank_deficient_matrix():
    m = PrimeFieldMatrix(5, [[1, 2], [2, 4]])
    assert rank(m) == 1


def test_rank_identity_and_zeros():
    assert rank(PrimeFieldMatrix.identity(5, 3)) == 3
    assert rank(PrimeFieldMatrix.zeros(3, 4, 4)) == 0


def test_rank_sees_characteristic():
    # Integer rank 2, but the rows collide mod 3.
    m = PrimeFieldMatrix.from_integers(3, [[1, 1], [4, 4]])
    assert rank(m) == 1


def test_nullspace_columns_span_kernel():
    m = PrimeFieldMatrix(5, [[1, 2], [2, 4]])
    ns = nullspace(m)
    assert ns.cols == 1
    assert (m @ ns).is_zero()


def test_nullspace_of_invertible_is_empty():
    assert nullspace(PrimeFieldMatrix.identity(7, 4)).cols == 0


def test_solve_exact_roundtrip():
    a = PrimeFieldMatrix(5, [[1, 0], [1, 1], [0, 1]])
    x = PrimeFieldMatrix(5, [[2], [3]])
    b = a @ x
    assert solve_exact(a, b) == x


def test_solve_exact_rejects_inconsistent():
    a = PrimeFieldMatrix(5, [[1, 0], [1, 0]])
    b = PrimeFieldMatrix(5, [[1], [2]])
    with pytest.raises(ValueError):
        solve_exact(a, b)


def test_modulus_mismatch():
    a = PrimeFieldMatrix.identity(3, 2)
    b = PrimeFieldMatrix.identity(5, 2)
    with pytest.raises(ModulusMismatch):
        a @ b


def test_power_cyclic_shift():
    c = PrimeFieldMatrix.cycle_permutation(3, 4)
    assert c.power(4).is_identity()
    assert not c.power(2).is_identity()


def test_jordan_profile_cube_of_nilpotent_block():
    n = PrimeFieldMatrix.nilpotent_jordan(3, 4)
    assert jordan_profile(n.power(3)) == JordanProfile((2, 1, 1))


def test_jordan_profile_rejects_invertible():
    with pytest.raises(NotNilpotent):
        jordan_profile(PrimeFieldMatrix.identity(3, 2))


def test_decompose_cube_of_unipotent_block():
    u = PrimeFieldMatrix.unipotent_jordan(3, 4)
    assert decompose_unipotent(u.power(3)).as_counts() == {2: 1, 1: 2}


def test_decompose_identity():
    assert decompose_unipotent(PrimeFieldMatrix.identity(3, 5)).as_counts() == {1: 5}


def test_decompose_rejects_non_unipotent():
    with pytest.raises(NotUnipotent):
        decompose_unipotent(PrimeFieldMatrix.cycle_permutation(5, 3))


def test_full_jordan_block_has_order_p():
    for p in PRIMES:
        u = PrimeFieldMatrix.unipotent_jordan(p, p)
        assert decompose_unipotent(u).as_counts() == {p: 1}
        assert u.power(p).is_identity()
        assert not u.power(p - 1).is_identity() or p == 1


def test_kronecker_of_two_length_two_blocks():
    u = PrimeFieldMatrix.unipotent_jordan(3, 2)
    assert decompose_unipotent(kronecker(u, u)).as_counts() == {3: 1, 1: 1}


def test_module_decomp_constructors_agree():
    d = ModuleDecomp.from_sizes([3, 1, 3, 2])
    assert d == ModuleDecomp.from_counts({3: 2, 2: 1, 1: 1})
    assert d.total_dimension == 9
    assert d.summand_count == 4
    assert not d.is_indecomposable


def test_jordan_profile_counts_sum_to_dimension():
    prof = JordanProfile((4, 2, 2, 1))
    assert prof.dimension == 9
    assert prof.as_counts() == {4: 1, 2: 2, 1: 1}


@given(
    st.sampled_from(PRIMES),
    st.integers(min_value=1, max_value=6),
    st.randoms(use_true_random=False),
)
def test_block_count_is_corank(p, size, pyrandom):
    """The number of Jordan blocks of N equals dim - rank N."""
    entries = [[pyrandom.randrange(p) for _ in range(size)] for _ in range(size)]
    m = PrimeFieldMatrix(p, entries)
    # Strictly upper-triangularise to force nilpotency.
    tri = PrimeFieldMatrix(
        p,
        [
            [m.entries[r][c] if c > r else 0 for c in range(size)]
            for r in range(size)
        ],
    )
    prof = jordan_profile(tri)
    assert len(prof.block_sizes) == size - rank(tri)
    assert prof.dimension == size


@given(
    st.sampled_from(PRIMES),
    st.integers(min_value=1, max_value=5),
    st.integers(min_value=0, max_value=10**6),
)
def test_profile_is_conjugation_invariant(p, size, seed):
    """Similar unipotent matrices decompose identically."""
    rng = np.random.default_rng(seed)
    u = PrimeFieldMatrix.unipotent_jordan(p, size)
    g = random_invertible(rng, p, size)
    g_inv = solve_exact(g, PrimeFieldMatrix.identity(p, size))
    conj = g @ u @ g_inv
    assert decompose_unipotent(conj).as_counts() == {size: 1}


@given(
    st.sampled_from((2, 3, 5)),
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=4),
)
def test_kronecker_of_unipotents_is_unipotent(p, a, b):
    """A tensor product of unipotent blocks decomposes with total dim a*b."""
    prod = kronecker(
        PrimeFieldMatrix.unipotent_jordan(p, a),
        PrimeFieldMatrix.unipotent_jordan(p, b),
    )
    decomp = decompose_unipotent(prod)
    assert decomp.total_dimension == a * b
    assume(a + b - 1 <= p)
    # Below the characteristic the largest summand has dimension a + b - 1.
    assert decomp.parts[0][0] == a + b - 1
