"""Closed forms for indecomposables over a cyclic p-group, checked against
the explicit matrix oracle on small groups."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockatlas.cyclic_modules import (
    CyclicGroupParams,
    DimensionTooLarge,
    NotInflatable,
    ProjectiveInput,
    build_wd,
    cap_of_restriction,
    generator_action,
    heller,
    induce,
    induced_action,
    inflate,
    oracle_build_wd,
    oracle_u_q,
    relative_heller,
    relative_heller_action,
    restrict,
    restricted_action,
    u_q,
    vertex,
)
from blockatlas.field_linalg import (
    ModuleDecomp,
    PrimeFieldMatrix,
    decompose_unipotent,
    kronecker,
)

SMALL_GROUPS = [
    CyclicGroupParams(p, n)
    for p, n in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (2, 4), (3, 3)]
]


def all_bit_vectors(n):
    out = [()]
    for _ in range(n):
        out = [bits + (b,) for bits in out for b in (0, 1)]
    return out


def test_restrict_projective():
    assert restrict(CyclicGroupParams(3, 2), 9, 1) == ModuleDecomp.from_counts({3: 3})


def test_restrict_mixed():
    assert restrict(CyclicGroupParams(3, 2), 4, 1) == ModuleDecomp.from_counts(
        {2: 1, 1: 2}
    )


def test_restrict_to_trivial_subgroup():
    assert restrict(CyclicGroupParams(5, 1), 3, 0) == ModuleDecomp.from_counts({1: 3})


def test_induce_basic():
    assert induce(CyclicGroupParams(3, 2), 2, 1) == 6
    assert induce(CyclicGroupParams(5, 2), 1, 0) == 25


def test_induce_range_check():
    with pytest.raises(ValueError):
        induce(CyclicGroupParams(3, 2), 4, 1)


def test_inflate():
    params = CyclicGroupParams(5, 2)
    assert inflate(params, 4, 1) == 4
    assert restrict(params, inflate(params, 4, 1), 1) == ModuleDecomp.from_counts(
        {1: 4}
    )
    with pytest.raises(DimensionTooLarge):
        inflate(params, 6, 1)


def test_heller():
    assert heller(CyclicGroupParams(5, 2), 4) == 21
    with pytest.raises(ProjectiveInput):
        heller(CyclicGroupParams(5, 2), 25)


def test_relative_heller():
    assert relative_heller(CyclicGroupParams(3, 2), 1, 1) == 2
    assert relative_heller(CyclicGroupParams(2, 2), 1, 1) == 1
    with pytest.raises(NotInflatable):
        relative_heller(CyclicGroupParams(3, 2), 1, 5)
    with pytest.raises(ProjectiveInput):
        relative_heller(CyclicGroupParams(3, 2), 1, 3)


def test_vertex():
    params = CyclicGroupParams(3, 2)
    assert vertex(params, 3) == 1
    assert vertex(params, 9) == 0
    assert vertex(params, 4) == 2


def test_cap_of_restriction():
    assert cap_of_restriction(CyclicGroupParams(3, 2), 4, 1) == 2


def test_build_wd_values():
    assert build_wd(CyclicGroupParams(3, 2), (0, 1)) == 2
    assert build_wd(CyclicGroupParams(3, 3), (0, 1, 1)) == 7
    assert build_wd(CyclicGroupParams(3, 2), (0, 0)) == 1


def test_u_q_values():
    params = CyclicGroupParams(5, 2)
    assert u_q(params, (0, 1), 1) == 5
    assert u_q(params, (0, 1), 2) == 4


def test_generator_action_shape():
    u = generator_action(CyclicGroupParams(3, 2), 4)
    assert u.rows == 4
    assert u.power(9).is_identity()
    assert not u.power(3).is_identity()


def test_restricted_action_is_power():
    params = CyclicGroupParams(3, 2)
    u = generator_action(params, 7)
    assert restricted_action(params, u, 1) == u.power(3)
    assert decompose_unipotent(restricted_action(params, u, 1)) == restrict(
        params, 7, 1
    )


def test_induced_action_dimension_and_type():
    params = CyclicGroupParams(3, 2)
    ind = induced_action(params, PrimeFieldMatrix.unipotent_jordan(3, 2), 1)
    assert ind.rows == 6
    assert decompose_unipotent(ind).as_counts() == {6: 1}


def test_relative_heller_action_small():
    # Omega_{D/D_1}(k) over C_9 has dimension 3 - 1 = 2 and full order.
    u = PrimeFieldMatrix.identity(3, 1)
    w = relative_heller_action(u, 3)
    assert w.rows == 2
    assert decompose_unipotent(w).as_counts() == {2: 1}


def test_oracle_build_wd_example():
    params = CyclicGroupParams(3, 3)
    action = oracle_build_wd(params, (0, 1, 1))
    assert action.rows == 7
    assert decompose_unipotent(action).is_indecomposable


def test_oracle_u_q_example():
    params = CyclicGroupParams(5, 2)
    assert oracle_u_q(params, (0, 1), 1) == 5
    assert oracle_u_q(params, (0, 1), 2) == 4


@pytest.mark.parametrize("params", SMALL_GROUPS, ids=str)
def test_restriction_matches_oracle(params):
    """Closed-form restriction equals the Jordan decomposition of u^(p^i)."""
    for b in range(1, params.order + 1):
        u = generator_action(params, b)
        for i in range(0, params.n + 1):
            assert restrict(params, b, i) == decompose_unipotent(
                restricted_action(params, u, i)
            )


@pytest.mark.parametrize("params", SMALL_GROUPS, ids=str)
def test_induction_matches_oracle(params):
    for i in range(0, params.n + 1):
        for c in range(1, params.subgroup_order(i) + 1):
            ind = induced_action(
                params, PrimeFieldMatrix.unipotent_jordan(params.p, c), i
            )
            decomp = decompose_unipotent(ind)
            assert decomp.is_indecomposable
            assert decomp.total_dimension == induce(params, c, i)


@pytest.mark.parametrize("params", SMALL_GROUPS, ids=str)
def test_relative_heller_matches_oracle(params):
    for i in range(1, params.n + 1):
        q = params.quotient_order(i)
        for b in range(1, q):
            w = relative_heller_action(generator_action(params, b), q)
            assert w.rows == relative_heller(params, i, b)
            assert decompose_unipotent(w).is_indecomposable


@pytest.mark.parametrize("params", SMALL_GROUPS, ids=str)
def test_build_wd_matches_oracle(params):
    for bits in all_bit_vectors(params.n):
        if params.p == 2 and params.n >= 1 and bits[-1]:
            continue
        action = oracle_build_wd(params, bits)
        assert action.rows == build_wd(params, bits)
        assert decompose_unipotent(action).is_indecomposable


@pytest.mark.parametrize("params", SMALL_GROUPS, ids=str)
def test_u_q_matches_oracle(params):
    for bits in all_bit_vectors(params.n):
        if params.p == 2 and bits[-1]:
            continue
        for i in range(1, params.n + 1):
            assert u_q(params, bits, i) == oracle_u_q(params, bits, i)


@given(st.sampled_from([(2, 3), (3, 2), (5, 1), (7, 1)]), st.data())
@settings(max_examples=30, deadline=None)
def test_tensor_identity_for_exponent_sums(pn, data):
    """The cap of W_x (x) W_y has the dimension of W_(x+y)."""
    p, n = pn
    params = CyclicGroupParams(p, n)
    free = n - 1 if (p == 2 and n >= 2) else n
    x = data.draw(st.tuples(*[st.sampled_from((0, 1))] * free))
    y = data.draw(st.tuples(*[st.sampled_from((0, 1))] * free))
    pad = params.n - free
    x = tuple(x) + (0,) * pad
    y = tuple(y) + (0,) * pad
    z = tuple(a ^ b for a, b in zip(x, y))
    prod = kronecker(oracle_build_wd(params, x), oracle_build_wd(params, y))
    caps = [c for c, mult in decompose_unipotent(prod) if c % p != 0]
    assert len(set(caps)) == 1
    total = sum(
        mult for c, mult in decompose_unipotent(prod) if c % p != 0
    )
    assert total == 1
    assert caps[0] == build_wd(params, z)


def test_restriction_additivity_random():
    """Restricting then counting dimensions is consistent for every b."""
    params = CyclicGroupParams(3, 3)
    for b in range(1, 28):
        for i in (0, 1, 2, 3):
            decomp = restrict(params, b, i)
            assert decomp.total_dimension == b
            assert all(1 <= c <= params.subgroup_order(i) for c, _ in decomp)
