import numpy as np
import pytest

from conftest import combos_upto
from ghcodes.codes import (
    CodeError,
    dimension,
    dual_parameter,
    duality_sweep,
    generator_matrix,
    gh_code,
    goppa_bound,
    hermitian_code,
    omega_code_as_gh,
    self_flags,
)
from ghcodes.field import FieldContext
from ghcodes.linalg import kernel_basis, matmul, rank, same_row_space


def test_generator_matrix_examples():
    G0 = generator_matrix(3, 0)
    assert G0.shape == (1, 32) and (G0.entries == 1).all()
    G10 = generator_matrix(3, 10)
    assert G10.shape == (6, 32) and rank(G10) == 6
    G16 = generator_matrix(3, 16)
    assert sorted(combos_upto((4, 6, 9), 16)) == [0, 4, 6, 8, 9, 10, 12, 13, 14, 15, 16]
    assert G16.shape == (11, 32) and rank(G16) == 11


def test_dimension_examples():
    assert dimension(3, 10) == 6
    assert dimension(3, 31) == 26
    assert dimension(3, 3) == 1
    assert dimension(3, 42) == 31  # past n the rank, not the Riemann-Roch count


def test_goppa_bound_examples():
    assert goppa_bound(3, 10) == 22
    assert goppa_bound(3, 16) == 16
    assert goppa_bound(3, 31) == 1
    with pytest.raises(CodeError):
        goppa_bound(3, 32)


def test_dual_parameter_examples():
    assert dual_parameter(3, 21) == 21
    assert dual_parameter(3, 0) == 42
    assert dual_parameter(4, 0) == 128 + 56 - 2 == 182
    assert dual_parameter(4, 100) == 82
    assert dual_parameter(2, 3) == 5
    with pytest.raises(CodeError):
        dual_parameter(3, 43)


def test_self_flags_examples():
    assert self_flags(3, 21) == (True, True)
    assert self_flags(3, 10) == (True, False)
    assert self_flags(3, 30) == (False, False)
    assert self_flags(2, 4) == (True, True)


def test_omega_code_examples():
    c = omega_code_as_gh(3, 16)
    assert c.s == 21 and c.dimension == 16
    assert omega_code_as_gh(3, 1).s == 42
    assert omega_code_as_gh(3, 8).s == 29
    with pytest.raises(CodeError):
        omega_code_as_gh(3, 0)
    with pytest.raises(CodeError):
        omega_code_as_gh(3, 38)  # rho_38 = 43 > 42


def test_omega_code_is_dual_of_evaluation_code():
    for idx in (5, 8, 16, 20):
        rho = omega_code_as_gh(3, idx).s
        C = omega_code_as_gh(3, idx).generator
        E = generator_matrix(3, 42 - rho)
        assert matmul(C, E.T).is_zero()
        assert rank(C) + rank(E) == 32


def test_hermitian_code_examples():
    c0 = hermitian_code(0)
    assert (c0.n, c0.dimension) == (8, 1)
    assert (c0.generator.entries == 1).all()
    assert dual_parameter(2, 4) == 4 and self_flags(2, 4)[1]
    assert hermitian_code(2).dimension == 2


def test_report():
    rep = gh_code(3, 21).report()
    assert (rep.n, rep.k, rep.s, rep.dual_s) == (32, 16, 21, 21)
    assert rep.goppa_distance_lower_bound == 11
    assert rep.self_orthogonal and rep.self_dual
    rep = gh_code(3, 40).report()
    assert rep.goppa_distance_lower_bound is None and not rep.self_orthogonal


def test_rank_identity_r3():
    for s in range(1, 32):
        assert rank(generator_matrix(3, s)) == len(combos_upto((4, 6, 9), s))


@pytest.mark.parametrize("s", [0, 28, 55, 127])
def test_rank_identity_r4(s):
    assert rank(generator_matrix(4, s)) == len(combos_upto((8, 12, 17), s))


def test_duality_sweep_r3():
    res = duality_sweep(3)
    assert len(res) == 43
    assert all(c.orthogonal and c.rank_sum == 32 and c.kernel_matches for c in res)


def test_duality_sweep_hermitian():
    res = duality_sweep(2)
    assert [c.dual_l for c in res] == [8 - s for s in range(9)]
    assert all(c.ok for c in res)


def test_kernel_oracle_explicit():
    for s in (0, 7, 21, 33):
        K = kernel_basis(generator_matrix(3, s))
        assert same_row_space(K, generator_matrix(3, 42 - s))


def test_nesting_and_monotonicity():
    big = generator_matrix(3, 40).entries
    prev = 0
    S = set(combos_upto((4, 6, 9), 31))
    for t in range(0, 41):
        G = generator_matrix(3, t).entries
        assert np.array_equal(G, big[: G.shape[0]])
        if t < 32:
            d = dimension(3, t)
            assert d >= prev
            assert (d > prev) == (t in S and t > 0) or t == 0
            prev = d


def test_modulus_override_changes_matrix_not_parameters():
    alt = FieldContext(3, 0b1101)  # z^3 + z^2 + 1
    G = generator_matrix(3, 13, alt)
    assert G.field == alt
    assert rank(G) == 8
    assert not np.array_equal(G.entries, generator_matrix(3, 13).entries)
    assert self_flags(3, 21, field=alt) == (True, True)
