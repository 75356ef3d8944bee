"""Tests for tensorrep.py: R-matrices, the Hecke action on (C^n)^⊗m, projectors, the coaction."""

from __future__ import annotations

import pytest

from qlittlewood.combinatorics import Partition
from qlittlewood.hecke import HeckeElement, irreducible_character
from qlittlewood.qmatrix import QMatElement
from qlittlewood.scalar import ONE, Q, Q_DIFF, ZERO
from qlittlewood.tensorrep import (
    TensorError,
    TensorOperator,
    adjoint_check,
    coaction,
    hecke_action,
    inner_product,
    r_matrix,
    rcheck,
    rcheck_perm,
    row_action,
    tensor_basis,
    trace_with,
    weight_projector,
    x_chain,
)
from tests.conftest import Q_INV, x

# === R-matrix variants ===


def test_rcheck_entries_n2() -> None:
    """Ř e_(2,1) = e_(1,2) + (q - q^-1) e_(2,1); Ř e_(1,2) = e_(2,1)."""
    op = r_matrix(2, "Rcheck")
    assert op.entry((1, 2), (2, 1)) == ONE
    assert op.entry((2, 1), (2, 1)) == Q_DIFF
    assert op.entry((2, 1), (1, 2)) == ONE
    assert op.entry((1, 2), (1, 2)) == ZERO
    assert op.entry((1, 1), (1, 1)) == Q


@pytest.mark.parametrize("n", [2, 3])
def test_r_matrix_identities(n: int) -> None:
    """Ř = PR is symmetric, R⁻ inverts R, and R⁺ - R⁻ = (q - q^-1) P."""
    r, p = r_matrix(n, "R"), r_matrix(n, "P")
    assert r_matrix(n, "Rcheck") == p @ r
    assert r_matrix(n, "Rcheck").transpose() == r_matrix(n, "Rcheck")
    assert r_matrix(n, "R-") @ r == TensorOperator.identity(n, 2)
    assert r_matrix(n, "R+") == p @ r @ p
    assert r_matrix(n, "R+") - r_matrix(n, "R-") == p.scale(Q_DIFF)


def test_yang_baxter_n2() -> None:
    """R12 R13 R23 = R23 R13 R12 on three factors."""
    r = r_matrix(2, "R")
    r12, r13, r23 = (r.embed(pos, 3) for pos in ((1, 2), (1, 3), (2, 3)))
    assert r12 @ r13 @ r23 == r23 @ r13 @ r12


def test_q_permutation_operator() -> None:
    """P^q swaps with q below the diagonal and q^-1 above."""
    pq = r_matrix(2, "Pq")
    assert pq.entry((2, 1), (1, 2)) == Q
    assert pq.entry((1, 2), (2, 1)) == Q_INV
    assert pq.entry((1, 1), (1, 1)) == ONE


def test_unknown_variant_raises() -> None:
    """Variants outside the fixed list raise TensorError."""
    with pytest.raises(TensorError, match="Unknown R-matrix variant"):
        r_matrix(2, "S")  # type: ignore[arg-type]
    with pytest.raises(TensorError, match="n >= 1"):
        r_matrix(0)


# === Ř_k on (C^n)^⊗m ===


def test_rcheck_quadratic_and_braid() -> None:
    """(Ř_k - q)(Ř_k + q^-1) = 0 and the braid relation on three factors."""
    identity = TensorOperator.identity(2, 3)
    r1, r2 = rcheck(2, 1, 3), rcheck(2, 2, 3)
    assert r1 @ r1 == identity + r1.scale(Q_DIFF)
    assert r1 @ r2 @ r1 == r2 @ r1 @ r2


def test_rcheck_out_of_range() -> None:
    """Ř_m acts on nonexistent factors."""
    with pytest.raises(TensorError, match="out of range"):
        rcheck(2, 2, 2)


def test_hecke_action_is_a_homomorphism() -> None:
    """hecke_action(ab) = hecke_action(a) hecke_action(b)."""
    a = HeckeElement.generator(1, 3) + HeckeElement.basis((3, 1, 2)).scale(Q)
    b = HeckeElement.generator(2, 3).scale(Q_INV) + HeckeElement.one(3)
    assert hecke_action(a * b, 2) == hecke_action(a, 2) @ hecke_action(b, 2)
    assert rcheck_perm(2, (2, 3, 1)) == rcheck(2, 1, 3) @ rcheck(2, 2, 3)


@pytest.mark.parametrize("index", [(1, 2, 1), (2, 2, 1), (2, 1, 1)])
def test_row_action_matches_matrix_row(index: tuple[int, int, int]) -> None:
    """⟨I| h computed by chaining equals row I of the full operator."""
    h = irreducible_character(Partition.of(2, 1))
    assert row_action(h, index, 2) == hecke_action(h, 2).row(index)


def test_row_action_rejects_bad_index() -> None:
    """The index must be a basis vector of the right length."""
    with pytest.raises(TensorError, match="not a basis vector"):
        row_action(HeckeElement.one(2), (1, 3), 2)


def test_adjoint_check() -> None:
    """⟨h u, v⟩ = ⟨u, h* v⟩."""
    h = HeckeElement.basis((2, 3, 1)) + HeckeElement.generator(1, 3).scale(Q)
    u = {(1, 2, 2): ONE, (2, 1, 1): Q}
    v = {(2, 2, 1): ONE, (1, 1, 2): Q_INV, (2, 1, 2): ONE}
    assert adjoint_check(h, u, v, 2)


def test_apply_and_inner_product() -> None:
    """Ř e_(1,2) = e_(2,1), and the basis is orthonormal."""
    image = rcheck(2, 1, 2).apply({(1, 2): ONE})
    assert image == {(2, 1): ONE}
    assert inner_product(image, {(2, 1): Q, (1, 1): ONE}) == Q
    assert inner_product({(1, 2): ONE}, {(2, 1): ONE}) == ZERO


# === weight projectors ===


def test_weight_projector_keeps_weight_space() -> None:
    """P_(1,1) keeps e_(1,2) and e_(2,1) only."""
    proj = weight_projector((1, 1))
    assert proj.is_diagonal()
    assert sorted(i for (i, _) in proj.entries) == [(1, 2), (2, 1)]
    assert proj @ proj == proj


def test_hecke_action_preserves_weight() -> None:
    """Ř commutes with every weight projector."""
    op = hecke_action(irreducible_character(Partition.of(2, 1)), 2)
    for mu in [(2, 1), (1, 2), (3, 0)]:
        proj = weight_projector(mu)
        assert proj @ op == op @ proj


@pytest.mark.parametrize(("mu", "n"), [((1, -1), None), ((1, 1), 3)])
def test_weight_projector_invalid(mu: tuple[int, ...], n: int | None) -> None:
    """Negative parts or a length other than n raise TensorError."""
    with pytest.raises(TensorError, match="not a composition"):
        weight_projector(mu, n)


# === A_q(Mat_n)-valued operators ===


def test_x_chain_entries() -> None:
    """Entry (I, J) of X_1 X_2 is x_{i1 j1} x_{i2 j2} in normal form."""
    chain = x_chain(2, 2)
    assert chain.entry((2, 2), (2, 1)) == x(2, 2, 2) * x(2, 2, 1)
    assert len(tensor_basis(2, 2)) == 4


def test_rtt_commutation() -> None:
    """Ř commutes with X_1 X_2."""
    chain = x_chain(2, 2)
    op = rcheck(2, 1, 2)
    assert chain.compose_left(op) == chain.compose_right(op)


def test_counit_of_chain_is_identity() -> None:
    """Entrywise ε of X_1 X_2 is the identity operator."""
    assert x_chain(2, 2).apply_counit() == TensorOperator.identity(2, 2)


def test_trace_with_identity() -> None:
    """tr(X_1 X_2) = (x11 + x22)^2."""
    trace = trace_with(TensorOperator.identity(2, 2), x_chain(2, 2))
    tr = x(2, 1, 1) + x(2, 2, 2)
    assert trace == tr * tr
    assert x_chain(2, 1).trace() == tr


def test_coaction_is_the_chain() -> None:
    """The coefficient of e_I in the coaction of e_J is X^I_J."""
    assert coaction(2, 2) == x_chain(2, 2)
    assert coaction(2, 1).entry((2,), (1,)) == x(2, 2, 1)


def test_compose_rejects_wrong_size() -> None:
    """Operators must live on the same tensor space."""
    with pytest.raises(TensorError, match="does not match"):
        x_chain(2, 2).compose_left(TensorOperator.identity(2, 3))
    assert x_chain(2, 1).entry((1,), (2,)) == QMatElement.generator(2, 1, 2)
