"""Quantum immanants, Bethe generators and the q-characteristic polynomial.

The quantum determinant and permanent are not special-cased: they are the
immanants of the sign and trivial Hecke characters.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import TYPE_CHECKING

from qlittlewood.combinatorics import (
    Partition,
    classical_character,
    enumerate_syt,
    multisets,
    perm_sign,
    permutations,
    power_sum_expansion,
    subsets,
)
from qlittlewood.hecke import irreducible_character, primitive_idempotent
from qlittlewood.qmatrix import QMatElement, generator_matrix, linear_combination
from qlittlewood.scalar import ONE, multiset_multiplicity
from qlittlewood.tensorrep import chain_entry, r_matrix, row_action, tensor_basis

if TYPE_CHECKING:
    from collections.abc import Sequence

    from qlittlewood.combinatorics import Tableau
    from qlittlewood.hecke import HeckeElement
    from qlittlewood.qmatrix import Monomial

logger = logging.getLogger(__name__)

type Matrix = list[list[QMatElement]]


class ImmanantError(ValueError):
    """Raised for immanant inputs of inconsistent lengths."""


@dataclass(frozen=True, slots=True)
class ImmanantSpec:
    """Inputs of Imm_χ(X_I^J)."""

    character: HeckeElement
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        m = self.character.m
        if len(self.rows) != m or len(self.cols) != m:
            msg = (
                f"Rows {self.rows} and columns {self.cols} must both have length {m} "
                "to match the character"
            )
            raise ImmanantError(msg)
        if any(not 1 <= a <= self.n for a in (*self.rows, *self.cols)):
            msg = f"Row/column letters must lie in 1..{self.n}"
            raise ImmanantError(msg)


def _contract(h: HeckeElement, rows: tuple[int, ...], cols: tuple[int, ...], n: int) -> QMatElement:
    """⟨I| hecke_action(h) X_1 ⋯ X_m |J⟩."""
    vector = row_action(h, rows, n)
    return linear_combination(n, ((c, chain_entry(n, k, cols)) for k, c in vector.items()))


def immanant(spec: ImmanantSpec) -> QMatElement:
    """Imm_χ(X_I^J), in normal form and linear in χ."""
    return _contract(spec.character, spec.rows, spec.cols, spec.n)


def _check_multiset(letters: Sequence[int], n: int) -> tuple[int, ...]:
    word = tuple(letters)
    if list(word) != sorted(word):
        msg = f"Multiset {word} must be nondecreasing"
        raise ImmanantError(msg)
    if any(not 1 <= a <= n for a in word):
        msg = f"Multiset letters must lie in 1..{n}"
        raise ImmanantError(msg)
    return word


def first_tableau(shape: Partition) -> Tableau:
    return enumerate_syt(shape)[0]


@lru_cache(maxsize=4096)
def normalized_immanant(
    shape: Partition, letters: tuple[int, ...], n: int, route: str = "character"
) -> QMatElement:
    """Imm_{χ^λ}(X_I)/m_{q²}(I).

    The "idempotent" route evaluates Σ_K ⟨K| E_𝒯 X_1⋯X_m |K⟩ over the distinct
    rearrangements K of I, with 𝒯 the first standard tableau of λ.
    """
    word = _check_multiset(letters, n)
    if len(word) != shape.weight:
        msg = f"Multiset {word} has {len(word)} letters, shape {shape} has {shape.weight} boxes"
        raise ImmanantError(msg)
    if route == "character":
        value = _contract(irreducible_character(shape), word, word, n)
        return value / multiset_multiplicity(word, "q2")
    if route == "idempotent":
        idem = primitive_idempotent(first_tableau(shape))
        return linear_combination(
            n,
            ((ONE, _contract(idem, k, k, n)) for k in sorted(set(itertools.permutations(word)))),
        )
    msg = f"Unknown route {route!r}; expected 'character' or 'idempotent'"
    raise ImmanantError(msg)


def idempotent_trace(tableau: Tableau, n: int) -> QMatElement:
    """tr E_𝒯 X_1 ⋯ X_r over the whole tensor space."""
    idem = primitive_idempotent(tableau)
    return linear_combination(
        n, ((ONE, _contract(idem, k, k, n)) for k in tensor_basis(n, tableau.size))
    )


@lru_cache(maxsize=256)
def schur_sum(shape: Partition, n: int) -> QMatElement:
    """Σ_I Imm_{χ^λ}(X_I)/m_{q²}(I) over nondecreasing multisets I of [n]."""
    return linear_combination(
        n,
        ((ONE, normalized_immanant(shape, word, n)) for word in multisets(n, shape.weight)),
    )


def quantum_determinant(rows: Sequence[int], cols: Sequence[int], n: int) -> QMatElement:
    sign = irreducible_character(Partition((1,) * len(rows)))
    return immanant(ImmanantSpec(sign, tuple(rows), tuple(cols), n))


def quantum_permanent(rows: Sequence[int], cols: Sequence[int], n: int) -> QMatElement:
    trivial = irreducible_character(Partition((len(rows),)))
    return immanant(ImmanantSpec(trivial, tuple(rows), tuple(cols), n))


# -- Bethe generators ------------------------------------------------------------


@lru_cache(maxsize=128)
def bethe_alpha(n: int, k: int, route: str = "minors") -> QMatElement:
    """α_k: the sum of principal quantum minors of size k, or tr E^{(1^k)} X_1⋯X_k."""
    if k < 0:
        msg = f"α_k needs k >= 0, got {k}"
        raise ImmanantError(msg)
    if k == 0:
        return QMatElement.one(n)
    if k > n:
        return QMatElement(n)
    if route == "minors":
        return linear_combination(
            n, ((ONE, quantum_determinant(s, s, n)) for s in subsets(n, k))
        )
    if route == "trace":
        return idempotent_trace(first_tableau(Partition((1,) * k)), n)
    msg = f"Unknown route {route!r}; expected 'minors' or 'trace'"
    raise ImmanantError(msg)


@lru_cache(maxsize=128)
def bethe_beta(n: int, k: int) -> QMatElement:
    """β_k = Σ_I per_q(X_I)/m_{q²}(I) over nondecreasing multisets of size k."""
    if k < 0:
        msg = f"β_k needs k >= 0, got {k}"
        raise ImmanantError(msg)
    if k == 0:
        return QMatElement.one(n)
    return schur_sum(Partition((k,)), n)


def star_product(y: Matrix, z: Matrix) -> Matrix:
    """Y*Z = tr_1 P^q Y_1 Z_2, i.e. (Y*Z)_ab = Σ_c P^q[(c,a),(a,c)] Y_ac Z_cb.

    Entries multiply in the order Y then Z.
    """
    n = len(y)
    pq = r_matrix(n, "Pq")
    return [
        [
            linear_combination(
                n,
                (
                    (pq.entry((c, a), (a, c)), y[a - 1][c - 1] * z[c - 1][b - 1])
                    for c in range(1, n + 1)
                ),
            )
            for b in range(1, n + 1)
        ]
        for a in range(1, n + 1)
    ]


@lru_cache(maxsize=64)
def star_power(n: int, k: int) -> tuple[tuple[QMatElement, ...], ...]:
    """X^{[k]}: X^{[0]} is the identity and X^{[k]} = X^{[k-1]} * X."""
    if k < 0:
        msg = f"X^[k] needs k >= 0, got {k}"
        raise ImmanantError(msg)
    if k == 0:
        return tuple(
            tuple(QMatElement.one(n) if a == b else QMatElement(n) for b in range(n))
            for a in range(n)
        )
    previous = [list(row) for row in star_power(n, k - 1)]
    return tuple(tuple(row) for row in star_product(previous, generator_matrix(n)))


def gamma(n: int, k: int) -> QMatElement:
    """γ_k = tr X^{[k]}."""
    power = star_power(n, k)
    return linear_combination(n, ((ONE, power[a][a]) for a in range(n)))


def char_poly(n: int) -> list[QMatElement]:
    """Coefficients of char_q(X, t) = Σ (-1)^k α_k t^{n-k}, leading first."""
    return [bethe_alpha(n, k).scale(-1 if k % 2 else 1) for k in range(n + 1)]


@dataclass(frozen=True, slots=True)
class BetheGenerators:
    """α_0..α_n, β_0..β_degree and γ_0..γ_degree of A_q(Mat_n)."""

    n: int
    alpha: tuple[QMatElement, ...]
    beta: tuple[QMatElement, ...]
    gamma: tuple[QMatElement, ...]


def bethe_generators(n: int, degree: int | None = None) -> BetheGenerators:
    """Generators to the requested degree (default n + 2)."""
    top = n + 2 if degree is None else degree
    logger.info("computing Bethe generators for n=%d to degree %d", n, top)
    return BetheGenerators(
        n=n,
        alpha=tuple(bethe_alpha(n, k) for k in range(n + 1)),
        beta=tuple(bethe_beta(n, k) for k in range(top + 1)),
        gamma=tuple(gamma(n, k) for k in range(top + 1)),
    )


# -- classical constructions over the Bethe subalgebra ---------------------------------


def _determinant(matrix: Matrix, n: int) -> QMatElement:
    """Leibniz expansion with rows multiplied in order; entries are assumed to commute."""
    size = len(matrix)
    total = QMatElement.one(n) if size == 0 else QMatElement(n)
    for sigma in permutations(size):
        product = QMatElement.one(n)
        for i in range(size):
            entry = matrix[i][sigma[i] - 1]
            if not entry:
                break
            product = product * entry
        else:
            total = total + product.scale(perm_sign(sigma))
    return total


def _sequence_entry(values: Sequence[QMatElement], k: int, n: int) -> QMatElement:
    if k < 0 or k >= len(values):
        return QMatElement(n)
    return values[k]


def jacobi_trudi_alpha(shape: Partition, n: int) -> QMatElement:
    """det(α_{λᵀ_i - i + j}), of size λ_1."""
    conj = shape.conjugate().parts
    alphas = [bethe_alpha(n, k) for k in range(n + 1)]
    size = len(conj)
    return _determinant(
        [[_sequence_entry(alphas, conj[i] - i + j, n) for j in range(size)] for i in range(size)],
        n,
    )


def jacobi_trudi_beta(shape: Partition, n: int) -> QMatElement:
    """det(β_{λ_i - i + j}), of size ℓ(λ)."""
    parts = shape.parts
    betas = [bethe_beta(n, k) for k in range(shape.weight + len(parts) + 1)]
    size = len(parts)
    return _determinant(
        [[_sequence_entry(betas, parts[i] - i + j, n) for j in range(size)] for i in range(size)],
        n,
    )


def hessenberg_matrix(gammas: Sequence[QMatElement], r: int, n: int) -> Matrix:
    """Γ_r: γ_{i-j+1} on and below the diagonal, i on the superdiagonal (1-based)."""
    if len(gammas) < r:
        msg = f"Need γ_1..γ_{r}, got {len(gammas)} values"
        raise ImmanantError(msg)
    return [
        [
            gammas[i - j]
            if i >= j
            else QMatElement.scalar(n, i + 1)
            if j == i + 1
            else QMatElement(n)
            for j in range(r)
        ]
        for i in range(r)
    ]


def hessenberg_immanant(shape: Partition, gammas: Sequence[QMatElement], n: int) -> QMatElement:
    """Imm_{χ^λ}(Γ_r)/r! with classical characters; ``gammas[j-1]`` is γ_j."""
    r = shape.weight
    matrix = hessenberg_matrix(gammas, r, n)
    total = QMatElement(n)
    for sigma in permutations(r):
        weight = classical_character(shape, sigma)
        if not weight:
            continue
        product = QMatElement.one(n)
        for k in range(r):
            entry = matrix[sigma[k] - 1][k]
            if not entry:
                break
            product = product * entry
        else:
            total = total + product.scale(weight)
    return total.scale(Fraction(1, factorial(r)))


def power_sum_form(shape: Partition, gammas: Sequence[QMatElement], n: int) -> QMatElement:
    """Σ_ρ χ^λ(ρ)/z_ρ γ_{ρ_1}⋯γ_{ρ_l}; ``gammas[j-1]`` is γ_j."""
    total = QMatElement(n)
    for rho, coeff in power_sum_expansion(shape).items():
        product = QMatElement.one(n)
        for part in rho.parts:
            product = product * gammas[part - 1]
        total = total + product.scale(coeff)
    return total


def classical_immanant(
    shape: Partition, rows: Sequence[int], cols: Sequence[int]
) -> dict[Monomial, Fraction]:
    """Σ_σ χ^λ(σ) Π_k x_{i_σ(k) j_k} with commuting entries, monomials as sorted words."""
    m = len(rows)
    image: Counter[Monomial] = Counter()
    for sigma in permutations(m):
        weight = classical_character(shape, sigma)
        if weight:
            word = tuple(sorted((rows[sigma[k] - 1], cols[k]) for k in range(m)))
            image[word] += weight
    return {mono: Fraction(c) for mono, c in image.items() if c}
