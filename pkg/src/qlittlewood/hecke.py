"""The Hecke algebra H_m: basis arithmetic, seminormal representations, characters, idempotents.

Basis elements T_σ are indexed by one-line permutations.  The generators
satisfy ``(T_i - q)(T_i + q^-1) = 0`` and the braid relations, so

    T_σ T_i = T_{σ s_i}                      if l(σ s_i) > l(σ)
    T_σ T_i = T_{σ s_i} + (q - q^-1) T_σ      otherwise

and symmetrically on the left.  Irreducible representations use a
square-root-free seminormal form: the diagonal of ρ(T_i) at a tableau with
axial distance d is ``q^d / [d]``, and the off-diagonal pair is
``(1, [d+1][d-1]/[d]^2)``, which is a diagonal rescaling of the orthogonal
form.  Traces and diagonal entries, hence characters and idempotents, are
unchanged by that rescaling.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Any

import numpy as np

from qlittlewood.combinatorics import (
    Partition,
    Permutation,
    Tableau,
    check_perm,
    enumerate_syt,
    identity_perm,
    kostka,
    left_parent,
    partitions,
    perm_inverse,
    perm_length,
    permutations,
    right_parent,
    schur_element,
    swap_positions,
    swap_values,
    transposition,
)
from qlittlewood.scalar import (
    ONE,
    ONE_POLY,
    Q_DIFF,
    Q_DIFF_POLY,
    ZERO,
    LaurentPoly,
    ScalarQ,
    clear_denominators,
    signed_q_int,
    sum_scalars,
)

if TYPE_CHECKING:
    from collections.abc import Mapping, Sequence

    from numpy.typing import NDArray

logger = logging.getLogger(__name__)

type HeckeJson = dict[str, Any]
type _Numerators = dict[Permutation, LaurentPoly]


class RankError(ValueError):
    """Raised for mismatched ranks or out-of-range generator indices."""


def _accumulate(out: _Numerators, key: Permutation, c: LaurentPoly) -> None:
    value = out.get(key)
    total = c if value is None else value + c
    if total:
        out[key] = total
    else:
        out.pop(key, None)


def _right_step(terms: _Numerators, i: int) -> _Numerators:
    out: _Numerators = {}
    for sigma, c in terms.items():
        _accumulate(out, swap_positions(sigma, i), c)
        if sigma[i - 1] > sigma[i]:
            _accumulate(out, sigma, c * Q_DIFF_POLY)
    return out


def _left_step(terms: _Numerators, i: int) -> _Numerators:
    out: _Numerators = {}
    for sigma, c in terms.items():
        _accumulate(out, swap_values(sigma, i), c)
        if sigma.index(i) > sigma.index(i + 1):
            _accumulate(out, sigma, c * Q_DIFF_POLY)
    return out


class HeckeElement:
    """A finite combination Σ c_σ T_σ over Q(q)."""

    __slots__ = ("_terms", "m")

    m: int
    _terms: dict[Permutation, ScalarQ]

    def __init__(self, m: int, terms: Mapping[Permutation, ScalarQ] | None = None) -> None:
        if m < 0:
            msg = f"H_m needs m >= 0, got {m}"
            raise RankError(msg)
        self.m = m
        self._terms = {s: c for s, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, m: int) -> HeckeElement:
        return cls(m)

    @classmethod
    def one(cls, m: int) -> HeckeElement:
        return cls(m, {identity_perm(m): ONE})

    @classmethod
    def basis(cls, sigma: Sequence[int]) -> HeckeElement:
        """T_σ."""
        perm = check_perm(sigma)
        return cls(len(perm), {perm: ONE})

    @classmethod
    def generator(cls, i: int, m: int) -> HeckeElement:
        """T_i = T_{s_i}."""
        if not 1 <= i < m:
            msg = f"Generator T_{i} out of range for H_{m}"
            raise RankError(msg)
        return cls(m, {swap_positions(identity_perm(m), i): ONE})

    @classmethod
    def _from_numerators(cls, m: int, terms: _Numerators, den: LaurentPoly) -> HeckeElement:
        if den == ONE_POLY:
            return cls(m, {s: ScalarQ.laurent(c) for s, c in terms.items()})
        return cls(m, {s: ScalarQ.fraction(c, den) for s, c in terms.items()})

    def _numerators(self) -> tuple[LaurentPoly, _Numerators]:
        perms = list(self._terms)
        den, nums = clear_denominators([self._terms[s] for s in perms])
        return den, dict(zip(perms, nums, strict=True))

    @property
    def terms(self) -> Mapping[Permutation, ScalarQ]:
        return self._terms

    def coefficient(self, sigma: Sequence[int]) -> ScalarQ:
        return self._terms.get(tuple(sigma), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def is_laurent(self) -> bool:
        return all(c.is_laurent() for c in self._terms.values())

    def _check_rank(self, other: HeckeElement) -> None:
        if other.m != self.m:
            msg = f"Rank mismatch: H_{self.m} vs H_{other.m}"
            raise RankError(msg)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> HeckeElement:
        return HeckeElement(self.m, {s: -c for s, c in self._terms.items()})

    def __add__(self, other: HeckeElement) -> HeckeElement:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check_rank(other)
        out = dict(self._terms)
        for s, c in other._terms.items():
            value = out.get(s)
            total = c if value is None else value + c
            if total:
                out[s] = total
            else:
                out.pop(s, None)
        return HeckeElement(self.m, out)

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c: ScalarQ | int | Fraction) -> HeckeElement:
        factor = ScalarQ.of(c)
        if factor == ONE:
            return self
        return HeckeElement(self.m, {s: v * factor for s, v in self._terms.items()})

    def __truediv__(self, c: ScalarQ | int | Fraction) -> HeckeElement:
        return self.scale(ScalarQ.of(c).inverse())

    def __mul__(self, other: object) -> HeckeElement:
        if isinstance(other, ScalarQ | int | Fraction):
            return self.scale(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return hecke_multiply(self, other)

    def __rmul__(self, other: object) -> HeckeElement:
        if isinstance(other, ScalarQ | int | Fraction):
            return self.scale(other)
        return NotImplemented

    def mul_generator_right(self, i: int) -> HeckeElement:
        """h T_i."""
        if not 1 <= i < self.m:
            msg = f"Generator T_{i} out of range for H_{self.m}"
            raise RankError(msg)
        den, nums = self._numerators()
        return HeckeElement._from_numerators(self.m, _right_step(nums, i), den)

    def mul_generator_left(self, i: int) -> HeckeElement:
        """T_i h."""
        if not 1 <= i < self.m:
            msg = f"Generator T_{i} out of range for H_{self.m}"
            raise RankError(msg)
        den, nums = self._numerators()
        return HeckeElement._from_numerators(self.m, _left_step(nums, i), den)

    def star(self) -> HeckeElement:
        """The anti-involution T_σ ↦ T_{σ^-1}."""
        return HeckeElement(self.m, {perm_inverse(s): c for s, c in self._terms.items()})

    def embed(self, offset: int, m_total: int) -> HeckeElement:
        """Image under T_i ↦ T_{i+offset} in H_{m_total}."""
        if offset < 0 or offset + self.m > m_total:
            msg = f"Cannot embed H_{self.m} at offset {offset} into H_{m_total}"
            raise RankError(msg)
        head = tuple(range(1, offset + 1))
        tail = tuple(range(offset + self.m + 1, m_total + 1))
        return HeckeElement(
            m_total,
            {(*head, *(offset + v for v in s), *tail): c for s, c in self._terms.items()},
        )

    def evaluate_at_one(self) -> dict[Permutation, Fraction]:
        """Coefficients at q = 1 (the group-algebra image)."""
        values = {s: c.evaluate(1) for s, c in self._terms.items()}
        return {s: v for s, v in values.items() if v}

    def to_json(self) -> HeckeJson:
        return {
            "m": self.m,
            "terms": [
                {"perm": list(s), "coeff": self._terms[s].to_json()} for s in sorted(self._terms)
            ],
        }

    @classmethod
    def from_json(cls, data: object) -> HeckeElement:
        if not isinstance(data, dict) or "m" not in data or "terms" not in data:
            msg = f"Malformed Hecke element: {data!r}"
            raise RankError(msg)
        m = int(data["m"])
        terms: dict[Permutation, ScalarQ] = {}
        for entry in data["terms"]:
            perm = tuple(int(v) for v in entry["perm"])
            if len(perm) != m:
                msg = f"Permutation {perm} does not belong to H_{m}"
                raise RankError(msg)
            terms[check_perm(perm)] = ScalarQ.from_json(entry["coeff"])
        return cls(m, terms)

    def __repr__(self) -> str:
        return f"HeckeElement(m={self.m}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for s in sorted(self._terms, key=lambda p: (perm_length(p), p)):
            name = "1" if perm_length(s) == 0 else "T[" + "".join(str(v) for v in s) + "]"
            pieces.append(f"({self._terms[s]})*{name}")
        return " + ".join(pieces)


def hecke_multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """a·b in the T_σ basis.

    Denominators are cleared first; generator steps are then chained along
    reduced words from whichever side has the smaller support, reusing the
    product computed for each parent permutation.
    """
    a._check_rank(b)  # noqa: SLF001
    if not a or not b:
        return HeckeElement(a.m)
    den_a, nums_a = a._numerators()  # noqa: SLF001
    den_b, nums_b = b._numerators()  # noqa: SLF001
    out: _Numerators = {}
    if len(nums_b) <= len(nums_a):
        chained: dict[Permutation, _Numerators] = {identity_perm(a.m): nums_a}
        for sigma in sorted(nums_b, key=perm_length):
            for s, c in _chain(chained, sigma, right=True).items():
                _accumulate(out, s, c * nums_b[sigma])
    else:
        chained = {identity_perm(a.m): nums_b}
        for sigma in sorted(nums_a, key=perm_length):
            for s, c in _chain(chained, sigma, right=False).items():
                _accumulate(out, s, c * nums_a[sigma])
    return HeckeElement._from_numerators(a.m, out, den_a * den_b)  # noqa: SLF001


def _chain(
    memo: dict[Permutation, _Numerators], sigma: Permutation, *, right: bool
) -> _Numerators:
    """x T_σ (right) or T_σ x (left), with x stored at the identity of memo."""
    found = memo.get(sigma)
    if found is not None:
        return found
    if right:
        parent, i = right_parent(sigma)
        result = _right_step(_chain(memo, parent, right=True), i)
    else:
        parent, i = left_parent(sigma)
        result = _left_step(_chain(memo, parent, right=False), i)
    memo[sigma] = result
    return result


def conjugation_sum(h: HeckeElement) -> HeckeElement:
    """Σ_σ T_σ h T_{σ^-1}, built as C_σ = T_i C_{σ'} T_i for σ = s_i σ'."""
    if not h:
        return HeckeElement(h.m)
    den, nums = h._numerators()  # noqa: SLF001
    conjugates: dict[Permutation, _Numerators] = {identity_perm(h.m): nums}
    total: _Numerators = {}
    for sigma in sorted(permutations(h.m), key=perm_length):
        current = conjugates.get(sigma)
        if current is None:
            parent, i = left_parent(sigma)
            current = _right_step(_left_step(conjugates[parent], i), i)
            conjugates[sigma] = current
        for s, c in current.items():
            _accumulate(total, s, c)
    return HeckeElement._from_numerators(h.m, total, den)  # noqa: SLF001


def parabolic_product(blocks: Sequence[HeckeElement]) -> HeckeElement:
    """Product of block elements placed side by side in H_{Σ m_i}.

    Block supports commute and lengths add, so T_σ1 ⋯ T_σk = T_{σ1 × ⋯ × σk}.
    """
    m_total = sum(b.m for b in blocks)
    terms: dict[Permutation, ScalarQ] = {(): ONE}
    offset = 0
    for block in blocks:
        grown: dict[Permutation, ScalarQ] = {}
        for left, cl in terms.items():
            for right, cr in block.terms.items():
                grown[(*left, *(offset + v for v in right))] = cl * cr
        terms = grown
        offset += block.m
    return HeckeElement(m_total, terms)


def jucys_murphy(k: int, m: int) -> HeckeElement:
    """y_k = 1 + (q - q^-1)(T_(1,k) + ... + T_(k-1,k))."""
    if not 1 <= k <= m:
        msg = f"Jucys-Murphy index {k} out of range for H_{m}"
        raise RankError(msg)
    terms = {identity_perm(m): ONE}
    for i in range(1, k):
        terms[transposition(i, k, m)] = Q_DIFF
    return HeckeElement(m, terms)


# -- seminormal representations --------------------------------------------


@dataclass(eq=False)
class SeminormalRep:
    """ρ_λ on the basis of standard tableaux of λ; ``generators[i-1]`` is ρ(T_i)."""

    shape: Partition
    basis: tuple[Tableau, ...]
    generators: list[NDArray[Any]] = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def index(self, tableau: Tableau) -> int:
        return self.basis.index(tableau)


def scalar_identity(d: int) -> NDArray[Any]:
    out = np.full((d, d), ZERO, dtype=object)
    for k in range(d):
        out[k, k] = ONE
    return out


def _seminormal_generator(basis: tuple[Tableau, ...], i: int) -> NDArray[Any]:
    d = len(basis)
    index = {t: k for k, t in enumerate(basis)}
    mat = np.full((d, d), ZERO, dtype=object)
    for a, t in enumerate(basis):
        dist = t.axial_distance(i)
        mat[a, a] = ScalarQ.q_power(dist) / signed_q_int(dist)
        if abs(dist) == 1:
            continue
        b = index[t.swap(i)]
        if dist < 0:
            mat[b, a] = ONE
        else:
            mat[b, a] = signed_q_int(dist + 1) * signed_q_int(dist - 1) / signed_q_int(dist) ** 2
    return mat


@lru_cache(maxsize=64)
def seminormal_rep(shape: Partition) -> SeminormalRep:
    """The seminormal irreducible representation of H_{|λ|} indexed by λ."""
    basis = enumerate_syt(shape)
    generators = [_seminormal_generator(basis, i) for i in range(1, shape.weight)]
    logger.debug("seminormal representation %s: dimension %d", shape, len(basis))
    return SeminormalRep(shape=shape, basis=basis, generators=generators)


@lru_cache(maxsize=64)
def representation_matrices(shape: Partition) -> dict[Permutation, NDArray[Any]]:
    """ρ_λ(T_σ) for every σ, built as ρ(T_parent) ρ(T_i) along right descents."""
    rep = seminormal_rep(shape)
    m = shape.weight
    mats: dict[Permutation, NDArray[Any]] = {identity_perm(m): scalar_identity(rep.dimension)}
    for sigma in sorted(permutations(m), key=perm_length):
        if sigma in mats:
            continue
        parent, i = right_parent(sigma)
        mats[sigma] = _reduce_matrix(mats[parent] @ rep.generators[i - 1])
    return mats


def _reduce_matrix(mat: NDArray[Any]) -> NDArray[Any]:
    out = np.empty(mat.shape, dtype=object)
    for idx, value in np.ndenumerate(mat):
        out[idx] = ScalarQ.of(value)
    return out


def matrix_trace(mat: NDArray[Any]) -> ScalarQ:
    return sum_scalars(ScalarQ.of(mat[k, k]) for k in range(mat.shape[0]))


def character_value(shape: Partition, sigma: Sequence[int]) -> ScalarQ:
    """tr ρ_λ(T_σ)."""
    perm = check_perm(sigma)
    if len(perm) != shape.weight:
        msg = f"Permutation of {len(perm)} letters for a shape of weight {shape.weight}"
        raise RankError(msg)
    return matrix_trace(representation_matrices(shape)[perm])


@lru_cache(maxsize=64)
def irreducible_character(shape: Partition) -> HeckeElement:
    """χ^λ = Σ_σ tr ρ_λ(T_{σ^-1}) T_σ."""
    mats = representation_matrices(shape)
    return HeckeElement(
        shape.weight, {s: matrix_trace(mats[perm_inverse(s)]) for s in permutations(shape.weight)}
    )


@lru_cache(maxsize=512)
def primitive_idempotent(tableau: Tableau) -> HeckeElement:
    """E_𝒯 = c_λ^-1 Σ_σ ρ_λ(T_{σ^-1})[𝒯, 𝒯] T_σ, from diagonal entries only."""
    if not tableau.is_standard():
        msg = f"Tableau {tableau} is not standard"
        raise RankError(msg)
    shape = tableau.shape
    mats = representation_matrices(shape)
    t = seminormal_rep(shape).index(tableau)
    inv_c = schur_element(shape).inverse()
    return HeckeElement(
        shape.weight,
        {
            s: ScalarQ.of(mats[perm_inverse(s)][t, t]) * inv_c
            for s in permutations(shape.weight)
        },
    )


@lru_cache(maxsize=512)
def primitive_idempotent_jm(tableau: Tableau) -> HeckeElement:
    """E_𝒯 by the Jucys–Murphy recurrence over the addable corners of shape(𝒯⁻)."""
    if not tableau.is_standard():
        msg = f"Tableau {tableau} is not standard"
        raise RankError(msg)
    m = tableau.size
    if m <= 1:
        return HeckeElement.one(m)
    smaller = tableau.restrict()
    result = primitive_idempotent_jm(smaller).embed(0, m)
    alpha = tableau.position(m)
    y = jucys_murphy(m, m)
    target = ScalarQ.q_power(2 * Partition.content(alpha))
    for corner in smaller.shape.addable_corners():
        if corner == alpha:
            continue
        eigen = ScalarQ.q_power(2 * Partition.content(corner))
        factor = (y - HeckeElement.one(m).scale(eigen)) / (target - eigen)
        result = result * factor
    return result


def idempotent_system(m: int) -> dict[Tableau, HeckeElement]:
    """All primitive idempotents of H_m, shapes in reverse lex order."""
    return {t: primitive_idempotent(t) for lam in partitions(m) for t in enumerate_syt(lam)}


# -- induced characters -------------------------------------------------------


def _block_shapes(blocks: Partition, inner: str | Sequence[Partition]) -> list[Partition]:
    if inner == "trivial":
        return [Partition((b,)) for b in blocks.parts]
    if inner == "sign":
        return [Partition((1,) * b) for b in blocks.parts]
    if isinstance(inner, str):
        msg = f"Unknown inner character {inner!r}; expected 'trivial', 'sign' or shapes"
        raise RankError(msg)
    shapes = list(inner)
    if [s.weight for s in shapes] != list(blocks.parts):
        msg = f"Block shapes {[str(s) for s in shapes]} do not match blocks {blocks}"
        raise RankError(msg)
    return shapes


def induced_character(
    blocks: Partition, inner: str | Sequence[Partition] = "trivial"
) -> HeckeElement:
    """(1/c_V) Σ_σ T_σ χ^V T_{σ^-1} for χ^V the product of block characters."""
    return induced_from_shapes(_block_shapes(blocks, inner))


def induced_from_shapes(shapes: Sequence[Partition]) -> HeckeElement:
    """Induced from χ^{λ1} ⊗ ⋯ ⊗ χ^{λk} on consecutive blocks, in the given order."""
    shapes = [s for s in shapes if s.weight]
    chi_v = parabolic_product([irreducible_character(s) for s in shapes])
    c_v = ONE
    for s in shapes:
        c_v *= schur_element(s)
    return conjugation_sum(chi_v) / c_v


def psi_character(mu: Partition) -> HeckeElement:
    """ψ^μ, induced from the sign characters of the Young subalgebra."""
    return induced_character(mu, "sign")


def phi_character(mu: Partition) -> HeckeElement:
    """φ^μ, induced from the trivial characters of the Young subalgebra."""
    return induced_character(mu, "trivial")


def kostka_decomposition(mu: Partition, inner: str) -> HeckeElement:
    """Σ_λ K_{λᵀ,μ} χ^λ for "sign", Σ_λ K_{λ,μ} χ^λ for "trivial"."""
    total = HeckeElement(mu.weight)
    for lam in partitions(mu.weight):
        shape = lam.conjugate() if inner == "sign" else lam
        mult = kostka(shape, mu.parts)
        if mult:
            total += irreducible_character(lam).scale(mult)
    return total
