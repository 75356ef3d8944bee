"""The tensor space (C^n)^⊗m: R-matrices, the Hecke action, projectors and the coaction.

Operators are sparse matrices keyed by pairs of tensor indices and act on
column vectors: ``(A v)_I = Σ_J A[I, J] v_J``.  Ř is a symmetric matrix, so the
row action ``⟨I| Ř_σ`` coincides with the column action and both are computed
by the same sparse routine.
"""

from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import TYPE_CHECKING, Literal

from qlittlewood.combinatorics import (
    Composition,
    Permutation,
    identity_perm,
    perm_length,
    right_parent,
    weight_of,
)
from qlittlewood.hecke import HeckeElement
from qlittlewood.qmatrix import QMatElement, counit, linear_combination, normal_form
from qlittlewood.scalar import (
    ONE,
    ONE_POLY,
    Q,
    Q_DIFF,
    Q_DIFF_POLY,
    Q_POLY,
    ZERO,
    LaurentPoly,
    ScalarQ,
    clear_denominators,
    sum_scalars,
)

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence

logger = logging.getLogger(__name__)

type TensorIndex = tuple[int, ...]
type Vector = dict[TensorIndex, ScalarQ]
type Variant = Literal["R", "R+", "R-", "P", "Rcheck", "Pq"]

VARIANTS: tuple[Variant, ...] = ("R", "R+", "R-", "P", "Rcheck", "Pq")


class TensorError(ValueError):
    """Raised for unknown operators, incompatible sizes or weight mismatches."""


def tensor_basis(n: int, m: int) -> list[TensorIndex]:
    """All indices (i_1, ..., i_m) over ``1..n`` in lexicographic order."""
    return list(itertools.product(range(1, n + 1), repeat=m))


class TensorOperator:
    """A sparse linear map on (C^n)^⊗m with entries in Q(q)."""

    __slots__ = ("_rows", "m", "n")

    n: int
    m: int
    _rows: dict[TensorIndex, dict[TensorIndex, ScalarQ]]

    def __init__(
        self,
        n: int,
        m: int,
        entries: Mapping[tuple[TensorIndex, TensorIndex], ScalarQ] | None = None,
    ) -> None:
        self.n = n
        self.m = m
        self._rows = {}
        for (row, col), c in (entries or {}).items():
            if len(row) != m or len(col) != m:
                msg = f"Index pair {row}, {col} does not belong to {m} tensor factors"
                raise TensorError(msg)
            if c:
                self._rows.setdefault(row, {})[col] = c

    @classmethod
    def _from_rows(
        cls, n: int, m: int, rows: dict[TensorIndex, dict[TensorIndex, ScalarQ]]
    ) -> TensorOperator:
        op = cls.__new__(cls)
        op.n, op.m = n, m
        op._rows = {r: cols for r, cols in rows.items() if cols}
        return op

    @classmethod
    def identity(cls, n: int, m: int) -> TensorOperator:
        return cls._from_rows(n, m, {idx: {idx: ONE} for idx in tensor_basis(n, m)})

    @property
    def entries(self) -> dict[tuple[TensorIndex, TensorIndex], ScalarQ]:
        return {(r, c): v for r, cols in self._rows.items() for c, v in cols.items()}

    def entry(self, row: Sequence[int], col: Sequence[int]) -> ScalarQ:
        return self._rows.get(tuple(row), {}).get(tuple(col), ZERO)

    def row(self, index: Sequence[int]) -> Vector:
        return dict(self._rows.get(tuple(index), {}))

    def _check_compatible(self, other: TensorOperator) -> None:
        if (self.n, self.m) != (other.n, other.m):
            msg = f"Incompatible operators: n={self.n}, m={self.m} vs n={other.n}, m={other.m}"
            raise TensorError(msg)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and self._rows == other._rows

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: TensorOperator) -> TensorOperator:
        self._check_compatible(other)
        rows = {r: dict(cols) for r, cols in self._rows.items()}
        for r, cols in other._rows.items():
            target = rows.setdefault(r, {})
            for c, v in cols.items():
                total = target.get(c, ZERO) + v
                if total:
                    target[c] = total
                else:
                    target.pop(c, None)
        return TensorOperator._from_rows(self.n, self.m, rows)

    def __neg__(self) -> TensorOperator:
        return self.scale(-ONE)

    def __sub__(self, other: TensorOperator) -> TensorOperator:
        return self + (-other)

    def scale(self, c: ScalarQ | int) -> TensorOperator:
        factor = ScalarQ.of(c)
        return TensorOperator._from_rows(
            self.n,
            self.m,
            {r: {k: v * factor for k, v in cols.items()} for r, cols in self._rows.items()}
            if factor
            else {},
        )

    def __matmul__(self, other: TensorOperator) -> TensorOperator:
        """Composition self∘other."""
        self._check_compatible(other)
        rows: dict[TensorIndex, dict[TensorIndex, ScalarQ]] = {}
        for r, cols in self._rows.items():
            collected: dict[TensorIndex, list[ScalarQ]] = {}
            for mid, a in cols.items():
                for c, b in other._rows.get(mid, {}).items():
                    collected.setdefault(c, []).append(a * b)
            rows[r] = {c: v for c, vs in collected.items() if (v := sum_scalars(vs))}
        return TensorOperator._from_rows(self.n, self.m, rows)

    def apply(self, vector: Mapping[TensorIndex, ScalarQ]) -> Vector:
        """A v."""
        out: dict[TensorIndex, list[ScalarQ]] = {}
        for r, cols in self._rows.items():
            for c, a in cols.items():
                v = vector.get(c)
                if v:
                    out.setdefault(r, []).append(a * v)
        return {r: s for r, vs in out.items() if (s := sum_scalars(vs))}

    def transpose(self) -> TensorOperator:
        rows: dict[TensorIndex, dict[TensorIndex, ScalarQ]] = {}
        for r, cols in self._rows.items():
            for c, v in cols.items():
                rows.setdefault(c, {})[r] = v
        return TensorOperator._from_rows(self.n, self.m, rows)

    def embed(self, positions: Sequence[int], m_total: int) -> TensorOperator:
        """Act on the tensor factors at ``positions`` (1-based) of (C^n)^⊗m_total."""
        if len(positions) != self.m or any(not 1 <= p <= m_total for p in positions):
            msg = f"Cannot place an operator on {self.m} factors at {tuple(positions)}"
            raise TensorError(msg)
        slots = [p - 1 for p in positions]
        rows: dict[TensorIndex, dict[TensorIndex, ScalarQ]] = {}
        for col in tensor_basis(self.n, m_total):
            local = tuple(col[s] for s in slots)
            for r_local, cols in self._rows.items():
                v = cols.get(local)
                if not v:
                    continue
                row = list(col)
                for s, letter in zip(slots, r_local, strict=True):
                    row[s] = letter
                rows.setdefault(tuple(row), {})[col] = v
        return TensorOperator._from_rows(self.n, m_total, rows)

    def is_diagonal(self) -> bool:
        return all(set(cols) <= {r} for r, cols in self._rows.items())

    def __repr__(self) -> str:
        count = sum(len(c) for c in self._rows.values())
        return f"TensorOperator(n={self.n}, m={self.m}, nonzero={count})"


# -- two-factor operators ----------------------------------------------------


@lru_cache(maxsize=64)
def r_matrix(n: int, variant: Variant = "R") -> TensorOperator:
    """R, R⁺ = PRP, R⁻ = R⁻¹, the flip P, Ř = PR, or the q-permutation operator P^q."""
    if n < 1:
        msg = f"r_matrix needs n >= 1, got {n}"
        raise TensorError(msg)
    if variant not in VARIANTS:
        msg = f"Unknown R-matrix variant {variant!r}; expected one of {', '.join(VARIANTS)}"
        raise TensorError(msg)
    q_inv = ScalarQ.q_power(-1)
    entries: dict[tuple[TensorIndex, TensorIndex], ScalarQ] = {}
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        flip = ((i, j), (j, i))
        same = ((i, j), (i, j))
        if i == j:
            entries[same] = {"R": Q, "R+": Q, "R-": q_inv, "P": ONE, "Rcheck": Q, "Pq": ONE}[
                variant
            ]
            continue
        match variant:
            case "R" | "R+" | "R-":
                entries[same] = ONE
                if (variant == "R+") == (i > j):
                    entries[flip] = -Q_DIFF if variant == "R-" else Q_DIFF
            case "P":
                entries[flip] = ONE
            case "Rcheck":
                entries[flip] = ONE
                if i > j:
                    entries[same] = Q_DIFF
            case "Pq":
                entries[flip] = Q if i > j else q_inv
    logger.debug("built %s for n=%d with %d entries", variant, n, len(entries))
    return TensorOperator(n, 2, entries)


@lru_cache(maxsize=256)
def rcheck(n: int, k: int, m: int) -> TensorOperator:
    """Ř_k = 1^{⊗(k-1)} ⊗ Ř ⊗ 1^{⊗(m-k-1)}."""
    if not 1 <= k < m:
        msg = f"Ř_{k} out of range for {m} tensor factors"
        raise TensorError(msg)
    return r_matrix(n, "Rcheck").embed((k, k + 1), m)


def _rcheck_step(vector: dict[TensorIndex, LaurentPoly], k: int) -> dict[TensorIndex, LaurentPoly]:
    """Apply Ř_k to a vector with Laurent-polynomial coordinates."""
    out: dict[TensorIndex, LaurentPoly] = {}

    def add(idx: TensorIndex, c: LaurentPoly) -> None:
        total = out.get(idx, LaurentPoly()) + c
        if total:
            out[idx] = total
        else:
            out.pop(idx, None)

    for idx, c in vector.items():
        a, b = idx[k - 1], idx[k]
        if a == b:
            add(idx, c * Q_POLY)
            continue
        add((*idx[: k - 1], b, a, *idx[k + 1 :]), c)
        if a > b:
            add(idx, c * Q_DIFF_POLY)
    return out


def _row_chain(
    start: dict[TensorIndex, LaurentPoly],
    perms: Iterable[Permutation],
    m: int,
) -> dict[Permutation, dict[TensorIndex, LaurentPoly]]:
    """⟨v| Ř_σ for each σ, as (⟨v| Ř_{σ s_i}) Ř_i along right descents."""
    memo: dict[Permutation, dict[TensorIndex, LaurentPoly]] = {identity_perm(m): start}

    def chain(sigma: Permutation) -> dict[TensorIndex, LaurentPoly]:
        found = memo.get(sigma)
        if found is None:
            parent, i = right_parent(sigma)
            found = _rcheck_step(chain(parent), i)
            memo[sigma] = found
        return found

    for sigma in sorted(perms, key=perm_length):
        chain(sigma)
    return memo


def row_action(h: HeckeElement, index: Sequence[int], n: int) -> Vector:
    """The row vector ⟨I| hecke_action(h)."""
    start = tuple(index)
    if len(start) != h.m or any(not 1 <= a <= n for a in start):
        msg = f"Index {start} is not a basis vector of (C^{n})^⊗{h.m}"
        raise TensorError(msg)
    if not h:
        return {}
    perms = list(h.terms)
    den, nums = clear_denominators([h.terms[s] for s in perms])
    rows = _row_chain({start: ONE_POLY}, perms, h.m)
    collected: dict[TensorIndex, LaurentPoly] = {}
    for sigma, c in zip(perms, nums, strict=True):
        for idx, v in rows[sigma].items():
            total = collected.get(idx, LaurentPoly()) + c * v
            if total:
                collected[idx] = total
            else:
                collected.pop(idx, None)
    return {idx: ScalarQ.fraction(v, den) for idx, v in collected.items()}


@lru_cache(maxsize=256)
def rcheck_perm(n: int, sigma: Permutation) -> TensorOperator:
    """Ř_σ = Ř_{σ s_i} Ř_i, independent of the reduced word by the braid relations."""
    m = len(sigma)
    if sigma == identity_perm(m):
        return TensorOperator.identity(n, m)
    parent, i = right_parent(sigma)
    return rcheck_perm(n, parent) @ rcheck(n, i, m)


def hecke_action(h: HeckeElement, n: int) -> TensorOperator:
    """T_k ↦ Ř_k, extended linearly: Σ_σ c_σ Ř_σ."""
    total = TensorOperator(n, h.m)
    for sigma, c in sorted(h.terms.items()):
        total += rcheck_perm(n, sigma).scale(c)
    return total


def weight_projector(mu: Composition, n: int | None = None) -> TensorOperator:
    """P_μ, keeping exactly the basis vectors of weight μ."""
    size = len(mu) if n is None else n
    if len(mu) != size or any(c < 0 for c in mu):
        msg = f"Weight {tuple(mu)} is not a composition with {size} parts"
        raise TensorError(msg)
    m = sum(mu)
    return TensorOperator(
        size,
        m,
        {(idx, idx): ONE for idx in tensor_basis(size, m) if weight_of(idx, size) == tuple(mu)},
    )


def inner_product(u: Mapping[TensorIndex, ScalarQ], v: Mapping[TensorIndex, ScalarQ]) -> ScalarQ:
    """The symmetric bilinear form with orthonormal basis |I⟩."""
    return sum_scalars(c * v[idx] for idx, c in u.items() if idx in v)


def adjoint_check(
    h: HeckeElement,
    u: Mapping[TensorIndex, ScalarQ],
    v: Mapping[TensorIndex, ScalarQ],
    n: int,
) -> bool:
    """⟨h u, v⟩ == ⟨u, h* v⟩ with T_σ* = T_{σ^-1}."""
    return inner_product(hecke_action(h, n).apply(u), v) == inner_product(
        u, hecke_action(h.star(), n).apply(v)
    )


# -- A_q(Mat_n)-valued operators ---------------------------------------------------


class AValuedOperator:
    """A sparse matrix on (C^n)^⊗m with entries in A_q(Mat_n)."""

    __slots__ = ("_entries", "m", "n")

    n: int
    m: int
    _entries: dict[tuple[TensorIndex, TensorIndex], QMatElement]

    def __init__(
        self,
        n: int,
        m: int,
        entries: Mapping[tuple[TensorIndex, TensorIndex], QMatElement] | None = None,
    ) -> None:
        self.n = n
        self.m = m
        self._entries = {k: v for k, v in (entries or {}).items() if v}

    @property
    def entries(self) -> Mapping[tuple[TensorIndex, TensorIndex], QMatElement]:
        return self._entries

    def entry(self, row: Sequence[int], col: Sequence[int]) -> QMatElement:
        return self._entries.get((tuple(row), tuple(col)), QMatElement(self.n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AValuedOperator):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and self._entries == other._entries

    __hash__ = None  # type: ignore[assignment]

    def _check_operator(self, op: TensorOperator) -> None:
        if (op.n, op.m) != (self.n, self.m):
            msg = f"Operator on n={op.n}, m={op.m} does not match n={self.n}, m={self.m}"
            raise TensorError(msg)

    def compose_left(self, op: TensorOperator) -> AValuedOperator:
        """op∘X: entries Σ_J op[I, J] X[J, K]."""
        self._check_operator(op)
        by_row: dict[TensorIndex, list[tuple[TensorIndex, QMatElement]]] = {}
        for (j, k), x in self._entries.items():
            by_row.setdefault(j, []).append((k, x))
        items: dict[tuple[TensorIndex, TensorIndex], list[tuple[ScalarQ, QMatElement]]] = {}
        for (i, j), c in op.entries.items():
            for k, x in by_row.get(j, []):
                items.setdefault((i, k), []).append((c, x))
        return AValuedOperator(
            self.n, self.m, {key: linear_combination(self.n, v) for key, v in items.items()}
        )

    def compose_right(self, op: TensorOperator) -> AValuedOperator:
        """X∘op: entries Σ_J X[I, J] op[J, K]."""
        self._check_operator(op)
        items: dict[tuple[TensorIndex, TensorIndex], list[tuple[ScalarQ, QMatElement]]] = {}
        for (i, j), x in self._entries.items():
            for k, c in op.row(j).items():
                items.setdefault((i, k), []).append((c, x))
        return AValuedOperator(
            self.n, self.m, {key: linear_combination(self.n, v) for key, v in items.items()}
        )

    def trace(self) -> QMatElement:
        return linear_combination(
            self.n, ((ONE, x) for (i, k), x in self._entries.items() if i == k)
        )

    def apply_counit(self) -> TensorOperator:
        """Entrywise ε: the image in End((C^n)^⊗m)."""
        return TensorOperator(self.n, self.m, {k: counit(x) for k, x in self._entries.items()})

    def __repr__(self) -> str:
        return f"AValuedOperator(n={self.n}, m={self.m}, nonzero={len(self._entries)})"


@lru_cache(maxsize=1 << 16)
def chain_entry(n: int, row: TensorIndex, col: TensorIndex) -> QMatElement:
    """The matrix coefficient x_{i1 j1} x_{i2 j2} ⋯ x_{im jm} in normal form."""
    if len(row) != len(col):
        msg = f"Row {row} and column {col} have different lengths"
        raise TensorError(msg)
    return normal_form(tuple(zip(row, col, strict=True)), n=n)


def x_chain(
    n: int,
    m: int,
    rows: Iterable[TensorIndex] | None = None,
    cols: Iterable[TensorIndex] | None = None,
) -> AValuedOperator:
    """X_1 X_2 ⋯ X_m, optionally restricted to the given rows and columns."""
    row_list = tensor_basis(n, m) if rows is None else [tuple(r) for r in rows]
    col_list = tensor_basis(n, m) if cols is None else [tuple(c) for c in cols]
    return AValuedOperator(
        n, m, {(r, c): chain_entry(n, r, c) for r in row_list for c in col_list}
    )


def coaction(n: int, m: int) -> AValuedOperator:
    """Δ e_J = Σ_I e_I ⊗ x_{i1 j1} ⋯ x_{im jm}; the coefficient of e_I is entry (I, J)."""
    return x_chain(n, m)


def trace_with(op: TensorOperator, chain: AValuedOperator) -> QMatElement:
    """tr(op∘X) = Σ_{I,J} op[I, J] X[J, I]."""
    return linear_combination(
        chain.n,
        ((c, chain.entry(j, i)) for (i, j), c in op.entries.items()),
    )
