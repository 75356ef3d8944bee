"""The quantum coordinate algebra A_q(Mat_n) in PBW normal form.

Elements are linear combinations of monomials in the generators x_ij.  A
monomial is normal when its factors are weakly increasing in row-major order
(``(i, j) < (k, l)`` iff ``i < k``, or ``i == k`` and ``j < l``).  Any word is
brought to normal form by rewriting adjacent inversions with the defining
relations, for ``i < j`` and ``k < l``::

    x_il x_ik -> q x_ik x_il
    x_jk x_ik -> q x_ik x_jk
    x_jk x_il -> x_il x_jk
    x_jl x_ik -> x_ik x_jl + (q - q^-1) x_il x_jk
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Any, Literal

from qlittlewood.combinatorics import symmetric_ring
from qlittlewood.scalar import (
    FIELD,
    ONE,
    Q,
    Q_DIFF,
    ScalarError,
    ScalarQ,
    sum_scalars,
    to_field,
)

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence

logger = logging.getLogger(__name__)

type Generator = tuple[int, int]
type Monomial = tuple[Generator, ...]
type Strategy = Literal["leftmost", "rightmost"]
type QMatJson = dict[str, Any]

NORMAL_FORM_CACHE_SIZE = 1 << 18


class DimensionError(ValueError):
    """Raised for out-of-range generators or mismatched algebra dimensions."""


def _check_word(word: Sequence[Generator], n: int) -> Monomial:
    mono = tuple((int(i), int(j)) for i, j in word)
    for i, j in mono:
        if not (1 <= i <= n and 1 <= j <= n):
            msg = f"Generator x_{i}{j} out of range for n={n}"
            raise DimensionError(msg)
    return mono


def _find_inversion(word: Monomial, strategy: Strategy) -> int | None:
    positions = range(len(word) - 1)
    if strategy == "rightmost":
        positions = range(len(word) - 2, -1, -1)
    for k in positions:
        if word[k] > word[k + 1]:
            return k
    return None


def _rewrite(word: Monomial, k: int) -> list[tuple[Monomial, ScalarQ]]:
    """Apply the relation to the inverted pair at positions k, k+1."""
    (p, s), (t, u) = word[k], word[k + 1]
    head, tail = word[:k], word[k + 2 :]
    swapped = (*head, (t, u), (p, s), *tail)
    if p == t or s == u:
        return [(swapped, Q)]
    if s < u:
        return [(swapped, ONE)]
    return [(swapped, ONE), ((*head, (t, s), (p, u), *tail), Q_DIFF)]


def reduce_word(
    word: Sequence[Generator], coeff: ScalarQ = ONE, strategy: Strategy = "leftmost"
) -> dict[Monomial, ScalarQ]:
    """Rewrite a word to normal form, always resolving the leftmost (or rightmost) inversion.

    Terms produced by the split rule are merged into the pending set at once and
    zero coefficients are pruned at every merge.
    """
    pending: dict[Monomial, ScalarQ] = {tuple(word): coeff}
    result: dict[Monomial, ScalarQ] = {}
    while pending:
        current, c = pending.popitem()
        k = _find_inversion(current, strategy)
        if k is None:
            _merge(result, current, c)
            continue
        for target, factor in _rewrite(current, k):
            _merge(pending, target, c * factor)
    return result


def _merge(terms: dict[Monomial, ScalarQ], mono: Monomial, c: ScalarQ) -> None:
    total = terms.get(mono)
    value = c if total is None else total + c
    if value:
        terms[mono] = value
    else:
        terms.pop(mono, None)


@lru_cache(maxsize=NORMAL_FORM_CACHE_SIZE)
def _normal_terms(word: Monomial) -> Mapping[Monomial, ScalarQ]:
    return reduce_word(word)


def log_cache_stats() -> None:
    logger.debug("normal-form cache: %s", _normal_terms.cache_info())


class QMatElement:
    """A noncommutative polynomial in the x_ij, every monomial in normal form."""

    __slots__ = ("_terms", "n")

    n: int
    _terms: dict[Monomial, ScalarQ]

    def __init__(self, n: int, terms: Mapping[Monomial, ScalarQ] | None = None) -> None:
        if n < 1:
            msg = f"A_q(Mat_n) needs n >= 1, got {n}"
            raise DimensionError(msg)
        self.n = n
        self._terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, n: int) -> QMatElement:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> QMatElement:
        return cls(n, {(): ONE})

    @classmethod
    def scalar(cls, n: int, c: ScalarQ | int | Fraction) -> QMatElement:
        return cls(n, {(): ScalarQ.of(c)})

    @classmethod
    def generator(cls, n: int, i: int, j: int) -> QMatElement:
        return cls(n, {_check_word([(i, j)], n): ONE})

    @classmethod
    def from_word(
        cls, n: int, word: Sequence[Generator], coeff: ScalarQ = ONE
    ) -> QMatElement:
        return normal_form(word, coeff, n=n)

    @property
    def terms(self) -> Mapping[Monomial, ScalarQ]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: Sequence[Generator]) -> ScalarQ:
        return self._terms.get(tuple(mono), ScalarQ(0))

    def degrees(self) -> set[int]:
        return {len(m) for m in self._terms}

    def _check_same(self, other: QMatElement) -> None:
        if other.n != self.n:
            msg = f"Dimension mismatch: A_q(Mat_{self.n}) vs A_q(Mat_{other.n})"
            raise DimensionError(msg)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QMatElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> QMatElement:
        return QMatElement(self.n, {m: -c for m, c in self._terms.items()})

    def __add__(self, other: QMatElement) -> QMatElement:
        if not isinstance(other, QMatElement):
            return NotImplemented
        self._check_same(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            _merge(out, mono, c)
        return QMatElement(self.n, out)

    def __sub__(self, other: QMatElement) -> QMatElement:
        if not isinstance(other, QMatElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c: ScalarQ | int | Fraction) -> QMatElement:
        factor = ScalarQ.of(c)
        if not factor:
            return QMatElement(self.n)
        if factor == ONE:
            return self
        return QMatElement(self.n, {m: v * factor for m, v in self._terms.items()})

    def __truediv__(self, c: ScalarQ | int | Fraction) -> QMatElement:
        return self.scale(ScalarQ.of(c).inverse())

    def __mul__(self, other: object) -> QMatElement:
        if isinstance(other, ScalarQ | int | Fraction):
            return self.scale(other)
        if not isinstance(other, QMatElement):
            return NotImplemented
        self._check_same(other)
        return multiply(self, other)

    def __rmul__(self, other: object) -> QMatElement:
        if isinstance(other, ScalarQ | int | Fraction):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> QMatElement:
        result = QMatElement.one(self.n)
        for _ in range(k):
            result = result * self
        return result

    def to_json(self) -> QMatJson:
        return {
            "n": self.n,
            "terms": [
                {"mono": [[i, j] for i, j in mono], "coeff": self._terms[mono].to_json()}
                for mono in sorted(self._terms)
            ],
        }

    @classmethod
    def from_json(cls, data: object) -> QMatElement:
        """Parse the ``{"n": n, "terms": [{"mono": ..., "coeff": ...}]}`` form."""
        if not isinstance(data, dict) or "n" not in data or "terms" not in data:
            msg = f"Malformed A_q(Mat_n) element: {data!r}"
            raise DimensionError(msg)
        n = int(data["n"])
        out: dict[Monomial, ScalarQ] = {}
        try:
            for entry in data["terms"]:
                mono = _check_word([tuple(g) for g in entry["mono"]], n)
                if list(mono) != sorted(mono):
                    msg = f"Monomial not in normal order: {mono}"
                    raise DimensionError(msg)
                _merge(out, mono, ScalarQ.from_json(entry["coeff"]))
        except (KeyError, TypeError, ValueError, ScalarError) as e:
            if isinstance(e, DimensionError):
                raise
            msg = f"Malformed A_q(Mat_n) element: {data!r}"
            raise DimensionError(msg) from e
        return cls(n, out)

    def __repr__(self) -> str:
        return f"QMatElement(n={self.n}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for mono in sorted(self._terms):
            c = self._terms[mono]
            word = "*".join(f"x{i}{j}" for i, j in mono) or "1"
            if c == 1:
                term, sign = word, "+"
            elif c == -1:
                term, sign = word, "-"
            else:
                term, sign = (f"({c})*{word}" if mono else f"({c})"), "+"
            if not pieces:
                pieces.append(term if sign == "+" else f"-{term}")
            else:
                pieces.append(f"{sign} {term}")
        return " ".join(pieces)


def normal_form(
    word: Sequence[Generator], coeff: ScalarQ = ONE, *, n: int | None = None
) -> QMatElement:
    """The unique normal-form expansion of ``coeff * word``."""
    if n is None:
        n = max((max(g) for g in word), default=1)
    mono = _check_word(word, n)
    if not coeff:
        return QMatElement(n)
    terms = _normal_terms(mono)
    if coeff == ONE:
        return QMatElement(n, terms)
    return QMatElement(n, {m: c * coeff for m, c in terms.items()})


def multiply(a: QMatElement, b: QMatElement) -> QMatElement:
    """Normal-form product; concatenated words are reduced through the shared cache."""
    if a.n != b.n:
        msg = f"Dimension mismatch: A_q(Mat_{a.n}) vs A_q(Mat_{b.n})"
        raise DimensionError(msg)
    collected: dict[Monomial, list[ScalarQ]] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            c = ca * cb
            for mono, factor in _normal_terms(ma + mb).items():
                collected.setdefault(mono, []).append(c * factor)
    return QMatElement(a.n, {m: sum_scalars(cs) for m, cs in collected.items()})


def linear_combination(n: int, items: Iterable[tuple[ScalarQ, QMatElement]]) -> QMatElement:
    """Σ c_k a_k with one reduction per coefficient."""
    collected: dict[Monomial, list[ScalarQ]] = {}
    for c, element in items:
        if not c:
            continue
        for mono, v in element.terms.items():
            collected.setdefault(mono, []).append(c * v)
    return QMatElement(n, {m: sum_scalars(cs) for m, cs in collected.items()})


def generator_matrix(n: int) -> list[list[QMatElement]]:
    """X = (x_ij) as an n×n matrix of elements."""
    return [[QMatElement.generator(n, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


# -- specializations ---------------------------------------------------------


def specialize_diagonal(a: QMatElement) -> Any:  # noqa: ANN401
    """Φ: x_ij ↦ δ_ij x_i, into the commutative ring Q(q)[x1, ..., xn]."""
    ring = symmetric_ring(a.n, FIELD)
    image: dict[tuple[int, ...], list[ScalarQ]] = {}
    for mono, c in a.terms.items():
        if any(i != j for i, j in mono):
            continue
        exps = [0] * a.n
        for i, _ in mono:
            exps[i - 1] += 1
        image.setdefault(tuple(exps), []).append(c)
    return ring.from_dict({e: to_field(sum_scalars(cs)) for e, cs in image.items()})


def specialize_q_one(a: QMatElement) -> dict[Monomial, Fraction]:
    """Evaluate every coefficient at q = 1; raises PoleError on a pole.

    Normal monomials are sorted words, so equal commutative monomials share a key.
    """
    image: dict[Monomial, Fraction] = {}
    for mono, c in a.terms.items():
        value = image.get(mono, Fraction(0)) + c.evaluate(1)
        if value:
            image[mono] = value
        else:
            image.pop(mono, None)
    return image


# -- bialgebra structure --------------------------------------------------------


def counit(a: QMatElement) -> ScalarQ:
    """ε(x_ij) = δ_ij, extended multiplicatively."""
    return sum_scalars(c for mono, c in a.terms.items() if all(i == j for i, j in mono))


class QMatTensor:
    """An element of A_q(Mat_n) ⊗ A_q(Mat_n), both factors in normal form."""

    __slots__ = ("_terms", "n")

    n: int
    _terms: dict[tuple[Monomial, Monomial], ScalarQ]

    def __init__(
        self, n: int, terms: Mapping[tuple[Monomial, Monomial], ScalarQ] | None = None
    ) -> None:
        self.n = n
        self._terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def pure(cls, left: QMatElement, right: QMatElement) -> QMatTensor:
        """left ⊗ right."""
        return cls(
            left.n,
            {
                (ml, mr): cl * cr
                for ml, cl in left.terms.items()
                for mr, cr in right.terms.items()
            },
        )

    @property
    def terms(self) -> Mapping[tuple[Monomial, Monomial], ScalarQ]:
        return self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QMatTensor):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: QMatTensor) -> QMatTensor:
        out = dict(self._terms)
        for key, c in other._terms.items():
            value = out.get(key)
            total = c if value is None else value + c
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return QMatTensor(self.n, out)

    def scaled(self, c: ScalarQ) -> QMatTensor:
        return QMatTensor(self.n, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other: QMatTensor) -> QMatTensor:
        collected: dict[tuple[Monomial, Monomial], list[ScalarQ]] = {}
        for (la, ra), ca in self._terms.items():
            for (lb, rb), cb in other._terms.items():
                c = ca * cb
                left = _normal_terms(la + lb)
                right = _normal_terms(ra + rb)
                for ml, fl in left.items():
                    for mr, fr in right.items():
                        collected.setdefault((ml, mr), []).append(c * fl * fr)
        return QMatTensor(self.n, {k: sum_scalars(cs) for k, cs in collected.items()})

    def counit_left(self) -> QMatElement:
        """(ε ⊗ id)."""
        return linear_combination(
            self.n,
            (
                (c, QMatElement(self.n, {mr: ONE}))
                for (ml, mr), c in self._terms.items()
                if all(i == j for i, j in ml)
            ),
        )

    def counit_right(self) -> QMatElement:
        """(id ⊗ ε)."""
        return linear_combination(
            self.n,
            (
                (c, QMatElement(self.n, {ml: ONE}))
                for (ml, mr), c in self._terms.items()
                if all(i == j for i, j in mr)
            ),
        )


def coproduct(a: QMatElement) -> QMatTensor:
    """Δ(x_ij) = Σ_k x_ik ⊗ x_kj, extended multiplicatively."""
    total = QMatTensor(a.n)
    for mono, c in a.terms.items():
        total += _coproduct_monomial(a.n, mono).scaled(c)
    return total


@lru_cache(maxsize=4096)
def _coproduct_monomial(n: int, mono: Monomial) -> QMatTensor:
    result = QMatTensor(n, {((), ()): ONE})
    for i, j in mono:
        result *= QMatTensor(n, {(((i, k),), ((k, j),)): ONE for k in range(1, n + 1)})
    return result
