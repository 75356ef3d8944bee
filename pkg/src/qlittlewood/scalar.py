"""Exact coefficient arithmetic: Laurent polynomials in q and their fraction field.

Every scalar in the package lives in Q(q).  Laurent polynomials are stored as
sparse ``{exponent: coefficient}`` dicts with exact rational coefficients
(``int`` when integral, ``Fraction`` otherwise).  Fractions are kept in a
canonical form so equality is a plain structural comparison:

- numerator and denominator share no polynomial factor,
- the denominator has lowest exponent 0 and leading coefficient 1.

GCD and LCM of the shifted ordinary polynomials are delegated to sympy's
sparse polynomial rings.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from types import MappingProxyType
from typing import TYPE_CHECKING, Any

import sympy
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence

type Coefficient = int | Fraction
type ScalarJson = dict[str, list[list[int | str]]]

Q_SYMBOL = sympy.Symbol("q")
_Q_RING, _ = ring("q", QQ)
# sympy's Q(q), for exact linear algebra and commutative images
FIELD = QQ.frac_field(Q_SYMBOL)

_BASE_STEP = {"q": 1, "q2": 2, "q²": 2}


class ScalarError(ValueError):
    """Raised for invalid arguments to the scalar constructors."""


class PoleError(ArithmeticError):
    """Raised when a rational function is evaluated at one of its poles."""


def _normalize(c: Coefficient) -> Coefficient:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _check_coefficient(c: object) -> Coefficient:
    if isinstance(c, bool) or not isinstance(c, int | Fraction):
        msg = f"Coefficients must be int or Fraction, got {type(c).__name__}"
        raise ScalarError(msg)
    return _normalize(c)


class LaurentPoly:
    """A finite sum of rational multiples of integer powers of q."""

    __slots__ = ("_hash", "_terms")

    _terms: dict[int, Coefficient]
    _hash: int | None

    def __init__(self, terms: Mapping[int, Coefficient] | None = None) -> None:
        clean: dict[int, Coefficient] = {}
        for exp, coeff in (terms or {}).items():
            value = _check_coefficient(coeff)
            if value:
                clean[int(exp)] = value
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[int, Coefficient]) -> LaurentPoly:
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def monomial(cls, exp: int, coeff: Coefficient = 1) -> LaurentPoly:
        """Return ``coeff * q**exp``."""
        return cls({exp: coeff})

    @classmethod
    def constant(cls, coeff: Coefficient) -> LaurentPoly:
        return cls({0: coeff})

    @property
    def terms(self) -> Mapping[int, Coefficient]:
        return MappingProxyType(self._terms)

    @property
    def min_exponent(self) -> int:
        return min(self._terms)

    @property
    def max_exponent(self) -> int:
        return max(self._terms)

    @property
    def leading_coefficient(self) -> Coefficient:
        return self._terms[max(self._terms)]

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_term(self) -> Coefficient:
        return self._terms.get(0, 0)

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k``."""
        if k == 0:
            return self
        return LaurentPoly._wrap({e + k: c for e, c in self._terms.items()})

    def scale(self, factor: Coefficient) -> LaurentPoly:
        if factor == 1:
            return self
        if not factor:
            return ZERO_POLY
        return LaurentPoly._wrap({e: _normalize(c * factor) for e, c in self._terms.items()})

    def evaluate(self, value: Coefficient) -> Fraction:
        """Substitute an exact rational for q."""
        point = Fraction(value)
        if point == 0:
            if self._terms and self.min_exponent < 0:
                msg = "Laurent polynomial has a pole at q=0"
                raise PoleError(msg)
            return Fraction(self.constant_term())
        return sum((c * point**e for e, c in self._terms.items()), Fraction(0))

    def to_pairs(self) -> list[list[int | str]]:
        return [[e, str(Fraction(self._terms[e]))] for e in sorted(self._terms)]

    def to_sympy(self) -> sympy.Expr:
        return sympy.Add(
            *(
                sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * Q_SYMBOL**e
                for e, c in self._terms.items()
            )
        )

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int | Fraction):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __add__(self, other: object) -> LaurentPoly:
        if isinstance(other, int | Fraction):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            value = out.get(e, 0) + c
            if value:
                out[e] = _normalize(value)
            else:
                del out[e]
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __sub__(self, other: object) -> LaurentPoly:
        if isinstance(other, int | Fraction):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> LaurentPoly:
        if isinstance(other, int | Fraction):
            return LaurentPoly.constant(other) + (-self)
        return NotImplemented

    def __mul__(self, other: object) -> LaurentPoly:
        if isinstance(other, int | Fraction):
            return self.scale(_normalize(other))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO_POLY
        out: dict[int, Coefficient] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._wrap({e: _normalize(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for e in sorted(self._terms, reverse=True):
            term = _format_term(e, self._terms[e])
            if not pieces:
                pieces.append(term)
            elif term.startswith("-"):
                pieces.append(f"- {term[1:]}")
            else:
                pieces.append(f"+ {term}")
        return " ".join(pieces)


def _format_term(exp: int, coeff: Coefficient) -> str:
    if exp == 0:
        return str(coeff)
    power = "q" if exp == 1 else f"q^{exp}"
    if coeff == 1:
        return power
    if coeff == -1:
        return f"-{power}"
    return f"{coeff}*{power}"


ZERO_POLY = LaurentPoly()
ONE_POLY = LaurentPoly.constant(1)
Q_POLY = LaurentPoly.monomial(1)
# q - q^-1, the Hecke quadratic-relation constant
Q_DIFF_POLY = LaurentPoly({1: 1, -1: -1})


def _to_ring(poly: LaurentPoly) -> Any:  # noqa: ANN401
    """Convert a Laurent polynomial with nonnegative exponents to sympy's ring."""
    return _Q_RING.from_dict(
        {
            (e,): QQ(Fraction(c).numerator, Fraction(c).denominator)
            for e, c in poly._terms.items()  # noqa: SLF001
        }
    )


def _from_ring(element: Any) -> LaurentPoly:  # noqa: ANN401
    return LaurentPoly._wrap(  # noqa: SLF001
        {
            int(monom[0]): _normalize(Fraction(int(QQ.numer(c)), int(QQ.denom(c))))
            for monom, c in element.terms()
        }
    )


class ScalarQ:
    """An element of Q(q) held as a canonical numerator/denominator pair."""

    __slots__ = ("_den", "_hash", "_num")

    _num: LaurentPoly
    _den: LaurentPoly
    _hash: int | None

    def __init__(self, value: Coefficient | LaurentPoly = 0) -> None:
        num = value if isinstance(value, LaurentPoly) else LaurentPoly.constant(value)
        self._num = num
        self._den = ONE_POLY
        self._hash = None

    @classmethod
    def _wrap(cls, num: LaurentPoly, den: LaurentPoly) -> ScalarQ:
        s = cls.__new__(cls)
        s._num = num
        s._den = den
        s._hash = None
        return s

    @classmethod
    def laurent(cls, num: LaurentPoly) -> ScalarQ:
        return cls._wrap(num, ONE_POLY)

    @classmethod
    def fraction(cls, num: LaurentPoly, den: LaurentPoly) -> ScalarQ:
        """Return ``num / den`` in canonical form."""
        if not den:
            msg = "division by zero in Q(q)"
            raise ZeroDivisionError(msg)
        if not num:
            return ZERO
        low = den.min_exponent
        if low:
            den = den.shift(-low)
            num = num.shift(-low)
        if den.is_constant():
            return cls._wrap(num.scale(Fraction(1) / den.constant_term()), ONE_POLY)
        offset = num.min_exponent
        _, reduced_num, reduced_den = _to_ring(num.shift(-offset)).cofactors(_to_ring(den))
        num = _from_ring(reduced_num).shift(offset)
        den = _from_ring(reduced_den)
        lead = den.leading_coefficient
        if lead != 1:
            inv = Fraction(1) / lead
            num = num.scale(_normalize(inv))
            den = den.scale(_normalize(inv))
        if den.is_constant():
            return cls._wrap(num, ONE_POLY)
        return cls._wrap(num, den)

    @classmethod
    def q_power(cls, exp: int) -> ScalarQ:
        return cls._wrap(LaurentPoly.monomial(exp), ONE_POLY)

    @classmethod
    def of(cls, value: ScalarLike) -> ScalarQ:
        if isinstance(value, ScalarQ):
            return value
        if isinstance(value, LaurentPoly):
            return cls.laurent(value)
        return cls._wrap(LaurentPoly.constant(_check_coefficient(value)), ONE_POLY)

    @property
    def numerator(self) -> LaurentPoly:
        return self._num

    @property
    def denominator(self) -> LaurentPoly:
        return self._den

    def is_zero(self) -> bool:
        return not self._num

    def is_laurent(self) -> bool:
        """True when the denominator is 1."""
        return self._den is ONE_POLY or self._den == ONE_POLY

    def evaluate(self, value: Coefficient) -> Fraction:
        """Evaluate at an exact rational point of q."""
        den = self._den.evaluate(value)
        if den == 0:
            msg = f"{self} has a pole at q={value}"
            raise PoleError(msg)
        return self._num.evaluate(value) / den

    def inverse(self) -> ScalarQ:
        if not self._num:
            msg = "zero has no inverse in Q(q)"
            raise ZeroDivisionError(msg)
        return ScalarQ.fraction(self._den, self._num)

    def to_json(self) -> ScalarJson:
        return {"num": self._num.to_pairs(), "den": self._den.to_pairs()}

    @classmethod
    def from_json(cls, data: object) -> ScalarQ:
        """Parse the ``{"num": [[exp, "p/r"], ...], "den": [...]}`` form."""
        if not isinstance(data, dict) or set(data) != {"num", "den"}:
            msg = f"Malformed scalar: {data!r}"
            raise ScalarError(msg)
        try:
            num = LaurentPoly({int(e): Fraction(c) for e, c in data["num"]})
            den = LaurentPoly({int(e): Fraction(c) for e, c in data["den"]})
        except (TypeError, ValueError) as e:
            msg = f"Malformed scalar: {data!r}"
            raise ScalarError(msg) from e
        if not den:
            msg = f"Scalar with zero denominator: {data!r}"
            raise ScalarError(msg)
        return cls.fraction(num, den)

    def to_sympy(self) -> sympy.Expr:
        return self._num.to_sympy() / self._den.to_sympy()

    def __bool__(self) -> bool:
        return bool(self._num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ScalarQ):
            return self._num == other._num and self._den == other._den
        if isinstance(other, LaurentPoly | int | Fraction):
            return self.is_laurent() and self._num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_laurent():
                self._hash = hash(self._num)
            else:
                self._hash = hash((self._num, self._den))
        return self._hash

    def __neg__(self) -> ScalarQ:
        return ScalarQ._wrap(-self._num, self._den)

    def __add__(self, other: object) -> ScalarQ:
        rhs = _lift(other)
        if rhs is None:
            return NotImplemented
        if not rhs._num:
            return self
        if not self._num:
            return rhs
        if self.is_laurent() and rhs.is_laurent():
            return ScalarQ.laurent(self._num + rhs._num)
        if self._den == rhs._den:
            return ScalarQ.fraction(self._num + rhs._num, self._den)
        return ScalarQ.fraction(self._num * rhs._den + rhs._num * self._den, self._den * rhs._den)

    __radd__ = __add__

    def __sub__(self, other: object) -> ScalarQ:
        rhs = _lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> ScalarQ:
        lhs = _lift(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: object) -> ScalarQ:
        rhs = _lift(other)
        if rhs is None:
            return NotImplemented
        if not self._num or not rhs._num:
            return ZERO
        if self.is_laurent() and rhs.is_laurent():
            return ScalarQ.laurent(self._num * rhs._num)
        return ScalarQ.fraction(self._num * rhs._num, self._den * rhs._den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> ScalarQ:
        rhs = _lift(other)
        if rhs is None:
            return NotImplemented
        if not rhs._num:
            msg = "division by zero in Q(q)"
            raise ZeroDivisionError(msg)
        return ScalarQ.fraction(self._num * rhs._den, self._den * rhs._num)

    def __rtruediv__(self, other: object) -> ScalarQ:
        lhs = _lift(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __pow__(self, exp: int) -> ScalarQ:
        if exp < 0:
            return self.inverse() ** (-exp)
        result = ONE
        for _ in range(exp):
            result *= self
        return result

    def __repr__(self) -> str:
        return f"ScalarQ({self})"

    def __str__(self) -> str:
        if self.is_laurent():
            return str(self._num)
        num = str(self._num)
        if len(self._num.terms) > 1:
            num = f"({num})"
        return f"{num}/({self._den})"


type ScalarLike = ScalarQ | LaurentPoly | int | Fraction


def _lift(value: object) -> ScalarQ | None:
    if isinstance(value, ScalarQ):
        return value
    if isinstance(value, LaurentPoly):
        return ScalarQ.laurent(value)
    if isinstance(value, int | Fraction) and not isinstance(value, bool):
        return ScalarQ._wrap(LaurentPoly.constant(value), ONE_POLY)  # noqa: SLF001
    return None


ZERO = ScalarQ._wrap(ZERO_POLY, ONE_POLY)  # noqa: SLF001
ONE = ScalarQ._wrap(ONE_POLY, ONE_POLY)  # noqa: SLF001
Q = ScalarQ.laurent(Q_POLY)
Q_DIFF = ScalarQ.laurent(Q_DIFF_POLY)


def clear_denominators(values: Sequence[ScalarQ]) -> tuple[LaurentPoly, list[LaurentPoly]]:
    """Return ``(d, nums)`` with ``values[i] == nums[i] / d`` for a common denominator d.

    Sums of many scalars are formed on the numerators and reduced once.
    """
    dens = {v.denominator for v in values if not v.is_laurent()}
    if not dens:
        return ONE_POLY, [v.numerator for v in values]
    common: Any = None
    for den in dens:
        g = _to_ring(den)
        common = g if common is None else common.lcm(g)
    cofactors = {den: _from_ring(common.exquo(_to_ring(den))) for den in dens}
    common_poly = _from_ring(common)
    nums = [
        v.numerator * (common_poly if v.is_laurent() else cofactors[v.denominator])
        for v in values
    ]
    return common_poly, nums


@lru_cache(maxsize=256)
def q_int(k: int) -> ScalarQ:
    """Balanced quantum integer [k]_q = (q^k - q^-k) / (q - q^-1)."""
    if k < 0:
        msg = f"q_int requires k >= 0, got {k}"
        raise ScalarError(msg)
    return ScalarQ.laurent(LaurentPoly({k - 1 - 2 * j: 1 for j in range(k)}))


def signed_q_int(d: int) -> ScalarQ:
    """[d]_q extended to negative d by [-d]_q = -[d]_q."""
    return q_int(d) if d >= 0 else -q_int(-d)


@lru_cache(maxsize=256)
def q_int_unbalanced(k: int, base: str = "q") -> ScalarQ:
    """(k)_q = 1 + q + ... + q^(k-1), or the same sum in q^2."""
    if k < 0:
        msg = f"q_int_unbalanced requires k >= 0, got {k}"
        raise ScalarError(msg)
    if base not in _BASE_STEP:
        msg = f"Unknown base {base!r}; expected 'q' or 'q2'"
        raise ScalarError(msg)
    step = _BASE_STEP[base]
    return ScalarQ.laurent(LaurentPoly({step * j: 1 for j in range(k)}))


@lru_cache(maxsize=256)
def q_factorial(k: int, base: str = "balanced") -> ScalarQ:
    """[k]_q! for the balanced base, (k)_q! or (k)_{q^2}! otherwise."""
    if k < 0:
        msg = f"q_factorial requires k >= 0, got {k}"
        raise ScalarError(msg)
    if base != "balanced" and base not in _BASE_STEP:
        msg = f"Unknown base {base!r}; expected 'balanced', 'q' or 'q2'"
        raise ScalarError(msg)
    result = ONE
    for j in range(1, k + 1):
        result *= q_int(j) if base == "balanced" else q_int_unbalanced(j, base)
    return result


def multiset_multiplicity(letters: Sequence[int], variant: str = "q2") -> ScalarQ:
    """m(I), m_q(I) or m_{q^2}(I): the product of factorials of letter multiplicities."""
    if any(a > b for a, b in zip(letters, letters[1:], strict=False)):
        msg = f"Multiset must be nondecreasing, got {tuple(letters)}"
        raise ScalarError(msg)
    counts = Counter(letters).values()
    if variant == "plain":
        total = 1
        for c in counts:
            total *= factorial(c)
        return ScalarQ(total)
    if variant not in _BASE_STEP:
        msg = f"Unknown multiplicity variant {variant!r}"
        raise ScalarError(msg)
    result = ONE
    for c in counts:
        result *= q_factorial(c, variant)
    return result


def evaluate_at_q(s: ScalarQ, value: Coefficient) -> Fraction:
    """Exact rational value of s at q = value; raises PoleError at a pole."""
    return s.evaluate(value)


def sum_scalars(values: Iterable[ScalarQ]) -> ScalarQ:
    """Add many scalars with a single reduction at the end."""
    items = list(values)
    if not items:
        return ZERO
    common, nums = clear_denominators(items)
    total = ZERO_POLY
    for n in nums:
        total += n
    return ScalarQ.fraction(total, common)


def to_field(s: ScalarQ) -> Any:  # noqa: ANN401
    """Convert to an element of sympy's ``QQ.frac_field(q)`` domain."""
    return FIELD.from_sympy(s.to_sympy())
