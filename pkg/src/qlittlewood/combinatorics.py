"""Partitions, tableaux, permutations and classical symmetric-function oracles.

Conventions fixed here and used everywhere else:

- Partitions of a fixed weight are listed in reverse lexicographic order,
  ``(r), (r-1, 1), ..., (1, ..., 1)``.
- Weights are length-n compositions (nonnegative, zeros allowed).
- Permutations are one-line tuples of the values ``1..m``.
- Standard tableaux are ordered lexicographically by their row reading word.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import TYPE_CHECKING, Any

import sympy
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyRing

from qlittlewood.scalar import ONE, ScalarQ, q_int

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

logger = logging.getLogger(__name__)

type Cell = tuple[int, int]
type Composition = tuple[int, ...]
type Permutation = tuple[int, ...]


class ShapeError(ValueError):
    """Raised for an invalid partition, composition, tableau or permutation."""


@dataclass(frozen=True, slots=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p <= 0 for p in self.parts):
            msg = f"Partition parts must be positive: {self.parts}"
            raise ShapeError(msg)
        if any(a < b for a, b in itertools.pairwise(self.parts)):
            msg = f"Partition parts must be weakly decreasing: {self.parts}"
            raise ShapeError(msg)

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse a comma list such as ``"2,1"``; the empty string is the empty partition."""
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        try:
            parts = tuple(int(p) for p in text.split(","))
        except ValueError as e:
            msg = f"Invalid partition: {text!r}"
            raise ShapeError(msg) from e
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))
        )

    def cells(self) -> list[Cell]:
        """Boxes ``(row, col)``, zero-based, in row-reading order."""
        return [(i, j) for i, p in enumerate(self.parts) for j in range(p)]

    @staticmethod
    def content(cell: Cell) -> int:
        return cell[1] - cell[0]

    def hook(self, cell: Cell) -> int:
        i, j = cell
        arm = self.parts[i] - j - 1
        leg = sum(1 for p in self.parts[i + 1 :] if p > j)
        return arm + leg + 1

    def addable_corners(self) -> list[Cell]:
        corners = [
            (i, p)
            for i, p in enumerate(self.parts)
            if i == 0 or self.parts[i - 1] > p
        ]
        corners.append((len(self.parts), 0))
        return corners

    def removable_corners(self) -> list[Cell]:
        return [
            (i, p - 1)
            for i, p in enumerate(self.parts)
            if i == len(self.parts) - 1 or self.parts[i + 1] < p
        ]

    def add_cell(self, row: int) -> Partition:
        parts = list(self.parts)
        if row == len(parts):
            parts.append(1)
        else:
            parts[row] += 1
        return Partition(tuple(parts))

    def remove_cell(self, row: int) -> Partition:
        parts = list(self.parts)
        parts[row] -= 1
        return Partition(tuple(p for p in parts if p))

    def syt_count(self) -> int:
        """f^λ by the hook-length formula."""
        return factorial(self.weight) // prod(self.hook(c) for c in self.cells())

    def dominates(self, other: Partition) -> bool:
        if self.weight != other.weight:
            return False
        a = b = 0
        for i in range(max(self.length, other.length)):
            a += self.parts[i] if i < self.length else 0
            b += other.parts[i] if i < other.length else 0
            if a < b:
                return False
        return True

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partitions(r: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of r in reverse lexicographic order."""
    if r < 0:
        msg = f"Cannot partition a negative integer: {r}"
        raise ShapeError(msg)
    return [Partition(p) for p in _partition_tuples(r, r if max_part is None else max_part)]


def _partition_tuples(r: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if r == 0:
        yield ()
        return
    for first in range(min(r, max_part), 0, -1):
        for rest in _partition_tuples(r - first, first):
            yield (first, *rest)


def compositions(m: int, n: int) -> list[Composition]:
    """Length-n weak compositions of m, in reverse lexicographic order."""
    if n == 0:
        return [()] if m == 0 else []
    return [
        (first, *rest)
        for first in range(m, -1, -1)
        for rest in compositions(m - first, n - 1)
    ]


def multisets(n: int, k: int) -> list[tuple[int, ...]]:
    """Nondecreasing k-tuples over ``1..n`` in lexicographic order."""
    return list(itertools.combinations_with_replacement(range(1, n + 1), k))


def subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """Increasing k-tuples over ``1..n`` in lexicographic order."""
    return list(itertools.combinations(range(1, n + 1), k))


def weight_of(letters: Sequence[int], n: int) -> Composition:
    counts = Counter(letters)
    return tuple(counts.get(i, 0) for i in range(1, n + 1))


def multiset_of_weight(mu: Composition) -> tuple[int, ...]:
    """The sorted multiset containing letter i exactly ``mu[i-1]`` times."""
    if any(c < 0 for c in mu):
        msg = f"Weights must be nonnegative: {mu}"
        raise ShapeError(msg)
    return tuple(i + 1 for i, c in enumerate(mu) for _ in range(c))


# -- tableaux ---------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Tableau:
    """A filling of a Young diagram, stored as its rows."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        Partition(tuple(len(r) for r in self.rows))

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> Tableau:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def parse(cls, text: str) -> Tableau:
        """Parse rows separated by ``/``, e.g. ``"1,2/3"``."""
        try:
            return cls.of([[int(x) for x in row.split(",")] for row in text.split("/")])
        except ValueError as e:
            msg = f"Invalid tableau: {text!r}"
            raise ShapeError(msg) from e

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def is_semistandard(self) -> bool:
        for i, row in enumerate(self.rows):
            if any(a > b for a, b in itertools.pairwise(row)):
                return False
            if i > 0 and any(row[j] <= self.rows[i - 1][j] for j in range(len(row))):
                return False
        return all(x >= 1 for x in self.reading_word())

    def is_standard(self) -> bool:
        return (
            sorted(self.reading_word()) == list(range(1, self.size + 1))
            and self.is_semistandard()
        )

    def position(self, k: int) -> Cell:
        try:
            return _positions(self)[k]
        except KeyError as e:
            msg = f"Entry {k} not in tableau {self.rows}"
            raise ShapeError(msg) from e

    def content_of(self, k: int) -> int:
        """c_k(𝒯): the content of the box holding k."""
        return Partition.content(self.position(k))

    def axial_distance(self, i: int) -> int:
        """d_i(𝒯) = c_{i+1}(𝒯) - c_i(𝒯)."""
        return self.content_of(i + 1) - self.content_of(i)

    def swap(self, i: int) -> Tableau:
        """Exchange the entries i and i+1."""
        swap = {i: i + 1, i + 1: i}
        return Tableau(tuple(tuple(swap.get(x, x) for x in row) for row in self.rows))

    def restrict(self) -> Tableau:
        """Remove the largest entry of a standard tableau."""
        top = self.size
        rows = tuple(tuple(x for x in row if x != top) for row in self.rows)
        return Tableau(tuple(r for r in rows if r))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "/".join(",".join(str(x) for x in row) for row in self.rows)


@lru_cache(maxsize=4096)
def _positions(t: Tableau) -> dict[int, Cell]:
    return {x: (i, j) for i, row in enumerate(t.rows) for j, x in enumerate(row)}


@lru_cache(maxsize=128)
def enumerate_syt(shape: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux of the shape, ordered by row reading word."""
    if shape.weight == 0:
        return (Tableau(()),)
    found: list[Tableau] = []
    for row, _ in shape.removable_corners():
        smaller = shape.remove_cell(row)
        for t in enumerate_syt(smaller):
            rows = [list(r) for r in t.rows]
            if row == len(rows):
                rows.append([])
            rows[row].append(shape.weight)
            found.append(Tableau.of(rows))
    return tuple(sorted(found, key=Tableau.reading_word))


def semistandard_tableaux(
    shape: Partition, n: int, content: Composition | None = None
) -> Iterator[Tableau]:
    """Semistandard tableaux with entries in ``1..n``, optionally of a fixed content."""
    cells = shape.cells()
    remaining = list(content) if content is not None else None
    filling: dict[Cell, int] = {}

    def fill(k: int) -> Iterator[Tableau]:
        if k == len(cells):
            yield Tableau(
                tuple(tuple(filling[(i, j)] for j in range(p)) for i, p in enumerate(shape.parts))
            )
            return
        i, j = cells[k]
        low = filling[(i, j - 1)] if j > 0 else 1
        if i > 0:
            low = max(low, filling[(i - 1, j)] + 1)
        for v in range(low, n + 1):
            if remaining is not None:
                if not remaining[v - 1]:
                    continue
                remaining[v - 1] -= 1
            filling[(i, j)] = v
            yield from fill(k + 1)
            if remaining is not None:
                remaining[v - 1] += 1
        filling.pop((i, j), None)

    yield from fill(0)


@lru_cache(maxsize=1024)
def kostka(shape: Partition, weight: Composition) -> int:
    """K_{λμ}: the number of semistandard tableaux of shape λ and content μ."""
    if shape.weight != sum(weight):
        msg = f"Weight mismatch: |{shape}| != sum{weight}"
        raise ShapeError(msg)
    return sum(1 for _ in semistandard_tableaux(shape, len(weight), tuple(weight)))


def kostka_matrix(r: int) -> list[list[int]]:
    """``K[i][j] = kostka(P_i, P_j)`` over the partitions of r in reverse lex order."""
    parts = partitions(r)
    return [[kostka(lam, mu.parts) for mu in parts] for lam in parts]


@lru_cache(maxsize=16)
def inverse_kostka(r: int) -> tuple[tuple[int, ...], ...]:
    """Exact inverse of the Kostka matrix of weight r.

    With this indexing ``s_λ = Σ_μ Kinv[μ][λ] h_μ`` and
    ``s_λ = Σ_μ Kinv[μ][λᵀ] e_μ``.
    """
    inverse = sympy.Matrix(kostka_matrix(r)).inv()
    return tuple(
        tuple(int(inverse[i, j]) for j in range(inverse.cols)) for i in range(inverse.rows)
    )


def schur_element(shape: Partition) -> ScalarQ:
    """c_λ = Π q^{c(α)} [h(α)]_q over the boxes of λ."""
    result = ONE
    for cell in shape.cells():
        result *= ScalarQ.q_power(Partition.content(cell)) * q_int(shape.hook(cell))
    return result


# -- commutative symmetric polynomials ------------------------------------------


@lru_cache(maxsize=32)
def symmetric_ring(n: int, domain: Any = QQ) -> PolyRing:  # noqa: ANN401
    """The commutative ring ``domain[x1, ..., xn]`` (lex order)."""
    return PolyRing([f"x{i}" for i in range(1, n + 1)], domain)


@lru_cache(maxsize=256)
def schur_in_vars(shape: Partition, n: int, domain: Any = QQ) -> Any:  # noqa: ANN401
    """s_λ(x1, ..., xn) as a sum over semistandard tableaux; 0 when ℓ(λ) > n."""
    ring = symmetric_ring(n, domain)
    counts: Counter[tuple[int, ...]] = Counter()
    for t in semistandard_tableaux(shape, n):
        counts[weight_of(t.reading_word(), n)] += 1
    return ring.from_dict(dict(counts))


def elementary_in_vars(k: int, n: int, domain: Any = QQ) -> Any:  # noqa: ANN401
    return schur_in_vars(Partition((1,) * k), n, domain)


@lru_cache(maxsize=256)
def _lr_expansion(mu: Partition, nu: Partition) -> dict[Partition, int]:
    n = mu.weight + nu.weight
    ring = symmetric_ring(n)
    poly = schur_in_vars(mu, n) * schur_in_vars(nu, n)
    expansion: dict[Partition, int] = {}
    while poly:
        monom, coeff = poly.LM, poly.LC
        lam = Partition(tuple(e for e in monom if e))
        expansion[lam] = int(ring.domain.to_sympy(coeff))
        poly -= schur_in_vars(lam, n) * ring.domain.convert(coeff)
    logger.debug("LR expansion %s * %s has %d constituents", mu, nu, len(expansion))
    return expansion


def littlewood_richardson(mu: Partition, nu: Partition, lam: Partition) -> int:
    """c^λ_{μν} by expanding s_μ s_ν in the Schur basis (leading-monomial elimination)."""
    if lam.weight != mu.weight + nu.weight:
        msg = f"Weight mismatch: |{lam}| != |{mu}| + |{nu}|"
        raise ShapeError(msg)
    return _lr_expansion(mu, nu).get(lam, 0)


def lr_expansion(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """All nonzero c^λ_{μν}, keyed by λ in reverse lex order."""
    expansion = _lr_expansion(mu, nu)
    return {lam: expansion[lam] for lam in partitions(mu.weight + nu.weight) if lam in expansion}


# -- permutations -----------------------------------------------------------


def identity_perm(m: int) -> Permutation:
    return tuple(range(1, m + 1))


def check_perm(sigma: Sequence[int]) -> Permutation:
    perm = tuple(sigma)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        msg = f"Not a permutation in one-line form: {perm}"
        raise ShapeError(msg)
    return perm


def perm_length(sigma: Permutation) -> int:
    """l(σ), the number of inversions."""
    return sum(1 for a, b in itertools.combinations(sigma, 2) if a > b)


def perm_sign(sigma: Permutation) -> int:
    return -1 if perm_length(sigma) % 2 else 1


def perm_inverse(sigma: Permutation) -> Permutation:
    inv = [0] * len(sigma)
    for pos, value in enumerate(sigma, start=1):
        inv[value - 1] = pos
    return tuple(inv)


def perm_compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """σ∘τ, i.e. k ↦ σ(τ(k))."""
    return tuple(sigma[t - 1] for t in tau)


def swap_positions(sigma: Permutation, i: int) -> Permutation:
    """σ s_i: exchange positions i and i+1 of the one-line form."""
    out = list(sigma)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def swap_values(sigma: Permutation, i: int) -> Permutation:
    """s_i σ: exchange the values i and i+1."""
    swap = {i: i + 1, i + 1: i}
    return tuple(swap.get(v, v) for v in sigma)


@lru_cache(maxsize=8192)
def reduced_word(sigma: Permutation) -> tuple[int, ...]:
    """A reduced word (i_1, ..., i_l) with σ = s_{i_1} ⋯ s_{i_l}, found by bubble sort."""
    current = list(sigma)
    steps: list[int] = []
    while True:
        for i in range(len(current) - 1):
            if current[i] > current[i + 1]:
                current[i], current[i + 1] = current[i + 1], current[i]
                steps.append(i + 1)
                break
        else:
            return tuple(reversed(steps))


def right_descent(sigma: Permutation) -> int | None:
    """The smallest i with σ(i) > σ(i+1), or None for the identity."""
    for i in range(len(sigma) - 1):
        if sigma[i] > sigma[i + 1]:
            return i + 1
    return None


def left_descent(sigma: Permutation) -> int | None:
    """The smallest i such that the value i+1 stands before i."""
    pos = perm_inverse(sigma)
    for i in range(1, len(sigma)):
        if pos[i] < pos[i - 1]:
            return i
    return None


def right_parent(sigma: Permutation) -> tuple[Permutation, int]:
    """(σ s_i, i) for the first right descent i; l(σ s_i) = l(σ) - 1."""
    i = right_descent(sigma)
    if i is None:
        msg = f"The identity {sigma} has no parent"
        raise ShapeError(msg)
    return swap_positions(sigma, i), i


def left_parent(sigma: Permutation) -> tuple[Permutation, int]:
    """(s_i σ, i) for the first left descent i; l(s_i σ) = l(σ) - 1."""
    i = left_descent(sigma)
    if i is None:
        msg = f"The identity {sigma} has no parent"
        raise ShapeError(msg)
    return swap_values(sigma, i), i


def permutations(m: int) -> list[Permutation]:
    """All permutations of ``1..m`` in lexicographic order."""
    return list(itertools.permutations(range(1, m + 1)))


def transposition(i: int, k: int, m: int) -> Permutation:
    perm = list(range(1, m + 1))
    perm[i - 1], perm[k - 1] = perm[k - 1], perm[i - 1]
    return tuple(perm)


def cycle_type(sigma: Permutation) -> tuple[int, ...]:
    seen: set[int] = set()
    lengths: list[int] = []
    for start in range(1, len(sigma) + 1):
        if start in seen:
            continue
        length = 0
        k = start
        while k not in seen:
            seen.add(k)
            k = sigma[k - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def coxeter_representative(rho: Partition) -> Permutation:
    """The minimal-length permutation of cycle type ρ: consecutive cycles (a, a+1, ..., b)."""
    perm: list[int] = []
    start = 1
    for part in rho.parts:
        block = list(range(start, start + part))
        perm.extend(block[1:] + block[:1])
        start += part
    return tuple(perm)


# -- classical characters ------------------------------------------------------


@lru_cache(maxsize=4096)
def _murnaghan_nakayama(parts: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not parts else 0
    k, rest = cycles[0], cycles[1:]
    size = len(parts)
    beads = [p + size - 1 - i for i, p in enumerate(parts)]
    occupied = set(beads)
    total = 0
    for b in beads:
        target = b - k
        if target < 0 or target in occupied:
            continue
        sign = -1 if sum(1 for c in beads if target < c < b) % 2 else 1
        moved = sorted((occupied - {b}) | {target}, reverse=True)
        new_parts = tuple(x - (size - 1 - i) for i, x in enumerate(moved))
        total += sign * _murnaghan_nakayama(tuple(p for p in new_parts if p), rest)
    return total


def classical_character(shape: Partition, sigma: Permutation) -> int:
    """χ^λ(σ) for the symmetric group, by the Murnaghan–Nakayama rule."""
    if shape.weight != len(sigma):
        msg = f"Character of {shape} evaluated on a permutation of {len(sigma)} letters"
        raise ShapeError(msg)
    return _murnaghan_nakayama(shape.parts, cycle_type(sigma))


def centralizer_order(rho: Partition) -> int:
    """z_ρ = Π_i i^{m_i} m_i!."""
    return prod(i**c * factorial(c) for i, c in Counter(rho.parts).items())


def power_sum_expansion(shape: Partition) -> dict[Partition, Fraction]:
    """s_λ = Σ_ρ χ^λ(ρ)/z_ρ p_ρ, keyed by ρ in reverse lex order."""
    expansion: dict[Partition, Fraction] = {}
    for rho in partitions(shape.weight):
        value = _murnaghan_nakayama(shape.parts, rho.parts)
        if value:
            expansion[rho] = Fraction(value, centralizer_order(rho))
    return expansion
