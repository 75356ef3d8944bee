"""Exact identity suites.

Every check compares two independently computed sides for equality in normal
form. A mismatch is recorded with both sides serialized; the failure is marked
confirmed only when the sides still differ after a JSON round trip.
"""

from __future__ import annotations

import itertools
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from sympy.polys.matrices import DomainMatrix

from qlittlewood.combinatorics import (
    Partition,
    classical_character,
    compositions,
    coxeter_representative,
    elementary_in_vars,
    enumerate_syt,
    identity_perm,
    inverse_kostka,
    lr_expansion,
    multiset_of_weight,
    multisets,
    partitions,
    permutations,
    schur_element,
    schur_in_vars,
    weight_of,
)
from qlittlewood.hecke import (
    HeckeElement,
    character_value,
    conjugation_sum,
    idempotent_system,
    induced_from_shapes,
    irreducible_character,
    jucys_murphy,
    kostka_decomposition,
    phi_character,
    primitive_idempotent,
    primitive_idempotent_jm,
    psi_character,
)
from qlittlewood.immanant import (
    ImmanantSpec,
    bethe_alpha,
    bethe_beta,
    classical_immanant,
    first_tableau,
    gamma,
    hessenberg_immanant,
    idempotent_trace,
    immanant,
    jacobi_trudi_alpha,
    jacobi_trudi_beta,
    normalized_immanant,
    power_sum_form,
    quantum_determinant,
    quantum_permanent,
    schur_sum,
    star_power,
)
from qlittlewood.qmatrix import (
    QMatElement,
    QMatTensor,
    coproduct,
    log_cache_stats,
    reduce_word,
    specialize_diagonal,
    specialize_q_one,
)
from qlittlewood.scalar import (
    FIELD,
    Q_DIFF,
    ScalarQ,
    multiset_multiplicity,
    to_field,
)
from qlittlewood.tensorrep import (
    AValuedOperator,
    TensorOperator,
    chain_entry,
    hecke_action,
    r_matrix,
    rcheck,
    tensor_basis,
    trace_with,
    weight_projector,
    x_chain,
)

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator, Mapping, Sequence

logger = logging.getLogger(__name__)

PROOF_ROUTE_NOTE = "proof-route verification: isotypic trace normalized by f^λ"


class SuiteError(ValueError):
    """Raised for unknown suites or violated suite preconditions."""


@dataclass(frozen=True, slots=True)
class Failure:
    """One failing case with both sides in serialized form."""

    case: str
    inputs: Mapping[str, object]
    left: object
    right: object
    confirmed: bool

    def to_dict(self) -> dict[str, object]:
        return {
            "case": self.case,
            "inputs": dict(self.inputs),
            "left": self.left,
            "right": self.right,
            "confirmed": self.confirmed,
        }


@dataclass(frozen=True, slots=True)
class SuiteReport:
    """Outcome of one suite run."""

    suite: str
    parameters: Mapping[str, object]
    cases: int
    failures: tuple[Failure, ...] = ()
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, object]:
        data: dict[str, object] = {
            "suite": self.suite,
            "parameters": dict(self.parameters),
            "cases": self.cases,
            "passed": self.passed,
            "failures": [f.to_dict() for f in self.failures],
        }
        if self.note:
            data["note"] = self.note
        return data


def _plain(value: object) -> object:
    if isinstance(value, Partition):
        return str(value)
    if isinstance(value, tuple | list):
        return [_plain(v) for v in value]
    return value


def _serialize(value: object) -> object:
    if isinstance(value, QMatElement | ScalarQ | HeckeElement):
        return value.to_json()
    if isinstance(value, TensorOperator):
        return {
            "n": value.n,
            "m": value.m,
            "entries": [
                [list(i), list(j), c.to_json()] for (i, j), c in sorted(value.entries.items())
            ],
        }
    if isinstance(value, AValuedOperator):
        return {
            "n": value.n,
            "m": value.m,
            "entries": [
                [list(i), list(j), x.to_json()] for (i, j), x in sorted(value.entries.items())
            ],
        }
    if isinstance(value, int | str | bool):
        return value
    return str(value)


def _reparse(value: object) -> object:
    """Rebuild a value from its JSON text; values without a parser compare as text."""
    text = json.dumps(_serialize(value), sort_keys=True)
    if isinstance(value, QMatElement):
        return QMatElement.from_json(json.loads(text))
    if isinstance(value, ScalarQ):
        return ScalarQ.from_json(json.loads(text))
    if isinstance(value, HeckeElement):
        return HeckeElement.from_json(json.loads(text))
    return text


@dataclass
class _Recorder:
    suite: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)

    def equal(self, case: str, left: object, right: object, **inputs: object) -> bool:
        self.cases += 1
        logger.debug("%s: checking %s", self.suite, case)
        if left == right:
            return True
        confirmed = _reparse(left) != _reparse(right)
        logger.warning(
            "%s: case %s failed%s", self.suite, case, "" if confirmed else " (unconfirmed)"
        )
        self.failures.append(
            Failure(
                case=case,
                inputs={k: _plain(v) for k, v in inputs.items()},
                left=_serialize(left),
                right=_serialize(right),
                confirmed=confirmed,
            )
        )
        return False

    def zero(self, case: str, value: QMatElement, **inputs: object) -> bool:
        return self.equal(case, value, QMatElement(value.n), **inputs)

    def report(self, parameters: Mapping[str, object], note: str = "") -> SuiteReport:
        log_cache_stats()
        return SuiteReport(
            suite=self.suite,
            parameters={k: _plain(v) for k, v in parameters.items()},
            cases=self.cases,
            failures=tuple(self.failures),
            note=note,
        )


def merge_reports(
    suite: str, parameters: Mapping[str, object], reports: Sequence[SuiteReport]
) -> SuiteReport:
    """Concatenate case counts and failures in report order."""
    notes = sorted({r.note for r in reports if r.note})
    return SuiteReport(
        suite=suite,
        parameters={k: _plain(v) for k, v in parameters.items()},
        cases=sum(r.cases for r in reports),
        failures=tuple(f for r in reports for f in r.failures),
        note="; ".join(notes),
    )


def _sum(n: int, items: Iterator[QMatElement]) -> QMatElement:
    total = QMatElement(n)
    for item in items:
        total = total + item
    return total


def _product(n: int, factors: Sequence[QMatElement]) -> QMatElement:
    result = QMatElement.one(n)
    for factor in factors:
        result = result * factor
    return result


def _alpha(n: int, k: int) -> QMatElement:
    return bethe_alpha(n, k) if k >= 0 else QMatElement(n)


def _split(word: tuple[int, ...], k: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Distinct splittings of a sorted multiset into a k-sub-multiset and its complement."""
    for part in sorted(set(itertools.combinations(word, k))):
        rest = Counter(word)
        rest.subtract(part)
        yield part, tuple(sorted(rest.elements()))


def _ordered_splits(
    word: tuple[int, ...], sizes: Sequence[int]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not sizes:
        yield ()
        return
    for head, rest in _split(word, sizes[0]):
        for tail in _ordered_splits(rest, sizes[1:]):
            yield (head, *tail)


def _check_letters(letters: Sequence[int], n: int) -> tuple[int, ...]:
    word = tuple(sorted(letters))
    if any(not 1 <= a <= n for a in word):
        msg = f"Letters {word} must lie in 1..{n}"
        raise SuiteError(msg)
    return word


# -- Bethe subalgebra ------------------------------------------------------------


def check_alpha_commutativity(n: int) -> SuiteReport:
    """α_r α_s = α_s α_r for 0 <= r < s <= n."""
    rec = _Recorder("alpha-commutativity")
    alphas = [bethe_alpha(n, k) for k in range(n + 1)]
    for r, s in itertools.combinations(range(n + 1), 2):
        rec.equal(f"[α_{r}, α_{s}]", alphas[r] * alphas[s], alphas[s] * alphas[r], r=r, s=s)
    return rec.report({"n": n})


def _macmahon_cases(rec: _Recorder, n: int, degree: int) -> None:
    for k in range(1, degree + 1):
        value = _sum(
            n,
            (
                (bethe_alpha(n, r) * bethe_beta(n, k - r)).scale(-1 if r % 2 else 1)
                for r in range(min(k, n) + 1)
            ),
        )
        rec.zero(f"Σ(-1)^r α_r β_({k}-r)", value, k=k)


def check_macmahon(n: int, degree: int) -> SuiteReport:
    """Σ_r (-1)^r α_r β_{k-r} = 0 for 1 <= k <= degree."""
    if degree < 1:
        msg = f"MacMahon suite needs degree >= 1, got {degree}"
        raise SuiteError(msg)
    rec = _Recorder("macmahon")
    _macmahon_cases(rec, n, degree)
    return rec.report({"n": n, "degree": degree})


def _newton_cases(rec: _Recorder, n: int, degree: int) -> None:
    gammas = [gamma(n, j) for j in range(degree + 1)]
    for k in range(1, degree + 1):
        alpha_side = _sum(
            n,
            (
                (_alpha(n, k - j) * gammas[j]).scale(1 if j % 2 else -1)
                for j in range(1, k + 1)
            ),
        )
        rec.equal(f"{k} α_{k}", _alpha(n, k).scale(k), alpha_side, k=k)
        beta_side = _sum(n, (gammas[j] * bethe_beta(n, k - j) for j in range(1, k + 1)))
        rec.equal(f"{k} β_{k}", bethe_beta(n, k).scale(k), beta_side, k=k)


def check_newton(n: int, degree: int) -> SuiteReport:
    """k α_k = Σ_j (-1)^{j-1} α_{k-j} γ_j and k β_k = Σ_j γ_j β_{k-j}."""
    if not 1 <= degree <= n + 2:
        msg = f"Newton suite needs 1 <= degree <= n + 2 = {n + 2}, got {degree}"
        raise SuiteError(msg)
    rec = _Recorder("newton")
    _newton_cases(rec, n, degree)
    return rec.report({"n": n, "degree": degree})


def check_cayley_hamilton(n: int) -> SuiteReport:
    """Σ_k (-1)^k α_k X^{[n-k]} vanishes entrywise."""
    if n < 1:
        msg = f"Cayley-Hamilton suite needs n >= 1, got {n}"
        raise SuiteError(msg)
    rec = _Recorder("cayley-hamilton")
    powers = [star_power(n, k) for k in range(n + 1)]
    for a, b in itertools.product(range(n), repeat=2):
        value = _sum(
            n,
            (
                (bethe_alpha(n, k) * powers[n - k][a][b]).scale(-1 if k % 2 else 1)
                for k in range(n + 1)
            ),
        )
        rec.zero(f"entry ({a + 1},{b + 1})", value, row=a + 1, col=b + 1)
    return rec.report({"n": n})


# -- Schur-type identities --------------------------------------------------------


def check_goulden_jackson(shape: Partition, n: int) -> SuiteReport:
    """det(α_{λᵀ_i-i+j}) = det(β_{λ_i-i+j}) = tr E_𝒯 X_1⋯X_r = Σ_I Imm/m_{q²}(I)."""
    rec = _Recorder("goulden-jackson")
    reference = schur_sum(shape, n)
    rec.equal("dual Jacobi-Trudi", jacobi_trudi_alpha(shape, n), reference, shape=shape)
    rec.equal("Jacobi-Trudi", jacobi_trudi_beta(shape, n), reference, shape=shape)
    rec.equal("idempotent trace", idempotent_trace(first_tableau(shape), n), reference, shape=shape)
    return rec.report({"n": n, "shape": shape})


def _check_pair(mu: Partition, nu: Partition) -> None:
    if not mu.weight or not nu.weight:
        msg = f"Both shapes must be non-empty, got {mu} and {nu}"
        raise SuiteError(msg)


def _lr_side(mu: Partition, nu: Partition, word: tuple[int, ...], n: int) -> QMatElement:
    return _sum(
        n,
        (
            immanant(ImmanantSpec(irreducible_character(lam), word, word, n)).scale(c)
            for lam, c in sorted(lr_expansion(mu, nu).items(), key=lambda item: item[0].parts)
        ),
    )


def check_littlewood_one(mu: Partition, nu: Partition, n: int) -> SuiteReport:
    """Σ over complementary subsets Imm_μ(X_{I1}) Imm_ν(X_{I2}) = Σ_λ c^λ_{μν} Imm_λ(X)."""
    _check_pair(mu, nu)
    if mu.weight + nu.weight != n:
        msg = f"|{mu}| + |{nu}| must equal n = {n}"
        raise SuiteError(msg)
    rec = _Recorder("littlewood-one")
    chi_mu, chi_nu = irreducible_character(mu), irreducible_character(nu)
    full = tuple(range(1, n + 1))
    left = _sum(
        n,
        (
            immanant(ImmanantSpec(chi_mu, first, first, n))
            * immanant(ImmanantSpec(chi_nu, second, second, n))
            for first, second in _split(full, mu.weight)
        ),
    )
    rec.equal("complementary minors", left, _lr_side(mu, nu, full, n), mu=mu, nu=nu)
    return rec.report({"n": n, "mu": mu, "nu": nu})


def check_littlewood_two(
    mu: Partition, nu: Partition, n: int, letters: Sequence[int]
) -> SuiteReport:
    """The multiset version, each splitting weighted by m(I)/(m(I1) m(I2))."""
    _check_pair(mu, nu)
    word = _check_letters(letters, n)
    if mu.weight + nu.weight != len(word):
        msg = f"|{mu}| + |{nu}| must equal |I| = {len(word)}"
        raise SuiteError(msg)
    rec = _Recorder("littlewood-two")
    chi_mu, chi_nu = irreducible_character(mu), irreducible_character(nu)
    total = multiset_multiplicity(word)
    left = _sum(
        n,
        (
            (
                immanant(ImmanantSpec(chi_mu, first, first, n))
                * immanant(ImmanantSpec(chi_nu, second, second, n))
            ).scale(total / (multiset_multiplicity(first) * multiset_multiplicity(second)))
            for first, second in _split(word, mu.weight)
        ),
    )
    rec.equal("multiset splittings", left, _lr_side(mu, nu, word, n), mu=mu, nu=nu, letters=word)
    return rec.report({"n": n, "mu": mu, "nu": nu, "letters": word})


def _block_sum(
    shape: Partition, word: tuple[int, ...], n: int, minor: Callable[..., QMatElement]
) -> QMatElement:
    total = multiset_multiplicity(word)
    terms = []
    for blocks in _ordered_splits(word, shape.parts):
        weight = total
        for block in blocks:
            weight = weight / multiset_multiplicity(block)
        terms.append(_product(n, [minor(b, b, n) for b in blocks]).scale(weight))
    return _sum(n, iter(terms))


def check_lmw(shape: Partition, n: int, letters: Sequence[int] | None = None) -> SuiteReport:
    """Imm_{ψ^λ}(X_I) and Imm_{φ^λ}(X_I) as weighted sums of block minors.

    ``letters=None`` means the full index set 1..n.
    """
    word = tuple(range(1, n + 1)) if letters is None else _check_letters(letters, n)
    if shape.weight != len(word):
        msg = f"|{shape}| must equal |I| = {len(word)}"
        raise SuiteError(msg)
    rec = _Recorder("lmw")
    rec.equal(
        "determinant side",
        immanant(ImmanantSpec(psi_character(shape), word, word, n)),
        _block_sum(shape, word, n, quantum_determinant),
        shape=shape,
        letters=word,
    )
    rec.equal(
        "permanent side",
        immanant(ImmanantSpec(phi_character(shape), word, word, n)),
        _block_sum(shape, word, n, quantum_permanent),
        shape=shape,
        letters=word,
    )
    return rec.report({"n": n, "shape": shape, "letters": "full" if letters is None else word})


def check_littlewood_three(shape: Partition, n: int) -> SuiteReport:
    """Σ_μ K⁻¹_{μ,λᵀ} α_μ = Σ_I Imm/m_{q²}(I), plus the e/h/p specializations."""
    r = shape.weight
    if not 1 <= r <= n:
        msg = f"Littlewood III needs 1 <= |{shape}| <= n = {n}"
        raise SuiteError(msg)
    rec = _Recorder("littlewood-three")
    pars = partitions(r)
    kinv = inverse_kostka(r)
    column = pars.index(shape.conjugate())
    left = _sum(
        n,
        (
            _product(n, [bethe_alpha(n, p) for p in mu.parts]).scale(kinv[row][column])
            for row, mu in enumerate(pars)
            if kinv[row][column]
        ),
    )
    reference = schur_sum(shape, n)
    rec.equal("inverse Kostka expansion", left, reference, shape=shape)
    rec.equal("agrees with dual Jacobi-Trudi", jacobi_trudi_alpha(shape, n), reference, shape=shape)
    rec.equal("e_r ↦ α_r", schur_sum(Partition((1,) * r), n), bethe_alpha(n, r), r=r)
    cycle = coxeter_representative(Partition((r,)))
    power = _sum(n, (schur_sum(lam, n).scale(classical_character(lam, cycle)) for lam in pars))
    rec.equal("p_r ↦ γ_r", power, gamma(n, r), r=r)
    _macmahon_cases(rec, n, r)
    _newton_cases(rec, n, r)
    return rec.report({"n": n, "shape": shape})


def check_q_kostant(shape: Partition, n: int, weight: Sequence[int]) -> SuiteReport:
    """Imm_{χ^λ}(X_I)/m_{q²}(I) = tr(P_μ z_λ P_μ X^{⊗m})/f^λ with z_λ = Σ_𝒯 E_𝒯."""
    mu = tuple(weight)
    if shape.length > n:
        msg = f"Shape {shape} has more than n = {n} rows"
        raise SuiteError(msg)
    if len(mu) != n or any(w < 0 for w in mu) or sum(mu) != shape.weight:
        msg = f"Weight {mu} must be a length-{n} composition of {shape.weight}"
        raise SuiteError(msg)
    rec = _Recorder("q-kostant")
    word = multiset_of_weight(mu)
    left = normalized_immanant(shape, word, n)
    projector = weight_projector(mu)
    centre = hecke_action(irreducible_character(shape) / schur_element(shape), n)
    basis = [i for i in tensor_basis(n, shape.weight) if weight_of(i, n) == mu]
    chain = x_chain(n, shape.weight, rows=basis, cols=basis)
    right = trace_with(projector @ centre @ projector, chain) / shape.syt_count()
    rec.equal("isotypic trace", left, right, shape=shape, weight=mu)
    return rec.report({"n": n, "shape": shape, "weight": mu}, note=PROOF_ROUTE_NOTE)


def check_phi_isomorphism(n: int) -> SuiteReport:
    """Φ(α_k) = e_k, Φ(Σ_I Imm/m) = s_λ, and the Schur sums of weight n are independent."""
    if n < 1:
        msg = f"Φ suite needs n >= 1, got {n}"
        raise SuiteError(msg)
    rec = _Recorder("phi-isomorphism")
    for k in range(1, n + 1):
        rec.equal(
            f"Φ(α_{k}) = e_{k}",
            specialize_diagonal(bethe_alpha(n, k)),
            elementary_in_vars(k, n, FIELD),
            k=k,
        )
    for r in range(1, n + 1):
        for lam in partitions(r):
            rec.equal(
                f"Φ(S_{lam}) = s_{lam}",
                specialize_diagonal(schur_sum(lam, n)),
                schur_in_vars(lam, n, FIELD),
                shape=lam,
            )
    sums = [schur_sum(lam, n) for lam in partitions(n)]
    monomials = sorted({mono for s in sums for mono in s.terms})
    matrix = DomainMatrix(
        [[to_field(s.coefficient(mono)) for mono in monomials] for s in sums],
        (len(sums), len(monomials)),
        FIELD,
    )
    rec.equal("rank of Schur sums", matrix.rank(), len(sums), n=n)
    return rec.report({"n": n})


def check_hessenberg(shape: Partition, n: int) -> SuiteReport:
    """Σ_I Imm/m_{q²}(I) = Imm_{χ^λ}(Γ_r)/r! over the γ_k."""
    r = shape.weight
    if not 1 <= r <= n:
        msg = f"Hessenberg suite needs 1 <= |{shape}| <= n = {n}"
        raise SuiteError(msg)
    rec = _Recorder("hessenberg")
    gammas = [gamma(n, k) for k in range(1, r + 1)]
    reference = schur_sum(shape, n)
    rec.equal("Hessenberg immanant", hessenberg_immanant(shape, gammas, n), reference, shape=shape)
    rec.equal("power-sum expansion", power_sum_form(shape, gammas, n), reference, shape=shape)
    return rec.report({"n": n, "shape": shape})


# -- foundations --------------------------------------------------------------------


def check_yang_baxter(n: int) -> SuiteReport:
    """The Yang-Baxter equation and the identities between R, R⁺, R⁻, P and Ř."""
    rec = _Recorder("yang-baxter")
    r = r_matrix(n, "R")
    r12, r13, r23 = (r.embed(pos, 3) for pos in ((1, 2), (1, 3), (2, 3)))
    rec.equal("R12 R13 R23 = R23 R13 R12", r12 @ r13 @ r23, r23 @ r13 @ r12, n=n)
    p = r_matrix(n, "P")
    rec.equal("R⁺ = P R P", r_matrix(n, "R+"), p @ r @ p, n=n)
    rec.equal("R⁻ R = 1", r_matrix(n, "R-") @ r, TensorOperator.identity(n, 2), n=n)
    difference = r_matrix(n, "R+") - r_matrix(n, "R-")
    rec.equal("R⁺ - R⁻ = (q - q⁻¹) P", difference, p.scale(Q_DIFF), n=n)
    rec.equal("Ř = P R", r_matrix(n, "Rcheck"), p @ r, n=n)
    return rec.report({"n": n})


def check_hecke_relations(n: int, m: int) -> SuiteReport:
    """Quadratic, braid and commutation relations for T_k and for Ř_k on tensor space."""
    rec = _Recorder("hecke-relations")
    identity = TensorOperator.identity(n, m)
    one = HeckeElement.one(m)
    for k in range(1, m):
        rk = rcheck(n, k, m)
        rec.equal(f"Ř_{k}² = (q - q⁻¹)Ř_{k} + 1", rk @ rk, rk.scale(Q_DIFF) + identity, k=k)
        tk = HeckeElement.generator(k, m)
        rec.equal(f"T_{k}² = (q - q⁻¹)T_{k} + 1", tk * tk, tk.scale(Q_DIFF) + one, k=k)
        for j in range(k + 1, m):
            rj, tj = rcheck(n, j, m), HeckeElement.generator(j, m)
            if j == k + 1:
                rec.equal(f"Ř braid {k},{j}", rk @ rj @ rk, rj @ rk @ rj, k=k)
                rec.equal(f"T braid {k},{j}", tk * tj * tk, tj * tk * tj, k=k)
            else:
                rec.equal(f"Ř_{k} Ř_{j} = Ř_{j} Ř_{k}", rk @ rj, rj @ rk, k=k, j=j)
                rec.equal(f"T_{k} T_{j} = T_{j} T_{k}", tk * tj, tj * tk, k=k, j=j)
            rec.equal(
                f"action of T_{k} T_{j}", hecke_action(tk * tj, n), rk @ rj, k=k, j=j
            )
    return rec.report({"n": n, "m": m})


def check_rtt(n: int, m: int) -> SuiteReport:
    """Ř_k commutes with X_1⋯X_m, and Δ(X^I_J) = Σ_K X^I_K ⊗ X^K_J."""
    rec = _Recorder("rtt")
    chain = x_chain(n, m)
    for k in range(1, m):
        op = rcheck(n, k, m)
        rec.equal(f"Ř_{k} X = X Ř_{k}", chain.compose_left(op), chain.compose_right(op), k=k)
    basis = tensor_basis(n, m)
    for row, col in itertools.product(basis, repeat=2):
        expected = QMatTensor(n)
        for mid in basis:
            expected = expected + QMatTensor.pure(
                chain_entry(n, row, mid), chain_entry(n, mid, col)
            )
        rec.equal(
            f"coaction {row}->{col}",
            coproduct(chain_entry(n, row, col)),
            expected,
            row=row,
            col=col,
        )
    return rec.report({"n": n, "m": m})


def check_confluence(n: int, degree: int) -> SuiteReport:
    """Leftmost and rightmost reduction agree on every word up to ``degree`` letters."""
    rec = _Recorder("confluence")
    generators = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for length in range(2, degree + 1):
        for word in itertools.product(generators, repeat=length):
            rec.equal(
                f"word {word}",
                reduce_word(word, strategy="leftmost"),
                reduce_word(word, strategy="rightmost"),
                word=word,
            )
    return rec.report({"n": n, "degree": degree})


def check_idempotents(m: int) -> SuiteReport:
    """Completeness, orthogonality, Jucys-Murphy eigenvalues and χ^λ = c_λ Σ_𝒯 E_𝒯."""
    rec = _Recorder("idempotents")
    system = idempotent_system(m)
    rec.equal("Σ E_𝒯 = 1", sum(system.values(), HeckeElement(m)), HeckeElement.one(m), m=m)
    for (s, e_s), (t, e_t) in itertools.product(system.items(), repeat=2):
        expected = e_t if s == t else HeckeElement(m)
        rec.equal(f"E_{s} E_{t}", e_s * e_t, expected, left=str(s), right=str(t))
    for t, e_t in system.items():
        rec.equal(f"E_{t} by JM recurrence", primitive_idempotent_jm(t), e_t, tableau=str(t))
        for k in range(2, m + 1):
            eigen = ScalarQ.q_power(2 * t.content_of(k))
            rec.equal(
                f"y_{k} E_{t}", jucys_murphy(k, m) * e_t, e_t.scale(eigen), tableau=str(t), k=k
            )
    for lam in partitions(m):
        block = sum((primitive_idempotent(t) for t in enumerate_syt(lam)), HeckeElement(m))
        rec.equal(
            f"χ^{lam} = c_λ Σ E",
            irreducible_character(lam),
            block.scale(schur_element(lam)),
            shape=lam,
        )
    return rec.report({"m": m})


def check_characters(m: int) -> SuiteReport:
    """Laurent coefficients, centrality and Σ_σ T_σ E_𝒯 T_{σ^-1} = χ^λ.

    At q = 1 the values match Murnaghan-Nakayama, and χ^λ(T_id) = f^λ.
    """
    rec = _Recorder("characters")
    for lam in partitions(m):
        chi = irreducible_character(lam)
        rec.equal(f"χ^{lam} is Laurent", chi.is_laurent(), True, shape=lam)  # noqa: FBT003
        for i in range(1, m):
            t = HeckeElement.generator(i, m)
            rec.equal(f"χ^{lam} T_{i} = T_{i} χ^{lam}", chi * t, t * chi, shape=lam, i=i)
        rec.equal(
            f"Σ T_σ E T_σ⁻¹ = χ^{lam}",
            conjugation_sum(primitive_idempotent(first_tableau(lam))),
            chi,
            shape=lam,
        )
        rec.equal(
            f"χ^{lam}(1)",
            character_value(lam, identity_perm(m)),
            ScalarQ.of(lam.syt_count()),
            shape=lam,
        )
        at_one = chi.evaluate_at_one()
        for sigma in permutations(m):
            rec.equal(
                f"χ^{lam}({sigma}) at q=1",
                at_one.get(sigma, 0),
                classical_character(lam, sigma),
                shape=lam,
                sigma=sigma,
            )
    return rec.report({"m": m})


def check_imm_char(n: int, m: int) -> SuiteReport:
    """Character and idempotent routes agree; immanants at q = 1 are classical."""
    rec = _Recorder("imm-char")
    for lam in partitions(m):
        chi = irreducible_character(lam)
        for word in multisets(n, m):
            rec.equal(
                f"routes {lam} {word}",
                normalized_immanant(lam, word, n, "character"),
                normalized_immanant(lam, word, n, "idempotent"),
                shape=lam,
                letters=word,
            )
        for rows, cols in itertools.product(multisets(n, m), repeat=2):
            rec.equal(
                f"q=1 {lam} {rows}->{cols}",
                specialize_q_one(immanant(ImmanantSpec(chi, rows, cols, n))),
                classical_immanant(lam, rows, cols),
                shape=lam,
                rows=rows,
                cols=cols,
            )
    return rec.report({"n": n, "m": m})


def check_induced(m: int) -> SuiteReport:
    """ψ^μ and φ^μ by Kostka numbers; induced products by Littlewood-Richardson."""
    rec = _Recorder("induced")
    for mu in partitions(m):
        rec.equal(f"ψ^{mu}", psi_character(mu), kostka_decomposition(mu, "sign"), mu=mu)
        rec.equal(f"φ^{mu}", phi_character(mu), kostka_decomposition(mu, "trivial"), mu=mu)
    for r in range(1, m):
        for mu, nu in itertools.product(partitions(r), partitions(m - r)):
            expected = sum(
                (irreducible_character(lam).scale(c) for lam, c in lr_expansion(mu, nu).items()),
                HeckeElement(m),
            )
            rec.equal(
                f"Ind χ^{mu} ⊗ χ^{nu}", induced_from_shapes([mu, nu]), expected, mu=mu, nu=nu
            )
    return rec.report({"m": m})


# -- registry -----------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SuiteParams:
    """Suite parameters; unset shapes and multisets mean a sweep at desk scale."""

    n: int = 2
    m: int | None = None
    degree: int | None = None
    shape: Partition | None = None
    shape2: Partition | None = None
    letters: tuple[int, ...] | None = None
    weight: tuple[int, ...] | None = None

    def size(self, default: int) -> int:
        return default if self.m is None else self.m

    def effective_m(self, suite: str) -> int:
        """Largest tensor power or Hecke rank the suite reaches under these parameters."""
        degree = _SUITE_DEGREES.get(suite)
        if degree is None:
            msg = f"Unknown suite {suite!r}"
            raise SuiteError(msg)
        return degree(self)

    def to_dict(self) -> dict[str, object]:
        data = {
            "n": self.n,
            "m": self.m,
            "degree": self.degree,
            "shape": self.shape,
            "shape2": self.shape2,
            "letters": self.letters,
            "weight": self.weight,
        }
        return {k: _plain(v) for k, v in data.items() if v is not None}


def _shapes(params: SuiteParams, sizes: Sequence[int]) -> list[Partition]:
    if params.shape is not None:
        return [params.shape]
    return [lam for r in sizes for lam in partitions(r)]


def _pairs(params: SuiteParams, total: int) -> list[tuple[Partition, Partition]]:
    if params.shape is not None and params.shape2 is not None:
        return [(params.shape, params.shape2)]
    return [
        (mu, nu)
        for r in range(1, total)
        for mu in partitions(r)
        for nu in partitions(total - r)
    ]


def _sweep(name: str, params: SuiteParams, reports: Iterator[SuiteReport]) -> SuiteReport:
    return merge_reports(name, params.to_dict(), list(reports))


def _run_goulden_jackson(p: SuiteParams) -> SuiteReport:
    shapes = _shapes(p, range(1, p.effective_m("goulden-jackson") + 1))
    return _sweep("goulden-jackson", p, (check_goulden_jackson(s, p.n) for s in shapes))


def _run_littlewood_one(p: SuiteParams) -> SuiteReport:
    pairs = _pairs(p, p.n)
    return _sweep("littlewood-one", p, (check_littlewood_one(a, b, p.n) for a, b in pairs))


def _run_littlewood_two(p: SuiteParams) -> SuiteReport:
    if p.letters is not None:
        words: list[tuple[int, ...]] = [p.letters]
    else:
        top = p.effective_m("littlewood-two")
        words = [w for k in range(2, top + 1) for w in multisets(p.n, k)]
    return _sweep(
        "littlewood-two",
        p,
        (
            check_littlewood_two(a, b, p.n, w)
            for w in words
            for a, b in _pairs(p, len(w))
        ),
    )


def _run_lmw(p: SuiteParams) -> SuiteReport:
    if p.letters is not None:
        shapes = _shapes(p, [len(p.letters)])
        return _sweep("lmw", p, (check_lmw(s, p.n, p.letters) for s in shapes))
    return _sweep("lmw", p, (check_lmw(s, p.n) for s in _shapes(p, [p.n])))


def _run_littlewood_three(p: SuiteParams) -> SuiteReport:
    shapes = _shapes(p, range(1, p.n + 1))
    return _sweep("littlewood-three", p, (check_littlewood_three(s, p.n) for s in shapes))


def _run_q_kostant(p: SuiteParams) -> SuiteReport:
    shapes = [s for s in _shapes(p, [p.effective_m("q-kostant")]) if s.length <= p.n]
    return _sweep(
        "q-kostant",
        p,
        (
            check_q_kostant(s, p.n, w)
            for s in shapes
            for w in ([p.weight] if p.weight is not None else compositions(s.weight, p.n))
        ),
    )


def _run_hessenberg(p: SuiteParams) -> SuiteReport:
    shapes = _shapes(p, range(1, p.n + 1))
    return _sweep("hessenberg", p, (check_hessenberg(s, p.n) for s in shapes))


def _shape_or(p: SuiteParams, default: int) -> int:
    return p.shape.weight if p.shape is not None else default


def _pair_or(p: SuiteParams, default: int) -> int:
    if p.shape is not None and p.shape2 is not None:
        return p.shape.weight + p.shape2.weight
    return default


_SUITE_DEGREES: dict[str, Callable[[SuiteParams], int]] = {
    "alpha-commutativity": lambda p: p.n,
    "macmahon": lambda p: p.degree or p.n + 1,
    "newton": lambda p: p.degree or p.n + 1,
    "cayley-hamilton": lambda p: p.n,
    "goulden-jackson": lambda p: _shape_or(p, p.size(p.n + 1)),
    "littlewood-one": lambda p: _pair_or(p, p.n),
    "littlewood-two": lambda p: len(p.letters) if p.letters is not None else p.size(min(p.n, 3)),
    "lmw": lambda p: len(p.letters) if p.letters is not None else _shape_or(p, p.n),
    "littlewood-three": lambda p: _shape_or(p, p.n),
    "q-kostant": lambda p: _shape_or(p, p.size(p.n)),
    "phi-isomorphism": lambda p: p.n,
    "hessenberg": lambda p: _shape_or(p, p.n),
    "yang-baxter": lambda _: 3,
    "hecke-relations": lambda p: p.size(3),
    "rtt": lambda p: p.size(2),
    "confluence": lambda p: p.degree or 3,
    "idempotents": lambda p: p.size(3),
    "characters": lambda p: p.size(4),
    "imm-char": lambda p: p.size(2),
    "induced": lambda p: p.size(3),
}

SUITES: dict[str, Callable[[SuiteParams], SuiteReport]] = {
    "alpha-commutativity": lambda p: check_alpha_commutativity(p.n),
    "macmahon": lambda p: check_macmahon(p.n, p.effective_m("macmahon")),
    "newton": lambda p: check_newton(p.n, p.effective_m("newton")),
    "cayley-hamilton": lambda p: check_cayley_hamilton(p.n),
    "goulden-jackson": _run_goulden_jackson,
    "littlewood-one": _run_littlewood_one,
    "littlewood-two": _run_littlewood_two,
    "lmw": _run_lmw,
    "littlewood-three": _run_littlewood_three,
    "q-kostant": _run_q_kostant,
    "phi-isomorphism": lambda p: check_phi_isomorphism(p.n),
    "hessenberg": _run_hessenberg,
    "yang-baxter": lambda p: check_yang_baxter(p.n),
    "hecke-relations": lambda p: check_hecke_relations(p.n, p.effective_m("hecke-relations")),
    "rtt": lambda p: check_rtt(p.n, p.effective_m("rtt")),
    "confluence": lambda p: check_confluence(p.n, p.effective_m("confluence")),
    "idempotents": lambda p: check_idempotents(p.effective_m("idempotents")),
    "characters": lambda p: check_characters(p.effective_m("characters")),
    "imm-char": lambda p: check_imm_char(p.n, p.effective_m("imm-char")),
    "induced": lambda p: check_induced(p.effective_m("induced")),
}


def run_suite(name: str, params: SuiteParams) -> SuiteReport:
    """Run a registered suite by name."""
    runner = SUITES.get(name)
    if runner is None:
        msg = f"Unknown suite {name!r}; expected one of {', '.join(SUITES)}"
        raise SuiteError(msg)
    logger.info("running suite %s with %s", name, params.to_dict())
    report = runner(params)
    if not report.passed:
        logger.warning("suite %s: %d failing case(s)", name, len(report.failures))
    return report
