"""Tests for verify.py: identity suites, reports and the suite registry."""

from __future__ import annotations

import json
import logging

import pytest

from qlittlewood.combinatorics import Partition
from qlittlewood.verify import (
    PROOF_ROUTE_NOTE,
    SUITES,
    Failure,
    SuiteError,
    SuiteParams,
    SuiteReport,
    _Recorder,
    check_alpha_commutativity,
    check_cayley_hamilton,
    check_characters,
    check_confluence,
    check_goulden_jackson,
    check_hecke_relations,
    check_hessenberg,
    check_idempotents,
    check_imm_char,
    check_induced,
    check_littlewood_one,
    check_littlewood_three,
    check_littlewood_two,
    check_lmw,
    check_macmahon,
    check_newton,
    check_phi_isomorphism,
    check_q_kostant,
    check_rtt,
    check_yang_baxter,
    merge_reports,
    run_suite,
)
from tests.conftest import x


def _assert_passed(report: SuiteReport) -> None:
    assert report.passed, json.dumps(report.to_dict(), indent=2)
    assert report.cases > 0


# === Bethe subalgebra ===


@pytest.mark.parametrize("n", [1, 2])
def test_bethe_suites_pass(n: int) -> None:
    """Commutativity, MacMahon, Newton and Cayley-Hamilton hold for small n."""
    _assert_passed(check_alpha_commutativity(n))
    _assert_passed(check_macmahon(n, n + 1))
    _assert_passed(check_newton(n, n + 1))
    _assert_passed(check_cayley_hamilton(n))


def test_bethe_suite_preconditions() -> None:
    """Degrees outside the supported range raise SuiteError."""
    with pytest.raises(SuiteError, match="degree >= 1"):
        check_macmahon(2, 0)
    with pytest.raises(SuiteError, match="n \\+ 2"):
        check_newton(2, 5)
    with pytest.raises(SuiteError, match="n >= 1"):
        check_cayley_hamilton(0)


# === Schur-type identities ===


@pytest.mark.parametrize("parts", [(1,), (2,), (1, 1), (2, 1), (1, 1, 1)])
def test_goulden_jackson(parts: tuple[int, ...]) -> None:
    """Both Jacobi-Trudi forms and the idempotent trace match the Schur sum."""
    _assert_passed(check_goulden_jackson(Partition(parts), 2))


def test_littlewood_one() -> None:
    """Products of complementary minors expand by Littlewood-Richardson."""
    _assert_passed(check_littlewood_one(Partition.of(1), Partition.of(1), 2))


@pytest.mark.parametrize("letters", [(1, 1), (1, 2), (1, 1, 2)])
def test_littlewood_two(letters: tuple[int, ...]) -> None:
    """The multiset version with weighted splittings."""
    nu = Partition((len(letters) - 1,))
    _assert_passed(check_littlewood_two(Partition.of(1), nu, 2, letters))


def test_littlewood_preconditions() -> None:
    """Shape sizes must add up to n or to |I|."""
    with pytest.raises(SuiteError, match="must equal n"):
        check_littlewood_one(Partition.of(1), Partition.of(1), 3)
    with pytest.raises(SuiteError, match="non-empty"):
        check_littlewood_one(Partition(()), Partition.of(2), 2)
    with pytest.raises(SuiteError, match="must equal"):
        check_littlewood_two(Partition.of(1), Partition.of(1), 2, (1, 1, 2))
    with pytest.raises(SuiteError, match="must lie in"):
        check_littlewood_two(Partition.of(1), Partition.of(1), 2, (1, 3))


@pytest.mark.parametrize(
    ("parts", "letters"),
    [((1, 1), None), ((2,), None), ((2, 1), (1, 1, 2))],
)
def test_lmw(parts: tuple[int, ...], letters: tuple[int, ...] | None) -> None:
    """ψ^λ and φ^λ immanants are weighted sums of block minors."""
    _assert_passed(check_lmw(Partition(parts), 2, letters))


@pytest.mark.parametrize("parts", [(1,), (2,), (1, 1)])
def test_littlewood_three(parts: tuple[int, ...]) -> None:
    """Inverse Kostka expansion and the e, h, p specializations."""
    _assert_passed(check_littlewood_three(Partition(parts), 2))


def test_littlewood_three_rejects_large_shapes() -> None:
    """|λ| may not exceed n."""
    with pytest.raises(SuiteError, match="Littlewood III"):
        check_littlewood_three(Partition.of(2, 1), 2)


@pytest.mark.parametrize(
    ("parts", "weight"),
    [((2,), (1, 1)), ((1, 1), (1, 1)), ((2,), (2, 0)), ((2, 1), (2, 1))],
)
def test_q_kostant(parts: tuple[int, ...], weight: tuple[int, ...]) -> None:
    """Normalized immanants equal isotypic traces on weight spaces."""
    report = check_q_kostant(Partition(parts), 2, weight)
    _assert_passed(report)
    assert report.note == PROOF_ROUTE_NOTE


def test_q_kostant_preconditions() -> None:
    """Weights must be length-n compositions of |λ|; λ must fit in n rows."""
    with pytest.raises(SuiteError, match="composition"):
        check_q_kostant(Partition.of(2), 2, (1, 1, 0))
    with pytest.raises(SuiteError, match="more than"):
        check_q_kostant(Partition.of(1, 1, 1), 2, (2, 1))


def test_phi_isomorphism() -> None:
    """Diagonal specialization sends α_k to e_k and Schur sums to Schur polynomials."""
    _assert_passed(check_phi_isomorphism(2))


@pytest.mark.parametrize("parts", [(1,), (2,), (1, 1)])
def test_hessenberg(parts: tuple[int, ...]) -> None:
    """Schur sums as Hessenberg immanants of the γ's."""
    _assert_passed(check_hessenberg(Partition(parts), 2))


# === foundations ===


def test_foundation_suites_pass() -> None:
    """Yang-Baxter, Hecke relations, RTT and confluence on small inputs."""
    _assert_passed(check_yang_baxter(2))
    _assert_passed(check_hecke_relations(2, 3))
    _assert_passed(check_rtt(2, 2))
    _assert_passed(check_confluence(2, 3))


def test_hecke_algebra_suites_pass() -> None:
    """Idempotents, characters, induced characters and immanant routes."""
    _assert_passed(check_idempotents(3))
    _assert_passed(check_characters(3))
    _assert_passed(check_induced(3))
    _assert_passed(check_imm_char(2, 2))


# === reports ===


def test_recorder_captures_failures(caplog: pytest.LogCaptureFixture) -> None:
    """A mismatch is recorded with serialized sides and logged."""
    rec = _Recorder("demo")
    with caplog.at_level(logging.WARNING, logger="qlittlewood.verify"):
        assert rec.equal("same", x(2, 1, 1), x(2, 1, 1))
        assert not rec.equal("different", x(2, 1, 1), x(2, 2, 2), shape=Partition.of(2))
    report = rec.report({"n": 2})
    assert report.cases == 2
    assert not report.passed
    (failure,) = report.failures
    assert failure.confirmed
    assert failure.inputs == {"shape": "(2)"}
    assert failure.left == x(2, 1, 1).to_json()
    assert "case different failed" in caplog.text


def test_report_to_dict() -> None:
    """Reports serialize parameters, counts and failures; notes only when present."""
    failure = Failure(case="c", inputs={"k": 1}, left=1, right=2, confirmed=True)
    report = SuiteReport(suite="demo", parameters={"n": 2}, cases=3, failures=(failure,))
    assert report.to_dict() == {
        "suite": "demo",
        "parameters": {"n": 2},
        "cases": 3,
        "passed": False,
        "failures": [{"case": "c", "inputs": {"k": 1}, "left": 1, "right": 2, "confirmed": True}],
    }
    assert "note" not in report.to_dict()
    assert SuiteReport(suite="demo", parameters={}, cases=0, note="x").to_dict()["note"] == "x"


def test_merge_reports() -> None:
    """Case counts add up, failures concatenate and notes are deduplicated."""
    failure = Failure(case="c", inputs={}, left=1, right=2, confirmed=True)
    reports = [
        SuiteReport(suite="a", parameters={}, cases=2, note="n1"),
        SuiteReport(suite="a", parameters={}, cases=1, failures=(failure,), note="n1"),
    ]
    merged = merge_reports("a", {"shape": Partition.of(2, 1)}, reports)
    assert merged.cases == 3
    assert merged.failures == (failure,)
    assert merged.note == "n1"
    assert merged.parameters == {"shape": "(2,1)"}


# === registry ===


def test_suite_registry_names() -> None:
    """Every documented suite is registered."""
    assert set(SUITES) == {
        "alpha-commutativity",
        "macmahon",
        "newton",
        "cayley-hamilton",
        "goulden-jackson",
        "littlewood-one",
        "littlewood-two",
        "lmw",
        "littlewood-three",
        "q-kostant",
        "phi-isomorphism",
        "hessenberg",
        "yang-baxter",
        "hecke-relations",
        "rtt",
        "confluence",
        "idempotents",
        "characters",
        "imm-char",
        "induced",
    }


def test_run_suite_unknown_name() -> None:
    """Unknown names raise SuiteError listing the valid ones."""
    with pytest.raises(SuiteError, match="Unknown suite"):
        run_suite("nope", SuiteParams())


@pytest.mark.parametrize(
    ("name", "params"),
    [
        ("macmahon", SuiteParams(n=2)),
        ("littlewood-one", SuiteParams(n=2)),
        ("lmw", SuiteParams(n=2, shape=Partition.of(1, 1))),
        ("q-kostant", SuiteParams(n=2, m=2)),
        ("hessenberg", SuiteParams(n=2, shape=Partition.of(2))),
    ],
)
def test_run_suite_sweeps(name: str, params: SuiteParams) -> None:
    """Registered runners fill in defaults and merge sweep results."""
    report = run_suite(name, params)
    _assert_passed(report)
    assert report.suite == name
    assert report.parameters["n"] == 2


def test_suite_params_to_dict_drops_unset() -> None:
    """Only explicitly set parameters appear, shapes as strings."""
    params = SuiteParams(n=3, shape=Partition.of(2, 1), letters=(1, 2, 2))
    assert params.to_dict() == {"n": 3, "shape": "(2,1)", "letters": [1, 2, 2]}
    assert params.size(4) == 4
    assert SuiteParams(m=2).size(4) == 2


@pytest.mark.parametrize(
    ("name", "params", "expected"),
    [
        ("goulden-jackson", SuiteParams(n=7), 8),
        ("goulden-jackson", SuiteParams(n=7, shape=Partition.of(2, 1)), 3),
        ("macmahon", SuiteParams(n=2), 3),
        ("macmahon", SuiteParams(n=2, degree=5), 5),
        ("q-kostant", SuiteParams(n=3), 3),
        ("littlewood-one", SuiteParams(n=2, shape=Partition.of(1), shape2=Partition.of(1)), 2),
        ("littlewood-two", SuiteParams(n=2, letters=(1, 1, 2, 2)), 4),
        ("yang-baxter", SuiteParams(n=5), 3),
        ("characters", SuiteParams(), 4),
        ("characters", SuiteParams(m=5), 5),
    ],
)
def test_effective_m_follows_suite_defaults(name: str, params: SuiteParams, expected: int) -> None:
    """The size a suite reaches includes its default sweep."""
    assert params.effective_m(name) == expected


def test_effective_m_covers_every_suite() -> None:
    """Every registered suite reports a positive size; unknown names raise."""
    assert all(SuiteParams().effective_m(name) >= 1 for name in SUITES)
    with pytest.raises(SuiteError, match="Unknown suite"):
        SuiteParams().effective_m("nope")
