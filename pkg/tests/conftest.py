"""Shared fixtures: isolated config home, scalar and generator builders."""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from qlittlewood.qmatrix import QMatElement
from qlittlewood.scalar import LaurentPoly, ScalarQ

if TYPE_CHECKING:
    from pathlib import Path

    from qlittlewood.scalar import Coefficient


Q_INV = ScalarQ.q_power(-1)


def poly(terms: dict[int, Coefficient]) -> ScalarQ:
    """Build a Laurent-polynomial scalar from ``{exponent: coefficient}``."""
    return ScalarQ.laurent(LaurentPoly(terms))


def x(n: int, i: int, j: int) -> QMatElement:
    """The generator x_ij of A_q(Mat_n)."""
    return QMatElement.generator(n, i, j)


@pytest.fixture
def config_home(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> Path:
    """Point XDG_CONFIG_HOME at an empty temporary directory."""
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path))
    return tmp_path
