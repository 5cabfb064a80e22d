from __future__ import annotations

import pytest

from garside_ribbons import build_artin, build_dual
from garside_ribbons.expr import parse_element, parse_parabolic


@pytest.fixture(scope="session")
def A2():
    return build_artin("A2")


@pytest.fixture(scope="session")
def A3():
    return build_artin("A3")


@pytest.fixture(scope="session")
def B2():
    return build_artin("B2")


@pytest.fixture(scope="session")
def S4():
    return build_dual(4)


@pytest.fixture(scope="session")
def S5():
    return build_dual(5)


@pytest.fixture(scope="session")
def instances(A2, A3, B2, S4, S5):
    return {"A2": A2, "A3": A3, "B2": B2, "S4": S4, "S5": S5}


def el(M, text):
    return parse_element(M, text)


def par(M, text):
    return parse_parabolic(M, text)
