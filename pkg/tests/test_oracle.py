from __future__ import annotations

import pytest

from garside_ribbons.errors import BoundExceeded
from garside_ribbons.lemmas import LEMMAS, lemma_suite
from garside_ribbons.monoid import GarsideMonoid
from garside_ribbons.oracle import (
    Ball,
    brute_head_P,
    brute_left_gcd,
    brute_ribbon_prefix,
    brute_right_lcm,
    enumerate_left_divisors,
    oracle_equivalence,
)

from conftest import el, par


def test_divisor_examples(A2):
    ball = Ball(A2, 4)
    assert len(enumerate_left_divisors(ball, (A2.delta,))) == 6
    assert enumerate_left_divisors(ball, ()) == {()}
    divs = enumerate_left_divisors(ball, el(A2, "s1.s1.s2"))
    assert {A2.format(d) for d in divs} == {"1", "s1", "s1.s1", "s1.s1.s2"}
    for d in divs:
        assert A2.left_divides(d, el(A2, "s1.s1.s2"))


def test_brute_examples(A2):
    ball = Ball(A2, 6)
    P = par(A2, "[s1]")
    assert brute_head_P(ball, P, el(A2, "s1.s2.s1")) == el(A2, "s1")
    assert brute_ribbon_prefix(ball, P, ()) == ()
    g = el(A2, "s1.s2")
    assert brute_left_gcd(ball, g, g) == g
    assert brute_right_lcm(ball, el(A2, "s1"), el(A2, "s2")) == (A2.delta,)


def test_bound_exceeded(A2):
    ball = Ball(A2, 2)
    with pytest.raises(BoundExceeded):
        ball.left_divisors(el(A2, "s1.s1.s1"))


@pytest.mark.parametrize("fixture,bound", [("A2", 6), ("A3", 5), ("B2", 6), ("S4", 4)])
def test_oracle_equivalence(fixture, bound, request):
    results = oracle_equivalence(request.getfixturevalue(fixture), bound)
    bad = [r.to_dict() for r in results if not r.ok]
    assert not bad
    assert all(r.cases > 0 for r in results)


@pytest.mark.parametrize("fixture,bound", [("A2", 3), ("B2", 3), ("S4", 2)])
def test_lemma_suite_small_instances(fixture, bound, request):
    report = lemma_suite(request.getfixturevalue(fixture), bound)
    assert report.ok, [r.to_dict() for r in report.results if not r.ok]
    assert {r.name for r in report.results} == set(LEMMAS)
    assert all(r.cases > 0 for r in report.results if r.name != "positive_conjugacy")


def test_lemma_report_shape(A2):
    d = lemma_suite(A2, 1, only=["v_is_ribbon"]).to_dict()
    assert d["ok"] and d["lemmas"][0]["name"] == "v_is_ribbon"
    assert set(d["lemmas"][0]) >= {"name", "cases", "failures", "witness"}


def test_fault_injected_lattice_is_caught(A2):
    lat = A2.lattice.copy()
    lat.meet[3][5] = lat.meet[5][3] = 0      # meet(s1.s2, Delta) corrupted to 1
    M = GarsideMonoid(lat)
    report = lemma_suite(M, 2)
    failing = [r for r in report.results if not r.ok]
    assert failing
    assert all(r.witness is not None for r in failing if r.failures)
    assert any(not r.ok for r in oracle_equivalence(M, 4))
