from __future__ import annotations

import json

import pytest

from garside_ribbons import build_artin, build_dual, build_from_spec, load_spec
from garside_ribbons.errors import GroupNotFinite, InvalidCoxeterElement, InvalidSpec
from garside_ribbons.presentations import (
    check_assumption_1,
    check_factors_are_left_divisors,
    check_square_free,
    coxeter_matrix,
)

from conftest import el


@pytest.mark.parametrize("name,simples,atoms,delta_len", [
    ("A2", 6, 2, 3), ("A3", 24, 3, 6), ("B2", 8, 2, 4), ("B3", 48, 3, 9),
    ("A4", 120, 4, 10), ("I2(5)", 10, 2, 5), ("G2", 12, 2, 6), ("D4", 192, 4, 12),
])
def test_artin_counts(name, simples, atoms, delta_len):
    # derived: |W| and number of reflections (= length of the longest element)
    lat = build_artin(name).lattice
    assert (lat.n, len(lat.atoms), lat.length[lat.delta]) == (simples, atoms, delta_len)


@pytest.mark.parametrize("n,simples", [(2, 2), (3, 5), (4, 14), (5, 42)])
def test_dual_counts_are_catalan(n, simples):
    lat = build_dual(n).lattice
    assert lat.n == simples
    assert len(lat.atoms) == n * (n - 1) // 2


def test_dual_s5_numbering_matches_transposition_order(S5):
    # numbering for n = 5: (1,2), (2,3), (3,4), (4,5), (1,3), (2,4), (3,5), (1,4), (2,5), (1,5)
    assert S5.lattice.atom_names == [f"s{i}" for i in range(1, 11)]
    assert S5.lattice.transpositions == [(1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (2, 4),
                                         (3, 5), (1, 4), (2, 5), (1, 5)]
    assert S5.format((S5.delta,)) == "s1.s2.s3.s4"


def test_dual_with_explicit_cycle():
    M = build_dual(4, coxeter_cycle=[1, 3, 2, 4])
    assert M.lattice.n == 14
    with pytest.raises(InvalidCoxeterElement):
        build_dual(4, coxeter_cycle=[1, 2, 3])
    with pytest.raises(InvalidCoxeterElement):
        build_dual(4, coxeter_word=["s1", "s1", "s2"])


def test_infinite_or_bad_coxeter_types():
    with pytest.raises(GroupNotFinite):
        build_artin([[1, 3, 3], [3, 1, 3], [3, 3, 1]])     # affine A2
    with pytest.raises(InvalidSpec):
        coxeter_matrix("Z9")


def test_spec_files(tmp_path):
    p = tmp_path / "dual.json"
    p.write_text(json.dumps({"kind": "dual", "n": 5, "coxeter_word": ["s1", "s2", "s3", "s4"]}))
    assert load_spec(p).lattice.n == 42
    assert build_from_spec({"kind": "artin", "type": {"matrix": [[1, 4], [4, 1]]}}).lattice.n == 8
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(InvalidSpec):
        load_spec(bad)
    with pytest.raises(InvalidSpec):
        build_from_spec({"kind": "other"})


@pytest.mark.parametrize("fixture", ["A2", "A3", "B2", "S4", "S5"])
def test_assumption_1_exhaustive(fixture, request):
    M = request.getfixturevalue(fixture)
    report = check_assumption_1(M)
    assert report.ok and report.exhaustive
    assert report.cases == 2 ** len(M.atoms)


def test_assumption_1_example_dual_s5(S5):
    # lcm(s5, s6) is Delta of the parabolic on s1, s2, s3, s5, s6, s8
    from garside_ribbons import parabolic_closure
    lcm = S5.right_lcm(el(S5, "s5"), el(S5, "s6"))
    P = parabolic_closure(S5, [S5.atoms[4], S5.atoms[5]])
    assert sorted(S5.lattice.atom_name(a) for a in P.atoms) == ["s1", "s2", "s3", "s5", "s6", "s8"]
    assert lcm == (P.delta,)


@pytest.mark.parametrize("fixture", ["A2", "A3", "S4", "S5"])
def test_square_free(fixture, request):
    assert check_square_free(request.getfixturevalue(fixture)).ok


def test_factors_are_left_divisors_holds_for_dual_only(S4, S5, A3):
    assert check_factors_are_left_divisors(S4).ok
    assert check_factors_are_left_divisors(S5).ok
    # in A3, s1 is a factor of s2.s1 but does not left-divide it
    assert not check_factors_are_left_divisors(A3).ok
