import json
from fractions import Fraction

import pytest

import galg

Q = galg.Ring("q")
F2 = galg.Ring("fp:2")
Z4 = galg.Ring("zn:4")


def test_generators_and_json_round_trip():
    g = galg.Groupoid.generate("action:z2:swap01fix2")
    assert (g.n_objects, g.n_arrows) == (3, 6)
    assert g.orbits() == [[0, 1], [2]]
    h = galg.Groupoid.from_json(g.to_json())
    assert h.to_json() == g.to_json()
    assert galg.validate_json(g.to_json()) == []


def test_malformed_inputs_raise():
    with pytest.raises(ValueError):
        galg.Groupoid.from_json("{not json")
    with pytest.raises(ValueError):
        galg.Groupoid.generate("pair:0")
    with pytest.raises(ValueError):
        galg.Ring("fp:4")
    bad = json.loads(galg.Groupoid.generate("group:z2").to_json())
    bad["inv"] = [0, 0]
    assert galg.validate_json(json.dumps(bad))


def test_scalars_cross_as_python_numbers():
    g = galg.Groupoid.generate("group:z2")
    assert galg.convolve(g, Q, [1, Fraction(1, 2)], [1, 1]) == [Fraction(3, 2)] * 2
    assert galg.convolve(g, F2, [1, 1], [1, 1]) == [0, 0]
    assert galg.involution(g, Z4, [1, 3]) == [1, 3]
    assert galg.indicator(g, [1], Z4) == [0, 1]


def test_primitive_ideals_of_small_examples():
    for n in (1, 2, 3):
        ideals = galg.enumerate_primitive_ideals(galg.Groupoid.generate(f"pair:{n}"), Q)
        assert len(ideals) == 1 and ideals[0].is_zero
    z2 = galg.Groupoid.generate("group:z2")
    ideals = galg.enumerate_primitive_ideals(z2, Q)
    assert sorted(i.basis[0] for i in ideals) == [[1, -1], [1, 1]]
    (m,) = galg.enumerate_primitive_ideals(z2, Z4)
    assert m == galg.ideal(z2, Z4, [[2, 0], [1, 1]])
    assert sorted(galg.simple_module_dims(galg.Groupoid.generate("group:z3"), 0, F2)) == [1, 2]


def test_induction_and_disintegration():
    g = galg.Groupoid.generate("action:z2:swap01fix2")
    rho = galg.induce(g, 2, "sign", Q)
    assert rho.dim == 1 and galg.is_simple(rho)
    assert galg.annihilator(rho) == galg.induced_annihilator_direct(g, 2, "sign", Q)
    reg = galg.regular_rep(g, F2)
    assert galg.is_isomorphic(galg.sections(reg), reg)
    sheaf = galg.sheaf(reg)
    assert [s["dim"] for s in sheaf["stalks"]] == [2, 2, 2]
    assert galg.verify_disintegration(reg)["verdict"] == "verified"


def test_reports():
    z2 = galg.Groupoid.generate("group:z2")
    for I in galg.enumerate_all_ideals(z2, F2):
        report = galg.verify_ideal_is_intersection(I)
        assert report["verdict"] == "verified"
        assert "wall_seconds" not in report
    assert galg.verify_primitive_ideals(z2, Z4)["verdict"] == "verified"
    assert galg.verify_primitive_ideals(z2, Q)["verdict"] == "skipped"
    assert galg.verify_induced_from_simples(z2, Q)["verdict"] == "verified"


def test_bound_is_enforced():
    g = galg.Groupoid.generate("action:s3:s3-triangle")
    with pytest.raises(galg.BoundExceeded):
        galg.primitive_ideal_oracle(g, F2, bound=100)
