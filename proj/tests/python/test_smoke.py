import pytest

import orelab


def test_construct_and_units():
    r = orelab.construct("zmod(6)")
    assert r.order == 6
    assert r.units() == [1, 5]
    assert r.is_commutative()
    assert orelab.construct("product(gf(2),gf(3))").hash() != r.hash()


def test_profile_zmod6():
    p = orelab.profile("zmod(6)")
    assert p["verdict"]["localizable"] is True
    assert len(p["max_den"]) == 2
    assert sorted(len(s["set"]) for s in p["max_den"]) == [3, 4]


def test_profile_zmod4_not_localizable():
    p = orelab.profile("zmod(4)")
    assert p["verdict"]["localizable"] is False
    assert p["verdict"]["witness"] is not None


def test_ore_report():
    rep = orelab.ore("zmod(6)", [1, 3])
    assert rep["left_ore"]["holds"] is True
    assert rep["left_denominator"]["holds"] is True
    assert rep["ass"] == [0, 2, 4]
    assert rep["core"] == [3]


def test_localize_order():
    fr = orelab.localize("zmod(6)", [3])
    assert fr["ring"]["order"] == 2


def test_errors_map_to_exceptions():
    with pytest.raises(orelab.BadSpec):
        orelab.construct("nonsense(2)")
    with pytest.raises(orelab.SizeGuardExceeded):
        orelab.construct("matrix(gf(3),3)")
    with pytest.raises(orelab.ZeroAbsorbed):
        orelab.ore("zmod(6)", [2, 3])
    with pytest.raises(orelab.NotDenominator):
        t2 = orelab.construct("upper_triangular(gf(2),2)")
        for e in range(t2.order):
            try:
                orelab.localize(t2, [e])
            except orelab.ZeroAbsorbed:
                continue
        raise AssertionError("unreachable if some set is not a denominator set")
    assert issubclass(orelab.SizeGuardExceeded, orelab.Error)


def test_verify_and_batch():
    checks = orelab.verify(orelab.construct("zmod(4)"), ["29Nov12"])
    assert checks and all(passed for _, _, passed, _ in checks)
    with pytest.raises(ValueError):
        orelab.verify(orelab.construct("zmod(4)"), ["nope"])
    one, code1 = orelab.batch_summary(["zmod(6)", "zmod(4)", "gf(4)"], 1)
    four, code4 = orelab.batch_summary(["zmod(6)", "zmod(4)", "gf(4)"], 4)
    assert one == four and code1 == code4 == 0


def test_text_round_trip():
    r = orelab.construct("matrix(gf(2),2)")
    assert orelab.from_text(r.to_text()).hash() == r.hash()
