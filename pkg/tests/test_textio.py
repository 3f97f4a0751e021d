from fractions import Fraction as F
from pathlib import Path

import pytest

from binperiod import DiscreteSignal, ParseError, RealSignal, pt
from binperiod.perturb import SetFlat, SetInstant, SetInterval, SetProgression, SetTrain, ShiftBreak, ShiftInitial
from binperiod.textio import parse_edit_script, parse_flow, parse_signal, write_signal

import corpus as C

DATA = Path(__file__).parent / "data"


def test_data_files():
    assert parse_signal((DATA / "five_train.rsig").read_text()) == C.five_train()
    assert parse_signal((DATA / "const.dsig").read_text()) == DiscreteSignal.lasso([], ["01"])
    fs = parse_flow((DATA / "two_gate.flow").read_text())
    assert fs.init == pt("00") and fs.alpha.cycle == (pt("11"),)


def test_round_trip(lassos, reals):
    for sig in lassos[:50] + reals[:50]:
        back = parse_signal(write_signal(sig))
        assert back == sig and back.canonical() == sig.canonical()


def test_write_is_stable():
    text = write_signal(C.ray_train())
    assert write_signal(parse_signal(text)) == text


@pytest.mark.parametrize("text", [
    "dsignal n=2\nprefix:\ncycle: 011\n",
    "dsignal n=1\nprefix: 0\n",
    "rsignal n=1\ninitial: 1\ntransient: 2:0 1:1\n",
    "rsignal n=1\ninitial: 1\ntail: anchor=0 period=-1 pattern: 0:1\n",
    "signal n=1\n",
    "dsignal n=1\nprefix:\ncycle: 1\ncolour: red\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_signal(text, "bad.sig")


def test_parse_error_carries_location():
    with pytest.raises(ParseError) as info:
        parse_signal("dsignal n=2\nprefix:\ncycle: 0x\n", "f.dsig")
    assert "f.dsig" in str(info.value) and "3" in str(info.value)


def test_edit_scripts():
    d = parse_edit_script("set k=2 v=10\nset-progression k0=5 d=3 v=00\n", 2)
    assert d == [SetInstant(2, pt("10")), SetProgression(5, 3, pt("00"))]
    r = parse_edit_script("set-interval [1/2,inf) v=1\nset-train [0,1) T=3 v=0\n"
                          "set-flat t=4 v=1\nshift t=6 by=-1/2\nshift-t0 +1/2\n", 1)
    assert r == [SetInterval(F(1, 2), None, pt("1")), SetTrain(F(0), F(1), F(3), pt("0")),
                 SetFlat(F(4), pt("1")), ShiftBreak(F(6), F(-1, 2)), ShiftInitial(F(1, 2))]
    with pytest.raises(ParseError):
        parse_edit_script("set k=1 v=1\nshift-t0 1\n", 1)
    with pytest.raises(ParseError):
        parse_edit_script("set k=1\n", 1)
