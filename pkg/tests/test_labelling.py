import pytest

from strongadm.errors import MismatchedFrameworkError, ParseError
from strongadm.fixtures import fig1, sq5
from strongadm.labelling import (
    IN,
    INFINITY,
    OUT,
    UNDEC,
    Label,
    Labelling,
    format_certificate,
    parse_certificate,
)


def test_label_codes_are_stable():
    # kernel byte encoding: undec=0, in=1, out=2
    assert (int(UNDEC), int(IN), int(OUT)) == (0, 1, 2)
    assert Label(2) is Label.OUT


def test_from_sets_and_views():
    af = fig1()
    lab = Labelling.from_sets(af, {0, 2}, {1})
    assert lab.in_names() == ["A", "C"]
    assert lab.out_names() == ["B"]
    assert lab.undec_names() == ["D", "E", "F", "G", "H"]
    assert lab.in_args == frozenset({0, 2})
    assert lab.label_of(1) is Label.OUT
    assert lab.label_of(3) is Label.UNDEC


def test_from_sets_rejects_double_label():
    af = sq5()
    with pytest.raises(ValueError):
        Labelling.from_sets(af, {0}, {0})


def test_codes_validated():
    af = sq5()
    with pytest.raises(ValueError):
        Labelling(af, b"\x00\x01")
    with pytest.raises(ValueError):
        Labelling(af, b"\x00\x01\x02\x03\x00")


def test_equality_is_per_framework():
    lab_a = Labelling.from_sets(fig1(), {0}, set())
    lab_b = Labelling.from_sets(fig1(), {0}, set())
    lab_c = Labelling.from_sets(fig1(), {3}, set())
    assert lab_a == lab_b
    assert hash(lab_a) == hash(lab_b)
    assert lab_a != lab_c
    with pytest.raises(MismatchedFrameworkError):
        lab_a.same_framework(Labelling.all_undec(sq5()))


def test_format_matches_documented_layout():
    af = fig1()
    lab = Labelling.from_sets(af, {0, 2}, {1})
    text = format_certificate(lab, {0: 1, 1: 2, 2: 3})
    assert text == "in: A C\nout: B\nundec: D E F G H\nmm: A=1 B=2 C=3\n"


def test_format_writes_inf():
    af = sq5()
    lab = Labelling.from_sets(af, {0}, {1})
    text = format_certificate(lab, {0: 1, 1: INFINITY})
    assert "mm: A=1 B=inf" in text


def test_parse_roundtrip():
    af = fig1()
    lab = Labelling.from_sets(af, {0, 2, 3, 5}, {1, 4})
    mm = {0: 1, 1: 2, 2: 3, 3: 1, 4: 2, 5: 3}
    lab2, mm2 = parse_certificate(af, format_certificate(lab, mm))
    assert lab2 == lab
    assert mm2 == mm


def test_parse_roundtrip_with_infinities():
    af = fig1()
    lab = Labelling.from_sets(af, {0, 2, 5, 6}, {1, 4, 7})
    mm = {0: 1, 1: 2, 2: 3, 4: 4, 5: 5, 6: INFINITY, 7: INFINITY}
    lab2, mm2 = parse_certificate(af, format_certificate(lab, mm))
    assert lab2 == lab
    assert mm2 == mm


def test_parse_accepts_empty_sections():
    af = sq5()
    lab, mm = parse_certificate(af, "in:\nout:\nundec: A B C D E\nmm:\n")
    assert lab == Labelling.all_undec(af)
    assert mm == {}


@pytest.mark.parametrize(
    "text",
    [
        "out: B\nundec: D\nmm:\n",  # missing in line
        "in: A\nin: C\nout:\nundec:\nmm:\n",  # duplicate section
        "in: Z\nout:\nundec: A B C D E\nmm:\n",  # unknown name
        "in: A\nout: A\nundec: B C D E\nmm:\n",  # double label
        "in: A\nout:\nundec: B C D\nmm:\n",  # E unlabelled
        "in: A\nout:\nundec: B C D E\nmm: A\n",  # malformed entry
        "in: A\nout:\nundec: B C D E\nmm: A=x\n",  # malformed value
        "in: A\nout:\nundec: B C D E\nmm: A=1 A=2\n",  # numbered twice
        "hello\n",  # unknown line
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_certificate(sq5(), text)
