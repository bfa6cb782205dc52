"""Labellings (total IN/OUT/UNDEC assignments) and certificate text.

A certificate is a (labelling, numbering) pair: the labelling commits a set
of arguments, the numbering witnesses in polynomial time that the commitment
is strongly admissible. The text format is four lines::

    in: A C
    out: B
    undec: D E F G H
    mm: A=1 B=2 C=3

Names are space-separated and sorted by argument index; numbering values are
natural numbers or "inf".
"""

import math
from dataclasses import dataclass, field
from enum import IntEnum

from .errors import MismatchedFrameworkError, ParseError

INFINITY = math.inf


class Label(IntEnum):
    UNDEC = 0
    IN = 1
    OUT = 2


UNDEC = Label.UNDEC
IN = Label.IN
OUT = Label.OUT


class Labelling:
    """Total map argument index -> Label over a fixed framework.

    Stored as one byte per argument (the Label values), so equality and
    copying are cheap and kernel outputs round-trip without conversion.
    """

    __slots__ = ("af", "codes", "_in", "_out", "_undec")

    def __init__(self, af, codes):
        codes = bytes(codes)
        if len(codes) != af.n:
            raise ValueError(f"labelling has {len(codes)} entries for {af.n} arguments")
        if any(c > 2 for c in codes):
            raise ValueError("label codes must be UNDEC/IN/OUT")
        self.af = af
        self.codes = codes
        self._in = None
        self._out = None
        self._undec = None

    @classmethod
    def from_sets(cls, af, in_args, out_args):
        """Build a labelling from IN and OUT index sets; the rest is UNDEC."""
        codes = bytearray(af.n)
        for x in in_args:
            codes[x] = IN
        for x in out_args:
            if codes[x] == IN:
                raise ValueError(f"argument {af.name(x)} labelled both IN and OUT")
            codes[x] = OUT
        return cls(af, codes)

    @classmethod
    def all_undec(cls, af):
        return cls(af, bytes(af.n))

    def label_of(self, x):
        return Label(self.codes[x])

    @property
    def in_args(self):
        if self._in is None:
            self._in = frozenset(i for i, c in enumerate(self.codes) if c == IN)
        return self._in

    @property
    def out_args(self):
        if self._out is None:
            self._out = frozenset(i for i, c in enumerate(self.codes) if c == OUT)
        return self._out

    @property
    def undec_args(self):
        if self._undec is None:
            self._undec = frozenset(i for i, c in enumerate(self.codes) if c == UNDEC)
        return self._undec

    def in_names(self):
        return [self.af.names[i] for i, c in enumerate(self.codes) if c == IN]

    def out_names(self):
        return [self.af.names[i] for i, c in enumerate(self.codes) if c == OUT]

    def undec_names(self):
        return [self.af.names[i] for i, c in enumerate(self.codes) if c == UNDEC]

    def same_framework(self, other):
        if self.af != other.af:
            raise MismatchedFrameworkError(
                "labellings belong to different frameworks"
            )

    def __eq__(self, other):
        if not isinstance(other, Labelling):
            return NotImplemented
        return self.af == other.af and self.codes == other.codes

    def __hash__(self):
        return hash((self.af, self.codes))

    def __repr__(self):
        return (
            f"Labelling(in={self.in_names()}, out={self.out_names()}, "
            f"undec={self.undec_names()})"
        )


@dataclass
class Certificate:
    """A labelling plus its min-max numbering (index -> value, inf allowed)."""

    lab: Labelling
    mm: dict


@dataclass
class ConstructResult(Certificate):
    """Certificate plus the bottom-up queue's enqueue/dequeue index orders."""

    enqueue_order: tuple = field(default_factory=tuple)
    dequeue_order: tuple = field(default_factory=tuple)


def format_mm_value(value):
    return "inf" if value == INFINITY else str(int(value))


def format_certificate(lab, mm):
    """Render the four-line certificate text (trailing newline included)."""
    af = lab.af
    parts = [
        "in: " + " ".join(lab.in_names()),
        "out: " + " ".join(lab.out_names()),
        "undec: " + " ".join(lab.undec_names()),
    ]
    entries = " ".join(
        f"{af.names[i]}={format_mm_value(mm[i])}" for i in sorted(mm)
    )
    parts.append("mm: " + entries)
    return "\n".join(line.rstrip() for line in parts) + "\n"


def parse_certificate(af, text):
    """Parse certificate text against a framework; returns (Labelling, mm).

    Structural problems (missing lines, unknown names, an argument labelled
    twice or not at all, malformed values) raise ParseError. Whether the
    numbering actually verifies is a separate question for the checker.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    sections = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("in", "out", "undec", "mm"):
            raise ParseError(f"unrecognized certificate line {line!r}")
        if key in sections:
            raise ParseError(f"duplicate certificate line {key!r}")
        sections[key] = rest.split()
    missing = {"in", "out", "undec", "mm"} - set(sections)
    if missing:
        raise ParseError(f"certificate is missing lines: {sorted(missing)}")

    codes = bytearray(af.n)
    assigned = [False] * af.n
    for key, code in (("in", IN), ("out", OUT), ("undec", UNDEC)):
        for name in sections[key]:
            if name not in af:
                raise ParseError(f"unknown argument name {name!r}")
            i = af.index(name)
            if assigned[i]:
                raise ParseError(f"argument {name!r} labelled more than once")
            assigned[i] = True
            codes[i] = code
    if not all(assigned):
        unlabelled = [af.names[i] for i, done in enumerate(assigned) if not done]
        raise ParseError(f"arguments missing a label: {unlabelled}")

    mm = {}
    for entry in sections["mm"]:
        name, sep, value = entry.partition("=")
        if not sep:
            raise ParseError(f"malformed numbering entry {entry!r}")
        if name not in af:
            raise ParseError(f"unknown argument name {name!r}")
        i = af.index(name)
        if i in mm:
            raise ParseError(f"argument {name!r} numbered more than once")
        if value == "inf":
            mm[i] = INFINITY
        else:
            try:
                mm[i] = int(value)
            except ValueError:
                raise ParseError(f"malformed numbering value {entry!r}") from None
    return Labelling(af, codes), mm
