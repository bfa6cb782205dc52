"""Argumentation frameworks: a finite directed attack graph over named arguments.

Arguments are identified by dense 0-based indices assigned in declaration
order; every index has a unique non-empty name. The attack relation is stored
three ways (pair set, per-argument attacker lists, per-argument attackee
lists) so that both directions of adjacency are O(1) to reach. Frameworks are
immutable after construction and safe to share between concurrent queries.
"""

import itertools
import os
import re
from functools import cached_property

import numpy as np

from .errors import ParseError, UndeclaredArgumentError


class ArgumentationFramework:
    """Immutable (Ar, att) graph with name table and transposed adjacency."""

    def __init__(self, names, attacks):
        """Build a framework from a name sequence and (attacker, target) index pairs.

        Duplicate attack pairs are deduplicated silently; duplicate or empty
        names are rejected. Self-attacks are permitted.
        """
        names = tuple(str(x) for x in names)
        seen = set()
        for name in names:
            if not name:
                raise ParseError("argument names must be non-empty")
            if name in seen:
                raise ParseError(f"duplicate argument name {name!r}")
            seen.add(name)
        n = len(names)
        pairs = set()
        for a, b in attacks:
            a = int(a)
            b = int(b)
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"attack ({a},{b}) out of range for {n} arguments")
            pairs.add((a, b))
        self.names = names
        self.n = n
        self.attacks = frozenset(pairs)
        self._name_to_index = {name: i for i, name in enumerate(names)}
        attackers = [[] for _ in range(n)]
        attackees = [[] for _ in range(n)]
        for a, b in sorted(pairs):
            attackers[b].append(a)
            attackees[a].append(b)
        self.attackers_of = tuple(tuple(sorted(lst)) for lst in attackers)
        self.attackees_of = tuple(tuple(lst) for lst in attackees)

    @classmethod
    def from_pairs(cls, names, name_pairs):
        """Build a framework from name-level attack pairs like ("a", "b")."""
        index = {name: i for i, name in enumerate(names)}
        if len(index) != len(names):
            raise ParseError("duplicate argument name")
        try:
            attacks = [(index[a], index[b]) for a, b in name_pairs]
        except KeyError as exc:
            raise UndeclaredArgumentError(
                f"attack references undeclared argument {exc.args[0]!r}"
            ) from None
        return cls(names, attacks)

    def index(self, name):
        """Index of a named argument; KeyError names the missing argument."""
        try:
            return self._name_to_index[name]
        except KeyError:
            raise KeyError(f"no argument named {name!r}") from None

    def name(self, i):
        return self.names[i]

    def __contains__(self, name):
        return name in self._name_to_index

    def attackers(self, x):
        """The set x⁻ of arguments attacking x."""
        return frozenset(self.attackers_of[x])

    def attackees(self, x):
        """The set x⁺ of arguments attacked by x."""
        return frozenset(self.attackees_of[x])

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, ArgumentationFramework):
            return NotImplemented
        return self.names == other.names and self.attacks == other.attacks

    def __hash__(self):
        return hash((self.names, self.attacks))

    def __repr__(self):
        return f"ArgumentationFramework(n={self.n}, attacks={len(self.attacks)})"

    # Flat CSR-style adjacency for the compiled kernel; built on first use.

    @cached_property
    def _csr_attackees(self):
        return _csr(self.n, self.attackees_of)

    @cached_property
    def _csr_attackers(self):
        return _csr(self.n, self.attackers_of)

    @cached_property
    def _in_degrees(self):
        return np.array([len(t) for t in self.attackers_of], dtype=np.int64)


def _csr(n, adjacency):
    indptr = np.zeros(n + 1, dtype=np.int64)
    for i, row in enumerate(adjacency):
        indptr[i + 1] = indptr[i] + len(row)
    total = int(indptr[n])
    indices = np.fromiter(
        itertools.chain.from_iterable(adjacency), dtype=np.int32, count=total
    )
    return indptr, indices


def parse_tgf(text):
    """Parse trivial graph format: names, a line containing "#", then edges.

    Blank lines are skipped. Edge lines hold exactly two declared names
    separated by whitespace.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    names = []
    pairs = []
    seen_hash = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if not seen_hash:
            if line == "#":
                seen_hash = True
            else:
                names.append(line)
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(
                f"line {lineno}: expected 'attacker target', got {line!r}"
            )
        pairs.append((tokens[0], tokens[1]))
    if not seen_hash:
        raise ParseError("missing '#' separator line")
    af = ArgumentationFramework.from_pairs(names, pairs)
    return af


def serialize_tgf(af):
    lines = list(af.names)
    lines.append("#")
    for a, b in sorted(af.attacks):
        lines.append(f"{af.names[a]} {af.names[b]}")
    return "\n".join(lines) + "\n"


_APX_FACT = re.compile(
    r"(arg|att)\s*\(\s*([^(),\s]+)\s*(?:,\s*([^(),\s]+)\s*)?\)\s*\."
)


def parse_apx(text):
    """Parse ASPARTIX facts: arg(name). and att(a,b). in any order.

    An att fact may precede the declarations of its arguments as long as
    both are declared somewhere in the file.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    names = []
    declared = set()
    pairs = []
    pos = 0
    length = len(text)
    while pos < length:
        if text[pos].isspace():
            pos += 1
            continue
        match = _APX_FACT.match(text, pos)
        if match is None:
            snippet = text[pos : pos + 20]
            raise ParseError(f"unrecognized input at {snippet!r}")
        kind, first, second = match.group(1), match.group(2), match.group(3)
        if kind == "arg":
            if second is not None:
                raise ParseError(f"arg takes one name, got arg({first},{second})")
            if first in declared:
                raise ParseError(f"duplicate argument name {first!r}")
            declared.add(first)
            names.append(first)
        else:
            if second is None:
                raise ParseError(f"att takes two names, got att({first})")
            pairs.append((first, second))
        pos = match.end()
    return ArgumentationFramework.from_pairs(names, pairs)


def serialize_apx(af):
    lines = [f"arg({name})." for name in af.names]
    for a, b in sorted(af.attacks):
        lines.append(f"att({af.names[a]},{af.names[b]}).")
    return "\n".join(lines) + "\n"


def load_af(path, fmt="auto"):
    """Read a framework from a .tgf or .apx file; fmt overrides autodetection."""
    if fmt == "auto":
        ext = os.path.splitext(path)[1].lower()
        if ext == ".tgf":
            fmt = "tgf"
        elif ext == ".apx":
            fmt = "apx"
        else:
            raise ParseError(
                f"cannot infer format from {path!r}; pass --format tgf or apx"
            )
    with open(path, "rb") as handle:
        text = handle.read()
    if fmt == "tgf":
        return parse_tgf(text)
    if fmt == "apx":
        return parse_apx(text)
    raise ParseError(f"unknown format {fmt!r}")
