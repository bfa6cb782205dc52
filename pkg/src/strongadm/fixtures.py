"""Two small frameworks used throughout the tests and docs.

fig1: eight arguments where B is attacked by both A and the self-stabilizing
G/H cycle, giving labellings of very different sizes for the same conclusion.
sq5: a five-argument chain with a feedback attack from E back to B, so B has
two defenders of very different depths.
"""

from .af import ArgumentationFramework

FIG1_ATTACKS = [
    ("A", "B"),
    ("H", "B"),
    ("B", "C"),
    ("C", "E"),
    ("D", "E"),
    ("E", "F"),
    ("G", "H"),
    ("H", "G"),
]

SQ5_ATTACKS = [
    ("A", "B"),
    ("B", "C"),
    ("C", "D"),
    ("D", "E"),
    ("E", "B"),
]


def fig1():
    return ArgumentationFramework.from_pairs("ABCDEFGH", FIG1_ATTACKS)


def sq5():
    return ArgumentationFramework.from_pairs("ABCDE", SQ5_ATTACKS)
