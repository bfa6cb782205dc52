"""Brute-force ground truth, deliberately separate from the fast solvers.

Two independent routes are provided and cross-checked in the tests:

* subset enumeration with the recursive-defense check (a set is strongly
  admissible iff iterating "defended within the set" from nothing recovers
  the whole set), and
* full 3ⁿ labelling enumeration filtered through the labelling-level check.

Both are exponential on purpose and guarded by size limits.
"""

import itertools
from dataclasses import dataclass

from .errors import NotInGroundedError, OracleTooLargeError
from .labelling import INFINITY, Labelling
from .semantics import compute_minmax, grounded_extension_fixpoint


@dataclass(frozen=True)
class OracleLimit:
    """Size caps: 2ⁿ subset scans stay cheap longer than 3ⁿ labelling scans."""

    subset_max_n: int = 16
    labelling_max_n: int = 8


DEFAULT_LIMIT = OracleLimit()


def _subset_checker(af):
    """Bitmask test: is a given subset of arguments strongly admissible?

    Iterates T ↦ {x in S : every attacker of x is attacked by T} from the
    empty set; S qualifies exactly when the fixpoint is S itself.
    """
    n = af.n
    attacker_mask = [0] * n
    for y in range(n):
        m = 0
        for z in af.attackers_of[y]:
            m |= 1 << z
        attacker_mask[y] = m
    attackers_of = af.attackers_of

    def check(members, full_mask):
        t = 0
        while True:
            new = t
            for x in members:
                bit = 1 << x
                if new & bit:
                    continue
                for y in attackers_of[x]:
                    if not attacker_mask[y] & t:
                        break
                else:
                    new |= bit
            if new == t:
                return t == full_mask
            t = new

    return check


def enumerate_strongly_admissible_sets(af, limit=DEFAULT_LIMIT):
    """All strongly admissible sets, ascending by size then lexicographic.

    Only subsets of the grounded extension are scanned (nothing outside it
    can belong to a strongly admissible set); the restriction is itself
    cross-validated against the 3ⁿ route in the tests.
    """
    if af.n > limit.subset_max_n:
        raise OracleTooLargeError(af.n, limit.subset_max_n)
    check = _subset_checker(af)
    pool = sorted(grounded_extension_fixpoint(af))
    found = []
    for k in range(len(pool) + 1):
        for combo in itertools.combinations(pool, k):
            mask = 0
            for x in combo:
                mask |= 1 << x
            if check(combo, mask):
                found.append(frozenset(combo))
    return found


def minimal_strongly_admissible_for(af, a, limit=DEFAULT_LIMIT):
    """Globally smallest strongly admissible labelling with a IN.

    Candidates are (S, attackers-of-S, rest) over strongly admissible
    in-sets S containing a: a strongly admissible labelling must label all
    of S⁻ OUT, and dropping every other OUT commitment keeps it strongly
    admissible, so this form never misses the optimum. Size is measured as
    committed arguments, ties go to the lexicographically least in-set.

    Returns (labelling, numbering, size).
    """
    if af.n > limit.subset_max_n:
        raise OracleTooLargeError(af.n, limit.subset_max_n)
    grounded = grounded_extension_fixpoint(af)
    if a not in grounded:
        raise NotInGroundedError(af.names[a])
    check = _subset_checker(af)
    pool = sorted(grounded)
    best = None  # (size, in-tuple)
    for k in range(1, len(pool) + 1):
        if best is not None and k >= best[0]:
            break
        for combo in itertools.combinations(pool, k):
            if a not in combo:
                continue
            mask = 0
            for x in combo:
                mask |= 1 << x
            if not check(combo, mask):
                continue
            out_args = set()
            for x in combo:
                out_args.update(af.attackers_of[x])
            candidate = (k + len(out_args), combo)
            if best is None or candidate < best:
                best = candidate
    size, in_args = best
    out_args = set()
    for x in in_args:
        out_args.update(af.attackers_of[x])
    lab = Labelling.from_sets(af, in_args, out_args)
    return lab, compute_minmax(af, lab), size


def enumerate_all_strongly_admissible_labellings(af, limit=DEFAULT_LIMIT):
    """Every strongly admissible labelling, by exhaustive 3ⁿ scan."""
    if af.n > limit.labelling_max_n:
        raise OracleTooLargeError(af.n, limit.labelling_max_n, "labelling enumeration")
    n = af.n
    attackers_of = af.attackers_of
    found = []
    for codes in itertools.product((0, 1, 2), repeat=n):
        admissible = True
        for x in range(n):
            c = codes[x]
            if c == 1:
                if any(codes[y] != 2 for y in attackers_of[x]):
                    admissible = False
                    break
            elif c == 2:
                if not any(codes[y] == 1 for y in attackers_of[x]):
                    admissible = False
                    break
        if not admissible:
            continue
        lab = Labelling(af, bytes(codes))
        mm = compute_minmax(af, lab)
        if all(v != INFINITY for v in mm.values()):
            found.append(lab)
    return found
