"""Definitional semantics: conflict-freeness, defense, grounded fixpoint,
labelling predicates, the labelling order, and min-max numberings.

Everything here is a pure function of immutable inputs and follows the
textbook definitions directly; the fast bottom-up solvers live elsewhere and
are tested against these.
"""

import heapq

from .errors import MismatchedFrameworkError, NotAdmissibleError, NotConflictFreeError
from .labelling import IN, INFINITY, OUT, UNDEC, Labelling


def is_conflict_free(af, s):
    """True iff no member of s attacks a member of s."""
    s = frozenset(s)
    return not any(b in s for a in s for b in af.attackees_of[a])


def defends(af, s, x):
    """True iff every attacker of x is attacked by some member of s."""
    s = frozenset(s)
    for y in af.attackers_of[x]:
        if not any(z in s for z in af.attackers_of[y]):
            return False
    return True


def characteristic(af, s):
    """The set of arguments defended by s."""
    s = frozenset(s)
    return frozenset(x for x in range(af.n) if defends(af, s, x))


def grounded_extension_fixpoint(af):
    """Least fixpoint of the characteristic function, iterated from the empty set."""
    current = frozenset()
    while True:
        nxt = characteristic(af, current)
        if nxt == current:
            return current
        current = nxt


def args2lab(af, s):
    """Labelling (s, s⁺, rest); rejects sets that are not conflict-free."""
    s = frozenset(s)
    if not is_conflict_free(af, s):
        raise NotConflictFreeError("set is not conflict-free")
    codes = bytearray(af.n)
    for x in s:
        codes[x] = IN
    for x in s:
        for y in af.attackees_of[x]:
            codes[y] = OUT
    return Labelling(af, codes)


def lab2args(lab):
    return lab.in_args


def is_admissible_labelling(af, lab):
    """Every IN argument has all attackers OUT; every OUT argument has an IN attacker."""
    codes = lab.codes
    for x in range(af.n):
        c = codes[x]
        if c == IN:
            if any(codes[y] != OUT for y in af.attackers_of[x]):
                return False
        elif c == OUT:
            if not any(codes[y] == IN for y in af.attackers_of[x]):
                return False
    return True


def is_complete_labelling(af, lab):
    """Admissible, and every UNDEC argument has an UNDEC attacker but no IN attacker."""
    if not is_admissible_labelling(af, lab):
        return False
    codes = lab.codes
    for x in range(af.n):
        if codes[x] == UNDEC:
            attackers = af.attackers_of[x]
            if any(codes[y] == IN for y in attackers):
                return False
            if not any(codes[y] == UNDEC for y in attackers):
                return False
    return True


def lab_leq(lab1, lab2):
    """The labelling order: in(lab1) ⊆ in(lab2) and out(lab1) ⊆ out(lab2)."""
    lab1.same_framework(lab2)
    for c1, c2 in zip(lab1.codes, lab2.codes):
        if c1 != UNDEC and c1 != c2:
            return False
    return True


def lab_size(lab):
    """Number of committed (non-UNDEC) arguments."""
    return len(lab.codes) - lab.codes.count(UNDEC)


def compute_minmax(af, lab):
    """The unique min-max numbering of an admissible labelling.

    An IN argument scores max of its OUT attackers + 1 (max of nothing is 0);
    an OUT argument scores min of its IN attackers + 1 (min of nothing is
    infinity). Computed by priority-driven propagation: values are finalized
    in non-decreasing order, so the first finalized IN attacker of an OUT
    argument fixes its min, and an IN argument is finalized once all its OUT
    attackers are, at their max + 1. Whatever is never finalized is infinite.
    """
    if not is_admissible_labelling(af, lab):
        raise NotAdmissibleError("min-max numbering requires an admissible labelling")
    codes = lab.codes
    n = af.n
    finalized = bytearray(n)
    value = {}
    remaining = [0] * n  # per IN argument: OUT attackers not yet finalized
    best = [0] * n  # per IN argument: max over finalized OUT attackers
    heap = []
    for x in range(n):
        if codes[x] == IN:
            count = sum(1 for y in af.attackers_of[x] if codes[y] == OUT)
            remaining[x] = count
            if count == 0:
                heap.append((1, x))
    heapq.heapify(heap)
    while heap:
        v, x = heapq.heappop(heap)
        if finalized[x]:
            continue
        finalized[x] = 1
        value[x] = v
        if codes[x] == IN:
            for y in af.attackees_of[x]:
                if codes[y] == OUT and not finalized[y]:
                    heapq.heappush(heap, (v + 1, y))
        else:
            for y in af.attackees_of[x]:
                if codes[y] == IN and not finalized[y]:
                    if v > best[y]:
                        best[y] = v
                    remaining[y] -= 1
                    if remaining[y] == 0:
                        heapq.heappush(heap, (best[y] + 1, y))
    return {
        x: value.get(x, INFINITY) for x in range(n) if codes[x] != UNDEC
    }


def verify_minmax(af, lab, mm):
    """Clause-by-clause check that mm is the min-max numbering of lab.

    The domain must be exactly the IN/OUT arguments and both defining
    equations must hold pointwise.
    """
    return not minmax_violations(af, lab, mm)


def minmax_violations(af, lab, mm):
    """Human-readable list of numbering violations, in index order."""
    codes = lab.codes
    problems = []
    labelled = {x for x in range(af.n) if codes[x] != UNDEC}
    for x in sorted(set(mm) - labelled):
        problems.append(f"{af.names[x]} is numbered but labelled UNDEC")
    for x in sorted(labelled - set(mm)):
        problems.append(f"{af.names[x]} is labelled but has no number")
    if problems:
        return problems
    for x in range(af.n):
        c = codes[x]
        if c == IN:
            expected = (
                max((mm[y] for y in af.attackers_of[x] if codes[y] == OUT), default=0)
                + 1
            )
        elif c == OUT:
            expected = (
                min(
                    (mm[y] for y in af.attackers_of[x] if codes[y] == IN),
                    default=INFINITY,
                )
                + 1
            )
        else:
            continue
        if mm[x] != expected:
            problems.append(
                f"{af.names[x]}: expected {_show(expected)}, certificate says {_show(mm[x])}"
            )
    return problems


def _show(value):
    return "inf" if value == INFINITY else str(int(value))


def is_strongly_admissible_labelling(af, lab):
    """Admissible with an everywhere-finite min-max numbering."""
    if not is_admissible_labelling(af, lab):
        return False
    mm = compute_minmax(af, lab)
    return all(v != INFINITY for v in mm.values())


def is_strongly_admissible_set(af, s):
    """True iff s is conflict-free and (s, s⁺, rest) is strongly admissible."""
    s = frozenset(s)
    if not is_conflict_free(af, s):
        return False
    return is_strongly_admissible_labelling(af, args2lab(af, s))
