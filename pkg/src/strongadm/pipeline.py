"""Construct-then-prune pipeline and the four-way size/runtime comparison."""

import statistics
import time
from dataclasses import dataclass
from typing import Optional

from . import oracle
from .construct import construct_for, grounded_with_minmax
from .errors import NotInGroundedError, OracleTooLargeError
from .labelling import IN
from .prune import prune_unchecked
from .semantics import lab_size


def small_strongly_admissible(af, a, backend=None):
    """A relatively small strongly admissible labelling with a IN.

    Builds bottom-up until a is reached, then prunes top-down to the
    arguments a actually needs. The construction already guarantees the
    pruning preconditions, so the unchecked prune entry point is used.
    """
    built = construct_for(af, a, backend=backend)
    return prune_unchecked(af, a, built.lab, built.mm, backend=backend)


@dataclass
class ComparisonRow:
    """Sizes, size ratios and median runtimes for one query."""

    query: str
    grounded_size: int
    alg1_size: int
    alg3_size: int
    min_size: Optional[int]
    alg1_pct: float
    alg3_pct: float
    alg3_vs_min_pct: Optional[float]
    t_grounded_ns: int
    t_alg1_ns: int
    t_alg3_ns: int
    t_min_ns: Optional[int]


def _timed(fn, repeats):
    times = []
    result = None
    for _ in range(repeats):
        start = time.perf_counter_ns()
        result = fn()
        times.append(time.perf_counter_ns() - start)
    return result, int(statistics.median(times))


def compare(af, a, with_oracle=True, repeats=5, limit=None, backend=None):
    """Size and runtime comparison: grounded vs bottom-up vs pruned vs minimal.

    Times each method around the solver call only (median of `repeats`
    monotonic-clock measurements, in nanoseconds). The brute-force minimum is
    only computed when with_oracle is set; past the oracle size limit that
    raises OracleTooLargeError.
    """
    if limit is None:
        limit = oracle.DEFAULT_LIMIT
    grounded, t_grounded = _timed(lambda: grounded_with_minmax(af, backend=backend), repeats)
    if grounded.lab.codes[a] != IN:
        raise NotInGroundedError(af.names[a])
    alg1, t_alg1 = _timed(lambda: construct_for(af, a, backend=backend), repeats)
    alg3, t_alg3 = _timed(
        lambda: small_strongly_admissible(af, a, backend=backend), repeats
    )
    grounded_size = lab_size(grounded.lab)
    alg1_size = lab_size(alg1.lab)
    alg3_size = lab_size(alg3.lab)

    min_size = None
    t_min = None
    alg3_vs_min_pct = None
    if with_oracle:
        if af.n > limit.subset_max_n:
            raise OracleTooLargeError(af.n, limit.subset_max_n)
        (_, _, min_size), t_min = _timed(
            lambda: oracle.minimal_strongly_admissible_for(af, a, limit), repeats
        )
        alg3_vs_min_pct = round(100.0 * alg3_size / min_size, 1)

    return ComparisonRow(
        query=af.names[a],
        grounded_size=grounded_size,
        alg1_size=alg1_size,
        alg3_size=alg3_size,
        min_size=min_size,
        alg1_pct=round(100.0 * alg1_size / grounded_size, 1),
        alg3_pct=round(100.0 * alg3_size / grounded_size, 1),
        alg3_vs_min_pct=alg3_vs_min_pct,
        t_grounded_ns=t_grounded,
        t_alg1_ns=t_alg1,
        t_alg3_ns=t_alg3,
        t_min_ns=t_min,
    )
