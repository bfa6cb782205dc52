"""Shared fixtures: kernel backends and the random-framework corpus.

The corpus is deterministic (fixed seed) so failures reproduce: ten edge
densities from 0.05 to 0.50, one hundred frameworks each, argument counts
uniform on [1, 12].
"""

import random

import pytest

from strongadm._kernels import available_backends
from strongadm.af import ArgumentationFramework

BACKENDS = available_backends()

DENSITIES = [d / 100 for d in range(5, 51, 5)]
CORPUS_SEED = 0x5AD1
PER_DENSITY = 100


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def random_af(rng, n, density):
    names = [f"a{i}" for i in range(n)]
    attacks = [
        (i, j) for i in range(n) for j in range(n) if rng.random() < density
    ]
    return ArgumentationFramework(names, attacks)


def build_corpus(seed=CORPUS_SEED, per_density=PER_DENSITY, n_lo=1, n_hi=12):
    rng = random.Random(seed)
    afs = []
    for density in DENSITIES:
        for _ in range(per_density):
            afs.append(random_af(rng, rng.randint(n_lo, n_hi), density))
    return afs


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus_enumerations(corpus):
    """(af, all strongly admissible labellings) for corpus members with n <= 8.

    The 3**n scan is the expensive half of the oracle cross-checks, so it is
    computed once per session and shared.
    """
    from strongadm.oracle import enumerate_all_strongly_admissible_labellings

    return [
        (af, enumerate_all_strongly_admissible_labellings(af))
        for af in corpus
        if af.n <= 8
    ]
