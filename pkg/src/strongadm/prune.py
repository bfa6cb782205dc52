"""Top-down pruning of a strongly admissible labelling.

Keeps only what the query argument actually needs: the argument itself,
its attackers, for each of those one minimally numbered IN defender, and
so on down to the unattacked arguments. The numbering is inherited — the
kept arguments keep exactly the numbers they came in with.
"""

import numpy as np

from . import _kernels
from .errors import PreconditionError
from .labelling import IN, Certificate, Labelling
from .semantics import is_strongly_admissible_labelling, verify_minmax


def prune_unchecked(af, a, lab_in, mm_in, backend=None):
    """Prune without validating the input.

    The caller vouches that lab_in is strongly admissible over af, labels a
    IN, and that mm_in is its (finite) min-max numbering. Intended for
    pipelines whose construction step already guarantees this, and for
    benchmarking.
    """
    name = _kernels.resolve_backend(backend)
    if name == "c":
        indptr, indices = af._csr_attackers
        mm_arr = np.zeros(af.n, dtype=np.int64)
        for i, v in mm_in.items():
            mm_arr[i] = v
        lab_arr = np.frombuffer(lab_in.codes, dtype=np.uint8)
        labels, mm = _kernels._ckernel.prune(af.n, indptr, indices, lab_arr, mm_arr, a)
        codes = labels.tobytes()
        mm_values = mm.tolist()
    else:
        mm_list = [0] * af.n
        for i, v in mm_in.items():
            mm_list[i] = v
        labels, mm_values = _kernels._pykernel.prune(
            af.n, af.attackers_of, lab_in.codes, mm_list, a
        )
        codes = bytes(labels)
    mm = {i: v for i, v in enumerate(mm_values) if codes[i] != 0}
    return Certificate(Labelling(af, codes), mm)


def prune(af, a, lab_in, mm_in, backend=None):
    """Checked pruning: validates every precondition before running.

    Raises PreconditionError naming the failed clause. The validation is
    polynomial but not free; use prune_unchecked when the input provably
    satisfies the contract.
    """
    if lab_in.af != af:
        raise PreconditionError("labelling belongs to a different framework")
    if lab_in.codes[a] != IN:
        raise PreconditionError(
            f"main argument {af.names[a]} is not labelled IN"
        )
    if not is_strongly_admissible_labelling(af, lab_in):
        raise PreconditionError("input labelling is not strongly admissible")
    if not verify_minmax(af, lab_in, mm_in):
        raise PreconditionError(
            "numbering is not the min-max numbering of the input labelling"
        )
    return prune_unchecked(af, a, lab_in, mm_in, backend=backend)
