"""Bottom-up construction of a strongly admissible labelling and its
min-max numbering, stopping as soon as the query argument is labelled IN.

The FIFO queue discipline matters: arguments are numbered as they are
reached, and a first-in-first-out frontier is what makes those numbers
come out correct (dequeue order is non-descending in the numbering).
"""

from . import _kernels
from .errors import NotInGroundedError
from .labelling import IN, ConstructResult, Labelling


def _run(af, main, backend, on_iteration):
    name = _kernels.resolve_backend(backend)
    if on_iteration is not None:
        name = "py"
    if name == "c":
        indptr, indices = af._csr_attackees
        labels, mm, enq, deq = _kernels._ckernel.construct(
            af.n, indptr, indices, af._in_degrees, main
        )
        codes = labels.tobytes()
        mm_values = mm.tolist()
        enqueue = tuple(enq.tolist())
        dequeue = tuple(deq.tolist())
    else:
        in_degrees = [len(t) for t in af.attackers_of]
        labels, mm_values, queue, head = _kernels._pykernel.construct(
            af.n, af.attackees_of, in_degrees, main, on_iteration
        )
        codes = bytes(labels)
        enqueue = tuple(queue)
        dequeue = tuple(queue[:head])
    mm = {i: v for i, v in enumerate(mm_values) if codes[i] != 0}
    return ConstructResult(Labelling(af, codes), mm, enqueue, dequeue)


def construct_for(af, a, backend=None, on_iteration=None):
    """Strongly admissible labelling with argument a IN, plus its numbering.

    Raises NotInGroundedError when the propagation exhausts the framework
    without ever being able to label a IN. `on_iteration` (test hook, pure
    Python backend only) sees the label bytes at every main-loop iteration.
    """
    result = _run(af, a, backend, on_iteration)
    if result.lab.codes[a] != IN:
        raise NotInGroundedError(af.names[a])
    return result


def grounded_with_minmax(af, backend=None, on_iteration=None):
    """The full grounded labelling and its min-max numbering.

    Same propagation as construct_for with the early stop disabled, so the
    queue drains and every argument the grounded labelling commits gets its
    number.
    """
    return _run(af, -1, backend, on_iteration)
