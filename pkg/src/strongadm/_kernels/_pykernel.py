"""Pure-Python propagation kernels.

Same contracts as the compiled kernels: label codes are 0=UNDEC, 1=IN,
2=OUT, the queue is strictly FIFO, and adjacency is iterated in ascending
index order. These are the reference implementations; the compiled module is
an exact port.
"""


def construct(n, attackees_of, in_degrees, main, on_iteration=None):
    """Bottom-up labelling propagation from the unattacked arguments.

    Labels an argument IN once all its attackers are OUT, numbering IN
    arguments max(OUT attackers)+1 and OUT arguments min-at-first-IN-attacker
    +1 as the wave passes. Stops early when `main` turns IN; pass main=-1 to
    run to exhaustion (full grounded labelling).

    Returns (labels, mm, queue, head): the queue list is the enqueue order,
    its first `head` entries are the dequeue order.

    `on_iteration`, if given, is called with a snapshot of the label bytes at
    the start of every main-loop iteration (used by invariant tests; the
    compiled kernel does not offer it).
    """
    labels = bytearray(n)
    mm = [0] * n
    undec_pre = list(in_degrees)
    queue = []
    for x in range(n):
        if undec_pre[x] == 0:
            queue.append(x)
            labels[x] = 1
            mm[x] = 1
            if x == main:
                return labels, mm, queue, 0
    head = 0
    while head < len(queue):
        if on_iteration is not None:
            on_iteration(bytes(labels))
        x = queue[head]
        head += 1
        for y in attackees_of[x]:
            if labels[y] != 2:
                labels[y] = 2
                mm[y] = mm[x] + 1
                for z in attackees_of[y]:
                    if labels[z] == 0:
                        undec_pre[z] -= 1
                        if undec_pre[z] == 0:
                            queue.append(z)
                            labels[z] = 1
                            mm[z] = mm[y] + 1
                            if z == main:
                                return labels, mm, queue, head
    return labels, mm, queue, head


def prune(n, attackers_of, lab_in, mm_in, main):
    """Top-down restriction of a labelling to what the main argument needs.

    Walks from `main` over its attackers: each attacker is kept OUT, and if
    none of its minimally numbered IN attackers is already kept, the
    lowest-indexed one is added to the frontier. Numbers are copied from
    mm_in unchanged.

    Returns (lab_out, mm_out); assumes the input is a strongly admissible
    labelling with its correct numbering and main labelled IN.
    """
    lab_out = bytearray(n)
    mm_out = [0] * n
    queue = [main]
    lab_out[main] = 1
    mm_out[main] = mm_in[main]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for y in attackers_of[x]:
            lab_out[y] = 2
            mm_out[y] = mm_in[y]
            minimal = -1
            for z in attackers_of[y]:
                if lab_in[z] == 1 and (minimal < 0 or mm_in[z] < minimal):
                    minimal = mm_in[z]
            if minimal < 0:
                continue
            covered = False
            for z in attackers_of[y]:
                if lab_in[z] == 1 and mm_in[z] == minimal and lab_out[z] == 1:
                    covered = True
                    break
            if not covered:
                for z in attackers_of[y]:
                    if lab_in[z] == 1 and mm_in[z] == minimal:
                        queue.append(z)
                        lab_out[z] = 1
                        mm_out[z] = mm_in[z]
                        break
    return lab_out, mm_out
