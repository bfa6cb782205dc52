# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled propagation kernels over CSR adjacency; exact port of the pure
Python module (same label codes, same FIFO discipline, same index order)."""

import numpy as np

cimport numpy as cnp


def construct(Py_ssize_t n,
              const cnp.int64_t[::1] out_indptr,
              const cnp.int32_t[::1] out_indices,
              const cnp.int64_t[::1] in_degrees,
              Py_ssize_t main):
    """Bottom-up labelling propagation; main=-1 disables the early stop.

    Returns (labels, mm, enqueue_order, dequeue_order) as numpy arrays.
    """
    labels_arr = np.zeros(n, dtype=np.uint8)
    mm_arr = np.zeros(n, dtype=np.int64)
    undec_arr = np.empty(n, dtype=np.int64)
    queue_arr = np.empty(n, dtype=np.int64)
    cdef cnp.uint8_t[::1] labels = labels_arr
    cdef cnp.int64_t[::1] mm = mm_arr
    cdef cnp.int64_t[::1] undec_pre = undec_arr
    cdef cnp.int64_t[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0
    cdef Py_ssize_t x, y, z
    cdef cnp.int64_t i, j

    for x in range(n):
        undec_pre[x] = in_degrees[x]
        if undec_pre[x] == 0:
            queue[tail] = x
            tail += 1
            labels[x] = 1
            mm[x] = 1
            if x == main:
                return (labels_arr, mm_arr,
                        queue_arr[:tail].copy(), queue_arr[:head].copy())

    while head < tail:
        x = queue[head]
        head += 1
        for i in range(out_indptr[x], out_indptr[x + 1]):
            y = out_indices[i]
            if labels[y] != 2:
                labels[y] = 2
                mm[y] = mm[x] + 1
                for j in range(out_indptr[y], out_indptr[y + 1]):
                    z = out_indices[j]
                    if labels[z] == 0:
                        undec_pre[z] -= 1
                        if undec_pre[z] == 0:
                            queue[tail] = z
                            tail += 1
                            labels[z] = 1
                            mm[z] = mm[y] + 1
                            if z == main:
                                return (labels_arr, mm_arr,
                                        queue_arr[:tail].copy(),
                                        queue_arr[:head].copy())
    return labels_arr, mm_arr, queue_arr[:tail].copy(), queue_arr[:head].copy()


def prune(Py_ssize_t n,
          const cnp.int64_t[::1] in_indptr,
          const cnp.int32_t[::1] in_indices,
          const cnp.uint8_t[::1] lab_in,
          const cnp.int64_t[::1] mm_in,
          Py_ssize_t main):
    """Top-down restriction to the arguments the main argument needs.

    Returns (lab_out, mm_out) as numpy arrays; assumes valid input
    (strongly admissible labelling, correct numbering, main labelled IN).
    """
    lab_out_arr = np.zeros(n, dtype=np.uint8)
    mm_out_arr = np.zeros(n, dtype=np.int64)
    queue_arr = np.empty(n, dtype=np.int64)
    cdef cnp.uint8_t[::1] lab_out = lab_out_arr
    cdef cnp.int64_t[::1] mm_out = mm_out_arr
    cdef cnp.int64_t[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0
    cdef Py_ssize_t x, y, z
    cdef cnp.int64_t i, j, minimal
    cdef bint covered

    queue[tail] = main
    tail += 1
    lab_out[main] = 1
    mm_out[main] = mm_in[main]

    while head < tail:
        x = queue[head]
        head += 1
        for i in range(in_indptr[x], in_indptr[x + 1]):
            y = in_indices[i]
            lab_out[y] = 2
            mm_out[y] = mm_in[y]
            minimal = -1
            for j in range(in_indptr[y], in_indptr[y + 1]):
                z = in_indices[j]
                if lab_in[z] == 1 and (minimal < 0 or mm_in[z] < minimal):
                    minimal = mm_in[z]
            if minimal < 0:
                continue
            covered = False
            for j in range(in_indptr[y], in_indptr[y + 1]):
                z = in_indices[j]
                if lab_in[z] == 1 and mm_in[z] == minimal and lab_out[z] == 1:
                    covered = True
                    break
            if not covered:
                for j in range(in_indptr[y], in_indptr[y + 1]):
                    z = in_indices[j]
                    if lab_in[z] == 1 and mm_in[z] == minimal:
                        queue[tail] = z
                        tail += 1
                        lab_out[z] = 1
                        mm_out[z] = mm_in[z]
                        break
    return lab_out_arr, mm_out_arr
