# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled chamber-walk transfer kernel.

Counts are carried as residues modulo a single prime below 2**62, so a sum of
two residues never overflows uint64. Exact values are recovered by the caller
through the Chinese remainder theorem.
"""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint8_t, uint64_t

cnp.import_array()


def chamber_walk_residues(int64_t[:, ::1] steps not None,
                          int64_t[::1] start not None,
                          Py_ssize_t n,
                          int64_t[::1] shape not None,
                          uint8_t[::1] mask not None,
                          uint64_t prime):
    """Layer after ``n`` steps from ``start`` (box indices), modulo ``prime``.

    ``mask`` flags the box cells that lie strictly inside the chamber. The box
    must extend at least ``n + 1`` cells beyond ``start`` in every direction.
    """
    cdef Py_ssize_t k = shape.shape[0]
    cdef Py_ssize_t nsteps = steps.shape[0]
    cdef Py_ssize_t total = 1
    cdef Py_ssize_t j, s, t
    for j in range(k):
        total *= shape[j]
    if mask.shape[0] != total:
        raise ValueError("mask size does not match box")
    if prime >= (<uint64_t>1 << 62):
        raise ValueError("prime must be below 2**62")

    cdef int64_t[::1] stride = np.empty(k, dtype=np.int64)
    stride[k - 1] = 1
    for j in range(k - 2, -1, -1):
        stride[j] = stride[j + 1] * shape[j + 1]
    for j in range(k):
        if start[j] - n - 1 < 0 or start[j] + n + 1 >= shape[j]:
            raise ValueError("box too small for the requested walk length")

    cdef int64_t[::1] offset = np.zeros(nsteps, dtype=np.int64)
    for s in range(nsteps):
        for j in range(k):
            offset[s] += steps[s, j] * stride[j]

    cur_arr = np.zeros(total, dtype=np.uint64)
    nxt_arr = np.zeros(total, dtype=np.uint64)
    cdef uint64_t[::1] cur = cur_arr
    cdef uint64_t[::1] nxt = nxt_arr
    cdef uint64_t[::1] tmp
    cdef int64_t[::1] idx = np.zeros(k, dtype=np.int64)
    cdef int64_t[::1] lo = np.zeros(k, dtype=np.int64)
    cdef int64_t[::1] hi = np.zeros(k, dtype=np.int64)
    cdef int64_t flat0 = 0
    for j in range(k):
        flat0 += start[j] * stride[j]
    if mask[flat0]:
        cur[flat0] = 1 % prime

    cdef int64_t flat, tgt, row, rowlen
    cdef uint64_t c, acc
    cdef bint done
    with nogil:
        for t in range(n):
            # occupied cells of layer t lie within start +- t
            for j in range(k):
                lo[j] = start[j] - t
                hi[j] = start[j] + t
                idx[j] = lo[j]
            done = False
            while not done:
                flat = 0
                for j in range(k - 1):
                    flat += idx[j] * stride[j]
                rowlen = hi[k - 1] - lo[k - 1] + 1
                flat += lo[k - 1]
                for row in range(rowlen):
                    c = cur[flat + row]
                    if c != 0:
                        for s in range(nsteps):
                            tgt = flat + row + offset[s]
                            if mask[tgt]:
                                acc = nxt[tgt] + c
                                if acc >= prime:
                                    acc -= prime
                                nxt[tgt] = acc
                        cur[flat + row] = 0
                # odometer over all but the last coordinate
                j = k - 2
                while True:
                    if j < 0:
                        done = True
                        break
                    idx[j] += 1
                    if idx[j] <= hi[j]:
                        break
                    idx[j] = lo[j]
                    j -= 1
            tmp = cur
            cur = nxt
            nxt = tmp
    return np.asarray(cur).reshape(tuple(shape))
