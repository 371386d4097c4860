# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops: component labelling and subset enumeration.

Every function here has a drop-in twin in ``_pykernels``; the two are
required to return identical results.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t, uint8_t
from libc.stdlib cimport malloc, free

cnp.import_array()


cdef inline int64_t _find(int64_t[::1] parent, int64_t x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def label_components(const int64_t[:, ::1] nbr, const uint8_t[::1] keep):
    """Connected components over the colors flagged in ``keep``.

    Returns ``(labels, count)``; labels are numbered in order of each
    component's smallest vertex.
    """
    cdef Py_ssize_t n = nbr.shape[0], d = nbr.shape[1]
    cdef Py_ssize_t v, c
    cdef int64_t a, b, w
    parent_arr = np.arange(n, dtype=np.int64)
    labels_arr = np.full(n, -1, dtype=np.int64)
    cdef int64_t[::1] parent = parent_arr
    cdef int64_t[::1] labels = labels_arr
    cdef int64_t count = 0
    with nogil:
        for v in range(n):
            for c in range(d):
                if not keep[c]:
                    continue
                w = nbr[v, c]
                if w < v:
                    continue
                a = _find(parent, v)
                b = _find(parent, w)
                if a == b:
                    continue
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
        # roots are the minimum vertex of each tree, so a forward scan
        # meets every root before any of its descendants
        for v in range(n):
            a = _find(parent, v)
            if labels[a] < 0:
                labels[a] = count
                count += 1
            labels[v] = labels[a]
    return labels_arr, int(count)


cdef inline int64_t _gain(const int64_t[:, ::1] nbr, uint8_t* inset, int64_t v,
                          Py_ssize_t d) noexcept nogil:
    # boundary change when v joins the set: d - 2 * (neighbors already inside)
    cdef Py_ssize_t c
    cdef int64_t inside = 0
    for c in range(d):
        inside += inset[nbr[v, c]]
    return d - 2 * inside


def min_boundary_combinations(const int64_t[:, ::1] nbr, Py_ssize_t s,
                              Py_ssize_t lo, Py_ssize_t hi):
    """Minimum boundary over s-subsets whose smallest element is in [lo, hi).

    Subsets are visited in lexicographic order and the incumbent is only
    replaced on strict improvement, so the witness is the lexicographically
    smallest minimizer. Returns ``(best, witness)`` or ``(-1, None)`` when the
    range holds no subset.
    """
    cdef Py_ssize_t n = nbr.shape[0], d = nbr.shape[1]
    cdef Py_ssize_t i, j
    if s < 1 or s > n:
        raise ValueError("subset size out of range")
    if hi > n - s + 1:
        hi = n - s + 1
    if lo >= hi:
        return -1, None
    idx_arr = np.empty(s, dtype=np.int64)
    wit_arr = np.empty(s, dtype=np.int64)
    cdef int64_t[::1] idx = idx_arr
    cdef int64_t[::1] wit = wit_arr
    cdef uint8_t* inset = <uint8_t*> malloc(n * sizeof(uint8_t))
    if inset == NULL:
        raise MemoryError()
    cdef int64_t bnd = 0, best = -1
    with nogil:
        for i in range(n):
            inset[i] = 0
        for i in range(s):
            idx[i] = lo + i
            bnd += _gain(nbr, inset, idx[i], d)
            inset[idx[i]] = 1
        while True:
            if best < 0 or bnd < best:
                best = bnd
                for j in range(s):
                    wit[j] = idx[j]
            i = s - 1
            while i >= 0 and idx[i] == n - s + i:
                i -= 1
            if i < 0 or (i == 0 and idx[0] + 1 >= hi):
                break
            for j in range(s - 1, i - 1, -1):
                inset[idx[j]] = 0
                bnd -= _gain(nbr, inset, idx[j], d)
            idx[i] += 1
            for j in range(i, s):
                if j > i:
                    idx[j] = idx[j - 1] + 1
                bnd += _gain(nbr, inset, idx[j], d)
                inset[idx[j]] = 1
    free(inset)
    return int(best), wit_arr


def min_boundary_sweep(const int64_t[:, ::1] nbr, Py_ssize_t s_max):
    """Gray-code sweep over all 2^n subsets (n <= 30).

    Returns ``(best, masks)`` indexed by subset size 0..s_max; ``masks[s]`` is
    the bitmask of the lexicographically smallest minimizer of size s.
    """
    cdef Py_ssize_t n = nbr.shape[0], d = nbr.shape[1]
    cdef Py_ssize_t c
    if n > 30:
        raise ValueError("full sweep limited to n <= 30")
    best_arr = np.full(s_max + 1, -1, dtype=np.int64)
    mask_arr = np.zeros(s_max + 1, dtype=np.uint64)
    cdef int64_t[::1] best = best_arr
    cdef uint64_t[::1] masks = mask_arr
    cdef uint8_t* inset = <uint8_t*> malloc(n * sizeof(uint8_t))
    if inset == NULL:
        raise MemoryError()
    cdef uint64_t k, g = 0, total = (<uint64_t> 1) << n, diff, low
    cdef int64_t bnd = 0, size = 0, v, inside
    with nogil:
        for v in range(n):
            inset[v] = 0
        best[0] = 0
        masks[0] = 0
        for k in range(1, total):
            v = 0
            while not ((k >> v) & 1):
                v += 1
            inside = 0
            for c in range(d):
                inside += inset[nbr[v, c]]
            if inset[v]:
                inset[v] = 0
                bnd -= d - 2 * inside
                size -= 1
            else:
                inset[v] = 1
                bnd += d - 2 * inside
                size += 1
            g ^= (<uint64_t> 1) << v
            if size > s_max:
                continue
            if best[size] < 0 or bnd < best[size]:
                best[size] = bnd
                masks[size] = g
            elif bnd == best[size]:
                diff = g ^ masks[size]
                low = diff & (~diff + 1)
                if g & low:
                    masks[size] = g
    free(inset)
    return best_arr, mask_arr
