# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled state-sum kernel; see ``_kernels_py.state_histogram`` for the contract."""

from libc.stdlib cimport malloc, free


cdef inline int _find(int *parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def state_histogram(int n_arcs, corners):
    cdef int nc = len(corners) // 4
    if nc > 30:
        raise ValueError("state sum limited to 30 crossings")
    cdef int *cr = <int *> malloc(4 * nc * sizeof(int) + 1)
    cdef int *parent = <int *> malloc(n_arcs * sizeof(int) + 1)
    cdef long long *hist = <long long *> malloc((nc + 1) * (n_arcs + 1) * sizeof(long long))
    cdef long long state, nstates = 1LL << nc
    cdef int i, k, loops, n_a, x, y, rx, ry
    if cr == NULL or parent == NULL or hist == NULL:
        free(cr); free(parent); free(hist)
        raise MemoryError()
    try:
        for i in range(4 * nc):
            cr[i] = corners[i]
        for i in range((nc + 1) * (n_arcs + 1)):
            hist[i] = 0
        with nogil:
            for state in range(nstates):
                for i in range(n_arcs):
                    parent[i] = i
                loops = n_arcs
                n_a = 0
                for k in range(nc):
                    if (state >> k) & 1:
                        n_a += 1
                        x = cr[4 * k]; y = cr[4 * k + 1]
                    else:
                        x = cr[4 * k]; y = cr[4 * k + 3]
                    rx = _find(parent, x); ry = _find(parent, y)
                    if rx != ry:
                        parent[rx] = ry
                        loops -= 1
                    if (state >> k) & 1:
                        x = cr[4 * k + 2]; y = cr[4 * k + 3]
                    else:
                        x = cr[4 * k + 1]; y = cr[4 * k + 2]
                    rx = _find(parent, x); ry = _find(parent, y)
                    if rx != ry:
                        parent[rx] = ry
                        loops -= 1
                hist[n_a * (n_arcs + 1) + loops] += 1
        out = []
        for i in range(nc + 1):
            row = []
            for k in range(n_arcs + 1):
                row.append(hist[i * (n_arcs + 1) + k])
            out.append(row)
        return out
    finally:
        free(cr)
        free(parent)
        free(hist)
