# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled piling kernel. See raag._purekernel for the commented
reference implementation; the two must stay behaviorally identical."""

from libc.stdlib cimport free, malloc


def normalize(codes, int n, noncomm):
    """Identical contract to raag._purekernel.normalize."""
    cdef Py_ssize_t L = len(codes)
    out = []
    if L == 0:
        return out

    cdef Py_ssize_t total_nc = 0
    cdef Py_ssize_t i, k, t, pos
    for i in range(n):
        total_nc += len(noncomm[i])

    cdef int *carr = <int *> malloc(L * sizeof(int))
    cdef signed char *piles = <signed char *> malloc(n * L * sizeof(signed char))
    cdef Py_ssize_t *plen = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t *pptr = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef int *ncflat = <int *> malloc((total_nc if total_nc > 0 else 1) * sizeof(int))
    cdef Py_ssize_t *ncoff = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))

    cdef int c, eps
    cdef Py_ssize_t vi, j2, count

    try:
        if carr == NULL or piles == NULL or plen == NULL or pptr == NULL \
                or ncflat == NULL or ncoff == NULL:
            raise MemoryError()
        for k in range(L):
            carr[k] = codes[k]
        pos = 0
        ncoff[0] = 0
        for i in range(n):
            for j in noncomm[i]:
                ncflat[pos] = j
                pos += 1
            ncoff[i + 1] = pos
            plen[i] = 0
            pptr[i] = 0

        # piling pass: push or cancel each letter
        count = 0
        for k in range(L):
            c = carr[k]
            if c > 0:
                vi = c - 1
                eps = 1
            else:
                vi = -c - 1
                eps = -1
            if plen[vi] > 0 and piles[vi * L + plen[vi] - 1] == -eps:
                plen[vi] -= 1
                for t in range(ncoff[vi], ncoff[vi + 1]):
                    plen[ncflat[t]] -= 1
                count -= 1
            else:
                piles[vi * L + plen[vi]] = <signed char> eps
                plen[vi] += 1
                for t in range(ncoff[vi], ncoff[vi + 1]):
                    j2 = ncflat[t]
                    piles[j2 * L + plen[j2]] = 0
                    plen[j2] += 1
                count += 1

        # depiling pass: emit the smallest available generator each step
        while count > 0:
            for i in range(n):
                if pptr[i] < plen[i] and piles[i * L + pptr[i]] != 0:
                    out.append((i + 1) * <int> piles[i * L + pptr[i]])
                    pptr[i] += 1
                    for t in range(ncoff[i], ncoff[i + 1]):
                        pptr[ncflat[t]] += 1
                    count -= 1
                    break
    finally:
        free(carr)
        free(piles)
        free(plen)
        free(pptr)
        free(ncflat)
        free(ncoff)
    return out
