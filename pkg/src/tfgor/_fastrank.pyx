# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Dense exact rank kernels compiled to C.

These are the hot inner loops of the homology engine: thousands of small
boundary matrices get row-reduced per survey run.  rank_mod_p eliminates
over GF(p) in 64-bit arithmetic (safe for p < 2^31).  rank_bareiss runs
fraction-free integer elimination with exact divisions; whenever an
intermediate value leaves the 31-bit window where 64-bit cross products
cannot overflow it returns -1 and the caller falls back to the pure
bignum kernel.
"""

from libc.stdlib cimport calloc, free

cdef long long _LIMIT = (<long long> 1 << 31) - 1


def rank_mod_p(int nrows, int ncols, list triples, long long p):
    cdef long long *a
    cdef int r, c, i, j, k, piv_r
    cdef long long v, piv, f
    cdef int rank = 0
    if nrows == 0 or ncols == 0:
        return 0
    a = <long long *> calloc(<size_t> nrows * ncols, sizeof(long long))
    if a == NULL:
        raise MemoryError()
    try:
        for t in triples:
            r = t[0]
            c = t[1]
            v = t[2] % p
            if v < 0:
                v += p
            a[r * ncols + c] = v
        for j in range(ncols):
            piv_r = -1
            for i in range(rank, nrows):
                if a[i * ncols + j] != 0:
                    piv_r = i
                    break
            if piv_r < 0:
                continue
            if piv_r != rank:
                for k in range(j, ncols):
                    v = a[rank * ncols + k]
                    a[rank * ncols + k] = a[piv_r * ncols + k]
                    a[piv_r * ncols + k] = v
            piv = a[rank * ncols + j]
            for i in range(rank + 1, nrows):
                f = a[i * ncols + j]
                if f == 0:
                    continue
                for k in range(j, ncols):
                    v = (piv * a[i * ncols + k] - f * a[rank * ncols + k]) % p
                    if v < 0:
                        v += p
                    a[i * ncols + k] = v
            rank += 1
            if rank == nrows:
                break
        return rank
    finally:
        free(a)


def rank_bareiss(int nrows, int ncols, list triples):
    cdef long long *a
    cdef int r, c, i, j, k, br, bc, step
    cdef long long v, piv, prev, best, num, fi
    cdef int rank = 0, m
    if nrows == 0 or ncols == 0:
        return 0
    a = <long long *> calloc(<size_t> nrows * ncols, sizeof(long long))
    if a == NULL:
        raise MemoryError()
    try:
        for t in triples:
            r = t[0]
            c = t[1]
            v = t[2]
            if v > _LIMIT or v < -_LIMIT:
                return -1
            a[r * ncols + c] = v
        m = nrows if nrows < ncols else ncols
        prev = 1
        for step in range(m):
            # pivot: smallest nonzero magnitude in the trailing block,
            # ties to the lowest (row, col)
            br = -1
            bc = -1
            best = 0
            for i in range(step, nrows):
                for j in range(step, ncols):
                    v = a[i * ncols + j]
                    if v != 0:
                        if v < 0:
                            v = -v
                        if br < 0 or v < best:
                            best = v
                            br = i
                            bc = j
            if br < 0:
                break
            if br != step:
                for k in range(ncols):
                    v = a[step * ncols + k]
                    a[step * ncols + k] = a[br * ncols + k]
                    a[br * ncols + k] = v
            if bc != step:
                for k in range(nrows):
                    v = a[k * ncols + step]
                    a[k * ncols + step] = a[k * ncols + bc]
                    a[k * ncols + bc] = v
            piv = a[step * ncols + step]
            rank += 1
            for i in range(step + 1, nrows):
                fi = a[i * ncols + step]
                for j in range(step + 1, ncols):
                    num = piv * a[i * ncols + j] - fi * a[step * ncols + j]
                    if num % prev != 0:
                        return -1
                    v = num / prev
                    if v > _LIMIT or v < -_LIMIT:
                        return -1
                    a[i * ncols + j] = v
                a[i * ncols + step] = 0
            prev = piv
        return rank
    finally:
        free(a)
