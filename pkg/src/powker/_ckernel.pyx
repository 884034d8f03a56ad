# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in powker._pykernel.

The contracts (and the algorithms) are documented there; the two
modules must stay in lockstep so that results are bit-identical.
"""

from libc.stdlib cimport free, malloc

BACKEND = "c"


cdef inline long long _modinv(long long v, long long p):
    cdef long long result = 1
    cdef long long base = v % p
    cdef long long e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def reduce_slice(list w, list fcoeffs, long long p):
    """In-place remainder of a homogeneous slice modulo f; see _pykernel."""
    cdef Py_ssize_t n = len(w)
    cdef Py_ssize_t d = len(fcoeffs) - 1
    if n - 1 < d:
        return w
    cdef long long* wb = <long long*> malloc(n * sizeof(long long))
    cdef long long* fb = <long long*> malloc((d + 1) * sizeof(long long))
    if wb == NULL or fb == NULL:
        if wb != NULL:
            free(wb)
        if fb != NULL:
            free(fb)
        raise MemoryError()
    cdef Py_ssize_t idx, j, k
    cdef long long c, fk, v
    try:
        for idx in range(n):
            wb[idx] = w[idx]
        for idx in range(d + 1):
            fb[idx] = fcoeffs[idx]
        for j in range(n - 1, d - 1, -1):
            c = wb[j]
            if c:
                wb[j] = 0
                for k in range(d):
                    fk = fb[k]
                    if fk:
                        v = (wb[j - d + k] - c * fk) % p
                        if v < 0:
                            v += p
                        wb[j - d + k] = v
        for idx in range(n):
            w[idx] = wb[idx]
    finally:
        free(wb)
        free(fb)
    return w


def rref(list rows, Py_ssize_t ncols, long long p):
    """Nonzero rows of the reduced row echelon form; see _pykernel."""
    if ncols == 0:
        return []
    cdef long long* piv = <long long*> malloc(ncols * ncols * sizeof(long long))
    cdef Py_ssize_t* colslot = <Py_ssize_t*> malloc(ncols * sizeof(Py_ssize_t))
    cdef long long* cur = <long long*> malloc(ncols * sizeof(long long))
    if piv == NULL or colslot == NULL or cur == NULL:
        if piv != NULL:
            free(piv)
        if colslot != NULL:
            free(colslot)
        if cur != NULL:
            free(cur)
        raise MemoryError()
    cdef Py_ssize_t nstored = 0
    cdef Py_ssize_t c, cc, slot, srow, lead
    cdef long long v, f, inv
    try:
        for c in range(ncols):
            colslot[c] = -1
        for row in rows:
            if len(<list> row) != ncols:
                raise ValueError("row length does not match ncols")
            for c in range(ncols):
                v = row[c] % p
                if v < 0:
                    v += p
                cur[c] = v
            # Clear every existing pivot column from the incoming row.
            # Pivot rows hold zeros at each other's pivot columns, so the
            # subtraction order does not matter.
            for c in range(ncols):
                slot = colslot[c]
                if slot < 0:
                    continue
                v = cur[c]
                if v == 0:
                    continue
                for cc in range(ncols):
                    f = (cur[cc] - v * piv[slot * ncols + cc]) % p
                    if f < 0:
                        f += p
                    cur[cc] = f
            lead = -1
            for c in range(ncols):
                if cur[c]:
                    lead = c
                    break
            if lead < 0:
                continue
            v = cur[lead]
            if v != 1:
                inv = _modinv(v, p)
                for cc in range(ncols):
                    cur[cc] = cur[cc] * inv % p
            for srow in range(nstored):
                f = piv[srow * ncols + lead]
                if f:
                    for cc in range(ncols):
                        v = (piv[srow * ncols + cc] - f * cur[cc]) % p
                        if v < 0:
                            v += p
                        piv[srow * ncols + cc] = v
            for cc in range(ncols):
                piv[nstored * ncols + cc] = cur[cc]
            colslot[lead] = nstored
            nstored += 1
        out = []
        for c in range(ncols):
            slot = colslot[c]
            if slot >= 0:
                out.append([piv[slot * ncols + cc] for cc in range(ncols)])
        return out
    finally:
        free(piv)
        free(colslot)
        free(cur)
