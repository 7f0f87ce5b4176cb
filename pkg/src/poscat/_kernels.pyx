# cython: boundscheck=False, wraparound=False, cdivision=True
"""Bitmask kernels, compiled edition.

Mirror of ``poscat._purekernels``; see there for the contract. Rows are
uint64 masks, so carriers are capped at 16 points for enumeration (matching
the pure backend) and 64 points for closure.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

NAME = "cython"

MAX_ENUM_POINTS = 16


def rtclosure(rows, Py_ssize_t n):
    """Reflexive-transitive closure of an n-point relation (Warshall)."""
    cdef uint64_t buf[64]
    cdef Py_ssize_t i, k
    cdef uint64_t rk, bit
    if n > 64:
        raise ValueError(f"carrier too large for closure: {n} > 64")
    for i in range(n):
        buf[i] = <uint64_t> rows[i] | (<uint64_t> 1 << i)
    for k in range(n):
        rk = buf[k]
        bit = <uint64_t> 1 << k
        for i in range(n):
            if buf[i] & bit:
                buf[i] |= rk
    return tuple([buf[i] for i in range(n)])


cdef class _Walker:
    # Per-depth snapshots of the current relation and the excluded pairs;
    # depth is bounded by one decision per pair, i.e. n*n.
    cdef uint64_t* cur
    cdef uint64_t* forb
    cdef Py_ssize_t n
    cdef uint64_t full
    cdef list out

    def __cinit__(self, Py_ssize_t n):
        cdef Py_ssize_t slots = (n * n + 2) * n
        if slots == 0:
            slots = 1
        self.cur = <uint64_t*> malloc(slots * sizeof(uint64_t))
        self.forb = <uint64_t*> malloc(slots * sizeof(uint64_t))
        if self.cur == NULL or self.forb == NULL:
            raise MemoryError()
        self.n = n
        self.full = (<uint64_t> 1 << n) - 1 if n < 64 else ~(<uint64_t> 0)
        self.out = []

    def __dealloc__(self):
        if self.cur != NULL:
            free(self.cur)
        if self.forb != NULL:
            free(self.forb)

    cdef void walk(self, Py_ssize_t d):
        cdef Py_ssize_t n = self.n
        cdef uint64_t* c = self.cur + d * n
        cdef uint64_t* f = self.forb + d * n
        cdef uint64_t* nc
        cdef uint64_t* nf
        cdef Py_ssize_t i, j, a
        cdef uint64_t free_bits, rj, bi, na
        cdef bint ok
        for i in range(n):
            free_bits = self.full & ~(c[i] | f[i])
            if free_bits:
                j = 0
                while not (free_bits >> j) & 1:
                    j += 1
                nc = self.cur + (d + 1) * n
                nf = self.forb + (d + 1) * n
                # branch 1: exclude (i, j)
                for a in range(n):
                    nc[a] = c[a]
                    nf[a] = f[a]
                nf[i] |= <uint64_t> 1 << j
                self.walk(d + 1)
                # branch 2: add (i, j) and close
                rj = c[j]
                bi = <uint64_t> 1 << i
                ok = True
                for a in range(n):
                    nf[a] = f[a]
                    na = c[a]
                    if na & bi:
                        na |= rj
                        if na & f[a]:
                            ok = False
                            break
                    nc[a] = na
                if ok:
                    self.walk(d + 1)
                return
        self.out.append(tuple([c[a] for a in range(n)]))


def closed_extensions(rows, Py_ssize_t n, forbidden=None):
    """All reflexive-transitive relations containing ``rows`` and avoiding
    ``forbidden``, as a list of row tuples (same order as the pure backend).
    """
    cdef Py_ssize_t i
    if n > MAX_ENUM_POINTS:
        raise ValueError(f"carrier too large for enumeration: {n} > {MAX_ENUM_POINTS}")
    base = rtclosure(rows, n)
    cdef _Walker w = _Walker(n)
    for i in range(n):
        w.cur[i] = <uint64_t> base[i]
        w.forb[i] = <uint64_t> forbidden[i] if forbidden is not None else 0
        if w.cur[i] & w.forb[i]:
            return []
    w.walk(0)
    return w.out
