# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice-point kernel; API mirrors _kernels.py.

Residual arithmetic runs in C long long.  floorcount.kernel guards input
magnitudes and falls back to the pure-Python kernel for anything large.
"""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

DEF MAXD = 64


cdef class SolutionCounter:
    cdef long long* A          # column-major blocks: A[j*d + i]
    cdef long long* phi
    cdef long long* pa
    cdef char* up              # (m+1) x d suffix sign flags
    cdef char* dn
    cdef int m, d, lower
    cdef dict memo
    cdef readonly list order

    def __cinit__(self, cols, phi, lower=0):
        cdef int j, i
        if len(phi) > MAXD:
            raise ValueError("dimension too large for compiled kernel")
        order = sorted(range(len(cols)),
                       key=lambda k: -sum(p * a for p, a in zip(phi, cols[k])))
        cols = [tuple(cols[k]) for k in order]
        self.order = order
        self.m = len(cols)
        self.d = len(phi)
        self.lower = lower
        self.memo = {}
        self.A = <long long*> malloc(max(1, self.m * self.d) * sizeof(long long))
        self.phi = <long long*> malloc(max(1, self.d) * sizeof(long long))
        self.pa = <long long*> malloc(max(1, self.m) * sizeof(long long))
        self.up = <char*> malloc(max(1, (self.m + 1) * self.d) * sizeof(char))
        self.dn = <char*> malloc(max(1, (self.m + 1) * self.d) * sizeof(char))
        for i in range(self.d):
            self.phi[i] = phi[i]
        for j in range(self.m):
            s = 0
            for i in range(self.d):
                self.A[j * self.d + i] = cols[j][i]
                s += phi[i] * cols[j][i]
            self.pa[j] = s
        for i in range(self.d):
            self.up[self.m * self.d + i] = 0
            self.dn[self.m * self.d + i] = 0
        for j in range(self.m - 1, -1, -1):
            for i in range(self.d):
                self.up[j * self.d + i] = self.up[(j + 1) * self.d + i] or (self.A[j * self.d + i] > 0)
                self.dn[j * self.d + i] = self.dn[(j + 1) * self.d + i] or (self.A[j * self.d + i] < 0)

    def __dealloc__(self):
        free(self.A)
        free(self.phi)
        free(self.pa)
        free(self.up)
        free(self.dn)

    def count(self, b):
        cdef long long rbuf[MAXD]
        cdef int i, j
        bb = list(b)
        if self.lower:
            for j in range(self.m):
                for i in range(self.d):
                    bb[i] -= self.lower * self.A[j * self.d + i]
        for i in range(self.d):
            rbuf[i] = bb[i]
        return self._rec(0, rbuf)

    cdef object _rec(self, int j, long long* r):
        cdef long long s = 0
        cdef long long rr[MAXD]
        cdef long long z, ub
        cdef int i
        for i in range(self.d):
            s += self.phi[i] * r[i]
        if s < 0:
            return 0
        if j == self.m:
            for i in range(self.d):
                if r[i] != 0:
                    return 0
            return 1
        for i in range(self.d):
            if r[i] > 0 and not self.up[j * self.d + i]:
                return 0
            if r[i] < 0 and not self.dn[j * self.d + i]:
                return 0
        key = (j, tuple([r[i] for i in range(self.d)]))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        ub = s / self.pa[j]
        total = 0
        for i in range(self.d):
            rr[i] = r[i]
        for z in range(ub + 1):
            total = total + self._rec(j + 1, rr)
            for i in range(self.d):
                rr[i] -= self.A[j * self.d + i]
        self.memo[key] = total
        return total


def count_solutions(cols, phi, b, lower=0):
    return SolutionCounter(cols, phi, lower).count(b)


def enum_solutions(cols, phi, b, lower=0):
    cdef int m = len(cols)
    if m == 0:
        if all(v == 0 for v in b):
            yield ()
        return
    out = [0] * m

    def rec(j, r):
        if j == m:
            if all(v == 0 for v in r):
                yield tuple(out)
            return
        a = cols[j]
        rr = [ri - lower * ai for ri, ai in zip(r, a)]
        z = lower
        while sum(p * v for p, v in zip(phi, rr)) >= 0:
            out[j] = z
            yield from rec(j + 1, tuple(rr))
            z += 1
            rr = [ri - ai for ri, ai in zip(rr, a)]

    yield from rec(0, tuple(b))
