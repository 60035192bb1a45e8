# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same interface and rkey convention as ``_pykernels``."""

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from libc.stdlib cimport free, malloc, realloc

from heapq import heapify, heappop, heappush


cdef inline tuple _pack(long *buf, Py_ssize_t w):
    cdef tuple t = PyTuple_New(w)
    cdef object o
    cdef Py_ssize_t i
    for i in range(w):
        o = buf[i]
        Py_INCREF(o)
        PyTuple_SET_ITEM(t, i, o)
    return t


def minimalize(exps):
    """Minimal elements of a set of exponent vectors under divisibility."""
    cdef list items = sorted(set(exps), key=sum)
    cdef Py_ssize_t count = len(items)
    if count == 0:
        return []
    cdef Py_ssize_t w = len(items[0])
    cdef long *data = <long *> malloc((count * w + 1) * sizeof(long))
    cdef char *keep = <char *> malloc(count + 1)
    cdef Py_ssize_t a, b, i
    cdef bint divides
    cdef list out = []
    try:
        for a in range(count):
            e = items[a]
            for i in range(w):
                data[a * w + i] = e[i]
        for a in range(count):
            keep[a] = 1
            for b in range(a):
                if not keep[b]:
                    continue
                divides = True
                for i in range(w):
                    if data[b * w + i] > data[a * w + i]:
                        divides = False
                        break
                if divides:
                    keep[a] = 0
                    break
            if keep[a]:
                out.append(items[a])
    finally:
        free(data)
        free(keep)
    return out


cdef class ModpReducer:
    """A monic basis over F_p held in C arrays, with full-reduction normal form."""

    cdef readonly long long p
    cdef Py_ssize_t w
    cdef Py_ssize_t nb, cap
    cdef long *leads
    # flattened tails: term exponents, coefficients, and per-element offsets
    cdef long *texp
    cdef long long *tcoef
    cdef Py_ssize_t nterms, tcap
    cdef Py_ssize_t *offsets

    def __cinit__(self, long long p):
        self.p = p
        self.w = -1
        self.nb = 0
        self.cap = 0
        self.nterms = 0
        self.tcap = 0
        self.leads = NULL
        self.texp = NULL
        self.tcoef = NULL
        self.offsets = <Py_ssize_t *> malloc(sizeof(Py_ssize_t))
        self.offsets[0] = 0

    def __dealloc__(self):
        free(self.leads)
        free(self.texp)
        free(self.tcoef)
        free(self.offsets)

    def __len__(self):
        return self.nb

    def add(self, lead, tail):
        cdef Py_ssize_t i, k, nt, w
        tail = list(tail)
        if self.w < 0:
            self.w = len(lead)
        w = self.w
        if self.nb == self.cap:
            self.cap = 2 * self.cap + 4
            self.leads = <long *> realloc(self.leads, self.cap * w * sizeof(long))
            self.offsets = <Py_ssize_t *> realloc(
                self.offsets, (self.cap + 1) * sizeof(Py_ssize_t))
        for i in range(w):
            self.leads[self.nb * w + i] = lead[i]
        nt = len(tail)
        if self.nterms + nt > self.tcap:
            self.tcap = 2 * (self.nterms + nt) + 8
            self.texp = <long *> realloc(self.texp, self.tcap * w * sizeof(long))
            self.tcoef = <long long *> realloc(self.tcoef, self.tcap * sizeof(long long))
        for k in range(nt):
            e, c = tail[k]
            for i in range(w):
                self.texp[(self.nterms + k) * w + i] = e[i]
            self.tcoef[self.nterms + k] = c
        self.nterms += nt
        self.nb += 1
        self.offsets[self.nb] = self.nterms

    @property
    def leads_list(self):
        return [_pack(&self.leads[j * self.w], self.w) for j in range(self.nb)]

    cdef Py_ssize_t _find_divisor(self, long *m):
        cdef Py_ssize_t j, i, w = self.w
        cdef long *lead
        for j in range(self.nb):
            lead = &self.leads[j * w]
            for i in range(1, w):
                if lead[i] > m[i]:
                    break
            else:
                return j
        return -1

    def find_divisor(self, m):
        cdef Py_ssize_t i
        if self.nb == 0:
            return -1
        cdef long *buf = <long *> malloc(self.w * sizeof(long))
        try:
            for i in range(self.w):
                buf[i] = m[i]
            return self._find_divisor(buf)
        finally:
            free(buf)

    def normal_form(self, f):
        """Fully reduce ``f`` (dict rkey -> coeff); returns a new dict."""
        if not f:
            return {}
        if self.nb == 0:
            return dict(f)
        cdef Py_ssize_t w = self.w
        cdef long long p = self.p
        cdef long long c, v, gc
        cdef Py_ssize_t i, j, k
        cdef long *m = <long *> malloc(w * sizeof(long))
        cdef long *q = <long *> malloc(w * sizeof(long))
        cdef long *buf = <long *> malloc(w * sizeof(long))
        cdef dict work = dict(f)
        cdef dict rem = {}
        cdef list heap = list(work)
        cdef tuple key, mm
        heapify(heap)
        try:
            while heap:
                key = heappop(heap)
                cobj = work.pop(key, 0)
                c = cobj
                if c == 0:
                    continue
                for i in range(w):
                    m[i] = key[i]
                j = self._find_divisor(m)
                if j < 0:
                    rem[key] = cobj
                    continue
                for i in range(w):
                    q[i] = m[i] - self.leads[j * w + i]
                for k in range(self.offsets[j], self.offsets[j + 1]):
                    for i in range(w):
                        buf[i] = self.texp[k * w + i] + q[i]
                    mm = _pack(buf, w)
                    gc = self.tcoef[k]
                    old = work.get(mm)
                    if old is None:
                        v = (p - (c * gc) % p) % p
                        work[mm] = v
                        heappush(heap, mm)
                    else:
                        v = (<long long> old - (c * gc) % p) % p
                        if v < 0:
                            v += p
                        if v:
                            work[mm] = v
                        else:
                            del work[mm]
        finally:
            free(m)
            free(q)
            free(buf)
        return rem
