# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled element kernels: closure, conjugacy partition, lookups.

Same contract as _kernel_py: byte-string permutations in, sorted closures
and smallest-member class ids out.  Membership lookups run as binary search
over the concatenated sorted element buffer instead of a hash table.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memcmp, memcpy


cdef inline bytes _compose(const unsigned char* p, const unsigned char* g, Py_ssize_t n):
    # p then g
    out = PyBytes_FromStringAndSize(NULL, n)
    cdef unsigned char* o = <unsigned char*> PyBytes_AS_STRING(out)
    cdef Py_ssize_t i
    for i in range(n):
        o[i] = g[p[i]]
    return out


cdef inline Py_ssize_t _bisect(const unsigned char* base, Py_ssize_t count,
                               const unsigned char* query, Py_ssize_t n):
    cdef Py_ssize_t lo = 0, hi = count, mid
    cdef int cmp
    while lo < hi:
        mid = (lo + hi) // 2
        cmp = memcmp(base + mid * n, query, n)
        if cmp < 0:
            lo = mid + 1
        elif cmp > 0:
            hi = mid
        else:
            return mid
    return -1


def closure(int degree, gens, long max_elements):
    """Every product of the generators, sorted; None when the group exceeds
    max_elements."""
    cdef Py_ssize_t n = degree
    cdef list gen_list = [bytes(g) for g in gens]
    identity = PyBytes_FromStringAndSize(NULL, n)
    cdef unsigned char* idp = <unsigned char*> PyBytes_AS_STRING(identity)
    cdef Py_ssize_t i
    for i in range(n):
        idp[i] = <unsigned char> i
    seen = {identity}
    cdef list frontier = [identity]
    cdef list fresh
    cdef bytes p, g, q
    while frontier:
        fresh = []
        for p in frontier:
            for g in gen_list:
                q = _compose(<const unsigned char*> PyBytes_AS_STRING(p),
                             <const unsigned char*> PyBytes_AS_STRING(g), n)
                if q not in seen:
                    if len(seen) >= max_elements:
                        return None
                    seen.add(q)
                    fresh.append(q)
        frontier = fresh
    return sorted(seen)


def class_partition(elements, gens):
    """Conjugacy class ids over a sorted, closed element list."""
    cdef Py_ssize_t count = len(elements)
    if count == 0:
        return []
    cdef Py_ssize_t n = len(elements[0])
    cat = b"".join(elements)
    cdef const unsigned char* base = <const unsigned char*> PyBytes_AS_STRING(cat)
    cdef list gen_list = [bytes(g) for g in gens]

    cdef long* ids = <long*> malloc(count * sizeof(long))
    cdef long* stack = <long*> malloc(count * sizeof(long))
    cdef unsigned char* scratch = <unsigned char*> malloc(n)
    if ids == NULL or stack == NULL or scratch == NULL:
        free(ids); free(stack); free(scratch)
        raise MemoryError()

    cdef Py_ssize_t root, sp, j, k, idx
    cdef const unsigned char* y
    cdef const unsigned char* gp
    cdef bytes g
    try:
        for root in range(count):
            ids[root] = -1
        for root in range(count):
            if ids[root] != -1:
                continue
            ids[root] = root
            sp = 0
            stack[sp] = root
            sp += 1
            while sp > 0:
                sp -= 1
                idx = stack[sp]
                y = base + idx * n
                for g in gen_list:
                    gp = <const unsigned char*> PyBytes_AS_STRING(g)
                    for j in range(n):
                        scratch[gp[j]] = gp[y[j]]
                    k = _bisect(base, count, scratch, n)
                    if ids[k] == -1:
                        ids[k] = root
                        stack[sp] = k
                        sp += 1
        return [ids[j] for j in range(count)]
    finally:
        free(ids)
        free(stack)
        free(scratch)


def positions(elements, queries):
    """Index of each query among the sorted elements, -1 when absent."""
    cdef Py_ssize_t count = len(elements)
    if count == 0:
        return [-1] * len(queries)
    cdef Py_ssize_t n = len(elements[0])
    cat = b"".join(elements)
    cdef const unsigned char* base = <const unsigned char*> PyBytes_AS_STRING(cat)
    cdef list out = []
    cdef bytes q
    for q in queries:
        out.append(_bisect(base, count, <const unsigned char*> PyBytes_AS_STRING(q), n))
    return out


def find_conjugator(elements, h_gens, target_elements):
    """Index of the first element conjugating every h generator into the
    (sorted) target element list, or -1."""
    cdef Py_ssize_t count = len(elements)
    cdef Py_ssize_t tcount = len(target_elements)
    if count == 0 or tcount == 0:
        return -1
    cdef Py_ssize_t n = len(elements[0])
    tcat = b"".join(sorted(target_elements))
    cdef const unsigned char* tbase = <const unsigned char*> PyBytes_AS_STRING(tcat)
    cdef list h_list = [bytes(h) for h in h_gens]
    cdef unsigned char* scratch = <unsigned char*> malloc(n)
    if scratch == NULL:
        raise MemoryError()
    cdef Py_ssize_t idx, j
    cdef const unsigned char* gp
    cdef const unsigned char* hp
    cdef bint ok
    cdef bytes g, h
    try:
        for idx in range(count):
            g = elements[idx]
            gp = <const unsigned char*> PyBytes_AS_STRING(g)
            ok = True
            for h in h_list:
                hp = <const unsigned char*> PyBytes_AS_STRING(h)
                for j in range(n):
                    scratch[gp[j]] = gp[hp[j]]
                if _bisect(tbase, tcount, scratch, n) < 0:
                    ok = False
                    break
            if ok:
                return idx
        return -1
    finally:
        free(scratch)
