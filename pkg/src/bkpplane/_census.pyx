# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled plane-partition scan.  Same contract as ``_census_py.scan``."""

from libc.stdlib cimport calloc, free

cdef enum:
    MAXN = 60
    DIM = MAXN + 2

MAX_VOLUME = MAXN


cdef struct State:
    int n
    int strict_only
    int h[DIM][DIM]
    int rowlen[DIM]
    int parent[DIM]
    int offset[DIM]
    long long *paths
    long long *cats


cdef inline int _find(State *st, int x) noexcept nogil:
    while st.parent[x] != x:
        st.parent[x] = st.parent[st.parent[x]]
        x = st.parent[x]
    return x


cdef void _record(State *st, int rows, int vol) noexcept nogil:
    cdef int i, j, v, a, ra, rb, comps
    cdef int strict = 1
    cdef int wide = 0

    for i in range(1, rows):
        for j in range(1, st.rowlen[i]):
            if st.h[i][j] == st.h[i - 1][j - 1]:
                strict = 0
                break
        if not strict:
            break

    for i in range(rows - 1):
        for j in range(st.rowlen[i + 1] - 1):
            v = st.h[i][j]
            if v == st.h[i][j + 1] and v == st.h[i + 1][j] and v == st.h[i + 1][j + 1]:
                wide = 1
                break
        if wide:
            break

    if strict:
        st.offset[0] = 0
        for i in range(rows):
            st.offset[i + 1] = st.offset[i] + st.rowlen[i]
        comps = st.offset[rows]
        for i in range(comps):
            st.parent[i] = i
        for i in range(rows):
            for j in range(st.rowlen[i]):
                a = st.offset[i] + j
                if j + 1 < st.rowlen[i] and st.h[i][j + 1] == st.h[i][j]:
                    ra = _find(st, a)
                    rb = _find(st, a + 1)
                    if ra != rb:
                        st.parent[ra] = rb
                        comps -= 1
                if i + 1 < rows and j < st.rowlen[i + 1] and st.h[i + 1][j] == st.h[i][j]:
                    ra = _find(st, a)
                    rb = _find(st, st.offset[i + 1] + j)
                    if ra != rb:
                        st.parent[ra] = rb
                        comps -= 1
        st.paths[vol * (st.n + 1) + comps] += 1
    st.cats[vol * 4 + 2 * strict + wide] += 1


cdef void _place(State *st, int i, int j, int remaining, int vol) noexcept nogil:
    cdef int ub = remaining
    cdef int hgt
    if i > 0:
        if j >= st.rowlen[i - 1]:
            ub = 0
        elif st.h[i - 1][j] < ub:
            ub = st.h[i - 1][j]
    if j > 0 and st.h[i][j - 1] < ub:
        ub = st.h[i][j - 1]
    hgt = ub
    while hgt > 0:
        if not (st.strict_only and i > 0 and j > 0 and st.h[i - 1][j - 1] == hgt):
            st.h[i][j] = hgt
            _place(st, i, j + 1, remaining - hgt, vol + hgt)
        hgt -= 1
    if j == 0:
        _record(st, i, vol)
    else:
        st.rowlen[i] = j
        _place(st, i + 1, 0, remaining, vol)


def scan(int max_volume, bint strict_only=True, first_row=None):
    if not 0 <= max_volume <= MAXN:
        raise ValueError(f"max_volume must be in [0, {MAXN}]")
    cdef int n = max_volume
    cdef int total = 0
    cdef int k
    cdef list row = None
    if first_row is not None:
        row = [int(x) for x in first_row]
        total = sum(row)
        if total > n or any(a < b for a, b in zip(row, row[1:])):
            raise ValueError(f"bad first row {row}")

    cdef State *st = <State *> calloc(1, sizeof(State))
    if st == NULL:
        raise MemoryError()
    st.paths = <long long *> calloc((n + 1) * (n + 1), sizeof(long long))
    st.cats = <long long *> calloc((n + 1) * 4, sizeof(long long))
    if st.paths == NULL or st.cats == NULL:
        free(st.paths)
        free(st.cats)
        free(st)
        raise MemoryError()
    st.n = n
    st.strict_only = strict_only
    try:
        if row is None:
            with nogil:
                _place(st, 0, 0, n, 0)
        elif not row:
            _record(st, 0, 0)
        else:
            for k in range(len(row)):
                st.h[0][k] = row[k]
            st.rowlen[0] = len(row)
            with nogil:
                _place(st, 1, 0, n - total, total)
        paths = [[st.paths[v * (n + 1) + p] for p in range(n + 1)] for v in range(n + 1)]
        cats = [[st.cats[v * 4 + c] for c in range(4)] for v in range(n + 1)]
    finally:
        free(st.paths)
        free(st.cats)
        free(st)
    return paths, cats
