# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels, call-compatible with starcomm._kernels_py.

Element sets are lexicographically sorted int32 image matrices; the hot
paths (table construction, coprime pair sweeps, closures) run as C loops
with binary row search instead of Python-level hashing.
"""

import numpy as np

cimport cython
cimport numpy as cnp

cnp.import_array()

BACKEND_NAME = "compiled"

ctypedef cnp.int32_t i32
ctypedef cnp.int64_t i64
ctypedef cnp.uint8_t u8


cdef inline int _cmp_rows(const i32* a, const i32* b, Py_ssize_t d) nogil:
    cdef Py_ssize_t p
    for p in range(d):
        if a[p] < b[p]:
            return -1
        if a[p] > b[p]:
            return 1
    return 0


cdef inline i64 _bsearch(const i32[:, ::1] rows, const i32* query) nogil:
    cdef i64 lo = 0, hi = rows.shape[0] - 1, mid
    cdef int c
    while lo <= hi:
        mid = (lo + hi) >> 1
        c = _cmp_rows(&rows[mid, 0], query, rows.shape[1])
        if c == 0:
            return mid
        if c < 0:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1


cdef inline i64 _gcd(i64 a, i64 b) nogil:
    cdef i64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


def closure_images(gens_in, cap):
    """Breadth-first closure under composition; (sorted rows, truncated)."""
    gens = np.ascontiguousarray(gens_in, dtype=np.int32)
    cdef Py_ssize_t m = gens.shape[0]
    cdef Py_ssize_t d = gens.shape[1]
    cdef Py_ssize_t limit = cap
    cdef i32[:, ::1] G = gens

    cdef Py_ssize_t capacity = 256 if 256 < limit else limit
    if capacity < 1:
        capacity = 1
    data = np.empty((capacity, d), dtype=np.int32)
    cdef i32[:, ::1] D = data
    scratch = np.empty(d, dtype=np.int32)
    cdef i32[::1] S = scratch

    cdef Py_ssize_t p, head = 0, n = 1, j
    cdef bint truncated = False
    for p in range(d):
        D[0, p] = <i32> p
    lookup = {data[0].tobytes(): 0}

    while head < n and not truncated:
        for j in range(m):
            for p in range(d):
                S[p] = G[j, D[head, p]]
            key = scratch.tobytes()
            if key in lookup:
                continue
            if n >= limit:
                truncated = True
                break
            if n == capacity:
                capacity = capacity * 2
                if capacity > limit:
                    capacity = limit
                grown = np.empty((capacity, d), dtype=np.int32)
                grown[:n] = data[:n]
                data = grown
                D = data
            for p in range(d):
                D[n, p] = S[p]
            lookup[key] = n
            n += 1
        head += 1

    result = data[:n]
    order = np.lexsort(result.T[::-1])
    return np.ascontiguousarray(result[order]), truncated


def find_rows(elements, queries):
    """Indices of query rows in the sorted element matrix (-1 if absent)."""
    cdef i32[:, ::1] E = np.ascontiguousarray(elements, dtype=np.int32)
    cdef i32[:, ::1] Q = np.ascontiguousarray(
        np.asarray(queries, dtype=np.int32).reshape(-1, E.shape[1])
    )
    out = np.empty(Q.shape[0], dtype=np.int64)
    cdef i64[::1] O = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(Q.shape[0]):
            O[i] = _bsearch(E, &Q[i, 0])
    return out


def mult_table(elements, generators):
    """Full multiplication table: entry [i, j] = index of (row i then row j).

    Only the generator columns use row search; the remaining columns are
    composed from them along a breadth-first factorization, costing two
    array lookups per entry independent of the degree.
    """
    arr = np.ascontiguousarray(elements, dtype=np.int32)
    cdef i32[:, ::1] E = arr
    cdef Py_ssize_t n = E.shape[0]
    cdef Py_ssize_t d = E.shape[1]
    gens = np.ascontiguousarray(generators, dtype=np.int32).reshape(-1, d)
    cdef i32[:, ::1] G = gens
    cdef Py_ssize_t m = G.shape[0]
    out = np.empty((n, n), dtype=np.int32)
    cdef i32[:, ::1] T = out
    scratch = np.empty(d, dtype=np.int32)
    cdef i32[::1] S = scratch
    gen_idx = np.empty(m, dtype=np.int64)
    cdef i64[::1] GI = gen_idx
    done = np.zeros(n, dtype=np.uint8)
    cdef u8[::1] D = done
    queue = np.empty(n + m + 1, dtype=np.int64)
    cdef i64[::1] Q = queue
    cdef Py_ssize_t i, j, p, k, head, count
    cdef i64 idx, y, jg
    cdef bint bad = False

    with nogil:
        # identity column and generator columns (the only searched ones)
        for i in range(n):
            T[i, 0] = <i32> i
        D[0] = 1
        Q[0] = 0
        count = 1
        for k in range(m):
            idx = _bsearch(E, &G[k, 0])
            if idx < 0:
                bad = True
                break
            GI[k] = idx
            if not D[idx]:
                for i in range(n):
                    for p in range(d):
                        S[p] = G[k, E[i, p]]
                    y = _bsearch(E, &S[0])
                    if y < 0:
                        bad = True
                        break
                    T[i, idx] = <i32> y
                if bad:
                    break
                D[idx] = 1
                Q[count] = idx
                count += 1
        if not bad:
            head = 0
            while head < count:
                j = Q[head]
                head += 1
                for k in range(m):
                    jg = GI[k]
                    y = T[j, jg]
                    if not D[y]:
                        D[y] = 1
                        for i in range(n):
                            T[i, y] = T[T[i, j], jg]
                        Q[count] = y
                        count += 1
    if bad:
        raise ValueError("a generator row is missing from the element matrix")
    if not done.all():
        raise ValueError("generators do not generate the element set")
    return out


def element_orders(elements):
    """Element orders (lcm of cycle lengths) per image row."""
    cdef i32[:, ::1] E = np.ascontiguousarray(elements, dtype=np.int32)
    cdef Py_ssize_t n = E.shape[0]
    cdef Py_ssize_t d = E.shape[1]
    out = np.empty(n, dtype=np.int64)
    cdef i64[::1] O = out
    seen = np.zeros(d, dtype=np.uint8)
    cdef u8[::1] V = seen
    cdef Py_ssize_t i, start, q
    cdef i64 order, length
    with nogil:
        for i in range(n):
            for q in range(d):
                V[q] = 0
            order = 1
            for start in range(d):
                if V[start]:
                    continue
                length = 1
                V[start] = 1
                q = E[i, start]
                while q != start:
                    V[q] = 1
                    length += 1
                    q = E[i, q]
                order = order // _gcd(order, length) * length
            O[i] = order
    return out


def index_closure(table, seed):
    """Sorted indices of the subgroup generated by the seed indices."""
    cdef i32[:, ::1] T = np.ascontiguousarray(table, dtype=np.int32)
    cdef Py_ssize_t n = T.shape[0]
    seed_arr = np.unique(np.asarray(seed, dtype=np.int64))
    cdef i64[::1] seeds = seed_arr
    cdef Py_ssize_t m = seeds.shape[0]
    if m == 0:
        return np.array([0], dtype=np.int64)
    member = np.zeros(n, dtype=np.uint8)
    cdef u8[::1] M = member
    queue = np.empty(n, dtype=np.int64)
    cdef i64[::1] Q = queue
    cdef Py_ssize_t head = 0, count = 1, j
    cdef i64 x, y
    M[0] = 1
    Q[0] = 0
    with nogil:
        while head < count:
            x = Q[head]
            head += 1
            for j in range(m):
                y = T[x, seeds[j]]
                if not M[y]:
                    M[y] = 1
                    Q[count] = y
                    count += 1
    return np.flatnonzero(member).astype(np.int64)


def commutator_mask(table, inv, orders, left, right, coprime_only):
    """Membership mask of {[a, b]}, optionally restricted to coprime orders.

    Non-coprime order buckets are skipped wholesale before the pair loop.
    """
    cdef i32[:, ::1] T = np.ascontiguousarray(table, dtype=np.int32)
    cdef i64[::1] I = np.ascontiguousarray(inv, dtype=np.int64)
    cdef Py_ssize_t n = T.shape[0]
    mask = np.zeros(n, dtype=bool)
    left_arr = np.asarray(left, dtype=np.int64)
    right_arr = np.asarray(right, dtype=np.int64)
    if len(left_arr) == 0 or len(right_arr) == 0:
        return mask
    orders_arr = np.asarray(orders, dtype=np.int64)
    buckets = []
    if coprime_only:
        left_by = [(int(o), left_arr[orders_arr[left_arr] == o])
                   for o in np.unique(orders_arr[left_arr])]
        right_by = [(int(o), right_arr[orders_arr[right_arr] == o])
                    for o in np.unique(orders_arr[right_arr])]
        for o1, sub_a in left_by:
            for o2, sub_b in right_by:
                if _gcd(o1, o2) == 1:
                    buckets.append((sub_a, sub_b))
    else:
        buckets = [(left_arr, right_arr)]
    cdef u8[::1] M = mask.view(np.uint8)
    cdef i64[::1] A
    cdef i64[::1] B
    cdef Py_ssize_t ai, bi
    cdef i64 a, b, ia, v
    for sub_a, sub_b in buckets:
        A = np.ascontiguousarray(sub_a)
        B = np.ascontiguousarray(sub_b)
        with nogil:
            for ai in range(A.shape[0]):
                a = A[ai]
                ia = I[a]
                for bi in range(B.shape[0]):
                    b = B[bi]
                    v = T[T[T[ia, I[b]], a], b]
                    M[v] = 1
    return mask


def conjugacy_min_reps(table, inv):
    """Per element, the minimal index in its conjugacy class."""
    cdef i32[:, ::1] T = np.ascontiguousarray(table, dtype=np.int32)
    cdef i64[::1] I = np.ascontiguousarray(inv, dtype=np.int64)
    cdef Py_ssize_t n = T.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] L = labels
    cdef Py_ssize_t x, g
    cdef i64 y
    with nogil:
        for x in range(n):
            if L[x] != -1:
                continue
            for g in range(n):
                y = T[T[I[g], x], g]
                L[y] = x
    return labels
