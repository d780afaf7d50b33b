# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels.

Same contracts as ``_pykernels``.  Integer work is done in int64 with
checked arithmetic; any overflow raises ``OverflowError`` and the caller is
expected to retry with the arbitrary-precision fallback.
"""

from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    """
    static inline int iso_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int iso_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int iso_mul_ovf(long long a, long long b, long long *r) nogil
    int iso_add_ovf(long long a, long long b, long long *r) nogil


cdef long long LLMIN = -9223372036854775807 - 1


cdef inline long long llabs_(long long v) nogil:
    return -v if v < 0 else v


cdef int axpy(long long *dst, const long long *src, long long c,
              Py_ssize_t count, Py_ssize_t dstride, Py_ssize_t sstride) nogil:
    # dst += c * src, elementwise; returns -1 on overflow
    cdef Py_ssize_t t
    cdef long long prod, s
    for t in range(count):
        if src[t * sstride] == 0:
            continue
        if iso_mul_ovf(c, src[t * sstride], &prod):
            return -1
        if iso_add_ovf(dst[t * dstride], prod, &s):
            return -1
        dst[t * dstride] = s
    return 0


cdef inline void balanced_divmod(long long v, long long p, long long *q, long long *r) nogil:
    cdef long long qq = v / p
    cdef long long rr = v - qq * p
    cdef long long ar = llabs_(rr)
    cdef long long ap = llabs_(p)
    if rr != 0 and ar > ap - ar:
        if (rr > 0) == (p > 0):
            qq += 1
            rr -= p
        else:
            qq -= 1
            rr += p
    q[0] = qq
    r[0] = rr


cdef int row_op(long long *A, Py_ssize_t n, Py_ssize_t k, Py_ssize_t i, long long c,
                Py_ssize_t *rowcnt, Py_ssize_t *colcnt) nogil:
    # row k += c * row i, keeping nonzero counts current; -1 on overflow
    cdef Py_ssize_t t
    cdef long long src, old, prod, s
    cdef long long *dst = &A[k * n]
    cdef const long long *srow = &A[i * n]
    for t in range(n):
        src = srow[t]
        if src == 0:
            continue
        if iso_mul_ovf(c, src, &prod):
            return -1
        old = dst[t]
        if iso_add_ovf(old, prod, &s):
            return -1
        dst[t] = s
        if old == 0 and s != 0:
            rowcnt[k] += 1
            colcnt[t] += 1
        elif old != 0 and s == 0:
            rowcnt[k] -= 1
            colcnt[t] -= 1
    return 0


cdef int col_op(long long *A, Py_ssize_t m, Py_ssize_t n, Py_ssize_t l, Py_ssize_t j,
                long long c, Py_ssize_t *rowcnt, Py_ssize_t *colcnt) nogil:
    # column l += c * column j, keeping nonzero counts current; -1 on overflow
    cdef Py_ssize_t t
    cdef long long src, old, prod, s
    for t in range(m):
        src = A[t * n + j]
        if src == 0:
            continue
        if iso_mul_ovf(c, src, &prod):
            return -1
        old = A[t * n + l]
        if iso_add_ovf(old, prod, &s):
            return -1
        A[t * n + l] = s
        if old == 0 and s != 0:
            rowcnt[t] += 1
            colcnt[l] += 1
        elif old != 0 and s == 0:
            rowcnt[t] -= 1
            colcnt[l] -= 1
    return 0


def diagonalize(matrix, Py_ssize_t ncols, bint want_left=False, bint want_right=False):
    cdef Py_ssize_t m = len(matrix)
    cdef Py_ssize_t n = ncols
    cdef Py_ssize_t i, j, k, l, t, a, b, bi, bj, na, nb
    cdef long long p, q, r, v, best_abs, best_cost, cost, mv_abs
    cdef long long *A = NULL
    cdef long long *U = NULL
    cdef long long *V = NULL
    cdef Py_ssize_t *rowcnt = NULL
    cdef Py_ssize_t *colcnt = NULL
    cdef Py_ssize_t *arows = NULL
    cdef Py_ssize_t *acols = NULL
    cdef int moved, overflow = 0, done
    pivots = []

    A = <long long *> calloc(max(m * n, 1), sizeof(long long))
    rowcnt = <Py_ssize_t *> calloc(max(m, 1), sizeof(Py_ssize_t))
    colcnt = <Py_ssize_t *> calloc(max(n, 1), sizeof(Py_ssize_t))
    arows = <Py_ssize_t *> calloc(max(m, 1), sizeof(Py_ssize_t))
    acols = <Py_ssize_t *> calloc(max(n, 1), sizeof(Py_ssize_t))
    if want_left:
        U = <long long *> calloc(max(m * m, 1), sizeof(long long))
    if want_right:
        V = <long long *> calloc(max(n * n, 1), sizeof(long long))
    try:
        if A == NULL or rowcnt == NULL or colcnt == NULL or arows == NULL or acols == NULL \
                or (want_left and U == NULL) or (want_right and V == NULL):
            raise MemoryError()
        for i in range(m):
            row = matrix[i]
            for j in range(n):
                v = row[j]
                A[i * n + j] = v
                if v != 0:
                    rowcnt[i] += 1
                    colcnt[j] += 1
        if want_left:
            for i in range(m):
                U[i * m + i] = 1
        if want_right:
            for j in range(n):
                V[j * n + j] = 1
        # active rows/columns; rows and columns that become zero never revive
        na = 0
        for i in range(m):
            if rowcnt[i]:
                arows[na] = i
                na += 1
        nb = 0
        for j in range(n):
            if colcnt[j]:
                acols[nb] = j
                nb += 1

        while True:
            # drop rows/columns that became zero
            a = 0
            while a < na:
                if rowcnt[arows[a]] == 0:
                    na -= 1
                    arows[a] = arows[na]
                else:
                    a += 1
            b = 0
            while b < nb:
                if colcnt[acols[b]] == 0:
                    nb -= 1
                    acols[b] = acols[nb]
                else:
                    b += 1
            if na == 0:
                break
            # pivot: smallest |entry|, ties by Markowitz cost; a cost-0 unit is final
            bi = -1
            bj = -1
            best_abs = 0
            best_cost = 0
            done = 0
            for a in range(na):
                i = arows[a]
                for b in range(nb):
                    j = acols[b]
                    v = A[i * n + j]
                    if v == 0:
                        continue
                    v = llabs_(v)
                    cost = (rowcnt[i] - 1) * (colcnt[j] - 1)
                    if bi < 0 or v < best_abs or (v == best_abs and cost < best_cost):
                        bi = i
                        bj = j
                        best_abs = v
                        best_cost = cost
                        if v == 1 and cost == 0:
                            done = 1
                            break
                if done:
                    break
            i = bi
            j = bj
            while True:
                p = A[i * n + j]
                moved = 0
                mv_abs = 0
                for a in range(na):
                    k = arows[a]
                    if k == i:
                        continue
                    v = A[k * n + j]
                    if v == 0:
                        continue
                    balanced_divmod(v, p, &q, &r)
                    if q != 0:
                        if row_op(A, n, k, i, -q, rowcnt, colcnt) < 0:
                            overflow = 1
                            break
                        if want_left and axpy(&U[k * m], &U[i * m], -q, m, 1, 1) < 0:
                            overflow = 1
                            break
                    if r != 0 and (not moved or llabs_(r) < mv_abs):
                        moved = 1
                        mv_abs = llabs_(r)
                        bi = k
                if overflow:
                    break
                if moved:
                    i = bi
                    continue
                for b in range(nb):
                    l = acols[b]
                    if l == j:
                        continue
                    v = A[i * n + l]
                    if v == 0:
                        continue
                    balanced_divmod(v, p, &q, &r)
                    if q != 0:
                        if col_op(A, m, n, l, j, -q, rowcnt, colcnt) < 0:
                            overflow = 1
                            break
                        if want_right and axpy(&V[l], &V[j], -q, n, n, n) < 0:
                            overflow = 1
                            break
                    if r != 0 and (not moved or llabs_(r) < mv_abs):
                        moved = 1
                        mv_abs = llabs_(r)
                        bj = l
                if overflow:
                    break
                if moved:
                    j = bj
                    continue
                break
            if overflow:
                break
            p = A[i * n + j]
            if p < 0:
                if p == LLMIN:
                    overflow = 1
                    break
                A[i * n + j] = -p
                p = -p
                if want_left:
                    for t in range(m):
                        if U[i * m + t] == LLMIN:
                            overflow = 1
                            break
                        U[i * m + t] = -U[i * m + t]
                    if overflow:
                        break
            pivots.append((i, j, p))
            # retire the pivot row and column
            rowcnt[i] = 0
            colcnt[j] = 0
        if overflow:
            raise OverflowError("int64 overflow in diagonalize")

        left = None
        right = None
        if want_left:
            left = [[U[i * m + t] for t in range(m)] for i in range(m)]
        if want_right:
            right = [[V[k * n + t] for t in range(n)] for k in range(n)]
        return pivots, left, right
    finally:
        free(A)
        free(U)
        free(V)
        free(rowcnt)
        free(colcnt)
        free(arows)
        free(acols)


def search_endomorphisms(mul, gens, tree, candidates, bint bijective=True):
    cdef Py_ssize_t n = len(mul)
    cdef Py_ssize_t k = len(gens)
    cdef Py_ssize_t ntree = len(tree)
    cdef Py_ssize_t a, x, t, total
    cdef int *M = NULL
    cdef int *G = NULL
    cdef int *TE = NULL
    cdef int *TP = NULL
    cdef int *TA = NULL
    cdef int *C = NULL
    cdef int *coff = NULL
    cdef int *clen = NULL
    cdef int *idx = NULL
    cdef int *img = NULL
    cdef int *chosen = NULL
    cdef char *seen = NULL
    cdef int ok
    out = []
    if k == 0:
        return [tuple(range(n))] if n == 1 else []
    for c in candidates:
        if len(c) == 0:
            return out
    total = sum(len(c) for c in candidates)
    M = <int *> malloc(n * n * sizeof(int))
    G = <int *> malloc(k * sizeof(int))
    TE = <int *> malloc(max(ntree, 1) * sizeof(int))
    TP = <int *> malloc(max(ntree, 1) * sizeof(int))
    TA = <int *> malloc(max(ntree, 1) * sizeof(int))
    C = <int *> malloc(total * sizeof(int))
    coff = <int *> malloc(k * sizeof(int))
    clen = <int *> malloc(k * sizeof(int))
    idx = <int *> calloc(k, sizeof(int))
    img = <int *> calloc(n, sizeof(int))
    chosen = <int *> malloc(k * sizeof(int))
    seen = <char *> malloc(n)
    try:
        if M == NULL or G == NULL or TE == NULL or TP == NULL or TA == NULL or C == NULL \
                or coff == NULL or clen == NULL or idx == NULL or img == NULL \
                or chosen == NULL or seen == NULL:
            raise MemoryError()
        for x in range(n):
            row = mul[x]
            for t in range(n):
                M[x * n + t] = row[t]
        for a in range(k):
            G[a] = gens[a]
        for t in range(ntree):
            e, par, ga = tree[t]
            TE[t] = e
            TP[t] = par
            TA[t] = ga
        t = 0
        for a in range(k):
            coff[a] = t
            clen[a] = len(candidates[a])
            for c in candidates[a]:
                C[t] = c
                t += 1
        while True:
            for a in range(k):
                chosen[a] = C[coff[a] + idx[a]]
            img[0] = 0
            for t in range(ntree):
                img[TE[t]] = M[img[TP[t]] * n + chosen[TA[t]]]
            ok = 1
            for a in range(k):
                for x in range(n):
                    if img[M[x * n + G[a]]] != M[img[x] * n + chosen[a]]:
                        ok = 0
                        break
                if not ok:
                    break
            if ok and bijective:
                for x in range(n):
                    seen[x] = 0
                for x in range(n):
                    if seen[img[x]]:
                        ok = 0
                        break
                    seen[img[x]] = 1
            if ok:
                out.append(tuple([img[x] for x in range(n)]))
            a = k - 1
            while a >= 0:
                idx[a] += 1
                if idx[a] < clen[a]:
                    break
                idx[a] = 0
                a -= 1
            if a < 0:
                break
        return out
    finally:
        free(M)
        free(G)
        free(TE)
        free(TP)
        free(TA)
        free(C)
        free(coff)
        free(clen)
        free(idx)
        free(img)
        free(chosen)
        free(seen)
