# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of ``_pykernels``. Same signatures, same results."""

from libc.stdlib cimport malloc, free

from . import _pykernels as _py


cdef int _alt(const int* a, int la, const int* b, int lb, int cap) noexcept nogil:
    cdef int i = 0, j = 0, count = 0
    cdef bint want_a = True
    while i < la or j < lb:
        if j >= lb or (i < la and a[i] < b[j]):
            if want_a:
                count += 1
                want_a = False
            i += 1
        elif i >= la or b[j] < a[i]:
            if not want_a:
                count += 1
                want_a = True
            j += 1
        else:
            i += 1
            j += 1
            continue
        if count == cap:
            break
    return count


cdef int* _flatten(edges, int** offsets_out) except NULL:
    cdef Py_ssize_t m = len(edges), total = 0, k = 0, e
    for ed in edges:
        total += len(ed)
    cdef int* flat = <int*>malloc((total + 1) * sizeof(int))
    cdef int* offs = <int*>malloc((m + 1) * sizeof(int))
    if flat == NULL or offs == NULL:
        free(flat)
        free(offs)
        raise MemoryError()
    offs[0] = 0
    for e in range(m):
        for v in edges[e]:
            flat[k] = v
            k += 1
        offs[e + 1] = k
    offsets_out[0] = offs
    return flat


def alternation(a, b, int cap=-1):
    cdef int* offs = NULL
    cdef int* flat = _flatten([a, b], &offs)
    cdef int r
    try:
        r = _alt(flat, offs[1], flat + offs[1], offs[2] - offs[1], cap)
    finally:
        free(flat)
        free(offs)
    return r


cdef long _first_violation(const int* flat, const int* offs, int m, int twice_l) noexcept nogil:
    cdef int need_a = (twice_l + 1) // 2
    cdef int need_b = twice_l // 2
    cdef int ia, ib, la, lb
    for ia in range(m):
        la = offs[ia + 1] - offs[ia]
        if la < need_a:
            continue
        for ib in range(m):
            if ib == ia:
                continue
            lb = offs[ib + 1] - offs[ib]
            if lb < need_b:
                continue
            if _alt(flat + offs[ia], la, flat + offs[ib], lb, twice_l) >= twice_l:
                return <long>ia * m + ib
    return -1


def first_violation(edges, int twice_l):
    cdef int m = len(edges)
    cdef int* offs = NULL
    cdef int* flat = _flatten(edges, &offs)
    cdef long r
    try:
        with nogil:
            r = _first_violation(flat, offs, m, twice_l)
    finally:
        free(flat)
        free(offs)
    if r < 0:
        return None
    return int(r // m), int(r % m)


def lex_least_coloring(int n, int c, edges):
    if n == 0:
        return []
    # edges grouped by their last vertex, as flat arrays
    by_last = [[] for _ in range(n)]
    for ed in edges:
        by_last[ed[len(ed) - 1]].append(ed)
    ordered = [ed for group in by_last for ed in group]
    cdef int* offs = NULL
    cdef int* flat = _flatten(ordered, &offs)
    cdef int* start = <int*>malloc((n + 1) * sizeof(int))
    cdef int* colors = <int*>malloc(n * sizeof(int))
    cdef int v, k, u, cv, idx = 0, e, p
    cdef bint ok, mono
    try:
        for v in range(n):
            start[v] = idx
            idx += len(by_last[v])
        start[n] = idx
        for v in range(n):
            colors[v] = -1
        v = 0
        with nogil:
            while 0 <= v < n:
                colors[v] += 1
                if colors[v] >= c:
                    colors[v] = -1
                    v -= 1
                    continue
                cv = colors[v]
                ok = True
                for e in range(start[v], start[v + 1]):
                    mono = True
                    for p in range(offs[e], offs[e + 1]):
                        if colors[flat[p]] != cv:
                            mono = False
                            break
                    if mono:
                        ok = False
                        break
                if ok:
                    v += 1
        if v < 0:
            return None
        return [colors[k] for k in range(n)]
    finally:
        free(flat)
        free(offs)
        free(start)
        free(colors)


cdef bint _next_perm(int* a, int n) noexcept nogil:
    cdef int i = n - 2, j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


cdef void _sort_small(int* a, int n) noexcept nogil:
    cdef int i, j, t
    for i in range(1, n):
        t = a[i]
        j = i - 1
        while j >= 0 and a[j] > t:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = t


def first_free_order(int n, edges, int twice_l):
    cdef int m = len(edges)
    cdef int* offs = NULL
    cdef int* flat = _flatten(edges, &offs)
    cdef int total = offs[m]
    cdef int* perm = <int*>malloc((n + 1) * sizeof(int))
    cdef int* pos = <int*>malloc((n + 1) * sizeof(int))
    cdef int* rel = <int*>malloc((total + 1) * sizeof(int))
    cdef int k, e, p
    cdef bint found = False, more = True
    try:
        for k in range(n):
            perm[k] = k
        with nogil:
            while more:
                for k in range(n):
                    pos[perm[k]] = k
                for e in range(m):
                    for p in range(offs[e], offs[e + 1]):
                        rel[p] = pos[flat[p]]
                    _sort_small(rel + offs[e], offs[e + 1] - offs[e])
                if _first_violation(rel, offs, m, twice_l) < 0:
                    found = True
                    break
                more = _next_perm(perm, n)
        if not found:
            return None
        return [perm[k] for k in range(n)]
    finally:
        free(flat)
        free(offs)
        free(perm)
        free(pos)
        free(rel)


cdef extern from *:
    ctypedef long long i128 "__int128"

_SMALL = 1 << 61


cdef long long* _ll_array(values, bint* ok) except NULL:
    cdef Py_ssize_t n = len(values), k = 0
    cdef long long* out = <long long*>malloc((n + 1) * sizeof(long long))
    if out == NULL:
        raise MemoryError()
    for v in values:
        if not -_SMALL < v < _SMALL:
            ok[0] = False
            return out
        out[k] = v
        k += 1
    return out


cdef int _sgn128(i128 d) noexcept nogil:
    return (d > 0) - (d < 0)


cdef int _side(long long x, long long y, const long long* xs, const long long* ys, int k, int n) noexcept nogil:
    cdef i128 d
    if k == 0:
        d = <i128>y - ys[0]
    elif k == n:
        d = <i128>y - ys[n - 1]
    else:
        d = (<i128>y - ys[k - 1]) * (<i128>xs[k] - xs[k - 1]) - (<i128>ys[k] - ys[k - 1]) * (<i128>x - xs[k - 1])
    return _sgn128(d)


cdef long _sign_changes(const long long* x1, const long long* y1, int n1,
                        const long long* x2, const long long* y2, int n2) noexcept nogil:
    cdef int i = 0, j = 0, s, prev = 0
    cdef bint zero = False, first = True
    cdef long count = 0
    if n1 == 0 and n2 == 0:
        return -1 if y1[0] == y2[0] else 0
    while i < n1 or j < n2:
        if j >= n2 or (i < n1 and x1[i] < x2[j]):
            s = _side(x1[i], y1[i], x2, y2, j, n2)
            i += 1
        elif i >= n1 or x2[j] < x1[i]:
            s = -_side(x2[j], y2[j], x1, y1, i, n1)
            j += 1
        else:
            s = _sgn128(<i128>y1[i] - y2[j])
            i += 1
            j += 1
        if s == 0:
            if zero or first:
                return -1
            zero = True
            continue
        if not first and s != prev:
            count += 1
        prev = s
        zero = False
        first = False
    return -1 if zero else count


def sign_changes(x1, y1, x2, y2):
    cdef bint ok = True
    cdef long long* a = NULL
    cdef long long* b = NULL
    cdef long long* c = NULL
    cdef long long* d = NULL
    cdef long r
    try:
        a = _ll_array(x1, &ok)
        b = _ll_array(y1, &ok)
        c = _ll_array(x2, &ok)
        d = _ll_array(y2, &ok)
        if not ok:
            return _py.sign_changes(x1, y1, x2, y2)
        r = _sign_changes(a, b, len(x1), c, d, len(x2))
    finally:
        free(a)
        free(b)
        free(c)
        free(d)
    return r


ctypedef unsigned long long u64


cdef bint _first_empty_lens(const long long* a, const long long* b, int w, int* lo_out, int* hi_out) noexcept nogil:
    """First lens of curves ``a``, ``b`` whose plateaus 1..n hold no separating point."""
    cdef int s, lo = 0
    cdef bint crossed = False, split = False, prev = a[0] > b[0], cur
    for s in range(1, w):
        cur = a[s] > b[s]
        if cur != prev:
            if not split:
                lo_out[0] = lo
                hi_out[0] = s
                return True
            crossed = True
            lo = s
            split = False
            prev = cur
        if (a[s] < 0) != (b[s] < 0):
            split = True
    if crossed and not split:
        lo_out[0] = lo
        hi_out[0] = w
        return True
    return False


cdef void _eliminate_wide(long long* lev, char* settled, int m, int w) noexcept nogil:
    cdef int i, j, c, s, lo = 0, hi = 0
    cdef bint found
    cdef long long t
    while True:
        found = False
        for i in range(m):
            for j in range(i + 1, m):
                if settled[i * m + j]:
                    continue
                if _first_empty_lens(lev + i * w, lev + j * w, w, &lo, &hi):
                    found = True
                    break
                settled[i * m + j] = 1
            if found:
                break
        if not found:
            return
        for s in range(lo, hi):
            t = lev[i * w + s]
            lev[i * w + s] = lev[j * w + s]
            lev[j * w + s] = t
        for c in range(m):
            settled[i * m + c] = 0
            settled[c * m + i] = 0
            settled[j * m + c] = 0
            settled[c * m + j] = 0


def _eliminate_levels_wide(levels, int n):
    cdef int m = len(levels), w = n + 1, i, s
    cdef long long* lev = <long long*>malloc((m * w + 1) * sizeof(long long))
    cdef char* settled = <char*>malloc(m * m + 1)
    if lev == NULL or settled == NULL:
        free(lev); free(settled)
        raise MemoryError()
    try:
        for i in range(m):
            row = levels[i]
            for s in range(w):
                lev[i * w + s] = row[s]
        for i in range(m * m):
            settled[i] = 0
        with nogil:
            _eliminate_wide(lev, settled, m, w)
        for i in range(m):
            row = levels[i]
            for s in range(w):
                row[s] = lev[i * w + s]
    finally:
        free(lev); free(settled)


def eliminate_levels(levels, int n):
    cdef int m = len(levels)
    if m == 0:
        return
    if n + 1 > 62:
        return _eliminate_levels_wide(levels, n)
    cdef u64 full = (<u64>1 << (n + 1)) - 1
    cdef u64 inner = full - 1
    cdef long long* lev = <long long*>malloc((m * (n + 1) + 1) * sizeof(long long))
    cdef u64* above = <u64*>malloc((m * m + 1) * sizeof(u64))
    cdef u64* neg = <u64*>malloc((m + 1) * sizeof(u64))
    cdef char* settled = <char*>malloc(m * m + 1)
    cdef int i, j, c, s, lo, hi, w = n + 1
    cdef u64 a, cuts, split, r, keep, ni, nj, aic, ajc, bit
    cdef bint found
    cdef long long t
    if lev == NULL or above == NULL or neg == NULL or settled == NULL:
        free(lev); free(above); free(neg); free(settled)
        raise MemoryError()
    try:
        for i in range(m):
            row = levels[i]
            for s in range(w):
                lev[i * w + s] = row[s]
        with nogil:
            for i in range(m):
                neg[i] = 0
                for s in range(w):
                    if lev[i * w + s] < 0:
                        neg[i] |= <u64>1 << s
                for j in range(m):
                    settled[i * m + j] = 0
                    a = 0
                    for s in range(w):
                        if lev[i * w + s] > lev[j * w + s]:
                            a |= <u64>1 << s
                    above[i * m + j] = a
            while True:
                found = False
                for i in range(m):
                    for j in range(i + 1, m):
                        if settled[i * m + j]:
                            continue
                        a = above[i * m + j]
                        cuts = (a ^ (a << 1)) & inner
                        if cuts:
                            split = (neg[i] ^ neg[j]) & inner
                            lo = 0
                            while True:
                                if cuts:
                                    bit = cuts & (~cuts + 1)
                                    hi = 0
                                    while (<u64>1 << hi) != bit:
                                        hi += 1
                                else:
                                    hi = n + 1
                                if not (split & ((<u64>1 << hi) - (<u64>1 << lo))):
                                    found = True
                                    break
                                if not cuts:
                                    break
                                cuts &= cuts - 1
                                lo = hi
                            if found:
                                break
                        settled[i * m + j] = 1
                    if found:
                        break
                if not found:
                    break
                for s in range(lo, hi):
                    t = lev[i * w + s]
                    lev[i * w + s] = lev[j * w + s]
                    lev[j * w + s] = t
                r = (<u64>1 << hi) - (<u64>1 << lo)
                keep = full ^ r
                ni = neg[i]
                nj = neg[j]
                neg[i] = (ni & keep) | (nj & r)
                neg[j] = (nj & keep) | (ni & r)
                for c in range(m):
                    if c == i or c == j:
                        continue
                    aic = above[i * m + c]
                    ajc = above[j * m + c]
                    above[i * m + c] = (aic & keep) | (ajc & r)
                    above[j * m + c] = (ajc & keep) | (aic & r)
                    above[c * m + i] = full ^ above[i * m + c]
                    above[c * m + j] = full ^ above[j * m + c]
                above[i * m + j] ^= r
                above[j * m + i] ^= r
                for c in range(m):
                    settled[i * m + c] = 0
                    settled[c * m + i] = 0
                    settled[j * m + c] = 0
                    settled[c * m + j] = 0
        for i in range(m):
            row = levels[i]
            for s in range(w):
                row[s] = lev[i * w + s]
    finally:
        free(lev); free(above); free(neg); free(settled)
