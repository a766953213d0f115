# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) kernel; mirrors matroidsplit._kernel.pure bit for bit.

Same conventions: rows/masks are ints with bit j = column j, packed columns
have bit i = row i.  Function-level docs live in the pure twin.
"""

from libc.stdlib cimport free, malloc
from libc.stdint cimport uint64_t

BACKEND = "compiled"

KIND_SIMPLE_RANK3 = 1
KIND_PROFILE = 2
KIND_CANONICAL = 3


cdef int _load_rows(object rows, uint64_t **buf) except -1:
    cdef Py_ssize_t n = len(rows)
    cdef uint64_t *arr = <uint64_t *> malloc((n if n else 1) * sizeof(uint64_t))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        arr[i] = <uint64_t> rows[i]
    buf[0] = arr
    return <int> n


cdef object _tuple_u64(uint64_t *arr, int n):
    out = []
    cdef int i
    for i in range(n):
        out.append(int(arr[i]))
    return tuple(out)


cdef object _tuple_int(int *arr, int n):
    out = []
    cdef int i
    for i in range(n):
        out.append(arr[i])
    return tuple(out)


cdef int _rank_c(uint64_t *rows, int n) nogil:
    cdef uint64_t basis[64]
    cdef int nb = 0
    cdef int i, b
    cdef uint64_t row, low
    for i in range(n):
        row = rows[i]
        for b in range(nb):
            low = basis[b] & (~basis[b] + 1)
            if row & low:
                row ^= basis[b]
        if row and nb < 64:
            basis[nb] = row
            nb += 1
    return nb


def rank(rows):
    cdef uint64_t *arr
    cdef int n = _load_rows(rows, &arr)
    cdef int r = _rank_c(arr, n)
    free(arr)
    return r


def rank_masked(rows, mask):
    cdef uint64_t *arr
    cdef int n = _load_rows(rows, &arr)
    cdef uint64_t m = <uint64_t> mask
    cdef int i
    for i in range(n):
        arr[i] &= m
    cdef int r = _rank_c(arr, n)
    free(arr)
    return r


cdef int _rref_c(uint64_t *rows, int n, uint64_t *out) nogil:
    # Reduced echelon rows into out (ascending pivot order); returns count.
    cdef int nb = 0
    cdef int i, b, j
    cdef uint64_t row, low
    for i in range(n):
        row = rows[i]
        for b in range(nb):
            low = out[b] & (~out[b] + 1)
            if row & low:
                row ^= out[b]
        if row and nb < 64:
            out[nb] = row
            low = row & (~row + 1)
            for b in range(nb):
                if out[b] & low:
                    out[b] ^= row
            nb += 1
    cdef uint64_t key
    for i in range(1, nb):
        key = out[i]
        j = i - 1
        while j >= 0 and (out[j] & (~out[j] + 1)) > (key & (~key + 1)):
            out[j + 1] = out[j]
            j -= 1
        out[j + 1] = key
    return nb


cdef int _lowbit_index(uint64_t v) nogil:
    cdef int idx = 0
    while not (v & 1):
        v >>= 1
        idx += 1
    return idx


def rref(rows):
    cdef uint64_t *arr
    cdef int n = _load_rows(rows, &arr)
    cdef uint64_t out[64]
    cdef int nb = _rref_c(arr, n, out)
    free(arr)
    return _tuple_u64(out, nb)


def rref_pivots(rows):
    cdef uint64_t *arr
    cdef int n = _load_rows(rows, &arr)
    cdef uint64_t out[64]
    cdef int nb = _rref_c(arr, n, out)
    free(arr)
    cdef int piv[64]
    cdef int i
    for i in range(nb):
        piv[i] = _lowbit_index(out[i])
    return _tuple_u64(out, nb), _tuple_int(piv, nb)


def in_rowspace(rows, vec):
    cdef uint64_t *arr
    cdef int n = _load_rows(rows, &arr)
    cdef uint64_t out[64]
    cdef int nb = _rref_c(arr, n, out)
    free(arr)
    cdef uint64_t v = <uint64_t> vec
    cdef int b
    cdef uint64_t low
    for b in range(nb):
        low = out[b] & (~out[b] + 1)
        if v & low:
            v ^= out[b]
    return v == 0


def nullspace_basis(rows, n_cols):
    cdef uint64_t *arr
    cdef int n = _load_rows(rows, &arr)
    cdef uint64_t out[64]
    cdef int nb = _rref_c(arr, n, out)
    free(arr)
    cdef int nc = <int> n_cols
    cdef uint64_t pivot_mask = 0
    cdef int i, j
    cdef int piv[64]
    for i in range(nb):
        piv[i] = _lowbit_index(out[i])
        pivot_mask |= (<uint64_t> 1) << piv[i]
    basis = []
    cdef uint64_t vec
    for j in range(nc):
        if (pivot_mask >> j) & 1:
            continue
        vec = (<uint64_t> 1) << j
        for i in range(nb):
            if (out[i] >> j) & 1:
                vec |= (<uint64_t> 1) << piv[i]
        basis.append(int(vec))
    return tuple(basis)


def space_min_supports(basis):
    basis = tuple(basis)
    cdef Py_ssize_t k = len(basis)
    if k > 24:
        raise ValueError("span enumeration limited to 24 basis vectors")
    cdef Py_ssize_t count = (<Py_ssize_t> 1) << k
    cdef uint64_t *vecs = <uint64_t *> malloc(count * sizeof(uint64_t))
    if vecs == NULL:
        raise MemoryError()
    vecs[0] = 0
    cdef Py_ssize_t filled = 1, i
    cdef Py_ssize_t bi
    cdef uint64_t b
    for bi in range(k):
        b = <uint64_t> basis[bi]
        for i in range(filled):
            vecs[filled + i] = vecs[i] ^ b
        filled *= 2
    nonzero = []
    for i in range(count):
        if vecs[i]:
            nonzero.append(int(vecs[i]))
    free(vecs)
    nonzero.sort(key=_popcount_key)
    minimal = []
    cdef uint64_t v, u
    cdef bint dominated
    for pv in nonzero:
        v = <uint64_t> pv
        dominated = False
        for pu in minimal:
            u = <uint64_t> pu
            if (u & v) == u:
                dominated = True
                break
        if not dominated:
            minimal.append(pv)
    minimal.sort()
    return tuple(minimal)


def _popcount_key(v):
    return (bin(v).count("1"), v)


cdef void _columns_c(uint64_t *rows, int n, int n_cols, uint64_t *cols) nogil:
    cdef int i, j
    for j in range(n_cols):
        cols[j] = 0
    for i in range(n):
        for j in range(n_cols):
            if (rows[i] >> j) & 1:
                cols[j] |= (<uint64_t> 1) << i


def columns(rows, n_cols):
    cdef uint64_t *arr
    cdef int n = _load_rows(rows, &arr)
    cdef int nc = <int> n_cols
    cdef uint64_t cols[64]
    _columns_c(arr, n, nc, cols)
    free(arr)
    return _tuple_u64(cols, nc)


def rows_from_columns(cols, n_rows):
    cdef int nr = <int> n_rows
    cdef int nc = <int> len(cols)
    cdef uint64_t out[64]
    cdef int i, j
    cdef uint64_t col
    for i in range(nr):
        out[i] = 0
    for j in range(nc):
        col = <uint64_t> cols[j]
        for i in range(nr):
            if (col >> i) & 1:
                out[i] |= (<uint64_t> 1) << j
    return _tuple_u64(out, nr)


cdef int _delete_cols_c(uint64_t *rows, int n, int n_cols, uint64_t dmask) nogil:
    # Compact columns not in dmask, in place; returns new column count.
    cdef int keep[64]
    cdef int nk = 0
    cdef int i, j
    for j in range(n_cols):
        if not (dmask >> j) & 1:
            keep[nk] = j
            nk += 1
    cdef uint64_t packed
    for i in range(n):
        packed = 0
        for j in range(nk):
            if (rows[i] >> keep[j]) & 1:
                packed |= (<uint64_t> 1) << j
        rows[i] = packed
    return nk


cdef int _pivot_out_c(uint64_t *rows, int n, int n_cols, uint64_t cmask) nogil:
    # Contraction pivoting; returns remaining row count (rows shifted down).
    cdef int c, i, pivot
    cdef uint64_t pv
    for c in range(n_cols):
        if not (cmask >> c) & 1:
            continue
        pivot = -1
        for i in range(n):
            if (rows[i] >> c) & 1:
                pivot = i
                break
        if pivot < 0:
            continue
        pv = rows[pivot]
        for i in range(n):
            if (rows[i] >> c) & 1:
                rows[i] ^= pv
        for i in range(pivot, n - 1):
            rows[i] = rows[i + 1]
        n -= 1
    return n


def delete_rows(rows, n_cols, dmask):
    cdef uint64_t *arr
    cdef int n = _load_rows(rows, &arr)
    _delete_cols_c(arr, n, <int> n_cols, <uint64_t> dmask)
    out = _tuple_u64(arr, n)
    free(arr)
    return out


def contract_rows(rows, n_cols, cmask):
    cdef uint64_t *arr
    cdef int n = _load_rows(rows, &arr)
    n = _pivot_out_c(arr, n, <int> n_cols, <uint64_t> cmask)
    _delete_cols_c(arr, n, <int> n_cols, <uint64_t> cmask)
    out = _tuple_u64(arr, n)
    free(arr)
    return out


def minor_rows(rows, n_cols, cmask, dmask):
    cdef uint64_t *arr
    cdef int n = _load_rows(rows, &arr)
    n = _pivot_out_c(arr, n, <int> n_cols, <uint64_t> cmask)
    _delete_cols_c(arr, n, <int> n_cols, (<uint64_t> cmask) | (<uint64_t> dmask))
    out = _tuple_u64(arr, n)
    free(arr)
    return out


cdef void _profile_c(uint64_t *rows, int n, int n_cols,
                     int *rank_out, int *loops_out,
                     int *sizes, int *n_sizes) nogil:
    cdef uint64_t cols[64]
    _columns_c(rows, n, n_cols, cols)
    cdef int loops = 0
    cdef int ns = 0
    cdef uint64_t seen[64]
    cdef int counts[64]
    cdef bint found
    cdef int s, i, j, key
    for j in range(n_cols):
        if cols[j] == 0:
            loops += 1
            continue
        found = False
        for s in range(ns):
            if seen[s] == cols[j]:
                counts[s] += 1
                found = True
                break
        if not found:
            seen[ns] = cols[j]
            counts[ns] = 1
            ns += 1
    for i in range(1, ns):
        key = counts[i]
        j = i - 1
        while j >= 0 and counts[j] > key:
            counts[j + 1] = counts[j]
            j -= 1
        counts[j + 1] = key
    rank_out[0] = _rank_c(rows, n)
    loops_out[0] = loops
    for i in range(ns):
        sizes[i] = counts[i]
    n_sizes[0] = ns


def profile(rows, n_cols):
    cdef uint64_t *arr
    cdef int n = _load_rows(rows, &arr)
    cdef int r, loops, ns
    cdef int sizes[64]
    _profile_c(arr, n, <int> n_cols, &r, &loops, sizes, &ns)
    free(arr)
    return (r, loops, _tuple_int(sizes, ns))


def cols_rank(cols):
    return rank(tuple(cols))


# -- GL(r, 2) tables --------------------------------------------------------------

_GL_CACHE = {}


def _gl_blob(r):
    if r in _GL_CACHE:
        return _GL_CACHE[r]
    if r == 0:
        result = (((0,),), b"\x00")
        _GL_CACHE[r] = result
        return result
    n = 1 << r
    tables = []
    images = [0] * r

    def extend(i, span):
        if i == r:
            table = [0] * n
            for v in range(1, n):
                low = v & -v
                table[v] = table[v ^ low] ^ images[low.bit_length() - 1]
            tables.append(tuple(table))
            return
        for cand in range(1, n):
            if cand in span:
                continue
            images[i] = cand
            extend(i + 1, span | {s ^ cand for s in span})

    extend(0, {0})
    blob = bytes(v for table in tables for v in table)
    result = (tuple(tables), blob)
    _GL_CACHE[r] = result
    return result


def gl_tables(r):
    tables, _ = _gl_blob(r)
    return tables


def canon_key_cols(cols, r):
    cdef int rr = <int> r
    if rr == 0:
        return tuple(sorted(cols))
    blob = _gl_blob(rr)[1]
    cdef const unsigned char *tab = blob
    cdef Py_ssize_t n_tables = len(blob) >> rr
    cdef int k = <int> len(cols)
    cdef int base[64]
    cdef int best[64]
    cdef int cand[64]
    cdef int i, j, key
    for i in range(k):
        base[i] = <int> cols[i]
    cdef Py_ssize_t t, off
    cdef int width = 1 << rr
    cdef bint have_best = False
    cdef int cmp_state
    for t in range(n_tables):
        off = t * width
        for i in range(k):
            cand[i] = tab[off + base[i]]
        for i in range(1, k):
            key = cand[i]
            j = i - 1
            while j >= 0 and cand[j] > key:
                cand[j + 1] = cand[j]
                j -= 1
            cand[j + 1] = key
        if not have_best:
            for i in range(k):
                best[i] = cand[i]
            have_best = True
            continue
        cmp_state = 0
        for i in range(k):
            if cand[i] < best[i]:
                cmp_state = -1
                break
            if cand[i] > best[i]:
                cmp_state = 1
                break
        if cmp_state < 0:
            for i in range(k):
                best[i] = cand[i]
    return _tuple_int(best, k)


def is_canonical(cols_sorted, r):
    cdef int rr = <int> r
    if rr == 0:
        return True
    blob = _gl_blob(rr)[1]
    cdef const unsigned char *tab = blob
    cdef Py_ssize_t n_tables = len(blob) >> rr
    cdef int k = <int> len(cols_sorted)
    cdef int base[64]
    cdef int cand[64]
    cdef int i, j, key
    for i in range(k):
        base[i] = <int> cols_sorted[i]
    cdef Py_ssize_t t, off
    cdef int width = 1 << rr
    cdef int cmp_state
    for t in range(n_tables):
        off = t * width
        for i in range(k):
            cand[i] = tab[off + base[i]]
        for i in range(1, k):
            key = cand[i]
            j = i - 1
            while j >= 0 and cand[j] > key:
                cand[j + 1] = cand[j]
                j -= 1
            cand[j + 1] = key
        cmp_state = 0
        for i in range(k):
            if cand[i] < base[i]:
                cmp_state = -1
                break
            if cand[i] > base[i]:
                cmp_state = 1
                break
        if cmp_state < 0:
            return False
    return True


# -- minor search -------------------------------------------------------------------


cdef bint _match_fast(uint64_t *mrows, int mn, int m_cols, int kind,
                      int want_rank, int want_loops,
                      int *want_sizes, int want_ns) nogil:
    cdef int r, loops, ns
    cdef int sizes[64]
    cdef int i, j
    cdef uint64_t cols[64]
    if kind == 1:
        _columns_c(mrows, mn, m_cols, cols)
        for j in range(m_cols):
            if cols[j] == 0:
                return False
            for i in range(j):
                if cols[i] == cols[j]:
                    return False
        return _rank_c(mrows, mn) == 3
    _profile_c(mrows, mn, m_cols, &r, &loops, sizes, &ns)
    if r != want_rank or loops != want_loops or ns != want_ns:
        return False
    for i in range(ns):
        if sizes[i] != want_sizes[i]:
            return False
    return True


cdef int _col_of(uint64_t *rows, int n, int j) nogil:
    cdef int i, col = 0
    for i in range(n):
        if (rows[i] >> j) & 1:
            col |= 1 << i
    return col


def find_minors(rows, n_cols, c_size, d_size, kind, want, limit=1, avoid=0):
    cdef uint64_t *arr
    cdef int n = _load_rows(rows, &arr)
    cdef int nc = <int> n_cols
    cdef int cs = <int> c_size
    cdef int ds = <int> d_size
    cdef int knd = <int> kind
    cdef int lim = <int> limit
    cdef uint64_t avd = <uint64_t> avoid

    cdef int want_rank = 0, want_loops = 0, want_ns = 0
    cdef int want_sizes[64]
    want_key = None
    cdef int i, j
    if knd == 2:
        want_rank = <int> want[0]
        want_loops = <int> want[1]
        want_ns = <int> len(want[2])
        for i in range(want_ns):
            want_sizes[i] = <int> want[2][i]
    elif knd == 3:
        want_key = want
    elif knd != 1:
        free(arr)
        raise ValueError(f"unknown minor matcher kind {kind}")

    cdef int free_idx[64]
    cdef int nfree = 0
    for j in range(nc):
        if not (avd >> j) & 1:
            free_idx[nfree] = j
            nfree += 1

    out = []
    if cs < 0 or ds < 0 or cs + ds > nfree:
        free(arr)
        return out

    cdef int d_pos[64]
    cdef int c_pos[64]
    cdef int rest[64]
    cdef int nrest, mn, ii, m_cols, nred
    cdef uint64_t dmask, cmask
    cdef uint64_t work[64]
    cdef uint64_t reduced[64]
    cdef bint d_done = False, c_done, hit

    m_cols = nc - cs - ds
    for i in range(ds):
        d_pos[i] = i
    while not d_done:
        dmask = 0
        for i in range(ds):
            dmask |= (<uint64_t> 1) << free_idx[d_pos[i]]
        nrest = 0
        for i in range(nfree):
            if not (dmask >> free_idx[i]) & 1:
                rest[nrest] = free_idx[i]
                nrest += 1
        if cs <= nrest:
            for i in range(cs):
                c_pos[i] = i
            c_done = False
            while not c_done:
                cmask = 0
                for i in range(cs):
                    cmask |= (<uint64_t> 1) << rest[c_pos[i]]
                for ii in range(n):
                    work[ii] = arr[ii] & cmask
                if _rank_c(work, n) == cs:
                    for ii in range(n):
                        work[ii] = arr[ii]
                    mn = _pivot_out_c(work, n, nc, cmask)
                    _delete_cols_c(work, mn, nc, cmask | dmask)
                    if knd == 3:
                        nred = _rref_c(work, mn, reduced)
                        if nred == <int> want_key[0]:
                            mcols = []
                            for j in range(m_cols):
                                mcols.append(_col_of(reduced, nred, j))
                            hit = canon_key_cols(tuple(mcols), nred) == want_key[1]
                        else:
                            hit = False
                    else:
                        hit = _match_fast(work, mn, m_cols, knd, want_rank,
                                          want_loops, want_sizes, want_ns)
                    if hit:
                        out.append((int(cmask), int(dmask)))
                        if lim and len(out) >= lim:
                            free(arr)
                            return out
                if cs == 0:
                    c_done = True
                else:
                    i = cs - 1
                    while i >= 0 and c_pos[i] == nrest - cs + i:
                        i -= 1
                    if i < 0:
                        c_done = True
                    else:
                        c_pos[i] += 1
                        for j in range(i + 1, cs):
                            c_pos[j] = c_pos[j - 1] + 1
        if ds == 0:
            d_done = True
        else:
            i = ds - 1
            while i >= 0 and d_pos[i] == nfree - ds + i:
                i -= 1
            if i < 0:
                d_done = True
            else:
                d_pos[i] += 1
                for j in range(i + 1, ds):
                    d_pos[j] = d_pos[j - 1] + 1
    free(arr)
    return out
