"""Pure-Python GF(2) kernel: bit-packed rows, minor search, canonical forms.

Reference implementation of the hot-loop API.  The compiled twin in
``_speed.pyx`` mirrors every function here bit for bit; the package picks
one at import time (see ``_kernel.__init__``).

Conventions:
  * a matrix is a sequence of ints, bit ``j`` of a row = entry in column ``j``
  * a column vector over rows 0..r-1 is an int with bit ``i`` = entry in row ``i``
  * masks address columns the same way rows do
"""

from __future__ import annotations

from itertools import combinations

BACKEND = "pure"

# Matches `kind` arguments of find_minors.
KIND_SIMPLE_RANK3 = 1
KIND_PROFILE = 2
KIND_CANONICAL = 3


def rank(rows) -> int:
    """GF(2) row rank by Gaussian elimination on packed rows."""
    basis = []
    for row in rows:
        for b in basis:
            low = b & -b
            if row & low:
                row ^= b
        if row:
            basis.append(row)
    return len(basis)


def rank_masked(rows, mask: int) -> int:
    """Rank of the submatrix keeping only columns in ``mask``."""
    return rank([row & mask for row in rows])


def rref(rows):
    """Reduced row-echelon form; zero rows dropped, rows ordered by pivot."""
    reduced, _ = rref_pivots(rows)
    return reduced


def rref_pivots(rows):
    """Return (rref rows, pivot column indices), both pivot-ordered."""
    work = []
    for row in rows:
        for b in work:
            low = b & -b
            if row & low:
                row ^= b
        if row:
            work.append(row)
            # Re-eliminate the new pivot from earlier rows.
            low = row & -row
            for i in range(len(work) - 1):
                if work[i] & low:
                    work[i] ^= row
    work.sort(key=lambda r: r & -r)
    pivots = tuple((r & -r).bit_length() - 1 for r in work)
    return tuple(work), pivots


def in_rowspace(rows, vec: int) -> bool:
    """True iff ``vec`` is an XOR combination of ``rows``."""
    for b in rref(rows):
        low = b & -b
        if vec & low:
            vec ^= b
    return vec == 0


def nullspace_basis(rows, n_cols: int):
    """Basis of the right null space, one vector per non-pivot column."""
    reduced, pivots = rref_pivots(rows)
    pivot_set = set(pivots)
    basis = []
    for j in range(n_cols):
        if j in pivot_set:
            continue
        vec = 1 << j
        for i, p in enumerate(pivots):
            if (reduced[i] >> j) & 1:
                vec |= 1 << p
        basis.append(vec)
    return tuple(basis)


def space_min_supports(basis):
    """Inclusion-minimal nonzero vectors of the span of ``basis``.

    Enumerates all 2^len(basis) combinations; callers bound the basis size.
    """
    basis = tuple(basis)
    if len(basis) > 24:
        raise ValueError("span enumeration limited to 24 basis vectors")
    vectors = [0]
    for b in basis:
        vectors.extend(v ^ b for v in list(vectors))
    nonzero = sorted((v for v in vectors if v), key=lambda v: (bin(v).count("1"), v))
    minimal = []
    for v in nonzero:
        if not any(u & v == u for u in minimal):
            minimal.append(v)
    minimal.sort()
    return tuple(minimal)


def columns(rows, n_cols: int):
    """Transpose packed rows into packed columns."""
    cols = [0] * n_cols
    for i, row in enumerate(rows):
        while row:
            low = row & -row
            cols[low.bit_length() - 1] |= 1 << i
            row ^= low
    return tuple(cols)


def rows_from_columns(cols, n_rows: int):
    """Transpose packed columns back into packed rows."""
    rows = [0] * n_rows
    for j, col in enumerate(cols):
        while col:
            low = col & -col
            rows[low.bit_length() - 1] |= 1 << j
            col ^= low
    return tuple(rows)


def delete_rows(rows, n_cols: int, dmask: int):
    """Drop the columns in ``dmask`` and compact the survivors in order."""
    keep = [j for j in range(n_cols) if not (dmask >> j) & 1]
    out = []
    for row in rows:
        packed = 0
        for idx, j in enumerate(keep):
            packed |= ((row >> j) & 1) << idx
        out.append(packed)
    return tuple(out)


def _pivot_out(rows, n_cols: int, cmask: int):
    """Eliminate the columns in ``cmask`` by pivoting; no column compaction.

    For each nonzero column in ``cmask`` the pivot row is removed after
    clearing the column elsewhere; zero columns (loops) are left to the
    subsequent deletion.  Rows that become zero are retained.
    """
    work = list(rows)
    for c in range(n_cols):
        if not (cmask >> c) & 1:
            continue
        pivot = -1
        for i, row in enumerate(work):
            if (row >> c) & 1:
                pivot = i
                break
        if pivot < 0:
            continue
        pv = work[pivot]
        work = [row ^ pv if (row >> c) & 1 else row for row in work]
        del work[pivot]
    return tuple(work)


def contract_rows(rows, n_cols: int, cmask: int):
    """Contract the columns in ``cmask``: pivot, eliminate, drop row+column."""
    return delete_rows(_pivot_out(rows, n_cols, cmask), n_cols, cmask)


def minor_rows(rows, n_cols: int, cmask: int, dmask: int):
    """Representation of the minor: contract ``cmask`` then delete ``dmask``."""
    return delete_rows(_pivot_out(rows, n_cols, cmask), n_cols, cmask | dmask)


def profile(rows, n_cols: int):
    """Isomorphism profile (rank, loop count, sorted parallel-class sizes).

    Complete for matroids of rank <= 2; used as a fast matcher there.
    """
    cols = columns(rows, n_cols)
    loops = sum(1 for c in cols if c == 0)
    sizes = {}
    for c in cols:
        if c:
            sizes[c] = sizes.get(c, 0) + 1
    return (rank(rows), loops, tuple(sorted(sizes.values())))


def cols_rank(cols) -> int:
    """Rank of a set of packed column vectors."""
    return rank(cols)


def _match(mrows, m_cols: int, kind: int, want) -> bool:
    if kind == KIND_SIMPLE_RANK3:
        cols = columns(mrows, m_cols)
        if any(c == 0 for c in cols):
            return False
        if len(set(cols)) != m_cols:
            return False
        return rank(mrows) == 3
    if kind == KIND_PROFILE:
        return profile(mrows, m_cols) == want
    if kind == KIND_CANONICAL:
        reduced = rref(mrows)
        r = len(reduced)
        if r != want[0]:
            return False
        cols = columns(reduced, m_cols)
        return canon_key_cols(cols, r) == want[1]
    raise ValueError(f"unknown minor matcher kind {kind}")


def find_minors(rows, n_cols: int, c_size: int, d_size: int, kind: int, want,
                limit: int = 1, avoid: int = 0):
    """Scan minors of the given contract/delete sizes for pattern matches.

    Candidates are generated in lexicographic (delete-set, contract-set)
    index order; contract sets are restricted to independent sets.  Columns
    in ``avoid`` are excluded from both sets.  Returns up to ``limit``
    (cmask, dmask) pairs (all matches when ``limit`` is 0).
    """
    free = [j for j in range(n_cols) if not (avoid >> j) & 1]
    if c_size + d_size > len(free) or c_size < 0 or d_size < 0:
        return []
    out = []
    for d_idx in combinations(free, d_size):
        dmask = 0
        for j in d_idx:
            dmask |= 1 << j
        rest = [j for j in free if not (dmask >> j) & 1]
        for c_idx in combinations(rest, c_size):
            cmask = 0
            for j in c_idx:
                cmask |= 1 << j
            if rank_masked(rows, cmask) != c_size:
                continue
            mrows = minor_rows(rows, n_cols, cmask, dmask)
            if _match(mrows, n_cols - c_size - d_size, kind, want):
                out.append((cmask, dmask))
                if limit and len(out) >= limit:
                    return out
    return out


_GL_TABLES: dict[int, tuple] = {}


def gl_tables(r: int):
    """All invertible linear maps GF(2)^r -> GF(2)^r as value-lookup tables.

    Each table t satisfies t[v] = image of v; tables are built once per rank
    and cached.  |GL(4,2)| = 20160 is the largest instance used.
    """
    if r in _GL_TABLES:
        return _GL_TABLES[r]
    if r == 0:
        _GL_TABLES[r] = ((0,),)
        return _GL_TABLES[r]
    n = 1 << r
    tables = []
    images = [0] * r

    def extend(i: int, span: set):
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
            new_span = span | {s ^ cand for s in span}
            extend(i + 1, new_span)

    extend(0, {0})
    _GL_TABLES[r] = tuple(tables)
    return _GL_TABLES[r]


def canon_key_cols(cols, r: int):
    """Lexicographically least sorted column multiset over all GL(r,2) maps."""
    if r == 0:
        return tuple(sorted(cols))
    best = None
    for table in gl_tables(r):
        cand = tuple(sorted(table[c] for c in cols))
        if best is None or cand < best:
            best = cand
    return best


def is_canonical(cols_sorted, r: int) -> bool:
    """True iff the sorted multiset is the least member of its GL(r,2) orbit."""
    if r == 0:
        return True
    for table in gl_tables(r):
        cand = sorted(table[c] for c in cols_sorted)
        if tuple(cand) < tuple(cols_sorted):
            return False
    return True
