"""Binary matroids as labeled column matroids of GF(2) matrices.

A ``BinaryMatroid`` pairs an ordered label tuple with a ``Gf2Matrix`` whose
columns are the elements.  Structure queries (circuits, cocircuits, loops,
parallel classes), deletion/contraction, duality, isomorphism and minor
search with self-verifying witnesses all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from . import _kernel
from .gf2 import Gf2Matrix, MAX_SUPPORT_COLS

Label = str


def _check_label(label: str) -> str:
    if not isinstance(label, str) or not label or any(ch.isspace() for ch in label):
        raise ValueError(f"invalid element label {label!r}: need a nonempty "
                         "whitespace-free token")
    return label


def _mask_to_labels(mask: int, labels) -> frozenset[str]:
    return frozenset(labels[j] for j in range(len(labels)) if (mask >> j) & 1)


@dataclass(frozen=True)
class Graph:
    """Labeled multigraph; loops and parallel edges allowed.

    Vertices are 1-based indices; each edge is (u, v, label) with pairwise
    distinct labels.  Equal endpoints encode a loop.
    """

    n_vertices: int
    edges: tuple[tuple[int, int, str], ...]

    def __post_init__(self):
        if self.n_vertices < 0:
            raise ValueError("vertex count must be nonnegative")
        object.__setattr__(self, "edges", tuple((u, v, lab) for u, v, lab in self.edges))
        seen = set()
        for u, v, lab in self.edges:
            if not (1 <= u <= self.n_vertices and 1 <= v <= self.n_vertices):
                raise ValueError(f"edge {lab!r} endpoint outside 1..{self.n_vertices}")
            _check_label(lab)
            if lab in seen:
                raise ValueError(f"duplicate edge label {lab!r}")
            seen.add(lab)

    def edge_labels(self) -> tuple[str, ...]:
        return tuple(lab for _, _, lab in self.edges)


@dataclass(frozen=True)
class MinorWitness:
    """Certificate that a pattern occurs as a minor: host \\ deleted / contracted.

    ``mapping`` sends pattern labels to surviving host labels; the witness
    re-verifies itself via :meth:`verify`.
    """

    deleted: frozenset[str]
    contracted: frozenset[str]
    mapping: dict[str, str]

    def __post_init__(self):
        if self.deleted & self.contracted:
            raise ValueError("deleted and contracted sets overlap")
        removed = self.deleted | self.contracted
        if any(v in removed for v in self.mapping.values()):
            raise ValueError("mapping range meets the removed elements")

    def verify(self, host: "BinaryMatroid", pattern: "BinaryMatroid") -> bool:
        """Recompute the minor and confirm the circuit bijection."""
        minor = host.contract(self.contracted).delete(self.deleted)
        if set(self.mapping) != set(pattern.labels):
            return False
        if set(self.mapping.values()) != set(minor.labels):
            return False
        mapped = {frozenset(self.mapping[x] for x in c) for c in pattern.circuits()}
        return mapped == minor.circuits()


@dataclass(frozen=True, eq=False)
class BinaryMatroid:
    """Column matroid of a GF(2) matrix with ordered element labels."""

    labels: tuple[str, ...]
    rep: Gf2Matrix

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        for lab in self.labels:
            _check_label(lab)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate element labels")
        if len(self.labels) != self.rep.n_cols:
            raise ValueError(f"{len(self.labels)} labels vs {self.rep.n_cols} columns")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_matrix(cls, labels, m: Gf2Matrix) -> "BinaryMatroid":
        """Wrap labels and a representation; no normalization."""
        return cls(tuple(labels), m)

    @classmethod
    def from_graph(cls, g: Graph) -> "BinaryMatroid":
        """Cycle matroid via the GF(2) vertex-edge incidence matrix.

        A loop contributes a zero column; rank is n_vertices minus the
        number of connected components.
        """
        rows = []
        for w in range(1, g.n_vertices + 1):
            row = 0
            for j, (u, v, _) in enumerate(g.edges):
                if (u == w) != (v == w):
                    row |= 1 << j
            rows.append(row)
        return cls(g.edge_labels(), Gf2Matrix(tuple(rows), len(g.edges)))

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        """Equal as represented: same labels and same row space."""
        if not isinstance(other, BinaryMatroid):
            return NotImplemented
        return self.labels == other.labels and self._rref == other._rref

    def __hash__(self) -> int:
        return hash((self.labels, self._rref))

    def same_matrix(self, other: "BinaryMatroid") -> bool:
        """Bit-exact comparison including row order and zero rows."""
        return self.labels == other.labels and self.rep.rows == other.rep.rows

    def __repr__(self) -> str:
        return (f"BinaryMatroid(labels={self.labels!r}, "
                f"rows={self.rep.row_strings()!r})")

    # -- cached internals ----------------------------------------------------

    @cached_property
    def _rref(self) -> tuple[int, ...]:
        return _kernel.rref(self.rep.rows)

    @cached_property
    def _columns(self) -> tuple[int, ...]:
        return self.rep.columns()

    @cached_property
    def _circuit_masks(self) -> tuple[int, ...]:
        if self.rep.n_cols > MAX_SUPPORT_COLS:
            raise ValueError("too many elements for circuit enumeration")
        basis = _kernel.nullspace_basis(self.rep.rows, self.rep.n_cols)
        return _kernel.space_min_supports(basis)

    @cached_property
    def _cocircuit_masks(self) -> tuple[int, ...]:
        return _kernel.space_min_supports(self._rref)

    def _label_mask(self, subset) -> int:
        mask = 0
        for lab in subset:
            try:
                j = self.labels.index(lab)
            except ValueError:
                raise ValueError(f"unknown element label {lab!r}") from None
            mask |= 1 << j
        return mask

    # -- structure queries ---------------------------------------------------

    def n_elements(self) -> int:
        return len(self.labels)

    def rank(self) -> int:
        return len(self._rref)

    def subset_rank(self, subset) -> int:
        """GF(2) rank of the columns indexed by ``subset``."""
        return _kernel.rank_masked(self.rep.rows, self._label_mask(subset))

    def circuits(self) -> frozenset[frozenset[str]]:
        """Minimal dependent sets: minimal supports of the null space."""
        return frozenset(_mask_to_labels(m, self.labels) for m in self._circuit_masks)

    def cocircuits(self) -> frozenset[frozenset[str]]:
        """Minimal supports of the row space."""
        return frozenset(_mask_to_labels(m, self.labels) for m in self._cocircuit_masks)

    def loops(self) -> frozenset[str]:
        return frozenset(lab for lab, c in zip(self.labels, self._columns) if c == 0)

    def coloops(self) -> frozenset[str]:
        """Elements lying in no circuit (loops sit in singleton circuits)."""
        covered = 0
        for m in self._circuit_masks:
            covered |= m
        return frozenset(lab for j, lab in enumerate(self.labels)
                         if not (covered >> j) & 1)

    def parallel_classes(self) -> tuple[frozenset[str], ...]:
        """Partition of the non-loop elements by column equality."""
        groups: dict[int, list[str]] = {}
        for lab, c in zip(self.labels, self._columns):
            if c:
                groups.setdefault(c, []).append(lab)
        classes = [frozenset(v) for v in groups.values()]
        classes.sort(key=lambda cls: min(self.labels.index(x) for x in cls))
        return tuple(classes)

    # -- delete / contract / dual ---------------------------------------------

    def delete(self, subset) -> "BinaryMatroid":
        """Remove the columns of ``subset``; labels of survivors preserved."""
        mask = self._label_mask(subset)
        rows = _kernel.delete_rows(self.rep.rows, self.rep.n_cols, mask)
        labels = tuple(l for j, l in enumerate(self.labels) if not (mask >> j) & 1)
        return BinaryMatroid(labels, Gf2Matrix(rows, len(labels)))

    def contract(self, subset) -> "BinaryMatroid":
        """Contract ``subset`` by pivoting; loops in the set are deleted."""
        mask = self._label_mask(subset)
        rows = _kernel.contract_rows(self.rep.rows, self.rep.n_cols, mask)
        labels = tuple(l for j, l in enumerate(self.labels) if not (mask >> j) & 1)
        return BinaryMatroid(labels, Gf2Matrix(rows, len(labels)))

    def minor(self, deleted, contracted) -> "BinaryMatroid":
        return self.contract(contracted).delete(deleted)

    def dual(self) -> "BinaryMatroid":
        """Standard binary dual: [I | P] becomes [P^T | I] on the same labels."""
        reduced, pivots = _kernel.rref_pivots(self.rep.rows)
        pivot_set = set(pivots)
        nonpivots = [j for j in range(self.rep.n_cols) if j not in pivot_set]
        rows = []
        for q in nonpivots:
            row = 1 << q
            for i, p in enumerate(pivots):
                if (reduced[i] >> q) & 1:
                    row |= 1 << p
            rows.append(row)
        return BinaryMatroid(self.labels, Gf2Matrix(tuple(rows), self.rep.n_cols))

    # -- isomorphism -----------------------------------------------------------

    def is_isomorphic(self, other: "BinaryMatroid"):
        """A label bijection carrying circuits to circuits, or None.

        Candidates are pruned by (rank, element count, loop count,
        circuit-size multiset, per-element circuit-degree signature) before
        a backtracking search validates the full circuit sets.
        """
        for phi in _isomorphisms(self, other, pins=None):
            return phi
        return None

    def isomorphisms(self, other: "BinaryMatroid"):
        """Iterate over every circuit-preserving label bijection."""
        return _isomorphisms(self, other, pins=None)

    # -- minors ------------------------------------------------------------------

    def has_minor(self, pattern: "BinaryMatroid", pins: dict[str, str] | None = None):
        """First minor occurrence of ``pattern``, as a MinorWitness, or None.

        Scans disjoint (contract, delete) pairs with the contract set
        independent and of size rank(self) - rank(pattern); candidates are
        ordered lexicographically by (delete set, contract set) in label
        order.  ``pins`` forces pattern labels onto specific host labels.
        """
        n, np_ = len(self.labels), len(pattern.labels)
        c_size = self.rank() - pattern.rank()
        d_size = n - np_ - c_size
        if c_size < 0 or d_size < 0:
            return None
        if pins:
            avoid = 0
            for pat_lab, host_lab in pins.items():
                if pat_lab not in pattern.labels:
                    raise ValueError(f"pin references unknown pattern label {pat_lab!r}")
                if host_lab not in self.labels:
                    raise ValueError(f"pin references unknown element label {host_lab!r}")
                avoid |= 1 << self.labels.index(host_lab)
            return self._scan_minors_iso(pattern, c_size, d_size, pins, avoid)
        kind, want = _fast_pattern_kind(pattern)
        if kind is None:
            return self._scan_minors_iso(pattern, c_size, d_size, None, 0)
        hits = _kernel.find_minors(self.rep.rows, self.rep.n_cols,
                                   c_size, d_size, kind, want, limit=1)
        if not hits:
            return None
        cmask, dmask = hits[0]
        return self._witness_for(pattern, cmask, dmask, None)

    def _scan_minors_iso(self, pattern, c_size, d_size, pins, avoid):
        rows, n = self.rep.rows, self.rep.n_cols
        free = [j for j in range(n) if not (avoid >> j) & 1]
        if c_size + d_size > len(free):
            return None
        for d_idx in combinations(free, d_size):
            dmask = sum(1 << j for j in d_idx)
            rest = [j for j in free if not (dmask >> j) & 1]
            for c_idx in combinations(rest, c_size):
                cmask = sum(1 << j for j in c_idx)
                if _kernel.rank_masked(rows, cmask) != c_size:
                    continue
                witness = self._witness_for(pattern, cmask, dmask, pins)
                if witness is not None:
                    return witness
        return None

    def _witness_for(self, pattern, cmask, dmask, pins):
        deleted = _mask_to_labels(dmask, self.labels)
        contracted = _mask_to_labels(cmask, self.labels)
        minor = self.contract(contracted).delete(deleted)
        for phi in _isomorphisms(pattern, minor, pins=pins):
            return MinorWitness(deleted=deleted, contracted=contracted, mapping=phi)
        return None

    def minor_marked_images(self, pattern: "BinaryMatroid", marked) -> set[frozenset[str]]:
        """Images of ``marked`` pattern labels across all minor embeddings.

        Enumerates every (contract, delete) occurrence of the pattern and
        every isomorphism onto it, collecting the host-label sets that the
        marked elements can occupy.
        """
        n, np_ = len(self.labels), len(pattern.labels)
        c_size = self.rank() - pattern.rank()
        d_size = n - np_ - c_size
        if c_size < 0 or d_size < 0:
            return set()
        kind, want = _fast_pattern_kind(pattern)
        if kind is not None:
            hits = _kernel.find_minors(self.rep.rows, self.rep.n_cols,
                                       c_size, d_size, kind, want, limit=0)
        else:
            hits = self._all_candidates(c_size, d_size)
        images: set[frozenset[str]] = set()
        for cmask, dmask in hits:
            deleted = _mask_to_labels(dmask, self.labels)
            contracted = _mask_to_labels(cmask, self.labels)
            minor = self.contract(contracted).delete(deleted)
            for phi in _isomorphisms(pattern, minor, pins=None):
                images.add(frozenset(phi[lab] for lab in marked))
        return images

    def _all_candidates(self, c_size, d_size):
        rows, n = self.rep.rows, self.rep.n_cols
        for d_idx in combinations(range(n), d_size):
            dmask = sum(1 << j for j in d_idx)
            rest = [j for j in range(n) if not (dmask >> j) & 1]
            for c_idx in combinations(rest, c_size):
                cmask = sum(1 << j for j in c_idx)
                if _kernel.rank_masked(rows, cmask) == c_size:
                    yield cmask, dmask

    # -- gammoid test ------------------------------------------------------------

    def is_binary_gammoid(self) -> bool:
        """True iff no M(K4) minor exists (existence test only, no witness)."""
        c_size = self.rank() - 3
        d_size = len(self.labels) - 6 - c_size
        if c_size < 0 or d_size < 0:
            return True
        return not _kernel.find_minors(self.rep.rows, self.rep.n_cols, c_size,
                                       d_size, _kernel.KIND_SIMPLE_RANK3, None,
                                       limit=1)

    def k4_minor(self):
        """MinorWitness of M(K4) when the matroid is not a binary gammoid."""
        return self.has_minor(k4_matroid())


def reduced_columns(m: BinaryMatroid) -> tuple[int, tuple[int, ...]]:
    """(rank, columns re-encoded over the rref rows) for canonical forms."""
    reduced = m._rref
    return len(reduced), _kernel.columns(reduced, m.rep.n_cols)


def _fast_pattern_kind(pattern: BinaryMatroid):
    """Pick a complete kernel-side matcher for the pattern, if one exists.

    Rank <= 2 binary matroids are determined by (rank, loops, parallel-class
    sizes); a simple rank-3 matroid on 6 elements is determined outright.
    Other patterns of rank <= 4 fall back to canonical-key comparison.
    """
    prof = _kernel.profile(pattern.rep.rows, pattern.rep.n_cols)
    r, loops, sizes = prof
    n = pattern.rep.n_cols
    if r <= 2:
        return _kernel.KIND_PROFILE, prof
    if r == 3 and loops == 0 and all(s == 1 for s in sizes) and n == 6:
        return _kernel.KIND_SIMPLE_RANK3, None
    if r <= 4:
        rk, cols = reduced_columns(pattern)
        return _kernel.KIND_CANONICAL, (rk, _kernel.canon_key_cols(cols, rk))
    return None, None


_K4_CACHE: list[BinaryMatroid] = []


def k4_matroid() -> BinaryMatroid:
    """Cycle matroid of the complete graph on four vertices."""
    if not _K4_CACHE:
        g = Graph(4, ((1, 2, "e12"), (1, 3, "e13"), (1, 4, "e14"),
                      (2, 3, "e23"), (2, 4, "e24"), (3, 4, "e34")))
        _K4_CACHE.append(BinaryMatroid.from_graph(g))
    return _K4_CACHE[0]


# -- circuit-based isomorphism search ------------------------------------------


def _element_signatures(circuit_masks, n):
    sigs = []
    for j in range(n):
        sizes = sorted(bin(m).count("1") for m in circuit_masks if (m >> j) & 1)
        sigs.append(tuple(sizes))
    return sigs


def _isomorphisms(a: BinaryMatroid, b: BinaryMatroid, pins):
    """Yield every circuit-preserving bijection from a's labels to b's."""
    na, nb = len(a.labels), len(b.labels)
    if na != nb:
        return
    if a.rank() != b.rank():
        return
    ca, cb = a._circuit_masks, b._circuit_masks
    if len(ca) != len(cb):
        return
    size_multiset = sorted(bin(m).count("1") for m in ca)
    if size_multiset != sorted(bin(m).count("1") for m in cb):
        return
    sig_a = _element_signatures(ca, na)
    sig_b = _element_signatures(cb, nb)
    if sorted(sig_a) != sorted(sig_b):
        return

    cb_set = set(cb)
    ca_set = set(ca)
    circuits_at_a = [[m for m in ca if (m >> j) & 1] for j in range(na)]
    circuits_at_b = [[m for m in cb if (m >> j) & 1] for j in range(nb)]

    mapping = [-1] * na
    inverse = [-1] * nb
    assigned_mask = 0
    image_mask = 0

    fixed = {}
    if pins:
        for pat_lab, host_lab in pins.items():
            i = a.labels.index(pat_lab)
            if host_lab not in b.labels:
                return
            fixed[i] = b.labels.index(host_lab)

    # Rare signatures first shrinks the branching factor.
    freq: dict[tuple, int] = {}
    for s in sig_a:
        freq[s] = freq.get(s, 0) + 1
    order = sorted(range(na), key=lambda j: (j not in fixed, freq[sig_a[j]], j))
    by_sig: dict[tuple, list[int]] = {}
    for j in range(nb):
        by_sig.setdefault(sig_b[j], []).append(j)

    def consistent(i, j):
        # Circuits fully assigned on either side must correspond.
        for m in circuits_at_a[i]:
            if m & ~(assigned_mask | (1 << i)):
                continue
            img = 0
            mm = m & ~(1 << i)
            while mm:
                low = mm & -mm
                img |= 1 << mapping[low.bit_length() - 1]
                mm ^= low
            if img | (1 << j) not in cb_set:
                return False
        for m in circuits_at_b[j]:
            if m & ~(image_mask | (1 << j)):
                continue
            pre = 0
            mm = m & ~(1 << j)
            while mm:
                low = mm & -mm
                pre |= 1 << inverse[low.bit_length() - 1]
                mm ^= low
            if pre | (1 << i) not in ca_set:
                return False
        return True

    def backtrack(pos):
        nonlocal assigned_mask, image_mask
        if pos == na:
            yield {a.labels[i]: b.labels[mapping[i]] for i in range(na)}
            return
        i = order[pos]
        candidates = [fixed[i]] if i in fixed else by_sig.get(sig_a[i], [])
        for j in candidates:
            if inverse[j] != -1 or sig_b[j] != sig_a[i]:
                continue
            if not consistent(i, j):
                continue
            mapping[i] = j
            inverse[j] = i
            assigned_mask |= 1 << i
            image_mask |= 1 << j
            yield from backtrack(pos + 1)
            assigned_mask &= ~(1 << i)
            image_mask &= ~(1 << j)
            mapping[i] = -1
            inverse[j] = -1

    yield from backtrack(0)
