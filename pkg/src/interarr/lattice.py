"""Finite graded lattices shared by the geometric and partition sides.

Elements are indexed 0..N-1 with opaque payloads; `covers[i]` lists the ids
covering i.  Instances are immutable after construction and safe to share.
"""

from __future__ import annotations

from collections import deque


class NotComparableError(ValueError):
    """Raised when an interval [lo, hi] is requested with lo not below hi."""


class GradedLattice:
    __slots__ = ("elements", "rank", "covers", "bottom", "top",
                 "_lower", "_index", "_down_masks")

    def __init__(self, elements, rank, covers, bottom: int, top: int):
        self.elements = tuple(elements)
        self.rank = tuple(rank)
        self.covers = tuple(tuple(c) for c in covers)
        self.bottom = bottom
        self.top = top
        self._lower = None
        self._index = None
        self._down_masks = None

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def height(self) -> int:
        """Rank of the top element."""
        return self.rank[self.top]

    def lower_covers(self):
        if self._lower is None:
            lower = [[] for _ in self.elements]
            for i, ups in enumerate(self.covers):
                for j in ups:
                    lower[j].append(i)
            self._lower = tuple(tuple(l) for l in lower)
        return self._lower

    def index_of(self, payload) -> int:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements)}
        return self._index[payload]

    def atoms(self):
        return [i for i, r in enumerate(self.rank) if r == 1]

    def up_set(self, x: int):
        """Ids of all y >= x, in BFS order."""
        seen = {x}
        order = [x]
        dq = deque([x])
        while dq:
            v = dq.popleft()
            for w in self.covers[v]:
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    dq.append(w)
        return order

    def down_set(self, x: int):
        seen = {x}
        order = [x]
        dq = deque([x])
        lower = self.lower_covers()
        while dq:
            v = dq.popleft()
            for w in lower[v]:
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    dq.append(w)
        return order

    def _ensure_down_masks(self):
        # bitmask of {j : j <= i} per element; built once, rank by rank
        if self._down_masks is None:
            masks = [0] * len(self.elements)
            for i in sorted(range(len(self.elements)), key=lambda v: self.rank[v]):
                m = 1 << i
                for j in self.lower_covers()[i]:
                    m |= masks[j]
                masks[i] = m
            self._down_masks = masks
        return self._down_masks

    def leq(self, x: int, y: int) -> bool:
        return bool(self._ensure_down_masks()[y] >> x & 1)

    def interval(self, lo: int, hi: int):
        """Ids of [lo, hi] in rank order; NotComparableError if empty."""
        if not self.leq(lo, hi):
            raise NotComparableError(f"element {lo} is not below {hi}")
        masks = self._ensure_down_masks()
        hi_mask = masks[hi]
        ids = [i for i in self.up_set(lo) if hi_mask >> i & 1]
        ids.sort(key=lambda v: self.rank[v])
        return ids

    def maximal_chains(self, lo: int, hi: int):
        """Yield saturated chains lo -> hi as id tuples (DFS order)."""
        masks = self._ensure_down_masks()
        hi_mask = masks[hi]
        if not (hi_mask >> lo & 1):
            raise NotComparableError(f"element {lo} is not below {hi}")
        stack = [(lo, (lo,))]
        while stack:
            v, chain = stack.pop()
            if v == hi:
                yield chain
                continue
            for w in reversed(self.covers[v]):
                if hi_mask >> w & 1:
                    stack.append((w, chain + (w,)))


def check_graded(lat: GradedLattice) -> None:
    """Assert the grading axioms; used by tests, not production paths."""
    assert lat.rank[lat.bottom] == 0
    for i, ups in enumerate(lat.covers):
        for j in ups:
            assert lat.rank[j] == lat.rank[i] + 1, "cover must raise rank by 1"
    for chain in lat.maximal_chains(lat.bottom, lat.top):
        assert len(chain) == lat.height + 1


def contract_interval(lat: GradedLattice, lo: int, hi: int) -> GradedLattice:
    """Induced graded lattice on [lo, hi], rank shifted so rank(lo) = 0."""
    ids = lat.interval(lo, hi)
    pos = {v: i for i, v in enumerate(ids)}
    base = lat.rank[lo]
    elements = [lat.elements[v] for v in ids]
    rank = [lat.rank[v] - base for v in ids]
    covers = [[pos[w] for w in lat.covers[v] if w in pos] for v in ids]
    return GradedLattice(elements, rank, covers, pos[lo], pos[hi])


def _refine_colors(lat: GradedLattice):
    lower = lat.lower_covers()
    colors = list(lat.rank)
    while True:
        sig = [
            (colors[i],
             tuple(sorted(colors[j] for j in lat.covers[i])),
             tuple(sorted(colors[j] for j in lower[i])))
            for i in range(len(lat.elements))
        ]
        relabel = {s: c for c, s in enumerate(sorted(set(sig)))}
        new = [relabel[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def lattice_isomorphic(a: GradedLattice, b: GradedLattice) -> bool:
    """Graded-poset isomorphism via color refinement plus backtracking.

    The search matches a most-constrained element next (one with the most
    already-matched neighbours), drawing candidates from the image of a
    matched neighbour; this keeps highly symmetric lattices tractable at
    the n <= 4 sizes it is used for.
    """
    if len(a) != len(b) or sorted(a.rank) != sorted(b.rank):
        return False
    ca, cb = _refine_colors(a), _refine_colors(b)
    if sorted(ca) != sorted(cb):
        return False
    by_color_b: dict[int, list[int]] = {}
    for j, c in enumerate(cb):
        by_color_b.setdefault(c, []).append(j)
    a_low, b_low = a.lower_covers(), b.lower_covers()
    n = len(a)
    mapping: dict[int, int] = {}
    inverse: dict[int, int] = {}

    def compatible(i: int, j: int) -> bool:
        if ca[i] != cb[j]:
            return False
        for k in a.covers[i]:
            if k in mapping and mapping[k] not in b.covers[j]:
                return False
        for k in a_low[i]:
            if k in mapping and mapping[k] not in b_low[j]:
                return False
        for k in b.covers[j]:
            if k in inverse and inverse[k] not in a.covers[i]:
                return False
        for k in b_low[j]:
            if k in inverse and inverse[k] not in a_low[i]:
                return False
        return True

    def pick_next() -> int:
        best, best_key = -1, None
        for i in range(n):
            if i in mapping:
                continue
            matched = sum(1 for k in a.covers[i] if k in mapping) \
                + sum(1 for k in a_low[i] if k in mapping)
            key = (-matched, len(by_color_b[ca[i]]), i)
            if best_key is None or key < best_key:
                best, best_key = i, key
        return best

    def candidates(i: int):
        for k in a.covers[i]:
            if k in mapping:
                return b_low[mapping[k]]
        for k in a_low[i]:
            if k in mapping:
                return b.covers[mapping[k]]
        return by_color_b[ca[i]]

    def backtrack(count: int) -> bool:
        if count == n:
            return True
        i = pick_next()
        for j in candidates(i):
            if j in inverse or not compatible(i, j):
                continue
            mapping[i] = j
            inverse[j] = i
            if backtrack(count + 1):
                return True
            del mapping[i]
            del inverse[j]
        return False

    return backtrack(0)
