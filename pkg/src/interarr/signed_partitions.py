"""The signed-partition lattice of type B and its D-type subposets.

Elements are mirror-symmetric partitions of {-n, ..., n}: the block through
0 (the zero block) is self-mirrored, every other block B comes paired with
-B.  The rank of a partition with 2p + 1 blocks is n - p.  Subposets are
cut out by restricting which {k, 0, -k} zero blocks may appear, which
models the lattices of the intermediate arrangements between type D and
type B.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .lattice import GradedLattice


class NotACoverError(ValueError):
    """Raised when an edge operation is applied to a non-cover pair."""


class ZeroBlockError(ValueError):
    """Raised when a representative is requested for the zero block."""


class EdgeClass(Enum):
    SIGNED = "signed"
    COHERENT = "coherent"
    NON_COHERENT = "non-coherent"


def representative(block) -> int:
    """Least absolute value in a non-zero block."""
    if 0 in block:
        raise ZeroBlockError("the zero block has no representative")
    return min(abs(x) for x in block)


def is_normalized(block) -> bool:
    """A non-zero block is normalized when it contains its representative
    with positive sign."""
    return representative(block) in block


class SignedPartition:
    """Canonical encoding: zero block first, non-zero blocks sorted by
    (representative, mirrored-last)."""

    __slots__ = ("n", "blocks", "_hash")

    def __init__(self, n: int, blocks: tuple[tuple[int, ...], ...]):
        self.n = n
        self.blocks = blocks
        self._hash = hash((n, blocks))

    @staticmethod
    def _canon_key(block: tuple[int, ...]):
        rep = min(abs(x) for x in block)
        return (rep, 0 if rep in block else 1)

    @classmethod
    def from_blocks(cls, n: int, blocks) -> SignedPartition:
        """Canonicalize and validate an iterable of iterables."""
        zero = None
        rest = []
        for b in blocks:
            tb = tuple(sorted(b))
            if 0 in tb:
                if zero is not None:
                    raise ValueError("two blocks contain 0")
                zero = tb
            else:
                rest.append(tb)
        if zero is None:
            raise ValueError("no zero block")
        rest.sort(key=cls._canon_key)
        part = cls(n, (zero,) + tuple(rest))
        part.validate()
        return part

    def validate(self) -> None:
        seen = set()
        for b in self.blocks:
            for x in b:
                if not -self.n <= x <= self.n or x in seen:
                    raise ValueError(f"bad partition element {x}")
                seen.add(x)
        if len(seen) != 2 * self.n + 1:
            raise ValueError("not a partition of {-n..n}")
        block_set = set(self.blocks)
        for b in self.blocks:
            if tuple(sorted(-x for x in b)) not in block_set:
                raise ValueError(f"mirror of {b} missing")
            if 0 not in b and any(-x in b for x in b):
                raise ValueError(f"self-paired elements outside zero block: {b}")
        if len(self.blocks) % 2 != 1:
            raise ValueError("block count must be odd")

    @classmethod
    def bottom(cls, n: int) -> SignedPartition:
        blocks = [(0,)]
        for k in range(1, n + 1):
            blocks.append((k,))
            blocks.append((-k,))
        return cls.from_blocks(n, blocks)

    @classmethod
    def top(cls, n: int) -> SignedPartition:
        return cls(n, (tuple(range(-n, n + 1)),))

    @property
    def zero_block(self) -> tuple[int, ...]:
        return self.blocks[0]

    @property
    def rank(self) -> int:
        return self.n - (len(self.blocks) - 1) // 2

    def normalized_classes(self) -> list[tuple[int, ...]]:
        """One normalized block per mirror pair, sorted by representative."""
        return [b for b in self.blocks[1:] if is_normalized(b)]

    def refines(self, other: SignedPartition) -> bool:
        lookup = {}
        for bi, b in enumerate(other.blocks):
            for x in b:
                lookup[x] = bi
        for b in self.blocks:
            if len({lookup[x] for x in b}) != 1:
                return False
        return True

    def __eq__(self, other) -> bool:
        return (isinstance(other, SignedPartition)
                and self.n == other.n and self.blocks == other.blocks)

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other) -> bool:
        return self.blocks < other.blocks

    def __repr__(self) -> str:
        return f"SignedPartition({render(self)!r})"


def render(p: SignedPartition) -> str:
    """Figure-style text: blocks joined by '|', each block written as
    positives ascending, then 0, then negatives by absolute value."""
    parts = []
    for b in p.blocks:
        pos = sorted(x for x in b if x > 0)
        neg = sorted((x for x in b if x < 0), key=abs)
        body = "".join(str(x) for x in pos)
        if 0 in b:
            body += "0"
        body += "".join(str(x) for x in neg)
        parts.append(body)
    return "|".join(parts)


def _merge_sorted(*blocks) -> tuple[int, ...]:
    out = []
    for b in blocks:
        out.extend(b)
    out.sort()
    return tuple(out)


def covers(p: SignedPartition) -> list[SignedPartition]:
    """All covers in the full type-B lattice.

    Either one mirror pair is folded into the zero block, or two mirror
    classes merge (in two inequivalent ways, keeping the mirror symmetry).
    """
    zero = p.blocks[0]
    classes = p.normalized_classes()
    neg = {b: tuple(sorted(-x for x in b)) for b in classes}
    others = list(p.blocks[1:])
    out = []

    def build(removed: set, new_blocks) -> SignedPartition:
        kept = [b for b in others if b not in removed]
        zero_b = new_blocks[0]
        rest = kept + list(new_blocks[1:])
        rest.sort(key=SignedPartition._canon_key)
        return SignedPartition(p.n, (zero_b,) + tuple(rest))

    for b in classes:
        out.append(build({b, neg[b]}, (_merge_sorted(zero, b, neg[b]),)))
    for i, b in enumerate(classes):
        for c in classes[i + 1:]:
            out.append(build({b, c, neg[b], neg[c]},
                             (zero, _merge_sorted(b, c), _merge_sorted(neg[b], neg[c]))))
            out.append(build({b, c, neg[b], neg[c]},
                             (zero, _merge_sorted(b, neg[c]), _merge_sorted(neg[b], c))))
    return out


def is_cover(x: SignedPartition, y: SignedPartition) -> bool:
    return y.rank == x.rank + 1 and x.refines(y)


def classify_edge(x: SignedPartition, y: SignedPartition) -> EdgeClass:
    """Signed if the zero block grew; else coherent when the two normalized
    merged blocks land in the same block of y, non-coherent otherwise."""
    if not is_cover(x, y):
        raise NotACoverError(f"{render(x)} is not covered by {render(y)}")
    if len(y.zero_block) > len(x.zero_block):
        return EdgeClass.SIGNED
    x_blocks = set(x.blocks)
    target = next(b for b in y.blocks[1:] if b not in x_blocks)
    inside = [b for b in x.blocks[1:] if set(b) <= set(target)]
    reps = sorted(representative(b) for b in inside)
    i, j = reps[0], reps[-1]
    tset = set(target)
    same_sign = (i in tset) == (j in tset)
    return EdgeClass.COHERENT if same_sign else EdgeClass.NON_COHERENT


def merged_representatives(x: SignedPartition, y: SignedPartition) -> tuple[int, int]:
    """Representatives (i, j) of the two x-classes merged along the cover."""
    if len(y.zero_block) > len(x.zero_block):
        folded = [b for b in x.normalized_classes()
                  if set(b) <= set(y.zero_block)]
        r = representative(folded[0])
        return (r, r)
    x_blocks = set(x.blocks)
    target = next(b for b in y.blocks[1:] if b not in x_blocks)
    inside = [b for b in x.blocks[1:] if set(b) <= set(target)]
    reps = sorted(representative(b) for b in inside)
    return (reps[0], reps[-1])


@dataclass(frozen=True)
class LatticeVariant:
    """Which {k, 0, -k} zero blocks are admitted: all of them for the full
    type-B lattice, none for type D, {1..s} for the intermediate family."""

    kind: str
    n: int
    allowed: frozenset[int]

    def admits(self, p: SignedPartition) -> bool:
        z = p.zero_block
        if len(z) == 3:
            return z[2] in self.allowed
        return True


def variant_b(n: int) -> LatticeVariant:
    return LatticeVariant("b", n, frozenset(range(1, n + 1)))


def variant_d(n: int) -> LatticeVariant:
    return LatticeVariant("d", n, frozenset())


def variant_dns(n: int, s: int) -> LatticeVariant:
    if not 0 <= s <= n:
        raise ValueError(f"s={s} out of range")
    return LatticeVariant("dns", n, frozenset(range(1, s + 1)))


def variant_dn_set(n: int, coords) -> LatticeVariant:
    allowed = frozenset(coords)
    if not all(1 <= k <= n for k in allowed):
        raise ValueError("coordinate set out of range")
    return LatticeVariant("dnS", n, allowed)


def enumerate_lattice(v: LatticeVariant) -> GradedLattice:
    """All partitions of the variant, graded by rank, with cover adjacency.

    Rank-synchronous generation from the bottom; excluded elements are never
    materialized beyond the cover candidates that get filtered out.
    """
    bottom = SignedPartition.bottom(v.n)
    elements: list[SignedPartition] = [bottom]
    ids: dict[SignedPartition, int] = {bottom: 0}
    cover_lists: list[list[int]] = [[]]
    layer = [bottom]
    while layer:
        pending: list[tuple[int, SignedPartition]] = []
        nxt: set[SignedPartition] = set()
        for p in layer:
            pid = ids[p]
            for q in covers(p):
                if v.admits(q):
                    pending.append((pid, q))
                    nxt.add(q)
        layer = sorted(nxt)
        for q in layer:
            ids[q] = len(elements)
            elements.append(q)
            cover_lists.append([])
        for pid, q in pending:
            cover_lists[pid].append(ids[q])
    for lst in cover_lists:
        lst.sort()
    top = max(ids.values(), key=lambda i: elements[i].rank)
    return GradedLattice(elements, [p.rank for p in elements], cover_lists, ids[bottom], top)
