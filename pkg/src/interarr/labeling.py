"""Edge labelings of the signed-partition lattices and labeled-chain tools.

Two labeling regimes coexist and are not interchangeable:

- the scalar max-of-min labeling (an R-labeling): a chain is increasing
  when its word is weakly increasing, decreasing when strictly decreasing;
- the pair-valued lexicographic labeling (an EL-labeling): increasing means
  strictly increasing.

Chain filtering for the Chow-polynomial formula uses the strict reading:
the first step must strictly ascend and every descent must be immediately
preceded by a strict ascent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import GradedLattice, NotComparableError
from .signed_partitions import (EdgeClass, NotACoverError, SignedPartition,
                                classify_edge, is_cover, merged_representatives,
                                representative)

# labels are either scalars (max-of-min labeling) or lex-ordered pairs
Label = "int | tuple[int, int]"


def r_label(x: SignedPartition, y: SignedPartition) -> int:
    """Scalar label of a cover: the larger of the two absolute minima of the
    non-zero blocks merged along the edge."""
    if not is_cover(x, y):
        raise NotACoverError("r_label requires a cover relation")
    i, j = merged_representatives(x, y)
    return max(i, j)


def el_label(x: SignedPartition, y: SignedPartition) -> tuple[int, int]:
    """Pair label: (0, max) on coherent, (1, 1) on signed, (2, min) on
    non-coherent edges; pairs compare lexicographically."""
    cls = classify_edge(x, y)
    if cls is EdgeClass.SIGNED:
        return (1, 1)
    i, j = merged_representatives(x, y)
    if cls is EdgeClass.COHERENT:
        return (0, max(i, j))
    return (2, min(i, j))


def label_set(x: SignedPartition, y: SignedPartition) -> frozenset[int]:
    """Chain-independent scalar label set of the interval [x, y]: union over
    blocks of y of the absolute minima of merged x-blocks, dropping each
    block's overall minimum."""
    if not (x.rank <= y.rank and x.refines(y)):
        raise NotComparableError("label_set requires x <= y")
    out = set()
    for yb in y.blocks:
        yset = set(yb)
        mins = [0 if 0 in b else representative(b)
                for b in x.blocks if set(b) <= yset]
        mins.sort()
        out.update(mins[1:])
    return frozenset(out)


@dataclass(frozen=True)
class LabeledChain:
    """A maximal chain with its label word.

    Descents are the positions where the word does not strictly rise
    (word_i >= word_{i+1}).  With injective labels along a chain, as for the
    scalar labeling, this coincides with the strict reading; with repeated
    labels, as for the pair labeling whose strictly increasing chains are
    unique, the non-rise reading is the one under which the chain formula
    reproduces the Chow polynomial.
    """

    elements: tuple[int, ...]          # element ids, bottom to top
    word: tuple                        # one label per cover
    descents: tuple[int, ...]          # 1-based positions i with word_i >= word_{i+1}

    @property
    def descent_count(self) -> int:
        return len(self.descents)


def _edge_labels(lat: GradedLattice, labeler):
    """labels[i][k] = label of the cover from i to lat.covers[i][k]."""
    return [
        [labeler(lat.elements[i], lat.elements[j]) for j in lat.covers[i]]
        for i in range(len(lat))
    ]


def descent_positions(word) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(len(word) - 1) if word[i] >= word[i + 1])


def count_chains_with_word(lat: GradedLattice, lo: int, hi: int, sigma) -> int:
    """Number of saturated chains lo -> hi whose scalar label word is the
    sorted label set permuted by sigma (1-based permutation of [k]).

    Exhaustive DFS: this is the brute-force side of the chain-count formula,
    so no closed form is consulted here.
    """
    labels = sorted(label_set(lat.elements[lo], lat.elements[hi]))
    k = len(labels)
    if sorted(sigma) != list(range(1, k + 1)):
        raise ValueError("sigma must be a permutation of 1..k")
    target = tuple(labels[s - 1] for s in sigma)
    count = 0
    stack = [(lo, 0)]
    masks = lat._ensure_down_masks()
    hi_mask = masks[hi]
    while stack:
        v, depth = stack.pop()
        if depth == k:
            count += v == hi
            continue
        for w in lat.covers[v]:
            if hi_mask >> w & 1:
                if r_label(lat.elements[v], lat.elements[w]) == target[depth]:
                    stack.append((w, depth + 1))
    return count


_FIRST, _ASC, _WEAK = 0, 1, 2


def _step_mode(last, mode, lab):
    """Next filter mode after appending lab, or None if the prefix dies.

    A step that does not strictly rise is a descent; it is allowed only
    immediately after a strict ascent.  In particular the first pair must
    strictly ascend."""
    if lab > last:
        return _ASC
    return _WEAK if mode is _ASC else None


def enumerate_filtered_chains(lat: GradedLattice, labeler):
    """Maximal chains surviving the Chow chain conditions, by pruned DFS.

    A prefix dies as soon as it violates (i) strict ascent at the first
    step, (ii) no descent immediately preceded by a non-strict-ascent.
    Yields LabeledChain with 1-based descent positions.
    """
    labels = _edge_labels(lat, labeler)
    if lat.height == 0:
        yield LabeledChain((lat.bottom,), (), ())
        return
    top = lat.top
    stack = [(lat.bottom, (lat.bottom,), (), _FIRST)]
    while stack:
        v, chain, word, mode = stack.pop()
        for w, lab in zip(lat.covers[v], labels[v]):
            if word:
                nmode = _step_mode(word[-1], mode, lab)
                if nmode is None:
                    continue
            else:
                nmode = _FIRST
            nchain = chain + (w,)
            nword = word + (lab,)
            if w == top:
                yield LabeledChain(nchain, nword, descent_positions(nword))
            else:
                stack.append((w, nchain, nword, nmode))


def filtered_descent_counts(lat: GradedLattice, labeler) -> dict[int, int]:
    """Multiset of descent counts over surviving maximal chains, aggregated
    by a rank-layer sweep: the same pruned prefix tree as
    enumerate_filtered_chains, collapsed by the shared (last label, mode)
    state so large lattices stay tractable.
    """
    if lat.height == 0:
        return {0: 1}
    labels = _edge_labels(lat, labeler)
    order = sorted(range(len(lat)), key=lambda i: lat.rank[i])
    # per element: {(last_label, mode): descent-count histogram}
    states: dict[int, dict] = {lat.bottom: {(None, _FIRST): [1]}}
    for v in order:
        st = states.pop(v, None)
        if st is None or v == lat.top:
            if st is not None:
                states[v] = st
            continue
        for w, lab in zip(lat.covers[v], labels[v]):
            tgt = states.setdefault(w, {})
            for (last, mode), hist in st.items():
                if last is None:
                    nmode, shift = _FIRST, 0
                else:
                    nmode = _step_mode(last, mode, lab)
                    if nmode is None:
                        continue
                    shift = 1 if nmode is _WEAK else 0
                dst = tgt.setdefault((lab, nmode), [])
                if len(dst) < len(hist) + shift:
                    dst.extend([0] * (len(hist) + shift - len(dst)))
                for d, c in enumerate(hist):
                    dst[d + shift] += c
    out: dict[int, int] = {}
    for hist in states.get(lat.top, {}).values():
        for d, c in enumerate(hist):
            if c:
                out[d] = out.get(d, 0) + c
    return out


def verify_el(lat: GradedLattice, labeler) -> list[tuple[int, int, str]]:
    """Check the EL-labeling property on every interval, strict convention:
    exactly one strictly increasing maximal chain, lexicographically first
    among all maximal chain words.  Returns violations; empty means verified.
    """
    labels = _edge_labels(lat, labeler)
    report = []
    size = len(lat)
    for lo in range(size):
        for hi in lat.up_set(lo):
            if hi == lo:
                continue
            increasing = 0
            inc_word = None
            min_word = None
            for chain in lat.maximal_chains(lo, hi):
                word = tuple(
                    labels[chain[k]][lat.covers[chain[k]].index(chain[k + 1])]
                    for k in range(len(chain) - 1))
                if min_word is None or word < min_word:
                    min_word = word
                if all(word[k] < word[k + 1] for k in range(len(word) - 1)):
                    increasing += 1
                    inc_word = word
            if increasing != 1:
                report.append((lo, hi, f"{increasing} increasing chains"))
            elif inc_word != min_word:
                report.append((lo, hi, "increasing chain is not lex-first"))
    return report


def verify_r_labeling(lat: GradedLattice, labeler) -> list[tuple[int, int, str]]:
    """Check the R-labeling property on every interval, weak convention:
    exactly one weakly increasing maximal chain."""
    labels = _edge_labels(lat, labeler)
    report = []
    for lo in range(len(lat)):
        for hi in lat.up_set(lo):
            if hi == lo:
                continue
            increasing = 0
            for chain in lat.maximal_chains(lo, hi):
                word = [
                    labels[chain[k]][lat.covers[chain[k]].index(chain[k + 1])]
                    for k in range(len(chain) - 1)]
                if all(word[k] <= word[k + 1] for k in range(len(word) - 1)):
                    increasing += 1
            if increasing != 1:
                report.append((lo, hi, f"{increasing} weakly increasing chains"))
    return report


def min_atom_label(lat: GradedLattice):
    """The least-atom EL-labeling of a geometric lattice: a cover x < y is
    labeled by the smallest atom below y and not below x (atom order = id
    order).  Used for arrangement-side lattices of flats."""
    atom_ids = lat.atoms()
    idx = {lat.elements[i]: i for i in range(len(lat))}

    def labeler(xp, yp) -> int:
        x, y = idx[xp], idx[yp]
        for pos, a in enumerate(atom_ids):
            if lat.leq(a, y) and not lat.leq(a, x):
                return pos
        raise NotACoverError("no atom distinguishes the cover")

    return labeler


def dump_chain_line(chain: LabeledChain) -> str:
    """CLI chain-dump rendering: "label,label,... ; des=k"."""
    rendered = ",".join(
        f"({lab[0]},{lab[1]})" if isinstance(lab, tuple) else str(lab)
        for lab in chain.word)
    return f"{rendered} ; des={chain.descent_count}"
