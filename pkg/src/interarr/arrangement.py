"""Integer-normal central hyperplane arrangements.

Provides the standard families (type A/B/D and the intermediate family
interpolating between D and B), restrictions, the intersection lattice,
chamber enumeration, and the f-vector of the induced simplicial complex.

Chambers are encoded as sign vectors over the hyperplane list.  Internally
a sign vector is a bitmask (bit h set <=> negative side of hyperplane h);
the public encoding is a string over '+'/'-'.

Chamber enumeration is breadth-first wall-crossing.  For arrangements
flagged simplicial the walls of a newly discovered chamber are derived
exactly from the walls of its neighbour by pivoting inside rank-2
localizations (no linear programming on the hot path); every chamber is
still certified by an integer witness point, and any inconsistency falls
back to the general path, which decides each candidate wall with the exact
rational feasibility oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .feasibility import feasible_on_hyperplane, feasible_strict, generic_point
from .lattice import GradedLattice
from .linalg import (EchelonBasis, dot, int_rank, integer_kernel_basis,
                     primitive_vector, scale_to_int, solve_square_int)


class NotEssentialError(ValueError):
    """Raised when an operation requires rank(arrangement) == ambient dim."""


class InvalidParamsError(ValueError):
    """Raised for out-of-range family parameters."""


class _SimplicialityError(RuntimeError):
    """Internal: the fast chamber walk detected a non-simplicial situation."""


@dataclass(frozen=True)
class Arrangement:
    dim: int
    normals: tuple[tuple[int, ...], ...]
    simplicial: bool = field(default=False, compare=False)

    def __post_init__(self):
        seen = set()
        for v in self.normals:
            if len(v) != self.dim:
                raise InvalidParamsError(f"normal {v} has wrong length")
            if v != primitive_vector(v):
                raise InvalidParamsError(f"normal {v} is not primitive-canonical")
            if v in seen:
                raise InvalidParamsError(f"repeated hyperplane {v}")
            seen.add(v)

    @property
    def m(self) -> int:
        return len(self.normals)

    def rank(self) -> int:
        return int_rank(self.normals)

    def is_essential(self) -> bool:
        return self.rank() == self.dim


def make_arrangement(dim: int, vectors, simplicial: bool = False) -> Arrangement:
    """Build an arrangement, reducing every normal to primitive form."""
    return Arrangement(dim, tuple(primitive_vector(v) for v in vectors), simplicial)


def _coordinate(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(n))


def _pair_vector(n: int, i: int, j: int, sign: int) -> tuple[int, ...]:
    return tuple((1 if k == i else sign if k == j else 0) for k in range(n))


def make_family(family: str, n: int, s: int | None = None) -> Arrangement:
    """Standard families:

    - "b": e_i - e_j, e_i + e_j (i < j), and all coordinate hyperplanes
    - "d": e_i - e_j, e_i + e_j only
    - "dns": type D plus the first s coordinate hyperplanes (0 <= s <= n)
    - "a": the essential rank-n realization of the braid arrangement,
      e_i - e_j (i < j) plus all coordinate hyperplanes; linearly isomorphic
      to the rank-n reflection arrangement of the symmetric group on n+1
      letters, with the partition lattice on n+1 blocks as lattice of flats

    Hyperplane order is fixed (differences lex, then sums lex, then
    coordinates) so sign vectors are reproducible byte for byte.
    """
    fam = family.lower()
    if n < 1:
        raise InvalidParamsError("n must be >= 1")
    if fam == "a":
        vecs = [_pair_vector(n, i, j, -1) for i in range(n) for j in range(i + 1, n)]
        vecs += [_coordinate(n, i) for i in range(n)]
        return Arrangement(n, tuple(vecs), simplicial=True)
    if fam == "b":
        s = n
    elif fam == "d":
        s = 0
    elif fam == "dns":
        if s is None:
            raise InvalidParamsError("family dns requires s")
    else:
        raise InvalidParamsError(f"unknown family {family!r}")
    if not 0 <= s <= n:
        raise InvalidParamsError(f"s={s} out of range for n={n}")
    vecs = [_pair_vector(n, i, j, -1) for i in range(n) for j in range(i + 1, n)]
    vecs += [_pair_vector(n, i, j, +1) for i in range(n) for j in range(i + 1, n)]
    vecs += [_coordinate(n, i) for i in range(s)]
    return Arrangement(n, tuple(vecs), simplicial=True)


def parse_arrangement_text(text: str, simplicial: bool = False) -> Arrangement:
    """Parse the file format: "dim n" line, then one normal per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("dim"):
        raise InvalidParamsError("first non-comment line must be 'dim n'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise InvalidParamsError("malformed dim line") from None
    vecs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != n:
            raise InvalidParamsError(f"expected {n} integers, got {ln!r}")
        vecs.append(tuple(int(p) for p in parts))
    return make_arrangement(n, vecs, simplicial=simplicial)


def arrangement_to_text(a: Arrangement) -> str:
    lines = [f"dim {a.dim}"]
    lines += [" ".join(str(x) for x in v) for v in a.normals]
    return "\n".join(lines) + "\n"


def load_arrangement(path, simplicial: bool = False) -> Arrangement:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_arrangement_text(fh.read(), simplicial=simplicial)


# ---------------------------------------------------------------------------
# matroid rank, flats, intersection lattice


def matroid_rank(a: Arrangement, subset) -> int:
    """Codimension of the intersection of the chosen hyperplanes."""
    return int_rank([a.normals[h] for h in subset])


def closure_of(a: Arrangement, subset) -> frozenset[int]:
    """All hyperplanes containing the intersection of the given ones."""
    basis = EchelonBasis()
    for h in subset:
        basis.add(a.normals[h])
    return frozenset(h for h in range(a.m) if basis.contains(a.normals[h]))


@dataclass(frozen=True)
class Flat:
    """A lattice-of-intersections element: the closure-complete index set."""

    hyperplanes: frozenset[int]
    rank: int

    def sort_key(self):
        return (self.rank, tuple(sorted(self.hyperplanes)))


def intersection_lattice(a: Arrangement) -> GradedLattice:
    """All flats by iterated closure, graded by codimension."""
    bottom = frozenset()
    bases = {bottom: EchelonBasis()}
    layers = [[bottom]]
    cover_pairs: set[tuple[frozenset, frozenset]] = set()
    current = [bottom]
    while current:
        nxt: dict[frozenset, EchelonBasis] = {}
        for flat in current:
            basis = bases[flat]
            for h in range(a.m):
                if h in flat:
                    continue
                b2 = basis.copy()
                b2.add(a.normals[h])
                bigger = frozenset(
                    g for g in range(a.m) if b2.contains(a.normals[g]))
                if bigger not in nxt:
                    nxt[bigger] = b2
                cover_pairs.add((flat, bigger))
        current = sorted(nxt.keys(), key=lambda f: tuple(sorted(f)))
        for f in current:
            bases[f] = nxt[f]
        if current:
            layers.append(current)

    flats = []
    for r, layer in enumerate(layers):
        flats.extend(Flat(f, r) for f in layer)
    flats.sort(key=Flat.sort_key)
    index = {f.hyperplanes: i for i, f in enumerate(flats)}
    covers: list[list[int]] = [[] for _ in flats]
    for lo, hi in sorted(cover_pairs, key=lambda p: (tuple(sorted(p[0])), tuple(sorted(p[1])))):
        covers[index[lo]].append(index[hi])
    top = max(range(len(flats)), key=lambda i: flats[i].rank)
    return GradedLattice(flats, [f.rank for f in flats], covers, index[bottom], top)


def restrict_to_flat(a: Arrangement, hyperplanes) -> Arrangement:
    """The induced arrangement inside the flat, in integer coordinates.

    An integer basis of the subspace is chosen; each hyperplane not
    containing the flat contributes its pairing vector, primitivized and
    deduplicated.
    """
    members = closure_of(a, hyperplanes)
    rows = [a.normals[h] for h in sorted(members)]
    basis = integer_kernel_basis(rows, a.dim)
    sub_dim = len(basis)
    induced: list[tuple[int, ...]] = []
    seen = set()
    for h in range(a.m):
        if h in members:
            continue
        vec = tuple(dot(a.normals[h], b) for b in basis)
        vec = primitive_vector(vec)
        if vec not in seen:
            seen.add(vec)
            induced.append(vec)
    return Arrangement(sub_dim, tuple(induced), simplicial=a.simplicial)


def restrict(a: Arrangement, h: int) -> Arrangement:
    """Restriction to hyperplane h: all other hyperplanes cut down to it."""
    if not 0 <= h < a.m:
        raise InvalidParamsError(f"hyperplane index {h} out of range")
    return restrict_to_flat(a, [h])


# ---------------------------------------------------------------------------
# chambers


def mask_to_signs(mask: int, m: int) -> str:
    return "".join("-" if mask >> h & 1 else "+" for h in range(m))


def signs_to_mask(signs: str) -> int:
    mask = 0
    for h, c in enumerate(signs):
        if c == "-":
            mask |= 1 << h
        elif c != "+":
            raise ValueError(f"invalid sign character {c!r}")
    return mask


class ChamberComplex:
    """Chambers, their walls, and the wall-crossing adjacency of an arrangement."""

    __slots__ = ("arrangement", "masks", "witnesses", "facets", "edges", "index")

    def __init__(self, a: Arrangement, masks, witnesses, facets, edges):
        self.arrangement = a
        self.masks = masks                  # bitmask per chamber
        self.witnesses = witnesses          # integer interior point per chamber
        self.facets = facets                # sorted wall hyperplanes per chamber
        self.edges = edges                  # (chamber, chamber, hyperplane), id-sorted
        self.index = {mk: i for i, mk in enumerate(masks)}

    def sign_strings(self):
        m = self.arrangement.m
        return [mask_to_signs(mk, m) for mk in self.masks]


def _sign_mask(normals, p) -> int | None:
    """Bitmask of a strictly generic point; None if p lies on a hyperplane."""
    mask = 0
    for h, a in enumerate(normals):
        d = dot(a, p)
        if d == 0:
            return None
        if d < 0:
            mask |= 1 << h
    return mask


def _signed_rows(normals, mask):
    return [tuple(-x for x in v) if mask >> h & 1 else v
            for h, v in enumerate(normals)]


def _seed_facets(a: Arrangement, mask: int, p) -> list[int]:
    """Walls of the seed chamber.

    Cheap exact certificates are tried first (a perpendicular-foot point on
    the hyperplane for walls, a two-term nonnegative combination for
    non-walls); the rational LP oracle settles anything left over.
    """
    walls = []
    normals = a.normals
    for i in range(a.m):
        ai = normals[i]
        aip = dot(ai, p)
        n2 = dot(ai, ai)
        foot = tuple(n2 * x - aip * y for x, y in zip(p, ai))
        ok = True
        for j in range(a.m):
            if j == i:
                continue
            d = dot(normals[j], foot)
            if d == 0 or (d < 0) != bool(mask >> j & 1):
                ok = False
                break
        if ok:
            walls.append(i)
            continue
        if _pair_farkas_redundant(normals, mask, i):
            continue
        rows = [r for h, r in enumerate(_signed_rows(normals, mask)) if h != i]
        if feasible_on_hyperplane(rows, ai, a.dim) is not None:
            walls.append(i)
    return walls


class _FlatLocalizer:
    """Rank-2 localizations: for two hyperplanes, every hyperplane through
    their codimension-2 intersection together with exact 2d trace normals."""

    __slots__ = ("a", "cache")

    def __init__(self, a: Arrangement):
        self.a = a
        self.cache: dict[tuple[int, int], tuple[tuple[int, ...], tuple]] = {}

    def get(self, i: int, j: int):
        key = (i, j) if i < j else (j, i)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        a = self.a
        g1, g2 = a.normals[key[0]], a.normals[key[1]]
        basis = EchelonBasis()
        basis.add(g1)
        basis.add(g2)
        lines = tuple(h for h in range(a.m) if basis.contains(a.normals[h]))
        nus = []
        # invertible coordinate pair of (g1, g2)
        pq = None
        for pi in range(a.dim):
            for qi in range(pi + 1, a.dim):
                if g1[pi] * g2[qi] - g1[qi] * g2[pi] != 0:
                    pq = (pi, qi)
                    break
            if pq:
                break
        det = g1[pq[0]] * g2[pq[1]] - g1[pq[1]] * g2[pq[0]]
        for h in lines:
            ah = a.normals[h]
            num_a = ah[pq[0]] * g2[pq[1]] - ah[pq[1]] * g2[pq[0]]
            num_b = g1[pq[0]] * ah[pq[1]] - g1[pq[1]] * ah[pq[0]]
            fa, fb = Fraction(num_a, det), Fraction(num_b, det)
            ca, cb = scale_to_int((fa, fb))
            # the scaled pair must reproduce ah with a positive factor
            vec = tuple(ca * x + cb * y for x, y in zip(g1, g2))
            lam_num = dot(vec, ah)
            if lam_num <= 0 or any(vec[t] * ah[u] != vec[u] * ah[t]
                                   for t in range(a.dim) for u in range(a.dim)):
                raise AssertionError("rank-2 localization failed; linalg bug")
            nus.append((ca, cb))
        entry = (lines, tuple(nus))
        self.cache[key] = entry
        return entry


def _sector_bounds(lines, nus, mask):
    """The two bounding lines of the 2d sector selected by the sign pattern."""
    taus = [-1 if mask >> h & 1 else 1 for h in lines]
    bounds = []
    for idx, (na, nb) in enumerate(nus):
        for ua, ub in ((-nb, na), (nb, -na)):
            ok = True
            for jdx, (ma, mb) in enumerate(nus):
                if jdx == idx:
                    continue
                if taus[jdx] * (ma * ua + mb * ub) <= 0:
                    ok = False
                    break
            if ok:
                bounds.append(lines[idx])
                break
    return bounds


def _witness_from_facets(a: Arrangement, mask: int, facets) -> tuple[int, ...]:
    rows = []
    for f in facets:
        v = a.normals[f]
        rows.append(tuple(-x for x in v) if mask >> f & 1 else v)
    sol = solve_square_int(rows, [1] * a.dim)
    if sol is None:
        raise _SimplicialityError("wall normals are dependent")
    nums, den = sol
    if den < 0:
        nums = [-x for x in nums]
    g = 0
    for x in nums:
        g = gcd(g, x)
    wit = tuple(x // g for x in nums) if g > 1 else tuple(nums)
    if _sign_mask(a.normals, wit) != mask:
        raise _SimplicialityError("facet witness landed in the wrong chamber")
    return wit


def _chamber_bfs_simplicial(a: Arrangement) -> ChamberComplex:
    normals = a.normals
    d = a.dim
    p0 = generic_point(normals, d)
    mask0 = _sign_mask(normals, p0)
    facets0 = _seed_facets(a, mask0, p0)
    if len(facets0) != d:
        raise _SimplicialityError(f"seed chamber has {len(facets0)} walls, expected {d}")
    loc = _FlatLocalizer(a)

    masks = [mask0]
    witnesses = [p0]
    facets = [tuple(sorted(facets0))]
    index = {mask0: 0}
    edges: dict[tuple[int, int], int] = {}
    queue = deque([0])
    while queue:
        ci = queue.popleft()
        mask = masks[ci]
        walls = facets[ci]
        for w in walls:
            nmask = mask ^ (1 << w)
            ni = index.get(nmask)
            if ni is None:
                nf = [w]
                for k in walls:
                    if k == w:
                        continue
                    lines, nus = loc.get(w, k)
                    bounds = _sector_bounds(lines, nus, nmask)
                    if len(bounds) != 2 or w not in bounds:
                        raise _SimplicialityError("sector pivot did not close up")
                    nf.append(bounds[0] if bounds[1] == w else bounds[1])
                if len(set(nf)) != d:
                    raise _SimplicialityError("pivoted walls collide")
                # mirroring the parent witness is usually an interior point of
                # the neighbour and avoids the exact solve; verify, never trust
                wit = _try_mirror(normals, witnesses[ci], w, nmask)
                if wit is not None and max(map(abs, wit)) > 1 << 24:
                    wit = None
                if wit is None:
                    wit = _witness_from_facets(a, nmask, nf)
                ni = len(masks)
                masks.append(nmask)
                witnesses.append(wit)
                facets.append(tuple(sorted(nf)))
                index[nmask] = ni
                queue.append(ni)
            ekey = (ci, ni) if ci < ni else (ni, ci)
            prev = edges.get(ekey)
            if prev is not None and prev != w:
                raise _SimplicialityError("two walls between one chamber pair")
            edges[ekey] = w
    edge_list = sorted((i, j, h) for (i, j), h in edges.items())
    return ChamberComplex(a, masks, witnesses, facets, edge_list)


def _try_mirror(normals, p, i, target_mask):
    ai = normals[i]
    n2 = dot(ai, ai)
    aip = dot(ai, p)
    q = [n2 * x - 2 * aip * y for x, y in zip(p, ai)]
    g = 0
    for x in q:
        g = gcd(g, x)
    if g > 1:
        q = [x // g for x in q]
    q = tuple(q)
    return q if _sign_mask(normals, q) == target_mask else None


def _try_ray_walk(normals, mask, p, i, target_mask):
    ai = normals[i]
    si = -1 if mask >> i & 1 else 1
    direction = tuple(-si * x for x in ai)
    t_i = None
    t_next = None
    for j, aj in enumerate(normals):
        sj = -1 if mask >> j & 1 else 1
        slope = sj * dot(aj, direction)
        if slope >= 0:
            continue
        t_j = Fraction(sj * dot(aj, p), -slope)
        if j == i:
            t_i = t_j
        elif t_next is None or t_j < t_next:
            t_next = t_j
    if t_i is None or (t_next is not None and t_next <= t_i):
        return None
    t_mid = t_i + 1 if t_next is None else (t_i + t_next) / 2
    q = scale_to_int([Fraction(x) + t_mid * dx for x, dx in zip(p, direction)])
    return q if _sign_mask(normals, q) == target_mask else None


def _pair_farkas_redundant(normals, mask, i) -> bool:
    """True if the flipped constraint is a visible nonnegative combination of
    two others, certifying that hyperplane i is not a wall of the chamber."""
    rows = _signed_rows(normals, mask)
    target = rows[i]
    n = len(target)
    m = len(rows)
    for j in range(m):
        if j == i:
            continue
        rj = rows[j]
        for k in range(j + 1, m):
            if k == i:
                continue
            rk = rows[k]
            pq = None
            for pi in range(n):
                for qi in range(pi + 1, n):
                    det = rj[pi] * rk[qi] - rj[qi] * rk[pi]
                    if det != 0:
                        pq = (pi, qi, det)
                        break
                if pq:
                    break
            if pq is None:
                continue
            pi, qi, det = pq
            cj = Fraction(target[pi] * rk[qi] - target[qi] * rk[pi], det)
            ck = Fraction(rj[pi] * target[qi] - rj[qi] * target[pi], det)
            if cj < 0 or ck < 0:
                continue
            if all(cj * rj[t] + ck * rk[t] == target[t] for t in range(n)):
                return True
    return False


def _chamber_bfs_general(a: Arrangement) -> ChamberComplex:
    normals = a.normals
    d = a.dim
    p0 = generic_point(normals, d)
    mask0 = _sign_mask(normals, p0)
    masks = [mask0]
    witnesses = [p0]
    index = {mask0: 0}
    incident: list[list[int]] = [[]]
    edges: dict[tuple[int, int], int] = {}
    queue = deque([0])
    while queue:
        ci = queue.popleft()
        mask = masks[ci]
        p = witnesses[ci]
        for i in range(a.m):
            nmask = mask ^ (1 << i)
            ni = index.get(nmask)
            if ni is None:
                wit = _try_mirror(normals, p, i, nmask)
                if wit is None:
                    wit = _try_ray_walk(normals, mask, p, i, nmask)
                if wit is None:
                    if _pair_farkas_redundant(normals, mask, i):
                        continue
                    wit = feasible_strict(_signed_rows(normals, nmask), d)
                    if wit is None:
                        continue
                ni = len(masks)
                masks.append(nmask)
                witnesses.append(wit)
                incident.append([])
                index[nmask] = ni
                queue.append(ni)
            ekey = (ci, ni) if ci < ni else (ni, ci)
            if ekey not in edges:
                edges[ekey] = i
                incident[ci].append(i)
                incident[ni].append(i)
    edge_list = sorted((i, j, h) for (i, j), h in edges.items())
    facets = [tuple(sorted(f)) for f in incident]
    return ChamberComplex(a, masks, witnesses, facets, edge_list)


def _verify_central_symmetry(cc: ChamberComplex) -> None:
    full = (1 << cc.arrangement.m) - 1
    for mk in cc.masks:
        if (mk ^ full) not in cc.index:
            raise AssertionError("chamber set not closed under negation; BFS bug")


@lru_cache(maxsize=12)
def chamber_complex(a: Arrangement) -> ChamberComplex:
    """Chambers with walls and adjacency; cached per arrangement."""
    if a.dim == 0:
        return ChamberComplex(a, [0], [()], [()], [])
    if a.rank() != a.dim:
        raise NotEssentialError(
            f"rank {a.rank()} < dim {a.dim}: quotient to an essential arrangement first")
    if a.simplicial:
        try:
            cc = _chamber_bfs_simplicial(a)
        except _SimplicialityError:
            cc = _chamber_bfs_general(a)
    else:
        cc = _chamber_bfs_general(a)
    _verify_central_symmetry(cc)
    return cc


def chambers(a: Arrangement) -> frozenset[str]:
    """All chambers as full-support sign strings."""
    return frozenset(chamber_complex(a).sign_strings())


def chamber_count(a: Arrangement) -> int:
    return len(chamber_complex(a).masks)


def f_vector(a: Arrangement) -> list[int]:
    """(f_-1, f_0, ..., f_(d-1)) of the induced sphere triangulation.

    A cone of dimension k+1 is a pair (flat of dimension k+1, chamber of
    the arrangement induced on that flat), so each entry is a sum of
    chamber counts over a rank level of the intersection lattice.
    """
    if a.rank() != a.dim:
        raise NotEssentialError("f-vector requires an essential arrangement")
    lat = intersection_lattice(a)
    out = [0] * (a.dim + 1)
    for flat in lat.elements:
        sub_dim = a.dim - flat.rank
        if sub_dim == 0:
            out[0] += 1
        else:
            out[sub_dim] += chamber_count(restrict_to_flat(a, flat.hyperplanes))
    return out


def f_polynomial(fvec) -> "IntPolynomial":
    """f(t) = sum f_(d-1-i) t^i for the f-vector list (f_-1, ..., f_(d-1))."""
    from .poly import IntPolynomial

    return IntPolynomial(tuple(reversed(fvec)))
