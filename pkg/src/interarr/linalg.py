"""Small exact integer linear algebra helpers (ranks, kernels, solves).

Everything operates on tuples/lists of Python ints or Fractions; sizes are
tiny (dimension <= 8, a few dozen rows), so clarity beats asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def primitive_vector(v) -> tuple[int, ...]:
    """Divide by the gcd and make the first nonzero entry positive."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    w = [x // g for x in v]
    for x in w:
        if x != 0:
            if x < 0:
                w = [-y for y in w]
            break
    return tuple(w)


def int_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for r in range(rank + 1, len(m)):
            if m[r][c] != 0:
                f1, f2 = pr[c], m[r][c]
                m[r] = [f1 * x - f2 * y for x, y in zip(m[r], pr)]
        rank += 1
        if rank == len(m):
            break
    return rank


class EchelonBasis:
    """Incrementally maintained integer row-echelon basis of a row space.

    Supports O(rank * n) membership tests and rank-preserving insertion;
    used for matroid closures and the subset-sum characteristic polynomial.
    """

    __slots__ = ("rows", "pivots")

    def __init__(self):
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    def copy(self) -> "EchelonBasis":
        nb = EchelonBasis()
        nb.rows = [r[:] for r in self.rows]
        nb.pivots = self.pivots[:]
        return nb

    def _reduce(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                a, b = row[p], v[p]
                v = [a * x - b * y for x, y in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return all(x == 0 for x in self._reduce(v))

    def add(self, v) -> bool:
        """Insert v; returns True if the rank grew."""
        red = self._reduce(v)
        for p, x in enumerate(red):
            if x != 0:
                g = 0
                for y in red:
                    g = gcd(g, y)
                self.rows.append([y // g for y in red])
                self.pivots.append(p)
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def integer_kernel_basis(rows, n: int) -> list[tuple[int, ...]]:
    """Basis of the integer kernel {x in Z^n : M x = 0} via unimodular column ops."""
    if not rows:
        return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    m = [list(r) for r in rows]
    r = len(m)
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # columns of U

    def col_op(j, k, q):
        # column_j -= q * column_k, applied to both m and u
        for row in m:
            row[j] -= q * row[k]
        for row in u:
            row[j] -= q * row[k]

    def col_swap(j, k):
        for row in m:
            row[j], row[k] = row[k], row[j]
        for row in u:
            row[j], row[k] = row[k], row[j]

    c = 0
    for i in range(r):
        live = [j for j in range(c, n) if m[i][j] != 0]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda j: abs(m[i][j]))
            a = live[0]
            nxt = []
            for j in live[1:]:
                q = m[i][j] // m[i][a]
                col_op(j, a, q)
                if m[i][j] != 0:
                    nxt.append(j)
            live = [a] + nxt
        if live[0] != c:
            col_swap(live[0], c)
        c += 1
        if c == n:
            break
    # columns c..n-1 of m are zero in all processed rows, hence in all rows
    return [tuple(u[i][j] for i in range(n)) for j in range(c, n)]


def bareiss_det(rows) -> int:
    """Exact determinant of an integer matrix (Bareiss elimination)."""
    m = [list(r) for r in rows]
    d = len(m)
    if d == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(d - 1):
        if m[k][k] == 0:
            piv = next((r for r in range(k + 1, d) if m[r][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, d):
            for j in range(k + 1, d):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[d - 1][d - 1]


def solve_square_int(rows, rhs) -> tuple[list[int], int] | None:
    """Solve an integer square system by Cramer; returns (numerators, det).

    None if singular.  The exact solution is numerators / det.
    """
    det = bareiss_det(rows)
    if det == 0:
        return None
    d = len(rows)
    nums = []
    for c in range(d):
        modified = [list(r[:c]) + [rhs[i]] + list(r[c + 1:]) for i, r in enumerate(rows)]
        nums.append(bareiss_det(modified))
    return nums, det


def solve_square_fraction(rows, rhs) -> list[Fraction] | None:
    """Solve a square exact system; None if singular."""
    d = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(rows, rhs)]
    for c in range(d):
        piv = None
        for r in range(c, d):
            if a[r][c] != 0:
                piv = r
                break
        if piv is None:
            return None
        a[c], a[piv] = a[piv], a[c]
        inv = a[c][c]
        a[c] = [x / inv for x in a[c]]
        for r in range(d):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [a[r][d] for r in range(d)]


def scale_to_int(values) -> tuple[int, ...]:
    """Clear denominators of a Fraction vector and gcd-reduce."""
    from math import lcm

    denom = 1
    for v in values:
        denom = lcm(denom, Fraction(v).denominator)
    ints = [int(Fraction(v) * denom) for v in values]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)
