"""Permutation statistics and the closed-form h-polynomials built on them.

Two rise-fall statistics with different boundary conventions live here:
peaks pad the permutation with 0 on the left and n+1 on the right, maxima
pad with 0 on both sides.  They are deliberately separate functions.
"""

from __future__ import annotations

from itertools import permutations

from .poly import GammaVector, IntPolynomial, one_plus_t_power


class OddSumError(ArithmeticError):
    """Raised when a sum that must halve exactly turns out odd."""


def descents(seq) -> int:
    """Number of strict descents of an integer sequence."""
    return sum(1 for a, b in zip(seq, seq[1:]) if a > b)


def peaks(u) -> int:
    """Rise-then-fall positions with boundary values u_0 = 0, u_(n+1) = n+1."""
    n = len(u)
    padded = (0,) + tuple(u) + (n + 1,)
    return sum(1 for i in range(1, n + 1)
               if padded[i - 1] < padded[i] > padded[i + 1])


def maxima(u) -> int:
    """Rise-then-fall positions with boundary values u_0 = u_(n+1) = 0."""
    padded = (0,) + tuple(u) + (0,)
    return sum(1 for i in range(1, len(u) + 1)
               if padded[i - 1] < padded[i] > padded[i + 1])


def horizontal_flip(u) -> tuple[int, ...]:
    """Entrywise complement (n+1-u_1, ..., n+1-u_n); an involution."""
    n = len(u)
    return tuple(n + 1 - x for x in u)


def inversion_sequence(sigma) -> tuple[int, ...]:
    """a_i = #{j >= i : sigma_j <= sigma_i}; bijects S_n with the box
    {1..n} x {1..n-1} x ... x {1}."""
    n = len(sigma)
    return tuple(sum(1 for j in range(i, n) if sigma[j] <= sigma[i])
                 for i in range(n))


def _phi(u) -> int:
    if u[0] < u[1] < u[2]:
        return 2
    if u[1] < u[0] < u[2]:
        return 0
    return 1


def _halve(p: IntPolynomial) -> IntPolynomial:
    if any(c % 2 for c in p.coeffs):
        raise OddSumError(f"sum is not exactly halvable: {p.to_text()}")
    return IntPolynomial(tuple(c // 2 for c in p.coeffs))


def h_b_closed(n: int) -> IntPolynomial:
    """h-polynomial of the full type-B arrangement via the peak census:
    sum over S_n of (4t)^p(u) (1+t)^(n-2p(u))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    acc = IntPolynomial.zero()
    for u in permutations(range(1, n + 1)):
        p = peaks(u)
        acc = acc + IntPolynomial.t_power(p, 4 ** p) * one_plus_t_power(n - 2 * p)
    return acc


def h_d_closed(n: int) -> IntPolynomial:
    """h-polynomial of the type-D arrangement: the peak census weighted by
    the first-three-entries pattern, halved exactly.  Needs n >= 3 since the
    weight inspects u_1, u_2, u_3."""
    if n < 3:
        raise ValueError("the type-D closed form needs n >= 3")
    acc = IntPolynomial.zero()
    for u in permutations(range(1, n + 1)):
        w = _phi(u)
        if w:
            p = peaks(u)
            acc = acc + IntPolynomial.t_power(p, w * 4 ** p) * one_plus_t_power(n - 2 * p)
    return _halve(acc)


def increment_closed(n: int) -> IntPolynomial:
    """The h-increment between consecutive intermediate arrangements:
    half the maxima census of S_(n-1), sum (4t)^m(u) (1+t)^(n-2m(u))."""
    if n < 2:
        raise ValueError("n must be >= 2")
    acc = IntPolynomial.zero()
    for u in permutations(range(1, n)):
        m = maxima(u)
        acc = acc + IntPolynomial.t_power(m, 4 ** m) * one_plus_t_power(n - 2 * m)
    return _halve(acc)


def maxima_census(n: int) -> dict[int, int]:
    """How many permutations of [n] have k maxima, for each k."""
    out: dict[int, int] = {}
    for u in permutations(range(1, n + 1)):
        m = maxima(u)
        out[m] = out.get(m, 0) + 1
    return out


def gamma_b_closed(n: int) -> GammaVector:
    """gamma_k = 4^k * #{u in S_n : p(u) = k}, the direct peak census."""
    if n < 1:
        raise ValueError("n must be >= 1")
    census: dict[int, int] = {}
    for u in permutations(range(1, n + 1)):
        p = peaks(u)
        census[p] = census.get(p, 0) + 1
    entries = [4 ** k * census.get(k, 0) for k in range(n // 2 + 1)]
    return GammaVector(tuple(entries), n)
