"""Chamber adjacency graph and h-polynomials from chamber geometry.

The tope graph has one vertex per chamber and an edge whenever two chambers
share a wall.  Directing every edge toward the vertex with more minus signs
(relative to a base chamber) makes the base the unique source; both the
in-degree generating polynomial and the separating-wall statistic yield the
h-polynomial of the arrangement's sphere triangulation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import (Arrangement, ChamberComplex, chamber_complex,
                          signs_to_mask)
from .linalg import dot
from .poly import IntPolynomial


class BaseNotAChamberError(ValueError):
    """Raised when the requested base sign vector is not a chamber."""


@dataclass(frozen=True)
class TopeGraph:
    arrangement: Arrangement
    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int, int], ...]   # (vertex, vertex, hyperplane)

    def degree_sequence(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for i, j, _ in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg


@dataclass(frozen=True)
class DirectedTopeGraph:
    arrangement: Arrangement
    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int, int], ...]   # directed (tail, head, hyperplane)
    base: str

    def in_degrees(self) -> list[int]:
        indeg = [0] * len(self.vertices)
        for _, head, _ in self.edges:
            indeg[head] += 1
        return indeg


def _verify_walls(cc: ChamberComplex) -> None:
    """Certify each edge's shared wall: an exact point on the hyperplane with
    every other constraint strict (the zeroed sign vector is realizable)."""
    a = cc.arrangement
    normals = a.normals
    for ci, cj, h in cc.edges:
        if cc.masks[ci] ^ cc.masks[cj] != 1 << h:
            raise AssertionError("edge endpoints differ off the recorded wall")
        p, q = cc.witnesses[ci], cc.witnesses[cj]
        ah = normals[h]
        c1, c2 = dot(ah, p), dot(ah, q)
        z = tuple(c1 * y - c2 * x for x, y in zip(p, q))
        if c1 < 0:
            z = tuple(-x for x in z)
        mask = cc.masks[ci]
        for j, aj in enumerate(normals):
            d = dot(aj, z)
            if j == h:
                if d != 0:
                    raise AssertionError("wall certificate misses its hyperplane")
            elif d == 0 or (d < 0) != bool(mask >> j & 1):
                raise AssertionError("wall certificate violates a chamber constraint")


def build_tope_graph(a: Arrangement) -> TopeGraph:
    """Graph on chambers; edges carry the index of the shared wall."""
    cc = chamber_complex(a)
    _verify_walls(cc)
    return TopeGraph(a, tuple(cc.sign_strings()), tuple(cc.edges))


def _resolve_base(g: TopeGraph, base: str | None) -> int:
    if base is None:
        return 0
    try:
        return g.vertices.index(base)
    except ValueError:
        raise BaseNotAChamberError(f"{base!r} is not a chamber") from None


def direct(g: TopeGraph, base: str | None = None) -> DirectedTopeGraph:
    """Direct every edge toward the vertex with more minus signs once all
    hyperplanes are re-oriented so the base chamber is all-plus."""
    bi = _resolve_base(g, base)
    bmask = signs_to_mask(g.vertices[bi])
    masks = [signs_to_mask(v) ^ bmask for v in g.vertices]
    directed = []
    for i, j, h in g.edges:
        # relative sign vectors differ exactly at h; minus count differs by 1
        if masks[i] >> h & 1:
            directed.append((j, i, h))
        else:
            directed.append((i, j, h))
    base_str = g.vertices[bi]
    return DirectedTopeGraph(g.arrangement, g.vertices, tuple(directed), base_str)


def _as_graph(a) -> TopeGraph:
    return a if isinstance(a, TopeGraph) else build_tope_graph(a)


def h_via_indegree(a, base: str | None = None) -> IntPolynomial:
    """h(t) = sum over vertices of t^indegree in the directed tope graph."""
    g = _as_graph(a)
    dg = direct(g, base)
    coeffs = [0] * (g.arrangement.dim + 1)
    for deg in dg.in_degrees():
        coeffs[deg] += 1
    return IntPolynomial(coeffs)


def h_via_separation(a, base: str | None = None) -> IntPolynomial:
    """h(t) = sum over chambers of t^sep, sep counting the chamber's own
    walls whose hyperplane separates it from the base chamber."""
    g = _as_graph(a)
    bi = _resolve_base(g, base)
    bmask = signs_to_mask(g.vertices[bi])
    walls_of = [[] for _ in g.vertices]
    for i, j, h in g.edges:
        walls_of[i].append(h)
        walls_of[j].append(h)
    coeffs = [0] * (g.arrangement.dim + 1)
    for v, signs in enumerate(g.vertices):
        rel = signs_to_mask(signs) ^ bmask
        sep = sum(1 for h in walls_of[v] if rel >> h & 1)
        coeffs[sep] += 1
    return IntPolynomial(coeffs)


def dump_tope_graph(g: TopeGraph) -> str:
    """Text dump: vertices as sign strings, then one line "i j k" per edge."""
    lines = list(g.vertices)
    lines += [f"{i} {j} {h}" for i, j, h in g.edges]
    return "\n".join(lines) + "\n"
