"""Explicit percolating seeds on Hamming graphs and complete graphs.

Vertex seeds are returned as flat index sets on the corresponding
Hamming graph (row-major codec, first coordinate most significant);
regions are returned as point sets in [0,n)^d.  Edge seeds are
normalized (min, max) pairs.

All membership tests that involve the weight delta = (d-2)/(d-1) are
done in exact rational arithmetic: the strict inequality sits exactly
on boundary lattice points and floating point would misclassify them.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from bootperc.errors import PreconditionError
from bootperc.graphs import Edge, HammingSpace

Point = tuple[int, ...]
Region = frozenset[Point]


def corner_masks(d: int) -> list[tuple[int, ...]]:
    """All t in {0,1}^d with t_1 = t_2; the corners a region is reflected to."""
    if d < 2:
        raise PreconditionError("corner masks need d >= 2")
    masks = [t for t in product((0, 1), repeat=d) if t[0] == t[1]]
    assert len(masks) == 2 ** (d - 1)
    return masks


def reflect_region(points: Region | set[Point], mask: tuple[int, ...], n: int) -> Region:
    """Reflect a region coordinatewise: x_i -> n-1-x_i where mask_i = 1.

    Involutive, size preserving; mask (0,...,0) is the identity.
    """
    out = set()
    for p in points:
        if len(p) != len(mask):
            raise PreconditionError("point dimension does not match mask")
        out.add(tuple(n - 1 - x if t else x for x, t in zip(p, mask)))
    return frozenset(out)


def vertex_seed_dim2(n: int, r: int) -> frozenset[int]:
    """Minimum percolating vertex seed for the two-dimensional Hamming graph.

    Two triangular corner regions: points (x, y) with
    x + (n-1-y) < ceil(r/2)  or  (n-1-x) + y < floor(r/2).
    Size is floor((r+1)^2/4) and the set percolates at threshold r
    whenever n >= ceil(r/2)+1.
    """
    hi = -(-r // 2)  # ceil(r/2)
    lo = r // 2
    if n <= hi:
        raise PreconditionError(f"need n >= ceil(r/2)+1, got n={n}, r={r}")
    space = HammingSpace(n, 2)
    out = set()
    for x in range(n):
        for y in range(n):
            if x + (n - 1 - y) < hi or (n - 1 - x) + y < lo:
                out.add(space.encode((x, y)))
    return frozenset(out)


def _check_corner_args(n: int, r: int, d: int) -> None:
    if d < 2:
        raise PreconditionError("corner constructions need d >= 2")
    if n <= r:
        raise PreconditionError(f"need n >= r+1, got n={n}, r={r}")


def simplex_region(n: int, r: int, d: int) -> Region:
    """Points of [0,n)^d with coordinate sum <= ceil(r/2)-1."""
    _check_corner_args(n, r, d)
    s = -(-r // 2)
    points: list[Point] = []

    def extend(prefix: list[int], remaining: int, coords_left: int) -> None:
        if coords_left == 0:
            points.append(tuple(prefix))
            return
        for x in range(min(remaining, n - 1) + 1):
            prefix.append(x)
            extend(prefix, remaining - x, coords_left - 1)
            prefix.pop()

    if s >= 1:
        extend([], s - 1, d)
    return frozenset(points)


def inner_cut_region(n: int, r: int, d: int) -> Region:
    """Points of [0,n)^d with x_1 + x_2 + delta*(x_3+...+x_d) < delta*(ceil(r/2)-1).

    delta = (d-2)/(d-1); empty for d = 2.  Exact rational comparison.
    """
    _check_corner_args(n, r, d)
    delta = Fraction(d - 2, d - 1)
    s = -(-r // 2)
    bound = delta * (s - 1)
    out = set()
    # members of the cut are always inside the simplex, so enumerate there
    for p in simplex_region(n, r, d):
        if p[0] + p[1] + delta * sum(p[2:]) < bound:
            out.add(p)
    return frozenset(out)


def carved_region(n: int, r: int, d: int) -> Region:
    """Simplex region minus the inner cut."""
    return simplex_region(n, r, d) - inner_cut_region(n, r, d)


def _corner_union(region: Region, n: int, d: int) -> frozenset[int]:
    space = HammingSpace(n, d)
    out: set[int] = set()
    for mask in corner_masks(d):
        for p in reflect_region(region, mask, n):
            out.add(space.encode(p))
    return frozenset(out)


def simplex_corner_set(n: int, r: int, d: int) -> frozenset[int]:
    """The simplex region reflected to every corner with t_1 = t_2.

    Percolates the Hamming graph on [0,n)^d at threshold r for n >= r+1.
    """
    return _corner_union(simplex_region(n, r, d), n, d)


def carved_corner_set(n: int, r: int, d: int) -> frozenset[int]:
    """The carved region reflected to every corner with t_1 = t_2.

    A subset of :func:`simplex_corner_set` that still percolates at
    threshold r for n >= r+1; for d = 2 the cut is empty and the two
    sets coincide.
    """
    return _corner_union(carved_region(n, r, d), n, d)


def star_seed_complete(n: int, r: int) -> frozenset[Edge]:
    """All edges of the complete graph with both endpoints in {0..r}.

    C(r+1, 2) edges; percolates the star process at threshold r for
    n >= r+1.
    """
    if n <= r:
        raise PreconditionError(f"need n >= r+1, got n={n}, r={r}")
    return frozenset((i, j) for i in range(r) for j in range(i + 1, r + 1))


def star_seed_hamming(n: int, r: int, d: int) -> frozenset[Edge]:
    """Recursive star-process seed on the Hamming graph of dimension d.

    Layer t (last coordinate = t) carries the dimension d-1 seed for
    threshold r-t, for t = 0..r-1; layers with r-t <= 0 are empty.
    Total size is C(d+r, d+1).
    """
    if d < 1:
        raise PreconditionError("star seed needs d >= 1")
    if n <= r:
        raise PreconditionError(f"need n >= r+1, got n={n}, r={r}")
    if d == 1:
        return star_seed_complete(n, r)
    out: set[Edge] = set()
    for t in range(min(r, n)):
        # vertex a of the (d-1)-dimensional layer sits at index a*n + t
        for a, b in star_seed_hamming(n, r - t, d - 1):
            out.add((a * n + t, b * n + t))
    return frozenset(out)


def line_seed(n: int, r: int) -> frozenset[Edge]:
    """Seed for the line process on the complete graph, size floor((r+2)^2/8).

    Vertex i < ceil(r/2) is joined to the last ceil(r/2)-i vertices
    {n-1, ..., n-(ceil(r/2)-i)}; for even r the pairs
    (n-3+2j-r/2, n-2+2j-r/2), j = 1..ceil(r/4), are added.  Simplicity
    is guaranteed by n >= ceil(r/2)+2 and asserted.
    """
    h = -(-r // 2)
    if n < h + 2:
        raise PreconditionError(f"need n >= ceil(r/2)+2, got n={n}, r={r}")
    edges: set[Edge] = set()

    def add(u: int, v: int) -> None:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise AssertionError(f"invalid edge ({u},{v}) in line seed")
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise AssertionError(f"duplicate edge {e} in line seed")
        edges.add(e)

    for i in range(h):
        for j in range(1, h - i + 1):
            add(i, n - j)
    if r % 2 == 0:
        for j in range(1, -(-r // 4) + 1):
            add(n - 3 + 2 * j - r // 2, n - 2 + 2 * j - r // 2)
    if len(edges) != (r + 2) ** 2 // 8:
        raise AssertionError("line seed size disagrees with its closed form")
    return frozenset(edges)
