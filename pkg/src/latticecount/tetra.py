"""Stable right tetrahedra and the three-generator denumerant.

The tetrahedron x1, x2, x3 >= 0, a1*x1 + a2*x2 + a3*x3 <= b is counted by
slicing along the largest generator and counting each planar slice as a
quadrant triangle.  The generators need not be pairwise coprime: each
slice inequality p*x + q*y <= c is divided through by gcd(p, q), flooring
the bound, which is exact because p*x + q*y only takes multiples of the
gcd.  The denumerant of n in <a1, a2, a3> is the difference of two
consecutive tetrahedron counts.
"""

from math import gcd

from .triangles import quadrant_count


def _check(a1, a2, a3):
    if a1 < 1 or a2 < 1 or a3 < 1:
        raise ValueError(f"generators must be >= 1, got ({a1}, {a2}, {a3})")


def tetra_slice_counts(a1, a2, a3, b):
    """Per-slice lattice counts, slicing x3' = 0, 1, ... along the largest
    generator; empty for b < 0."""
    _check(a1, a2, a3)
    if b < 0:
        return []
    p, q, s = sorted((a1, a2, a3))
    d = gcd(p, q)
    return [
        quadrant_count(p // d, q // d, (b - s * i) // d)
        for i in range(b // s + 1)
    ]


def tetra_count(a1, a2, a3, b):
    """Integral points in the closed tetrahedron a1*x1 + a2*x2 + a3*x3 <= b,
    xi >= 0.  Any positive generators are accepted; b < 0 gives 0."""
    return sum(tetra_slice_counts(a1, a2, a3, b))


def denumerant3(a1, a2, a3, n):
    """Number of triples (x1, x2, x3) of non-negative integers with
    a1*x1 + a2*x2 + a3*x3 = n; zero for n < 0."""
    _check(a1, a2, a3)
    if n < 0:
        return 0
    return tetra_count(a1, a2, a3, n) - tetra_count(a1, a2, a3, n - 1)
