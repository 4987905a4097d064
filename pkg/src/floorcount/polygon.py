"""h-transverse polygons and their side data.

A polygon here is stored through its parametrisation: the right-side slopes
``c_r`` (strictly decreasing), left-side slopes ``c_l`` (strictly increasing),
the top lattice length ``d_t`` and the side lattice lengths ``d_r``, ``d_l``.
The bottom length ``d_b`` is forced by balancing of the normal fan.

Throughout the package "lattice length" conventions are used for the top and
bottom sides (d_b = d_t + sum(c_r*d_r) - sum(c_l*d_l)), not boundary
lattice-point counts; the two differ by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations


class PolygonError(ValueError):
    pass


class UnbalancedSides(PolygonError):
    pass


class NonMonotoneSlopes(PolygonError):
    pass


class DegenerateBottom(PolygonError):
    pass


@dataclass(frozen=True)
class HTransversePolygon:
    """Validated h-transverse polygon P(c, d) with derived a and d_b."""

    c_r: tuple
    c_l: tuple
    d_t: int
    d_r: tuple
    d_l: tuple
    a: int
    d_b: int

    def multidegree(self):
        return (self.d_t, self.d_r, self.d_l)


def build_polygon(c_r, c_l, d_t, d_r, d_l) -> HTransversePolygon:
    """Validate (c, d) data and compute the derived quantities a and d_b."""
    c_r, c_l = tuple(c_r), tuple(c_l)
    d_r, d_l = tuple(d_r), tuple(d_l)
    if len(c_r) != len(d_r) or len(c_l) != len(d_l):
        raise PolygonError("slope and length vectors must have equal lengths")
    if any(d <= 0 for d in d_r + d_l) or d_t <= 0:
        raise PolygonError("lattice lengths must be positive")
    if any(c_r[i] <= c_r[i + 1] for i in range(len(c_r) - 1)):
        raise NonMonotoneSlopes("right slopes must be strictly decreasing")
    if any(c_l[i] >= c_l[i + 1] for i in range(len(c_l) - 1)):
        raise NonMonotoneSlopes("left slopes must be strictly increasing")
    a = sum(d_r)
    if a != sum(d_l):
        raise UnbalancedSides(f"sum(d_r)={a} != sum(d_l)={sum(d_l)}")
    d_b = d_t + sum(c * d for c, d in zip(c_r, d_r)) - sum(c * d for c, d in zip(c_l, d_l))
    if d_b < 1:
        raise DegenerateBottom(f"bottom lattice length {d_b} < 1")
    return HTransversePolygon(c_r, c_l, d_t, d_r, d_l, a, d_b)


@dataclass(frozen=True)
class DirectionMultisets:
    """Right and left direction multisets, |D_r| = |D_l| = a."""

    D_r: tuple
    D_l: tuple


def direction_multisets(p: HTransversePolygon) -> DirectionMultisets:
    """Expand slopes by multiplicity into the two size-a direction multisets."""
    D_r = tuple(c for c, d in zip(p.c_r, p.d_r) for _ in range(d))
    D_l = tuple(c for c, d in zip(p.c_l, p.d_l) for _ in range(d))
    return DirectionMultisets(D_r, D_l)


def expand_directions(c, d):
    """Direction multiset for one side family without polygon validation."""
    return tuple(ci for ci, di in zip(c, d) for _ in range(di))


def distinct_permutations(multiset):
    """All distinct orderings of a multiset, as a sorted list of tuples."""
    return sorted(set(permutations(tuple(multiset))))


def polygon_from_json(obj) -> HTransversePolygon:
    """Build a polygon from the CLI JSON object (ints possibly as strings)."""

    def ints(xs):
        return [int(x) for x in xs]

    return build_polygon(
        ints(obj["c_r"]), ints(obj["c_l"]), int(obj["d_t"]), ints(obj["d_r"]), ints(obj["d_l"])
    )


def polygon_to_json(p: HTransversePolygon):
    def enc(v):
        return v if abs(v) < 2**53 else str(v)

    return {
        "c_r": [enc(v) for v in p.c_r],
        "c_l": [enc(v) for v in p.c_l],
        "d_t": enc(p.d_t),
        "d_r": [enc(v) for v in p.d_r],
        "d_l": [enc(v) for v in p.d_l],
    }
