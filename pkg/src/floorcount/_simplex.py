"""Small exact simplex over rationals (Bland's rule, phase-1 only).

Used for feasibility questions: pointedness of a vector configuration,
existence of a strictly positive functional, and cone membership. Sizes in
this package stay tiny, so clarity beats speed here.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def phase1(A, b):
    """Find x >= 0 with A x = b, A a list of rows. Returns x (list of
    Fractions) or None when infeasible."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return []
    rows = [[Fraction(v) for v in row] for row in A]
    rhs = [Fraction(v) for v in b]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
    # tableau columns: n real + m artificial + rhs
    T = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    # reduced-cost row for minimizing the artificial sum
    z = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n + m + 1):
            z[j] += T[i][j]
    while True:
        enter = -1
        for j in range(n + m):
            if z[j] > 0 and j not in basis:
                enter = j
                break
        if enter < 0:
            break
        leave, best = -1, None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave < 0:
            break
        piv = T[leave][enter]
        T[leave] = [v / piv for v in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [v - f * w for v, w in zip(T[i], T[leave])]
        f = z[enter]
        z = [v - f * w for v, w in zip(z, T[leave])]
        basis[leave] = enter
    if z[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, bj in enumerate(basis):
        if bj < n:
            x[bj] = T[i][-1]
        elif T[i][-1] != 0:
            return None
    return x


def feasible(A, b) -> bool:
    """Is {x >= 0 : A x = b} nonempty?"""
    return phase1(A, b) is not None


def positive_functional(cols):
    """Return integer phi with phi . a >= 1 for every column a, or None.

    Exists exactly when the columns generate a pointed cone and none of them
    is zero; phi certifies boundedness of {z >= 0 : sum z_i a_i = c}.
    """
    m = len(cols)
    if m == 0:
        return ()
    d = len(cols[0])
    # phi free: phi = u - v with u, v >= 0; slack s: a.(u-v) - s = 1
    A = []
    for a in cols:
        row = list(a) + [-x for x in a] + [0] * m
        A.append(row)
    for i in range(m):
        A[i][2 * d + i] = -1
    x = phase1(A, [1] * m)
    if x is None:
        return None
    phi = [x[j] - x[d + j] for j in range(d)]
    denom = 1
    for v in phi:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    return tuple(int(v * denom) for v in phi)
