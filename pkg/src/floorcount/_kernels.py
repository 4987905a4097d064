"""Pure-Python lattice-point kernels.

Counts and enumerates nonnegative integer solutions of A z = b for a column
set whose cone is pointed, certified by an integer functional phi with
phi . a_j >= 1 for every column.  The count recursion memoizes on
(column index, residual), which makes sweeps of many right-hand sides over
the same matrix cheap.

A compiled twin lives in _speedups.pyx; `floorcount.kernel` picks whichever
imports.
"""

from __future__ import annotations

BACKEND = "python"


def _dot(u, v):
    s = 0
    for a, b in zip(u, v):
        s += a * b
    return s


class SolutionCounter:
    """Counter for |{z in Z^m : z >= lower, A z = b}| over varying b."""

    def __init__(self, cols, phi, lower=0):
        # columns ordered by decreasing phi-value: big steps first
        order = sorted(range(len(cols)), key=lambda j: -_dot(phi, cols[j]))
        self.cols = [tuple(cols[j]) for j in order]
        self.order = order
        self.phi = tuple(phi)
        self.lower = lower
        self.pa = [_dot(phi, a) for a in self.cols]
        d = len(phi)
        m = len(self.cols)
        # suffix row signs: can rows still move up/down using columns j..m-1
        self.up = [[False] * d for _ in range(m + 1)]
        self.dn = [[False] * d for _ in range(m + 1)]
        for j in range(m - 1, -1, -1):
            for i in range(d):
                self.up[j][i] = self.up[j + 1][i] or self.cols[j][i] > 0
                self.dn[j][i] = self.dn[j + 1][i] or self.cols[j][i] < 0
        self.memo = {}

    def count(self, b):
        if self.lower:
            # shift z = lower + z' once up front
            shift = [self.lower * sum(a[i] for a in self.cols) for i in range(len(self.phi))]
            b = tuple(bi - si for bi, si in zip(b, shift))
        return self._rec(0, tuple(b))

    def _rec(self, j, r):
        if _dot(self.phi, r) < 0:
            return 0
        if j == len(self.cols):
            return 1 if all(v == 0 for v in r) else 0
        for i, v in enumerate(r):
            if v > 0 and not self.up[j][i]:
                return 0
            if v < 0 and not self.dn[j][i]:
                return 0
        key = (j, r)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        a = self.cols[j]
        ub = _dot(self.phi, r) // self.pa[j]
        total = 0
        rr = list(r)
        for _ in range(ub + 1):
            total += self._rec(j + 1, tuple(rr))
            for i, ai in enumerate(a):
                rr[i] -= ai
        self.memo[key] = total
        return total


def count_solutions(cols, phi, b, lower=0):
    return SolutionCounter(cols, phi, lower).count(b)


def enum_solutions(cols, phi, b, lower=0):
    """Yield every z >= lower with sum z_j cols[j] = b, in lexicographic
    order of z (original column order)."""
    m = len(cols)
    if m == 0:
        if all(v == 0 for v in b):
            yield ()
        return
    out = [0] * m

    def rec(j, r):
        if j == m:
            if all(v == 0 for v in r):
                yield tuple(out)
            return
        a = cols[j]
        rr = [ri - lower * ai for ri, ai in zip(r, a)]
        z = lower
        while _dot(phi, rr) >= 0:
            out[j] = z
            yield from rec(j + 1, tuple(rr))
            z += 1
            rr = [ri - ai for ri, ai in zip(rr, a)]

    yield from rec(0, tuple(b))
