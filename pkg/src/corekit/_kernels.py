"""Numba kernel for the exhaustive core sweep.

An s-core is determined by one integer charge per runner (the bead surplus
relative to a flat abacus), the charges summing to zero.  Its size is
s/2 * sum(c^2) + sum(g * c_g), so the sweep over all s-cores of size <= bound
is a depth-first walk of a lattice ball.  Being simultaneously a T-core is,
on those coordinates, the system of inequalities

    c_g <= c_{(g - T) mod s} + ceil((T - g) / s)   for every runner g,

one row of (delta, cap) tables per extra modulus.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def charge_vectors(s, bound, cmax, deltas, caps):  # pragma: no cover - exercised via backend
    """All zero-sum charge vectors with size <= bound passing every (delta, cap) filter.

    Returns an (n, s) int64 array in DFS order.
    """
    # suffix aggregates: sums of g and g^2 over runners [d, s)
    g1 = np.zeros(s + 1, np.int64)
    g2 = np.zeros(s + 1, np.int64)
    for d in range(s - 1, -1, -1):
        g1[d] = g1[d + 1] + d
        g2[d] = g2[d + 1] + d * d

    cur = np.zeros(s, np.int64)
    qs = np.zeros(s + 1, np.int64)  # prefix sum of c^2
    ls = np.zeros(s + 1, np.int64)  # prefix sum of g*c
    ps = np.zeros(s + 1, np.int64)  # prefix sum of c
    xs = np.full(s, -cmax - 1, np.int64)

    out = np.empty((256, s), np.int64)
    n_out = 0

    d = 0
    while d >= 0:
        if d == s - 1:
            last = -ps[d]
            if -cmax <= last <= cmax:
                q = qs[d] + last * last
                l = ls[d] + (s - 1) * last
                if s * q + 2 * l <= 2 * bound:
                    cur[d] = last
                    good = True
                    for m in range(deltas.shape[0]):
                        for g in range(s):
                            if cur[g] > cur[deltas[m, g]] + caps[m, g]:
                                good = False
                                break
                        if not good:
                            break
                    if good:
                        if n_out == out.shape[0]:
                            grown = np.empty((2 * out.shape[0], s), np.int64)
                            grown[:n_out] = out
                            out = grown
                        out[n_out] = cur
                        n_out += 1
            d -= 1
            continue
        xs[d] += 1
        x = xs[d]
        if x > cmax:
            xs[d] = -cmax - 1
            d -= 1
            continue
        q = qs[d] + x * x
        l = ls[d] + d * x
        p = ps[d] + x
        # admissible bound: minimize the remaining coordinates' contribution
        # subject to their sum being -p (continuous relaxation, exact integers)
        rr = s - 1 - d
        lhs = rr * s * (s * q + 2 * l) + (g1[d + 1] - p * s) ** 2 - rr * g2[d + 1]
        if lhs > 2 * bound * rr * s:
            continue
        cur[d] = x
        qs[d + 1] = q
        ls[d + 1] = l
        ps[d + 1] = p
        d += 1

    return out[:n_out].copy()
