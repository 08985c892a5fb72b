"""Vectorized numpy fallback for the core sweep (same contract as _kernels)."""

import numpy as np


def charge_vectors(s, bound, cmax, deltas, caps):
    """All zero-sum charge vectors with size <= bound passing every (delta, cap) filter.

    Level-by-level frontier expansion over the runner coordinates; the last
    coordinate is forced by the zero-sum constraint.  Returns (n, s) int64.
    """
    choices = np.arange(-cmax, cmax + 1, dtype=np.int64)
    nc = choices.size
    c = np.zeros((1, 0), np.int64)
    q = np.zeros(1, np.int64)
    l = np.zeros(1, np.int64)
    p = np.zeros(1, np.int64)

    for d in range(s - 1):
        n = c.shape[0]
        cn = np.repeat(c, nc, axis=0)
        x = np.tile(choices, n)
        qn = np.repeat(q, nc) + x * x
        ln = np.repeat(l, nc) + d * x
        pn = np.repeat(p, nc) + x
        rr = s - 1 - d
        rem = np.arange(d + 1, s, dtype=np.int64)
        g1 = int(rem.sum())
        g2 = int((rem * rem).sum())
        lhs = rr * s * (s * qn + 2 * ln) + (g1 - pn * s) ** 2 - rr * g2
        keep = lhs <= 2 * bound * rr * s
        c = np.concatenate([cn[keep], x[keep, None]], axis=1)
        q, l, p = qn[keep], ln[keep], pn[keep]

    last = -p
    keep = (np.abs(last) <= cmax) & (s * (q + last * last) + 2 * (l + (s - 1) * last) <= 2 * bound)
    c = np.concatenate([c[keep], last[keep][:, None]], axis=1)
    for m in range(deltas.shape[0]):
        mask = np.ones(c.shape[0], bool)
        for g in range(s):
            mask &= c[:, g] <= c[:, deltas[m, g]] + caps[m, g]
        c = c[mask]
    return np.ascontiguousarray(c)
