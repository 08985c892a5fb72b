"""Simultaneous-core predicates, exhaustive enumeration, and maximal cores."""

from __future__ import annotations

import math
import os
from typing import Iterable, Iterator

import numpy as np

from ._backend import kernels
from .abacus import partition_from_beta
from .partitions import Partition

DEFAULT_ENUM_BOUND = 250
ENUM_BOUND_ENV = "COREKIT_MAX_ENUM_BOUND"


class InfiniteFamilyError(ValueError):
    """The requested family has infinitely many members (moduli gcd > 1)."""

    def __init__(self, gcd: int):
        super().__init__(f"infinitely many simultaneous cores (gcd={gcd})")
        self.gcd = gcd


class EnumerationBoundError(ValueError):
    """The size bound for an exhaustive sweep exceeds the configured ceiling."""


class CoreFamilySpec:
    """A set of moduli defining a simultaneous-core condition.

    Moduli must all be >= 2; duplicates collapse.
    """

    __slots__ = ("moduli",)

    def __init__(self, moduli: Iterable[int]):
        ms = tuple(sorted({int(m) for m in moduli}))
        if not ms:
            raise ValueError("at least one modulus is required")
        if ms[0] < 2:
            raise ValueError(f"moduli must be >= 2, got {ms[0]}")
        object.__setattr__(self, "moduli", ms)

    def __setattr__(self, name, value):
        raise AttributeError("CoreFamilySpec is immutable")

    def __iter__(self) -> Iterator[int]:
        return iter(self.moduli)

    def __eq__(self, other) -> bool:
        return isinstance(other, CoreFamilySpec) and self.moduli == other.moduli

    def __hash__(self) -> int:
        return hash(self.moduli)

    def __repr__(self) -> str:
        return f"CoreFamilySpec({list(self.moduli)})"

    @property
    def gcd(self) -> int:
        return math.gcd(*self.moduli) if len(self.moduli) > 1 else self.moduli[0]


def _as_spec(spec) -> CoreFamilySpec:
    return spec if isinstance(spec, CoreFamilySpec) else CoreFamilySpec(spec)


def is_t_core(lam: Partition, t: int) -> bool:
    """True iff no cell of ``lam`` has hook length t.

    Uses the bead criterion: every first-column hook >= t must have its
    mate t lower also present.
    """
    if t < 2:
        raise ValueError(f"modulus must be >= 2, got {t}")
    beta = lam.first_column_hooks()
    return all(b < t or b - t in beta for b in beta)


def is_simultaneous_core(lam: Partition, spec) -> bool:
    return all(is_t_core(lam, t) for t in _as_spec(spec))


def has_finitely_many(spec) -> bool:
    """Finiteness criterion: the family is finite iff gcd(moduli) = 1."""
    return _as_spec(spec).gcd == 1


def infinite_witness(spec, n: int) -> Partition:
    """The n-th member of an explicit infinite family when gcd(moduli) = d > 1.

    Returns the staircase ((d-1)n, (d-1)(n-1), ..., (d-1)); its beads
    {jd - 1} sit on a single runner of the d-abacus, so it is an m-core for
    every m divisible by d.  Sizes grow strictly with n.
    """
    d = _as_spec(spec).gcd
    if d == 1:
        raise ValueError("family has gcd 1; no infinite witness exists")
    if n < 1:
        raise ValueError(f"witness index must be >= 1, got {n}")
    return Partition((d - 1) * j for j in range(n, 0, -1))


def count_st_cores(s: int, t: int) -> int:
    """Number of simultaneous (s,t)-cores for coprime s, t: C(s+t, s)/(s+t)."""
    _check_coprime_pair(s, t)
    return math.comb(s + t, s) // (s + t)


def maximal_core_size(s: int, t: int) -> int:
    """Size of the largest (s,t)-core: (s^2-1)(t^2-1)/24."""
    _check_coprime_pair(s, t)
    return (s * s - 1) * (t * t - 1) // 24


def semigroup_gaps(s: int, t: int) -> tuple[int, ...]:
    """Positive integers not expressible as a*s + b*t with a, b >= 0, ascending."""
    _check_coprime_pair(s, t)
    frob = s * t - s - t
    reachable = np.zeros(frob + 1, dtype=bool)
    reachable[0] = True
    for i in range(frob + 1):
        if reachable[i]:
            if i + s <= frob:
                reachable[i + s] = True
            if i + t <= frob:
                reachable[i + t] = True
    return tuple(int(i) for i in np.nonzero(~reachable)[0] if i > 0)


def maximal_core(s: int, t: int) -> Partition:
    """The unique largest (s,t)-core: its beads are the gaps of the semigroup <s, t>."""
    return partition_from_beta(semigroup_gaps(s, t))


def _check_coprime_pair(s: int, t: int) -> None:
    if s < 2 or t < 2:
        raise ValueError(f"moduli must be >= 2, got ({s}, {t})")
    if math.gcd(s, t) != 1:
        raise ValueError(f"moduli must be coprime, got gcd({s}, {t}) = {math.gcd(s, t)}")


def enumeration_bound(spec) -> int:
    """Size bound for the sweep: min over coprime pairs of maximal_core_size."""
    spec = _as_spec(spec)
    if not has_finitely_many(spec):
        raise InfiniteFamilyError(spec.gcd)
    pairs = [
        (a, b)
        for i, a in enumerate(spec.moduli)
        for b in spec.moduli[i + 1 :]
        if math.gcd(a, b) == 1
    ]
    if not pairs:
        raise ValueError(
            "moduli have gcd 1 but no coprime pair; no size bound is available"
        )
    return min(maximal_core_size(a, b) for a, b in pairs)


def _bound_ceiling() -> int:
    raw = os.environ.get(ENUM_BOUND_ENV, "").strip()
    return int(raw) if raw else DEFAULT_ENUM_BOUND


def kernel_inputs(spec, bound: int) -> tuple:
    """(s, bound, cmax, deltas, caps) arguments for the charge-sweep kernels.

    ``deltas``/``caps`` encode, per extra modulus t and runner g of the
    s-abacus, the inequality charge[g] <= charge[delta] + cap that expresses
    being a t-core.
    """
    spec = _as_spec(spec)
    s = spec.moduli[0]
    others = spec.moduli[1:]
    deltas = np.empty((len(others), s), np.int64)
    caps = np.empty((len(others), s), np.int64)
    for m, t in enumerate(others):
        for g in range(s):
            delta = (g - t) % s
            deltas[m, g] = delta
            caps[m, g] = (t - g + delta) // s
    cmax = math.isqrt((2 * bound + s**3) // s) + 3
    return s, bound, cmax, deltas, caps


def enumerate_cores(spec, max_bound: int | None = None) -> list[Partition]:
    """Every simultaneous core for ``spec``, sorted by size then lexicographically.

    The sweep walks all s-cores of size <= bound (s the smallest modulus) in
    charge coordinates and filters by the remaining moduli; the bound comes
    from ``enumeration_bound``.  Raises ``InfiniteFamilyError`` when
    gcd(moduli) > 1 and ``EnumerationBoundError`` when the bound exceeds the
    ceiling (``COREKIT_MAX_ENUM_BOUND``, default 250).
    """
    spec = _as_spec(spec)
    bound = enumeration_bound(spec)
    ceiling = max_bound if max_bound is not None else _bound_ceiling()
    if bound > ceiling:
        raise EnumerationBoundError(
            f"size bound {bound} exceeds the ceiling {ceiling}; "
            f"raise {ENUM_BOUND_ENV} to allow this sweep"
        )
    s = spec.moduli[0]
    rows = kernels().charge_vectors(*kernel_inputs(spec, bound))
    cores = [_partition_from_charges(row, s) for row in rows]
    cores.sort(key=lambda p: (p.size, p.parts))
    return cores


def _partition_from_charges(charges, s: int) -> Partition:
    shift = max(0, -int(min(charges)))
    beta = [g + j * s for g in range(s) for j in range(int(charges[g]) + shift)]
    return partition_from_beta(beta)


def enumeration_report(spec) -> dict:
    """JSON-ready summary: moduli, count, max size, and the sorted core list."""
    spec = _as_spec(spec)
    cores = enumerate_cores(spec)
    return {
        "moduli": list(spec.moduli),
        "count": len(cores),
        "max_size": max((c.size for c in cores), default=0),
        "cores": [c.to_json() for c in cores],
    }


def partitions_of_size(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n as descending tuples (reference generator)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of_size(n - first, first):
            yield (first,) + rest


def brute_force_cores(spec, bound: int) -> list[Partition]:
    """Generate-and-filter reference sweep: every partition of every n <= bound.

    Exponentially slower than ``enumerate_cores``; kept as the independent
    oracle for small bounds.
    """
    spec = _as_spec(spec)
    out = [
        Partition(parts)
        for n in range(bound + 1)
        for parts in partitions_of_size(n)
        if is_simultaneous_core(Partition(parts), spec)
    ]
    out.sort(key=lambda p: (p.size, p.parts))
    return out
