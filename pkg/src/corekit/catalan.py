"""The two core families indexed by k: the odd pair (2k-1, 2k+1) and the
consecutive triple (2k-1, 2k, 2k+1), with their closed forms and the 4x size
identity between them."""

from __future__ import annotations

from dataclasses import dataclass

from .abacus import TAbacus, reconstruct
from .partitions import Partition


def triangular(j: int) -> int:
    """j-th triangular number j(j+1)/2."""
    if j < 0:
        raise ValueError(f"index must be >= 0, got {j}")
    return j * (j + 1) // 2


def staircase(j: int) -> Partition:
    """The staircase (j, j-1, ..., 1); staircase(0) is empty.  These are exactly the 2-cores."""
    if j < 0:
        raise ValueError(f"index must be >= 0, got {j}")
    return Partition(range(j, 0, -1))


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def kappa_pair_size(k: int) -> int:
    """4k^2(k+1)(k-1)/6, the size of the maximal (2k-1, 2k+1)-core."""
    _check_k(k)
    return 4 * k * k * (k + 1) * (k - 1) // 6


def kappa_triple_size(k: int) -> int:
    """k^2(k+1)(k-1)/6, the size of a maximal (2k-1, 2k, 2k+1)-core."""
    _check_k(k)
    return k * k * (k + 1) * (k - 1) // 6


def kappa_triple(k: int) -> Partition:
    """The maximal (2k-1, 2k, 2k+1)-core with the larger number of parts.

    Square parts: (k-m)^2 with multiplicity 2m for m = 1..k-1, e.g. k=4 gives
    (9^2, 4^4, 1^6).  k=1 gives the empty partition.
    """
    _check_k(k)
    parts = []
    for m in range(1, k):
        parts.extend([(k - m) ** 2] * (2 * m))
    return Partition(parts)


def kappa_triple_abacus(k: int) -> TAbacus:
    """2k-runner abacus of kappa_triple(k): row j holds beads at columns
    j+1 .. 2k-j-2, for j = 0..k-2 (empty for k=1)."""
    _check_k(k)
    t = 2 * k
    beads = [t * j + col for j in range(k - 1) for col in range(j + 1, t - j - 1)]
    return TAbacus(t, beads)


def append_step(prev: TAbacus) -> TAbacus:
    """Grow the triple-core abacus one level: two flanking spacer columns, a
    fresh bottom row of beads at columns 1..2k-2, and renumbering.

    ``prev`` must equal kappa_triple_abacus(k-1); the result equals
    kappa_triple_abacus(k).
    """
    if prev.t % 2 != 0 or prev.t < 4:
        raise ValueError(f"expected an abacus on an even number >= 4 of runners, got t={prev.t}")
    k = prev.t // 2 + 1
    if prev != kappa_triple_abacus(k - 1):
        raise ValueError("abacus does not have the triple-core layout")
    t_new = prev.t + 2
    # old bead (row j, runner r) lands at (row j+1, runner r+1)
    beads = [(p // prev.t + 1) * t_new + (p % prev.t + 1) for p in prev.beads]
    beads.extend(range(1, t_new - 1))
    return TAbacus(t_new, beads)


def pair_quotient(k: int) -> tuple[Partition, ...]:
    """The palindromic staircase sequence (tau_{k-1}, ..., tau_0, tau_0, ..., tau_{k-1})."""
    _check_k(k)
    left = [staircase(j) for j in range(k - 1, -1, -1)]
    return tuple(left + left[::-1])


def kappa_pair(k: int) -> Partition:
    """The maximal (2k-1, 2k+1)-core, built from its empty 2k-core and
    palindromic staircase 2k-quotient."""
    _check_k(k)
    return reconstruct(Partition(()), pair_quotient(k), 2 * k)


def factor_four_check(k: int) -> bool:
    """Verify |kappa_pair(k)| = 4 |kappa_triple(k)| from the constructed
    partitions, and that both sizes match their closed forms."""
    _check_k(k)
    pair_size = kappa_pair(k).size
    triple_size = kappa_triple(k).size
    return (
        pair_size == 4 * triple_size
        and pair_size == kappa_pair_size(k)
        and triple_size == kappa_triple_size(k)
    )


@dataclass(frozen=True)
class CatalanCorePair:
    """The k-indexed bundle: both maximal cores and the triple's abacus."""

    k: int
    kappa_pair: Partition
    kappa_triple: Partition
    abacus_triple: TAbacus

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "kappa_pair": self.kappa_pair.to_json(),
            "kappa_triple": self.kappa_triple.to_json(),
            "abacus_triple": self.abacus_triple.to_json(),
        }


def catalan_core_pair(k: int) -> CatalanCorePair:
    _check_k(k)
    return CatalanCorePair(k, kappa_pair(k), kappa_triple(k), kappa_triple_abacus(k))
