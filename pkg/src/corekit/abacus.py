"""Bead-set (abacus) machinery: cores, quotients, reconstruction, rim hooks.

A partition is encoded on the abacus by placing a bead at every first-column
hook length.  Folding positions into t runners (position p sits on runner
p mod t, row p div t) turns t-hook removal into sliding a bead down one row,
which is what everything here is built on.

Core and quotient extraction normalize the bead count to a multiple of t
(prepending beads at 0..K-1 and shifting, which leaves the partition
unchanged).  Under a fixed bead count mod t the pair (core, quotient)
determines the partition, so ``reconstruct`` is an exact inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import Cell, Partition


def partition_from_beta(beads: Iterable[int]) -> Partition:
    """Partition whose bead set is ``beads``: bead b with i beads below gives part b - i."""
    bs = sorted(beads, reverse=True)
    r = len(bs)
    if len(set(bs)) != r:
        raise ValueError("bead positions must be distinct")
    if bs and bs[-1] < 0:
        raise ValueError("bead positions must be nonnegative")
    return Partition(b - (r - 1 - i) for i, b in enumerate(bs))


def beta_with_length(lam: Partition, length: int) -> list[int]:
    """Bead positions of ``lam`` computed with exactly ``length`` beads, ascending.

    length >= len(lam); the extra beads pack into positions 0..K-1 and shift
    the rest up by K, which does not change the partition.
    """
    r = len(lam)
    if length < r:
        raise ValueError(f"need at least {r} beads, got {length}")
    parts = list(lam.parts) + [0] * (length - r)
    return sorted(parts[i] + length - 1 - i for i in range(length))


class BetaSet:
    """A finite set of distinct nonnegative bead positions."""

    __slots__ = ("beads",)

    def __init__(self, beads: Iterable[int]):
        bs = frozenset(int(b) for b in beads)
        if any(b < 0 for b in bs):
            raise ValueError("bead positions must be nonnegative")
        object.__setattr__(self, "beads", bs)

    def __setattr__(self, name, value):
        raise AttributeError("BetaSet is immutable")

    @classmethod
    def from_partition(cls, lam: Partition) -> "BetaSet":
        return cls(lam.first_column_hooks())

    def to_partition(self) -> Partition:
        return partition_from_beta(self.beads)

    def sorted(self) -> list[int]:
        return sorted(self.beads)

    def __eq__(self, other) -> bool:
        return isinstance(other, BetaSet) and self.beads == other.beads

    def __hash__(self) -> int:
        return hash(self.beads)

    def __len__(self) -> int:
        return len(self.beads)

    def __contains__(self, p: int) -> bool:
        return p in self.beads

    def __repr__(self) -> str:
        return f"BetaSet({self.sorted()})"


def _check_t(t: int) -> None:
    if t < 2:
        raise ValueError(f"number of runners must be >= 2, got {t}")


class TAbacus:
    """Bead positions viewed on t runners: position p -> (runner p mod t, row p div t)."""

    __slots__ = ("t", "beads")

    def __init__(self, t: int, beads: Iterable[int]):
        _check_t(t)
        bs = frozenset(int(b) for b in beads)
        if any(b < 0 for b in bs):
            raise ValueError("bead positions must be nonnegative")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "beads", bs)

    def __setattr__(self, name, value):
        raise AttributeError("TAbacus is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, TAbacus) and self.t == other.t and self.beads == other.beads

    def __hash__(self) -> int:
        return hash((self.t, self.beads))

    def __repr__(self) -> str:
        return f"TAbacus(t={self.t}, beads={sorted(self.beads)})"

    @property
    def rows(self) -> int:
        """Number of rows needed to show every bead (at least 1)."""
        return max((p // self.t for p in self.beads), default=0) + 1

    def runner_rows(self, runner: int) -> tuple[int, ...]:
        """Ascending row indices of the beads on one runner."""
        if not 0 <= runner < self.t:
            raise ValueError(f"runner {runner} out of range [0, {self.t})")
        return tuple(sorted(p // self.t for p in self.beads if p % self.t == runner))

    def partition(self) -> Partition:
        return partition_from_beta(self.beads)

    def to_json(self) -> dict:
        return {"t": self.t, "beads": sorted(self.beads)}


def to_t_abacus(lam: Partition, t: int) -> TAbacus:
    """The t-runner view of the first-column hook lengths of ``lam``."""
    _check_t(t)
    return TAbacus(t, lam.first_column_hooks())


def t_core(lam: Partition, t: int) -> Partition:
    """Push every bead as far down its runner as it can go and read the partition back."""
    _check_t(t)
    counts = [0] * t
    for p in lam.first_column_hooks():
        counts[p % t] += 1
    pushed = [g + j * t for g in range(t) for j in range(counts[g])]
    return partition_from_beta(pushed)


def t_quotient(lam: Partition, t: int) -> tuple[Partition, ...]:
    """One partition per runner, each runner read as its own abacus.

    The bead count is normalized to a multiple of t first, so the result is
    the exact inverse data for ``reconstruct``.
    """
    _check_t(t)
    length = -(-len(lam) // t) * t
    beta = beta_with_length(lam, length)
    rows = [[] for _ in range(t)]
    for p in beta:
        rows[p % t].append(p // t)
    return tuple(partition_from_beta(r) for r in rows)


def reconstruct(core: Partition, quotient: Sequence[Partition], t: int) -> Partition:
    """Inverse of (t_core, t_quotient): place each quotient back on its runner.

    ``core`` must itself be a t-core and ``quotient`` must have exactly t
    entries.
    """
    _check_t(t)
    if len(quotient) != t:
        raise ValueError(f"quotient must have exactly {t} entries, got {len(quotient)}")
    core_beta = core.first_column_hooks()
    if any(b >= t and b - t not in core_beta for b in core_beta):
        raise ValueError("core argument is not a t-core")
    n_rows = -(-len(core) // t) + max((len(q) for q in quotient), default=0) + 1
    beta = beta_with_length(core, n_rows * t)
    counts = [0] * t
    for p in beta:
        counts[p % t] += 1
    out = []
    for g in range(t):
        n = counts[g]
        row_beta = beta_with_length(quotient[g], n)
        out.extend(g + j * t for j in row_beta)
    return partition_from_beta(out)


@dataclass(frozen=True)
class QuotientDecomposition:
    """A t-core together with the t partitions read from the runners."""

    core: Partition
    quotient: tuple[Partition, ...]
    t: int

    def combined_size(self) -> int:
        """size(core) + t * total quotient size; equals the size of the source partition."""
        return self.core.size + self.t * sum(q.size for q in self.quotient)


def decompose(lam: Partition, t: int) -> QuotientDecomposition:
    return QuotientDecomposition(t_core(lam, t), t_quotient(lam, t), t)


def remove_one_hook(lam: Partition, cell) -> Partition:
    """Strip the rim hook of ``cell`` from the diagram.

    Works directly on the rows (no abacus), so it can serve as an independent
    check of the bead moves: rows above the cell keep their length, rows from
    the cell down to the last row reaching its column shift up by one with one
    box lost, and the last of them is cut at the cell's column.
    """
    i, j = cell
    if not lam.has_cell(cell):
        raise ValueError(f"cell {(i, j)} lies outside the diagram")
    last = i
    for u in range(i + 1, len(lam)):
        if lam.parts[u] > j:
            last = u
        else:
            break
    parts = list(lam.parts)
    for u in range(i, last):
        parts[u] = lam.parts[u + 1] - 1
    parts[last] = j
    return Partition(parts)
