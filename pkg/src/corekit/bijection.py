"""Cell-level dissection: k copies of the half-quotient staircases mapped
one-to-one onto the cells of the maximal consecutive-triple core.

The map is assembled from three regions of the target diagram.  Region P2
absorbs one full set of staircases through square-into-two-staircases splits;
region P1 absorbs the k-1 large staircase copies, one via the biggest square
and the rest by repacking three copies of each smaller staircase into equal
blocks; region P3 is the image of the same construction one level down,
embedded row by row.  Every choice below is deterministic so traces are
stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .catalan import kappa_triple, staircase, triangular
from .partitions import Cell, Partition

PART1 = "P1"
PART2 = "P2"
PART3 = "P3"
REGIONS = (PART1, PART2, PART3)


class InternalInconsistencyError(RuntimeError):
    """The region bookkeeping broke an invariant (an implementation bug)."""


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


@dataclass(frozen=True)
class QuotientHalf:
    """The descending staircases (tau_{k-1}, ..., tau_1, tau_0)."""

    k: int
    partitions: tuple[Partition, ...]

    @property
    def total_size(self) -> int:
        return sum(p.size for p in self.partitions)


def q_half(k: int) -> QuotientHalf:
    _check_k(k)
    return QuotientHalf(k, tuple(staircase(j) for j in range(k - 1, -1, -1)))


@dataclass(frozen=True)
class PartsSplit:
    """Multisets (descending tuples) of the staircase sizes in each region."""

    k: int
    part1: tuple[int, ...]
    part2: tuple[int, ...]
    part3: tuple[int, ...]


def split_parts(k: int) -> PartsSplit:
    """Split the part sizes of k half-quotient copies three ways:
    k-1 copies of the largest triangular size, one copy of every size, and
    k-1 copies of each smaller size."""
    _check_k(k)
    top = triangular(k - 1)
    part1 = (top,) * (k - 1)
    part2 = tuple(triangular(j) for j in range(k - 1, 0, -1))
    part3 = tuple(
        triangular(j) for j in range(k - 2, 0, -1) for _ in range(k - 1)
    )
    return PartsSplit(k, part1, part2, part3)


@dataclass(frozen=True)
class RegionLabeling:
    """One region tag per row of kappa_triple(k)."""

    k: int
    labels: tuple[str, ...]

    def rows_tagged(self, region: str) -> tuple[int, ...]:
        return tuple(i for i, tag in enumerate(self.labels) if tag == region)


def label_rows(k: int) -> RegionLabeling:
    """Tag each row of kappa_triple(k).

    Within the 2m rows of square size (k-m)^2: one P2 row then one P1 row when
    m is odd, two P1 rows when m is even, and the remaining 2m-2 rows are P3.
    The P3 rows then always form exactly kappa_triple(k-1).
    """
    _check_k(k)
    labels: list[str] = []
    for m in range(1, k):
        head = [PART2, PART1] if m % 2 == 1 else [PART1, PART1]
        labels.extend(head + [PART3] * (2 * m - 2))
    lam = kappa_triple(k)
    p3_parts = tuple(lam.parts[i] for i, tag in enumerate(labels) if tag == PART3)
    expected = kappa_triple(k - 1).parts if k >= 2 else ()
    if p3_parts != expected:
        raise InternalInconsistencyError(
            f"P3 rows {p3_parts} do not form the k-1 diagram {expected}"
        )
    return RegionLabeling(k, tuple(labels))


def _staircase_indices(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row and column index arrays of the size-n staircase, row-major."""
    if n <= 0:
        empty = np.empty(0, np.int64)
        return empty, empty
    counts = np.arange(n, 0, -1)
    rows = np.repeat(np.arange(n), counts)
    starts = np.cumsum(counts) - counts
    cols = np.arange(counts.sum()) - np.repeat(starts, counts)
    return rows, cols


class SquareSplit(NamedTuple):
    """An m x m block cut along the antidiagonal into two staircases.

    ``upper`` holds the block cells (u, v) with u+v <= m-1, ``lower`` the
    rest.  Each is an (n, 4) int array whose rows are
    (block row, block col, staircase row, staircase col), running row-major
    over the size-m and size-(m-1) staircases respectively.
    """

    m: int
    upper: np.ndarray
    lower: np.ndarray


def square_split(m: int) -> SquareSplit:
    if m < 1:
        raise ValueError(f"square side must be >= 1, got {m}")
    i, j = _staircase_indices(m)
    upper = np.stack([i, j, i, j], axis=1)
    si, sj = _staircase_indices(m - 1)
    lower = np.stack([m - 1 - si, si + 1 + sj, si, sj], axis=1)
    return SquareSplit(m, upper, lower)


PieceKey = tuple[int, int]  # (staircase index, copy 0..2)


def pack_staircase_triples(k: int) -> tuple[tuple[tuple[PieceKey, Cell], ...], ...]:
    """Deal the cells of three copies of each staircase tau_1..tau_{k-2} into
    k-2 blocks of exactly T(k-1) cells.

    Pieces stream largest first (copies in order, cells row-major) into the
    open block; a piece may straddle a block boundary.  Total cell count makes
    the blocks come out exact.  Empty for k <= 2.
    """
    _check_k(k)
    capacity = triangular(k - 1)
    blocks: list[list[tuple[PieceKey, Cell]]] = []
    current: list[tuple[PieceKey, Cell]] = []
    for j in range(k - 2, 0, -1):
        for copy_idx in range(3):
            for cell in staircase(j).cells():
                current.append(((j, copy_idx), cell))
                if len(current) == capacity:
                    blocks.append(current)
                    current = []
    if current:
        raise InternalInconsistencyError("staircase cells did not fill the last block")
    if len(blocks) != max(0, k - 2):
        raise InternalInconsistencyError(
            f"expected {max(0, k - 2)} blocks, built {len(blocks)}"
        )
    return tuple(tuple(b) for b in blocks)


class SourceCell(NamedTuple):
    """A cell of one staircase in one of the k half-quotient copies.

    ``copy`` runs 1..k; ``slot`` 0..k-1 indexes the staircase tau_{k-1-slot}.
    """

    copy: int
    slot: int
    row: int
    col: int


class CellMapEntry(NamedTuple):
    src: SourceCell
    dst: Cell
    region: str


@dataclass(frozen=True)
class CellMap:
    """A total map from the cells of k half-quotient copies onto kappa_triple(k)."""

    k: int
    entries: tuple[CellMapEntry, ...]

    def sorted_entries(self) -> list[CellMapEntry]:
        return sorted(self.entries, key=lambda e: (e.dst.row, e.dst.col))

    def to_json(self) -> list[dict]:
        return [
            {
                "src": {"copy": e.src.copy, "slot": e.src.slot, "row": e.src.row, "col": e.src.col},
                "dst": {"row": e.dst.row, "col": e.dst.col},
                "region": e.region,
            }
            for e in self.sorted_entries()
        ]


def _source_cells(k: int) -> Iterator[SourceCell]:
    for copy in range(1, k + 1):
        for slot in range(k):
            for cell in staircase(k - 1 - slot).cells():
                yield SourceCell(copy, slot, cell.row, cell.col)


def build_bijection(k: int) -> CellMap:
    """Assemble the verified cell map for level k (recursively through k-1)."""
    _check_k(k)
    if k == 1:
        return CellMap(1, ())
    lam = kappa_triple(k)
    labeling = label_rows(k)
    p1_rows = labeling.rows_tagged(PART1)
    p2_rows = labeling.rows_tagged(PART2)
    p3_rows = labeling.rows_tagged(PART3)
    entries: list[CellMapEntry] = []

    # P2: the first copy's staircases, two per square row.
    for idx, row in enumerate(p2_rows):
        m = k - 1 - 2 * idx
        if lam.parts[row] != m * m:
            raise InternalInconsistencyError(f"P2 row {row} is not a {m}x{m} square")
        split = square_split(m)
        for u, v, i, j in split.upper.tolist():
            entries.append(CellMapEntry(SourceCell(1, k - 1 - m, i, j), Cell(row, u * m + v), PART2))
        for u, v, i, j in split.lower.tolist():
            entries.append(CellMapEntry(SourceCell(1, k - m, i, j), Cell(row, u * m + v), PART2))

    # P1: copy 2 takes the large half of the biggest square; the rest of the
    # P1 squares split into a pool of three copies of each smaller staircase.
    top_row = p1_rows[0]
    m = k - 1
    split = square_split(m)
    for u, v, i, j in split.upper.tolist():
        entries.append(CellMapEntry(SourceCell(2, 0, i, j), Cell(top_row, u * m + v), PART1))
    pool: list[tuple[int, list[Cell]]] = []
    if m - 1 >= 1:
        pool.append((m - 1, [Cell(top_row, u * m + v) for u, v, _, _ in split.lower.tolist()]))
    for row in p1_rows[1:]:
        side = math.isqrt(lam.parts[row])
        if side * side != lam.parts[row]:
            raise InternalInconsistencyError(f"P1 row {row} is not a square")
        split = square_split(side)
        pool.append((side, [Cell(row, u * side + v) for u, v, _, _ in split.upper.tolist()]))
        if side - 1 >= 1:
            pool.append((side - 1, [Cell(row, u * side + v) for u, v, _, _ in split.lower.tolist()]))
    pool.sort(key=lambda piece: -piece[0])
    shapes = [shape for shape, _ in pool]
    if shapes != [j for j in range(k - 2, 0, -1) for _ in range(3)]:
        raise InternalInconsistencyError(f"pool shapes {shapes} are not triples")
    cursors = {}
    seen: dict[int, int] = {}
    for shape, cells in pool:
        copy_idx = seen.get(shape, 0)
        seen[shape] = copy_idx + 1
        cursors[(shape, copy_idx)] = iter(cells)
    for b, block in enumerate(pack_staircase_triples(k)):
        source_cells = list(staircase(k - 1).cells())
        if len(block) != len(source_cells):
            raise InternalInconsistencyError("block size does not match the staircase")
        for (key, _stair_cell), src_cell in zip(block, source_cells):
            dst = next(cursors[key])
            entries.append(CellMapEntry(SourceCell(3 + b, 0, src_cell.row, src_cell.col), dst, PART1))

    # P3: the level-(k-1) map, shifted one copy and one slot, rows embedded in order.
    for e in build_bijection(k - 1).entries:
        src = SourceCell(e.src.copy + 1, e.src.slot + 1, e.src.row, e.src.col)
        entries.append(CellMapEntry(src, Cell(p3_rows[e.dst.row], e.dst.col), PART3))

    return CellMap(k, tuple(entries))


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of checking a cell map; failures are flags, not exceptions."""

    total: bool
    injective: bool
    surjective: bool
    region_consistent: bool
    entry_count: int
    region_counts: dict[str, int]

    @property
    def ok(self) -> bool:
        return self.total and self.injective and self.surjective and self.region_consistent


def verify_bijection(cmap: CellMap, k: int) -> BijectionReport:
    """Check totality, injectivity, surjectivity, and region consistency."""
    _check_k(k)
    expected_sources = set(_source_cells(k))
    sources = [e.src for e in cmap.entries]
    targets = [e.dst for e in cmap.entries]
    total = len(sources) == len(expected_sources) and set(sources) == expected_sources
    injective = len(set(targets)) == len(targets)
    surjective = set(targets) == set(kappa_triple(k).cells())
    labels = label_rows(k).labels
    region_consistent = all(
        0 <= e.dst.row < len(labels) and labels[e.dst.row] == e.region
        for e in cmap.entries
    )
    counts = {region: 0 for region in REGIONS}
    for e in cmap.entries:
        counts[e.region] = counts.get(e.region, 0) + 1
    return BijectionReport(
        total=total,
        injective=injective,
        surjective=surjective,
        region_consistent=region_consistent,
        entry_count=len(cmap.entries),
        region_counts=counts,
    )
