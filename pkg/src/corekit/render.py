"""ASCII rendering of Young diagrams, labeled dissections, and abaci."""

from __future__ import annotations

from dataclasses import dataclass, field

from .abacus import TAbacus
from .bijection import PART1, PART2, PART3
from .partitions import Partition

DEFAULT_GLYPHS = {PART1: "o", PART2: ".", PART3: "*"}


@dataclass(frozen=True)
class RenderConfig:
    """Glyph and sizing choices for the text renderers."""

    glyphs: dict = field(default_factory=lambda: dict(DEFAULT_GLYPHS))
    cell_width: int = 2
    output: str = "ascii"

    def __post_init__(self):
        if len(set(self.glyphs.values())) != len(self.glyphs):
            raise ValueError("region glyphs must be distinct")
        if self.cell_width < 1:
            raise ValueError("cell width must be >= 1")
        if self.output not in ("ascii", "json"):
            raise ValueError(f"unknown output format {self.output!r}")


def young_lines(lam: Partition, cell: str = "[]") -> list[str]:
    """One line per row, each cell drawn as ``cell`` (empty partition: no lines)."""
    return [cell * p for p in lam.parts]


def labeled_lines(lam: Partition, labels, glyphs=None) -> list[str]:
    """The diagram with one glyph per cell, chosen by the row's region label."""
    glyphs = DEFAULT_GLYPHS if glyphs is None else glyphs
    if len(labels) != len(lam.parts):
        raise ValueError("one label per row is required")
    return [glyphs[tag] * p for p, tag in zip(lam.parts, labels)]


def abacus_lines(ab: TAbacus) -> list[str]:
    """The runner grid, highest row first; beads are bracketed position numbers.

    Columns align on the widest token they contain; cells are right-justified
    and joined by single spaces.
    """
    rows = ab.rows
    grid = []
    for row in range(rows - 1, -1, -1):
        line = []
        for runner in range(ab.t):
            p = row * ab.t + runner
            line.append(f"[{p}]" if p in ab.beads else str(p))
        grid.append(line)
    widths = [max(len(grid[r][c]) for r in range(rows)) for c in range(ab.t)]
    return [" ".join(tok.rjust(w) for tok, w in zip(line, widths)) for line in grid]
