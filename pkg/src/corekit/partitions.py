"""Integer partitions and their Young-diagram geometry."""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple


class Cell(NamedTuple):
    """A box of a Young diagram: 0-indexed, rows top-down, columns left-right."""

    row: int
    col: int


class Partition:
    """A weakly decreasing sequence of positive integer parts.

    ``Partition(())`` is the empty partition.  Trailing zeros are stripped at
    construction; interior zeros, negative parts, or an increasing step raise
    ``ValueError``.  Instances are immutable and hashable.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        for i, p in enumerate(ps):
            if p < 1:
                raise ValueError(f"part {p} at index {i} is not positive")
            if i > 0 and ps[i - 1] < p:
                raise ValueError(f"parts increase at index {i}: {ps[i - 1]} < {p}")
        object.__setattr__(self, "parts", ps)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    @property
    def size(self) -> int:
        """Sum of the parts (0 for the empty partition)."""
        return sum(self.parts)

    def has_cell(self, cell) -> bool:
        i, j = cell
        return 0 <= i < len(self.parts) and 0 <= j < self.parts[i]

    def cells(self) -> Iterator[Cell]:
        """All cells of the Young diagram in row-major order."""
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield Cell(i, j)

    def conjugate(self) -> "Partition":
        """Transpose of the diagram: part j of the result counts rows longer than j."""
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """True iff the diagram of ``other`` fits inside the diagram of ``self``."""
        if len(other.parts) > len(self.parts):
            return False
        return all(o <= s for s, o in zip(self.parts, other.parts))

    def hook_length(self, cell) -> int:
        """Arm + leg + 1 for a cell of the diagram."""
        i, j = cell
        if not self.has_cell(cell):
            raise ValueError(f"cell {(i, j)} lies outside the diagram")
        arm = self.parts[i] - j - 1
        leg = sum(1 for p in self.parts[i + 1 :] if p > j)
        return arm + leg + 1

    def hook_lengths(self) -> list[list[int]]:
        """Grid of hook lengths, one list per row."""
        conj = self.conjugate().parts
        return [
            [(p - j) + (conj[j] - i) - 1 for j in range(p)]
            for i, p in enumerate(self.parts)
        ]

    def first_column_hooks(self) -> frozenset[int]:
        """Hook lengths of the leftmost column: {part_i + r - i} for r parts."""
        r = len(self.parts)
        return frozenset(p + r - 1 - i for i, p in enumerate(self.parts))

    def to_json(self) -> list[int]:
        return list(self.parts)


class ExponentialParseError(ValueError):
    """Malformed exponential-notation input; ``position`` is the 0-based index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def format_exponential(lam: Partition) -> str:
    """Render a partition like ``(9^2,4^4,1^6)``; equal runs collapse, ``^1`` is omitted."""
    pieces = []
    i = 0
    parts = lam.parts
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        run = j - i
        pieces.append(str(parts[i]) if run == 1 else f"{parts[i]}^{run}")
        i = j
    return "(" + ",".join(pieces) + ")"


def parse_exponential(text: str) -> Partition:
    """Parse exponential notation such as ``(8,6,5^2,3,2^3,1)`` back to a partition.

    Bases must be positive and weakly decreasing, exponents >= 1.  Errors carry
    the offending position.
    """
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_int(what: str) -> int:
        nonlocal pos
        skip_ws()
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ExponentialParseError(f"expected {what}", start)
        return int(text[start:pos])

    skip_ws()
    if pos >= n or text[pos] != "(":
        raise ExponentialParseError("expected '('", pos)
    pos += 1
    skip_ws()
    parts: list[int] = []
    if pos < n and text[pos] == ")":
        pos += 1
    else:
        while True:
            base_at = pos
            base = read_int("a part")
            if base < 1:
                raise ExponentialParseError("parts must be positive", base_at)
            exp = 1
            skip_ws()
            if pos < n and text[pos] == "^":
                pos += 1
                exp_at = pos
                exp = read_int("an exponent")
                if exp < 1:
                    raise ExponentialParseError("exponent must be >= 1", exp_at)
            if parts and parts[-1] < base:
                raise ExponentialParseError("parts must be weakly decreasing", base_at)
            parts.extend([base] * exp)
            skip_ws()
            if pos < n and text[pos] == ",":
                pos += 1
                continue
            if pos < n and text[pos] == ")":
                pos += 1
                break
            raise ExponentialParseError("expected ',' or ')'", pos)
    skip_ws()
    if pos != n:
        raise ExponentialParseError("trailing characters", pos)
    return Partition(parts)
