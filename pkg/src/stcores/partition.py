"""Partitions, Young diagrams, hooks, and rim-hook removal.

Everything in this module works directly on the diagram and never touches
the abacus machinery, so it can serve as an independent reference for the
beta-set code.  Cells are addressed 1-based as (row, column), rows growing
downward (English notation).
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import NonMonotoneError, OutOfDiagramError


class Partition:
    """A weakly decreasing tuple of positive integers.

    Conceptually the sequence continues with infinitely many zeros; only the
    positive prefix is stored.  Instances are immutable and hashable, and
    order lexicographically on their parts (useful for deterministic output).
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        for i, p in enumerate(ps):
            if p < 1:
                raise NonMonotoneError(f"part {i + 1} is {p}, expected a positive integer")
            if i and ps[i - 1] < p:
                raise NonMonotoneError(f"parts increase at index {i}: {ps[i - 1]} < {p}")
        self._parts = ps

    @classmethod
    def from_parts(cls, raw: Iterable[int]) -> "Partition":
        """Build from nonnegative integers, stripping trailing zeros."""
        return cls(raw)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __lt__(self, other: "Partition") -> bool:
        return self._parts < other._parts

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)!r})"

    def cells(self) -> Iterator[tuple[int, int]]:
        """All diagram cells (r, c), row-major, 1-based."""
        for r, p in enumerate(self._parts, start=1):
            for c in range(1, p + 1):
                yield r, c

    def contains(self, r: int, c: int) -> bool:
        return 1 <= r <= len(self._parts) and 1 <= c <= self._parts[r - 1]

    def conjugate(self) -> "Partition":
        """Reflect the diagram across the main diagonal."""
        if not self._parts:
            return Partition()
        cols = [0] * self._parts[0]
        for p in self._parts:
            for c in range(p):
                cols[c] += 1
        return Partition(cols)

    def column_height(self, c: int) -> int:
        """Number of rows reaching column c (= c-th conjugate part)."""
        return sum(1 for p in self._parts if p >= c)

    def hook_length(self, r: int, c: int) -> int:
        """1 + arm + leg of the cell (r, c)."""
        if not self.contains(r, c):
            raise OutOfDiagramError(f"cell ({r}, {c}) is outside {self!r}")
        return 1 + (self._parts[r - 1] - c) + (self.column_height(c) - r)

    def hook_lengths(self) -> list[int]:
        """All hook lengths, row-major.  The multiset is a conjugation invariant."""
        heights = [self.column_height(c + 1) for c in range(self._parts[0])] if self._parts else []
        out = []
        for r, p in enumerate(self._parts, start=1):
            for c in range(1, p + 1):
                out.append(1 + (p - c) + (heights[c - 1] - r))
        return out

    def remove_rim_hook(self, r: int, c: int) -> "Partition":
        """Remove the rim hook of (r, c): the border cells {(i, j) : i >= r,
        j >= c, (i+1, j+1) not in the diagram}.

        The result is again a partition and its size drops by the hook length
        of (r, c).
        """
        if not self.contains(r, c):
            raise OutOfDiagramError(f"cell ({r}, {c}) is outside {self!r}")
        last = self.column_height(c)  # deepest row meeting column c
        new = list(self._parts)
        for i in range(r, last):
            new[i - 1] = self._parts[i] - 1
        new[last - 1] = c - 1
        return Partition(new)

    def find_hook_cell(self, t: int) -> tuple[int, int] | None:
        """First cell (row-major) whose hook length is exactly t, if any."""
        heights = [self.column_height(c + 1) for c in range(self._parts[0])] if self._parts else []
        for r, p in enumerate(self._parts, start=1):
            for c in range(1, p + 1):
                if 1 + (p - c) + (heights[c - 1] - r) == t:
                    return r, c
        return None

    def t_core_by_diagram(self, t: int) -> "Partition":
        """t-core by repeated rim t-hook removal on the diagram.

        Scans row-major and removes the first t-hook found; the end result is
        independent of removal order.  Purely diagrammatic, for use as an
        oracle against the abacus path.
        """
        if t < 1:
            raise ValueError("t must be >= 1")
        if t == 1:
            return Partition()
        cur = self
        while True:
            cell = cur.find_hook_cell(t)
            if cell is None:
                return cur
            cur = cur.remove_rim_hook(*cell)

    def is_self_conjugate(self) -> bool:
        return self == self.conjugate()

    def to_json(self) -> list[int]:
        """JSON form: plain array of parts, ``[]`` for the empty partition."""
        return list(self._parts)

    def csv_cell(self) -> str:
        """CSV cell form: parts joined by ``+``, empty string when empty."""
        return "+".join(str(p) for p in self._parts)
