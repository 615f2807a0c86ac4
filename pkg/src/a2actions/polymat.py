"""Matrices with boolean-polynomial entries, plus their GF(2) evaluations.

The action of an operation on a graded module is stored one degree at a
time as a matrix whose rows index the source basis and whose columns index
the target basis.  Composition therefore reads left to right: ``M * N``
applies ``M`` first.  Entries live in a shared :class:`~a2actions.poly.Poly`
ring so that unknown actions can be written with indeterminate entries and
specialised later.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence

from .poly import Poly, SubstMap, VarTable

__all__ = ["PolyMatrix", "BitMatrix", "assemble_block"]


class PolyMatrix:
    """An ``nrows`` by ``ncols`` matrix over a boolean polynomial ring."""

    __slots__ = ("table", "nrows", "ncols", "rows")

    def __init__(self, table: VarTable, rows: Iterable[Iterable[Poly]]):
        self.table = table
        grid = tuple(tuple(row) for row in rows)
        widths = {len(row) for row in grid}
        if len(widths) > 1:
            raise ValueError(f"ragged rows: widths {sorted(widths)}")
        for row in grid:
            for entry in row:
                if entry.table is not table:
                    raise ValueError("entry from a different variable table")
        self.rows = grid
        self.nrows = len(grid)
        self.ncols = widths.pop() if widths else 0

    @classmethod
    def zero(cls, table: VarTable, nrows: int, ncols: int) -> "PolyMatrix":
        z = table.zero()
        return cls(table, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, table: VarTable, n: int) -> "PolyMatrix":
        z, one = table.zero(), table.one()
        return cls(table, [[one if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_names(
        cls, table: VarTable, names: Iterable[str], nrows: int, ncols: int
    ) -> "PolyMatrix":
        """Fill a matrix row-major with single-variable entries."""
        it = iter(names)
        rows = []
        for _ in range(nrows):
            rows.append([table.poly(next(it)) for _ in range(ncols)])
        return cls(table, rows)

    def __getitem__(self, key: tuple[int, int]) -> Poly:
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.table is other.table and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __bool__(self) -> bool:
        return any(any(e for e in row) for row in self.rows)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError(
                f"shape mismatch: {self.nrows}x{self.ncols} + {other.nrows}x{other.ncols}"
            )
        return PolyMatrix(
            self.table,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        """Composite ``self`` then ``other`` (rows are sources)."""
        if self.ncols != other.nrows:
            raise ValueError(
                f"shape mismatch: {self.nrows}x{self.ncols} * {other.nrows}x{other.ncols}"
            )
        z = self.table.zero()
        out = []
        for row in self.rows:
            new_row = []
            for j in range(other.ncols):
                acc = z
                for k, entry in enumerate(row):
                    if entry:
                        acc = acc + entry * other.rows[k][j]
                new_row.append(acc)
            out.append(new_row)
        return PolyMatrix(self.table, out)

    def compose(self, other: "PolyMatrix") -> "PolyMatrix":
        return self * other

    def map_entries(self, fn: Callable[[Poly], Poly]) -> "PolyMatrix":
        return PolyMatrix(self.table, [[fn(e) for e in row] for row in self.rows])

    def substitute(self, m: SubstMap) -> "PolyMatrix":
        return self.map_entries(m.apply)

    def entries(self) -> Iterable[Poly]:
        for row in self.rows:
            yield from row

    def variables(self) -> set[int]:
        out: set[int] = set()
        for e in self.entries():
            out |= e.variables()
        return out

    def evaluate(self, point: Sequence[int]) -> "BitMatrix":
        """Specialise every entry at ``point`` and pack rows into bitmasks."""
        bits = []
        for row in self.rows:
            mask = 0
            for j, e in enumerate(row):
                if e.evaluate(point):
                    mask |= 1 << j
            bits.append(mask)
        return BitMatrix(self.nrows, self.ncols, bits)

    def pretty(self) -> str:
        """Rows in brackets, one per line, columns right-justified."""
        text = [[str(e) for e in row] for row in self.rows]
        if not text:
            return "[]"
        widths = [max(len(text[i][j]) for i in range(self.nrows)) for j in range(self.ncols)]
        lines = []
        for row in text:
            cells = "  ".join(cell.rjust(w) for cell, w in zip(row, widths))
            lines.append(f"[{cells}]")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"PolyMatrix({self.nrows}x{self.ncols})"


def assemble_block(
    table: VarTable, grid: Sequence[Sequence[PolyMatrix | None]]
) -> PolyMatrix:
    """Assemble a block matrix; ``None`` marks an all-zero block.

    Block heights are read off each grid row and widths off each grid
    column, so every ``None`` must sit in a row and column that also hold
    at least one real block.
    """
    nbr = len(grid)
    nbc = len(grid[0]) if nbr else 0
    if any(len(r) != nbc for r in grid):
        raise ValueError("ragged block grid")
    heights: list[int | None] = [None] * nbr
    widths: list[int | None] = [None] * nbc
    for i, row in enumerate(grid):
        for j, blk in enumerate(row):
            if blk is None:
                continue
            for store, idx, val in ((heights, i, blk.nrows), (widths, j, blk.ncols)):
                if store[idx] is None:
                    store[idx] = val
                elif store[idx] != val:
                    raise ValueError(f"inconsistent block sizes at ({i}, {j})")
    if any(h is None for h in heights) or any(w is None for w in widths):
        raise ValueError("a block row or column holds only zero blocks")
    z = table.zero()
    out: list[list[Poly]] = []
    for i, row in enumerate(grid):
        block_rows: list[list[Poly]] = [[] for _ in range(heights[i])]  # type: ignore[arg-type]
        for j, blk in enumerate(row):
            if blk is None:
                for br in block_rows:
                    br.extend([z] * widths[j])  # type: ignore[operator]
            else:
                for br, src in zip(block_rows, blk.rows):
                    br.extend(src)
        out.extend(block_rows)
    return PolyMatrix(table, out)


class BitMatrix:
    """A GF(2) matrix with each row packed into one integer bitmask."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int]):
        if len(rows) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(rows)}")
        mask = (1 << ncols) - 1
        if any(r & ~mask for r in rows):
            raise ValueError("row has bits outside the column range")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = list(rows)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols, [0] * nrows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    def __bool__(self) -> bool:
        return any(self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.rows) == (
            other.nrows,
            other.ncols,
            other.rows,
        )

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, tuple(self.rows)))

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in sum")
        return BitMatrix(
            self.nrows, self.ncols, [a ^ b for a, b in zip(self.rows, other.rows)]
        )

    def __mul__(self, other: "BitMatrix") -> "BitMatrix":
        """Composite ``self`` then ``other``, same convention as PolyMatrix."""
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        out = []
        for row in self.rows:
            acc = 0
            r = row
            while r:
                k = (r & -r).bit_length() - 1
                acc ^= other.rows[k]
                r &= r - 1
            out.append(acc)
        return BitMatrix(self.nrows, other.ncols, out)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.rows[i] >> j & 1

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"
