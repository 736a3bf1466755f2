"""Red/blue edge-coloured complete graphs, possibly partially coloured.

A colouring of K_n is stored as a string of length n(n-1)/2 over the
alphabet {R, B, .}, in upper-triangular row-major order: the edge {i, j}
with i < j sits at index i*(2n-i-1)//2 + (j-i-1).  '.' marks an edge whose
colour has not been assigned yet; such edges only occur while a new vertex
is being attached to a complete colouring.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

RED = "R"
BLUE = "B"
UNASSIGNED = "."

COLORS = (RED, BLUE)

Triangle = tuple[int, int, int]
Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed graph text."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


def edge_index(n: int, i: int, j: int) -> int:
    if i == j:
        raise ValueError(f"no loop edge ({i}, {j})")
    if i > j:
        i, j = j, i
    if i < 0 or j >= n:
        raise ValueError(f"vertex out of range for n={n}: ({i}, {j})")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def all_edges(n: int) -> list[Edge]:
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class ColoredGraph:
    """An immutable (partial) red/blue colouring of K_n."""

    n: int
    colors: str

    def __post_init__(self):
        m = self.n * (self.n - 1) // 2
        if len(self.colors) != m:
            raise ValueError(
                f"colour string has length {len(self.colors)}, expected {m} for n={self.n}"
            )
        bad = set(self.colors) - {RED, BLUE, UNASSIGNED}
        if bad:
            raise ValueError(f"invalid colour characters: {sorted(bad)}")

    # -- queries ----------------------------------------------------------

    def color_of(self, i: int, j: int) -> str:
        return self.colors[edge_index(self.n, i, j)]

    @property
    def is_complete(self) -> bool:
        return UNASSIGNED not in self.colors

    def edges_of_color(self, c: str) -> list[Edge]:
        return [e for e in combinations(range(self.n), 2) if self.colors[edge_index(self.n, *e)] == c]

    def unassigned_edges(self) -> list[Edge]:
        return self.edges_of_color(UNASSIGNED)

    def neighbor_masks(self, c: str) -> list[int]:
        """Bitmask of c-coloured neighbours for every vertex."""
        masks = [0] * self.n
        idx = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.colors[idx] == c:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
                idx += 1
        return masks

    def monochromatic_triangles(self, c: str) -> list[Triangle]:
        """All triangles whose three edges have colour c, sorted lexicographically."""
        if c not in COLORS:
            raise ValueError(f"colour must be one of {COLORS}, got {c!r}")
        masks = self.neighbor_masks(c)
        out: list[Triangle] = []
        idx = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.colors[idx] == c:
                    common = masks[i] & masks[j] & ~((1 << (j + 1)) - 1)
                    while common:
                        low = common & -common
                        out.append((i, j, low.bit_length() - 1))
                        common ^= low
                idx += 1
        return out

    # -- constructors -----------------------------------------------------

    @staticmethod
    def empty() -> "ColoredGraph":
        return ColoredGraph(0, "")

    @staticmethod
    def monochromatic(n: int, c: str = RED) -> "ColoredGraph":
        return ColoredGraph(n, c * (n * (n - 1) // 2))

    @staticmethod
    def from_red_edges(n: int, red_edges) -> "ColoredGraph":
        """Complete colouring with the given edges red and everything else blue."""
        chars = [BLUE] * (n * (n - 1) // 2)
        for i, j in red_edges:
            chars[edge_index(n, i, j)] = RED
        return ColoredGraph(n, "".join(chars))

    # -- mutations (return new graphs) ------------------------------------

    def add_vertex(self) -> "ColoredGraph":
        if not self.is_complete:
            raise ValueError("can only add a vertex to a completely coloured graph")
        n = self.n
        chars = []
        pos = 0
        for i in range(n):
            row = n - 1 - i
            chars.append(self.colors[pos : pos + row])
            chars.append(UNASSIGNED)
            pos += row
        return ColoredGraph(n + 1, "".join(chars))

    def set_edge(self, i: int, j: int, c: str) -> "ColoredGraph":
        if c not in COLORS:
            raise ValueError(f"colour must be one of {COLORS}, got {c!r}")
        k = edge_index(self.n, i, j)
        if self.colors[k] != UNASSIGNED:
            raise ValueError(f"edge ({i}, {j}) already coloured {self.colors[k]}")
        return ColoredGraph(self.n, self.colors[:k] + c + self.colors[k + 1 :])

    def flip_edge(self, i: int, j: int) -> "ColoredGraph":
        k = edge_index(self.n, i, j)
        old = self.colors[k]
        if old == UNASSIGNED:
            raise ValueError(f"edge ({i}, {j}) is unassigned")
        new = RED if old == BLUE else BLUE
        return ColoredGraph(self.n, self.colors[:k] + new + self.colors[k + 1 :])

    def delete_vertex(self, u: int) -> "ColoredGraph":
        if not 0 <= u < self.n:
            raise ValueError(f"vertex {u} out of range for n={self.n}")
        n, m = self.n, self.n - 1
        chars = [""] * (m * (m - 1) // 2)
        keep = [v for v in range(n) if v != u]
        for a in range(m):
            for b in range(a + 1, m):
                chars[edge_index(m, a, b)] = self.colors[edge_index(n, keep[a], keep[b])]
        return ColoredGraph(m, "".join(chars))

    def swap_colors(self) -> "ColoredGraph":
        table = str.maketrans({RED: BLUE, BLUE: RED})
        return ColoredGraph(self.n, self.colors.translate(table))

    # -- text format ------------------------------------------------------

    def serialize(self) -> str:
        return f"n={self.n}\n{self.colors}\n"

    def __str__(self) -> str:
        return f"ColoredGraph(n={self.n}, {self.colors!r})"


def parse(text: str) -> ColoredGraph:
    """Parse the two-line graph format (`n=<k>` then the colour string)."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("n="):
        raise GraphFormatError("first line must be 'n=<decimal>'", 0)
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise GraphFormatError(f"bad vertex count {lines[0][2:]!r}", 2) from None
    if n < 0:
        raise GraphFormatError("vertex count must be non-negative", 2)
    m = n * (n - 1) // 2
    body = lines[1] if len(lines) > 1 else ""
    if len(body) != m:
        raise GraphFormatError(
            f"colour string has length {len(body)}, expected {m}", len(lines[0]) + 1
        )
    for k, ch in enumerate(body):
        if ch not in (RED, BLUE, UNASSIGNED):
            raise GraphFormatError(f"invalid colour {ch!r}", len(lines[0]) + 1 + k)
    if any(line.strip() for line in lines[2:]):
        raise GraphFormatError("trailing content after colour string", len(lines[0]) + 1 + m)
    return ColoredGraph(n, body)
