"""Independent brute-force verifiers: permutations, tableaux, matchings.

Everything here is deliberately first-principles so it can referee the
algebraic machinery: permutations are enumerated by pruned backtracking
(never by the zigzag recurrence), tableau counts by direct filling, and
chromatic symmetric functions by stable set-partitions.

Alternation convention: down-up throughout, w_1 > w_2 < w_3 > w_4 < ...
A permutation of even length 2n splits into the odd-position subsequence
whose left-to-right maxima define the record partition.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import BudgetError
from .linalg import det_fraction
from .partitions import Partition, conjugate
from .symfunc import Basis, SymFunc, add, convert, omega, zero

_ALT_BUDGET = 12  # longest permutation any enumeration here will walk
_SYT_DET_BUDGET = 24
_SYT_BRUTE_BUDGET = 12
_MATCHING_BUDGET = 6
_CHROMATIC_BUDGET = 8
_UIO_BUDGET = 5


# ---------------------------------------------------------------------------
# Alternating permutations.


def _check_alt_budget(length: int) -> None:
    if length > _ALT_BUDGET:
        raise BudgetError(
            f"enumerating permutations of length {length} exceeds the budget of {_ALT_BUDGET}"
        )


def _pattern_ok(prev: int, cur: int, position: int, block_start: int) -> bool:
    """Down-up constraint inside a block: odd offsets descend, even ascend."""
    offset = position - block_start
    if offset % 2 == 1:
        return prev > cur
    return prev < cur


def _walk_blocks(length: int, block_starts: frozenset, visit) -> None:
    """Backtrack over permutations of [length] alternating within each block.

    ``visit`` receives the finished permutation as a list; the walk
    explores values in increasing order, so visiting order is stable.
    """
    used = [False] * (length + 1)
    word: list[int] = []
    starts = sorted(block_starts)

    def start_of(position: int) -> int:
        lo = 0
        for s in starts:
            if s <= position:
                lo = s
            else:
                break
        return lo

    def place(position: int) -> None:
        if position == length:
            visit(word)
            return
        block_start = start_of(position)
        for value in range(1, length + 1):
            if used[value]:
                continue
            if position > block_start and not _pattern_ok(
                word[-1], value, position, block_start
            ):
                continue
            used[value] = True
            word.append(value)
            place(position + 1)
            word.pop()
            used[value] = False

    place(0)


def alternating_permutations(k: int):
    """All down-up alternating permutations of [k], lexicographically."""
    _check_alt_budget(k)
    out: list[tuple] = []
    _walk_blocks(k, frozenset({0}), lambda w: out.append(tuple(w)))
    return out


def alternating_count(k: int) -> int:
    """Number of down-up alternating permutations of [k] (equals E_k)."""
    _check_alt_budget(k)
    count = 0

    def bump(_word) -> None:
        nonlocal count
        count += 1

    _walk_blocks(k, frozenset({0}), bump)
    return count


def record_partition(w) -> Partition:
    """Record partition of an alternating permutation of even length.

    Take the odd-position subsequence, find its left-to-right maxima at
    indices r_1 < ... < r_j, and sort the gaps r_2-r_1, ..., n+1-r_j.
    """
    w = tuple(w)
    if len(w) % 2 != 0:
        raise ValueError("record partition needs an even-length permutation")
    for pos in range(1, len(w)):
        if not _pattern_ok(w[pos - 1], w[pos], pos, 0):
            raise ValueError(f"{w!r} is not down-up alternating")
    odd = w[0::2]
    n = len(odd)
    records = [i for i in range(n) if all(odd[i] > odd[j] for j in range(i))]
    bounds = records[1:] + [n]
    gaps = [b - a for a, b in zip(records, bounds)]
    return Partition(sorted(gaps, reverse=True))


def rp_histogram(n: int) -> dict[Partition, int]:
    """Bin all alternating permutations of [2n] by record partition."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_alt_budget(2 * n)
    hist: dict[Partition, int] = {}

    def bucket(word) -> None:
        lam = record_partition(word)
        hist[lam] = hist.get(lam, 0) + 1

    _walk_blocks(2 * n, frozenset({0}), bucket)
    return hist


def piecewise_alt_count(lam) -> int:
    """Count permutations of [2n] alternating on consecutive blocks 2*lam_i."""
    lam = Partition(lam)
    length = 2 * lam.n
    _check_alt_budget(length)
    starts = set()
    offset = 0
    for part in lam:
        starts.add(offset)
        offset += 2 * part
    starts.add(0)
    count = 0

    def bump(_word) -> None:
        nonlocal count
        count += 1

    _walk_blocks(length, frozenset(starts), bump)
    return count


def cyclically_alternating_count(n: int) -> int:
    """Alternating permutations of [2n] whose last entry is below the first."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_alt_budget(2 * n)
    count = 0

    def bump(word) -> None:
        nonlocal count
        if word[-1] < word[0]:
            count += 1

    _walk_blocks(2 * n, frozenset({0}), bump)
    return count


# ---------------------------------------------------------------------------
# Skew shapes and standard Young tableaux.


@dataclass(frozen=True)
class SkewShape:
    """A skew shape outer/inner with rows inner_i..outer_i - 1 (0-based cols)."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        outer, inner = Partition(self.outer), Partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if len(inner) > len(outer):
            raise ValueError("inner shape has more rows than outer")
        for i, part in enumerate(inner):
            if part > outer[i]:
                raise ValueError("inner shape sticks out of outer")

    def inner_padded(self) -> tuple:
        return tuple(self.inner) + (0,) * (len(self.outer) - len(self.inner))

    @property
    def cells(self) -> int:
        return self.outer.n - self.inner.n

    def __str__(self) -> str:
        outer = ",".join(str(p) for p in self.outer)
        inner = ",".join(str(p) for p in self.inner)
        return f"({outer})/({inner})"


def rho_shape(lam) -> SkewShape:
    """The staircase-overlapped doubling of the conjugate partition.

    Row i has length 2*lam'_i, and each row starts one column left of
    the row above; the shape holds 2n cells for lam of n.
    """
    lam = Partition(lam)
    conj = conjugate(lam)
    ell = len(conj)
    outer = Partition([2 * conj[i] + ell - (i + 1) for i in range(ell)])
    inner = Partition([x for x in (ell - (j + 1) for j in range(ell)) if x > 0])
    return SkewShape(outer, inner)


def syt_count_det(shape: SkewShape) -> int:
    """Standard tableau count via the factorial determinant formula.

    cells! * det[1 / (outer_i - inner_j - i + j)!], with 1/k! read as 0
    when k is negative.
    """
    if shape.cells > _SYT_DET_BUDGET:
        raise BudgetError(
            f"{shape.cells} cells exceed the determinant budget of {_SYT_DET_BUDGET}"
        )
    ell = len(shape.outer)
    if ell == 0:
        return 1
    inner = shape.inner_padded()
    rows = []
    for i in range(ell):
        row = []
        for j in range(ell):
            arg = shape.outer[i] - inner[j] - (i + 1) + (j + 1)
            row.append(Fraction(1, factorial(arg)) if arg >= 0 else Fraction(0))
        rows.append(row)
    value = det_fraction(rows) * factorial(shape.cells)
    if value.denominator != 1:
        raise ArithmeticError(f"tableau determinant for {shape} is not integral")
    return value.numerator


def syt_count_brute(shape: SkewShape) -> int:
    """Standard tableau count by placing 1..cells with backtracking."""
    if shape.cells > _SYT_BRUTE_BUDGET:
        raise BudgetError(
            f"{shape.cells} cells exceed the brute budget of {_SYT_BRUTE_BUDGET}"
        )
    ell = len(shape.outer)
    inner = shape.inner_padded()
    filled = [0] * ell  # cells already placed in each row

    def place(value: int) -> int:
        if value > shape.cells:
            return 1
        total = 0
        for i in range(ell):
            col = inner[i] + filled[i]
            if col >= shape.outer[i]:
                continue
            if i > 0 and inner[i - 1] <= col < shape.outer[i - 1]:
                if filled[i - 1] <= col - inner[i - 1]:
                    continue  # cell above exists but is still empty
            filled[i] += 1
            total += place(value + 1)
            filled[i] -= 1
        return total

    return place(1)


# ---------------------------------------------------------------------------
# Matchings, interval orders, chromatic symmetric functions.


@dataclass(frozen=True)
class Matching:
    """A perfect matching of [2n], stored as sorted (low, high) pairs."""

    pairs: tuple

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        ground = [x for pair in pairs for x in pair]
        if sorted(ground) != list(range(1, 2 * len(pairs) + 1)):
            raise ValueError(f"pairs do not partition [2n]: {pairs!r}")

    @property
    def n(self) -> int:
        return len(self.pairs)


def matchings(n: int) -> list[Matching]:
    """All perfect matchings of [2n] in first-partner order ((2n-1)!! of them)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > _MATCHING_BUDGET:
        raise BudgetError(f"n={n} exceeds the matching budget of {_MATCHING_BUDGET}")
    out: list[Matching] = []
    pairs: list[tuple] = []

    def pair_up(free: tuple) -> None:
        if not free:
            out.append(Matching(tuple(pairs)))
            return
        low = free[0]
        for partner in free[1:]:
            pairs.append((low, partner))
            pair_up(tuple(x for x in free if x != low and x != partner))
            pairs.pop()

    pair_up(tuple(range(1, 2 * n + 1)))
    return out


@dataclass(frozen=True)
class IntervalOrder:
    """The interval order on a matching's pairs: {a,b} < {c,d} iff b < c."""

    elements: tuple

    @classmethod
    def from_matching(cls, matching: Matching) -> "IntervalOrder":
        return cls(matching.pairs)

    def less(self, x, y) -> bool:
        return max(x) < min(y)

    def incomparability_graph(self) -> "Graph":
        n = len(self.elements)
        edges = frozenset(
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if not self.less(self.elements[i], self.elements[j])
            and not self.less(self.elements[j], self.elements[i])
        )
        return Graph(n, edges)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset

    def __post_init__(self):
        edges = frozenset(tuple(sorted(e)) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for a, b in edges:
            if a == b or not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"bad edge ({a}, {b})")

    def adjacency(self) -> list[set]:
        adj: list[set] = [set() for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def claw_graph() -> Graph:
    """The star with three leaves, the textbook Schur-negative example."""
    return Graph(4, frozenset({(0, 1), (0, 2), (0, 3)}))


def chromatic_sym(graph: Graph, degree: int) -> SymFunc:
    """Chromatic symmetric function from stable set-partitions.

    [m_lam] X_G is the number of partitions of the vertex set into
    independent blocks of sizes lam, times prod_i m_i(lam)!.
    """
    if graph.vertex_count != degree:
        raise ValueError("degree must equal the number of vertices")
    if degree > _CHROMATIC_BUDGET:
        raise BudgetError(
            f"{degree} vertices exceed the chromatic budget of {_CHROMATIC_BUDGET}"
        )
    adj = graph.adjacency()
    counts: dict[Partition, int] = {}
    blocks: list[set] = []

    def assign(v: int) -> None:
        if v == graph.vertex_count:
            lam = Partition(sorted((len(b) for b in blocks), reverse=True))
            counts[lam] = counts.get(lam, 0) + 1
            return
        for block in blocks:
            if block.isdisjoint(adj[v]):
                block.add(v)
                assign(v + 1)
                block.remove(v)
        blocks.append({v})
        assign(v + 1)
        blocks.pop()

    if degree == 0:
        counts[Partition()] = 1
    else:
        assign(0)
    terms = {}
    for lam, count in counts.items():
        weight = count
        for m in lam.multiplicities().values():
            weight *= factorial(m)
        terms[lam] = Fraction(weight)
    return SymFunc(Basis.M, degree, terms)


def uio_sum(n: int) -> SymFunc:
    """Sum of omega of the chromatic symmetric functions over all matchings.

    Returned in the monomial basis; equals (2n)! times the sec(sqrt(t))
    sprout function of degree n.
    """
    if n > _UIO_BUDGET:
        raise BudgetError(f"n={n} exceeds the interval-order budget of {_UIO_BUDGET}")
    total = zero(Basis.P, n)
    for matching in matchings(n):
        graph = IntervalOrder.from_matching(matching).incomparability_graph()
        x_g = chromatic_sym(graph, n)
        total = add(total, omega(convert(x_g, Basis.P)))
    return convert(total, Basis.M)
