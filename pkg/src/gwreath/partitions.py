"""Colored compositions, ordered colored set partitions, and enumerators.

Data is plain nested tuples so everything hashes and compares structurally:

* a colored composition is ``((size, color), ...)`` with positive sizes;
* an ordered colored partition of {1..n} is ``((block, color), ...)`` where
  each block is a strictly increasing tuple of integers and the blocks are
  disjoint with union {1..n};
* a permutation is its one-line image tuple ``(p(1), ..., p(n))``.

Colors are element indices into a :class:`~gwreath.groups.FiniteGroup`.
"""

from __future__ import annotations

import itertools
from math import comb, factorial

from .limits import DEFAULT_LIMIT, check_limit

ColoredComposition = tuple
ColoredPartition = tuple
Permutation = tuple


def composition_total(comp: ColoredComposition) -> int:
    return sum(size for size, _ in comp)


def validate_composition(comp, group=None, n: int | None = None) -> None:
    if len(comp) == 0:
        raise ValueError("a colored composition must have at least one part")
    for part in comp:
        if len(part) != 2:
            raise ValueError(f"parts must be (size, color) pairs, got {part!r}")
        size, color = part
        if not isinstance(size, int) or size < 1:
            raise ValueError(f"part sizes must be positive integers, got {size!r}")
        if group is not None and not 0 <= color < group.order:
            raise ValueError(f"color {color!r} out of range 0..{group.order - 1}")
    if n is not None and composition_total(comp) != n:
        raise ValueError(f"composition sums to {composition_total(comp)}, expected {n}")


def partition_total(partition: ColoredPartition) -> int:
    return sum(len(block) for block, _ in partition)


def validate_partition(partition, group=None, n: int | None = None) -> None:
    if len(partition) == 0:
        raise ValueError("an ordered partition must have at least one block")
    seen: set[int] = set()
    total = 0
    for entry in partition:
        if len(entry) != 2:
            raise ValueError(f"blocks must be (members, color) pairs, got {entry!r}")
        block, color = entry
        if len(block) == 0:
            raise ValueError("blocks must be non-empty")
        if list(block) != sorted(block):
            raise ValueError(f"block members must be strictly increasing, got {block!r}")
        if seen & set(block):
            raise ValueError(f"blocks are not disjoint: {sorted(seen & set(block))} repeated")
        seen.update(block)
        total += len(block)
        if group is not None and not 0 <= color < group.order:
            raise ValueError(f"color {color!r} out of range 0..{group.order - 1}")
    size = n if n is not None else total
    if seen != set(range(1, size + 1)):
        raise ValueError(f"blocks must cover 1..{size} exactly, got {sorted(seen)}")


def make_partition(blocks) -> ColoredPartition:
    """Canonicalize: sort members within each block, keep the block order."""
    return tuple((tuple(sorted(block)), color) for block, color in blocks)


def partition_type(partition: ColoredPartition) -> ColoredComposition:
    """Block sizes with their colors, in block order."""
    return tuple((len(block), color) for block, color in partition)


def identity_permutation(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def all_permutations(n: int):
    return itertools.permutations(range(1, n + 1))


def compose_permutations(outer: Permutation, inner: Permutation) -> Permutation:
    """Function composition: the result maps i to outer(inner(i))."""
    return tuple(outer[x - 1] for x in inner)


def invert_permutation(perm: Permutation) -> Permutation:
    result = [0] * len(perm)
    for i, value in enumerate(perm, start=1):
        result[value - 1] = i
    return tuple(result)


def apply_permutation(perm: Permutation, partition: ColoredPartition) -> ColoredPartition:
    """Relabel block members through the permutation; colors and block order stay."""
    n = partition_total(partition)
    if len(perm) != n:
        raise ValueError(f"permutation acts on {len(perm)} points, partition is over 1..{n}")
    return tuple(
        (tuple(sorted(perm[x - 1] for x in block)), color) for block, color in partition
    )


# ---------------------------------------------------------------------------
# counting

def count_colored_compositions(n: int, order: int) -> int:
    return sum(comb(n - 1, length - 1) * order**length for length in range(1, n + 1))


def count_partitions_of_type(comp: ColoredComposition) -> int:
    n = composition_total(comp)
    result = factorial(n)
    for size, _ in comp:
        result //= factorial(size)
    return result


def stirling2(n: int, k: int) -> int:
    """Number of set partitions of an n-set into k non-empty blocks."""
    if k > n or k < 0:
        return 0
    row = [1] + [0] * k
    for _ in range(n):
        row = [0] + [j * row[j] + row[j - 1] for j in range(1, k + 1)]
    return row[k]


def count_colored_partitions(n: int, order: int) -> int:
    return sum(
        factorial(k) * stirling2(n, k) * order**k for k in range(1, n + 1)
    )


# ---------------------------------------------------------------------------
# enumeration, always in canonical order

def composition_sort_key(comp: ColoredComposition):
    """Canonical total order: length, then sizes, then colors."""
    return (len(comp), tuple(s for s, _ in comp), tuple(c for _, c in comp))


def _compositions_into(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in _compositions_into(n - first, parts - 1):
            yield (first, *rest)


def enumerate_colored_compositions(group, n: int, limit: int | None = DEFAULT_LIMIT):
    """All colored compositions of n, in canonical order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_limit(count_colored_compositions(n, group.order), limit,
                f"colored compositions of {n} over a group of order {group.order}")
    colors = range(group.order)
    for length in range(1, n + 1):
        for sizes in _compositions_into(n, length):
            for coloring in itertools.product(colors, repeat=length):
                yield tuple(zip(sizes, coloring))


def _partitions_by_sizes(available, sizes):
    if not sizes:
        yield ()
        return
    head = sizes[0]
    for block in itertools.combinations(available, head):
        chosen = set(block)
        remaining = tuple(x for x in available if x not in chosen)
        for rest in _partitions_by_sizes(remaining, sizes[1:]):
            yield (block, *rest)


def enumerate_partitions_of_type(comp: ColoredComposition,
                                 limit: int | None = DEFAULT_LIMIT):
    """All ordered colored partitions whose type is exactly ``comp``."""
    validate_composition(comp)
    check_limit(count_partitions_of_type(comp), limit,
                f"partitions of type {comp}")
    n = composition_total(comp)
    sizes = tuple(s for s, _ in comp)
    colors = tuple(c for _, c in comp)
    for blocks in _partitions_by_sizes(tuple(range(1, n + 1)), sizes):
        yield tuple(zip(blocks, colors))


def enumerate_colored_partitions(group, n: int, limit: int | None = DEFAULT_LIMIT):
    """All ordered colored partitions of {1..n}, grouped by type."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_limit(count_colored_partitions(n, group.order), limit,
                f"ordered colored partitions of {n} over a group of order {group.order}")
    for comp in enumerate_colored_compositions(group, n, limit=None):
        yield from enumerate_partitions_of_type(comp, limit=None)


# ---------------------------------------------------------------------------
# the refinement order on colored compositions

def is_refinement(fine: ColoredComposition, coarse: ColoredComposition) -> bool:
    """True when ``fine`` splits the parts of ``coarse`` without touching colors.

    The split segments of a refinement are forced to be consecutive with
    prescribed sums, so a single greedy left-to-right pass decides it.
    """
    if composition_total(fine) != composition_total(coarse):
        raise ValueError(
            f"compositions of different totals: {composition_total(fine)} "
            f"vs {composition_total(coarse)}"
        )
    i = 0
    for size, color in coarse:
        acc = 0
        while acc < size:
            if i >= len(fine):
                return False
            part_size, part_color = fine[i]
            if part_color != color:
                return False
            acc += part_size
            i += 1
        if acc != size:
            return False
    return i == len(fine)


def _merges_of_run(sizes):
    """All ways to merge a run of same-colored parts into consecutive groups."""
    r = len(sizes)
    for cuts in itertools.product((False, True), repeat=r - 1):
        merged = []
        acc = sizes[0]
        for keep_cut, size in zip(cuts, sizes[1:]):
            if keep_cut:
                merged.append(acc)
                acc = size
            else:
                acc += size
        merged.append(acc)
        yield tuple(merged)


def coarsenings(comp: ColoredComposition):
    """All compositions obtainable by merging adjacent same-colored parts,
    including ``comp`` itself.  These are exactly the compositions that
    ``comp`` refines."""
    validate_composition(comp)
    runs = []
    for color, run in itertools.groupby(comp, key=lambda part: part[1]):
        runs.append((color, tuple(size for size, _ in run)))
    results = []
    per_run = [
        [tuple((size, color) for size in merged) for merged in _merges_of_run(sizes)]
        for color, sizes in runs
    ]
    for choice in itertools.product(*per_run):
        results.append(tuple(itertools.chain.from_iterable(choice)))
    return results
