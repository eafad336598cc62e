"""Finite groups as validated Cayley tables with 0-based element indices.

Every color that decorates a partition, composition, or permutation in this
library is an index into one of these groups, and all color arithmetic goes
through :meth:`FiniteGroup.mul`.  Index 0 is always the identity.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import factorial

from .errors import FormatError, GroupAxiomError, SizeLimitError


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its Cayley table.

    ``table[a][b]`` is the index of the product a*b, in that order.  The
    order of the arguments is load-bearing everywhere colors multiply:
    non-abelian groups break silently if a call site swaps them.
    """

    order: int
    table: tuple
    labels: tuple
    name: str = field(default="group", compare=False)

    @property
    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        """Product a*b by table lookup."""
        if not 0 <= a < self.order:
            raise IndexError(f"element index {a} out of range 0..{self.order - 1}")
        if not 0 <= b < self.order:
            raise IndexError(f"element index {b} out of range 0..{self.order - 1}")
        return self.table[a][b]

    def power(self, a: int, k: int) -> int:
        """k-th power of a; a**0 is the identity."""
        if k < 0:
            raise ValueError(f"exponent must be non-negative, got {k}")
        if not 0 <= a < self.order:
            raise IndexError(f"element index {a} out of range 0..{self.order - 1}")
        result = 0
        for _ in range(k):
            result = self.table[result][a]
        return result

    def inverse(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise IndexError(f"element index {a} out of range 0..{self.order - 1}")
        return self.table[a].index(0)

    def label(self, a: int) -> str:
        return self.labels[a]

    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def to_dict(self) -> dict:
        """JSON-ready form, the same schema accepted by :func:`load_group`."""
        return {
            "order": self.order,
            "table": [list(row) for row in self.table],
            "labels": list(self.labels),
        }


def cyclic(m: int) -> FiniteGroup:
    """The cyclic group of order m, written additively."""
    if m < 1:
        raise FormatError(f"cyclic group order must be positive, got {m}")
    table = tuple(tuple((a + b) % m for b in range(m)) for a in range(m))
    labels = tuple(str(a) for a in range(m))
    return FiniteGroup(m, table, labels, name=f"cyclic:{m}")


def symmetric(m: int) -> FiniteGroup:
    """The symmetric group on m letters, for 1 <= m <= 5.

    Elements are enumerated in lexicographic one-line order, so index 0 is
    the identity.  The table composes right-to-left: ``table[i][j]`` is the
    permutation sending x to p_i(p_j(x)).
    """
    if not 1 <= m <= 5:
        raise SizeLimitError(
            f"symmetric group degree must be between 1 and 5, got {m}",
            estimate=factorial(m) if m > 0 else 0,
        )
    perms = sorted(itertools.permutations(range(1, m + 1)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(p[q_x - 1] for q_x in q)] for q in perms) for p in perms
    )
    labels = tuple("".join(str(x) for x in p) for p in perms)
    return FiniteGroup(factorial(m), table, labels, name=f"symmetric:{m}")


def klein_four() -> FiniteGroup:
    """The Klein four-group; every non-identity element has order 2."""
    table = tuple(tuple(a ^ b for b in range(4)) for a in range(4))
    return FiniteGroup(4, table, ("e", "a", "b", "ab"), name="klein4")


def from_table(table, labels=None, name: str | None = None) -> FiniteGroup:
    """Build a group from a raw Cayley table, validating all group axioms.

    Raises FormatError for shape problems and GroupAxiomError, naming the
    failing row or triple, when the table is not a group with identity 0.
    """
    rows = [list(row) for row in table]
    m = len(rows)
    if m == 0:
        raise FormatError("Cayley table must be non-empty")
    for i, row in enumerate(rows):
        if len(row) != m:
            raise FormatError(
                f"Cayley table must be square: row {i} has length {len(row)}, expected {m}"
            )
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < m:
                raise FormatError(
                    f"table entry [{i}][{j}] = {v!r} is not an index in 0..{m - 1}"
                )
    if labels is None:
        labels = tuple(str(a) for a in range(m))
    else:
        labels = tuple(str(x) for x in labels)
        if len(labels) != m:
            raise FormatError(f"expected {m} labels, got {len(labels)}")
        if len(set(labels)) != m:
            raise FormatError("labels must be distinct")

    for b in range(m):
        if rows[0][b] != b:
            raise GroupAxiomError(
                f"index 0 is not a left identity: table[0][{b}] = {rows[0][b]}"
            )
    for a in range(m):
        if rows[a][0] != a:
            raise GroupAxiomError(
                f"index 0 is not a right identity: table[{a}][0] = {rows[a][0]}"
            )
    full = set(range(m))
    for a in range(m):
        if set(rows[a]) != full:
            raise GroupAxiomError(f"row {a} is not a permutation of 0..{m - 1}")
    for b in range(m):
        if {rows[a][b] for a in range(m)} != full:
            raise GroupAxiomError(f"column {b} is not a permutation of 0..{m - 1}")
    for a in range(m):
        for b in range(m):
            ab = rows[a][b]
            row_a = rows[a]
            for c in range(m):
                if rows[ab][c] != row_a[rows[b][c]]:
                    raise GroupAxiomError(
                        f"associativity fails at ({a},{b},{c}): "
                        f"({a}*{b})*{c} = {rows[ab][c]} but {a}*({b}*{c}) = {row_a[rows[b][c]]}"
                    )

    frozen = tuple(tuple(row) for row in rows)
    return FiniteGroup(m, frozen, labels, name=name or f"table:{m}")


def load_group(path) -> FiniteGroup:
    """Load a group from a JSON file ``{"order":…,"table":…,"labels":…}``."""
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read group file {path}: {exc}") from exc
    if not isinstance(data, dict) or "table" not in data:
        raise FormatError(f"group file {path} must be a JSON object with a 'table' key")
    table = data["table"]
    if "order" in data and data["order"] != len(table):
        raise FormatError(
            f"group file {path}: declared order {data['order']} does not match "
            f"table size {len(table)}"
        )
    return from_table(table, labels=data.get("labels"), name=f"file:{path}")


def group_from_spec(spec: str) -> FiniteGroup:
    """Resolve a group specifier string.

    Grammar: ``cyclic:<m>`` | ``symmetric:<m>`` | ``klein4`` | ``file:<path>``.
    """
    spec = spec.strip()
    if spec == "klein4":
        return klein_four()
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise FormatError(
            f"unknown group specifier {spec!r}; expected "
            "cyclic:<m>, symmetric:<m>, klein4, or file:<path>"
        )
    if kind == "file":
        return load_group(arg)
    if kind in ("cyclic", "symmetric"):
        try:
            m = int(arg)
        except ValueError:
            raise FormatError(f"group specifier {spec!r}: {arg!r} is not an integer")
        return cyclic(m) if kind == "cyclic" else symmetric(m)
    raise FormatError(
        f"unknown group specifier {spec!r}; expected "
        "cyclic:<m>, symmetric:<m>, klein4, or file:<path>"
    )
