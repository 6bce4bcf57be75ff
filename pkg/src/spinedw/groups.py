"""Finite groups as explicit operation tables with 0-based element indices."""

from __future__ import annotations

import random
import re
from typing import List, Sequence, Tuple

FULL_CHECK_LIMIT = 64
ASSOC_SAMPLES = 4096


class GroupTableError(ValueError):
    """Raised when a claimed group table fails a group axiom."""


class FiniteGroup:
    """Finite group given by dense multiplication and inverse tables.

    Elements are the indices 0..order-1.  All hot-loop operations are plain
    table lookups; element semantics (residues, pairs) exist only in the
    constructors.  Instances are immutable after construction and safe to
    share between workers.
    """

    def __init__(
        self,
        op_table: Sequence[Sequence[int]],
        name: str = "group",
        *,
        identity: int | None = None,
        validate: bool = True,
    ) -> None:
        self.order = len(op_table)
        if self.order == 0:
            raise GroupTableError("group order must be positive")
        self.op_table: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(int(x) for x in row) for row in op_table
        )
        self.name = str(name)
        for i, row in enumerate(self.op_table):
            if len(row) != self.order:
                raise GroupTableError(
                    f"op_table row {i} has length {len(row)}, expected {self.order}"
                )
            for x in row:
                if not 0 <= x < self.order:
                    raise GroupTableError(f"op_table entry {x} out of range")
        self.identity = self._find_identity() if identity is None else int(identity)
        if validate:
            self._check_identity()
            self.inv_table = self._build_inverses()
            self._check_associativity()
        else:
            self.inv_table = self._build_inverses()

    def _find_identity(self) -> int:
        n = self.order
        for e in range(n):
            if all(self.op_table[e][x] == x and self.op_table[x][e] == x for x in range(n)):
                return e
        raise GroupTableError("table has no identity element")

    def _check_identity(self) -> None:
        e = self.identity
        for x in range(self.order):
            if self.op_table[e][x] != x or self.op_table[x][e] != x:
                raise GroupTableError(f"element {e} is not an identity ({e}*{x} != {x})")

    def _build_inverses(self) -> Tuple[int, ...]:
        inv: List[int] = []
        for x in range(self.order):
            row = self.op_table[x]
            try:
                y = row.index(self.identity)
            except ValueError:
                raise GroupTableError(f"element {x} has no right inverse") from None
            if self.op_table[y][x] != self.identity:
                raise GroupTableError(f"element {x} has no two-sided inverse")
            inv.append(y)
        return tuple(inv)

    def _check_associativity(self) -> None:
        n = self.order
        t = self.op_table
        if n <= FULL_CHECK_LIMIT:
            triples = (
                (x, y, z) for x in range(n) for y in range(n) for z in range(n)
            )
        else:
            rng = random.Random(0xA550C)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(ASSOC_SAMPLES)
            )
        for x, y, z in triples:
            if t[t[x][y]][z] != t[x][t[y][z]]:
                raise GroupTableError(f"associativity fails at triple ({x}, {y}, {z})")

    def mul(self, x: int, y: int) -> int:
        if not (0 <= x < self.order and 0 <= y < self.order):
            raise ValueError(f"element index out of range: ({x}, {y})")
        return self.op_table[x][y]

    def inv(self, x: int) -> int:
        if not 0 <= x < self.order:
            raise ValueError(f"element index out of range: {x}")
        return self.inv_table[x]

    def pow(self, x: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(x), -n)
        acc = self.identity
        for _ in range(n):
            acc = self.op_table[acc][x]
        return acc

    def elements(self) -> range:
        return range(self.order)

    def signed(self, x: int, sign: int) -> int:
        """Element x or its inverse, by sign flag +1/-1."""
        return x if sign == 1 else self.inv_table[x]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and self.op_table == other.op_table

    def __hash__(self) -> int:
        return hash(self.op_table)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


def cyclic_group(n: int) -> FiniteGroup:
    """Cyclic group of order n with additive residues; identity is 0."""
    if n < 1:
        raise GroupTableError(f"cyclic group order must be >= 1, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, name=f"Z{n}", identity=0)


def product_group(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Direct product; element (a, b) is packed as a * |g2| + b."""
    n1, n2 = g1.order, g2.order
    n = n1 * n2
    table = [[0] * n for _ in range(n)]
    for a1 in range(n1):
        for b1 in range(n2):
            for a2 in range(n1):
                for b2 in range(n2):
                    x = a1 * n2 + b1
                    y = a2 * n2 + b2
                    table[x][y] = g1.op_table[a1][a2] * n2 + g2.op_table[b1][b2]
    return FiniteGroup(table, name=f"{g1.name}x{g2.name}", identity=0)


_CYCLIC_RE = re.compile(r"(?:cyclic\((\d+)\)|[CZ](\d+))$", re.IGNORECASE)


def parse_group_table(text: str, name: str = "table") -> FiniteGroup:
    """Parse the table text format: line `order n`, then n rows of n indices.

    Indices are 0-based and the identity must be index 0.
    """
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise GroupTableError("empty group table document")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order":
        raise GroupTableError("first line must be 'order n'")
    try:
        n = int(head[1])
    except ValueError:
        raise GroupTableError(f"bad order value {head[1]!r}") from None
    if len(lines) != n + 1:
        raise GroupTableError(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for i, ln in enumerate(lines[1:]):
        parts = ln.split()
        if len(parts) != n:
            raise GroupTableError(f"row {i} has {len(parts)} entries, expected {n}")
        rows.append([int(p) for p in parts])
    g = FiniteGroup(rows, name=name)
    if g.identity != 0:
        raise GroupTableError(f"identity must be index 0, found {g.identity}")
    return g


def group_from_spec(spec: str) -> FiniteGroup:
    """Build a group from a short spec.

    Accepted forms: `Z4` / `C4` / `cyclic(4)`, products `Z2xZ2`,
    `product(cyclic(2), cyclic(2))`, or an explicit table document
    starting with `order n`.
    """
    s = spec.strip()
    if s.startswith("order"):
        return parse_group_table(s)
    compact = s.replace(" ", "")
    m = re.fullmatch(r"product\((.*)\)", compact, re.IGNORECASE)
    if m:
        parts = m.group(1).split(",")
    else:
        parts = compact.split("x")
    factors = []
    for part in parts:
        pm = _CYCLIC_RE.fullmatch(part)
        if not pm:
            raise GroupTableError(f"unrecognized group spec {spec!r}")
        factors.append(cyclic_group(int(pm.group(1) or pm.group(2))))
    group = factors[0]
    for rhs in factors[1:]:
        group = product_group(group, rhs)
    return group


def render_group_table(g: FiniteGroup) -> str:
    """Serialize a group to the table text format."""
    lines = [f"order {g.order}"]
    for row in g.op_table:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
