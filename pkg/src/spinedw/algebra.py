"""Coefficient groups, formal integer sums, and the monomial quotient ring.

Coefficient values live additively in k = Z_m1 x ... x Z_mr and are stored
as residue tuples.  The multiplicative point of view (tokens t^j with
t^m = 1) appears only when rendering and in the ring Z[x]/(x^m - 1) used by
the generic tensor engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

KElem = Tuple[int, ...]


class CoeffGroup:
    """Finite abelian group Z_m1 x ... x Z_mr with componentwise residues."""

    def __init__(self, moduli: Sequence[int]) -> None:
        mods = tuple(int(m) for m in moduli)
        if not mods or any(m < 1 for m in mods):
            raise ValueError(f"moduli must be positive integers, got {moduli!r}")
        self.moduli = mods

    @property
    def rank(self) -> int:
        return len(self.moduli)

    def zero(self) -> KElem:
        return (0,) * len(self.moduli)

    def element(self, values: Sequence[int]) -> KElem:
        if len(values) != len(self.moduli):
            raise ValueError(
                f"expected {len(self.moduli)} residues, got {len(values)}"
            )
        return tuple(v % m for v, m in zip(values, self.moduli))

    def add(self, a: KElem, b: KElem) -> KElem:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def neg(self, a: KElem) -> KElem:
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def sub(self, a: KElem, b: KElem) -> KElem:
        return tuple((x - y) % m for x, y, m in zip(a, b, self.moduli))

    def scale(self, n: int, a: KElem) -> KElem:
        return tuple((n * x) % m for x, m in zip(a, self.moduli))

    def elements(self) -> Iterable[KElem]:
        def rec(i: int) -> Iterable[Tuple[int, ...]]:
            if i == len(self.moduli):
                yield ()
                return
            for rest in rec(i + 1):
                for v in range(self.moduli[i]):
                    yield (v,) + rest

        return rec(0)

    def two_torsion(self) -> List[KElem]:
        """All v with 2v = 0, in lexicographic order."""
        out = [v for v in self.elements() if self.scale(2, v) == self.zero()]
        return sorted(out)

    @property
    def order(self) -> int:
        n = 1
        for m in self.moduli:
            n *= m
        return n

    def parse(self, text: str) -> KElem:
        return self.element([int(p) for p in text.split(",")])

    def render(self, a: KElem) -> str:
        return ",".join(str(x) for x in a)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CoeffGroup) and self.moduli == other.moduli

    def __hash__(self) -> int:
        return hash(self.moduli)

    def __repr__(self) -> str:
        return "x".join(f"Z{m}" for m in self.moduli)


def coeff_from_spec(spec: str) -> CoeffGroup:
    """Parse coefficient specs like `Z2`, `2`, or `Z2xZ4`."""
    moduli = []
    for part in spec.replace(" ", "").split("x"):
        if part.lower().startswith("z") or part.lower().startswith("c"):
            part = part[1:]
        moduli.append(int(part))
    return CoeffGroup(moduli)


@dataclass(frozen=True)
class FormalSum:
    """Finite formal integer combination of carrier values.

    The carrier is either a CoeffGroup (keys are residue tuples combined
    additively) or a ring such as PolyQuotientRing (keys combined by ring
    multiplication).  Zero multiplicities are never stored.
    """

    carrier: object
    terms: Mapping[object, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {k: int(v) for k, v in self.terms.items() if v != 0}
        object.__setattr__(self, "terms", cleaned)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FormalSum)
            and self.carrier == other.carrier
            and dict(self.terms) == dict(other.terms)
        )

    def is_zero(self) -> bool:
        return not self.terms

    def total_multiplicity(self) -> int:
        return sum(self.terms.values())


def _combine_keys(carrier: object, a: object, b: object) -> object:
    if isinstance(carrier, CoeffGroup):
        return carrier.add(a, b)  # type: ignore[arg-type]
    return a * b  # ring elements carry their own multiplication


def formal_sum_add(a: FormalSum, b: FormalSum) -> FormalSum:
    if a.carrier != b.carrier:
        raise ValueError("formal sums over different carriers")
    terms: Dict[object, int] = dict(a.terms)
    for key, mult in b.terms.items():
        terms[key] = terms.get(key, 0) + mult
    return FormalSum(a.carrier, terms)


def formal_sum_mul(a: FormalSum, b: FormalSum) -> FormalSum:
    if a.carrier != b.carrier:
        raise ValueError("formal sums over different carriers")
    terms: Dict[object, int] = {}
    for ka, ma in a.terms.items():
        for kb, mb in b.terms.items():
            key = _combine_keys(a.carrier, ka, kb)
            terms[key] = terms.get(key, 0) + ma * mb
    return FormalSum(a.carrier, terms)


def zeta(carrier: object, values: Iterable[object]) -> FormalSum:
    """Multiset of carrier values -> formal sum with count multiplicities."""
    terms: Dict[object, int] = {}
    for v in values:
        terms[v] = terms.get(v, 0) + 1
    return FormalSum(carrier, terms)


def render_formal_sum(fs: FormalSum, m: int) -> str:
    """Render a sum over k = Z_m multiplicatively: value j becomes t^j.

    Terms are sorted by residue; the empty sum renders as "0".
    """
    if not isinstance(fs.carrier, CoeffGroup) or fs.carrier.moduli != (m,):
        raise ValueError(f"formal sum is not over Z_{m}")
    if fs.is_zero():
        return "0"
    parts = []
    for key in sorted(fs.terms):
        j = key[0]
        token = "1" if j == 0 else ("t" if j == 1 else f"t^{j}")
        parts.append(f"{fs.terms[key]}*{token}")
    return " + ".join(parts)


class PolyQuotientRing:
    """The ring Z[x]/(x^m - 1) with elements stored as coefficient tuples.

    The unit x generates a cyclic group of order m inside the unit group,
    realizing the additive group Z_m multiplicatively via j -> x^j.
    """

    def __init__(self, m: int) -> None:
        if m < 1:
            raise ValueError(f"modulus must be positive, got {m}")
        self.m = int(m)

    def element(self, coeffs: Sequence[int]) -> "PolyElem":
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(coeffs)}")
        return PolyElem(self, tuple(int(c) for c in coeffs))

    def zero(self) -> "PolyElem":
        return PolyElem(self, (0,) * self.m)

    def one(self) -> "PolyElem":
        return self.x_pow(0)

    def x_pow(self, j: int) -> "PolyElem":
        coeffs = [0] * self.m
        coeffs[j % self.m] = 1
        return PolyElem(self, tuple(coeffs))

    def monomial_exponent(self, a: "PolyElem") -> int | None:
        """Return j when a = x^j, else None."""
        if sum(1 for c in a.coeffs if c != 0) != 1:
            return None
        j = next(i for i, c in enumerate(a.coeffs) if c != 0)
        return j if a.coeffs[j] == 1 else None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyQuotientRing) and self.m == other.m

    def __hash__(self) -> int:
        return hash(("PolyQuotientRing", self.m))

    def __repr__(self) -> str:
        return f"Z[x]/(x^{self.m} - 1)"


@dataclass(frozen=True)
class PolyElem:
    """Immutable element of PolyQuotientRing; supports +, -, *, ==, hash."""

    ring: PolyQuotientRing
    coeffs: Tuple[int, ...]

    def __add__(self, other: "PolyElem") -> "PolyElem":
        self._check(other)
        return PolyElem(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "PolyElem") -> "PolyElem":
        self._check(other)
        return PolyElem(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "PolyElem":
        return PolyElem(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "PolyElem") -> "PolyElem":
        self._check(other)
        m = self.ring.m
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[(i + j) % m] += a * b
        return PolyElem(self.ring, tuple(out))

    def _check(self, other: "PolyElem") -> None:
        if not isinstance(other, PolyElem) or other.ring.m != self.ring.m:
            raise ValueError("mixed-ring arithmetic")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                mono = "x" if j == 1 else f"x^{j}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)
