"""Exact Cayley-Dickson arithmetic at arbitrary doubling level.

The level-n algebra has dimension 2^n over the rationals: level 0 is the
rationals themselves, then each doubling step builds pairs with the product

    (a, b)(c, d) = (ac - d*b, da + bc*)        (a, b)* = (a*, -b)

giving the complex numbers, quaternions, octonions and sedenions at levels
1..4.  Basis units are ordered recursively: unit alpha < 2^(n-1) is
(e_alpha, 0), unit alpha >= 2^(n-1) is (0, e_(alpha - 2^(n-1))).  Under this
ordering {1, e1, ..., e7} is the classical octonion basis {1, i, j, k, e, f,
g, h}.

Everything here is exact: scalars are ``fractions.Fraction`` and products of
basis units are always +/- another basis unit, which is what makes the
multiplication operators signed permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .sigperm import SignedPerm

Rational = Union[int, Fraction]

#: Octonion unit letters in basis order: index 1 is i, ..., index 7 is h.
UNIT_LETTERS = ("1", "i", "j", "k", "e", "f", "g", "h")

#: Table generation is capped here; dimension 2^8 = 256 already means a
#: 65536-entry table, and memory grows as 4^level.
MAX_TABLE_LEVEL = 8


def _check_level(a: CdElement, b: CdElement) -> None:
    if a.level != b.level:
        raise ValueError(
            f"incompatible algebras: level {a.level} vs level {b.level}"
        )


@dataclass(frozen=True)
class CdElement:
    """An element of the level-n Cayley-Dickson algebra, dimension 2^n."""

    level: int
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ValueError(f"level must be non-negative, got {self.level}")
        coords = tuple(Fraction(c) for c in self.coords)
        if len(coords) != 1 << self.level:
            raise ValueError(
                f"level {self.level} needs {1 << self.level} coordinates, "
                f"got {len(coords)}"
            )
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_coords(cls, coords: Sequence[Rational]) -> CdElement:
        n = len(coords)
        if n == 0 or n & (n - 1):
            raise ValueError(f"coordinate count must be a power of 2, got {n}")
        return cls(n.bit_length() - 1, tuple(Fraction(c) for c in coords))

    @classmethod
    def basis(cls, level: int, index: int) -> CdElement:
        dim = 1 << level
        if not 0 <= index < dim:
            raise ValueError(f"basis index {index} out of range for level {level}")
        coords = [Fraction(0)] * dim
        coords[index] = Fraction(1)
        return cls(level, tuple(coords))

    @classmethod
    def zero(cls, level: int) -> CdElement:
        return cls(level, (Fraction(0),) * (1 << level))

    @classmethod
    def one(cls, level: int) -> CdElement:
        return cls.basis(level, 0)

    def __add__(self, other: CdElement) -> CdElement:
        _check_level(self, other)
        return CdElement(
            self.level, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: CdElement) -> CdElement:
        _check_level(self, other)
        return CdElement(
            self.level, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> CdElement:
        return CdElement(self.level, tuple(-a for a in self.coords))

    def __mul__(self, other: CdElement) -> CdElement:
        return cd_mul(self, other)

    def conj(self) -> CdElement:
        return cd_conj(self)

    def is_zero(self) -> bool:
        return not any(self.coords)


def _conj_tuple(a: tuple) -> tuple:
    # Recursive conjugation (a, b)* = (a*, -b) collapses to negating every
    # coordinate except the real one.
    return (a[0],) + tuple(-x for x in a[1:])


def _mul_tuple(a: tuple, b: tuple) -> tuple:
    n = len(a)
    if n == 1:
        return (a[0] * b[0],)
    h = n // 2
    a1, a2 = a[:h], a[h:]
    c, d = b[:h], b[h:]
    ac = _mul_tuple(a1, c)
    db = _mul_tuple(_conj_tuple(d), a2)
    da = _mul_tuple(d, a1)
    bc = _mul_tuple(a2, _conj_tuple(c))
    return (
        tuple(x - y for x, y in zip(ac, db))
        + tuple(x + y for x, y in zip(da, bc))
    )


def cd_mul(a: CdElement, b: CdElement) -> CdElement:
    """Cayley-Dickson product via the recursive doubling formula."""
    _check_level(a, b)
    return CdElement(a.level, _mul_tuple(a.coords, b.coords))


def cd_conj(a: CdElement) -> CdElement:
    return CdElement(a.level, _conj_tuple(a.coords))


def cd_re(a: CdElement) -> Fraction:
    """Real part, the coefficient of the unit element."""
    return a.coords[0]


def cd_inner(a: CdElement, b: CdElement) -> Fraction:
    """Scalar product <a, b> = Re(a b*); equals the coordinate dot product."""
    _check_level(a, b)
    return cd_re(cd_mul(a, cd_conj(b)))


def cd_associator(a: CdElement, b: CdElement, c: CdElement) -> CdElement:
    """(ab)c - a(bc); zero up to the quaternions, nonzero from level 3 on."""
    _check_level(a, b)
    _check_level(b, c)
    return cd_mul(cd_mul(a, b), c) - cd_mul(a, cd_mul(b, c))


@lru_cache(maxsize=None)
def _basis_product(dim: int, a: int, b: int) -> tuple[int, int]:
    if a == 0:
        return (b, 1)
    if b == 0:
        return (a, 1)
    if a == b:
        return (0, -1)
    h = dim // 2
    if a < h and b < h:
        return _basis_product(h, a, b)
    if a < h:
        # (e_a, 0)(0, e_b') = (0, e_b' e_a): note the reversed order.
        k, s = _basis_product(h, b - h, a)
        return (k + h, s)
    if b < h:
        # (0, e_a')(e_b, 0) = (0, e_a' e_b*), and e_b* = -e_b for b >= 1.
        k, s = _basis_product(h, a - h, b)
        return (k + h, -s)
    # (0, e_a')(0, e_b') = (-e_b'* e_a', 0).
    a1, b1 = a - h, b - h
    if b1 == 0:
        return (a1, -1)
    return _basis_product(h, b1, a1)


def basis_product(level: int, alpha: int, beta: int) -> tuple[int, int]:
    """Return (index, sign) with e_alpha * e_beta = sign * e_index."""
    dim = 1 << level
    if not 0 <= alpha < dim or not 0 <= beta < dim:
        raise ValueError(
            f"basis indices ({alpha}, {beta}) out of range for level {level}"
        )
    return _basis_product(dim, alpha, beta)


@dataclass(frozen=True)
class MulTable:
    """Full basis multiplication table of the level-n algebra."""

    level: int
    entries: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def dim(self) -> int:
        return 1 << self.level

    def entry(self, alpha: int, beta: int) -> tuple[int, int]:
        return self.entries[alpha][beta]


def mul_table(level: int) -> MulTable:
    if level < 0:
        raise ValueError(f"level must be non-negative, got {level}")
    if level > MAX_TABLE_LEVEL:
        raise ValueError(
            f"table generation capped at level {MAX_TABLE_LEVEL} "
            f"(dimension {1 << MAX_TABLE_LEVEL}); got level {level}"
        )
    dim = 1 << level
    rows = tuple(
        tuple(_basis_product(dim, a, b) for b in range(dim)) for a in range(dim)
    )
    return MulTable(level, rows)


def unit_name(index: int) -> str:
    """Label of basis unit: "1" for the unit element, else "e<index>"."""
    return "1" if index == 0 else f"e{index}"


def _cell(index: int, sign: int) -> str:
    return ("-" if sign < 0 else "") + unit_name(index)


def mul_table_to_csv(table: MulTable) -> str:
    """Classical table layout: products of imaginary units only.

    The header row is "1,e1,...,e(d-1)" (the corner cell labels the unit),
    each following row is an imaginary unit label followed by its products,
    left factor taken from the row.  Cells read like "e3", "-e9", "-1".
    """
    dim = table.dim
    lines = [",".join(unit_name(i) for i in range(dim))]
    for a in range(1, dim):
        row = [unit_name(a)]
        row.extend(_cell(*table.entry(a, b)) for b in range(1, dim))
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def mul_table_to_json(table: MulTable) -> dict:
    """Full 2^n x 2^n table as nested arrays of {index, sign}."""
    return {
        "level": table.level,
        "dim": table.dim,
        "entries": [
            [{"index": k, "sign": s} for (k, s) in row] for row in table.entries
        ],
    }


def mul_table_display(table: MulTable) -> str:
    """Aligned text grid of the classical table layout."""
    dim = table.dim
    cells = [[unit_name(i) for i in range(dim)]]
    for a in range(1, dim):
        cells.append(
            [unit_name(a)] + [_cell(*table.entry(a, b)) for b in range(1, dim)]
        )
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells) + "\n"


def left_mult_matrix(level: int, alpha: int) -> SignedPerm:
    """Matrix of x -> e_alpha * x on the level-n algebra.

    Always a signed permutation: column beta holds e_alpha e_beta = +/- e_k.
    """
    dim = 1 << level
    if not 0 <= alpha < dim:
        raise ValueError(f"unit index {alpha} out of range for level {level}")
    image = []
    sign = []
    for beta in range(dim):
        k, s = _basis_product(dim, alpha, beta)
        image.append(k)
        sign.append(s)
    return SignedPerm(dim, tuple(image), tuple(sign))


def right_mult_matrix(level: int, alpha: int) -> SignedPerm:
    """Matrix of x -> x * e_alpha on the level-n algebra."""
    dim = 1 << level
    if not 0 <= alpha < dim:
        raise ValueError(f"unit index {alpha} out of range for level {level}")
    image = []
    sign = []
    for beta in range(dim):
        k, s = _basis_product(dim, beta, alpha)
        image.append(k)
        sign.append(s)
    return SignedPerm(dim, tuple(image), tuple(sign))
