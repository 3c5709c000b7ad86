"""Exact signed-permutation (monomial +/-1) matrices and the diag/block calculus.

A :class:`SignedPerm` of dimension m stores, for each column j, the row
``image[j]`` of its unique nonzero entry and that entry's sign.  As a matrix:
``M[image[j], j] = sign[j]``, zero elsewhere.  All such matrices are
orthogonal, compose in O(m), and apply to a vector in exactly m scalar moves.

Internally indices are 0-based; anything displayed to humans uses 1-based
labels.  The column-map convention means ``apply`` scatters:
``(M v)[image[j]] = sign[j] * v[j]``, i.e. ordinary matrix-times-column-vector
semantics.

:class:`DenseMatrix` is the quadratic brute-force oracle used by the tests;
it never appears on a production path.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class SignedPerm:
    """Monomial matrix with entries in {+1, -1}, one per row and column."""

    __slots__ = ("dim", "image", "sign")

    def __init__(self, dim: int, image: Sequence[int], sign: Sequence[int]):
        image = tuple(image)
        sign = tuple(sign)
        if dim <= 0:
            raise ValueError(f"dimension must be positive, got {dim}")
        if len(image) != dim or len(sign) != dim:
            raise ValueError(
                f"image/sign length must equal dim={dim}, "
                f"got {len(image)}/{len(sign)}"
            )
        seen = [False] * dim
        for r in image:
            if not 0 <= r < dim or seen[r]:
                raise ValueError("image is not a permutation of 0..dim-1")
            seen[r] = True
        if any(s != 1 and s != -1 for s in sign):
            raise ValueError("signs must be +1 or -1")
        self.dim = dim
        self.image = image
        self.sign = sign

    @classmethod
    def _raw(cls, dim: int, image: tuple[int, ...], sign: tuple[int, ...]) -> SignedPerm:
        # Fast path for internal constructions that are valid by construction.
        self = object.__new__(cls)
        self.dim = dim
        self.image = image
        self.sign = sign
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedPerm):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.image == other.image
            and self.sign == other.sign
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.image, self.sign))

    def __neg__(self) -> SignedPerm:
        return SignedPerm._raw(self.dim, self.image, tuple(-s for s in self.sign))

    def __mul__(self, other: SignedPerm) -> SignedPerm:
        """Matrix product self @ other, in O(m)."""
        if not isinstance(other, SignedPerm):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        ai, asg = self.image, self.sign
        bi, bsg = other.image, other.sign
        image = tuple(ai[r] for r in bi)
        sign = tuple(asg[bi[j]] * bsg[j] for j in range(self.dim))
        return SignedPerm._raw(self.dim, image, sign)

    def transpose(self) -> SignedPerm:
        """Transpose (= inverse, by orthogonality)."""
        image = [0] * self.dim
        sign = [0] * self.dim
        for j, r in enumerate(self.image):
            image[r] = j
            sign[r] = self.sign[j]
        return SignedPerm._raw(self.dim, tuple(image), tuple(sign))

    def apply(self, v: Sequence[Scalar]) -> list[Scalar]:
        """Multiply onto a column vector: m scalar moves, negation only."""
        if len(v) != self.dim:
            raise ValueError(f"vector length {len(v)} != dimension {self.dim}")
        out = [0] * self.dim
        image, sign = self.image, self.sign
        for j, vj in enumerate(v):
            out[image[j]] = vj if sign[j] > 0 else -vj
        return out

    def is_skew(self) -> bool:
        image, sign = self.image, self.sign
        return all(
            image[image[j]] == j and sign[image[j]] == -sign[j]
            for j in range(self.dim)
        )

    def squares_to_minus_id(self) -> bool:
        image, sign = self.image, self.sign
        return all(
            image[image[j]] == j and sign[image[j]] * sign[j] == -1
            for j in range(self.dim)
        )

    def anticommutes(self, other: SignedPerm) -> bool:
        """Exact check of self*other == -(other*self)."""
        ab = self * other
        ba = other * self
        return ab.image == ba.image and all(
            x == -y for x, y in zip(ab.sign, ba.sign)
        )

    def __repr__(self) -> str:
        return f"SignedPerm(dim={self.dim}, image={self.image}, sign={self.sign})"


def identity(dim: int) -> SignedPerm:
    return SignedPerm._raw(dim, tuple(range(dim)), (1,) * dim)


def compose(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    return a * b


def diag_ext(a: SignedPerm, n: int) -> SignedPerm:
    """n diagonal copies of a, acting blockwise on (R^m)^n."""
    if n < 1:
        raise ValueError(f"copy count must be >= 1, got {n}")
    if n == 1:
        return a
    m = a.dim
    image = []
    for b in range(n):
        off = b * m
        image.extend(r + off for r in a.image)
    return SignedPerm._raw(m * n, tuple(image), a.sign * n)


def block_ext(a: SignedPerm, n: int) -> SignedPerm:
    """Replace each entry of a by that entry times Id_n, acting on (R^n)^m."""
    if n < 1:
        raise ValueError(f"block size must be >= 1, got {n}")
    if n == 1:
        return a
    m = a.dim
    image = []
    sign = []
    for col in range(m):
        off = a.image[col] * n
        s = a.sign[col]
        image.extend(off + r for r in range(n))
        sign.extend([s] * n)
    return SignedPerm._raw(m * n, tuple(image), tuple(sign))


def sign_flip_tail(dim: int) -> SignedPerm:
    """Diagonal matrix negating the last dim/2 coordinates."""
    if dim % 2:
        raise ValueError(f"dimension must be even, got {dim}")
    h = dim // 2
    return SignedPerm._raw(dim, tuple(range(dim)), (1,) * h + (-1,) * h)


def conj_base(s: int) -> SignedPerm:
    """The conjugation on R^(16^s) negating the second half of coordinates."""
    if s < 1:
        raise ValueError(f"conjugation order must be >= 1, got {s}")
    return sign_flip_tail(16 ** s)


def conj_level(q: int, t: int) -> SignedPerm:
    """Diagonal extension of conj_base(t) to R^(16^q), for 1 <= t <= q-1."""
    if not 1 <= t <= q - 1:
        raise ValueError(f"need 1 <= t <= q-1, got t={t}, q={q}")
    return diag_ext(conj_base(t), 16 ** (q - t))


def conj_total(t: int) -> SignedPerm:
    """Product of the level conjugations inside R^(16^t); identity at t = 1.

    All factors are diagonal sign matrices, so the product order is
    immaterial.
    """
    if t < 1:
        raise ValueError(f"conjugation order must be >= 1, got {t}")
    if t == 1:
        return identity(16)
    acc = conj_level(t, 1)
    for s in range(2, t):
        acc = acc * conj_level(t, s)
    return acc


class DenseMatrix:
    """Dense exact matrix; the brute-force oracle for the signed-perm kernel."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        self.rows = tuple(tuple(r) for r in rows)
        self.dim = len(self.rows)
        if any(len(r) != self.dim for r in self.rows):
            raise ValueError("matrix must be square")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: DenseMatrix) -> DenseMatrix:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return DenseMatrix(
            tuple(x + y for x, y in zip(r, s))
            for r, s in zip(self.rows, other.rows)
        )

    def __neg__(self) -> DenseMatrix:
        return DenseMatrix(tuple(-x for x in r) for r in self.rows)

    def __mul__(self, other: DenseMatrix) -> DenseMatrix:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        cols = tuple(zip(*other.rows))
        return DenseMatrix(
            tuple(sum(map(operator.mul, row, col)) for col in cols)
            for row in self.rows
        )

    def transpose(self) -> DenseMatrix:
        return DenseMatrix(zip(*self.rows))

    def apply(self, v: Sequence[Scalar]) -> list[Scalar]:
        if len(v) != self.dim:
            raise ValueError(f"vector length {len(v)} != dimension {self.dim}")
        return [sum(x * y for x, y in zip(row, v)) for row in self.rows]

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)


def to_dense(a: SignedPerm) -> DenseMatrix:
    rows = [[0] * a.dim for _ in range(a.dim)]
    for j in range(a.dim):
        rows[a.image[j]][j] = a.sign[j]
    return DenseMatrix(rows)


def from_dense(d: DenseMatrix) -> SignedPerm:
    """Recover a SignedPerm from its dense form; reject non-monomial input."""
    dim = d.dim
    image = [-1] * dim
    sign = [0] * dim
    for r, row in enumerate(d.rows):
        for c, x in enumerate(row):
            if x == 0:
                continue
            if x != 1 and x != -1:
                raise ValueError(f"entry at ({r}, {c}) is {x}, not in {{-1,0,1}}")
            if image[c] != -1:
                raise ValueError(f"column {c} has more than one nonzero entry")
            image[c] = r
            sign[c] = int(x)
    if any(r == -1 for r in image):
        raise ValueError("some column has no nonzero entry")
    return SignedPerm(dim, tuple(image), tuple(sign))


def to_sparse_json(a: SignedPerm) -> dict:
    """Stable sparse form: cols listed in column order."""
    return {
        "dim": a.dim,
        "cols": [
            {"row": a.image[j], "sign": a.sign[j]} for j in range(a.dim)
        ],
    }


def from_sparse_json(obj: dict) -> SignedPerm:
    dim = obj["dim"]
    cols = obj["cols"]
    if len(cols) != dim:
        raise ValueError(f"expected {dim} columns, got {len(cols)}")
    return SignedPerm(
        dim,
        tuple(c["row"] for c in cols),
        tuple(c["sign"] for c in cols),
    )


def to_dense_csv(a: SignedPerm) -> str:
    """m rows of m comma-separated integers in {-1, 0, 1}."""
    lines = []
    for r in range(a.dim):
        row = ["0"] * a.dim
        lines.append(row)
    for j in range(a.dim):
        lines[a.image[j]][j] = str(a.sign[j])
    return "\n".join(",".join(row) for row in lines) + "\n"


def display(a: SignedPerm, names: Sequence[str] | None = None) -> str:
    """One-line action on symbolic coordinates, e.g. "(-s2, s1)"."""
    if names is None:
        names = [f"s{i + 1}" for i in range(a.dim)]
    out = [""] * a.dim
    for j in range(a.dim):
        out[a.image[j]] = ("-" if a.sign[j] < 0 else "") + names[j]
    return "(" + ", ".join(out) + ")"
