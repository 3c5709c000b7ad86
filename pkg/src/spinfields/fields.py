"""Hurwitz-Radon arithmetic and maximal tangent vector-field systems.

Every positive integer factors uniquely as m = (2k+1) * 2^p * 16^q with
0 <= p <= 3, and the sphere S^(m-1) carries exactly sigma(m) = 2^p + 8q - 1
pointwise linearly independent tangent vector fields.  This module builds
such a maximal system as signed-permutation matrices:

* 8q "level" fields, for t = 1..q and a = 1..8:

      B(t, a) = diag( Chat_t @ block(J_a, 16^(t-1)), m / 16^t )

  where J_a are the complex structures on R^16 and Chat_t is the product of
  level conjugations (conj_total).

* 2^p - 1 "left multiplication" fields, one per imaginary unit of C, H or O:

      L(u) = diag( diag(Chat_q @ C_q, 2^p) @ block(L_u, 16^q), 2k+1 )

  Note the extra conj_base factor C_q next to Chat_q: without it L(u) fails
  to anticommute with the level-q fields (tests include this negative
  witness at m = 512).

For q = 0 the system is the classical one given by complex, quaternion or
octonion multiplication acting diagonally on blocks of 2^p coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import sigperm
from .algebra import UNIT_LETTERS, left_mult_matrix
from .sigperm import SignedPerm, block_ext, conj_base, conj_total, diag_ext
from .spin9 import complex_structure, complex_structure_pair, generator


@dataclass(frozen=True)
class Decomposition:
    """m = (2k+1) * 2^p * 16^q with 0 <= p <= 3; unique for every m."""

    m: int
    k: int
    p: int
    q: int


def decompose(m: int) -> Decomposition:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    v = 0
    odd = m
    while odd % 2 == 0:
        odd //= 2
        v += 1
    q, p = divmod(v, 4)
    return Decomposition(m=m, k=(odd - 1) // 2, p=p, q=q)


def sigma(m: int) -> int:
    """Maximal number of linearly independent tangent fields on S^(m-1)."""
    d = decompose(m)
    return 2 ** d.p + 8 * d.q - 1


@lru_cache(maxsize=None)
def _level_core(t: int, alpha: int) -> SignedPerm:
    # Chat_t @ block(J_alpha, 16^(t-1)), dimension 16^t.
    return conj_total(t) * block_ext(complex_structure(alpha), 16 ** (t - 1))


def level_field(q: int, t: int, alpha: int) -> SignedPerm:
    """Level-t field on R^(16^q); for t = 1 just diag(J_alpha, 16^(q-1))."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if not 1 <= t <= q:
        raise ValueError(f"level t must be in 1..q={q}, got {t}")
    if not 1 <= alpha <= 8:
        raise ValueError(f"alpha must be in 1..8, got {alpha}")
    return diag_ext(_level_core(t, alpha), 16 ** (q - t))


#: imaginary-unit labels of the left-multiplication fields, per p
G_SET_UNITS = {p: UNIT_LETTERS[1 : 2 ** p] for p in range(4)}


def g_set(p: int) -> list[SignedPerm]:
    """Left multiplications by the imaginary units of C, H or O; empty for p=0."""
    if not 0 <= p <= 3:
        raise ValueError(f"p must be in 0..3, got {p}")
    return [left_mult_matrix(p, alpha) for alpha in range(1, 2 ** p)]


@lru_cache(maxsize=None)
def _lmult_conj(p: int, q: int) -> SignedPerm:
    # diag(Chat_q @ C_q, 2^p), dimension 2^p * 16^q.
    return diag_ext(conj_total(q) * conj_base(q), 2 ** p)


def lmult_field(k: int, p: int, q: int, g: SignedPerm) -> SignedPerm:
    """Left-multiplication field on R^((2k+1) 2^p 16^q), for g in g_set(p)."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if not 0 <= p <= 3:
        raise ValueError(f"p must be in 0..3, got {p}")
    if g.dim != 2 ** p:
        raise ValueError(f"g has dimension {g.dim}, expected 2^p = {2 ** p}")
    core = _lmult_conj(p, q) * block_ext(g, 16 ** q)
    return diag_ext(core, 2 * k + 1)


@dataclass(frozen=True)
class Field:
    """One tangent field: construction label plus its matrix."""

    label: str
    matrix: SignedPerm


@dataclass(frozen=True)
class FieldSystem:
    """Ordered system of sigma(m) anticommuting complex structures."""

    m: int
    fields: tuple[Field, ...]

    def __len__(self) -> int:
        return len(self.fields)

    def matrices(self) -> list[SignedPerm]:
        return [f.matrix for f in self.fields]

    def labels(self) -> list[str]:
        return [f.label for f in self.fields]


def build_system(m: int) -> FieldSystem:
    """Maximal system on S^(m-1): sigma(m) fields, empty for odd m.

    Ordering is fixed: level fields by (t, alpha) ascending, then the
    left-multiplication fields in unit order i, j, k, e, f, g, h.
    """
    d = decompose(m)
    if m % 2:
        return FieldSystem(m, ())
    fields: list[Field] = []
    if d.q >= 1:
        for t in range(1, d.q + 1):
            copies = m // 16 ** t
            for alpha in range(1, 9):
                fields.append(
                    Field(
                        f"B({t},{alpha})",
                        diag_ext(_level_core(t, alpha), copies),
                    )
                )
        for unit, g in zip(G_SET_UNITS[d.p], g_set(d.p)):
            fields.append(Field(f"L({unit})", lmult_field(d.k, d.p, d.q, g)))
    else:
        copies = m // 2 ** d.p
        for unit, g in zip(G_SET_UNITS[d.p], g_set(d.p)):
            fields.append(Field(f"L({unit})", diag_ext(g, copies)))
    assert len(fields) == sigma(m)
    return FieldSystem(m, tuple(fields))


def pair_system(m: int, beta: int) -> FieldSystem:
    """Alternative maximal systems from the compositions I_alpha I_beta.

    For m = 16 the eight fields are I_alpha I_beta, alpha != beta; beta = 9
    recovers build_system(16).  For m = 256 these act diagonally (level 1)
    and, conjugated, blockwise (level 2).  The level-2 conjugation is the
    diagonal extension of the symmetric generator I_beta: a level-1 field
    anticommutes with a conjugated block field exactly when the conjugation
    anticommutes with every I_alpha I_beta, which singles out I_beta.  For
    beta = 9 this is the plain sign-flip conjugation of build_system.
    """
    if m not in (16, 256):
        raise ValueError(f"pair systems are defined for m in {{16, 256}}, got {m}")
    if not 1 <= beta <= 9:
        raise ValueError(f"beta must be in 1..9, got {beta}")
    pairs = [
        (alpha, _signed_pair(alpha, beta)) for alpha in range(1, 10) if alpha != beta
    ]
    fields = []
    if m == 16:
        fields.extend(Field(f"B(1,{a})", j) for a, j in pairs)
    else:
        fields.extend(Field(f"B(1,{a})", diag_ext(j, 16)) for a, j in pairs)
        conj = diag_ext(generator(beta), 16)
        fields.extend(
            Field(f"B(2,{a})", conj * block_ext(j, 16)) for a, j in pairs
        )
    return FieldSystem(m, tuple(fields))


def _signed_pair(alpha: int, beta: int) -> SignedPerm:
    if alpha < beta:
        return complex_structure_pair(alpha, beta)
    return -complex_structure_pair(beta, alpha)


def system_to_json(sys: FieldSystem) -> dict:
    d = decompose(sys.m)
    return {
        "m": sys.m,
        "sigma": sigma(sys.m),
        "decomposition": {"k": d.k, "p": d.p, "q": d.q},
        "fields": [
            {"label": f.label, "matrix": sigperm.to_sparse_json(f.matrix)}
            for f in sys.fields
        ],
    }


def system_from_json(obj: dict) -> FieldSystem:
    fields = tuple(
        Field(f["label"], sigperm.from_sparse_json(f["matrix"]))
        for f in obj["fields"]
    )
    return FieldSystem(obj["m"], fields)
