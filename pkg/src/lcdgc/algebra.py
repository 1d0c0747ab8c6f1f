"""The binary group algebra F2[G].

Coefficients are bits, so an element is just its support (a bitmask over
group indices), addition is XOR and multiplication is convolution through
the Cayley table.  With the group's fixed element order, ``to_vector`` is the
coordinate isomorphism onto F2^n; for ``cyclic:n`` that vector is also the
coefficient vector of the matching polynomial mod x^n - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2 import BitMatrix
from .groups import FiniteGroup, mask_of, members


@dataclass(frozen=True)
class AlgebraElement:
    group: FiniteGroup
    support: int = 0

    def __post_init__(self):
        if self.support < 0 or self.support >> self.group.n:
            raise ValueError("support has indices outside the group")

    @classmethod
    def of(cls, group: FiniteGroup, indices) -> AlgebraElement:
        return cls(group, mask_of(indices))

    @classmethod
    def zero(cls, group: FiniteGroup) -> AlgebraElement:
        return cls(group, 0)

    @classmethod
    def one(cls, group: FiniteGroup) -> AlgebraElement:
        return cls(group, 1 << group.identity)

    def indices(self) -> list[int]:
        return members(self.support)

    @property
    def weight(self) -> int:
        return self.support.bit_count()

    def __bool__(self) -> bool:
        return self.support != 0

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return add(self, other)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return mul(self, other)

    def label(self) -> str:
        if not self.support:
            return "0"
        return " + ".join(self.group.labels[i] for i in self.indices())


def _same_group(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.group is not b.group:
        raise ValueError("elements belong to different group algebras")


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _same_group(a, b)
    return AlgebraElement(a.group, a.support ^ b.support)


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _same_group(a, b)
    rows = a.group._rows
    bs = b.indices()
    acc = 0
    for h in a.indices():
        row = rows[h]
        for k in bs:
            acc ^= 1 << row[k]
    return AlgebraElement(a.group, acc)


def adjoint(a: AlgebraElement) -> AlgebraElement:
    inv = a.group.inv
    return AlgebraElement(a.group, mask_of(int(inv[i]) for i in a.indices()))


def is_idempotent(e: AlgebraElement) -> bool:
    return mul(e, e) == e


def is_self_adjoint(e: AlgebraElement) -> bool:
    return adjoint(e) == e


def is_lcd_idempotent(e: AlgebraElement) -> bool:
    """``e^2 = e`` and ``e`` equals its adjoint; such ``e`` generate the LCD group codes."""
    return is_self_adjoint(e) and is_idempotent(e)


def to_vector(a: AlgebraElement) -> BitMatrix:
    return BitMatrix.from_ints([a.support], a.group.n)


def inner_product(a: AlgebraElement, b: AlgebraElement) -> int:
    _same_group(a, b)
    return (a.support & b.support).bit_count() & 1


# -- batched predicates used by the enumerations -------------------------------


def supports_to_bits(supports, n: int) -> np.ndarray:
    """``(N, n)`` uint8 matrix whose row ``r`` is the support ``supports[r]``."""
    s = np.asarray(supports, dtype=np.int64)
    return ((s[:, None] >> np.arange(n)) & 1).astype(np.uint8)


def bits_to_supports(bits: np.ndarray) -> list[int]:
    n = bits.shape[1]
    weights = [1 << i for i in range(n)]
    return [sum(w for w, b in zip(weights, row) if b) for row in bits.tolist()]


def batch_square(group: FiniteGroup, bits: np.ndarray) -> np.ndarray:
    """Square every row of ``bits`` in F2[G] at once.

    ``e^2 = sum_{h in supp e} h e`` and ``(h e)_g = e_{h^-1 g}``.
    """
    mul_t, inv = group.mul, group.inv
    sq = np.zeros_like(bits)
    for h in range(group.n):
        sel = bits[:, h : h + 1]
        if not sel.any():
            continue
        sq ^= sel & bits[:, mul_t[inv[h]]]
    return sq


def batch_lcd_mask(group: FiniteGroup, bits: np.ndarray) -> np.ndarray:
    """Boolean mask of rows that are self-adjoint idempotents."""
    selfadj = np.all(bits[:, group.inv] == bits, axis=1)
    out = np.zeros(bits.shape[0], dtype=bool)
    if selfadj.any():
        cand = bits[selfadj]
        out[selfadj] = np.all(batch_square(group, cand) == cand, axis=1)
    return out


def _scan(group: FiniteGroup, atoms: list[int], chunk: int) -> list[int]:
    """Supports among all unions of the disjoint ``atoms`` that pass the LCD predicate."""
    atom_bits = supports_to_bits(atoms, group.n) if atoms else np.zeros((0, group.n), np.uint8)
    a = len(atoms)
    found: list[int] = []
    for start in range(0, 1 << a, chunk):
        combos = np.arange(start, min(start + chunk, 1 << a), dtype=np.int64)
        sel = ((combos[:, None] >> np.arange(a)) & 1).astype(np.uint8)
        bits = (sel @ atom_bits).astype(np.uint8) if a else np.zeros((len(combos), group.n), np.uint8)
        hit = batch_lcd_mask(group, bits)
        found.extend(bits_to_supports(bits[hit]))
    return sorted(found)


def exhaustive_lcd_supports(group: FiniteGroup, chunk: int = 1 << 15) -> list[int]:
    """Every support in all 2^n subsets of G that is a self-adjoint idempotent."""
    return _scan(group, [1 << i for i in range(group.n)], chunk)


def inverse_atoms(group: FiniteGroup) -> list[int]:
    """Minimal inverse-closed subsets: ``{h}`` for ``h = h^-1`` and ``{h, h^-1}`` otherwise."""
    atoms, seen = [], 0
    for h in range(group.n):
        if seen >> h & 1:
            continue
        atom = (1 << h) | (1 << int(group.inv[h]))
        seen |= atom
        atoms.append(atom)
    return atoms


def adjoint_filtered_lcd_supports(group: FiniteGroup, chunk: int = 1 << 15) -> list[int]:
    """Same result as the exhaustive scan, searching only inverse-closed supports."""
    return _scan(group, inverse_atoms(group), chunk)
