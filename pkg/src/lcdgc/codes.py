"""Group codes ``e F2[G]``: construction, LCD tests, parameters, enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import gf2
from .algebra import (
    AlgebraElement,
    add,
    adjoint_filtered_lcd_supports,
    exhaustive_lcd_supports,
    inverse_atoms,
    is_lcd_idempotent,
    mul,
)
from .cyclotomic import cosets
from .gf2 import BitMatrix
from .groups import FiniteGroup, Subset, cyclic, index_of, is_subgroup, mask_of, members

MAX_DISTANCE_DIM = 20
MAX_EXHAUSTIVE_ORDER = 15
MAX_ATOMS = 24
MAX_POWER_OF_TWO_EXPONENT = 4


class CapacityError(RuntimeError):
    """A computation would exceed the configured enumeration bound."""


@dataclass(eq=False)
class GroupCode:
    group: FiniteGroup
    idempotent: AlgebraElement
    gen: BitMatrix
    _d: int | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def k(self) -> int:
        return self.gen.rows

    @property
    def support(self) -> int:
        return self.idempotent.support

    @property
    def lcd(self) -> bool:
        return is_lcd_gram(self)

    @property
    def d(self) -> int:
        if self._d is None:
            self._d = min_distance(self)
        return self._d


def build_code(g: FiniteGroup, e: AlgebraElement) -> GroupCode:
    """Right ideal ``e F2[G]``, spanned by the translates ``e h``."""
    if e.group is not g:
        raise ValueError("generator does not belong to this group algebra")
    rows = [mul(e, AlgebraElement(g, 1 << h)).support for h in range(g.n)]
    gen = gf2.row_basis(BitMatrix.from_ints(rows, g.n))
    return GroupCode(g, e, gen)


def is_lcd_gram(c: GroupCode) -> bool:
    """LCD iff the Gram matrix ``G G^T`` of a generator matrix is invertible."""
    if c.k == 0:
        return True
    return gf2.is_invertible(gf2.multiply(c.gen, gf2.transpose(c.gen)))


def dual_generator(c: GroupCode) -> BitMatrix:
    return gf2.nullspace_basis(c.gen)


def is_lcd_intersection(c: GroupCode) -> bool:
    """LCD iff the code meets its dual only in zero."""
    return gf2.row_space_intersection_dim(c.gen, dual_generator(c)) == 0


def dual_idempotent(e: AlgebraElement) -> AlgebraElement:
    """``1 - e``, which generates the dual of ``e F2[G]`` when ``e`` is an LCD idempotent."""
    if not is_lcd_idempotent(e):
        raise ValueError("dual_idempotent needs e with e^2 = e = adjoint(e)")
    return add(AlgebraElement.one(e.group), e)


def min_distance(c: GroupCode) -> int:
    """Minimum nonzero weight, walking all 2^k - 1 codewords in Gray-code order."""
    if c.k == 0:
        raise ValueError("the zero code has no minimum distance")
    if c.k > MAX_DISTANCE_DIM:
        raise CapacityError(
            f"dimension {c.k} exceeds {MAX_DISTANCE_DIM}; minimum distance is not computed"
        )
    rows = c.gen.to_ints()
    best = c.n
    word = 0
    for i in range(1, 1 << c.k):
        word ^= rows[(i & -i).bit_length() - 1]
        w = word.bit_count()
        if w < best:
            best = w
            if best == 1:
                break
    return best


# -- structure predictions -----------------------------------------------------

SUBGROUP = "support is a subgroup"
SUBGROUP_MINUS_IDENTITY = "support plus identity is a subgroup"
NO_STRUCTURE = "none"


@dataclass(frozen=True)
class StructureReport:
    case: str
    computed_k: int
    computed_d: int | None
    predicted_k: int | None = None
    predicted_d: int | None = None

    @property
    def consistent(self) -> bool | None:
        """Whether predictions match; ``None`` when nothing is predicted or d is unknown."""
        if self.predicted_k is None:
            return None
        if self.computed_d is None:
            return None
        return self.predicted_k == self.computed_k and self.predicted_d == self.computed_d


def _distance_or_none(c: GroupCode) -> int | None:
    if c.k == 0 or c.k > MAX_DISTANCE_DIM:
        return None
    return c.d


def structural_parameters(c: GroupCode) -> StructureReport:
    g, m = c.group, c.support
    one = 1 << g.identity
    d = _distance_or_none(c)
    if m and is_subgroup(Subset(g, m)):
        return StructureReport(SUBGROUP, c.k, d, index_of(Subset(g, m)), m.bit_count())
    if m and not m & one and is_subgroup(Subset(g, m | one)):
        return StructureReport(SUBGROUP_MINUS_IDENTITY, c.k, d, g.n - index_of(Subset(g, m | one)), 2)
    return StructureReport(NO_STRUCTURE, c.k, d)


@dataclass(frozen=True)
class MdsReport:
    n: int
    k: int
    d: int
    is_mds: bool
    is_maximal_ideal: bool | None
    maximal_scenario: bool
    even_order_exclusion: bool
    consistent: bool


def mds_report(c: GroupCode) -> MdsReport:
    """MDS status next to the maximal-ideal and even-order statements.

    ``maximal_scenario``: the code is LCD, the identity is not in the support
    and support plus identity is a subgroup.  There, maximal means k = n - 1,
    and maximal should coincide with MDS.  ``even_order_exclusion``: |G| even,
    the code is LCD, proper and nonzero, and the support (or support plus
    identity) is a subgroup; such a code should not be MDS.
    """
    d = c.d
    g, m = c.group, c.support
    is_mds = d == c.n - c.k + 1
    case = structural_parameters(c).case if m else NO_STRUCTURE
    lcd = is_lcd_gram(c)
    scenario = lcd and case == SUBGROUP_MINUS_IDENTITY
    maximal = (c.k == c.n - 1) if scenario else None
    exclusion = lcd and g.n % 2 == 0 and 0 < c.k < c.n and case != NO_STRUCTURE
    ok = True
    if scenario and maximal != is_mds:
        ok = False
    if exclusion and is_mds:
        ok = False
    return MdsReport(c.n, c.k, d, is_mds, maximal, scenario, exclusion, ok)


# -- enumeration ---------------------------------------------------------------

COSET_UNION = "coset-union"
EXHAUSTIVE = "exhaustive"
ADJOINT_FILTERED = "adjoint-filtered"
METHODS = (COSET_UNION, EXHAUSTIVE, ADJOINT_FILTERED)


def _is_cyclic_descriptor(g: FiniteGroup) -> bool:
    return g.kind.startswith("cyclic:")


def coset_union_supports(g: FiniteGroup) -> list[int]:
    """Unions of negation-closed coset blocks, mapped to exponents of ``g``."""
    if not _is_cyclic_descriptor(g) or g.n % 2 == 0:
        raise ValueError("coset-union enumeration needs an odd-order cyclic group")
    part = cosets(g.n)
    blocks = [mask_of(part.block_residues(b)) for b in range(len(part.blocks))]
    out = []
    for sel in range(1 << len(blocks)):
        s = 0
        for b, mask in enumerate(blocks):
            if sel >> b & 1:
                s |= mask
        out.append(s)
    return sorted(out)


def lcd_supports(g: FiniteGroup, method: str = ADJOINT_FILTERED) -> list[int]:
    """Supports of every ``e`` with ``e^2 = e = adjoint(e)``, sorted as integers."""
    if method == COSET_UNION:
        return coset_union_supports(g)
    if method == EXHAUSTIVE:
        if g.n > MAX_EXHAUSTIVE_ORDER:
            raise CapacityError(f"exhaustive scan limited to order <= {MAX_EXHAUSTIVE_ORDER}, got {g.n}")
        return exhaustive_lcd_supports(g)
    if method == ADJOINT_FILTERED:
        a = len(inverse_atoms(g))
        if a > MAX_ATOMS:
            raise CapacityError(f"{a} inverse-closed atoms exceed the limit {MAX_ATOMS}")
        return adjoint_filtered_lcd_supports(g)
    raise ValueError(f"unknown enumeration method {method!r}; choose from {', '.join(METHODS)}")


def default_method(g: FiniteGroup) -> str:
    if _is_cyclic_descriptor(g) and g.n % 2 == 1:
        return COSET_UNION
    return ADJOINT_FILTERED


def enumerate_lcd_codes(g: FiniteGroup, method: str | None = None) -> list[GroupCode]:
    """All LCD group codes of ``g``, including the zero code (empty support)."""
    method = method or default_method(g)
    return [build_code(g, AlgebraElement(g, s)) for s in lcd_supports(g, method)]


# -- cyclic codes of length 2^a --------------------------------------------------


@dataclass(frozen=True)
class PowerOfTwoReport:
    a: int
    n: int
    idempotent_supports: tuple[int, ...]
    lcd_generator_exponents: tuple[int, ...]

    @property
    def only_trivial(self) -> bool:
        return set(self.idempotent_supports) <= {0, 1} and set(self.lcd_generator_exponents) <= {0, self.n}


def _binomial_parity_row(i: int, n: int) -> int:
    """Coefficients of (1 + x)^i over F2 as a bitmask (Lucas: C(i, j) odd iff j & ~i == 0)."""
    return mask_of(j for j in range(i + 1) if j & ~i == 0) if i < n else 0


def power_of_two_length_check(a: int) -> PowerOfTwoReport:
    """All LCD cyclic codes of length 2^a, found two ways.

    The idempotent scan covers every ``e`` in F2[Z_{2^a}].  Independently,
    every cyclic code of length 2^a is generated by ``(x + 1)^i``; each one
    is built and tested with the Gram criterion.
    """
    if not 1 <= a <= MAX_POWER_OF_TWO_EXPONENT:
        raise ValueError(f"a must be in 1..{MAX_POWER_OF_TWO_EXPONENT}, got {a}")
    n = 1 << a
    g = cyclic(n)
    supports = exhaustive_lcd_supports(g)
    lcd_exponents = []
    for i in range(n + 1):
        c = build_code(g, AlgebraElement(g, _binomial_parity_row(i, n)))
        if c.k != n - i:
            raise AssertionError(f"<(x+1)^{i}> has dimension {c.k}, expected {n - i}")
        if is_lcd_gram(c):
            lcd_exponents.append(i)
    return PowerOfTwoReport(a, n, tuple(supports), tuple(lcd_exponents))


def support_labels(g: FiniteGroup, support: int) -> list[str]:
    return [g.labels[i] for i in members(support)]
