"""Finite groups given extensionally by their Cayley tables.

Element 0 is always the identity.  Subsets of a group (supports, subgroups,
cosets) are bitmasks: bit ``i`` set means element ``i`` is a member.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

MAX_ORDER = 10_000
MAX_SYM_DEGREE = 5
FULL_ASSOC_CHECK = 32


class GroupSpecError(ValueError):
    """Unparseable or out-of-range group descriptor."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    n: int
    mul: np.ndarray
    inv: np.ndarray
    labels: tuple[str, ...]
    kind: str
    identity: int = 0
    _rows: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)
        object.__setattr__(self, "_rows", tuple(tuple(int(x) for x in row) for row in self.mul))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.kind!r}, order={self.n})"

    @property
    def order(self) -> int:
        return self.n

    def op(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def orders(self) -> tuple[int, ...]:
        return tuple(_order_of(self, i) for i in range(self.n))

    def check(self, full_limit: int = FULL_ASSOC_CHECK, samples: int = 2000) -> None:
        """Raise ``AssertionError`` if any group axiom fails."""
        n, m = self.n, self.mul
        idx = np.arange(n)
        assert m.shape == (n, n)
        assert self.identity == 0
        assert np.array_equal(m[0], idx) and np.array_equal(m[:, 0], idx), "identity"
        assert np.all(m[idx, self.inv] == 0), "inverse"
        assert np.all(np.sort(m, axis=1) == idx), "rows not permutations"
        assert np.all(np.sort(m, axis=0) == idx[:, None]), "columns not permutations"
        if n <= full_limit:
            assert np.array_equal(m[m, :], m[:, m]), "associativity"
        else:
            rng = np.random.default_rng(n)
            a, b, c = rng.integers(0, n, size=(3, samples))
            assert np.array_equal(m[m[a, b], c], m[a, m[b, c]]), "associativity (sampled)"


def _order_of(g: FiniteGroup, i: int) -> int:
    k, x = 1, i
    while x != g.identity:
        x = g.op(x, i)
        k += 1
    return k


def _from_table(table, labels, kind: str) -> FiniteGroup:
    n = len(labels)
    dtype = np.int16 if n < 2**15 else np.int32
    mul = np.asarray(table, dtype=dtype)
    inv = np.argmax(mul == 0, axis=1).astype(dtype)
    g = FiniteGroup(n=n, mul=mul, inv=inv, labels=tuple(labels), kind=kind)
    g.check()
    return g


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError("cyclic:n needs n >= 1")
    idx = np.arange(n)
    labels = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return _from_table((idx[:, None] + idx[None, :]) % n, labels, f"cyclic:{n}")


def dihedral(m: int) -> FiniteGroup:
    """Order ``2m``: index ``i`` is r^i and ``m + i`` is s r^i."""
    if m < 2:
        raise GroupSpecError("dihedral:m needs m >= 2")
    n = 2 * m
    table = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        sx, ax = divmod(x, m)
        for y in range(n):
            sy, ay = divmod(y, m)
            # r^a s = s r^-a
            a = (-ax + ay) % m if sy else (ax + ay) % m
            table[x, y] = ((sx + sy) % 2) * m + a
    rot = ["1", "r"] + [f"r^{i}" for i in range(2, m)]
    labels = rot + ["s" if i == 0 else f"s{rot[i]}" for i in range(m)]
    return _from_table(table, labels, f"dihedral:{m}")


def _cycles(p: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    seen, out = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return tuple(out)


def _cycle_label(p: tuple[int, ...]) -> str:
    cyc = _cycles(p)
    if not cyc:
        return "(1)"
    return "".join("(" + "".join(str(x + 1) for x in c) + ")" for c in cyc)


def symmetric(m: int) -> FiniteGroup:
    """S_m, ordered by number of transpositions needed, then cycle notation.

    For S_3 this gives (1), (12), (13), (23), (123), (132).  Products are
    read left to right: ``x^(pq) = (x^p)^q``.
    """
    if m < 1:
        raise GroupSpecError("sym:m needs m >= 1")
    if m > MAX_SYM_DEGREE:
        raise GroupSpecError(f"sym:{m} exceeds the supported degree {MAX_SYM_DEGREE}")
    perms = list(itertools.permutations(range(m)))
    perms.sort(key=lambda p: (m - len(_cycles(p)) - sum(1 for i in range(m) if p[i] == i), _cycles(p)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(q[p[x]] for x in range(m))] for q in perms] for p in perms]
    return _from_table(table, [_cycle_label(p) for p in perms], f"sym:{m}")


def direct_product(*factors: FiniteGroup) -> FiniteGroup:
    """Element ``(a, b)`` has index ``a * |B| + b``; more factors nest the same way."""
    if len(factors) < 2:
        raise GroupSpecError("product needs at least two factors")
    order = math.prod(f.n for f in factors)
    if order > MAX_ORDER:
        raise GroupSpecError(f"product order {order} exceeds {MAX_ORDER}")
    g = factors[0]
    mul, labels = g.mul.astype(np.int64), [[lab] for lab in g.labels]
    for h in factors[1:]:
        nh = h.n
        hm = h.mul.astype(np.int64)
        mul = (mul[:, None, :, None] * nh + hm[None, :, None, :]).reshape(mul.shape[0] * nh, -1)
        labels = [a + [b] for a in labels for b in h.labels]
    kind = "product:" + ",".join(f.kind for f in factors)
    return _from_table(mul, ["(" + ",".join(lab) + ")" for lab in labels], kind)


def _split_product(body: str) -> list[str]:
    """Split ``cyclic:3,dihedral:4,...`` into factor descriptors."""
    parts = [p.strip() for p in body.split(",")]
    if any(not p for p in parts):
        raise GroupSpecError(f"empty factor in product:{body}")
    return parts


def make_group(spec: str) -> FiniteGroup:
    """Parse a descriptor: ``cyclic:n``, ``dihedral:m``, ``sym:m`` or ``product:A,B,...``."""
    spec = spec.strip()
    head, sep, body = spec.partition(":")
    if not sep:
        raise GroupSpecError(f"malformed group descriptor {spec!r}")
    if head == "product":
        factors = _split_product(body)
        heads = [f.partition(":")[0] for f in factors]
        if any(h == "product" for h in heads):
            raise GroupSpecError("nested product: list all factors after one 'product:'")
        if len(factors) < 2:
            raise GroupSpecError("product needs at least two factors")
        groups = [make_group(f) for f in factors]
        return direct_product(*groups)
    try:
        k = int(body)
    except ValueError:
        raise GroupSpecError(f"malformed group descriptor {spec!r}") from None
    if head == "cyclic":
        if k > MAX_ORDER:
            raise GroupSpecError(f"cyclic:{k} exceeds order {MAX_ORDER}")
        return cyclic(k)
    if head == "dihedral":
        if 2 * k > MAX_ORDER:
            raise GroupSpecError(f"dihedral:{k} exceeds order {MAX_ORDER}")
        return dihedral(k)
    if head == "sym":
        return symmetric(k)
    raise GroupSpecError(f"unknown group family {head!r}")


# -- element and subset queries ------------------------------------------------


def element_order(g: FiniteGroup, i: int) -> int:
    if not 0 <= i < g.n:
        raise IndexError(f"element {i} out of range for group of order {g.n}")
    return g.orders[i]


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members(mask: int) -> list[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Subset:
    group: FiniteGroup
    members: int

    def __post_init__(self):
        if self.members < 0 or self.members >> self.group.n:
            raise ValueError("subset has members outside the group")

    @classmethod
    def of(cls, group: FiniteGroup, indices) -> Subset:
        return cls(group, mask_of(indices))

    def indices(self) -> list[int]:
        return members(self.members)

    def __len__(self) -> int:
        return self.members.bit_count()

    def __contains__(self, i: int) -> bool:
        return bool(self.members >> i & 1)


def is_subgroup(s: Subset) -> bool:
    g, idx = s.group, s.indices()
    if not idx:
        return False
    m = s.members
    for a in idx:
        if not m >> g.inverse(a) & 1:
            return False
        row = g._rows[a]
        for b in idx:
            if not m >> row[b] & 1:
                return False
    return True


def right_coset(g: FiniteGroup, mask: int, x: int) -> int:
    """The coset ``S x`` as a bitmask."""
    return mask_of(g.op(s, x) for s in members(mask))


def coset_decomposition(s: Subset) -> list[Subset]:
    """Right cosets ``S g``: ``S`` first, then by smallest contained index."""
    if not is_subgroup(s):
        raise ValueError("coset decomposition needs a subgroup")
    g = s.group
    out, covered = [], 0
    for x in range(g.n):
        if covered >> x & 1:
            continue
        c = right_coset(g, s.members, x)
        out.append(Subset(g, c))
        covered |= c
    return out


def index_of(s: Subset) -> int:
    return s.group.n // len(s)


def involutions(g: FiniteGroup) -> Subset:
    return Subset(g, mask_of(i for i, o in enumerate(g.orders) if o == 2))


def generated_subgroup(g: FiniteGroup, gens) -> int:
    """Bitmask of the subgroup generated by ``gens``."""
    mask = 1 << g.identity
    frontier = [g.identity]
    gens = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for x in gens:
                b = g.op(a, x)
                if not mask >> b & 1:
                    mask |= 1 << b
                    nxt.append(b)
        frontier = nxt
    return mask


def subgroups(g: FiniteGroup) -> list[int]:
    """All subgroups as bitmasks, sorted by (order, mask).

    Joins of cyclic subgroups, closed until nothing new appears; meant for
    groups of a few hundred elements at most.
    """
    cyclic_subs = {generated_subgroup(g, [i]) for i in range(g.n)}
    found = set(cyclic_subs)
    frontier = set(cyclic_subs)
    while frontier:
        new = set()
        for h in frontier:
            for c in cyclic_subs:
                if c & ~h:
                    j = generated_subgroup(g, members(h | c))
                    if j not in found:
                        new.add(j)
        found |= new
        frontier = new
    return sorted(found, key=lambda m: (m.bit_count(), m))
