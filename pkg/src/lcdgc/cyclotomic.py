"""2-cyclotomic cosets mod odd n and the LCD cyclic-code counts built on them.

A support in F2[Z_n] (n odd) is an idempotent exactly when it is closed under
doubling, and self-adjoint exactly when it is closed under negation.  So the
LCD idempotents are the unions of *blocks*: cosets that are negation-closed
on their own, or pairs ``C, -C`` otherwise.  ``count_lcd_cyclic`` counts
those directly; the closed forms keyed by the number of cosets ``t`` are
evaluated alongside for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sympy import factorint

from .algebra import exhaustive_lcd_supports
from .groups import cyclic

EXHAUSTIVE_LIMIT = 16
MAX_ORACLE_N = 15


def _require_odd(n: int, what: str = "n") -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"{what} must be an odd positive integer, got {n}")


@dataclass(frozen=True)
class CosetPartition:
    n: int
    cosets: tuple[tuple[int, ...], ...]
    inverse_closed: tuple[bool, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return len(self.cosets)

    @property
    def t1(self) -> int:
        return sum(self.inverse_closed)

    def coset_of(self, r: int) -> int:
        """Index of the coset containing residue ``r``."""
        r %= self.n
        for i, c in enumerate(self.cosets):
            if r in c:
                return i
        raise AssertionError("cosets do not cover Z_n")

    def block_residues(self, b: int) -> tuple[int, ...]:
        return tuple(sorted(r for i in self.blocks[b] for r in self.cosets[i]))


def cosets(n: int) -> CosetPartition:
    _require_odd(n)
    seen: set[int] = set()
    out = []
    for i in range(n):
        if i in seen:
            continue
        orbit, x = [], i
        while x not in orbit:
            orbit.append(x)
            x = 2 * x % n
        seen.update(orbit)
        out.append(tuple(sorted(orbit)))
    where = {r: k for k, c in enumerate(out) for r in c}
    closed = tuple((n - c[0]) % n in c for c in out)
    blocks, used = [], set()
    for k, c in enumerate(out):
        if k in used:
            continue
        partner = where[(n - c[0]) % n]
        blk = (k,) if partner == k else (k, partner)
        used.update(blk)
        blocks.append(blk)
    return CosetPartition(n=n, cosets=tuple(out), inverse_closed=closed, blocks=tuple(blocks))


def power_of_two_plus_one_divisor(d: int) -> bool:
    """Whether ``d | 2^m + 1`` for some ``m >= 1``.

    ``2^m mod d`` is periodic with period ord_d(2), so one period decides it.
    """
    _require_odd(d, "d")
    x = 2 % d
    for _ in range(d):
        if (x + 1) % d == 0:
            return True
        if x == 1 % d:
            return False
        x = 2 * x % d
    return False


# -- counting ----------------------------------------------------------------

DIVIDES = "n divides 2^j+1"
PRIME_POWER = "n = p^s"
PQ_MIXED = "n = pq, exactly one prime divides some 2^m+1"
PQ_NEITHER = "n = pq, neither prime divides any 2^m+1"
GENERAL = "general"
GENERAL_LITERAL = "general, t1 from the U-set"


@dataclass(frozen=True)
class CountResult:
    n: int
    count: int
    theorem_path: str
    t: int
    t1: int
    blocks: int
    closed_forms: dict[str, int] = field(default_factory=dict)


def _closed_form(path: str, t: int) -> int | None:
    if path == DIVIDES:
        return 2**t - 1
    if path in (PRIME_POWER, PQ_NEITHER):
        return 2 ** ((t + 1) // 2) - 1 if t % 2 else None
    if path == PQ_MIXED:
        return 2 ** (t // 2 + 1) - 1 if t % 2 == 0 else None
    return None


def theorem_path(n: int) -> str:
    """The most specific counting theorem whose hypotheses ``n`` satisfies."""
    _require_odd(n)
    if power_of_two_plus_one_divisor(n):
        return DIVIDES
    f = factorint(n)
    if len(f) == 1:
        return PRIME_POWER
    if len(f) == 2 and all(e == 1 for e in f.values()):
        p, q = f
        hits = power_of_two_plus_one_divisor(p) + power_of_two_plus_one_divisor(q)
        if hits == 1:
            return PQ_MIXED
        if hits == 0:
            return PQ_NEITHER
    return GENERAL


def count_lcd_cyclic(n: int) -> CountResult:
    """Number of nonzero LCD idempotents of F2[Z_n], i.e. 2^(#blocks) - 1."""
    part = cosets(n)
    path = theorem_path(n)
    count = 2 ** len(part.blocks) - 1
    forms: dict[str, int] = {}
    cf = _closed_form(path, part.t)
    if cf is not None:
        forms[path] = cf
    if path != DIVIDES:
        literal = paper_general_formula_audit(n).paper_count
        if literal is not None:
            forms[GENERAL_LITERAL] = literal
    return CountResult(n, count, path, part.t, part.t1, len(part.blocks), forms)


def u_set(n: int) -> list[int]:
    """``{d1 : n = d1 d2, d1 never divides 2^l+1, d2 divides some 2^m+1}``."""
    _require_odd(n)
    out = []
    for d1 in range(1, n + 1):
        if n % d1:
            continue
        if not power_of_two_plus_one_divisor(d1) and power_of_two_plus_one_divisor(n // d1):
            out.append(d1)
    return out


@dataclass(frozen=True)
class AuditResult:
    n: int
    u_set: tuple[int, ...]
    t: int
    paper_t1: int
    direct_t1: int
    paper_count: int | None
    direct_count: int
    oracle_count: int | None

    @property
    def agrees(self) -> bool:
        return self.paper_count == self.direct_count


def oracle_count(n: int) -> int:
    """Nonzero LCD idempotents of F2[Z_n] by a scan over all 2^n supports."""
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive oracle limited to n <= {EXHAUSTIVE_LIMIT}")
    return sum(1 for s in exhaustive_lcd_supports(cyclic(n)) if s)


def paper_general_formula_audit(n: int, with_oracle: bool = False) -> AuditResult:
    """Evaluate 2^((t + t1)/2) - 1 with t1 from the U-set and with t1 counted directly.

    Only defined when ``n`` divides no ``2^m + 1``.  Cosets ``C_i`` for
    ``i`` in U are taken mod n, so ``d1 = n`` names ``C_0``.
    """
    _require_odd(n)
    if power_of_two_plus_one_divisor(n):
        raise ValueError(f"n={n} divides some 2^m+1; the general counting formula assumes it does not")
    part = cosets(n)
    u = u_set(n)
    s_prime = {part.coset_of(d1) for d1 in u}
    paper_t1 = len(s_prime)
    # an odd t + t1 leaves the exponent fractional: no count
    paper_count = 2 ** ((part.t + paper_t1) // 2) - 1 if (part.t + paper_t1) % 2 == 0 else None
    oracle = oracle_count(n) if with_oracle and n <= EXHAUSTIVE_LIMIT else None
    return AuditResult(
        n=n,
        u_set=tuple(u),
        t=part.t,
        paper_t1=paper_t1,
        direct_t1=part.t1,
        paper_count=paper_count,
        direct_count=2 ** len(part.blocks) - 1,
        oracle_count=oracle,
    )
