"""Depth thresholds for monochromatic replicas and claws, and up-arrow towers.

``n_bound(r, d)`` is the host depth the replica finder needs, ``m_bound(r, d)``
the one the claw finder needs. Both are the recurrences taken with equality
and evaluated exactly; values wider than ``BIT_CAP`` bits come back as
:class:`Overflow` carrying the closed-form tower instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

BIT_CAP = 1 << 20


class Order(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Tower:
    """Right-nested power tower ``terms[0] ↑ terms[1] ↑ ... ↑ terms[-1]``."""

    terms: tuple[int, ...]

    def __post_init__(self):
        if not self.terms or any(t < 1 for t in self.terms):
            raise ValueError("tower leaves must be positive integers")

    @classmethod
    def of(cls, *terms: int) -> Tower:
        return cls(tuple(terms))

    def normalized(self) -> Tower:
        ts = list(self.terms)
        # 1 ↑ x = 1 cuts everything above it; x ↑ 1 = x drops the top
        for i, t in enumerate(ts[:-1]):
            if t == 1:
                ts = ts[: i + 1]
                break
        while len(ts) > 1 and ts[-1] == 1:
            ts.pop()
        return Tower(tuple(ts))

    def evaluate(self, bit_cap: int = BIT_CAP) -> int | None:
        """Exact value, or None when it would exceed ``bit_cap`` bits."""
        ts = self.normalized().terms
        v = ts[-1]
        if v.bit_length() > bit_cap:
            return None
        for base in reversed(ts[:-1]):
            # base >= 2 here, so bit length of base**v is about v*log2(base)
            if v > bit_cap or v * math.log2(base) > bit_cap:
                return None
            v = base**v
        return v

    def arrows(self) -> str:
        return "↑".join(map(str, self.terms))

    def ascii(self) -> str:
        return "^".join(map(str, self.terms))

    def __str__(self):
        return self.arrows()


@dataclass(frozen=True)
class Overflow:
    """A bound too wide to evaluate; ``tower`` is a closed-form upper bound."""

    tower: Tower

    def __str__(self):
        return f"overflow(<= {self.tower})"


Bound = int | Overflow


def _cmp_int(a: int, b: int) -> Order:
    return Order.LESS if a < b else Order.GREATER if a > b else Order.EQUAL


def compare_tower(a: Tower | int, b: Tower | int, bit_cap: int = BIT_CAP) -> Order:
    """Order two towers; ``UNKNOWN`` when neither evaluation nor the rules decide."""
    ta = Tower.of(a) if isinstance(a, int) else a
    tb = Tower.of(b) if isinstance(b, int) else b
    ta, tb = ta.normalized(), tb.normalized()
    if ta == tb:
        return Order.EQUAL
    va, vb = ta.evaluate(bit_cap), tb.evaluate(bit_cap)
    if va is not None and vb is not None:
        return _cmp_int(va, vb)
    # an unevaluable tower is at least 2**bit_cap
    if va is not None:
        return Order.LESS if va.bit_length() <= bit_cap else Order.UNKNOWN
    if vb is not None:
        return Order.GREATER if vb.bit_length() <= bit_cap else Order.UNKNOWN
    # both have >= 2 terms and bases >= 2: strictly monotone in base and exponent
    base = _cmp_int(ta.terms[0], tb.terms[0])
    rest = compare_tower(Tower(ta.terms[1:]), Tower(tb.terms[1:]), bit_cap)
    if rest is Order.UNKNOWN:
        return Order.UNKNOWN
    if base is Order.EQUAL:
        return rest
    if rest is Order.EQUAL or rest is base:
        return base
    return Order.UNKNOWN


def _n2(d: int, bit_cap: int) -> Bound:
    # N(2,1) = 1 and N(2,d) = N(2,d-1) + d*2^d sum to (d-1)*2^(d+1) + 1
    if d + 2 + d.bit_length() > bit_cap:
        return Overflow(n_tower(2, d))
    return (d - 1) * 2 ** (d + 1) + 1


def n_bound_recurrence(d: int) -> int:
    """N(2, d) by running the recurrence step by step (cross-check for small d)."""
    n = 1
    for j in range(2, d + 1):
        n += j * 2**j
    return n


def n_bound(r: int, d: int, bit_cap: int = BIT_CAP) -> Bound:
    """Host depth for a monochromatic replica of T_d^2 under any r-coloring."""
    if r < 1 or d < 1:
        raise ValueError("need r >= 1 and d >= 1")
    if r == 1:
        return d
    if r == 2:
        return _n2(d, bit_cap)
    inner = n_bound(r - 1, d, bit_cap)
    if isinstance(inner, Overflow):
        return Overflow(n_tower(r, d))
    a = n_bound(r - 1, inner, bit_cap)
    b = n_bound(2, inner, bit_cap)
    if isinstance(a, Overflow) or isinstance(b, Overflow):
        return Overflow(n_tower(r, d))
    return max(a, b)


def m_bound(r: int, d: int, bit_cap: int = BIT_CAP) -> Bound:
    """Host depth for a monochromatic 3-claw of depth d under any r-coloring."""
    if r < 1 or d < 2:
        raise ValueError("need r >= 1 and d >= 2")
    if r == 1:
        return d
    if r == 2:
        return n_bound(2, 3 * d, bit_cap)
    inner = m_bound(r - 1, d, bit_cap)
    if isinstance(inner, Overflow):
        return Overflow(m_tower(r, d))
    out = n_bound(r, 3 * inner, bit_cap)
    return Overflow(m_tower(r, d)) if isinstance(out, Overflow) else out


def n_tower(r: int, d: int) -> Tower:
    """2^(r-2) fours topped by d, so r=2 gives 4↑d and r=3 gives 4↑4↑d."""
    if r == 1:
        return Tower.of(d)
    return Tower((4,) * 2 ** (r - 2) + (d,))


def m_tower(r: int, d: int) -> Tower:
    """Blocks of 2^i - 1 fours closed by a 64, for i = r-2 down to 0, topped by d."""
    if r == 1:
        return Tower.of(d)
    terms: list[int] = []
    for i in range(r - 2, -1, -1):
        terms.extend([4] * (2**i - 1))
        terms.append(64)
    terms.append(d)
    return Tower(tuple(terms))


def even_gon_depth(k: int) -> int:
    """Smallest d with 2^(d-1) >= k."""
    return max(1, (k - 1).bit_length() + 1)


def odd_gon_depth(k: int) -> int:
    """Smallest d >= 2 with 2^(d-2) >= (k-1)/2."""
    return max(2, (k - 2).bit_length() + 1)


def tower_upper_bound(kind: str, r: int, d_or_k: int) -> Tower:
    """Closed-form tower for ``kind`` in {N, M, edge-even, edge-odd}.

    For the edge kinds the last argument is the polygon size k and the tower
    top is the depth the construction uses for that k.
    """
    if kind == "N":
        return n_tower(r, d_or_k)
    if kind == "M":
        return m_tower(r, d_or_k)
    if kind == "edge-even":
        return n_tower(r, even_gon_depth(d_or_k))
    if kind == "edge-odd":
        return m_tower(r, odd_gon_depth(d_or_k))
    raise ValueError(f"unknown bound kind {kind!r}")
