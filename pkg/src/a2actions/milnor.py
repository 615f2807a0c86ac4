"""Milnor-basis combinatorics for A(2) and B(2).

A(2) is the subalgebra of the mod-2 Steenrod algebra generated by Sq^1, Sq^2
and Sq^4.  In the Milnor basis its elements are Sq(r1,r2,r3) with 0 <= r1 <= 7,
0 <= r2 <= 3, 0 <= r3 <= 1: 64 elements spread over degrees 0..23, where
Sq(r1,r2,r3) sits in degree r1 + 3*r2 + 7*r3.  B(2) = A(2)//E[Q2] is spanned
by the r3 = 0 part, 32 elements with top degree 16.  Q2 = Sq(0,0,1) is central
in A(2), and multiplication by it identifies the degree-n part of A(2) with
B_n + Q2*B_{n-7}.

The left action of Sq^a for a <= 7 is total-degree bookkeeping plus mod-2
binomial conditions (Lucas); Sq^8 and Sq^16 are deliberately NOT provided
here, since parameterizing their possible actions is the whole point of the
rest of the package.
"""

from __future__ import annotations

from functools import cache

# An exponent triple (r1, r2, r3) naming the Milnor basis element Sq(r1,r2,r3).
Exponent = tuple[int, int, int]

A_TOP = 23
B_TOP = 16

PART_FULL = "full"
PART_B = "b"
PART_Q = "q"


def degree(r: Exponent) -> int:
    return r[0] + 3 * r[1] + 7 * r[2]


def in_bounds(r: Exponent) -> bool:
    """Whether r names an element of A(2)."""
    return 0 <= r[0] <= 7 and 0 <= r[1] <= 3 and 0 <= r[2] <= 1


@cache
def basis(n: int, part: str = PART_FULL) -> tuple[Exponent, ...]:
    """Ordered Milnor basis of the degree-n part.

    Within a degree the order is ascending r2 (equivalently descending r1),
    with the whole r3 = 0 block before the r3 = 1 block.  Degrees outside the
    algebra's support yield the empty tuple rather than an error.
    """
    if part == PART_B:
        return tuple((n - 3 * j, j, 0) for j in range(4) if 0 <= n - 3 * j <= 7)
    if part == PART_Q:
        return tuple((r1, r2, 1) for (r1, r2, _) in basis(n - 7, PART_B))
    if part == PART_FULL:
        return basis(n, PART_B) + basis(n, PART_Q)
    raise ValueError(f"unknown basis part {part!r}")


@cache
def basis_index(n: int, r: Exponent, part: str = PART_FULL) -> int:
    """Position of r in basis(n, part)."""
    return basis(n, part).index(r)


def binom_mod2(m: int, n: int) -> int:
    """C(m, n) mod 2 by Lucas' theorem; 0 whenever n > m or an argument is negative."""
    if n < 0 or m < 0 or n > m:
        return 0
    return 1 if (m & n) == n else 0


@cache
def sq_act(a: int, r: Exponent) -> frozenset[Exponent]:
    """The mod-2 set of Milnor basis terms of Sq^a * Sq(r), for a <= 7.

    Terms accumulate with XOR semantics.  On this range the index scan never
    produces the same triple twice (tests assert this exhaustively), so XOR
    and plain membership agree.
    """
    if not 0 <= a <= 7:
        raise ValueError(f"sq_act handles a in 0..7 only, got {a}")
    r1, r2, r3 = r
    out: set[Exponent] = set()
    for j in range(min(r2, a // 4) + 1):
        for i in range(min(r1, (a - 4 * j) // 2) + 1):
            if a - 2 * i - 4 * j < 0:
                continue
            t = (a + r1 - 3 * i - 4 * j, r2 + i - j, r3 + j)
            if (
                binom_mod2(t[0], r1 - i)
                and binom_mod2(t[1], i)
                and binom_mod2(t[2], j)
            ):
                out ^= {t}
    return frozenset(out)


def q2_mult(r: Exponent) -> Exponent | None:
    """Q2 * Sq(r1,r2,0) = Sq(r1,r2,1); Q2 * Sq(r1,r2,1) = 0 (returned as None)."""
    if r[2]:
        return None
    return (r[0], r[1], 1)
