"""Multivariate polynomial arithmetic over GF(2) with a named variable table.

A monomial is a sorted tuple of variable indices with repeats allowed, so
squares exist until boolean normal form (x^2 -> x) is applied explicitly; the
linear-relation counts of the reduction pipeline depend on keeping squares
through the early stages.  A polynomial is an XOR-set of monomials: adding
twice cancels.

Variable precedence is the position in the table: the LAST variable has the
highest elimination precedence.  Linear row reduction pivots on the
highest-precedence variable present, so eliminated variables are always
rewritten in terms of earlier ones, and the earliest variables survive.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]

ONE: Monomial = ()


class VarTable:
    """Ordered variable names; position in the list is the precedence rank."""

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self._index = {name: i for i, name in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def var(self, name: str) -> "Poly":
        return Poly(self, [(self._index[name],)])

    def zero(self) -> "Poly":
        return Poly(self, [])

    def one(self) -> "Poly":
        return Poly(self, [ONE])

    def poly(self, text: str) -> "Poly":
        """Parse "a1*a13 + a2^2 + 1" (whitespace and line breaks ignored)."""
        text = text.replace("-", "+")
        terms: list[Monomial] = []
        for chunk in text.split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            factors: list[int] = []
            constant = 1
            for factor in chunk.split("*"):
                factor = factor.strip()
                if "^" in factor:
                    base, _, exp = factor.partition("^")
                    factors.extend([self._index[base.strip()]] * int(exp))
                elif factor == "1":
                    continue
                elif factor == "0":
                    constant = 0
                else:
                    factors.append(self._index[factor])
            if constant:
                terms.append(tuple(sorted(factors)))
        return Poly(self, terms)


def _merge(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(sorted(m1 + m2))


class Poly:
    """An XOR-set of monomials over a fixed VarTable."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: Iterable[Monomial]):
        acc: set[Monomial] = set()
        for m in terms:
            if m in acc:
                acc.remove(m)
            else:
                acc.add(m)
        self.table = table
        self.terms: frozenset[Monomial] = frozenset(acc)

    @staticmethod
    def _wrap(table: VarTable, terms: frozenset) -> "Poly":
        p = object.__new__(Poly)
        p.table = table
        p.terms = terms
        return p

    def _check(self, other: "Poly") -> None:
        if self.table is not other.table:
            raise ValueError("polynomials over different variable tables")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly._wrap(self.table, self.terms.symmetric_difference(other.terms))

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        acc: set[Monomial] = set()
        for m1 in self.terms:
            for m2 in other.terms:
                m = _merge(m1, m2)
                if m in acc:
                    acc.remove(m)
                else:
                    acc.add(m)
        return Poly._wrap(self.table, frozenset(acc))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and self.table is other.table
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash(self.terms)

    def degree(self) -> int:
        """Total degree, counting repeats; the zero polynomial has degree -1."""
        return max((len(m) for m in self.terms), default=-1)

    def is_linear(self) -> bool:
        return all(len(m) <= 1 for m in self.terms)

    def variables(self) -> set[int]:
        return {i for m in self.terms for i in m}

    def boolean_nf(self) -> "Poly":
        """Reduce every exponent to 1 (valid when variables only take 0/1)."""
        return Poly(self.table, (tuple(sorted(set(m))) for m in self.terms))

    def evaluate(self, point: Sequence[int] | Mapping[int, int]) -> int:
        out = 0
        for m in self.terms:
            bit = 1
            for i in m:
                if not point[i]:
                    bit = 0
                    break
            out ^= bit
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        order = lambda m: (-len(m), tuple(-i for i in reversed(m)))
        for m in sorted(self.terms, key=order):
            if not m:
                parts.append("1")
                continue
            factors = []
            for i in sorted(set(m)):
                e = m.count(i)
                name = self.table.names[i]
                factors.append(name if e == 1 else f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


class SubstMap:
    """A ring homomorphism determined by per-variable images.

    Variables absent from `images` map to themselves.  `apply` extends the
    assignment multiplicatively over monomials and additively over terms.
    """

    def __init__(self, table: VarTable, images: Mapping[int, Poly]):
        self.table = table
        self.images = {
            i: p for i, p in images.items() if p.terms != frozenset([(i,)])
        }

    def image(self, i: int) -> Poly:
        got = self.images.get(i)
        return Poly._wrap(self.table, frozenset([(i,)])) if got is None else got

    def apply(self, p: Poly) -> Poly:
        if not any(i in self.images for m in p.terms for i in m):
            return p
        acc: set[Monomial] = set()
        for m in p.terms:
            prod = self.table.one()
            for i in m:
                prod = prod * self.image(i)
            for mm in prod.terms:
                if mm in acc:
                    acc.remove(mm)
                else:
                    acc.add(mm)
        return Poly._wrap(self.table, frozenset(acc))

    def then(self, later: "SubstMap") -> "SubstMap":
        """The composite applying self first, then `later`."""
        touched = set(self.images) | set(later.images)
        return SubstMap(
            self.table, {i: later.apply(self.image(i)) for i in touched}
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SubstMap)
            and self.table is other.table
            and self.images == other.images
        )

    def is_idempotent(self) -> bool:
        return all(self.apply(p) == p for p in self.images.values())


def close_idempotent(m: SubstMap, max_rounds: int = 512) -> SubstMap:
    """Iterate the map until a further application changes nothing.

    The stabilized map is idempotent; a map whose dependency graph has a cycle
    never stabilizes and is reported after a bounded number of rounds.
    """
    cur = m
    for _ in range(max_rounds):
        nxt = cur.then(m)
        if nxt == cur:
            return cur
        cur = nxt
    raise ValueError("substitution map does not stabilize (cyclic dependency?)")


def safe(v: int, r: Poly) -> bool:
    """Whether r can eliminate v: v is a lone term of r and divides no larger term."""
    if (v,) not in r.terms:
        return False
    return not any(len(m) > 1 and v in m for m in r.terms)


class LinearBasis:
    """Reduced row echelon basis of a set of degree-<=1 polynomials.

    Rows are bitmask integers: bit i (i < len(table)) marks variable i, the
    bit at len(table) marks the constant term.  The pivot of a row is its
    highest variable bit, i.e. the highest-precedence variable present.
    """

    def __init__(self, table: VarTable, relations: Iterable[Poly]):
        self.table = table
        n = len(table)
        self._const_bit = 1 << n
        self._var_mask = self._const_bit - 1
        rows: dict[int, int] = {}  # pivot -> row
        self.inconsistent = False
        for p in relations:
            if not p.is_linear():
                raise ValueError(f"nonlinear relation in linear reduction: {p}")
            row = 0
            for m in p.terms:
                row ^= self._const_bit if m == ONE else 1 << m[0]
            row = self._reduce_row(row, rows)
            if self.inconsistent:
                # 1 = 0 is already recorded; the constant column is its pivot.
                row &= self._var_mask
            if row == self._const_bit:
                self.inconsistent = True
                rows = {piv: other & self._var_mask for piv, other in rows.items()}
                continue
            if row:
                pivot = (row & self._var_mask).bit_length() - 1
                for piv, other in list(rows.items()):
                    if other >> pivot & 1:
                        rows[piv] = other ^ row
                rows[pivot] = row
        self.rows = dict(sorted(rows.items(), reverse=True))

    def _reduce_row(self, row: int, rows: dict[int, int]) -> int:
        for pivot, other in rows.items():
            if row >> pivot & 1:
                row ^= other
        return row

    def __len__(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[int]:
        return list(self.rows)

    def _row_poly(self, row: int) -> Poly:
        terms: list[Monomial] = []
        if row & self._const_bit:
            terms.append(ONE)
            row ^= self._const_bit
        while row:
            i = row.bit_length() - 1
            terms.append((i,))
            row ^= 1 << i
        return Poly(self.table, terms)

    def to_polys(self) -> list[Poly]:
        return [self._row_poly(r) for r in self.rows.values()]

    def subst_map(self) -> SubstMap:
        """pivot -> tail of its row; the normal-form substitution."""
        images = {}
        for pivot, row in self.rows.items():
            images[pivot] = self._row_poly(row ^ (1 << pivot))
        return SubstMap(self.table, images)


def nf_linear(p: Poly, basis: LinearBasis) -> Poly:
    """Normal form of p modulo the linear basis (pivot variables substituted away)."""
    return basis.subst_map().apply(p)
