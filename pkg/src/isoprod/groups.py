"""Exact arithmetic for finite abelian groups.

A group is presented as a direct sum of cyclic groups ``Z_{n_1} + ... +
Z_{n_k}``; elements and characters are exponent tuples.  Subgroups are
represented by a canonical Hermite-reduced basis of the corresponding
integer lattice in ``Z^k`` (the lattice always contains the relation
lattice ``diag(n_1, ..., n_k) Z^k``), which gives unique representations,
fast membership, and exact quotient structure through the Smith normal
form.

All values are immutable after construction; cached derived data is
computed eagerly so instances are safe to share between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm, prod
from typing import Iterable, Iterator, Sequence

from .errors import ConsistencyError, OverflowLimitError, ParentMismatchError

# Guard against accidental astronomically-sized ambients; exhaustive scans
# carry their own much smaller caps (canonicalization, oracles).
MAX_GROUP_ORDER = 2 ** 62

Matrix = list[list[int]]


# ---------------------------------------------------------------------------
# Integer matrix normal forms
# ---------------------------------------------------------------------------


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(S, U, V)`` with ``U @ A @ V = S``.

    ``S`` is diagonal with ``d_1 | d_2 | ...`` and nonnegative entries;
    ``U`` and ``V`` are unimodular.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    s = [list(row) for row in a]
    for row in s:
        if len(row) != n:
            raise ValueError("ragged matrix")
    u = _identity(m)
    v = _identity(n)

    def row_sub(i: int, j: int, q: int) -> None:
        s[i] = [x - q * y for x, y in zip(s[i], s[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_sub(i: int, j: int, q: int) -> None:
        for row in s:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def row_swap(i: int, j: int) -> None:
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i: int, j: int) -> None:
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        # Choose a pivot of minimal absolute value in the trailing block.
        # Whenever clearing leaves a remainder the loop restarts with a
        # strictly smaller pivot, so the stage terminates.
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if s[i][j] and (best is None or abs(s[i][j]) < best):
                    best = abs(s[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        row_swap(t, pivot[0])
        col_swap(t, pivot[1])

        clean = True
        for i in range(t + 1, m):
            if s[i][t]:
                row_sub(i, t, s[i][t] // s[t][t])
                if s[i][t]:
                    clean = False
        for j in range(t + 1, n):
            if s[t][j]:
                col_sub(j, t, s[t][j] // s[t][t])
                if s[t][j]:
                    clean = False
        if not clean:
            continue
        # Enforce the divisibility chain: every trailing entry must be a
        # multiple of the pivot.  Mixing the offending row into row t puts a
        # non-multiple in row t, which the next rounds shrink the pivot on.
        bad = None
        for i in range(t + 1, m):
            if any(s[i][j] % s[t][t] for j in range(t + 1, n)):
                bad = i
                break
        if bad is not None:
            row_sub(t, bad, -1)
            continue
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return s, u, v


def left_kernel(a: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of ``{x in Z^m : x A = 0}`` as rows."""
    m = len(a)
    s, u, _ = smith_normal_form(a)
    return [u[i] for i in range(m) if all(x == 0 for x in s[i])]


def right_kernel(a: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of ``{x in Z^n : A x = 0}`` as rows."""
    at = [list(col) for col in zip(*a)] if a and a[0] else []
    if not at:
        n = len(a[0]) if a else 0
        return _identity(n)
    return left_kernel(at)


def row_hermite(rows: Iterable[Sequence[int]], width: int) -> tuple[tuple[int, ...], ...]:
    """Canonical upper-triangular Hermite basis of a full-rank row lattice.

    The input lattice must have rank ``width`` (guaranteed here because the
    ambient relation rows ``diag(n_j)`` are always stacked in).  Pivots are
    positive and entries above each pivot are reduced into ``[0, pivot)``.
    """
    mat = [list(r) for r in rows]
    pivot_row = 0
    for col in range(width):
        while True:
            nz = [i for i in range(pivot_row, len(mat)) if mat[i][col]]
            if not nz:
                raise ConsistencyError("lattice not of full rank")
            i0 = min(nz, key=lambda i: abs(mat[i][col]))
            mat[pivot_row], mat[i0] = mat[i0], mat[pivot_row]
            if len(nz) == 1:
                break
            p = mat[pivot_row][col]
            for i in range(pivot_row + 1, len(mat)):
                if mat[i][col]:
                    q = mat[i][col] // p
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[pivot_row])]
        if mat[pivot_row][col] < 0:
            mat[pivot_row] = [-x for x in mat[pivot_row]]
        p = mat[pivot_row][col]
        for i in range(pivot_row):
            q = mat[i][col] // p
            if q:
                mat[i] = [x - q * y for x, y in zip(mat[i], mat[pivot_row])]
        pivot_row += 1
    return tuple(tuple(row) for row in mat[:pivot_row])


def solve_upper(basis: Sequence[Sequence[int]], vec: Sequence[int]) -> list[int] | None:
    """Integer coefficients ``x`` with ``x . basis = vec``, or None."""
    v = list(vec)
    k = len(basis)
    coeffs = []
    for j in range(k):
        p = basis[j][j]
        if v[j] % p:
            return None
        c = v[j] // p
        if c:
            v = [x - c * y for x, y in zip(v, basis[j])]
        coeffs.append(c)
    if any(v):
        return None
    return coeffs


def unimodular_inverse(m: Sequence[Sequence[int]]) -> Matrix:
    """Exact inverse of a unimodular integer matrix."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    out = [[x for x in row[n:]] for row in aug]
    for row in out:
        for x in row:
            if x.denominator != 1:
                raise ConsistencyError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]


# ---------------------------------------------------------------------------
# Groups, elements, characters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalAngle:
    """The value ``exp(2*pi*i*num/den)`` stored as ``num/den`` in Q/Z.

    Always reduced with ``gcd(num, den) = 1`` and ``0 <= num < den``.
    """

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den <= 0 or not 0 <= self.num < self.den or gcd(self.num, self.den) != 1:
            raise ValueError(f"unreduced angle {self.num}/{self.den}; use RationalAngle.of")

    @staticmethod
    def of(num: int, den: int) -> "RationalAngle":
        if den <= 0:
            raise ValueError("denominator must be positive")
        num %= den
        g = gcd(num, den)
        return RationalAngle(num // g, den // g)

    @staticmethod
    def zero() -> "RationalAngle":
        return RationalAngle(0, 1)

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __add__(self, other: "RationalAngle") -> "RationalAngle":
        den = lcm(self.den, other.den)
        return RationalAngle.of(self.num * (den // self.den) + other.num * (den // other.den), den)

    def __neg__(self) -> "RationalAngle":
        return RationalAngle.of(-self.num, self.den)

    def scaled_numerator(self, den: int) -> int:
        """Rescale to the given denominator; the angle must be a multiple of 1/den."""
        if den % self.den:
            raise ValueError(f"angle {self.num}/{self.den} has no denominator {den}")
        return self.num * (den // self.den)


@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group ``Z_{n_1} + ... + Z_{n_k}``.

    Order-1 factors are dropped on construction (normalization is
    idempotent); the trivial group has an empty order tuple.
    """

    orders: tuple[int, ...]

    def __init__(self, orders: Iterable[int]):
        cleaned = []
        for n in orders:
            n = int(n)
            if n < 1:
                raise ValueError(f"cyclic order must be >= 1, got {n}")
            if n > 1:
                cleaned.append(n)
        object.__setattr__(self, "orders", tuple(cleaned))
        if prod(cleaned) > MAX_GROUP_ORDER:
            raise OverflowLimitError(
                f"group order {prod(cleaned)} exceeds the supported scale "
                f"(|G| <= {MAX_GROUP_ORDER})")

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.orders) if self.orders else 1

    @property
    def is_trivial(self) -> bool:
        return not self.orders

    def element(self, exponents: Iterable[int]) -> "GroupElement":
        return GroupElement(self, tuple(exponents))

    @property
    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def basis_element(self, j: int) -> "GroupElement":
        return GroupElement(self, tuple(int(i == j) for i in range(self.rank)))

    def elements(self) -> Iterator["GroupElement"]:
        for exps in itertools.product(*(range(n) for n in self.orders)):
            yield GroupElement(self, exps)

    def character(self, exponents: Iterable[int]) -> "Character":
        return Character(self, tuple(exponents))

    @property
    def trivial_character(self) -> "Character":
        return Character(self, (0,) * self.rank)

    def characters(self) -> Iterator["Character"]:
        for exps in itertools.product(*(range(n) for n in self.orders)):
            yield Character(self, exps)

    def relation_rows(self) -> Matrix:
        return [[self.orders[i] if i == j else 0 for j in range(self.rank)]
                for i in range(self.rank)]

    def subgroup(self, generators: Iterable["GroupElement"]) -> "Subgroup":
        return Subgroup(self, tuple(generators))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, ())

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, tuple(self.basis_element(j) for j in range(self.rank)))

    def structure_name(self) -> str:
        if self.is_trivial:
            return "1"
        return " + ".join(f"Z{n}" for n in self.orders)


def _reduce(exps: tuple[int, ...], orders: tuple[int, ...]) -> tuple[int, ...]:
    if len(exps) != len(orders):
        raise ParentMismatchError(
            f"exponent width {len(exps)} does not match group rank {len(orders)}")
    return tuple(e % n for e, n in zip(exps, orders))


@dataclass(frozen=True)
class GroupElement:
    """Element of an :class:`AbelianGroup`, stored in canonical reduced form."""

    group: AbelianGroup
    exponents: tuple[int, ...]

    def __init__(self, group: AbelianGroup, exponents: tuple[int, ...]):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "exponents", _reduce(tuple(exponents), group.orders))

    def _check(self, other: "GroupElement") -> None:
        if self.group != other.group:
            raise ParentMismatchError("elements belong to different groups")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.group, tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-a for a in self.exponents))

    def __mul__(self, k: int) -> "GroupElement":
        return GroupElement(self.group, tuple(k * a for a in self.exponents))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def order(self) -> int:
        if not self.exponents:
            return 1
        return lcm(*(n // gcd(e, n) for e, n in zip(self.exponents, self.group.orders)))

    def sort_key(self) -> tuple[int, ...]:
        return self.exponents

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.exponents)) + ")"


@dataclass(frozen=True)
class Character:
    """Character of an :class:`AbelianGroup`, written additively.

    The dual group is identified coordinate-wise with the group itself: the
    character with exponents ``(a_1, ..., a_k)`` maps ``g`` to
    ``exp(2*pi*i * sum a_j g_j / n_j)``.
    """

    group: AbelianGroup
    exponents: tuple[int, ...]

    def __init__(self, group: AbelianGroup, exponents: tuple[int, ...]):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "exponents", _reduce(tuple(exponents), group.orders))

    def pairing(self, g: GroupElement) -> RationalAngle:
        if g.group != self.group:
            raise ParentMismatchError("character and element over different groups")
        total = Fraction(0)
        for a, e, n in zip(self.exponents, g.exponents, self.group.orders):
            total += Fraction(a * e, n)
        return RationalAngle.of(total.numerator, total.denominator)

    @property
    def is_trivial(self) -> bool:
        return all(a == 0 for a in self.exponents)

    def __add__(self, other: "Character") -> "Character":
        if self.group != other.group:
            raise ParentMismatchError("characters over different groups")
        return Character(self.group, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __neg__(self) -> "Character":
        return Character(self.group, tuple(-a for a in self.exponents))

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def as_element(self) -> GroupElement:
        return GroupElement(self.group, self.exponents)

    def sort_key(self) -> tuple[int, ...]:
        return self.exponents

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.exponents)) + ")"


def pairing(chi: Character, g: GroupElement) -> RationalAngle:
    """Exact value of ``chi(g)`` as a rational angle."""
    return chi.pairing(g)


# ---------------------------------------------------------------------------
# Subgroups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of a finite abelian group with canonical lattice basis.

    Two subgroups with the same element set have identical bases, so
    equality of representations is equality of subgroups.
    """

    ambient: AbelianGroup
    generators: tuple[GroupElement, ...]
    basis: tuple[tuple[int, ...], ...] = field(init=False, compare=True)

    def __init__(self, ambient: AbelianGroup, generators: tuple[GroupElement, ...]):
        generators = tuple(generators)
        for g in generators:
            if g.group != ambient:
                raise ParentMismatchError("generator not in the ambient group")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "generators", generators)
        rows = [list(g.exponents) for g in generators] + ambient.relation_rows()
        if ambient.rank == 0:
            object.__setattr__(self, "basis", ())
        else:
            object.__setattr__(self, "basis", row_hermite(rows, ambient.rank))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    @property
    def order(self) -> int:
        det = prod(self.basis[j][j] for j in range(len(self.basis)))
        return self.ambient.order // det

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_cyclic(self) -> bool:
        return len(self.structure().invariant_factors.factors) <= 1

    def contains(self, g: GroupElement) -> bool:
        if g.group != self.ambient:
            raise ParentMismatchError("element from a different group")
        if self.ambient.rank == 0:
            return True
        return solve_upper(self.basis, g.exponents) is not None

    def __contains__(self, g: GroupElement) -> bool:
        return self.contains(g)

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        if self.ambient != other.ambient:
            raise ParentMismatchError("subgroups of different groups")
        return all(other.contains(GroupElement(self.ambient, row)) for row in self.basis)

    def intersection(self, other: "Subgroup") -> "Subgroup":
        if self.ambient != other.ambient:
            raise ParentMismatchError("subgroups of different groups")
        k = self.ambient.rank
        if k == 0:
            return self
        stacked = [list(r) for r in self.basis] + [[-x for x in r] for r in other.basis]
        gens = []
        for coeffs in left_kernel(stacked):
            vec = [0] * k
            for c, row in zip(coeffs[: len(self.basis)], self.basis):
                for j in range(k):
                    vec[j] += c * row[j]
            gens.append(GroupElement(self.ambient, tuple(vec)))
        return Subgroup(self.ambient, tuple(gens))

    def sum(self, other: "Subgroup") -> "Subgroup":
        if self.ambient != other.ambient:
            raise ParentMismatchError("subgroups of different groups")
        return Subgroup(self.ambient, self.generators + other.generators)

    def __and__(self, other: "Subgroup") -> "Subgroup":
        return self.intersection(other)

    def __or__(self, other: "Subgroup") -> "Subgroup":
        return self.sum(other)

    def structure(self) -> "QuotientStructure":
        """Decomposition of this subgroup into independent cyclic factors."""
        return subgroup_quotient(self, self.ambient.trivial_subgroup())

    def elements(self) -> Iterator[GroupElement]:
        """All elements, via the invariant-factor decomposition."""
        st = self.structure()
        for coeffs in itertools.product(*(range(d) for d in st.invariant_factors.factors)):
            g = self.ambient.zero
            for c, gen in zip(coeffs, st.generators):
                g = g + c * gen
            yield g

    def annihilator(self) -> "Subgroup":
        """Characters vanishing on this subgroup, as a subgroup of the dual.

        The dual group shares the coordinate presentation of the ambient
        group, so the result is a :class:`Subgroup` of the same
        :class:`AbelianGroup` whose elements are character exponent tuples.
        """
        amb = self.ambient
        k = amb.rank
        if k == 0:
            return amb.trivial_subgroup()
        n_exp = amb.exponent
        rows = list(self.basis)
        m = len(rows)
        # Solve w . a = 0 (mod n_exp) per basis row w, scaled to a common
        # denominator; solutions are the first k coordinates of the right
        # kernel of [W | -n_exp * I].
        w = [[row[j] * (n_exp // amb.orders[j]) for j in range(k)] for row in rows]
        aug = [w[i] + [-n_exp if i == r else 0 for r in range(m)] for i in range(m)]
        gens = []
        for vec in right_kernel(aug):
            gens.append(GroupElement(amb, tuple(vec[:k])))
        return Subgroup(amb, tuple(gens))


def subgroup_generate(group: AbelianGroup, gens: Iterable[GroupElement]) -> Subgroup:
    """The subgroup generated by ``gens``."""
    return Subgroup(group, tuple(gens))


def subgroup_intersection(h1: Subgroup, h2: Subgroup) -> Subgroup:
    return h1.intersection(h2)


def subgroup_sum(h1: Subgroup, h2: Subgroup) -> Subgroup:
    return h1.sum(h2)


def subgroup_contains(h: Subgroup, g: GroupElement) -> bool:
    return h.contains(g)


def annihilator(group: AbelianGroup, h: Subgroup) -> Subgroup:
    if h.ambient != group:
        raise ParentMismatchError("subgroup of a different group")
    return h.annihilator()


# ---------------------------------------------------------------------------
# Invariant factors and quotients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantFactors:
    """Divisibility chain ``d_1 | d_2 | ...`` with every ``d_i >= 2``.

    The empty chain denotes the trivial group.
    """

    factors: tuple[int, ...]

    def __init__(self, factors: Iterable[int]):
        factors = tuple(int(d) for d in factors)
        for d in factors:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError(f"broken divisibility chain {factors}")
        object.__setattr__(self, "factors", factors)

    @property
    def order(self) -> int:
        return prod(self.factors)

    def __iter__(self) -> Iterator[int]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.factors)) + "]"


@dataclass(frozen=True)
class QuotientStructure:
    """The quotient ``A / B`` of nested subgroups, with explicit generators.

    ``generators[i]`` is a representative in the ambient group whose coset
    has order ``invariant_factors.factors[i]``; together the cosets generate
    the quotient.  ``project`` and ``lift`` convert between ambient
    representatives and exponent tuples of the abstract quotient group.
    """

    numerator: Subgroup
    denominator: Subgroup
    invariant_factors: InvariantFactors
    generators: tuple[GroupElement, ...]
    group: AbelianGroup
    _proj: tuple = field(repr=False)

    def project(self, g: GroupElement) -> GroupElement:
        basis, v_mat, diags, kept = self._proj
        if g.group != self.numerator.ambient:
            raise ParentMismatchError("element from a different group")
        if self.numerator.ambient.rank == 0:
            return self.group.zero
        coeffs = solve_upper(basis, g.exponents)
        if coeffs is None:
            raise ParentMismatchError("element not in the numerator subgroup")
        y = [sum(coeffs[i] * v_mat[i][j] for i in range(len(coeffs)))
             for j in range(len(v_mat[0]))]
        return self.group.element(y[j] % diags[j] for j in kept)

    def lift(self, q: GroupElement) -> GroupElement:
        if q.group != self.group:
            raise ParentMismatchError("element not in the quotient group")
        g = self.numerator.ambient.zero
        for c, gen in zip(q.exponents, self.generators):
            g = g + c * gen
        return g


def subgroup_quotient(a: Subgroup, b: Subgroup) -> QuotientStructure:
    """Structure of ``A / B`` for subgroups ``B <= A`` of one ambient group."""
    if a.ambient != b.ambient:
        raise ParentMismatchError("subgroups of different groups")
    if not b.is_subgroup_of(a):
        raise ParentMismatchError("denominator is not contained in the numerator")
    amb = a.ambient
    k = amb.rank
    if k == 0:
        group = AbelianGroup(())
        return QuotientStructure(a, b, InvariantFactors(()), (), group, ((), (), (), ()))
    # Express the denominator lattice in the basis of the numerator lattice;
    # the quotient is Z^k modulo the row space of that integer matrix.
    rel = []
    for row in b.basis:
        coeffs = solve_upper(a.basis, row)
        if coeffs is None:
            raise ConsistencyError("containment check passed but solve failed")
        rel.append(coeffs)
    s, _, v = smith_normal_form(rel)
    diags = [s[j][j] for j in range(k)]
    v_inv = unimodular_inverse(v)
    kept = [j for j in range(k) if diags[j] > 1]
    factors = InvariantFactors(diags[j] for j in kept)
    gens = []
    for j in kept:
        vec = [sum(v_inv[j][i] * a.basis[i][c] for i in range(k)) for c in range(k)]
        gens.append(GroupElement(amb, tuple(vec)))
    group = AbelianGroup(factors.factors)
    if group.order != a.order // b.order:
        raise ConsistencyError(
            f"quotient order {group.order} != |A|/|B| = {a.order // b.order}")
    return QuotientStructure(a, b, factors, tuple(gens), group,
                             (a.basis, v, diags, kept))


def quotient_structure(group: AbelianGroup, h: Subgroup) -> QuotientStructure:
    """Structure of ``G / H`` with generator cosets."""
    if h.ambient != group:
        raise ParentMismatchError("subgroup of a different group")
    return subgroup_quotient(group.full_subgroup(), h)


# ---------------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------------


def direct_product(groups: Sequence[AbelianGroup]) -> AbelianGroup:
    orders: list[int] = []
    for g in groups:
        orders.extend(g.orders)
    return AbelianGroup(orders)


def embed_factor(product: AbelianGroup, groups: Sequence[AbelianGroup],
                 index: int, g: GroupElement) -> GroupElement:
    """Embed an element of ``groups[index]`` into the direct product."""
    exps: list[int] = []
    for i, grp in enumerate(groups):
        exps.extend(g.exponents if i == index else (0,) * grp.rank)
    return product.element(exps)


def product_element(product: AbelianGroup, parts: Sequence[GroupElement]) -> GroupElement:
    exps: list[int] = []
    for p in parts:
        exps.extend(p.exponents)
    return product.element(exps)


def split_element(g: GroupElement, groups: Sequence[AbelianGroup]) -> tuple[GroupElement, ...]:
    parts = []
    pos = 0
    for grp in groups:
        parts.append(grp.element(g.exponents[pos:pos + grp.rank]))
        pos += grp.rank
    if pos != len(g.exponents):
        raise ParentMismatchError("element width does not match the factor list")
    return tuple(parts)


def diagonal_subgroup(group: AbelianGroup, copies: int) -> Subgroup:
    product = direct_product([group] * copies)
    gens = []
    for j in range(group.rank):
        e = group.basis_element(j)
        gens.append(product_element(product, [e] * copies))
    return Subgroup(product, tuple(gens))


def product_subgroup(subgroups: Sequence[Subgroup]) -> Subgroup:
    groups = [h.ambient for h in subgroups]
    product = direct_product(groups)
    gens = []
    for i, h in enumerate(subgroups):
        for g in h.generators:
            gens.append(embed_factor(product, groups, i, g))
    return Subgroup(product, tuple(gens))
