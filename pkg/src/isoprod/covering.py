"""Generating vectors for abelian Galois covers of curves.

A cover of a genus ``g'`` base curve with abelian deck group ``Q`` is
presented by branch elements ``sigma_1, ..., sigma_r`` and handle elements
``eta_1, ..., eta_{2g'}``.  Commutators vanish, so the defining product
relation collapses to ``sum(sigma_j) = 0``.  The module computes the genus
of the covering curve, the set of elements acting with fixed points, and
the exact dimension of every character eigenspace of the space of
holomorphic 1-forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, ParentMismatchError
from .groups import AbelianGroup, Character, GroupElement


@dataclass(frozen=True)
class BranchSignature:
    """Base genus and sorted branch orders ``[g'; m_1 <= ... <= m_r]``."""

    g_prime: int
    orders: tuple[int, ...]

    def __str__(self) -> str:
        return f"[{self.g_prime}; {', '.join(map(str, self.orders))}]"


@dataclass(frozen=True)
class ValidationOutcome:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class GeneratingVector:
    """Presentation ``(sigma_1..sigma_r; eta_1..eta_{2g'})`` of a cover.

    Branch elements keep their input order; the signature sorts them.  The
    eta elements only participate in the generation check but are stored so
    inputs round-trip.
    """

    quotient_group: AbelianGroup
    g_prime: int
    branch: tuple[GroupElement, ...]
    eta: tuple[GroupElement, ...]

    def __init__(self, quotient_group: AbelianGroup, g_prime: int,
                 branch: tuple[GroupElement, ...], eta: tuple[GroupElement, ...]):
        if g_prime < 0:
            raise ValueError("base genus must be nonnegative")
        for g in tuple(branch) + tuple(eta):
            if g.group != quotient_group:
                raise ParentMismatchError("vector entry outside the acting group")
        object.__setattr__(self, "quotient_group", quotient_group)
        object.__setattr__(self, "g_prime", int(g_prime))
        object.__setattr__(self, "branch", tuple(branch))
        object.__setattr__(self, "eta", tuple(eta))

    def signature(self) -> BranchSignature:
        return BranchSignature(self.g_prime, tuple(sorted(g.order for g in self.branch)))

    def validate(self) -> ValidationOutcome:
        return validate_generating_vector(self)


def validate_generating_vector(vector: GeneratingVector) -> ValidationOutcome:
    """Check the defining conditions; violations are data, not errors."""
    q = vector.quotient_group
    violations = []
    for idx, sigma in enumerate(vector.branch):
        if sigma.is_zero:
            violations.append(f"branch element #{idx} is trivial")
    total = q.zero
    for sigma in vector.branch:
        total = total + sigma
    if not total.is_zero:
        violations.append("product relation fails: branch elements do not sum to zero")
    if len(vector.eta) != 2 * vector.g_prime:
        violations.append(
            f"expected {2 * vector.g_prime} eta elements, got {len(vector.eta)}")
    generated = q.subgroup(vector.branch + vector.eta)
    if generated.order != q.order:
        violations.append("branch and eta elements do not generate the acting group")
    return ValidationOutcome(tuple(violations))


def genus(vector: GeneratingVector) -> int:
    """Genus of the covering curve from the Riemann-Hurwitz relation.

    ``2g - 2 = |Q| (2g' - 2 + sum_j (1 - 1/m_j))``.
    """
    q_order = vector.quotient_group.order
    rhs = Fraction(2 * vector.g_prime - 2)
    for sigma in vector.branch:
        rhs += 1 - Fraction(1, sigma.order)
    total = q_order * rhs
    if total.denominator != 1 or (total.numerator + 2) % 2:
        raise ConsistencyError(f"Riemann-Hurwitz value 2g-2 = {total} is not an even integer")
    g = (int(total) + 2) // 2
    if g < 0:
        raise ConsistencyError(f"negative genus {g}")
    return g


def stabilizer_union(vector: GeneratingVector) -> frozenset[GroupElement]:
    """All elements acting with a fixed point: the union of the cyclic
    groups generated by the branch elements, identity included."""
    out = {vector.quotient_group.zero}
    for sigma in vector.branch:
        g = sigma
        while not g.is_zero:
            out.add(g)
            g = g + sigma
    return frozenset(out)


def cw_dimension(vector: GeneratingVector, chi: Character) -> int:
    """Dimension of the ``chi``-eigenspace of the 1-forms of the cover.

    Abelian eigenspace count: ``(g' - 1) + sum_j k_j / m_j``, plus one for
    the trivial character, where ``chi(sigma_j)`` is the ``k_j``-th power of
    the primitive ``m_j``-th root of unity.
    """
    if chi.group != vector.quotient_group:
        raise ParentMismatchError("character over a different group")
    total = Fraction(vector.g_prime - 1)
    for sigma in vector.branch:
        m = sigma.order
        total += Fraction(chi.pairing(sigma).scaled_numerator(m), m)
    if chi.is_trivial:
        total += 1
    if total.denominator != 1 or total < 0:
        raise ConsistencyError(
            f"eigenspace dimension {total} for character {chi} is not a nonnegative integer")
    return int(total)


def cw_table(vector: GeneratingVector) -> dict[Character, int]:
    """Eigenspace dimension for every character of the acting group.

    The column sum must reproduce the Riemann-Hurwitz genus; the two
    computations are independent.
    """
    table = {chi: cw_dimension(vector, chi) for chi in vector.quotient_group.characters()}
    g = genus(vector)
    if sum(table.values()) != g:
        raise ConsistencyError(
            f"eigenspace dimensions sum to {sum(table.values())}, genus is {g}")
    return table
