"""Hodge diamond of the quotient 3-fold via character convolution.

Each curve factor contributes a table of character eigenspace dimensions
(supported on the annihilator of its kernel); the Hodge numbers of the
quotient are multiplicities of the trivial character in the Kunneth
products, computed as exact integer convolutions over the dual group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .covering import cw_dimension, genus
from .datum import AlgebraicDatum, invariants, validate_datum
from .errors import ConsistencyError
from .groups import Character, GroupElement, direct_product

TripleCharacter = tuple[Character, Character, Character]


@dataclass(frozen=True)
class EigenDimTable:
    """For each factor, the map ``chi -> dim W_i^chi`` over characters of G.

    Only characters vanishing on ``K_i`` can appear; the table stores the
    full annihilator support including zero entries.
    """

    datum: AlgebraicDatum
    tables: tuple[dict[Character, int], ...]

    def dimension(self, i: int, chi: Character) -> int:
        return self.tables[i].get(chi, 0)

    def support(self, i: int) -> Iterator[Character]:
        return iter(self.tables[i])


def eigendim_table(datum: AlgebraicDatum) -> EigenDimTable:
    """Pull the eigenspace dimensions of each cover back to characters of G."""
    tables = []
    for i in range(3):
        vector = datum.vectors[i]
        q = datum.quotients[i]
        table: dict[Character, int] = {}
        for chi_elem in datum.kernels[i].annihilator().elements():
            chi = datum.group.character(chi_elem.exponents)
            # chi factors through G/K_i; evaluate the induced character by
            # pairing chi with lifts of the branch elements.
            induced = q.group.character(
                _induced_exponents(datum, i, chi))
            table[chi] = cw_dimension(vector, induced)
        g = genus(vector)
        if sum(table.values()) != g:
            raise ConsistencyError(
                f"factor {i + 1}: eigenspace dimensions sum to {sum(table.values())}, "
                f"genus is {g}")
        tables.append(table)
    return EigenDimTable(datum, tuple(tables))


def _induced_exponents(datum: AlgebraicDatum, i: int, chi: Character) -> tuple[int, ...]:
    """Exponents of the character on G/K_i induced by ``chi`` (which must
    vanish on K_i): evaluate chi on the lifted quotient generators."""
    q = datum.quotients[i]
    exps = []
    for gen, order in zip(q.generators, q.group.orders):
        exps.append(chi.pairing(gen).scaled_numerator(order))
    return tuple(exps)


@dataclass(frozen=True)
class HodgeDiamond:
    """Hodge numbers ``h[p][q]`` for ``0 <= p, q <= 3``."""

    h: tuple[tuple[int, int, int, int], ...]

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self.h[pq[0]][pq[1]]

    def chi_structure_sheaf(self) -> int:
        return sum((-1) ** q * self.h[0][q] for q in range(4))

    def euler_number(self) -> int:
        return sum((-1) ** (p + q) * self.h[p][q] for p in range(4) for q in range(4))

    def betti(self, k: int) -> int:
        return sum(self.h[p][k - p] for p in range(4) if 0 <= k - p <= 3)

    def check_symmetries(self) -> None:
        for p in range(4):
            for q in range(4):
                if self.h[p][q] != self.h[q][p]:
                    raise ConsistencyError(f"Hodge symmetry fails at ({p},{q})")
                if self.h[p][q] != self.h[3 - p][3 - q]:
                    raise ConsistencyError(f"Serre duality fails at ({p},{q})")
        if self.h[0][0] != 1 or self.h[3][3] != 1:
            raise ConsistencyError("h^{0,0} and h^{3,3} must be 1")


def _assemble_diamond(h10: int, h20: int, h30: int, h11: int, h21: int) -> HodgeDiamond:
    h = [[0] * 4 for _ in range(4)]
    h[0][0] = h[3][3] = 1
    h[1][0] = h[0][1] = h[2][3] = h[3][2] = h10
    h[2][0] = h[0][2] = h[1][3] = h[3][1] = h20
    h[3][0] = h[0][3] = h30
    h[1][1] = h[2][2] = h11
    h[2][1] = h[1][2] = h21
    diamond = HodgeDiamond(tuple(tuple(row) for row in h))
    diamond.check_symmetries()
    return diamond


def hodge_diamond(datum: AlgebraicDatum, table: EigenDimTable | None = None) -> HodgeDiamond:
    """Hodge diamond by exact convolution of the eigenspace tables.

    For free data the holomorphic Euler characteristic and the topological
    Euler number are cross-checked against the product formulas.
    """
    if table is None:
        table = eigendim_table(datum)
    d1, d2, d3 = table.tables

    h10 = sum(t.get(datum.group.trivial_character, 0) for t in (d1, d2, d3))
    pairs = ((d1, d2), (d1, d3), (d2, d3))
    h20 = sum(a[chi] * b.get(-chi, 0) for a, b in pairs for chi in a)
    h11 = 3 + 2 * sum(a[chi] * b.get(chi, 0) for a, b in pairs for chi in a)
    h30 = sum(d1[c1] * d2[c2] * d3.get(-(c1 + c2), 0) for c1 in d1 for c2 in d2)
    # Conjugating one slot of the (3,0) convolution gives the primitive part
    # of h^{2,1}; the three fibration classes add 2 per base 1-form.
    h21 = 2 * h10
    h21 += sum(d1.get(c2 + c3, 0) * d2[c2] * d3[c3] for c2 in d2 for c3 in d3)
    h21 += sum(d1[c1] * d2.get(c1 + c3, 0) * d3[c3] for c1 in d1 for c3 in d3)
    h21 += sum(d1[c1] * d2[c2] * d3.get(c1 + c2, 0) for c1 in d1 for c2 in d2)

    diamond = _assemble_diamond(h10, h20, h30, h11, h21)

    report = validate_datum(datum)
    if report.ok:
        inv = invariants(datum)
        if diamond.chi_structure_sheaf() != inv.chi_structure_sheaf:
            raise ConsistencyError(
                f"chi(O) mismatch: diamond gives {diamond.chi_structure_sheaf()}, "
                f"product formula gives {inv.chi_structure_sheaf}")
        if diamond.euler_number() != inv.euler_number:
            raise ConsistencyError(
                f"Euler number mismatch: diamond gives {diamond.euler_number()}, "
                f"product formula gives {inv.euler_number}")
    return diamond


def isotypic_decomposition(datum: AlgebraicDatum, p: int, q: int,
                           table: EigenDimTable | None = None,
                           ) -> list[tuple[Character, int]]:
    """Isotypic pieces of ``H^{p,q}(X)`` under the descended product action.

    Returns pairs ``(psi, dim)`` with ``psi`` a character of ``G^3`` whose
    components multiply to the trivial character; only positive dimensions
    are listed, sorted by character exponents.  Supported for
    ``(p, q) in {(3,0), (2,1), (2,0), (1,1)}``; the other summands follow
    by conjugation and duality.
    """
    if (p, q) not in {(3, 0), (2, 1), (2, 0), (1, 1)}:
        raise ValueError(f"unsupported Hodge summand ({p},{q})")
    if table is None:
        table = eigendim_table(datum)
    d1, d2, d3 = table.tables
    cube = direct_product([datum.group] * 3)
    zero = datum.group.trivial_character
    acc: dict[tuple[int, ...], int] = {}

    def add(c1: Character, c2: Character, c3: Character, dim: int) -> None:
        if dim:
            key = c1.exponents + c2.exponents + c3.exponents
            acc[key] = acc.get(key, 0) + dim

    if (p, q) == (3, 0):
        for c1 in d1:
            for c2 in d2:
                c3 = -(c1 + c2)
                add(c1, c2, c3, d1[c1] * d2[c2] * d3.get(c3, 0))
    elif (p, q) == (2, 1):
        for c2 in d2:
            for c3 in d3:
                c1 = -(c2 + c3)
                base = d2[c2] * d3[c3]
                add(c1, c2, c3, d1.get(-c1, 0) * base)
        for c1 in d1:
            for c3 in d3:
                c2 = -(c1 + c3)
                add(c1, c2, c3, d1[c1] * d2.get(-c2, 0) * d3[c3])
        for c1 in d1:
            for c2 in d2:
                c3 = -(c1 + c2)
                add(c1, c2, c3, d1[c1] * d2[c2] * d3.get(-c3, 0))
        add(zero, zero, zero, 2 * sum(t.get(zero, 0) for t in (d1, d2, d3)))
    elif (p, q) == (2, 0):
        slots = ((0, 1, d1, d2), (0, 2, d1, d3), (1, 2, d2, d3))
        for i, j, a, b in slots:
            for chi in a:
                comps = [zero, zero, zero]
                comps[i], comps[j] = chi, -chi
                add(*comps, a[chi] * b.get(-chi, 0))
    else:  # (1, 1)
        slots = ((0, 1, d1, d2), (0, 2, d1, d3), (1, 2, d2, d3))
        for i, j, a, b in slots:
            for chi in a:
                dim = a[chi] * b.get(chi, 0)
                comps = [zero, zero, zero]
                comps[i], comps[j] = chi, -chi
                add(*comps, dim)
                comps[i], comps[j] = -chi, chi
                add(*comps, dim)
        add(zero, zero, zero, 3)

    out = [(cube.character(key), dim) for key, dim in sorted(acc.items())]
    total = sum(dim for _, dim in out)
    expected = hodge_diamond(datum, table)[p, q]
    if total != expected:
        raise ConsistencyError(
            f"isotypic dimensions for ({p},{q}) sum to {total}, "
            f"Hodge number is {expected}")
    return out
