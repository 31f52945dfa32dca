"""The algebraic datum of a 3-fold isogenous to a product of unmixed type.

A datum is ``(G, K_1, K_2, K_3, V_1, V_2, V_3)``: an ambient finite
abelian group, three pairwise trivially-intersecting kernels, and a
generating vector over each quotient ``G/K_i``.  Branch and handle
elements are supplied as representatives in ``G`` and reduced to the
quotients internally.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .covering import GeneratingVector, ValidationOutcome, genus, stabilizer_union
from .errors import ConsistencyError, StructuralError
from .groups import (
    AbelianGroup,
    GroupElement,
    QuotientStructure,
    Subgroup,
    quotient_structure,
)


@dataclass(frozen=True)
class VectorSpec:
    """Raw input for one generating vector: representatives in the ambient group."""

    g_prime: int
    branch: tuple[GroupElement, ...]
    eta: tuple[GroupElement, ...]


@dataclass(frozen=True)
class AlgebraicDatum:
    group: AbelianGroup
    kernels: tuple[Subgroup, Subgroup, Subgroup]
    vectors: tuple[GeneratingVector, GeneratingVector, GeneratingVector]
    quotients: tuple[QuotientStructure, QuotientStructure, QuotientStructure]
    raw_vectors: tuple[VectorSpec, VectorSpec, VectorSpec]

    @staticmethod
    def build(group: AbelianGroup,
              kernel_generators: Sequence[Sequence[GroupElement]],
              vector_specs: Sequence[VectorSpec]) -> "AlgebraicDatum":
        if len(kernel_generators) != 3:
            raise StructuralError(f"expected 3 kernels, got {len(kernel_generators)}")
        if len(vector_specs) != 3:
            raise StructuralError(f"expected 3 generating vectors, got {len(vector_specs)}")
        kernels = []
        for i, gens in enumerate(kernel_generators):
            for g in gens:
                if g.group != group:
                    raise StructuralError(f"kernel {i + 1} generator outside the ambient group")
            kernels.append(group.subgroup(gens))
        quotients = tuple(quotient_structure(group, k) for k in kernels)
        vectors = []
        for i, spec in enumerate(vector_specs):
            for g in spec.branch + spec.eta:
                if g.group != group:
                    raise StructuralError(f"vector {i + 1} entry outside the ambient group")
            q = quotients[i]
            vectors.append(GeneratingVector(
                q.group, spec.g_prime,
                tuple(q.project(g) for g in spec.branch),
                tuple(q.project(g) for g in spec.eta)))
        return AlgebraicDatum(group, tuple(kernels), tuple(vectors),
                              quotients, tuple(vector_specs))

    def stabilizer_preimage(self, i: int) -> frozenset[GroupElement]:
        """Elements of G acting with a fixed point on the i-th curve: the
        full preimage of the stabilizer union of V_i, which contains K_i."""
        q = self.quotients[i]
        kernel_elements = list(self.kernels[i].elements())
        out = set()
        for s in stabilizer_union(self.vectors[i]):
            lifted = q.lift(s)
            for k in kernel_elements:
                out.add(lifted + k)
        return frozenset(out)


class RigidityClass(enum.Enum):
    TRIVIAL_BY_RIGIDITY = "TrivialByRigidity"
    AUT0_COMPUTABLE = "Aut0Computable"
    KERNEL_ONLY = "KernelOnly"
    UNSUPPORTED = "Unsupported"


@dataclass(frozen=True)
class DatumReport:
    minimality_ok: bool
    minimality_witness: tuple[int, int] | None
    freeness_ok: bool
    freeness_witness: GroupElement | None
    vector_outcomes: tuple[ValidationOutcome, ValidationOutcome, ValidationOutcome]
    genera: tuple[int, int, int]
    irregularity: int
    all_kernels_cyclic: bool
    all_bases_elliptic: bool
    all_genera_at_least_two: bool

    @property
    def vectors_ok(self) -> bool:
        return all(v.ok for v in self.vector_outcomes)

    @property
    def ok(self) -> bool:
        """Full validity: minimal, free, valid vectors, fibre genera >= 2."""
        return (self.minimality_ok and self.freeness_ok and self.vectors_ok
                and self.all_genera_at_least_two)

    @property
    def is_product_quotient(self) -> bool:
        """Structurally sound but with a non-free action."""
        return (self.minimality_ok and self.vectors_ok
                and self.all_genera_at_least_two and not self.freeness_ok)


def validate_datum(datum: AlgebraicDatum) -> DatumReport:
    """Minimality, freeness (evaluated through preimages in G), vector
    validity, genera, and the hypothesis flags of the classification."""
    minimality_ok = True
    minimality_witness = None
    for i in range(3):
        for j in range(i + 1, 3):
            if not (datum.kernels[i] & datum.kernels[j]).is_trivial:
                minimality_ok = False
                if minimality_witness is None:
                    minimality_witness = (i + 1, j + 1)
    outcomes = tuple(v.validate() for v in datum.vectors)

    common = datum.stabilizer_preimage(0) & datum.stabilizer_preimage(1) \
        & datum.stabilizer_preimage(2)
    nontrivial = sorted((g for g in common if not g.is_zero),
                        key=lambda g: g.sort_key())
    freeness_ok = not nontrivial
    freeness_witness = nontrivial[0] if nontrivial else None

    genera = tuple(genus(v) for v in datum.vectors)
    g_primes = [v.g_prime for v in datum.vectors]
    return DatumReport(
        minimality_ok=minimality_ok,
        minimality_witness=minimality_witness,
        freeness_ok=freeness_ok,
        freeness_witness=freeness_witness,
        vector_outcomes=outcomes,
        genera=genera,
        irregularity=sum(g_primes),
        all_kernels_cyclic=all(k.is_cyclic for k in datum.kernels),
        all_bases_elliptic=all(gp == 1 for gp in g_primes),
        all_genera_at_least_two=all(g >= 2 for g in genera),
    )


@dataclass(frozen=True)
class NumericalInvariants:
    genera: tuple[int, int, int]
    chi_structure_sheaf: int
    euler_number: int
    canonical_cube: int


def invariants(datum: AlgebraicDatum) -> NumericalInvariants:
    """Coarse invariants of the free quotient: etale multiplicativity gives
    ``chi(O) = -prod(g_i - 1)/|G|``, ``e = prod(2 - 2 g_i)/|G|`` and
    ``K^3 = 48 prod(g_i - 1)/|G|``."""
    genera = tuple(genus(v) for v in datum.vectors)
    order = datum.group.order
    top = (genera[0] - 1) * (genera[1] - 1) * (genera[2] - 1)
    e_top = (2 - 2 * genera[0]) * (2 - 2 * genera[1]) * (2 - 2 * genera[2])
    if top % order or e_top % order:
        raise ConsistencyError(
            "group order does not divide the product invariants; the action cannot be free")
    return NumericalInvariants(
        genera=genera,
        chi_structure_sheaf=-top // order,
        euler_number=e_top // order,
        canonical_cube=48 * top // order,
    )


def rigidity_class(datum: AlgebraicDatum) -> RigidityClass:
    """Status logic consumed by the automorphism computation."""
    g_primes = [v.g_prime for v in datum.vectors]
    q = sum(g_primes)
    if any(gp == 0 for gp in g_primes) or q <= 2:
        return RigidityClass.UNSUPPORTED
    if q >= 4:
        return RigidityClass.TRIVIAL_BY_RIGIDITY
    if all(k.is_cyclic for k in datum.kernels):
        return RigidityClass.AUT0_COMPUTABLE
    return RigidityClass.KERNEL_ONLY
