"""Numerically trivial automorphisms of the quotient 3-fold.

The automorphisms descended from the product form ``G^3 / K Delta_G``; an
element is numerically trivial iff every admissible character of ``G^3``
vanishes on it.  The intersection of those kernels is computed dually (one
annihilator call on the subgroup of the dual generated by the admissible
characters), and the quotient by ``K Delta_G`` is reported through its
invariant factors and explicit generator cosets.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .covering import stabilizer_union
from .datum import AlgebraicDatum, DatumReport, RigidityClass, rigidity_class, validate_datum
from .errors import ConsistencyError, TheoremViolationError, UnsupportedDatumError
from .groups import (
    AbelianGroup,
    Character,
    GroupElement,
    InvariantFactors,
    QuotientStructure,
    Subgroup,
    diagonal_subgroup,
    direct_product,
    product_element,
    product_subgroup,
    split_element,
    subgroup_quotient,
)

# Cosets are canonicalized by scanning their adjustment subgroup for the
# lexicographically least representative; beyond this many cosets per scan
# the representative is left in reduced (third-component-zero) form.
CANONICALIZE_CAP = 2 ** 16


class AdmissibleKind(enum.Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class AdmissibleCharacter:
    """Character triple on ``G^3`` vanishing on ``K Delta_G``.

    First kind: every component pre-admissible.  Second kind: exactly one
    component trivial, the other two pre-admissible and conjugate.
    """

    kind: AdmissibleKind
    components: tuple[Character, Character, Character]

    def on_cube(self, cube: AbelianGroup) -> Character:
        exps: tuple[int, ...] = ()
        for c in self.components:
            exps = exps + c.exponents
        return cube.character(exps)

    def sort_key(self) -> tuple:
        return (self.kind.value, tuple(c.exponents for c in self.components))


class Aut0Status(enum.Enum):
    PROVEN = "Proven"
    TRIVIAL_BY_RIGIDITY = "TrivialByRigidity"
    KERNEL_ONLY = "KernelOnly"
    NON_FREE_KERNEL_ONLY = "NonFreeKernelOnly"


@dataclass(frozen=True)
class Aut0Result:
    status: Aut0Status
    invariant_factors: InvariantFactors
    generators: tuple[GroupElement, ...]
    admissible_counts: tuple[int, int]
    cube: AbelianGroup
    kernel: Subgroup | None
    k_delta: Subgroup | None
    quotient: QuotientStructure | None

    @property
    def order(self) -> int:
        return self.invariant_factors.order

    def same_coset(self, rep_a: GroupElement, rep_b: GroupElement) -> bool:
        if self.k_delta is None:
            return rep_a == rep_b
        return self.k_delta.contains(rep_a - rep_b)

    def cosets_generate(self, reps: list[GroupElement]) -> bool:
        """Do the given representatives generate the whole quotient?"""
        if self.quotient is None:
            return not self.invariant_factors.factors
        images = [self.quotient.project(r) for r in reps]
        sub = self.quotient.group.subgroup(images)
        return sub.order == self.quotient.group.order


def pre_admissible(datum: AlgebraicDatum, i: int, chi: Character) -> bool:
    """Does ``chi`` vanish on ``K_i`` and act nontrivially on some element
    with a fixed point on the i-th curve?"""
    for gen in datum.kernels[i].generators:
        if not chi.pairing(gen).is_zero:
            return False
    q = datum.quotients[i]
    for sigma in stabilizer_union(datum.vectors[i]):
        if not chi.pairing(q.lift(sigma)).is_zero:
            return True
    return False


def _pre_admissible_set(datum: AlgebraicDatum, i: int) -> list[Character]:
    out = []
    for elem in datum.kernels[i].annihilator().elements():
        chi = datum.group.character(elem.exponents)
        if pre_admissible(datum, i, chi):
            out.append(chi)
    return sorted(out, key=lambda c: c.sort_key())


def admissible_characters(datum: AlgebraicDatum,
                          ) -> tuple[list[AdmissibleCharacter], list[AdmissibleCharacter]]:
    """Complete enumeration of the admissible characters of both kinds."""
    pre = [_pre_admissible_set(datum, i) for i in range(3)]
    pre_lookup = [set(p) for p in pre]
    first = []
    for c1, c2 in itertools.product(pre[0], pre[1]):
        c3 = -(c1 + c2)
        if c3 in pre_lookup[2]:
            first.append(AdmissibleCharacter(AdmissibleKind.FIRST, (c1, c2, c3)))
    second = []
    trivial = datum.group.trivial_character
    for trivial_slot, i, j in ((2, 0, 1), (1, 0, 2), (0, 1, 2)):
        for chi in pre[i]:
            if -chi in pre_lookup[j]:
                comps = [trivial, trivial, trivial]
                comps[i], comps[j] = chi, -chi
                second.append(AdmissibleCharacter(AdmissibleKind.SECOND, tuple(comps)))
    first.sort(key=lambda a: a.sort_key())
    second.sort(key=lambda a: a.sort_key())
    return first, second


def _k_delta(datum: AlgebraicDatum) -> Subgroup:
    return product_subgroup(list(datum.kernels)).sum(
        diagonal_subgroup(datum.group, 3))


def representation_kernel(datum: AlgebraicDatum, p: int, q: int) -> Subgroup:
    """Kernel in ``G^3`` of the action on ``H^{p,q}``: the annihilator of
    the dual subgroup generated by the characters appearing in that summand.

    With elliptic bases the nontrivial characters of ``H^{3,0}`` are the
    admissible ones of the first and second kind.  Conjugating one Kunneth
    slot for ``H^{2,1}`` lands back in the same set: a surviving piece
    ``bar(W_1^chi) (x) W_2^{c_2} (x) W_3^{c_3}`` needs ``chi = c_2 + c_3``,
    so its character ``(-chi, c_2, c_3)`` again sums to zero with
    pre-admissible components.  Likewise ``H^{1,1}`` and ``H^{2,0}`` both
    see exactly the second kind up to negation, which does not change the
    annihilator.  Hence the two kernel equalities hold at the level of
    character sets.
    """
    if (p, q) not in {(3, 0), (2, 1), (2, 0), (1, 1)}:
        raise ValueError(f"representation kernel supported for (3,0),(2,1),(2,0),(1,1); "
                         f"got ({p},{q})")
    first, second = admissible_characters(datum)
    characters = first + second if p + q == 3 else second
    cube = direct_product([datum.group] * 3)
    dual_gens = [psi.on_cube(cube).as_element() for psi in characters]
    kernel = cube.subgroup(dual_gens).annihilator()
    if not _k_delta(datum).is_subgroup_of(kernel):
        raise ConsistencyError(
            f"K Delta_G is not contained in the ({p},{q}) kernel; "
            "the admissible enumeration is inconsistent")
    return kernel


def verify_generator(datum: AlgebraicDatum, rep: GroupElement) -> bool:
    """Independent check that a triple is numerically trivial: every
    admissible character must vanish on it.  No annihilator machinery."""
    cube = direct_product([datum.group] * 3)
    if rep.group != cube:
        rep = cube.element(rep.exponents)
    first, second = admissible_characters(datum)
    return all(psi.on_cube(cube).pairing(rep).is_zero for psi in first + second)


def _canonical_representative(datum: AlgebraicDatum, rep: GroupElement,
                              cube: AbelianGroup) -> GroupElement:
    """Normalize the third component to the identity, then pick the
    lexicographically least representative of the coset."""
    g = datum.group
    parts = split_element(rep, [g, g, g])
    rep = product_element(cube, (parts[0] - parts[2], parts[1] - parts[2], g.zero))
    # Remaining freedom fixing the third slot: add (k1 - k3, k2 - k3, 0).
    gens = []
    for k in datum.kernels[0].generators:
        gens.append(product_element(cube, (k, g.zero, g.zero)))
    for k in datum.kernels[1].generators:
        gens.append(product_element(cube, (g.zero, k, g.zero)))
    for k in datum.kernels[2].generators:
        gens.append(product_element(cube, (-k, -k, g.zero)))
    adjust = cube.subgroup(gens)
    if adjust.order > CANONICALIZE_CAP:
        return rep
    return min((rep + s for s in adjust.elements()), key=lambda e: e.sort_key())


def aut0(datum: AlgebraicDatum, report: DatumReport | None = None) -> Aut0Result:
    """The group of numerically trivial automorphisms (or the kernel
    quotient standing in for it), with generators and a proof status."""
    if report is None:
        report = validate_datum(datum)
    klass = rigidity_class(datum)
    if klass is RigidityClass.UNSUPPORTED:
        raise UnsupportedDatumError(
            "the classification needs irregularity 3 with no rational base curve "
            "(or irregularity >= 4)")
    first, second = admissible_characters(datum)
    counts = (len(first), len(second))
    cube = direct_product([datum.group] * 3)

    if report.freeness_ok and klass is RigidityClass.TRIVIAL_BY_RIGIDITY:
        return Aut0Result(Aut0Status.TRIVIAL_BY_RIGIDITY, InvariantFactors(()), (),
                          counts, cube, None, None, None)

    kernel = representation_kernel(datum, 3, 0)
    k_delta = _k_delta(datum)
    quotient = subgroup_quotient(kernel, k_delta)
    generators = tuple(_canonical_representative(datum, gen, cube)
                       for gen in quotient.generators)

    if not report.freeness_ok:
        status = Aut0Status.NON_FREE_KERNEL_ONLY
    elif klass is RigidityClass.AUT0_COMPUTABLE:
        status = Aut0Status.PROVEN
    else:
        status = Aut0Status.KERNEL_ONLY

    factors = quotient.invariant_factors
    if status is Aut0Status.PROVEN:
        if factors.order > 4 or any(d != 2 for d in factors):
            raise TheoremViolationError(
                f"datum satisfies the cyclic-kernel hypotheses but the quotient is "
                f"{factors}; expected a 2-elementary group of order <= 4")
    if status is Aut0Status.KERNEL_ONLY and factors.order > 4:
        raise TheoremViolationError(
            f"free datum with irregularity 3 has kernel quotient of order "
            f"{factors.order} > 4")
    return Aut0Result(status, factors, generators, counts, cube, kernel, k_delta, quotient)
