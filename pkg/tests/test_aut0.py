"""Admissible characters and the numerically trivial automorphism group."""

from __future__ import annotations

import itertools

import pytest

from isoprod.aut0 import (
    AdmissibleKind,
    Aut0Status,
    admissible_characters,
    aut0,
    pre_admissible,
    representation_kernel,
    verify_generator,
    _k_delta,
)
from isoprod.datum import AlgebraicDatum, VectorSpec, validate_datum
from isoprod.errors import TheoremViolationError, UnsupportedDatumError
from isoprod.examples import example1, example2a, example2b, example3, example4
from isoprod.groups import AbelianGroup, direct_product, product_element


def triple(datum, cube, exps1, exps2, exps3):
    g = datum.group
    return product_element(cube, [g.element(exps1), g.element(exps2),
                                  g.element(exps3)])


class TestPreAdmissible:
    def test_must_kill_kernel(self):
        d = example1()
        chi = d.group.character((1, 0, 0))  # nontrivial on K_1 = <e_1>
        assert not pre_admissible(d, 0, chi)

    def test_must_detect_a_stabilizer(self):
        d = example1()
        # Vanishes on K_1 and on sigma_1 = e_3: invisible to every fixed point.
        assert not pre_admissible(d, 0, d.group.character((0, 1, 0)))
        assert pre_admissible(d, 0, d.group.character((0, 0, 1)))

    def test_closed_under_negation(self):
        d = example1(2, 1, 3)
        for i in range(3):
            for elem in d.kernels[i].annihilator().elements():
                chi = d.group.character(elem.exponents)
                assert pre_admissible(d, i, chi) == pre_admissible(d, i, -chi)


class TestAdmissibleSets:
    def test_smallest_case_single_character(self):
        first, second = admissible_characters(example1())
        assert len(first) == 1 and len(second) == 0
        assert [c.exponents for c in first[0].components] == \
            [(0, 1, 1), (1, 0, 1), (1, 1, 0)]

    def test_general_parameters_all_odd_exponents(self):
        # Membership rule for the first family: every component exponent odd.
        d = example1(2, 1, 3)
        first, second = admissible_characters(d)
        assert (len(first), len(second)) == (2 * 1 * 3, 0)
        for adm in first:
            c1, c2, c3 = (c.exponents for c in adm.components)
            assert c1[0] == c2[1] == c3[2] == 0
            assert all(e % 2 == 1 for e in (c1[1], c1[2], c2[0], c2[2],
                                            c3[0], c3[1]))

    def test_second_family_membership_rule(self):
        # k1 odd, k2 even (and nonzero mod 2 n3 jointly), k3 arbitrary.
        d = example2a(2, 2, 2)
        first, second = admissible_characters(d)
        for adm in first:
            c1, c2, c3 = (c.exponents for c in adm.components)
            assert c2[0] % 2 == 1        # phi_1 exponent odd
            assert c3[1] % 2 == 0        # phi_2 exponent even on slot 3
        assert second  # the second kind is nonempty for this family

    def test_singular_family_is_second_kind_only(self):
        for n in (1, 2, 3):
            first, second = admissible_characters(example3(n))
            assert first == []
            assert len(second) == 2 * n  # k_2, k_3 odd; two trivial-slot shapes
            shapes = {tuple(c.is_trivial for c in adm.components)
                      for adm in second}
            assert shapes == {(False, False, True), (False, True, False)}
            for adm in second:
                assert adm.kind is AdmissibleKind.SECOND

    def test_non_cyclic_kernel_example_exact_set(self):
        first, second = admissible_characters(example4())
        got = sorted([c.exponents for c in adm.components]
                     for adm in first + second)
        assert got == sorted([
            [(1, 0, 1, 0), (1, 0, 1, 0), (0, 0, 0, 0)],
            [(1, 1, 1, 0), (1, 0, 1, 0), (0, 1, 0, 0)],
            [(1, 1, 1, 0), (1, 0, 1, 1), (0, 1, 0, 1)],
        ])

    def test_components_sum_to_zero(self):
        for factory in (example1, example2a, example2b, example4,
                        lambda: example3(2)):
            first, second = admissible_characters(factory())
            for adm in first + second:
                total = sum((c.as_element() for c in adm.components),
                            factory().group.zero)
                assert total.is_zero


class TestRepresentationKernel:
    @pytest.mark.parametrize("factory", [example1, example2a, example2b,
                                         example4, lambda: example3(3)])
    def test_kernel_chain(self, factory):
        d = factory()
        k30 = representation_kernel(d, 3, 0)
        k21 = representation_kernel(d, 2, 1)
        k20 = representation_kernel(d, 2, 0)
        k11 = representation_kernel(d, 1, 1)
        assert k30.basis == k21.basis
        assert k20.basis == k11.basis
        assert k30.is_subgroup_of(k20)

    def test_contains_k_delta(self):
        d = example1(2, 2, 3)
        kernel = representation_kernel(d, 3, 0)
        assert _k_delta(d).is_subgroup_of(kernel)

    def test_unsupported_summand(self):
        with pytest.raises(ValueError):
            representation_kernel(example1(), 1, 0)


class TestExampleAut0:
    def test_first_family_all_parameters(self):
        for n1, n2, n3 in itertools.product((1, 2, 3), repeat=3):
            d = example1(n1, n2, n3)
            r = aut0(d)
            assert r.status is Aut0Status.PROVEN
            assert list(r.invariant_factors) == [2, 2]
            a = triple(d, r.cube, (0, n2, 0), (n1, 0, 0), (0, 0, 0))
            b = triple(d, r.cube, (0, n2, 0), (0, 0, n3), (0, 0, 0))
            assert verify_generator(d, a) and verify_generator(d, b)
            assert r.cosets_generate([a, b])
            assert not r.same_coset(a, b)

    def test_second_family_variant_a(self):
        for n1, n2, n3 in itertools.product((1, 2, 3), repeat=3):
            d = example2a(n1, n2, n3)
            r = aut0(d)
            assert r.status is Aut0Status.PROVEN
            assert list(r.invariant_factors) == [2]
            gen = triple(d, r.cube, (0, n2, 0), (0, 0, 0), (0, 0, 0))
            assert verify_generator(d, gen)
            assert r.cosets_generate([gen])

    def test_second_family_variant_b(self):
        # For n1 >= 3 the group is Z_2 generated by (e2^{n2}, e3^{n3}, 1).
        # At n1 = 2 the doubled branch element has order 2 in its quotient,
        # the slot-2 character exponents are only constrained mod 2, and a
        # second class (e2^{n2}, e1^2, 1) survives: the group is Z_2 x Z_2.
        for n1, n2, n3 in itertools.product((2, 3), (1, 2, 3), (1, 2, 3)):
            d = example2b(n1, n2, n3)
            r = aut0(d)
            assert r.status is Aut0Status.PROVEN
            gen = triple(d, r.cube, (0, n2, 0), (0, 0, n3), (0, 0, 0))
            assert verify_generator(d, gen)
            if n1 == 2:
                assert list(r.invariant_factors) == [2, 2]
                extra = triple(d, r.cube, (0, n2, 0), (2, 0, 0), (0, 0, 0))
                assert verify_generator(d, extra)
                assert r.cosets_generate([gen, extra])
            else:
                assert list(r.invariant_factors) == [2]
                assert r.cosets_generate([gen])

    def test_singular_family(self):
        for n in (1, 2, 3):
            d = example3(n)
            r = aut0(d)
            assert r.status is Aut0Status.NON_FREE_KERNEL_ONLY
            assert list(r.invariant_factors) == [2 * n]
            gen = triple(d, r.cube, (0, 0, 0), (1, 0, 0), (0, 0, 0))
            assert verify_generator(d, gen)
            assert r.cosets_generate([gen])

    def test_non_cyclic_kernel_example(self):
        d = example4()
        r = aut0(d)
        assert r.status is Aut0Status.KERNEL_ONLY
        assert list(r.invariant_factors) == [2]
        gen = triple(d, r.cube, (0, 0, 1, 0), (1, 0, 0, 0), (0, 0, 0, 0))
        assert verify_generator(d, gen)
        assert r.cosets_generate([gen])
        # The canonical representative differs but names the same coset.
        assert r.same_coset(r.generators[0], gen)


class TestStatuses:
    def test_trivial_by_rigidity(self):
        g = AbelianGroup([2])
        e = g.basis_element(0)
        # Unramified double covers of genus-2 bases: free, and every base
        # has genus >= 2, so rigidity applies.
        spec = VectorSpec(2, (), (e, g.zero, e, g.zero))
        d = AlgebraicDatum.build(g, [[], [], []], [spec, spec, spec])
        r = aut0(d)
        assert r.status is Aut0Status.TRIVIAL_BY_RIGIDITY
        assert r.order == 1
        assert r.generators == ()

    def test_unsupported_raises(self):
        g = AbelianGroup([2])
        e = g.basis_element(0)
        rational = VectorSpec(0, (e,) * 4, ())
        elliptic = VectorSpec(2, (e, e), (e, g.zero, e, g.zero))
        d = AlgebraicDatum.build(g, [[], [], []],
                                 [rational, elliptic, elliptic])
        with pytest.raises(UnsupportedDatumError):
            aut0(d)

    def test_order_divides_kernel_index(self):
        for factory in (example1, example2a, example4):
            d = factory()
            r = aut0(d)
            assert r.kernel.order % r.k_delta.order == 0
            assert r.order == r.kernel.order // r.k_delta.order


class TestVerifyGenerator:
    def test_rejects_non_member(self):
        d = example1()
        cube = direct_product([d.group] * 3)
        bad = triple(d, cube, (0, 1, 0), (0, 0, 0), (0, 0, 0))
        assert not verify_generator(d, bad)

    def test_accepts_k_delta(self):
        d = example1(2, 1, 3)
        for gen in _k_delta(d).generators:
            assert verify_generator(d, gen)
