"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import random

from hypothesis import HealthCheck, settings, strategies as st

from isoprod.groups import AbelianGroup, GroupElement, Subgroup

settings.register_profile(
    "suite",
    max_examples=30,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@st.composite
def abelian_groups(draw, max_rank: int = 3, max_order: int = 256) -> AbelianGroup:
    rank = draw(st.integers(min_value=1, max_value=max_rank))
    orders = []
    total = 1
    for _ in range(rank):
        n = draw(st.sampled_from([2, 2, 3, 4, 4, 5, 6, 8, 9]))
        if total * n > max_order:
            break
        orders.append(n)
        total *= n
    if not orders:
        orders = [2]
    return AbelianGroup(orders)


@st.composite
def group_elements(draw, group: AbelianGroup) -> GroupElement:
    exps = [draw(st.integers(min_value=0, max_value=n - 1)) for n in group.orders]
    return group.element(exps)


@st.composite
def subgroups(draw, group: AbelianGroup, max_gens: int = 3) -> Subgroup:
    k = draw(st.integers(min_value=0, max_value=max_gens))
    gens = [draw(group_elements(group)) for _ in range(k)]
    return group.subgroup(gens)


@st.composite
def groups_with_subgroup(draw):
    group = draw(abelian_groups())
    return group, draw(subgroups(group))


def random_group(rng: random.Random, max_rank: int = 3, max_order: int = 256) -> AbelianGroup:
    orders = []
    total = 1
    for _ in range(rng.randint(1, max_rank)):
        n = rng.choice([2, 2, 3, 4, 4, 5, 6, 8])
        if total * n > max_order:
            break
        orders.append(n)
        total *= n
    return AbelianGroup(orders or [2])


def random_element(rng: random.Random, group: AbelianGroup) -> GroupElement:
    return group.element(rng.randrange(n) for n in group.orders)


def random_subgroup(rng: random.Random, group: AbelianGroup, max_gens: int = 3) -> Subgroup:
    gens = [random_element(rng, group) for _ in range(rng.randint(0, max_gens))]
    return group.subgroup(gens)
