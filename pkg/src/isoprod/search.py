"""Bounded enumeration of algebraic data over a fixed ambient group.

The candidate space is: a set of kernel triples (all cyclic subgroups, or
an explicit list), and per factor all branch multisets with trivial
product plus all handle tuples.  Enumeration is deterministic, prunes in
cost order (product relation, generation, freeness), and the survey
aggregates the distribution of the numerically trivial automorphism
groups.  The automorphism computation only depends on the kernels and the
branch multisets, so the survey runs it once per branch triple and counts
handle choices by multiplicity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

from .aut0 import Aut0Result, aut0, verify_generator
from .covering import GeneratingVector, genus
from .datum import AlgebraicDatum, VectorSpec, validate_datum
from .errors import SearchCapError, StructuralError, TheoremViolationError
from .groups import AbelianGroup, GroupElement, Subgroup, quotient_structure

DEFAULT_CAP = 2_000_000


@dataclass(frozen=True)
class SearchSpec:
    """Finite description of a search space.

    ``kernels`` is either the policy string ``"cyclic"`` (all cyclic
    subgroups, minimality-filtered) or an explicit list of triples of
    generator exponent lists.
    """

    group_orders: tuple[int, ...]
    kernels: object = "cyclic"
    g_primes: tuple[int, int, int] = (1, 1, 1)
    max_branch: int = 4
    branch_order_bound: int | None = None
    cap: int = DEFAULT_CAP

    @staticmethod
    def from_document(doc: dict) -> "SearchSpec":
        if not isinstance(doc, dict) or "group" not in doc:
            raise StructuralError('search spec must be an object with a "group" key')
        try:
            orders = tuple(int(n) for n in doc["group"])
            g_primes = tuple(int(x) for x in doc.get("g_primes", (1, 1, 1)))
            spec = SearchSpec(
                group_orders=orders,
                kernels=_parse_kernel_policy(doc.get("kernels", "cyclic"), len(orders)),
                g_primes=g_primes,
                max_branch=int(doc.get("max_branch", 4)),
                branch_order_bound=(int(doc["branch_order_bound"])
                                    if "branch_order_bound" in doc else None),
                cap=int(doc.get("cap", DEFAULT_CAP)))
        except (KeyError, TypeError, ValueError) as exc:
            raise StructuralError(f"malformed search spec: {exc}") from exc
        if len(spec.g_primes) != 3:
            raise StructuralError("g_primes must list three base genera")
        return spec


def _parse_kernel_policy(value: object, rank: int) -> object:
    """``"cyclic"`` or a list of kernel triples, each kernel a list of
    generator exponent lists of the ambient rank."""
    if value == "cyclic":
        return "cyclic"
    if not isinstance(value, (list, tuple)):
        raise StructuralError('kernels must be "cyclic" or a list of kernel triples')
    triples = []
    for triple in value:
        if not isinstance(triple, (list, tuple)) or len(triple) != 3:
            raise StructuralError(f"kernel triple must list 3 kernels, got {triple!r}")
        parsed = []
        for gens in triple:
            if not isinstance(gens, (list, tuple)):
                raise StructuralError(f"kernel generators must be a list, got {gens!r}")
            kernel = []
            for gen in gens:
                if (not isinstance(gen, (list, tuple)) or len(gen) != rank
                        or not all(isinstance(x, int) for x in gen)):
                    raise StructuralError(
                        f"generator must be a list of {rank} integers, got {gen!r}")
                kernel.append(tuple(gen))
            parsed.append(tuple(kernel))
        triples.append(tuple(parsed))
    return tuple(triples)


def _cyclic_subgroups(group: AbelianGroup) -> list[Subgroup]:
    seen = {}
    for g in group.elements():
        sub = group.subgroup([g])
        seen.setdefault(sub.basis, sub)
    return sorted(seen.values(), key=lambda s: (s.order, s.basis))


def _kernel_triples(spec: SearchSpec, group: AbelianGroup) -> list[tuple[Subgroup, ...]]:
    if spec.kernels == "cyclic":
        cyclic = _cyclic_subgroups(group)
        triples = itertools.product(cyclic, repeat=3)
    else:
        triples = (
            tuple(group.subgroup([group.element(gen) for gen in gens])
                  for gens in triple)
            for triple in spec.kernels)
    out = []
    for triple in triples:
        if all((triple[i] & triple[j]).is_trivial
               for i in range(3) for j in range(i + 1, 3)):
            out.append(triple)
    return out


def _branch_multisets(quotient: AbelianGroup, max_r: int,
                      order_bound: int | None) -> list[tuple[GroupElement, ...]]:
    """Nondecreasing tuples of nontrivial elements with trivial product."""
    pool = sorted((g for g in quotient.elements() if not g.is_zero),
                  key=lambda g: g.sort_key())
    if order_bound is not None:
        pool = [g for g in pool if g.order <= order_bound]
    out = []

    def extend(start: int, chosen: list[GroupElement], total: GroupElement) -> None:
        if len(chosen) >= 2 and total.is_zero:
            out.append(tuple(chosen))
        if len(chosen) == max_r:
            return
        for idx in range(start, len(pool)):
            chosen.append(pool[idx])
            extend(idx, chosen, total + pool[idx])
            chosen.pop()

    extend(0, [], quotient.zero)
    return out


@dataclass
class _FactorSpace:
    quotient_structure: object
    branch_sets: list[tuple[GroupElement, ...]]
    eta_tuples: list[tuple[GroupElement, ...]]


def _factor_spaces(spec: SearchSpec, kernels: Sequence[Subgroup],
                   group: AbelianGroup) -> list[_FactorSpace]:
    spaces = []
    for i, kernel in enumerate(kernels):
        q = quotient_structure(group, kernel)
        branch = [b for b in _branch_multisets(q.group, spec.max_branch,
                                               spec.branch_order_bound)
                  if genus(GeneratingVector(q.group, spec.g_primes[i], b, _any_eta(
                      q.group, spec.g_primes[i]))) >= 2]
        eta = sorted(
            itertools.product(
                sorted(q.group.elements(), key=lambda g: g.sort_key()),
                repeat=2 * spec.g_primes[i]),
            key=lambda t: tuple(g.sort_key() for g in t))
        spaces.append(_FactorSpace(q, branch, eta))
    return spaces


def _any_eta(quotient: AbelianGroup, g_prime: int) -> tuple[GroupElement, ...]:
    return tuple([quotient.zero] * (2 * g_prime))


def estimate_space(spec: SearchSpec) -> int:
    """Upper bound on the number of branch triples to be examined, computed
    before any validation work.  Handle tuples are weighted by counting and
    never iterated jointly, so they do not enter the work estimate."""
    group = AbelianGroup(spec.group_orders)
    total = 0
    for kernels in _kernel_triples(spec, group):
        per_factor = 1
        for kernel in kernels:
            n_pool = group.order // kernel.order - 1
            per_factor *= sum(comb(n_pool + r - 1, r)
                              for r in range(2, spec.max_branch + 1))
        total += per_factor
    return total


def _assemble(group: AbelianGroup, kernels: tuple[Subgroup, ...],
              spaces: list[_FactorSpace], g_primes: tuple[int, int, int],
              branches: Sequence[tuple[GroupElement, ...]],
              etas: Sequence[tuple[GroupElement, ...]]) -> AlgebraicDatum:
    vectors = []
    raw = []
    for i in range(3):
        q = spaces[i].quotient_structure
        vectors.append(GeneratingVector(q.group, g_primes[i], branches[i], etas[i]))
        raw.append(VectorSpec(g_primes[i],
                              tuple(q.lift(b) for b in branches[i]),
                              tuple(q.lift(e) for e in etas[i])))
    return AlgebraicDatum(group, kernels, tuple(vectors),
                          tuple(s.quotient_structure for s in spaces), tuple(raw))


def _generating_etas(quotient: AbelianGroup, branch: tuple[GroupElement, ...],
                     eta_tuples: list[tuple[GroupElement, ...]]) -> list:
    base = quotient.subgroup(branch)
    if base.order == quotient.order:
        return eta_tuples
    return [eta for eta in eta_tuples
            if quotient.subgroup(branch + eta).order == quotient.order]


def _is_free(datum: AlgebraicDatum) -> bool:
    common = datum.stabilizer_preimage(0) & datum.stabilizer_preimage(1) \
        & datum.stabilizer_preimage(2)
    return all(g.is_zero for g in common)


def enumerate_data(spec: SearchSpec) -> Iterator[AlgebraicDatum]:
    """Stream exactly the valid data of the space in canonical order.

    Branch tuples are emitted in nondecreasing element order, which is the
    permutation dedup; every emitted datum passes the full validation.
    """
    estimate = estimate_space(spec)
    if estimate > spec.cap:
        raise SearchCapError(
            f"estimated candidate space of {estimate} exceeds the cap of {spec.cap}")
    group = AbelianGroup(spec.group_orders)
    for kernels in _kernel_triples(spec, group):
        spaces = _factor_spaces(spec, kernels, group)
        for branches in itertools.product(*(s.branch_sets for s in spaces)):
            eta_choices = [
                _generating_etas(spaces[i].quotient_structure.group, branches[i],
                                 spaces[i].eta_tuples)
                for i in range(3)]
            if not all(eta_choices):
                continue
            probe = _assemble(group, kernels, spaces, spec.g_primes, branches,
                              tuple(c[0] for c in eta_choices))
            if not _is_free(probe):
                continue
            for etas in itertools.product(*eta_choices):
                yield _assemble(group, kernels, spaces, spec.g_primes, branches, etas)


@dataclass
class SurveyResult:
    count: int
    histogram: dict[tuple[int, ...], int]
    status_counts: dict[str, int]
    extremal: list[tuple[tuple[int, ...], AlgebraicDatum, Aut0Result]] = field(
        default_factory=list)

    def as_document(self) -> dict:
        return {
            "count": self.count,
            "histogram": {"[" + ",".join(map(str, k)) + "]": v
                          for k, v in sorted(self.histogram.items())},
            "statuses": dict(sorted(self.status_counts.items())),
        }


def survey(spec: SearchSpec) -> SurveyResult:
    """Aggregate the automorphism groups over the whole space.

    The automorphism result of a datum does not depend on its handle
    elements, so each branch triple is computed once and weighted by the
    number of handle tuples completing it to a generating vector.
    """
    estimate = estimate_space(spec)
    if estimate > spec.cap:
        raise SearchCapError(
            f"estimated candidate space of {estimate} exceeds the cap of {spec.cap}")
    group = AbelianGroup(spec.group_orders)
    histogram: dict[tuple[int, ...], int] = {}
    status_counts: dict[str, int] = {}
    count = 0
    extremal: dict[tuple[int, ...], tuple[AlgebraicDatum, Aut0Result]] = {}
    for kernels in _kernel_triples(spec, group):
        spaces = _factor_spaces(spec, kernels, group)
        eta_count_cache: list[dict[tuple, int]] = [{}, {}, {}]
        eta_first_cache: list[dict[tuple, tuple[GroupElement, ...]]] = [{}, {}, {}]
        for i in range(3):
            for branch in spaces[i].branch_sets:
                good = _generating_etas(spaces[i].quotient_structure.group, branch,
                                        spaces[i].eta_tuples)
                eta_count_cache[i][branch] = len(good)
                if good:
                    eta_first_cache[i][branch] = good[0]
        for branches in itertools.product(*(s.branch_sets for s in spaces)):
            weight = 1
            for i in range(3):
                weight *= eta_count_cache[i][branches[i]]
            if weight == 0:
                continue
            datum = _assemble(group, kernels, spaces, spec.g_primes, branches,
                              tuple(eta_first_cache[i][branches[i]] for i in range(3)))
            report = validate_datum(datum)
            if not report.ok:
                continue
            result = aut0(datum, report)
            for gen in result.generators:
                if not verify_generator(datum, gen):
                    raise TheoremViolationError(
                        "survey generator failed independent re-verification")
            key = tuple(result.invariant_factors)
            if result.status.value == "Proven" and key not in ((), (2,), (2, 2)):
                raise TheoremViolationError(
                    f"proven result with factors {list(key)} on datum "
                    f"{[tuple(b.exponents for b in br) for br in branches]}")
            count += weight
            histogram[key] = histogram.get(key, 0) + weight
            status_counts[result.status.value] = \
                status_counts.get(result.status.value, 0) + weight
            if key not in extremal:
                extremal[key] = (datum, result)
    return SurveyResult(
        count=count,
        histogram=histogram,
        status_counts=status_counts,
        extremal=[(k, d, r) for k, (d, r) in sorted(extremal.items())],
    )
