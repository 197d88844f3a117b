"""Claim registry: every structural law and identity as a per-n check.

Each claim runs at one atom count and returns a single Verdict.  Sweep-style
claims report (cases checked, cases conforming); identity-style claims report
the two sides of the identity.  Claims are grouped into named suites for the
CLI; they are independent of each other and deterministic, so any subset can
run in any order (the runner keeps registry order for stable output).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import algebra, formulas
from .algebra import (
    ImpLattice,
    Verdict,
    complement,
    complement_closure,
    elements,
    enumerate_all,
    from_elements,
    full_algebra,
    implies,
    is_boolean_subalgebra,
    is_sub,
    is_ultrafilter,
    join,
    make_verdict,
    meet,
    top_only,
    up_closure,
)
from .poset import (
    closure_theorem_check,
    interval,
    interval_isomorphism_via_permutation,
    maximal_chain_length,
    mobius_between,
    mobius_oracle,
    product_decomposition,
)

SUITES = ("closures", "method1", "method2", "product", "pkb", "lemmas")


@dataclass(frozen=True)
class Claim:
    id: str
    suite: str
    min_n: int
    max_n: int | None
    run: Callable[[int], Verdict]


def _sweep(claim: str, n: int, cases) -> Verdict:
    """Build a checked-vs-conforming verdict from an iterable of booleans."""
    checked = 0
    passed = 0
    for ok in cases:
        checked += 1
        passed += bool(ok)
    return make_verdict(claim, {"n": n, "cases": checked}, checked, passed)


def _brute_element_ops_closed(A: ImpLattice) -> bool:
    elems = elements(A)
    return all(complement(x) in elems for x in elems) and all(
        meet(x, y) in elems and join(x, y) in elems for x in elems for y in elems
    )


def _claim_complement_subalgebra(n: int) -> Verdict:
    """Adjoining complements yields a Boolean subalgebra whose element set is
    exactly the family plus its complements."""

    def cases():
        full = (1 << n) - 1
        for A in enumerate_all(n):
            closed = complement_closure(A)
            want = set(A._element_masks) | {m ^ full for m in A._element_masks}
            yield (
                is_boolean_subalgebra(closed)
                and set(closed._element_masks) == want
                and _brute_element_ops_closed(closed)
            )

    return _sweep("closure.complement.subalgebra", n, cases())


def _claim_complement_fixed_points(n: int) -> Verdict:
    """Fixed points of the complement closure are the Boolean subalgebras."""

    def cases():
        full = (1 << n) - 1
        for A in enumerate_all(n):
            masks = set(A._element_masks)
            brute_closed = all((m ^ full) in masks for m in masks)
            fixed = complement_closure(A) == A
            yield fixed == is_boolean_subalgebra(A) == brute_closed

    return _sweep("closure.complement.fixed_points", n, cases())


def _closure_axioms(claim: str, close, n: int) -> Verdict:
    lattices = enumerate_all(n)

    def cases():
        for A in lattices:
            closed = close(A)
            yield is_sub(A, closed) and close(closed) == closed
        for A1 in lattices:
            c1 = close(A1)
            for A2 in lattices:
                if is_sub(A1, A2):
                    yield is_sub(c1, close(A2))

    return _sweep(claim, n, cases())


def _claim_complement_axioms(n: int) -> Verdict:
    """Complement closure is extensive, idempotent, and monotone."""
    return _closure_axioms("closure.complement.axioms", complement_closure, n)


def _claim_up_axioms(n: int) -> Verdict:
    """Upward closure is a closure operator and matches the element-set
    upward closure."""
    lattices = enumerate_all(n)

    def cases():
        universe = range(1 << n)
        for A in lattices:
            closed = up_closure(A)
            yield is_sub(A, closed) and up_closure(closed) == closed
            masks = set(A._element_masks)
            want = {m for m in universe if any(m & e == e for e in masks)}
            yield set(closed._element_masks) == want
        for A1 in lattices:
            c1 = up_closure(A1)
            for A2 in lattices:
                if is_sub(A1, A2):
                    yield is_sub(c1, up_closure(A2))

    return _sweep("closure.up.axioms", n, cases())


def _claim_complement_saturation(n: int) -> Verdict:
    """Complement closure hits the whole algebra exactly at the top element
    and the principal ultrafilters."""
    top = full_algebra(n)

    def cases():
        for A in enumerate_all(n):
            saturates = complement_closure(A) == top
            yield saturates == (A == top or is_ultrafilter(A))

    return _sweep("closure.complement.saturation", n, cases())


def _claim_up_saturation(n: int) -> Verdict:
    """Upward closure hits the whole algebra exactly at the Boolean
    subalgebras (base 0)."""
    top = full_algebra(n)

    def cases():
        for A in enumerate_all(n):
            saturates = up_closure(A) == top
            yield saturates == (A.base.mask == 0) == is_boolean_subalgebra(A)

    return _sweep("closure.up.saturation", n, cases())


def _closure_theorem_sweep(closure: str, n: int) -> Verdict:
    lattices = enumerate_all(n)

    def cases():
        for y in lattices:
            for z in lattices:
                if is_sub(y, z):
                    yield closure_theorem_check(closure, y, z, n).passed

    return _sweep(f"closure.theorem.{closure}", n, cases())


def _claim_theorem_complement(n: int) -> Verdict:
    """Mobius/closure identity for the complement closure, all pairs y <= z."""
    return _closure_theorem_sweep("complement", n)


def _claim_theorem_up(n: int) -> Verdict:
    """Mobius/closure identity for the upward closure, all pairs y <= z."""
    return _closure_theorem_sweep("up", n)


def _claim_product_formula_vs_oracle(n: int) -> Verdict:
    """The factorial-product closed form agrees with the oracle on [A, B]."""
    top = full_algebra(n)

    def cases():
        for A in enumerate_all(n):
            yield formulas.mobius_product_formula(A) == mobius_between(A, top)

    return _sweep("method1.formula_vs_oracle", n, cases())


def _claim_product_formula_printed_sign(n: int) -> Verdict:
    """The as-printed sign exponent disagrees with the oracle exactly when
    the base rank is odd."""
    top = full_algebra(n)

    def cases():
        for A in enumerate_all(n):
            printed = formulas.mobius_product_formula_printed(A)
            oracle = mobius_between(A, top)
            yield (printed == oracle) == (A.base.rank % 2 == 0)

    return _sweep("method1.printed_sign_erratum", n, cases())


def _claim_corrected_identity(n: int) -> Verdict:
    """Corrected chain sum equals (-1)^n n!."""
    return make_verdict(
        "method2.corrected_identity",
        {"n": n},
        formulas.chain_sum_corrected(n).value,
        formulas.mu_top_closed_form(n),
    )


def _claim_corrected_vs_oracle(n: int) -> Verdict:
    """Corrected chain sum equals the oracle mu({1}, B_n)."""
    return make_verdict(
        "method2.corrected_vs_oracle",
        {"n": n},
        formulas.chain_sum_corrected(n).value,
        mobius_between(top_only(n), full_algebra(n)),
    )


def _claim_printed_value(n: int) -> Verdict:
    """The as-printed chain sum is pinned to (-1)^n (n-1)!."""
    return make_verdict(
        "method2.printed_value_erratum",
        {"n": n},
        formulas.chain_sum_printed(n).value,
        (-1) ** n * formulas.factorial(n - 1),
    )


def _claim_product_pairing(n: int) -> Verdict:
    """Splitting each interval member at the base of A is an order
    isomorphism onto the product of the two factors."""

    def cases():
        for A in enumerate_all(n):
            pd = product_decomposition(A)
            yield len(pd.whole) == len(pd.p1) * len(pd.p2)
            yield len(set(pd.iso)) == len(pd.whole)
            ok = True
            for i in range(len(pd.whole)):
                i1, i2 = pd.iso[i]
                for j in range(len(pd.whole)):
                    j1, j2 = pd.iso[j]
                    if pd.whole.leq(i, j) != (pd.p1.leq(i1, j1) and pd.p2.leq(i2, j2)):
                        ok = False
            yield ok

    return _sweep("product.pairing_bijection", n, cases())


def _claim_product_mu(n: int) -> Verdict:
    """mu multiplies across the factorization."""

    def cases():
        for A in enumerate_all(n):
            pd = product_decomposition(A)
            yield (
                mobius_oracle(pd.whole).mu_top
                == mobius_oracle(pd.p1).mu_top * mobius_oracle(pd.p2).mu_top
            )

    return _sweep("product.mu_multiplicative", n, cases())


def _claim_rank_chain_vs_oracle(n: int) -> Verdict:
    """Rank-restricted chain sums agree with the oracle sums, k = 1..n."""

    def cases():
        for k in range(1, n + 1):
            yield formulas.mu_rank_sum_chain(k, n).value == formulas.mu_rank_sum_oracle(k, n)

    return _sweep("pkb.chain_vs_oracle", n, cases())


def _claim_rank_chain_vs_composition(n: int) -> Verdict:
    """Rank-restricted chain sums agree with the corrected composition form."""

    def cases():
        for k in range(1, n + 1):
            yield formulas.mu_rank_sum_chain(k, n).value == formulas.mu_rank_sum_composition(k, n)

    return _sweep("pkb.chain_vs_composition", n, cases())


def _claim_partition_sum_agreement(n: int) -> Verdict:
    """Summing partition-lattice Mobius values over k-block partitions
    reproduces the oracle rank sums."""

    def cases():
        for k in range(1, n + 1):
            total = 0
            for part in algebra._set_partitions(tuple(range(n))):
                if len(part) == k:
                    total += formulas.partition_mobius([b.bit_count() for b in part])
            yield total == formulas.mu_rank_sum_oracle(k, n)

    return _sweep("pkb.partition_sum_agreement", n, cases())


def _claim_rank_one_closed_form(n: int) -> Verdict:
    """Rank-1 chain sum equals (-1)^(n-1) (n-1)!."""
    inner = formulas.rank_one_chain_identity(n)
    return make_verdict("pkb.rank_one_closed_form", {"n": n}, inner.lhs, inner.rhs)


def _claim_composition_printed(n: int) -> Verdict:
    """The as-printed composition form overshoots the oracle by k! for every
    k >= 2 (pinned at (k,n) = (2,2) and (2,3)) and matches only at k = 1."""
    pinned = {(2, 2): (2, 1), (2, 3): (-6, -3)}

    def cases():
        for k in range(1, n + 1):
            printed = formulas.mu_rank_sum_composition_printed(k, n)
            oracle = formulas.mu_rank_sum_oracle(k, n)
            if k == 1:
                yield printed == oracle
            else:
                yield printed == formulas.factorial(k) * oracle and printed != oracle
            if (k, n) in pinned:
                yield (printed, oracle) == pinned[(k, n)]

    return _sweep("pkb.printed_composition_erratum", n, cases())


def _claim_enumeration_count(n: int) -> Verdict:
    """The sublattice count is Bell(n+1)."""
    return make_verdict(
        "core.enumeration_count",
        {"n": n},
        len(enumerate_all(n)),
        formulas.bell(n + 1),
    )


def _claim_closed_set_roundtrip(n: int) -> Verdict:
    """Over every nonempty subset of B_n: canonicalization succeeds exactly
    for families closed under implication and meet, and round-trips."""
    universe = [algebra.Element(n, m) for m in range(1 << n)]

    def cases():
        for bits in range(1, 1 << (1 << n)):
            fam = {e for e in universe if bits >> e.mask & 1}
            closed = all(
                implies(x, y) in fam and meet(x, y) in fam for x in fam for y in fam
            )
            try:
                A = from_elements(fam, n)
            except algebra.NotClosedError:
                yield not closed
            else:
                yield closed and elements(A) == frozenset(fam)

    return _sweep("core.closed_set_roundtrip", n, cases())


def _claim_oracle_recursion_identity(n: int) -> Verdict:
    """Every proper down-set of [{1}, B_n] has Mobius values summing to 0."""
    whole = interval(top_only(n), full_algebra(n))
    table = mobius_oracle(whole)

    def cases():
        for i in range(len(whole)):
            total = 0
            below = whole.down[i]
            while below:
                low = below & -below
                total += table.mu[low.bit_length() - 1]
                below ^= low
            yield total == (1 if i == whole.lower_index else 0)

    return _sweep("oracle.recursion_identity", n, cases())


def _claim_atom_transposition(n: int) -> Verdict:
    """Swapping two atoms below the base maps the two atom-filter intervals
    onto each other order-isomorphically."""

    def cases():
        for A in enumerate_all(n):
            atoms = A.base.atoms
            for i, c1 in enumerate(atoms):
                for c2 in atoms[i + 1 :]:
                    yield interval_isomorphism_via_permutation(A, c1, c2).passed

    return _sweep("iso.atom_transposition", n, cases())


def _contract(C: ImpLattice, D: ImpLattice) -> ImpLattice:
    """Rewrite D <= C over the atoms of C (blocks indexed by least atom)."""
    k = len(C.blocks)
    base = 0
    blocks = []
    for i, cb in enumerate(C.blocks):
        if cb.mask & D.base.mask:
            base |= 1 << i
    for db in D.blocks:
        mask = 0
        for i, cb in enumerate(C.blocks):
            if cb.mask & db.mask:
                mask |= 1 << i
        blocks.append(algebra.Element(k, mask))
    return ImpLattice(k, algebra.Element(k, base), tuple(blocks))


def _claim_subalgebra_relabel(n: int) -> Verdict:
    """Relabeling a k-atom Boolean subalgebra onto B_k identifies the
    interval below it with the whole order over B_k, so equal-rank
    subalgebras have isomorphic intervals with equal size, maximal chain
    length, and Mobius value."""
    one = top_only(n)

    def cases():
        for C in enumerate_all(n):
            if not is_boolean_subalgebra(C):
                continue
            k = C.w
            below = interval(one, C)
            image = [_contract(C, D) for D in below.members]
            yield set(image) == set(enumerate_all(k))
            ok = True
            for i in range(len(below)):
                for j in range(len(below)):
                    if below.leq(i, j) != is_sub(image[i], image[j]):
                        ok = False
            yield ok
            yield len(below) == formulas.bell(k + 1)
            yield maximal_chain_length(below) == k
            yield mobius_oracle(below).mu_top == formulas.mu_top_closed_form(k)

    return _sweep("iso.equal_rank_subalgebras", n, cases())


CLAIMS: tuple[Claim, ...] = (
    Claim("closure.complement.subalgebra", "closures", 0, None, _claim_complement_subalgebra),
    Claim("closure.complement.fixed_points", "closures", 0, None, _claim_complement_fixed_points),
    Claim("closure.complement.axioms", "closures", 0, None, _claim_complement_axioms),
    Claim("closure.complement.saturation", "closures", 0, None, _claim_complement_saturation),
    Claim("closure.up.axioms", "closures", 0, None, _claim_up_axioms),
    Claim("closure.up.saturation", "closures", 0, None, _claim_up_saturation),
    Claim("closure.theorem.complement", "closures", 0, None, _claim_theorem_complement),
    Claim("closure.theorem.up", "closures", 0, None, _claim_theorem_up),
    Claim("method1.formula_vs_oracle", "method1", 0, None, _claim_product_formula_vs_oracle),
    Claim("method1.printed_sign_erratum", "method1", 1, None, _claim_product_formula_printed_sign),
    Claim("method2.corrected_identity", "method2", 1, None, _claim_corrected_identity),
    Claim("method2.corrected_vs_oracle", "method2", 1, None, _claim_corrected_vs_oracle),
    Claim("method2.printed_value_erratum", "method2", 1, None, _claim_printed_value),
    Claim("product.pairing_bijection", "product", 0, None, _claim_product_pairing),
    Claim("product.mu_multiplicative", "product", 0, None, _claim_product_mu),
    Claim("pkb.chain_vs_oracle", "pkb", 1, None, _claim_rank_chain_vs_oracle),
    Claim("pkb.chain_vs_composition", "pkb", 1, None, _claim_rank_chain_vs_composition),
    Claim("pkb.partition_sum_agreement", "pkb", 1, None, _claim_partition_sum_agreement),
    Claim("pkb.rank_one_closed_form", "pkb", 1, None, _claim_rank_one_closed_form),
    Claim("pkb.printed_composition_erratum", "pkb", 2, None, _claim_composition_printed),
    Claim("core.enumeration_count", "lemmas", 0, None, _claim_enumeration_count),
    Claim("core.closed_set_roundtrip", "lemmas", 0, 3, _claim_closed_set_roundtrip),
    Claim("oracle.recursion_identity", "lemmas", 0, None, _claim_oracle_recursion_identity),
    Claim("iso.atom_transposition", "lemmas", 2, None, _claim_atom_transposition),
    Claim("iso.equal_rank_subalgebras", "lemmas", 1, None, _claim_subalgebra_relabel),
)


def run_claims(ids, n_max: int) -> list[Verdict]:
    """Run the named claims for every applicable n <= n_max."""
    wanted = set(ids)
    unknown = wanted - {c.id for c in CLAIMS}
    if unknown:
        raise ValueError(f"unknown claims: {sorted(unknown)}")
    out = []
    for claim in CLAIMS:
        if claim.id not in wanted:
            continue
        hi = n_max if claim.max_n is None else min(n_max, claim.max_n)
        for n in range(claim.min_n, hi + 1):
            out.append(claim.run(n))
    return out


def run_suite(suite: str, n_max: int) -> list[Verdict]:
    """Run a named suite (or "all") for every applicable n <= n_max."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {('all',) + SUITES}")
    ids = [c.id for c in CLAIMS if suite == "all" or c.suite == suite]
    return run_claims(ids, n_max)


def summarize(verdicts) -> dict:
    passed = sum(v.passed for v in verdicts)
    return {"claims": len(verdicts), "passed": passed, "failed": len(verdicts) - passed}
