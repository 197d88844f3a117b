import math

import pytest

from implattice.algebra import (
    Element,
    ImpLattice,
    elements,
    enumerate_all,
    full_algebra,
    is_boolean_subalgebra,
    is_sub,
    is_ultrafilter,
    principal_ultrafilter,
    top_only,
)
from implattice.poset import (
    AtomNotBelowBaseError,
    NotClosedEndpointError,
    NotComparableError,
    closed_suborder,
    closure_theorem_check,
    interval,
    interval_isomorphism_via_permutation,
    interval_to_dict,
    interval_to_dot,
    maximal_chain_length,
    mobius_between,
    mobius_oracle,
    product_decomposition,
)


def el(n, *atoms):
    return Element.from_atoms(n, atoms)


def lat(n, base, *blocks):
    return ImpLattice(n, el(n, *base), tuple(el(n, *b) for b in blocks))


# --- interval construction ----------------------------------------------------


def test_interval_examples():
    A = lat(2, [0], [1])
    assert len(interval(A, A)) == 1
    assert len(interval(top_only(2), full_algebra(2))) == 5
    assert len(interval(A, full_algebra(2))) == 2


def test_interval_members_are_exactly_the_between_set():
    for n in range(4):
        lattices = enumerate_all(n)
        for lower in lattices:
            for upper in lattices:
                if not is_sub(lower, upper):
                    with pytest.raises(NotComparableError):
                        interval(lower, upper)
                    continue
                got = set(interval(lower, upper).members)
                want = {
                    D for D in lattices if is_sub(lower, D) and is_sub(D, upper)
                }
                assert got == want


def test_interval_relation_properties():
    for n in range(4):
        P = interval(top_only(n), full_algebra(n))
        m = len(P)
        for i in range(m):
            assert P.leq(i, i)
            for j in range(m):
                assert P.leq(i, j) == is_sub(P.members[i], P.members[j])
                if P.leq(i, j) and P.leq(j, i):
                    assert i == j
                for k in range(m):
                    if P.leq(i, j) and P.leq(j, k):
                        assert P.leq(i, k)


# --- Mobius oracle --------------------------------------------------------------


def test_mobius_examples():
    A = lat(2, [0], [1])
    assert mobius_between(A, A) == 1
    assert mobius_between(top_only(2), full_algebra(2)) == 2
    assert mobius_between(A, full_algebra(2)) == -1


def test_mobius_defining_identity_every_interval():
    # for every interval [y, z] with n <= 4, proper down-sets sum to zero
    def check(P):
        table = mobius_oracle(P)
        for i in range(len(P)):
            total = sum(table.mu[j] for j in range(len(P)) if P.leq(j, i))
            assert total == (1 if i == P.lower_index else 0)

    for n in range(5):
        lattices = enumerate_all(n)
        for lower in lattices:
            for upper in lattices:
                if is_sub(lower, upper):
                    check(interval(lower, upper))


def test_mobius_matches_independent_recursion(
    closed_families_oracle, mobius_oracle_brute
):
    # the library oracle against a from-scratch recursion over raw mask sets
    for n in range(4):
        families = closed_families_oracle(n)
        brute = mobius_oracle_brute(families)
        index = {fam: i for i, fam in enumerate(families)}
        for lower in enumerate_all(n):
            P = interval(lower, full_algebra(n))
            table = mobius_oracle(P)
            i = index[frozenset(lower._element_masks)]
            for pos, member in enumerate(P.members):
                j = index[frozenset(member._element_masks)]
                assert table.mu[pos] == brute[i, j]


def test_mu_top_signed_factorial():
    for n in range(6):
        assert mobius_between(top_only(n), full_algebra(n)) == (-1) ** n * math.factorial(n)


# --- closure identity ------------------------------------------------------------


def test_closure_theorem_examples():
    one, top = top_only(2), full_algebra(2)
    v = closure_theorem_check("complement", one, top, 2)
    assert (v.lhs, v.rhs, v.passed) == (0, 0, True)
    v = closure_theorem_check("up", one, top, 2)
    assert (v.lhs, v.rhs, v.passed) == (1, 1, True)
    sub = lat(2, [], [0, 1])
    v = closure_theorem_check("complement", sub, sub, 2)
    assert (v.lhs, v.rhs, v.passed) == (1, 1, True)


@pytest.mark.parametrize("closure", ["complement", "up"])
def test_closure_theorem_all_pairs(closure):
    for n in range(4):
        lattices = enumerate_all(n)
        for y in lattices:
            for z in lattices:
                if is_sub(y, z):
                    assert closure_theorem_check(closure, y, z, n).passed


def test_closure_theorem_errors():
    one, top = top_only(2), full_algebra(2)
    with pytest.raises(NotComparableError):
        closure_theorem_check("up", top, lat(2, [0], [1]), 2)
    with pytest.raises(ValueError):
        closure_theorem_check("sideways", one, top, 2)


def test_closed_suborder_members():
    # complement closure: fixed points between the 2-element subalgebra and
    # B_3 are the Boolean subalgebras, Bell(3) = 5 of them
    sub = closed_suborder("complement", lat(3, [], [0, 1, 2]), full_algebra(3))
    assert len(sub) == 5
    assert all(is_boolean_subalgebra(D) for D in sub.members)
    # up closure: fixed points over [{1}, B_n] are the 2^n principal filters,
    # order-dual to B_n, with top Mobius value (-1)^n
    for n in range(5):
        sub = closed_suborder("up", top_only(n), full_algebra(n))
        assert len(sub) == 2**n
        assert mobius_oracle(sub).mu_top == (-1) ** n
    # n = 1: the up closure has the 2-member chain [{1}, B]; the only
    # complement-closed element of B_1 is B itself
    assert len(closed_suborder("up", top_only(1), full_algebra(1))) == 2
    assert len(closed_suborder("complement", full_algebra(1), full_algebra(1))) == 1


def test_closed_suborder_rejects_open_endpoints():
    with pytest.raises(NotClosedEndpointError):
        closed_suborder("complement", top_only(2), full_algebra(2))
    with pytest.raises(NotClosedEndpointError):
        closed_suborder("up", lat(3, [0], [1, 2]), full_algebra(3))
    with pytest.raises(ValueError):
        closed_suborder("sideways", top_only(2), full_algebra(2))


# --- product factorization ---------------------------------------------------------


def test_product_examples():
    n = 3
    pd = product_decomposition(full_algebra(n))
    assert (len(pd.whole), len(pd.p1), len(pd.p2)) == (1, 1, 1)
    pd = product_decomposition(top_only(n))
    assert len(pd.p1) == 1
    assert len(pd.p2) == len(interval(top_only(n), full_algebra(n)))
    pd = product_decomposition(lat(2, [0], [1]))
    assert (len(pd.whole), len(pd.p1), len(pd.p2)) == (2, 1, 2)


def test_product_is_order_isomorphism():
    for n in range(5):
        for A in enumerate_all(n):
            pd = product_decomposition(A)
            assert len(pd.whole) == len(pd.p1) * len(pd.p2)
            assert len(set(pd.iso)) == len(pd.whole)
            for i in range(len(pd.whole)):
                i1, i2 = pd.iso[i]
                for j in range(len(pd.whole)):
                    j1, j2 = pd.iso[j]
                    assert pd.whole.leq(i, j) == (
                        pd.p1.leq(i1, j1) and pd.p2.leq(i2, j2)
                    )


def test_product_mu_multiplies():
    for n in range(5):
        for A in enumerate_all(n):
            pd = product_decomposition(A)
            assert (
                mobius_oracle(pd.whole).mu_top
                == mobius_oracle(pd.p1).mu_top * mobius_oracle(pd.p2).mu_top
            )


# --- relabeling isomorphisms ----------------------------------------------------------


def test_atom_swap_examples():
    assert interval_isomorphism_via_permutation(top_only(2), 0, 0).passed
    v = interval_isomorphism_via_permutation(top_only(2), 0, 1)
    assert v.passed
    assert len(interval(top_only(2), principal_ultrafilter(2, 0))) == 2
    assert interval_isomorphism_via_permutation(top_only(3), 0, 2).passed


def test_atom_swap_exhaustive():
    for n in range(2, 5):
        for A in enumerate_all(n):
            atoms = A.base.atoms
            for i, c1 in enumerate(atoms):
                for c2 in atoms[i:]:
                    assert interval_isomorphism_via_permutation(A, c1, c2).passed


def test_atom_swap_requires_atoms_below_base():
    with pytest.raises(AtomNotBelowBaseError):
        interval_isomorphism_via_permutation(lat(2, [0], [1]), 0, 1)
    with pytest.raises(AtomNotBelowBaseError):
        interval_isomorphism_via_permutation(top_only(2), 0, 5)


def test_equal_rank_subalgebra_intervals_match():
    # intervals below Boolean subalgebras depend only on the atom count:
    # size, maximal chain length, and Mobius value agree per rank (n <= 5)
    bell = [1, 1, 2, 5, 15, 52, 203]
    for n in range(1, 6):
        one = top_only(n)
        for C in enumerate_all(n):
            if not is_boolean_subalgebra(C):
                continue
            k = C.w
            below = interval(one, C)
            assert len(below) == bell[k + 1]
            assert maximal_chain_length(below) == k
            assert mobius_oracle(below).mu_top == (-1) ** k * math.factorial(k)


def test_different_rank_subalgebras_have_different_interval_sizes():
    one = top_only(4)
    sizes = {}
    for C in enumerate_all(4):
        if is_boolean_subalgebra(C):
            sizes.setdefault(C.w, set()).add(len(interval(one, C)))
    assert all(len(v) == 1 for v in sizes.values())
    flat = sorted(next(iter(v)) for v in sizes.values())
    assert len(set(flat)) == len(flat)


# --- chains ---------------------------------------------------------------------------


def test_maximal_chain_examples():
    A = lat(2, [0], [1])
    assert maximal_chain_length(interval(A, A)) == 0
    assert maximal_chain_length(interval(top_only(1), full_algebra(1))) == 1
    assert maximal_chain_length(interval(top_only(2), full_algebra(2))) == 2


def test_maximal_chain_of_full_interval_is_n():
    for n in range(6):
        assert maximal_chain_length(interval(top_only(n), full_algebra(n))) == n


# --- exports ---------------------------------------------------------------------------


EXPECTED_DOT = """digraph hasse {
  rankdir=BT;
  v0 [label="{\\"n\\":2,\\"base\\":[],\\"blocks\\":[[0],[1]]}"];
  v1 [label="{\\"n\\":2,\\"base\\":[],\\"blocks\\":[[0,1]]}"];
  v2 [label="{\\"n\\":2,\\"base\\":[0],\\"blocks\\":[[1]]}"];
  v3 [label="{\\"n\\":2,\\"base\\":[1],\\"blocks\\":[[0]]}"];
  v4 [label="{\\"n\\":2,\\"base\\":[0,1],\\"blocks\\":[]}"];
  v1 -> v0;
  v2 -> v0;
  v3 -> v0;
  v4 -> v1;
  v4 -> v2;
  v4 -> v3;
}"""


def test_dot_export_golden():
    P = interval(top_only(2), full_algebra(2))
    assert interval_to_dot(P) == EXPECTED_DOT


def test_dot_export_sizes():
    P = interval(top_only(3), full_algebra(3))
    text = interval_to_dot(P)
    assert text.count("[label=") == 15
    singleton = interval(full_algebra(2), full_algebra(2))
    assert interval_to_dot(singleton).count("->") == 0


def test_interval_json():
    P = interval(top_only(2), full_algebra(2))
    doc = interval_to_dict(P)
    assert doc["lower"] == {"n": 2, "base": [0, 1], "blocks": []}
    assert doc["upper"] == {"n": 2, "base": [], "blocks": [[0], [1]]}
    assert len(doc["members"]) == 5
    assert doc["cover_edges"] == [[1, 0], [2, 0], [3, 0], [4, 1], [4, 2], [4, 3]]
    # covers point upward: each edge joins a member to one directly above it
    for i, j in doc["cover_edges"]:
        assert is_sub(P.members[i], P.members[j])
        assert elements(P.members[i]) < elements(P.members[j])
