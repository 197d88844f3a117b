"""Explicit intervals in the sublattice order and their Mobius functions.

Intervals are materialized eagerly (Bell-number sizes stay tiny at desk
scale), the Mobius function is computed by the defining recursion, and the
structural facts used by the closed forms -- the closure identity, the
base/quotient product factorization, and the relabeling isomorphisms -- are
checked here against that oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import (
    ContextMismatchError,
    Element,
    ImpLattice,
    Verdict,
    apply_atom_permutation,
    complement_closure,
    full_algebra,
    is_sub,
    lattice_to_dict,
    lattice_to_json,
    make_verdict,
    principal_ultrafilter,
    top_only,
    up_closure,
    _enumerate_cached,
)


class NotComparableError(ValueError):
    """Interval endpoints are not ordered lower <= upper."""


class NotClosedEndpointError(ValueError):
    """A closed-suborder endpoint is not a fixed point of the closure."""


class AtomNotBelowBaseError(ValueError):
    """The named atom does not lie below the sublattice's base."""


CLOSURES = {
    "complement": complement_closure,
    "up": up_closure,
}


@dataclass(frozen=True)
class IntervalPoset:
    """A finite bounded subposet of the sublattice order.

    ``up[i]`` / ``down[i]`` are bitmasks over member indices giving the
    members above / below member i (reflexively); the relation always agrees
    with ``is_sub``.  For :func:`interval` the members are exactly
    ``{D : lower <= D <= upper}`` in canonical order; :func:`closed_suborder`
    restricts them to closure fixed points.
    """

    members: tuple[ImpLattice, ...]
    up: tuple[int, ...]
    down: tuple[int, ...]
    lower_index: int
    upper_index: int

    @property
    def lower(self) -> ImpLattice:
        return self.members[self.lower_index]

    @property
    def upper(self) -> ImpLattice:
        return self.members[self.upper_index]

    def __len__(self) -> int:
        return len(self.members)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    @cached_property
    def _index(self) -> dict[ImpLattice, int]:
        return {m: i for i, m in enumerate(self.members)}

    def index_of(self, A: ImpLattice) -> int:
        return self._index[A]

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse edges (i, j) with member i covered by member j."""
        out = []
        m = len(self.members)
        for i in range(m):
            for j in range(m):
                if i == j or not self.leq(i, j):
                    continue
                between = self.up[i] & self.down[j] & ~(1 << i) & ~(1 << j)
                if between == 0:
                    out.append((i, j))
        return tuple(out)


def _build_poset(members: tuple[ImpLattice, ...], lower: ImpLattice, upper: ImpLattice) -> IntervalPoset:
    m = len(members)
    elems = [frozenset(a._element_masks) for a in members]
    up = [0] * m
    down = [0] * m
    for i in range(m):
        ei = elems[i]
        for j in range(m):
            if ei <= elems[j]:
                up[i] |= 1 << j
                down[j] |= 1 << i
    return IntervalPoset(
        members, tuple(up), tuple(down), members.index(lower), members.index(upper)
    )


def _expand(D: ImpLattice, upper: ImpLattice) -> ImpLattice:
    """Map a sublattice of B_w onto a sublattice of upper's element algebra."""
    block_masks = [b.mask for b in upper.blocks]
    base = upper.base.mask
    for i in D.base.atoms:
        base |= block_masks[i]
    blocks = []
    for blk in D.blocks:
        mask = 0
        for i in blk.atoms:
            mask |= block_masks[i]
        blocks.append(Element(upper.n, mask))
    return ImpLattice(upper.n, Element(upper.n, base), tuple(blocks))


_INTERVAL_CACHE: dict[tuple[ImpLattice, ImpLattice], IntervalPoset] = {}


def interval(lower: ImpLattice, upper: ImpLattice) -> IntervalPoset:
    """Materialize ``[lower, upper]`` in the sublattice order.

    Members are generated as sublattices of upper's element algebra (via its
    block structure, so the candidate count is Bell(w+1) rather than
    Bell(n+1)) and filtered to those containing lower.
    """
    key = (lower, upper)
    got = _INTERVAL_CACHE.get(key)
    if got is not None:
        return got
    if not is_sub(lower, upper):
        raise NotComparableError("interval endpoints must satisfy lower <= upper")
    kept = []
    for inner in _enumerate_cached(len(upper.blocks)):
        candidate = _expand(inner, upper)
        if is_sub(lower, candidate):
            kept.append(candidate)
    members = tuple(sorted(kept, key=ImpLattice.sort_key))
    got = _INTERVAL_CACHE[key] = _build_poset(members, lower, upper)
    return got


@dataclass(frozen=True)
class MobiusTable:
    """Values ``mu(lower, member)`` for every member of an interval."""

    interval: IntervalPoset
    mu: tuple[int, ...]

    @property
    def mu_top(self) -> int:
        return self.mu[self.interval.upper_index]


_MOBIUS_CACHE: dict[IntervalPoset, MobiusTable] = {}


def mobius_oracle(poset: IntervalPoset) -> MobiusTable:
    """Mobius by the defining recursion: mu(lower) = 1 and every proper
    down-set sums to zero."""
    got = _MOBIUS_CACHE.get(poset)
    if got is not None:
        return got
    m = len(poset.members)
    lower = poset.lower_index
    # any i < j in containment has strictly fewer blocks, so block count is a
    # linear extension
    order = sorted(range(m), key=lambda i: len(poset.members[i].blocks))
    mu = [0] * m
    mu[lower] = 1
    for i in order:
        if i == lower:
            continue
        total = 0
        below = poset.down[i] & ~(1 << i)
        while below:
            low = below & -below
            total += mu[low.bit_length() - 1]
            below ^= low
        mu[i] = -total
    got = _MOBIUS_CACHE[poset] = MobiusTable(poset, tuple(mu))
    return got


def mobius_between(lower: ImpLattice, upper: ImpLattice) -> int:
    """Convenience: mu(lower, upper) via the oracle."""
    return mobius_oracle(interval(lower, upper)).mu_top


_SUBORDER_CACHE: dict[tuple[str, ImpLattice, ImpLattice], IntervalPoset] = {}


def closed_suborder(closure: str, lower: ImpLattice, upper: ImpLattice) -> IntervalPoset:
    """The fixed points of a closure operator between two closed bounds."""
    cl = CLOSURES.get(closure)
    if cl is None:
        raise ValueError(f"unknown closure {closure!r}; expected one of {sorted(CLOSURES)}")
    key = (closure, lower, upper)
    got = _SUBORDER_CACHE.get(key)
    if got is not None:
        return got
    if cl(lower) != lower or cl(upper) != upper:
        raise NotClosedEndpointError("closed-suborder endpoints must be closure fixed points")
    members = tuple(D for D in interval(lower, upper).members if cl(D) == D)
    got = _SUBORDER_CACHE[key] = _build_poset(members, lower, upper)
    return got


def closure_theorem_check(closure: str, y: ImpLattice, z: ImpLattice, n: int) -> Verdict:
    """Check the Mobius/closure identity for one pair ``y <= z``.

    lhs sums ``mu(y, x)`` over all x in [y, B] whose closure equals the
    closure of z; rhs is the Mobius function of the closed suborder from y to
    cl(z) when y is itself closed, and 0 otherwise.
    """
    cl = CLOSURES.get(closure)
    if cl is None:
        raise ValueError(f"unknown closure {closure!r}; expected one of {sorted(CLOSURES)}")
    if y.n != n or z.n != n:
        raise ContextMismatchError(f"expected context n={n}, got {y.n} and {z.n}")
    if not is_sub(y, z):
        raise NotComparableError("closure identity needs y <= z")
    whole = interval(y, full_algebra(n))
    table = mobius_oracle(whole)
    cz = cl(z)
    lhs = sum(
        table.mu[i] for i, x in enumerate(whole.members) if cl(x) == cz
    )
    if cl(y) == y:
        sub = closed_suborder(closure, y, cz)
        rhs = mobius_oracle(sub).mu_top
    else:
        rhs = 0
    return make_verdict(f"mobius-closure-identity[{closure}]", {"n": n}, lhs, rhs)


@dataclass(frozen=True)
class ProductDecomposition:
    """Factorization of ``[A, B]`` through the base of A.

    Each member C splits into its part above ``a = base(A)`` (a Boolean
    subalgebra of ``[a, 1]``, relabeled onto the atoms outside a) and its
    part below a (a sublattice of ``[0, a]``, relabeled onto the atoms of a).
    ``iso[i]`` gives the (p1, p2) member indices for whole member i; the map
    is a bijection preserving and reflecting order, so the Mobius value of
    the whole interval is the product of the factors'.
    """

    whole: IntervalPoset
    p1: IntervalPoset
    p2: IntervalPoset
    iso: tuple[tuple[int, int], ...]


def _relabel(masks: list[int], atoms: tuple[int, ...], n_new: int) -> list[Element]:
    pos = {a: i for i, a in enumerate(atoms)}
    out = []
    for mask in masks:
        new = 0
        while mask:
            low = mask & -mask
            new |= 1 << pos[low.bit_length() - 1]
            mask ^= low
        out.append(Element(n_new, new))
    return out


def product_decomposition(A: ImpLattice) -> ProductDecomposition:
    """Split ``[A, B]`` into (subalgebras of [a,1] over A) x (all of [0,a])."""
    n = A.n
    a = A.base.mask
    out_atoms = tuple(i for i in range(n) if not a >> i & 1)
    in_atoms = tuple(i for i in range(n) if a >> i & 1)
    n1, n2 = len(out_atoms), len(in_atoms)

    lower1 = ImpLattice(
        n1,
        Element.bottom(n1),
        tuple(_relabel([b.mask for b in A.blocks], out_atoms, n1)),
    )
    p1 = interval(lower1, full_algebra(n1))
    p2 = interval(top_only(n2), full_algebra(n2))
    whole = interval(A, full_algebra(n))

    iso = []
    for C in whole.members:
        # A <= C forces every block of C inside or outside a
        above = [b.mask for b in C.blocks if not b.mask & a]
        below = [b.mask for b in C.blocks if b.mask & a]
        d1 = ImpLattice(n1, Element.bottom(n1), tuple(_relabel(above, out_atoms, n1)))
        d2 = ImpLattice(
            n2,
            _relabel([C.base.mask], in_atoms, n2)[0],
            tuple(_relabel(below, in_atoms, n2)),
        )
        iso.append((p1.index_of(d1), p2.index_of(d2)))
    return ProductDecomposition(whole, p1, p2, tuple(iso))


def interval_isomorphism_via_permutation(A: ImpLattice, c1: int, c2: int) -> Verdict:
    """Swap two atoms below base(A) and compare the atom-filter intervals.

    The transposition fixes A, maps ``[A, [c1,1]]`` onto ``[A, [c2,1]]``, and
    must preserve and reflect order; lhs/rhs count checks made vs passed.
    """
    n = A.n
    for c in (c1, c2):
        if not 0 <= c < n or not A.base.mask >> c & 1:
            raise AtomNotBelowBaseError(f"atom {c} is not below the base of {lattice_to_json(A)}")
    sigma = list(range(n))
    sigma[c1], sigma[c2] = sigma[c2], sigma[c1]
    src = interval(A, principal_ultrafilter(n, c1))
    dst = interval(A, principal_ultrafilter(n, c2))
    image = [apply_atom_permutation(m, sigma) for m in src.members]

    checked = 1
    passed = int(set(image) == set(dst.members) and len(src) == len(dst))
    for i in range(len(src)):
        for j in range(len(src)):
            checked += 1
            if src.leq(i, j) == is_sub(image[i], image[j]):
                passed += 1
    return make_verdict(
        "atom-swap-interval-isomorphism",
        {"n": n, "c1": c1, "c2": c2},
        checked,
        passed,
    )


def maximal_chain_length(poset: IntervalPoset) -> int:
    """Edge count of the longest chain from lower to upper."""
    m = len(poset.members)
    order = sorted(range(m), key=lambda i: len(poset.members[i].blocks))
    length = [0] * m
    for i in order:
        if i == poset.lower_index:
            continue
        best = 0
        below = poset.down[i] & ~(1 << i)
        while below:
            low = below & -below
            best = max(best, length[low.bit_length() - 1] + 1)
            below ^= low
        length[i] = best
    return length[poset.upper_index]


# --- exports ---------------------------------------------------------------


def interval_to_dict(poset: IntervalPoset) -> dict:
    return {
        "lower": lattice_to_dict(poset.lower),
        "upper": lattice_to_dict(poset.upper),
        "members": [lattice_to_dict(m) for m in poset.members],
        "cover_edges": [list(e) for e in sorted(poset.covers)],
    }


def interval_to_dot(poset: IntervalPoset) -> str:
    """Hasse diagram in DOT, nodes labeled by the canonical JSON encoding."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i, member in enumerate(poset.members):
        label = lattice_to_json(member).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  v{i} [label="{label}"];')
    for i, j in sorted(poset.covers):
        lines.append(f"  v{i} -> v{j};")
    lines.append("}")
    return "\n".join(lines)
