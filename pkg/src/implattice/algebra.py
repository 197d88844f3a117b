"""Finite Boolean algebras and their implication sublattices.

The ambient algebra ``B_n`` is the powerset of an n-element atom set; an
element is a bitmask over atom indices ``0..n-1``.  An implication sublattice
is a nonempty subset closed under ``x -> y = ~x | y`` and meet; every such
subset is a Boolean subalgebra of the interval ``[a, 1]`` where ``a`` is its
minimum, so it is captured canonically by a *partial partition*: the base
element ``a`` plus a partition of the atoms outside ``a`` into blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

import json


class ContextMismatchError(ValueError):
    """Operands live in Boolean algebras with different atom counts."""


class EmptyError(ValueError):
    """An empty element family was given where a sublattice is required."""


class NotClosedError(ValueError):
    """A family is not closed under implication or meet.

    Carries a witness: ``op`` is ``"implies"`` or ``"meet"``, and
    ``op(x, y) = result`` is not in the family.
    """

    def __init__(self, op: str, x: "Element", y: "Element", result: "Element"):
        self.op = op
        self.x = x
        self.y = y
        self.result = result
        super().__init__(
            f"family not closed: {op}({set(x.atoms)}, {set(y.atoms)}) = "
            f"{set(result.atoms)} is missing"
        )


def _full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class Element:
    """An element of ``B_n``: a set of atom indices stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"atom count must be >= 0, got {self.n}")
        if not 0 <= self.mask <= _full_mask(self.n):
            raise ValueError(f"mask {self.mask:#x} out of range for n={self.n}")

    @classmethod
    def from_atoms(cls, n: int, atoms: Iterable[int]) -> "Element":
        mask = 0
        for a in atoms:
            if not 0 <= a < n:
                raise ValueError(f"atom {a} out of range for n={n}")
            mask |= 1 << a
        return cls(n, mask)

    @classmethod
    def bottom(cls, n: int) -> "Element":
        return cls(n, 0)

    @classmethod
    def top(cls, n: int) -> "Element":
        return cls(n, _full_mask(n))

    @property
    def atoms(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.mask >> i & 1)

    @property
    def rank(self) -> int:
        return self.mask.bit_count()


def _same_context(x: Element, y: Element) -> None:
    if x.n != y.n:
        raise ContextMismatchError(f"mixed contexts n={x.n} and n={y.n}")


def complement(x: Element) -> Element:
    """Boolean complement: flip every atom."""
    return Element(x.n, x.mask ^ _full_mask(x.n))


def implies(x: Element, y: Element) -> Element:
    """Residual implication ``x -> y = ~x | y``."""
    _same_context(x, y)
    return Element(x.n, (x.mask ^ _full_mask(x.n)) | y.mask)


def meet(x: Element, y: Element) -> Element:
    _same_context(x, y)
    return Element(x.n, x.mask & y.mask)


def join(x: Element, y: Element) -> Element:
    _same_context(x, y)
    return Element(x.n, x.mask | y.mask)


def _least_atom(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class ImpLattice:
    """Canonical form of an implication sublattice of ``B_n``.

    ``base`` is the minimum element; ``blocks`` partition the atoms outside
    ``base`` and are the atom classes of the subalgebra of ``[base, 1]``.
    Blocks are kept sorted by least atom so equality and hashing are
    representation-independent.  The element set is
    ``{base | union(S) : S subset of blocks}`` and has size ``2**w`` where
    ``w = len(blocks)``.
    """

    n: int
    base: Element
    blocks: tuple[Element, ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted(self.blocks, key=lambda b: _least_atom(b.mask)))
        object.__setattr__(self, "blocks", blocks)
        if self.base.n != self.n:
            raise ContextMismatchError(f"base has n={self.base.n}, lattice has n={self.n}")
        cover = self.base.mask
        for b in blocks:
            if b.n != self.n:
                raise ContextMismatchError(f"block has n={b.n}, lattice has n={self.n}")
            if b.mask == 0:
                raise ValueError("blocks must be nonempty")
            if b.mask & cover:
                raise ValueError("blocks must be disjoint from the base and each other")
            cover |= b.mask
        if cover != _full_mask(self.n):
            raise ValueError("base and blocks must cover every atom")

    @property
    def w(self) -> int:
        """Number of atoms of the sublattice (= number of blocks)."""
        return len(self.blocks)

    @cached_property
    def _element_masks(self) -> tuple[int, ...]:
        masks = [self.base.mask]
        for b in self.blocks:
            masks += [m | b.mask for m in masks]
        return tuple(sorted(masks))

    def sort_key(self) -> tuple:
        return (self.base.mask, tuple(b.atoms for b in self.blocks))


def full_algebra(n: int) -> ImpLattice:
    """The whole algebra ``B_n``: empty base, singleton blocks."""
    return ImpLattice(n, Element.bottom(n), tuple(Element(n, 1 << i) for i in range(n)))


def top_only(n: int) -> ImpLattice:
    """The one-element sublattice ``{1}``."""
    return ImpLattice(n, Element.top(n), ())


def principal_ultrafilter(n: int, atom: int) -> ImpLattice:
    """The filter ``[c, 1]`` for a single atom ``c``."""
    if not 0 <= atom < n:
        raise ValueError(f"atom {atom} out of range for n={n}")
    return ImpLattice(
        n,
        Element(n, 1 << atom),
        tuple(Element(n, 1 << i) for i in range(n) if i != atom),
    )


def elements(A: ImpLattice) -> frozenset[Element]:
    """The element set ``{base | union(S) : S subset of blocks}``."""
    return frozenset(Element(A.n, m) for m in A._element_masks)


def from_elements(S: Iterable[Element], n: int) -> ImpLattice:
    """Canonicalize a family of elements into an ImpLattice.

    Raises EmptyError for an empty family and NotClosedError (with a witness
    pair) when the family is not closed under implication and meet.
    """
    members = sorted({e for e in S}, key=lambda e: e.mask)
    if not members:
        raise EmptyError("an implication sublattice is nonempty (it contains 1)")
    for e in members:
        if e.n != n:
            raise ContextMismatchError(f"element has n={e.n}, expected {n}")
    full = _full_mask(n)
    mask_set = {e.mask for e in members}
    for x in members:
        for y in members:
            imp = (x.mask ^ full) | y.mask
            if imp not in mask_set:
                raise NotClosedError("implies", x, y, Element(n, imp))
            met = x.mask & y.mask
            if met not in mask_set:
                raise NotClosedError("meet", x, y, Element(n, met))
    base = full
    for m in mask_set:
        base &= m
    # the block of atom i is the intersection of all members containing i,
    # minus the base
    block_masks = set()
    for i in range(n):
        if base >> i & 1:
            continue
        cell = full
        for m in mask_set:
            if m >> i & 1:
                cell &= m
        block_masks.add(cell & ~base)
    A = ImpLattice(n, Element(n, base), tuple(Element(n, b) for b in block_masks))
    assert set(A._element_masks) == mask_set
    return A


def is_sub(A1: ImpLattice, A2: ImpLattice) -> bool:
    """Containment of element sets, decided combinatorially.

    ``A1 <= A2`` iff ``base(A1)`` is an element of ``A2`` and every block of
    ``A1`` is a union of blocks of ``A2``.
    """
    if A1.n != A2.n:
        raise ContextMismatchError(f"mixed contexts n={A1.n} and n={A2.n}")
    b1 = A1.base.mask
    b2 = A2.base.mask
    if b2 & ~b1:
        return False
    rem = b1 & ~b2
    for blk in A2.blocks:
        m = blk.mask
        if m & rem and m & ~rem:
            return False
    for blk1 in A1.blocks:
        m1 = blk1.mask
        for blk2 in A2.blocks:
            m2 = blk2.mask
            if m2 & m1 and m2 & ~m1:
                return False
    return True


def _submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, ascending."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def _set_partitions(atoms: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Partitions of an atom tuple into block masks, ordered by least atom."""
    if not atoms:
        yield ()
        return
    first, rest = atoms[0], atoms[1:]
    rest_mask = 0
    for a in rest:
        rest_mask |= 1 << a
    for extra in _submasks(rest_mask):
        block0 = (1 << first) | extra
        remaining = tuple(a for a in rest if not extra >> a & 1)
        for sub in _set_partitions(remaining):
            yield (block0,) + sub


_ENUM_CACHE: dict[int, tuple[ImpLattice, ...]] = {}


def _enumerate_cached(n: int) -> tuple[ImpLattice, ...]:
    if n < 0:
        raise ValueError(f"atom count must be >= 0, got {n}")
    got = _ENUM_CACHE.get(n)
    if got is None:
        out = []
        for base in range(1 << n):
            outside = tuple(i for i in range(n) if not base >> i & 1)
            for part in _set_partitions(outside):
                out.append(
                    ImpLattice(n, Element(n, base), tuple(Element(n, b) for b in part))
                )
        out.sort(key=ImpLattice.sort_key)
        got = _ENUM_CACHE[n] = tuple(out)
    return got


def enumerate_all(n: int) -> list[ImpLattice]:
    """Every implication sublattice of ``B_n``, in canonical order.

    Generated directly over (base, partition of the remaining atoms) pairs,
    so the count is Bell(n+1).
    """
    return list(_enumerate_cached(n))


def complement_closure(A: ImpLattice) -> ImpLattice:
    """Close under complements: adjoin ``{~x : x in A}``.

    In canonical form the old base becomes one more block; fixed points are
    exactly the Boolean subalgebras (base = 0).
    """
    if A.base.mask == 0:
        return A
    return ImpLattice(A.n, Element.bottom(A.n), A.blocks + (A.base,))


def up_closure(A: ImpLattice) -> ImpLattice:
    """Upward closure ``[min A, 1]``: base kept, blocks split to singletons."""
    blocks = tuple(
        Element(A.n, 1 << i) for i in range(A.n) if not A.base.mask >> i & 1
    )
    return ImpLattice(A.n, A.base, blocks)


def is_boolean_subalgebra(A: ImpLattice) -> bool:
    """True iff A is closed under complement, i.e. its base is 0."""
    return A.base.mask == 0


def is_ultrafilter(A: ImpLattice) -> bool:
    """True iff A = [c, 1] for an atom c (the principal ultrafilter at c)."""
    return A.base.rank == 1 and all(b.rank == 1 for b in A.blocks)


def apply_atom_permutation(A: ImpLattice, sigma: Sequence[int]) -> ImpLattice:
    """Relabel atoms by a permutation sigma (an automorphism of ``B_n``)."""
    if sorted(sigma) != list(range(A.n)):
        raise ValueError(f"not a permutation of range({A.n}): {sigma!r}")

    def remap(mask: int) -> int:
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << sigma[low.bit_length() - 1]
            mask ^= low
        return out

    return ImpLattice(
        A.n,
        Element(A.n, remap(A.base.mask)),
        tuple(Element(A.n, remap(b.mask)) for b in A.blocks),
    )


# --- JSON interchange ------------------------------------------------------
#
# {"n": int, "base": [atoms ascending], "blocks": [[atoms ascending], ...]}
# with blocks sorted by least element; round-trips bit-exactly.


def lattice_to_dict(A: ImpLattice) -> dict:
    return {
        "n": A.n,
        "base": list(A.base.atoms),
        "blocks": [list(b.atoms) for b in A.blocks],
    }


def lattice_from_dict(d: Mapping) -> ImpLattice:
    try:
        n = d["n"]
        base = d["base"]
        blocks = d["blocks"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"lattice object needs n/base/blocks: {d!r}") from exc
    if not isinstance(n, int):
        raise ValueError(f"n must be an integer, got {n!r}")
    return ImpLattice(
        n,
        Element.from_atoms(n, base),
        tuple(Element.from_atoms(n, blk) for blk in blocks),
    )


def lattice_to_json(A: ImpLattice) -> str:
    """Canonical compact encoding; the interchange and label format."""
    return json.dumps(lattice_to_dict(A), separators=(",", ":"))


def lattice_from_json(text: str) -> ImpLattice:
    return lattice_from_dict(json.loads(text))


@dataclass(frozen=True)
class Verdict:
    """Outcome of one verification check.

    ``lhs`` and ``rhs`` are the two exact quantities being compared; for a
    sweep over many cases they are (cases checked, cases conforming).  The
    invariant ``passed == (lhs == rhs)`` always holds.
    """

    claim: str
    params: Mapping[str, int]
    lhs: int
    rhs: int
    passed: bool

    def __post_init__(self) -> None:
        if self.passed != (self.lhs == self.rhs):
            raise ValueError("verdict pass flag must equal (lhs == rhs)")


def make_verdict(claim: str, params: Mapping[str, int], lhs: int, rhs: int) -> Verdict:
    return Verdict(claim, dict(params), lhs, rhs, lhs == rhs)


def verdict_to_dict(v: Verdict) -> dict:
    return {
        "claim": v.claim,
        "params": dict(v.params),
        "lhs": str(v.lhs),
        "rhs": str(v.rhs),
        "pass": v.passed,
    }
