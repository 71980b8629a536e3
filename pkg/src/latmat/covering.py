"""Covering-specific structure of the induced matroid.

When the blocks of a family jointly cover the ground set, the height-one
flats can be read directly off the blocks: each block's residue (the part of
it shared with no other block) is an atom, and every element covered by two
or more blocks forms a singleton atom.  The closures of single elements then
partition the ground set, which yields rough-set style lower and upper
approximation operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import NotACoveringError, NotAFlatError
from .matroid import SetFamily, TransversalMatroid, iter_bits

__all__ = [
    "Covering",
    "CoveringEquivalenceReport",
    "ResidueSplit",
    "check_covering_equivalences",
    "is_covering",
]


def is_covering(family: SetFamily) -> bool:
    """True when the nonempty blocks jointly cover the ground set."""
    return family.covers_ground()


@dataclass(frozen=True)
class ResidueSplit:
    """Split of a covering into block residues and the multiply covered rest.

    ``residues`` holds, once each, every nonempty set of elements private to a
    single block; ``shared`` collects the elements lying in two or more blocks.
    Together they partition the ground set.
    """

    residues: tuple[frozenset, ...]
    shared: frozenset


class Covering:
    """A set family whose blocks cover the ground set.

    Wraps the induced transversal matroid with covering-only operations; the
    matroid and the single-element closures are computed once and cached.
    """

    def __init__(self, family: SetFamily):
        if not is_covering(family):
            raise NotACoveringError("blocks do not cover the ground set")
        self.family = family
        self.ground = family.ground

    @cached_property
    def matroid(self) -> TransversalMatroid:
        return TransversalMatroid(self.family, memoize=True)

    @cached_property
    def _singleton_closure_masks(self) -> tuple[int, ...]:
        return tuple(
            self.matroid.closure_mask(1 << i) for i in range(len(self.ground))
        )

    @cached_property
    def singleton_closures(self) -> dict:
        """Closure of each one-element set; the class of that element.

        For a covering the image of this map partitions the ground set.
        """
        return {
            element: self.ground.subset_of(mask)
            for element, mask in zip(self.ground.elements, self._singleton_closure_masks)
        }

    def residue_split(self) -> ResidueSplit:
        """Residue of each block (the block minus all others) plus the rest."""
        masks = self.family.block_masks
        residues: list[int] = []
        seen: set[int] = set()
        for k, mask in enumerate(masks):
            others = 0
            for j, other in enumerate(masks):
                if j != k:
                    others |= other
            residue = mask & ~others
            if residue and residue not in seen:
                seen.add(residue)
                residues.append(residue)
        union = 0
        for residue in residues:
            union |= residue
        return ResidueSplit(
            residues=tuple(self.ground.subset_of(r) for r in residues),
            shared=self.ground.subset_of(self.ground.full_mask & ~union),
        )

    def atoms(self) -> tuple[frozenset, ...]:
        """Height-one flats, read directly off the block structure.

        The residues are atoms, and each shared element is a singleton atom;
        no matroid computation is involved.  Agrees with the lattice atoms
        and with the image of :attr:`singleton_closures`.
        """
        split = self.residue_split()
        masks = [self.ground.mask_of(a) for a in split.residues]
        masks.extend(1 << i for i in iter_bits(self.ground.mask_of(split.shared)))
        masks.sort(key=lambda m: tuple(iter_bits(m)))
        return tuple(self.ground.subset_of(m) for m in masks)

    def lower_approx(self, subset: Iterable) -> frozenset:
        """Elements whose whole class fits inside ``subset``."""
        mask = self.ground.mask_of(subset)
        out = 0
        for i, cls in enumerate(self._singleton_closure_masks):
            if cls & ~mask == 0:
                out |= 1 << i
        return self.ground.subset_of(out)

    def upper_approx(self, subset: Iterable) -> frozenset:
        """Elements whose class meets ``subset``."""
        mask = self.ground.mask_of(subset)
        out = 0
        for i, cls in enumerate(self._singleton_closure_masks):
            if cls & mask:
                out |= 1 << i
        return self.ground.subset_of(out)

    def flat_is_union_of_closures(self, flat: Iterable) -> bool:
        """Check that a flat is the union of the classes of its elements."""
        mask = self.ground.mask_of(flat)
        if self.matroid.closure_mask(mask) != mask:
            raise NotAFlatError("argument is not a flat of the induced matroid")
        union = 0
        for i in iter_bits(mask):
            union |= self._singleton_closure_masks[i]
        return union == mask


@dataclass(frozen=True)
class CoveringEquivalenceReport:
    """Truth values of the four equivalent covering characterizations.

    For any family of nonempty blocks the four statements agree: the blocks
    cover the ground set iff the empty set is closed iff the single-element
    closures partition the ground set iff those closures are exactly the
    atoms of the flat lattice.
    """

    covering: bool
    empty_set_closed: bool
    closures_partition: bool
    closures_are_atoms: bool

    @property
    def statements(self) -> tuple[bool, bool, bool, bool]:
        return (
            self.covering,
            self.empty_set_closed,
            self.closures_partition,
            self.closures_are_atoms,
        )

    @property
    def consistent(self) -> bool:
        return len(set(self.statements)) == 1


def check_covering_equivalences(family: SetFamily) -> CoveringEquivalenceReport:
    """Evaluate all four covering characterizations on any nonempty-block family."""
    matroid = TransversalMatroid(family, memoize=True)
    ground = family.ground
    closure_masks = [matroid.closure_mask(1 << i) for i in range(len(ground))]
    image = sorted(set(closure_masks))

    partition = True
    union = 0
    for k, cls in enumerate(image):
        if cls == 0:
            partition = False
            break
        union |= cls
        if any(cls & other for other in image[:k]):
            partition = False
            break
    partition = partition and union == ground.full_mask

    atom_masks = {
        m for m in matroid.flat_masks() if matroid.rank_mask(m) == 1
    }

    return CoveringEquivalenceReport(
        covering=is_covering(family),
        empty_set_closed=matroid.closure_mask(0) == 0,
        closures_partition=partition,
        closures_are_atoms=set(image) == atom_masks,
    )
