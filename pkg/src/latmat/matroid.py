"""Transversal matroids induced by finite set families.

A family of nonempty blocks over a finite ground set induces a matroid whose
independent sets are the partial transversals of the family: the subsets that
can be matched injectively into blocks containing them.  Rank is therefore a
maximum bipartite matching size, and the closure of a subset collects every
element whose arrival cannot enlarge that matching.

All subset arithmetic runs on bitmask encodings with a stable element-to-bit
numbering, so enumeration order is deterministic for a fixed ground order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator

from .errors import DegenerateMatroidError, UnknownElementError

__all__ = ["GroundSet", "SetFamily", "TransversalMatroid", "iter_bits"]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class GroundSet:
    """Ordered universe of distinct elements with a stable bit numbering."""

    elements: tuple[Hashable, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise ValueError("ground set must not be empty")
        index: dict = {}
        for i, element in enumerate(elements):
            if element in index:
                raise ValueError(f"duplicate element {element!r} in ground set")
            index[element] = i
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, element) -> bool:
        return element in self._index

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def index_of(self, element) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise UnknownElementError(element) from None

    def mask_of(self, subset: Iterable) -> int:
        """Bitmask of a subset given by element identifiers."""
        mask = 0
        for element in subset:
            mask |= 1 << self.index_of(element)
        return mask

    def subset_of(self, mask: int) -> frozenset:
        return frozenset(self.elements[i] for i in iter_bits(mask))

    def sorted_members(self, subset: Iterable) -> tuple:
        """Members of ``subset`` in ground order; validates membership."""
        return tuple(self.elements[i] for i in iter_bits(self.mask_of(subset)))


@dataclass(frozen=True)
class SetFamily:
    """Indexed family of nonempty blocks over a ground set.

    Blocks may overlap, may repeat, and need not cover the ground set; an
    element lying in no block becomes a rank-zero element of the induced
    matroid.
    """

    ground: GroundSet
    blocks: tuple[frozenset, ...]
    block_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        blocks = tuple(frozenset(block) for block in self.blocks)
        if not blocks:
            raise ValueError("family must contain at least one block")
        masks = []
        for k, block in enumerate(blocks):
            if not block:
                raise ValueError(f"block {k} is empty")
            masks.append(self.ground.mask_of(block))
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "block_masks", tuple(masks))

    @property
    def size(self) -> int:
        return len(self.blocks)

    def covers_ground(self) -> bool:
        union = 0
        for mask in self.block_masks:
            union |= mask
        return union == self.ground.full_mask


class TransversalMatroid:
    """Matroid whose independent sets are the partial transversals of a family.

    Rank queries run an augmenting-path maximum matching between elements and
    the blocks containing them; closure queries reuse one maximum matching and
    test, per outside element, whether an augmenting path from it exists.
    Instances are immutable after construction and safe to share between
    threads.  ``memoize=True`` adds per-subset rank/closure caches keyed by
    bitmask, useful when a caller sweeps many overlapping subsets.
    """

    def __init__(self, family: SetFamily, *, memoize: bool = False):
        self.family = family
        self.ground = family.ground
        element_blocks: list[list[int]] = [[] for _ in range(len(self.ground))]
        for b, mask in enumerate(family.block_masks):
            for i in iter_bits(mask):
                element_blocks[i].append(b)
        self._element_blocks = tuple(tuple(bs) for bs in element_blocks)
        self._rank_cache: dict[int, int] | None = {} if memoize else None
        self._closure_cache: dict[int, int] | None = {} if memoize else None
        self._flat_mask_cache: tuple[int, ...] | None = None
        self.ground_rank = self.rank_mask(self.ground.full_mask)

    # mask-level core --------------------------------------------------

    def _augment(self, i: int, owner: list[int], seen: set[int]) -> bool:
        """Try to match element ``i``, displacing owners along alternating paths."""
        for b in self._element_blocks[i]:
            if b in seen:
                continue
            seen.add(b)
            if owner[b] < 0 or self._augment(owner[b], owner, seen):
                owner[b] = i
                return True
        return False

    def _matching(self, mask: int) -> list[int]:
        """Maximum matching of the elements of ``mask`` into blocks.

        Returns ``owner``: per block, the matched element index or -1.
        """
        owner = [-1] * self.family.size
        for i in iter_bits(mask):
            self._augment(i, owner, set())
        return owner

    def rank_mask(self, mask: int) -> int:
        if self._rank_cache is not None and mask in self._rank_cache:
            return self._rank_cache[mask]
        rank = sum(1 for i in self._matching(mask) if i >= 0)
        if self._rank_cache is not None:
            self._rank_cache[mask] = rank
        return rank

    def closure_mask(self, mask: int) -> int:
        if self._closure_cache is not None and mask in self._closure_cache:
            return self._closure_cache[mask]
        owner = self._matching(mask)
        closed = mask
        for i in iter_bits(self.ground.full_mask & ~mask):
            # adding i preserves the rank iff no augmenting path starts at i
            if not self._augment(i, owner.copy(), set()):
                closed |= 1 << i
        if self._closure_cache is not None:
            self._closure_cache[mask] = closed
        return closed

    def flat_masks(self) -> tuple[int, ...]:
        """All closed sets, sorted by (rank, member indices).

        Generated breadth-first from the closure of the empty set: closing
        ``flat + one element`` yields a covering flat, and every flat is
        reachable that way.  This touches each flat once instead of closing
        all 2**n subsets.
        """
        if self._flat_mask_cache is None:
            bottom = self.closure_mask(0)
            seen = {bottom}
            stack = [bottom]
            full = self.ground.full_mask
            while stack:
                flat = stack.pop()
                for i in iter_bits(full & ~flat):
                    bigger = self.closure_mask(flat | (1 << i))
                    if bigger not in seen:
                        seen.add(bigger)
                        stack.append(bigger)
            ordered = sorted(
                seen, key=lambda m: (self.rank_mask(m), tuple(iter_bits(m)))
            )
            self._flat_mask_cache = tuple(ordered)
        return self._flat_mask_cache

    def hyperplane_masks(self) -> tuple[int, ...]:
        if self.ground_rank == 0:
            raise DegenerateMatroidError("a rank-zero matroid has no hyperplanes")
        want = self.ground_rank - 1
        return tuple(m for m in self.flat_masks() if self.rank_mask(m) == want)

    def closure_via_hyperplanes_mask(self, mask: int) -> int:
        if self.rank_mask(mask) == self.ground_rank:
            return self.ground.full_mask
        closed = self.ground.full_mask
        for h in self.hyperplane_masks():
            if mask & ~h == 0:
                closed &= h
        return closed

    # element-level interface -------------------------------------------

    def is_independent(self, subset: Iterable) -> bool:
        """True iff the subset is a partial transversal of the family."""
        mask = self.ground.mask_of(subset)
        return self.rank_mask(mask) == mask.bit_count()

    def rank(self, subset: Iterable) -> int:
        """Size of a largest independent subset, via maximum matching."""
        return self.rank_mask(self.ground.mask_of(subset))

    def closure(self, subset: Iterable) -> frozenset:
        """All elements whose addition leaves the rank unchanged."""
        return self.ground.subset_of(self.closure_mask(self.ground.mask_of(subset)))

    def flats(self) -> tuple[frozenset, ...]:
        """Every closed set, in deterministic (rank, member) order."""
        return tuple(self.ground.subset_of(m) for m in self.flat_masks())

    def hyperplanes(self) -> tuple[frozenset, ...]:
        """Closed sets of rank one below the ground rank."""
        return tuple(self.ground.subset_of(m) for m in self.hyperplane_masks())

    def closure_via_hyperplanes(self, subset: Iterable) -> frozenset:
        """Closure computed as an intersection of enclosing hyperplanes.

        Spanning subsets close to the whole ground set; anything else closes
        to the intersection of every hyperplane containing it.  Must agree
        with :meth:`closure` everywhere.
        """
        mask = self.ground.mask_of(subset)
        return self.ground.subset_of(self.closure_via_hyperplanes_mask(mask))
