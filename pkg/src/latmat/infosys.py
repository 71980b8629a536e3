"""Complete information tables and attribute reduction over them.

Objects are partitioned by agreement on attribute subsets; a reduct is a
minimal subset inducing the same partition as the full attribute set.  When
attribute subsets with equal partitions always saturate to the same blocks
of the attribute quotient (attributes grouped by equal single-attribute
partitions), the reducts are exactly the one-element-per-block selections.
A guarded power-set scan serves as the general fallback and as the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .errors import (
    CapacityError,
    ConditionNotSatisfiedError,
    UnknownAttributeError,
)
from .matroid import iter_bits

__all__ = ["InformationSystem"]


@dataclass(frozen=True)
class InformationSystem:
    """Finite object/attribute table with a total value assignment.

    ``rows[i][j]`` is the value of ``attributes[j]`` on ``objects[i]``.
    Values are compared as opaque tokens; no coercion is attempted, so
    "1" and 1 are different values.  Missing cells are rejected.
    """

    objects: tuple
    attributes: tuple
    rows: tuple[tuple, ...]
    _columns: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _attr_index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        objects = tuple(self.objects)
        attributes = tuple(self.attributes)
        rows = tuple(tuple(row) for row in self.rows)
        if not objects:
            raise ValueError("at least one object is required")
        if not attributes:
            raise ValueError("at least one attribute is required")
        if len(set(objects)) != len(objects):
            raise ValueError("duplicate object identifiers")
        if len(set(attributes)) != len(attributes):
            raise ValueError("duplicate attribute identifiers")
        if len(rows) != len(objects):
            raise ValueError(f"expected {len(objects)} rows, got {len(rows)}")
        for i, row in enumerate(rows):
            if len(row) != len(attributes):
                raise ValueError(
                    f"row {i} has {len(row)} cells, expected {len(attributes)}"
                )
            for value in row:
                if value is None or value == "":
                    raise ValueError(f"missing value in row {i}")
        # canonical per-attribute columns: value tokens replaced by class ids
        # in first-occurrence order, so equal partitions give equal columns
        columns = []
        for j in range(len(attributes)):
            ids: dict = {}
            columns.append(
                tuple(ids.setdefault(rows[i][j], len(ids)) for i in range(len(objects)))
            )
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "attributes", attributes)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_columns", tuple(columns))
        object.__setattr__(self, "_attr_index", {a: j for j, a in enumerate(attributes)})

    # indiscernibility ----------------------------------------------------

    def attribute_index(self, attribute) -> int:
        try:
            return self._attr_index[attribute]
        except KeyError:
            raise UnknownAttributeError(attribute) from None

    def _indices_of(self, attrs: Iterable) -> tuple[int, ...]:
        return tuple(sorted({self.attribute_index(a) for a in attrs}))

    def _partition_key_of_mask(self, mask: int) -> tuple[int, ...]:
        js = tuple(iter_bits(mask))
        ids: dict = {}
        return tuple(
            ids.setdefault(tuple(self._columns[j][i] for j in js), len(ids))
            for i in range(len(self.objects))
        )

    def partition_key(self, attrs: Iterable) -> tuple[int, ...]:
        """Canonical signature of the partition induced by ``attrs``.

        One class id per object, assigned in first-occurrence order; two
        attribute subsets induce the same partition iff their keys are equal.
        """
        mask = 0
        for j in self._indices_of(attrs):
            mask |= 1 << j
        return self._partition_key_of_mask(mask)

    def indiscernibility(self, attrs: Iterable) -> tuple[frozenset, ...]:
        """Partition of the objects by joint agreement on ``attrs``.

        The empty attribute set gives the single-block partition.  Blocks are
        ordered by their first object.
        """
        key = self.partition_key(attrs)
        blocks: dict[int, list] = {}
        for i, cid in enumerate(key):
            blocks.setdefault(cid, []).append(self.objects[i])
        return tuple(frozenset(blocks[cid]) for cid in sorted(blocks))

    # attribute quotient ---------------------------------------------------

    def attribute_quotient(self) -> tuple[frozenset, ...]:
        """Attributes grouped by equality of their single-attribute partitions."""
        groups: dict[tuple[int, ...], list] = {}
        for j, attribute in enumerate(self.attributes):
            groups.setdefault(self._columns[j], []).append(attribute)
        ordered = sorted(groups.values(), key=lambda g: self._attr_index[g[0]])
        return tuple(frozenset(g) for g in ordered)

    def quotient_saturation(self, attrs: Iterable) -> frozenset:
        """Union of the quotient blocks meeting ``attrs``."""
        wanted = set(self._indices_of(attrs))
        out: set = set()
        for block in self.attribute_quotient():
            if any(self._attr_index[a] in wanted for a in block):
                out |= block
        return frozenset(out)

    def _saturation_mask(self, mask: int, block_masks: tuple[int, ...]) -> int:
        out = 0
        for bm in block_masks:
            if bm & mask:
                out |= bm
        return out

    # the quotient-rule precondition ---------------------------------------

    def check_saturation_condition(self, *, max_attributes: int = 15) -> bool:
        """True when equal partitions always force equal saturations.

        Groups the attribute power set by partition signature and verifies
        every group shares one saturation; a single 2**m pass instead of the
        quadratic pairwise test.  Guarded by ``max_attributes``.
        """
        m = len(self.attributes)
        if m > max_attributes:
            raise CapacityError(
                f"condition check capped at {max_attributes} attributes, got {m}"
            )
        block_masks = tuple(
            sum(1 << self._attr_index[a] for a in block)
            for block in self.attribute_quotient()
        )
        seen: dict[tuple[int, ...], int] = {}
        for mask in range(1 << m):
            saturation = self._saturation_mask(mask, block_masks)
            previous = seen.setdefault(self._partition_key_of_mask(mask), saturation)
            if previous != saturation:
                return False
        return True

    # reducts ----------------------------------------------------------------

    def reducts_via_quotient(self, *, max_attributes: int = 15) -> tuple[frozenset, ...]:
        """One attribute from each quotient block; every selection is a reduct.

        Valid only when :meth:`check_saturation_condition` holds, which is
        verified first; the number of reducts is the product of the block
        sizes.  Output sorted by (size, attribute indices).
        """
        if not self.check_saturation_condition(max_attributes=max_attributes):
            raise ConditionNotSatisfiedError(
                "equal partitions do not force equal saturations; "
                "use brute_force_reducts instead"
            )
        blocks = [
            sorted(block, key=self._attr_index.__getitem__)
            for block in self.attribute_quotient()
        ]
        picks = [frozenset(combo) for combo in product(*blocks)]
        picks.sort(key=lambda s: (len(s), tuple(sorted(map(self._attr_index.__getitem__, s)))))
        return tuple(picks)

    def brute_force_reducts(self, *, max_attributes: int = 20) -> tuple[frozenset, ...]:
        """Inclusion-minimal attribute subsets preserving the full partition.

        Exhaustive 2**m scan in ascending subset size; supersets of an already
        kept reduct are skipped.  The general-purpose oracle for the quotient
        rule, guarded by ``max_attributes``.
        """
        m = len(self.attributes)
        if m > max_attributes:
            raise CapacityError(
                f"brute-force reduct scan capped at {max_attributes} attributes, got {m}"
            )
        full_key = self._partition_key_of_mask((1 << m) - 1)
        kept: list[int] = []
        order = sorted(range(1 << m), key=lambda x: (x.bit_count(), tuple(iter_bits(x))))
        for mask in order:
            if any(k & ~mask == 0 for k in kept):
                continue
            if self._partition_key_of_mask(mask) == full_key:
                kept.append(mask)
        return tuple(
            frozenset(self.attributes[j] for j in iter_bits(mask)) for mask in kept
        )
