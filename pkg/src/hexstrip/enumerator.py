"""Brute-force enumeration of strip tilings.

This is the independent oracle: every closed-form count in
:mod:`hexstrip.counting` is tested against the histograms produced here.

Enumeration always covers the smallest uncovered cell next, branching
over the model's allowed tile kinds in canonical order (monomer <
slanted dimer < horizontal dimer < trimer).  Since each kind's anchor is
the smallest cell it covers, this produces every valid tiling exactly
once, in a deterministic order, with no deduplication needed.

The number of tilings grows like 1.93^n (MD) / 1.84^n (MDT), so calls
are guarded by a hard cap on n (default 22, overridable per call or via
the HEXSTRIP_CAP environment variable).
"""

from __future__ import annotations

import os
from collections import Counter
from typing import Iterator, Optional

from hexstrip.strip_model import PlacedTile, TileKind, TileModel, Tiling

DEFAULT_CAP = 22


class CapExceededError(ValueError):
    """Requested strip length exceeds the enumeration cap."""


def _resolve_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("HEXSTRIP_CAP")
    return int(env) if env else DEFAULT_CAP


def _check(n: int, cap: Optional[int]) -> None:
    if n < 0:
        raise ValueError(f"strip length must be nonnegative, got {n}")
    limit = _resolve_cap(cap)
    if n > limit:
        raise CapExceededError(f"n={n} exceeds enumeration cap {limit}")


def enumerate_tilings(
    n: int, model: TileModel, cap: Optional[int] = None
) -> Iterator[Tiling]:
    """Yield every valid tiling of a length-n strip under `model`.

    n=0 yields exactly the empty tiling.
    """
    _check(n, cap)
    kinds = model.kinds
    stack: list[PlacedTile] = []

    def extend(first_uncovered: int, covered: frozenset[int]) -> Iterator[Tiling]:
        if first_uncovered > n:
            yield Tiling(n, stack)
            return
        for kind in kinds:
            tile = PlacedTile(kind, first_uncovered)
            cells = tile.cells
            if max(cells) > n or cells & covered:
                continue
            stack.append(tile)
            new_covered = covered | cells
            nxt = first_uncovered + 1
            while nxt in new_covered:
                nxt += 1
            yield from extend(nxt, new_covered)
            stack.pop()

    yield from extend(1, frozenset())


def count_by_statistics(
    n: int, model: TileModel, cap: Optional[int] = None
) -> dict[tuple[int, ...], int]:
    """Histogram of tilings keyed by per-kind tile counts.

    MD keys are (monomers, dimers) with slanted and horizontal dimers
    merged; MDT keys are (monomers, dimers, trimers).
    """
    hist: Counter[tuple[int, ...]] = Counter()
    for tiling in enumerate_tilings(n, model, cap):
        if model is TileModel.MD:
            key: tuple[int, ...] = (tiling.monomer_count(), tiling.dimer_count())
        else:
            key = (tiling.monomer_count(), tiling.dimer_count(), tiling.trimer_count())
        hist[key] += 1
    return dict(hist)


def weighted_count(n: int, a: int, b: int, cap: Optional[int] = None) -> int:
    """Sum of a^monomers * b^dimers over all MD tilings of length n.

    Oracle for the colored tiling polynomial evaluated at (a, b).
    """
    total = 0
    for tiling in enumerate_tilings(n, TileModel.MD, cap):
        total += a ** tiling.monomer_count() * b ** tiling.dimer_count()
    return total
