"""Cell-set model of honeycomb-strip tilings.

Cells are numbered 1..n.  A tile is identified by its kind and its
anchor (the smallest cell it covers); the geometric orientation of a
slanted dimer or the flip of a three-cell block is a function of anchor
parity and is deliberately not part of tile identity.

Covered cells per kind, with anchor i:

    monomer           {i}
    slanted dimer     {i, i+1}
    horizontal dimer  {i, i+2}
    trimer            {i, i+1, i+2}

A tiling is *breakable* at position k when no tile covers cells on both
sides of the k|k+1 boundary.  Splitting at every break position yields
maximal unbreakable blocks; in the MD model these are the four shapes
m/d/t/v (lengths 1/2/3/4), in the MDT model m/d/t (lengths 1/2/3).  The
resulting block word is a bijective encoding of the tiling.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional


class TileKind(enum.Enum):
    MONOMER = "monomer"
    SLANTED_DIMER = "slanted_dimer"
    HORIZONTAL_DIMER = "horizontal_dimer"
    TRIMER = "trimer"


# Cell offsets from the anchor.
_OFFSETS: dict[TileKind, tuple[int, ...]] = {
    TileKind.MONOMER: (0,),
    TileKind.SLANTED_DIMER: (0, 1),
    TileKind.HORIZONTAL_DIMER: (0, 2),
    TileKind.TRIMER: (0, 1, 2),
}

_DIMER_KINDS = frozenset({TileKind.SLANTED_DIMER, TileKind.HORIZONTAL_DIMER})


class TileModel(enum.Enum):
    MD = "md"
    MDT = "mdt"

    @property
    def kinds(self) -> tuple[TileKind, ...]:
        """Allowed kinds, in canonical branching order."""
        if self is TileModel.MD:
            return (TileKind.MONOMER, TileKind.SLANTED_DIMER, TileKind.HORIZONTAL_DIMER)
        return (TileKind.MONOMER, TileKind.SLANTED_DIMER, TileKind.TRIMER)


def covers(kind: TileKind, anchor: int) -> frozenset[int]:
    """Cell set covered by a tile of `kind` anchored at `anchor` (>= 1)."""
    return frozenset(anchor + off for off in _OFFSETS[kind])


@dataclass(frozen=True)
class PlacedTile:
    kind: TileKind
    anchor: int

    @property
    def cells(self) -> frozenset[int]:
        return covers(self.kind, self.anchor)

    @property
    def span(self) -> int:
        """Largest cell covered minus anchor, plus one."""
        return _OFFSETS[self.kind][-1] + 1


@dataclass(frozen=True)
class Tiling:
    """An exact cover of cells 1..n by placed tiles, in anchor order."""

    n: int
    tiles: tuple[PlacedTile, ...]

    def __init__(self, n: int, tiles: Iterable[PlacedTile]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "tiles", tuple(sorted(tiles, key=lambda t: t.anchor)))

    def kind_counts(self) -> dict[TileKind, int]:
        counts = {kind: 0 for kind in TileKind}
        for tile in self.tiles:
            counts[tile.kind] += 1
        return counts

    def monomer_count(self) -> int:
        return self.kind_counts()[TileKind.MONOMER]

    def dimer_count(self) -> int:
        """Slanted and horizontal dimers counted together."""
        return sum(1 for tile in self.tiles if tile.kind in _DIMER_KINDS)

    def trimer_count(self) -> int:
        return self.kind_counts()[TileKind.TRIMER]

    def to_json_dict(self, model: TileModel) -> dict:
        return {
            "n": self.n,
            "model": model.value,
            "tiles": [{"kind": t.kind.value, "anchor": t.anchor} for t in self.tiles],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Tiling":
        tiles = [PlacedTile(TileKind(t["kind"]), t["anchor"]) for t in data["tiles"]]
        return cls(data["n"], tiles)


@dataclass(frozen=True)
class Violation:
    """First reason a tiling is invalid: overlap, gap, out-of-range or
    kind-not-in-model, with the offending cell or tile."""

    reason: str
    cell: Optional[int] = None
    tile: Optional[PlacedTile] = None

    def __str__(self) -> str:
        parts = [self.reason]
        if self.cell is not None:
            parts.append(f"cell {self.cell}")
        if self.tile is not None:
            parts.append(f"tile {self.tile.kind.value}@{self.tile.anchor}")
        return ": ".join(parts)


class ValidationError(ValueError):
    """Raised by operations that require a valid tiling."""


class BlockWordError(ValueError):
    """Malformed block word or unbreakable segment outside the catalog."""


def validate(tiling: Tiling, model: TileModel) -> Optional[Violation]:
    """Return None when `tiling` is a valid exact cover under `model`,
    otherwise the first violation in cell order."""
    if tiling.n < 0:
        return Violation("negative length")
    allowed = set(model.kinds)
    seen: dict[int, PlacedTile] = {}
    for tile in tiling.tiles:
        if tile.kind not in allowed:
            return Violation("kind-not-in-model", tile=tile)
        for cell in sorted(tile.cells):
            if cell < 1 or cell > tiling.n:
                return Violation("out-of-range", cell=cell, tile=tile)
            if cell in seen:
                return Violation("overlap", cell=cell, tile=tile)
            seen[cell] = tile
    for cell in range(1, tiling.n + 1):
        if cell not in seen:
            return Violation("gap", cell=cell)
    return None


def _require_valid(tiling: Tiling, model: Optional[TileModel] = None) -> None:
    # Without a stated model, accept any tiling valid in either model.
    if model is not None:
        violation = validate(tiling, model)
    else:
        violation = validate(tiling, TileModel.MD)
        if violation is not None and validate(tiling, TileModel.MDT) is None:
            violation = None
    if violation is not None:
        raise ValidationError(str(violation))


def break_positions(tiling: Tiling) -> set[int]:
    """Positions k in 1..n-1 where no tile spans the k|k+1 boundary."""
    _require_valid(tiling)
    spanned: set[int] = set()
    for tile in tiling.tiles:
        lo = tile.anchor
        hi = tile.anchor + tile.span - 1
        spanned.update(range(lo, hi))
    return set(range(1, tiling.n)) - spanned


def _blocks(tiling: Tiling) -> list[list[PlacedTile]]:
    """Maximal unbreakable blocks, in cell order."""
    if tiling.n == 0:
        return []
    breaks = sorted(break_positions(tiling))
    bounds = [0] + breaks + [tiling.n]
    blocks: list[list[PlacedTile]] = []
    for lo, hi in zip(bounds, bounds[1:]):
        blocks.append([t for t in tiling.tiles if lo < t.anchor <= hi])
    return blocks


def to_block_word(tiling: Tiling) -> str:
    """Encode a valid tiling as its block word.

    Letters: m (monomer), d (slanted dimer), t (horizontal dimer plus
    middle monomer, or a trimer), v (two interlocked horizontal dimers).
    """
    letters = []
    for block in _blocks(tiling):
        kinds = tuple(t.kind for t in block)
        if kinds == (TileKind.MONOMER,):
            letters.append("m")
        elif kinds == (TileKind.SLANTED_DIMER,):
            letters.append("d")
        elif kinds in ((TileKind.HORIZONTAL_DIMER, TileKind.MONOMER), (TileKind.TRIMER,)):
            letters.append("t")
        elif kinds == (TileKind.HORIZONTAL_DIMER, TileKind.HORIZONTAL_DIMER):
            letters.append("v")
        else:
            raise BlockWordError(
                "unbreakable segment matches no block: "
                + ", ".join(f"{t.kind.value}@{t.anchor}" for t in block)
            )
    return "".join(letters)


_LETTER_LENGTH = {"m": 1, "d": 2, "t": 3, "v": 4}
_MD_ALPHABET = "mdtv"
_MDT_ALPHABET = "mdt"


def word_length(word: str) -> int:
    """Strip length encoded by a block word."""
    try:
        return sum(_LETTER_LENGTH[ch] for ch in word)
    except KeyError as exc:
        raise BlockWordError(f"unknown letter {exc.args[0]!r}") from None


def from_block_word(word: str, model: TileModel) -> Tiling:
    """Decode a block word into the unique tiling it encodes."""
    alphabet = _MD_ALPHABET if model is TileModel.MD else _MDT_ALPHABET
    bad = set(word) - set(alphabet)
    if bad:
        raise BlockWordError(
            f"letters {sorted(bad)} not in the {model.value} alphabet {alphabet!r}"
        )
    tiles: list[PlacedTile] = []
    pos = 1
    for ch in word:
        if ch == "m":
            tiles.append(PlacedTile(TileKind.MONOMER, pos))
        elif ch == "d":
            tiles.append(PlacedTile(TileKind.SLANTED_DIMER, pos))
        elif ch == "t" and model is TileModel.MD:
            tiles.append(PlacedTile(TileKind.HORIZONTAL_DIMER, pos))
            tiles.append(PlacedTile(TileKind.MONOMER, pos + 1))
        elif ch == "t":
            tiles.append(PlacedTile(TileKind.TRIMER, pos))
        else:  # "v", MD only
            tiles.append(PlacedTile(TileKind.HORIZONTAL_DIMER, pos))
            tiles.append(PlacedTile(TileKind.HORIZONTAL_DIMER, pos + 1))
        pos += _LETTER_LENGTH[ch]
    return Tiling(pos - 1, tiles)
