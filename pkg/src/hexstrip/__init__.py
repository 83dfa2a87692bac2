"""Exact enumeration and counting of honeycomb-strip tilings.

A honeycomb strip of length n is a double row of n staggered hexagons,
numbered 1..n, where cells i, i+1 and i, i+2 are adjacent.  Two tile
models are supported:

* MD  -- monomers, slanted dimers {i, i+1}, horizontal dimers {i, i+2};
         tiling counts are shifted tetranacci numbers.
* MDT -- monomers, slanted dimers and trimers {i, i+1, i+2};
         tiling counts are shifted tribonacci numbers.

Every closed-form count in :mod:`hexstrip.counting` is backed by the
brute-force enumerator in :mod:`hexstrip.enumerator`, and the identity
catalog in :mod:`hexstrip.identities` machine-checks the relations tying
the counts to Fibonacci, Narayana and Padovan numbers.
"""

from hexstrip.sequences import SequenceKind, seq
from hexstrip.strip_model import (
    BlockWordError,
    PlacedTile,
    TileKind,
    TileModel,
    Tiling,
    ValidationError,
    Violation,
    break_positions,
    covers,
    from_block_word,
    to_block_word,
    validate,
)
from hexstrip.enumerator import (
    CapExceededError,
    count_by_statistics,
    enumerate_tilings,
    weighted_count,
)
from hexstrip.counting import (
    BivarPoly,
    Triangle,
    c,
    c_closed,
    g,
    g_kl,
    h,
    h_colored,
    h_from_c,
    t,
    t_conv,
    triangle,
    u,
    u_conv,
    v,
    v_conv,
)
from hexstrip.identities import IDENTITY_IDS, VerificationReport, verify, verify_all

__version__ = "0.1.0"

__all__ = [
    "SequenceKind",
    "seq",
    "TileKind",
    "TileModel",
    "PlacedTile",
    "Tiling",
    "Violation",
    "ValidationError",
    "BlockWordError",
    "covers",
    "validate",
    "break_positions",
    "to_block_word",
    "from_block_word",
    "CapExceededError",
    "enumerate_tilings",
    "count_by_statistics",
    "weighted_count",
    "BivarPoly",
    "Triangle",
    "h",
    "c",
    "c_closed",
    "h_colored",
    "h_from_c",
    "g",
    "t",
    "u",
    "v",
    "t_conv",
    "u_conv",
    "v_conv",
    "g_kl",
    "triangle",
    "IDENTITY_IDS",
    "VerificationReport",
    "verify",
    "verify_all",
]
