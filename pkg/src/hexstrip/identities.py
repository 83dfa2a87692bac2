"""Machine-checked catalog of the tiling-count identities.

Each identity is checked exactly at every parameter point in its range:
scalar identities by big-integer equality, colored identities by
coefficient-wise polynomial equality (never by sampled evaluation).

Catalog:

    TET-ROWSUM    row sums of the c-triangle are shifted tetranacci
    TET-DOUBLE    tetranacci as a double binomial sum
    COL-SPLIT     five-term split of h^{a,b}_{m+n} at position m
    COL-DIMER     colored tilings with at least one dimer
    COL-MONO-EVEN colored even-length tilings with at least one monomer
    COL-MONO-ODD  the odd-length companion (with the corrected index;
                  the misprinted form is callable as COL-MONO-ODD-PRINTED
                  and fails, see `hexstrip.errata`)
    TRI-DOUBLE-F  tribonacci as a double sum of Fibonacci products
    TRI-DOUBLE-B  tribonacci as a double binomial sum
    TRI-2T        T_n + T_{n-4} = 2 T_{n-1}
    TRI-SPLIT     four-term split of T_{m+n}
    TRI-FIB       tribonacci as a Fibonacci-weighted sum (uses T_{-1}=1)
    TRI-NAR       tribonacci as a Narayana-weighted sum
    TRI-PAD       tribonacci as a Padovan-weighted sum
    C-DIAG-FIB    c(2n, n) = F_{n+1}
    C-SUBDIAG     5 c(2n+1, n) = (n+2) F_{n+4} + (n-1) F_{n+2}
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Callable, Optional

from hexstrip import counting
from hexstrip.counting import BivarPoly, binom
from hexstrip.sequences import fib, narayana, padovan, tetra, tri

_A = BivarPoly.term(1, 1, 0)
_B = BivarPoly.term(1, 0, 1)


def _c_row_sum(n: int) -> int:
    # Indirection point: tests corrupt this to exercise failure reporting.
    return sum(counting._c_row(n))


def _hc(n: int) -> BivarPoly:
    return counting.h_colored(n)


# --- checkers: params -> (lhs, rhs) ----------------------------------------


def _tet_rowsum(n: int):
    return _c_row_sum(n), tetra(n + 3)


def _tet_double(n: int):
    rhs = sum(
        binom(n - k - m, m) * binom(n - k - m, n - 2 * k)
        for k in range(n // 2 + 1)
        for m in range(k + 1)
    )
    return tetra(n + 3), rhs


def _col_split(m: int, n: int):
    lhs = _hc(m + n)
    rhs = (
        _hc(m) * _hc(n)
        + _hc(m - 1) * (_B * _hc(n - 1) + _A * _B * _hc(n - 2) + _B * _B * _hc(n - 3))
        + _hc(m - 2) * (_A * _B * _hc(n - 1) + _B * _B * _hc(n - 2))
        + _B * _B * _hc(n - 1) * _hc(m - 3)
    )
    return lhs, rhs


def _col_dimer(n: int):
    lhs = _hc(n) - BivarPoly.term(1, n, 0)
    rhs = _B * _hc(n - 2)
    for k in range(3, n + 1):
        rhs = rhs + 2 * BivarPoly.term(1, k - 2, 1) * _hc(n - k)
        rhs = rhs + BivarPoly.term(1, k - 3, 2) * _hc(n - k - 1)
    return lhs, rhs


def _col_mono_even(n: int):
    lhs = _hc(2 * n) - BivarPoly.term(fib(n + 1), 0, n)
    rhs = BivarPoly.zero()
    for k in range(n + 1):
        rhs = rhs + BivarPoly.term(fib(k + 2), 1, k) * _hc(2 * n - 2 * k - 1)
    return lhs, rhs


def _col_mono_odd(n: int):
    lhs = _hc(2 * n - 1)
    rhs = BivarPoly.zero()
    for k in range(n + 1):
        rhs = rhs + BivarPoly.term(fib(k + 2), 1, k) * _hc(2 * n - 2 * k - 2)
    return lhs, rhs


def _col_mono_odd_printed(n: int):
    # The summand index as printed (n-2k-1 instead of 2n-2k-2); kept
    # callable to document that it fails.
    lhs = _hc(2 * n - 1)
    rhs = BivarPoly.zero()
    for k in range(n + 1):
        rhs = rhs + BivarPoly.term(fib(k + 2), 1, k) * _hc(n - 2 * k - 1)
    return lhs, rhs


def _tri_double_f(n: int):
    return tri(n + 2), sum(counting.t_conv(n, k) for k in range(n // 3 + 1))


def _tri_double_b(n: int):
    rhs = sum(
        binom(n - 3 * k - l, l) * binom(n - 2 * k - l, k)
        for k in range(n // 3 + 1)
        for l in range((n - 3 * k) // 2 + 1)
    )
    return tri(n + 2), rhs


def _tri_2t(n: int):
    return tri(n) + tri(n - 4), 2 * tri(n - 1)


def _tri_split(m: int, n: int):
    rhs = (
        tri(m) * tri(n)
        + tri(m + 1) * tri(n + 1)
        + tri(m - 1) * tri(n)
        + tri(m) * tri(n - 1)
    )
    return tri(m + n), rhs


def _tri_fib(n: int):
    return tri(n + 2), sum(fib(k) * tri(n - k) for k in range(n + 2))


def _tri_nar(n: int):
    return tri(n + 2), sum(narayana(k) * tri(n - k) for k in range(n + 1)) + narayana(n)


def _tri_pad(n: int):
    rhs = sum(padovan(k + 2) * tri(n - k + 2) for k in range(1, n + 1)) + padovan(n + 3)
    return tri(n + 2), rhs


def _c_diag_fib(n: int):
    return counting.c(2 * n, n), fib(n + 1)


def _c_subdiag(n: int):
    return 5 * counting.c(2 * n + 1, n), (n + 2) * fib(n + 4) + (n - 1) * fib(n + 2)


# --- catalog ----------------------------------------------------------------


@dataclass(frozen=True)
class _Identity:
    check: Callable[..., tuple]
    params: tuple[str, ...]
    mins: tuple[int, ...]
    # Polynomial identities over two params get quadratically many
    # checks; none need a reduced range at the default max_n.


_CATALOG: dict[str, _Identity] = {
    "TET-ROWSUM": _Identity(_tet_rowsum, ("n",), (0,)),
    "TET-DOUBLE": _Identity(_tet_double, ("n",), (0,)),
    "COL-SPLIT": _Identity(_col_split, ("m", "n"), (0, 0)),
    "COL-DIMER": _Identity(_col_dimer, ("n",), (1,)),
    "COL-MONO-EVEN": _Identity(_col_mono_even, ("n",), (0,)),
    "COL-MONO-ODD": _Identity(_col_mono_odd, ("n",), (0,)),
    "TRI-DOUBLE-F": _Identity(_tri_double_f, ("n",), (0,)),
    "TRI-DOUBLE-B": _Identity(_tri_double_b, ("n",), (0,)),
    "TRI-2T": _Identity(_tri_2t, ("n",), (4,)),
    "TRI-SPLIT": _Identity(_tri_split, ("m", "n"), (1, 1)),
    "TRI-FIB": _Identity(_tri_fib, ("n",), (0,)),
    "TRI-NAR": _Identity(_tri_nar, ("n",), (0,)),
    "TRI-PAD": _Identity(_tri_pad, ("n",), (0,)),
    "C-DIAG-FIB": _Identity(_c_diag_fib, ("n",), (0,)),
    "C-SUBDIAG": _Identity(_c_subdiag, ("n",), (0,)),
}

IDENTITY_IDS: tuple[str, ...] = tuple(_CATALOG)

# Documented-misprint variant, callable through verify() but not part of
# the catalog that verify_all() runs.
_EXTRA: dict[str, _Identity] = {
    "COL-MONO-ODD-PRINTED": _Identity(_col_mono_odd_printed, ("n",), (0,)),
}


@dataclass(frozen=True)
class VerificationReport:
    id: str
    range: str
    status: str  # "pass" | "fail"
    counterexample: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        out = {"id": self.id, "range": self.range, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def verify(identity_id: str, max_n: int = 40, **fixed: int) -> VerificationReport:
    """Check one identity exactly over its parameter range.

    By default every parameter runs from the identity's hypothesis
    minimum up to `max_n`; keyword arguments pin individual parameters
    to a single value instead (e.g. ``verify("TRI-SPLIT", m=2, n=3)``).
    """
    entry = _CATALOG.get(identity_id) or _EXTRA.get(identity_id)
    if entry is None:
        raise KeyError(f"unknown identity id {identity_id!r}")
    unknown = set(fixed) - set(entry.params)
    if unknown:
        raise ValueError(f"{identity_id} has no parameter(s) {sorted(unknown)}")

    ranges = []
    descs = []
    for name, lo in zip(entry.params, entry.mins):
        if name in fixed:
            value = fixed[name]
            if value < lo:
                raise ValueError(f"{identity_id} requires {name} >= {lo}, got {value}")
            ranges.append(range(value, value + 1))
            descs.append(f"{name}={value}")
        else:
            if max_n < lo:
                raise ValueError(f"{identity_id} requires {name} >= {lo}, got max {max_n}")
            ranges.append(range(lo, max_n + 1))
            descs.append(f"{name} in [{lo}, {max_n}]")
    range_desc = ", ".join(descs)

    for point in itertools.product(*ranges):
        lhs, rhs = entry.check(*point)
        if lhs != rhs:
            return VerificationReport(
                identity_id,
                range_desc,
                "fail",
                {
                    "params": dict(zip(entry.params, point)),
                    "lhs": str(lhs),
                    "rhs": str(rhs),
                },
            )
    return VerificationReport(identity_id, range_desc, "pass")


def verify_all(max_n: int) -> list[VerificationReport]:
    """Run the full catalog; reports come back in catalog order."""
    if max_n < 8:
        raise ValueError(f"max_n must be at least 8, got {max_n}")
    return [verify(identity_id, max_n) for identity_id in IDENTITY_IDS]
