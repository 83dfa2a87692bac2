"""Closed-form and recurrence-based exact counting.

MD model (monomers + slanted/horizontal dimers):

* h(n): total tilings, h_n = h_{n-1}+h_{n-2}+h_{n-3}+h_{n-4}, a shifted
  tetranacci number.
* c(n, k): tilings with exactly k dimers, via the four-term triangle
  recurrence c_{n,k} = c_{n-1,k}+c_{n-2,k-1}+c_{n-3,k-1}+c_{n-4,k-2}.
* c_closed(n, k): the binomial double-sum form of the same count.
* h_colored(n) / h_from_c(n): the bivariate polynomial counting tilings
  with a monomer colors and b dimer colors; every term c_{n,k} a^{n-2k} b^k.

MDT model (monomers + slanted dimers + trimers):

* g(n): total tilings, a shifted tribonacci number.
* t/u/v(n, k): tilings with exactly k trimers / dimers / monomers.
* t_conv/u_conv/v_conv: the same counts as (k+1)-fold convolution powers
  of the Fibonacci / Narayana / Padovan sequences.
* g_kl(n, k, l): tilings with exactly k trimers and l dimers, as a
  product of two binomials.

All values are exact Python integers; out-of-support (n, k) arguments
return 0, matching the implicit zero extension used by the recurrences.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable

from hexstrip.sequences import fib, narayana, padovan, tetra, tri


def binom(p: int, q: int) -> int:
    """Binomial coefficient, 0 whenever p < 0, q < 0 or q > p."""
    if p < 0 or q < 0 or q > p:
        return 0
    return comb(p, q)


# ---------------------------------------------------------------------------
# Bivariate polynomials in the color variables a, b


class BivarPoly:
    """Polynomial in a, b with exact integer coefficients.

    Stored as a map from exponent pair (i, j) to the coefficient of
    a^i * b^j; zero coefficients are never kept.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v != 0}

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls()

    @classmethod
    def term(cls, coeff: int, a_exp: int = 0, b_exp: int = 0) -> "BivarPoly":
        return cls({(a_exp, b_exp): coeff})

    @classmethod
    def const(cls, value: int) -> "BivarPoly":
        return cls.term(value)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BivarPoly.const(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self.coeffs)
        for key, val in other.coeffs.items():
            out[key] = out.get(key, 0) + val
        return BivarPoly(out)

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self.coeffs)
        for key, val in other.coeffs.items():
            out[key] = out.get(key, 0) - val
        return BivarPoly(out)

    def __mul__(self, other: "BivarPoly | int") -> "BivarPoly":
        if isinstance(other, int):
            return BivarPoly({k: v * other for k, v in self.coeffs.items()})
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), v1 in self.coeffs.items():
            for (i2, j2), v2 in other.coeffs.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + v1 * v2
        return BivarPoly(out)

    __rmul__ = __mul__

    def evaluate(self, a: int, b: int) -> int:
        return sum(v * a**i * b**j for (i, j), v in self.coeffs.items())

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """(a_exp, b_exp, coeff) triples, descending in the a-exponent."""
        return [
            (i, j, self.coeffs[(i, j)])
            for i, j in sorted(self.coeffs, key=lambda k: (-k[0], k[1]))
        ]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, j, coeff in self.sorted_terms():
            factors = []
            if coeff != 1 or (i == 0 and j == 0):
                factors.append(str(coeff))
            if i:
                factors.append("a" if i == 1 else f"a^{i}")
            if j:
                factors.append("b" if j == 1 else f"b^{j}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"BivarPoly({self})"


_A = BivarPoly.term(1, 1, 0)
_B = BivarPoly.term(1, 0, 1)


# ---------------------------------------------------------------------------
# MD model: tetranacci-counted monomer/dimer tilings


def h(n: int) -> int:
    """Number of MD tilings of a length-n strip; equals tetra(n+3)."""
    if n < 0:
        raise IndexError(f"strip length must be nonnegative, got {n}")
    return tetra(n + 3)


# c-triangle rows, built incrementally; row n has floor(n/2)+1 entries.
_c_rows: list[list[int]] = [[1], [1], [1, 1], [1, 3]]


def _c_row(n: int) -> list[int]:
    while len(_c_rows) <= n:
        m = len(_c_rows)

        def prev(i: int, k: int) -> int:
            row = _c_rows[i]
            return row[k] if 0 <= k < len(row) else 0

        _c_rows.append(
            [
                prev(m - 1, k) + prev(m - 2, k - 1) + prev(m - 3, k - 1) + prev(m - 4, k - 2)
                for k in range(m // 2 + 1)
            ]
        )
    return _c_rows[n]


def c(n: int, k: int) -> int:
    """MD tilings of length n with exactly k dimers (0 outside support)."""
    if n < 0:
        raise IndexError(f"strip length must be nonnegative, got {n}")
    if k < 0 or k > n // 2:
        return 0
    return _c_row(n)[k]


def c_closed(n: int, k: int) -> int:
    """Closed form for c(n, k): sum over m of C(n-k-m, m) * C(n-k-m, n-2k)."""
    if n < 0 or k < 0 or k > n // 2:
        raise ValueError(f"(n, k) = ({n}, {k}) outside 0 <= k <= n//2")
    return sum(binom(n - k - m, m) * binom(n - k - m, n - 2 * k) for m in range(k + 1))


# Colored polynomials h^{a,b}_n, grown on demand from the base values.
_h_polys: list[BivarPoly] = [
    BivarPoly.const(1),                                  # 1
    BivarPoly.term(1, 1, 0),                             # a
    BivarPoly({(2, 0): 1, (0, 1): 1}),                   # a^2 + b
    BivarPoly({(3, 0): 1, (1, 1): 3}),                   # a^3 + 3ab
]


def h_colored(n: int) -> BivarPoly:
    """Tilings with a monomer colors and b dimer colors, as a polynomial.

    Satisfies h_n = a*h_{n-1} + b*h_{n-2} + ab*h_{n-3} + b^2*h_{n-4}.
    """
    if n < 0:
        return BivarPoly.zero()
    while len(_h_polys) <= n:
        h1, h2, h3, h4 = (_h_polys[-i] for i in (1, 2, 3, 4))
        _h_polys.append(_A * h1 + _B * h2 + _A * _B * h3 + _B * _B * h4)
    return _h_polys[n]


def h_from_c(n: int) -> BivarPoly:
    """The same polynomial assembled term by term from the c-triangle."""
    if n < 0:
        return BivarPoly.zero()
    return BivarPoly({(n - 2 * k, k): c(n, k) for k in range(n // 2 + 1)})


# ---------------------------------------------------------------------------
# MDT model: tribonacci-counted monomer/dimer/trimer tilings


def g(n: int) -> int:
    """Number of MDT tilings of a length-n strip; equals tri(n+2)."""
    if n < 0:
        raise IndexError(f"strip length must be nonnegative, got {n}")
    return tri(n + 2)


def _make_triangle(
    shifts: tuple[tuple[int, int], ...], width: Callable[[int], int]
) -> Callable[[int], list[int]]:
    """Row builder for a depth-3 triangle recurrence with base row [[1]].

    `shifts` lists the (n-lag, k-lag) pairs summed by the recurrence;
    `width(n)` is the support length of row n.
    """
    rows: list[list[int]] = [[1]]

    def row(n: int) -> list[int]:
        while len(rows) <= n:
            m = len(rows)

            def prev(i: int, k: int) -> int:
                if i < 0 or k < 0:
                    return 0
                r = rows[i]
                return r[k] if k < len(r) else 0

            rows.append(
                [
                    sum(prev(m - dn, k - dk) for dn, dk in shifts)
                    for k in range(width(m))
                ]
            )
        return rows[n]

    return row


_t_row = _make_triangle(((1, 0), (2, 0), (3, 1)), lambda n: n // 3 + 1)
_u_row = _make_triangle(((1, 0), (2, 1), (3, 0)), lambda n: n // 2 + 1)
_v_row = _make_triangle(((1, 1), (2, 0), (3, 0)), lambda n: n + 1)


def t(n: int, k: int) -> int:
    """MDT tilings of length n with exactly k trimers."""
    if n < 0:
        raise IndexError(f"strip length must be nonnegative, got {n}")
    if k < 0 or k > n // 3:
        return 0
    return _t_row(n)[k]


def u(n: int, k: int) -> int:
    """MDT tilings of length n with exactly k dimers."""
    if n < 0:
        raise IndexError(f"strip length must be nonnegative, got {n}")
    if k < 0 or k > n // 2:
        return 0
    return _u_row(n)[k]


def v(n: int, k: int) -> int:
    """MDT tilings of length n with exactly k monomers."""
    if n < 0:
        raise IndexError(f"strip length must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return _v_row(n)[k]


# Convolution powers of the base sequences, cached incrementally:
# _conv_cache[name][c-1] holds the c-fold convolution power as an array
# indexed by the total sum.  Powers are rebuilt only when a query needs
# a longer array, and extended one convolution at a time otherwise.
_conv_bases: dict[str, Callable[[int], int]] = {
    "fib": fib,
    "narayana": narayana,
    "padovan_positive": lambda i: padovan(i) if i >= 1 else 0,
}
_conv_cache: dict[str, list[list[int]]] = {}


def _conv_value(base_name: str, copies: int, index: int) -> int:
    base_fn = _conv_bases[base_name]
    powers = _conv_cache.setdefault(base_name, [])
    size = index + 1
    if not powers or len(powers[0]) < size:
        grown = max(size, 2 * len(powers[0]) if powers else 0)
        base = [base_fn(i) for i in range(grown)]
        powers[:] = [base]
    base = powers[0]
    while len(powers) < copies:
        prev = powers[-1]
        powers.append(
            [
                sum(base[i] * prev[s - i] for i in range(s + 1) if base[i])
                for s in range(len(base))
            ]
        )
    return powers[copies - 1][index]


def t_conv(n: int, k: int) -> int:
    """Convolution form of t(n, k): sum of F_{i_0}...F_{i_k} over
    nonnegative i_j summing to n - 2k + 1."""
    total = n - 2 * k + 1
    if n < 0 or k < 0 or total < 0:
        return 0
    return _conv_value("fib", k + 1, total)


def u_conv(n: int, k: int) -> int:
    """Convolution form of u(n, k): sum of N_{i_0}...N_{i_k} over
    nonnegative i_j summing to n - 2k."""
    total = n - 2 * k
    if n < 0 or k < 0 or total < 0:
        return 0
    return _conv_value("narayana", k + 1, total)


def v_conv(n: int, k: int) -> int:
    """Convolution form of v(n, k): sum of P_{i_0}...P_{i_k} over
    positive i_j summing to n + 2k + 3."""
    if n < 0 or k < 0:
        return 0
    return _conv_value("padovan_positive", k + 1, n + 2 * k + 3)


def g_kl(n: int, k: int, l: int) -> int:
    """MDT tilings of length n with exactly k trimers, l dimers and
    n - 3k - 2l monomers: C(n-3k-l, l) * C(n-2k-l, k)."""
    if n < 0 or k < 0 or l < 0 or n - 3 * k - 2 * l < 0:
        return 0
    return binom(n - 3 * k - l, l) * binom(n - 2 * k - l, k)


# ---------------------------------------------------------------------------
# Triangle assembly and serialization


@dataclass(frozen=True)
class Triangle:
    name: str
    rows: tuple[tuple[int, ...], ...] = field(default_factory=tuple)

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row) for row in self.rows) + "\n"

    @classmethod
    def from_csv(cls, name: str, text: str) -> "Triangle":
        rows = tuple(
            tuple(int(x) for x in line.split(","))
            for line in text.splitlines()
            if line.strip()
        )
        return cls(name, rows)

    def to_json(self) -> str:
        return json.dumps({"name": self.name, "rows": [list(r) for r in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> "Triangle":
        data = json.loads(text)
        return cls(data["name"], tuple(tuple(r) for r in data["rows"]))


_FAMILIES: dict[str, Callable[[int], list[int]]] = {
    "c": _c_row,
    "t": _t_row,
    "u": _u_row,
    "v": _v_row,
}


def triangle(family: str, rows: int) -> Triangle:
    """Rows 0..rows of the named triangle (one of c, t, u, v)."""
    if family not in _FAMILIES:
        raise ValueError(f"unknown triangle family {family!r}; expected one of c, t, u, v")
    if rows < 0:
        raise ValueError(f"row count must be nonnegative, got {rows}")
    row_fn = _FAMILIES[family]
    return Triangle(family, tuple(tuple(row_fn(n)) for n in range(rows + 1)))


def b_file(values: Iterable[int], offset: int = 0) -> str:
    """OEIS b-file text: one "index value" line per term."""
    return "\n".join(f"{offset + i} {val}" for i, val in enumerate(values)) + "\n"
