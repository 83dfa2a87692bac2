"""The five base integer sequences, with the offsets used throughout.

Conventions (all exact, arbitrary precision):

* Fibonacci   F_0=0, F_1=1,        F_n = F_{n-1} + F_{n-2}
* Tribonacci  T_0=T_1=0, T_2=1,    T_n = T_{n-1} + T_{n-2} + T_{n-3};
              additionally T_{-1}=1 via the backward recurrence
* Tetranacci  Q_0=Q_1=Q_2=0, Q_3=1 (A000078)
* Narayana    N_0=N_1=N_2=1,       N_n = N_{n-1} + N_{n-3}  (A000930)
* Padovan     P_0=1, P_1=P_2=0,    P_n = P_{n-2} + P_{n-3}  (A000931,
              shifted so that trimer-dimer tiling counts are P_{n+3})

Note that with this Padovan offset the sequence dips once after the
start (P_3=1, P_4=0); it is nondecreasing from n=4 on.
"""

from __future__ import annotations

import enum


class SequenceKind(enum.Enum):
    FIBONACCI = "fibonacci"
    TRIBONACCI = "tribonacci"
    TETRANACCI = "tetranacci"
    NARAYANA = "narayana"
    PADOVAN = "padovan"


# (initial terms, lag offsets summed by the recurrence)
_DEFS: dict[SequenceKind, tuple[tuple[int, ...], tuple[int, ...]]] = {
    SequenceKind.FIBONACCI: ((0, 1), (1, 2)),
    SequenceKind.TRIBONACCI: ((0, 0, 1), (1, 2, 3)),
    SequenceKind.TETRANACCI: ((0, 0, 0, 1), (1, 2, 3, 4)),
    SequenceKind.NARAYANA: ((1, 1, 1), (1, 3)),
    SequenceKind.PADOVAN: ((1, 0, 0), (2, 3)),
}

# Memo of computed terms, one growing list per kind (index 0 = term 0).
_terms: dict[SequenceKind, list[int]] = {k: list(v[0]) for k, v in _DEFS.items()}


def seq(kind: SequenceKind, n: int) -> int:
    """Return the n-th term of the given sequence.

    n must be >= 0, except Tribonacci where n = -1 is also allowed
    (T_{-1} = 1, obtained by running the recurrence backwards).
    """
    if kind is SequenceKind.TRIBONACCI and n == -1:
        return 1
    if n < 0:
        raise IndexError(f"{kind.value} is not defined at index {n}")
    terms = _terms[kind]
    if n < len(terms):
        return terms[n]
    _, lags = _DEFS[kind]
    for i in range(len(terms), n + 1):
        terms.append(sum(terms[i - lag] for lag in lags))
    return terms[n]


def fib(n: int) -> int:
    return seq(SequenceKind.FIBONACCI, n)


def tri(n: int) -> int:
    return seq(SequenceKind.TRIBONACCI, n)


def tetra(n: int) -> int:
    return seq(SequenceKind.TETRANACCI, n)


def narayana(n: int) -> int:
    return seq(SequenceKind.NARAYANA, n)


def padovan(n: int) -> int:
    return seq(SequenceKind.PADOVAN, n)
